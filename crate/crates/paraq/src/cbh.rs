//! Campbell-Baker-Hausdorff composition of the two nilpotent exponentials.
//!
//! For A = δ1θ1 and B = δ2θ2 the adjoint chains close in a few steps:
//! `(ad A)^m(B) = 2^m δ1^m δ2 θ1^m θ2`. The composed element keeps the two
//! pure chains of the CBH series,
//! `θ = A + B + ½ Σ (ad A)^m(B)/(m+1)! + ½ Σ (-1)^m (ad B)^m(A)/(m+1)!`,
//! with no mixed nested brackets. [`check_exp_identity`] measures, rather
//! than assumes, how far that truncated form satisfies
//! `exp(A)·exp(B) = exp(θ)` at each pair of orders.

use serde_json::json;

use crate::bitheta::BiTheta;
use crate::rational::Rational;
use crate::report::{Check, VerificationReport};
use crate::ring::{commutator, Ring};

/// `(ad A)^m (B)`: the m-fold nested commutator `[A, [A, …, [A, B]…]]`.
pub fn adjoint_power(a: &BiTheta<Rational>, b: &BiTheta<Rational>, m: usize) -> BiTheta<Rational> {
    assert!(m >= 1, "adjoint power needs m >= 1");
    let mut acc = commutator(a, b);
    for _ in 1..m {
        acc = commutator(a, &acc);
    }
    acc
}

/// The composed nilpotent element θ with `exp(δ1θ1)·exp(δ2θ2) = exp(θ)`
/// claimed through the two adjoint chains:
/// `θ1δ1 + θ2δ2 + ½ Σ_{m=1}^{r1} [2^m δ2 δ1^m/(m+1)!] θ1^m θ2
///             + ½ Σ_{m=1}^{r2} [2^m δ1 δ2^m/(m+1)!] θ1 θ2^m`.
pub fn compose_theta(
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> BiTheta<Rational> {
    let mut theta = BiTheta::monomial(delta1.clone(), 1, 0, r1, r2)
        + BiTheta::monomial(delta2.clone(), 0, 1, r1, r2);
    let half = Rational::new(1, 2);
    for m in 1..=r1 {
        let c = &(&Rational::from_int(2).pow(m as i64) * &Rational::inv_factorial(m + 1))
            * &(delta2 * &delta1.pow(m as i64));
        theta = theta + BiTheta::monomial(&c * &half, m, 1, r1, r2);
    }
    for m in 1..=r2 {
        let c = &(&Rational::from_int(2).pow(m as i64) * &Rational::inv_factorial(m + 1))
            * &(delta1 * &delta2.pow(m as i64));
        theta = theta + BiTheta::monomial(&c * &half, 1, m, r1, r2);
    }
    theta
}

/// Same element built the slow way, through [`adjoint_power`] chains. Used
/// as the independent route against the closed form above.
pub fn compose_theta_by_adjoints(
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> BiTheta<Rational> {
    let a = BiTheta::monomial(delta1.clone(), 1, 0, r1, r2);
    let b = BiTheta::monomial(delta2.clone(), 0, 1, r1, r2);
    let half = Rational::new(1, 2);
    let mut theta = a.clone() + b.clone();
    for m in 1..=(r1 + r2) {
        let chain_a = adjoint_power(&a, &b, m).scale(&(&half * &Rational::inv_factorial(m + 1)));
        let sign = if m % 2 == 0 {
            Rational::one()
        } else {
            Rational::from_int(-1)
        };
        let chain_b =
            adjoint_power(&b, &a, m).scale(&(&(&half * &sign) * &Rational::inv_factorial(m + 1)));
        theta = theta + chain_a + chain_b;
    }
    theta
}

/// Compares `exp(δ1θ1)·exp(δ2θ2)` against `exp(compose_theta(…))`, both
/// evaluated independently; any mismatch is reported per bidegree with both
/// coefficient values.
pub fn check_exp_identity(
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> VerificationReport {
    let params = json!({
        "delta1": delta1.to_string(),
        "delta2": delta2.to_string(),
        "r1": r1,
        "r2": r2,
    });
    let a = BiTheta::monomial(delta1.clone(), 1, 0, r1, r2);
    let b = BiTheta::monomial(delta2.clone(), 0, 1, r1, r2);
    let product = a.exp().expect("nilpotent") * b.exp().expect("nilpotent");
    let composed = compose_theta(delta1, delta2, r1, r2)
        .exp()
        .expect("composed θ is nilpotent");

    let mut report = VerificationReport::new();
    let diffs = product.differences(&composed);
    if diffs.is_empty() {
        report.push(Check::pass("cbh_exp_identity", params));
    } else {
        let listed: Vec<_> = diffs
            .iter()
            .map(|(a, b, lhs, rhs)| {
                json!({
                    "bidegree": [a, b],
                    "product_side": lhs.to_string(),
                    "composed_side": rhs.to_string(),
                })
            })
            .collect();
        report.push(Check::fail(
            "cbh_exp_identity",
            params,
            json!({ "mismatches": listed }),
        ));
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    fn mono(c: Rational, a: usize, b: usize, r1: usize, r2: usize) -> BiTheta<Rational> {
        BiTheta::monomial(c, a, b, r1, r2)
    }

    #[test]
    fn adjoint_chain_closed_form() {
        // (ad δ1θ1)^m (δ2θ2) = 2^m δ1^m δ2 θ1^m θ2
        let d1 = r(1, 2);
        let d2 = r(1, 3);
        for m in 1..=4 {
            let a = mono(d1.clone(), 1, 0, 5, 2);
            let b = mono(d2.clone(), 0, 1, 5, 2);
            let got = adjoint_power(&a, &b, m);
            let coeff = &(&Rational::from_int(2).pow(m as i64) * &d1.pow(m as i64)) * &d2;
            assert_eq!(got, mono(coeff, m, 1, 5, 2), "m = {m}");
        }
        // (ad A)(A) = 0
        let a = mono(d1, 1, 0, 3, 3);
        assert!(adjoint_power(&a, &a, 1).is_zero());
    }

    #[test]
    fn compose_examples() {
        // empty sums at orders (0,0)
        let t = compose_theta(&r(1, 2), &r(1, 3), 0, 0);
        let expected = mono(r(1, 2), 1, 0, 0, 0) + mono(r(1, 3), 0, 1, 0, 0);
        assert_eq!(t, expected);

        // (1,1): δ1θ1 + δ2θ2 + δ1δ2 θ1θ2
        let t = compose_theta(&r(1, 2), &r(1, 3), 1, 1);
        let expected =
            mono(r(1, 2), 1, 0, 1, 1) + mono(r(1, 3), 0, 1, 1, 1) + mono(r(1, 6), 1, 1, 1, 1);
        assert_eq!(t, expected);

        // δ2 = 0 leaves the pure θ1 term
        let t = compose_theta(&r(1, 2), &Rational::zero(), 2, 2);
        assert_eq!(t, mono(r(1, 2), 1, 0, 2, 2));
    }

    #[test]
    fn closed_form_matches_adjoint_route() {
        for (r1, r2) in [(0, 0), (1, 1), (2, 2), (3, 2), (4, 1), (3, 3)] {
            let lhs = compose_theta(&r(1, 2), &r(2, 3), r1, r2);
            let rhs = compose_theta_by_adjoints(&r(1, 2), &r(2, 3), r1, r2);
            assert_eq!(lhs, rhs, "orders ({r1},{r2})");
        }
    }

    #[test]
    fn exp_identity_small_orders() {
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 1, 1).passed());
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 1, 0).passed());
        assert!(check_exp_identity(&r(3, 4), &r(2, 7), 0, 1).passed());
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 2, 1).passed());
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 1, 2).passed());
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 2, 2).passed());
        // a vanishing order makes the identity trivial at any companion order
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 6, 0).passed());
        assert!(check_exp_identity(&r(1, 2), &r(1, 3), 0, 6).passed());
    }

    #[test]
    fn exp_identity_first_failures_pinned() {
        // The composed element keeps the adjoint chains with coefficients
        // ½/(m+1)!, but the true expansion's pure-chain coefficients are the
        // Bernoulli values B_m/m!, which agree only through m = 2. The first
        // deviation therefore sits at bidegree (3,1): the product side
        // carries δ1³δ2/3! and the composed side twice that.
        let d1 = r(1, 2);
        let d2 = r(1, 3);
        let report = check_exp_identity(&d1, &d2, 3, 1);
        assert!(!report.passed());
        let w = report.checks[0].witness.as_ref().unwrap();
        assert_eq!(w["mismatches"][0]["bidegree"], serde_json::json!([3, 1]));
        let expect_product = &(&d1.pow(3) * &d2) * &Rational::inv_factorial(3);
        let expect_composed = expect_product.scale(&Rational::from_int(2));
        assert_eq!(
            w["mismatches"][0]["product_side"],
            serde_json::json!(expect_product.to_string())
        );
        assert_eq!(
            w["mismatches"][0]["composed_side"],
            serde_json::json!(expect_composed.to_string())
        );

        // mirrored failure in the other variable
        let report = check_exp_identity(&d1, &d2, 1, 3);
        assert!(!report.passed());
        let w = report.checks[0].witness.as_ref().unwrap();
        assert_eq!(w["mismatches"][0]["bidegree"], serde_json::json!([1, 3]));
    }

    #[test]
    fn swap_antisymmetry_against_exponentials() {
        // composing in the opposite order must match the swapped-variable
        // image of the closed form: exp(δ2θ2)exp(δ1θ1) = exp(swap(θ_c))
        let (r1, r2) = (1, 1);
        let (d1, d2) = (r(1, 2), r(1, 5));
        let swapped = compose_theta(&d2, &d1, r2, r1).swap_variables();
        let a = mono(d1, 1, 0, r1, r2);
        let b = mono(d2, 0, 1, r1, r2);
        let product = b.exp().unwrap() * a.exp().unwrap();
        assert_eq!(product, swapped.exp().unwrap());
    }
}
