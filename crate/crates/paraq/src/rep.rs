//! Finite-dimensional spin representations of the deformed algebra.
//!
//! The representation is the non-symmetric weight realization: basis vectors
//! are H-eigenvectors ordered by descending weight m = j, j-1, …, -j, with
//! integer matrix elements, so J+ acts as `J+|m> = [j-m]|m+1>` and J- as
//! `J-|m> = [j+m]|m-1>` where `[n]` is the truncated q-number of
//! [`crate::psi::sinh_ratio`]. The symmetric square-root normalization would
//! leave the rational field; this one keeps every identity exact.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bitheta::BiTheta;
use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::psi::{exp_diff, psi_polynomials, sinh_ratio};
use crate::rational::Rational;
use crate::report::{check_matrix_eq, check_matrix_zero, Check, VerificationReport};
use crate::ring::Ring;
use crate::theta::ThetaSeries;

/// Matrix over the one-variable truncated ring: the working representation
/// of deformed generators, coproduct images, twists and R-matrices.
pub type RepMatrix = Matrix<ThetaSeries<Rational>>;

/// Matrix over the two-variable ring, for the two-parameter deformation.
pub type BiRepMatrix = Matrix<BiTheta<Rational>>;

/// Spin j stored as the integer 2j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Spin(pub u32);

impl Spin {
    pub fn dim(self) -> usize {
        self.0 as usize + 1
    }

    /// H-eigenvalues 2m in basis order (descending): 2j, 2j-2, …, -2j.
    pub fn weights(self) -> Vec<i64> {
        (0..self.dim())
            .map(|i| self.0 as i64 - 2 * i as i64)
            .collect()
    }
}

impl FromStr for Spin {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || AlgebraError::ParseSpin(s.into());
        let t = s.trim();
        if let Some((p, q)) = t.split_once('/') {
            if q.trim() != "2" {
                return Err(bad());
            }
            let num: u32 = p.trim().parse().map_err(|_| bad())?;
            if num % 2 == 0 {
                return Err(bad());
            }
            Ok(Spin(num))
        } else {
            let j: u32 = t.parse().map_err(|_| bad())?;
            Ok(Spin(2 * j))
        }
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Classical sl(2) triple `(H, J+, J-)` over plain rationals.
pub fn build_classical(j: Spin) -> (Matrix<Rational>, Matrix<Rational>, Matrix<Rational>) {
    let d = j.dim();
    let h = Matrix::diagonal(j.weights().iter().map(|&w| Rational::from_int(w)).collect());
    let mut jp = Matrix::zero(d, &Rational::zero());
    let mut jm = Matrix::zero(d, &Rational::zero());
    for i in 1..d {
        // J+|m_i> = (j - m_i)|m_{i-1}> and j - m_i = i exactly
        *jp.at_mut(i - 1, i) = Rational::from_int(i as i64);
        // J-|m_{i-1}> = (j + m_{i-1})|m_i> and j + m_{i-1} = 2j - (i-1)
        *jm.at_mut(i, i - 1) = Rational::from_int(j.0 as i64 - (i as i64 - 1));
    }
    (h, jp, jm)
}

/// A spin-j module over the truncated ring at fixed `(δ, r)`, carrying the
/// three generator matrices.
#[derive(Debug, Clone)]
pub struct DeformedRep {
    pub dim: usize,
    pub order: usize,
    pub delta: Rational,
    pub h: RepMatrix,
    pub j_plus: RepMatrix,
    pub j_minus: RepMatrix,
}

/// Deformed generators: q-number matrix elements via the ψ-series.
pub fn build_deformed(j: Spin, delta: &Rational, order: usize) -> DeformedRep {
    let d = j.dim();
    let qnum = |n: i64| sinh_ratio(&Rational::from_int(n), delta, order);
    let zero = ThetaSeries::constant(Rational::zero(), order);
    let h = Matrix::diagonal(
        j.weights()
            .iter()
            .map(|&w| ThetaSeries::constant(Rational::from_int(w), order))
            .collect(),
    );
    let mut jp = Matrix::zero(d, &zero);
    let mut jm = Matrix::zero(d, &zero);
    for i in 1..d {
        *jp.at_mut(i - 1, i) = qnum(i as i64);
        *jm.at_mut(i, i - 1) = qnum(j.0 as i64 - (i as i64 - 1));
    }
    DeformedRep {
        dim: d,
        order,
        delta: delta.clone(),
        h,
        j_plus: jp,
        j_minus: jm,
    }
}

/// The θ^k coefficient of every entry, as a plain rational matrix.
pub fn theta_coeff_matrix(a: &RepMatrix, k: usize) -> Matrix<Rational> {
    a.map(|e| e.coeff(k).clone())
}

/// Taylor component `J^(k)`: the θ^k coefficient divided by δ^k. The
/// reassembly `Σ_k δ^k θ^k J^(k)` recovers the input exactly.
pub fn taylor_component(a: &RepMatrix, k: usize, delta: &Rational) -> Result<Matrix<Rational>> {
    let order = a.at(0, 0).order();
    if k > order {
        return Err(AlgebraError::ComponentOutOfRange { index: k, order });
    }
    if delta.is_zero() {
        return Err(AlgebraError::Domain(
            "taylor components need a nonzero delta".into(),
        ));
    }
    let scale = delta.pow(k as i64).inv().expect("nonzero");
    Ok(theta_coeff_matrix(a, k).scale(&scale))
}

/// `e(X·c;θ)` for a rational matrix `X`: entrywise series `Σ (cX)^k θ^k/k!`.
pub fn exp_of_matrix(x: &Matrix<Rational>, c: &Rational, order: usize) -> RepMatrix {
    let scaled = x.scale(c);
    let mut powers = Vec::with_capacity(order + 1);
    powers.push(scaled.one_like());
    for k in 1..=order {
        powers.push(powers[k - 1].clone() * scaled.clone());
    }
    Matrix::from_fn(x.dim(), |i, j| {
        ThetaSeries::from_coeffs(
            (0..=order)
                .map(|k| powers[k].at(i, j).scale(&Rational::inv_factorial(k)))
                .collect(),
        )
    })
}

/// Embeds a θ-scalar as a scalar matrix.
pub fn scalar_matrix(s: &ThetaSeries<Rational>, dim: usize) -> RepMatrix {
    Matrix::from_fn(dim, |i, j| if i == j { s.clone() } else { s.zero_like() })
}

/// Multiplies every entry by a θ-scalar.
pub fn scale_by_series(a: &RepMatrix, s: &ThetaSeries<Rational>) -> RepMatrix {
    a.map(|e| e.clone() * s.clone())
}

/// Diagonal matrix `Σ_k ψ_k(H) δ^{2k} θ^{2k}` — the right-hand side of the
/// deformed commutation relation on the weight basis.
pub fn qnumber_of_h(j: Spin, delta: &Rational, order: usize) -> RepMatrix {
    Matrix::diagonal(
        j.weights()
            .iter()
            .map(|&w| sinh_ratio(&Rational::from_int(w), delta, order))
            .collect(),
    )
}

fn grid_params(j: Spin, delta: &Rational, order: usize) -> Value {
    json!({ "j": j.to_string(), "delta": delta.to_string(), "r": order })
}

/// Relation checks shared by plain modules and coproduct-image modules:
/// weight grading plus both forms of the deformed commutator identity. The
/// commutator right-hand sides are evaluated through `h` itself, so the same
/// battery applies on tensor-product spaces where `h` is not diagonal in the
/// eigenbasis ordering above.
pub fn relation_checks(
    h: &RepMatrix,
    j_plus: &RepMatrix,
    j_minus: &RepMatrix,
    delta: &Rational,
    order: usize,
    params: &Value,
    name_prefix: &str,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let two_jp = j_plus.scale(&Rational::from_int(2));
    let two_jm = j_minus.scale(&Rational::from_int(2));
    checks.push(check_matrix_eq(
        format!("{name_prefix}weight_plus"),
        params.clone(),
        &h.commutator(j_plus),
        &two_jp,
    ));
    checks.push(check_matrix_eq(
        format!("{name_prefix}weight_minus"),
        params.clone(),
        &h.commutator(j_minus),
        &-two_jm,
    ));

    let comm = j_plus.commutator(j_minus);

    // ψ-series form: [J+,J-] = Σ_k ψ_k(H) δ^{2k} θ^{2k}
    let h0 = theta_coeff_matrix(h, 0);
    let mut rhs_series = scalar_matrix(&ThetaSeries::constant(Rational::zero(), order), h.dim());
    let psis = psi_polynomials(order / 2);
    let mut d2k = Rational::one();
    for (k, psi) in psis.iter().enumerate() {
        if 2 * k > order {
            break;
        }
        let coeff_matrix = psi.eval_in(&h0).scale(&d2k);
        let term = coeff_matrix.map(|c| ThetaSeries::monomial(c.clone(), 2 * k, order));
        rhs_series = rhs_series + term;
        d2k = &d2k * &(delta * delta);
    }
    checks.push(check_matrix_eq(
        format!("{name_prefix}commutator_psi_series"),
        params.clone(),
        &comm,
        &rhs_series,
    ));

    // product form: [J+,J-]·(e(δ;θ) - e(-δ;θ)) = e(Hδ;θ) - e(-Hδ;θ)
    let denom = exp_diff(delta, order);
    let lhs = scale_by_series(&comm, &denom);
    let rhs = exp_of_matrix(&h0, delta, order) - exp_of_matrix(&h0, &-delta.clone(), order);
    checks.push(check_matrix_eq(
        format!("{name_prefix}commutator_product_form"),
        params.clone(),
        &lhs,
        &rhs,
    ));

    checks
}

/// Verifies the defining relations of the deformed algebra on a spin-j
/// module: weight grading, both commutator forms, the classical r=0
/// degeneration, the θ²-coefficient normalization, and the graded component
/// sums extracted through [`taylor_component`].
pub fn check_defining_relations(j: Spin, delta: &Rational, order: usize) -> VerificationReport {
    let params = grid_params(j, delta, order);
    let rep = build_deformed(j, delta, order);
    let mut report = VerificationReport::new();
    for c in relation_checks(&rep.h, &rep.j_plus, &rep.j_minus, delta, order, &params, "") {
        report.push(c);
    }

    if order == 0 {
        let (_, jp0, jm0) = build_classical(j);
        let embed = |m: &Matrix<Rational>| m.map(|c| ThetaSeries::constant(c.clone(), 0));
        report.push(check_matrix_eq(
            "classical_degeneration",
            params.clone(),
            &rep.j_plus,
            &embed(&jp0),
        ));
        report.push(check_matrix_eq(
            "classical_degeneration_minus",
            params.clone(),
            &rep.j_minus,
            &embed(&jm0),
        ));
    }

    if order >= 2 && !delta.is_zero() {
        // θ² coefficient of the commutator is δ²·ψ_1(H) on the spectrum;
        // the exponent on δ is 2, matching the ψ-series where θ and δ powers
        // always agree (a δ³ normalization would fail this check).
        let comm = rep.j_plus.commutator(&rep.j_minus);
        let lhs = theta_coeff_matrix(&comm, 2);
        let psi1 = &psi_polynomials(1)[1];
        let rhs = psi1
            .eval_in(&theta_coeff_matrix(&rep.h, 0))
            .scale(&(delta * delta));
        report.push(
            check_matrix_eq("theta2_coeff_is_delta2_psi1", params.clone(), &lhs, &rhs)
                .with_note("theta^2 coefficient carries delta^2 (theta and delta powers match in the psi-series expansion)"),
        );
    }

    if !delta.is_zero() {
        report.extend(graded_sum_checks(&rep, &params));
    }

    report
}

/// The graded component sums: even sums give ψ_k(H), odd sums vanish, and
/// like-sign sums vanish, for every total degree representable at this order.
fn graded_sum_checks(rep: &DeformedRep, params: &Value) -> VerificationReport {
    let mut report = VerificationReport::new();
    let delta = &rep.delta;
    let h0 = theta_coeff_matrix(&rep.h, 0);
    let jp: Vec<_> = (0..=rep.order)
        .map(|k| taylor_component(&rep.j_plus, k, delta).expect("k in range, delta nonzero"))
        .collect();
    let jm: Vec<_> = (0..=rep.order)
        .map(|k| taylor_component(&rep.j_minus, k, delta).expect("k in range, delta nonzero"))
        .collect();
    let psis = psi_polynomials(rep.order / 2);

    for total in 0..=rep.order {
        let mut mixed = h0.zero_like();
        let mut like_plus = h0.zero_like();
        let mut like_minus = h0.zero_like();
        for m in 0..=total {
            mixed = mixed + jp[m].commutator(&jm[total - m]);
            like_plus = like_plus + jp[m].commutator(&jp[total - m]);
            like_minus = like_minus + jm[m].commutator(&jm[total - m]);
        }
        if total % 2 == 0 {
            let rhs = psis[total / 2].eval_in(&h0);
            report.push(check_matrix_eq(
                format!("graded_even_sum_k{}", total / 2),
                params.clone(),
                &mixed,
                &rhs,
            ));
        } else {
            report.push(check_matrix_zero(
                format!("graded_odd_sum_k{}", total / 2),
                params.clone(),
                &mixed,
            ));
        }
        report.push(check_matrix_zero(
            format!("graded_like_sign_plus_k{total}"),
            params.clone(),
            &like_plus,
        ));
        report.push(check_matrix_zero(
            format!("graded_like_sign_minus_k{total}"),
            params.clone(),
            &like_minus,
        ));
    }
    report
}

/// Component matrix `J±^(k)` without reference to δ: entries ψ_{k/2} of the
/// classical matrix elements (odd components vanish identically in this
/// realization).
pub fn component_matrices(j: Spin, k: usize) -> (Matrix<Rational>, Matrix<Rational>) {
    let d = j.dim();
    let zero = Matrix::zero(d, &Rational::zero());
    if k % 2 == 1 {
        return (zero.clone(), zero);
    }
    let psi = psi_polynomials(k / 2).pop().expect("nonempty");
    let mut jp = zero.clone();
    let mut jm = zero;
    for i in 1..d {
        *jp.at_mut(i - 1, i) = psi.eval(&Rational::from_int(i as i64));
        *jm.at_mut(i, i - 1) = psi.eval(&Rational::from_int(j.0 as i64 - (i as i64 - 1)));
    }
    (jp, jm)
}

/// Two-parameter module: generators `Σ_m θ^m J±^(m)` over the composed
/// nilpotent element θ from the CBH module.
#[derive(Debug, Clone)]
pub struct TwoParamRep {
    pub dim: usize,
    pub orders: (usize, usize),
    pub deltas: (Rational, Rational),
    pub h: BiRepMatrix,
    pub j_plus: BiRepMatrix,
    pub j_minus: BiRepMatrix,
}

pub fn build_two_param(
    j: Spin,
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> TwoParamRep {
    let theta = crate::cbh::compose_theta(delta1, delta2, r1, r2);
    let d = j.dim();
    let zero = BiTheta::constant(Rational::zero(), r1, r2);
    let h = Matrix::diagonal(
        j.weights()
            .iter()
            .map(|&w| BiTheta::constant(Rational::from_int(w), r1, r2))
            .collect(),
    );
    let mut jp = Matrix::zero(d, &zero);
    let mut jm = Matrix::zero(d, &zero);
    // powers of the composed θ terminate at total degree r1 + r2
    let mut theta_pow = BiTheta::constant(Rational::one(), r1, r2);
    for m in 0..=(r1 + r2) {
        if theta_pow.is_zero() {
            break;
        }
        let (cp, cm) = component_matrices(j, m);
        for i in 0..d {
            for k in 0..d {
                if !cp.at(i, k).is_zero() {
                    let t = theta_pow.scale(cp.at(i, k));
                    *jp.at_mut(i, k) = jp.at(i, k).clone() + t;
                }
                if !cm.at(i, k).is_zero() {
                    let t = theta_pow.scale(cm.at(i, k));
                    *jm.at_mut(i, k) = jm.at(i, k).clone() + t;
                }
            }
        }
        theta_pow = theta_pow * theta.clone();
    }
    TwoParamRep {
        dim: d,
        orders: (r1, r2),
        deltas: (delta1.clone(), delta2.clone()),
        h,
        j_plus: jp,
        j_minus: jm,
    }
}

/// `e(X·c;θ_i)` over the two-variable ring: `Σ_k (cX)^k θ_i^k / k!`.
pub fn exp_of_matrix_bi(
    x: &Matrix<Rational>,
    c: &Rational,
    var: usize,
    r1: usize,
    r2: usize,
) -> BiRepMatrix {
    assert!(var == 1 || var == 2);
    let top = if var == 1 { r1 } else { r2 };
    let scaled = x.scale(c);
    let mut powers = Vec::with_capacity(top + 1);
    powers.push(scaled.one_like());
    for k in 1..=top {
        powers.push(powers[k - 1].clone() * scaled.clone());
    }
    Matrix::from_fn(x.dim(), |i, j| {
        let mut e = BiTheta::constant(Rational::zero(), r1, r2);
        for (k, p) in powers.iter().enumerate() {
            let coeff = p.at(i, j).scale(&Rational::inv_factorial(k));
            let (a, b) = if var == 1 { (k, 0) } else { (0, k) };
            e = e + BiTheta::monomial(coeff, a, b, r1, r2);
        }
        e
    })
}

/// Weight grading and the product form of the two-parameter commutator
/// relation. The right-hand side ratio has a non-unit denominator, so the
/// division-free reading `[J+,J-]·D = N` is checked, with
/// `N = e(Hδ1;θ1)e(Hδ2;θ2) - e(-Hδ2;θ2)e(-Hδ1;θ1)` and `D = N|_{H→1}`.
/// The outcome is whatever the computation says; nothing is assumed.
#[allow(clippy::too_many_arguments)]
pub fn two_param_relation_checks(
    h: &BiRepMatrix,
    j_plus: &BiRepMatrix,
    j_minus: &BiRepMatrix,
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
    params: &Value,
    name_prefix: &str,
) -> Vec<Check> {
    let mut checks = Vec::new();
    let two_jp = j_plus.scale(&Rational::from_int(2));
    let two_jm = j_minus.scale(&Rational::from_int(2));
    checks.push(check_matrix_eq(
        format!("{name_prefix}two_param_weight_plus"),
        params.clone(),
        &h.commutator(j_plus),
        &two_jp,
    ));
    checks.push(check_matrix_eq(
        format!("{name_prefix}two_param_weight_minus"),
        params.clone(),
        &h.commutator(j_minus),
        &-two_jm,
    ));

    let dim = h.dim();
    let h0 = h.map(|e| e.constant_term().clone());
    let numerator = exp_of_matrix_bi(&h0, delta1, 1, r1, r2)
        * exp_of_matrix_bi(&h0, delta2, 2, r1, r2)
        - exp_of_matrix_bi(&h0, &-delta2.clone(), 2, r1, r2)
            * exp_of_matrix_bi(&h0, &-delta1.clone(), 1, r1, r2);
    let exp_scalar = |c: &Rational, var: usize| -> BiRepMatrix {
        let eye = Matrix::identity(dim, &Rational::zero());
        exp_of_matrix_bi(&eye, c, var, r1, r2)
    };
    let denominator = exp_scalar(delta1, 1) * exp_scalar(delta2, 2)
        - exp_scalar(&-delta2.clone(), 2) * exp_scalar(&-delta1.clone(), 1);
    let comm = j_plus.commutator(j_minus);
    checks.push(check_matrix_eq(
        format!("{name_prefix}two_param_commutator_product_form"),
        params.clone(),
        &(comm * denominator),
        &numerator,
    ));

    checks
}

/// Runs [`two_param_relation_checks`] on a freshly built spin-j module.
pub fn check_two_param_relations(
    j: Spin,
    delta1: &Rational,
    delta2: &Rational,
    r1: usize,
    r2: usize,
) -> VerificationReport {
    let params = json!({
        "j": j.to_string(),
        "delta1": delta1.to_string(),
        "delta2": delta2.to_string(),
        "r1": r1,
        "r2": r2,
    });
    let rep = build_two_param(j, delta1, delta2, r1, r2);
    let mut report = VerificationReport::new();
    for c in two_param_relation_checks(
        &rep.h,
        &rep.j_plus,
        &rep.j_minus,
        delta1,
        delta2,
        r1,
        r2,
        &params,
        "",
    ) {
        report.push(c);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn spin_parsing() {
        assert_eq!("1/2".parse::<Spin>().unwrap(), Spin(1));
        assert_eq!("1".parse::<Spin>().unwrap(), Spin(2));
        assert_eq!("3/2".parse::<Spin>().unwrap(), Spin(3));
        assert_eq!("0".parse::<Spin>().unwrap(), Spin(0));
        assert!("5/4".parse::<Spin>().is_err());
        assert!("-1".parse::<Spin>().is_err());
        assert!("2/2".parse::<Spin>().is_err());
        assert_eq!(Spin(3).to_string(), "3/2");
        assert_eq!(Spin(4).to_string(), "2");
    }

    #[test]
    fn classical_spin_half() {
        let (h, jp, jm) = build_classical(Spin(1));
        assert_eq!(jp, Matrix::from_i64(&[&[0, 1], &[0, 0]]));
        assert_eq!(jm, Matrix::from_i64(&[&[0, 0], &[1, 0]]));
        assert_eq!(h, Matrix::from_i64(&[&[1, 0], &[0, -1]]));
    }

    #[test]
    fn classical_relations_spin_one() {
        let (h, jp, jm) = build_classical(Spin(2));
        assert_eq!(jp.commutator(&jm), h);
        assert_eq!(h.commutator(&jp), jp.scale(&r(2, 1)));
        assert_eq!(h.commutator(&jm), jm.scale(&r(-2, 1)));
    }

    #[test]
    fn classical_spin_zero_is_trivial() {
        let (h, jp, jm) = build_classical(Spin(0));
        assert!(h.is_zero() && jp.is_zero() && jm.is_zero());
    }

    #[test]
    fn deformed_reduces_to_classical() {
        // r = 0
        let rep = build_deformed(Spin(2), &r(1, 3), 0);
        let (_, jp0, jm0) = build_classical(Spin(2));
        assert_eq!(theta_coeff_matrix(&rep.j_plus, 0), jp0);
        assert_eq!(theta_coeff_matrix(&rep.j_minus, 0), jm0);
        // spin 1/2 at any order: all q-numbers are [0] or [1]
        let rep = build_deformed(Spin(1), &r(1, 3), 4);
        for k in 1..=4 {
            assert!(theta_coeff_matrix(&rep.j_plus, k).is_zero());
            assert!(theta_coeff_matrix(&rep.j_minus, k).is_zero());
        }
    }

    #[test]
    fn deformed_commutator_spin_one_r2() {
        // [J+,J-] = H + δ²θ²·diag(1, 0, -1) since ψ_1(±2) = ±1
        let d = r(2, 5);
        let rep = build_deformed(Spin(2), &d, 2);
        let comm = rep.j_plus.commutator(&rep.j_minus);
        assert_eq!(
            theta_coeff_matrix(&comm, 0),
            Matrix::from_i64(&[&[2, 0, 0], &[0, 0, 0], &[0, 0, -2]])
        );
        assert!(theta_coeff_matrix(&comm, 1).is_zero());
        assert_eq!(
            theta_coeff_matrix(&comm, 2),
            Matrix::from_i64(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, -1]]).scale(&(&d * &d))
        );
    }

    #[test]
    fn taylor_reassembly() {
        let d = r(1, 3);
        let rep = build_deformed(Spin(3), &d, 3);
        let mut rebuilt = rep.j_plus.zero_like();
        for k in 0..=3 {
            let comp = taylor_component(&rep.j_plus, k, &d).unwrap();
            let dk = d.pow(k as i64);
            rebuilt = rebuilt + comp.map(|c| ThetaSeries::monomial(c.scale(&dk), k, 3));
        }
        assert_eq!(rebuilt, rep.j_plus);
        assert!(matches!(
            taylor_component(&rep.j_plus, 9, &d),
            Err(AlgebraError::ComponentOutOfRange { .. })
        ));
        assert!(taylor_component(&rep.j_plus, 1, &Rational::zero()).is_err());
    }

    #[test]
    fn defining_relations_anchor_points() {
        assert!(check_defining_relations(Spin(2), &r(1, 3), 3).passed());
        assert!(check_defining_relations(Spin(4), &r(2, 5), 5).passed());
        assert!(check_defining_relations(Spin(1), &r(1, 2), 1).passed());
        assert!(check_defining_relations(Spin(0), &r(1, 2), 2).passed());
    }

    #[test]
    fn two_param_commutator_outcome_pinned() {
        // The division-free reading of the two-parameter commutator relation
        // holds whenever one order vanishes, and fails at (1,1): the
        // composed θ squares to zero there, so [J+,J-] = H exactly, while
        // the numerator carries 2H²δ1δ2·θ1θ2 against H·D's 2Hδ1δ2·θ1θ2 —
        // a θ1θ2 discrepancy of 2δ1δ2(H² - H). Both the hand expansion and
        // the machine agree; frozen here.
        let d1 = r(1, 2);
        let d2 = r(1, 3);
        assert!(check_two_param_relations(Spin(1), &d1, &d2, 0, 0).passed());
        assert!(check_two_param_relations(Spin(1), &d1, &d2, 1, 0).passed());
        assert!(check_two_param_relations(Spin(1), &d1, &d2, 0, 1).passed());

        let report = check_two_param_relations(Spin(1), &d1, &d2, 1, 1);
        let check = report.find("two_param_commutator_product_form").unwrap();
        assert_eq!(check.status, crate::report::Status::Fail);
        // the witness sits on the lowest weight, where H = -1 and
        // 2δ1δ2(H² - H) = 4δ1δ2 = 2/3
        let w = check.witness.as_ref().unwrap();
        assert_eq!(w["position"], serde_json::json!([1, 1]));
        let rep = build_two_param(Spin(1), &d1, &d2, 1, 1);
        assert_eq!(
            rep.j_plus.commutator(&rep.j_minus),
            rep.h,
            "composed θ² = 0 at (1,1), so the commutator is exactly H"
        );
    }

    #[test]
    fn two_param_degenerations() {
        // r1 = r2 = 0: classical generators
        let rep = build_two_param(Spin(2), &r(1, 2), &r(1, 3), 0, 0);
        let (_, jp0, jm0) = build_classical(Spin(2));
        assert_eq!(rep.j_plus.map(|e| e.constant_term().clone()), jp0);
        assert_eq!(rep.j_minus.map(|e| e.constant_term().clone()), jm0);

        // δ2 = 0: single-variable deformation embedded in θ1
        let rep = build_two_param(Spin(2), &r(1, 2), &Rational::zero(), 2, 2);
        let single = build_deformed(Spin(2), &r(1, 2), 2);
        for a in 0..=2usize {
            let slice = rep.j_plus.map(|e| e.coeff(a, 0).clone());
            assert_eq!(slice, theta_coeff_matrix(&single.j_plus, a));
            for b in 1..=2usize {
                assert!(rep.j_plus.map(|e| e.coeff(a, b).clone()).is_zero());
            }
        }
    }
}
