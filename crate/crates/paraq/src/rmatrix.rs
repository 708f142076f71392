//! The order-1 twist and R-matrix, the coproduct intertwiner, and the
//! Yang-Baxter equation.
//!
//! Everything here lives at r = 1 where θ² = 0, so the twist
//! `U = 1⊗1 + ½δθ(J-⊗J+ - J+⊗J-)` squares to the R-matrix
//! `R = 1⊗1 + δθ(J-⊗J+ - J+⊗J-)` and all series arithmetic closes after the
//! linear term. The `+` on `U_{-θ}^+` is the linear antiautomorphism
//! exchanging J+ ↔ J- and fixing H and δθ, applied factor-wise; with that
//! reading `R = U_θ·U_{-θ}^+` is an identity the checker verifies rather
//! than assumes.

use serde_json::{json, Value};

use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::rep::{build_classical, build_deformed, RepMatrix, Spin};
use crate::report::{check_matrix_eq, VerificationReport};
use crate::ring::Ring;
use crate::theta::ThetaSeries;

const ORDER: usize = 1;

/// `1⊗1 + c·θ·(J-⊗J+ - J+⊗J-)` on the spin pair, the shared shape of the
/// twist and the R-matrix.
fn one_plus_theta_insertion(j1: Spin, j2: Spin, c: &Rational) -> RepMatrix {
    let (_, jp1, jm1) = build_classical(j1);
    let (_, jp2, jm2) = build_classical(j2);
    let w = jm1.kron(&jp2) - jp1.kron(&jm2);
    let dim = j1.dim() * j2.dim();
    Matrix::from_fn(dim, |i, k| {
        let constant = if i == k {
            Rational::one()
        } else {
            Rational::zero()
        };
        ThetaSeries::from_coeffs(vec![constant, w.at(i, k).scale(c)])
    })
}

/// Twist operator `U_θ = 1⊗1 + ½δθ(J-⊗J+ - J+⊗J-)`.
pub fn build_twist(j1: Spin, j2: Spin, delta: &Rational) -> RepMatrix {
    one_plus_theta_insertion(j1, j2, &delta.scale(&Rational::new(1, 2)))
}

/// `R_θ = 1⊗1 + δθ(J-⊗J+ - J+⊗J-)`, the direct formula.
pub fn build_rmatrix(j1: Spin, j2: Spin, delta: &Rational) -> RepMatrix {
    one_plus_theta_insertion(j1, j2, delta)
}

/// `U_{-θ}^+`: θ ↦ -θ composed with the factor-wise exchange J+ ↔ J-
/// (H and δθ fixed). Exchanging the roles flips the insertion's sign, so
/// this coincides with `U_θ`; the agreement check below verifies the
/// factorization `R = U_θ·U_{-θ}^+` from this definition.
pub fn build_plus_of_minus_twist(j1: Spin, j2: Spin, delta: &Rational) -> RepMatrix {
    let (_, jp1, jm1) = build_classical(j1);
    let (_, jp2, jm2) = build_classical(j2);
    // insertion with J+ and J- exchanged, evaluated at -θδ/2
    let w_exchanged = jp1.kron(&jm2) - jm1.kron(&jp2);
    let c = delta.scale(&Rational::new(-1, 2));
    let dim = j1.dim() * j2.dim();
    Matrix::from_fn(dim, |i, k| {
        let constant = if i == k {
            Rational::one()
        } else {
            Rational::zero()
        };
        ThetaSeries::from_coeffs(vec![constant, w_exchanged.at(i, k).scale(&c)])
    })
}

/// Verifies that the two expressions for the R-matrix agree and that the
/// twist is invertible with `U_θ·U_{-θ} = 1`.
pub fn check_rmatrix_factorization(j1: Spin, j2: Spin, delta: &Rational) -> VerificationReport {
    let params = json!({
        "j1": j1.to_string(),
        "j2": j2.to_string(),
        "delta": delta.to_string(),
    });
    let mut report = VerificationReport::new();
    let u = build_twist(j1, j2, delta);
    let r_direct = build_rmatrix(j1, j2, delta);
    let r_factored = u.clone() * build_plus_of_minus_twist(j1, j2, delta);
    report.push(check_matrix_eq(
        "rmatrix_two_expressions_agree",
        params.clone(),
        &r_direct,
        &r_factored,
    ));
    let u_minus = build_twist(j1, j2, &-delta.clone());
    report.push(check_matrix_eq(
        "twist_times_opposite_is_identity",
        params.clone(),
        &(u * u_minus),
        &r_direct.one_like(),
    ));
    report
}

/// Intertwiner property: `U_θ·Δ_{r=0}(a) = Δ_{r=1}(a)·U_θ` for
/// a ∈ {H, J+, J-} on the spin pair `(j1, j2)`.
pub fn check_intertwiner(j1: Spin, j2: Spin, delta: &Rational) -> VerificationReport {
    let params = json!({
        "j1": j1.to_string(),
        "j2": j2.to_string(),
        "delta": delta.to_string(),
    });
    let mut report = VerificationReport::new();
    let u = build_twist(j1, j2, delta);

    let m1 = build_deformed(j1, delta, ORDER);
    let m2 = build_deformed(j2, delta, ORDER);
    let t = crate::hopf::tensor_module(&m1, &m2);

    // classical (primitive) coproduct embedded at r = 1
    let embed = |m: &Matrix<Rational>| m.map(|c| ThetaSeries::constant(c.clone(), ORDER));
    let (h1, jp1, jm1) = build_classical(j1);
    let (h2, jp2, jm2) = build_classical(j2);
    let one1 = Matrix::identity(j1.dim(), &Rational::zero());
    let one2 = Matrix::identity(j2.dim(), &Rational::zero());
    let primitive =
        |a1: &Matrix<Rational>, a2: &Matrix<Rational>| embed(&(a1.kron(&one2) + one1.kron(a2)));

    for (tag, classical, deformed) in [
        ("h", primitive(&h1, &h2), t.h.clone()),
        ("jplus", primitive(&jp1, &jp2), t.j_plus.clone()),
        ("jminus", primitive(&jm1, &jm2), t.j_minus.clone()),
    ] {
        report.push(check_matrix_eq(
            format!("intertwiner_{tag}"),
            params.clone(),
            &(u.clone() * classical),
            &(deformed * u.clone()),
        ));
    }
    report
}

/// Embeds a two-site operator on positions `(a, b)` of a three-fold product
/// space of site dimension `d`.
fn embed_pair(op: &RepMatrix, d: usize, a: usize, b: usize) -> RepMatrix {
    assert!(a < b && b < 3);
    let dim = d * d * d;
    let zero = op.at(0, 0).zero_like();
    Matrix::from_fn(dim, |row, col| {
        let ri = [row / (d * d), (row / d) % d, row % d];
        let ci = [col / (d * d), (col / d) % d, col % d];
        // the spectator site must be diagonal
        let spectator = 3 - a - b;
        if ri[spectator] != ci[spectator] {
            return zero.clone();
        }
        op.at(ri[a] * d + ri[b], ci[a] * d + ci[b]).clone()
    })
}

/// Yang-Baxter equation `R12·R13·R23 = R23·R13·R12` on the d³ space.
pub fn check_ybe(j: Spin, delta: &Rational) -> VerificationReport {
    let params = json!({ "j": j.to_string(), "delta": delta.to_string() });
    let mut report = VerificationReport::new();
    let r = build_rmatrix(j, j, delta);
    let d = j.dim();
    let r12 = embed_pair(&r, d, 0, 1);
    let r13 = embed_pair(&r, d, 0, 2);
    let r23 = embed_pair(&r, d, 1, 2);
    let lhs = r12.clone() * r13.clone() * r23.clone();
    let rhs = r23 * r13 * r12;
    report.push(check_matrix_eq("yang_baxter", params, &lhs, &rhs));
    report
}

/// Renders an r=1 entry in the `a + b·δθ` display convention, factoring the
/// chosen δ out of the θ-linear coefficient.
pub fn format_delta_theta(entry: &ThetaSeries<Rational>, delta: &Rational) -> String {
    let a = entry.coeff(0);
    let lin = entry.coeff(1);
    if lin.is_zero() {
        return a.to_string();
    }
    let b = if delta.is_zero() {
        lin.clone()
    } else {
        lin * &delta.inv().expect("nonzero")
    };
    let sym = if delta.is_zero() { "θ" } else { "δθ" };
    if a.is_zero() {
        format!("{b}·{sym}")
    } else {
        format!("{a} + {b}·{sym}")
    }
}

/// Aggregate report driven by the CLI `rmatrix` command.
pub fn check_rmatrix_suite(j: Spin, delta: &Rational) -> VerificationReport {
    let mut report = check_rmatrix_factorization(j, j, delta);
    report.extend(check_intertwiner(j, j, delta));
    report.extend(check_ybe(j, delta));
    report
}

pub fn suite_params(j: Spin, delta: &Rational) -> Value {
    json!({ "j": j.to_string(), "delta": delta.to_string() })
}
