//! Taylor coefficients ψ_k(H) of sinh(δH)/sinh(δ) and the truncated
//! q-numbers built from them.
//!
//! As formal power series in δ, `sinh(δH) = sinh(δ) · Σ_k ψ_k(H) δ^{2k}`.
//! Writing both sides over the even variable u = δ² and dividing out one δ,
//! the quotient comes from exact power-series long division, i.e. the
//! triangular recurrence with numerator terms N_k = H^{2k+1}/(2k+1)! and
//! denominator terms D_k = 1/(2k+1)!: `ψ_k = N_k - Σ_{i=1..k} D_i ψ_{k-i}`
//! (D_0 = 1).

use crate::hpoly::HPoly;
use crate::rational::Rational;
use crate::ring::Ring;
use crate::theta::ThetaSeries;

/// ψ_0 … ψ_{k_max}, each an exact polynomial in `H`.
pub fn psi_polynomials(k_max: usize) -> Vec<HPoly> {
    let mut psis: Vec<HPoly> = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let mut p = HPoly::monomial(Rational::inv_factorial(2 * k + 1), 2 * k + 1);
        for i in 1..=k {
            let d = Rational::inv_factorial(2 * i + 1);
            p = p - psis[k - i].scale(&d);
        }
        psis.push(p);
    }
    psis
}

/// Truncated q-number `[a]`: the series `Σ_{2k ≤ r} ψ_k(a) δ^{2k} θ^{2k}`.
///
/// Satisfies the division-free identity
/// `[a] · (e(δ;θ) - e(-δ;θ)) = e(aδ;θ) - e(-aδ;θ)` exactly at every order.
/// The argument may live in any commutative ℚ-algebra: an integer weight,
/// the symbol `H` itself, or a diagonal representation matrix.
pub fn sinh_ratio<C: Ring>(a: &C, delta: &Rational, order: usize) -> ThetaSeries<C> {
    let psis = psi_polynomials(order / 2);
    let mut s = ThetaSeries::constant(a.zero_like(), order);
    let delta_sq = delta * delta;
    let mut dk = Rational::one();
    for (k, psi) in psis.iter().enumerate() {
        if 2 * k > order {
            break;
        }
        s = s + ThetaSeries::monomial(psi.eval_in(a).scale(&dk), 2 * k, order);
        dk = &dk * &delta_sq;
    }
    s
}

/// `e(x;θ) - e(-x;θ)`, the truncated series playing the role of 2·sinh.
pub fn exp_diff<C: Ring>(x: &C, order: usize) -> ThetaSeries<C> {
    ThetaSeries::exp(x, order) - ThetaSeries::exp(&-x.clone(), order)
}
