//! Bigraded truncated series in two anticommuting nilpotent variables.
//!
//! θ1 and θ2 satisfy θ1^{r1+1} = 0, θ2^{r2+1} = 0 and θ1θ2 + θ2θ1 = 0.
//! Monomials are stored in normal order θ1^a θ2^b; reordering during a
//! product costs one sign per transposition, which collapses to the rule
//! `(θ1^a θ2^b)(θ1^c θ2^d) = (-1)^{bc} θ1^{a+c} θ2^{b+d}`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::rational::Rational;
use crate::ring::Ring;

#[derive(Clone, PartialEq)]
pub struct BiTheta<C: Ring> {
    r1: usize,
    r2: usize,
    /// Coefficient of θ1^a θ2^b at index `a*(r2+1) + b`.
    coeffs: Vec<C>,
}

impl<C: Ring> BiTheta<C> {
    pub fn constant(c: C, r1: usize, r2: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; (r1 + 1) * (r2 + 1)];
        coeffs[0] = c;
        BiTheta { r1, r2, coeffs }
    }

    /// `c·θ1^a θ2^b`; out-of-range degrees give zero by nilpotency.
    pub fn monomial(c: C, a: usize, b: usize, r1: usize, r2: usize) -> Self {
        let mut s = BiTheta::constant(c.zero_like(), r1, r2);
        if a <= r1 && b <= r2 {
            s.coeffs[a * (r2 + 1) + b] = c;
        }
        s
    }

    pub fn orders(&self) -> (usize, usize) {
        (self.r1, self.r2)
    }

    pub fn coeff(&self, a: usize, b: usize) -> &C {
        &self.coeffs[a * (self.r2 + 1) + b]
    }

    pub fn coeff_mut(&mut self, a: usize, b: usize) -> &mut C {
        &mut self.coeffs[a * (self.r2 + 1) + b]
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    pub fn is_nilpotent(&self) -> bool {
        self.coeffs[0].is_zero()
    }

    fn check_orders(&self, other: &Self) -> Result<()> {
        if (self.r1, self.r2) != (other.r1, other.r2) {
            return Err(AlgebraError::BiOrderMismatch {
                left: (self.r1, self.r2),
                right: (other.r1, other.r2),
            });
        }
        Ok(())
    }

    /// Signed monomial product with truncation at the two orders.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_orders(other)?;
        let mut out = BiTheta::constant(self.coeffs[0].zero_like(), self.r1, self.r2);
        for a in 0..=self.r1 {
            for b in 0..=self.r2 {
                let x = self.coeff(a, b);
                if x.is_zero() {
                    continue;
                }
                for c in 0..=self.r1 - a {
                    for d in 0..=self.r2 - b {
                        let y = other.coeff(c, d);
                        if y.is_zero() {
                            continue;
                        }
                        let term = x.clone() * y.clone();
                        let signed = if (b * c) % 2 == 1 { -term } else { term };
                        let slot = out.coeff_mut(a + c, b + d);
                        *slot = slot.clone() + signed;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `exp(x) = Σ x^k/k!`, finite because the argument must be nilpotent.
    pub fn exp(&self) -> Result<Self> {
        if !self.is_nilpotent() {
            return Err(AlgebraError::NotNilpotent);
        }
        let mut acc = BiTheta::constant(self.coeffs[0].one_like(), self.r1, self.r2);
        let mut power = acc.clone();
        for k in 1..=(self.r1 + self.r2) {
            power = power.try_mul(self).expect("orders agree");
            if power.is_zero() {
                break;
            }
            acc = acc + power.scale(&Rational::inv_factorial(k));
        }
        Ok(acc)
    }

    /// Relabels θ1 ↔ θ2 (result lives at orders `(r2, r1)`); renormalizing
    /// θ2^a θ1^b back to normal order costs the sign `(-1)^{ab}`.
    pub fn swap_variables(&self) -> BiTheta<C> {
        let mut out = BiTheta::constant(self.coeffs[0].zero_like(), self.r2, self.r1);
        for a in 0..=self.r1 {
            for b in 0..=self.r2 {
                let c = self.coeff(a, b).clone();
                *out.coeff_mut(b, a) = if (a * b) % 2 == 1 { -c } else { c };
            }
        }
        out
    }

    /// Bidegrees where `self` and `other` differ, with both coefficients.
    pub fn differences(&self, other: &Self) -> Vec<(usize, usize, C, C)> {
        assert_eq!((self.r1, self.r2), (other.r1, other.r2));
        let mut out = Vec::new();
        for a in 0..=self.r1 {
            for b in 0..=self.r2 {
                if self.coeff(a, b) != other.coeff(a, b) {
                    out.push((a, b, self.coeff(a, b).clone(), other.coeff(a, b).clone()));
                }
            }
        }
        out
    }
}

impl<C: Ring> Add for BiTheta<C> {
    type Output = BiTheta<C>;
    fn add(self, rhs: BiTheta<C>) -> BiTheta<C> {
        self.check_orders(&rhs).expect("bigraded order mismatch");
        BiTheta {
            r1: self.r1,
            r2: self.r2,
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<C: Ring> Sub for BiTheta<C> {
    type Output = BiTheta<C>;
    fn sub(self, rhs: BiTheta<C>) -> BiTheta<C> {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for BiTheta<C> {
    type Output = BiTheta<C>;
    fn neg(self) -> BiTheta<C> {
        BiTheta {
            r1: self.r1,
            r2: self.r2,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Ring> Mul for BiTheta<C> {
    type Output = BiTheta<C>;
    fn mul(self, rhs: BiTheta<C>) -> BiTheta<C> {
        self.try_mul(&rhs).expect("bigraded order mismatch")
    }
}

impl<C: Ring> Ring for BiTheta<C> {
    fn zero_like(&self) -> Self {
        BiTheta::constant(self.coeffs[0].zero_like(), self.r1, self.r2)
    }

    fn one_like(&self) -> Self {
        BiTheta::constant(self.coeffs[0].one_like(), self.r1, self.r2)
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn scale(&self, k: &Rational) -> Self {
        BiTheta {
            r1: self.r1,
            r2: self.r2,
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    // Unit iff the constant term is: x = c0 + n with n nilpotent, so
    // x^{-1} = (Σ_k (-c0^{-1} n)^k) c0^{-1}.
    fn try_inv(&self) -> Option<Self> {
        let c0_inv = self.coeffs[0].try_inv()?;
        let c0_inv = BiTheta::constant(c0_inv, self.r1, self.r2);
        let mut n = self.clone();
        n.coeffs[0] = n.coeffs[0].zero_like();
        let m = -(c0_inv.clone() * n);
        let mut series = self.one_like();
        let mut power = self.one_like();
        for _ in 0..(self.r1 + self.r2) {
            power = power * m.clone();
            if power.is_zero() {
                break;
            }
            series = series + power.clone();
        }
        Some(series * c0_inv)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for BiTheta<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for a in 0..=self.r1 {
            for b in 0..=self.r2 {
                let c = self.coeff(a, b);
                if c.is_zero() {
                    continue;
                }
                if !first {
                    write!(f, " + ")?;
                }
                first = false;
                if a == 0 && b == 0 {
                    write!(f, "{c}")?;
                    continue;
                }
                write!(f, "({c})")?;
                if a > 0 {
                    write!(f, "·θ1")?;
                    if a > 1 {
                        write!(f, "^{a}")?;
                    }
                }
                if b > 0 {
                    write!(f, "·θ2")?;
                    if b > 1 {
                        write!(f, "^{b}")?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for BiTheta<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "BiTheta(r1={}, r2={}, {:?})",
            self.r1, self.r2, self.coeffs
        )
    }
}

/// Serializes as nested JSON arrays of coefficient strings: one row per
/// θ1-power, one column per θ2-power.
impl<C: Ring + fmt::Display> serde::Serialize for BiTheta<C> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq((0..=self.r1).map(|a| {
            (0..=self.r2)
                .map(|b| self.coeff(a, b).to_string())
                .collect::<Vec<_>>()
        }))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn theta1(r1: usize, r2: usize) -> BiTheta<Rational> {
        BiTheta::monomial(Rational::one(), 1, 0, r1, r2)
    }

    fn theta2(r1: usize, r2: usize) -> BiTheta<Rational> {
        BiTheta::monomial(Rational::one(), 0, 1, r1, r2)
    }

    #[test]
    fn anticommutation() {
        let t1 = theta1(2, 2);
        let t2 = theta2(2, 2);
        assert!((t1.clone() * t2.clone() + t2.clone() * t1.clone()).is_zero());
        // θ1^2 commutes with θ2: two transpositions
        let t1sq = t1.clone() * t1.clone();
        assert!((t1sq.clone() * t2.clone() - t2 * t1sq).is_zero());
    }

    #[test]
    fn truncation() {
        let t1 = theta1(1, 1);
        assert!((t1.clone() * t1).is_zero());
        let t2 = theta2(3, 2);
        let t2cube = t2.clone() * t2.clone() * t2;
        assert!(t2cube.is_zero());
    }

    #[test]
    fn exp_of_nilpotent() {
        // exp(δ1 θ1) with r1 = 1: 1 + δ1 θ1
        let x = BiTheta::monomial(Rational::new(3, 7), 1, 0, 1, 1);
        let e = x.exp().unwrap();
        let expected = BiTheta::constant(Rational::one(), 1, 1)
            + BiTheta::monomial(Rational::new(3, 7), 1, 0, 1, 1);
        assert_eq!(e, expected);

        let bad = BiTheta::constant(Rational::one(), 1, 1);
        assert_eq!(bad.exp(), Err(AlgebraError::NotNilpotent));
    }

    #[test]
    fn inverse_of_unit() {
        let x = BiTheta::constant(Rational::new(2, 1), 2, 2)
            + BiTheta::monomial(Rational::one(), 1, 1, 2, 2);
        let inv = x.try_inv().unwrap();
        assert_eq!(x * inv, BiTheta::constant(Rational::one(), 2, 2));
        assert!(theta1(2, 2).try_inv().is_none());
    }

    #[test]
    fn swap_sign_bookkeeping() {
        // θ1 θ2 under the swap becomes θ2 θ1 = -θ1 θ2 (in the (r2, r1) ring)
        let x = BiTheta::monomial(Rational::one(), 1, 1, 2, 3);
        let y = x.swap_variables();
        assert_eq!(y.orders(), (3, 2));
        assert_eq!(y.coeff(1, 1), &Rational::from_int(-1));
    }
}
