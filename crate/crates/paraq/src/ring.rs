//! The coefficient-ring abstraction shared by every algebra in this crate.
//!
//! Truncated series ([`crate::theta::ThetaSeries`], [`crate::bitheta::BiTheta`])
//! and dense matrices are generic over their coefficients. Coefficients form a
//! ring with an exact action of [`Rational`] (needed for terms like `x^k/k!`),
//! and need not be commutative: matrices are legal coefficients.
//!
//! Elements carry their own shape (a matrix knows its dimension, a series its
//! truncation order), so zero and one are derived from a witness value via
//! `zero_like`/`one_like` instead of nullary constructors.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

pub trait Ring:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    /// Additive identity of the same shape as `self`.
    fn zero_like(&self) -> Self;

    /// Multiplicative identity of the same shape as `self`.
    fn one_like(&self) -> Self;

    fn is_zero(&self) -> bool;

    /// Exact scalar action of ℚ.
    fn scale(&self, k: &Rational) -> Self;

    /// Multiplicative inverse, `None` if `self` is not a unit.
    fn try_inv(&self) -> Option<Self>;

    fn pow(&self, n: usize) -> Self {
        let mut acc = self.one_like();
        for _ in 0..n {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Ring for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }

    fn scale(&self, k: &Rational) -> Self {
        self * k
    }

    fn try_inv(&self) -> Option<Self> {
        self.inv()
    }
}

/// Commutator `[a, b] = ab - ba`.
pub fn commutator<R: Ring>(a: &R, b: &R) -> R {
    a.clone() * b.clone() - b.clone() * a.clone()
}
