//! Polynomials in the formal symbol λ (standing in for 2πn) with `HPoly`
//! coefficients. π is never evaluated; λ-asymptotics are read off the
//! leading coefficient.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::hpoly::HPoly;
use crate::rational::Rational;
use crate::ring::Ring;

/// `coeffs[k]` is the `HPoly` coefficient of λ^k; trailing zeros trimmed.
#[derive(Clone, PartialEq)]
pub struct LambdaPoly {
    coeffs: Vec<HPoly>,
}

impl LambdaPoly {
    pub fn zero() -> Self {
        LambdaPoly { coeffs: vec![] }
    }

    pub fn constant(p: HPoly) -> Self {
        LambdaPoly { coeffs: vec![p] }.trimmed()
    }

    /// `p(H)·λ^k`.
    pub fn monomial(p: HPoly, k: usize) -> Self {
        if p.is_zero() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![HPoly::zero(); k + 1];
        coeffs[k] = p;
        LambdaPoly { coeffs }
    }

    /// λ·H, the scaled Cartan symbol entering the unit-circle trig series.
    pub fn lambda_h() -> Self {
        LambdaPoly::monomial(HPoly::h(), 1)
    }

    /// λ alone.
    pub fn lambda() -> Self {
        LambdaPoly::monomial(HPoly::one(), 1)
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(HPoly::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    /// λ-degree, `-1` for zero.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coeff(&self, k: usize) -> HPoly {
        self.coeffs.get(k).cloned().unwrap_or_else(HPoly::zero)
    }

    /// Leading λ-coefficient, `None` for zero.
    pub fn leading(&self) -> Option<&HPoly> {
        self.coeffs.last()
    }
}

impl Add for LambdaPoly {
    type Output = LambdaPoly;
    fn add(self, rhs: LambdaPoly) -> LambdaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        LambdaPoly { coeffs }.trimmed()
    }
}

impl Sub for LambdaPoly {
    type Output = LambdaPoly;
    fn sub(self, rhs: LambdaPoly) -> LambdaPoly {
        self + (-rhs)
    }
}

impl Neg for LambdaPoly {
    type Output = LambdaPoly;
    fn neg(self) -> LambdaPoly {
        LambdaPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for LambdaPoly {
    type Output = LambdaPoly;
    fn mul(self, rhs: LambdaPoly) -> LambdaPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return LambdaPoly::zero();
        }
        let mut coeffs = vec![HPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        LambdaPoly { coeffs }.trimmed()
    }
}

impl Ring for LambdaPoly {
    fn zero_like(&self) -> Self {
        LambdaPoly::zero()
    }

    fn one_like(&self) -> Self {
        LambdaPoly::constant(HPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return LambdaPoly::zero();
        }
        LambdaPoly {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    fn try_inv(&self) -> Option<Self> {
        if self.degree() == 0 {
            self.coeffs[0].try_inv().map(LambdaPoly::constant)
        } else {
            None
        }
    }
}

impl fmt::Display for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·λ")?,
                _ => write!(f, "({c})·λ^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LambdaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_bookkeeping() {
        assert_eq!(LambdaPoly::zero().degree(), -1);
        assert_eq!(LambdaPoly::lambda().degree(), 1);
        let p = LambdaPoly::lambda_h() * LambdaPoly::lambda_h();
        assert_eq!(p.degree(), 2);
        assert_eq!(p.coeff(2), HPoly::h() * HPoly::h());
        // cancellation trims degree
        let q = LambdaPoly::lambda() - LambdaPoly::lambda();
        assert_eq!(q.degree(), -1);
    }
}
