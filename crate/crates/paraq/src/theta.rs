//! Truncated series in one central nilpotent variable θ with θ^{r+1} = 0.
//!
//! `ThetaSeries<C>` is the quotient ring `C[θ]/(θ^{r+1})`: multiplication is
//! the Cauchy product with every term of θ-degree above `r` discarded. θ
//! commutes with all coefficients, so the coefficient ring `C` is free to be
//! noncommutative (matrices). The truncated exponential and trigonometric
//! maps live here, together with the faithful shift-matrix realization of θ
//! that cross-checks the whole ring arithmetic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{AlgebraError, Result};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::ring::Ring;

/// `c_0 + c_1 θ + … + c_r θ^r` over the coefficient ring `C`.
#[derive(Clone, PartialEq)]
pub struct ThetaSeries<C: Ring> {
    coeffs: Vec<C>,
}

impl<C: Ring> ThetaSeries<C> {
    /// Build from the full coefficient list `c_0 … c_r` (so the order is
    /// `coeffs.len() - 1`).
    pub fn from_coeffs(coeffs: Vec<C>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least the θ^0 term");
        ThetaSeries { coeffs }
    }

    /// The constant series `c` at truncation order `order`.
    pub fn constant(c: C, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        ThetaSeries { coeffs }
    }

    /// `c·θ^k`; degrees above the order collapse to zero by nilpotency.
    pub fn monomial(c: C, k: usize, order: usize) -> Self {
        let mut s = ThetaSeries::constant(c.zero_like(), order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Truncation order `r`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &C {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> &C {
        &self.coeffs[0]
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        Ok(())
    }

    /// Cauchy product truncated at the common order.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let r = self.order();
        let zero = self.coeffs[0].zero_like();
        let mut coeffs = vec![zero; r + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > r {
                    break;
                }
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(ThetaSeries { coeffs })
    }

    /// Multiplicative inverse by triangular back-substitution on θ-degrees.
    /// Errors unless the constant term is a unit of `C`.
    pub fn invert(&self) -> Result<Self> {
        let c0_inv = self.coeffs[0].try_inv().ok_or(AlgebraError::NotAUnit)?;
        let r = self.order();
        let mut out = vec![self.coeffs[0].zero_like(); r + 1];
        out[0] = c0_inv.clone();
        for k in 1..=r {
            let mut acc = self.coeffs[0].zero_like();
            for i in 1..=k {
                acc = acc + self.coeffs[i].clone() * out[k - i].clone();
            }
            out[k] = -(c0_inv.clone() * acc);
        }
        Ok(ThetaSeries { coeffs: out })
    }

    /// Truncated exponential `e(x;θ) = Σ_{k≤r} x^k θ^k / k!`.
    pub fn exp(x: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut xk = x.one_like();
        for k in 0..=order {
            coeffs.push(xk.scale(&Rational::inv_factorial(k)));
            if k < order {
                xk = xk * x.clone();
            }
        }
        ThetaSeries { coeffs }
    }

    /// Truncated cosine `Σ (-1)^k x^{2k} θ^{2k} / (2k)!` over `2k ≤ r`.
    pub fn cos(x: &C, order: usize) -> Self {
        let mut s = ThetaSeries::constant(x.zero_like(), order);
        let x2 = x.clone() * x.clone();
        let mut xk = x.one_like();
        let mut k = 0;
        while 2 * k <= order {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = Rational::inv_factorial(2 * k).scale(&Rational::from_int(sign));
            s.coeffs[2 * k] = xk.scale(&c);
            xk = xk * x2.clone();
            k += 1;
        }
        s
    }

    /// Truncated sine `Σ (-1)^k x^{2k+1} θ^{2k+1} / (2k+1)!` over `2k+1 ≤ r`.
    pub fn sin(x: &C, order: usize) -> Self {
        let mut s = ThetaSeries::constant(x.zero_like(), order);
        let x2 = x.clone() * x.clone();
        let mut xk = x.clone();
        let mut k = 0;
        while 2 * k + 1 <= order {
            let sign = if k % 2 == 0 { 1 } else { -1 };
            let c = Rational::inv_factorial(2 * k + 1).scale(&Rational::from_int(sign));
            s.coeffs[2 * k + 1] = xk.scale(&c);
            xk = xk * x2.clone();
            k += 1;
        }
        s
    }

    pub fn map<D: Ring>(&self, f: impl Fn(&C) -> D) -> ThetaSeries<D> {
        ThetaSeries {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

/// The (r+1)×(r+1) subdiagonal shift matrix realizing θ.
pub fn theta_shift_matrix(order: usize) -> Matrix<Rational> {
    Matrix::from_fn(order + 1, |i, j| {
        if i == j + 1 {
            Rational::one()
        } else {
            Rational::zero()
        }
    })
}

/// Ring homomorphism onto lower-triangular Toeplitz matrices: θ maps to the
/// shift matrix, so `c_0 + c_1θ + …` maps to the matrix with `c_{i-j}` at
/// `(i, j)`. Injective, and multiplicative because the shift is nilpotent of
/// exactly the right order.
pub fn ts_to_matrix<C: Ring>(a: &ThetaSeries<C>) -> Matrix<C> {
    let zero = a.coeff(0).zero_like();
    Matrix::from_fn(a.order() + 1, |i, j| {
        if i >= j {
            a.coeff(i - j).clone()
        } else {
            zero.clone()
        }
    })
}

impl<C: Ring> Add for ThetaSeries<C> {
    type Output = ThetaSeries<C>;
    fn add(self, rhs: ThetaSeries<C>) -> ThetaSeries<C> {
        self.check_order(&rhs).expect("θ-series order mismatch");
        ThetaSeries {
            coeffs: self
                .coeffs
                .into_iter()
                .zip(rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl<C: Ring> Sub for ThetaSeries<C> {
    type Output = ThetaSeries<C>;
    fn sub(self, rhs: ThetaSeries<C>) -> ThetaSeries<C> {
        self + (-rhs)
    }
}

impl<C: Ring> Neg for ThetaSeries<C> {
    type Output = ThetaSeries<C>;
    fn neg(self) -> ThetaSeries<C> {
        ThetaSeries {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl<C: Ring> Mul for ThetaSeries<C> {
    type Output = ThetaSeries<C>;
    fn mul(self, rhs: ThetaSeries<C>) -> ThetaSeries<C> {
        self.try_mul(&rhs).expect("θ-series order mismatch")
    }
}

impl<C: Ring> Ring for ThetaSeries<C> {
    fn zero_like(&self) -> Self {
        ThetaSeries::constant(self.coeffs[0].zero_like(), self.order())
    }

    fn one_like(&self) -> Self {
        ThetaSeries::constant(self.coeffs[0].one_like(), self.order())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn scale(&self, k: &Rational) -> Self {
        ThetaSeries {
            coeffs: self.coeffs.iter().map(|c| c.scale(k)).collect(),
        }
    }

    fn try_inv(&self) -> Option<Self> {
        self.invert().ok()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for ThetaSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})·θ")?,
                _ => write!(f, "({c})·θ^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for ThetaSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ThetaSeries(r={}, {:?})", self.order(), self.coeffs)
    }
}

/// Serializes as a JSON array of coefficient strings, constant term first.
impl<C: Ring + fmt::Display> serde::Serialize for ThetaSeries<C> {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.coeffs.iter().map(|c| c.to_string()))
    }
}
