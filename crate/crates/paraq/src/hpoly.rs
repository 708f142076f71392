//! Dense univariate polynomials in the formal Cartan symbol `H`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::rational::Rational;
use crate::ring::Ring;

/// Polynomial in `H` with exact rational coefficients, stored densely with
/// `coeffs[k]` the coefficient of `H^k`. Trailing zeros are always trimmed;
/// the zero polynomial has an empty coefficient list and degree `-1`.
#[derive(Clone, PartialEq, Eq)]
pub struct HPoly {
    coeffs: Vec<Rational>,
}

impl HPoly {
    pub fn zero() -> Self {
        HPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        HPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        HPoly { coeffs: vec![c] }.trimmed()
    }

    /// The monomial `H`.
    pub fn h() -> Self {
        HPoly {
            coeffs: vec![Rational::zero(), Rational::one()],
        }
    }

    /// `c * H^k`.
    pub fn monomial(c: Rational, k: usize) -> Self {
        if c.is_zero() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        HPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<Rational>) -> Self {
        HPoly { coeffs }.trimmed()
    }

    fn trimmed(mut self) -> Self {
        while self.coeffs.last().is_some_and(Rational::is_zero) {
            self.coeffs.pop();
        }
        self
    }

    /// Degree, with `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    /// Coefficient of `H^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, x: &Rational) -> Rational {
        self.eval_in(x)
    }

    /// Horner evaluation in any ring carrying a ℚ-action. Evaluating at a
    /// matrix substitutes it for `H`; evaluating at `HPoly::h()` is the
    /// identity; evaluating at another polynomial composes.
    pub fn eval_in<R: Ring>(&self, x: &R) -> R {
        let mut acc = x.zero_like();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + x.one_like().scale(c);
        }
        acc
    }

    /// The reflection `p(-H)`.
    pub fn reflected(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
            .collect();
        HPoly { coeffs }
    }
}

impl Add for HPoly {
    type Output = HPoly;
    fn add(self, rhs: HPoly) -> HPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        HPoly { coeffs }.trimmed()
    }
}

impl Sub for HPoly {
    type Output = HPoly;
    fn sub(self, rhs: HPoly) -> HPoly {
        self + (-rhs)
    }
}

impl Neg for HPoly {
    type Output = HPoly;
    fn neg(self) -> HPoly {
        HPoly {
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for HPoly {
    type Output = HPoly;
    fn mul(self, rhs: HPoly) -> HPoly {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return HPoly::zero();
        }
        let mut coeffs = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        HPoly { coeffs }.trimmed()
    }
}

impl Ring for HPoly {
    fn zero_like(&self) -> Self {
        HPoly::zero()
    }

    fn one_like(&self) -> Self {
        HPoly::one()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn scale(&self, k: &Rational) -> Self {
        if k.is_zero() {
            return HPoly::zero();
        }
        HPoly {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    // Units of ℚ[H] are the nonzero constants.
    fn try_inv(&self) -> Option<Self> {
        if self.degree() == 0 {
            self.coeffs[0].inv().map(HPoly::constant)
        } else {
            None
        }
    }
}

/// Renders with denominators factored out: `(3*H^5 - 10*H^3 + 7*H)/360`.
impl fmt::Display for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let den = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let mut body = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let int_coeff = c.numer() * (&den / c.denom());
            let mag = int_coeff.magnitude();
            if body.is_empty() {
                if int_coeff.sign() == num_bigint::Sign::Minus {
                    body.push('-');
                }
            } else if int_coeff.sign() == num_bigint::Sign::Minus {
                body.push_str(" - ");
            } else {
                body.push_str(" + ");
            }
            let show_coeff = !mag.is_one() || k == 0;
            if show_coeff {
                body.push_str(&mag.to_string());
            }
            if k > 0 {
                if show_coeff {
                    body.push('*');
                }
                body.push('H');
                if k > 1 {
                    body.push_str(&format!("^{k}"));
                }
            }
        }
        if den.is_one() {
            write!(f, "{body}")
        } else if self.coeffs.iter().filter(|c| !c.is_zero()).count() == 1 {
            write!(f, "{body}/{den}")
        } else {
            write!(f, "({body})/{den}")
        }
    }
}

impl fmt::Debug for HPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
