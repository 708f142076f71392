//! Arbitrary-precision exact rational scalars.
//!
//! Every quantity in this crate bottoms out in [`Rational`]; there is no
//! floating point anywhere. Values cross text boundaries (CLI flags, JSON
//! reports) as `"p/q"` strings.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::AlgebraError;

/// An exact rational number in canonical form: positive denominator,
/// numerator and denominator coprime. Canonicalization is maintained by
/// the backing [`BigRational`] on every operation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// `p/q` with `q != 0`. Panics on a zero denominator; use [`FromStr`]
    /// for fallible construction from text.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Rational(self.0.recip()))
        }
    }

    /// Exact integer power with negative exponents allowed (base must be
    /// nonzero for those).
    pub fn pow(&self, exp: i64) -> Self {
        if exp == 0 {
            return Rational::one();
        }
        if exp < 0 {
            assert!(!self.is_zero(), "negative power of zero");
        }
        Rational(
            self.0
                .pow(i32::try_from(exp).expect("exponent fits in i32")),
        )
    }

    /// 1/n! as an exact rational.
    pub fn inv_factorial(n: usize) -> Self {
        let mut f = BigInt::one();
        for k in 2..=n {
            f *= BigInt::from(k);
        }
        Rational(BigRational::new(BigInt::one(), f))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let parse_int =
            |x: &str| BigInt::from_str(x.trim()).map_err(|_| AlgebraError::ParseRational(s.into()));
        match t.split_once('/') {
            Some((p, q)) => {
                let num = parse_int(p)?;
                let den = parse_int(q)?;
                if den.is_zero() {
                    return Err(AlgebraError::ParseRational(s.into()));
                }
                Ok(Rational(BigRational::new(num, den)))
            }
            None => Ok(Rational(BigRational::from_integer(parse_int(t)?))),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational((self.0).$method(rhs.0))
            }
        }
        impl $trait<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Rational {
    type Output = Rational;
    fn div(self, rhs: Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(self.0 / rhs.0)
    }
}

impl Div<&Rational> for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        Rational(&self.0 / &rhs.0)
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        self.0 -= rhs.0;
    }
}

impl MulAssign for Rational {
    fn mul_assign(&mut self, rhs: Rational) {
        self.0 *= rhs.0;
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl serde::Serialize for Rational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let a: Rational = "6/-8".parse().unwrap();
        assert_eq!(a, Rational::new(-3, 4));
        assert_eq!(a.to_string(), "-3/4");
        assert!(a.denom() > &BigInt::zero());
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "5", "-3", "1/2", "-7/3", "17/5"] {
            let r: Rational = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rational>().is_err());
        assert!("abc".parse::<Rational>().is_err());
        assert!("".parse::<Rational>().is_err());
    }

    #[test]
    fn exact_field_ops() {
        let a = Rational::new(1, 3);
        let b = Rational::new(1, 6);
        assert_eq!(&a + &b, Rational::new(1, 2));
        assert_eq!(&a - &b, Rational::new(1, 6));
        assert_eq!(&a * &b, Rational::new(1, 18));
        assert_eq!(&a / &b, Rational::from_int(2));
        assert_eq!(a.inv().unwrap(), Rational::from_int(3));
        assert_eq!(Rational::zero().inv(), None);
    }

    #[test]
    fn powers_and_factorials() {
        assert_eq!(Rational::from_int(2).pow(-2), Rational::new(1, 4));
        assert_eq!(Rational::from_int(2).pow(0), Rational::one());
        assert_eq!(Rational::inv_factorial(0), Rational::one());
        assert_eq!(Rational::inv_factorial(4), Rational::new(1, 24));
    }
}
