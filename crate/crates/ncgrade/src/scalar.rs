//! Exact rational scalars.
//!
//! All coefficient arithmetic in the workbench is exact: a scalar is a
//! reduced fraction of arbitrary-precision integers with positive
//! denominator. Scalars print and parse as `p` or `p/q`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact rational number in lowest terms with positive denominator.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Scalar(BigRational);

impl Scalar {
    /// The scalar zero.
    pub fn zero() -> Self {
        Scalar(BigRational::zero())
    }

    /// The scalar one.
    pub fn one() -> Self {
        Scalar(BigRational::one())
    }

    /// Builds `num/den`, reducing to lowest terms. Errors if `den` is zero.
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar(BigRational::new(BigInt::from(num), BigInt::from(den))))
    }

    /// The integer `n` as a scalar.
    pub fn from_int(n: i64) -> Self {
        Scalar(BigRational::from_integer(BigInt::from(n)))
    }

    /// True iff this scalar is zero.
    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    /// True iff this scalar is one.
    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    /// True iff this scalar is a (nonnegative or negative) integer.
    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    /// Multiplicative inverse. Errors on zero.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Scalar(self.0.recip()))
    }

    /// Numerator of the reduced fraction.
    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    /// Denominator of the reduced fraction (always positive).
    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Parses `p` or `p/q` with optional leading minus signs.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadScalar(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            None => {
                let n = BigInt::from_str(s).map_err(|_| bad())?;
                Ok(Scalar(BigRational::from_integer(n)))
            }
            Some((p, q)) => {
                let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
                let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
                if q.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Scalar(BigRational::new(p, q)))
            }
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                Scalar((&self.0).$method(&rhs.0))
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero scalar");
        Scalar(self.0 / rhs.0)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-self.0)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar(-&self.0)
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        self.0 *= &rhs.0;
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

/// Signum as -1, 0, or 1; handy for display decisions.
pub fn signum(s: &Scalar) -> i8 {
    if s.is_zero() {
        0
    } else if s.0.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!("7".parse::<Scalar>().unwrap(), Scalar::from_int(7));
        assert_eq!("-3".parse::<Scalar>().unwrap(), Scalar::from_int(-3));
        assert_eq!("2/4".parse::<Scalar>().unwrap(), Scalar::new(1, 2).unwrap());
        assert_eq!("-2/-4".parse::<Scalar>().unwrap(), Scalar::new(1, 2).unwrap());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("x".parse::<Scalar>().is_err());
    }

    #[test]
    fn denominator_stays_positive_and_reduced() {
        let s = Scalar::new(4, -6).unwrap();
        assert_eq!(s.to_string(), "-2/3");
        assert!(s.denom() > &num_bigint::BigInt::from(0));
    }

    #[test]
    fn display_round_trips() {
        for lit in ["0", "1", "-1", "5/3", "-7/2", "12"] {
            let s: Scalar = lit.parse().unwrap();
            assert_eq!(s.to_string(), lit);
            assert_eq!(lit.parse::<Scalar>().unwrap(), s);
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = Scalar::new(1, 2).unwrap();
        let b = Scalar::new(1, 3).unwrap();
        assert_eq!((&a + &b).to_string(), "5/6");
        assert_eq!((&a - &b).to_string(), "1/6");
        assert_eq!((&a * &b).to_string(), "1/6");
        assert_eq!((a.clone() / b).to_string(), "3/2");
        assert_eq!(a.inverse().unwrap().to_string(), "2");
        assert!(Scalar::zero().inverse().is_err());
    }
}
