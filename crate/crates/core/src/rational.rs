//! Arbitrary-precision integers and canonical rationals.
//!
//! `Rational` is the coefficient field for everything in this crate. Values
//! are always kept in lowest terms with a positive denominator, so structural
//! equality is arithmetic equality and text output is canonical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Signed arbitrary-precision integer.
pub type Integer = BigInt;

/// Exact rational number in canonical form: `gcd(|numer|, denom) = 1`,
/// `denom > 0`, and zero is `0/1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

impl Rational {
    /// Normalizes `numer/denom` into canonical form.
    pub fn new<N, D>(numer: N, denom: D) -> Result<Self>
    where
        N: Into<Integer>,
        D: Into<Integer>,
    {
        let denom = denom.into();
        if denom.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(BigRational::new(numer.into(), denom)))
    }

    pub fn from_integer<N: Into<Integer>>(n: N) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
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

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &Integer {
        self.0.numer()
    }

    pub fn denom(&self) -> &Integer {
        self.0.denom()
    }

    pub fn add(&self, other: &Rational) -> Rational {
        Rational(&self.0 + &other.0)
    }

    pub fn sub(&self, other: &Rational) -> Rational {
        Rational(&self.0 - &other.0)
    }

    pub fn mul(&self, other: &Rational) -> Rational {
        Rational(&self.0 * &other.0)
    }

    pub fn div(&self, other: &Rational) -> Result<Rational> {
        if other.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &other.0))
    }

    pub fn neg(&self) -> Rational {
        Rational(-&self.0)
    }

    /// Multiplicative inverse; errors on zero.
    pub fn inv(&self) -> Result<Rational> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Rational {
        Rational(num_traits::pow::pow(self.0.clone(), exp as usize))
    }

    /// Nearest double; large magnitudes saturate to ±inf.
    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
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
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidRational(s.to_string());
        let s = s.trim();
        match s.split_once('/') {
            Some((n, d)) => {
                let n = Integer::from_str(n.trim()).map_err(|_| bad())?;
                let d = Integer::from_str(d.trim()).map_err(|_| bad())?;
                Rational::new(n, d)
            }
            None => {
                let n = Integer::from_str(s).map_err(|_| bad())?;
                Ok(Rational::from_integer(n))
            }
        }
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_integer(n)
    }
}

macro_rules! forward_ref_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational::$method(self, rhs)
            }
        }
    };
}

forward_ref_binop!(Add, add);
forward_ref_binop!(Sub, sub);
forward_ref_binop!(Mul, mul);

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(n: i64, d: i64) -> Rational {
        Rational::new(n, d).unwrap()
    }

    #[test]
    fn normalizes_to_lowest_terms() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(2, 4).numer(), &Integer::from(1));
        assert_eq!(rat(2, 4).denom(), &Integer::from(2));
    }

    #[test]
    fn sign_carried_by_numerator() {
        assert_eq!(rat(-3, -6), rat(1, 2));
        assert_eq!(rat(3, -6).numer(), &Integer::from(-1));
        assert_eq!(rat(3, -6).denom(), &Integer::from(2));
    }

    #[test]
    fn canonical_zero() {
        let z = rat(0, 7);
        assert!(z.is_zero());
        assert_eq!(z.denom(), &Integer::from(1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(Rational::new(1, 0), Err(Error::DivisionByZero)));
    }

    #[test]
    fn field_examples() {
        assert_eq!(rat(1, 2).add(&rat(1, 3)), rat(5, 6));
        assert_eq!(rat(2, 3).mul(&rat(3, 2)), Rational::one());
        assert_eq!(rat(-2, 5).inv().unwrap(), rat(-5, 2));
        assert!(matches!(Rational::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn display_form() {
        assert_eq!(rat(-3, 4).to_string(), "-3/4");
        assert_eq!(rat(8, 4).to_string(), "2");
        assert_eq!(Rational::zero().to_string(), "0");
    }

    #[test]
    fn parses_both_forms() {
        assert_eq!("-3/4".parse::<Rational>().unwrap(), rat(-3, 4));
        assert_eq!("10".parse::<Rational>().unwrap(), rat(10, 1));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-1000i64..=1000, 1i64..=60).prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rational(), b in arb_rational(), c in arb_rational()) {
            prop_assert_eq!(a.add(&b), b.add(&a));
            prop_assert_eq!(a.mul(&b), b.mul(&a));
            prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
            prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
            if !a.is_zero() {
                prop_assert_eq!(a.mul(&a.inv().unwrap()), Rational::one());
            }
        }

        #[test]
        fn normalize_idempotent(a in arb_rational()) {
            let renorm = Rational::new(a.numer().clone(), a.denom().clone()).unwrap();
            prop_assert_eq!(&renorm, &a);
        }

        #[test]
        fn text_round_trip(a in arb_rational()) {
            prop_assert_eq!(a.to_string().parse::<Rational>().unwrap(), a);
        }
    }
}
