//! Scalar abstraction shared by the exact and the floating-point layers.
//!
//! Matrices and polynomials are generic over [`Scalar`]. Algorithms that rely
//! on exact zero tests (rank, nullspace, gcd, rational roots) additionally
//! require [`ExactScalar`], which only the arbitrary-precision rationals
//! implement.

use std::fmt::{Debug, Display};
use std::ops::Neg;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in canonical (reduced, positive
/// denominator) form.
pub type Rational = BigRational;

/// Ring/field element usable as a matrix or polynomial coefficient.
pub trait Scalar:
    Num
    + Clone
    + Debug
    + Display
    + PartialOrd
    + Neg<Output = Self>
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    fn from_int(v: i64) -> Self {
        Self::from_i64(v).expect("every scalar type represents small integers")
    }

    fn to_f64_lossy(&self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }

    fn abs_val(&self) -> Self {
        if *self < Self::zero() {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
impl Scalar for Rational {}

/// Marker for scalars whose arithmetic is exact, so `is_zero` is a reliable
/// test and elimination never loses information.
pub trait ExactScalar: Scalar + Ord + Signed + std::hash::Hash {}

impl ExactScalar for Rational {}

/// `n/d` as a rational. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// The integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into canonical form.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n = BigInt::from_str(num).map_err(|_| bad())?;
    let d = BigInt::from_str(den).map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact rational value of a finite float.
pub fn rational_from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

/// Least common multiple of the denominators of `values`.
pub fn denominator_lcm<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))
}

/// Gcd of the numerators of `values` (zero when all are zero).
pub fn numerator_gcd<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::zero(), |acc, v| acc.gcd(v.numer()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_are_canonical() {
        assert_eq!(format_rational(&parse_rational("2/4").unwrap()), "1/2");
        assert_eq!(format_rational(&parse_rational("-6/3").unwrap()), "-2");
        assert_eq!(format_rational(&parse_rational("3/-4").unwrap()), "-3/4");
        assert_eq!(format_rational(&parse_rational(" 7 ").unwrap()), "7");
        assert_eq!(format_rational(&int(0)), "0");
    }

    #[test]
    fn parse_rejects_garbage_and_zero_denominator() {
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("1.5").is_err());
    }

    #[test]
    fn float_conversion_is_exact() {
        assert_eq!(rational_from_f64(0.75), rat(3, 4));
        assert_eq!(rat(1, 3).to_f64_lossy(), 1.0 / 3.0);
    }
}
