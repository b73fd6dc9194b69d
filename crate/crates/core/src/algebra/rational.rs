//! Arbitrary-precision rationals.
//!
//! `BigRat` is the scalar type of the whole exact layer. `num-rational`
//! already maintains the invariants we need (reduced fraction, positive
//! denominator), so this module only adds the small helpers used
//! throughout the crate.

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

pub use num_rational::BigRational as BigRat;

use crate::error::AlgebraError;

/// Shorthand constructor for small rationals.
pub fn rat(num: i64, den: i64) -> BigRat {
    BigRat::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand constructor for small integers.
pub fn rat_int(n: i64) -> BigRat {
    BigRat::from_integer(BigInt::from(n))
}

/// Parses `"p/q"` or `"p"` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRat, AlgebraError> {
    let s = s.trim();
    let parse_int = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| AlgebraError::RationalParse(s.to_string()))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den.is_zero() {
                return Err(AlgebraError::RationalParse(s.to_string()));
            }
            Ok(BigRat::new(num, den))
        }
        None => Ok(BigRat::from_integer(parse_int(s)?)),
    }
}

/// Converts to `f64` without overflowing on huge numerator/denominator pairs.
///
/// The direct `to_f64` on numerator and denominator turns into `inf/inf`
/// once either side exceeds the `f64` range; solved coefficients at fixed
/// rational `c` reach hundreds of digits long before their *values* leave
/// the comfortable double range, so both sides are pre-shifted into range
/// and the (exact) power of two is reapplied at the end.
pub fn rat_to_f64(q: &BigRat) -> f64 {
    if q.is_zero() {
        return 0.0;
    }
    let num = q.numer();
    let den = q.denom();
    let shift_num = num.bits().saturating_sub(63) as i64;
    let shift_den = den.bits().saturating_sub(63) as i64;
    let n = (num >> shift_num).to_f64().unwrap_or(f64::NAN);
    let d = (den >> shift_den).to_f64().unwrap_or(f64::NAN);
    (n / d) * 2f64.powi((shift_num - shift_den) as i32)
}

/// Sign of a rational as -1, 0 or +1.
pub fn rat_sign(q: &BigRat) -> i32 {
    if q.is_zero() {
        0
    } else if q.is_positive() {
        1
    } else {
        -1
    }
}

/// True when the rational is an integer.
pub fn is_integer(q: &BigRat) -> bool {
    q.denom().magnitude().to_u32_digits() == [1]
}

/// Integer value of an integer-valued rational.
pub fn to_bigint(q: &BigRat) -> Option<BigInt> {
    if is_integer(q) {
        Some(q.numer().clone())
    } else {
        None
    }
}

/// Sign helper for `BigInt`.
pub fn int_sign(n: &BigInt) -> i32 {
    match n.sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_integers() {
        assert_eq!(parse_rational("7/10").unwrap(), rat(7, 10));
        assert_eq!(parse_rational("-3").unwrap(), rat_int(-3));
        assert_eq!(parse_rational(" 6/4 ").unwrap(), rat(3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a/b").is_err());
    }

    #[test]
    fn f64_conversion_handles_huge_terms() {
        // ~200-digit numerator and denominator whose ratio is small
        let big = BigInt::from(10u32).pow(200u32);
        let q = BigRat::new(big.clone() * 3, big * 7);
        let v = rat_to_f64(&q);
        assert!((v - 3.0 / 7.0).abs() < 1e-15);
        assert_eq!(rat_to_f64(&rat(-1, 4)), -0.25);
        assert_eq!(rat_to_f64(&BigRat::zero()), 0.0);
    }
}
