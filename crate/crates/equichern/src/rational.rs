//! Exact rational scalars and their `"p/q"` wire format.
//!
//! Every numeric value flowing through the crate is a [`Rat`]
//! (arbitrary-precision rational). JSON files and CLI output carry
//! rationals as strings in lowest terms with positive denominator,
//! omitting the denominator when it is 1: `"3"`, `"-1/4"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `p/q` from two integers; `q` must be nonzero.
pub fn ratio(p: i64, q: i64) -> Rat {
    Rat::new(BigInt::from(p), BigInt::from(q))
}

/// Render in lowest terms with positive denominator, `"p"` when `q == 1`.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parse `"p"` or `"p/q"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let bad = || Error::MalformedRational(s.to_string());
    let mut parts = s.splitn(2, '/');
    let p: BigInt = parts
        .next()
        .ok_or_else(bad)?
        .trim()
        .parse()
        .map_err(|_| bad())?;
    match parts.next() {
        None => Ok(Rat::from_integer(p)),
        Some(q) => {
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rat::new(p, q))
        }
    }
}

/// True when the rational is a (possibly negative) integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// Exact integer power with a signed base.
pub fn int_pow(base: i64, exp: u32) -> BigInt {
    BigInt::from(base).pow(exp)
}

/// Sign-aware absolute value helper used by formatters.
pub fn abs(x: &Rat) -> Rat {
    x.abs()
}
