//! Exact rational scalars.
//!
//! Everything in this crate is computed over `BigRational`; this module holds
//! the literal grammar (`[+-]digits[/digits]`, surrounding whitespace allowed)
//! and a few constructors that keep call sites short.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Exact fraction in canonical form (reduced, positive denominator).
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed rational literal {literal:?}")]
pub struct ParseRationalError {
    pub literal: String,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p/q`, reduced. Panics on `q == 0`.
pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        literal: text.to_string(),
    };
    let trimmed = text.trim();
    let (num, den) = match trimmed.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (trimmed, None),
    };
    let numer = parse_signed_integer(num).ok_or_else(err)?;
    let denom = match den {
        None => BigInt::from(1),
        Some(d) if !d.is_empty() && d.bytes().all(|b| b.is_ascii_digit()) => {
            d.parse::<BigInt>().map_err(|_| err())?
        }
        Some(_) => return Err(err()),
    };
    if denom.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(numer, denom))
}

fn parse_signed_integer(text: &str) -> Option<BigInt> {
    let digits = text.strip_prefix(['+', '-']).unwrap_or(text);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let value: BigInt = digits.parse().ok()?;
    Some(if text.starts_with('-') { -value } else { value })
}

/// Renders as `p/q`, or `p` for integers. Inverse of [`parse_rational`].
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn sign(value: &Rational) -> Ordering {
    if value.is_zero() {
        Ordering::Equal
    } else if value.is_positive() {
        Ordering::Greater
    } else {
        Ordering::Less
    }
}

/// Nearest `f64`; only used at presentation boundaries.
pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or_else(|| {
        if value.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// `#[serde(with = ...)]` adapter writing rationals as `"p/q"` strings.
pub(crate) mod serde_rational {
    use super::{format_rational, Rational};
    use serde::Serializer;

    pub fn serialize<S: Serializer>(value: &Rational, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(value))
    }
}
