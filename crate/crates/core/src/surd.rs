//! Quadratic irrationals `r + c·√d` and fixed-precision decimal rendering.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{int, sign, Rational};

/// Significant digits used for every decimal field.
pub const DECIMAL_DIGITS: usize = 12;

/// Digits carried by the internal fixed-point approximation.
const WORKING_DIGITS: u32 = 40;

/// `rational + coeff·√radicand` with `radicand > 0` not a rational square.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    pub rational: Rational,
    pub coeff: Rational,
    pub radicand: Rational,
}

/// Exact `√x` when `x ≥ 0` is the square of a rational.
pub fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let n = x.numer().sqrt();
    let d = x.denom().sqrt();
    (&n * &n == *x.numer() && &d * &d == *x.denom()).then(|| Rational::new(n, d))
}

impl QuadraticSurd {
    /// Exact sign of the value.
    pub fn sign(&self) -> Ordering {
        let r = sign(&self.rational);
        let c = sign(&self.coeff);
        if c == Ordering::Equal {
            return r;
        }
        if r == Ordering::Equal || r == c {
            return c;
        }
        // opposite signs: compare r² with c²·d
        let lhs = &self.rational * &self.rational;
        let rhs = &self.coeff * &self.coeff * &self.radicand;
        match lhs.cmp(&rhs) {
            Ordering::Greater => r,
            Ordering::Less => c,
            Ordering::Equal => Ordering::Equal,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Ordering::Greater
    }

    /// Exact comparison with a rational.
    pub fn cmp_rational(&self, x: &Rational) -> Ordering {
        QuadraticSurd {
            rational: &self.rational - x,
            coeff: self.coeff.clone(),
            radicand: self.radicand.clone(),
        }
        .sign()
    }

    pub fn approx(&self) -> Rational {
        let root = fixed_sqrt(&self.radicand);
        &self.rational + &self.coeff * root
    }

    pub fn to_decimal(&self) -> String {
        format_significant(&self.approx(), DECIMAL_DIGITS)
    }

    /// Decimal rendering of `√(self)`; requires a positive value.
    pub fn sqrt_decimal(&self) -> String {
        format_significant(&fixed_sqrt(&self.approx()), DECIMAL_DIGITS)
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + ({})·√({})", self.rational, self.coeff, self.radicand)
    }
}

fn scale() -> BigInt {
    num_traits::pow(BigInt::from(10), WORKING_DIGITS as usize)
}

/// `√x` truncated to `WORKING_DIGITS` fractional digits; `x ≥ 0`.
fn fixed_sqrt(x: &Rational) -> Rational {
    if let Some(exact) = rational_sqrt(x) {
        return exact;
    }
    let s = scale();
    let scaled = (x * Rational::from_integer(&s * &s)).to_integer();
    Rational::new(scaled.sqrt(), s)
}

/// Decimal for `√x`, `x ≥ 0`.
pub fn sqrt_decimal(x: &Rational) -> String {
    format_significant(&fixed_sqrt(x), DECIMAL_DIGITS)
}

pub fn decimal(x: &Rational) -> String {
    format_significant(x, DECIMAL_DIGITS)
}

/// Positional notation (no exponent) rounded half away from zero to `sig`
/// significant digits.
pub fn format_significant(x: &Rational, sig: usize) -> String {
    assert!(sig > 0);
    if x.is_zero() {
        return "0".to_string();
    }
    let negative = x.is_negative();
    let abs = x.abs();
    let ten = int(10);
    // 10^e <= abs < 10^(e+1)
    let mut e: i64 = 0;
    let mut lower = Rational::one();
    while abs >= &lower * &ten {
        lower *= &ten;
        e += 1;
    }
    while abs < lower {
        lower /= &ten;
        e -= 1;
    }
    let shift = sig as i64 - 1 - e;
    let factor = num_traits::pow(ten.clone(), shift.unsigned_abs() as usize);
    let scaled = if shift >= 0 { &abs * &factor } else { &abs / &factor };
    let mut mantissa = (scaled + Rational::new(BigInt::one(), BigInt::from(2))).floor().to_integer();
    if mantissa == num_traits::pow(BigInt::from(10), sig) {
        mantissa /= 10;
        e += 1;
    }
    let digits = mantissa.to_string();
    debug_assert_eq!(digits.len(), sig);
    let body = if e < 0 {
        format!("0.{}{}", "0".repeat((-e - 1) as usize), digits)
    } else if e as usize >= sig - 1 {
        format!("{}{}", digits, "0".repeat(e as usize + 1 - sig))
    } else {
        let (int_part, frac) = digits.split_at(e as usize + 1);
        format!("{int_part}.{frac}")
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}
