//! Laurent expansions of ν and λ along `a = c·β²`.

use std::fmt;

use num_traits::{Signed, Zero};

use super::{AsymError, CurveClass, Side};
use crate::chern::ChernCharacter;
use crate::poly::UniPoly;
use crate::rational::{rat, Rational};
use crate::slope::{ExtendedRational, StabilityParam};
use crate::walls::twisted_polys;

/// A slope as `numerator(β) / denominator(β)` along the model curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct SlopeFunction {
    pub num: UniPoly,
    pub den: UniPoly,
}

impl SlopeFunction {
    /// Rewrites in the curve parameter `t`, `β = ±t`.
    pub fn in_t(&self, side: Side) -> SlopeFunction {
        let sign = side.beta_sign();
        SlopeFunction {
            num: self.num.substitute_scaled(&sign),
            den: self.den.substitute_scaled(&sign),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.den.is_zero()
    }
}

fn a_times(c: &Rational, p: &UniPoly) -> UniPoly {
    &UniPoly::monomial(c.clone(), 2) * p
}

/// ν: `(ch₂^β − ½·a·ch₀) / ch₁^β` with `a = c·β²`.
pub(crate) fn nu_function(v: &ChernCharacter, c: &Rational) -> SlopeFunction {
    let [t0, t1, t2, _] = twisted_polys(v);
    SlopeFunction {
        num: &t2 - &a_times(&(c * rat(1, 2)), &t0),
        den: t1,
    }
}

/// λ: `(ch₃^β − (s + 1/6)·a·ch₁^β) / (ch₂^β − ½·a·ch₀)` with `a = c·β²`.
pub(crate) fn lambda_function(v: &ChernCharacter, c: &Rational, s: &StabilityParam) -> SlopeFunction {
    let [t0, t1, t2, t3] = twisted_polys(v);
    SlopeFunction {
        num: &t3 - &a_times(&(c * s.shifted()), &t1),
        den: &t2 - &a_times(&(c * rat(1, 2)), &t0),
    }
}

/// Leading terms of a Laurent expansion in `β` at infinity.
///
/// The model curve `a = c·β²` gives the same formal expansion at both ends, so
/// the side only matters when the series is evaluated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSlope {
    /// Nonzero `(power, coefficient)` pairs, powers strictly decreasing.
    pub terms: Vec<(i32, Rational)>,
    /// Every power `≥ lowest_power` is accounted for.
    pub lowest_power: i32,
}

impl LaurentSlope {
    pub fn coeff(&self, power: i32) -> Rational {
        self.terms
            .iter()
            .find(|(p, _)| *p == power)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }
}

impl fmt::Display for LaurentSlope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (power, c) in &self.terms {
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if c.is_negative() { "-" } else { "+" })?;
            }
            first = false;
            match power {
                0 => write!(f, "{mag}")?,
                1 if mag == Rational::from_integer(1.into()) => write!(f, "β")?,
                1 => write!(f, "{mag}β")?,
                p => write!(f, "{mag}β^{p}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(β^{})", self.lowest_power - 1)
    }
}

/// First `depth` powers of `num/den` at infinity, starting from
/// `deg num − deg den`.
pub(crate) fn laurent(f: &SlopeFunction, depth: usize) -> LaurentSlope {
    let m = f.den.degree().expect("finite slope") as i32;
    let Some(n) = f.num.degree().map(|n| n as i32) else {
        return LaurentSlope {
            terms: Vec::new(),
            lowest_power: i32::MIN / 2,
        };
    };
    let rev = |p: &UniPoly, deg: i32, j: i32| if j > deg { Rational::zero() } else { p.coeff((deg - j) as usize) };
    let d0 = rev(&f.den, m, 0);
    let mut e: Vec<Rational> = Vec::with_capacity(depth);
    for j in 0..depth as i32 {
        let mut acc = rev(&f.num, n, j);
        for i in 1..=j {
            acc -= rev(&f.den, m, i) * &e[(j - i) as usize];
        }
        e.push(acc / &d0);
    }
    let top = n - m;
    LaurentSlope {
        terms: e
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (top - j as i32, c))
            .collect(),
        lowest_power: top - depth as i32 + 1,
    }
}

pub fn lambda_series(v: &ChernCharacter, g: &CurveClass, s: &StabilityParam, depth: usize) -> Result<LaurentSlope, AsymError> {
    if v.is_zero() {
        return Err(AsymError::ZeroCharacter);
    }
    let f = lambda_function(v, g.c_gamma(), s);
    if f.is_infinite() {
        return Err(AsymError::IdenticallyInfinite);
    }
    Ok(laurent(&f, depth.max(1)))
}

pub fn nu_series(v: &ChernCharacter, g: &CurveClass, depth: usize) -> Result<LaurentSlope, AsymError> {
    if v.is_zero() {
        return Err(AsymError::ZeroCharacter);
    }
    let f = nu_function(v, g.c_gamma());
    if f.is_infinite() {
        return Err(AsymError::IdenticallyInfinite);
    }
    Ok(laurent(&f, depth.max(1)))
}

/// `lim ν/(−β)` on the left, `lim ν/β` on the right, read off the series.
pub fn limit_table_nu(v: &ChernCharacter, g: &CurveClass) -> Result<ExtendedRational, AsymError> {
    match nu_series(v, g, 2) {
        Err(AsymError::IdenticallyInfinite) => Ok(ExtendedRational::PlusInfinity),
        Err(e) => Err(e),
        Ok(series) => {
            debug_assert!(series.terms.iter().all(|(p, _)| *p <= 1));
            Ok(ExtendedRational::Finite(series.coeff(1) * g.side().beta_sign()))
        }
    }
}

/// Closed form of [`limit_table_nu`]: `(1 − c)/2` left and `(c − 1)/2` right
/// for nonzero rank, `±1` for rank zero with `ch₁ ≠ 0`, `+∞` otherwise.
pub fn limit_table_nu_closed_form(v: &ChernCharacter, g: &CurveClass) -> ExtendedRational {
    let sign = g.side().beta_sign();
    if !v.rank().is_zero() {
        ExtendedRational::Finite((Rational::from_integer(1.into()) - g.c_gamma()) * rat(1, 2) * -sign)
    } else if !v.ch(1).is_zero() {
        ExtendedRational::Finite(-sign)
    } else {
        ExtendedRational::PlusInfinity
    }
}
