//! Exact asymptotic comparison of two slopes along a model curve.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

use super::series::{lambda_function, nu_function, SlopeFunction};
use super::{AsymError, CurveClass};
use crate::chern::ChernCharacter;
use crate::poly::UniPoly;
use crate::rational::{sign, Rational};
use crate::slope::StabilityParam;

/// First nonvanishing term `coeff·t^order` of a slope difference.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeadingTerm {
    pub order: i32,
    #[serde(with = "crate::serde_rational")]
    pub coeff: Rational,
}

/// Eventual sign of `slope(v) − slope(u)` as `t → +∞`.
///
/// `leading` is `None` when the difference vanishes identically or when an
/// infinite slope is involved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AsymOrdering {
    pub sign: Ordering,
    pub leading: Option<LeadingTerm>,
}

impl AsymOrdering {
    pub fn order(&self) -> Option<i32> {
        self.leading.as_ref().map(|l| l.order)
    }
}

/// Compares two slope functions already written in `t`; infinite slopes are
/// `+∞`.
pub(crate) fn compare_functions(f: &SlopeFunction, g: &SlopeFunction) -> AsymOrdering {
    compare_with_infinities(f, g, |_| Ordering::Greater)
}

/// As [`compare_functions`], but an infinite slope is `+∞` or `−∞` according
/// to the eventual sign of its numerator.
pub(crate) fn compare_functions_signed(f: &SlopeFunction, g: &SlopeFunction) -> AsymOrdering {
    compare_with_infinities(f, g, |h| h.num.leading().map(sign).unwrap_or(Ordering::Greater))
}

fn compare_with_infinities(f: &SlopeFunction, g: &SlopeFunction, inf: impl Fn(&SlopeFunction) -> Ordering) -> AsymOrdering {
    let infinite = |h: &SlopeFunction| h.is_infinite().then(|| inf(h));
    match (infinite(f), infinite(g)) {
        (None, None) => {}
        (Some(a), Some(b)) => {
            return AsymOrdering {
                sign: a.cmp(&b),
                leading: None,
            }
        }
        (Some(a), None) => return AsymOrdering { sign: a, leading: None },
        (None, Some(b)) => {
            return AsymOrdering {
                sign: b.reverse(),
                leading: None,
            }
        }
    }
    // f − g = (Nf·Dg − Ng·Df) / (Df·Dg)
    let num = &(&f.num * &g.den) - &(&g.num * &f.den);
    if num.is_zero() {
        return AsymOrdering {
            sign: Ordering::Equal,
            leading: None,
        };
    }
    let (dn, dd) = (num.degree().unwrap(), f.den.degree().unwrap() + g.den.degree().unwrap());
    let coeff = num.leading().unwrap() / (f.den.leading().unwrap() * g.den.leading().unwrap());
    AsymOrdering {
        sign: sign(&coeff),
        leading: Some(LeadingTerm {
            order: dn as i32 - dd as i32,
            coeff,
        }),
    }
}

/// A slope function kept alongside an integer copy: numerator and
/// denominator scaled by one positive integer, trailing zeros trimmed.
/// Comparisons use the integer copy and fall back to exact rationals when it
/// is missing or a product overflows.
#[derive(Clone, Debug)]
pub(crate) struct PreparedSlope {
    exact: SlopeFunction,
    int: Option<(Vec<i128>, Vec<i128>)>,
}

impl PreparedSlope {
    pub fn new(exact: SlopeFunction) -> Self {
        let int = integer_form(&exact);
        Self { exact, int }
    }

    /// Eventual sign of `self − other`; infinite slopes are `+∞`.
    pub fn compare(&self, other: &Self) -> Ordering {
        self.compare_with(other, false, compare_functions)
    }

    /// As [`compare`](Self::compare), with infinities signed as in
    /// [`compare_functions_signed`].
    pub fn compare_signed(&self, other: &Self) -> Ordering {
        self.compare_with(other, true, compare_functions_signed)
    }

    fn compare_with(&self, other: &Self, signed: bool, exact: fn(&SlopeFunction, &SlopeFunction) -> AsymOrdering) -> Ordering {
        match (&self.int, &other.int) {
            (Some(f), Some(g)) => int_sign(f, g, signed),
            _ => None,
        }
        .unwrap_or_else(|| exact(&self.exact, &other.exact).sign)
    }
}

fn integer_form(f: &SlopeFunction) -> Option<(Vec<i128>, Vec<i128>)> {
    let coeffs = || f.num.coeffs().iter().chain(f.den.coeffs());
    let scale = coeffs().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let convert = |p: &UniPoly| -> Option<Vec<i128>> {
        let mut out = p
            .coeffs()
            .iter()
            .map(|c| (c.numer() * (&scale / c.denom())).to_i128())
            .collect::<Option<Vec<_>>>()?;
        while out.last() == Some(&0) {
            out.pop();
        }
        Some(out)
    };
    Some((convert(&f.num)?, convert(&f.den)?))
}

fn cross_difference(nf: &[i128], dg: &[i128], ng: &[i128], df: &[i128]) -> Option<Vec<i128>> {
    let len = (nf.len() + dg.len()).max(ng.len() + df.len());
    let mut out = vec![0i128; len];
    for (i, a) in nf.iter().enumerate() {
        for (j, b) in dg.iter().enumerate() {
            out[i + j] = out[i + j].checked_add(a.checked_mul(*b)?)?;
        }
    }
    for (i, a) in ng.iter().enumerate() {
        for (j, b) in df.iter().enumerate() {
            out[i + j] = out[i + j].checked_sub(a.checked_mul(*b)?)?;
        }
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn int_sign((nf, df): &(Vec<i128>, Vec<i128>), (ng, dg): &(Vec<i128>, Vec<i128>), signed: bool) -> Option<Ordering> {
    let infinite = |n: &[i128], d: &[i128]| {
        d.is_empty()
            .then(|| if signed { n.last().map_or(Ordering::Greater, |c| c.cmp(&0)) } else { Ordering::Greater })
    };
    match (infinite(nf, df), infinite(ng, dg)) {
        (None, None) => {}
        (Some(a), Some(b)) => return Some(a.cmp(&b)),
        (Some(a), None) => return Some(a),
        (None, Some(b)) => return Some(b.reverse()),
    }
    let num = cross_difference(nf, dg, ng, df)?;
    let sign = |x: &i128| x.cmp(&0);
    Some(match num.last() {
        None => Ordering::Equal,
        Some(lead) => {
            let positive = (sign(lead) == Ordering::Greater)
                == ((sign(df.last()?) == Ordering::Greater) == (sign(dg.last()?) == Ordering::Greater));
            if positive {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
    })
}

fn ensure_nonzero(v: &ChernCharacter) -> Result<(), AsymError> {
    if v.is_zero() {
        Err(AsymError::ZeroCharacter)
    } else {
        Ok(())
    }
}

/// `λ(v) − λ(u)` along `g`; a slope whose imaginary part vanishes identically
/// counts as `+∞`.
pub fn asym_compare_lambda(
    v: &ChernCharacter,
    u: &ChernCharacter,
    g: &CurveClass,
    s: &StabilityParam,
) -> Result<AsymOrdering, AsymError> {
    ensure_nonzero(v)?;
    ensure_nonzero(u)?;
    let fv = lambda_function(v, g.c_gamma(), s).in_t(g.side());
    let fu = lambda_function(u, g.c_gamma(), s).in_t(g.side());
    Ok(compare_functions(&fv, &fu))
}

/// `ν(v) − ν(u)` for two-dimensional torsion characters; the difference is the
/// constant `ch₂(v)/ch₁(v) − ch₂(u)/ch₁(u)`.
pub fn asym_compare_nu(v: &ChernCharacter, u: &ChernCharacter, g: &CurveClass) -> Result<AsymOrdering, AsymError> {
    for x in [v, u] {
        if !x.rank().is_zero() {
            return Err(AsymError::RankNonzero);
        }
        if x.ch(1).is_zero() {
            return Err(AsymError::TorsionBelowDim2);
        }
    }
    let fv = nu_function(v, g.c_gamma()).in_t(g.side());
    let fu = nu_function(u, g.c_gamma()).in_t(g.side());
    Ok(compare_functions(&fv, &fu))
}
