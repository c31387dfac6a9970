//! Central charges, the slopes μ, ν, λ and the shift-class classifier.
//!
//! Slopes are `−Re Z / Im Z`. With `a = α²`:
//!
//! * tilt: `Z^t = −ch₂^β + ½·a·ch₀ + i·ch₁^β`
//! * Bridgeland: `Z = −ch₃^β + (s + 1/6)·a·ch₁^β + i·(ch₂^β − ½·a·ch₀)`
//!
//! A vanishing imaginary part gives the slope `+∞`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::chern::{twist, ChernCharacter};
use crate::rational::{format_rational, parse_rational, rat, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SlopeError {
    #[error("slope undefined for the zero character")]
    ZeroCharacter,
    #[error("the shift classifier needs a character of nonzero rank")]
    RankZero,
    #[error("half-plane points need a = α² > 0, got {0}")]
    NonPositiveA(String),
    #[error("the stability parameter s must be positive, got {0}")]
    NonPositiveS(String),
}

impl SlopeError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::ZeroCharacter => "ZeroCharacter",
            Self::RankZero => "RankZero",
            Self::NonPositiveA(_) => "NonPositiveA",
            Self::NonPositiveS(_) => "NonPositiveS",
        }
    }
}

/// `(β, a)` in the upper half-plane, `a = α² > 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HalfPlanePoint {
    beta: Rational,
    a: Rational,
}

impl HalfPlanePoint {
    pub fn new(beta: Rational, a: Rational) -> Result<Self, SlopeError> {
        if !a.is_positive() {
            return Err(SlopeError::NonPositiveA(format_rational(&a)));
        }
        Ok(Self { beta, a })
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn a(&self) -> &Rational {
        &self.a
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StabilityParam {
    s: Rational,
}

impl StabilityParam {
    pub fn new(s: Rational) -> Result<Self, SlopeError> {
        if !s.is_positive() {
            return Err(SlopeError::NonPositiveS(format_rational(&s)));
        }
        Ok(Self { s })
    }

    pub fn s(&self) -> &Rational {
        &self.s
    }

    /// `s + 1/6`, the coefficient of `a·ch₁^β` in the real part.
    pub fn shifted(&self) -> Rational {
        &self.s + rat(1, 6)
    }
}

/// A slope value; `PlusInfinity` sorts above every finite value.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtendedRational {
    Finite(Rational),
    PlusInfinity,
}

impl ExtendedRational {
    pub fn finite(&self) -> Option<&Rational> {
        match self {
            Self::Finite(x) => Some(x),
            Self::PlusInfinity => None,
        }
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, Self::PlusInfinity)
    }

    /// `num/den`, or `+∞` when `den = 0`.
    pub fn ratio(num: Rational, den: &Rational) -> Self {
        if den.is_zero() {
            Self::PlusInfinity
        } else {
            Self::Finite(num / den)
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        match text.trim() {
            "inf" | "+inf" => Some(Self::PlusInfinity),
            other => parse_rational(other).ok().map(Self::Finite),
        }
    }
}

impl fmt::Display for ExtendedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Finite(x) => write!(f, "{x}"),
            Self::PlusInfinity => write!(f, "inf"),
        }
    }
}

impl Serialize for ExtendedRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// `E[k]` lies in the double-tilted heart at the point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShiftClass {
    Zero,
    One,
    Two,
}

impl ShiftClass {
    pub fn k(self) -> u8 {
        match self {
            Self::Zero => 0,
            Self::One => 1,
            Self::Two => 2,
        }
    }
}

/// `(Re, Im)` of a central charge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Charge {
    pub re: Rational,
    pub im: Rational,
}

impl Charge {
    pub fn slope(&self) -> ExtendedRational {
        ExtendedRational::ratio(-&self.re, &self.im)
    }
}

fn ensure_nonzero(v: &ChernCharacter) -> Result<(), SlopeError> {
    if v.is_zero() {
        Err(SlopeError::ZeroCharacter)
    } else {
        Ok(())
    }
}

pub fn tilt_charge(v: &ChernCharacter, p: &HalfPlanePoint) -> Charge {
    let t = twist(v, p.beta());
    Charge {
        re: rat(1, 2) * p.a() * v.rank() - t.ch(2),
        im: t.ch(1).clone(),
    }
}

pub fn bridgeland_charge(v: &ChernCharacter, p: &HalfPlanePoint, s: &StabilityParam) -> Charge {
    let t = twist(v, p.beta());
    Charge {
        re: s.shifted() * p.a() * t.ch(1) - t.ch(3),
        im: t.ch(2) - rat(1, 2) * p.a() * v.rank(),
    }
}

pub fn mu(v: &ChernCharacter) -> Result<ExtendedRational, SlopeError> {
    ensure_nonzero(v)?;
    Ok(ExtendedRational::ratio(v.ch(1).clone(), v.rank()))
}

pub fn nu(v: &ChernCharacter, p: &HalfPlanePoint) -> Result<ExtendedRational, SlopeError> {
    ensure_nonzero(v)?;
    Ok(tilt_charge(v, p).slope())
}

pub fn lambda(v: &ChernCharacter, p: &HalfPlanePoint, s: &StabilityParam) -> Result<ExtendedRational, SlopeError> {
    ensure_nonzero(v)?;
    Ok(bridgeland_charge(v, p, s).slope())
}

pub fn compare_lambda(
    v: &ChernCharacter,
    u: &ChernCharacter,
    p: &HalfPlanePoint,
    s: &StabilityParam,
) -> Result<Ordering, SlopeError> {
    Ok(lambda(v, p, s)?.cmp(&lambda(u, p, s)?))
}

pub fn region_classify(v: &ChernCharacter, p: &HalfPlanePoint) -> Result<ShiftClass, SlopeError> {
    ensure_nonzero(v)?;
    if v.rank().is_zero() {
        return Err(SlopeError::RankZero);
    }
    let mu = v.ch(1) / v.rank();
    let zero = ExtendedRational::Finite(Rational::zero());
    Ok(if p.beta() < &mu {
        if nu(v, p)? > zero {
            ShiftClass::Zero
        } else {
            ShiftClass::One
        }
    } else if nu(&-v, p)? > zero {
        ShiftClass::One
    } else {
        ShiftClass::Two
    })
}
