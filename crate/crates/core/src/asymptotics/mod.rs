//! Slope comparisons along unbounded curves `a = c·β²` with `β → ±∞`, the
//! truncated Gieseker comparison, and classifiers built on both.
//!
//! Along the model curve write `β = −t` (left) or `β = t` (right) with
//! `t → +∞`. Orders and leading coefficients of slope differences are reported
//! in powers of `t`, so the sign of the leading coefficient is the ordering.

mod candidates;
mod classify;
mod compare;
mod gieseker;
mod series;

pub use candidates::candidate_grid;
pub use classify::{
    classify_left, classify_left_along, classify_right, classify_right_along, gieseker_verdict, GiesekerClassifier, LeftClassifier,
    RightClassifier, Verdict,
};
pub use compare::{asym_compare_lambda, asym_compare_nu, AsymOrdering, LeadingTerm};
pub use gieseker::{gs_compare, GsMode};
pub use series::{lambda_series, limit_table_nu, limit_table_nu_closed_form, nu_series, LaurentSlope};

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use thiserror::Error;

use crate::chern::ChernError;
use crate::rational::{format_rational, int, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AsymError {
    #[error("operation undefined for the zero character")]
    ZeroCharacter,
    #[error("c_gamma must satisfy 0 <= c_gamma < 1, got {0}")]
    InvalidCurve(String),
    #[error("the slope denominator vanishes identically along the curve")]
    IdenticallyInfinite,
    #[error("expected a rank-zero character")]
    NonzeroRank,
    #[error("expected a rank-zero character with ch1 != 0")]
    RankNonzero,
    #[error("expected ch1 != 0 (a two-dimensional torsion character)")]
    TorsionBelowDim2,
    #[error("characters have different numerical dimensions ({0} and {1})")]
    DimensionMismatch(i32, i32),
    #[error("truncation depth k = {k} out of range for dimension {dim}")]
    KOutOfRange { k: i64, dim: i32 },
    #[error("left and right classifier routes disagree: {0}")]
    DualityMismatch(String),
}

impl AsymError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::ZeroCharacter => "ZeroCharacter",
            Self::InvalidCurve(_) => "InvalidCurve",
            Self::IdenticallyInfinite => "IdenticallyInfinite",
            Self::NonzeroRank => "NonzeroRank",
            Self::RankNonzero => "RankNonzero",
            Self::TorsionBelowDim2 => "TorsionBelowDim2",
            Self::DimensionMismatch(..) => "DimensionMismatch",
            Self::KOutOfRange { .. } => "KOutOfRange",
            Self::DualityMismatch(_) => "DualityMismatch",
        }
    }
}

impl From<ChernError> for AsymError {
    fn from(e: ChernError) -> Self {
        match e {
            ChernError::KOutOfRange { k, dim } => Self::KOutOfRange { k, dim },
            _ => Self::ZeroCharacter,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    LeftInfinity,
    RightInfinity,
}

impl Side {
    /// `β = sign·t`.
    pub fn beta_sign(self) -> Rational {
        match self {
            Self::LeftInfinity => -Rational::one(),
            Self::RightInfinity => Rational::one(),
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::LeftInfinity => "left",
            Self::RightInfinity => "right",
        })
    }
}

impl FromStr for Side {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "left" | "leftinfinity" => Ok(Self::LeftInfinity),
            "right" | "rightinfinity" => Ok(Self::RightInfinity),
            other => Err(format!("unknown side {other:?}; expected left or right")),
        }
    }
}

/// Germ of an unbounded curve with `a/β² → c_gamma`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CurveClass {
    side: Side,
    c_gamma: Rational,
}

impl CurveClass {
    pub fn new(side: Side, c_gamma: Rational) -> Result<Self, AsymError> {
        if c_gamma.is_negative() || c_gamma >= int(1) {
            return Err(AsymError::InvalidCurve(format_rational(&c_gamma)));
        }
        Ok(Self { side, c_gamma })
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn c_gamma(&self) -> &Rational {
        &self.c_gamma
    }
}
