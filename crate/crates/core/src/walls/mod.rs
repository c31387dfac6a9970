//! Distinguished curves, numerical walls and their geometry in the
//! `(β, a = α²)` half-plane.

mod curves;
mod enumerate;
mod quartic;
mod sample;
mod tilt;

pub use curves::{distinguished_curve, CurveDescriptor, CurveKind};
pub use enumerate::{enumerate_tilt_walls, EnumeratedWall, WallWindow};
pub use quartic::{bridgeland_wall, wall_section, QuarticWall, SectionRoot};
pub use sample::{sample_curve, sample_polynomial, SampleRange, SamplePoint};
pub use tilt::{semicircles_meet, tilt_wall, wall_apex, TiltWallGeometry, TiltWallKind};

use thiserror::Error;

use crate::chern::ChernCharacter;
use crate::poly::UniPoly;
use crate::rational::rat;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WallError {
    #[error("walls are undefined for the zero character")]
    ZeroCharacter,
    #[error("the wall is not a semicircle")]
    NotASemicircle,
    #[error("the apex does not lie on the Θ-curve of the given character")]
    ApexOffTheta,
    #[error("the vertical line L exists only for characters of nonzero rank")]
    RankZeroLine,
    #[error("the Γ-curve needs a stability parameter s")]
    MissingS,
    #[error("the wall polynomial vanishes identically (proportional characters)")]
    IdenticallyZero,
    #[error("the wall contains the whole vertical line β = {beta}")]
    VerticalComponent { beta: String },
    #[error("empty search window: {0}")]
    WindowEmpty(String),
    #[error("sampling needs at least 2 points, got {0}")]
    TooFewSamples(usize),
}

impl WallError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::ZeroCharacter => "ZeroCharacter",
            Self::NotASemicircle => "NotASemicircle",
            Self::ApexOffTheta => "ApexOffTheta",
            Self::RankZeroLine => "RankZeroLine",
            Self::MissingS => "MissingS",
            Self::IdenticallyZero => "IdenticallyZero",
            Self::VerticalComponent { .. } => "VerticalComponent",
            Self::WindowEmpty(_) => "WindowEmpty",
            Self::TooFewSamples(_) => "TooFewSamples",
        }
    }
}

fn ensure_nonzero(v: &ChernCharacter) -> Result<(), WallError> {
    if v.is_zero() {
        Err(WallError::ZeroCharacter)
    } else {
        Ok(())
    }
}

/// `ch_i^β` as polynomials in `β`.
pub(crate) fn twisted_polys(v: &ChernCharacter) -> [UniPoly; 4] {
    let [v0, v1, v2, v3] = v.components();
    [
        UniPoly::new(vec![v0.clone()]),
        UniPoly::new(vec![v1.clone(), -v0]),
        UniPoly::new(vec![v2.clone(), -v1, rat(1, 2) * v0]),
        UniPoly::new(vec![v3.clone(), -v2, rat(1, 2) * v1, rat(-1, 6) * v0]),
    ]
}
