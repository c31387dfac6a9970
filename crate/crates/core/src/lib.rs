//! Exact slopes, numerical walls and asymptotic stability for Chern
//! characters on P³.
//!
//! All arithmetic is over arbitrary-precision rationals; square roots only
//! appear when a result is rendered as a decimal.

pub mod chern;
pub mod cli;
pub mod figure;
pub mod poly;
pub mod rational;
pub mod slope;
pub mod surd;
pub mod walls;
pub mod asymptotics;

pub(crate) use rational::serde_rational;

pub use chern::{ChernCharacter, ChernError, TwistedCharacter};
pub use rational::Rational;
pub use slope::{ExtendedRational, HalfPlanePoint, ShiftClass, SlopeError, StabilityParam};
