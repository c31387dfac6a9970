//! Numerical ν-walls: `x·(β² + a) + y·β + z = 0`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use super::{ensure_nonzero, WallError};
use crate::chern::ChernCharacter;
use crate::rational::{int, Rational};
use crate::slope::{tilt_charge, HalfPlanePoint};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TiltWallKind {
    Semicircle {
        #[serde(with = "crate::serde_rational")]
        center: Rational,
        #[serde(with = "crate::serde_rational")]
        radius2: Rational,
    },
    VerticalRay {
        #[serde(with = "crate::serde_rational")]
        beta: Rational,
    },
    Empty,
    Degenerate,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TiltWallGeometry {
    #[serde(with = "crate::serde_rational")]
    pub x: Rational,
    #[serde(with = "crate::serde_rational")]
    pub y: Rational,
    #[serde(with = "crate::serde_rational")]
    pub z: Rational,
    #[serde(flatten)]
    pub kind: TiltWallKind,
}

impl TiltWallGeometry {
    pub fn from_coefficients(x: Rational, y: Rational, z: Rational) -> Self {
        let kind = if x.is_zero() {
            if y.is_zero() {
                TiltWallKind::Degenerate
            } else {
                TiltWallKind::VerticalRay { beta: -&z / &y }
            }
        } else {
            let disc = &y * &y - int(4) * &x * &z;
            if disc.is_positive() {
                let two_x = int(2) * &x;
                TiltWallKind::Semicircle {
                    center: -&y / &two_x,
                    radius2: disc / (&two_x * &two_x),
                }
            } else {
                TiltWallKind::Empty
            }
        };
        Self { x, y, z, kind }
    }

    /// Value of `x·(β² + a) + y·β + z`.
    pub fn eval(&self, p: &HalfPlanePoint) -> Rational {
        let b = p.beta();
        &self.x * (b * b + p.a()) + &self.y * b + &self.z
    }

    /// Coefficients scaled so the first nonzero one is 1.
    pub fn normalized(&self) -> [Rational; 3] {
        let coeffs = [self.x.clone(), self.y.clone(), self.z.clone()];
        match coeffs.iter().find(|c| !c.is_zero()).cloned() {
            Some(lead) => coeffs.map(|c| c / &lead),
            None => coeffs,
        }
    }
}

/// The ν-wall between `v = (r, c, d, ·)` and `w = (R, C, D, ·)`:
/// `x = Rc − Cr`, `y = 2(Dr − Rd)`, `z = 2(Cd − Dc)`.
pub fn tilt_wall(v: &ChernCharacter, w: &ChernCharacter) -> Result<TiltWallGeometry, WallError> {
    ensure_nonzero(v)?;
    ensure_nonzero(w)?;
    let (r, c, d) = (v.ch(0), v.ch(1), v.ch(2));
    let (rr, cc, dd) = (w.ch(0), w.ch(1), w.ch(2));
    let two = int(2);
    Ok(TiltWallGeometry::from_coefficients(
        rr * c - cc * r,
        &two * (dd * r - rr * d),
        &two * (cc * d - dd * c),
    ))
}

/// Top point `(center, radius²)` of a semicircular wall, checked to lie on Θ_w.
pub fn wall_apex(g: &TiltWallGeometry, w: &ChernCharacter) -> Result<HalfPlanePoint, WallError> {
    let TiltWallKind::Semicircle { center, radius2 } = &g.kind else {
        return Err(WallError::NotASemicircle);
    };
    let apex = HalfPlanePoint::new(center.clone(), radius2.clone()).map_err(|_| WallError::NotASemicircle)?;
    if !tilt_charge(w, &apex).re.is_zero() {
        return Err(WallError::ApexOffTheta);
    }
    Ok(apex)
}

/// Whether two walls share a point in the open upper half-plane.
pub fn semicircles_meet(g1: &TiltWallGeometry, g2: &TiltWallGeometry) -> bool {
    use TiltWallKind::*;
    if g1.normalized() == g2.normalized() {
        return !matches!(g1.kind, Empty);
    }
    match (&g1.kind, &g2.kind) {
        (Semicircle { center: c1, radius2: r1 }, Semicircle { center: c2, radius2: r2 }) => {
            // |r1 − r2| < |c1 − c2| < r1 + r2  ⇔  (d² − R1 − R2)² < 4·R1·R2
            let d2 = (c1 - c2) * (c1 - c2);
            let lhs = &d2 - r1 - r2;
            (&lhs * &lhs).cmp(&(int(4) * r1 * r2)) == Ordering::Less
        }
        (Semicircle { center, radius2 }, VerticalRay { beta }) | (VerticalRay { beta }, Semicircle { center, radius2 }) => {
            (beta - center) * (beta - center) < *radius2
        }
        (Degenerate, other) | (other, Degenerate) => !matches!(other, Empty),
        _ => false,
    }
}
