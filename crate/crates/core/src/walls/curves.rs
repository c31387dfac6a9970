//! The curves L_w (`ch₁^β = 0`), Θ_w (`Re Z^t = 0`) and Γ_w (`Re Z = 0`).

use std::fmt;

use num_traits::Zero;

use super::{ensure_nonzero, twisted_polys, WallError};
use crate::chern::ChernCharacter;
use crate::poly::BiPoly;
use crate::rational::{rat, Rational};
use crate::slope::StabilityParam;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CurveKind {
    LLine,
    ThetaCurve,
    GammaCurve,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::LLine => "l",
            Self::ThetaCurve => "theta",
            Self::GammaCurve => "gamma",
        })
    }
}

/// Zero locus of `poly` in the `(β, a)` plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveDescriptor {
    pub kind: CurveKind,
    pub w: ChernCharacter,
    pub s: Option<Rational>,
    pub poly: BiPoly,
}

/// Defining polynomials, normalized as follows:
///
/// * L: `β − C/R`
/// * Θ: `β² − 2(C/R)β + 2D/R − a` when `R ≠ 0`, otherwise `ch₂^β`
/// * Γ: `ch₃^β − (s + 1/6)·a·ch₁^β`
pub fn distinguished_curve(
    kind: CurveKind,
    w: &ChernCharacter,
    s: Option<&StabilityParam>,
) -> Result<CurveDescriptor, WallError> {
    ensure_nonzero(w)?;
    let [_, t1, t2, t3] = twisted_polys(w);
    let rank = w.rank();
    let poly = match kind {
        CurveKind::LLine => {
            if rank.is_zero() {
                return Err(WallError::RankZeroLine);
            }
            BiPoly::from_beta_poly(&t1).monic()
        }
        CurveKind::ThetaCurve => {
            let mut p = BiPoly::from_beta_poly(&t2);
            p.add_term((0, 1), rat(-1, 2) * rank);
            if rank.is_zero() {
                p
            } else {
                p.scale(&(rat(2, 1) / rank))
            }
        }
        CurveKind::GammaCurve => {
            let s = s.ok_or(WallError::MissingS)?;
            let mut p = BiPoly::from_beta_poly(&t3);
            let k = -s.shifted();
            for (i, c) in t1.coeffs().iter().enumerate() {
                p.add_term((i as u32, 1), &k * c);
            }
            p
        }
    };
    Ok(CurveDescriptor {
        kind,
        w: w.clone(),
        s: s.map(|s| s.s().clone()),
        poly,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::q_tilt;
    use crate::rational::int;
    use crate::slope::{bridgeland_charge, tilt_charge, HalfPlanePoint};

    fn ch(text: &str) -> ChernCharacter {
        ChernCharacter::parse(text).unwrap()
    }

    #[test]
    fn theta_of_instanton() {
        let c = distinguished_curve(CurveKind::ThetaCurve, &ch("2,0,-2,0"), None).unwrap();
        assert_eq!(c.poly.to_string(), "β^2 - a - 2");
        assert_eq!(q_tilt(&ch("2,0,-2,0")) / int(4), int(2));
    }

    #[test]
    fn line_of_o3() {
        let c = distinguished_curve(CurveKind::LLine, &ch("1,3,9/2,9/2"), None).unwrap();
        assert_eq!(c.poly.to_string(), "β - 3");
        assert_eq!(
            distinguished_curve(CurveKind::LLine, &ch("0,1,-1/2,1/6"), None),
            Err(WallError::RankZeroLine)
        );
    }

    #[test]
    fn gamma_of_hyperplane() {
        let s = StabilityParam::new(rat(1, 3)).unwrap();
        let c = distinguished_curve(CurveKind::GammaCurve, &ch("0,1,-1/2,1/6"), Some(&s)).unwrap();
        assert_eq!(c.poly.to_string(), "1/2β^2 + 1/2β - 1/2a + 1/6");
        assert_eq!(
            distinguished_curve(CurveKind::GammaCurve, &ch("0,1,-1/2,1/6"), None),
            Err(WallError::MissingS)
        );
    }

    #[test]
    fn curves_are_charge_zero_loci() {
        let s = StabilityParam::new(rat(1, 3)).unwrap();
        for w in ["2,0,-2,0", "1,-1,1/2,-1/6", "0,1,-1/2,1/6", "-1,2,1/2,5/6", "3,1,-1/2,1/3"] {
            let w = ch(w);
            let theta = distinguished_curve(CurveKind::ThetaCurve, &w, None).unwrap();
            let gamma = distinguished_curve(CurveKind::GammaCurve, &w, Some(&s)).unwrap();
            for bn in -8..=8 {
                for an in 1..=6 {
                    let p = HalfPlanePoint::new(rat(bn, 3), rat(an, 2)).unwrap();
                    let on_theta = theta.poly.eval(p.beta(), p.a()).is_zero();
                    assert_eq!(on_theta, tilt_charge(&w, &p).re.is_zero());
                    let on_gamma = gamma.poly.eval(p.beta(), p.a()).is_zero();
                    assert_eq!(on_gamma, bridgeland_charge(&w, &p, &s).re.is_zero());
                }
            }
        }
    }
}
