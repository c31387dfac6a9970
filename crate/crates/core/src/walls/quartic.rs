//! Numerical λ-walls `f_{v,w}(β, a) = 0`, quadratic in `a`.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::{ensure_nonzero, WallError};
use crate::chern::{delta_unchecked, ChernCharacter};
use crate::poly::{BiPoly, UniPoly};
use crate::rational::{format_rational, int, rat, Rational};
use crate::slope::StabilityParam;
use crate::surd::{decimal, rational_sqrt, sqrt_decimal, QuadraticSurd};

/// `A·a² + (B₂β² + B₁β + B₀)·a + (C₄β⁴ + C₃β³ + C₂β² + C₁β + C₀)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticWall {
    pub v: ChernCharacter,
    pub w: ChernCharacter,
    pub s: Rational,
    pub poly: BiPoly,
}

impl QuarticWall {
    /// `A`, the coefficient of `a²`.
    pub fn a2(&self) -> Rational {
        self.poly.coeff(0, 2)
    }

    /// `B(β)`, the coefficient of `a`.
    pub fn a1(&self) -> UniPoly {
        self.poly.a_coefficient(1)
    }

    /// `C(β)`, the `a`-free part.
    pub fn a0(&self) -> UniPoly {
        self.poly.a_coefficient(0)
    }
}

pub fn bridgeland_wall(v: &ChernCharacter, w: &ChernCharacter, s: &StabilityParam) -> Result<QuarticWall, WallError> {
    ensure_nonzero(v)?;
    ensure_nonzero(w)?;
    let d = |i, j| delta_unchecked(i, j, v, w);
    let (d10, d20, d21, d30, d31, d32) = (d(1, 0), d(2, 0), d(2, 1), d(3, 0), d(3, 1), d(3, 2));
    let s = s.s();
    let six_s_plus_one = int(6) * s + int(1);
    let three_s = int(3) * s;
    let poly = BiPoly::from_terms([
        ((0, 2), &six_s_plus_one / int(12) * &d10),
        ((2, 1), (&three_s - int(1)) / int(6) * &d10),
        ((1, 1), (int(1) - &three_s) / int(3) * &d20),
        ((0, 1), &six_s_plus_one / int(6) * &d21 - rat(1, 2) * &d30),
        ((4, 0), &d10 / int(12)),
        ((3, 0), -&d20 / int(3)),
        ((2, 0), (&d30 + &d21) / int(2)),
        ((1, 0), -d31),
        ((0, 0), d32),
    ]);
    Ok(QuarticWall {
        v: v.clone(),
        w: w.clone(),
        s: s.clone(),
        poly,
    })
}

/// A positive root `a` of a wall section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SectionRoot {
    Rational(Rational),
    Surd(QuadraticSurd),
}

impl SectionRoot {
    pub fn approx(&self) -> Rational {
        match self {
            Self::Rational(x) => x.clone(),
            Self::Surd(s) => s.approx(),
        }
    }

    pub fn a_decimal(&self) -> String {
        match self {
            Self::Rational(x) => decimal(x),
            Self::Surd(s) => s.to_decimal(),
        }
    }

    pub fn alpha_decimal(&self) -> String {
        match self {
            Self::Rational(x) => sqrt_decimal(x),
            Self::Surd(s) => s.sqrt_decimal(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match self {
            Self::Rational(x) => x.is_positive(),
            Self::Surd(s) => s.is_positive(),
        }
    }

    fn cmp_exact(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Rational(x), Self::Rational(y)) => x.cmp(y),
            (Self::Surd(s), Self::Rational(y)) => s.cmp_rational(y),
            (Self::Rational(x), Self::Surd(s)) => s.cmp_rational(x).reverse(),
            // conjugates share rational part and radicand
            (Self::Surd(s), Self::Surd(t)) => s.coeff.cmp(&t.coeff),
        }
    }
}

impl Serialize for SectionRoot {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Self::Rational(x) => serializer.serialize_str(&format_rational(x)),
            Self::Surd(s) => {
                let mut map = serializer.serialize_map(Some(4))?;
                map.serialize_entry("center", &format_rational(&s.rational))?;
                map.serialize_entry("coeff", &format_rational(&s.coeff))?;
                map.serialize_entry("radicand", &format_rational(&s.radicand))?;
                map.serialize_entry("decimal", &s.to_decimal())?;
                map.end()
            }
        }
    }
}

/// Positive roots in `a` of the wall at fixed `β`, ascending.
pub fn wall_section(wall: &QuarticWall, beta: &Rational) -> Result<Vec<SectionRoot>, WallError> {
    if wall.poly.is_zero() {
        return Err(WallError::IdenticallyZero);
    }
    let section = wall.poly.section(beta);
    if section.is_zero() {
        return Err(WallError::VerticalComponent {
            beta: format_rational(beta),
        });
    }
    Ok(positive_roots(&section))
}

/// Positive roots of a polynomial of degree at most 2, ascending.
pub(crate) fn positive_roots(p: &UniPoly) -> Vec<SectionRoot> {
    real_roots(p).into_iter().filter(SectionRoot::is_positive).collect()
}

/// Distinct real roots of a nonzero polynomial of degree at most 2, ascending.
pub(crate) fn real_roots(p: &UniPoly) -> Vec<SectionRoot> {
    debug_assert!(p.degree().unwrap_or(0) <= 2);
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    let mut roots = Vec::new();
    if a.is_zero() {
        if !b.is_zero() {
            roots.push(SectionRoot::Rational(-c / b));
        }
        return roots;
    }
    let disc = &b * &b - int(4) * &a * &c;
    let two_a = int(2) * &a;
    let center = -&b / &two_a;
    if disc.is_zero() {
        roots.push(SectionRoot::Rational(center));
    } else if disc.is_positive() {
        match rational_sqrt(&disc) {
            Some(root) => {
                let offset = (root / &two_a).abs();
                roots.push(SectionRoot::Rational(&center - &offset));
                roots.push(SectionRoot::Rational(&center + &offset));
            }
            None => {
                let coeff = (int(1) / &two_a).abs();
                for sign in [-1, 1] {
                    roots.push(SectionRoot::Surd(QuadraticSurd {
                        rational: center.clone(),
                        coeff: &coeff * int(sign),
                        radicand: disc.clone(),
                    }));
                }
            }
        }
    }
    roots.sort_by(SectionRoot::cmp_exact);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::slope::{bridgeland_charge, compare_lambda, HalfPlanePoint};

    fn ch(text: &str) -> ChernCharacter {
        ChernCharacter::parse(text).unwrap()
    }

    fn third() -> StabilityParam {
        StabilityParam::new(rat(1, 3)).unwrap()
    }

    #[test]
    fn o3_versus_dual_conic() {
        let wall = bridgeland_wall(&ch("1,3,9/2,9/2"), &ch("0,0,2,3"), &third()).unwrap();
        assert_eq!(wall.poly.to_string(), "2/3β^3 - 9/2β^2 + 9β - 3/2a - 9/2");
        assert_eq!(wall_section(&wall, &rat(3, 2)).unwrap(), vec![SectionRoot::Rational(rat(3, 4))]);
    }

    #[test]
    fn o_versus_o1_plus_o2() {
        let wall = bridgeland_wall(&ch("1,0,0,0"), &ch("2,3,5/2,3/2"), &third()).unwrap();
        let expected = BiPoly::from_terms([
            ((0, 2), rat(-3, 4)),
            ((0, 1), rat(3, 4)),
            ((4, 0), rat(-1, 4)),
            ((3, 0), rat(5, 6)),
            ((2, 0), rat(-3, 4)),
        ]);
        assert_eq!(wall.poly, expected);
        let roots = wall_section(&wall, &rat(3, 2)).unwrap();
        assert!(roots.contains(&SectionRoot::Rational(rat(3, 4))));
        assert_eq!(wall.poly.eval(&rat(3, 2), &rat(3, 4)), int(0));
    }

    #[test]
    fn self_wall_is_identically_zero() {
        let v = ch("2,-1,1/2,1/3");
        let wall = bridgeland_wall(&v, &v, &third()).unwrap();
        assert!(wall.poly.is_zero());
        assert_eq!(wall_section(&wall, &int(0)), Err(WallError::IdenticallyZero));
    }

    #[test]
    fn negative_discriminant_gives_no_roots() {
        // a² + a + 1 has no real roots
        let p = UniPoly::new(vec![int(1), int(1), int(1)]);
        assert!(positive_roots(&p).is_empty());
        // a² − 2 has one positive irrational root
        let q = UniPoly::new(vec![int(-2), int(0), int(1)]);
        let roots = positive_roots(&q);
        assert_eq!(roots.len(), 1);
        assert_eq!(roots[0].a_decimal(), "1.41421356237");
    }

    #[test]
    fn wall_is_minus_the_charge_cross_product() {
        let pairs = [("1,3,9/2,9/2", "0,0,2,3"), ("1,0,0,0", "2,3,5/2,3/2"), ("-1,2,1/2,5/6", "3,1,-1/2,1/3")];
        for (v, w) in pairs {
            let (v, w) = (ch(v), ch(w));
            for s in [rat(1, 6), rat(1, 3), int(2)] {
                let s = StabilityParam::new(s).unwrap();
                let wall = bridgeland_wall(&v, &w, &s).unwrap();
                assert_eq!(wall.poly, -&bridgeland_wall(&w, &v, &s).unwrap().poly);
                for bn in -6..=6 {
                    for an in 1..=5 {
                        let p = HalfPlanePoint::new(rat(bn, 2), rat(an, 3)).unwrap();
                        let zv = bridgeland_charge(&v, &p, &s);
                        let zw = bridgeland_charge(&w, &p, &s);
                        let cross = &zv.re * &zw.im - &zw.re * &zv.im;
                        assert_eq!(wall.poly.eval(p.beta(), p.a()), -cross);
                    }
                }
            }
        }
    }

    #[test]
    fn section_points_have_equal_lambda() {
        let v = ch("1,0,0,0");
        let w = ch("0,1,-1/2,1/6");
        let s = third();
        let wall = bridgeland_wall(&v, &w, &s).unwrap();
        let mut checked = 0;
        for bn in -20..=20 {
            let beta = rat(bn, 4);
            let Ok(roots) = wall_section(&wall, &beta) else { continue };
            for root in roots {
                if let SectionRoot::Rational(a) = root {
                    let p = HalfPlanePoint::new(beta.clone(), a).unwrap();
                    if bridgeland_charge(&v, &p, &s).im.is_zero() || bridgeland_charge(&w, &p, &s).im.is_zero() {
                        continue;
                    }
                    assert_eq!(compare_lambda(&v, &w, &p, &s).unwrap(), Ordering::Equal);
                    checked += 1;
                }
            }
        }
        assert!(checked > 0);
    }
}
