//! Search for numerical ν-walls of a fixed character inside a window.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::tilt::{tilt_wall, TiltWallGeometry, TiltWallKind};
use super::{ensure_nonzero, WallError};
use crate::chern::{q_tilt, ChernCharacter};
use crate::rational::{int, Rational};

/// Search box: `β ∈ [beta_min, beta_max]`, `0 < a ≤ max_alpha2`, candidate
/// walls come from `w` with `|ch₀(w)| ≤ max_rank` and `Q^tilt(w) ≤ max_qtilt`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WallWindow {
    pub beta_min: Rational,
    pub beta_max: Rational,
    pub max_alpha2: Rational,
    pub max_qtilt: Rational,
    pub max_rank: u32,
}

impl WallWindow {
    /// Default `max_rank` is `2·max(|ch₀(v)|, 1)`.
    pub fn new(v: &ChernCharacter, beta_min: Rational, beta_max: Rational, max_alpha2: Rational, max_qtilt: Rational) -> Self {
        let r = v.rank().abs().to_integer().to_u32().unwrap_or(u32::MAX / 2).max(1);
        Self {
            beta_min,
            beta_max,
            max_alpha2,
            max_qtilt,
            max_rank: 2 * r,
        }
    }

    fn validate(&self) -> Result<(), WallError> {
        if self.beta_min >= self.beta_max {
            return Err(WallError::WindowEmpty(format!(
                "beta_min = {} is not below beta_max = {}",
                self.beta_min, self.beta_max
            )));
        }
        if !self.max_alpha2.is_positive() {
            return Err(WallError::WindowEmpty(format!("max_alpha2 = {} is not positive", self.max_alpha2)));
        }
        if self.max_qtilt.is_negative() {
            return Err(WallError::WindowEmpty(format!("max_qtilt = {} is negative", self.max_qtilt)));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumeratedWall {
    pub w: ChernCharacter,
    pub geometry: TiltWallGeometry,
}

type Found = ((i64, i64, i64, i64), ChernCharacter, TiltWallGeometry);

/// All ν-walls `Σ_{v,w}` meeting the window with
///
/// * `Q^tilt(w) ≥ 0`, `Q^tilt(v − w) ≥ 0`, `Q^tilt(w) ≤ max_qtilt`,
/// * `0 < ch₁^β(w) < ch₁^β(v)` at some point of the wall inside the window.
///
/// Each wall is reported once, with the candidate `w` (ch₃ set to zero) that is
/// smallest by `(|R|, R, C, D)`, sorted by `(center, radius²)`; vertical rays
/// sort by their `β` with radius² taken as zero.
pub fn enumerate_tilt_walls(v: &ChernCharacter, win: &WallWindow) -> Result<Vec<EnumeratedWall>, WallError> {
    ensure_nonzero(v)?;
    win.validate()?;
    let max_rank = win.max_rank as i64;
    let found: Vec<Found> = (-max_rank..=max_rank)
        .into_par_iter()
        .flat_map_iter(|rank| candidates_of_rank(v, win, rank))
        .collect();

    let mut by_wall: BTreeMap<Vec<Rational>, (Vec<i64>, ChernCharacter, TiltWallGeometry)> = BTreeMap::new();
    for (key, w, g) in found {
        let order = vec![key.0.abs(), key.0, key.1, key.2];
        let id = g.normalized().to_vec();
        match by_wall.get(&id) {
            Some((existing, _, _)) if existing <= &order => {}
            _ => {
                by_wall.insert(id, (order, w, g));
            }
        }
    }
    let mut walls: Vec<EnumeratedWall> = by_wall
        .into_values()
        .map(|(_, w, geometry)| EnumeratedWall { w, geometry })
        .collect();
    walls.sort_by_key(|w| sort_key(&w.geometry));
    Ok(walls)
}

fn sort_key(g: &TiltWallGeometry) -> (Rational, Rational) {
    match &g.kind {
        TiltWallKind::Semicircle { center, radius2 } => (center.clone(), radius2.clone()),
        TiltWallKind::VerticalRay { beta } => (beta.clone(), Rational::zero()),
        _ => (Rational::zero(), Rational::zero()),
    }
}

fn floor_int(x: &Rational) -> i64 {
    x.floor().to_integer().to_i64().expect("search bound fits in i64")
}

fn ceil_int(x: &Rational) -> i64 {
    x.ceil().to_integer().to_i64().expect("search bound fits in i64")
}

type Candidate = ((i64, i64, i64, i64), ChernCharacter, TiltWallGeometry);

fn candidates_of_rank(v: &ChernCharacter, win: &WallWindow, rank: i64) -> Vec<Candidate> {
    let (r, c, d) = (v.ch(0).clone(), v.ch(1).clone(), v.ch(2).clone());
    if rank == 0 && r.is_zero() {
        // both ranks zero: ν-walls are degenerate or empty
        return Vec::new();
    }
    let big_r = int(rank);
    let ends = [&win.beta_min, &win.beta_max];
    // C − βR > 0 and (c − C) − β(r − R) > 0 somewhere in the window
    let c_lo = ends.iter().map(|b| *b * &big_r).min().unwrap();
    let c_hi = ends.iter().map(|b| &c + *b * (&big_r - &r)).max().unwrap();
    let mut out = Vec::new();
    for cc in floor_int(&c_lo) + 1..=ceil_int(&c_hi) - 1 {
        let big_c = int(cc);
        // D ranges over ½Z
        let (d_lo, d_hi) = if rank != 0 {
            let c2 = &big_c * &big_c;
            let e1 = (&c2 - &win.max_qtilt) / (int(2) * &big_r);
            let e2 = &c2 / (int(2) * &big_r);
            if e1 <= e2 {
                (e1, e2)
            } else {
                (e2, e1)
            }
        } else {
            // R = 0, r ≠ 0: the wall is centred at D/C on the side of μ(v)
            // where ch₁^β(v) > C, and Q^tilt(v − w) ≥ 0 bounds D the other way
            let mu = &c / &r;
            let q_bound = &d - (&c - &big_c) * (&c - &big_c) / (int(2) * &r);
            let side = &big_c * &mu;
            if side <= q_bound {
                (side, q_bound)
            } else {
                (q_bound, side)
            }
        };
        for dh in ceil_int(&(&d_lo * int(2)))..=floor_int(&(&d_hi * int(2))) {
            let w = ChernCharacter::from_numerators(rank, cc, dh, 0);
            let qw = q_tilt(&w);
            if qw.is_negative() || qw > win.max_qtilt || q_tilt(&(v - &w)).is_negative() {
                continue;
            }
            let Ok(g) = tilt_wall(v, &w) else { continue };
            if wall_meets_window(&g, v, &w, win) {
                out.push(((rank, cc, dh, 0), w, g));
            }
        }
    }
    out
}

#[derive(Clone, Debug)]
struct Bound {
    value: Rational,
    closed: bool,
}

#[derive(Clone, Debug)]
struct Interval {
    lo: Bound,
    hi: Bound,
}

impl Interval {
    fn closed(lo: Rational, hi: Rational) -> Self {
        Self {
            lo: Bound { value: lo, closed: true },
            hi: Bound { value: hi, closed: true },
        }
    }

    fn is_empty(&self) -> bool {
        match self.lo.value.cmp(&self.hi.value) {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo.closed && self.hi.closed),
            Ordering::Greater => true,
        }
    }

    fn contains(&self, x: &Rational) -> bool {
        let above = match x.cmp(&self.lo.value) {
            Ordering::Greater => true,
            Ordering::Equal => self.lo.closed,
            Ordering::Less => false,
        };
        let below = match x.cmp(&self.hi.value) {
            Ordering::Less => true,
            Ordering::Equal => self.hi.closed,
            Ordering::Greater => false,
        };
        above && below
    }

    fn intersect(&self, other: &Interval) -> Interval {
        let lo = match self.lo.value.cmp(&other.lo.value) {
            Ordering::Greater => self.lo.clone(),
            Ordering::Less => other.lo.clone(),
            Ordering::Equal => Bound {
                value: self.lo.value.clone(),
                closed: self.lo.closed && other.lo.closed,
            },
        };
        let hi = match self.hi.value.cmp(&other.hi.value) {
            Ordering::Less => self.hi.clone(),
            Ordering::Greater => other.hi.clone(),
            Ordering::Equal => Bound {
                value: self.hi.value.clone(),
                closed: self.hi.closed && other.hi.closed,
            },
        };
        Interval { lo, hi }
    }

    /// Restricts to `k0 + k1·β > 0`.
    fn restrict_positive(self, k0: &Rational, k1: &Rational) -> Option<Interval> {
        if k1.is_zero() {
            return k0.is_positive().then_some(self);
        }
        let root = -k0 / k1;
        let half = if k1.is_positive() {
            Interval {
                lo: Bound { value: root, closed: false },
                hi: self.hi.clone(),
            }
        } else {
            Interval {
                lo: self.lo.clone(),
                hi: Bound { value: root, closed: false },
            }
        };
        let out = self.intersect(&half);
        (!out.is_empty()).then_some(out)
    }
}

/// Exact test for a point `(β, a)` of the wall with `β` in the window,
/// `0 < a ≤ max_alpha2` and `0 < ch₁^β(w) < ch₁^β(v)`.
fn wall_meets_window(g: &TiltWallGeometry, v: &ChernCharacter, w: &ChernCharacter, win: &WallWindow) -> bool {
    let window = Interval::closed(win.beta_min.clone(), win.beta_max.clone());
    let (rw, cw) = (w.ch(0), w.ch(1));
    let (rq, cq) = (&(v.ch(0) - rw), &(v.ch(1) - cw));
    let Some(allowed) = window
        .restrict_positive(cw, &-rw)
        .and_then(|i| i.restrict_positive(cq, &-rq))
    else {
        return false;
    };
    match &g.kind {
        TiltWallKind::VerticalRay { beta } => allowed.contains(beta),
        TiltWallKind::Semicircle { center, radius2 } => {
            // a = radius² − (β − center)², so need (β − center)² ∈ [radius² − max_a, radius²)
            let lo = (radius2 - &win.max_alpha2).max(Rational::zero());
            let target = Interval {
                lo: Bound { value: lo, closed: true },
                hi: Bound {
                    value: radius2.clone(),
                    closed: false,
                },
            };
            !square_distance_range(&allowed, center).intersect(&target).is_empty()
        }
        TiltWallKind::Empty | TiltWallKind::Degenerate => false,
    }
}

/// Range of `(β − c)²` for `β` in a nonempty bounded interval.
fn square_distance_range(i: &Interval, c: &Rational) -> Interval {
    let sq = |x: &Rational| (x - c) * (x - c);
    let (g_lo, g_hi) = (sq(&i.lo.value), sq(&i.hi.value));
    let inf = if i.contains(c) || (i.lo.value < *c && *c < i.hi.value) {
        Bound {
            value: Rational::zero(),
            closed: true,
        }
    } else if g_lo < g_hi {
        Bound { value: g_lo.clone(), closed: i.lo.closed }
    } else if g_hi < g_lo {
        Bound { value: g_hi.clone(), closed: i.hi.closed }
    } else {
        Bound {
            value: g_lo.clone(),
            closed: i.lo.closed || i.hi.closed,
        }
    };
    let sup = match g_lo.cmp(&g_hi) {
        Ordering::Greater => Bound { value: g_lo, closed: i.lo.closed },
        Ordering::Less => Bound { value: g_hi, closed: i.hi.closed },
        Ordering::Equal => Bound {
            value: g_lo,
            closed: i.lo.closed || i.hi.closed,
        },
    };
    Interval { lo: inf, hi: sup }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use crate::walls::tilt::wall_apex;

    fn ch(text: &str) -> ChernCharacter {
        ChernCharacter::parse(text).unwrap()
    }

    fn window(v: &ChernCharacter, lo: i64, hi: i64, qmax: i64) -> WallWindow {
        WallWindow::new(v, int(lo), int(hi), int(64), int(qmax))
    }

    #[test]
    fn instanton_has_the_o_minus_one_wall() {
        let v = ch("2,0,-2,0");
        let walls = enumerate_tilt_walls(&v, &window(&v, -3, 0, 16)).unwrap();
        let target = TiltWallKind::Semicircle {
            center: rat(-3, 2),
            radius2: rat(1, 4),
        };
        let hit = walls.iter().find(|e| e.geometry.kind == target).expect("O(-1) wall present");
        assert_eq!(tilt_wall(&v, &hit.w).unwrap().kind, target);
        for pair in walls.windows(2) {
            assert!(sort_key(&pair[0].geometry) <= sort_key(&pair[1].geometry));
        }
        for e in &walls {
            assert!(wall_apex(&e.geometry, &e.w).is_ok() || !matches!(e.geometry.kind, TiltWallKind::Semicircle { .. }));
        }
    }

    #[test]
    fn line_bundle_has_no_walls() {
        let v = ch("1,0,0,0");
        for (lo, hi) in [(-5, 5), (-2, 0), (0, 3)] {
            assert!(enumerate_tilt_walls(&v, &window(&v, lo, hi, 20)).unwrap().is_empty());
        }
    }

    #[test]
    fn empty_window_is_an_error() {
        let v = ch("2,0,-2,0");
        let win = WallWindow::new(&v, int(1), int(1), int(4), int(4));
        assert!(matches!(enumerate_tilt_walls(&v, &win), Err(WallError::WindowEmpty(_))));
    }

    #[test]
    fn deterministic_output() {
        let v = ch("2,-1,-3/2,0");
        let win = window(&v, -4, 0, 12);
        let first = enumerate_tilt_walls(&v, &win).unwrap();
        for _ in 0..3 {
            assert_eq!(enumerate_tilt_walls(&v, &win).unwrap(), first);
        }
    }
}
