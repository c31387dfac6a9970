//! Asymptotic stability verdicts relative to a set of candidate subobjects.

use std::cmp::Ordering;
use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use super::compare::PreparedSlope;
use super::series::lambda_function;
use super::gieseker::eventual_sign;
use super::{AsymError, CurveClass, Side};
use crate::chern::{dual, numerical_dimension, reduced_hilbert, ChernCharacter};
use crate::poly::UniPoly;
use crate::rational::Rational;
use crate::slope::StabilityParam;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Stable,
    Semistable,
    Destabilized(ChernCharacter),
    Rejected(String),
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Stable => write!(f, "stable"),
            Self::Semistable => write!(f, "semistable"),
            Self::Destabilized(u) => write!(f, "destabilized by ({u})"),
            Self::Rejected(reason) => write!(f, "rejected: {reason}"),
        }
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(None)?;
        match self {
            Self::Stable => map.serialize_entry("verdict", "stable")?,
            Self::Semistable => map.serialize_entry("verdict", "semistable")?,
            Self::Destabilized(u) => {
                map.serialize_entry("verdict", "destabilized")?;
                map.serialize_entry("by", u)?;
            }
            Self::Rejected(reason) => {
                map.serialize_entry("verdict", "rejected")?;
                map.serialize_entry("reason", reason)?;
            }
        }
        map.end()
    }
}

/// Per-candidate outcomes, or the reason the character was rejected.
type Evaluation<'a> = Result<Vec<(&'a ChernCharacter, Outcome)>, String>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Harmless,
    Tie,
    Destabilizes,
}

/// Worst outcome wins; among destabilizers the smallest label is reported.
fn aggregate<'a>(outcomes: impl IntoIterator<Item = (&'a ChernCharacter, Outcome)>) -> Verdict {
    let mut tie = false;
    let mut worst: Option<&ChernCharacter> = None;
    for (label, outcome) in outcomes {
        match outcome {
            Outcome::Harmless => {}
            Outcome::Tie => tie = true,
            Outcome::Destabilizes => {
                if worst.is_none_or(|w| label < w) {
                    worst = Some(label);
                }
            }
        }
    }
    match (worst, tie) {
        (Some(u), _) => Verdict::Destabilized(u.clone()),
        (None, true) => Verdict::Semistable,
        (None, false) => Verdict::Stable,
    }
}

/// The verdict each candidate would give on its own.
fn singletons<'a>(outcomes: impl IntoIterator<Item = (&'a ChernCharacter, Outcome)>) -> Vec<(&'a ChernCharacter, Verdict)> {
    outcomes
        .into_iter()
        .map(|(label, o)| (label, aggregate([(label, o)])))
        .collect()
}

fn outcome(ord: Ordering, destabilizing: Ordering, strict: bool) -> Outcome {
    if ord == destabilizing {
        Outcome::Destabilizes
    } else if ord == Ordering::Equal {
        if strict {
            Outcome::Destabilizes
        } else {
            Outcome::Tie
        }
    } else {
        Outcome::Harmless
    }
}

/// First nonzero component positive.
pub(crate) fn is_effective(v: &ChernCharacter) -> bool {
    v.components()
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_positive())
}

fn rejection(v: &ChernCharacter) -> Option<String> {
    if numerical_dimension(v) < 0 {
        Some("zero character".into())
    } else if !is_effective(v) {
        Some("first nonzero component is negative; not the character of a sheaf".into())
    } else {
        None
    }
}

/// Candidates that could be proper subsheaves: nonzero, different from `v`,
/// effective, and of dimension at most that of `v`.
pub(crate) fn is_proper(v: &ChernCharacter, u: &ChernCharacter) -> bool {
    u != v && is_effective(u) && numerical_dimension(u) <= numerical_dimension(v)
}

fn ensure_rank_zero(v: &ChernCharacter) -> Result<(), AsymError> {
    if v.rank().is_zero() {
        Ok(())
    } else {
        Err(AsymError::NonzeroRank)
    }
}

/// A candidate with its slope function along the curve, in `t`.
#[derive(Clone, Debug)]
struct Prepared {
    label: ChernCharacter,
    compared: ChernCharacter,
    dim: i32,
    slope: PreparedSlope,
}

/// Candidates prepared once for classifying many characters at `β → −∞`.
#[derive(Clone, Debug)]
pub struct LeftClassifier {
    curve: CurveClass,
    s: StabilityParam,
    entries: Vec<Prepared>,
}

impl LeftClassifier {
    pub fn new(c_gamma: &Rational, s: &StabilityParam, candidates: &[ChernCharacter]) -> Result<Self, AsymError> {
        let labeled: Vec<_> = candidates.iter().map(|u| (u.clone(), u.clone())).collect();
        Self::labeled(c_gamma, s, labeled)
    }

    /// `(label, character compared)` pairs; non-effective characters can
    /// never be subobjects and are dropped here.
    fn labeled(c_gamma: &Rational, s: &StabilityParam, candidates: Vec<(ChernCharacter, ChernCharacter)>) -> Result<Self, AsymError> {
        let curve = CurveClass::new(Side::LeftInfinity, c_gamma.clone())?;
        let entries = candidates
            .into_iter()
            .filter(|(_, u)| is_effective(u))
            .map(|(label, u)| Prepared {
                slope: PreparedSlope::new(lambda_function(&u, curve.c_gamma(), s).in_t(curve.side())),
                dim: numerical_dimension(&u),
                label,
                compared: u,
            })
            .collect();
        Ok(Self {
            curve,
            s: s.clone(),
            entries,
        })
    }

    /// `u` destabilizes when `λ(v) < λ(u)` eventually (or `=` when `strict`).
    pub fn classify(&self, v: &ChernCharacter, strict: bool) -> Result<Verdict, AsymError> {
        Ok(match self.evaluate(v, strict)? {
            Err(reason) => Verdict::Rejected(reason),
            Ok(outcomes) => aggregate(outcomes),
        })
    }

    /// Per-candidate verdicts, in candidate order, for the candidates that
    /// count against `v`; empty when `v` is rejected.
    pub fn outcomes(&self, v: &ChernCharacter, strict: bool) -> Result<Vec<(&ChernCharacter, Verdict)>, AsymError> {
        Ok(self.evaluate(v, strict)?.map(singletons).unwrap_or_default())
    }

    fn evaluate<'a>(&'a self, v: &ChernCharacter, strict: bool) -> Result<Evaluation<'a>, AsymError> {
        ensure_rank_zero(v)?;
        if let Some(reason) = rejection(v) {
            return Ok(Err(reason));
        }
        let d = numerical_dimension(v);
        let fv = PreparedSlope::new(lambda_function(v, self.curve.c_gamma(), &self.s).in_t(self.curve.side()));
        Ok(Ok(self
            .entries
            .iter()
            .filter(|e| e.dim <= d && e.compared != *v)
            .map(|e| (&e.label, outcome(fv.compare(&e.slope), Ordering::Less, strict)))
            .collect()))
    }
}

/// Candidates prepared once for classifying many characters at `β → +∞`.
///
/// The verdict is the left verdict of the duals, checked against a direct
/// right-side comparison in which `u` destabilizes when `λ(v) > λ(u)`
/// eventually. An identically infinite slope counts as `+∞` or `−∞` according
/// to the sign of its real part, so that both routes see the same order.
#[derive(Clone, Debug)]
pub struct RightClassifier {
    via_dual: LeftClassifier,
    direct: Vec<Prepared>,
}

impl RightClassifier {
    pub fn new(c_gamma: &Rational, s: &StabilityParam, candidates: &[ChernCharacter]) -> Result<Self, AsymError> {
        let labeled: Vec<_> = candidates.iter().map(|u| (u.clone(), dual(u))).collect();
        let via_dual = LeftClassifier::labeled(c_gamma, s, labeled)?;
        let curve = CurveClass::new(Side::RightInfinity, c_gamma.clone())?;
        let direct = via_dual
            .entries
            .iter()
            .map(|e| Prepared {
                slope: PreparedSlope::new(lambda_function(&e.label, curve.c_gamma(), s).in_t(curve.side())),
                ..e.clone()
            })
            .collect();
        Ok(Self { via_dual, direct })
    }

    pub fn classify(&self, v: &ChernCharacter, strict: bool) -> Result<Verdict, AsymError> {
        Ok(match self.evaluate(v, strict)? {
            Err(reason) => Verdict::Rejected(reason),
            Ok(outcomes) => aggregate(outcomes),
        })
    }

    /// As [`LeftClassifier::outcomes`], labeled by the original candidates.
    pub fn outcomes(&self, v: &ChernCharacter, strict: bool) -> Result<Vec<(&ChernCharacter, Verdict)>, AsymError> {
        Ok(self.evaluate(v, strict)?.map(singletons).unwrap_or_default())
    }

    fn evaluate<'a>(&'a self, v: &ChernCharacter, strict: bool) -> Result<Evaluation<'a>, AsymError> {
        ensure_rank_zero(v)?;
        let dv = dual(v);
        let via_dual = self.via_dual.evaluate(&dv, strict)?;
        let Ok(via_dual) = via_dual else {
            return Ok(via_dual);
        };
        let d = numerical_dimension(&dv);
        let curve = CurveClass::new(Side::RightInfinity, self.via_dual.curve.c_gamma().clone())?;
        let fv = PreparedSlope::new(lambda_function(v, curve.c_gamma(), &self.via_dual.s).in_t(curve.side()));
        let direct = self
            .direct
            .iter()
            .filter(|e| e.dim <= d && e.compared != dv)
            .map(|e| (&e.label, outcome(fv.compare_signed(&e.slope), Ordering::Greater, strict)));
        for (x, y) in via_dual.iter().zip(direct) {
            if *x != y {
                return Err(AsymError::DualityMismatch(format!(
                    "candidate ({}): dual route {:?}, direct route {:?}",
                    x.0, x.1, y.1
                )));
            }
        }
        Ok(Ok(via_dual))
    }
}

/// Candidates prepared once for Gieseker verdicts: a candidate of lower
/// dimension destabilizes (the sheaf would not be pure), otherwise reduced
/// Hilbert polynomials are compared with the candidate as a subsheaf, as
/// [`gs_compare`](super::gs_compare) does in `AgainstSub` mode.
#[derive(Clone, Debug)]
pub struct GiesekerClassifier {
    entries: Vec<(ChernCharacter, i32, UniPoly)>,
}

impl GiesekerClassifier {
    pub fn new(candidates: &[ChernCharacter]) -> Result<Self, AsymError> {
        let mut entries = Vec::with_capacity(candidates.len());
        for u in candidates.iter().filter(|u| is_effective(u)) {
            let d = numerical_dimension(u);
            entries.push((u.clone(), d, reduced(u, d)?));
        }
        Ok(Self { entries })
    }

    pub fn classify(&self, v: &ChernCharacter, strict: bool) -> Result<Verdict, AsymError> {
        Ok(match self.evaluate(v, strict)? {
            Err(reason) => Verdict::Rejected(reason),
            Ok(outcomes) => aggregate(outcomes),
        })
    }

    /// As [`LeftClassifier::outcomes`].
    pub fn outcomes(&self, v: &ChernCharacter, strict: bool) -> Result<Vec<(&ChernCharacter, Verdict)>, AsymError> {
        Ok(self.evaluate(v, strict)?.map(singletons).unwrap_or_default())
    }

    fn evaluate<'a>(&'a self, v: &ChernCharacter, strict: bool) -> Result<Evaluation<'a>, AsymError> {
        if let Some(reason) = rejection(v) {
            return Ok(Err(reason));
        }
        let d = numerical_dimension(v);
        let pv = reduced(v, d)?;
        Ok(Ok(self
            .entries
            .iter()
            .filter(|(u, du, _)| *du <= d && u != v)
            .map(|(u, du, pu)| {
                let o = if *du < d {
                    Outcome::Destabilizes
                } else {
                    outcome(eventual_sign(&(&pv - pu)), Ordering::Less, strict)
                };
                (u, o)
            })
            .collect()))
    }
}

/// Zero-dimensional characters all have reduced polynomial 1.
fn reduced(v: &ChernCharacter, d: i32) -> Result<UniPoly, AsymError> {
    if d == 0 {
        Ok(UniPoly::new(vec![Rational::one()]))
    } else {
        Ok(reduced_hilbert(v, d as i64)?)
    }
}

/// Verdict at `β → −∞` along `a = c·β²`; see [`LeftClassifier`].
pub fn classify_left_along(
    v: &ChernCharacter,
    c_gamma: &Rational,
    s: &StabilityParam,
    candidates: &[ChernCharacter],
    strict: bool,
) -> Result<Verdict, AsymError> {
    ensure_rank_zero(v)?;
    LeftClassifier::new(c_gamma, s, candidates)?.classify(v, strict)
}

/// [`classify_left_along`] with `c_gamma = 0`.
pub fn classify_left(v: &ChernCharacter, s: &StabilityParam, candidates: &[ChernCharacter], strict: bool) -> Result<Verdict, AsymError> {
    classify_left_along(v, &Rational::zero(), s, candidates, strict)
}

/// Verdict at `β → +∞` along `a = c·β²`; see [`RightClassifier`].
pub fn classify_right_along(
    v: &ChernCharacter,
    c_gamma: &Rational,
    s: &StabilityParam,
    candidates: &[ChernCharacter],
    strict: bool,
) -> Result<Verdict, AsymError> {
    ensure_rank_zero(v)?;
    RightClassifier::new(c_gamma, s, candidates)?.classify(v, strict)
}

/// [`classify_right_along`] with `c_gamma = 0`.
pub fn classify_right(v: &ChernCharacter, s: &StabilityParam, candidates: &[ChernCharacter], strict: bool) -> Result<Verdict, AsymError> {
    classify_right_along(v, &Rational::zero(), s, candidates, strict)
}

/// See [`GiesekerClassifier`].
pub fn gieseker_verdict(v: &ChernCharacter, candidates: &[ChernCharacter], strict: bool) -> Result<Verdict, AsymError> {
    GiesekerClassifier::new(candidates)?.classify(v, strict)
}
