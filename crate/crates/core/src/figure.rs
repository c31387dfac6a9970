//! Figure specifications and their CSV / SVG renderings.
//!
//! A figure is a list of curves in the `(β, α)` half-plane, each given by a
//! distinguished curve or a wall. Every curve is sampled at `samples` evenly
//! spaced `β` values; output is byte-stable for a fixed spec.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::chern::{ChernCharacter, ChernError};
use crate::poly::BiPoly;
use crate::rational::{int, parse_rational, to_f64, Rational};
use crate::slope::{SlopeError, StabilityParam};
use crate::surd::decimal;
use crate::walls::{
    bridgeland_wall, distinguished_curve, sample_polynomial, tilt_wall, CurveKind, SamplePoint, SampleRange, WallError,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FigureError {
    #[error("empty range: {0}")]
    EmptyRange(String),
    #[error("a figure needs at least one curve")]
    NoCurves,
    #[error("duplicate curve id {0:?}")]
    DuplicateId(String),
    #[error("invalid figure spec: {0}")]
    InvalidSpec(String),
    #[error("unknown figure {0}; expected 1, 2 or 3")]
    UnknownFigure(u32),
    #[error(transparent)]
    Chern(#[from] ChernError),
    #[error(transparent)]
    Slope(#[from] SlopeError),
    #[error(transparent)]
    Wall(#[from] WallError),
}

impl FigureError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::EmptyRange(_) => "EmptyRange",
            Self::NoCurves => "NoCurves",
            Self::DuplicateId(_) => "DuplicateId",
            Self::InvalidSpec(_) => "InvalidSpec",
            Self::UnknownFigure(_) => "UnknownFigure",
            Self::Chern(e) => e.code(),
            Self::Slope(e) => e.code(),
            Self::Wall(WallError::WindowEmpty(_)) => "EmptyRange",
            Self::Wall(e) => e.code(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FigureFormat {
    Csv,
    Svg,
}

impl FromStr for FigureFormat {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(Self::Csv),
            "svg" => Ok(Self::Svg),
            other => Err(format!("unknown figure format {other:?}; expected csv or svg")),
        }
    }
}

/// What to draw. Characters are `"a,b,c,d"` literals and rationals `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CurveShape {
    L { w: String },
    Theta { w: String },
    Gamma { w: String, s: String },
    TiltWall { v: String, w: String },
    BridgelandWall { v: String, w: String, s: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveRequest {
    pub id: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(flatten)]
    pub shape: CurveShape,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FigureSpec {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub title: Option<String>,
    pub beta_min: String,
    pub beta_max: String,
    pub alpha_max: String,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub format: Option<FigureFormat>,
    pub curves: Vec<CurveRequest>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampledCurve {
    pub id: String,
    pub label: String,
    /// Defining polynomial in `(β, a = α²)`.
    pub poly: BiPoly,
    pub points: Vec<SamplePoint>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Figure {
    pub title: String,
    pub range: SampleRange,
    pub samples: usize,
    pub curves: Vec<SampledCurve>,
}

fn curve(id: &str, label: &str, shape: CurveShape) -> CurveRequest {
    CurveRequest {
        id: id.to_string(),
        label: Some(label.to_string()),
        shape,
    }
}

fn s(text: &str) -> String {
    text.to_string()
}

/// The three stock figures.
///
/// 1. `L`, `Θ`, `Γ` (s = 1/3) of `(2,0,−2,0)` over `β ∈ [−4, 4]`.
/// 2. Curves of `O` and `(0,1,−1/2,1/6)` with their tilt and Bridgeland walls.
/// 3. `L` of `O(3)`, `Γ` of `(0,0,2,3)` and two quartic walls through
///    `(3/2, 3/4)`, `β ∈ [0, 3]`.
pub fn builtin(number: u32) -> Result<FigureSpec, FigureError> {
    let spec = match number {
        1 => FigureSpec {
            title: Some(s("Distinguished curves of (2,0,-2,0)")),
            beta_min: s("-4"),
            beta_max: s("4"),
            alpha_max: s("4"),
            samples: 401,
            format: None,
            curves: vec![
                curve("gamma", "Gamma", CurveShape::Gamma { w: s("2,0,-2,0"), s: s("1/3") }),
                curve("l", "L", CurveShape::L { w: s("2,0,-2,0") }),
                curve("theta", "Theta", CurveShape::Theta { w: s("2,0,-2,0") }),
            ],
        },
        2 => FigureSpec {
            title: Some(s("O and the hyperplane sheaf")),
            beta_min: s("-2"),
            beta_max: s("1"),
            alpha_max: s("2"),
            samples: 301,
            format: None,
            curves: vec![
                curve("bridgeland_wall", "W(O, O_H)", CurveShape::BridgelandWall { v: s("1,0,0,0"), w: s("0,1,-1/2,1/6"), s: s("1/3") }),
                curve("gamma_h", "Gamma(O_H)", CurveShape::Gamma { w: s("0,1,-1/2,1/6"), s: s("1/3") }),
                curve("gamma_o", "Gamma(O)", CurveShape::Gamma { w: s("1,0,0,0"), s: s("1/3") }),
                curve("l_o", "L(O)", CurveShape::L { w: s("1,0,0,0") }),
                curve("theta_h", "Theta(O_H)", CurveShape::Theta { w: s("0,1,-1/2,1/6") }),
                curve("theta_o", "Theta(O)", CurveShape::Theta { w: s("1,0,0,0") }),
                curve("tilt_wall", "nu-wall(O, O_H)", CurveShape::TiltWall { v: s("1,0,0,0"), w: s("0,1,-1/2,1/6") }),
            ],
        },
        3 => FigureSpec {
            title: Some(s("Two quartic walls meeting at beta = 3/2")),
            beta_min: s("0"),
            beta_max: s("3"),
            alpha_max: s("2"),
            samples: 301,
            format: None,
            curves: vec![
                curve("gamma_c", "Gamma((0,0,2,3))", CurveShape::Gamma { w: s("0,0,2,3"), s: s("1/3") }),
                curve("l_o3", "L(O(3))", CurveShape::L { w: s("1,3,9/2,9/2") }),
                curve("wall_o_sum", "W(O, O(1)+O(2))", CurveShape::BridgelandWall { v: s("1,0,0,0"), w: s("2,3,5/2,3/2"), s: s("1/3") }),
                curve("wall_o3_c", "W(O(3), (0,0,2,3))", CurveShape::BridgelandWall { v: s("1,3,9/2,9/2"), w: s("0,0,2,3"), s: s("1/3") }),
            ],
        },
        other => return Err(FigureError::UnknownFigure(other)),
    };
    Ok(spec)
}

fn rational_field(name: &str, text: &str) -> Result<Rational, FigureError> {
    parse_rational(text).map_err(|_| FigureError::InvalidSpec(format!("{name} = {text:?} is not a rational")))
}

fn param(text: &str) -> Result<StabilityParam, FigureError> {
    Ok(StabilityParam::new(rational_field("s", text)?)?)
}

impl CurveShape {
    pub fn polynomial(&self) -> Result<BiPoly, FigureError> {
        let ch = |text: &str| ChernCharacter::parse(text);
        let poly = match self {
            Self::L { w } => distinguished_curve(CurveKind::LLine, &ch(w)?, None)?.poly,
            Self::Theta { w } => distinguished_curve(CurveKind::ThetaCurve, &ch(w)?, None)?.poly,
            Self::Gamma { w, s } => distinguished_curve(CurveKind::GammaCurve, &ch(w)?, Some(&param(s)?))?.poly,
            Self::TiltWall { v, w } => {
                let g = tilt_wall(&ch(v)?, &ch(w)?)?;
                BiPoly::from_terms([((2, 0), g.x.clone()), ((0, 1), g.x), ((1, 0), g.y), ((0, 0), g.z)])
            }
            Self::BridgelandWall { v, w, s } => bridgeland_wall(&ch(v)?, &ch(w)?, &param(s)?)?.poly,
        };
        Ok(poly)
    }
}

impl FigureSpec {
    pub fn from_json(text: &str) -> Result<Self, FigureError> {
        serde_json::from_str(text).map_err(|e| FigureError::InvalidSpec(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("figure specs serialize")
    }

    fn range(&self) -> Result<SampleRange, FigureError> {
        let range = SampleRange {
            beta_min: rational_field("beta_min", &self.beta_min)?,
            beta_max: rational_field("beta_max", &self.beta_max)?,
            alpha_max: rational_field("alpha_max", &self.alpha_max)?,
        };
        if range.beta_min >= range.beta_max {
            return Err(FigureError::EmptyRange(format!("beta_min = {} is not below beta_max = {}", self.beta_min, self.beta_max)));
        }
        if !range.alpha_max.is_positive() {
            return Err(FigureError::EmptyRange(format!("alpha_max = {} is not positive", self.alpha_max)));
        }
        Ok(range)
    }

    fn validate(&self) -> Result<(), FigureError> {
        if self.curves.is_empty() {
            return Err(FigureError::NoCurves);
        }
        if self.samples < 2 {
            return Err(FigureError::InvalidSpec(format!("samples = {} (need at least 2)", self.samples)));
        }
        let mut seen = BTreeSet::new();
        for c in &self.curves {
            let ok = !c.id.is_empty() && c.id.chars().all(|ch| ch.is_ascii_alphanumeric() || "_-.".contains(ch));
            if !ok {
                return Err(FigureError::InvalidSpec(format!("curve id {:?} must be nonempty [A-Za-z0-9_.-]", c.id)));
            }
            if !seen.insert(c.id.as_str()) {
                return Err(FigureError::DuplicateId(c.id.clone()));
            }
        }
        Ok(())
    }

    /// Samples every curve.
    pub fn render(&self) -> Result<Figure, FigureError> {
        self.validate()?;
        let range = self.range()?;
        let curves = self
            .curves
            .par_iter()
            .map(|c| {
                let poly = c.shape.polynomial()?;
                let points = sample_polynomial(&poly, &range, self.samples)?;
                Ok(SampledCurve {
                    id: c.id.clone(),
                    label: c.label.clone().unwrap_or_else(|| c.id.clone()),
                    poly,
                    points,
                })
            })
            .collect::<Result<Vec<_>, FigureError>>()?;
        Ok(Figure {
            title: self.title.clone().unwrap_or_default(),
            range,
            samples: self.samples,
            curves,
        })
    }
}

/// One CSV row; `beta` and `alpha` are 12-significant-digit decimals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CsvRow {
    pub curve_id: String,
    pub beta: String,
    pub alpha: String,
}

impl Figure {
    /// Rows sorted by `(curve_id, β)`, then by `α`.
    pub fn rows(&self) -> Vec<CsvRow> {
        let mut keyed: Vec<(&str, &Rational, Rational, CsvRow)> = self
            .curves
            .iter()
            .flat_map(|c| {
                c.points.iter().map(move |p| {
                    let row = CsvRow {
                        curve_id: c.id.clone(),
                        beta: decimal(&p.beta),
                        alpha: p.alpha_decimal(),
                    };
                    (c.id.as_str(), &p.beta, p.a.approx(), row)
                })
            })
            .collect();
        keyed.sort_by(|x, y| (x.0, x.1, &x.2).cmp(&(y.0, y.1, &y.2)));
        keyed.into_iter().map(|(_, _, _, row)| row).collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("curve_id,beta,alpha\n");
        for row in self.rows() {
            let _ = writeln!(out, "{},{},{}", row.curve_id, row.beta, row.alpha);
        }
        out
    }

    fn grid_index(&self, beta: &Rational) -> i64 {
        let width = &self.range.beta_max - &self.range.beta_min;
        ((beta - &self.range.beta_min) * int(self.samples as i64 - 1) / width)
            .round()
            .to_integer()
            .to_i64()
            .unwrap_or(0)
    }

    /// Polyline pieces per branch, breaking wherever a sample is missing.
    fn subpaths(&self, c: &SampledCurve) -> Vec<Vec<(f64, f64)>> {
        let mut branches: Vec<usize> = c.points.iter().map(|p| p.branch).collect();
        branches.sort_unstable();
        branches.dedup();
        let mut out = Vec::new();
        for b in branches {
            let mut current: Vec<(f64, f64)> = Vec::new();
            let mut last: Option<i64> = None;
            for p in c.points.iter().filter(|p| p.branch == b) {
                let idx = self.grid_index(&p.beta);
                if last.is_some_and(|l| idx - l > 1) && !current.is_empty() {
                    out.push(std::mem::take(&mut current));
                }
                last = Some(idx);
                let alpha: f64 = p.alpha_decimal().parse().unwrap_or(0.0);
                current.push((to_f64(&p.beta), alpha));
            }
            if !current.is_empty() {
                out.push(current);
            }
        }
        out
    }

    pub fn to_svg(&self) -> String {
        const PALETTE: [&str; 7] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf"];
        let (b0, b1) = (to_f64(&self.range.beta_min), to_f64(&self.range.beta_max));
        let a1 = self
            .curves
            .iter()
            .flat_map(|c| c.points.iter())
            .map(|p| p.alpha_decimal().parse::<f64>().unwrap_or(0.0))
            .fold(0.0f64, f64::max);
        let a1 = if a1 > 0.0 { a1 } else { to_f64(&self.range.alpha_max) };
        let (w, h) = (b1 - b0, a1);
        let pad = 0.05 * w.max(h);
        let font = 0.035 * w.max(h);
        let (vx, vy, vw, vh) = (b0 - pad, -a1 - pad - font, w + 2.0 * pad, h + 2.0 * pad + font);
        let px = 800.0;
        let py = (px * vh / vw).clamp(200.0, 1600.0);

        let mut out = String::new();
        let _ = writeln!(
            out,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="{vx:.6} {vy:.6} {vw:.6} {vh:.6}" width="{px:.0}" height="{py:.0}" preserveAspectRatio="none">"#
        );
        if !self.title.is_empty() {
            let _ = writeln!(out, "<title>{}</title>", xml_escape(&self.title));
        }
        let _ = writeln!(
            out,
            r#"<rect x="{b0:.6}" y="{:.6}" width="{w:.6}" height="{h:.6}" fill="none" stroke="black" vector-effect="non-scaling-stroke"/>"#,
            -a1
        );
        for (i, c) in self.curves.iter().enumerate() {
            let color = PALETTE[i % PALETTE.len()];
            let mut d = String::new();
            let pieces = self.subpaths(c);
            for piece in &pieces {
                for (j, (x, y)) in piece.iter().enumerate() {
                    let _ = write!(d, "{}{:.6},{:.6}", if j == 0 { "M" } else { " L" }, x, -y);
                    if j == 0 && piece.len() == 1 {
                        let _ = write!(d, " L{:.6},{:.6}", x, -y);
                    }
                }
                d.push(' ');
            }
            let _ = writeln!(
                out,
                r#"<path id="{}" d="{}" fill="none" stroke="{color}" vector-effect="non-scaling-stroke"/>"#,
                xml_escape(&c.id),
                d.trim_end()
            );
            if let Some((x, y)) = pieces.iter().max_by_key(|p| p.len()).and_then(|p| p.last()) {
                let _ = writeln!(
                    out,
                    r#"<text x="{x:.6}" y="{:.6}" font-size="{font:.6}" fill="{color}">{}</text>"#,
                    -y,
                    xml_escape(&c.label)
                );
            }
        }
        out.push_str("</svg>\n");
        out
    }

    pub fn emit(&self, format: FigureFormat) -> String {
        match format {
            FigureFormat::Csv => self.to_csv(),
            FigureFormat::Svg => self.to_svg(),
        }
    }
}

fn xml_escape(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;").replace('"', "&quot;")
}

/// `|f(β, α²)| / Σ|terms|` at decimal coordinates; zero when every term is.
pub fn relative_residual(poly: &BiPoly, beta: f64, alpha: f64) -> f64 {
    let a = alpha * alpha;
    let (mut value, mut scale) = (0.0f64, 0.0f64);
    for (&(i, j), c) in poly.terms() {
        let t = to_f64(c) * beta.powi(i as i32) * a.powi(j as i32);
        value += t;
        scale += t.abs();
    }
    if scale.is_zero() {
        0.0
    } else {
        value.abs() / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_figures_render() {
        for n in 1..=3 {
            let fig = builtin(n).unwrap().render().unwrap();
            assert!(fig.curves.iter().any(|c| !c.points.is_empty()));
            for c in &fig.curves {
                for p in &c.points {
                    let alpha: f64 = p.alpha_decimal().parse().unwrap();
                    assert!(relative_residual(&c.poly, to_f64(&p.beta), alpha) <= 1e-10, "{} at {}", c.id, p.beta);
                }
            }
        }
        assert_eq!(builtin(4), Err(FigureError::UnknownFigure(4)));
    }

    #[test]
    fn figure_three_passes_through_the_crossing() {
        let fig = builtin(3).unwrap().render().unwrap();
        let csv = fig.to_csv();
        for id in ["wall_o_sum", "wall_o3_c"] {
            assert!(csv.contains(&format!("{id},1.50000000000,0.866025403784\n")), "{id}");
        }
    }

    #[test]
    fn theta_points_on_figure_one() {
        let fig = builtin(1).unwrap().render().unwrap();
        let theta = fig.curves.iter().find(|c| c.id == "theta").unwrap();
        assert!(!theta.points.is_empty());
        for p in &theta.points {
            let a = match &p.a {
                crate::walls::SectionRoot::Rational(a) => a.clone(),
                other => panic!("Θ is linear in a, got {other:?}"),
            };
            assert_eq!(&p.beta * &p.beta - a, int(2));
        }
    }

    #[test]
    fn two_samples_give_two_rows() {
        let mut spec = builtin(1).unwrap();
        spec.samples = 2;
        spec.curves.retain(|c| c.id == "theta" || c.id == "l");
        let fig = spec.render().unwrap();
        let rows = fig.rows();
        assert_eq!(rows.iter().filter(|r| r.curve_id == "theta").count(), 2);
        assert_eq!(rows.iter().filter(|r| r.curve_id == "l").count(), 2);
    }

    #[test]
    fn output_is_deterministic() {
        let spec = builtin(2).unwrap();
        let (a, b) = (spec.render().unwrap(), spec.render().unwrap());
        assert_eq!(a.to_svg(), b.to_svg());
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.to_svg().matches("<path ").count() == spec.curves.len());
    }

    #[test]
    fn spec_round_trips_and_validates() {
        let spec = builtin(3).unwrap();
        assert_eq!(FigureSpec::from_json(&spec.to_json()).unwrap(), spec);
        let mut bad = spec.clone();
        bad.beta_max = bad.beta_min.clone();
        assert!(matches!(bad.render(), Err(FigureError::EmptyRange(_))));
        let mut bad = spec.clone();
        bad.curves.clear();
        assert_eq!(bad.render(), Err(FigureError::NoCurves));
        let mut bad = spec.clone();
        bad.curves.push(bad.curves[0].clone());
        assert!(matches!(bad.render(), Err(FigureError::DuplicateId(_))));
        assert!(FigureSpec::from_json("{").is_err());
    }
}
