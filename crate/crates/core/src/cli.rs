//! The `p3walls` command line.
//!
//! Every command prints one JSON document on stdout. Rationals are `"p/q"`
//! strings, infinite slopes are `"inf"`, and each document carries
//! `"schema_version"`. Exit status is 0 on success, 1 on a usage error and 2
//! on a domain error; domain errors print `{"code", "message"}` on stderr.

use std::cmp::Ordering;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::asymptotics::{
    asym_compare_lambda, asym_compare_nu, candidate_grid, classify_left_along, classify_right_along, gieseker_verdict,
    gs_compare, lambda_series, limit_table_nu, limit_table_nu_closed_form, nu_series, AsymError, AsymOrdering, CurveClass,
    GsMode, LaurentSlope, Side,
};
use crate::chern::{
    delta, dual, hilbert_polynomial, numerical_dimension, q_bmt, q_tilt, reduced_hilbert, tensor_line, twist, ChernCharacter,
    ChernError,
};
use crate::figure::{builtin, FigureError, FigureFormat, FigureSpec};
use crate::poly::{BiPoly, UniPoly};
use crate::rational::{format_rational, parse_rational, Rational};
use crate::slope::{compare_lambda, lambda, mu, nu, region_classify, HalfPlanePoint, SlopeError, StabilityParam};
use crate::surd::decimal;
use crate::walls::{
    bridgeland_wall, distinguished_curve, enumerate_tilt_walls, tilt_wall, wall_apex, wall_section, CurveKind,
    TiltWallKind, WallError, WallWindow,
};

pub const SCHEMA_VERSION: u32 = 1;

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain { code: String, message: String },
}

impl CliError {
    fn domain(code: &str, message: impl Into<String>) -> Self {
        Self::Domain {
            code: code.to_string(),
            message: message.into(),
        }
    }
}

macro_rules! domain_from {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                Self::domain(e.code(), e.to_string())
            }
        })*
    };
}

domain_from!(ChernError, SlopeError, WallError, AsymError, FigureError);

type CmdResult = Result<Value, CliError>;

fn rational(text: &str) -> Result<Rational, String> {
    parse_rational(text).map_err(|e| e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "p3walls", version, about = "Exact slopes, walls and asymptotic stability for Chern characters on P3")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Lattice operations on a single character.
    #[command(subcommand)]
    Chern(ChernCmd),
    /// μ, ν and λ slopes at a point.
    #[command(subcommand)]
    Slope(SlopeCmd),
    /// Shift k with E[k] in the double-tilted heart.
    Region {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Tilt and Bridgeland walls.
    #[command(subcommand)]
    Wall(WallCmd),
    /// Distinguished curves L, Θ and Γ.
    Curve {
        kind: CurveArg,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Option<Rational>,
    },
    /// Numerical ν-walls of a character inside a window.
    Enumerate(EnumerateArgs),
    /// Asymptotics along a = c·β² as β → ±∞.
    #[command(subcommand)]
    Asym(AsymCmd),
    /// Hilbert polynomial and its truncations.
    Hilbert {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        /// Truncation depth of the reduced polynomial.
        #[arg(long, allow_hyphen_values = true)]
        k: Option<i64>,
        /// Evaluate at this integer.
        #[arg(long, allow_hyphen_values = true)]
        n: Option<i64>,
    },
    /// Sample a figure and write it as CSV or SVG.
    Plot(PlotArgs),
}

#[derive(Args, Debug)]
struct PointArgs {
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    beta: Rational,
    #[command(flatten)]
    alpha: AlphaArgs,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct AlphaArgs {
    /// a = α².
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    alpha2: Option<Rational>,
    /// α, squared on input.
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    alpha: Option<Rational>,
}

impl PointArgs {
    fn point(&self) -> Result<HalfPlanePoint, CliError> {
        let a = match (&self.alpha.alpha2, &self.alpha.alpha) {
            (Some(a), _) => a.clone(),
            (None, Some(alpha)) => alpha * alpha,
            (None, None) => return Err(CliError::Usage("one of --alpha2 or --alpha is required".into())),
        };
        Ok(HalfPlanePoint::new(self.beta.clone(), a)?)
    }
}

#[derive(Subcommand, Debug)]
enum ChernCmd {
    /// ch^β = ch·e^{−βH}.
    Twist {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        beta: Rational,
    },
    /// ch ⊗ O(k).
    Tensor {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[arg(long, allow_hyphen_values = true)]
        k: i64,
    },
    /// Derived dual.
    Dual {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
    },
    /// δ_ij(v, w) = ch_i(v)ch_j(w) − ch_j(v)ch_i(w).
    Delta {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        j: usize,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// Q^tilt = ch₁² − 2ch₀ch₂.
    Qtilt {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
    },
    /// Generalized Bogomolov form at a point.
    Qbmt {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[command(flatten)]
        point: PointArgs,
    },
    /// Numerical dimension (−1 for the zero character).
    Dim {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
    },
    /// Summary of invariants.
    Info {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
    },
}

#[derive(Subcommand, Debug)]
enum SlopeCmd {
    Mu {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
    },
    Nu {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[command(flatten)]
        point: PointArgs,
    },
    Lambda {
        #[arg(long, allow_hyphen_values = true)]
        ch: String,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Rational,
    },
    /// Sign of λ(v) − λ(u).
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[command(flatten)]
        point: PointArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Rational,
    },
}

#[derive(Subcommand, Debug)]
enum WallCmd {
    /// The ν-wall x(β² + a) + yβ + z = 0.
    Tilt {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
    },
    /// The λ-wall, quadratic in a.
    Bridgeland {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Rational,
    },
    /// Positive a on the λ-wall at fixed β.
    Section {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        w: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Rational,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        beta: Rational,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CurveArg {
    L,
    Theta,
    Gamma,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(long, allow_hyphen_values = true)]
    v: String,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    beta_min: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    beta_max: Rational,
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    max_qtilt: Rational,
    /// Upper bound on a; defaults to (beta_max − beta_min)².
    #[arg(long, value_parser = rational, allow_hyphen_values = true)]
    max_alpha2: Option<Rational>,
    /// Upper bound on |ch₀(w)|; defaults to 2·max(|ch₀(v)|, 1).
    #[arg(long)]
    max_rank: Option<u32>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SlopeKind {
    Lambda,
    Nu,
}

#[derive(Args, Debug)]
struct CurveClassArgs {
    #[arg(long, value_parser = parse_side)]
    side: Side,
    /// a/β² along the curve, 0 ≤ c < 1.
    #[arg(long, value_parser = rational, default_value = "0")]
    cgamma: Rational,
}

impl CurveClassArgs {
    fn curve(&self) -> Result<CurveClass, CliError> {
        Ok(CurveClass::new(self.side, self.cgamma.clone())?)
    }
}

fn parse_side(text: &str) -> Result<Side, String> {
    text.parse()
}

fn parse_mode(text: &str) -> Result<GsMode, String> {
    text.parse()
}

#[derive(Subcommand, Debug)]
enum AsymCmd {
    /// Eventual sign of slope(v) − slope(u).
    Compare {
        #[command(flatten)]
        curve: CurveClassArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, value_enum, default_value = "lambda")]
        slope: SlopeKind,
    },
    /// Verdict for a rank-zero character against a candidate file.
    Classify {
        #[command(flatten)]
        curve: CurveClassArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Rational,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        /// One character per line; `#` starts a comment.
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Gieseker verdict against a candidate file.
    Gieseker {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long)]
        candidates: PathBuf,
        #[arg(long)]
        strict: bool,
    },
    /// Bounded grid of candidate subcharacters.
    Candidates {
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 2)]
        bound: u32,
        /// Also write them as a candidate file.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// lim ν/(∓β) from the series, next to the closed form.
    Limit {
        #[command(flatten)]
        curve: CurveClassArgs,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Leading terms of the expansion in β.
    Series {
        #[command(flatten)]
        curve: CurveClassArgs,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        s: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
        #[arg(long, default_value_t = 3)]
        depth: usize,
        #[arg(long, value_enum, default_value = "lambda")]
        slope: SlopeKind,
    },
    /// Truncated reduced Hilbert polynomial comparison.
    Gs {
        #[arg(long, allow_hyphen_values = true)]
        e: String,
        #[arg(long, allow_hyphen_values = true)]
        other: String,
        #[arg(long)]
        k: i64,
        #[arg(long, value_parser = parse_mode, default_value = "sub")]
        mode: GsMode,
    },
}

#[derive(Args, Debug)]
#[group(skip)]
struct PlotArgs {
    /// Stock figure 1, 2 or 3.
    #[arg(long, required_unless_present = "spec", conflicts_with = "spec")]
    figure: Option<u32>,
    /// JSON figure spec.
    #[arg(long)]
    spec: Option<PathBuf>,
    /// Output file; the extension picks the format unless --format is given.
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    format: Option<String>,
    /// Override the number of β samples.
    #[arg(long)]
    n: Option<usize>,
}

/// Parses `args` (program name first) and runs the command.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match run(cli.command) {
        Ok(value) => Outcome {
            code: 0,
            stdout: render(value),
            stderr: String::new(),
        },
        Err(CliError::Usage(message)) => Outcome {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        },
        Err(CliError::Domain { code, message }) => Outcome {
            code: 2,
            stdout: String::new(),
            stderr: render(json!({ "code": code, "message": message })),
        },
    }
}

fn render(mut value: Value) -> String {
    if let Value::Object(map) = &mut value {
        map.insert("schema_version".into(), json!(SCHEMA_VERSION));
    }
    let mut text = serde_json::to_string(&value).expect("JSON values serialize");
    text.push('\n');
    text
}

fn r(x: &Rational) -> Value {
    Value::String(format_rational(x))
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("result types serialize")
}

fn ordering(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "less",
        Ordering::Equal => "equal",
        Ordering::Greater => "greater",
    }
}

fn ch(text: &str) -> Result<ChernCharacter, CliError> {
    Ok(ChernCharacter::parse(text)?)
}

fn param(s: &Rational) -> Result<StabilityParam, CliError> {
    Ok(StabilityParam::new(s.clone())?)
}

fn uni(p: &UniPoly) -> Value {
    Value::Array(p.coeffs().iter().map(r).collect())
}

fn bi_terms(p: &BiPoly) -> Value {
    Value::Array(
        p.terms()
            .map(|(&(i, j), c)| json!({ "beta_degree": i, "a_degree": j, "coeff": r(c) }))
            .collect(),
    )
}

fn run(command: Command) -> CmdResult {
    match command {
        Command::Chern(cmd) => run_chern(cmd),
        Command::Slope(cmd) => run_slope(cmd),
        Command::Region { ch: v, point } => {
            let (v, p) = (ch(&v)?, point.point()?);
            let k = region_classify(&v, &p)?;
            Ok(json!({ "k": k.k(), "mu": to_value(&mu(&v)?), "nu": to_value(&nu(&v, &p)?) }))
        }
        Command::Wall(cmd) => run_wall(cmd),
        Command::Curve { kind, w, s } => {
            let kind = match kind {
                CurveArg::L => CurveKind::LLine,
                CurveArg::Theta => CurveKind::ThetaCurve,
                CurveArg::Gamma => CurveKind::GammaCurve,
            };
            let s = s.as_ref().map(param).transpose()?;
            let c = distinguished_curve(kind, &ch(&w)?, s.as_ref())?;
            let mut out = json!({
                "kind": c.kind.to_string(),
                "w": to_value(&c.w),
                "polynomial": c.poly.to_string(),
                "terms": bi_terms(&c.poly),
            });
            if let Some(s) = &c.s {
                out["s"] = r(s);
            }
            Ok(out)
        }
        Command::Enumerate(args) => run_enumerate(args),
        Command::Asym(cmd) => run_asym(cmd),
        Command::Hilbert { ch: v, k, n } => {
            let v = ch(&v)?;
            let p = hilbert_polynomial(&v);
            let mut out = json!({
                "coefficients": uni(&p.as_poly()),
                "polynomial": p.as_poly().to_string(),
                "dim": numerical_dimension(&v),
            });
            if let Some(n) = n {
                out["value"] = r(&p.eval_int(n));
            }
            if let Some(k) = k {
                let red = reduced_hilbert(&v, k)?;
                out["k"] = json!(k);
                out["reduced"] = uni(&red);
            }
            Ok(out)
        }
        Command::Plot(args) => run_plot(args),
    }
}

fn run_chern(cmd: ChernCmd) -> CmdResult {
    match cmd {
        ChernCmd::Twist { ch: v, beta } => {
            let t = twist(&ch(&v)?, &beta);
            Ok(json!({ "beta": r(&beta), "ch": Value::Array(t.components().iter().map(r).collect()) }))
        }
        ChernCmd::Tensor { ch: v, k } => Ok(json!({ "ch": to_value(&tensor_line(&ch(&v)?, k)) })),
        ChernCmd::Dual { ch: v } => Ok(json!({ "ch": to_value(&dual(&ch(&v)?)) })),
        ChernCmd::Delta { i, j, v, w } => Ok(json!({ "value": r(&delta(i, j, &ch(&v)?, &ch(&w)?)?) })),
        ChernCmd::Qtilt { ch: v } => Ok(json!({ "value": r(&q_tilt(&ch(&v)?)) })),
        ChernCmd::Qbmt { ch: v, point } => Ok(json!({ "value": r(&q_bmt(&ch(&v)?, &point.point()?)) })),
        ChernCmd::Dim { ch: v } => Ok(json!({ "value": numerical_dimension(&ch(&v)?) })),
        ChernCmd::Info { ch: v } => {
            let v = ch(&v)?;
            let mut out = json!({
                "ch": to_value(&v),
                "dim": numerical_dimension(&v),
                "q_tilt": r(&q_tilt(&v)),
                "dual": to_value(&dual(&v)),
                "hilbert": uni(&hilbert_polynomial(&v).as_poly()),
            });
            if !v.is_zero() {
                out["mu"] = to_value(&mu(&v)?);
            }
            Ok(out)
        }
    }
}

fn run_slope(cmd: SlopeCmd) -> CmdResult {
    let value = match cmd {
        SlopeCmd::Mu { ch: v } => mu(&ch(&v)?)?,
        SlopeCmd::Nu { ch: v, point } => nu(&ch(&v)?, &point.point()?)?,
        SlopeCmd::Lambda { ch: v, point, s } => lambda(&ch(&v)?, &point.point()?, &param(&s)?)?,
        SlopeCmd::Compare { v, u, point, s } => {
            let o = compare_lambda(&ch(&v)?, &ch(&u)?, &point.point()?, &param(&s)?)?;
            return Ok(json!({ "sign": ordering(o) }));
        }
    };
    Ok(json!({ "value": to_value(&value) }))
}

fn run_wall(cmd: WallCmd) -> CmdResult {
    match cmd {
        WallCmd::Tilt { v, w } => {
            let (v, w) = (ch(&v)?, ch(&w)?);
            let g = tilt_wall(&v, &w)?;
            let mut out = to_value(&g);
            out["v"] = to_value(&v);
            out["w"] = to_value(&w);
            if let TiltWallKind::Semicircle { .. } = g.kind {
                if let Ok(p) = wall_apex(&g, &w) {
                    out["apex"] = json!({ "beta": r(p.beta()), "a": r(p.a()) });
                }
            }
            Ok(out)
        }
        WallCmd::Bridgeland { v, w, s } => {
            let wall = bridgeland_wall(&ch(&v)?, &ch(&w)?, &param(&s)?)?;
            Ok(json!({
                "v": to_value(&wall.v),
                "w": to_value(&wall.w),
                "s": r(&s),
                "polynomial": wall.poly.to_string(),
                "terms": bi_terms(&wall.poly),
                "a2": r(&wall.a2()),
                "a1": uni(&wall.a1()),
                "a0": uni(&wall.a0()),
            }))
        }
        WallCmd::Section { v, w, s, beta } => {
            let wall = bridgeland_wall(&ch(&v)?, &ch(&w)?, &param(&s)?)?;
            let roots = wall_section(&wall, &beta)?;
            let points: Vec<Value> = roots
                .iter()
                .map(|a| json!({ "beta": r(&beta), "a": to_value(a), "alpha_decimal": a.alpha_decimal() }))
                .collect();
            Ok(json!({ "a": to_value(&roots), "points": points }))
        }
    }
}

fn run_enumerate(args: EnumerateArgs) -> CmdResult {
    let v = ch(&args.v)?;
    let width = &args.beta_max - &args.beta_min;
    let max_alpha2 = args.max_alpha2.unwrap_or_else(|| &width * &width);
    let mut win = WallWindow::new(&v, args.beta_min, args.beta_max, max_alpha2, args.max_qtilt);
    if let Some(m) = args.max_rank {
        win.max_rank = m;
    }
    let walls = enumerate_tilt_walls(&v, &win)?;
    Ok(json!({
        "v": to_value(&v),
        "window": {
            "beta_min": r(&win.beta_min),
            "beta_max": r(&win.beta_max),
            "max_alpha2": r(&win.max_alpha2),
            "max_qtilt": r(&win.max_qtilt),
            "max_rank": win.max_rank,
        },
        "walls": to_value(&walls),
    }))
}

fn ordering_value(o: &AsymOrdering) -> Value {
    let mut out = Map::new();
    out.insert("sign".into(), json!(ordering(o.sign)));
    out.insert("order".into(), o.order().map_or(Value::Null, |n| json!(n)));
    out.insert("leading".into(), o.leading.as_ref().map_or(Value::Null, |l| r(&l.coeff)));
    Value::Object(out)
}

fn series_value(series: &LaurentSlope) -> Value {
    json!({
        "terms": series.terms.iter().map(|(p, c)| json!({ "power": p, "coeff": r(c) })).collect::<Vec<_>>(),
        "lowest_power": series.lowest_power,
        "display": series.to_string(),
    })
}

/// One character per line; blank lines and `#` comments are skipped.
pub fn parse_candidates(text: &str) -> Result<Vec<ChernCharacter>, CliError> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let body = line.split('#').next().unwrap_or("").trim();
        if body.is_empty() {
            continue;
        }
        let u = ChernCharacter::parse(body).map_err(|e| CliError::domain(e.code(), format!("line {}: {e}", i + 1)))?;
        out.push(u);
    }
    Ok(out)
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|e| CliError::domain("Io", format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|e| CliError::domain("Io", format!("{}: {e}", path.display())))
}

fn require_s(s: &Option<Rational>) -> Result<StabilityParam, CliError> {
    match s {
        Some(s) => param(s),
        None => Err(CliError::Usage("--s is required for --slope lambda".into())),
    }
}

fn run_asym(cmd: AsymCmd) -> CmdResult {
    match cmd {
        AsymCmd::Compare { curve, s, v, u, slope } => {
            let (g, v, u) = (curve.curve()?, ch(&v)?, ch(&u)?);
            let o = match slope {
                SlopeKind::Lambda => asym_compare_lambda(&v, &u, &g, &require_s(&s)?)?,
                SlopeKind::Nu => asym_compare_nu(&v, &u, &g)?,
            };
            Ok(ordering_value(&o))
        }
        AsymCmd::Classify {
            curve,
            s,
            v,
            candidates,
            strict,
        } => {
            let (v, s) = (ch(&v)?, param(&s)?);
            let cands = parse_candidates(&read(&candidates)?)?;
            let verdict = match curve.side {
                Side::LeftInfinity => classify_left_along(&v, &curve.cgamma, &s, &cands, strict)?,
                Side::RightInfinity => classify_right_along(&v, &curve.cgamma, &s, &cands, strict)?,
            };
            let mut out = to_value(&verdict);
            out["candidates"] = json!(cands.len());
            out["strict"] = json!(strict);
            Ok(out)
        }
        AsymCmd::Gieseker { v, candidates, strict } => {
            let v = ch(&v)?;
            let cands = parse_candidates(&read(&candidates)?)?;
            let mut out = to_value(&gieseker_verdict(&v, &cands, strict)?);
            out["candidates"] = json!(cands.len());
            out["strict"] = json!(strict);
            Ok(out)
        }
        AsymCmd::Candidates { v, bound, out } => {
            let grid = candidate_grid(&ch(&v)?, bound);
            if let Some(path) = out {
                let text: String = grid.iter().map(|u| format!("{u}\n")).collect();
                write(&path, &text)?;
            }
            Ok(json!({ "candidates": to_value(&grid) }))
        }
        AsymCmd::Limit { curve, v } => {
            let (g, v) = (curve.curve()?, ch(&v)?);
            Ok(json!({
                "value": to_value(&limit_table_nu(&v, &g)?),
                "closed_form": to_value(&limit_table_nu_closed_form(&v, &g)),
            }))
        }
        AsymCmd::Series {
            curve,
            s,
            v,
            depth,
            slope,
        } => {
            let (g, v) = (curve.curve()?, ch(&v)?);
            let series = match slope {
                SlopeKind::Lambda => lambda_series(&v, &g, &require_s(&s)?, depth)?,
                SlopeKind::Nu => nu_series(&v, &g, depth)?,
            };
            Ok(series_value(&series))
        }
        AsymCmd::Gs { e, other, k, mode } => Ok(json!({ "sign": ordering(gs_compare(&ch(&e)?, &ch(&other)?, k, mode)?) })),
    }
}

fn run_plot(args: PlotArgs) -> CmdResult {
    let mut spec = match (&args.figure, &args.spec) {
        (Some(n), _) => builtin(*n)?,
        (None, Some(path)) => FigureSpec::from_json(&read(path)?)?,
        (None, None) => return Err(CliError::Usage("one of --figure or --spec is required".into())),
    };
    if let Some(n) = args.n {
        spec.samples = n;
    }
    let format = match (&args.format, spec.format) {
        (Some(f), _) => f.parse::<FigureFormat>().map_err(CliError::Usage)?,
        (None, Some(f)) => f,
        (None, None) => args
            .out
            .extension()
            .and_then(|e| e.to_str())
            .and_then(|e| e.parse().ok())
            .ok_or_else(|| CliError::Usage(format!("cannot infer the format of {}; use --format csv|svg", args.out.display())))?,
    };
    let figure = spec.render()?;
    write(&args.out, &figure.emit(format))?;
    let curves: Vec<Value> = figure
        .curves
        .iter()
        .map(|c| json!({ "id": c.id, "points": c.points.len(), "polynomial": c.poly.to_string() }))
        .collect();
    Ok(json!({
        "out": args.out.display().to_string(),
        "format": to_value(&format),
        "samples": figure.samples,
        "beta_min": r(&figure.range.beta_min),
        "beta_max": r(&figure.range.beta_max),
        "beta_step_decimal": decimal(&((&figure.range.beta_max - &figure.range.beta_min) / crate::rational::int(figure.samples as i64 - 1))),
        "curves": curves,
    }))
}
