//! Sampling curves in `(β, α)` for plotting.

use num_traits::Zero;

use super::curves::CurveDescriptor;
use super::quartic::{real_roots, SectionRoot};
use super::WallError;
use crate::poly::BiPoly;
use crate::rational::{format_rational, int, Rational};

/// `β ∈ [beta_min, beta_max]`, `0 < α ≤ alpha_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SampleRange {
    pub beta_min: Rational,
    pub beta_max: Rational,
    pub alpha_max: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SamplePoint {
    pub beta: Rational,
    pub a: SectionRoot,
    /// Index of the root among the real roots at this `β`, lowest first.
    pub branch: usize,
}

impl SamplePoint {
    pub fn alpha_decimal(&self) -> String {
        self.a.alpha_decimal()
    }
}

pub fn sample_curve(curve: &CurveDescriptor, range: &SampleRange, n: usize) -> Result<Vec<SamplePoint>, WallError> {
    sample_polynomial(&curve.poly, range, n)
}

/// `n` evenly spaced `β` values; each contributes its positive roots `a` with
/// `a ≤ alpha_max²`. A curve with no `a`-dependence is a vertical line and is
/// sampled along `α` instead (only linear ones carry points).
pub fn sample_polynomial(poly: &BiPoly, range: &SampleRange, n: usize) -> Result<Vec<SamplePoint>, WallError> {
    if n < 2 {
        return Err(WallError::TooFewSamples(n));
    }
    if range.beta_min >= range.beta_max || range.alpha_max <= Rational::zero() {
        return Err(WallError::WindowEmpty(format!(
            "beta in [{}, {}], alpha up to {}",
            format_rational(&range.beta_min),
            format_rational(&range.beta_max),
            format_rational(&range.alpha_max)
        )));
    }
    if poly.is_zero() {
        return Err(WallError::IdenticallyZero);
    }
    let a_max = &range.alpha_max * &range.alpha_max;
    let steps = int(n as i64 - 1);
    if poly.degree_in_a() == Some(0) {
        let p = poly.a_coefficient(0);
        if p.degree() != Some(1) {
            return Ok(Vec::new());
        }
        let beta = -p.coeff(0) / p.coeff(1);
        if beta < range.beta_min || beta > range.beta_max {
            return Ok(Vec::new());
        }
        return Ok((1..=n as i64)
            .map(|i| {
                let alpha = &range.alpha_max * int(i) / int(n as i64);
                SamplePoint {
                    beta: beta.clone(),
                    a: SectionRoot::Rational(&alpha * &alpha),
                    branch: 0,
                }
            })
            .collect());
    }
    let width = &range.beta_max - &range.beta_min;
    let mut out = Vec::new();
    for i in 0..n as i64 {
        let beta = &range.beta_min + &width * int(i) / &steps;
        let section = poly.section(&beta);
        if section.is_zero() {
            continue;
        }
        for (branch, root) in real_roots(&section).into_iter().enumerate() {
            if root.is_positive() && root.approx() <= a_max {
                out.push(SamplePoint {
                    beta: beta.clone(),
                    a: root,
                    branch,
                });
            }
        }
    }
    Ok(out)
}
