//! Dense univariate and sparse bivariate polynomials over the rationals.
//!
//! Curves in the half-plane are kept in the coordinates `(β, a)` with
//! `a = α²`, so every distinguished curve and wall is a [`BiPoly`] of degree at
//! most two in `a`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::rational::{int, Rational};

/// Coefficients stored low degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// `c·xⁿ`
    pub fn monomial(c: Rational, n: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); n + 1];
        coeffs[n] = c;
        Self::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `p(c·x)`
    pub fn substitute_scaled(&self, c: &Rational) -> Self {
        let mut power = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for coeff in &self.coeffs {
            out.push(coeff * &power);
            power *= c;
        }
        Self::new(out)
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), monomial_name("t", i)))
            .collect();
        write_terms(f, &terms)
    }
}

/// Polynomial in `(β, a)`, keyed by `(deg_β, deg_a)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((u32, u32), Rational)>) -> Self {
        let mut out = Self::zero();
        for (key, c) in terms {
            out.add_term(key, c);
        }
        out
    }

    /// Embeds a polynomial in `β` alone.
    pub fn from_beta_poly(p: &UniPoly) -> Self {
        Self::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| ((i as u32, 0), c.clone())),
        )
    }

    pub fn add_term(&mut self, key: (u32, u32), c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(key).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, deg_beta: u32, deg_a: u32) -> Rational {
        self.terms
            .get(&(deg_beta, deg_a))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn degree_in_a(&self) -> Option<u32> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn eval(&self, beta: &Rational, a: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (&(i, j), c)| {
            acc + c * pow(beta, i) * pow(a, j)
        })
    }

    /// Fixes `β` and returns the polynomial in `a`.
    pub fn section(&self, beta: &Rational) -> UniPoly {
        let deg = self.degree_in_a().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (&(i, j), c) in &self.terms {
            coeffs[j as usize] += c * pow(beta, i);
        }
        UniPoly::new(coeffs)
    }

    /// Coefficient of `aʲ` as a polynomial in `β`.
    pub fn a_coefficient(&self, j: u32) -> UniPoly {
        let deg = self
            .terms
            .keys()
            .filter(|&&(_, jj)| jj == j)
            .map(|&(i, _)| i)
            .max();
        let Some(deg) = deg else {
            return UniPoly::zero();
        };
        let mut coeffs = vec![Rational::zero(); deg as usize + 1];
        for (&(i, jj), c) in &self.terms {
            if jj == j {
                coeffs[i as usize] = c.clone();
            }
        }
        UniPoly::new(coeffs)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_terms(self.terms.iter().map(|(&k, v)| (k, v * c)))
    }

    /// Divides through by the coefficient of the leading term (highest `a`
    /// degree, then highest `β` degree) so the zero locus keeps a canonical form.
    pub fn monic(&self) -> Self {
        match self.terms.iter().max_by_key(|(&(i, j), _)| (j, i)) {
            Some((_, lead)) => self.scale(&(Rational::one() / lead)),
            None => self.clone(),
        }
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&int(-1))
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<_> = self
            .terms
            .iter()
            .rev()
            .map(|(&(i, j), c)| {
                let name = match (i, j) {
                    (0, 0) => String::new(),
                    (i, 0) => monomial_name("β", i as usize),
                    (0, j) => monomial_name("a", j as usize),
                    (i, j) => format!(
                        "{}·{}",
                        monomial_name("β", i as usize),
                        monomial_name("a", j as usize)
                    ),
                };
                (c.clone(), name)
            })
            .collect();
        write_terms(f, &terms)
    }
}

pub(crate) fn pow(x: &Rational, n: u32) -> Rational {
    num_traits::pow(x.clone(), n as usize)
}

fn monomial_name(var: &str, deg: usize) -> String {
    match deg {
        0 => String::new(),
        1 => var.to_string(),
        d => format!("{var}^{d}"),
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(Rational, String)]) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (idx, (c, name)) in terms.iter().enumerate() {
        let magnitude = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if idx == 0 {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        match (name.is_empty(), magnitude.is_one()) {
            (true, _) => write!(f, "{magnitude}")?,
            (false, true) => write!(f, "{name}")?,
            (false, false) => write!(f, "{magnitude}{name}")?,
        }
    }
    Ok(())
}
