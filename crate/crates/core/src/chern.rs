//! Chern characters on P³ and the arithmetic done on them.
//!
//! A character is the vector `(ch₀·H³, ch₁·H², ch₂·H, ch₃)` in the lattice
//! `Z ⊕ Z ⊕ ½Z ⊕ ⅙Z`. Twisting by `β` is multiplication by `e^{−βH}`; the
//! Hilbert polynomial is Riemann–Roch against `td(P³) = (1, 2, 11/6, 1)`.

use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::poly::UniPoly;
use crate::rational::{format_rational, int, parse_rational, rat, Rational};
use crate::slope::HalfPlanePoint;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChernError {
    #[error("malformed rational {0:?} in character literal")]
    MalformedRational(String),
    #[error("a character has exactly four components, got {0}")]
    WrongArity(usize),
    #[error("component ch{index} = {value} is outside the lattice (needs denominator dividing {allowed})")]
    DenominatorViolation {
        index: usize,
        value: String,
        allowed: u32,
    },
    #[error("pairing index ({i},{j}) out of range; need 0 <= j < i <= 3")]
    IndexOutOfRange { i: usize, j: usize },
    #[error("operation undefined for the zero character")]
    ZeroCharacter,
    #[error("truncation depth k = {k} out of range for a character of dimension {dim}")]
    KOutOfRange { k: i64, dim: i32 },
}

impl ChernError {
    pub fn code(&self) -> &'static str {
        match self {
            Self::MalformedRational(_) => "MalformedRational",
            Self::WrongArity(_) => "WrongArity",
            Self::DenominatorViolation { .. } => "DenominatorViolation",
            Self::IndexOutOfRange { .. } => "IndexOutOfRange",
            Self::ZeroCharacter => "ZeroCharacter",
            Self::KOutOfRange { .. } => "KOutOfRange",
        }
    }
}

/// Largest denominator allowed in each slot of the lattice.
const LATTICE_DENOMINATORS: [u32; 4] = [1, 1, 2, 6];

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ChernCharacter {
    ch: [Rational; 4],
}

impl ChernCharacter {
    pub fn new(ch: [Rational; 4]) -> Result<Self, ChernError> {
        for (index, (value, &allowed)) in ch.iter().zip(&LATTICE_DENOMINATORS).enumerate() {
            let scaled = value * int(allowed as i64);
            if !scaled.is_integer() {
                return Err(ChernError::DenominatorViolation {
                    index,
                    value: format_rational(value),
                    allowed,
                });
            }
        }
        Ok(Self { ch })
    }

    /// `(v0, v1, v2/2, v3/6)` from integer numerators; always in the lattice.
    pub fn from_numerators(v0: i64, v1: i64, v2_halves: i64, v3_sixths: i64) -> Self {
        Self {
            ch: [int(v0), int(v1), rat(v2_halves, 2), rat(v3_sixths, 6)],
        }
    }

    pub fn parse(text: &str) -> Result<Self, ChernError> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 4 {
            return Err(ChernError::WrongArity(parts.len()));
        }
        let mut ch: [Rational; 4] = Default::default();
        for (slot, part) in ch.iter_mut().zip(&parts) {
            *slot = parse_rational(part)
                .map_err(|_| ChernError::MalformedRational(part.trim().to_string()))?;
        }
        Self::new(ch)
    }

    pub fn zero() -> Self {
        Self {
            ch: Default::default(),
        }
    }

    /// `ch(O(k)) = e^{kH}`.
    pub fn line_bundle(k: i64) -> Self {
        tensor_line(&Self::from_numerators(1, 0, 0, 0), k)
    }

    pub fn ch(&self, i: usize) -> &Rational {
        &self.ch[i]
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.ch
    }

    pub fn rank(&self) -> &Rational {
        &self.ch[0]
    }

    pub fn is_zero(&self) -> bool {
        self.ch.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: i64) -> Self {
        let c = int(c);
        Self {
            ch: self.ch.clone().map(|x| x * &c),
        }
    }
}

impl FromStr for ChernCharacter {
    type Err = ChernError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = &self.ch;
        write!(f, "{a},{b},{c},{d}")
    }
}

impl Serialize for ChernCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.ch.iter().map(format_rational))
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch: std::array::from_fn(|i| &self.ch[i] + &rhs.ch[i]),
        }
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            ch: std::array::from_fn(|i| &self.ch[i] - &rhs.ch[i]),
        }
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        ChernCharacter {
            ch: self.ch.clone().map(|x| -x),
        }
    }
}

/// `ch^β = e^{−βH}·ch`, with the twist parameter it was taken at.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedCharacter {
    beta: Rational,
    ch: [Rational; 4],
}

impl TwistedCharacter {
    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn ch(&self, i: usize) -> &Rational {
        &self.ch[i]
    }

    pub fn components(&self) -> &[Rational; 4] {
        &self.ch
    }

    /// Twists again; the parameters add.
    pub fn twist(&self, beta: &Rational) -> TwistedCharacter {
        TwistedCharacter {
            beta: &self.beta + beta,
            ch: twist_components(&self.ch, beta),
        }
    }
}

fn twist_components(ch: &[Rational; 4], beta: &Rational) -> [Rational; 4] {
    let [v0, v1, v2, v3] = ch;
    let b2 = beta * beta;
    let b3 = &b2 * beta;
    let half = rat(1, 2);
    let sixth = rat(1, 6);
    [
        v0.clone(),
        v1 - beta * v0,
        v2 - beta * v1 + &half * &b2 * v0,
        v3 - beta * v2 + &half * &b2 * v1 - &sixth * &b3 * v0,
    ]
}

pub fn twist(v: &ChernCharacter, beta: &Rational) -> TwistedCharacter {
    TwistedCharacter {
        beta: beta.clone(),
        ch: twist_components(&v.ch, beta),
    }
}

/// `v ⊗ O(k)`.
pub fn tensor_line(v: &ChernCharacter, k: i64) -> ChernCharacter {
    ChernCharacter {
        ch: twist_components(&v.ch, &int(-k)),
    }
}

/// Character of `RHom(−, O)[2]`.
pub fn dual(v: &ChernCharacter) -> ChernCharacter {
    let [v0, v1, v2, v3] = &v.ch;
    ChernCharacter {
        ch: [v0.clone(), -v1, v2.clone(), -v3],
    }
}

/// `δ_ij(v, w) = ch_i(v)·ch_j(w) − ch_j(v)·ch_i(w)` for `0 <= j < i <= 3`.
pub fn delta(i: usize, j: usize, v: &ChernCharacter, w: &ChernCharacter) -> Result<Rational, ChernError> {
    if !(j < i && i <= 3) {
        return Err(ChernError::IndexOutOfRange { i, j });
    }
    Ok(delta_unchecked(i, j, v, w))
}

pub(crate) fn delta_unchecked(i: usize, j: usize, v: &ChernCharacter, w: &ChernCharacter) -> Rational {
    &v.ch[i] * &w.ch[j] - &v.ch[j] * &w.ch[i]
}

/// Classical Bogomolov discriminant `ch₁² − 2·ch₀·ch₂`; twist invariant.
pub fn q_tilt(v: &ChernCharacter) -> Rational {
    let [v0, v1, v2, _] = &v.ch;
    v1 * v1 - int(2) * v0 * v2
}

/// Generalized Bogomolov form
/// `Q^tilt(v)·a + 4(ch₂^β)² − 6·ch₁^β·ch₃^β` at `p = (β, a)`.
pub fn q_bmt(v: &ChernCharacter, p: &HalfPlanePoint) -> Rational {
    let t = twist(v, p.beta());
    q_tilt(v) * p.a() + int(4) * t.ch(2) * t.ch(2) - int(6) * t.ch(1) * t.ch(3)
}

/// `P(n) = χ(E ⊗ O(n)) = c3·n³ + c2·n² + c1·n + c0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertPolynomial {
    coeffs: [Rational; 4],
}

impl HilbertPolynomial {
    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn eval(&self, n: &Rational) -> Rational {
        self.as_poly().eval(n)
    }

    pub fn eval_int(&self, n: i64) -> Rational {
        self.eval(&int(n))
    }

    pub fn as_poly(&self) -> UniPoly {
        UniPoly::new(self.coeffs.to_vec())
    }
}

pub fn hilbert_polynomial(v: &ChernCharacter) -> HilbertPolynomial {
    let [v0, v1, v2, v3] = &v.ch;
    let td2 = rat(11, 6);
    let two = int(2);
    HilbertPolynomial {
        coeffs: [
            v3 + &two * v2 + &td2 * v1 + v0,
            v2 + &two * v1 + &td2 * v0,
            (v1 + &two * v0) / &two,
            v0 / int(6),
        ],
    }
}

/// Dimension of the support read off the first nonzero component; −1 for zero.
pub fn numerical_dimension(v: &ChernCharacter) -> i32 {
    match v.ch.iter().position(|x| !x.is_zero()) {
        Some(i) => 3 - i as i32,
        None => -1,
    }
}

/// `p_{E,k}(t) = Σ_{i=d−k}^{d} (α_i/α_d)·tⁱ`, where `α_i` are the Hilbert
/// polynomial coefficients and `d` the numerical dimension.
pub fn reduced_hilbert(v: &ChernCharacter, k: i64) -> Result<UniPoly, ChernError> {
    let dim = numerical_dimension(v);
    if dim < 0 {
        return Err(ChernError::ZeroCharacter);
    }
    if k < 1 || k > dim as i64 {
        return Err(ChernError::KOutOfRange { k, dim });
    }
    let d = dim as usize;
    let p = hilbert_polynomial(v);
    let lead = p.coeff(d).clone();
    debug_assert!(!lead.is_zero());
    let low = d - k as usize;
    let coeffs = (0..=d)
        .map(|i| {
            if i < low {
                Rational::zero()
            } else {
                p.coeff(i) / &lead
            }
        })
        .collect();
    Ok(UniPoly::new(coeffs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn ch(text: &str) -> ChernCharacter {
        ChernCharacter::parse(text).unwrap()
    }

    /// Binomial coefficient `C(n+3, 3)` extended polynomially to all integers.
    fn binom3(n: i64) -> Rational {
        rat((n + 1) * (n + 2) * (n + 3), 6)
    }

    #[test]
    fn parse_examples() {
        assert_eq!(ch("2,0,-2,0"), ChernCharacter::from_numerators(2, 0, -4, 0));
        assert_eq!(ch(" 0, 1 ,-1/2,1/6"), ChernCharacter::from_numerators(0, 1, -1, 1));
        assert!(matches!(
            ChernCharacter::parse("1,0,1/3,0"),
            Err(ChernError::DenominatorViolation { index: 2, .. })
        ));
        assert!(matches!(
            ChernCharacter::parse("0,1/2,0,0"),
            Err(ChernError::DenominatorViolation { index: 1, .. })
        ));
        assert!(matches!(ChernCharacter::parse("1,x,0,0"), Err(ChernError::MalformedRational(_))));
        assert!(matches!(ChernCharacter::parse("1,0,0"), Err(ChernError::WrongArity(3))));
    }

    #[test]
    fn hyperplane_character_from_the_structure_sequence() {
        // O -> i_*O_H -> O(-1)[1]: ch(i_*O_H) = ch(O) - ch(O(-1)).
        let h = &ChernCharacter::line_bundle(0) - &ChernCharacter::line_bundle(-1);
        assert_eq!(h, ch("0,1,-1/2,1/6"));
    }

    #[test]
    fn twist_examples() {
        let t = twist(&ch("0,1,-1/2,1/6"), &int(-2));
        assert_eq!(t.components(), ch("0,1,3/2,7/6").components());
        let v = ch("2,-1,5/2,-7/6");
        assert_eq!(twist(&v, &int(0)).components(), v.components());
    }

    #[test]
    fn tensor_line_examples() {
        assert_eq!(tensor_line(&ch("1,0,0,0"), 3), ch("1,3,9/2,9/2"));
        // ch(O_H(-1)) = ch(O(-1)) - ch(O(-2))
        let expected = &ChernCharacter::line_bundle(-1) - &ChernCharacter::line_bundle(-2);
        assert_eq!(expected, ch("0,1,-3/2,7/6"));
        assert_eq!(tensor_line(&ch("0,1,-1/2,1/6"), -1), expected);
        let v = ch("3,1,-1/2,5/6");
        assert_eq!(tensor_line(&v, 0), v);
    }

    #[test]
    fn dual_examples() {
        // 0 -> O -> O(1)+O(2) -> O(3) -> (i_*O_C)^D -> 0
        let o = |k| ChernCharacter::line_bundle(k);
        let resolved = &(&(&o(3) - &o(1)) - &o(2)) + &o(0);
        assert_eq!(resolved, ch("0,0,2,3"));
        assert_eq!(dual(&ch("0,0,2,-3")), resolved);
        assert_eq!(dual(&ch("0,1,-1/2,1/6")), ch("0,-1,-1/2,-1/6"));
    }

    #[test]
    fn delta_examples() {
        let d = delta(2, 1, &ch("0,1,-1/2,1/6"), &ch("0,1,-3/2,7/6")).unwrap();
        assert_eq!(d, int(1));
        assert_eq!(delta(1, 0, &ch("1,3,9/2,9/2"), &ch("0,0,2,3")).unwrap(), int(0));
        let v = ch("2,-1,1/2,1/3");
        for i in 1..4 {
            for j in 0..i {
                assert!(delta(i, j, &v, &v).unwrap().is_zero());
            }
        }
        assert_eq!(
            delta(1, 2, &v, &v),
            Err(ChernError::IndexOutOfRange { i: 1, j: 2 })
        );
        assert!(delta(4, 0, &v, &v).is_err());
    }

    #[test]
    fn bogomolov_examples() {
        assert_eq!(q_tilt(&ch("2,0,-2,0")), int(8));
        assert_eq!(q_tilt(&ch("0,1,-1/2,1/6")), int(1));
        for k in -3..=3 {
            assert!(q_tilt(&ChernCharacter::line_bundle(k)).is_zero());
        }
        let p = HalfPlanePoint::new(int(0), rat(7, 3)).unwrap();
        assert_eq!(q_bmt(&ch("2,0,-2,0"), &p), int(8) * rat(7, 3) + int(16));
        for (b, a) in [(0, 1), (-3, 2), (5, 7)] {
            let p = HalfPlanePoint::new(int(b), int(a)).unwrap();
            assert!(q_bmt(&ch("1,0,0,0"), &p).is_zero());
        }
    }

    #[test]
    fn qbmt_of_hyperplane_is_nonnegative_on_a_grid() {
        let v = ch("0,1,-1/2,1/6");
        for bn in -40..=40 {
            for an in 1..=20 {
                let p = HalfPlanePoint::new(rat(bn, 4), rat(an, 4)).unwrap();
                assert!(q_bmt(&v, &p) >= Rational::zero());
            }
        }
    }

    #[test]
    fn hilbert_polynomial_examples() {
        let o = hilbert_polynomial(&ch("1,0,0,0"));
        let h = hilbert_polynomial(&ch("0,1,-1/2,1/6"));
        let conic = hilbert_polynomial(&ch("0,0,2,-3"));
        for n in -10..=10 {
            assert_eq!(o.eval_int(n), binom3(n));
            assert_eq!(h.eval_int(n), rat((n + 1) * (n + 2), 2));
            assert_eq!(conic.eval_int(n), int(2 * n + 1));
        }
        assert_eq!(o.coeff(3), &rat(1, 6));
    }

    #[test]
    fn reduced_hilbert_examples() {
        let v = ch("0,1,-1/2,1/6");
        assert_eq!(reduced_hilbert(&v, 2).unwrap().to_string(), "t^2 + 3t + 2");
        assert_eq!(reduced_hilbert(&v, 1).unwrap().to_string(), "t^2 + 3t");
        assert_eq!(reduced_hilbert(&v, 3), Err(ChernError::KOutOfRange { k: 3, dim: 2 }));
        assert_eq!(reduced_hilbert(&v, 0), Err(ChernError::KOutOfRange { k: 0, dim: 2 }));
        assert_eq!(reduced_hilbert(&ChernCharacter::zero(), 1), Err(ChernError::ZeroCharacter));
        let w = ch("2,-1,1/2,5/6");
        let full = reduced_hilbert(&w, 3).unwrap();
        let p = hilbert_polynomial(&w).as_poly();
        assert_eq!(full, p.scale(&(int(1) / p.leading().unwrap())));
    }

    #[test]
    fn numerical_dimension_examples() {
        assert_eq!(numerical_dimension(&ch("0,1,-1/2,1/6")), 2);
        assert_eq!(numerical_dimension(&ch("0,0,2,3")), 1);
        assert_eq!(numerical_dimension(&ch("0,0,0,5")), 0);
        assert_eq!(numerical_dimension(&ch("-1,0,0,0")), 3);
        assert_eq!(numerical_dimension(&ChernCharacter::zero()), -1);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-60i64..60, 1i64..13).prop_map(|(p, q)| rat(p, q))
    }

    pub(crate) fn arb_character() -> impl Strategy<Value = ChernCharacter> {
        (-6i64..=6, -6i64..=6, -12i64..=12, -36i64..=36)
            .prop_map(|(a, b, c, d)| ChernCharacter::from_numerators(a, b, c, d))
    }

    proptest! {
        #[test]
        fn twist_is_an_additive_action(v in arb_character(), b1 in arb_rational(), b2 in arb_rational()) {
            let once = twist(&v, &(&b1 + &b2));
            let twice = twist(&v, &b1).twist(&b2);
            prop_assert_eq!(once.components(), twice.components());
            let back = twist(&v, &b1).twist(&-&b1);
            prop_assert_eq!(back.components(), v.components());
        }

        #[test]
        fn tensor_line_matches_integral_twist(v in arb_character(), k in -6i64..=6) {
            let (lhs, rhs) = (tensor_line(&v, k), twist(&v, &int(-k)));
            prop_assert_eq!(lhs.components(), rhs.components());
        }

        #[test]
        fn delta_is_antisymmetric_and_bilinear(v in arb_character(), w in arb_character(), w2 in arb_character()) {
            for i in 1..4 {
                for j in 0..i {
                    let d = delta(i, j, &v, &w).unwrap();
                    prop_assert_eq!(&d, &-delta(i, j, &w, &v).unwrap());
                    let sum = delta(i, j, &v, &(&w + &w2)).unwrap();
                    prop_assert_eq!(sum, d + delta(i, j, &v, &w2).unwrap());
                }
            }
        }

        #[test]
        fn dual_is_an_involution_with_pairing_signs(v in arb_character(), w in arb_character()) {
            prop_assert_eq!(dual(&dual(&v)), v.clone());
            let (dv, dw) = (dual(&v), dual(&w));
            prop_assert_eq!(delta(2, 1, &dv, &dw).unwrap(), -delta(2, 1, &v, &w).unwrap());
            prop_assert_eq!(delta(3, 1, &dv, &dw).unwrap(), delta(3, 1, &v, &w).unwrap());
        }

        #[test]
        fn hilbert_polynomial_is_additive_and_shifts(v in arb_character(), w in arb_character(), k in -5i64..=5, n in -10i64..=10) {
            let pv = hilbert_polynomial(&v);
            let pw = hilbert_polynomial(&w);
            prop_assert_eq!(hilbert_polynomial(&(&v + &w)).eval_int(n), pv.eval_int(n) + pw.eval_int(n));
            prop_assert_eq!(hilbert_polynomial(&tensor_line(&v, k)).eval_int(n), pv.eval_int(n + k));
        }

        #[test]
        fn qbmt_rank_zero_cross_check(v1 in -6i64..=6, v2 in -12i64..=12, v3 in -36i64..=36, b in arb_rational(), an in 1i64..50) {
            let v = ChernCharacter::from_numerators(0, v1, v2, v3);
            let (v1, v2, v3) = (v.ch(1).clone(), v.ch(2).clone(), v.ch(3).clone());
            let a = rat(an, 7);
            let p = HalfPlanePoint::new(b.clone(), a.clone()).unwrap();
            let direct = int(4) * (&v2 - &b * &v1) * (&v2 - &b * &v1)
                - int(6) * &v1 * (&v3 - &b * &v2 + rat(1, 2) * &b * &b * &v1)
                + &v1 * &v1 * &a;
            prop_assert_eq!(q_bmt(&v, &p), direct);
        }

        #[test]
        fn hilbert_polynomial_is_integral_on_k_theory(mults in proptest::collection::vec(-3i64..=3, 7)) {
            // Z-combinations of ch(O(k)), k = -3..=3, span the characters of sheaves
            let v = mults.iter().zip(-3i64..=3).fold(ChernCharacter::zero(), |acc, (&m, k)| {
                &acc + &ChernCharacter::line_bundle(k).scaled(m)
            });
            let p = hilbert_polynomial(&v);
            for n in -10..=10 {
                prop_assert!(p.eval_int(n).is_integer());
            }
        }
    }
}
