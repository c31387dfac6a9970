//! Comparison of truncated reduced Hilbert polynomials.

use std::cmp::Ordering;
use std::str::FromStr;

use super::AsymError;
use crate::chern::{numerical_dimension, reduced_hilbert, ChernCharacter};
use crate::poly::UniPoly;
use crate::rational::sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GsMode {
    /// The other character is a subobject: sign of `p_E − p_F`.
    AgainstSub,
    /// The other character is a quotient: sign of `p_Q − p_E`.
    AgainstQuotient,
}

impl FromStr for GsMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "sub" | "againstsub" => Ok(Self::AgainstSub),
            "quotient" | "againstquotient" => Ok(Self::AgainstQuotient),
            other => Err(format!("unknown mode {other:?}; expected sub or quotient")),
        }
    }
}

/// Eventual sign of a polynomial difference at `m ≫ 0`.
pub(crate) fn eventual_sign(p: &UniPoly) -> Ordering {
    p.leading().map(sign).unwrap_or(Ordering::Equal)
}

/// `Greater` is the stable direction in both modes.
pub fn gs_compare(e: &ChernCharacter, other: &ChernCharacter, k: i64, mode: GsMode) -> Result<Ordering, AsymError> {
    let (de, do_) = (numerical_dimension(e), numerical_dimension(other));
    if de < 0 || do_ < 0 {
        return Err(AsymError::ZeroCharacter);
    }
    if de != do_ {
        return Err(AsymError::DimensionMismatch(de, do_));
    }
    let pe = reduced_hilbert(e, k)?;
    let po = reduced_hilbert(other, k)?;
    Ok(match mode {
        GsMode::AgainstSub => eventual_sign(&(&pe - &po)),
        GsMode::AgainstQuotient => eventual_sign(&(&po - &pe)),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chern::{delta, hilbert_polynomial};
    use crate::rational::{int, Rational};
    use num_traits::Zero;

    fn ch(text: &str) -> ChernCharacter {
        ChernCharacter::parse(text).unwrap()
    }

    #[test]
    fn hyperplane_against_its_twist() {
        let (e, f) = (ch("0,1,-1/2,1/6"), ch("0,1,-3/2,7/6"));
        assert_eq!(gs_compare(&e, &f, 2, GsMode::AgainstSub).unwrap(), Ordering::Greater);
        let lex = (delta(2, 1, &e, &f).unwrap(), delta(3, 1, &e, &f).unwrap());
        assert_eq!(lex, (int(1), int(-1)));
        assert!(lex > (Rational::zero(), Rational::zero()));
    }

    #[test]
    fn self_comparison_is_equal() {
        for v in ["0,1,-1/2,1/6", "0,0,2,-3", "1,2,1/2,1/6"] {
            let v = ch(v);
            let d = numerical_dimension(&v) as i64;
            for k in 1..=d {
                for mode in [GsMode::AgainstSub, GsMode::AgainstQuotient] {
                    assert_eq!(gs_compare(&v, &v, k, mode).unwrap(), Ordering::Equal);
                }
            }
        }
    }

    #[test]
    fn conic_against_a_line() {
        let conic = ch("0,0,2,-3");
        let line = ch("0,0,1,-1");
        let quotient = &conic - &line;
        for n in -5..=5 {
            assert_eq!(hilbert_polynomial(&conic).eval_int(n), int(2 * n + 1));
            assert_eq!(hilbert_polynomial(&line).eval_int(n), int(n + 1));
            assert_eq!(hilbert_polynomial(&quotient).eval_int(n), int(n));
        }
        assert_eq!(gs_compare(&conic, &line, 1, GsMode::AgainstSub).unwrap(), Ordering::Less);
        assert_eq!(gs_compare(&conic, &quotient, 1, GsMode::AgainstQuotient).unwrap(), Ordering::Less);
    }

    #[test]
    fn errors() {
        let e = ch("0,1,-1/2,1/6");
        assert_eq!(gs_compare(&e, &ch("0,0,1,0"), 1, GsMode::AgainstSub), Err(AsymError::DimensionMismatch(2, 1)));
        assert_eq!(gs_compare(&e, &e, 3, GsMode::AgainstSub), Err(AsymError::KOutOfRange { k: 3, dim: 2 }));
        assert_eq!("quotient".parse::<GsMode>(), Ok(GsMode::AgainstQuotient));
    }
}
