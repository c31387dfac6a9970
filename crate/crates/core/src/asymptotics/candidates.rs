//! Bounded grids of candidate subcharacters.

use super::classify::is_proper;
use crate::chern::{numerical_dimension, ChernCharacter};

/// Rank-zero lattice characters `u` with `|u₁|, |u₂|, |u₃| ≤ bound` that could
/// be proper subsheaves of `v`: effective, `u ≠ v`, `dim u ≤ dim v`, and when
/// the dimensions agree the leading component of `u` does not exceed that of
/// `v`. Sorted ascending.
pub fn candidate_grid(v: &ChernCharacter, bound: u32) -> Vec<ChernCharacter> {
    let b = bound as i64;
    let d = numerical_dimension(v);
    let mut out = Vec::new();
    for u1 in -b..=b {
        for u2 in -2 * b..=2 * b {
            for u3 in -6 * b..=6 * b {
                let u = ChernCharacter::from_numerators(0, u1, u2, u3);
                if u.is_zero() || !is_proper(v, &u) {
                    continue;
                }
                let du = numerical_dimension(&u);
                if du == d && d >= 0 {
                    let lead = (3 - d) as usize;
                    if u.ch(lead) > v.ch(lead) {
                        continue;
                    }
                }
                out.push(u);
            }
        }
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use num_traits::Zero;

    #[test]
    fn grid_for_the_hyperplane_sheaf() {
        let v = ChernCharacter::parse("0,1,-1/2,1/6").unwrap();
        let grid = candidate_grid(&v, 1);
        assert!(grid.iter().all(|u| u.rank().is_zero() && *u != v && u.ch(1) <= &int(1)));
        assert!(grid.contains(&ChernCharacter::parse("0,0,1,-1").unwrap()));
        assert!(grid.contains(&ChernCharacter::parse("0,0,0,1").unwrap()));
        assert!(!grid.contains(&ChernCharacter::parse("0,0,-1,0").unwrap()));
        assert!(grid.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn points_only_see_points() {
        let v = ChernCharacter::parse("0,0,0,1").unwrap();
        let grid = candidate_grid(&v, 1);
        assert_eq!(grid.len(), 5);
        assert!(grid.iter().all(|u| numerical_dimension(u) == 0 && u.ch(3) < &int(1)));
    }
}
