use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Tolerance for clique widths and gap tests.
pub const SLOPE_TOL: f64 = 1e-9;

/// Arcs in an annulus recorded by their slopes `s(a)`, grouped into cliques
/// of pairwise minimally intersecting arcs.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnulusArcSystem {
    pub slopes: Vec<f64>,
    pub cliques: Vec<Vec<usize>>,
}

impl AnnulusArcSystem {
    /// Checks that the cliques partition the arcs and each has width at most 1.
    pub fn new(slopes: Vec<f64>, cliques: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; slopes.len()];
        for c in &cliques {
            if c.is_empty() {
                return Err(Error::Invalid("empty clique".into()));
            }
            for &i in c {
                if i >= slopes.len() || std::mem::replace(&mut seen[i], true) {
                    return Err(Error::Invalid(format!("clique index {i} repeated or out of range")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::Invalid("cliques do not cover every arc".into()));
        }
        if slopes.iter().any(|s| !s.is_finite()) {
            return Err(Error::Invalid("slopes must be finite".into()));
        }
        let sys = Self { slopes, cliques };
        if let Some(c) = sys.cliques.iter().position(|c| sys.width(c) > 1.0 + SLOPE_TOL) {
            return Err(Error::Invalid(format!("clique {c} spans more than 1")));
        }
        Ok(sys)
    }

    /// Number of cliques `N`.
    pub fn clique_count(&self) -> usize {
        self.cliques.len()
    }

    /// Largest pairwise slope difference.
    pub fn spread(&self) -> f64 {
        let (lo, hi) = self.slopes.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &s| (lo.min(s), hi.max(s)));
        if self.slopes.is_empty() {
            0.0
        } else {
            hi - lo
        }
    }

    fn width(&self, clique: &[usize]) -> f64 {
        let v: Vec<f64> = clique.iter().map(|&i| self.slopes[i]).collect();
        v.iter().cloned().fold(f64::NEG_INFINITY, f64::max) - v.iter().cloned().fold(f64::INFINITY, f64::min)
    }
}

fn trigger(sys: &AnnulusArcSystem) -> f64 {
    3.0 * sys.clique_count() as f64 + 1.0
}

/// One move: when the spread exceeds `3N + 1`, subtract 1 from every slope
/// above the lowest slope-free gap longer than 2. Otherwise unchanged.
pub fn annulus_reembed(sys: &AnnulusArcSystem) -> AnnulusArcSystem {
    let mut out = sys.clone();
    if sys.spread() <= trigger(sys) + SLOPE_TOL {
        return out;
    }
    let mut sorted = sys.slopes.clone();
    sorted.sort_by(f64::total_cmp);
    let Some(cut) = sorted.windows(2).find(|w| w[1] - w[0] > 2.0 + SLOPE_TOL).map(|w| w[0]) else {
        return out;
    };
    for s in &mut out.slopes {
        if *s > cut {
            *s -= 1.0;
        }
    }
    out
}

/// Applies [`annulus_reembed`] until nothing changes; returns the fixpoint
/// and the number of moves.
pub fn annulus_fixpoint(sys: &AnnulusArcSystem) -> (AnnulusArcSystem, usize) {
    let mut cur = sys.clone();
    let mut steps = 0;
    loop {
        let next = annulus_reembed(&cur);
        if next == cur {
            return (cur, steps);
        }
        cur = next;
        steps += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sys(slopes: &[f64], cliques: &[&[usize]]) -> AnnulusArcSystem {
        AnnulusArcSystem::new(slopes.to_vec(), cliques.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn single_move_and_fixpoint() {
        let s = sys(&[0.0, 10.0], &[&[0], &[1]]);
        assert_eq!(annulus_reembed(&s).slopes, vec![0.0, 9.0]);
        let (f, steps) = annulus_fixpoint(&s);
        assert_eq!((f.slopes, steps), (vec![0.0, 7.0], 3));
    }

    #[test]
    fn small_spread_is_fixed() {
        let s = sys(&[0.0, 0.5, 1.2], &[&[0, 1], &[2]]);
        assert_eq!(annulus_reembed(&s), s);
    }

    #[test]
    fn malformed_systems() {
        assert!(AnnulusArcSystem::new(vec![0.0, 2.0], vec![vec![0, 1]]).is_err());
        assert!(AnnulusArcSystem::new(vec![0.0, 2.0], vec![vec![0]]).is_err());
        assert!(AnnulusArcSystem::new(vec![0.0], vec![vec![0, 0]]).is_err());
    }
}
