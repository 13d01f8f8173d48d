use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    ChordlessCycle,
    NonOuterplanarMinor,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MinorKind {
    K4,
    #[serde(rename = "K2,3")]
    K23,
}

impl MinorKind {
    /// Branch-vertex index pairs joined by a path, in `paths` order.
    pub fn branch_pairs(self) -> &'static [(usize, usize)] {
        match self {
            MinorKind::K4 => &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
            MinorKind::K23 => &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)],
        }
    }

    fn branch_count(self) -> usize {
        match self {
            MinorKind::K4 => 4,
            MinorKind::K23 => 5,
        }
    }
}

/// Certificate that a graph is not chordal or not outerplanar.
///
/// A chordless cycle lists its vertices in cyclic order. A minor witness lists
/// the branch vertices (for `K2,3` the two degree-3 vertices first) and one
/// path per branch pair, endpoints included.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForbiddenWitness {
    pub kind: WitnessKind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minor: Option<MinorKind>,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub paths: Vec<Vec<String>>,
}

impl ForbiddenWitness {
    pub fn chordless_cycle(g: &Graph, cycle: &[usize]) -> Self {
        Self {
            kind: WitnessKind::ChordlessCycle,
            minor: None,
            vertices: cycle.iter().map(|&v| g.label(v).to_string()).collect(),
            paths: Vec::new(),
        }
    }

    pub fn minor(g: &Graph, kind: MinorKind, branch: &[usize], paths: &[Vec<usize>]) -> Self {
        let name = |p: &Vec<usize>| p.iter().map(|&v| g.label(v).to_string()).collect();
        Self {
            kind: WitnessKind::NonOuterplanarMinor,
            minor: Some(kind),
            vertices: branch.iter().map(|&v| g.label(v).to_string()).collect(),
            paths: paths.iter().map(name).collect(),
        }
    }

    /// Checks the witness against `g` from scratch.
    pub fn verify(&self, g: &Graph) -> bool {
        let Some(ids) = self
            .vertices
            .iter()
            .map(|l| g.index_of(l))
            .collect::<Option<Vec<_>>>()
        else {
            return false;
        };
        let distinct: HashSet<_> = ids.iter().collect();
        if distinct.len() != ids.len() {
            return false;
        }
        match self.kind {
            WitnessKind::ChordlessCycle => {
                let k = ids.len();
                if k < 4 || self.minor.is_some() {
                    return false;
                }
                (0..k).all(|i| {
                    (i + 1..k).all(|j| {
                        let consecutive = j == i + 1 || (i == 0 && j == k - 1);
                        g.has_edge(ids[i], ids[j]) == consecutive
                    })
                })
            }
            WitnessKind::NonOuterplanarMinor => {
                let Some(kind) = self.minor else { return false };
                if ids.len() != kind.branch_count() || self.paths.len() != kind.branch_pairs().len() {
                    return false;
                }
                let branch: HashSet<usize> = ids.iter().copied().collect();
                let mut interior_seen = HashSet::new();
                for (path, &(a, b)) in self.paths.iter().zip(kind.branch_pairs()) {
                    let Some(p) = path.iter().map(|l| g.index_of(l)).collect::<Option<Vec<_>>>() else {
                        return false;
                    };
                    if p.len() < 2 {
                        return false;
                    }
                    let (s, t) = (p[0], p[p.len() - 1]);
                    if !((s == ids[a] && t == ids[b]) || (s == ids[b] && t == ids[a])) {
                        return false;
                    }
                    if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) {
                        return false;
                    }
                    for &v in &p[1..p.len() - 1] {
                        if branch.contains(&v) || !interior_seen.insert(v) {
                            return false;
                        }
                    }
                }
                true
            }
        }
    }
}

impl fmt::Display for ForbiddenWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.minor {
            None => write!(f, "chordless cycle {}", self.vertices.join("-")),
            Some(m) => {
                let name = if m == MinorKind::K4 { "K4" } else { "K2,3" };
                write!(f, "{name} subdivision with branch vertices {}", self.vertices.join(","))
            }
        }
    }
}
