use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::Graph;

/// Partition of the vertex set into cliques.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub parts: Vec<Vec<String>>,
    /// Whether `parts.len()` is known to be minimum.
    pub exact: bool,
}

impl CliqueCover {
    pub fn size(&self) -> usize {
        self.parts.len()
    }

    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut seen = BTreeSet::new();
        for part in &self.parts {
            let Some(ids) = part.iter().map(|l| g.index_of(l)).collect::<Option<Vec<_>>>() else {
                return false;
            };
            for (i, &u) in ids.iter().enumerate() {
                if !seen.insert(u) || ids[i + 1..].iter().any(|&v| !g.has_edge(u, v)) {
                    return false;
                }
            }
        }
        seen.len() == g.len() && self.parts.iter().all(|p| !p.is_empty())
    }
}

/// Vertex counts up to this bound get an exact (minimum) cover.
pub const EXACT_COVER_LIMIT: usize = 12;

/// Clique cover: minimum for graphs on at most twelve vertices (colouring of
/// the complement by backtracking), greedy above.
pub fn clique_cover(g: &Graph) -> CliqueCover {
    let n = g.len();
    let (assignment, exact) = if n <= EXACT_COVER_LIMIT {
        (exact_cover(g), true)
    } else {
        (greedy_cover(g), false)
    };
    let parts_n = assignment.iter().copied().max().map_or(0, |m| m + 1);
    let mut parts = vec![Vec::new(); parts_n];
    for (v, &c) in assignment.iter().enumerate() {
        parts[c].push(g.label(v).to_string());
    }
    CliqueCover { parts, exact }
}

fn exact_cover(g: &Graph) -> Vec<usize> {
    let n = g.len();
    if n == 0 {
        return Vec::new();
    }
    // Colour vertices in descending degree of the complement.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (g.degree(v), v));
    for k in 1..=n {
        let mut colour = vec![usize::MAX; n];
        if colour_complement(g, &order, 0, k, &mut colour, 0) {
            return colour;
        }
    }
    unreachable!("n colours always suffice")
}

fn colour_complement(
    g: &Graph,
    order: &[usize],
    i: usize,
    k: usize,
    colour: &mut [usize],
    used: usize,
) -> bool {
    if i == order.len() {
        return true;
    }
    let v = order[i];
    // Symmetry break: at most one fresh colour per step.
    for c in 0..(used + 1).min(k) {
        let fits = order[..i]
            .iter()
            .all(|&u| colour[u] != c || g.has_edge(u, v));
        if fits {
            colour[v] = c;
            if colour_complement(g, order, i + 1, k, colour, used.max(c + 1)) {
                return true;
            }
        }
    }
    colour[v] = usize::MAX;
    false
}

fn greedy_cover(g: &Graph) -> Vec<usize> {
    let n = g.len();
    let mut colour = vec![usize::MAX; n];
    let mut next = 0;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    for &v in &order {
        if colour[v] != usize::MAX {
            continue;
        }
        let mut clique = vec![v];
        for &u in &order {
            if colour[u] == usize::MAX && u != v && clique.iter().all(|&w| g.has_edge(u, w)) {
                clique.push(u);
            }
        }
        for u in clique {
            colour[u] = next;
        }
        next += 1;
    }
    colour
}

/// A maximum clique (Bron–Kerbosch with pivoting), sorted.
pub fn max_clique(g: &Graph) -> Vec<usize> {
    fn bk(g: &Graph, r: &mut Vec<usize>, p: BTreeSet<usize>, mut x: BTreeSet<usize>, best: &mut Vec<usize>) {
        if p.is_empty() && x.is_empty() {
            if r.len() > best.len() {
                *best = r.clone();
            }
            return;
        }
        if r.len() + p.len() <= best.len() {
            return;
        }
        let pivot = p
            .union(&x)
            .max_by_key(|&&u| p.iter().filter(|&&w| g.has_edge(u, w)).count())
            .copied()
            .unwrap();
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !g.has_edge(pivot, v)).collect();
        let mut p = p;
        for v in candidates {
            let ns = g.neighbor_set(v);
            r.push(v);
            bk(
                g,
                r,
                p.intersection(ns).copied().collect(),
                x.intersection(ns).copied().collect(),
                best,
            );
            r.pop();
            p.remove(&v);
            x.insert(v);
        }
    }
    let mut best = Vec::new();
    bk(g, &mut Vec::new(), (0..g.len()).collect(), BTreeSet::new(), &mut best);
    best.sort_unstable();
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique(g).len()
}
