use std::collections::BTreeMap;

use num_integer::Integer;
use rayon::prelude::*;

use super::{EmbeddingCertificate, Slope, SurfaceSig};
use crate::graph::Graph;

/// All slopes with `max(|p|, q) <= Q`, ordered by `|p| + q`, then by `q`,
/// then `p/q` before `-p/q`, with their Farey neighbourhoods inside the universe.
#[derive(Clone, Debug)]
pub struct SlopeUniverse {
    slopes: Vec<(i64, i64)>,
    adjacent: Vec<Vec<u32>>,
}

impl SlopeUniverse {
    pub fn new(q_max: u64) -> Self {
        let q_max = q_max.max(1) as i64;
        let mut slopes = vec![(1, 0)];
        for q in 1..=q_max {
            for p in -q_max..=q_max {
                if p.gcd(&q) == 1 {
                    slopes.push((p, q));
                }
            }
        }
        slopes.sort_by_key(|&(p, q)| (p.abs() + q, q, p < 0));
        let adjacent = (0..slopes.len())
            .into_par_iter()
            .map(|i| {
                let (p, q) = slopes[i];
                (0..slopes.len() as u32)
                    .filter(|&j| {
                        let (r, s) = slopes[j as usize];
                        (p * s - q * r).abs() == 1
                    })
                    .collect()
            })
            .collect();
        Self { slopes, adjacent }
    }

    pub fn len(&self) -> usize {
        self.slopes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slopes.is_empty()
    }

    pub fn slope(&self, i: usize) -> Slope {
        let (p, q) = self.slopes[i];
        Slope::new(p, q).expect("universe slopes are reduced")
    }

    fn adjacent(&self, i: u32, j: u32) -> bool {
        let ((p, q), (r, s)) = (self.slopes[i as usize], self.slopes[j as usize]);
        (p * s - q * r).abs() == 1
    }
}

/// Exhaustive search for an induced embedding using slopes of height at
/// most `q_max`. Deterministic: the first hit in enumeration order wins.
/// The certificate names the once-punctured torus.
pub fn bounded_search(g: &Graph, q_max: u64) -> Option<EmbeddingCertificate> {
    bounded_search_in(g, &SlopeUniverse::new(q_max))
}

pub(crate) fn bounded_search_in(g: &Graph, universe: &SlopeUniverse) -> Option<EmbeddingCertificate> {
    let sig = SurfaceSig::PUNCTURED_TORUS;
    if g.is_empty() {
        return Some(EmbeddingCertificate::slopes(sig, BTreeMap::new()));
    }
    let (order, anchor) = search_order(g);
    let first = (0..universe.len() as u32).into_par_iter().find_map_first(|c| {
        let mut assigned = vec![u32::MAX; g.len()];
        assigned[order[0]] = c;
        extend(g, universe, &order, &anchor, 1, &mut assigned).then_some(assigned)
    })?;
    let map = g
        .labels()
        .iter()
        .enumerate()
        .map(|(v, l)| (l.clone(), universe.slope(first[v] as usize)))
        .collect();
    Some(EmbeddingCertificate::slopes(sig, map))
}

/// Components by decreasing size, each in BFS order from a vertex of
/// maximum degree. `anchor[i]` is an earlier neighbour of `order[i]`.
fn search_order(g: &Graph) -> (Vec<usize>, Vec<Option<usize>>) {
    let mut comps = g.component_indices();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut order = Vec::with_capacity(g.len());
    let mut anchor = Vec::with_capacity(g.len());
    let mut seen = vec![false; g.len()];
    for comp in comps {
        let start = *comp.iter().max_by_key(|&&v| (g.degree(v), std::cmp::Reverse(v))).unwrap();
        seen[start] = true;
        order.push(start);
        anchor.push(None);
        let mut head = order.len() - 1;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for v in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    order.push(v);
                    anchor.push(Some(u));
                }
            }
        }
    }
    (order, anchor)
}

fn extend(
    g: &Graph,
    universe: &SlopeUniverse,
    order: &[usize],
    anchor: &[Option<usize>],
    depth: usize,
    assigned: &mut [u32],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    let all: Vec<u32>;
    let candidates: &[u32] = match anchor[depth] {
        Some(a) => &universe.adjacent[assigned[a] as usize],
        None => {
            all = (0..universe.len() as u32).collect();
            &all
        }
    };
    for &c in candidates {
        let consistent = order[..depth].iter().all(|&u| {
            let cu = assigned[u];
            cu != c && universe.adjacent(cu, c) == g.has_edge(u, v)
        });
        if consistent {
            assigned[v] = c;
            if extend(g, universe, order, anchor, depth + 1, assigned) {
                return true;
            }
        }
    }
    assigned[v] = u32::MAX;
    false
}
