use std::collections::{BTreeMap, HashMap, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::{bounded_search, is_farey_embeddable, triangle_apexes, verify_certificate};
use super::{EmbeddingCertificate, Slope, SurfaceSig};
use crate::graph::{blocks, Graph};
use crate::{Error, Result};

/// Which construction produced an embedding.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbedPath {
    Constructive,
    /// The constructive pass failed verification; `bounded_search` found
    /// the certificate at height `q`.
    Search { q: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub certificate: EmbeddingCertificate,
    pub path: EmbedPath,
}

const FALLBACK_HEIGHTS: [u64; 5] = [4, 8, 16, 32, 64];

/// Explicit slopes for a chordal outerplanar graph.
///
/// Component `k` (in order of smallest vertex) lands strictly inside the
/// interval `(k, k+1)`. Blocks are laid out along the block-cut tree: each
/// cut vertex hands its child blocks disjoint runs of its Farey neighbours,
/// and triangulated polygons are developed triangle by triangle.
pub fn farey_embed(g: &Graph) -> Result<Embedding> {
    is_farey_embeddable(g).map_err(|w| Error::Rejected(Box::new(w)))?;
    let sig = SurfaceSig::PUNCTURED_TORUS;
    if let Some(map) = construct(g) {
        let cert = EmbeddingCertificate::slopes(sig, map);
        if verify_certificate(g, &cert)? {
            return Ok(Embedding { certificate: cert, path: EmbedPath::Constructive });
        }
    }
    for q in FALLBACK_HEIGHTS {
        if let Some(cert) = bounded_search(g, q) {
            return Ok(Embedding { certificate: cert, path: EmbedPath::Search { q } });
        }
    }
    Err(Error::Certificate("no embedding found by construction or bounded search".into()))
}

/// The Farey neighbours of `s`, indexed as `n0 + j s`.
struct Fan {
    s: (BigInt, BigInt),
    n0: (BigInt, BigInt),
}

impl Fan {
    fn new(s: &Slope) -> Self {
        let e = s.p().extended_gcd(s.q());
        let (x, y) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
        Fan { s: (s.p().clone(), s.q().clone()), n0: (-y, x) }
    }

    fn at(&self, j: i64) -> Slope {
        let j = BigInt::from(j);
        Slope::from_vector(&self.n0.0 + &j * &self.s.0, &self.n0.1 + &j * &self.s.1)
    }

    fn index(&self, v: &Slope) -> Option<i64> {
        let det = &self.s.0 * v.q() - &self.s.1 * v.p();
        let sign = if det.is_one() {
            BigInt::one()
        } else if (-&det).is_one() {
            -BigInt::one()
        } else {
            return None;
        };
        let (vp, vq) = (v.p() * &sign, v.q() * &sign);
        (vp * &self.n0.1 - vq * &self.n0.0).to_i64()
    }
}

struct Layout<'a> {
    g: &'a Graph,
    pos: Vec<Option<Slope>>,
    /// Fan indices at each placed vertex already taken by its parent block.
    parent_range: HashMap<usize, (i64, i64)>,
    next_free: HashMap<usize, i64>,
}

impl Layout<'_> {
    fn alloc(&mut self, s: usize, len: i64) -> i64 {
        let start = match self.next_free.get(&s) {
            Some(&j) => j,
            None => self.parent_range[&s].1 + 2,
        };
        self.next_free.insert(s, start + len + 1);
        start
    }

    fn place_block(&mut self, block: &[usize], s: usize) -> Option<()> {
        let fan = Fan::new(self.pos[s].as_ref()?);
        if block.len() == 2 {
            let u = if block[0] == s { block[1] } else { block[0] };
            let j = self.alloc(s, 1);
            self.pos[u] = Some(fan.at(j));
        } else {
            let link = self.link_path(block, s)?;
            let j0 = self.alloc(s, link.len() as i64);
            for (i, &u) in link.iter().enumerate() {
                self.pos[u] = Some(fan.at(j0 + i as i64));
            }
            self.develop(block)?;
        }
        for &v in block.iter().filter(|&&v| v != s) {
            let fan = Fan::new(self.pos[v].as_ref()?);
            let mut range: Option<(i64, i64)> = None;
            for &w in block.iter().filter(|&&w| self.g.has_edge(v, w)) {
                let j = fan.index(self.pos[w].as_ref()?)?;
                range = Some(match range {
                    None => (j, j),
                    Some((lo, hi)) => (lo.min(j), hi.max(j)),
                });
            }
            self.parent_range.insert(v, range?);
        }
        Some(())
    }

    /// Neighbours of `s` inside a triangulated polygon, in path order.
    fn link_path(&self, block: &[usize], s: usize) -> Option<Vec<usize>> {
        let link: Vec<usize> = block.iter().copied().filter(|&u| self.g.has_edge(s, u)).collect();
        let inner = |u: usize| link.iter().filter(|&&w| self.g.has_edge(u, w)).count();
        let mut path = vec![*link.iter().find(|&&u| inner(u) <= 1)?];
        while path.len() < link.len() {
            let last = *path.last()?;
            let next = link
                .iter()
                .copied()
                .find(|&w| self.g.has_edge(last, w) && !path.contains(&w))?;
            path.push(next);
        }
        Some(path)
    }

    /// Places the remaining polygon vertices across already placed edges.
    fn develop(&mut self, block: &[usize]) -> Option<()> {
        let g = self.g;
        let mut triangles = Vec::new();
        for (i, &a) in block.iter().enumerate() {
            for (j, &b) in block.iter().enumerate().skip(i + 1) {
                for &c in &block[j + 1..] {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        triangles.push([a, b, c]);
                    }
                }
            }
        }
        loop {
            let mut progress = false;
            for t in &triangles {
                let unplaced: Vec<usize> = t.iter().copied().filter(|&v| self.pos[v].is_none()).collect();
                if unplaced.len() != 1 {
                    continue;
                }
                let z = unplaced[0];
                let (x, y) = match t.iter().copied().filter(|&v| v != z).collect::<Vec<_>>()[..] {
                    [x, y] => (x, y),
                    _ => return None,
                };
                let w = triangles.iter().find_map(|o| {
                    (o != t && o.contains(&x) && o.contains(&y))
                        .then(|| o.iter().copied().find(|&v| v != x && v != y))
                        .flatten()
                        .filter(|&v| self.pos[v].is_some())
                })?;
                let (px, py, pw) = (self.pos[x].as_ref()?, self.pos[y].as_ref()?, self.pos[w].as_ref()?);
                let apex = triangle_apexes(px, py).into_iter().find(|a| a != pw)?;
                self.pos[z] = Some(apex);
                progress = true;
            }
            if !progress {
                break;
            }
        }
        block.iter().all(|&v| self.pos[v].is_some()).then_some(())
    }
}

fn construct(g: &Graph) -> Option<BTreeMap<String, Slope>> {
    let mut layout =
        Layout { g, pos: vec![None; g.len()], parent_range: HashMap::new(), next_free: HashMap::new() };
    for (k, comp) in g.component_indices().into_iter().enumerate() {
        let k = k as i64;
        let root = comp[0];
        let s = Slope::new(2 * k + 1, 2).ok()?;
        let fan = Fan::new(&s);
        let (a, b) = (fan.index(&Slope::integer(k))?, fan.index(&Slope::integer(k + 1))?);
        layout.parent_range.insert(root, (a.min(b), a.max(b)));
        layout.pos[root] = Some(s);
        if comp.len() == 1 {
            continue;
        }
        let sub = g.induced(&comp);
        let comp_blocks: Vec<Vec<usize>> = blocks(&sub)
            .into_iter()
            .map(|b| b.into_iter().map(|v| comp[v]).collect())
            .collect();
        let mut done = vec![false; comp_blocks.len()];
        let mut queue = VecDeque::from([root]);
        while let Some(s) = queue.pop_front() {
            for (bi, block) in comp_blocks.iter().enumerate() {
                if done[bi] || !block.contains(&s) {
                    continue;
                }
                done[bi] = true;
                layout.place_block(block, s)?;
                queue.extend(block.iter().copied().filter(|&v| v != s));
            }
        }
    }
    let pos = layout.pos;
    g.labels().iter().zip(pos).map(|(l, p)| Some((l.clone(), p?))).collect()
}
