//! Dehn twists as automorphisms of the free fundamental group.
//!
//! The twisting curve `A` is drawn embedded: its strands run parallel along
//! the generator bands and pass through the vertex disk as disjoint chords.
//! With the basepoint on the disk boundary just before the first half-edge,
//! each generator path crosses some chords on its way into and out of the
//! disk; the twist splices a full loop of `A` at each crossing, always turning
//! to the same side.

use std::cmp::Ordering;

use super::curve::{cyclic_reduce, inverse, MAX_LETTERS};
use super::intersect::model_self_intersection;
use super::{CurveDiagram, PolygonModel};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum End {
    /// Strand `k` leaving the vertex along `a_k`.
    Departure(usize),
    /// Strand `k` arriving at the vertex after `a_k`.
    Arrival(usize),
}

struct Strands<'a> {
    model: &'a PolygonModel,
    word: &'a [i32],
}

impl Strands<'_> {
    /// Letter `t` of the ray leaving the vertex through this end.
    fn ray(&self, end: End, t: usize) -> i32 {
        let n = self.word.len();
        match end {
            End::Departure(k) => self.word[(k + t) % n],
            End::Arrival(k) => -self.word[(k + n * (t / n + 1) - t % n) % n],
        }
    }

    /// Counterclockwise order of two ends sharing a half-edge: the ray that
    /// turns off further to the right comes first.
    fn compare(&self, e: End, f: End) -> Ordering {
        if e == f {
            return Ordering::Equal;
        }
        for t in 1..=2 * self.word.len() {
            let (b1, b2) = (self.ray(e, t), self.ray(f, t));
            if b1 != b2 {
                let d = -self.ray(e, t - 1);
                return self.model.ccw(d, b1).cmp(&self.model.ccw(d, b2));
            }
        }
        unreachable!("distinct strand ends of a primitive word diverge")
    }
}

/// Images of the generators under `τ_A^{±1}`.
fn twist_images(model: &PolygonModel, a: &[i32], positive: bool) -> Vec<Vec<i32>> {
    let n = a.len();
    let strands = Strands { model, word: a };
    let rotation = model.rotation();
    // Global counterclockwise index of every strand end on the disk boundary.
    let mut dep = vec![0usize; n];
    let mut arr = vec![0usize; n];
    let mut slot_start = Vec::with_capacity(rotation.len());
    let mut next = 0;
    for &h in rotation {
        slot_start.push(next);
        let mut ends: Vec<End> = (0..n)
            .flat_map(|k| {
                let mut v = Vec::new();
                if a[k] == h {
                    v.push(End::Departure(k));
                }
                if -a[k] == h {
                    v.push(End::Arrival(k));
                }
                v
            })
            .collect();
        ends.sort_by(|&e, &f| strands.compare(e, f));
        for e in ends {
            match e {
                End::Departure(k) => dep[k] = next,
                End::Arrival(k) => arr[k] = next,
            }
            next += 1;
        }
    }
    // Chord k runs from the arrival of strand k-1 to the departure of strand k.
    let chords: Vec<(usize, usize)> = (0..n).map(|k| (arr[(k + n - 1) % n], dep[k])).collect();
    let loop_at = |k: usize, forward: bool| {
        let w: Vec<i32> = a[k..].iter().chain(&a[..k]).copied().collect();
        if forward != positive {
            w
        } else {
            inverse(&w)
        }
    };
    // Loops spliced on a path along the boundary-to-boundary segment that
    // has boundary indices `< split` on its right.
    let crossings = |split: usize, from_start: bool| -> Vec<i32> {
        let mut hits: Vec<(usize, usize, bool)> = chords
            .iter()
            .enumerate()
            .filter(|(_, &(p, q))| (p < split) != (q < split))
            .map(|(k, &(p, q))| {
                let near = if from_start { p.min(q) } else { p.max(q) };
                let tail_right = if from_start { p < split } else { p >= split };
                (near, k, tail_right)
            })
            .collect();
        hits.sort();
        hits.into_iter().flat_map(|(_, k, fwd)| loop_at(k, fwd)).collect()
    };
    let rank = model.rank() as i32;
    (1..=rank)
        .map(|x| {
            let out_split = slot_start[model.position(x)];
            let in_slot = model.position(-x);
            let in_split = slot_start.get(in_slot + 1).copied().unwrap_or(next);
            let mut image = crossings(out_split, true);
            image.push(x);
            image.extend(crossings(in_split, false));
            image
        })
        .collect()
}

/// `τ_A^power (c)`. The sign is normalised so that on the torus the twist
/// along `(1, 0)` sends slope `(p, q)` to `(p + q, q)`.
pub fn dehn_twist(c: &CurveDiagram, along: &CurveDiagram, power: i64) -> Result<CurveDiagram> {
    if c.sig() != along.sig() {
        return Err(Error::Diagram("twist curve lives on a different surface".into()));
    }
    let model = PolygonModel::new(c.sig())?;
    if model_self_intersection(&model, along) != 0 {
        return Err(Error::Diagram(format!("twisting curve {along} is not embedded")));
    }
    if power == 0 || along.is_empty() || c.is_empty() {
        return Ok(c.clone());
    }
    let images = twist_images(&model, along.word(), power > 0);
    let mut word = c.word().to_vec();
    for _ in 0..power.unsigned_abs() {
        let mut next = Vec::new();
        for &l in &word {
            let image = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                next.extend_from_slice(image);
            } else {
                next.extend(inverse(image));
            }
            if next.len() > 4 * MAX_LETTERS {
                return Err(Error::Budget { limit: MAX_LETTERS });
            }
        }
        word = cyclic_reduce(next);
        if word.len() > MAX_LETTERS {
            return Err(Error::Budget { limit: MAX_LETTERS });
        }
    }
    CurveDiagram::new(c.sig(), word)
}
