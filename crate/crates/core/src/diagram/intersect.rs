//! Intersection numbers by counting linked lifts.
//!
//! The universal cover of the ribbon graph is a planar tree. Two closed
//! geodesics meet once for every deck-orbit of pairs of lifts whose ends
//! interleave at infinity. Two lines in a planar tree share a (possibly
//! single-vertex) segment; contracting it, they cross exactly when their four
//! outgoing directions alternate around the contracted vertex. Each pair is
//! counted once, at the start of the shared segment in the first curve's
//! orientation.

use super::curve::inverse;
use super::{CurveDiagram, PolygonModel};
use crate::{Error, Result};

/// Linked pairs `(i, j)` of positions in `u` and `w`. Single-vertex contacts
/// are counted only when `single` is set, so that running over `w` and its
/// inverse counts them once. Stops early once the count exceeds `cap`.
fn linked_pairs(model: &PolygonModel, u: &[i32], w: &[i32], single: bool, cap: u64) -> u64 {
    let (n, k) = (u.len(), w.len());
    let mut count = 0u64;
    for i in 0..n {
        let prev_u = u[(i + n - 1) % n];
        for j in 0..k {
            let prev_w = w[(j + k - 1) % k];
            if prev_u == prev_w {
                continue;
            }
            let mut m = 0;
            while m < n + k && u[(i + m) % n] == w[(j + m) % k] {
                m += 1;
            }
            if m == n + k {
                continue;
            }
            let (x, y) = (-prev_u, -prev_w);
            let crossed = if m == 0 {
                let (a, b) = (u[i], w[j]);
                if !single || x == b || y == a {
                    continue;
                }
                let between = |h: i32| model.ccw(x, h) < model.ccw(x, a);
                between(y) != between(b)
            } else {
                let c = u[i];
                let d = -u[(i + m - 1) % n];
                let (a, b) = (u[(i + m) % n], w[(j + m) % k]);
                (model.ccw(c, x) < model.ccw(c, y)) == (model.ccw(d, a) < model.ccw(d, b))
            };
            if crossed {
                count += 1;
                if count > cap {
                    return count;
                }
            }
        }
    }
    count
}

fn check_same_model(a: &CurveDiagram, b: &CurveDiagram) -> Result<()> {
    if a.sig() != b.sig() {
        return Err(Error::Diagram(format!("curves live on ({}) and ({})", a.sig(), b.sig())));
    }
    Ok(())
}

/// Minimal intersection number on the model's surface (punctures kept).
/// Counting stops once it passes `cap`; the returned value is then `cap + 1`
/// or more.
pub(crate) fn model_intersection(model: &PolygonModel, a: &CurveDiagram, b: &CurveDiagram, cap: u64) -> u64 {
    if a.is_empty() || b.is_empty() {
        return 0;
    }
    let ((r, ka), (s, kb)) = (a.root(), b.root());
    let scale = (ka * kb) as u64;
    let inner_cap = cap / scale + 1;
    let s_inv = inverse(s);
    let forward = linked_pairs(model, r, s, true, inner_cap);
    let total = forward + linked_pairs(model, r, &s_inv, false, inner_cap.saturating_sub(forward));
    total * scale
}

/// Geometric intersection number of two curves on the same surface.
///
/// Exact on surfaces with punctures and on the torus. Closed surfaces of
/// genus at least two are modelled with a puncture that cannot be filled
/// combinatorially here, so they are rejected.
pub fn geometric_intersection(a: &CurveDiagram, b: &CurveDiagram) -> Result<u64> {
    check_same_model(a, b)?;
    let model = PolygonModel::new(a.sig())?;
    if !model.is_exact() {
        return Err(Error::Diagram(format!(
            "intersection numbers on the closed surface ({}) are not computed exactly",
            a.sig()
        )));
    }
    Ok(model_intersection(&model, a, b, u64::MAX - 1))
}

/// Like [`geometric_intersection`] on the model surface, capped at `cap + 1`.
pub fn intersection_capped(a: &CurveDiagram, b: &CurveDiagram, cap: u64) -> Result<u64> {
    check_same_model(a, b)?;
    let model = PolygonModel::new(a.sig())?;
    Ok(model_intersection(&model, a, b, cap).min(cap.saturating_add(1)))
}

pub(crate) fn model_self_intersection(model: &PolygonModel, c: &CurveDiagram) -> u64 {
    if c.is_empty() {
        return 0;
    }
    let (r, k) = c.root();
    let r_inv = inverse(r);
    let twice = linked_pairs(model, r, r, true, u64::MAX) + linked_pairs(model, r, &r_inv, false, u64::MAX);
    debug_assert!(twice.is_multiple_of(2));
    let i = twice / 2;
    let k = k as u64;
    k * k * i + k - 1
}

/// Minimal number of self-crossings in the free homotopy class. On closed
/// stand-in models this is the count with the puncture kept.
pub fn self_intersection(c: &CurveDiagram) -> Result<u64> {
    let model = PolygonModel::new(c.sig())?;
    Ok(model_self_intersection(&model, c))
}

/// Algebraic intersection of the homology classes on the genus part; exact
/// for the closed surface as well.
pub fn algebraic_intersection(a: &CurveDiagram, b: &CurveDiagram) -> Result<i64> {
    check_same_model(a, b)?;
    let g = a.sig().genus() as usize;
    let (ha, hb) = (homology(a, g), homology(b, g));
    Ok((0..g).map(|i| ha[2 * i] * hb[2 * i + 1] - ha[2 * i + 1] * hb[2 * i]).sum())
}

/// Exponent sums of the handle generators `a_1, b_1, ..., a_g, b_g`.
pub(crate) fn homology(c: &CurveDiagram, g: usize) -> Vec<i64> {
    let mut h = vec![0i64; 2 * g];
    for &l in c.word() {
        let x = l.unsigned_abs() as usize;
        if x <= 2 * g {
            h[x - 1] += l.signum() as i64;
        }
    }
    h
}
