//! Combinatorial closed curves on punctured surfaces.
//!
//! A surface `S_{g,n}` is carried by a one-vertex ribbon graph
//! ([`PolygonModel`]); a curve is the cyclic word of edges it runs along
//! ([`CurveDiagram`]). Intersection numbers come from counting linked pairs
//! of lifts in the universal cover, and Dehn twists act as automorphisms of
//! the free fundamental group.

mod curve;
mod intersect;
mod model;
mod twist;

use std::collections::BTreeMap;

pub use curve::{make_slope_curve, make_torus_curve, CurveDiagram, MAX_LETTERS};
pub use intersect::{algebraic_intersection, geometric_intersection, intersection_capped, self_intersection};
pub use model::{make_model, PolygonModel};
pub use twist::dehn_twist;

pub(crate) use intersect::{homology, model_intersection, model_self_intersection};

use crate::farey::SurfaceSig;
use crate::graph::Graph;
use crate::{Error, Result};

/// False for curves bounding a disk or a once-punctured disk. The input must
/// be embedded.
pub fn is_essential(c: &CurveDiagram) -> Result<bool> {
    let model = PolygonModel::new(c.sig())?;
    if model_self_intersection(&model, c) != 0 {
        return Err(Error::Diagram(format!("{c} is not embedded")));
    }
    Ok(essential_in(&model, c))
}

pub(crate) fn essential_in(model: &PolygonModel, c: &CurveDiagram) -> bool {
    if c.is_empty() {
        return false;
    }
    let key = c.canonical();
    let (root, _) = c.root();
    let root = CurveDiagram::new(c.sig(), root.to_vec()).expect("root of a valid word");
    let root_key = root.canonical();
    !model.faces().into_iter().any(|f| {
        let face = CurveDiagram::new(c.sig(), f).expect("face words use model letters");
        face.canonical() == root_key || face.canonical() == key
    })
}

/// How two embedded essential curves relate in the curve graph of `sig`:
/// `Some(true)` adjacent, `Some(false)` not, `None` when the model cannot
/// tell (closed surfaces of genus at least two).
pub(crate) fn curve_relation(model: &PolygonModel, a: &CurveDiagram, b: &CurveDiagram, cap: u64) -> Option<bool> {
    let sig = model.sig();
    if a.same_class(b) {
        return Some(false);
    }
    let iota = model_intersection(model, a, b, cap);
    if model.is_exact() {
        let threshold = sig.threshold() as u64;
        return Some(iota == threshold);
    }
    let g = sig.genus() as usize;
    let (ha, hb) = (homology(a, g), homology(b, g));
    let nonzero = |h: &[i64]| h.iter().any(|&x| x != 0);
    let flipped: Vec<i64> = hb.iter().map(|x| -x).collect();
    if iota == 0 && nonzero(&ha) && nonzero(&hb) && ha != hb && ha != flipped {
        return Some(true);
    }
    let algebraic: i64 = (0..g).map(|i| ha[2 * i] * hb[2 * i + 1] - ha[2 * i + 1] * hb[2 * i]).sum();
    (algebraic != 0).then_some(false)
}

/// Recomputes every pairwise relation of a curve assignment from the words.
pub fn verify_curve_assignment(g: &Graph, sig: SurfaceSig, map: &BTreeMap<String, CurveDiagram>) -> Result<bool> {
    let model = PolygonModel::new(sig)?;
    let mut curves = Vec::with_capacity(g.len());
    for l in g.labels() {
        let c = &map[l];
        if c.sig() != sig {
            return Err(Error::Certificate(format!("curve for '{l}' lives on ({})", c.sig())));
        }
        if model_self_intersection(&model, c) != 0 || !essential_in(&model, c) {
            return Ok(false);
        }
        curves.push(c);
    }
    for u in 0..g.len() {
        for v in u + 1..g.len() {
            if curves[u].same_class(curves[v]) {
                return Ok(false);
            }
            if curve_relation(&model, curves[u], curves[v], u64::MAX - 1) != Some(g.has_edge(u, v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Curve surrounding the punctures in `set` (1-based; puncture `n` sits in
/// the outer face) on the genus-zero model.
pub fn puncture_curve(sig: SurfaceSig, set: &[u32]) -> Result<CurveDiagram> {
    let n = sig.punctures();
    if sig.genus() != 0 || set.iter().any(|&p| p == 0 || p > n) {
        return Err(Error::Diagram(format!("bad puncture set {set:?} on ({sig})")));
    }
    let inner: Vec<u32> = if set.contains(&n) {
        (1..n).filter(|p| !set.contains(p)).collect()
    } else {
        let mut s = set.to_vec();
        s.sort_unstable();
        s.dedup();
        s
    };
    CurveDiagram::new(sig, inner.into_iter().map(|p| p as i32))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(g: u32, n: u32) -> SurfaceSig {
        SurfaceSig::new(g, n).unwrap()
    }

    #[test]
    fn torus_determinants() {
        let pairs = [((1, 0), (0, 1), 1), ((1, 2), (3, 5), 1), ((1, 0), (1, 5), 5), ((2, 3), (-1, 4), 11)];
        for ((p, q), (r, t), want) in pairs {
            let (a, b) = (make_torus_curve(p, q).unwrap(), make_torus_curve(r, t).unwrap());
            assert_eq!(geometric_intersection(&a, &b).unwrap(), want, "{p}/{q} vs {r}/{t}");
            assert_eq!(geometric_intersection(&b, &a).unwrap(), want);
        }
        assert_eq!(self_intersection(&make_torus_curve(2, 3).unwrap()).unwrap(), 0);
    }

    #[test]
    fn figure_eight_and_peripheral_curves() {
        let sig = s(0, 4);
        let eight = CurveDiagram::new(sig, [1, -2]).unwrap();
        assert_eq!(self_intersection(&eight).unwrap(), 1);
        let bigon = CurveDiagram::new(sig, [1, 2, -2, 2, 3]).unwrap();
        assert_eq!(self_intersection(&bigon).unwrap(), 0);
        let around_one = CurveDiagram::new(s(0, 5), [3]).unwrap();
        assert!(!is_essential(&around_one).unwrap());
        assert!(!is_essential(&CurveDiagram::new(sig, [1, -1]).unwrap()).unwrap());
        assert!(is_essential(&make_torus_curve(1, 0).unwrap()).unwrap());
        assert!(!is_essential(&CurveDiagram::new(s(0, 5), [1, 2, 3, 4]).unwrap()).unwrap());
        assert!(is_essential(&eight).is_err());
    }

    #[test]
    fn twists_on_the_torus() {
        let a = make_torus_curve(1, 0).unwrap();
        let b = make_torus_curve(0, 1).unwrap();
        let t = dehn_twist(&b, &a, 1).unwrap();
        assert!(t.same_class(&make_torus_curve(1, 1).unwrap()));
        assert_eq!(geometric_intersection(&t, &b).unwrap(), 1);
        assert!(dehn_twist(&b, &a, 0).unwrap().same_class(&b));
        let back = dehn_twist(&t, &a, -1).unwrap();
        assert!(back.same_class(&b));
    }

    #[test]
    fn puncture_pairs_on_five_punctured_sphere() {
        let sig = s(0, 5);
        let b12 = puncture_curve(sig, &[1, 2]).unwrap();
        let b34 = puncture_curve(sig, &[3, 4]).unwrap();
        let b23 = puncture_curve(sig, &[2, 3]).unwrap();
        let b45 = puncture_curve(sig, &[4, 5]).unwrap();
        assert_eq!(geometric_intersection(&b12, &b34).unwrap(), 0);
        assert_eq!(geometric_intersection(&b12, &b45).unwrap(), 0);
        assert_eq!(geometric_intersection(&b12, &b23).unwrap(), 2);
        assert!(is_essential(&b45).unwrap());
    }
}
