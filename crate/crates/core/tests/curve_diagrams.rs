use proptest::prelude::*;

use curvekit::diagram::{
    algebraic_intersection, dehn_twist, geometric_intersection, is_essential, make_slope_curve, make_torus_curve,
    puncture_curve, self_intersection, CurveDiagram,
};
use curvekit::farey::SurfaceSig;

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

fn slopes(bound: i64) -> Vec<(i64, i64)> {
    let mut out = vec![(1, 0)];
    for q in 1..=bound {
        for p in -bound..=bound {
            if gcd(p, q) == 1 {
                out.push((p, q));
            }
        }
    }
    out
}

fn sig(g: u32, n: u32) -> SurfaceSig {
    SurfaceSig::new(g, n).unwrap()
}

#[test]
fn determinant_oracle_on_both_tori() {
    let all = slopes(6);
    for s in [sig(1, 0), sig(1, 1)] {
        let curves: Vec<CurveDiagram> = all.iter().map(|&(p, q)| make_slope_curve(s, p, q).unwrap()).collect();
        for (i, &(p, q)) in all.iter().enumerate() {
            assert_eq!(self_intersection(&curves[i]).unwrap(), 0);
            for (j, &(r, t)) in all.iter().enumerate() {
                let det = (p * t - q * r).unsigned_abs();
                assert_eq!(geometric_intersection(&curves[i], &curves[j]).unwrap(), det, "{p}/{q} {r}/{t}");
            }
        }
    }
}

#[test]
fn twists_follow_slope_arithmetic() {
    // τ_A(C) has slope C + det(A, C) A.
    for &(r, s) in &[(1, 0), (0, 1), (1, 1), (2, -1), (3, 2)] {
        let a = make_torus_curve(r, s).unwrap();
        for &(p, q) in &slopes(3) {
            let c = make_torus_curve(p, q).unwrap();
            for k in -3i64..=3 {
                let d = r * q - s * p;
                let (np, nq) = (p + k * d * r, q + k * d * s);
                let g = gcd(np, nq);
                let want = make_torus_curve(np / g, nq / g).unwrap();
                let got = dehn_twist(&c, &a, k).unwrap();
                assert!(got.same_class(&want), "τ_({r},{s})^{k} ({p},{q}) = {got}, want ({np},{nq})");
            }
        }
    }
}

#[test]
fn twist_growth_on_the_torus() {
    for &(r, s) in &[(1, 0), (2, 3)] {
        let a = make_torus_curve(r, s).unwrap();
        for &(p, q) in &[(0, 1), (1, 1), (-1, 2)] {
            let b = make_torus_curve(p, q).unwrap();
            let iab = geometric_intersection(&a, &b).unwrap();
            for k in -3i64..=3 {
                let t = dehn_twist(&b, &a, k).unwrap();
                assert_eq!(geometric_intersection(&t, &b).unwrap(), k.unsigned_abs() * iab * iab);
            }
        }
    }
}

#[test]
fn four_punctured_sphere_slopes() {
    // Curves around {1,2} and {2,3} play the slopes 0 and ∞; a full twist
    // acts on slopes by a parabolic with translation 2.
    let s = sig(0, 4);
    let zero = puncture_curve(s, &[1, 2]).unwrap();
    let inf = puncture_curve(s, &[2, 3]).unwrap();
    assert_eq!(geometric_intersection(&zero, &inf).unwrap(), 2);
    let mul = |m: [[i64; 2]; 2], v: (i64, i64)| (m[0][0] * v.0 + m[0][1] * v.1, m[1][0] * v.0 + m[1][1] * v.1);
    let words: Vec<Vec<(usize, i64)>> = {
        let mut w = vec![vec![]];
        for _ in 0..3 {
            let mut next = Vec::new();
            for base in &w {
                for t in 0..2 {
                    for e in [-1, 1] {
                        let mut x: Vec<(usize, i64)> = base.clone();
                        x.push((t, e));
                        next.push(x);
                    }
                }
            }
            w.extend(next);
        }
        w
    };
    let consistent = |s0: i64, s1: i64| {
        let twist_mats = [[[1, 0], [2 * s0, 1]], [[1, 2 * s1], [0, 1]]];
        let mut curves = Vec::new();
        for w in &words {
            for (start, slope) in [(&zero, (0i64, 1i64)), (&inf, (1, 0))] {
                let mut c = start.clone();
                let mut v = slope;
                for &(t, e) in w {
                    let along = if t == 0 { &zero } else { &inf };
                    c = dehn_twist(&c, along, e).unwrap();
                    let m = twist_mats[t];
                    let m = if e > 0 { m } else { [[m[0][0], -m[0][1]], [-m[1][0], m[1][1]]] };
                    v = mul(m, v);
                }
                curves.push((c, v));
            }
        }
        curves.iter().all(|(a, u)| {
            curves.iter().take(40).all(|(b, v)| {
                geometric_intersection(a, b).unwrap() == 2 * (u.0 * v.1 - u.1 * v.0).unsigned_abs()
            })
        })
    };
    let found: Vec<(i64, i64)> =
        [(1, 1), (1, -1), (-1, 1), (-1, -1)].into_iter().filter(|&(a, b)| consistent(a, b)).collect();
    // Intersection numbers cannot see orientation, so a mirror pair survives;
    // as on the torus, the two twists act with opposite signs.
    assert!(!found.is_empty() && found.iter().all(|&(a, b)| a == -b), "{found:?}");
}

#[test]
fn five_punctured_sphere_pairs() {
    let s = sig(0, 5);
    let pairs: Vec<(u32, u32)> = (1..=5).flat_map(|i| (i + 1..=5).map(move |j| (i, j))).collect();
    let curves: Vec<CurveDiagram> = pairs.iter().map(|&(i, j)| puncture_curve(s, &[i, j]).unwrap()).collect();
    // A pair containing the outer puncture 5 is realised by its complement
    // in 1..4. Each curve bounds a neighbourhood of the star of arcs from the
    // centre to its inner punctures, which leave the centre in cyclic order
    // 1..4: two curves are disjoint iff the sets are nested, or disjoint and
    // not interleaved around the centre.
    let inner = |(i, j): (u32, u32)| -> Vec<u32> {
        if j == 5 {
            (1..5).filter(|&p| p != i).collect()
        } else {
            vec![i, j]
        }
    };
    let disjoint_model = |a: &[u32], b: &[u32]| {
        let sub = |x: &[u32], y: &[u32]| x.iter().all(|p| y.contains(p));
        if sub(a, b) || sub(b, a) {
            return true;
        }
        if a.iter().any(|p| b.contains(p)) {
            return false;
        }
        let seq: Vec<bool> = (1..5).filter(|p| a.contains(p) || b.contains(p)).map(|p| a.contains(&p)).collect();
        let switches = (0..seq.len()).filter(|&k| seq[k] != seq[(k + 1) % seq.len()]).count();
        switches <= 2
    };
    let mut zero_pairs = 0;
    for (x, &p) in pairs.iter().enumerate() {
        assert!(is_essential(&curves[x]).unwrap());
        for (y, &q) in pairs.iter().enumerate().skip(x + 1) {
            let iota = geometric_intersection(&curves[x], &curves[y]).unwrap();
            assert_eq!(iota == 0, disjoint_model(&inner(p), &inner(q)), "{p:?} {q:?}");
            let disjoint_sets = p.0 != q.0 && p.0 != q.1 && p.1 != q.0 && p.1 != q.1;
            if iota == 0 {
                assert!(disjoint_sets);
                zero_pairs += 1;
            }
        }
    }
    // Fifteen pairs of disjoint puncture pairs, but the ten curves cannot all
    // realise them: the diagonal pairs interleave.
    assert!(zero_pairs < 15);
}

fn random_word(rank: i32) -> impl Strategy<Value = Vec<i32>> {
    proptest::collection::vec((1..=rank, any::<bool>()), 1..9)
        .prop_map(|v| v.into_iter().map(|(x, s)| if s { x } else { -x }).collect())
}

fn surface() -> impl Strategy<Value = SurfaceSig> {
    prop_oneof![Just(sig(1, 1)), Just(sig(0, 4)), Just(sig(0, 5)), Just(sig(1, 2)), Just(sig(2, 1))]
}

fn simple_curve(s: SurfaceSig) -> CurveDiagram {
    let seeds: &[&[i32]] = match (s.genus(), s.punctures()) {
        (0, _) => &[&[1, 2], &[2, 3]],
        (1, 1) => &[&[1], &[2], &[1, 2]],
        (1, _) => &[&[1], &[2], &[3]],
        _ => &[&[1], &[2], &[3], &[4]],
    };
    CurveDiagram::new(s, seeds[0].to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn intersection_symmetry_and_invariance(s in surface(), w1 in random_word(4), w2 in random_word(4), rot in 0usize..8) {
        let rank = match (s.genus(), s.punctures()) { (0, n) => n - 1, (g, n) => 2 * g + n - 1 } as i32;
        let clip = |w: &[i32]| -> Vec<i32> { w.iter().map(|&l| l.signum() * ((l.abs() - 1) % rank + 1)).collect() };
        let a = CurveDiagram::new(s, clip(&w1)).unwrap();
        let b = CurveDiagram::new(s, clip(&w2)).unwrap();
        let iab = geometric_intersection(&a, &b).unwrap();
        prop_assert_eq!(iab, geometric_intersection(&b, &a).unwrap());
        prop_assert_eq!(iab, geometric_intersection(&a.reversed(), &b).unwrap());
        if !b.is_empty() {
            let k = rot % b.len();
            let rotated: Vec<i32> = b.word()[k..].iter().chain(&b.word()[..k]).copied().collect();
            prop_assert_eq!(iab, geometric_intersection(&a, &CurveDiagram::new(s, rotated).unwrap()).unwrap());
        }
        let alg = algebraic_intersection(&a, &b).unwrap();
        prop_assert!(iab as i64 >= alg.abs());
        prop_assert_eq!((iab as i64 - alg).rem_euclid(2), 0);
        // Mapping classes preserve intersection numbers.
        let t = simple_curve(s);
        let (ta, tb) = (dehn_twist(&a, &t, 1).unwrap(), dehn_twist(&b, &t, 1).unwrap());
        prop_assert_eq!(iab, geometric_intersection(&ta, &tb).unwrap());
        prop_assert_eq!(self_intersection(&a).unwrap(), self_intersection(&ta).unwrap());
        prop_assert!(dehn_twist(&ta, &t, -1).unwrap().same_class(&a));
    }
}
