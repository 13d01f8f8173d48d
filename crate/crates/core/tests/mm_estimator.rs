use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use proptest::prelude::*;

use curvekit::farey::{farey_adjacent, Slope};
use curvekit::mm::{calibrate_c, continued_fraction, farey_distance, mm_estimate, sample_pairs};

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Breadth-first distances in the Farey graph restricted to heights <= q_max.
fn bfs(source: (i64, i64), q_max: i64) -> HashMap<(i64, i64), u64> {
    let mut verts = vec![(1, 0)];
    for q in 1..=q_max {
        for p in -q_max..=q_max {
            if gcd(p, q) == 1 {
                verts.push((p, q));
            }
        }
    }
    let mut dist = HashMap::from([(source, 0u64)]);
    let mut queue = VecDeque::from([source]);
    while let Some((p, q)) = queue.pop_front() {
        let d = dist[&(p, q)];
        for &(r, s) in &verts {
            if (p * s - q * r).abs() == 1 && !dist.contains_key(&(r, s)) {
                dist.insert((r, s), d + 1);
                queue.push_back((r, s));
            }
        }
    }
    dist
}

fn slope(v: (i64, i64)) -> Slope {
    Slope::new(v.0, v.1).unwrap()
}

#[test]
fn farey_distance_matches_bounded_bfs() {
    for source in [(1, 0), (0, 1), (2, 5), (-3, 4)] {
        let dist = bfs(source, 36);
        for (&target, &d) in &dist {
            let height = target.0.abs().max(target.1);
            if height <= 12 && d <= 4 {
                assert_eq!(farey_distance(&slope(source), &slope(target)), d, "{source:?} -> {target:?}");
            }
        }
    }
}

#[test]
fn worked_distance_examples_by_bfs() {
    let dist = bfs((1, 0), 16);
    assert_eq!(dist[&(1, 2)], 2);
    assert_eq!(dist[&(2, 5)], 3);
    assert_eq!(dist[&(13, 8)], farey_distance(&Slope::infinity(), &slope((13, 8))));
}

#[test]
fn continued_fraction_evaluates_back() {
    for q in 1..40i64 {
        for p in -40..40i64 {
            if gcd(p, q) != 1 {
                continue;
            }
            let cf = continued_fraction(&slope((p, q))).unwrap();
            let (mut num, mut den) = (BigInt::from(1), BigInt::from(0));
            for a in cf.iter().rev() {
                let next = a * &num + &den;
                den = num;
                num = next;
            }
            assert_eq!((num, den), (BigInt::from(p), BigInt::from(q)));
            if cf.len() > 1 {
                assert!(cf.last().unwrap() >= &BigInt::from(2));
                assert!(cf[1..].iter().all(|a| a >= &BigInt::from(1)));
            }
        }
    }
}

#[test]
fn symmetry_slack_is_within_bound() {
    let mut worst = 0.0f64;
    for (a, b) in sample_pairs(1000, 1000, 11) {
        let (x, y) = (mm_estimate(&a, &b, 3).unwrap(), mm_estimate(&b, &a, 3).unwrap());
        assert_eq!(x.lhs, y.lhs);
        let max_coeff = continued_fraction(&b)
            .unwrap()
            .iter()
            .chain(continued_fraction(&a).unwrap().iter())
            .filter_map(|c| c.to_f64())
            .fold(0.0f64, |m, c| m.max(c.abs()));
        let gap = (x.rhs - y.rhs).abs();
        worst = worst.max(gap);
        assert!(gap <= 2.0 * (max_coeff + 1.0).ln() + 1e-9, "{a} {b}: gap {gap}");
    }
    println!("empirical max |rhs(a,b) - rhs(b,a)| = {worst}");
}

#[test]
fn calibration_bounds_hold_on_its_sample() {
    let sample = sample_pairs(2000, 100_000, 5);
    let c = calibrate_c(&sample, 3).unwrap();
    assert!(c.c_emp >= 1.0);
    for (a, b) in &sample {
        let r = mm_estimate(a, b, 3).unwrap();
        assert!(r.lhs <= c.c_emp * r.rhs + c.c_emp + 1e-9);
        assert!(r.rhs <= c.c_emp * r.lhs + c.c_emp + 1e-9);
    }
    let (a, b) = c.witness.unwrap();
    let r = mm_estimate(&a, &b, 3).unwrap();
    let needed = (r.lhs / (r.rhs + 1.0)).max(r.rhs / (r.lhs + 1.0));
    assert!((needed - c.c_emp).abs() < 1e-12);
}

fn small_slope() -> impl Strategy<Value = Slope> {
    (-200i64..200, 0i64..200)
        .prop_filter("reduced", |&(p, q)| gcd(p, q) == 1)
        .prop_map(|(p, q)| Slope::new(p, q).unwrap())
}

fn unimodular() -> impl Strategy<Value = [[BigInt; 2]; 2]> {
    proptest::collection::vec((0u8..4, -3i64..4), 1..6).prop_map(|steps| {
        let mut m = [[1i64, 0], [0, 1]];
        for (kind, k) in steps {
            let e = match kind {
                0 => [[1, k], [0, 1]],
                1 => [[1, 0], [k, 1]],
                2 => [[0, -1], [1, 0]],
                _ => [[-1, 0], [0, 1]],
            };
            m = [
                [e[0][0] * m[0][0] + e[0][1] * m[1][0], e[0][0] * m[0][1] + e[0][1] * m[1][1]],
                [e[1][0] * m[0][0] + e[1][1] * m[1][0], e[1][0] * m[0][1] + e[1][1] * m[1][1]],
            ];
        }
        m.map(|row| row.map(BigInt::from))
    })
}

proptest! {
    #[test]
    fn unimodular_invariance(a in small_slope(), b in small_slope(), m in unimodular()) {
        prop_assume!(a != b);
        let (ma, mb) = (a.transform(&m), b.transform(&m));
        prop_assert_eq!(mm_estimate(&a, &b, 3).unwrap().lhs, mm_estimate(&ma, &mb, 3).unwrap().lhs);
        prop_assert_eq!(farey_distance(&a, &b), farey_distance(&ma, &mb));
    }

    #[test]
    fn metric_properties(a in small_slope(), b in small_slope(), c in small_slope()) {
        let (ab, bc, ac) = (farey_distance(&a, &b), farey_distance(&b, &c), farey_distance(&a, &c));
        prop_assert!(ac <= ab + bc);
        prop_assert_eq!(ab, farey_distance(&b, &a));
        if a != b {
            prop_assert_eq!(ab == 1, farey_adjacent(&a, &b).unwrap());
        }
    }

    #[test]
    fn cutoff_monotone(a in small_slope(), b in small_slope(), k in 1u64..6) {
        prop_assume!(a != b);
        prop_assert!(mm_estimate(&a, &b, k + 1).unwrap().rhs <= mm_estimate(&a, &b, k).unwrap().rhs);
        let r = mm_estimate(&a, &b, k).unwrap();
        prop_assert!(r.lhs >= 0.0 && r.rhs >= 0.0 && r.annular_terms.iter().all(|t| *t >= 0.0));
    }
}
