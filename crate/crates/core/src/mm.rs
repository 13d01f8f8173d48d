//! Both sides of the Masur–Minsky distance formula on the torus curve graph.
//!
//! The only non-annular subsurface of a Farey surface is the surface itself,
//! so the right-hand side is the cut-off Farey distance plus one log term per
//! annulus. Annular projections are read off the continued fraction of `β`
//! after a unimodular change of coordinates sending `α` to `1/0`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::farey::Slope;
use crate::{Error, Result};

/// Floor continued fraction `[a0; a1, ..., am]` of a finite slope. `a0` may be
/// zero or negative; the rest are positive and `am >= 2` when `m >= 1`.
pub fn continued_fraction(s: &Slope) -> Result<Vec<BigInt>> {
    if s.is_infinity() {
        return Err(Error::InvalidSlope("1/0 has no continued fraction".into()));
    }
    let (mut p, mut q) = (s.p().clone(), s.q().clone());
    let mut out = Vec::new();
    while !q.is_zero() {
        let (a, r) = p.div_mod_floor(&q);
        out.push(a);
        p = std::mem::replace(&mut q, r);
    }
    Ok(out)
}

/// Sends `s` to `1/0` by a matrix of determinant one.
fn normalizer(s: &Slope) -> [[BigInt; 2]; 2] {
    let e = s.p().extended_gcd(s.q());
    let (x, y) = if e.gcd.is_negative() { (-e.x, -e.y) } else { (e.x, e.y) };
    // x p + y q = 1, so [[x, y], [-q, p]] maps (p, q) to (1, 0).
    [[x, y], [-s.q().clone(), s.p().clone()]]
}

/// Distance from `1/0` to a finite slope, by dynamic programming over the
/// convergents: each convergent is reached from the previous one in one step
/// or from the one before along the intermediate fractions.
fn distance_from_infinity(cf: &[BigInt]) -> u64 {
    let (mut before, mut last) = (0u64, 1u64);
    for a in &cf[1..] {
        let a = a.to_u64().unwrap_or(u64::MAX);
        let next = (last + 1).min(before.saturating_add(a));
        before = last;
        last = next;
    }
    last
}

/// Graph distance in the Farey graph.
pub fn farey_distance(s: &Slope, t: &Slope) -> u64 {
    if s == t {
        return 0;
    }
    let image = t.transform(&normalizer(s));
    let cf = continued_fraction(&image).expect("distinct slopes stay finite");
    distance_from_infinity(&cf)
}

/// `[[n]]_k`: `n` when `n >= k`, else zero.
pub fn cutoff(n: f64, k: u64) -> f64 {
    if n < k as f64 {
        0.0
    } else {
        n
    }
}

fn as_string<S: serde::Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(n)
}

fn ln_big(n: &BigInt) -> f64 {
    match n.to_f64() {
        Some(f) if f.is_finite() && f > 0.0 => f.ln(),
        _ => {
            let bits = n.bits();
            let shift = bits.saturating_sub(60);
            (n >> shift).to_f64().unwrap_or(1.0).ln() + shift as f64 * std::f64::consts::LN_2
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MMReport {
    #[serde(serialize_with = "as_string")]
    pub iota: BigInt,
    /// `ln ι`, with `ln 0 = 0`.
    pub lhs: f64,
    pub farey_distance: u64,
    /// `[[d_S(α, β)]]_k`.
    pub farey_term: u64,
    /// `ln [[a_i]]_k` for each continued-fraction coefficient past the
    /// integer part, dropping those cut to zero.
    pub annular_terms: Vec<f64>,
    pub rhs: f64,
    pub k: u64,
}

pub fn mm_estimate(alpha: &Slope, beta: &Slope, k: u64) -> Result<MMReport> {
    if alpha == beta {
        return Err(Error::InvalidSlope(format!("mm_estimate needs distinct slopes, got {alpha} twice")));
    }
    let iota = alpha.det(beta).abs();
    let lhs = if iota.is_zero() { 0.0 } else { ln_big(&iota) };
    let image = beta.transform(&normalizer(alpha));
    let cf = continued_fraction(&image)?;
    let d = distance_from_infinity(&cf);
    let farey_term = if d < k { 0 } else { d };
    let k_big = BigInt::from(k);
    let annular_terms: Vec<f64> = cf[1..].iter().filter(|a| **a >= k_big && !a.is_one()).map(ln_big).collect();
    let rhs = farey_term as f64 + annular_terms.iter().sum::<f64>();
    Ok(MMReport { iota, lhs, farey_distance: d, farey_term, annular_terms, rhs, k })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CalibrationResult {
    #[serde(rename = "C_emp")]
    pub c_emp: f64,
    pub sample_count: usize,
    /// The pair attaining `C_emp`, or `None` when the floor of 1 binds.
    pub witness: Option<(Slope, Slope)>,
}

/// Smallest `C >= 1` with `lhs <= C rhs + C` and `rhs <= C lhs + C` on every
/// sampled pair.
pub fn calibrate_c(sample: &[(Slope, Slope)], k: u64) -> Result<CalibrationResult> {
    if sample.is_empty() {
        return Err(Error::Invalid("calibration needs a nonempty sample".into()));
    }
    let best = sample
        .par_iter()
        .enumerate()
        .map(|(i, (a, b))| {
            let r = mm_estimate(a, b, k)?;
            Ok((required_c(r.lhs, r.rhs), i))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .fold((1.0f64, None), |acc, (c, i)| if c > acc.0 { (c, Some(i)) } else { acc });
    Ok(CalibrationResult {
        c_emp: best.0,
        sample_count: sample.len(),
        witness: best.1.map(|i| sample[i].clone()),
    })
}

fn required_c(lhs: f64, rhs: f64) -> f64 {
    (lhs / (rhs + 1.0)).max(rhs / (lhs + 1.0))
}

/// `count` random pairs of distinct reduced slopes `p/q` with
/// `1 <= q <= q_max` and `|p| <= q_max`, from a seeded generator.
pub fn sample_pairs(count: usize, q_max: u64, seed: u64) -> Vec<(Slope, Slope)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let q_max = q_max.max(1) as i64;
    let draw = |rng: &mut ChaCha8Rng| loop {
        let q = rng.gen_range(1..=q_max);
        let p = rng.gen_range(-q_max..=q_max);
        if p.gcd(&q) == 1 {
            return Slope::new(p, q).expect("q >= 1");
        }
    };
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (a, b) = (draw(&mut rng), draw(&mut rng));
        if a != b {
            out.push((a, b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(p: i64, q: i64) -> Slope {
        Slope::new(p, q).unwrap()
    }

    fn cf(p: i64, q: i64) -> Vec<i64> {
        continued_fraction(&s(p, q)).unwrap().iter().map(|a| a.to_i64().unwrap()).collect()
    }

    #[test]
    fn continued_fractions() {
        assert_eq!(cf(2, 5), [0, 2, 2]);
        assert_eq!(cf(1, 1), [1]);
        assert_eq!(cf(7, 5), [1, 2, 2]);
        assert_eq!(cf(13, 8), [1, 1, 1, 1, 2]);
        assert_eq!(cf(-7, 5), [-2, 1, 1, 2]);
        assert!(continued_fraction(&Slope::infinity()).is_err());
    }

    #[test]
    fn distances() {
        let inf = Slope::infinity();
        assert_eq!(farey_distance(&s(0, 1), &inf), 1);
        assert_eq!(farey_distance(&inf, &s(1, 2)), 2);
        assert_eq!(farey_distance(&inf, &s(2, 5)), 3);
        assert_eq!(farey_distance(&inf, &s(1, 100)), 2);
        assert_eq!(farey_distance(&s(3, 7), &s(3, 7)), 0);
    }

    #[test]
    fn estimates() {
        let inf = Slope::infinity();
        let r = mm_estimate(&inf, &s(1, 1), 3).unwrap();
        assert_eq!((r.lhs, r.rhs), (0.0, 0.0));
        let r = mm_estimate(&inf, &s(1, 100), 3).unwrap();
        assert!((r.lhs - 100f64.ln()).abs() < 1e-12);
        assert!((r.rhs - 100f64.ln()).abs() < 1e-12);
        let r = mm_estimate(&inf, &s(13, 8), 3).unwrap();
        assert!((r.lhs - 8f64.ln()).abs() < 1e-12);
        assert_eq!(r.farey_distance, 3);
        assert_eq!(r.rhs, 3.0);
        assert!(mm_estimate(&inf, &inf, 3).is_err());
    }

    #[test]
    fn calibration_examples() {
        let c = calibrate_c(&[(Slope::infinity(), s(1, 100))], 3).unwrap();
        assert_eq!(c.c_emp, 1.0);
        let c = calibrate_c(&[(Slope::infinity(), s(1, 1))], 3).unwrap();
        assert_eq!(c.c_emp, 1.0);
        assert!(c.witness.is_none());
        assert!(calibrate_c(&[], 3).is_err());
    }

    #[test]
    fn sampling_is_deterministic() {
        assert_eq!(sample_pairs(20, 1000, 7), sample_pairs(20, 1000, 7));
        assert_ne!(sample_pairs(20, 1000, 7), sample_pairs(20, 1000, 8));
    }
}
