//! Collars and lift counting in the upper half-plane.
//!
//! The annulus is the quotient of the half-plane by `z ↦ e^ℓ z`; its core
//! lifts to the imaginary axis `(0, ∞)` and the collar of radius `r` lifts to
//! the wedge `|x| / y <= sinh r`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

const SLACK: f64 = 1e-12;

/// Radius of the standard collar about a closed geodesic of length `ell`.
pub fn collar_radius(ell: f64) -> Result<f64> {
    if !(ell > 0.0 && ell.is_finite()) {
        return Err(Error::Geometry(format!("core length must be positive, got {ell}")));
    }
    Ok((1.0 / (ell / 2.0).sinh()).asinh())
}

/// A geodesic in the upper half-plane given by its two boundary endpoints;
/// `f64::INFINITY` stands for `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Geodesic {
    a: f64,
    b: f64,
}

impl Geodesic {
    pub fn new(x: f64, y: f64) -> Result<Self> {
        let finite_or_inf = |t: f64| t.is_finite() || t == f64::INFINITY;
        if !finite_or_inf(x) || !finite_or_inf(y) || x == y {
            return Err(Error::Geometry(format!("bad geodesic endpoints ({x}, {y})")));
        }
        Ok(Self { a: x.min(y), b: x.max(y) })
    }

    pub fn endpoints(&self) -> (f64, f64) {
        (self.a, self.b)
    }

    fn is_vertical(&self) -> bool {
        self.b.is_infinite()
    }

    fn scaled(&self, t: f64) -> Self {
        Self { a: self.a * t, b: self.b * t }
    }

    fn center_radius(&self) -> (f64, f64) {
        ((self.a + self.b) / 2.0, (self.b - self.a) / 2.0)
    }

    /// Whether `t` lies strictly between the endpoints on the boundary circle.
    fn separates(&self, t: f64) -> bool {
        self.a < t && t < self.b
    }
}

/// Endpoint interleaving. A shared endpoint is an error.
pub fn geodesics_cross(g: &Geodesic, h: &Geodesic) -> Result<bool> {
    let shared = [g.a, g.b].iter().any(|&x| [h.a, h.b].iter().any(|&y| near(x, y)));
    if shared {
        return Err(Error::Geometry("geodesics share an endpoint".into()));
    }
    Ok(interleave(g, h))
}

fn near(x: f64, y: f64) -> bool {
    if x.is_infinite() || y.is_infinite() {
        return x == y;
    }
    (x - y).abs() <= SLACK * x.abs().max(y.abs()).max(1.0)
}

fn interleave(g: &Geodesic, h: &Geodesic) -> bool {
    match (g.is_vertical(), h.is_vertical()) {
        (true, true) => false,
        (true, false) => h.separates(g.a),
        (false, true) => g.separates(h.a),
        (false, false) => g.separates(h.a) != g.separates(h.b),
    }
}

/// Hyperbolic distance from the geodesic to the axis `(0, ∞)`; zero when
/// they cross, an error when they are asymptotic.
pub fn geodesic_axis_distance(g: &Geodesic) -> Result<f64> {
    if g.is_vertical() || g.a == 0.0 || g.b == 0.0 {
        return Err(Error::Geometry("geodesic is asymptotic to the axis".into()));
    }
    if g.a < 0.0 && g.b > 0.0 {
        return Ok(0.0);
    }
    let (u, v) = (g.a.abs().min(g.b.abs()), g.a.abs().max(g.b.abs()));
    Ok(((v + u) / (v - u)).acosh())
}

/// The annulus with core of length `ell`, deck map `z ↦ e^ell z`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AnnulusModel {
    pub ell: f64,
}

impl AnnulusModel {
    pub fn new(ell: f64) -> Result<Self> {
        collar_radius(ell)?;
        Ok(Self { ell })
    }

    pub fn multiplier(&self) -> f64 {
        self.ell.exp()
    }

    pub fn radius(&self) -> f64 {
        collar_radius(self.ell).expect("validated on construction")
    }

    /// The translates `g^i β` are pairwise disjoint.
    pub fn is_admissible(&self, beta: &Geodesic) -> bool {
        if beta.a < 0.0 && beta.b > 0.0 {
            return true;
        }
        let (u, v) = (beta.a.abs().min(beta.b.abs()), beta.a.abs().max(beta.b.abs()));
        v <= self.multiplier() * u * (1.0 + SLACK)
    }

    fn check(&self, alpha: &Geodesic, beta: &Geodesic) -> Result<()> {
        for g in [alpha, beta] {
            if g.is_vertical() || g.a == 0.0 || g.b == 0.0 {
                return Err(Error::Geometry("endpoints at 0 or ∞ are fixed by the deck map".into()));
            }
        }
        if !self.is_admissible(beta) {
            return Err(Error::Geometry("translates of β are not disjoint".into()));
        }
        Ok(())
    }

    /// Exponents `i` whose translate `g^i β` may meet `alpha`, padded by 2.
    fn window(&self, alpha: &Geodesic, beta: &Geodesic) -> std::ops::RangeInclusive<i64> {
        let mags = |g: &Geodesic| {
            let (x, y) = (g.a.abs(), g.b.abs());
            (x.min(y), x.max(y))
        };
        let ((alo, ahi), (blo, bhi)) = (mags(alpha), mags(beta));
        let lo = ((alo / bhi).ln() / self.ell).floor() as i64 - 2;
        let hi = ((ahi / blo).ln() / self.ell).ceil() as i64 + 2;
        lo..=hi
    }

    fn crossings<'a>(&'a self, alpha: &'a Geodesic, beta: &'a Geodesic) -> impl Iterator<Item = Geodesic> + 'a {
        let m = self.multiplier();
        self.window(alpha, beta)
            .map(move |i| beta.scaled(m.powi(i as i32)))
            .filter(move |t| interleave(alpha, t))
    }
}

/// `|{i : g^i β crosses α}|`.
pub fn annular_projection_distance(m: &AnnulusModel, alpha: &Geodesic, beta: &Geodesic) -> Result<u64> {
    m.check(alpha, beta)?;
    Ok(m.crossings(alpha, beta).count() as u64)
}

/// Crossing point of two interleaving semicircles.
fn crossing_point(g: &Geodesic, h: &Geodesic) -> (f64, f64) {
    let ((c1, r1), (c2, r2)) = (g.center_radius(), h.center_radius());
    let x = (r1 * r1 - r2 * r2 + c2 * c2 - c1 * c1) / (2.0 * (c2 - c1));
    let y = (r1 * r1 - (x - c1) * (x - c1)).max(0.0).sqrt();
    (x, y)
}

/// Crossings of `α` with translates of `β` lying inside the collar.
pub fn collar_restricted_distance(m: &AnnulusModel, alpha: &Geodesic, beta: &Geodesic) -> Result<u64> {
    m.check(alpha, beta)?;
    let bound = m.radius().sinh();
    Ok(m
        .crossings(alpha, beta)
        .filter(|t| {
            let (x, y) = crossing_point(alpha, t);
            x.abs() <= bound * y * (1.0 + SLACK)
        })
        .count() as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollarSample {
    pub alpha: Geodesic,
    pub beta: Geodesic,
    pub projection: u64,
    pub restricted: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CollarSummary {
    pub r: f64,
    pub tangency_max_residual: f64,
    pub lemma2_max_gap: u64,
    pub lemma2_min_gap: i64,
    pub samples: usize,
}

fn signed_magnitude(rng: &mut ChaCha8Rng, span: f64) -> f64 {
    let mag = rng.gen_range(-span..span).exp();
    if rng.gen_bool(0.5) {
        mag
    } else {
        -mag
    }
}

/// A random pair with `β` admissible for `m`; endpoints are log-uniform with
/// random signs.
pub fn random_pair(m: &AnnulusModel, rng: &mut ChaCha8Rng) -> (Geodesic, Geodesic) {
    let span = 6.0 * m.ell.max(1.0);
    loop {
        let alpha = Geodesic::new(signed_magnitude(rng, span), signed_magnitude(rng, span));
        let u = signed_magnitude(rng, span);
        let v = if rng.gen_bool(0.5) {
            -u.signum() * rng.gen_range(-span..span).exp()
        } else {
            u * rng.gen_range(0.0..m.ell).exp()
        };
        if let (Ok(alpha), Ok(beta)) = (alpha, Geodesic::new(u, v)) {
            if m.is_admissible(&beta) {
                return (alpha, beta);
            }
        }
    }
}

/// Per-sample counts for `count` seeded random admissible pairs. Sample `i`
/// uses its own generator, so results do not depend on the thread count.
pub fn lemma2_samples(m: &AnnulusModel, count: usize, seed: u64) -> Result<Vec<CollarSample>> {
    (0..count)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ i as u64);
            let (alpha, beta) = random_pair(m, &mut rng);
            Ok(CollarSample {
                alpha,
                beta,
                projection: annular_projection_distance(m, &alpha, &beta)?,
                restricted: collar_restricted_distance(m, &alpha, &beta)?,
            })
        })
        .collect()
}

/// Largest `|d((x, e x), axis) - r|` over `count` seeded random `x > 0`.
pub fn tangency_residual(count: usize, seed: u64) -> Result<f64> {
    let r = collar_radius(1.0)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    for _ in 0..count {
        let x = rng.gen_range(-8.0f64..8.0).exp();
        let d = geodesic_axis_distance(&Geodesic::new(x, std::f64::consts::E * x)?)?;
        worst = worst.max((d - r).abs());
    }
    Ok(worst)
}

pub fn collar_summary(samples: &[CollarSample], tangency_max_residual: f64) -> CollarSummary {
    let gaps = samples.iter().map(|s| s.projection as i64 - s.restricted as i64);
    CollarSummary {
        r: collar_radius(1.0).expect("positive length"),
        tangency_max_residual,
        lemma2_max_gap: gaps.clone().max().unwrap_or(0).max(0) as u64,
        lemma2_min_gap: gaps.min().unwrap_or(0),
        samples: samples.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::E;

    fn geo(x: f64, y: f64) -> Geodesic {
        Geodesic::new(x, y).unwrap()
    }

    #[test]
    fn radius_values() {
        assert!((collar_radius(1.0).unwrap() - 1.406_829_113_747_3).abs() < 1e-12);
        assert!(collar_radius(10.0).unwrap() < collar_radius(1.0).unwrap());
        assert!(collar_radius(0.0).is_err());
    }

    #[test]
    fn crossing_examples() {
        let inf = f64::INFINITY;
        assert!(!geodesics_cross(&geo(0.0, inf), &geo(1.0, E)).unwrap());
        assert!(geodesics_cross(&geo(-1.0, 2.0), &geo(1.0, 3.0)).unwrap());
        assert!(geodesics_cross(&geo(0.0, inf), &geo(-1.0, 1.0)).unwrap());
        assert!(geodesics_cross(&geo(0.0, 1.0), &geo(1.0, 2.0)).is_err());
    }

    #[test]
    fn axis_distances() {
        let r = collar_radius(1.0).unwrap();
        assert!((geodesic_axis_distance(&geo(1.0, E)).unwrap() - r).abs() < 1e-9);
        assert!(geodesic_axis_distance(&geo(1.0, E * E)).unwrap() < r);
        for t in [2.0, 5.0, 10.0] {
            assert!((geodesic_axis_distance(&geo(t, E * t)).unwrap() - r).abs() < 1e-9);
        }
        assert_eq!(geodesic_axis_distance(&geo(-1.0, 1.0)).unwrap(), 0.0);
        assert!(geodesic_axis_distance(&geo(0.0, 1.0)).is_err());
    }

    #[test]
    fn projection_counts() {
        let m = AnnulusModel::new(1.0).unwrap();
        assert_eq!(annular_projection_distance(&m, &geo(-1.0, -E), &geo(1.0, E)).unwrap(), 0);
        assert_eq!(annular_projection_distance(&m, &geo(-1.0, 2.0), &geo(1.0, E)).unwrap(), 1);
        assert_eq!(annular_projection_distance(&m, &geo(0.5, E.powf(3.5)), &geo(-1.0, 1.0)).unwrap(), 4);
        assert!(annular_projection_distance(&m, &geo(-1.0, 2.0), &geo(1.0, 3.0)).is_err());
    }

    #[test]
    fn restricted_counts() {
        let m = AnnulusModel::new(1.0).unwrap();
        assert_eq!(collar_restricted_distance(&m, &geo(-1.0, -E), &geo(1.0, E)).unwrap(), 0);
        // The one crossing sits at x ≈ 1.736, y ≈ 0.851, outside the collar.
        assert_eq!(collar_restricted_distance(&m, &geo(-1.0, 2.0), &geo(1.0, E)).unwrap(), 0);
        assert_eq!(collar_restricted_distance(&m, &geo(-2.0, 3.0), &geo(-1.0, 1.0)).unwrap(), 1);
        assert_eq!(annular_projection_distance(&m, &geo(-2.0, 3.0), &geo(-1.0, 1.0)).unwrap(), 1);
    }
}
