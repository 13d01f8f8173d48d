use std::fmt;

use serde::{Deserialize, Serialize};

use crate::farey::SurfaceSig;
use crate::{Error, Result};

/// Longest word a diagram may reach before operations abort.
pub const MAX_LETTERS: usize = 100_000;

/// A closed curve on a [`super::PolygonModel`], stored as the cyclically
/// reduced cyclic sequence of generator edges it runs along (equivalently,
/// polygon sides it crosses). Orientation is kept but ignored by every
/// intersection count.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CurveJson", into = "CurveJson")]
pub struct CurveDiagram {
    sig: SurfaceSig,
    word: Vec<i32>,
}

#[derive(Serialize, Deserialize)]
struct CurveJson {
    surface: SurfaceSig,
    word: Vec<i32>,
}

impl TryFrom<CurveJson> for CurveDiagram {
    type Error = Error;

    fn try_from(j: CurveJson) -> Result<Self> {
        CurveDiagram::new(j.surface, j.word)
    }
}

impl From<CurveDiagram> for CurveJson {
    fn from(c: CurveDiagram) -> Self {
        CurveJson { surface: c.sig, word: c.word }
    }
}

/// Free generators of the model for `sig`.
pub(crate) fn rank_of(sig: SurfaceSig) -> usize {
    (2 * sig.genus() + sig.punctures().max(1) - 1) as usize
}

pub(crate) fn free_reduce(word: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let mut out: Vec<i32> = Vec::new();
    for l in word {
        if out.last() == Some(&-l) {
            out.pop();
        } else {
            out.push(l);
        }
    }
    out
}

pub(crate) fn cyclic_reduce(word: impl IntoIterator<Item = i32>) -> Vec<i32> {
    let w = free_reduce(word);
    let mut lo = 0;
    let mut hi = w.len();
    while hi - lo >= 2 && w[lo] == -w[hi - 1] {
        lo += 1;
        hi -= 1;
    }
    w[lo..hi].to_vec()
}

pub(crate) fn inverse(word: &[i32]) -> Vec<i32> {
    word.iter().rev().map(|l| -l).collect()
}

/// Start index of the lexicographically least rotation.
fn least_rotation(w: &[i32]) -> usize {
    let n = w.len();
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let (a, b) = (w[(i + k) % n], w[(j + k) % n]);
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

fn rotate(w: &[i32], start: usize) -> Vec<i32> {
    w[start..].iter().chain(&w[..start]).copied().collect()
}

/// Smallest `p` with `w` a power of its length-`p` prefix.
pub(crate) fn period(w: &[i32]) -> usize {
    let n = w.len();
    (1..=n).find(|&p| n.is_multiple_of(p) && (p..n).all(|i| w[i] == w[i - p])).unwrap_or(n)
}

impl CurveDiagram {
    /// Reduces the word freely and cyclically. Letters must be generators of
    /// the model for `sig`.
    pub fn new(sig: SurfaceSig, word: impl IntoIterator<Item = i32>) -> Result<Self> {
        let rank = rank_of(sig) as i32;
        let word: Vec<i32> = word.into_iter().collect();
        if let Some(bad) = word.iter().find(|&&l| l == 0 || l.abs() > rank) {
            return Err(Error::Diagram(format!("letter {bad} is not a generator of the ({sig}) model")));
        }
        if word.len() > MAX_LETTERS {
            return Err(Error::Budget { limit: MAX_LETTERS });
        }
        Ok(Self { sig, word: cyclic_reduce(word) })
    }

    pub fn sig(&self) -> SurfaceSig {
        self.sig
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    /// The empty word: a curve bounding a disk.
    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self { sig: self.sig, word: inverse(&self.word) }
    }

    /// Key identifying the unoriented free homotopy class.
    pub fn canonical(&self) -> Vec<i32> {
        if self.word.is_empty() {
            return Vec::new();
        }
        let fwd = rotate(&self.word, least_rotation(&self.word));
        let inv = inverse(&self.word);
        let bwd = rotate(&inv, least_rotation(&inv));
        fwd.min(bwd)
    }

    pub fn same_class(&self, other: &Self) -> bool {
        self.sig == other.sig && self.canonical() == other.canonical()
    }

    /// `(root, k)` with the word equal to `root^k` and `root` primitive.
    pub(crate) fn root(&self) -> (&[i32], usize) {
        let p = period(&self.word);
        (&self.word[..p], self.word.len() / p.max(1))
    }
}

impl fmt::Display for CurveDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rank = rank_of(self.sig);
        let g = self.sig.genus() as usize;
        let name = |l: i32| {
            let x = l.unsigned_abs() as usize;
            let base = if x <= 2 * g {
                format!("{}{}", if x % 2 == 1 { "a" } else { "b" }, x.div_ceil(2))
            } else {
                format!("c{}", x - 2 * g)
            };
            if l < 0 {
                base.to_uppercase()
            } else {
                base
            }
        };
        if self.word.is_empty() {
            return write!(f, "1");
        }
        debug_assert!(self.word.iter().all(|l| l.unsigned_abs() as usize <= rank));
        let parts: Vec<String> = self.word.iter().map(|&l| name(l)).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// The straight curve of slope `p/q` on the torus, as its cutting sequence:
/// `|p|` crossings of the vertical sides (letter `a`) and `|q|` of the
/// horizontal ones (letter `b`).
pub fn make_torus_curve(p: i64, q: i64) -> Result<CurveDiagram> {
    make_slope_curve(SurfaceSig::new(1, 0)?, p, q)
}

/// Slope curve on the torus or once-punctured torus model.
pub fn make_slope_curve(sig: SurfaceSig, p: i64, q: i64) -> Result<CurveDiagram> {
    if sig.genus() != 1 || sig.punctures() > 1 {
        return Err(Error::Diagram(format!("slope curves need a torus model, got ({sig})")));
    }
    let (pa, qa) = (p.unsigned_abs(), q.unsigned_abs());
    if num_integer::gcd(pa, qa) != 1 {
        return Err(Error::InvalidSlope(format!("{p}/{q} is not reduced")));
    }
    let (a, b) = (if p < 0 { -1 } else { 1 }, if q < 0 { -2 } else { 2 });
    let n = pa + qa;
    let word = (1..=n).map(|i| if i * qa / n > (i - 1) * qa / n { b } else { a });
    CurveDiagram::new(sig, word)
}
