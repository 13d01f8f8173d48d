use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// The surface `S_{g,n}`: genus `g` with `n` punctures or boundary components.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SurfaceSig {
    g: u32,
    n: u32,
}

impl SurfaceSig {
    /// The once-punctured torus, used where a certificate needs some Farey surface.
    pub const PUNCTURED_TORUS: SurfaceSig = SurfaceSig { g: 1, n: 1 };

    /// Accepts every surface with a nonempty curve graph.
    pub fn new(g: u32, n: u32) -> Result<Self> {
        let reason = match (g, n) {
            (0, 1) => Some("excluded pair (0,1)"),
            (0, 0) | (0, 2) | (0, 3) => Some("curve graph is empty"),
            _ => None,
        };
        match reason {
            Some(r) => Err(Error::InvalidSurface { g, n, reason: r.into() }),
            None => Ok(Self { g, n }),
        }
    }

    pub fn genus(&self) -> u32 {
        self.g
    }

    pub fn punctures(&self) -> u32 {
        self.n
    }

    /// `3g - 3 + n`.
    pub fn complexity(&self) -> i64 {
        3 * i64::from(self.g) - 3 + i64::from(self.n)
    }

    /// Torus, once-punctured torus and four-punctured sphere.
    pub fn is_farey(&self) -> bool {
        matches!((self.g, self.n), (1, 0) | (1, 1) | (0, 4))
    }

    /// Minimal intersection number realised by adjacent curves.
    pub fn threshold(&self) -> u32 {
        match (self.g, self.n) {
            (1, 0) | (1, 1) => 1,
            (0, 4) => 2,
            _ => 0,
        }
    }

    /// Intersection numbers on this surface are `scale * |det|` for slopes.
    pub(crate) fn slope_scale(&self) -> Result<u32> {
        if self.is_farey() {
            Ok(self.threshold())
        } else {
            Err(Error::NotFarey { g: self.g, n: self.n })
        }
    }
}

impl fmt::Display for SurfaceSig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.g, self.n)
    }
}

impl FromStr for SurfaceSig {
    type Err = Error;

    /// Parses `g,n`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Invalid(format!("surface must be 'g,n', got '{s}'"));
        let (g, n) = s.trim().trim_matches(|c| c == '(' || c == ')').split_once(',').ok_or_else(bad)?;
        SurfaceSig::new(g.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?)
    }
}

impl Serialize for SurfaceSig {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.g, self.n].serialize(s)
    }
}

impl<'de> Deserialize<'de> for SurfaceSig {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [g, n] = <[u32; 2]>::deserialize(d)?;
        SurfaceSig::new(g, n).map_err(serde::de::Error::custom)
    }
}
