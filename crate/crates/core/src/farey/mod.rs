//! The Farey graph and the three curve graphs isomorphic to it.
//!
//! Slopes `p/q` are adjacent when `|p s - q r| = 1`. A finite graph is an
//! induced subgraph exactly when each component is chordal and outerplanar;
//! [`farey_embed`] builds explicit slopes for every accepted graph and
//! [`bounded_search`] is the brute-force oracle.

mod certificate;
mod decide;
mod embed;
mod search;
mod slope;
mod surface;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::graph::{connected_components, is_chordal, is_outerplanar, ForbiddenWitness, Graph};
use crate::{Error, Result};

pub use certificate::{verify_certificate, Assignment, EmbeddingCertificate};
pub use decide::decide_farey_surface;
pub use embed::{farey_embed, EmbedPath, Embedding};
pub use search::{bounded_search, SlopeUniverse};
pub use slope::Slope;
pub use surface::SurfaceSig;

/// Adjacency in the Farey graph. Equal slopes are an error.
pub fn farey_adjacent(s: &Slope, t: &Slope) -> Result<bool> {
    if s == t {
        return Err(Error::InvalidSlope(format!("{s} compared with itself")));
    }
    Ok(s.det(t).abs().is_one())
}

/// Geometric intersection number of the curves with slopes `s`, `t` on a
/// Farey surface: `|det|` on the tori, `2 |det|` on the four-punctured sphere.
pub fn slope_intersection(s: &Slope, t: &Slope, sig: SurfaceSig) -> Result<BigInt> {
    let scale = sig.slope_scale()?;
    Ok(s.det(t).abs() * scale)
}

/// `(p + r)/(q + s)` for Farey-adjacent `p/q`, `r/s`.
pub fn mediant(s: &Slope, t: &Slope) -> Result<Slope> {
    if !farey_adjacent(s, t)? {
        return Err(Error::NotAdjacent(format!("{s} and {t}")));
    }
    Ok(Slope::from_vector(s.p() + t.p(), s.q() + t.q()))
}

/// The two common neighbours of an adjacent pair: `s + t` and `s - t`.
pub(crate) fn triangle_apexes(s: &Slope, t: &Slope) -> [Slope; 2] {
    [
        Slope::from_vector(s.p() + t.p(), s.q() + t.q()),
        Slope::from_vector(s.p() - t.p(), s.q() - t.q()),
    ]
}

/// Recognizer: every component chordal and outerplanar.
pub fn is_farey_embeddable(g: &Graph) -> std::result::Result<(), ForbiddenWitness> {
    for comp in connected_components(g) {
        is_chordal(&comp)?;
        is_outerplanar(&comp)?;
    }
    Ok(())
}
