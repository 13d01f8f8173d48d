//! Decide whether a finite graph occurs as an induced subgraph of the curve
//! graph of a surface.
//!
//! The crate is organised by subsystem:
//!
//! - [`graph`]: finite graphs, recognizers (chordal, outerplanar), clique
//!   covers and induced matching.
//! - [`farey`]: exact slope arithmetic and the complete decision procedure for
//!   the torus, the once-punctured torus and the four-punctured sphere.
//! - [`mm`]: distance-formula experiments on the torus curve graph.
//! - [`collar`]: upper half-plane numerics for collars and lift counting.
//! - [`diagram`]: combinatorial curves on punctured surfaces, intersection
//!   numbers and Dehn twists.
//! - [`search`]: the general decision front-end, atlas search and the
//!   re-embedding / clustering moves.

pub mod collar;
pub mod diagram;
mod error;
pub mod farey;
pub mod graph;
pub mod mm;
pub mod search;

pub use error::{Error, Result};
