use serde::Serialize;

use crate::farey::SurfaceSig;
use crate::{Error, Result};

/// A surface as a ribbon graph with one vertex.
///
/// This is the dual picture of a polygon with side identifications: each
/// generator is a loop through the vertex crossing one identified side pair,
/// so a curve is recorded by the sequence of sides it crosses. Generators
/// `2i-1, 2i` are the handle pair `a_i, b_i`; after them come `n - 1` loops
/// around punctures. Letters are nonzero integers, `-x` the inverse of `x`.
///
/// Closed surfaces are modelled by their once-punctured counterparts; the
/// curve graphs of the torus and the once-punctured torus agree, and for
/// higher genus the engine answers only what survives filling the puncture.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PolygonModel {
    sig: SurfaceSig,
    rank: usize,
    /// Half-edges in counterclockwise order around the vertex.
    rotation: Vec<i32>,
    #[serde(skip)]
    position: Vec<usize>,
}

impl PolygonModel {
    pub fn new(sig: SurfaceSig) -> Result<Self> {
        let g = sig.genus() as i32;
        let punctures = sig.punctures().max(1) as i32;
        let mut rotation = Vec::new();
        for i in 0..g {
            let (a, b) = (2 * i + 1, 2 * i + 2);
            rotation.extend([a, b, -a, -b]);
        }
        for j in 0..punctures - 1 {
            let c = 2 * g + 1 + j;
            rotation.extend([c, -c]);
        }
        if rotation.is_empty() {
            return Err(Error::InvalidSurface { g: sig.genus(), n: sig.punctures(), reason: "no curves".into() });
        }
        let rank = rotation.len() / 2;
        let mut model = Self { sig, rank, rotation, position: Vec::new() };
        model.index();
        debug_assert_eq!(model.faces().len(), punctures as usize);
        Ok(model)
    }

    fn index(&mut self) {
        self.position = vec![0; 2 * self.rank + 1];
        for i in 0..self.rotation.len() {
            let slot = self.slot(self.rotation[i]);
            self.position[slot] = i;
        }
    }

    fn slot(&self, letter: i32) -> usize {
        (letter + self.rank as i32) as usize
    }

    pub fn sig(&self) -> SurfaceSig {
        self.sig
    }

    /// Number of free generators, `2g + n - 1` (with `n` at least 1).
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// True when the model stands in for a closed surface.
    pub fn is_closed_stand_in(&self) -> bool {
        self.sig.punctures() == 0
    }

    /// Whether intersection numbers of simple curves are exact on this model.
    pub fn is_exact(&self) -> bool {
        !self.is_closed_stand_in() || self.sig.genus() == 1
    }

    pub fn rotation(&self) -> &[i32] {
        &self.rotation
    }

    pub fn contains_letter(&self, letter: i32) -> bool {
        letter != 0 && letter.unsigned_abs() as usize <= self.rank
    }

    /// Counterclockwise position of the half-edge along which `letter` leaves
    /// the vertex.
    pub fn position(&self, letter: i32) -> usize {
        self.position[self.slot(letter)]
    }

    /// Counterclockwise distance from half-edge `from` to half-edge `to`.
    pub(crate) fn ccw(&self, from: i32, to: i32) -> usize {
        let d = self.rotation.len();
        (self.position(to) + d - self.position(from)) % d
    }

    /// Boundary words of the faces, one per puncture; with one puncture this is
    /// the polygon word, a product of commutators.
    pub fn faces(&self) -> Vec<Vec<i32>> {
        let d = self.rotation.len();
        let mut seen = vec![false; d];
        let mut faces = Vec::new();
        for start in 0..d {
            if seen[start] {
                continue;
            }
            let mut face = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                let letter = self.rotation[i];
                face.push(letter);
                i = (self.position(-letter) + 1) % d;
            }
            faces.push(face);
        }
        faces
    }

    pub fn euler_characteristic(&self) -> i64 {
        1 - self.rank as i64 + self.faces().len() as i64
    }
}

pub fn make_model(sig: SurfaceSig) -> Result<PolygonModel> {
    PolygonModel::new(sig)
}
