use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::{Slope, SurfaceSig};
use crate::diagram::CurveDiagram;
use crate::graph::Graph;
use crate::{Error, Result};

/// Vertex label to curve: slopes on the Farey surfaces, diagrams elsewhere.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Assignment {
    Slopes(BTreeMap<String, Slope>),
    Curves(BTreeMap<String, CurveDiagram>),
}

impl Assignment {
    pub fn len(&self) -> usize {
        match self {
            Assignment::Slopes(m) => m.len(),
            Assignment::Curves(m) => m.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn slopes(&self) -> Option<&BTreeMap<String, Slope>> {
        match self {
            Assignment::Slopes(m) => Some(m),
            Assignment::Curves(_) => None,
        }
    }

    pub fn curves(&self) -> Option<&BTreeMap<String, CurveDiagram>> {
        match self {
            Assignment::Curves(m) => Some(m),
            Assignment::Slopes(_) => None,
        }
    }

    fn labels(&self) -> Vec<&String> {
        match self {
            Assignment::Slopes(m) => m.keys().collect(),
            Assignment::Curves(m) => m.keys().collect(),
        }
    }
}

fn schema_version() -> u32 {
    1
}

/// A YES answer: an explicit induced embedding into the curve graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingCertificate {
    #[serde(default = "schema_version")]
    pub schema: u32,
    pub surface: SurfaceSig,
    pub assignment: Assignment,
}

impl EmbeddingCertificate {
    pub fn slopes(surface: SurfaceSig, map: BTreeMap<String, Slope>) -> Self {
        Self { schema: 1, surface, assignment: Assignment::Slopes(map) }
    }

    pub fn curves(surface: SurfaceSig, map: BTreeMap<String, CurveDiagram>) -> Self {
        Self { schema: 1, surface, assignment: Assignment::Curves(map) }
    }

    /// Largest `max(|p|, q)` among assigned slopes.
    pub fn max_height(&self) -> Option<BigInt> {
        self.assignment.slopes()?.values().map(Slope::height).max()
    }
}

/// Checks a certificate from scratch: the assignment is injective and
/// `u ~ v` in `g` exactly when the curves meet in the surface's minimal
/// intersection number (any other pair must exceed it).
pub fn verify_certificate(g: &Graph, cert: &EmbeddingCertificate) -> Result<bool> {
    for l in g.labels() {
        let present = match &cert.assignment {
            Assignment::Slopes(m) => m.contains_key(l),
            Assignment::Curves(m) => m.contains_key(l),
        };
        if !present {
            return Err(Error::Certificate(format!("vertex '{l}' is not assigned")));
        }
    }
    if let Some(extra) = cert.assignment.labels().into_iter().find(|l| g.index_of(l).is_none()) {
        return Err(Error::Certificate(format!("label '{extra}' is not a vertex")));
    }
    match &cert.assignment {
        Assignment::Slopes(map) => {
            let scale = cert.surface.slope_scale()?;
            let threshold = BigInt::from(cert.surface.threshold());
            for u in 0..g.len() {
                for v in u + 1..g.len() {
                    let (a, b) = (&map[g.label(u)], &map[g.label(v)]);
                    if a == b {
                        return Ok(false);
                    }
                    let iota = a.det(b).abs() * scale;
                    if g.has_edge(u, v) != (iota == threshold) || iota < threshold {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
        Assignment::Curves(map) => crate::diagram::verify_curve_assignment(g, cert.surface, map),
    }
}
