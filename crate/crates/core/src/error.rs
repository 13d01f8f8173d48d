use thiserror::Error;

use crate::graph::ForbiddenWitness;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid slope: {0}")]
    InvalidSlope(String),

    #[error("invalid surface ({g},{n}): {reason}")]
    InvalidSurface { g: u32, n: u32, reason: String },

    #[error("surface ({g},{n}) is not a Farey surface")]
    NotFarey { g: u32, n: u32 },

    #[error("slopes are not Farey-adjacent: {0}")]
    NotAdjacent(String),

    #[error("graph is not Farey-embeddable: {0}")]
    Rejected(Box<ForbiddenWitness>),

    #[error("certificate error: {0}")]
    Certificate(String),

    #[error("diagram error: {0}")]
    Diagram(String),

    #[error("diagram exceeds the {limit} event budget")]
    Budget { limit: usize },

    #[error("geometry error: {0}")]
    Geometry(String),

    #[error("{0}")]
    Invalid(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
