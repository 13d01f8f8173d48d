use serde::{Deserialize, Serialize};

use crate::farey::EmbeddingCertificate;
use crate::graph::ForbiddenWitness;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

/// A clique larger than the maximal multicurve size `3g - 3 + n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueBound {
    pub clique: Vec<String>,
    pub complexity: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Forbidden(ForbiddenWitness),
    CliqueBound(CliqueBound),
}

fn schema_version() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecisionOutcome {
    #[serde(default = "schema_version")]
    pub schema: u32,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<EmbeddingCertificate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    /// Largest `(L, B)` tried: twist word length and intersection budget.
    pub budget_used: (u32, u64),
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl DecisionOutcome {
    pub fn yes(certificate: EmbeddingCertificate, budget_used: (u32, u64)) -> Self {
        Self {
            schema: 1,
            verdict: Verdict::Yes,
            certificate: Some(certificate),
            witness: None,
            budget_used,
            notes: Vec::new(),
        }
    }

    pub fn no(witness: Witness, budget_used: (u32, u64)) -> Self {
        Self { schema: 1, verdict: Verdict::No, certificate: None, witness: Some(witness), budget_used, notes: Vec::new() }
    }

    pub fn unknown(budget_used: (u32, u64)) -> Self {
        Self { schema: 1, verdict: Verdict::Unknown, certificate: None, witness: None, budget_used, notes: Vec::new() }
    }
}
