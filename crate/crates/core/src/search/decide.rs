use std::collections::BTreeMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::atlas::generate_atlas;
use super::{CliqueBound, DecisionOutcome, Witness};
use crate::farey::{decide_farey_surface, verify_certificate, EmbeddingCertificate, SurfaceSig};
use crate::graph::{clique_cover, induced_match_with, is_induced_embedding, max_clique, Graph};
use crate::{Error, Result};

/// Graphs up to this size get the exact clique test in [`quick_no`].
pub const QUICK_NO_LIMIT: usize = 12;

/// One search stage: twist word length `L` and intersection budget `B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stage {
    pub word_length: u32,
    pub budget: u64,
}

/// Budgets tried in order by [`decide`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Schedule(pub Vec<Stage>);

impl Default for Schedule {
    fn default() -> Self {
        Schedule(
            [(0, 0), (1, 4), (2, 8), (3, 16), (4, 16)]
                .into_iter()
                .map(|(word_length, budget)| Stage { word_length, budget })
                .collect(),
        )
    }
}

impl FromStr for Schedule {
    type Err = Error;

    /// Parses `L1:B1,L2:B2,...`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = |part: &str| Error::Invalid(format!("schedule entries are 'L:B', got '{part}'"));
        let mut stages = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (l, b) = part.split_once(':').ok_or_else(|| bad(part))?;
            stages.push(Stage {
                word_length: l.trim().parse().map_err(|_| bad(part))?,
                budget: b.trim().parse().map_err(|_| bad(part))?,
            });
        }
        if stages.is_empty() {
            return Err(Error::Invalid("empty schedule".into()));
        }
        Ok(Schedule(stages))
    }
}

/// A clique with more vertices than the largest multicurve on `sig`, when
/// the graph is small enough for an exact search.
pub fn quick_no(g: &Graph, sig: SurfaceSig) -> Option<CliqueBound> {
    if g.len() > QUICK_NO_LIMIT {
        return None;
    }
    let clique = max_clique(g);
    (clique.len() as i64 > sig.complexity()).then(|| CliqueBound {
        clique: clique.iter().map(|&v| g.label(v).to_string()).collect(),
        complexity: sig.complexity(),
    })
}

/// Decides whether `g` is an induced subgraph of the curve graph of `sig`.
///
/// Farey surfaces are decided completely. Elsewhere a clique bound may give
/// `No`; otherwise each stage of the schedule builds an atlas and looks for an
/// induced copy of `g`, and the result is `Yes` with a re-verified curve
/// certificate or `Unknown`.
pub fn decide(g: &Graph, sig: SurfaceSig, schedule: &Schedule) -> Result<DecisionOutcome> {
    if sig.is_farey() {
        return decide_farey_surface(g, sig);
    }
    if let Some(bound) = quick_no(g, sig) {
        return Ok(DecisionOutcome::no(Witness::CliqueBound(bound), (0, 0)));
    }
    let cover = clique_cover(g);
    let mut notes = vec![
        format!(
            "clique granularity 3g-3+n times N = {} x {} = {}",
            sig.complexity(),
            g.len(),
            sig.complexity() * g.len() as i64
        ),
        format!("clique cover size {}", cover.size()),
    ];
    if g.len() > QUICK_NO_LIMIT {
        notes.push(format!("clique test skipped above {QUICK_NO_LIMIT} vertices"));
    }
    let mut used = (0, 0);
    for stage in &schedule.0 {
        used = (stage.word_length, stage.budget);
        let atlas = generate_atlas(sig, stage.word_length, stage.budget)?;
        notes.extend(atlas.log.iter().cloned());
        let Some(mapping) = induced_match_with(g, &atlas) else {
            notes.push(format!("L={} B={}: no induced copy among {} curves", stage.word_length, stage.budget, atlas.len()));
            continue;
        };
        debug_assert!(is_induced_embedding(g, &atlas, &mapping));
        let curves: BTreeMap<String, _> = g
            .labels()
            .iter()
            .zip(&mapping)
            .map(|(l, &i)| (l.clone(), atlas.curves[i].clone()))
            .collect();
        let cert = EmbeddingCertificate::curves(sig, curves);
        if verify_certificate(g, &cert)? {
            let mut out = DecisionOutcome::yes(cert, used);
            notes.push(format!("L={} B={}: found among {} curves", stage.word_length, stage.budget, atlas.len()));
            out.notes = notes;
            return Ok(out);
        }
        notes.push(format!("L={} B={}: candidate failed re-verification", stage.word_length, stage.budget));
    }
    let mut out = DecisionOutcome::unknown(used);
    out.notes = notes;
    Ok(out)
}

/// Surfaces whose mapping class group question reduces to the curve graph.
pub fn raag_supported(sig: SurfaceSig) -> bool {
    matches!((sig.genus(), sig.punctures()), (0, 0..=5) | (1, 0..=2))
}

/// Whether the right-angled Artin group on `g` embeds in the mapping class
/// group of `sig`, forwarded to [`decide`]. Answers off the Farey surfaces are
/// semi-decisions and say so in the notes.
pub fn raag(g: &Graph, sig: SurfaceSig, schedule: &Schedule) -> Result<DecisionOutcome> {
    if !raag_supported(sig) {
        return Err(Error::Invalid(format!("RAAG routing covers (0,n<=5) and (1,n<=2), not {sig}")));
    }
    let mut out = decide(g, sig, schedule)?;
    if !sig.is_farey() {
        out.notes.push("semi-decision: No is complete only through the clique bound".into());
    }
    Ok(out)
}
