use super::{farey_embed, is_farey_embeddable, verify_certificate, EmbedPath, SurfaceSig};
use crate::graph::Graph;
use crate::search::{DecisionOutcome, Witness};
use crate::{Error, Result};

/// Complete decision on `(1,0)`, `(1,1)` and `(0,4)`: a verified slope
/// certificate or a forbidden-subgraph witness, never `Unknown`.
pub fn decide_farey_surface(g: &Graph, sig: SurfaceSig) -> Result<DecisionOutcome> {
    if !sig.is_farey() {
        return Err(Error::NotFarey { g: sig.genus(), n: sig.punctures() });
    }
    if let Err(w) = is_farey_embeddable(g) {
        return Ok(DecisionOutcome::no(Witness::Forbidden(w), (0, 0)));
    }
    let embedding = farey_embed(g)?;
    let mut cert = embedding.certificate;
    cert.surface = sig;
    if !verify_certificate(g, &cert)? {
        return Err(Error::Certificate("embedding failed re-verification".into()));
    }
    let mut out = DecisionOutcome::yes(cert, (0, 0));
    if let EmbedPath::Search { q } = embedding.path {
        out.notes.push(format!("certificate from bounded search at height {q}"));
    }
    Ok(out)
}
