//! The general decision front-end: routing, clique-bound refutations, atlas
//! search over twist words, and the annulus and clustering moves.

mod annulus;
mod atlas;
mod cluster;
mod decide;
mod outcome;

pub use annulus::{annulus_fixpoint, annulus_reembed, AnnulusArcSystem, SLOPE_TOL};
pub use atlas::{generate_atlas, intersection_graph, seed_curves, Atlas, MAX_ATLAS_CURVES};
pub use cluster::{cluster_partition, recursion_bound, ClusterPartition};
pub use decide::{decide, quick_no, raag, raag_supported, Schedule, Stage, QUICK_NO_LIMIT};
pub use outcome::{CliqueBound, DecisionOutcome, Verdict, Witness};
