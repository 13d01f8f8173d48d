use std::collections::HashSet;

use rayon::prelude::*;
use serde::Serialize;

use crate::diagram::{
    curve_relation, dehn_twist, essential_in, model_intersection, model_self_intersection, puncture_curve, CurveDiagram,
    PolygonModel,
};
use crate::farey::SurfaceSig;
use crate::graph::{Graph, HostRelation};
use crate::{Error, Result};

/// Upper bound on the number of curves an atlas will hold.
pub const MAX_ATLAS_CURVES: usize = 4000;

/// Embedded essential curves reachable from the seeds by short twist words,
/// with their pairwise relations.
#[derive(Clone, Debug, Serialize)]
pub struct Atlas {
    pub sig: SurfaceSig,
    pub word_length: u32,
    pub budget: u64,
    pub curves: Vec<CurveDiagram>,
    /// Symmetric; entries saturate one above `max(budget, threshold)`.
    pub pairwise: Vec<Vec<u64>>,
    #[serde(rename = "self")]
    pub self_intersections: Vec<u64>,
    /// Curve-graph adjacency, `None` where the model cannot decide.
    #[serde(skip)]
    relation: Vec<Vec<Option<bool>>>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub log: Vec<String>,
}

impl Atlas {
    pub fn len(&self) -> usize {
        self.curves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.curves.is_empty()
    }

    pub fn relation_of(&self, a: usize, b: usize) -> Option<bool> {
        self.relation[a][b]
    }

    pub fn contains(&self, c: &CurveDiagram) -> bool {
        let key = c.canonical();
        self.curves.iter().any(|d| d.canonical() == key)
    }
}

impl HostRelation for Atlas {
    fn host_len(&self) -> usize {
        self.curves.len()
    }

    fn relation(&self, a: usize, b: usize) -> Option<bool> {
        if a == b {
            return Some(false);
        }
        self.relation[a][b]
    }
}

/// Standard curves on the model: puncture-pair and puncture-triple curves in
/// genus zero; otherwise every embedded essential word of length at most two,
/// which contains the handle generators, the chain curves between handles and
/// the curves around pairs of punctures.
pub fn seed_curves(sig: SurfaceSig) -> Result<Vec<CurveDiagram>> {
    let model = PolygonModel::new(sig)?;
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    let mut push = |c: CurveDiagram, out: &mut Vec<CurveDiagram>| {
        if !c.is_empty()
            && model_self_intersection(&model, &c) == 0
            && essential_in(&model, &c)
            && seen.insert(c.canonical())
        {
            out.push(c);
        }
    };
    let n = sig.punctures();
    if sig.genus() == 0 {
        for i in 1..=n {
            for j in i + 1..=n {
                push(puncture_curve(sig, &[i, j])?, &mut out);
            }
        }
        for i in 1..=n {
            for j in i + 1..=n {
                for k in j + 1..=n {
                    push(puncture_curve(sig, &[i, j, k])?, &mut out);
                }
            }
        }
        return Ok(out);
    }
    let rank = model.rank() as i32;
    let letters: Vec<i32> = (1..=rank).flat_map(|x| [x, -x]).collect();
    for &x in &letters {
        push(CurveDiagram::new(sig, [x])?, &mut out);
    }
    for &x in &letters {
        for &y in &letters {
            push(CurveDiagram::new(sig, [x, y])?, &mut out);
        }
    }
    Ok(out)
}

/// Seeds plus every curve `w(seed)` for twist words `w` of length at most
/// `word_length` in the seed twists and their inverses. A curve is kept when
/// its intersection with every seed is at most `budget`; curves that blow the
/// diagram size cap are skipped and logged.
pub fn generate_atlas(sig: SurfaceSig, word_length: u32, budget: u64) -> Result<Atlas> {
    let model = PolygonModel::new(sig)?;
    let seeds = seed_curves(sig)?;
    let mut log = Vec::new();
    let mut seen: HashSet<Vec<i32>> = seeds.iter().map(|c| c.canonical()).collect();
    let mut curves = seeds.clone();
    let mut frontier = seeds.clone();
    'levels: for level in 1..=word_length {
        let images: Vec<Result<CurveDiagram>> = frontier
            .par_iter()
            .flat_map_iter(|c| {
                seeds.iter().flat_map(move |s| [1i64, -1].into_iter().map(move |k| dehn_twist(c, s, k)))
            })
            .collect();
        let mut next = Vec::new();
        for img in images {
            let c = match img {
                Ok(c) => c,
                Err(Error::Budget { limit }) => {
                    log.push(format!("level {level}: skipped a curve over the {limit} letter cap"));
                    continue;
                }
                Err(e) => return Err(e),
            };
            if !seen.insert(c.canonical()) {
                continue;
            }
            if seeds.iter().any(|s| model_intersection(&model, &c, s, budget) > budget) {
                continue;
            }
            if curves.len() >= MAX_ATLAS_CURVES {
                log.push(format!("level {level}: stopped at {MAX_ATLAS_CURVES} curves"));
                break 'levels;
            }
            curves.push(c.clone());
            next.push(c);
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    Ok(fill(sig, &model, word_length, budget, curves, log))
}

fn fill(sig: SurfaceSig, model: &PolygonModel, word_length: u32, budget: u64, curves: Vec<CurveDiagram>, log: Vec<String>) -> Atlas {
    let n = curves.len();
    let cap = budget.max(u64::from(sig.threshold()));
    let rows: Vec<(Vec<u64>, Vec<Option<bool>>)> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut iota = vec![0u64; n];
            let mut rel = vec![Some(false); n];
            for j in 0..n {
                if i != j {
                    iota[j] = model_intersection(model, &curves[i], &curves[j], cap).min(cap + 1);
                    rel[j] = curve_relation(model, &curves[i], &curves[j], cap);
                }
            }
            (iota, rel)
        })
        .collect();
    let self_intersections = curves.par_iter().map(|c| model_self_intersection(model, c)).collect();
    let (pairwise, relation) = rows.into_iter().unzip();
    Atlas { sig, word_length, budget, curves, pairwise, self_intersections, relation, log }
}

/// Vertices are the atlas curves, labelled by index; edges join pairs the
/// model certifies adjacent.
pub fn intersection_graph(atlas: &Atlas) -> Graph {
    let mut g = Graph::with_vertices(atlas.len());
    for i in 0..atlas.len() {
        for j in i + 1..atlas.len() {
            if atlas.relation_of(i, j) == Some(true) {
                g.add_edge(i, j).expect("fresh edge");
            }
        }
    }
    g
}
