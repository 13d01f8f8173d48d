use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use curvekit::collar::{collar_summary, lemma2_samples, tangency_residual, AnnulusModel};
use curvekit::farey::{bounded_search, farey_embed, is_farey_embeddable, verify_certificate, Slope};
use curvekit::graph::{parse_graph, Graph};
use curvekit::mm::{calibrate_c, mm_estimate, sample_pairs};
use curvekit::search::{
    annulus_fixpoint, annulus_reembed, cluster_partition, decide, generate_atlas, intersection_graph, raag,
    AnnulusArcSystem, DecisionOutcome, Verdict,
};
use curvekit::Error;
use serde::Serialize;
use serde_json::json;

use crate::{Command, Format};

/// What a command prints and the exit code it ends with.
pub struct Output {
    pub code: u8,
    pub text: String,
}

impl Output {
    fn json(code: u8, value: &impl Serialize) -> Result<Self> {
        Ok(Self { code, text: serde_json::to_string_pretty(value)? + "\n" })
    }
}

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn load_graph(path: &Path) -> Result<Graph> {
    Ok(parse_graph(&read(path)?)?)
}

fn verdict_code(v: Verdict) -> u8 {
    match v {
        Verdict::Yes => 0,
        Verdict::No => 1,
        Verdict::Unknown => 2,
    }
}

fn outcome(out: &DecisionOutcome) -> Result<Output> {
    Output::json(verdict_code(out.verdict), out)
}

pub fn run(command: Command) -> Result<Output> {
    match command {
        Command::Decide { surface, graph, schedule } => {
            outcome(&decide(&load_graph(&graph)?, surface, &schedule.unwrap_or_default())?)
        }
        Command::Raag { surface, graph, schedule } => {
            outcome(&raag(&load_graph(&graph)?, surface, &schedule.unwrap_or_default())?)
        }
        Command::FareyCheck { graph } => match is_farey_embeddable(&load_graph(&graph)?) {
            Ok(()) => Output::json(0, &json!({ "schema": 1, "embeddable": true })),
            Err(w) => Output::json(1, &json!({ "schema": 1, "embeddable": false, "witness": w })),
        },
        Command::Embed { graph, surface } => {
            if !surface.is_farey() {
                bail!("embed needs a Farey surface, got {surface}");
            }
            let g = load_graph(&graph)?;
            match farey_embed(&g) {
                Ok(e) => {
                    let mut cert = e.certificate;
                    cert.surface = surface;
                    if !verify_certificate(&g, &cert)? {
                        bail!("certificate failed re-verification");
                    }
                    Output::json(0, &json!({ "certificate": cert, "path": e.path }))
                }
                Err(Error::Rejected(w)) => Output::json(1, &json!({ "schema": 1, "witness": w })),
                Err(e) => Err(e.into()),
            }
        }
        Command::Oracle { graph, q_max } => {
            let g = load_graph(&graph)?;
            match bounded_search(&g, q_max) {
                Some(cert) => Output::json(0, &json!({ "schema": 1, "q_max": q_max, "certificate": cert })),
                None => Output::json(1, &json!({ "schema": 1, "q_max": q_max, "certificate": null })),
            }
        }
        Command::MmEstimate { pairs, k, calibrate, q_max, seed } => match (pairs, calibrate) {
            (Some(path), _) => mm_csv(&path, k),
            (None, Some(count)) => {
                let cal = calibrate_c(&sample_pairs(count, q_max, seed), k)?;
                Output::json(
                    0,
                    &json!({ "schema": 1, "seed": seed, "q_max": q_max, "k": k, "C_emp": cal.c_emp,
                             "sample_count": cal.sample_count, "witness": cal.witness }),
                )
            }
            (None, None) => bail!("mm-estimate needs --pairs or --calibrate"),
        },
        Command::CollarTest { samples, seed, csv } => collar(samples, seed, csv.as_deref()),
        Command::Atlas { surface, length, budget, format } => {
            let atlas = generate_atlas(surface, length, budget)?;
            match format {
                Format::Json => Output::json(0, &atlas),
                Format::Dot => Ok(Output { code: 0, text: intersection_graph(&atlas).to_dot() }),
                Format::Csv => bail!("atlas supports json and dot output"),
            }
        }
        Command::Reembed { input, fixpoint } => {
            let sys: AnnulusArcSystem = serde_json::from_str(&read(&input)?)?;
            let sys = AnnulusArcSystem::new(sys.slopes, sys.cliques)?;
            let (out, steps) = if fixpoint { annulus_fixpoint(&sys) } else {
                let next = annulus_reembed(&sys);
                let steps = usize::from(next != sys);
                (next, steps)
            };
            Output::json(0, &json!({ "schema": 1, "steps": steps, "spread": out.spread(), "system": out }))
        }
        Command::Cluster { input, scale, offset } => {
            let points: Vec<Vec<f64>> = serde_json::from_str(&read(&input)?)?;
            if points.windows(2).any(|w| w[0].len() != w[1].len()) {
                bail!("points must share one dimension");
            }
            let metric = |a: &Vec<f64>, b: &Vec<f64>| a.iter().zip(b).map(|(x, y)| (x - y).powi(2)).sum::<f64>().sqrt();
            let part = cluster_partition(&points, metric, |d| scale * d + offset);
            Output::json(0, &json!({ "schema": 1, "partition": part }))
        }
    }
}

fn mm_csv(path: &Path, k: u64) -> Result<Output> {
    let mut reader = csv::ReaderBuilder::new().has_headers(false).trim(csv::Trim::All).from_path(path)?;
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["p", "q", "r", "s", "k", "lhs", "rhs", "ratio"])?;
    for (line, rec) in reader.records().enumerate() {
        let rec = rec?;
        if rec.len() != 4 {
            bail!("line {}: expected p,q,r,s", line + 1);
        }
        if line == 0 && rec.get(0) == Some("p") {
            continue;
        }
        let field = |i: usize| rec.get(i).unwrap_or("");
        let a = Slope::new(field(0).parse::<i64>()?, field(1).parse::<i64>()?)
            .with_context(|| format!("line {}", line + 1))?;
        let b = Slope::new(field(2).parse::<i64>()?, field(3).parse::<i64>()?)
            .with_context(|| format!("line {}", line + 1))?;
        let r = mm_estimate(&a, &b, k)?;
        let ratio = if r.rhs > 0.0 { format!("{}", r.lhs / r.rhs) } else { String::new() };
        writer.write_record([
            a.p().to_string(),
            a.q().to_string(),
            b.p().to_string(),
            b.q().to_string(),
            k.to_string(),
            r.lhs.to_string(),
            r.rhs.to_string(),
            ratio,
        ])?;
    }
    Ok(Output { code: 0, text: String::from_utf8(writer.into_inner()?)? })
}

fn collar(samples: usize, seed: u64, csv_path: Option<&Path>) -> Result<Output> {
    let model = AnnulusModel::new(1.0)?;
    let rows = lemma2_samples(&model, samples, seed)?;
    let summary = collar_summary(&rows, tangency_residual(100, seed)?);
    if let Some(path) = csv_path {
        let mut w = csv::Writer::from_path(path)?;
        w.write_record(["alpha_x", "alpha_y", "beta_x", "beta_y", "projection", "restricted"])?;
        for s in &rows {
            let ((ax, ay), (bx, by)) = (s.alpha.endpoints(), s.beta.endpoints());
            w.serialize((ax, ay, bx, by, s.projection, s.restricted))?;
        }
        w.flush()?;
    }
    let code = if summary.lemma2_max_gap <= 2 && summary.lemma2_min_gap >= 0 { 0 } else { 1 };
    Output::json(code, &json!({ "schema": 1, "seed": seed, "summary": summary }))
}
