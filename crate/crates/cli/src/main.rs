mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use curvekit::farey::SurfaceSig;
use curvekit::search::Schedule;

/// Exit code for every kind of failure.
const EXIT_ERROR: u8 = 3;

#[derive(Parser, Debug)]
#[command(name = "curvekit", version, about = "Induced subgraphs of curve graphs and related experiments")]
struct Cli {
    /// Worker threads; defaults to the available parallelism.
    #[arg(long, global = true, env = "CURVEKIT_WORKERS")]
    workers: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph is an induced subgraph of the curve graph.
    Decide {
        #[arg(long)]
        surface: SurfaceSig,
        #[arg(long)]
        graph: PathBuf,
        /// Comma-separated `L:B` stages.
        #[arg(long)]
        schedule: Option<Schedule>,
    },
    /// Run the Farey recognizer and print the witness on rejection.
    FareyCheck {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Build a slope certificate for a Farey-embeddable graph.
    Embed {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "1,1")]
        surface: SurfaceSig,
    },
    /// Exhaustive slope search with heights up to `q-max`.
    Oracle {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 50)]
        q_max: u64,
    },
    /// Distance-formula terms per slope pair, or a calibration run.
    MmEstimate {
        /// CSV with columns p,q,r,s (header optional).
        #[arg(long, conflicts_with = "calibrate")]
        pairs: Option<PathBuf>,
        #[arg(long, default_value_t = 3)]
        k: u64,
        /// Sample this many seeded pairs and report the empirical constant.
        #[arg(long)]
        calibrate: Option<usize>,
        #[arg(long, default_value_t = 100_000)]
        q_max: u64,
        #[arg(long, default_value_t = 7)]
        seed: u64,
    },
    /// Collar radius, tangency residual and projection-gap statistics.
    CollarTest {
        #[arg(long, default_value_t = 10_000)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Also write per-sample counts here.
        #[arg(long)]
        csv: Option<PathBuf>,
    },
    /// Build the twist-word atlas of curves.
    Atlas {
        #[arg(long)]
        surface: SurfaceSig,
        #[arg(long, default_value_t = 1)]
        length: u32,
        #[arg(long, default_value_t = 4)]
        budget: u64,
        /// `json` prints the atlas, `dot` its intersection graph.
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Apply the annulus re-embedding move to a JSON arc system.
    Reembed {
        #[arg(long)]
        input: PathBuf,
        /// Iterate to the fixpoint instead of one move.
        #[arg(long)]
        fixpoint: bool,
    },
    /// Cluster points (JSON list of coordinate vectors) with g(D) = a D + b.
    Cluster {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 1.0)]
        scale: f64,
        #[arg(long, default_value_t = 2.0)]
        offset: f64,
    },
    /// RAAG embedding question on (0,n<=5) and (1,n<=2), via decide.
    Raag {
        #[arg(long)]
        surface: SurfaceSig,
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        schedule: Option<Schedule>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.workers {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    }
    match commands::run(cli.command) {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
