use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use antipodal_core::checks::{self, CheckParams, Parity, DEFAULT_SAMPLES, DEFAULT_SEED};
use antipodal_core::covers::{self, Cover, DEFAULT_EPSILON};
use antipodal_core::{deleted_square, orbit_complex, skeleton_complex, Result};

/// Antipodal-free sphere covers and mod-2 homology certificates.
///
/// Every command prints one JSON document on stdout. The exit status is 0 iff every verdict in
/// it passes, 1 if some verdict fails and 2 on usage or input errors.
#[derive(Parser)]
#[command(name = "antipodal", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Minimal multiplicity Q(h) and minimal cover size for one sphere dimension.
    Q {
        #[arg(long)]
        h: usize,
    },
    /// The Q(h) table for h = 0..=h_max.
    Table {
        #[arg(long = "h-max")]
        h_max: usize,
    },
    /// Build or verify cover files.
    Cover {
        #[command(subcommand)]
        command: CoverCommand,
    },
    /// Run a named check suite.
    Check {
        #[arg(long)]
        id: String,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        h: Option<usize>,
        #[arg(long = "h-max")]
        h_max: Option<usize>,
        #[arg(long)]
        epsilon: Option<f64>,
        #[arg(long, value_parser = parse_parity)]
        parity: Option<Parity>,
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        /// Permit the largest supported homology instances.
        #[arg(long)]
        allow_large: bool,
    },
    /// List the cells of the deleted square (or its orbit complex) of a simplex skeleton.
    Complex {
        #[arg(long = "n-vertices")]
        n_vertices: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        orbit: bool,
    },
}

#[derive(Subcommand)]
enum CoverCommand {
    /// Write a cover of S^dim to a JSON file.
    Build {
        #[arg(long)]
        dim: usize,
        #[arg(long, value_enum)]
        method: Method,
        #[arg(long, default_value_t = DEFAULT_EPSILON)]
        epsilon: f64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Sample a cover file for coverage, antipodal pairs and multiplicity.
    Verify {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        #[arg(long)]
        nerve: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    /// Open caps opposite the vertices of an inscribed regular simplex.
    Caps,
    /// Repeated lifting of the three-cap cover of the circle.
    Lift,
}

fn parse_parity(s: &str) -> std::result::Result<Parity, String> {
    s.parse().map_err(|e: antipodal_core::Error| e.to_string())
}

/// A JSON document and whether every verdict in it passed.
struct Outcome {
    doc: Value,
    pass: bool,
}

impl Outcome {
    fn info(doc: Value) -> Self {
        Self { doc, pass: true }
    }
}

fn run(cli: Cli) -> Result<Outcome> {
    match cli.command {
        Command::Q { h } => Ok(Outcome::info(serde_json::to_value(checks::q_entry(h))?)),
        Command::Table { h_max } => Ok(Outcome::info(json!({ "entries": checks::q_table(h_max) }))),
        Command::Cover { command: CoverCommand::Build { dim, method, epsilon, out } } => {
            let (cover, method, epsilon) = match method {
                Method::Caps => (covers::cap_cover(dim)?, "caps", None),
                Method::Lift => (covers::lifted_cap_cover(dim, epsilon)?, "lift", Some(epsilon)),
            };
            std::fs::write(&out, cover.to_json())?;
            Ok(Outcome::info(json!({
                "out": out.display().to_string(),
                "method": method,
                "sphere_dim": cover.sphere_dim,
                "n_sets": cover.sets.len(),
                "epsilon": epsilon,
            })))
        }
        Command::Cover { command: CoverCommand::Verify { input, samples, seed, nerve } } => {
            let cover = Cover::from_json(&std::fs::read_to_string(&input)?)?;
            let sample_set = covers::sample_sphere(cover.sphere_dim, samples, seed)?;
            let report = covers::verify_cover(&cover, &sample_set)?;
            let pass = report.covered && report.antipodal_free;
            let mut doc = json!({
                "verdict": if pass { "pass" } else { "fail" },
                "cover": { "sphere_dim": cover.sphere_dim, "n_sets": cover.sets.len(), "epsilon": cover.epsilon },
                "report": report,
            });
            if nerve {
                doc["nerve"] = serde_json::to_value(covers::empirical_nerve(&cover, &sample_set)?)?;
            }
            Ok(Outcome { doc, pass })
        }
        Command::Check { id, k, h, h_max, epsilon, parity, samples, seed, allow_large } => {
            let params = CheckParams { k, h, h_max, epsilon, samples, seed, parity, allow_large };
            let check = checks::run_check(&id, &params)?;
            Ok(Outcome { pass: check.passed(), doc: serde_json::to_value(check)? })
        }
        Command::Complex { n_vertices, k, orbit } => {
            let d = deleted_square(&skeleton_complex(n_vertices, k)?);
            let listing = if orbit { orbit_complex(&d)?.to_listing() } else { d.to_listing() };
            Ok(Outcome::info(serde_json::to_value(listing)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(Outcome { doc, pass }) => {
            println!("{}", serde_json::to_string_pretty(&doc).expect("json value serializes"));
            if pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            println!("{}", json!({ "error": e.to_string() }));
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
