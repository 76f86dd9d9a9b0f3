use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use cpa_core::chromatic::{chi_auto, chi_with, EngineChoice, MemoTable};
use cpa_core::cpa::{run_cpa_with, CpaOptions};
use cpa_core::experiment::{dataset_manifest, generate_dataset, run_experiment, ExperimentConfig};
use cpa_core::graph::parse_edge_list;
use cpa_core::{run_ph_baseline, summarize, verify_correctness, Error, WeightedGraph};

#[derive(Parser)]
#[command(name = "cpa", version, about = "Chromatic persistence of weighted graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Chromatic polynomial of the underlying graph
    Chi {
        input: PathBuf,
        /// auto, closed, sp, twdp, delcon or brute
        #[arg(long, default_value = "auto")]
        engine: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-event jumps, E-polynomials and barcode zeta
    Run {
        input: PathBuf,
        /// Zeta truncation order (default: number of edges)
        #[arg(long)]
        truncate_zeta: Option<usize>,
        /// Include edge weights in the output
        #[arg(long)]
        with_weights: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// b0/b1 trace as CSV, or the five summaries as JSON
    Baseline {
        input: PathBuf,
        #[arg(long)]
        summary: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every event against the brute-force oracle (n <= 10)
    Verify { input: PathBuf },
    /// C5 vs C6 ring-size recognition
    Experiment {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 6)]
        pad_events: usize,
        #[arg(long, default_value_t = 7)]
        pad_betti: usize,
        /// Report JSON path
        #[arg(long)]
        out: Option<PathBuf>,
        /// Dataset manifest JSON path
        #[arg(long)]
        manifest: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } | Error::InvalidGraph(_) => 2,
            Error::DuplicateWeight { .. } => 3,
            Error::EnginePrecondition { .. } => 4,
            _ => 1,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: std::io::Error) -> Failure {
    Failure {
        code: 2,
        message: format!("{}: {e}", path.display()),
    }
}

fn load(path: &Path) -> Result<WeightedGraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| io_failure(path, e))?;
    parse_edge_list(&text).map_err(|e| {
        let mut f = Failure::from(e);
        f.message = format!("{}: {}", path.display(), f.message);
        f
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure {
            code: 1,
            message: format!("{}: {e}", path.display()),
        }),
        None => {
            println!("{}", text.trim_end());
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Chi { input, engine, out } => {
            let g = load(&input)?;
            let h = g.underlying();
            let memo = MemoTable::new();
            let start = Instant::now();
            let (chi, used) = if engine == "auto" {
                chi_auto(&h, &memo)
            } else {
                let choice: EngineChoice = engine.parse()?;
                (chi_with(choice, &h, &memo)?, choice)
            };
            eprintln!("engine {used}: {:.3} ms", start.elapsed().as_secs_f64() * 1e3);
            let doc = serde_json::json!({
                "n": h.n(),
                "edges": h.edge_count(),
                "engine": used,
                "chi": chi,
            });
            emit(out.as_deref(), &doc.to_string())
        }
        Command::Run {
            input,
            truncate_zeta,
            with_weights,
            out,
        } => {
            let g = load(&input)?;
            let opts = CpaOptions {
                zeta_order: truncate_zeta,
                ..Default::default()
            };
            let r = run_cpa_with(&g, &MemoTable::new(), opts)?;
            for ev in &r.events {
                eprintln!("event {} {}: {:.3} ms", ev.j, ev.engine, ev.elapsed.as_secs_f64() * 1e3);
            }
            let json = if with_weights {
                r.to_json_with_weights()
            } else {
                r.to_json()
            };
            emit(out.as_deref(), &json)
        }
        Command::Baseline { input, summary, out } => {
            let g = load(&input)?;
            let trace = run_ph_baseline(&g)?;
            let text = if summary {
                serde_json::to_string(&summarize(&trace)).expect("summary serialises")
            } else {
                trace.to_csv()
            };
            emit(out.as_deref(), &text)
        }
        Command::Verify { input } => {
            let g = load(&input)?;
            let report = verify_correctness(&g)?;
            println!("{report}");
            if report.passed {
                Ok(())
            } else {
                Err(Failure {
                    code: 3,
                    message: "verification failed".into(),
                })
            }
        }
        Command::Experiment {
            seed,
            pad_events,
            pad_betti,
            out,
            manifest,
        } => {
            let config = ExperimentConfig {
                seed,
                pad_events,
                pad_betti,
                ..Default::default()
            };
            let result = run_experiment(config)?;
            println!("{result}");
            if let Some(path) = out {
                emit(Some(&path), &result.to_json())?;
            }
            if let Some(path) = manifest {
                emit(Some(&path), &dataset_manifest(seed, &generate_dataset(seed)))?;
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
