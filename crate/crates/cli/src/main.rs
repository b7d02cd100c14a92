//! Command-line front end: decisions, witnesses, volumes, densities and
//! Monte Carlo estimates, all printed as JSON or CSV.

mod output;
mod report;

use std::fmt::Write as _;
use std::io::Read;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context};
use clap::{Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;

use nontransitive_core::*;

use crate::output::{emit, print_json};

#[derive(Parser)]
#[command(
    name = "nontransitive",
    version,
    about = "Cyclic probability tuples and nontransitive dice"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a tuple is cyclic. Exit 0 cyclic, 1 not cyclic, 3 unknown.
    Check {
        /// Comma-separated probabilities, decimals or p/q.
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        /// Verify a witness JSON file (or `-` for stdin) against the tuple
        /// instead of deciding it. Exit 0 if it realizes the tuple, 1 if not.
        #[arg(long, value_name = "FILE")]
        verify_witness: Option<String>,
    },
    /// Build exact random variables realizing a tuple.
    Witness {
        #[arg(long, allow_hyphen_values = true)]
        tuple: String,
        /// 0-based index i with s_i >= 1 and s_{i+2} <= 1; found automatically
        /// when omitted.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Closed-form volumes of the triple regions.
    Exact,
    /// Closed-form order-statistic densities on the grid k/N.
    Density {
        /// One of f1, f2, f3 (or min, mid, max); all three when omitted.
        #[arg(long)]
        which: Option<Which>,
        #[arg(long, default_value_t = 1000)]
        grid: usize,
    },
    /// Mean, median and mode of a density.
    Stats {
        #[arg(long, default_value = "f1")]
        which: Which,
    },
    /// Bounds on the volume of cyclic n-tuples.
    Bounds {
        #[arg(long)]
        n: usize,
    },
    /// Monte Carlo estimate of a volume or bracket.
    Estimate {
        /// p3, p3_star, vol_C3_I, vol_C3_II, vol_C3_ordered, vol_Dn_star(n)
        /// or pn_bracket(n).
        #[arg(long)]
        target: String,
        /// Dimension for vol_Dn_star / pn_bracket given without "(n)".
        #[arg(long)]
        n: Option<usize>,
        /// Sample count; scientific notation such as 1e7 is accepted.
        #[arg(long, default_value = "1e6", value_parser = parse_count)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        chunks: usize,
    },
    /// Histogram of rejection samples next to the closed-form density.
    Histogram {
        #[arg(long, default_value = "f1")]
        which: Which,
        #[arg(long, default_value = "1e6", value_parser = parse_count)]
        samples: u64,
        #[arg(long, default_value_t = 50)]
        bins: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// All headline numbers in one JSON document.
    Report {
        #[arg(long, default_value = "1e6", value_parser = parse_count)]
        samples: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long, default_value_t = 8)]
        chunks: usize,
        /// Random tuples for the witness and symmetry sections.
        #[arg(long, default_value = "1e3", value_parser = parse_count)]
        tuples: u64,
    },
}

fn parse_count(s: &str) -> Result<u64, String> {
    if let Ok(n) = s.parse::<u64>() {
        return Ok(n);
    }
    let x: f64 = s.parse().map_err(|_| format!("not a count: {s:?}"))?;
    if x >= 0.0 && x.fract() == 0.0 && x <= u64::MAX as f64 {
        Ok(x as u64)
    } else {
        Err(format!("not a whole non-negative count: {s:?}"))
    }
}

fn parse_target(name: &str, n: Option<usize>) -> anyhow::Result<Target> {
    let name = name.trim();
    let full = match n {
        Some(n) if !name.contains('(') => format!("{name}({n})"),
        _ => name.to_string(),
    };
    Ok(full.parse()?)
}

fn read_source(path: &str) -> anyhow::Result<String> {
    if path == "-" {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .context("reading witness from stdin")?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn exit_for(status: Status) -> ExitCode {
    match status {
        Status::Cyclic => ExitCode::SUCCESS,
        Status::NotCyclic => ExitCode::from(1),
        Status::Unknown => ExitCode::from(3),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check {
            tuple,
            verify_witness: None,
        } => {
            let t: ProbTuple<BigRational> = tuple.parse()?;
            let verdict = decide_ntuple_exact(&t);
            let mut value = serde_json::to_value(&verdict)?;
            value["tuple"] = json!(t.to_string());
            print_json(&value)?;
            Ok(exit_for(verdict.status()))
        }
        Command::Check {
            tuple,
            verify_witness: Some(path),
        } => {
            let t: ProbTuple<BigRational> = tuple.parse()?;
            let w = WitnessSystem::from_json(&read_source(&path)?)?;
            let ok = verify_witness(&w, &t);
            let achieved: Vec<String> = w
                .cycle_probabilities()
                .iter()
                .map(|p| p.to_string())
                .collect();
            print_json(&json!({ "tuple": t.to_string(), "achieved": achieved, "verified": ok }))?;
            Ok(if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Witness { tuple, index } => {
            let t: ProbTuple<BigRational> = tuple.parse()?;
            let i = match index {
                Some(i) => i,
                None => find_up_down_index(&t)
                    .ok_or_else(|| anyhow!("no index i with s_i >= 1 and s_(i+2) <= 1 in {t}"))?,
            };
            print_json(&build_witness(&t, i)?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Exact => {
            print_json(&exact_volumes())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Density { which, grid } => {
            if grid == 0 {
                bail!("--grid must be at least 1");
            }
            match which {
                None => emit(&triple::density_csv(grid))?,
                Some(w) => {
                    let mut csv = format!("x,{w}\n");
                    for (x, d) in DensityGrid::closed_form(w, grid).points {
                        writeln!(csv, "{x},{d}")?;
                    }
                    emit(&csv)?;
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { which } => {
            let mut value = serde_json::to_value(density_stats(which))?;
            value["which"] = json!(which);
            if which == Which::F1 {
                value["unrestricted_min"] = serde_json::to_value(unrestricted_min_stats())?;
            }
            print_json(&value)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds { n } => {
            let b = pn_bounds(n)?;
            let vol = vol_dn_star(n)?;
            let mut value = serde_json::to_value(b)?;
            value["pi_n"] = json!(pi_n(n)?);
            value["vol_dn_star"] = json!(vol.exact.to_string());
            value["vol_dn_star_value"] = json!(vol.value);
            value["alternating_count_n_minus_1"] = json!(alternating_count(n - 1).to_string());
            print_json(&value)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Estimate {
            target,
            n,
            samples,
            seed,
            chunks,
        } => {
            let target = parse_target(&target, n)?;
            print_json(&estimate(&EstimatorSpec::new(
                target, samples, seed, chunks,
            ))?)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Histogram {
            which,
            samples,
            bins,
            seed,
        } => {
            let grid = histogram(which, samples as usize, bins, seed)?;
            let mut csv = String::from("x,estimate,closed_form\n");
            for (x, h) in grid.points {
                writeln!(csv, "{x},{h},{}", density(which, x)?)?;
            }
            emit(&csv)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Report {
            samples,
            seed,
            chunks,
            tuples,
        } => {
            if samples == 0 || chunks == 0 {
                bail!("--samples and --chunks must be positive");
            }
            let opts = report::ReportOptions {
                samples,
                seed,
                chunks,
                tuples: tuples as usize,
            };
            print_json(&report::build(&opts)?)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
