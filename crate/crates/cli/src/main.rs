use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use rbvc::analyze::{run_analyze, verify_analyze, AnalyzeOptions};
use rbvc::fcn::{run_fcn, verify_fcn};
use rbvc::format::{parse, parse_rational, serialize, Instance};
use rbvc::generate::{generate, Family, GenParams};
use rbvc::report::{AnalyzeReport, Check, FcnReport};
use rbvc::{CliError, Result};
use rbvc_core::{Rational, VertexSet};

#[derive(Parser)]
#[command(
    name = "rbvc",
    version,
    about = "Round-and-bipartize vertex cover analysis"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run round-and-bipartize and report the ratio with its bound
    Analyze {
        instance: PathBuf,
        /// Take the bipartizing set from a coloring (file `k` lines or DSATUR)
        #[arg(long)]
        auto_color: bool,
        /// Grow the file's set (or the empty set) until it bipartizes
        #[arg(long)]
        greedy_bipartize: bool,
        /// Check a saved report instead of producing one
        #[arg(long, value_name = "REPORT")]
        verify: Option<PathBuf>,
        /// Replace the weights with a random point of the weight polytope
        #[arg(long)]
        seed: Option<u64>,
        /// Largest instance solved exactly for the ratio denominator
        #[arg(long, default_value_t = 20)]
        brute_max: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Write an instance whose ratio equals its bound
    Generate {
        family: FamilyArg,
        #[arg(long)]
        cycle: Option<usize>,
        /// 1-based apex on the cycle (basic)
        #[arg(long)]
        apex: Option<usize>,
        #[arg(long)]
        len: Option<usize>,
        /// Number of glued cycles (convex)
        #[arg(long)]
        cycles: Option<usize>,
        /// Comma-separated coefficients (convex)
        #[arg(long, value_delimiter = ',', value_parser = rational_arg)]
        lambdas: Option<Vec<Rational>>,
        /// Comma-separated 1-based independent set (lifted)
        #[arg(long, value_delimiter = ',')]
        set: Option<Vec<usize>>,
        #[arg(long, value_parser = rational_arg)]
        alpha: Option<Rational>,
        #[arg(long)]
        rho: Option<u32>,
        #[arg(long)]
        limit_cycles: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Fractional chromatic number with primal and dual certificates
    Fcn {
        instance: PathBuf,
        /// 1-based vertex whose removal leaves a bipartite graph
        #[arg(long)]
        apex: Option<usize>,
        #[arg(long, value_name = "REPORT")]
        verify: Option<PathBuf>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Basic,
    Convex,
    Lifted,
    AlphaRho,
    AlphaBip,
}

fn rational_arg(s: &str) -> std::result::Result<Rational, String> {
    parse_rational(s)
}

fn zero_based(id: usize) -> Result<usize> {
    id.checked_sub(1)
        .ok_or_else(|| CliError::Usage("ids are 1-based".into()))
}

fn read_instance(path: &Path) -> Result<Instance> {
    parse(&fs::read_to_string(path)?)
}

fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text)?,
        None => print!("{text}"),
    }
    Ok(())
}

fn emit_json<T: Serialize>(value: &T, output: Option<&Path>) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    emit(&text, output)
}

/// Prints each check and returns whether all passed.
fn report_checks(checks: &[Check]) -> bool {
    for c in checks {
        println!("{} {}", if c.pass { "ok  " } else { "FAIL" }, c.name);
    }
    checks.iter().all(|c| c.pass)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Analyze {
            instance,
            auto_color,
            greedy_bipartize,
            verify,
            seed,
            brute_max,
            output,
        } => {
            let inst = read_instance(&instance)?;
            if let Some(path) = verify {
                let report: AnalyzeReport = serde_json::from_str(&fs::read_to_string(path)?)?;
                return Ok(report_checks(&verify_analyze(&inst, &report)?));
            }
            let opts = AnalyzeOptions {
                auto_color,
                greedy_bipartize,
                seed,
                brute_max,
            };
            let report = run_analyze(&inst, &opts)?;
            emit_json(&report, output.as_deref())?;
            Ok(report.checks.iter().all(|c| c.pass))
        }
        Command::Generate {
            family,
            cycle,
            apex,
            len,
            cycles,
            lambdas,
            set,
            alpha,
            rho,
            limit_cycles,
            output,
        } => {
            let family = match family {
                FamilyArg::Basic => Family::Basic,
                FamilyArg::Convex => Family::Convex,
                FamilyArg::Lifted => Family::Lifted,
                FamilyArg::AlphaRho => Family::AlphaRho,
                FamilyArg::AlphaBip => Family::AlphaBip,
            };
            let set = match set {
                Some(ids) => Some(
                    ids.into_iter()
                        .map(zero_based)
                        .collect::<Result<VertexSet>>()?,
                ),
                None => None,
            };
            let params = GenParams {
                cycle,
                apex: apex.map(zero_based).transpose()?,
                len,
                cycles,
                lambdas,
                set,
                alpha,
                rho,
                limit_cycles,
            };
            emit(&serialize(&generate(family, &params)?), output.as_deref())?;
            Ok(true)
        }
        Command::Fcn {
            instance,
            apex,
            verify,
            output,
        } => {
            let inst = read_instance(&instance)?;
            if let Some(path) = verify {
                let report: FcnReport = serde_json::from_str(&fs::read_to_string(path)?)?;
                return Ok(report_checks(&verify_fcn(&inst, &report)?));
            }
            let report = run_fcn(&inst, apex.map(zero_based).transpose()?)?;
            emit_json(&report, output.as_deref())?;
            Ok(report.checks.iter().all(|c| c.pass))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(3)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
