//! `til` — randomized verification harness for the recovery-map trace
//! inequality toolkit.
//!
//! Exit codes: 0 all checks pass, 1 verification failures, 2 usage or IO
//! errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use til_cli::config::process_default_tol_rel;
use til_cli::{limits, sweep, verify};
use til_core::io::{load_instance, save_json};

#[derive(Parser)]
#[command(name = "til", version, about = "trace-inequality verification harness")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a randomized sweep from a JSON config.
    Sweep {
        /// Sweep configuration file.
        #[arg(long)]
        config: PathBuf,
        /// Where to write the JSON report (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Concurrency degree (1 = sequential; 0 = one thread per core).
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Replay a saved instance through every check.
    Verify {
        /// Instance file (sigma, tau, channel).
        #[arg(long)]
        instance: PathBuf,
        /// Where to write the JSON trial report
        /// (defaults to `<instance>.report.json`).
        #[arg(long)]
        out: Option<PathBuf>,
        /// Seed for the auxiliary randomized checks.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Epsilon/delta limit study over an instance; emits CSV.
    Limits {
        /// Instance file.
        #[arg(long)]
        instance: PathBuf,
        /// Strictly decreasing epsilon grid, comma-separated.
        #[arg(long, value_delimiter = ',')]
        eps_grid: Vec<f64>,
        /// Strictly decreasing delta grid inside (0, 1), comma-separated.
        #[arg(long, value_delimiter = ',')]
        delta_grid: Vec<f64>,
        /// Where to write the CSV (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Generate a random state, channel, or instance as JSON.
    Gen {
        #[arg(long, value_enum)]
        kind: GenKind,
        /// Dimension for states; input dimension for channels and instances.
        #[arg(long)]
        dim: Option<usize>,
        /// Output dimension for channels and instances.
        #[arg(long)]
        dim_out: Option<usize>,
        /// Number of Kraus operators for channels and instances.
        #[arg(long, default_value_t = 2)]
        kraus: usize,
        /// Rank of the state (defaults to full).
        #[arg(long)]
        rank: Option<usize>,
        /// Rank of sigma in an instance (defaults to full).
        #[arg(long)]
        rank_sigma: Option<usize>,
        /// Rank of tau in an instance (defaults to rank of sigma).
        #[arg(long)]
        rank_tau: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Where to write the JSON (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum GenKind {
    State,
    Channel,
    Instance,
}

const EXIT_FAILURES: u8 = 1;
const EXIT_USAGE: u8 = 2;

fn emit<T: serde::Serialize>(value: &T, out: Option<&PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => save_json(path, value).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            let text = serde_json::to_string_pretty(value).map_err(|e| e.to_string())?;
            println!("{text}");
            Ok(())
        }
    }
}

fn run() -> Result<u8, String> {
    let cli = Cli::parse();
    let tol_rel = process_default_tol_rel();
    match cli.command {
        Command::Sweep { config, out, jobs } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| format!("{}: {e}", config.display()))?;
            let parsed: til_cli::SweepConfig =
                serde_json::from_str(&text).map_err(|e| format!("{}: {e}", config.display()))?;
            let report = sweep::run_sweep(&parsed, jobs)?;
            let canonical = sweep::report_to_canonical_json(&report)?;
            match &out {
                Some(path) => std::fs::write(path, &canonical)
                    .map_err(|e| format!("{}: {e}", path.display()))?,
                None => print!("{canonical}"),
            }
            eprintln!(
                "sweep: {} trials, {} failures, {:.1} ms",
                report.total_trials, report.total_failures, report.wall_time_ms
            );
            Ok(if report.global_pass { 0 } else { EXIT_FAILURES })
        }
        Command::Verify {
            instance,
            out,
            seed,
        } => {
            let report = match verify::verify_instance(&instance, seed, tol_rel) {
                Ok(r) => r,
                Err(e) => return Err(e.to_string()),
            };
            for line in verify::summary_lines(&report) {
                println!("{line}");
            }
            let out_path = out.unwrap_or_else(|| {
                let mut p = instance.as_os_str().to_owned();
                p.push(".report.json");
                PathBuf::from(p)
            });
            save_json(&out_path, &report).map_err(|e| format!("{}: {e}", out_path.display()))?;
            println!("report written to {}", out_path.display());
            Ok(if report.pass { 0 } else { EXIT_FAILURES })
        }
        Command::Limits {
            instance,
            eps_grid,
            delta_grid,
            out,
        } => {
            let json =
                load_instance(&instance).map_err(|e| format!("{}: {e}", instance.display()))?;
            let inst = json
                .validate()
                .map_err(|items| format!("instance validation failed:\n  {}", items.join("\n  ")))?;
            let study = limits::limit_study(&inst, &eps_grid, &delta_grid, tol_rel)?;
            match &out {
                Some(path) => {
                    let file = std::fs::File::create(path)
                        .map_err(|e| format!("{}: {e}", path.display()))?;
                    limits::write_csv(&study, file)?;
                }
                None => limits::write_csv(&study, std::io::stdout().lock())?,
            }
            if !study.f_monotone {
                eprintln!("limit study: f(eps) failed to decrease along the grid");
                return Ok(EXIT_FAILURES);
            }
            if !study.distance_monotone {
                eprintln!("limit study: distance to the limit failed to decrease along the grid");
                return Ok(EXIT_FAILURES);
            }
            Ok(0)
        }
        Command::Gen {
            kind,
            dim,
            dim_out,
            kraus,
            rank,
            rank_sigma,
            rank_tau,
            seed,
            out,
        } => {
            let dim = dim.ok_or_else(|| "gen: --dim is required".to_string())?;
            match kind {
                GenKind::State => {
                    let json = til_cli::gen::make_state(dim, rank.unwrap_or(dim), seed)?;
                    emit(&json, out.as_ref())?;
                }
                GenKind::Channel => {
                    let dim_out = dim_out.unwrap_or(dim);
                    let json = til_cli::gen::make_channel(dim, dim_out, kraus, seed)?;
                    emit(&json, out.as_ref())?;
                }
                GenKind::Instance => {
                    let dim_out = dim_out.unwrap_or(dim);
                    let rs = rank_sigma.unwrap_or(dim);
                    let rt = rank_tau.unwrap_or(rs);
                    let json = til_cli::gen::make_instance(dim, dim_out, kraus, rs, rt, seed)?;
                    emit(&json, out.as_ref())?;
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
