//! Replay of a saved instance through the full check battery.

use std::path::Path;

use til_core::io::{load_instance, Instance, InstanceJson};
use til_core::{derive_seed, SeededRng};

use crate::config::{CheckKind, SweepConfig};
use crate::sweep::{CheckStatus, TrialReport};

/// Errors that make a verification impossible (as opposed to failing).
#[derive(Debug)]
pub enum VerifyError {
    Io(String),
    /// Itemized per-field validation problems.
    Validation(Vec<String>),
}

impl std::fmt::Display for VerifyError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            VerifyError::Io(e) => write!(f, "{e}"),
            VerifyError::Validation(items) => {
                writeln!(f, "instance validation failed:")?;
                for item in items {
                    writeln!(f, "  - {item}")?;
                }
                Ok(())
            }
        }
    }
}

/// Load, validate, and run every check on a saved instance. The `seed` feeds
/// the auxiliary randomized checks (Golden-Thompson pairs, triple-matrix
/// triples, projector draws); instance-tied checks are pure functions of the
/// file contents, so verdicts replay identically.
pub fn verify_instance(path: &Path, seed: u64, tol_rel: f64) -> Result<TrialReport, VerifyError> {
    let json = load_instance(path).map_err(|e| VerifyError::Io(format!("{}: {e}", path.display())))?;
    let instance = json.validate().map_err(VerifyError::Validation)?;
    Ok(verify_loaded(&json, &instance, seed, tol_rel))
}

/// Run the full battery on an already validated instance.
pub fn verify_loaded(
    json: &InstanceJson,
    instance: &Instance,
    seed: u64,
    tol_rel: f64,
) -> TrialReport {
    let config = SweepConfig {
        checks: CheckKind::ALL.to_vec(),
        ..SweepConfig::default()
    };
    let mut rng = SeededRng::from_seed(derive_seed(seed, 4));
    crate::sweep::run_checks_on_instance(json, instance, &config, tol_rel, &mut rng, seed)
}

/// Human-readable per-check lines for the terminal.
pub fn summary_lines(report: &TrialReport) -> Vec<String> {
    let mut lines = Vec::new();
    lines.push(format!(
        "instance: dim_in {}, dim_out {}, kraus {}, rank(sigma) {}, rank(tau) {}",
        report.cell.dim_in,
        report.cell.dim_out,
        report.cell.n_kraus,
        report.rank_sigma,
        report.rank_tau
    ));
    if let Some(m) = report.scalars.margin {
        lines.push(format!("trace margin: {m:.6e}"));
    }
    if let Some(d) = &report.scalars.delta {
        lines.push(format!("remainder: {d}"));
    }
    if let Some(t) = report.scalars.theta {
        lines.push(format!("theta: {t:.12}"));
    }
    for check in &report.checks {
        let status = match check.status {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Skipped => "skipped",
        };
        match &check.note {
            Some(note) => lines.push(format!("check {:<14} {status} ({note})", check.check.name())),
            None => lines.push(format!("check {:<14} {status}", check.check.name())),
        }
    }
    lines.push(format!(
        "overall: {}",
        if report.pass { "pass" } else { "FAIL" }
    ));
    lines
}
