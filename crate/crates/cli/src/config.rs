//! Sweep configuration: the grid of cells, rank policy, check selection, and
//! tolerances. Parsed from JSON; every field is validated before a sweep
//! starts so that a bad config fails with the field name rather than halfway
//! through.

use serde::{Deserialize, Serialize};

/// How ranks of `sigma` and `tau` are drawn per trial.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum RankPolicy {
    /// Both full rank.
    Full,
    /// At least one of `sigma`, `tau` rank-deficient.
    Deficient,
    /// Deficient with the given probability, full otherwise.
    Mixed { deficient_fraction: f64 },
}

/// The individual checks a sweep can run per trial.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq, Hash)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// Extended-map trace inequality margin.
    TraceIneq,
    /// Nonnegativity of the remainder.
    Monotonicity,
    /// Renyi lower bounds on the remainder.
    RenyiBounds,
    /// Two-term decomposition of the remainder.
    Decomposition,
    /// Vanishing remainder iff fixed point.
    Equality,
    /// Generalized Golden-Thompson on random Hermitian pairs.
    Gt,
    /// Triple-matrix inequality on random strictly positive triples.
    Lieb,
    /// The three support lemmas.
    Lemmas,
    /// Nonnegative-case proof-chain audit.
    Chain1,
    /// Strictly positive proof-chain audit.
    Chain2,
}

impl CheckKind {
    pub const ALL: [CheckKind; 10] = [
        CheckKind::TraceIneq,
        CheckKind::Monotonicity,
        CheckKind::RenyiBounds,
        CheckKind::Decomposition,
        CheckKind::Equality,
        CheckKind::Gt,
        CheckKind::Lieb,
        CheckKind::Lemmas,
        CheckKind::Chain1,
        CheckKind::Chain2,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            CheckKind::TraceIneq => "trace_ineq",
            CheckKind::Monotonicity => "monotonicity",
            CheckKind::RenyiBounds => "renyi_bounds",
            CheckKind::Decomposition => "decomposition",
            CheckKind::Equality => "equality",
            CheckKind::Gt => "gt",
            CheckKind::Lieb => "lieb",
            CheckKind::Lemmas => "lemmas",
            CheckKind::Chain1 => "chain1",
            CheckKind::Chain2 => "chain2",
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct SweepConfig {
    pub dims_in: Vec<usize>,
    pub dims_out: Vec<usize>,
    pub kraus_counts: Vec<usize>,
    pub trials_per_cell: usize,
    pub rank_policy: RankPolicy,
    pub alphas: Vec<f64>,
    pub eps_grid: Vec<f64>,
    pub delta_grid: Vec<f64>,
    pub master_seed: u64,
    /// Relative verdict tolerance; falls back to the process default
    /// (`TIL_TOL_REL` or 1e-8) when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol_rel: Option<f64>,
    pub checks: Vec<CheckKind>,
}

impl Default for SweepConfig {
    /// Desk-scale default: dims 2-4, 1/2/4 Kraus operators, 200 trials per
    /// cell, 40% rank-deficient draws, every check enabled.
    fn default() -> Self {
        SweepConfig {
            dims_in: vec![2, 3, 4],
            dims_out: vec![2, 3, 4],
            kraus_counts: vec![1, 2, 4],
            trials_per_cell: 200,
            rank_policy: RankPolicy::Mixed {
                deficient_fraction: 0.4,
            },
            alphas: vec![0.25, 0.5, 0.75, 1.0],
            eps_grid: vec![1e-1, 1e-2, 1e-3],
            delta_grid: vec![1e-2, 1e-4, 1e-6],
            master_seed: 42,
            tol_rel: None,
            checks: CheckKind::ALL.to_vec(),
        }
    }
}

fn strictly_decreasing_positive(grid: &[f64]) -> bool {
    grid.iter().all(|&v| v > 0.0) && grid.windows(2).all(|w| w[0] > w[1])
}

impl SweepConfig {
    /// Field-by-field validation; the returned message names the offender.
    pub fn validate(&self) -> Result<(), String> {
        if self.dims_in.is_empty() || self.dims_in.contains(&0) {
            return Err("dims_in: need at least one dimension >= 1".into());
        }
        if self.dims_out.is_empty() || self.dims_out.contains(&0) {
            return Err("dims_out: need at least one dimension >= 1".into());
        }
        if self.kraus_counts.is_empty() || self.kraus_counts.contains(&0) {
            return Err("kraus_counts: need at least one count >= 1".into());
        }
        if self.trials_per_cell == 0 {
            return Err("trials_per_cell: must be >= 1".into());
        }
        if let RankPolicy::Mixed { deficient_fraction } = self.rank_policy {
            if !(0.0..=1.0).contains(&deficient_fraction) {
                return Err("rank_policy.deficient_fraction: must lie in [0, 1]".into());
            }
        }
        if self.alphas.is_empty() || self.alphas.iter().any(|&a| !(a > 0.0 && a <= 1.0)) {
            return Err("alphas: every value must lie in (0, 1]".into());
        }
        if !strictly_decreasing_positive(&self.eps_grid) || self.eps_grid.is_empty() {
            return Err("eps_grid: must be strictly decreasing and positive".into());
        }
        if !strictly_decreasing_positive(&self.delta_grid) || self.delta_grid.is_empty() {
            return Err("delta_grid: must be strictly decreasing and positive".into());
        }
        if self.delta_grid.iter().any(|&d| d >= 1.0) {
            return Err("delta_grid: every value must lie in (0, 1)".into());
        }
        if let Some(t) = self.tol_rel {
            if !(t > 0.0) {
                return Err("tol_rel: must be positive".into());
            }
        }
        if self.checks.is_empty() {
            return Err("checks: select at least one check".into());
        }
        Ok(())
    }

    /// The verdict tolerance this config runs at.
    pub fn effective_tol_rel(&self, process_default: f64) -> f64 {
        self.tol_rel.unwrap_or(process_default)
    }
}

/// Process-wide default tolerance: `TIL_TOL_REL` when set, else 1e-8.
pub fn process_default_tol_rel() -> f64 {
    std::env::var("TIL_TOL_REL")
        .ok()
        .and_then(|s| s.parse::<f64>().ok())
        .filter(|&t| t > 0.0)
        .unwrap_or(til_core::DEFAULT_TOL_REL)
}
