//! Randomized verification sweeps.
//!
//! A sweep expands the config's dimension/Kraus grid into cells, runs
//! `trials_per_cell` independent trials per feasible cell, and aggregates the
//! outcomes. Trials are pure functions of their derived seed
//! (`derive(derive(master, cell_index), trial_index)`), so the report is
//! byte-identical across runs and across `--jobs` settings; trials may run
//! concurrently and are merged in trial-id order afterwards. Volatile timing
//! is reported on stderr only, never in the JSON.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use til_core::io::InstanceJson;
use til_core::{
    decomposition_check, derive_seed, equality_check, fidelity, golden_thompson, lemma1_check,
    lemma2_check, lemma3_check, lieb_triple, random_channel, random_state,
    random_state_in_support, remainder, renyi_lower_bounds, ruskai_map_extended,
    ruskai_map_strict, support_projector, theorem1_chain_audit, theorem2_chain_audit, Channel,
    DensityMatrix, EntropyValue, EqualityTolerances, InequalityVerdict, NormKind, PsdMatrix,
    SeededRng,
};

use crate::config::{CheckKind, RankPolicy, SweepConfig};

/// One point of the sweep grid.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CellKey {
    pub dim_in: usize,
    pub dim_out: usize,
    pub n_kraus: usize,
}

/// Per-check outcome inside a trial.
#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckReport {
    pub check: CheckKind,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub verdicts: Vec<InequalityVerdict>,
}

impl CheckReport {
    fn pass(check: CheckKind) -> Self {
        CheckReport {
            check,
            status: CheckStatus::Pass,
            note: None,
            verdicts: Vec::new(),
        }
    }

    fn fail(check: CheckKind, note: String) -> Self {
        CheckReport {
            check,
            status: CheckStatus::Fail,
            note: Some(note),
            verdicts: Vec::new(),
        }
    }

    fn skipped(check: CheckKind, note: String) -> Self {
        CheckReport {
            check,
            status: CheckStatus::Skipped,
            note: Some(note),
            verdicts: Vec::new(),
        }
    }

    fn with_verdicts(mut self, verdicts: Vec<InequalityVerdict>) -> Self {
        self.verdicts = verdicts;
        self
    }
}

/// One Renyi bound with its slack, echoed into the report.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct RenyiEntry {
    pub alpha: f64,
    pub bound: f64,
    pub slack: f64,
}

/// One `f(eps)` sample from the chain audit.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct FEpsSample {
    pub eps: f64,
    pub f_eps: f64,
}

/// Computed scalars of a trial.
#[derive(Clone, Debug, Default, Serialize)]
pub struct TrialScalars {
    pub trace_tau: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<EntropyValue>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decomposition_residual: Option<f64>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub renyi: Vec<RenyiEntry>,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub f_eps: Vec<FEpsSample>,
}

/// Full record of one trial. Timing stays out of the serialized form so that
/// reports are byte-reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct TrialReport {
    pub trial_id: u64,
    pub cell: CellKey,
    pub derived_seed: u64,
    pub rank_sigma: usize,
    pub rank_tau: usize,
    pub rank_n_sigma: usize,
    pub rank_n_tau: usize,
    pub scalars: TrialScalars,
    pub checks: Vec<CheckReport>,
    pub pass: bool,
    /// Present only when the trial failed: the instance for replay.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub instance: Option<InstanceJson>,
    #[serde(skip)]
    pub wall_time_ms: f64,
}

/// Aggregate over one grid cell.
#[derive(Clone, Debug, Serialize)]
pub struct CellAggregate {
    pub cell: CellKey,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skip_reason: Option<String>,
    pub trials: usize,
    pub failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_abs_residual: Option<f64>,
}

/// The sweep report: config echo, per-cell aggregates, totals, and the failed
/// trials with their replay instances. Passing trials are aggregated, not
/// embedded, to keep reports reviewable.
#[derive(Clone, Debug, Serialize)]
pub struct SweepReport {
    pub tool_version: String,
    pub config: SweepConfig,
    pub cells: Vec<CellAggregate>,
    pub total_trials: usize,
    pub total_failures: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_margin: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_abs_residual: Option<f64>,
    pub global_pass: bool,
    pub failed_trials: Vec<TrialReport>,
    #[serde(skip)]
    pub wall_time_ms: f64,
}

struct TrialInputs {
    sigma: PsdMatrix,
    tau: PsdMatrix,
    rho: DensityMatrix,
    channel: Channel,
}

fn draw_ranks(policy: &RankPolicy, dim: usize, rng: &mut SeededRng) -> (usize, usize) {
    let deficient = match policy {
        RankPolicy::Full => false,
        RankPolicy::Deficient => true,
        RankPolicy::Mixed { deficient_fraction } => rng.uniform() < *deficient_fraction,
    };
    if !deficient || dim == 1 {
        return (dim, dim);
    }
    // at least one of sigma, tau drops rank
    let rank_sigma = 1 + rng.below(dim);
    let rank_tau = 1 + rng.below(rank_sigma);
    if rank_sigma == dim && rank_tau == dim {
        (dim, dim - 1)
    } else {
        (rank_sigma, rank_tau)
    }
}

fn build_inputs(
    cell: CellKey,
    seed: u64,
    policy: &RankPolicy,
) -> til_core::Result<(TrialInputs, usize, usize)> {
    let mut rng = SeededRng::from_seed(derive_seed(seed, 0));
    let (rank_sigma, rank_tau) = draw_ranks(policy, cell.dim_in, &mut rng);
    let sigma = random_state(cell.dim_in, rank_sigma, derive_seed(seed, 1))?
        .as_psd()
        .clone();
    let tau_scale = rng.uniform_in(0.5, 1.5);
    let tau = random_state_in_support(&sigma, rank_tau, derive_seed(seed, 2))?
        .as_psd()
        .scale(tau_scale)?;
    let rho = DensityMatrix::normalized(&tau)?;
    let channel = random_channel(cell.dim_in, cell.dim_out, cell.n_kraus, derive_seed(seed, 3))?;
    Ok((
        TrialInputs {
            sigma,
            tau,
            rho,
            channel,
        },
        rank_sigma,
        rank_tau,
    ))
}

fn run_checks(
    inputs: &TrialInputs,
    checks: &[CheckKind],
    config: &SweepConfig,
    tol_rel: f64,
    rng: &mut SeededRng,
    scalars: &mut TrialScalars,
) -> Vec<CheckReport> {
    checks
        .iter()
        .map(|&kind| match run_one_check(inputs, kind, config, tol_rel, rng, scalars) {
            Ok(report) => report,
            Err(e) => CheckReport::fail(kind, format!("{e}")),
        })
        .collect()
}

fn verdict_report(kind: CheckKind, verdicts: Vec<InequalityVerdict>) -> CheckReport {
    let all_pass = verdicts.iter().all(|v| v.pass);
    let report = if all_pass {
        CheckReport::pass(kind)
    } else {
        let worst = verdicts
            .iter()
            .filter(|v| !v.pass)
            .map(|v| v.label.clone())
            .collect::<Vec<_>>()
            .join(", ");
        CheckReport::fail(kind, format!("failed steps: {worst}"))
    };
    report.with_verdicts(verdicts)
}

fn run_one_check(
    inputs: &TrialInputs,
    kind: CheckKind,
    config: &SweepConfig,
    tol_rel: f64,
    rng: &mut SeededRng,
    scalars: &mut TrialScalars,
) -> til_core::Result<CheckReport> {
    let TrialInputs {
        sigma,
        tau,
        rho,
        channel,
    } = inputs;
    match kind {
        CheckKind::TraceIneq => {
            let r = ruskai_map_extended(sigma, channel, tau)?;
            scalars.margin = Some(r.margin);
            let floor = -tol_rel * tau.trace().max(1.0);
            if r.margin >= floor {
                Ok(CheckReport::pass(kind))
            } else {
                Ok(CheckReport::fail(
                    kind,
                    format!("margin {} below {floor}", r.margin),
                ))
            }
        }
        CheckKind::Monotonicity => {
            let delta = remainder(rho, sigma, channel)?;
            scalars.delta = Some(delta);
            match delta {
                EntropyValue::Finite(d) if d >= -1e-9 => Ok(CheckReport::pass(kind)),
                EntropyValue::Finite(d) => {
                    Ok(CheckReport::fail(kind, format!("remainder {d} < -1e-9")))
                }
                EntropyValue::Infinite => Ok(CheckReport::fail(
                    kind,
                    "remainder infinite despite support containment".into(),
                )),
            }
        }
        CheckKind::RenyiBounds => {
            let bounds = renyi_lower_bounds(rho, sigma, channel, &config.alphas)?;
            scalars.renyi = bounds
                .iter()
                .map(|b| RenyiEntry {
                    alpha: b.alpha,
                    bound: b.bound,
                    slack: b.slack,
                })
                .collect();
            let mut problems = Vec::new();
            let mut prev = f64::NEG_INFINITY;
            for b in &bounds {
                if b.slack < -tol_rel {
                    problems.push(format!("alpha {}: slack {}", b.alpha, b.slack));
                }
                if b.bound < prev - 1e-9 {
                    problems.push(format!("alpha {}: bounds not nondecreasing", b.alpha));
                }
                prev = b.bound;
            }
            if let Some(half) = bounds.iter().find(|b| (b.alpha - 0.5).abs() < 1e-12) {
                let r = ruskai_map_extended(sigma, channel, rho.as_psd())?;
                let f = fidelity(rho.as_psd(), &r.r_tilde)?;
                if (half.bound + 2.0 * f.ln()).abs() > 1e-9 {
                    problems.push(format!(
                        "alpha 0.5 bound {} disagrees with -2 log F = {}",
                        half.bound,
                        -2.0 * f.ln()
                    ));
                }
            }
            if problems.is_empty() {
                Ok(CheckReport::pass(kind))
            } else {
                Ok(CheckReport::fail(kind, problems.join("; ")))
            }
        }
        CheckKind::Decomposition => {
            let d = decomposition_check(rho, sigma, channel)?;
            scalars.theta = Some(d.theta);
            scalars.decomposition_residual = Some(d.residual);
            let mut problems = Vec::new();
            if d.residual.abs() > tol_rel * d.delta.abs().max(1.0) {
                problems.push(format!("residual {}", d.residual));
            }
            if d.term_klein < -1e-9 || d.term_log_theta < -1e-9 {
                problems.push(format!(
                    "negative term: klein {} log-theta {}",
                    d.term_klein, d.term_log_theta
                ));
            }
            if d.theta > 1.0 + tol_rel {
                problems.push(format!("theta {} exceeds 1", d.theta));
            }
            if problems.is_empty() {
                Ok(CheckReport::pass(kind))
            } else {
                Ok(CheckReport::fail(kind, problems.join("; ")))
            }
        }
        CheckKind::Equality => {
            let flags = equality_check(rho, sigma, channel, EqualityTolerances::default())?;
            if flags.delta_zero == flags.fixed_point {
                Ok(CheckReport::pass(kind))
            } else {
                Ok(CheckReport::fail(
                    kind,
                    format!(
                        "delta_zero {} but fixed_point {} (delta {}, residual {})",
                        flags.delta_zero, flags.fixed_point, flags.delta, flags.residual
                    ),
                ))
            }
        }
        CheckKind::Gt => {
            let dim = inputs.channel.dim_in();
            let mut verdicts = Vec::new();
            for _ in 0..2 {
                let y = til_core::rng::random_hermitian(dim, rng);
                let z = til_core::rng::random_hermitian(dim, rng);
                for norm in [NormKind::Trace, NormKind::Operator] {
                    verdicts.push(golden_thompson(&y, &z, norm, tol_rel)?);
                }
            }
            Ok(verdict_report(kind, verdicts))
        }
        CheckKind::Lieb => {
            let dim = inputs.channel.dim_in();
            let mut verdicts = Vec::new();
            for _ in 0..2 {
                let x = til_core::rng::random_strict_psd(dim, rng);
                let y = til_core::rng::random_strict_psd(dim, rng);
                let z = til_core::rng::random_strict_psd(dim, rng);
                verdicts.push(lieb_triple(&x, &y, &z, tol_rel)?);
            }
            Ok(verdict_report(kind, verdicts))
        }
        CheckKind::Lemmas => {
            let mut verdicts = Vec::new();
            let v = channel.stinespring();
            let dim_be = channel.dim_out() * v.dim_env();
            let x = til_core::rng::random_hermitian(dim_be, rng);
            let p = til_core::rng::random_projector(
                channel.dim_in(),
                1 + rng.below(channel.dim_in()),
                rng,
            );
            for delta in [1e-1, 1e-3] {
                let [tr, op] = lemma1_check(&p, v.matrix(), &x, delta, tol_rel)?;
                verdicts.push(tr);
                verdicts.push(op);
            }
            if !lemma2_check(channel, rho.as_psd(), sigma)? {
                return Ok(CheckReport::fail(
                    kind,
                    "image support containment violated".into(),
                )
                .with_verdicts(verdicts));
            }
            let n_rho = channel.apply_psd(rho.as_psd())?;
            let cokernel = support_projector(&n_rho)?.complement();
            verdicts.push(lemma3_check(channel, rho.as_psd(), &cokernel)?);
            Ok(verdict_report(kind, verdicts))
        }
        CheckKind::Chain1 => {
            let mut verdicts = Vec::new();
            let mut samples = Vec::new();
            let pairs = config.eps_grid.len().min(config.delta_grid.len());
            for i in 0..pairs {
                let eps = config.eps_grid[i];
                let delta = config.delta_grid[i];
                let audit = theorem1_chain_audit(sigma, channel, tau, eps, delta, tol_rel)?;
                samples.push(FEpsSample {
                    eps,
                    f_eps: audit.intermediates.f_eps,
                });
                verdicts.extend(audit.verdicts);
            }
            scalars.f_eps = samples.clone();
            // f must not increase along the decreasing eps grid
            for w in samples.windows(2) {
                if w[1].f_eps > w[0].f_eps + 1e-12 {
                    return Ok(CheckReport::fail(
                        kind,
                        format!(
                            "f(eps) increased from {} to {} as eps fell",
                            w[0].f_eps, w[1].f_eps
                        ),
                    )
                    .with_verdicts(verdicts));
                }
            }
            Ok(verdict_report(kind, verdicts))
        }
        CheckKind::Chain2 => {
            if !(sigma.is_strictly_positive()?
                && channel.apply_psd(tau)?.is_strictly_positive()?
                && channel.apply_psd(sigma)?.is_strictly_positive()?)
            {
                return Ok(CheckReport::skipped(
                    kind,
                    "requires sigma, N(tau), N(sigma) strictly positive".into(),
                ));
            }
            let mut verdicts = Vec::new();
            for &eps in &config.eps_grid {
                let audit = theorem2_chain_audit(sigma, channel, tau, eps, tol_rel)?;
                verdicts.extend(audit.verdicts);
            }
            // the strict map skips the support projection, so it coincides
            // with the extended map only when tau is also full rank
            if tau.is_strictly_positive()? {
                let strict = ruskai_map_strict(sigma, channel, tau)?;
                let extended = ruskai_map_extended(sigma, channel, tau)?;
                let dev = til_core::operator_norm(
                    &(strict.r_tilde.matrix() - extended.r_tilde.matrix()),
                );
                verdicts.push(InequalityVerdict::equality(
                    "strict_extended_agreement",
                    dev,
                    til_core::operator_norm(strict.r_tilde.matrix()).max(1.0),
                    1e-9,
                ));
            }
            Ok(verdict_report(kind, verdicts))
        }
    }
}

/// Run the configured checks on an externally supplied instance (replay
/// path). The cell key echoes the instance's dimensions; `seed` feeds only
/// the auxiliary randomized checks.
pub fn run_checks_on_instance(
    json: &til_core::io::InstanceJson,
    instance: &til_core::io::Instance,
    config: &SweepConfig,
    tol_rel: f64,
    rng: &mut SeededRng,
    seed: u64,
) -> TrialReport {
    let start = std::time::Instant::now();
    let cell = CellKey {
        dim_in: instance.channel.dim_in(),
        dim_out: instance.channel.dim_out(),
        n_kraus: instance.channel.kraus().len(),
    };
    let mut scalars = TrialScalars {
        trace_tau: instance.tau.trace(),
        ..TrialScalars::default()
    };
    let rho = match DensityMatrix::normalized(&instance.tau) {
        Ok(r) => r,
        Err(e) => {
            return TrialReport {
                trial_id: 0,
                cell,
                derived_seed: seed,
                rank_sigma: 0,
                rank_tau: 0,
                rank_n_sigma: 0,
                rank_n_tau: 0,
                scalars,
                checks: vec![CheckReport::fail(
                    CheckKind::TraceIneq,
                    format!("tau cannot be normalized: {e}"),
                )],
                pass: false,
                instance: Some(json.clone()),
                wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            }
        }
    };
    let inputs = TrialInputs {
        sigma: instance.sigma.clone(),
        tau: instance.tau.clone(),
        rho,
        channel: instance.channel.clone(),
    };
    let rank_sigma = inputs.sigma.rank().unwrap_or(0);
    let rank_tau = inputs.tau.rank().unwrap_or(0);
    let rank_n_sigma = inputs
        .channel
        .apply_psd(&inputs.sigma)
        .and_then(|m| m.rank())
        .unwrap_or(0);
    let rank_n_tau = inputs
        .channel
        .apply_psd(&inputs.tau)
        .and_then(|m| m.rank())
        .unwrap_or(0);
    let checks = run_checks(&inputs, &config.checks, config, tol_rel, rng, &mut scalars);
    let pass = checks.iter().all(|c| c.status != CheckStatus::Fail);
    TrialReport {
        trial_id: 0,
        cell,
        derived_seed: seed,
        rank_sigma,
        rank_tau,
        rank_n_sigma,
        rank_n_tau,
        scalars,
        checks,
        pass,
        instance: if pass { None } else { Some(json.clone()) },
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

fn run_trial(
    cell: CellKey,
    trial_id: u64,
    seed: u64,
    config: &SweepConfig,
    tol_rel: f64,
) -> TrialReport {
    let start = std::time::Instant::now();
    let mut scalars = TrialScalars::default();
    let (inputs, rank_sigma, rank_tau) = match build_inputs(cell, seed, &config.rank_policy) {
        Ok(parts) => parts,
        Err(e) => {
            return TrialReport {
                trial_id,
                cell,
                derived_seed: seed,
                rank_sigma: 0,
                rank_tau: 0,
                rank_n_sigma: 0,
                rank_n_tau: 0,
                scalars,
                checks: vec![CheckReport::fail(
                    CheckKind::TraceIneq,
                    format!("instance generation failed: {e}"),
                )],
                pass: false,
                instance: None,
                wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
            }
        }
    };
    scalars.trace_tau = inputs.tau.trace();
    let rank_n_sigma = inputs
        .channel
        .apply_psd(&inputs.sigma)
        .and_then(|m| m.rank())
        .unwrap_or(0);
    let rank_n_tau = inputs
        .channel
        .apply_psd(&inputs.tau)
        .and_then(|m| m.rank())
        .unwrap_or(0);
    let mut rng = SeededRng::from_seed(derive_seed(seed, 4));
    let checks = run_checks(&inputs, &config.checks, config, tol_rel, &mut rng, &mut scalars);
    let pass = checks.iter().all(|c| c.status != CheckStatus::Fail);
    let instance = if pass {
        None
    } else {
        Some(InstanceJson::from_instance(&til_core::io::Instance {
            sigma: inputs.sigma.clone(),
            tau: inputs.tau.clone(),
            channel: inputs.channel.clone(),
        }))
    };
    TrialReport {
        trial_id,
        cell,
        derived_seed: seed,
        rank_sigma,
        rank_tau,
        rank_n_sigma,
        rank_n_tau,
        scalars,
        checks,
        pass,
        instance,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}

/// Expand the grid, run every feasible trial (in parallel when `jobs != 1`),
/// and assemble the canonical report.
pub fn run_sweep(config: &SweepConfig, jobs: usize) -> Result<SweepReport, String> {
    config.validate()?;
    let start = std::time::Instant::now();
    let tol_rel = config.effective_tol_rel(crate::config::process_default_tol_rel());

    let mut cells = Vec::new();
    for &dim_in in &config.dims_in {
        for &dim_out in &config.dims_out {
            for &n_kraus in &config.kraus_counts {
                cells.push(CellKey {
                    dim_in,
                    dim_out,
                    n_kraus,
                });
            }
        }
    }

    let mut descriptors = Vec::new();
    let mut aggregates: Vec<CellAggregate> = Vec::new();
    for (cell_idx, &cell) in cells.iter().enumerate() {
        if cell.n_kraus * cell.dim_out < cell.dim_in {
            aggregates.push(CellAggregate {
                cell,
                skipped: true,
                skip_reason: Some(
                    "no trace-preserving channel exists: n_kraus * dim_out < dim_in".into(),
                ),
                trials: 0,
                failures: 0,
                min_margin: None,
                max_abs_residual: None,
            });
            continue;
        }
        aggregates.push(CellAggregate {
            cell,
            skipped: false,
            skip_reason: None,
            trials: config.trials_per_cell,
            failures: 0,
            min_margin: None,
            max_abs_residual: None,
        });
        let cell_seed = derive_seed(config.master_seed, cell_idx as u64);
        for t in 0..config.trials_per_cell {
            let trial_id = (cell_idx * config.trials_per_cell + t) as u64;
            let seed = derive_seed(cell_seed, t as u64);
            descriptors.push((cell_idx, cell, trial_id, seed));
        }
    }

    let runner = |(_, cell, trial_id, seed): &(usize, CellKey, u64, u64)| {
        run_trial(*cell, *trial_id, *seed, config, tol_rel)
    };
    let mut trials: Vec<(usize, TrialReport)> = if jobs == 1 {
        descriptors
            .iter()
            .map(|d| (d.0, runner(d)))
            .collect()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .map_err(|e| format!("failed to build thread pool: {e}"))?;
        pool.install(|| {
            descriptors
                .par_iter()
                .map(|d| (d.0, runner(d)))
                .collect()
        })
    };
    // canonical order regardless of execution order
    trials.sort_by_key(|(_, t)| t.trial_id);

    let mut failed_trials = Vec::new();
    let mut min_margin: Option<f64> = None;
    let mut max_abs_residual: Option<f64> = None;
    let mut total_failures = 0usize;
    for (cell_idx, trial) in &trials {
        let agg = &mut aggregates[*cell_idx];
        if let Some(m) = trial.scalars.margin {
            agg.min_margin = Some(agg.min_margin.map_or(m, |x: f64| x.min(m)));
            min_margin = Some(min_margin.map_or(m, |x| x.min(m)));
        }
        if let Some(r) = trial.scalars.decomposition_residual {
            let r = r.abs();
            agg.max_abs_residual = Some(agg.max_abs_residual.map_or(r, |x: f64| x.max(r)));
            max_abs_residual = Some(max_abs_residual.map_or(r, |x| x.max(r)));
        }
        if !trial.pass {
            agg.failures += 1;
            total_failures += 1;
            failed_trials.push(trial.clone());
        }
    }

    Ok(SweepReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        config: config.clone(),
        cells: aggregates,
        total_trials: trials.len(),
        total_failures,
        min_margin,
        max_abs_residual,
        global_pass: total_failures == 0,
        failed_trials,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

/// Serialize a report to canonical bytes: pretty JSON, fixed key order,
/// trailing newline.
pub fn report_to_canonical_json(report: &SweepReport) -> Result<String, String> {
    let mut text = serde_json::to_string_pretty(report).map_err(|e| e.to_string())?;
    text.push('\n');
    Ok(text)
}
