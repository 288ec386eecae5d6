//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line with the measured quantity next to its pinned threshold.
//! Tolerances are fixed here, not configurable.

use std::sync::OnceLock;
use std::time::Instant;

#[path = "../../core/tests/support/mod.rs"]
mod support;

use til_cli::config::{CheckKind, RankPolicy, SweepConfig};
use til_cli::sweep::{report_to_canonical_json, run_sweep};
use til_core::{
    decomposition_check, derive_seed, equality_check, fidelity, golden_thompson, lemma1_check,
    lemma2_check, lemma3_check, lieb_triple, lieb_triple_rhs, operator_norm, random_channel,
    random_state, random_state_in_support, remainder, renyi_lower_bounds, ruskai_map_extended,
    ruskai_map_regularized, ruskai_map_strict, support_projector, theorem1_chain_audit,
    theorem2_chain_audit, Channel, DensityMatrix, EntropyValue, EqualityTolerances,
    HermitianMatrix, NormKind, PsdMatrix, SeededRng, DEFAULT_TOL_REL,
};

fn criterion(name: &str, pass: bool, details: String) {
    println!(
        "ACCEPTANCE {name}: {} ({details})",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(pass, "criterion {name} failed: {details}");
}

struct SweepInstance {
    sigma: PsdMatrix,
    tau: PsdMatrix,
    rho: DensityMatrix,
    channel: Channel,
    deficient: bool,
}

/// The shared instance pool: the full 2-4 dimension grid with Kraus counts
/// 1/2/4, 75 trials per feasible cell (1800 total), 40% rank-deficient.
fn instance_pool() -> &'static Vec<SweepInstance> {
    static POOL: OnceLock<Vec<SweepInstance>> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut out = Vec::new();
        let mut cell_idx = 0u64;
        for dim_in in [2usize, 3, 4] {
            for dim_out in [2usize, 3, 4] {
                for n_kraus in [1usize, 2, 4] {
                    if n_kraus * dim_out < dim_in {
                        continue; // no trace-preserving channel of this shape
                    }
                    let cell_seed = derive_seed(0xACCE97, cell_idx);
                    for t in 0..75u64 {
                        let seed = derive_seed(cell_seed, t);
                        let mut rng = SeededRng::from_seed(derive_seed(seed, 0));
                        let deficient = rng.uniform() < 0.4 && dim_in > 1;
                        let (rank_sigma, rank_tau) = if deficient {
                            let rs = 1 + rng.below(dim_in);
                            let rt = 1 + rng.below(rs);
                            if rs == dim_in && rt == dim_in {
                                (dim_in, dim_in - 1)
                            } else {
                                (rs, rt)
                            }
                        } else {
                            (dim_in, dim_in)
                        };
                        let sigma = random_state(dim_in, rank_sigma, derive_seed(seed, 1))
                            .unwrap()
                            .as_psd()
                            .clone();
                        let scale = rng.uniform_in(0.5, 1.5);
                        let tau = random_state_in_support(&sigma, rank_tau, derive_seed(seed, 2))
                            .unwrap()
                            .as_psd()
                            .scale(scale)
                            .unwrap();
                        let rho = DensityMatrix::normalized(&tau).unwrap();
                        let channel =
                            random_channel(dim_in, dim_out, n_kraus, derive_seed(seed, 3))
                                .unwrap();
                        out.push(SweepInstance {
                            sigma,
                            tau,
                            rho,
                            channel,
                            deficient: rank_sigma < dim_in || rank_tau < dim_in,
                        });
                    }
                    cell_idx += 1;
                }
            }
        }
        out
    })
}

#[test]
fn trace_inequality_nonnegative_case() {
    let start = Instant::now();
    let pool = instance_pool();
    let mut worst = f64::INFINITY;
    let mut deficient = 0usize;
    for inst in pool.iter() {
        let r = ruskai_map_extended(&inst.sigma, &inst.channel, &inst.tau).unwrap();
        let normalized = r.margin / inst.tau.trace().max(1.0);
        worst = worst.min(normalized);
        if inst.deficient {
            deficient += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = pool.len() >= 1800 && worst >= -1e-8 && elapsed < 60.0;
    criterion(
        "trace_inequality_nonnegative_case",
        pass,
        format!(
            "{} instances ({deficient} rank-deficient), worst normalized margin {worst:.3e} \
             >= -1e-8, {elapsed:.1} s < 60 s",
            pool.len()
        ),
    );
}

#[test]
fn trace_inequality_strict_case() {
    let mut count = 0usize;
    let mut worst_margin = f64::INFINITY;
    let mut worst_agreement = 0.0f64;
    let mut seed_idx = 0u64;
    while count < 500 {
        let seed = derive_seed(0x57121C7, seed_idx);
        seed_idx += 1;
        let dim_in = 2 + (seed_idx % 3) as usize;
        let dim_out = 2 + (seed_idx % 2) as usize;
        let sigma = random_state(dim_in, dim_in, derive_seed(seed, 1))
            .unwrap()
            .as_psd()
            .clone();
        let tau = random_state(dim_in, dim_in, derive_seed(seed, 2))
            .unwrap()
            .as_psd()
            .clone();
        let channel = random_channel(dim_in, dim_out, 2, derive_seed(seed, 3)).unwrap();
        let n_tau = channel.apply_psd(&tau).unwrap();
        let n_sigma = channel.apply_psd(&sigma).unwrap();
        if !(sigma.is_strictly_positive().unwrap()
            && tau.is_strictly_positive().unwrap()
            && n_tau.is_strictly_positive().unwrap()
            && n_sigma.is_strictly_positive().unwrap())
        {
            continue;
        }
        count += 1;
        let strict = ruskai_map_strict(&sigma, &channel, &tau).unwrap();
        let extended = ruskai_map_extended(&sigma, &channel, &tau).unwrap();
        worst_margin = worst_margin.min(strict.margin);
        worst_agreement = worst_agreement.max(operator_norm(
            &(strict.r_tilde.matrix() - extended.r_tilde.matrix()),
        ));
    }
    let pass = worst_margin >= -1e-8 && worst_agreement <= 1e-9;
    criterion(
        "trace_inequality_strict_case",
        pass,
        format!(
            "{count} strictly positive instances, worst margin {worst_margin:.3e} >= -1e-8, \
             worst strict/extended deviation {worst_agreement:.3e} <= 1e-9"
        ),
    );
}

#[test]
fn monotonicity_of_relative_entropy() {
    let pool = instance_pool();
    let mut worst = f64::INFINITY;
    for inst in pool.iter() {
        match remainder(&inst.rho, &inst.sigma, &inst.channel).unwrap() {
            EntropyValue::Finite(d) => worst = worst.min(d),
            EntropyValue::Infinite => {
                criterion(
                    "monotonicity_of_relative_entropy",
                    false,
                    "remainder infinite despite support containment".into(),
                );
                return;
            }
        }
    }
    criterion(
        "monotonicity_of_relative_entropy",
        worst >= -1e-9,
        format!(
            "{} instances, worst remainder {worst:.3e} >= -1e-9",
            pool.len()
        ),
    );
}

#[test]
fn remainder_decomposition() {
    let pool = instance_pool();
    let mut worst_residual = 0.0f64;
    let mut worst_term = f64::INFINITY;
    let mut worst_theta = f64::NEG_INFINITY;
    for inst in pool.iter() {
        let d = decomposition_check(&inst.rho, &inst.sigma, &inst.channel).unwrap();
        worst_residual = worst_residual.max(d.residual.abs() / d.delta.abs().max(1.0));
        worst_term = worst_term.min(d.term_klein.min(d.term_log_theta));
        worst_theta = worst_theta.max(d.theta);
    }
    let pass = worst_residual <= 1e-8 && worst_term >= -1e-9 && worst_theta <= 1.0 + 1e-8;
    criterion(
        "remainder_decomposition",
        pass,
        format!(
            "{} instances, worst normalized residual {worst_residual:.3e} <= 1e-8, \
             worst term {worst_term:.3e} >= -1e-9, max theta - 1 = {:.3e} <= 1e-8",
            pool.len(),
            worst_theta - 1.0
        ),
    );
}

#[test]
fn renyi_lower_bound_family() {
    let pool = instance_pool();
    let alphas = [0.25, 0.5, 0.75, 1.0];
    let mut worst_slack = f64::INFINITY;
    let mut worst_bridge = 0.0f64;
    for inst in pool.iter() {
        let bounds =
            renyi_lower_bounds(&inst.rho, &inst.sigma, &inst.channel, &alphas).unwrap();
        for b in &bounds {
            worst_slack = worst_slack.min(b.slack);
        }
        let r = ruskai_map_extended(&inst.sigma, &inst.channel, inst.rho.as_psd()).unwrap();
        let f = fidelity(inst.rho.as_psd(), &r.r_tilde).unwrap();
        worst_bridge = worst_bridge.max((bounds[1].bound + 2.0 * f.ln()).abs());
    }
    let pass = worst_slack >= -1e-8 && worst_bridge <= 1e-9;
    criterion(
        "renyi_lower_bound_family",
        pass,
        format!(
            "{} instances, worst slack {worst_slack:.3e} >= -1e-8, \
             worst |S_1/2 + 2 log F| = {worst_bridge:.3e} <= 1e-9",
            pool.len()
        ),
    );
}

#[test]
fn fixed_point_of_the_map() {
    let pool = instance_pool();
    let mut worst = 0.0f64;
    for inst in pool.iter() {
        let r = ruskai_map_extended(&inst.sigma, &inst.channel, &inst.sigma).unwrap();
        let dev = operator_norm(&(r.r_tilde.matrix() - inst.sigma.matrix()));
        let allowance = 1e-9 * (1.0 + operator_norm(inst.sigma.matrix()));
        worst = worst.max(dev / allowance);
    }
    criterion(
        "fixed_point_of_the_map",
        worst <= 1.0,
        format!(
            "{} sigmas (incl. rank-deficient), worst deviation at {:.1}% of the \
             1e-9 (1 + ||sigma||) allowance",
            pool.len(),
            worst * 100.0
        ),
    );
}

#[test]
fn equality_iff_fixed_point() {
    // classical side: dephasing channel with commuting diagonal inputs
    let mut worst_delta = 0.0f64;
    let mut worst_residual = 0.0f64;
    for i in 0..50u64 {
        let dim = 2 + (i % 3) as usize;
        let mut rng = SeededRng::from_seed(derive_seed(0xE0A117, i));
        let mut rho_diag: Vec<f64> = (0..dim).map(|_| rng.uniform_in(0.1, 1.0)).collect();
        let total: f64 = rho_diag.iter().sum();
        rho_diag.iter_mut().for_each(|v| *v /= total);
        let sigma_diag: Vec<f64> = (0..dim).map(|_| rng.uniform_in(0.1, 1.0)).collect();
        let rho = DensityMatrix::new(PsdMatrix::from_real_diagonal(&rho_diag).unwrap()).unwrap();
        let sigma = PsdMatrix::from_real_diagonal(&sigma_diag).unwrap();
        let channel = Channel::dephasing(dim);
        let delta = remainder(&rho, &sigma, &channel)
            .unwrap()
            .finite()
            .unwrap();
        let r = ruskai_map_extended(&sigma, &channel, rho.as_psd()).unwrap();
        worst_delta = worst_delta.max(delta.abs());
        worst_residual =
            worst_residual.max(operator_norm(&(rho.matrix() - r.r_tilde.matrix())));
    }
    let classical_pass = worst_delta <= 1e-10 && worst_residual <= 1e-8;

    // generic side: remainder clearly positive forces a visible fixed-point gap
    let mut generic = 0usize;
    let mut attempts = 0u64;
    let mut min_generic_residual = f64::INFINITY;
    while generic < 50 && attempts < 300 {
        let seed = derive_seed(0x6E5E11C, attempts);
        attempts += 1;
        let dim = 2 + (attempts % 3) as usize;
        let sigma = random_state(dim, dim, derive_seed(seed, 1))
            .unwrap()
            .as_psd()
            .clone();
        let rho = random_state(dim, dim, derive_seed(seed, 2)).unwrap();
        let channel = random_channel(dim, 2, 2, derive_seed(seed, 3)).unwrap();
        let flags = equality_check(
            &rho,
            &sigma,
            &channel,
            EqualityTolerances::default(),
        )
        .unwrap();
        if flags.delta > 1e-4 {
            generic += 1;
            min_generic_residual = min_generic_residual.min(flags.residual);
        }
    }
    let generic_pass = generic >= 50 && min_generic_residual > 1e-4;
    criterion(
        "equality_iff_fixed_point",
        classical_pass && generic_pass,
        format!(
            "classical: max |remainder| {worst_delta:.3e} <= 1e-10, max residual \
             {worst_residual:.3e} <= 1e-8; generic: {generic} instances with remainder > 1e-4, \
             min residual {min_generic_residual:.3e} > 1e-4"
        ),
    );
}

#[test]
fn golden_thompson_sweep() {
    let mut worst = f64::INFINITY;
    let mut worst_commuting = 0.0f64;
    let mut pairs = 0usize;
    for dim in 2..=6usize {
        let mut rng = SeededRng::from_seed(derive_seed(0x67AB, dim as u64));
        for _ in 0..1000 {
            let y = til_core::rng::random_hermitian(dim, &mut rng);
            let z = til_core::rng::random_hermitian(dim, &mut rng);
            pairs += 1;
            for norm in [NormKind::Trace, NormKind::Operator] {
                let v = golden_thompson(&y, &z, norm, DEFAULT_TOL_REL).unwrap();
                worst = worst.min(v.margin / v.scale());
            }
        }
        // commuting pairs are tight for both norms
        for _ in 0..50 {
            let yd: Vec<f64> = (0..dim).map(|_| rng.uniform_in(-1.0, 1.0)).collect();
            let zd: Vec<f64> = (0..dim).map(|_| rng.uniform_in(-1.0, 1.0)).collect();
            let y = HermitianMatrix::from_real_diagonal(&yd);
            let z = HermitianMatrix::from_real_diagonal(&zd);
            for norm in [NormKind::Trace, NormKind::Operator] {
                let v = golden_thompson(&y, &z, norm, DEFAULT_TOL_REL).unwrap();
                worst_commuting = worst_commuting.max(v.margin.abs() / v.scale());
            }
        }
    }
    let pass = worst >= -1e-9 && worst_commuting <= 1e-10;
    criterion(
        "golden_thompson_sweep",
        pass,
        format!(
            "{pairs} pairs per both norms, worst normalized margin {worst:.3e} >= -1e-9, \
             worst commuting |margin| {worst_commuting:.3e} <= 1e-10"
        ),
    );
}

#[test]
fn triple_matrix_inequality_sweep() {
    let mut worst = f64::INFINITY;
    let mut worst_quadrature = 0.0f64;
    let mut triples = 0usize;
    for dim in 2..=5usize {
        let mut rng = SeededRng::from_seed(derive_seed(0x11EB, dim as u64));
        for _ in 0..250 {
            let x = til_core::rng::random_strict_psd(dim, &mut rng);
            let y = til_core::rng::random_strict_psd(dim, &mut rng);
            let z = til_core::rng::random_strict_psd(dim, &mut rng);
            triples += 1;
            let v = lieb_triple(&x, &y, &z, DEFAULT_TOL_REL).unwrap();
            worst = worst.min(v.margin / v.scale());
            let spectral = lieb_triple_rhs(&x, &y, &z).unwrap();
            let quad = support::quadrature_triple_integral(&x, &y, &z);
            worst_quadrature =
                worst_quadrature.max((spectral - quad).abs() / spectral.abs().max(1.0));
        }
    }
    let pass = worst >= -1e-9 && worst_quadrature <= 1e-6;
    criterion(
        "triple_matrix_inequality_sweep",
        pass,
        format!(
            "{triples} strictly positive triples, worst normalized margin {worst:.3e} >= -1e-9, \
             worst spectral-vs-quadrature relative gap {worst_quadrature:.3e} <= 1e-6"
        ),
    );
}

#[test]
fn support_lemmas() {
    let mut rng = SeededRng::from_seed(0x1E3317);
    let mut worst_lemma1 = f64::INFINITY;
    for i in 0..500u64 {
        let dim_in = 2 + (i % 3) as usize;
        let dim_out = 2 + (i % 2) as usize;
        let channel =
            random_channel(dim_in, dim_out, 2, derive_seed(0x1AA1, i)).unwrap();
        let v = channel.stinespring();
        let x = til_core::rng::random_hermitian(dim_out * v.dim_env(), &mut rng);
        let p = til_core::rng::random_projector(dim_in, 1 + rng.below(dim_in), &mut rng);
        let delta = if i % 2 == 0 { 1e-1 } else { 1e-3 };
        let [tr, op] = lemma1_check(&p, v.matrix(), &x, delta, DEFAULT_TOL_REL).unwrap();
        worst_lemma1 = worst_lemma1
            .min(tr.margin / tr.scale())
            .min(op.margin / op.scale());
    }

    let mut lemma2_all = true;
    for i in 0..500u64 {
        let dim = 2 + (i % 3) as usize;
        let rank_sigma = 1 + (i as usize % dim);
        let sigma = random_state(dim, rank_sigma, derive_seed(0x1AA2, i)).unwrap();
        let rank_rho = 1 + (i as usize % rank_sigma);
        let rho = random_state_in_support(sigma.as_psd(), rank_rho, derive_seed(0x1AA3, i))
            .unwrap();
        let channel = random_channel(dim, 2 + (i % 3) as usize, 2, derive_seed(0x1AA4, i))
            .unwrap();
        lemma2_all &= lemma2_check(&channel, rho.as_psd(), sigma.as_psd()).unwrap();
    }

    let mut worst_lemma3 = 0.0f64;
    for i in 0..500u64 {
        // single-Kraus channels into a larger space leave a nontrivial cokernel
        let dim_in = 2 + (i % 2) as usize;
        let dim_out = dim_in + 1 + (i % 2) as usize;
        let channel = random_channel(dim_in, dim_out, 1, derive_seed(0x1AA5, i)).unwrap();
        let rho = random_state(dim_in, 1 + (i as usize % dim_in), derive_seed(0x1AA6, i))
            .unwrap();
        let n_rho = channel.apply_psd(rho.as_psd()).unwrap();
        let cokernel = support_projector(&n_rho).unwrap().complement();
        let verdict = lemma3_check(&channel, rho.as_psd(), &cokernel).unwrap();
        worst_lemma3 = worst_lemma3.max(verdict.lhs);
    }

    let pass = worst_lemma1 >= -1e-9 && lemma2_all && worst_lemma3 <= 1e-9;
    criterion(
        "support_lemmas",
        pass,
        format!(
            "500 checks each: lemma1 worst normalized margin {worst_lemma1:.3e} >= -1e-9, \
             lemma2 all contained: {lemma2_all}, lemma3 worst pinched norm \
             {worst_lemma3:.3e} <= 1e-9"
        ),
    );
}

fn audit_instances() -> Vec<(PsdMatrix, Channel, PsdMatrix)> {
    let mut out = Vec::new();
    for i in 0..10u64 {
        let seed = derive_seed(0xC4A1A, i);
        let dim = 2 + (i % 3) as usize;
        let deficient = i % 2 == 1;
        let rank_sigma = if deficient { (dim - 1).max(1) } else { dim };
        let sigma = random_state(dim, rank_sigma, derive_seed(seed, 1))
            .unwrap()
            .as_psd()
            .clone();
        let rank_tau = if deficient { 1 } else { dim };
        let tau = random_state_in_support(&sigma, rank_tau, derive_seed(seed, 2))
            .unwrap()
            .as_psd()
            .clone();
        let channel = random_channel(dim, 2, 2, derive_seed(seed, 3)).unwrap();
        out.push((sigma, channel, tau));
    }
    out
}

#[test]
fn proof_chain_audits() {
    let grid = [1e-1, 1e-2, 1e-3];
    let mut worst_margin = f64::INFINITY;
    let mut f_strictly_decreasing = true;
    for (sigma, channel, tau) in audit_instances() {
        for &eps in &grid {
            for &delta in &grid {
                let audit =
                    theorem1_chain_audit(&sigma, &channel, &tau, eps, delta, DEFAULT_TOL_REL)
                        .unwrap();
                for v in &audit.verdicts {
                    assert!(
                        v.pass,
                        "theorem1 step {} failed at eps {eps}, delta {delta}: \
                         lhs {} rhs {}",
                        v.label, v.lhs, v.rhs
                    );
                    worst_margin = worst_margin.min(v.margin / v.scale());
                }
            }
        }
        let fs: Vec<f64> = grid
            .iter()
            .map(|&eps| {
                theorem1_chain_audit(&sigma, &channel, &tau, eps, 1e-2, DEFAULT_TOL_REL)
                    .unwrap()
                    .intermediates
                    .f_eps
            })
            .collect();
        f_strictly_decreasing &= fs.windows(2).all(|w| w[1] < w[0]);
    }

    // strictly positive side
    let mut worst_first_term = 0.0f64;
    for i in 0..10u64 {
        let seed = derive_seed(0xC4A1B, i);
        let dim = 2 + (i % 3) as usize;
        let sigma = random_state(dim, dim, derive_seed(seed, 1))
            .unwrap()
            .as_psd()
            .clone();
        let tau = random_state(dim, dim, derive_seed(seed, 2))
            .unwrap()
            .as_psd()
            .clone();
        let channel = random_channel(dim, 2, 2, derive_seed(seed, 3)).unwrap();
        for &eps in &grid {
            let audit =
                theorem2_chain_audit(&sigma, &channel, &tau, eps, DEFAULT_TOL_REL).unwrap();
            for v in &audit.verdicts {
                assert!(
                    v.pass,
                    "theorem2 step {} failed at eps {eps}: lhs {} rhs {}",
                    v.label, v.lhs, v.rhs
                );
                if v.label == "first_term_equals_trace" {
                    worst_first_term = worst_first_term.max(v.lhs / tau.trace().max(1.0));
                }
            }
        }
    }
    let pass = f_strictly_decreasing && worst_first_term <= 1e-8;
    criterion(
        "proof_chain_audits",
        pass,
        format!(
            "theorem1 grid 3x3 on 10 instances all pass (worst normalized margin \
             {worst_margin:.3e}), f(eps) strictly decreasing: {f_strictly_decreasing}; \
             theorem2 worst first-term relative gap {worst_first_term:.3e} <= 1e-8"
        ),
    );
}

#[test]
fn delta_limit_convergence() {
    let deltas = [1e-2, 1e-4, 1e-6];
    let mut all_decreasing = true;
    let mut count = 0usize;
    for i in 0..100u64 {
        let seed = derive_seed(0xDE17A, i);
        let dim = 2 + (i % 3) as usize;
        // tau genuinely rank-deficient so the regularized block is active
        let rank_tau = 1 + (i as usize % (dim - 1));
        let sigma = random_state(dim, dim, derive_seed(seed, 1))
            .unwrap()
            .as_psd()
            .clone();
        let tau = random_state_in_support(&sigma, rank_tau, derive_seed(seed, 2))
            .unwrap()
            .as_psd()
            .clone();
        let channel = random_channel(dim, 2, 2, derive_seed(seed, 3)).unwrap();
        let limit = ruskai_map_extended(&sigma, &channel, &tau).unwrap();
        let dists: Vec<f64> = deltas
            .iter()
            .map(|&d| {
                let reg = ruskai_map_regularized(&sigma, &channel, &tau, d).unwrap();
                operator_norm(&(reg.matrix() - limit.r_tilde.matrix()))
            })
            .collect();
        all_decreasing &= dists.windows(2).all(|w| w[1] < w[0]);
        count += 1;
    }
    criterion(
        "delta_limit_convergence",
        all_decreasing && count == 100,
        format!("{count} rank-deficient instances, distance decreasing along {deltas:?}"),
    );
}

#[test]
fn sweep_determinism() {
    let config = SweepConfig {
        dims_in: vec![2, 3],
        dims_out: vec![2],
        kraus_counts: vec![2],
        trials_per_cell: 5,
        rank_policy: RankPolicy::Mixed {
            deficient_fraction: 0.4,
        },
        alphas: vec![0.25, 0.5, 0.75, 1.0],
        eps_grid: vec![1e-1, 1e-2],
        delta_grid: vec![1e-2, 1e-4],
        master_seed: 2024,
        tol_rel: None,
        checks: CheckKind::ALL.to_vec(),
    };
    let a = report_to_canonical_json(&run_sweep(&config, 1).unwrap()).unwrap();
    let b = report_to_canonical_json(&run_sweep(&config, 3).unwrap()).unwrap();
    criterion(
        "sweep_determinism",
        a == b,
        format!(
            "two runs (1 and 3 jobs), identical {}-byte reports: {}",
            a.len(),
            a == b
        ),
    );
}
