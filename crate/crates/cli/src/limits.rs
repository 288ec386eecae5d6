//! Epsilon/delta limit studies: how fast the regularized map approaches the
//! extended map, and how the chain-audit slack `f(eps)` decays.

use til_core::io::Instance;
use til_core::{
    operator_norm, ruskai_map_extended, ruskai_map_regularized, theorem1_chain_audit,
};

/// One row of the study: the grid point, `f(eps)`, the trace and distance of
/// the regularized map, and the worst normalized chain margin at this point.
#[derive(Clone, Copy, Debug)]
pub struct LimitRow {
    pub eps: f64,
    pub delta: f64,
    pub f_eps: f64,
    pub tr_r_delta: f64,
    pub op_distance_to_limit: f64,
    pub min_chain_margin: f64,
}

#[derive(Clone, Debug)]
pub struct LimitStudy {
    pub rows: Vec<LimitRow>,
    /// `f(eps)` nonincreasing along the eps grid (strict when positive).
    pub f_monotone: bool,
    /// Distance to the limit nonincreasing along the delta grid.
    pub distance_monotone: bool,
}

fn strictly_decreasing(grid: &[f64]) -> bool {
    !grid.is_empty() && grid.iter().all(|&v| v > 0.0) && grid.windows(2).all(|w| w[0] > w[1])
}

/// Evaluate the cross product of the two grids. Rows are ordered eps-major in
/// grid order.
pub fn limit_study(
    instance: &Instance,
    eps_grid: &[f64],
    delta_grid: &[f64],
    tol_rel: f64,
) -> Result<LimitStudy, String> {
    if !strictly_decreasing(eps_grid) {
        return Err("eps grid must be strictly decreasing and positive".into());
    }
    if !strictly_decreasing(delta_grid) || delta_grid.iter().any(|&d| d >= 1.0) {
        return Err("delta grid must be strictly decreasing inside (0, 1)".into());
    }
    let sigma = &instance.sigma;
    let tau = &instance.tau;
    let n = &instance.channel;
    let limit = ruskai_map_extended(sigma, n, tau).map_err(|e| e.to_string())?;

    // delta-dependent columns are shared across eps rows
    let mut per_delta = Vec::with_capacity(delta_grid.len());
    for &delta in delta_grid {
        let reg = ruskai_map_regularized(sigma, n, tau, delta).map_err(|e| e.to_string())?;
        let dist = operator_norm(&(reg.matrix() - limit.r_tilde.matrix()));
        per_delta.push((reg.trace(), dist));
    }

    let mut rows = Vec::with_capacity(eps_grid.len() * delta_grid.len());
    let mut f_per_eps = Vec::with_capacity(eps_grid.len());
    for &eps in eps_grid {
        let mut f_here = None;
        for (d_idx, &delta) in delta_grid.iter().enumerate() {
            let audit = theorem1_chain_audit(sigma, n, tau, eps, delta, tol_rel)
                .map_err(|e| e.to_string())?;
            let f_eps = audit.intermediates.f_eps;
            f_here = Some(f_eps);
            rows.push(LimitRow {
                eps,
                delta,
                f_eps,
                tr_r_delta: per_delta[d_idx].0,
                op_distance_to_limit: per_delta[d_idx].1,
                min_chain_margin: audit.min_margin(),
            });
        }
        f_per_eps.push(f_here.expect("delta grid is nonempty"));
    }

    let f_monotone = f_per_eps
        .windows(2)
        .all(|w| w[1] <= w[0] + 1e-12 && (w[0] == 0.0 || w[1] < w[0] + 1e-12));
    let distance_monotone = per_delta
        .windows(2)
        .all(|w| w[1].1 <= w[0].1 + 1e-12);

    Ok(LimitStudy {
        rows,
        f_monotone,
        distance_monotone,
    })
}

/// RFC-4180 CSV with a header row.
pub fn write_csv<W: std::io::Write>(study: &LimitStudy, writer: W) -> Result<(), String> {
    let mut w = csv::Writer::from_writer(writer);
    w.write_record([
        "eps",
        "delta",
        "f_eps",
        "tr_r_delta",
        "op_distance_to_limit",
        "min_chain_margin",
    ])
    .map_err(|e| e.to_string())?;
    for row in &study.rows {
        w.write_record([
            row.eps.to_string(),
            row.delta.to_string(),
            row.f_eps.to_string(),
            row.tr_r_delta.to_string(),
            row.op_distance_to_limit.to_string(),
            row.min_chain_margin.to_string(),
        ])
        .map_err(|e| e.to_string())?;
    }
    w.flush().map_err(|e| e.to_string())
}
