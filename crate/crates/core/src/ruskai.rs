//! The Ruskai recovery map in its strictly positive and extended nonnegative
//! forms, the delta-regularized family, the trace-inequality margin, and the
//! remainder decomposition with its Renyi lower bounds.
//!
//! The strictly positive map is
//! `R(tau) = exp{log sigma + N_adj[log N(tau) - log N(sigma)]}`.
//! The extended map replaces every logarithm by its support-restricted
//! version, conjugates the exponent by the support projector of `tau`, and
//! takes the closed form of the `delta -> 0` limit:
//! `R(tau) = Pi_tau exp[Omega] Pi_tau`. Because the exponent is built as
//! `Pi_tau (...) Pi_tau` it is block-diagonal with respect to `supp(tau)`,
//! so the sandwiched full-space exponential equals the exponential of the
//! restriction, embedded back.

use crate::channels::{Channel, DensityMatrix};
use crate::entropies::{relative_entropy_psd, remainder, renyi_relative_entropy_psd, EntropyValue};
use crate::error::{Error, Result};
use crate::linalg::{
    log_on_support, matrix_exp, operator_norm, support_projector, HermitianMatrix, PsdMatrix,
};

/// Output of the recovery map: the exponent, the mapped matrix, its trace,
/// and the trace-inequality margin `Tr tau - Tr R(tau)`.
#[derive(Clone, Debug)]
pub struct RuskaiResult {
    /// Exponent of the map (support-restricted for the extended form).
    pub omega: HermitianMatrix,
    /// The recovered matrix.
    pub r_tilde: PsdMatrix,
    /// `Tr R(tau)`; at most `Tr tau` up to rounding, and at most 1 for a
    /// density-matrix input.
    pub theta: f64,
    /// `Tr tau - Tr R(tau)`.
    pub margin: f64,
}

fn check_support(tau: &PsdMatrix, sigma: &PsdMatrix, context: &'static str) -> Result<()> {
    if !crate::entropies::supports_contained(tau, sigma)? {
        return Err(Error::SupportViolation {
            context,
            leak: support_leak_value(tau, sigma)?,
        });
    }
    Ok(())
}

fn support_leak_value(tau: &PsdMatrix, sigma: &PsdMatrix) -> Result<f64> {
    let pi_perp = support_projector(sigma)?.complement();
    Ok((pi_perp.matrix() * tau.matrix()).trace().re.max(0.0))
}

fn ensure_strictly_positive(x: &PsdMatrix, context: &'static str) -> Result<()> {
    if !x.is_strictly_positive()? {
        return Err(Error::NotStrictlyPositive {
            context,
            min_eigenvalue: x.min_eigenvalue()?,
        });
    }
    Ok(())
}

/// The exponent of the extended map:
/// `Omega = Pi_tau { log sigma + N_adj[ log N(tau) - log N(sigma) ] } Pi_tau`
/// with every logarithm restricted to its own support. Requires
/// `supp(tau) <= supp(sigma)`.
pub fn omega(sigma: &PsdMatrix, n: &Channel, tau: &PsdMatrix) -> Result<HermitianMatrix> {
    check_support(tau, sigma, "omega: supp(tau) must lie inside supp(sigma)")?;
    let n_tau = n.apply_psd(tau)?;
    let n_sigma = n.apply_psd(sigma)?;
    // supp N(tau) <= supp N(sigma) follows from the support precondition;
    // a violation here means the inputs were inconsistent beyond tolerance.
    check_support(
        &n_tau,
        &n_sigma,
        "omega: supp(N(tau)) must lie inside supp(N(sigma))",
    )?;
    let log_sigma = log_on_support(sigma)?;
    let log_n_tau = log_on_support(&n_tau)?;
    let log_n_sigma = log_on_support(&n_sigma)?;
    let pulled = n.adjoint_apply(&(&log_n_tau - &log_n_sigma))?;
    let pi_tau = support_projector(tau)?;
    Ok(pi_tau.sandwich(&(&log_sigma + &pulled)))
}

/// The strictly positive map of the original form, with unrestricted
/// logarithms. Requires `sigma`, `N(tau)`, `N(sigma)` strictly positive;
/// rank-deficient inputs get an error directing to the extended map.
pub fn ruskai_map_strict(sigma: &PsdMatrix, n: &Channel, tau: &PsdMatrix) -> Result<RuskaiResult> {
    ensure_strictly_positive(sigma, "ruskai_map_strict: sigma")?;
    let n_tau = n.apply_psd(tau)?;
    let n_sigma = n.apply_psd(sigma)?;
    ensure_strictly_positive(&n_tau, "ruskai_map_strict: N(tau)")?;
    ensure_strictly_positive(&n_sigma, "ruskai_map_strict: N(sigma)")?;
    let log_sigma = log_on_support(sigma)?;
    let pulled = n.adjoint_apply(&(&log_on_support(&n_tau)? - &log_on_support(&n_sigma)?))?;
    let exponent = &log_sigma + &pulled;
    let r_tilde = matrix_exp(&exponent)?;
    let theta = r_tilde.trace();
    Ok(RuskaiResult {
        omega: exponent,
        r_tilde,
        theta,
        margin: tau.trace() - theta,
    })
}

/// The extended map for nonnegative inputs:
/// `R(tau) = Pi_tau exp[Omega] Pi_tau`, the closed form of the
/// delta-regularized limit. Coincides with [`ruskai_map_strict`] when all
/// matrices are strictly positive.
pub fn ruskai_map_extended(
    sigma: &PsdMatrix,
    n: &Channel,
    tau: &PsdMatrix,
) -> Result<RuskaiResult> {
    let exponent = omega(sigma, n, tau)?;
    let pi_tau = support_projector(tau)?;
    let full = matrix_exp(&exponent)?;
    let r_tilde = PsdMatrix::new_unchecked(pi_tau.sandwich(full.base()));
    let theta = r_tilde.trace();
    Ok(RuskaiResult {
        omega: exponent,
        r_tilde,
        theta,
        margin: tau.trace() - theta,
    })
}

/// The delta-regularized map
/// `R_delta(tau) = exp[Omega + (log delta) Pi_tau_perp]`, a strictly positive
/// matrix converging to the extended map as `delta -> 0`. Exists for limit
/// studies; the extended map itself is computed in closed form, never by a
/// numerical limit.
pub fn ruskai_map_regularized(
    sigma: &PsdMatrix,
    n: &Channel,
    tau: &PsdMatrix,
    delta: f64,
) -> Result<PsdMatrix> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: format!("{delta}"),
            constraint: "delta in (0, 1]",
        });
    }
    let exponent = omega(sigma, n, tau)?;
    let pi_perp = support_projector(tau)?.complement();
    let regularized = &exponent + &pi_perp.base().scale(delta.ln());
    matrix_exp(&regularized)
}

/// The remainder split into its two nonnegative pieces:
/// `Delta = S[rho || R(rho)/Theta] - log Theta`, with the identity residual.
#[derive(Clone, Copy, Debug)]
pub struct Decomposition {
    /// The monotonicity remainder `Delta(rho, sigma, N)`.
    pub delta: f64,
    /// `S[rho || R(rho)/Theta]`, nonnegative by Klein's inequality.
    pub term_klein: f64,
    /// `-log Theta`, nonnegative because `Theta <= 1`.
    pub term_log_theta: f64,
    /// `Delta - (term_klein + term_log_theta)`; zero up to rounding.
    pub residual: f64,
    /// `Theta = Tr R(rho)`.
    pub theta: f64,
}

/// Verify the decomposition of the remainder into two nonnegative terms.
pub fn decomposition_check(
    rho: &DensityMatrix,
    sigma: &PsdMatrix,
    n: &Channel,
) -> Result<Decomposition> {
    check_support(
        rho.as_psd(),
        sigma,
        "decomposition: supp(rho) must lie inside supp(sigma)",
    )?;
    let delta = match remainder(rho, sigma, n)? {
        EntropyValue::Finite(d) => d,
        EntropyValue::Infinite => {
            return Err(Error::SupportViolation {
                context: "decomposition: remainder is infinite",
                leak: f64::NAN,
            })
        }
    };
    let r = ruskai_map_extended(sigma, n, rho.as_psd())?;
    let normalized = r.r_tilde.scale(1.0 / r.theta)?;
    let term_klein = relative_entropy_psd(rho.as_psd(), &normalized)?
        .expect_finite("S[rho || R(rho)/Theta]: supports coincide");
    let term_log_theta = -r.theta.ln();
    Ok(Decomposition {
        delta,
        term_klein,
        term_log_theta,
        residual: delta - (term_klein + term_log_theta),
        theta: r.theta,
    })
}

/// Tolerances for the equality test; the remainder is second order in the
/// fixed-point perturbation, so the two are coupled rather than shared.
#[derive(Clone, Copy, Debug)]
pub struct EqualityTolerances {
    pub delta: f64,
    pub fixed_point: f64,
}

impl Default for EqualityTolerances {
    fn default() -> Self {
        EqualityTolerances {
            delta: 1e-9,
            fixed_point: 1e-6,
        }
    }
}

/// Outcome of the equality test: vanishing remainder iff fixed point.
#[derive(Clone, Copy, Debug)]
pub struct EqualityFlags {
    pub delta_zero: bool,
    pub fixed_point: bool,
    pub delta: f64,
    /// `|| rho - R(rho) ||` in operator norm.
    pub residual: f64,
}

/// Check both sides of the equality condition: `Delta = 0` iff
/// `rho = R(rho)`, each at its own tolerance.
pub fn equality_check(
    rho: &DensityMatrix,
    sigma: &PsdMatrix,
    n: &Channel,
    tols: EqualityTolerances,
) -> Result<EqualityFlags> {
    check_support(
        rho.as_psd(),
        sigma,
        "equality check: supp(rho) must lie inside supp(sigma)",
    )?;
    let delta = remainder(rho, sigma, n)?.expect_finite("remainder finite under containment");
    let r = ruskai_map_extended(sigma, n, rho.as_psd())?;
    let residual = operator_norm(&(rho.matrix() - r.r_tilde.matrix()));
    Ok(EqualityFlags {
        delta_zero: delta.abs() <= tols.delta,
        fixed_point: residual <= tols.fixed_point,
        delta,
        residual,
    })
}

/// One Renyi lower bound on the remainder.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct RenyiBound {
    pub alpha: f64,
    /// `S_alpha(rho || R(rho))`.
    pub bound: f64,
    /// `Delta - bound`, nonnegative up to rounding.
    pub slack: f64,
}

/// The family `Delta >= S_alpha[rho || R(rho)]` for `alpha` in `(0, 1]`.
/// At `alpha = 1` the bound is exactly the remainder; at `alpha = 1/2` it is
/// `-2 log F(rho, R(rho))`.
pub fn renyi_lower_bounds(
    rho: &DensityMatrix,
    sigma: &PsdMatrix,
    n: &Channel,
    alphas: &[f64],
) -> Result<Vec<RenyiBound>> {
    for &alpha in alphas {
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(Error::InvalidParameter {
                name: "alpha",
                value: format!("{alpha}"),
                constraint: "renyi lower bounds require alpha in (0, 1]",
            });
        }
    }
    check_support(
        rho.as_psd(),
        sigma,
        "renyi bounds: supp(rho) must lie inside supp(sigma)",
    )?;
    let delta = remainder(rho, sigma, n)?.expect_finite("remainder finite under containment");
    let r = ruskai_map_extended(sigma, n, rho.as_psd())?;
    alphas
        .iter()
        .map(|&alpha| {
            let bound = renyi_relative_entropy_psd(alpha, rho.as_psd(), &r.r_tilde)?
                .expect_finite("S_alpha(rho || R(rho)): supports coincide");
            Ok(RenyiBound {
                alpha,
                bound,
                slack: delta - bound,
            })
        })
        .collect()
}
