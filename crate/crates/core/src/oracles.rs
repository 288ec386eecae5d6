//! Standalone numerical verifiers for the inequalities behind the trace
//! bound: the generalized Golden-Thompson inequality, the triple-matrix
//! inequality with exact spectral evaluation of its integral, three support
//! lemmas, and step-by-step audits of both proof chains.
//!
//! Every verifier returns an [`InequalityVerdict`] carrying both sides, the
//! margin `rhs - lhs`, and a pass flag at a tolerance that scales with the
//! magnitude of the quantities involved: `tol = tol_rel * max(1, |lhs|,
//! |rhs|)`. Identity steps inside the proof chains are checked as equalities
//! (deviation against a scaled tolerance) because they catch construction
//! bugs that one-sided inequality checks would mask.

use serde::Serialize;

use crate::channels::{complement_projector, partial_trace, Channel, TraceOut};
use crate::error::{Error, Result};
use crate::linalg::{
    eig_hermitian, log_on_support, matrix_exp, norms, operator_norm, pseudo_inverse_sqrt,
    support_projector, CMat, HermitianMatrix, Projector, PsdMatrix, PROJECTOR_TOL,
};
use crate::rng::kron_with_identity;
use crate::ruskai::{omega, ruskai_map_extended, ruskai_map_strict};

/// Default relative tolerance for verdicts.
pub const DEFAULT_TOL_REL: f64 = 1e-8;
/// Fixed absolute tolerance for the support lemma on adjoint images.
pub const LEMMA3_TOL: f64 = 1e-9;
/// Eigenvalue pairs closer than this (relative to the largest eigenvalue)
/// switch the logarithmic-mean coefficient to its series form.
const LOG_MEAN_SERIES_CUTOFF: f64 = 1e-8;

/// One checked inequality: `lhs <= rhs` within `tol_rel * max(1, |lhs|,
/// |rhs|)`. Equality steps reuse the shape with `lhs` = deviation and `rhs` =
/// allowance.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityVerdict {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    pub pass: bool,
}

impl InequalityVerdict {
    /// Check `lhs <= rhs` at the scaled tolerance.
    pub fn check(label: &str, lhs: f64, rhs: f64, tol_rel: f64) -> Self {
        let margin = rhs - lhs;
        let scale = lhs.abs().max(rhs.abs()).max(1.0);
        InequalityVerdict {
            label: label.to_string(),
            lhs,
            rhs,
            margin,
            pass: margin >= -tol_rel * scale,
        }
    }

    /// Check a proof-step identity: `deviation <= tol_rel * max(1, scale)`.
    pub fn equality(label: &str, deviation: f64, scale: f64, tol_rel: f64) -> Self {
        let rhs = tol_rel * scale.abs().max(1.0);
        InequalityVerdict {
            label: label.to_string(),
            lhs: deviation,
            rhs,
            margin: rhs - deviation,
            pass: deviation <= rhs,
        }
    }

    /// Tolerance-scale of this verdict, `max(1, |lhs|, |rhs|)`.
    pub fn scale(&self) -> f64 {
        self.lhs.abs().max(self.rhs.abs()).max(1.0)
    }
}

/// Which unitarily invariant norm a Golden-Thompson check uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    Operator,
    Trace,
}

fn norm_of(kind: NormKind, m: &CMat) -> f64 {
    let n = norms(m);
    match kind {
        NormKind::Operator => n.operator,
        NormKind::Trace => n.trace,
    }
}

/// Generalized Golden-Thompson: `|||exp(Y + Z)||| <= |||e^{Y/2} e^Z e^{Y/2}|||`
/// for the trace and operator norms. The trace-norm case is the classical
/// `Tr e^{Y+Z} <= Tr e^Y e^Z`.
pub fn golden_thompson(
    y: &HermitianMatrix,
    z: &HermitianMatrix,
    norm: NormKind,
    tol_rel: f64,
) -> Result<InequalityVerdict> {
    if y.dim() != z.dim() {
        return Err(Error::DimensionMismatch {
            context: "golden_thompson",
            expected: y.dim(),
            found: z.dim(),
        });
    }
    let sum = matrix_exp(&(y + z))?;
    let half = matrix_exp(&y.scale(0.5))?;
    let ez = matrix_exp(z)?;
    let product = half.matrix() * ez.matrix() * half.matrix();
    let label = match norm {
        NormKind::Operator => "golden_thompson_operator",
        NormKind::Trace => "golden_thompson_trace",
    };
    Ok(InequalityVerdict::check(
        label,
        norm_of(norm, sum.matrix()),
        norm_of(norm, &product),
        tol_rel,
    ))
}

/// Exact spectral value of `Tr int_0^inf X (Y + t)^{-1} Z (Y + t)^{-1} dt`
/// for strictly positive `Y`: in `Y`'s eigenbasis the integral weights the
/// matrix elements by the inverse logarithmic mean
/// `c_ij = (log l_i - log l_j) / (l_i - l_j)`, `c_ii = 1 / l_i`.
/// Near-degenerate pairs use the series
/// `c = 2/(l_i + l_j) (1 + u^2/3 + u^4/5)`, `u = (l_i - l_j)/(l_i + l_j)`,
/// which avoids the cancellation in the divided difference.
pub fn lieb_triple_rhs(x: &PsdMatrix, y: &PsdMatrix, z: &PsdMatrix) -> Result<f64> {
    if x.dim() != y.dim() || z.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            context: "lieb_triple_rhs",
            expected: y.dim(),
            found: x.dim().max(z.dim()),
        });
    }
    if !y.is_strictly_positive()? {
        return Err(Error::NotStrictlyPositive {
            context: "lieb_triple_rhs: Y",
            min_eigenvalue: y.min_eigenvalue()?,
        });
    }
    let s = eig_hermitian(y.base())?;
    let u = s.eigenvectors();
    let lam = s.eigenvalues();
    let lam_max = s.lambda_max();
    let x_rot = u.adjoint() * x.matrix() * u;
    let z_rot = u.adjoint() * z.matrix() * u;
    let n = y.dim();
    let mut total = 0.0;
    for i in 0..n {
        for j in 0..n {
            let (li, lj) = (lam[i], lam[j]);
            let c = if (li - lj).abs() < LOG_MEAN_SERIES_CUTOFF * lam_max {
                let mean = li + lj;
                let w = (li - lj) / mean;
                (2.0 / mean) * (1.0 + w * w / 3.0 + w.powi(4) / 5.0)
            } else {
                (li.ln() - lj.ln()) / (li - lj)
            };
            total += (x_rot[(i, j)] * z_rot[(j, i)]).re * c;
        }
    }
    Ok(total)
}

/// The triple-matrix inequality
/// `Tr exp(log X - log Y + log Z) <= Tr int_0^inf X (Y+t)^{-1} Z (Y+t)^{-1} dt`
/// for strictly positive `X`, `Y`, `Z`.
pub fn lieb_triple(
    x: &PsdMatrix,
    y: &PsdMatrix,
    z: &PsdMatrix,
    tol_rel: f64,
) -> Result<InequalityVerdict> {
    for (m, name) in [(x, "X"), (y, "Y"), (z, "Z")] {
        if !m.is_strictly_positive()? {
            return Err(Error::NotStrictlyPositive {
                context: match name {
                    "X" => "lieb_triple: X",
                    "Y" => "lieb_triple: Y",
                    _ => "lieb_triple: Z",
                },
                min_eigenvalue: m.min_eigenvalue()?,
            });
        }
    }
    let exponent =
        &(&log_on_support(x)? - &log_on_support(y)?) + &log_on_support(z)?;
    let lhs = matrix_exp(&exponent)?.trace();
    let rhs = lieb_triple_rhs(x, y, z)?;
    Ok(InequalityVerdict::check("lieb_triple", lhs, rhs, tol_rel))
}

/// Both conclusions of the pinched-isometry lemma for a projector `P`,
/// isometry `V` (`V\u{2020}V = 1`), Hermitian `X`, and `delta > 0`:
///
/// * `Tr exp[(P V\u{2020}) X V P + (log delta) P_perp] <= Tr exp(X) + delta Tr P_perp`
/// * `|| exp[...] || <= max(||exp(X)||, delta)`
pub fn lemma1_check(
    p: &Projector,
    v: &CMat,
    x: &HermitianMatrix,
    delta: f64,
    tol_rel: f64,
) -> Result<[InequalityVerdict; 2]> {
    if delta <= 0.0 {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: format!("{delta}"),
            constraint: "delta > 0",
        });
    }
    if v.nrows() != x.dim() || v.ncols() != p.dim() {
        return Err(Error::DimensionMismatch {
            context: "lemma1_check",
            expected: x.dim() * p.dim(),
            found: v.nrows() * v.ncols(),
        });
    }
    let dev = operator_norm(&(v.adjoint() * v - CMat::identity(p.dim(), p.dim())));
    if dev > 1e-8 {
        return Err(Error::NotIsometry { deviation: dev });
    }
    let pinched = HermitianMatrix::symmetrize(
        p.matrix() * v.adjoint() * x.matrix() * v * p.matrix(),
    );
    let p_perp = p.complement();
    let exponent = &pinched + &p_perp.base().scale(delta.ln());
    let e = matrix_exp(&exponent)?;
    let ex = matrix_exp(x)?;
    let trace_verdict = InequalityVerdict::check(
        "lemma1_trace",
        e.trace(),
        ex.trace() + delta * p_perp.base().trace(),
        tol_rel,
    );
    let op_verdict = InequalityVerdict::check(
        "lemma1_operator",
        operator_norm(e.matrix()),
        operator_norm(ex.matrix()).max(delta),
        tol_rel,
    );
    Ok([trace_verdict, op_verdict])
}

/// Support monotonicity: `supp(rho)` inside `supp(sigma)` implies
/// `supp(N(rho))` inside `supp(N(sigma))`. Returns whether the image
/// containment holds numerically.
pub fn lemma2_check(n: &Channel, rho: &PsdMatrix, sigma: &PsdMatrix) -> Result<bool> {
    if !crate::entropies::supports_contained(rho, sigma)? {
        return Err(Error::SupportViolation {
            context: "lemma2_check: supp(rho) must lie inside supp(sigma)",
            leak: f64::NAN,
        });
    }
    let n_rho = n.apply_psd(rho)?;
    let n_sigma = n.apply_psd(sigma)?;
    let pi_perp = support_projector(&n_sigma)?.complement();
    let outside = pi_perp.matrix() * n_rho.matrix() * pi_perp.matrix();
    Ok(operator_norm(&outside) <= 1e-9 * n_rho.trace().max(1.0))
}

/// Orthogonality of adjoint images: for any projector dominated by the
/// complement of `supp(N(rho))`, the pinched adjoint image
/// `Pi_rho N_adj(P) Pi_rho` vanishes. The verdict's left side is its
/// operator norm, checked against the fixed tolerance [`LEMMA3_TOL`].
pub fn lemma3_check(
    n: &Channel,
    rho: &PsdMatrix,
    p_tilde: &Projector,
) -> Result<InequalityVerdict> {
    let n_rho = n.apply_psd(rho)?;
    let pi_n_rho_perp = support_projector(&n_rho)?.complement();
    if !p_tilde.is_dominated_by(&pi_n_rho_perp, PROJECTOR_TOL) {
        return Err(Error::SupportViolation {
            context: "lemma3_check: projector must lie inside the cokernel of N(rho)",
            leak: p_tilde.domination_leak(&pi_n_rho_perp),
        });
    }
    let pi_rho = support_projector(rho)?;
    let pulled = n.adjoint_apply(p_tilde.base())?;
    let pinched = pi_rho.sandwich(&pulled);
    let lhs = operator_norm(pinched.matrix());
    Ok(InequalityVerdict {
        label: "lemma3_adjoint_orthogonality".to_string(),
        lhs,
        rhs: LEMMA3_TOL,
        margin: LEMMA3_TOL - lhs,
        pass: lhs <= LEMMA3_TOL,
    })
}

/// The epsilon/delta scaffolding of the nonnegative-case proof, kept for
/// reporting.
#[derive(Clone, Debug)]
pub struct ProofChainIntermediates {
    /// Smoothed dilation `V (sigma + eps Pi_sigma_perp) V\u{2020} + eps Pi_hat`
    /// on `B (x) E`; strictly positive for `eps > 0`.
    pub sigma1_eps_be: PsdMatrix,
    /// `log[N(tau) + eps Pi_perp] - log sigma1_eps^B` on `B`.
    pub upsilon_eps: HermitianMatrix,
    /// Pinched adjoint difference on `A`.
    pub theta_eps: HermitianMatrix,
    /// `N(Pi_sigma_perp) + Tr_E Pi_hat` on `B`.
    pub x_b: PsdMatrix,
    /// Square root of the pseudo-inverse of `N(sigma)`.
    pub w: HermitianMatrix,
    /// `f(eps) = eps ||W X W|| + eps^{3/4} ||P X W + W X P|| + eps^{1/2} ||P X P||`
    /// with `P` the cokernel projector of `N(sigma)`.
    pub f_eps: f64,
    pub eps: f64,
    pub delta: f64,
}

/// A full audit: the intermediates plus every displayed inequality and
/// identity, in display order.
#[derive(Clone, Debug)]
pub struct ChainAudit {
    pub intermediates: ProofChainIntermediates,
    pub verdicts: Vec<InequalityVerdict>,
}

impl ChainAudit {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn min_margin(&self) -> f64 {
        self.verdicts
            .iter()
            .map(|v| v.margin / v.scale())
            .fold(f64::INFINITY, f64::min)
    }
}

fn frob(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// `f(eps)` from the three norm terms of the second-term chain.
fn f_of_eps(
    eps: f64,
    w: &HermitianMatrix,
    x_b: &PsdMatrix,
    pi_n_sigma_perp: &Projector,
) -> f64 {
    let wxw = w.matrix() * x_b.matrix() * w.matrix();
    let pxw = pi_n_sigma_perp.matrix() * x_b.matrix() * w.matrix()
        + w.matrix() * x_b.matrix() * pi_n_sigma_perp.matrix();
    let pxp = pi_n_sigma_perp.matrix() * x_b.matrix() * pi_n_sigma_perp.matrix();
    eps * operator_norm(&wxw)
        + eps.powf(0.75) * operator_norm(&pxw)
        + eps.sqrt() * operator_norm(&pxp)
}

/// Step-by-step audit of the nonnegative-case trace-inequality proof at a
/// chosen `(eps, delta)`. Builds the smoothed dilation, the pinched
/// logarithmic differences, and `f(eps)`, then checks every displayed
/// inequality and the two identity steps (the pinched rewriting of the
/// adjoint difference, and the pullback of `log sigma1_eps^{BE}` through the
/// isometry) as equalities.
pub fn theorem1_chain_audit(
    sigma: &PsdMatrix,
    n: &Channel,
    tau: &PsdMatrix,
    eps: f64,
    delta: f64,
    tol_rel: f64,
) -> Result<ChainAudit> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: format!("{eps}"),
            constraint: "eps > 0",
        });
    }
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::InvalidParameter {
            name: "delta",
            value: format!("{delta}"),
            constraint: "delta in (0, 1)",
        });
    }
    let om = omega(sigma, n, tau)?; // also enforces the support preconditions
    let mut verdicts = Vec::new();
    let eq_tol = 1e-9f64.max(tol_rel * 0.1);

    let dim_b = n.dim_out();
    let v = n.stinespring();
    let dim_e = v.dim_env();
    let pi_hat = complement_projector(&v);

    let pi_tau = support_projector(tau)?;
    let pi_tau_perp = pi_tau.complement();
    let pi_sigma_perp = support_projector(sigma)?.complement();
    let n_tau = n.apply_psd(tau)?;
    let n_sigma = n.apply_psd(sigma)?;
    let pi_n_tau_perp = support_projector(&n_tau)?.complement();
    let pi_n_sigma = support_projector(&n_sigma)?;
    let pi_n_sigma_perp = pi_n_sigma.complement();

    // sigma1_eps^{BE} = V (sigma + eps Pi_sigma_perp) V' + eps Pi_hat
    let smoothed_sigma = &sigma.base().clone() + &pi_sigma_perp.base().scale(eps);
    let sigma1_be = PsdMatrix::new_unchecked(
        &v.conjugate(&smoothed_sigma)? + &pi_hat.base().scale(eps),
    );
    let sigma1_b = PsdMatrix::new_unchecked(partial_trace(
        sigma1_be.base(),
        dim_b,
        dim_e,
        TraceOut::Second,
    )?);
    // X^B = N(Pi_sigma_perp) + Tr_E Pi_hat, so sigma1^B = N(sigma) + eps X^B
    let x_b = PsdMatrix::new_unchecked(
        &n.apply(pi_sigma_perp.base())?
            + &partial_trace(pi_hat.base(), dim_b, dim_e, TraceOut::Second)?,
    );
    verdicts.push(InequalityVerdict::equality(
        "sigma1_b_decomposition",
        frob(&(sigma1_b.matrix()
            - (n_sigma.matrix() + x_b.matrix() * crate::linalg::C64::new(eps, 0.0)))),
        frob(sigma1_b.matrix()),
        eq_tol,
    ));

    let log_sigma1_b = log_on_support(&sigma1_b)?;
    let smoothed_n_tau = PsdMatrix::new_unchecked(
        &n_tau.base().clone() + &pi_n_tau_perp.base().scale(eps),
    );
    let upsilon = &log_on_support(&smoothed_n_tau)? - &log_sigma1_b;

    // Theta_eps, both forms; their equality is the pinched rewriting that
    // rides on the two support lemmas.
    let log_n_sigma = log_on_support(&n_sigma)?;
    let theta_form1 = pi_tau.sandwich(&n.adjoint_apply(
        &(&(&pi_n_tau_perp.base().scale(-eps.ln()) + &log_sigma1_b) - &log_n_sigma),
    )?);
    let smoothed_n_sigma = PsdMatrix::new_unchecked(
        &n_sigma.base().clone() + &pi_n_sigma_perp.base().scale(eps.sqrt()),
    );
    let theta_form2 =
        pi_tau.sandwich(&n.adjoint_apply(&(&log_sigma1_b - &log_on_support(&smoothed_n_sigma)?))?);
    verdicts.push(InequalityVerdict::equality(
        "theta_eps_pinched_identity",
        operator_norm(&(theta_form1.matrix() - theta_form2.matrix())),
        operator_norm(theta_form2.matrix()).max(1.0),
        eq_tol,
    ));
    let theta_eps = theta_form2;

    // P = Pi_tau [log sigma + N_adj(Upsilon)] Pi_tau; together with Theta_eps
    // it reassembles the extended-map exponent.
    let p_term = pi_tau.sandwich(&(&log_on_support(sigma)? + &n.adjoint_apply(&upsilon)?));
    verdicts.push(InequalityVerdict::equality(
        "omega_reassembly",
        operator_norm(&((&p_term + &theta_eps).matrix() - om.matrix())),
        operator_norm(om.matrix()).max(1.0),
        eq_tol,
    ));

    // Pullback identity through the isometry:
    // (Pi_tau V') log sigma1^{BE} (V Pi_tau) = Pi_tau log sigma Pi_tau.
    let log_sigma1_be = log_on_support(&sigma1_be)?;
    let pulled_log = HermitianMatrix::symmetrize(
        pi_tau.matrix()
            * v.matrix().adjoint()
            * log_sigma1_be.matrix()
            * v.matrix()
            * pi_tau.matrix(),
    );
    let pinched_log_sigma = pi_tau.sandwich(&log_on_support(sigma)?);
    verdicts.push(InequalityVerdict::equality(
        "log_sigma_pullback_identity",
        operator_norm(&(pulled_log.matrix() - pinched_log_sigma.matrix())),
        operator_norm(pinched_log_sigma.matrix()).max(1.0),
        eq_tol,
    ));

    // Split Tr R_{delta^2} by Golden-Thompson and the operator-norm bound.
    let ln_delta_perp = pi_tau_perp.base().scale(delta.ln());
    let a_mat = &p_term + &ln_delta_perp;
    let b_mat = &theta_eps + &ln_delta_perp;
    let full_exponent = &(&a_mat + &theta_eps) + &ln_delta_perp; // Omega + 2 ln(delta) Pi_perp
    let lhs_trace = matrix_exp(&full_exponent)?.trace();
    let e_a = matrix_exp(&a_mat)?;
    let e_b = matrix_exp(&b_mat)?;
    let product_trace = (e_a.matrix() * e_b.matrix()).trace().re;
    verdicts.push(InequalityVerdict::check(
        "split_golden_thompson",
        lhs_trace,
        product_trace,
        tol_rel,
    ));
    let b_norm = operator_norm(e_b.matrix());
    verdicts.push(InequalityVerdict::check(
        "split_operator_norm",
        product_trace,
        e_a.trace() * b_norm,
        tol_rel,
    ));

    // First-term chain.
    let upsilon_lifted = kron_with_identity(upsilon.matrix(), dim_e);
    let first_arg = HermitianMatrix::symmetrize(log_sigma1_be.matrix() + &upsilon_lifted);
    let pinched_first = HermitianMatrix::symmetrize(
        pi_tau.matrix() * v.matrix().adjoint() * first_arg.matrix() * v.matrix()
            * pi_tau.matrix(),
    );
    verdicts.push(InequalityVerdict::equality(
        "first_term_isometry_identity",
        operator_norm(&((&pinched_first + &ln_delta_perp).matrix() - a_mat.matrix())),
        operator_norm(a_mat.matrix()).max(1.0),
        eq_tol,
    ));
    let tr_pi_tau_perp = pi_tau_perp.base().trace();
    let first_exp_trace = matrix_exp(&first_arg)?.trace();
    verdicts.push(InequalityVerdict::check(
        "first_term_pinch_bound",
        e_a.trace(),
        first_exp_trace + delta * tr_pi_tau_perp,
        tol_rel,
    ));
    let lifted_sigma1_b = PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(
        kron_with_identity(sigma1_b.matrix(), dim_e),
    ));
    let lifted_smoothed_n_tau = PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(
        kron_with_identity(smoothed_n_tau.matrix(), dim_e),
    ));
    let first_integral = lieb_triple_rhs(&sigma1_be, &lifted_sigma1_b, &lifted_smoothed_n_tau)?;
    verdicts.push(InequalityVerdict::check(
        "first_term_triple_matrix",
        first_exp_trace,
        first_integral,
        tol_rel,
    ));
    let tr_pi_n_tau_perp = pi_n_tau_perp.base().trace();
    let first_closed = tau.trace() + eps * tr_pi_n_tau_perp;
    verdicts.push(InequalityVerdict::equality(
        "first_term_integral_value",
        (first_integral - first_closed).abs(),
        first_closed,
        1e-8f64.max(tol_rel),
    ));
    let first_bound = first_closed + delta * tr_pi_tau_perp;
    verdicts.push(InequalityVerdict::check(
        "first_term_chain",
        e_a.trace(),
        first_bound,
        tol_rel,
    ));

    // Second-term chain.
    let diff = &log_sigma1_b - &log_on_support(&smoothed_n_sigma)?;
    let lifted_diff = HermitianMatrix::symmetrize(kron_with_identity(diff.matrix(), dim_e));
    let pinched_second = HermitianMatrix::symmetrize(
        pi_tau.matrix() * v.matrix().adjoint() * lifted_diff.matrix() * v.matrix()
            * pi_tau.matrix(),
    );
    verdicts.push(InequalityVerdict::equality(
        "second_term_isometry_identity",
        operator_norm(&((&pinched_second + &ln_delta_perp).matrix() - b_mat.matrix())),
        operator_norm(b_mat.matrix()).max(1.0),
        eq_tol,
    ));
    let second_unpinched = operator_norm(matrix_exp(&diff)?.matrix());
    verdicts.push(InequalityVerdict::check(
        "second_term_pinch_bound",
        b_norm,
        second_unpinched.max(delta),
        tol_rel,
    ));
    let w = pseudo_inverse_sqrt(&n_sigma)?;
    let whitener = HermitianMatrix::symmetrize(
        w.matrix() + pi_n_sigma_perp.matrix() * crate::linalg::C64::new(eps.powf(-0.25), 0.0),
    );
    let sandwiched = HermitianMatrix::symmetrize(
        whitener.matrix() * sigma1_b.matrix() * whitener.matrix(),
    );
    let sandwiched_norm = operator_norm(sandwiched.matrix());
    verdicts.push(InequalityVerdict::check(
        "second_term_golden_thompson",
        second_unpinched,
        sandwiched_norm,
        tol_rel,
    ));
    // The expansion of the sandwich in powers of eps.
    let wxw = HermitianMatrix::symmetrize(w.matrix() * x_b.matrix() * w.matrix());
    let cross = HermitianMatrix::symmetrize(
        pi_n_sigma_perp.matrix() * x_b.matrix() * w.matrix()
            + w.matrix() * x_b.matrix() * pi_n_sigma_perp.matrix(),
    );
    let pxp = pi_n_sigma_perp.sandwich(x_b.base());
    let expansion = &(&(&pi_n_sigma.base().clone() + &wxw.scale(eps))
        + &cross.scale(eps.powf(0.75)))
        + &pxp.scale(eps.sqrt());
    verdicts.push(InequalityVerdict::equality(
        "second_term_expansion_identity",
        operator_norm(&(sandwiched.matrix() - expansion.matrix())),
        operator_norm(expansion.matrix()).max(1.0),
        eq_tol,
    ));
    let f_eps = f_of_eps(eps, &w, &x_b, &pi_n_sigma_perp);
    verdicts.push(InequalityVerdict::check(
        "second_term_triangle",
        sandwiched_norm,
        (1.0 + f_eps).max(delta),
        tol_rel,
    ));
    verdicts.push(InequalityVerdict::check(
        "second_term_chain",
        b_norm,
        (1.0 + f_eps).max(delta),
        tol_rel,
    ));

    // Assembled bound at (eps, delta), and its eps-only limit form against
    // the extended map itself.
    let assembled = first_bound * (1.0 + f_eps).max(delta);
    verdicts.push(InequalityVerdict::check(
        "assembled_bound",
        lhs_trace,
        assembled,
        tol_rel,
    ));
    let extended = ruskai_map_extended(sigma, n, tau)?;
    verdicts.push(InequalityVerdict::check(
        "limit_bound",
        extended.theta,
        first_closed * (1.0 + f_eps),
        tol_rel,
    ));

    Ok(ChainAudit {
        intermediates: ProofChainIntermediates {
            sigma1_eps_be: sigma1_be,
            upsilon_eps: upsilon,
            theta_eps,
            x_b,
            w,
            f_eps,
            eps,
            delta,
        },
        verdicts,
    })
}

/// Audit of the strictly positive proof chain.
#[derive(Clone, Debug)]
pub struct StrictChainAudit {
    pub verdicts: Vec<InequalityVerdict>,
    /// `(Tr tau) { 1 + eps || N(sigma)^{-1/2} X^B N(sigma)^{-1/2} || }`.
    pub final_bound: f64,
    pub eps: f64,
}

impl StrictChainAudit {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }
}

/// Step-by-step audit of the strictly positive proof at a chosen `eps`.
/// Requires `sigma`, `N(tau)`, `N(sigma)` strictly positive.
pub fn theorem2_chain_audit(
    sigma: &PsdMatrix,
    n: &Channel,
    tau: &PsdMatrix,
    eps: f64,
    tol_rel: f64,
) -> Result<StrictChainAudit> {
    if !(eps > 0.0) {
        return Err(Error::InvalidParameter {
            name: "eps",
            value: format!("{eps}"),
            constraint: "eps > 0",
        });
    }
    let strict = ruskai_map_strict(sigma, n, tau)?; // enforces positivity
    let mut verdicts = Vec::new();
    let eq_tol = 1e-9f64.max(tol_rel * 0.1);

    let dim_b = n.dim_out();
    let v = n.stinespring();
    let dim_e = v.dim_env();
    let pi_hat = complement_projector(&v);
    let n_tau = n.apply_psd(tau)?;
    let n_sigma = n.apply_psd(sigma)?;

    // sigma1_eps^{BE} = V sigma V' + eps Pi_hat
    let sigma1_be =
        PsdMatrix::new_unchecked(&v.conjugate(sigma.base())? + &pi_hat.base().scale(eps));
    let sigma1_b = PsdMatrix::new_unchecked(partial_trace(
        sigma1_be.base(),
        dim_b,
        dim_e,
        TraceOut::Second,
    )?);
    let x_b = PsdMatrix::new_unchecked(partial_trace(
        pi_hat.base(),
        dim_b,
        dim_e,
        TraceOut::Second,
    )?);
    verdicts.push(InequalityVerdict::equality(
        "sigma1_b_decomposition",
        frob(&(sigma1_b.matrix()
            - (n_sigma.matrix() + x_b.matrix() * crate::linalg::C64::new(eps, 0.0)))),
        frob(sigma1_b.matrix()),
        eq_tol,
    ));

    let log_sigma1_b = log_on_support(&sigma1_b)?;
    let log_n_tau = log_on_support(&n_tau)?;
    let log_n_sigma = log_on_support(&n_sigma)?;
    let upsilon = &log_n_tau - &log_sigma1_b;
    let y_mat = &log_on_support(sigma)? + &n.adjoint_apply(&upsilon)?;
    let z_mat = n.adjoint_apply(&(&log_sigma1_b - &log_n_sigma))?;
    verdicts.push(InequalityVerdict::equality(
        "exponent_identity",
        operator_norm(&((&y_mat + &z_mat).matrix() - strict.omega.matrix())),
        operator_norm(strict.omega.matrix()).max(1.0),
        eq_tol,
    ));

    let lhs_trace = strict.theta;
    let e_y = matrix_exp(&y_mat)?;
    let e_z = matrix_exp(&z_mat)?;
    let product_trace = (e_y.matrix() * e_z.matrix()).trace().re;
    verdicts.push(InequalityVerdict::check(
        "split_golden_thompson",
        lhs_trace,
        product_trace,
        tol_rel,
    ));
    let z_norm = operator_norm(e_z.matrix());
    verdicts.push(InequalityVerdict::check(
        "split_operator_norm",
        product_trace,
        e_y.trace() * z_norm,
        tol_rel,
    ));

    // First-term chain.
    let log_sigma1_be = log_on_support(&sigma1_be)?;
    let upsilon_lifted = kron_with_identity(upsilon.matrix(), dim_e);
    let first_arg = HermitianMatrix::symmetrize(log_sigma1_be.matrix() + &upsilon_lifted);
    let pulled = v.conjugate_adjoint(&first_arg)?;
    verdicts.push(InequalityVerdict::equality(
        "first_term_isometry_identity",
        operator_norm(&(pulled.matrix() - y_mat.matrix())),
        operator_norm(y_mat.matrix()).max(1.0),
        eq_tol,
    ));
    let first_exp_trace = matrix_exp(&first_arg)?.trace();
    verdicts.push(InequalityVerdict::check(
        "first_term_isometry_bound",
        e_y.trace(),
        first_exp_trace,
        tol_rel,
    ));
    let lifted_sigma1_b = PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(
        kron_with_identity(sigma1_b.matrix(), dim_e),
    ));
    let lifted_n_tau = PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(
        kron_with_identity(n_tau.matrix(), dim_e),
    ));
    let first_integral = lieb_triple_rhs(&sigma1_be, &lifted_sigma1_b, &lifted_n_tau)?;
    verdicts.push(InequalityVerdict::check(
        "first_term_triple_matrix",
        first_exp_trace,
        first_integral,
        tol_rel,
    ));
    verdicts.push(InequalityVerdict::equality(
        "first_term_equals_trace",
        (first_integral - tau.trace()).abs(),
        tau.trace(),
        1e-8f64.max(tol_rel),
    ));

    // Second-term chain.
    let diff = &log_sigma1_b - &log_n_sigma;
    let lifted_diff = HermitianMatrix::symmetrize(kron_with_identity(diff.matrix(), dim_e));
    let pulled_diff = v.conjugate_adjoint(&lifted_diff)?;
    verdicts.push(InequalityVerdict::equality(
        "second_term_isometry_identity",
        operator_norm(&(pulled_diff.matrix() - z_mat.matrix())),
        operator_norm(z_mat.matrix()).max(1.0),
        eq_tol,
    ));
    let second_unpinched = operator_norm(matrix_exp(&diff)?.matrix());
    verdicts.push(InequalityVerdict::check(
        "second_term_isometry_bound",
        z_norm,
        second_unpinched,
        tol_rel,
    ));
    let w = pseudo_inverse_sqrt(&n_sigma)?;
    let whitened = HermitianMatrix::symmetrize(
        w.matrix() * sigma1_b.matrix() * w.matrix(),
    );
    let whitened_norm = operator_norm(whitened.matrix());
    verdicts.push(InequalityVerdict::check(
        "second_term_golden_thompson",
        second_unpinched,
        whitened_norm,
        tol_rel,
    ));
    let wxw = HermitianMatrix::symmetrize(w.matrix() * x_b.matrix() * w.matrix());
    let second_closed = 1.0 + eps * operator_norm(wxw.matrix());
    verdicts.push(InequalityVerdict::equality(
        "second_term_norm_value",
        (whitened_norm - second_closed).abs(),
        second_closed,
        eq_tol,
    ));

    let final_bound = tau.trace() * second_closed;
    verdicts.push(InequalityVerdict::check(
        "assembled_bound",
        lhs_trace,
        final_bound,
        tol_rel,
    ));

    Ok(StrictChainAudit {
        verdicts,
        final_bound,
        eps,
    })
}
