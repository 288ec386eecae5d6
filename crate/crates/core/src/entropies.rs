//! Relative entropy, the Renyi family, fidelity, and the monotonicity
//! remainder, all in nats and all support-aware.
//!
//! Divergences of rank-deficient arguments follow the `0 log 0 = 0`
//! convention: logarithms and powers are taken on the support. A failed
//! support condition is a value, not an error: it comes back as
//! [`EntropyValue::Infinite`], a tagged sentinel that never enters float
//! arithmetic.

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::channels::{Channel, DensityMatrix};
use crate::error::{Error, Result};
use crate::linalg::{
    eig_hermitian, log_on_support, psd_power, trace_norm, PsdMatrix, SUPPORT_TOL,
};

/// Extended real in nats: finite, or the `+infinity` of a failed support
/// condition.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum EntropyValue {
    Finite(f64),
    Infinite,
}

impl EntropyValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, EntropyValue::Finite(_))
    }

    pub fn finite(&self) -> Option<f64> {
        match self {
            EntropyValue::Finite(v) => Some(*v),
            EntropyValue::Infinite => None,
        }
    }

    /// Panics on the infinite sentinel; for contexts where finiteness was
    /// already established.
    pub fn expect_finite(&self, context: &str) -> f64 {
        self.finite()
            .unwrap_or_else(|| panic!("expected finite entropy value in {context}"))
    }
}

impl std::fmt::Display for EntropyValue {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            EntropyValue::Finite(v) => write!(f, "{v}"),
            EntropyValue::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for EntropyValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            EntropyValue::Finite(v) => serializer.serialize_f64(*v),
            EntropyValue::Infinite => serializer.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for EntropyValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct V;
        impl<'de> Visitor<'de> for V {
            type Value = EntropyValue;
            fn expecting(&self, f: &mut std::fmt::Formatter) -> std::fmt::Result {
                f.write_str("a finite number or the string \"inf\"")
            }
            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<EntropyValue, E> {
                Ok(EntropyValue::Finite(v))
            }
            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<EntropyValue, E> {
                Ok(EntropyValue::Finite(v as f64))
            }
            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<EntropyValue, E> {
                Ok(EntropyValue::Finite(v as f64))
            }
            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<EntropyValue, E> {
                if v == "inf" {
                    Ok(EntropyValue::Infinite)
                } else {
                    Err(E::custom("expected \"inf\""))
                }
            }
        }
        d.deserialize_any(V)
    }
}

fn ensure_same_dim(a: usize, b: usize, context: &'static str) -> Result<()> {
    if a != b {
        return Err(Error::DimensionMismatch {
            context,
            expected: a,
            found: b,
        });
    }
    Ok(())
}

/// Weight of `rho` outside the support of `sigma`, `Tr(Pi_sigma_perp rho)`.
fn support_leak(rho: &PsdMatrix, sigma: &PsdMatrix) -> Result<f64> {
    let s = eig_hermitian(sigma.base())?;
    let th = sigma.rank_threshold(s.lambda_max());
    let pi_perp = s.projector_onto(|l| l <= th);
    Ok((pi_perp.matrix() * rho.matrix()).trace().re.max(0.0))
}

pub(crate) fn supports_contained(rho: &PsdMatrix, sigma: &PsdMatrix) -> Result<bool> {
    let leak = support_leak(rho, sigma)?;
    Ok(leak <= SUPPORT_TOL * rho.trace().max(1.0))
}

/// Relative entropy for general nonnegative arguments,
/// `Tr rho (log rho - log sigma)` with support-restricted logarithms, and the
/// infinite sentinel when `supp(rho)` is not contained in `supp(sigma)`.
pub fn relative_entropy_psd(rho: &PsdMatrix, sigma: &PsdMatrix) -> Result<EntropyValue> {
    ensure_same_dim(rho.dim(), sigma.dim(), "relative entropy")?;
    if !supports_contained(rho, sigma)? {
        return Ok(EntropyValue::Infinite);
    }
    let s_rho = eig_hermitian(rho.base())?;
    let th = rho.rank_threshold(s_rho.lambda_max());
    let tr_rho_log_rho: f64 = s_rho
        .eigenvalues()
        .iter()
        .filter(|&&l| l > th)
        .map(|&l| l * l.ln())
        .sum();
    let log_sigma = log_on_support(sigma)?;
    let tr_rho_log_sigma = (rho.matrix() * log_sigma.matrix()).trace().re;
    Ok(EntropyValue::Finite(tr_rho_log_rho - tr_rho_log_sigma))
}

/// Relative entropy `S(rho || sigma)` of a density matrix against a
/// nonnegative matrix.
pub fn relative_entropy(rho: &DensityMatrix, sigma: &PsdMatrix) -> Result<EntropyValue> {
    relative_entropy_psd(rho.as_psd(), sigma)
}

/// Renyi alpha-relative entropy
/// `S_alpha = log Tr (sigma^{(1-alpha)/2alpha} rho sigma^{(1-alpha)/2alpha})^alpha / (alpha - 1)`
/// for `alpha` in `(0, 2]`, with pseudo-powers on `supp(sigma)` and the
/// relative-entropy limit at `alpha = 1`.
///
/// For `alpha > 1` a support violation yields the infinite sentinel; for
/// `alpha < 1` the pseudo-power formula is the continuous extension and stays
/// finite unless the supports are orthogonal.
pub fn renyi_relative_entropy_psd(
    alpha: f64,
    rho: &PsdMatrix,
    sigma: &PsdMatrix,
) -> Result<EntropyValue> {
    if !(alpha > 0.0 && alpha <= 2.0) {
        return Err(Error::InvalidParameter {
            name: "alpha",
            value: format!("{alpha}"),
            constraint: "alpha in (0, 2]",
        });
    }
    ensure_same_dim(rho.dim(), sigma.dim(), "renyi relative entropy")?;
    if (alpha - 1.0).abs() < 1e-12 {
        return relative_entropy_psd(rho, sigma);
    }
    if alpha > 1.0 && !supports_contained(rho, sigma)? {
        return Ok(EntropyValue::Infinite);
    }
    let p = (1.0 - alpha) / (2.0 * alpha);
    let sigma_p = psd_power(sigma, p)?;
    let rho_half = psd_power(rho, 0.5)?;
    // The eigenvalues of sigma^p rho sigma^p are the squared singular values
    // of K = sigma^p rho^{1/2}. Working with K keeps small genuine
    // eigenvalues (products of modest spectra raised to powers) far above
    // the floating-point noise floor, where forming the triple product and
    // re-thresholding would truncate them.
    let k = sigma_p.matrix() * rho_half.matrix();
    let sv = k.singular_values();
    let s_max = sv.iter().fold(0.0f64, |a, &s| a.max(s));
    let noise_floor = rho.dim() as f64 * 1e-12 * s_max;
    let total: f64 = sv
        .iter()
        .filter(|&&s| s > noise_floor)
        .map(|&s| s.powf(2.0 * alpha))
        .sum();
    if total <= 0.0 {
        return Ok(EntropyValue::Infinite);
    }
    Ok(EntropyValue::Finite(total.ln() / (alpha - 1.0)))
}

pub fn renyi_relative_entropy(
    alpha: f64,
    rho: &DensityMatrix,
    sigma: &PsdMatrix,
) -> Result<EntropyValue> {
    renyi_relative_entropy_psd(alpha, rho.as_psd(), sigma)
}

/// Fidelity `F(X, Y) = || sqrt(X) sqrt(Y) ||_1` between nonnegative matrices.
pub fn fidelity(x: &PsdMatrix, y: &PsdMatrix) -> Result<f64> {
    ensure_same_dim(x.dim(), y.dim(), "fidelity")?;
    let sx = psd_power(x, 0.5)?;
    let sy = psd_power(y, 0.5)?;
    Ok(trace_norm(&(sx.matrix() * sy.matrix())))
}

/// Monotonicity remainder `Delta(rho, sigma, N) = S(rho||sigma) -
/// S(N(rho)||N(sigma))`; the infinite sentinel propagates.
pub fn remainder(rho: &DensityMatrix, sigma: &PsdMatrix, n: &Channel) -> Result<EntropyValue> {
    let upstream = relative_entropy(rho, sigma)?;
    let Some(s_in) = upstream.finite() else {
        return Ok(EntropyValue::Infinite);
    };
    let n_rho = n.apply_psd(rho.as_psd())?;
    let n_sigma = n.apply_psd(sigma)?;
    let downstream = relative_entropy_psd(&n_rho, &n_sigma)?;
    let Some(s_out) = downstream.finite() else {
        return Ok(EntropyValue::Infinite);
    };
    Ok(EntropyValue::Finite(s_in - s_out))
}
