//! JSON file formats shared across the toolkit.
//!
//! Matrices are stored as `{"dim": n, "re": [[...]], "im": [[...]]}` with
//! row-major 2D arrays; `dim` is present for square matrices and the shape is
//! always validated against the arrays (Kraus operators may be rectangular,
//! in which case `dim` is omitted). Channels bundle their Kraus list, and an
//! instance file carries the triple `(sigma, tau, channel)` needed to replay
//! a verification.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::channels::Channel;
use crate::error::{Error, Result};
use crate::linalg::{C64, CMat, HermitianMatrix, PsdMatrix};

/// Matrix payload: real and imaginary parts, row-major.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct MatrixJson {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    pub re: Vec<Vec<f64>>,
    pub im: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_cmat(m: &CMat) -> Self {
        let rows = m.nrows();
        let cols = m.ncols();
        MatrixJson {
            dim: if rows == cols { Some(rows) } else { None },
            re: (0..rows)
                .map(|i| (0..cols).map(|j| m[(i, j)].re).collect())
                .collect(),
            im: (0..rows)
                .map(|i| (0..cols).map(|j| m[(i, j)].im).collect())
                .collect(),
        }
    }

    pub fn to_cmat(&self) -> Result<CMat> {
        let rows = self.re.len();
        if rows == 0 {
            return Err(Error::InvalidFile("matrix has no rows".into()));
        }
        let cols = self.re[0].len();
        if self.im.len() != rows {
            return Err(Error::InvalidFile(format!(
                "re has {rows} rows but im has {}",
                self.im.len()
            )));
        }
        for (i, (r, c)) in self.re.iter().zip(self.im.iter()).enumerate() {
            if r.len() != cols || c.len() != cols {
                return Err(Error::InvalidFile(format!("ragged row {i}")));
            }
            if !r.iter().chain(c.iter()).all(|v| v.is_finite()) {
                return Err(Error::InvalidFile(format!("non-finite entry in row {i}")));
            }
        }
        if let Some(d) = self.dim {
            if d != rows || d != cols {
                return Err(Error::InvalidFile(format!(
                    "declared dim {d} does not match shape {rows}x{cols}"
                )));
            }
        }
        Ok(CMat::from_fn(rows, cols, |i, j| {
            C64::new(self.re[i][j], self.im[i][j])
        }))
    }

    /// Parse as a Hermitian matrix; Hermiticity is validated on load.
    pub fn to_hermitian(&self) -> Result<HermitianMatrix> {
        HermitianMatrix::new(self.to_cmat()?)
    }

    /// Parse as a nonnegative matrix (Hermiticity and positivity validated).
    pub fn to_psd(&self) -> Result<PsdMatrix> {
        PsdMatrix::new(self.to_hermitian()?)
    }
}

/// Channel payload: dimensions plus the Kraus list. Loading re-validates
/// trace preservation and complete positivity.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ChannelJson {
    pub dim_in: usize,
    pub dim_out: usize,
    pub kraus: Vec<MatrixJson>,
}

impl ChannelJson {
    pub fn from_channel(n: &Channel) -> Self {
        ChannelJson {
            dim_in: n.dim_in(),
            dim_out: n.dim_out(),
            kraus: n.kraus().iter().map(MatrixJson::from_cmat).collect(),
        }
    }

    pub fn to_channel(&self) -> Result<Channel> {
        let kraus = self
            .kraus
            .iter()
            .map(|m| m.to_cmat())
            .collect::<Result<Vec<_>>>()?;
        Channel::new(self.dim_in, self.dim_out, kraus)
    }
}

/// A replayable verification instance: the pair of nonnegative matrices and
/// the channel acting on them.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct InstanceJson {
    pub sigma: MatrixJson,
    pub tau: MatrixJson,
    pub channel: ChannelJson,
}

/// Validated in-memory instance.
#[derive(Clone, Debug)]
pub struct Instance {
    pub sigma: PsdMatrix,
    pub tau: PsdMatrix,
    pub channel: Channel,
}

impl InstanceJson {
    pub fn from_instance(i: &Instance) -> Self {
        InstanceJson {
            sigma: MatrixJson::from_cmat(i.sigma.matrix()),
            tau: MatrixJson::from_cmat(i.tau.matrix()),
            channel: ChannelJson::from_channel(&i.channel),
        }
    }

    /// Validate every field, collecting all problems instead of stopping at
    /// the first. The support precondition `supp(tau)` inside `supp(sigma)`
    /// is part of validation: the extended map is undefined without it.
    pub fn validate(&self) -> std::result::Result<Instance, Vec<String>> {
        let mut errors = Vec::new();
        let sigma = match self.sigma.to_psd() {
            Ok(s) => Some(s),
            Err(e) => {
                errors.push(format!("sigma: {e}"));
                None
            }
        };
        let tau = match self.tau.to_psd() {
            Ok(t) => Some(t),
            Err(e) => {
                errors.push(format!("tau: {e}"));
                None
            }
        };
        let channel = match self.channel.to_channel() {
            Ok(c) => Some(c),
            Err(e) => {
                errors.push(format!("channel: {e}"));
                None
            }
        };
        if let (Some(sigma), Some(tau), Some(channel)) = (&sigma, &tau, &channel) {
            if sigma.dim() != channel.dim_in() {
                errors.push(format!(
                    "sigma: dimension {} does not match channel input {}",
                    sigma.dim(),
                    channel.dim_in()
                ));
            }
            if tau.dim() != channel.dim_in() {
                errors.push(format!(
                    "tau: dimension {} does not match channel input {}",
                    tau.dim(),
                    channel.dim_in()
                ));
            }
            if sigma.dim() == tau.dim() {
                match crate::entropies::supports_contained(tau, sigma) {
                    Ok(true) => {}
                    Ok(false) => errors.push(
                        "instance: supp(tau) is not contained in supp(sigma); \
                         the extended recovery map requires this precondition"
                            .into(),
                    ),
                    Err(e) => errors.push(format!("instance: support check failed: {e}")),
                }
            }
        }
        if errors.is_empty() {
            Ok(Instance {
                sigma: sigma.unwrap(),
                tau: tau.unwrap(),
                channel: channel.unwrap(),
            })
        } else {
            Err(errors)
        }
    }
}

pub fn load_instance(path: &Path) -> Result<InstanceJson> {
    let text = std::fs::read_to_string(path)?;
    Ok(serde_json::from_str(&text)?)
}

pub fn save_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}
