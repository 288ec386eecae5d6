//! Seeded generation of states, channels, and full instances as JSON files.

use til_core::io::{ChannelJson, InstanceJson, MatrixJson};
use til_core::{derive_seed, random_channel, random_state, random_state_in_support};

pub fn make_state(dim: usize, rank: usize, seed: u64) -> Result<MatrixJson, String> {
    let state = random_state(dim, rank, seed).map_err(|e| e.to_string())?;
    Ok(MatrixJson::from_cmat(state.matrix()))
}

pub fn make_channel(
    dim_in: usize,
    dim_out: usize,
    n_kraus: usize,
    seed: u64,
) -> Result<ChannelJson, String> {
    let n = random_channel(dim_in, dim_out, n_kraus, seed).map_err(|e| e.to_string())?;
    Ok(ChannelJson::from_channel(&n))
}

/// A full instance: `sigma` of rank `rank_sigma`, `tau` drawn inside its
/// support with rank `rank_tau`, and a random channel.
pub fn make_instance(
    dim_in: usize,
    dim_out: usize,
    n_kraus: usize,
    rank_sigma: usize,
    rank_tau: usize,
    seed: u64,
) -> Result<InstanceJson, String> {
    let sigma = random_state(dim_in, rank_sigma, derive_seed(seed, 1)).map_err(|e| e.to_string())?;
    let tau = random_state_in_support(sigma.as_psd(), rank_tau, derive_seed(seed, 2))
        .map_err(|e| e.to_string())?;
    let channel =
        random_channel(dim_in, dim_out, n_kraus, derive_seed(seed, 3)).map_err(|e| e.to_string())?;
    Ok(InstanceJson {
        sigma: MatrixJson::from_cmat(sigma.matrix()),
        tau: MatrixJson::from_cmat(tau.matrix()),
        channel: ChannelJson::from_channel(&channel),
    })
}
