//! Seeded sampling utilities.
//!
//! Every random object in the crate is a pure function of an explicit 64-bit
//! seed; there is no shared generator state. Seeds for sub-objects come from
//! [`derive_seed`], a splitmix64-style counter derivation, so a master seed
//! expands into an arbitrary tree of independent streams.

use nalgebra::DMatrix;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::linalg::{C64, CMat, HermitianMatrix, Projector, PsdMatrix};

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Derived seed for object `index` under `master`:
/// `splitmix64(master XOR splitmix64(index))`.
pub fn derive_seed(master: u64, index: u64) -> u64 {
    splitmix64(master ^ splitmix64(index))
}

/// Deterministic stream of uniforms and Gaussians over ChaCha8.
pub struct SeededRng {
    inner: ChaCha8Rng,
}

impl SeededRng {
    pub fn from_seed(seed: u64) -> Self {
        SeededRng {
            inner: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Uniform in `[0, 1)`.
    pub fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / 9_007_199_254_740_992.0)
    }

    /// Uniform in `[lo, hi)`.
    pub fn uniform_in(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.uniform()
    }

    /// Uniform integer in `[0, n)`.
    pub fn below(&mut self, n: usize) -> usize {
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }

    /// Box-Muller pair of independent standard normals.
    pub fn normal_pair(&mut self) -> (f64, f64) {
        // u1 in (0, 1] so the log is finite
        let u1 = ((self.inner.next_u64() >> 11) + 1) as f64 * (1.0 / 9_007_199_254_740_992.0);
        let u2 = self.uniform();
        let r = (-2.0 * u1.ln()).sqrt();
        let th = 2.0 * std::f64::consts::PI * u2;
        (r * th.cos(), r * th.sin())
    }

    /// One standard normal (consumes a full Box-Muller pair).
    pub fn normal(&mut self) -> f64 {
        self.normal_pair().0
    }

    /// Standard complex Gaussian (independent real and imaginary parts).
    pub fn complex_gaussian(&mut self) -> C64 {
        let (re, im) = self.normal_pair();
        C64::new(re, im)
    }

    /// Matrix of iid standard complex Gaussians, filled column-major.
    pub fn gaussian_matrix(&mut self, rows: usize, cols: usize) -> CMat {
        let mut m = CMat::zeros(rows, cols);
        for j in 0..cols {
            for i in 0..rows {
                m[(i, j)] = self.complex_gaussian();
            }
        }
        m
    }
}

/// Random Hermitian matrix `(G + G\u{2020}) / 2` with Gaussian entries.
pub fn random_hermitian(dim: usize, rng: &mut SeededRng) -> HermitianMatrix {
    let g = rng.gaussian_matrix(dim, dim);
    HermitianMatrix::symmetrize(g)
}

/// Haar-like random isometry `C^{cols} -> C^{rows}` (`rows >= cols`) via QR of
/// a Gaussian matrix.
pub fn random_isometry(rows: usize, cols: usize, rng: &mut SeededRng) -> CMat {
    assert!(rows >= cols, "an isometry needs rows >= cols");
    let g = rng.gaussian_matrix(rows, cols);
    g.qr().q()
}

/// Random rank-`rank` orthogonal projector on `C^dim`.
pub fn random_projector(dim: usize, rank: usize, rng: &mut SeededRng) -> Projector {
    assert!(rank <= dim);
    if rank == 0 {
        return Projector::zero(dim);
    }
    let q = random_isometry(dim, rank, rng);
    Projector::from_orthonormal_columns(&q)
}

/// Random unitary on `C^dim`.
pub fn random_unitary(dim: usize, rng: &mut SeededRng) -> CMat {
    random_isometry(dim, dim, rng)
}

/// Random strictly positive matrix: a Gaussian Gram matrix plus `0.05` times
/// the identity, keeping the spectrum bounded away from zero.
pub fn random_strict_psd(dim: usize, rng: &mut SeededRng) -> PsdMatrix {
    let g = rng.gaussian_matrix(dim, dim);
    let gram = &g * g.adjoint() + CMat::identity(dim, dim) * C64::new(0.05, 0.0);
    PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(gram))
}

/// Kronecker product helper shared by the channel and audit code.
pub fn kron(a: &CMat, b: &CMat) -> CMat {
    a.kronecker(b)
}

/// `M tensor 1_e`.
pub fn kron_with_identity(m: &CMat, dim_e: usize) -> CMat {
    m.kronecker(&DMatrix::identity(dim_e, dim_e))
}
