//! Completely positive trace-preserving maps as Kraus families, with the
//! adjoint action, Stinespring isometric extension, partial traces, and
//! seeded random generation of channels and states.
//!
//! Tensor convention: a space `B (x) E` is indexed with `B` major, so basis
//! vector `(b, e)` sits at row `b * dim_e + e`, matching `kron(M_B, M_E)`.

use crate::error::{Error, Result};
use crate::linalg::{
    operator_norm, support_projector, C64, CMat, HermitianMatrix, Projector, PsdMatrix,
};
use crate::rng::{derive_seed, SeededRng};

#[cfg(test)]
use crate::linalg::frobenius_norm;

/// Deviation allowed in the trace-preservation check `sum K\u{2020}K = 1`.
pub const TRACE_PRESERVATION_TOL: f64 = 1e-10;
/// Deviation of the trace of a density matrix from one.
pub const UNIT_TRACE_TOL: f64 = 1e-12;
/// Tolerance on `V\u{2020}V = 1` for isometries.
pub const ISOMETRY_TOL: f64 = 1e-10;
const CHOI_TOL: f64 = 1e-10;

/// CPTP map `X -> sum_k K_k X K_k\u{2020}` between systems of dimension
/// `dim_in` and `dim_out`.
#[derive(Clone, Debug, PartialEq)]
pub struct Channel {
    dim_in: usize,
    dim_out: usize,
    kraus: Vec<CMat>,
}

impl Channel {
    /// Validates shapes, trace preservation, and positivity of the Choi
    /// matrix before accepting the Kraus family.
    pub fn new(dim_in: usize, dim_out: usize, kraus: Vec<CMat>) -> Result<Self> {
        if dim_in == 0 || dim_out == 0 || kraus.is_empty() {
            return Err(Error::InvalidParameter {
                name: "channel",
                value: format!("dim_in={dim_in}, dim_out={dim_out}, kraus={}", kraus.len()),
                constraint: "dims >= 1 and at least one Kraus operator",
            });
        }
        for k in &kraus {
            if k.nrows() != dim_out || k.ncols() != dim_in {
                return Err(Error::DimensionMismatch {
                    context: "kraus operator shape",
                    expected: dim_out * dim_in,
                    found: k.nrows() * k.ncols(),
                });
            }
            if !k.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::NonFiniteEntry);
            }
        }
        let ch = Channel {
            dim_in,
            dim_out,
            kraus,
        };
        let mut gram = CMat::zeros(dim_in, dim_in);
        for k in &ch.kraus {
            gram += k.adjoint() * k;
        }
        let dev = operator_norm(&(gram - CMat::identity(dim_in, dim_in)));
        if dev > TRACE_PRESERVATION_TOL {
            return Err(Error::NotTracePreserving { deviation: dev });
        }
        let choi = ch.choi();
        let min = PsdMatrix::new_unchecked(choi.clone()).min_eigenvalue()?;
        let scale = choi.operator_norm()?.max(1.0);
        if min < -CHOI_TOL * scale {
            return Err(Error::NotCompletelyPositive {
                min_eigenvalue: min,
            });
        }
        Ok(ch)
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn kraus(&self) -> &[CMat] {
        &self.kraus
    }

    /// The identity channel on `dim`.
    pub fn identity(dim: usize) -> Self {
        Channel {
            dim_in: dim,
            dim_out: dim,
            kraus: vec![CMat::identity(dim, dim)],
        }
    }

    /// Completely dephasing channel: pinches to the computational-basis
    /// diagonal via the Kraus family `{|i><i|}`.
    pub fn dephasing(dim: usize) -> Self {
        let kraus = (0..dim)
            .map(|i| {
                let mut k = CMat::zeros(dim, dim);
                k[(i, i)] = C64::new(1.0, 0.0);
                k
            })
            .collect();
        Channel {
            dim_in: dim,
            dim_out: dim,
            kraus,
        }
    }

    /// Completely depolarizing channel `rho -> Tr(rho) 1 / dim_out` with Kraus
    /// family `{|j><i| / sqrt(dim_out)}`.
    pub fn depolarizing(dim_in: usize, dim_out: usize) -> Self {
        let c = C64::new(1.0 / (dim_out as f64).sqrt(), 0.0);
        let mut kraus = Vec::with_capacity(dim_in * dim_out);
        for i in 0..dim_in {
            for j in 0..dim_out {
                let mut k = CMat::zeros(dim_out, dim_in);
                k[(j, i)] = c;
                kraus.push(k);
            }
        }
        Channel {
            dim_in,
            dim_out,
            kraus,
        }
    }

    /// `sum_k K_k X K_k\u{2020}`.
    pub fn apply(&self, x: &HermitianMatrix) -> Result<HermitianMatrix> {
        if x.dim() != self.dim_in {
            return Err(Error::DimensionMismatch {
                context: "channel apply",
                expected: self.dim_in,
                found: x.dim(),
            });
        }
        let mut out = CMat::zeros(self.dim_out, self.dim_out);
        for k in &self.kraus {
            out += k * x.matrix() * k.adjoint();
        }
        Ok(HermitianMatrix::symmetrize(out))
    }

    /// Channel action on a nonnegative input; the output is nonnegative by
    /// complete positivity and inherits the input's rank tolerance.
    pub fn apply_psd(&self, x: &PsdMatrix) -> Result<PsdMatrix> {
        Ok(PsdMatrix::new_unchecked(self.apply(x.base())?))
    }

    /// Adjoint action `sum_k K_k\u{2020} Y K_k`; unital whenever the channel
    /// is trace preserving.
    pub fn adjoint_apply(&self, y: &HermitianMatrix) -> Result<HermitianMatrix> {
        if y.dim() != self.dim_out {
            return Err(Error::DimensionMismatch {
                context: "channel adjoint apply",
                expected: self.dim_out,
                found: y.dim(),
            });
        }
        let mut out = CMat::zeros(self.dim_in, self.dim_in);
        for k in &self.kraus {
            out += k.adjoint() * y.matrix() * k;
        }
        Ok(HermitianMatrix::symmetrize(out))
    }

    /// Choi matrix `sum_{ij} |i><j| (x) N(|i><j|)` on `A (x) B`, `A` major.
    pub fn choi(&self) -> HermitianMatrix {
        let d_in = self.dim_in;
        let d_out = self.dim_out;
        let mut choi = CMat::zeros(d_in * d_out, d_in * d_out);
        for k in &self.kraus {
            // vec(K) over the A-major layout: column (i) block gets K e_i
            let mut v = CMat::zeros(d_in * d_out, 1);
            for i in 0..d_in {
                for b in 0..d_out {
                    v[(i * d_out + b, 0)] = k[(b, i)];
                }
            }
            choi += &v * v.adjoint();
        }
        HermitianMatrix::symmetrize(choi)
    }

    /// Stinespring isometric extension `V = sum_k K_k (x) |k>_E` with
    /// environment dimension equal to the number of Kraus operators, so that
    /// `N(X) = Tr_E V X V\u{2020}` and `N\u{2020}(Y) = V\u{2020} (Y (x) 1_E) V`.
    pub fn stinespring(&self) -> Isometry {
        let dim_env = self.kraus.len();
        let rows = self.dim_out * dim_env;
        let mut v = CMat::zeros(rows, self.dim_in);
        for (k_idx, k) in self.kraus.iter().enumerate() {
            for b in 0..self.dim_out {
                for a in 0..self.dim_in {
                    v[(b * dim_env + k_idx, a)] = k[(b, a)];
                }
            }
        }
        Isometry {
            dim_in: self.dim_in,
            dim_out: self.dim_out,
            dim_env,
            v,
        }
    }
}

/// Isometry `V: A -> B (x) E` with `V\u{2020}V = 1_A`.
#[derive(Clone, Debug, PartialEq)]
pub struct Isometry {
    dim_in: usize,
    dim_out: usize,
    dim_env: usize,
    v: CMat,
}

impl Isometry {
    pub fn new(dim_in: usize, dim_out: usize, dim_env: usize, v: CMat) -> Result<Self> {
        if v.nrows() != dim_out * dim_env || v.ncols() != dim_in {
            return Err(Error::DimensionMismatch {
                context: "isometry shape",
                expected: dim_out * dim_env * dim_in,
                found: v.nrows() * v.ncols(),
            });
        }
        let dev = operator_norm(&(v.adjoint() * &v - CMat::identity(dim_in, dim_in)));
        if dev > ISOMETRY_TOL {
            return Err(Error::NotIsometry { deviation: dev });
        }
        Ok(Isometry {
            dim_in,
            dim_out,
            dim_env,
            v,
        })
    }

    pub fn dim_in(&self) -> usize {
        self.dim_in
    }

    pub fn dim_out(&self) -> usize {
        self.dim_out
    }

    pub fn dim_env(&self) -> usize {
        self.dim_env
    }

    pub fn matrix(&self) -> &CMat {
        &self.v
    }

    /// `V X V\u{2020}` on `B (x) E`.
    pub fn conjugate(&self, x: &HermitianMatrix) -> Result<HermitianMatrix> {
        crate::linalg::conjugate(&self.v, x)
    }

    /// `V\u{2020} Y V` on `A`.
    pub fn conjugate_adjoint(&self, y: &HermitianMatrix) -> Result<HermitianMatrix> {
        let vd = self.v.adjoint();
        crate::linalg::conjugate(&vd, y)
    }
}

/// Projector `1_{BE} - V V\u{2020}` onto the orthocomplement of the
/// isometry's range; its rank is `dim_out * dim_env - dim_in`.
pub fn complement_projector(v: &Isometry) -> Projector {
    let n = v.dim_out * v.dim_env;
    let m = CMat::identity(n, n) - v.matrix() * v.matrix().adjoint();
    Projector::from_orthonormal_columns_unvalidated(m)
}

impl Projector {
    // Internal constructor for matrices that are projectors by construction.
    fn from_orthonormal_columns_unvalidated(m: CMat) -> Projector {
        Projector::new(HermitianMatrix::symmetrize(m))
            .expect("1 - V V\u{2020} is a projector for an isometry V")
    }
}

/// Which tensor factor `partial_trace` removes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceOut {
    /// Trace out the first (major, `B`) factor, keeping `E`.
    First,
    /// Trace out the second (minor, `E`) factor, keeping `B`.
    Second,
}

/// Partial trace of a Hermitian matrix on `B (x) E`.
pub fn partial_trace(
    x: &HermitianMatrix,
    dim_b: usize,
    dim_e: usize,
    out: TraceOut,
) -> Result<HermitianMatrix> {
    if x.dim() != dim_b * dim_e {
        return Err(Error::NonFactorableDimension {
            dim: x.dim(),
            dim_b,
            dim_e,
        });
    }
    let m = x.matrix();
    let reduced = match out {
        TraceOut::Second => {
            let mut r = CMat::zeros(dim_b, dim_b);
            for b1 in 0..dim_b {
                for b2 in 0..dim_b {
                    let mut acc = C64::new(0.0, 0.0);
                    for e in 0..dim_e {
                        acc += m[(b1 * dim_e + e, b2 * dim_e + e)];
                    }
                    r[(b1, b2)] = acc;
                }
            }
            r
        }
        TraceOut::First => {
            let mut r = CMat::zeros(dim_e, dim_e);
            for e1 in 0..dim_e {
                for e2 in 0..dim_e {
                    let mut acc = C64::new(0.0, 0.0);
                    for b in 0..dim_b {
                        acc += m[(b * dim_e + e1, b * dim_e + e2)];
                    }
                    r[(e1, e2)] = acc;
                }
            }
            r
        }
    };
    Ok(HermitianMatrix::symmetrize(reduced))
}

/// Nonnegative matrix with unit trace.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityMatrix {
    psd: PsdMatrix,
}

impl DensityMatrix {
    pub fn new(psd: PsdMatrix) -> Result<Self> {
        let tr = psd.trace();
        if (tr - 1.0).abs() > UNIT_TRACE_TOL {
            return Err(Error::InvalidParameter {
                name: "trace",
                value: format!("{tr}"),
                constraint: "a density matrix has unit trace (within 1e-12)",
            });
        }
        Ok(DensityMatrix { psd })
    }

    /// Normalize a nonzero nonnegative matrix to unit trace.
    pub fn normalized(psd: &PsdMatrix) -> Result<Self> {
        let tr = psd.trace();
        if tr <= 0.0 {
            return Err(Error::InvalidParameter {
                name: "trace",
                value: format!("{tr}"),
                constraint: "cannot normalize a traceless matrix",
            });
        }
        Ok(DensityMatrix {
            psd: psd.scale(1.0 / tr)?,
        })
    }

    pub fn as_psd(&self) -> &PsdMatrix {
        &self.psd
    }

    pub fn base(&self) -> &HermitianMatrix {
        self.psd.base()
    }

    pub fn matrix(&self) -> &CMat {
        self.psd.matrix()
    }

    pub fn dim(&self) -> usize {
        self.psd.dim()
    }
}

/// Random CPTP map: `n_kraus` complex-Gaussian blocks, whitened on the right
/// by `(M\u{2020}M)^{-1/2}` so that `sum K\u{2020}K = 1` holds to rounding.
/// Deterministic per seed. Requires `n_kraus * dim_out >= dim_in`, otherwise
/// no trace-preserving family of that shape exists.
pub fn random_channel(dim_in: usize, dim_out: usize, n_kraus: usize, seed: u64) -> Result<Channel> {
    if n_kraus == 0 {
        return Err(Error::InvalidParameter {
            name: "n_kraus",
            value: "0".into(),
            constraint: "n_kraus >= 1",
        });
    }
    if n_kraus * dim_out < dim_in {
        return Err(Error::InvalidParameter {
            name: "n_kraus * dim_out",
            value: format!("{}", n_kraus * dim_out),
            constraint: "n_kraus * dim_out >= dim_in is required for trace preservation",
        });
    }
    for attempt in 0..16u64 {
        let mut rng = SeededRng::from_seed(if attempt == 0 {
            seed
        } else {
            derive_seed(seed, attempt)
        });
        let blocks: Vec<CMat> = (0..n_kraus)
            .map(|_| rng.gaussian_matrix(dim_out, dim_in))
            .collect();
        let mut gram = CMat::zeros(dim_in, dim_in);
        for b in &blocks {
            gram += b.adjoint() * b;
        }
        let gram = PsdMatrix::new_unchecked(HermitianMatrix::symmetrize(gram));
        // singular Gram has probability zero; retry with a derived seed
        if !gram.is_strictly_positive()? {
            continue;
        }
        let white = crate::linalg::psd_power(&gram, -0.5)?;
        let kraus: Vec<CMat> = blocks.iter().map(|b| b * white.matrix()).collect();
        return Channel::new(dim_in, dim_out, kraus);
    }
    Err(Error::InvalidParameter {
        name: "seed",
        value: format!("{seed}"),
        constraint: "failed to draw a nonsingular Kraus Gram matrix",
    })
}

/// Random density matrix `G G\u{2020} / Tr` with `G` a `dim x rank` complex
/// Gaussian matrix; the result has the requested rank with probability one.
pub fn random_state(dim: usize, rank: usize, seed: u64) -> Result<DensityMatrix> {
    if rank == 0 || rank > dim {
        return Err(Error::InvalidParameter {
            name: "rank",
            value: format!("{rank}"),
            constraint: "1 <= rank <= dim",
        });
    }
    let mut rng = SeededRng::from_seed(seed);
    let g = rng.gaussian_matrix(dim, rank);
    let gram = HermitianMatrix::symmetrize(&g * g.adjoint());
    DensityMatrix::normalized(&PsdMatrix::new_unchecked(gram))
}

/// Random density matrix supported inside `supp(sigma)`: a Gaussian factor is
/// projected by the support projector of `sigma` before forming the Gram
/// matrix, so the containment holds by construction.
pub fn random_state_in_support(
    sigma: &PsdMatrix,
    rank: usize,
    seed: u64,
) -> Result<DensityMatrix> {
    let sigma_rank = sigma.rank()?;
    if rank == 0 || rank > sigma_rank {
        return Err(Error::InvalidParameter {
            name: "rank",
            value: format!("{rank}"),
            constraint: "1 <= rank <= rank(sigma)",
        });
    }
    let pi = support_projector(sigma)?;
    for attempt in 0..16u64 {
        let mut rng = SeededRng::from_seed(if attempt == 0 {
            seed
        } else {
            derive_seed(seed, attempt)
        });
        let g = pi.matrix() * rng.gaussian_matrix(sigma.dim(), rank);
        let gram = HermitianMatrix::symmetrize(&g * g.adjoint());
        if gram.trace() > 1e-12 {
            return DensityMatrix::normalized(&PsdMatrix::new_unchecked(gram));
        }
    }
    Err(Error::InvalidParameter {
        name: "seed",
        value: format!("{seed}"),
        constraint: "failed to draw a state with positive trace",
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::eig_hermitian;

    fn bell_state() -> HermitianMatrix {
        // |phi+><phi+| on two qubits, B-major indexing
        let r = std::f64::consts::FRAC_1_SQRT_2;
        let mut v = CMat::zeros(4, 1);
        v[(0, 0)] = C64::new(r, 0.0);
        v[(3, 0)] = C64::new(r, 0.0);
        HermitianMatrix::symmetrize(&v * v.adjoint())
    }

    #[test]
    fn identity_channel_is_identity() {
        let n = Channel::identity(2);
        let x = HermitianMatrix::from_real_diagonal(&[0.2, 0.8]);
        let y = n.apply(&x).unwrap();
        assert!(frobenius_norm(&(y.matrix() - x.matrix())) < 1e-14);
    }

    #[test]
    fn dephasing_kills_offdiagonals() {
        let n = Channel::dephasing(2);
        let x = HermitianMatrix::new(CMat::from_fn(2, 2, |i, j| {
            if i == j {
                C64::new(0.5, 0.0)
            } else {
                C64::new(0.25, if i < j { 0.1 } else { -0.1 })
            }
        }))
        .unwrap();
        let y = n.apply(&x).unwrap();
        let expect = HermitianMatrix::from_real_diagonal(&[0.5, 0.5]);
        assert!(frobenius_norm(&(y.matrix() - expect.matrix())) < 1e-14);
    }

    #[test]
    fn depolarizing_fixes_output() {
        let n = Channel::depolarizing(2, 3);
        let rho = random_state(2, 2, 9).unwrap();
        let y = n.apply(rho.base()).unwrap();
        let expect = HermitianMatrix::identity(3).scale(1.0 / 3.0);
        assert!(frobenius_norm(&(y.matrix() - expect.matrix())) < 1e-12);
    }

    #[test]
    fn adjoint_is_unital() {
        let n = random_channel(3, 2, 2, 21).unwrap();
        let one = HermitianMatrix::identity(2);
        let back = n.adjoint_apply(&one).unwrap();
        assert!(frobenius_norm(&(back.matrix() - CMat::identity(3, 3))) < 1e-10);
    }

    #[test]
    fn adjoint_duality_holds() {
        let n = random_channel(3, 2, 2, 33).unwrap();
        let mut rng = SeededRng::from_seed(14);
        for _ in 0..100 {
            let x = crate::rng::random_hermitian(3, &mut rng);
            let y = crate::rng::random_hermitian(2, &mut rng);
            let lhs = (n.apply(&x).unwrap().matrix() * y.matrix()).trace().re;
            let rhs = (x.matrix() * n.adjoint_apply(&y).unwrap().matrix())
                .trace()
                .re;
            assert!((lhs - rhs).abs() < 1e-10 * lhs.abs().max(1.0));
        }
    }

    #[test]
    fn stinespring_identity_channel() {
        let v = Channel::identity(2).stinespring();
        assert_eq!(v.dim_env(), 1);
        assert!(frobenius_norm(&(v.matrix() - &CMat::identity(2, 2))) < 1e-14);
    }

    #[test]
    fn stinespring_dephasing_shape_and_isometry() {
        let v = Channel::dephasing(2).stinespring();
        assert_eq!(v.matrix().nrows(), 4);
        assert_eq!(v.matrix().ncols(), 2);
        let gram = v.matrix().adjoint() * v.matrix();
        assert!(frobenius_norm(&(gram - CMat::identity(2, 2))) < 1e-12);
    }

    #[test]
    fn stinespring_reproduces_channel_and_adjoint() {
        let n = random_channel(2, 3, 2, 77).unwrap();
        let v = n.stinespring();
        let rho = random_state(2, 2, 5).unwrap();
        let lifted = v.conjugate(rho.base()).unwrap();
        let reduced = partial_trace(&lifted, 3, 2, TraceOut::Second).unwrap();
        let direct = n.apply(rho.base()).unwrap();
        assert!(frobenius_norm(&(reduced.matrix() - direct.matrix())) < 1e-10);

        let mut rng = SeededRng::from_seed(8);
        let gamma = crate::rng::random_hermitian(3, &mut rng);
        let lifted_gamma = crate::rng::kron_with_identity(gamma.matrix(), 2);
        let pulled = v
            .conjugate_adjoint(&HermitianMatrix::symmetrize(lifted_gamma))
            .unwrap();
        let direct_adj = n.adjoint_apply(&gamma).unwrap();
        assert!(frobenius_norm(&(pulled.matrix() - direct_adj.matrix())) < 1e-10);
    }

    #[test]
    fn partial_trace_product_and_identity() {
        let rho = random_state(2, 2, 4).unwrap();
        let omega = random_state(3, 3, 6).unwrap();
        let prod = HermitianMatrix::symmetrize(rho.matrix().kronecker(omega.matrix()));
        let back = partial_trace(&prod, 2, 3, TraceOut::Second).unwrap();
        assert!(frobenius_norm(&(back.matrix() - rho.matrix())) < 1e-12);

        let id = HermitianMatrix::identity(6);
        let reduced = partial_trace(&id, 2, 3, TraceOut::Second).unwrap();
        let expect = HermitianMatrix::identity(2).scale(3.0);
        assert!(frobenius_norm(&(reduced.matrix() - expect.matrix())) < 1e-13);
    }

    #[test]
    fn partial_trace_bell_state() {
        let reduced = partial_trace(&bell_state(), 2, 2, TraceOut::Second).unwrap();
        let expect = HermitianMatrix::identity(2).scale(0.5);
        assert!(frobenius_norm(&(reduced.matrix() - expect.matrix())) < 1e-13);
        let reduced_first = partial_trace(&bell_state(), 2, 2, TraceOut::First).unwrap();
        assert!(frobenius_norm(&(reduced_first.matrix() - expect.matrix())) < 1e-13);
    }

    #[test]
    fn complement_projector_cases() {
        let v_id = Channel::identity(3).stinespring();
        let p = complement_projector(&v_id);
        assert_eq!(p.rank(), 0);

        let v = Channel::dephasing(2).stinespring();
        let p = complement_projector(&v);
        assert_eq!(p.rank(), 2);
        let pv = p.matrix() * v.matrix();
        assert!(frobenius_norm(&pv) < 1e-12);
    }

    #[test]
    fn random_channel_is_cptp_and_deterministic() {
        let a = random_channel(2, 2, 1, 42).unwrap();
        let b = random_channel(2, 2, 1, 42).unwrap();
        assert_eq!(a, b);
        let mut gram = CMat::zeros(2, 2);
        for k in a.kraus() {
            gram += k.adjoint() * k;
        }
        assert!(frobenius_norm(&(gram - CMat::identity(2, 2))) < 1e-10);
        let choi = a.choi();
        let min = PsdMatrix::new_unchecked(choi).min_eigenvalue().unwrap();
        assert!(min > -1e-10);
    }

    #[test]
    fn random_channel_infeasible_shape_rejected() {
        assert!(matches!(
            random_channel(4, 2, 1, 1),
            Err(Error::InvalidParameter { .. })
        ));
    }

    #[test]
    fn random_state_rank_and_trace() {
        let full = random_state(3, 3, 10).unwrap();
        assert_eq!(full.as_psd().rank().unwrap(), 3);
        assert!((full.as_psd().trace() - 1.0).abs() < 1e-14);

        let pure = random_state(3, 1, 11).unwrap();
        let sq = pure.matrix() * pure.matrix();
        assert!(frobenius_norm(&(sq - pure.matrix())) < 1e-12);
    }

    #[test]
    fn random_state_in_support_respects_support() {
        let sigma = PsdMatrix::from_real_diagonal(&[0.5, 0.5, 0.0]).unwrap();
        let rho = random_state_in_support(&sigma, 1, 3).unwrap();
        for i in 0..3 {
            assert!(rho.matrix()[(2, i)].norm() < 1e-14);
            assert!(rho.matrix()[(i, 2)].norm() < 1e-14);
        }
        let p_rho = support_projector(rho.as_psd()).unwrap();
        let p_sigma = support_projector(&sigma).unwrap();
        assert!(p_rho.is_dominated_by(&p_sigma, 1e-10));
    }

    #[test]
    fn support_monotone_under_channels() {
        // supp(rho) inside supp(sigma) stays inside after any channel
        for seed in 0..10u64 {
            let sigma = random_state(3, 2, derive_seed(100, seed)).unwrap();
            let rho = random_state_in_support(sigma.as_psd(), 1, derive_seed(200, seed)).unwrap();
            let n = random_channel(3, 2, 2, derive_seed(300, seed)).unwrap();
            let n_rho = n.apply_psd(rho.as_psd()).unwrap();
            let n_sigma = n.apply_psd(sigma.as_psd()).unwrap();
            let p_out = support_projector(&n_sigma).unwrap().complement();
            let leaked = p_out.matrix() * n_rho.matrix() * p_out.matrix();
            let leak = eig_hermitian(&HermitianMatrix::symmetrize(leaked))
                .unwrap()
                .eigenvalues()
                .iter()
                .fold(0.0f64, |a, &l| a.max(l.abs()));
            assert!(leak < 1e-10, "support leak {leak} at seed {seed}");
        }
    }
}
