//! Dense Hermitian matrix foundations: spectral decompositions, matrix
//! functions, support projectors, pseudo-inverses, restricted logarithms,
//! norms, and conjugation.
//!
//! Everything here works on `DMatrix<Complex<f64>>` wrapped in newtypes that
//! enforce the structural invariants the rest of the crate leans on:
//! [`HermitianMatrix`] is exactly Hermitian entry-by-entry,
//! [`PsdMatrix`] is numerically nonnegative, and [`Projector`] is idempotent
//! with eigenvalues in {0, 1}.
//!
//! Rank decisions use a relative threshold: an eigenvalue counts as zero when
//! it falls below `rank_tol * max(1, lambda_max)`, with the per-matrix default
//! `rank_tol = dim * 1e-12`. Logarithms of nonnegative matrices follow the
//! `0 log 0 = 0` convention: eigenvalues under the threshold contribute
//! exactly zero to the restricted logarithm.

use nalgebra::linalg::SymmetricEigen;
use nalgebra::{Complex, DMatrix};

use crate::error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = Complex<f64>;
/// Dense complex matrix used throughout.
pub type CMat = DMatrix<C64>;

/// Relative Frobenius asymmetry beyond which a matrix is rejected as
/// non-Hermitian instead of silently symmetrized.
pub const HERMITICITY_TOL: f64 = 1e-10;
/// Default rank-threshold coefficient: `rank_tol = dim * DEFAULT_RANK_TOL_COEFF`.
pub const DEFAULT_RANK_TOL_COEFF: f64 = 1e-12;
/// Tolerance for support-containment preconditions (relative to trace scale).
pub const SUPPORT_TOL: f64 = 1e-9;
/// Tolerance used when validating projector structure.
pub const PROJECTOR_TOL: f64 = 1e-8;
/// Largest admissible eigenvalue for a matrix exponential before erroring out.
pub const EXP_OVERFLOW_LIMIT: f64 = 709.0;

const EIG_MAX_ITER: usize = 10_000;

fn ensure_square(m: &CMat) -> Result<usize> {
    if m.nrows() != m.ncols() {
        return Err(Error::NotSquare {
            rows: m.nrows(),
            cols: m.ncols(),
        });
    }
    Ok(m.nrows())
}

fn ensure_finite(m: &CMat) -> Result<()> {
    if m.iter().all(|z| z.re.is_finite() && z.im.is_finite()) {
        Ok(())
    } else {
        Err(Error::NonFiniteEntry)
    }
}

pub(crate) fn frobenius_norm(m: &CMat) -> f64 {
    m.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

/// Complex square matrix with exact entry-wise Hermiticity.
///
/// Construction symmetrizes `(A + A\u{2020})/2` and then mirrors the upper
/// triangle so that `m[(i,j)] == conj(m[(j,i)])` holds bit-exactly; inputs
/// whose asymmetry exceeds [`HERMITICITY_TOL`] relative to their norm are
/// rejected rather than repaired.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    mat: CMat,
}

impl HermitianMatrix {
    pub fn new(mat: CMat) -> Result<Self> {
        let dim = ensure_square(&mat)?;
        if dim == 0 {
            return Err(Error::InvalidParameter {
                name: "dim",
                value: "0".into(),
                constraint: "dim >= 1",
            });
        }
        ensure_finite(&mat)?;
        let scale = frobenius_norm(&mat).max(1.0);
        let asym = frobenius_norm(&(&mat - mat.adjoint()));
        if asym > 2.0 * HERMITICITY_TOL * scale {
            return Err(Error::NotHermitian {
                asymmetry: asym / 2.0,
                tolerance: HERMITICITY_TOL * scale,
            });
        }
        Ok(Self::symmetrize(mat))
    }

    /// Symmetrize without the asymmetry gate. For matrices that are Hermitian
    /// by construction up to rounding (sums of conjugations, spectral
    /// reassemblies).
    pub(crate) fn symmetrize(mat: CMat) -> Self {
        let n = mat.nrows();
        let mut m = mat;
        for i in 0..n {
            m[(i, i)] = C64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let v = (m[(i, j)] + m[(j, i)].conj()) * C64::new(0.5, 0.0);
                m[(i, j)] = v;
                m[(j, i)] = v.conj();
            }
        }
        HermitianMatrix { mat: m }
    }

    pub fn zeros(dim: usize) -> Self {
        HermitianMatrix {
            mat: CMat::zeros(dim, dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        HermitianMatrix {
            mat: CMat::identity(dim, dim),
        }
    }

    /// Real diagonal matrix.
    pub fn from_real_diagonal(diag: &[f64]) -> Self {
        let n = diag.len();
        HermitianMatrix {
            mat: CMat::from_fn(n, n, |i, j| {
                if i == j {
                    C64::new(diag[i], 0.0)
                } else {
                    C64::new(0.0, 0.0)
                }
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn matrix(&self) -> &CMat {
        &self.mat
    }

    pub fn into_matrix(self) -> CMat {
        self.mat
    }

    pub fn trace(&self) -> f64 {
        self.mat.trace().re
    }

    pub fn frobenius_norm(&self) -> f64 {
        frobenius_norm(&self.mat)
    }

    /// Largest absolute eigenvalue.
    pub fn operator_norm(&self) -> Result<f64> {
        let s = eig_hermitian(self)?;
        Ok(s.eigenvalues()
            .iter()
            .fold(0.0f64, |acc, &l| acc.max(l.abs())))
    }

    pub fn scale(&self, c: f64) -> Self {
        HermitianMatrix {
            mat: &self.mat * C64::new(c, 0.0),
        }
    }
}

impl std::ops::Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            mat: &self.mat + &rhs.mat,
        }
    }
}

impl std::ops::Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            mat: &self.mat - &rhs.mat,
        }
    }
}

/// Numerically nonnegative Hermitian matrix with a per-instance rank cutoff.
///
/// The threshold separating "zero" from "positive" eigenvalues is
/// `rank_tol * max(1, lambda_max)`.
#[derive(Clone, Debug, PartialEq)]
pub struct PsdMatrix {
    base: HermitianMatrix,
    rank_tol: f64,
}

impl PsdMatrix {
    /// Validates nonnegativity under the default rank tolerance `dim * 1e-12`.
    pub fn new(base: HermitianMatrix) -> Result<Self> {
        let rank_tol = base.dim() as f64 * DEFAULT_RANK_TOL_COEFF;
        Self::with_rank_tol(base, rank_tol)
    }

    pub fn with_rank_tol(base: HermitianMatrix, rank_tol: f64) -> Result<Self> {
        if !(rank_tol >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "rank_tol",
                value: format!("{rank_tol}"),
                constraint: "rank_tol >= 0",
            });
        }
        let m = PsdMatrix { base, rank_tol };
        let s = eig_hermitian(&m.base)?;
        let min = s.eigenvalues()[0];
        let threshold = m.rank_threshold(s.lambda_max());
        if min < -threshold {
            return Err(Error::NotPositiveSemidefinite {
                min_eigenvalue: min,
                threshold,
            });
        }
        Ok(m)
    }

    /// For matrices nonnegative by construction (Gram matrices, spectral
    /// reassemblies with nonnegative weights, channel outputs of PSD inputs).
    pub(crate) fn new_unchecked(base: HermitianMatrix) -> Self {
        let rank_tol = base.dim() as f64 * DEFAULT_RANK_TOL_COEFF;
        PsdMatrix { base, rank_tol }
    }

    pub fn identity(dim: usize) -> Self {
        Self::new_unchecked(HermitianMatrix::identity(dim))
    }

    pub fn from_real_diagonal(diag: &[f64]) -> Result<Self> {
        Self::new(HermitianMatrix::from_real_diagonal(diag))
    }

    pub fn base(&self) -> &HermitianMatrix {
        &self.base
    }

    pub fn matrix(&self) -> &CMat {
        self.base.matrix()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    pub fn trace(&self) -> f64 {
        self.base.trace()
    }

    pub fn rank_tol(&self) -> f64 {
        self.rank_tol
    }

    /// Eigenvalue cutoff `rank_tol * max(1, lambda_max)`.
    pub fn rank_threshold(&self, lambda_max: f64) -> f64 {
        self.rank_tol * lambda_max.max(1.0)
    }

    /// Number of eigenvalues above the rank threshold.
    pub fn rank(&self) -> Result<usize> {
        let s = eig_hermitian(&self.base)?;
        let th = self.rank_threshold(s.lambda_max());
        Ok(s.eigenvalues().iter().filter(|&&l| l > th).count())
    }

    /// Smallest eigenvalue (may be a tiny negative within tolerance).
    pub fn min_eigenvalue(&self) -> Result<f64> {
        Ok(eig_hermitian(&self.base)?.eigenvalues()[0])
    }

    /// True when every eigenvalue clears the rank threshold.
    pub fn is_strictly_positive(&self) -> Result<bool> {
        let s = eig_hermitian(&self.base)?;
        Ok(s.eigenvalues()[0] > self.rank_threshold(s.lambda_max()))
    }

    /// Scale by a nonnegative factor.
    pub fn scale(&self, c: f64) -> Result<Self> {
        if !(c >= 0.0) {
            return Err(Error::InvalidParameter {
                name: "scale",
                value: format!("{c}"),
                constraint: "scale >= 0",
            });
        }
        Ok(PsdMatrix {
            base: self.base.scale(c),
            rank_tol: self.rank_tol,
        })
    }
}

/// Orthogonal projector: Hermitian, idempotent, eigenvalues in {0, 1}.
#[derive(Clone, Debug, PartialEq)]
pub struct Projector {
    base: HermitianMatrix,
}

impl Projector {
    pub fn new(base: HermitianMatrix) -> Result<Self> {
        let sq = base.matrix() * base.matrix();
        let dev = frobenius_norm(&(&sq - base.matrix()));
        if dev > PROJECTOR_TOL * (base.dim() as f64).sqrt().max(1.0) {
            return Err(Error::NotProjector {
                reason: format!("P^2 differs from P by {dev:.3e}"),
            });
        }
        let s = eig_hermitian(&base)?;
        for &l in s.eigenvalues() {
            if l.min(1.0 - l).abs() > PROJECTOR_TOL && !(0.0..=1.0).contains(&l) {
                return Err(Error::NotProjector {
                    reason: format!("eigenvalue {l} outside {{0, 1}}"),
                });
            }
        }
        let tr = base.trace();
        if (tr - tr.round()).abs() > PROJECTOR_TOL * base.dim() as f64 {
            return Err(Error::NotProjector {
                reason: format!("trace {tr} is not an integer rank"),
            });
        }
        Ok(Projector { base })
    }

    pub fn zero(dim: usize) -> Self {
        Projector {
            base: HermitianMatrix::zeros(dim),
        }
    }

    pub fn identity(dim: usize) -> Self {
        Projector {
            base: HermitianMatrix::identity(dim),
        }
    }

    /// `U U\u{2020}` for a matrix of orthonormal columns.
    pub fn from_orthonormal_columns(cols: &CMat) -> Self {
        Projector {
            base: HermitianMatrix::symmetrize(cols * cols.adjoint()),
        }
    }

    pub fn base(&self) -> &HermitianMatrix {
        &self.base
    }

    pub fn matrix(&self) -> &CMat {
        self.base.matrix()
    }

    pub fn dim(&self) -> usize {
        self.base.dim()
    }

    /// Rank = rounded trace.
    pub fn rank(&self) -> usize {
        self.base.trace().round() as usize
    }

    /// `1 - P`.
    pub fn complement(&self) -> Projector {
        let n = self.dim();
        Projector {
            base: HermitianMatrix::symmetrize(CMat::identity(n, n) - self.matrix()),
        }
    }

    /// `P X P` as a Hermitian matrix.
    pub fn sandwich(&self, x: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix::symmetrize(self.matrix() * x.matrix() * self.matrix())
    }

    /// Whether this projector is dominated by `other` (`P <= Q`), i.e.
    /// `Q_perp P` vanishes within `tol`.
    pub fn is_dominated_by(&self, other: &Projector, tol: f64) -> bool {
        let leak = self.domination_leak(other);
        leak <= tol
    }

    /// Operator norm of `Q_perp P Q_perp`; zero iff `P <= Q`.
    pub fn domination_leak(&self, other: &Projector) -> f64 {
        let q_perp = other.complement();
        let m = q_perp.matrix() * self.matrix() * q_perp.matrix();
        // Hermitian PSD by construction; the operator norm equals max eigenvalue.
        let h = HermitianMatrix::symmetrize(m);
        eig_hermitian(&h)
            .map(|s| s.eigenvalues().iter().fold(0.0f64, |a, &l| a.max(l.abs())))
            .unwrap_or(f64::INFINITY)
    }
}

/// Spectral decomposition with ascending eigenvalues and deterministically
/// phase-fixed eigenvectors.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    eigenvalues: Vec<f64>,
    eigenvectors: CMat,
}

impl Spectrum {
    /// Ascending real eigenvalues.
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    /// Unitary matrix whose columns are the eigenvectors, ordered to match
    /// [`Spectrum::eigenvalues`].
    pub fn eigenvectors(&self) -> &CMat {
        &self.eigenvectors
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn lambda_max(&self) -> f64 {
        *self.eigenvalues.last().unwrap_or(&0.0)
    }

    /// `U diag(f(lambda)) U\u{2020}`.
    pub fn map_eigenvalues(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let n = self.dim();
        let mut scaled = self.eigenvectors.clone();
        for (j, &l) in self.eigenvalues.iter().enumerate() {
            let w = C64::new(f(l), 0.0);
            for i in 0..n {
                scaled[(i, j)] *= w;
            }
        }
        HermitianMatrix::symmetrize(scaled * self.eigenvectors.adjoint())
    }

    /// `U diag(lambda) U\u{2020}`, for reconstruction checks.
    pub fn reconstruct(&self) -> HermitianMatrix {
        self.map_eigenvalues(|l| l)
    }

    /// Projector onto the span of eigenvectors selected by `keep(lambda)`.
    pub fn projector_onto(&self, keep: impl Fn(f64) -> bool) -> Projector {
        let cols: Vec<usize> = self
            .eigenvalues
            .iter()
            .enumerate()
            .filter(|(_, &l)| keep(l))
            .map(|(j, _)| j)
            .collect();
        if cols.is_empty() {
            return Projector::zero(self.dim());
        }
        let sel = self.eigenvectors.select_columns(&cols);
        Projector::from_orthonormal_columns(&sel)
    }
}

/// Spectral decomposition of a Hermitian matrix.
///
/// Eigenvalues come back ascending (stable sort, so degenerate eigenvalues
/// keep the solver's relative order) and each eigenvector's phase is fixed by
/// rotating its largest-magnitude component (first index on magnitude ties)
/// onto the positive real axis. Same input bytes give the same `Spectrum`.
pub fn eig_hermitian(h: &HermitianMatrix) -> Result<Spectrum> {
    let dim = h.dim();
    let eig = SymmetricEigen::try_new(h.matrix().clone(), f64::EPSILON, EIG_MAX_ITER).ok_or_else(
        || Error::EigenFailed {
            dim,
            max_abs: h.matrix().iter().fold(0.0f64, |a, z| a.max(z.norm())),
        },
    )?;
    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| {
        eig.eigenvalues[a]
            .partial_cmp(&eig.eigenvalues[b])
            .expect("hermitian eigenvalues are finite")
    });
    let mut eigenvalues = Vec::with_capacity(dim);
    let mut eigenvectors = CMat::zeros(dim, dim);
    for (slot, &src) in order.iter().enumerate() {
        eigenvalues.push(eig.eigenvalues[src]);
        let mut v: Vec<C64> = (0..dim).map(|i| eig.eigenvectors[(i, src)]).collect();
        let mut best = 0usize;
        let mut best_mag = 0.0f64;
        for (i, z) in v.iter().enumerate() {
            let m = z.norm();
            if m > best_mag {
                best_mag = m;
                best = i;
            }
        }
        if best_mag > 0.0 {
            let phase = v[best].conj() / C64::new(best_mag, 0.0);
            for z in v.iter_mut() {
                *z *= phase;
            }
        }
        for i in 0..dim {
            eigenvectors[(i, slot)] = v[i];
        }
    }
    Ok(Spectrum {
        eigenvalues,
        eigenvectors,
    })
}

/// Projector onto the support of a nonnegative matrix: the span of
/// eigenvectors whose eigenvalue clears the rank threshold. Full-rank inputs
/// yield the identity.
pub fn support_projector(x: &PsdMatrix) -> Result<Projector> {
    let s = eig_hermitian(x.base())?;
    let th = x.rank_threshold(s.lambda_max());
    Ok(s.projector_onto(|l| l > th))
}

/// Restricted logarithm `sum_{lambda_j > threshold} (log lambda_j) P |j><j| P`.
///
/// Defined only for projectors dominated by the support of `y`; anything else
/// is a domain error rather than a silent projection.
pub fn restricted_log(y: &PsdMatrix, p: &Projector) -> Result<HermitianMatrix> {
    if p.dim() != y.dim() {
        return Err(Error::DimensionMismatch {
            context: "restricted_log",
            expected: y.dim(),
            found: p.dim(),
        });
    }
    let s = eig_hermitian(y.base())?;
    let th = y.rank_threshold(s.lambda_max());
    let support = s.projector_onto(|l| l > th);
    let leak = p.domination_leak(&support);
    if leak > PROJECTOR_TOL {
        return Err(Error::ProjectorNotDominated { leak });
    }
    let log_y = s.map_eigenvalues(|l| if l > th { l.ln() } else { 0.0 });
    Ok(p.sandwich(&log_y))
}

/// Logarithm restricted to the matrix's own support (the `0 log 0 = 0`
/// convention): `sum_{lambda_j > threshold} (log lambda_j) |j><j|`.
pub fn log_on_support(y: &PsdMatrix) -> Result<HermitianMatrix> {
    let s = eig_hermitian(y.base())?;
    let th = y.rank_threshold(s.lambda_max());
    Ok(s.map_eigenvalues(|l| if l > th { l.ln() } else { 0.0 }))
}

/// `U diag(exp(lambda)) U\u{2020}`; errors out instead of overflowing when an
/// eigenvalue exceeds [`EXP_OVERFLOW_LIMIT`].
pub fn matrix_exp(h: &HermitianMatrix) -> Result<PsdMatrix> {
    let s = eig_hermitian(h)?;
    let max = s.lambda_max();
    if max > EXP_OVERFLOW_LIMIT {
        return Err(Error::ExpOverflow {
            max_exponent: max,
            limit: EXP_OVERFLOW_LIMIT,
        });
    }
    Ok(PsdMatrix::new_unchecked(s.map_eigenvalues(f64::exp)))
}

/// Square root of the pseudo-inverse: `W = sum_{lambda_j > threshold}
/// lambda_j^{-1/2} |j><j|`, so that `W X W = support_projector(X)`.
pub fn pseudo_inverse_sqrt(x: &PsdMatrix) -> Result<HermitianMatrix> {
    let s = eig_hermitian(x.base())?;
    let th = x.rank_threshold(s.lambda_max());
    Ok(s.map_eigenvalues(|l| if l > th { 1.0 / l.sqrt() } else { 0.0 }))
}

/// Pseudo-power `X^p` on the support: eigenvalues under the threshold map to
/// zero for any exponent, including negative ones.
pub fn psd_power(x: &PsdMatrix, p: f64) -> Result<PsdMatrix> {
    let s = eig_hermitian(x.base())?;
    let th = x.rank_threshold(s.lambda_max());
    Ok(PsdMatrix::new_unchecked(s.map_eigenvalues(|l| {
        if l > th {
            l.powf(p)
        } else {
            0.0
        }
    })))
}

/// `U W U\u{2020}` for a possibly rectangular `U` (isometries welcome).
pub fn conjugate(u: &CMat, w: &HermitianMatrix) -> Result<HermitianMatrix> {
    if u.ncols() != w.dim() {
        return Err(Error::DimensionMismatch {
            context: "conjugate",
            expected: u.ncols(),
            found: w.dim(),
        });
    }
    Ok(HermitianMatrix::symmetrize(
        u * w.matrix() * u.adjoint(),
    ))
}

/// Operator norm (largest singular value) and trace norm (sum of singular
/// values) of an arbitrary complex matrix.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Norms {
    pub operator: f64,
    pub trace: f64,
}

pub fn norms(x: &CMat) -> Norms {
    let sv = x.clone().singular_values();
    Norms {
        operator: sv.iter().fold(0.0f64, |a, &s| a.max(s)),
        trace: sv.iter().sum(),
    }
}

pub fn operator_norm(x: &CMat) -> f64 {
    norms(x).operator
}

pub fn trace_norm(x: &CMat) -> f64 {
    norms(x).trace
}
