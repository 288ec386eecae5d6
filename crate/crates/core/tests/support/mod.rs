//! Shared helpers for integration tests. The quadrature here is the
//! independent oracle for the triple-matrix integral: it never touches the
//! spectral formula it is used to check.
#![allow(dead_code)]

use til_core::{CMat, C64, PsdMatrix, SeededRng};

/// `Tr X (Y + t)^{-1} Z (Y + t)^{-1}` at a single `t`, via direct inversion.
fn integrand(x: &CMat, y: &CMat, z: &CMat, t: f64) -> f64 {
    let n = y.nrows();
    let shifted = y + CMat::identity(n, n) * C64::new(t, 0.0);
    let inv = shifted
        .lu()
        .try_inverse()
        .expect("Y + t is strictly positive");
    (x * &inv * z * &inv).trace().re
}

/// Adaptive Simpson refinement on `[a, b]`.
fn adaptive_simpson(
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: usize,
) -> f64 {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    if depth == 0 || (left + right - whole).abs() <= 15.0 * tol {
        left + right + (left + right - whole) / 15.0
    } else {
        adaptive_simpson(f, a, m, fa, flm, fm, left, tol / 2.0, depth - 1)
            + adaptive_simpson(f, m, b, fm, frm, fb, right, tol / 2.0, depth - 1)
    }
}

/// The t-integral `int_0^inf Tr X (Y+t)^{-1} Z (Y+t)^{-1} dt`, evaluated by
/// substituting `t = c s/(1-s)` (with `c` the mean eigenvalue of `Y`, so the
/// resolvent's transition region lands mid-interval) and adaptively refining
/// over `[0, 1)` to `1e-8` absolute relative to the integral's own scale.
pub fn quadrature_triple_integral(x: &PsdMatrix, y: &PsdMatrix, z: &PsdMatrix) -> f64 {
    let xm = x.matrix();
    let ym = y.matrix();
    let zm = z.matrix();
    let c = y.trace() / y.dim() as f64;
    let g = move |s: f64| -> f64 {
        let one_minus = 1.0 - s;
        let t = c * s / one_minus;
        integrand(xm, ym, zm, t) * c / (one_minus * one_minus)
    };
    // stop just short of s = 1; the integrand decays as 1/t^2 so the tail
    // beyond s_max is far below the tolerance
    let s_max = 1.0 - 1e-8;
    let a = 0.0;
    let fa = g(a);
    let fb = g(s_max);
    let m = 0.5 * (a + s_max);
    let fm = g(m);
    let whole = (s_max - a) / 6.0 * (fa + 4.0 * fm + fb);
    let tol = 1e-8 * whole.abs().max(1.0);
    adaptive_simpson(&g, a, s_max, fa, fm, fb, whole, tol, 36)
}

/// Strictly positive PSD matrix with spectrum bounded away from zero.
pub fn random_strict_psd(dim: usize, rng: &mut SeededRng) -> PsdMatrix {
    til_core::rng::random_strict_psd(dim, rng)
}
