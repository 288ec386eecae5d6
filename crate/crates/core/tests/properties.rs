//! Property tests over randomized Hermitian and PSD inputs.

use proptest::prelude::*;
use til_core::{
    eig_hermitian, matrix_exp, operator_norm, pseudo_inverse_sqrt, restricted_log,
    support_projector, trace_norm, CMat, C64, HermitianMatrix, PsdMatrix, SeededRng,
};

fn hermitian_from_seed(dim: usize, seed: u64) -> HermitianMatrix {
    let mut rng = SeededRng::from_seed(seed);
    til_core::rng::random_hermitian(dim, &mut rng)
}

fn psd_from_seed(dim: usize, rank: usize, seed: u64) -> PsdMatrix {
    let mut rng = SeededRng::from_seed(seed);
    let g = rng.gaussian_matrix(dim, rank);
    PsdMatrix::new(HermitianMatrix::new(&g * g.adjoint()).unwrap()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn support_projector_preserves_the_matrix(dim in 2usize..5, seed in 0u64..1_000_000) {
        let rank = 1 + (seed as usize % dim);
        let x = psd_from_seed(dim, rank, seed);
        let p = support_projector(&x).unwrap();
        let pinched = p.matrix() * x.matrix() * p.matrix();
        let max_eig = eig_hermitian(x.base()).unwrap().lambda_max();
        let allowance = (dim as f64) * f64::EPSILON * max_eig.max(1.0) * 100.0;
        prop_assert!(operator_norm(&(pinched - x.matrix())) <= allowance);
    }

    #[test]
    fn restricted_log_zeroes_below_threshold(dim in 2usize..5, seed in 0u64..1_000_000) {
        let rank = 1 + (seed as usize % (dim - 1));
        let x = psd_from_seed(dim, rank, seed);
        let p = support_projector(&x).unwrap();
        let log = restricted_log(&x, &p).unwrap();
        // the log lives entirely inside the support
        let perp = p.complement();
        let outside = perp.matrix() * log.matrix() * perp.matrix();
        prop_assert!(operator_norm(&outside) < 1e-10);
    }

    #[test]
    fn exp_of_shift_is_scalar_multiple(dim in 2usize..5, seed in 0u64..1_000_000, c in -2.0f64..2.0) {
        let h = hermitian_from_seed(dim, seed);
        let shifted = &h + &HermitianMatrix::identity(dim).scale(c);
        let lhs = matrix_exp(&shifted).unwrap();
        let rhs = matrix_exp(&h).unwrap().scale(c.exp()).unwrap();
        let scale = operator_norm(rhs.matrix()).max(1.0);
        prop_assert!(operator_norm(&(lhs.matrix() - rhs.matrix())) <= 1e-10 * scale);
    }

    #[test]
    fn pseudo_inverse_sqrt_commutes(dim in 2usize..5, seed in 0u64..1_000_000) {
        let rank = 1 + (seed as usize % dim);
        let x = psd_from_seed(dim, rank, seed);
        let w = pseudo_inverse_sqrt(&x).unwrap();
        let comm = w.matrix() * x.matrix() - x.matrix() * w.matrix();
        prop_assert!(operator_norm(&comm) < 1e-9);
    }

    #[test]
    fn eig_is_bit_deterministic(dim in 2usize..5, seed in 0u64..1_000_000) {
        let h = hermitian_from_seed(dim, seed);
        let a = eig_hermitian(&h).unwrap();
        let b = eig_hermitian(&h).unwrap();
        prop_assert_eq!(a.eigenvalues(), b.eigenvalues());
        prop_assert_eq!(a.eigenvectors(), b.eigenvectors());
    }

    #[test]
    fn trace_norm_dominates(rows in 1usize..4, cols in 1usize..4, seed in 0u64..1_000_000) {
        let mut rng = SeededRng::from_seed(seed);
        let m = rng.gaussian_matrix(rows, cols);
        let n = til_core::norms(&m);
        prop_assert!(n.trace >= n.operator - 1e-12);
        if rows == cols {
            prop_assert!(n.trace >= m.trace().norm() - 1e-10);
        }
    }

    #[test]
    fn unitary_conjugation_preserves_norms(dim in 2usize..5, seed in 0u64..1_000_000) {
        let mut rng = SeededRng::from_seed(seed);
        let h = til_core::rng::random_hermitian(dim, &mut rng);
        let u = til_core::rng::random_unitary(dim, &mut rng);
        let rotated = til_core::conjugate(&u, &h).unwrap();
        prop_assert!((operator_norm(rotated.matrix()) - operator_norm(h.matrix())).abs() < 1e-9);
        prop_assert!((trace_norm(rotated.matrix()) - trace_norm(h.matrix())).abs() < 1e-9);
    }
}

#[test]
fn identity_exp_round_trip() {
    let id = CMat::identity(3, 3);
    let h = HermitianMatrix::new(id.clone() * C64::new(0.0, 0.0)).unwrap();
    let e = matrix_exp(&h).unwrap();
    assert!(operator_norm(&(e.matrix() - &id)) < 1e-14);
}
