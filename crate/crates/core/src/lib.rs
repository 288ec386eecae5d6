//! Numerical verification toolkit for the recovery-map trace inequality and
//! the entropy bounds built on it.
//!
//! The crate provides four layers:
//!
//! * [`linalg`] — dense Hermitian foundations: spectral decompositions,
//!   matrix functions, support projectors, restricted logarithms,
//!   pseudo-inverses, and norms, all rank-aware.
//! * [`channels`] — CPTP maps as Kraus families, with the adjoint action,
//!   Stinespring isometric extensions, partial traces, and seeded random
//!   generation of channels and states.
//! * [`entropies`] and [`ruskai`] — relative and Renyi entropies, fidelity,
//!   the monotonicity remainder, and the recovery map itself in strictly
//!   positive, extended nonnegative, and delta-regularized forms, together
//!   with the remainder decomposition and its Renyi lower bounds.
//! * [`oracles`] — standalone verifiers for every inequality the proofs rest
//!   on (generalized Golden-Thompson, the triple-matrix inequality with an
//!   exact spectral integral, three support lemmas) plus step-by-step audits
//!   of both proof chains.
//!
//! All operations are pure functions on immutable values and safe to call
//! concurrently; random generation takes explicit seeds.

pub mod channels;
pub mod entropies;
pub mod error;
pub mod io;
pub mod linalg;
pub mod oracles;
pub mod rng;
pub mod ruskai;

mod book;

pub use channels::{
    complement_projector, partial_trace, random_channel, random_state, random_state_in_support,
    Channel, DensityMatrix, Isometry, TraceOut,
};
pub use entropies::{
    fidelity, relative_entropy, relative_entropy_psd, remainder, renyi_relative_entropy,
    renyi_relative_entropy_psd, EntropyValue,
};
pub use error::{Error, Result};
pub use linalg::{
    conjugate, eig_hermitian, log_on_support, matrix_exp, norms, operator_norm,
    pseudo_inverse_sqrt, psd_power, restricted_log, support_projector, trace_norm, CMat,
    HermitianMatrix, Norms, Projector, PsdMatrix, Spectrum, C64,
};
pub use oracles::{
    golden_thompson, lemma1_check, lemma2_check, lemma3_check, lieb_triple, lieb_triple_rhs,
    theorem1_chain_audit, theorem2_chain_audit, ChainAudit, InequalityVerdict, NormKind,
    ProofChainIntermediates, StrictChainAudit, DEFAULT_TOL_REL,
};
pub use rng::{derive_seed, SeededRng};
pub use ruskai::{
    decomposition_check, equality_check, omega, renyi_lower_bounds, ruskai_map_extended,
    ruskai_map_regularized, ruskai_map_strict, Decomposition, EqualityFlags, EqualityTolerances,
    RenyiBound, RuskaiResult,
};
