//! Harness library behind the `til` binary: sweep configuration and
//! execution, instance replay, limit studies, and seeded generation.

pub mod config;
pub mod gen;
pub mod limits;
pub mod sweep;
pub mod verify;

pub use config::{process_default_tol_rel, CheckKind, RankPolicy, SweepConfig};
pub use limits::{limit_study, write_csv, LimitRow, LimitStudy};
pub use sweep::{
    report_to_canonical_json, run_sweep, CellAggregate, CellKey, CheckReport, CheckStatus,
    SweepReport, TrialReport, TrialScalars,
};
pub use verify::{summary_lines, verify_instance, VerifyError};
