//! Delay-independent stability pipeline: condition construction and checks,
//! overall verdict, delay bound, and parameter sweeps.

mod analyze;
mod conditions;
mod sweep;
mod system;

pub use analyze::{analyze, analyze_with, delay_bound, StabilityVerdict};
pub use conditions::{
    build_condition_i, build_condition_iii, check_condition_i, check_condition_ii,
    check_condition_iii, common_real_roots_of_pair, residuals_pass, ConditionIIIReport,
    ConditionIIReport, ConditionIReport, Tolerances, Witness,
};
pub use sweep::{
    default_endpoint_tolerance, sweep, PointVerdict, SweepBoundary, SweepPoint, SweepReport,
};
pub use system::{parse_entry_path, MatrixSlot, NeutralSystem};
