//! Exact algebraic stability analysis for linear neutral delay differential
//! systems with commensurate delays.
//!
//! The library decides delay-independent stability of
//! `x'(t) - sum B_k x'(t - k tau) = A0 x(t) + sum A_k x(t - k tau)`
//! through three algebraic conditions evaluated in exact rational arithmetic,
//! computes the maximal delay bound when stability is delay-dependent, and
//! cross-checks verdicts with a direct method-of-steps simulation.

pub mod algebraic;
pub mod ddesim;
pub mod error;
pub mod polycore;
pub mod stability;

pub use error::{Error, Result};
pub use stability::{analyze, NeutralSystem, StabilityVerdict};
