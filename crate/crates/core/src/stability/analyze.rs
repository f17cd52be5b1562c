//! Overall verdict: conjunction of the three conditions, plus the maximal
//! delay bound when only condition (iii) fails.

use crate::error::{Error, Result};
use crate::stability::conditions::{
    check_condition_i, check_condition_ii, check_condition_iii, ConditionIIIReport,
    ConditionIIReport, ConditionIReport, Tolerances, Witness,
};
use crate::stability::system::NeutralSystem;

/// Full analysis outcome.
#[derive(Debug, Clone)]
pub struct StabilityVerdict {
    pub condition_i: ConditionIReport,
    pub condition_ii: ConditionIIReport,
    pub condition_iii: ConditionIIIReport,
    pub delay_independent_stable: bool,
    /// Maximal delay bound T; present only when conditions (i) and (ii) hold
    /// and condition (iii) fails with concrete witnesses.
    pub delay_bound: Option<f64>,
    pub bound_applicable: bool,
}

/// Decide delay-independent stability of the system.
pub fn analyze(sys: &NeutralSystem) -> Result<StabilityVerdict> {
    analyze_with(sys, &Tolerances::default())
}

pub fn analyze_with(sys: &NeutralSystem, tol: &Tolerances) -> Result<StabilityVerdict> {
    let condition_i = check_condition_i(sys)?;
    let condition_ii = check_condition_ii(sys)?;
    let condition_iii = check_condition_iii(sys, tol)?;
    let delay_independent_stable =
        condition_i.passed && condition_ii.passed && condition_iii.passed;
    let bound_applicable = condition_i.passed && condition_ii.passed && !condition_iii.passed;
    let delay_bound = if bound_applicable && !condition_iii.witnesses.is_empty() {
        Some(delay_bound(&condition_iii.witnesses)?)
    } else {
        None
    };
    Ok(StabilityVerdict {
        condition_i,
        condition_ii,
        condition_iii,
        delay_independent_stable,
        delay_bound,
        bound_applicable,
    })
}

/// Maximal delay bound from the witness set: each witness (z, y) crosses the
/// imaginary axis at theta = 2 atan(z) and -y tau = theta (mod 2 pi); the
/// bound is the smallest positive tau over all witnesses and branches.
pub fn delay_bound(witnesses: &[Witness]) -> Result<f64> {
    if witnesses.is_empty() {
        return Err(Error::Config("delay bound needs at least one witness".into()));
    }
    let mut best = f64::INFINITY;
    for w in witnesses {
        let theta = 2.0 * w.z.atan();
        let period = 2.0 * std::f64::consts::PI / w.y.abs();
        let t0 = -theta / w.y;
        let mut tau = t0 - period * (t0 / period).floor();
        if tau <= 0.0 {
            tau += period;
        }
        if tau < best {
            best = tau;
        }
    }
    Ok(best)
}
