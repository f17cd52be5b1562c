//! Parameter sweeps: verdicts on an exact grid plus bisection refinement of
//! the stability-region boundaries.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::polycore::{rat_to_f64, Rat};
use crate::stability::analyze::analyze;
use crate::stability::system::NeutralSystem;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointVerdict {
    Stable,
    NotStable,
    /// The system is invalid at this parameter value (for example the
    /// standing assumption det(I - sum B_k) != 0 fails).
    Invalid,
}

#[derive(Debug, Clone)]
pub struct SweepPoint {
    pub value: Rat,
    pub verdict: PointVerdict,
}

/// A verdict flip bracketed to the endpoint tolerance.
#[derive(Debug, Clone)]
pub struct SweepBoundary {
    pub lo: Rat,
    pub hi: Rat,
    pub refined: f64,
    pub from: PointVerdict,
    pub to: PointVerdict,
}

#[derive(Debug, Clone)]
pub struct SweepReport {
    pub points: Vec<SweepPoint>,
    pub boundaries: Vec<SweepBoundary>,
}

impl SweepReport {
    /// Maximal stable runs as (lo, hi) in parameter space. Interior run edges
    /// are the refined flip boundaries; runs touching the sweep range keep
    /// the grid endpoint.
    pub fn stable_regions(&self) -> Vec<(f64, f64)> {
        let mut out = Vec::new();
        let mut flip = 0usize;
        let mut start: Option<f64> = None;
        for (i, p) in self.points.iter().enumerate() {
            let stable = p.verdict == PointVerdict::Stable;
            if stable && start.is_none() {
                start = Some(if i == 0 {
                    rat_to_f64(&p.value)
                } else {
                    self.boundaries[flip - 1].refined
                });
            }
            let next_differs =
                i + 1 < self.points.len() && self.points[i + 1].verdict != p.verdict;
            if stable && (next_differs || i + 1 == self.points.len()) {
                let end = if next_differs {
                    self.boundaries[flip].refined
                } else {
                    rat_to_f64(&p.value)
                };
                out.push((start.take().expect("run start recorded"), end));
            }
            if next_differs {
                flip += 1;
            }
        }
        out
    }
}

/// Default boundary refinement tolerance.
pub fn default_endpoint_tolerance() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10_000))
}

/// Evaluate the verdict across an exact parameter grid and refine each
/// verdict flip by bisection.
///
/// `build` instantiates the system at a parameter value; grid points are
/// lo + i (hi - lo)/(steps - 1), all exact rationals.
pub fn sweep(
    build: &dyn Fn(&Rat) -> Result<NeutralSystem>,
    lo: &Rat,
    hi: &Rat,
    steps: usize,
    endpoint_tol: &Rat,
) -> Result<SweepReport> {
    if lo == hi {
        let verdict = verdict_at(build, lo);
        return Ok(SweepReport {
            points: vec![SweepPoint { value: lo.clone(), verdict }],
            boundaries: Vec::new(),
        });
    }
    if steps < 2 {
        return Err(Error::Config("sweep needs at least 2 steps".into()));
    }
    let span = hi.clone() - lo.clone();
    let denom = Rat::from_integer(BigInt::from(steps as i64 - 1));
    let points: Vec<SweepPoint> = (0..steps)
        .map(|i| {
            let value = lo.clone() + span.clone() * Rat::from_integer(BigInt::from(i as i64)) / denom.clone();
            let verdict = verdict_at(build, &value);
            SweepPoint { value, verdict }
        })
        .collect();

    let mut boundaries = Vec::new();
    for w in points.windows(2) {
        if w[0].verdict == w[1].verdict {
            continue;
        }
        let (mut a, mut b) = (w[0].value.clone(), w[1].value.clone());
        let (va, vb) = (w[0].verdict, w[1].verdict);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        while b.clone() - a.clone() > *endpoint_tol {
            let m = (a.clone() + b.clone()) * half.clone();
            if verdict_at(build, &m) == va {
                a = m;
            } else {
                b = m;
            }
        }
        let refined = rat_to_f64(&((a.clone() + b.clone()) * half));
        boundaries.push(SweepBoundary { lo: a, hi: b, refined, from: va, to: vb });
    }
    Ok(SweepReport { points, boundaries })
}

fn verdict_at(build: &dyn Fn(&Rat) -> Result<NeutralSystem>, value: &Rat) -> PointVerdict {
    match build(value).and_then(|sys| analyze(&sys)) {
        Ok(v) if v.delay_independent_stable => PointVerdict::Stable,
        Ok(_) => PointVerdict::NotStable,
        Err(_) => PointVerdict::Invalid,
    }
}
