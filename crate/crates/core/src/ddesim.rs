//! Method-of-steps integration of the neutral system at a concrete delay.
//!
//! The delayed-derivative term is the defining feature of a neutral system,
//! so derivative samples are stored on the grid rather than re-differenced.
//! The step is an exact divisor of the delay: delayed lookups are array
//! indexing, never time comparisons. Stage values falling between grid points
//! use cubic Hermite interpolation from the stored (x, x') pairs.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::stability::NeutralSystem;

/// Initial data on [-N tau, 0].
#[derive(Clone)]
pub enum History {
    Constant(Vec<f64>),
    /// Value and derivative of the initial function.
    Function {
        x: Arc<dyn Fn(f64) -> Vec<f64> + Send + Sync>,
        dx: Arc<dyn Fn(f64) -> Vec<f64> + Send + Sync>,
    },
}

impl std::fmt::Debug for History {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            History::Constant(v) => write!(f, "Constant({v:?})"),
            History::Function { .. } => write!(f, "Function(..)"),
        }
    }
}

/// Simulation configuration. `step` must divide `tau` exactly with at least
/// 20 steps per delay interval, and the horizon spans at least 20 delays.
#[derive(Debug, Clone)]
pub struct SimConfig {
    pub tau: f64,
    pub step: f64,
    pub horizon: f64,
    pub history: History,
}

impl SimConfig {
    pub fn new(tau: f64, step: f64, horizon: f64, history: History) -> Result<Self> {
        if tau.is_nan() || tau <= 0.0 {
            return Err(Error::Config("tau must be positive".into()));
        }
        if step.is_nan() || step <= 0.0 {
            return Err(Error::Config("step must be positive".into()));
        }
        let ratio = tau / step;
        let m = ratio.round();
        if (ratio - m).abs() > 1e-9 * ratio.max(1.0) || m < 1.0 {
            return Err(Error::Config(format!(
                "step {step} must divide tau {tau} exactly"
            )));
        }
        if m < 20.0 {
            return Err(Error::Config("need at least 20 steps per delay (step <= tau/20)".into()));
        }
        if horizon < 20.0 * tau {
            return Err(Error::Config("horizon must cover at least 20 delays".into()));
        }
        Ok(SimConfig { tau, step: tau / m, horizon, history })
    }

    /// Sensible defaults: step = tau/m with m >= 20 and fine enough for the
    /// system timescale, horizon covering both 20 delays and a fixed span.
    pub fn default_for(tau: f64) -> Result<Self> {
        let m = (tau / 0.02).ceil().max(20.0);
        SimConfig::new(tau, tau / m, (20.0 * tau).max(60.0), History::Constant(Vec::new()))
    }

    fn steps_per_delay(&self) -> usize {
        (self.tau / self.step).round() as usize
    }
}

/// Integration output.
#[derive(Debug, Clone)]
pub struct Trajectory {
    pub times: Vec<f64>,
    pub states: Vec<Vec<f64>>,
    pub derivatives: Vec<Vec<f64>>,
    /// Fitted exponent of ||x(t)|| over the final third of the horizon.
    pub growth_rate: f64,
    /// Integration stopped early because the state norm exceeded 1e12.
    pub overflowed: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmpiricalStability {
    Decaying,
    Growing,
    Inconclusive,
}

struct DenseMat {
    n: usize,
    data: Vec<f64>,
}

impl DenseMat {
    fn from_rat(m: &crate::polycore::RatMatrix) -> Self {
        let n = m.nrows();
        let rows = m.to_f64();
        DenseMat { n, data: rows.into_iter().flatten().collect() }
    }

    fn mul_add(&self, x: &[f64], acc: &mut [f64]) {
        for (out, row) in acc.iter_mut().zip(self.data.chunks_exact(self.n)) {
            let mut s = 0.0;
            for (a, b) in row.iter().zip(x) {
                s += a * b;
            }
            *out += s;
        }
    }
}

/// Integrate x'(t) = A0 x(t) + sum A_k x(t-k tau) + sum B_k x'(t-k tau) with
/// the classical fourth-order scheme.
pub fn simulate(sys: &NeutralSystem, cfg: &SimConfig) -> Result<Trajectory> {
    let n = sys.dim();
    let big_n = sys.delay_count();
    let h = cfg.step;
    let m = cfg.steps_per_delay();
    let hist_len = big_n * m;
    let steps = (cfg.horizon / h).round() as usize;

    let a0 = DenseMat::from_rat(sys.a0());
    let aks: Vec<DenseMat> = sys.a().iter().map(DenseMat::from_rat).collect();
    let bks: Vec<DenseMat> = sys.b().iter().map(DenseMat::from_rat).collect();

    // grid storage with offset: index i corresponds to t = (i - hist_len) h
    let mut xs: Vec<Vec<f64>> = Vec::with_capacity(hist_len + steps + 1);
    let mut dxs: Vec<Vec<f64>> = Vec::with_capacity(hist_len + steps + 1);
    for i in 0..hist_len {
        let t = (i as f64 - hist_len as f64) * h;
        match &cfg.history {
            History::Constant(v) => {
                let v = if v.is_empty() { vec![1.0; n] } else { v.clone() };
                if v.len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: v.len() });
                }
                xs.push(v);
                dxs.push(vec![0.0; n]);
            }
            History::Function { x, dx } => {
                xs.push(x(t));
                dxs.push(dx(t));
                if xs[i].len() != n || dxs[i].len() != n {
                    return Err(Error::DimensionMismatch { expected: n, got: xs[i].len() });
                }
            }
        }
    }
    // t = 0 state from the history's right endpoint
    let x0 = match &cfg.history {
        History::Constant(v) => {
            if v.is_empty() {
                vec![1.0; n]
            } else {
                v.clone()
            }
        }
        History::Function { x, .. } => x(0.0),
    };
    xs.push(x0);

    // delayed contribution sum A_k x(t - k tau) + sum B_k x'(t - k tau) at a
    // grid index (exact) or half step (Hermite interpolated)
    let delayed = |xs: &Vec<Vec<f64>>, dxs: &Vec<Vec<f64>>, idx: usize, half: bool| -> Vec<f64> {
        let mut acc = vec![0.0; n];
        for k in 0..big_n {
            let j = idx - (k + 1) * m;
            if !half {
                aks[k].mul_add(&xs[j], &mut acc);
                bks[k].mul_add(&dxs[j], &mut acc);
            } else {
                // between grid points j and j+1
                let (x1, x2) = (&xs[j], &xs[j + 1]);
                let (d1, d2) = (&dxs[j], &dxs[j + 1]);
                let mut xv = vec![0.0; n];
                let mut dv = vec![0.0; n];
                for i in 0..n {
                    xv[i] = 0.5 * (x1[i] + x2[i]) + 0.125 * h * (d1[i] - d2[i]);
                    dv[i] = 1.5 * (x2[i] - x1[i]) / h - 0.25 * (d1[i] + d2[i]);
                }
                aks[k].mul_add(&xv, &mut acc);
                bks[k].mul_add(&dv, &mut acc);
            }
        }
        acc
    };

    let mut overflowed = false;
    for i in 0..steps {
        let idx = hist_len + i;
        // derivative at the current grid point from the defining relation
        let mut dx_now = delayed(&xs, &dxs, idx, false);
        a0.mul_add(&xs[idx], &mut dx_now);
        dxs.push(dx_now.clone());

        let d_half = delayed(&xs, &dxs, idx, true);
        let d_full = delayed(&xs, &dxs, idx + 1, false);

        let x = &xs[idx];
        let k1 = dx_now;
        let mut stage = vec![0.0; n];
        for j in 0..n {
            stage[j] = x[j] + 0.5 * h * k1[j];
        }
        let mut k2 = d_half.clone();
        a0.mul_add(&stage, &mut k2);
        for j in 0..n {
            stage[j] = x[j] + 0.5 * h * k2[j];
        }
        let mut k3 = d_half;
        a0.mul_add(&stage, &mut k3);
        for j in 0..n {
            stage[j] = x[j] + h * k3[j];
        }
        let mut k4 = d_full;
        a0.mul_add(&stage, &mut k4);

        let mut next = vec![0.0; n];
        let mut norm2 = 0.0;
        for j in 0..n {
            next[j] = x[j] + h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
            norm2 += next[j] * next[j];
        }
        xs.push(next);
        if norm2 > 1e24 {
            overflowed = true;
            break;
        }
    }
    // derivative at the final point
    let idx = xs.len() - 1;
    let mut dx_last = delayed(&xs, &dxs, idx, false);
    a0.mul_add(&xs[idx], &mut dx_last);
    dxs.push(dx_last);

    let times: Vec<f64> = (0..xs.len() - hist_len).map(|i| i as f64 * h).collect();
    let states: Vec<Vec<f64>> = xs[hist_len..].to_vec();
    let derivatives: Vec<Vec<f64>> = dxs[hist_len..].to_vec();
    let growth_rate = if overflowed {
        f64::INFINITY
    } else {
        fit_growth_rate(&times, &states)
    };
    Ok(Trajectory { times, states, derivatives, growth_rate, overflowed })
}

/// Least-squares slope of log ||x(t)|| over the final third of the horizon,
/// skipping the transient dominated by discontinuity propagation.
fn fit_growth_rate(times: &[f64], states: &[Vec<f64>]) -> f64 {
    let start = times.len() * 2 / 3;
    let pts: Vec<(f64, f64)> = times[start..]
        .iter()
        .zip(&states[start..])
        .map(|(t, x)| {
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            (*t, (norm + 1e-300).ln())
        })
        .collect();
    let n = pts.len() as f64;
    if pts.len() < 2 {
        return 0.0;
    }
    let sx: f64 = pts.iter().map(|p| p.0).sum();
    let sy: f64 = pts.iter().map(|p| p.1).sum();
    let sxx: f64 = pts.iter().map(|p| p.0 * p.0).sum();
    let sxy: f64 = pts.iter().map(|p| p.0 * p.1).sum();
    (n * sxy - sx * sy) / (n * sxx - sx * sx)
}

/// Classify the trajectory at a concrete delay with default configuration.
pub fn empirical_stability(sys: &NeutralSystem, tau: f64) -> Result<EmpiricalStability> {
    let cfg = SimConfig::default_for(tau)?;
    let traj = simulate(sys, &cfg)?;
    Ok(classify(traj.growth_rate))
}

pub fn classify(growth_rate: f64) -> EmpiricalStability {
    if growth_rate < -1e-3 {
        EmpiricalStability::Decaying
    } else if growth_rate > 1e-3 {
        EmpiricalStability::Growing
    } else {
        EmpiricalStability::Inconclusive
    }
}
