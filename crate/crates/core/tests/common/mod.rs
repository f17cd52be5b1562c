//! Shared fixtures for the integration suites: the five worked examples, the
//! two one-dimensional corollary families, and the independent numeric
//! root-count oracle.

#![allow(dead_code)]

use delaystab::polycore::{parse_rat, rat, rat_i64, rat_to_f64, Rat, RatMatrix, UniPoly, Var};
use delaystab::stability::NeutralSystem;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn mat(rows: &[&[&str]]) -> RatMatrix {
    RatMatrix::from_rows(
        rows.iter()
            .map(|r| r.iter().map(|s| parse_rat(s).unwrap()).collect())
            .collect(),
    )
    .unwrap()
}

pub fn zeros(n: usize) -> RatMatrix {
    RatMatrix::zeros(n, n)
}

/// n=2, N=1: C = 0.1 I, A = [[-3,-2],[1,0]], B = alpha * [[0,1],[1,0]].
pub fn example1(alpha: &Rat) -> NeutralSystem {
    let c = mat(&[&["0.1", "0"], &["0", "0.1"]]);
    let a = mat(&[&["-3", "-2"], &["1", "0"]]);
    let mut b = zeros(2);
    *b.at_mut(0, 1) = alpha.clone();
    *b.at_mut(1, 0) = alpha.clone();
    NeutralSystem::new(a, vec![b], vec![c]).unwrap()
}

/// n=2, N=1: C = [[0,0.4],[0.4,0]], A = -I, B = alpha * [[0,1],[1,0]].
pub fn example2(alpha: &Rat) -> NeutralSystem {
    let c = mat(&[&["0", "0.4"], &["0.4", "0"]]);
    let a = mat(&[&["-1", "0"], &["0", "-1"]]);
    let mut b = zeros(2);
    *b.at_mut(0, 1) = alpha.clone();
    *b.at_mut(1, 0) = alpha.clone();
    NeutralSystem::new(a, vec![b], vec![c]).unwrap()
}

/// n=2, N=1: C = 0.2 I, A = diag(-2,-1), B = [[0,0.5],[0.5,0]].
pub fn example3() -> NeutralSystem {
    let c = mat(&[&["0.2", "0"], &["0", "0.2"]]);
    let a = mat(&[&["-2", "0"], &["0", "-1"]]);
    let b = mat(&[&["0", "0.5"], &["0.5", "0"]]);
    NeutralSystem::new(a, vec![b], vec![c]).unwrap()
}

/// n=3, N=1.
pub fn example4() -> NeutralSystem {
    let c = mat(&[
        &["0.5", "0", "0"],
        &["0", "0.2", "0"],
        &["0", "0", "0.3"],
    ]);
    let a = mat(&[
        &["-3", "-2", "-2"],
        &["2", "-2", "-2"],
        &["0", "0", "-2"],
    ]);
    let b = mat(&[
        &["-1", "1", "1"],
        &["1", "-1", "-1"],
        &["0", "0", "-1"],
    ]);
    NeutralSystem::new(a, vec![b], vec![c]).unwrap()
}

/// n=4, N=3: one neutral delay (C at lag 1) and three state delays.
pub fn example5() -> NeutralSystem {
    let c = mat(&[
        &["0.02", "0", "0.03", "0"],
        &["0", "0.01", "0", "0"],
        &["0", "0", "0.5", "0"],
        &["0", "0", "0", "0.25"],
    ]);
    let a = mat(&[
        &["0", "1", "0", "0"],
        &["0", "0", "1", "0"],
        &["0", "0", "0", "1"],
        &["-2", "-3", "-5", "-2"],
    ]);
    let b1 = mat(&[
        &["-0.05", "0.005", "0.25", "0"],
        &["0.005", "0.005", "0", "0"],
        &["0", "0", "0", "0"],
        &["-1", "0", "-0.5", "0"],
    ]);
    let b2 = mat(&[
        &["0.005", "0.0025", "0", "0"],
        &["0", "0", "0.05", "0"],
        &["0", "0", "0", "0.0005"],
        &["-1", "-0.5", "-0.5", "0"],
    ]);
    let b3 = mat(&[
        &["0.0375", "0", "0.075", "0.125"],
        &["0", "0.05", "0.05", "0"],
        &["0.05", "0.05", "0", "0"],
        &["0", "-2.5", "0", "-1"],
    ]);
    NeutralSystem::new(
        a,
        vec![b1, b2, b3],
        vec![c, zeros(4), zeros(4)],
    )
    .unwrap()
}

/// x' + c x'(t - tau) + a x + b x(t - tau) = 0, 1 + c != 0.
/// Delay-independent stable iff (1-c)(b-a) < 0 and (1+c)(b+a) > 0.
pub fn corollary1(a: &Rat, b: &Rat, c: &Rat) -> Result<NeutralSystem, delaystab::Error> {
    NeutralSystem::new(
        RatMatrix::from_rows(vec![vec![-a.clone()]]).unwrap(),
        vec![RatMatrix::from_rows(vec![vec![-b.clone()]]).unwrap()],
        vec![RatMatrix::from_rows(vec![vec![-c.clone()]]).unwrap()],
    )
}

/// x' + c x'(t - 2 tau) + a x + a x(t - tau) = 0, 1 + c != 0.
/// Delay-independent stable iff a > 0 and -1 < c <= 1/3.
pub fn corollary2(a: &Rat, c: &Rat) -> Result<NeutralSystem, delaystab::Error> {
    NeutralSystem::new(
        RatMatrix::from_rows(vec![vec![-a.clone()]]).unwrap(),
        vec![
            RatMatrix::from_rows(vec![vec![-a.clone()]]).unwrap(),
            RatMatrix::zeros(1, 1),
        ],
        vec![
            RatMatrix::zeros(1, 1),
            RatMatrix::from_rows(vec![vec![-c.clone()]]).unwrap(),
        ],
    )
}

/// Random polynomial assembled from known factors: returns (poly, distinct
/// real root values sorted ascending). Real roots separated by at least 0.05.
pub fn poly_with_known_roots(rng: &mut ChaCha8Rng, max_degree: usize) -> (UniPoly, Vec<f64>) {
    let lead = [-3i64, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
    let mut p = UniPoly::constant(Var::Z, rat_i64(lead));
    let mut roots: Vec<Rat> = Vec::new();
    let mut degree = 0usize;
    while degree < max_degree {
        if rng.gen_bool(0.6) && degree < max_degree {
            let mut attempts = 0;
            let r = loop {
                let cand = rat(rng.gen_range(-40..=40), rng.gen_range(1..=4));
                if roots.iter().all(|q| {
                    let d = rat_to_f64(&(q.clone() - cand.clone())).abs();
                    d == 0.0 || d > 5e-2
                }) {
                    break cand;
                }
                attempts += 1;
                if attempts > 50 {
                    break cand;
                }
            };
            let mult = if rng.gen_bool(0.2) && degree + 2 <= max_degree { 2 } else { 1 };
            for _ in 0..mult {
                p = p.mul(&UniPoly::new(Var::Z, vec![-r.clone(), rat_i64(1)])).unwrap();
                degree += 1;
            }
            if !roots.contains(&r) {
                roots.push(r);
            }
        } else if degree + 2 <= max_degree {
            // irreducible quadratic: (z - a)^2 + b^2, b != 0
            let a = rat(rng.gen_range(-8..=8), 2);
            let b = rat(rng.gen_range(1..=8), 2);
            let quad = UniPoly::new(
                Var::Z,
                vec![
                    a.clone() * a.clone() + b.clone() * b.clone(),
                    rat_i64(-2) * a,
                    rat_i64(1),
                ],
            );
            p = p.mul(&quad).unwrap();
            degree += 2;
        } else {
            break;
        }
    }
    roots.sort();
    (p, roots.iter().map(rat_to_f64).collect())
}

/// Independent numeric root-count oracle: sign-change scan on a fine grid
/// inside the Fujiwara bound, brackets refined by Newton. No exact algebra.
pub fn numeric_root_count(p: &UniPoly) -> usize {
    let coeffs = p.to_f64_coeffs();
    let n = coeffs.len() - 1;
    let deriv: Vec<f64> = coeffs
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * i as f64)
        .collect();
    let lead = *coeffs.last().unwrap();
    let bound = 2.0
        * (1..=n)
            .map(|k| (coeffs[n - k] / lead).abs().powf(1.0 / k as f64))
            .fold(0.0f64, f64::max)
        + 1.0;
    let grid = 150_000usize;
    let mut found: Vec<f64> = Vec::new();
    let mut prev_x = -bound;
    let mut prev_v = UniPoly::eval_f64(&coeffs, prev_x);
    for i in 1..=grid {
        let x = -bound + 2.0 * bound * i as f64 / grid as f64;
        let v = UniPoly::eval_f64(&coeffs, x);
        if prev_v == 0.0 {
            found.push(prev_x);
        } else if v != 0.0 && prev_v.signum() != v.signum() {
            let mut r = 0.5 * (prev_x + x);
            for _ in 0..60 {
                let f = UniPoly::eval_f64(&coeffs, r);
                let d = UniPoly::eval_f64(&deriv, r);
                if d == 0.0 {
                    break;
                }
                let step = f / d;
                r -= step;
                if step.abs() < 1e-14 * r.abs().max(1.0) {
                    break;
                }
            }
            found.push(r.clamp(prev_x, x));
        }
        prev_x = x;
        prev_v = v;
    }
    if prev_v == 0.0 {
        found.push(prev_x);
    }
    found.dedup_by(|a, b| (*a - *b).abs() < 1e-6);
    found.len()
}
