//! The three algebraic stability conditions.
//!
//! (i)   the difference operator stays nonsingular on the unit circle:
//!       f(z) = Re d(z) and g(z) = Im d(z) share no real root, where d is the
//!       bilinear-transformed symbol det[(1-iz)^N I - sum B_k (1+iz)^k (1-iz)^(N-k)];
//! (ii)  Re lambda[(I - sum B_k)^-1 (A0 + sum A_k)] < 0 via the Hurwitz test;
//! (iii) F(z,y) = Re D(z,y) and G(z,y) = Im D(z,y) share no real root with
//!       y != 0, decided through the two resultants and verified candidates.

use num_traits::{One, Signed, Zero};

use crate::algebraic::{
    bivar_resultant, hurwitz_stable, isolate_real_roots, sylvester_resultant,
};
use crate::error::{Error, Result};
use crate::polycore::{
    imag_unit, pencil_char_poly, rat_from_f64, rat_to_f64, BiPoly, CBiPoly, CRat, CUniPoly,
    PolyMatrix, Rat, UniPoly, Var,
};
use crate::stability::system::NeutralSystem;

/// Numeric acceptance thresholds for condition-(iii) witnesses.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Relative residual bound for accepting a polished common root.
    pub residual_rel: f64,
    /// Witnesses with |y| below this are discarded (the y = 0 axis belongs to
    /// condition (ii)).
    pub y_exclusion: f64,
    /// Interval width for root refinement.
    pub root_width: Rat,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            residual_rel: 1e-8,
            y_exclusion: 1e-9,
            root_width: crate::algebraic::default_root_tolerance(),
        }
    }
}

/// Evidence for condition (i).
#[derive(Debug, Clone)]
pub struct ConditionIReport {
    pub f: UniPoly,
    pub g: UniPoly,
    /// Resultant of (f, g); None when one part is identically zero.
    pub resultant: Option<Rat>,
    /// det[I - sum B_k (-1)^k] != 0: the theta = pi point that the bilinear
    /// transform cannot reach.
    pub pole_ok: bool,
    pub common_real_roots: Vec<f64>,
    pub passed: bool,
}

/// Evidence for condition (ii).
#[derive(Debug, Clone)]
pub struct ConditionIIReport {
    pub char_poly: UniPoly,
    pub hurwitz_minors: Vec<Rat>,
    pub passed: bool,
}

/// A verified common real root of F and G with y != 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Witness {
    pub z: f64,
    pub y: f64,
}

/// Evidence for condition (iii).
#[derive(Debug, Clone)]
pub struct ConditionIIIReport {
    pub f: BiPoly,
    pub g: BiPoly,
    /// R(F,G)(y): z eliminated.
    pub res_y: UniPoly,
    /// R~(F,G)(z): y eliminated.
    pub res_z: UniPoly,
    pub witnesses: Vec<Witness>,
    /// A resultant vanished identically: F and G share a polynomial factor,
    /// the common-root set is a whole curve rather than isolated points.
    pub common_component: bool,
    /// The theta = pi point contributes a common root with y != 0.
    pub pole_witness: bool,
    pub passed: bool,
}

fn one_minus_iz() -> CUniPoly {
    CUniPoly::new(Var::Z, vec![CRat::one(), -imag_unit()])
}

fn one_plus_iz() -> CUniPoly {
    CUniPoly::new(Var::Z, vec![CRat::one(), imag_unit()])
}

fn lift_to_bipoly(p: &CUniPoly) -> CBiPoly {
    CBiPoly::new(p.coeffs().iter().map(|c| vec![c.clone()]).collect())
}

/// d(z) = det[(1-iz)^N I - sum B_k (1+iz)^k (1-iz)^(N-k)], split into exact
/// real and imaginary parts (f, g).
pub fn build_condition_i(sys: &NeutralSystem) -> (UniPoly, UniPoly) {
    let n = sys.dim();
    let nn = sys.delay_count();
    let wm = one_minus_iz();
    let wp = one_plus_iz();
    // w_k = (1+iz)^k (1-iz)^(N-k)
    let w: Vec<CUniPoly> = (0..=nn)
        .map(|k| wp.pow(k).mul(&wm.pow(nn - k)).unwrap())
        .collect();
    let rows: Vec<Vec<CUniPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let mut e = if r == c { w[0].clone() } else { CUniPoly::zero(Var::Z) };
                    for (k, bk) in sys.b().iter().enumerate() {
                        let coeff = bk.at(r, c);
                        if !coeff.is_zero() {
                            let term = w[k + 1].scale(&CRat::new(coeff.clone(), Rat::zero()));
                            e = e.sub(&term).unwrap();
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    let d = PolyMatrix::new(rows).expect("n >= 1").det();
    d.split_real_imag()
}

/// D(z,y) = det[(iy I - A0)(1-iz)^N - iy sum B_k w_k - sum A_k w_k], split
/// into exact real and imaginary parts (F, G).
pub fn build_condition_iii(sys: &NeutralSystem) -> (BiPoly, BiPoly) {
    let n = sys.dim();
    let nn = sys.delay_count();
    let wm = one_minus_iz();
    let wp = one_plus_iz();
    let w: Vec<CBiPoly> = (0..=nn)
        .map(|k| lift_to_bipoly(&wp.pow(k).mul(&wm.pow(nn - k)).unwrap()))
        .collect();
    let iy = CBiPoly::monomial(imag_unit(), 0, 1);
    let rows: Vec<Vec<CBiPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    // (iy delta_rc - A0[r][c]) (1-iz)^N
                    let mut head = if r == c { iy.clone() } else { CBiPoly::zero() };
                    let a0 = sys.a0().at(r, c);
                    if !a0.is_zero() {
                        head = head.sub(&CBiPoly::constant(CRat::new(a0.clone(), Rat::zero())));
                    }
                    let mut e = head.mul(&w[0]);
                    for k in 0..nn {
                        let bk = sys.b()[k].at(r, c);
                        if !bk.is_zero() {
                            let term = iy
                                .scale(&CRat::new(bk.clone(), Rat::zero()))
                                .mul(&w[k + 1]);
                            e = e.sub(&term);
                        }
                        let ak = sys.a()[k].at(r, c);
                        if !ak.is_zero() {
                            let term = w[k + 1].scale(&CRat::new(ak.clone(), Rat::zero()));
                            e = e.sub(&term);
                        }
                    }
                    e
                })
                .collect()
        })
        .collect();
    let d = PolyMatrix::new(rows).expect("n >= 1").det();
    d.split_real_imag()
}

/// Common real roots of a univariate pair, exactly.
///
/// Fast path: nonzero resultant means no common root at all. Zero resultant
/// falls back to the real roots of gcd(f, g), which are exactly the common
/// real roots. Returns the resultant (when defined) alongside.
pub fn common_real_roots_of_pair(
    f: &UniPoly,
    g: &UniPoly,
    root_width: &Rat,
) -> Result<(Option<Rat>, Vec<f64>)> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    if f.is_zero() || g.is_zero() {
        let other = if f.is_zero() { g } else { f };
        if other.degree() == 0 {
            return Ok((None, Vec::new()));
        }
        let roots = isolate_real_roots(other, root_width)?;
        return Ok((None, roots.into_iter().map(|r| r.refined).collect()));
    }
    let res = sylvester_resultant(f, g)?;
    if !res.is_zero() {
        return Ok((Some(res), Vec::new()));
    }
    let h = f.gcd(g)?;
    if h.degree() == 0 {
        return Ok((Some(res), Vec::new()));
    }
    let roots = isolate_real_roots(&h, root_width)?;
    Ok((Some(res), roots.into_iter().map(|r| r.refined).collect()))
}

/// Condition (i): f and g share no real root and the theta = pi point keeps
/// the difference operator nonsingular.
pub fn check_condition_i(sys: &NeutralSystem) -> Result<ConditionIReport> {
    let (f, g) = build_condition_i(sys);
    let pole_ok = !sys.pole_lhs().det()?.is_zero();
    let (resultant, common_real_roots) =
        common_real_roots_of_pair(&f, &g, &crate::algebraic::default_root_tolerance())?;
    let passed = common_real_roots.is_empty() && pole_ok;
    Ok(ConditionIReport { f, g, resultant, pole_ok, common_real_roots, passed })
}

/// Condition (ii): the pencil characteristic polynomial passes the Hurwitz
/// test.
pub fn check_condition_ii(sys: &NeutralSystem) -> Result<ConditionIIReport> {
    let char_poly = pencil_char_poly(&sys.neutral_pencil_lhs(), &sys.total_state_matrix())?;
    let hw = hurwitz_stable(&char_poly)?;
    Ok(ConditionIIReport { char_poly, hurwitz_minors: hw.minors, passed: hw.stable })
}

/// Condition (iii): no common real root (z, y) with y != 0.
pub fn check_condition_iii(sys: &NeutralSystem, tol: &Tolerances) -> Result<ConditionIIIReport> {
    let (f, g) = build_condition_iii(sys);
    if f.is_zero() && g.is_zero() {
        return Err(Error::DegenerateSystem);
    }
    if f.is_zero() || g.is_zero() {
        // one identically-zero part leaves a whole curve of common roots
        return Ok(ConditionIIIReport {
            res_y: UniPoly::zero(Var::Y),
            res_z: UniPoly::zero(Var::Z),
            witnesses: Vec::new(),
            common_component: true,
            pole_witness: false,
            passed: false,
            f,
            g,
        });
    }
    let res_y = bivar_resultant(&f, &g, Var::Z)?;
    let res_z = bivar_resultant(&f, &g, Var::Y)?;
    let common_component = res_y.is_zero() || res_z.is_zero();

    let pole_witness = pole_has_witness(sys, tol)?;

    let mut witnesses = Vec::new();
    if !common_component {
        witnesses = find_witnesses(&f, &g, &res_y, &res_z, tol)?;
        let mut extra = degenerate_leading_witnesses(&f, &g, tol)?;
        witnesses.append(&mut extra);
        dedup_witnesses(&mut witnesses);
    }
    let passed = witnesses.is_empty() && !common_component && !pole_witness;
    Ok(ConditionIIIReport {
        f,
        g,
        res_y,
        res_z,
        witnesses,
        common_component,
        pole_witness,
        passed,
    })
}

/// At theta = pi the transform degenerates; test
/// det[iy (I - sum B_k (-1)^k) - (A0 + sum A_k (-1)^k)] != 0 for real y != 0
/// directly.
fn pole_has_witness(sys: &NeutralSystem, tol: &Tolerances) -> Result<bool> {
    let n = sys.dim();
    let p = sys.pole_lhs();
    let q = sys.pole_rhs();
    let rows: Vec<Vec<CUniPoly>> = (0..n)
        .map(|r| {
            (0..n)
                .map(|c| {
                    let lin = CRat::new(Rat::zero(), p.at(r, c).clone());
                    let con = CRat::new(-q.at(r, c).clone(), Rat::zero());
                    CUniPoly::new(Var::Y, vec![con, lin])
                })
                .collect()
        })
        .collect();
    let h = PolyMatrix::new(rows).expect("n >= 1").det();
    let (hr, hi) = h.split_real_imag();
    if hr.is_zero() && hi.is_zero() {
        return Ok(true);
    }
    let (_, roots) = common_real_roots_of_pair(&hr, &hi, &tol.root_width)?;
    Ok(roots.iter().any(|y| y.abs() > tol.y_exclusion))
}

/// Candidate generation per the resultant cross product, Newton polish on
/// (F, G), then exact residual verification.
fn find_witnesses(
    f: &BiPoly,
    g: &BiPoly,
    res_y: &UniPoly,
    res_z: &UniPoly,
    tol: &Tolerances,
) -> Result<Vec<Witness>> {
    let z_seeds: Vec<f64> = if res_z.degree() == 0 {
        Vec::new()
    } else {
        isolate_real_roots(res_z, &tol.root_width)?
            .into_iter()
            .map(|r| r.refined)
            .collect()
    };
    let y_seeds: Vec<f64> = if res_y.degree() == 0 {
        Vec::new()
    } else {
        isolate_real_roots(res_y, &tol.root_width)?
            .into_iter()
            .map(|r| r.refined)
            .filter(|y| y.abs() > tol.y_exclusion)
            .collect()
    };

    let fg = f.to_f64_grid();
    let gg = g.to_f64_grid();
    let fz = f.derivative(Var::Z).to_f64_grid();
    let fy = f.derivative(Var::Y).to_f64_grid();
    let gz = g.derivative(Var::Z).to_f64_grid();
    let gy = g.derivative(Var::Y).to_f64_grid();

    let mut out = Vec::new();
    for &z0 in &z_seeds {
        for &y0 in &y_seeds {
            let (mut z, mut y) = (z0, y0);
            let mut converged = false;
            for _ in 0..60 {
                let fv = BiPoly::eval_f64(&fg, z, y);
                let gv = BiPoly::eval_f64(&gg, z, y);
                let j11 = BiPoly::eval_f64(&fz, z, y);
                let j12 = BiPoly::eval_f64(&fy, z, y);
                let j21 = BiPoly::eval_f64(&gz, z, y);
                let j22 = BiPoly::eval_f64(&gy, z, y);
                let det = j11 * j22 - j12 * j21;
                if det == 0.0 || !det.is_finite() {
                    break;
                }
                let dz = (fv * j22 - gv * j12) / det;
                let dy = (gv * j11 - fv * j21) / det;
                z -= dz;
                y -= dy;
                if !z.is_finite() || !y.is_finite() {
                    break;
                }
                if dz.abs() <= 1e-14 * z.abs().max(1.0) && dy.abs() <= 1e-14 * y.abs().max(1.0) {
                    converged = true;
                    break;
                }
            }
            if !converged {
                continue;
            }
            // stay near the generating resultant roots (necessity of the
            // candidate construction); reject polish drift to another root
            if (z - z0).abs() > 1e-6 * z0.abs().max(1.0) || (y - y0).abs() > 1e-6 * y0.abs().max(1.0)
            {
                continue;
            }
            if y.abs() <= tol.y_exclusion {
                continue;
            }
            if residuals_pass(f, g, z, y, tol.residual_rel) {
                out.push(Witness { z, y });
            }
        }
    }
    Ok(out)
}

/// Exact residual acceptance: |F(z,y)| <= rel * scale(F) and likewise for G,
/// where scale = max|coeff| * max(1,|z|)^deg_z * max(1,|y|)^deg_y.
pub fn residuals_pass(f: &BiPoly, g: &BiPoly, z: f64, y: f64, rel: f64) -> bool {
    let (Some(zr), Some(yr)) = (rat_from_f64(z), rat_from_f64(y)) else {
        return false;
    };
    for p in [f, g] {
        let scale = rat_to_f64(&p.max_abs_coeff())
            * z.abs().max(1.0).powi(p.deg_z() as i32)
            * y.abs().max(1.0).powi(p.deg_y() as i32);
        let v = rat_to_f64(&p.eval(&zr, &yr).abs());
        if v.is_nan() || v > rel * scale {
            return false;
        }
    }
    true
}

/// When the leading view coefficients share a rational real root, the
/// resultant criterion degenerates there; substitute exactly and look for
/// common roots of the specialized univariate pair.
fn degenerate_leading_witnesses(
    f: &BiPoly,
    g: &BiPoly,
    tol: &Tolerances,
) -> Result<Vec<Witness>> {
    let mut out = Vec::new();
    // z-view: leading coefficients are polynomials in y
    let a0 = f.view(Var::Z).last().cloned().expect("nonzero");
    let b0 = g.view(Var::Z).last().cloned().expect("nonzero");
    for y0 in common_rational_roots(&a0, &b0)? {
        let yf = rat_to_f64(&y0);
        if yf.abs() <= tol.y_exclusion {
            continue;
        }
        let fz = f.substitute(Var::Y, &y0);
        let gz = g.substitute(Var::Y, &y0);
        // both parts vanishing identically would force an identically-zero
        // resultant, which the caller already classified as a common component
        let (_, roots) = common_real_roots_of_pair(&fz, &gz, &tol.root_width)?;
        for z in roots {
            out.push(Witness { z, y: yf });
        }
    }
    // y-view: leading coefficients are polynomials in z
    let c0 = f.view(Var::Y).last().cloned().expect("nonzero");
    let d0 = g.view(Var::Y).last().cloned().expect("nonzero");
    for z0 in common_rational_roots(&c0, &d0)? {
        let zf = rat_to_f64(&z0);
        let fy = f.substitute(Var::Z, &z0);
        let gy = g.substitute(Var::Z, &z0);
        let (_, roots) = common_real_roots_of_pair(&fy, &gy, &tol.root_width)?;
        for y in roots {
            if y.abs() > tol.y_exclusion {
                out.push(Witness { z: zf, y });
            }
        }
    }
    Ok(out)
}

/// Rational common roots of two univariate polynomials: isolate the gcd's
/// real roots and recognize those with small exact rational coordinates.
fn common_rational_roots(a: &UniPoly, b: &UniPoly) -> Result<Vec<Rat>> {
    if a.is_zero() && b.is_zero() {
        return Ok(Vec::new());
    }
    let h = if a.is_zero() {
        b.clone()
    } else if b.is_zero() {
        a.clone()
    } else {
        a.gcd(b)?
    };
    if h.degree() == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for r in isolate_real_roots(&h, &crate::algebraic::default_root_tolerance())? {
        let cand = simplest_rational_in(&r.lo, &r.hi);
        if h.eval(&cand).is_zero() {
            out.push(cand);
        }
    }
    Ok(out)
}

/// The rational with smallest denominator inside [lo, hi] (Stern-Brocot).
/// A rational root sits in a tiny refined interval, so it is recovered
/// exactly; an irrational root yields some nearby rational that fails the
/// exact zero test afterwards.
fn simplest_rational_in(lo: &Rat, hi: &Rat) -> Rat {
    let zero = Rat::zero();
    if lo <= &zero && &zero <= hi {
        return zero;
    }
    if hi < &zero {
        return -simplest_rational_in(&-hi.clone(), &-lo.clone());
    }
    // 0 < lo <= hi
    let c = lo.ceil();
    if &c <= hi {
        return c;
    }
    let i = lo.floor();
    let inner = simplest_rational_in(
        &(Rat::one() / (hi.clone() - i.clone())),
        &(Rat::one() / (lo.clone() - i.clone())),
    );
    i + Rat::one() / inner
}

fn dedup_witnesses(ws: &mut Vec<Witness>) {
    ws.sort_by(|a, b| {
        a.z.partial_cmp(&b.z)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(a.y.partial_cmp(&b.y).unwrap_or(std::cmp::Ordering::Equal))
    });
    ws.dedup_by(|a, b| {
        (a.z - b.z).abs() <= 1e-7 * a.z.abs().max(1.0)
            && (a.y - b.y).abs() <= 1e-7 * a.y.abs().max(1.0)
    });
}
