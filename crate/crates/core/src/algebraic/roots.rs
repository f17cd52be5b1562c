//! Real-root isolation and refinement.
//!
//! Sturm counting runs on the square-free part with exact sign evaluations;
//! bisection refines each isolating interval to the requested width. The
//! Lemma-style discrimination count is recomputed independently and any
//! disagreement with the Sturm count is a hard assertion failure: two
//! derivations of the same number catch arithmetic bugs.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::discrim::count_distinct_real_roots;
use super::subres::{self, FloatPoly, SubresChain};
use crate::error::{Error, Result};
use crate::polycore::{rat_to_f64, Rat, UniPoly};

/// An isolating interval for one distinct real root.
#[derive(Debug, Clone)]
pub struct IsolatedRoot {
    /// Exact lower bound; the square-free part has opposite signs at lo/hi.
    pub lo: Rat,
    /// Exact upper bound.
    pub hi: Rat,
    /// Midpoint as f64 after refinement.
    pub refined: f64,
    /// True when the root is simple in the original polynomial.
    pub simple: bool,
}

/// Default refinement tolerance: interval width 1e-12.
pub fn default_root_tolerance() -> Rat {
    Rat::new(BigInt::one(), BigInt::from(10).pow(12))
}

struct SturmEval {
    chain: SubresChain,
    floats: Vec<FloatPoly>,
}

impl SturmEval {
    fn new(p: &UniPoly) -> Self {
        let (pi, _) = subres::clear_denominators(p);
        let dpi = subres::derivative(&pi);
        Self::from_chain(subres::subres_chain(pi, dpi))
    }

    fn from_chain(chain: SubresChain) -> Self {
        let floats = chain.polys.iter().map(|q| FloatPoly::new(q)).collect();
        SturmEval { chain, floats }
    }

    /// Sign variations of the chain at a point that is not a root of p.
    fn variations_at(&self, t: &Rat) -> usize {
        let tf = rat_to_f64(t);
        // the fast path needs t exactly representable
        let exact_f64 = Rat::from_float(tf).is_some_and(|r| &r == t);
        let mut signs: Vec<i8> = Vec::with_capacity(self.chain.polys.len());
        for (i, q) in self.chain.polys.iter().enumerate() {
            let s = if exact_f64 {
                self.floats[i].certified_sign(tf)
            } else {
                None
            };
            let s = s.unwrap_or_else(|| subres::sign_at(q, t.numer(), t.denom()));
            signs.push(self.chain.sigma[i] * s);
        }
        let nz: Vec<i8> = signs.into_iter().filter(|&s| s != 0).collect();
        nz.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Sign of p itself at t, certified-float first.
    fn sign_p(&self, t: &Rat) -> i8 {
        let tf = rat_to_f64(t);
        if Rat::from_float(tf).is_some_and(|r| &r == t) {
            if let Some(s) = self.floats[0].certified_sign(tf) {
              return s;
            }
        }
        subres::sign_at(&self.chain.polys[0], t.numer(), t.denom())
    }
}

/// Cauchy root bound of p, rounded up to a power of two.
fn dyadic_root_bound(p: &UniPoly) -> Rat {
    let lead = p.leading().expect("nonzero").abs();
    let mut best = Rat::zero();
    for c in &p.coeffs()[..p.degree()] {
        let r = c.abs() / lead.clone();
        if r > best {
            best = r;
        }
    }
    let bound = best + Rat::one();
    let two = Rat::from_integer(BigInt::from(2));
    let mut b = Rat::one();
    while b < bound {
        b *= two.clone();
    }
    b
}

/// Isolate all distinct real roots of f and refine each isolating interval to
/// width <= tol. The count is cross-checked against the discrimination-system
/// count; a mismatch panics.
pub fn isolate_real_roots(f: &UniPoly, tol: &Rat) -> Result<Vec<IsolatedRoot>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::DegreeTooSmall);
    }
    // one subresultant chain of (f, f') serves three roles: its principal
    // coefficients give the discrimination count, its last element is
    // gcd(f, f'), and when f is already square-free its sign-corrected
    // elements are the Sturm sequence itself
    let (fi, _) = subres::clear_denominators(f);
    let dfi = subres::derivative(&fi);
    let chain = subres::subres_chain(fi, dfi);
    let expected = if f.degree() <= 16 {
        // direct determinant route where it is cheap: maximal independence
        count_distinct_real_roots(f)?.distinct_real
    } else {
        super::discrim::count_from_chain(&chain, f.degree()).distinct_real
    };
    let gcd_int = chain.gcd_part();
    let multiple_part = UniPoly::new(
        f.var(),
        gcd_int.iter().rev().map(|c| Rat::from_integer(c.clone())).collect(),
    );
    let (p, eval) = if multiple_part.degree() == 0 {
        (f.clone(), SturmEval::from_chain(chain))
    } else {
        let p = f.exact_div(&multiple_part)?;
        let ev = SturmEval::new(&p);
        (p, ev)
    };

    let bound = dyadic_root_bound(&p);
    let lo = -bound.clone();
    let hi = bound;
    let vlo = eval.variations_at(&lo);
    let vhi = eval.variations_at(&hi);

    // recursive bisection on (lo, hi]; all endpoints are dyadic non-roots
    let mut stack = vec![(lo, hi, vlo, vhi)];
    let mut intervals: Vec<(Rat, Rat)> = Vec::new();
    let half = Rat::new(BigInt::one(), BigInt::from(2));
    while let Some((a, b, va, vb)) = stack.pop() {
        let count = va.checked_sub(vb).expect("sign variations must not increase");
        if count == 0 {
            continue;
        }
        if count == 1 {
            intervals.push((a, b));
            continue;
        }
        // pick a split point that is not a root of p
        let w = (b.clone() - a.clone()) * half.clone();
        let mut m = a.clone() + w.clone();
        let mut k = 2;
        while eval.sign_p(&m) == 0 {
            m = a.clone() + w.clone() * Rat::new(BigInt::one(), BigInt::one() << k);
            k += 1;
            assert!(k < 200, "could not find a non-root split point");
        }
        let vm = eval.variations_at(&m);
        stack.push((a, m.clone(), va, vm));
        stack.push((m, b, vm, vb));
    }
    assert_eq!(
        intervals.len(),
        expected,
        "Sturm isolation count disagrees with discrimination-system count"
    );

    // refinement by sign bisection on the square-free part
    let mult_eval = if multiple_part.degree() >= 1 {
        Some(SturmEval::new(&subres::square_free_part_fast(&multiple_part)?))
    } else {
        None
    };

    let mut out = Vec::with_capacity(intervals.len());
    for (mut a, mut b) in intervals {
        let simple = match &mult_eval {
            None => true,
            Some(me) => me.variations_at(&a) == me.variations_at(&b),
        };
        let mut sa = eval.sign_p(&a);
        debug_assert!(sa != 0 && eval.sign_p(&b) != 0);
        while b.clone() - a.clone() > *tol {
            let m = (a.clone() + b.clone()) * half.clone();
            let sm = eval.sign_p(&m);
            if sm == 0 {
                // exact dyadic root: collapse around it
                let quarter = tol.clone() * Rat::new(BigInt::one(), BigInt::from(4));
                a = m.clone() - quarter.clone();
                b = m + quarter;
                sa = eval.sign_p(&a);
                break;
            }
            if sm == sa {
                a = m;
                sa = sm;
            } else {
                b = m;
            }
        }
        debug_assert!(eval.sign_p(&a) * eval.sign_p(&b) < 0);
        let refined = rat_to_f64(&((a.clone() + b.clone()) * half.clone()));
        out.push(IsolatedRoot { lo: a, hi: b, refined, simple });
    }
    out.sort_by(|x, y| x.lo.cmp(&y.lo));
    Ok(out)
}

/// Convenience: refined f64 root approximations at the default tolerance.
pub fn real_roots_f64(f: &UniPoly) -> Result<Vec<f64>> {
    Ok(isolate_real_roots(f, &default_root_tolerance())?
        .into_iter()
        .map(|r| r.refined)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, rat_i64, sign_of, Var};

    fn p(asc: &[i64]) -> UniPoly {
        UniPoly::new(Var::Z, asc.iter().map(|&c| rat_i64(c)).collect())
    }

    #[test]
    fn isolates_sqrt_two() {
        let roots = isolate_real_roots(&p(&[-2, 0, 1]), &default_root_tolerance()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].refined + 2.0_f64.sqrt()).abs() < 1e-10);
        assert!((roots[1].refined - 2.0_f64.sqrt()).abs() < 1e-10);
        assert!(roots.iter().all(|r| r.simple));
        assert!(roots.iter().all(|r| r.hi.clone() - r.lo.clone() <= default_root_tolerance()));
    }

    #[test]
    fn no_real_roots() {
        let roots = isolate_real_roots(&p(&[1, 0, 1]), &default_root_tolerance()).unwrap();
        assert!(roots.is_empty());
    }

    #[test]
    fn flags_multiplicity() {
        // (z-1)^2 (z+2): root 1 multiple, root -2 simple
        let f = p(&[1, -1]).pow(2).mul(&p(&[2, 1])).unwrap();
        let roots = isolate_real_roots(&f, &default_root_tolerance()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[0].refined + 2.0).abs() < 1e-10);
        assert!(roots[0].simple);
        assert!((roots[1].refined - 1.0).abs() < 1e-10);
        assert!(!roots[1].simple);
    }

    #[test]
    fn exact_dyadic_root_handled() {
        // roots at 0 and +-1/2 and +-3 (0 and 1/2 are dyadic)
        let f = p(&[0, 1])
            .mul(&UniPoly::new(Var::Z, vec![rat(-1, 2), rat_i64(1)]))
            .unwrap()
            .mul(&UniPoly::new(Var::Z, vec![rat(1, 2), rat_i64(1)]))
            .unwrap()
            .mul(&p(&[-3, 1]))
            .unwrap()
            .mul(&p(&[3, 1]))
            .unwrap();
        let roots = isolate_real_roots(&f, &default_root_tolerance()).unwrap();
        let want = [-3.0, -0.5, 0.0, 0.5, 3.0];
        assert_eq!(roots.len(), want.len());
        for (r, w) in roots.iter().zip(want) {
            assert!((r.refined - w).abs() < 1e-10, "{} vs {}", r.refined, w);
        }
    }

    #[test]
    fn endpoints_have_opposite_signs() {
        let f = p(&[-1, -1, 0, 0, 1, 1, 1]);
        let roots = isolate_real_roots(&f, &default_root_tolerance()).unwrap();
        let sf = f.square_free_part().unwrap();
        for r in &roots {
            let sa = sign_of(&sf.eval(&r.lo));
            let sb = sign_of(&sf.eval(&r.hi));
            assert_eq!(sa * sb, -1);
        }
    }

    #[test]
    fn close_roots_separated() {
        // roots at 1 and 1 + 1/1024
        let a = UniPoly::new(Var::Z, vec![rat_i64(-1), rat_i64(1)]);
        let b = UniPoly::new(Var::Z, vec![rat(-1025, 1024), rat_i64(1)]);
        let f = a.mul(&b).unwrap();
        let roots = isolate_real_roots(&f, &default_root_tolerance()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!((roots[1].refined - roots[0].refined - 1.0 / 1024.0).abs() < 1e-9);
    }

    #[test]
    fn rejects_degenerate_inputs() {
        assert!(matches!(
            isolate_real_roots(&UniPoly::zero(Var::Z), &default_root_tolerance()),
            Err(Error::ZeroPolynomial)
        ));
        assert!(matches!(
            isolate_real_roots(&p(&[5]), &default_root_tolerance()),
            Err(Error::DegreeTooSmall)
        ));
    }
}
