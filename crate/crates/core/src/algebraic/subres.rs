//! Integer subresultant remainder sequences.
//!
//! One engine backs three consumers: sign-corrected generalized Sturm chains
//! (root counting and isolation), principal signed-subresultant coefficients
//! (the fast path of the discrimination sequence), and polynomial gcds at
//! large degree. Everything here is fraction-free BigInt arithmetic;
//! coefficient growth stays determinant-bounded.
//!
//! Polynomials in this module are descending coefficient vectors
//! (`v[0]` = leading), never empty, with nonzero leading coefficient unless
//! the polynomial is zero (represented as `[0]`).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::polycore::{Rat, UniPoly};

pub type IntPoly = Vec<BigInt>;

pub fn is_zero_poly(p: &[BigInt]) -> bool {
    p.iter().all(|c| c.is_zero())
}

pub fn deg(p: &[BigInt]) -> usize {
    p.len() - 1
}

fn trim(mut p: IntPoly) -> IntPoly {
    let mut lead = 0;
    while lead + 1 < p.len() && p[lead].is_zero() {
        lead += 1;
    }
    p.drain(..lead);
    p
}

/// Clear denominators and remove integer content, with a positive scale;
/// returns primitive descending integer coefficients and the rational c > 0
/// such that result = c * input. Keeping the integers primitive bounds the
/// chain arithmetic when the input carries large rational coefficients.
pub fn clear_denominators(p: &UniPoly) -> (IntPoly, Rat) {
    assert!(!p.is_zero());
    let mut l = BigInt::one();
    for c in p.coeffs() {
        l = l.lcm(c.denom());
    }
    let mut ints: IntPoly = p
        .coeffs()
        .iter()
        .rev()
        .map(|c| c.numer() * (&l / c.denom()))
        .collect();
    let mut content = BigInt::zero();
    for c in &ints {
        content = content.gcd(c);
    }
    for c in ints.iter_mut() {
        *c = &*c / &content;
    }
    (ints, Rat::new(l, content))
}

/// Formal derivative.
pub fn derivative(p: &[BigInt]) -> IntPoly {
    let d = deg(p);
    if d == 0 {
        return vec![BigInt::zero()];
    }
    (0..d).map(|i| &p[i] * BigInt::from(d - i)).collect()
}

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> IntPoly {
    let (da, db) = (deg(a), deg(b));
    assert!(da >= db && !is_zero_poly(b));
    let lb = b[0].clone();
    let mut r: IntPoly = a.to_vec();
    let mut e: i64 = (da - db + 1) as i64;
    loop {
        r = trim(r);
        if is_zero_poly(&r) || deg(&r) < db {
            break;
        }
        let lead = r[0].clone();
        for c in r.iter_mut() {
            *c *= &lb;
        }
        for j in 0..=db {
            r[j] -= &lead * &b[j];
        }
        debug_assert!(r[0].is_zero());
        r.remove(0);
        if r.is_empty() {
            r.push(BigInt::zero());
        }
        e -= 1;
    }
    if e > 0 {
        let f = lb.pow(e as u32);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    trim(r)
}

fn exact_div_scalar(p: &[BigInt], d: &BigInt) -> IntPoly {
    p.iter()
        .map(|c| {
            let (q, r) = c.div_rem(d);
            debug_assert!(r.is_zero(), "subresultant division not exact");
            q
        })
        .collect()
}

fn sign(n: &BigInt) -> i8 {
    if n.is_zero() {
        0
    } else if n.is_positive() {
        1
    } else {
        -1
    }
}

/// Subresultant polynomial remainder sequence (Collins) of (a, b) with the
/// per-element sign corrections that turn it into a generalized Sturm
/// sequence: `sigma[i] * polys[i]` obeys the Sturm sign rule
/// p[i-1](t) * p[i+1](t) < 0 whenever p[i](t) = 0, 0 < i < last.
#[derive(Debug, Clone)]
pub struct SubresChain {
    pub polys: Vec<IntPoly>,
    pub sigma: Vec<i8>,
}

impl SubresChain {
    /// gcd(a, b) up to a scalar: the last element of the sequence.
    pub fn gcd_part(&self) -> IntPoly {
        make_primitive(self.polys.last().expect("nonempty chain").clone())
    }
}

pub fn subres_chain(a: IntPoly, b: IntPoly) -> SubresChain {
    let a = trim(a);
    let b = trim(b);
    assert!(!is_zero_poly(&a) && !is_zero_poly(&b) && deg(&a) >= deg(&b));
    let mut polys = vec![a, b];
    let mut sigma: Vec<i8> = vec![1, 1];
    let mut psi = BigInt::from(-1);
    let mut i = 1usize;
    loop {
        let a2 = &polys[i - 1];
        let b2 = &polys[i];
        let beta: BigInt = if i == 1 {
            let d0 = deg(a2) - deg(b2);
            if d0.is_multiple_of(2) {
                BigInt::from(-1)
            } else {
                BigInt::one()
            }
        } else {
            let lcprev = a2[0].clone();
            let delta_prev = deg(&polys[i - 2]) - deg(a2);
            let num = (-&lcprev).pow(delta_prev as u32);
            psi = if delta_prev == 0 {
                // degree gap zero cannot occur in a remainder sequence
                unreachable!("PRS degrees strictly decrease")
            } else {
                let den = psi.pow((delta_prev - 1) as u32);
                let (q, r) = num.div_rem(&den);
                debug_assert!(r.is_zero());
                q
            };
            let delta = deg(a2) - deg(b2);
            -lcprev * psi.pow(delta as u32)
        };
        if deg(b2) == 0 {
            break;
        }
        let r = pseudo_rem(a2, b2);
        if is_zero_poly(&r) {
            break;
        }
        let delta = deg(a2) - deg(b2);
        let next = exact_div_scalar(&r, &beta);
        let lcb_sign = sign(&b2[0]);
        let s_new = -sigma[i - 1]
            * sign(&beta)
            * if (delta + 1).is_multiple_of(2) { 1 } else { lcb_sign };
        polys.push(trim(next));
        sigma.push(s_new);
        i += 1;
    }
    SubresChain { polys, sigma }
}

/// Principal signed-subresultant coefficients sr_j, j = 0..=deg(b), for a
/// pair with deg(b) = deg(a) - 1 (the (f, f') case). Regular chain elements
/// contribute their leading coefficient; a defective element of degree k
/// entering at level d-1 contributes sr_k = lc^(gap+1) / sr_d^gap and zeros
/// in between.
pub fn principal_coeffs(chain: &SubresChain) -> Vec<BigInt> {
    let polys = &chain.polys;
    assert!(polys.len() >= 2);
    let q = deg(&polys[1]);
    assert_eq!(deg(&polys[0]), q + 1, "principal_coeffs expects deg b = deg a - 1");
    let mut sr = vec![BigInt::zero(); q + 1];
    sr[q] = polys[1][0].clone();
    for i in 2..polys.len() {
        let d_prev = deg(&polys[i - 1]);
        let k = deg(&polys[i]);
        let lc = polys[i][0].clone();
        let level = d_prev - 1;
        if k == level {
            sr[k] = lc;
        } else {
            let gap = (level - k) as u32;
            let num = lc.pow(gap + 1);
            let den = sr[d_prev].pow(gap);
            let (v, r) = num.div_rem(&den);
            debug_assert!(r.is_zero(), "gap rule division not exact");
            sr[k] = v;
        }
    }
    sr
}

/// Square-free part computed through the integer PRS gcd; avoids the
/// coefficient blowup of rational Euclid at large degree.
pub fn square_free_part_fast(f: &UniPoly) -> crate::error::Result<UniPoly> {
    if f.is_zero() {
        return Err(crate::error::Error::ZeroPolynomial);
    }
    if f.degree() <= 1 {
        return Ok(f.clone());
    }
    let g = gcd_with_derivative(f)?;
    if g.degree() == 0 {
        return Ok(f.clone());
    }
    f.exact_div(&g)
}

/// gcd(f, f') as a primitive integer polynomial lifted back to rationals.
pub fn gcd_with_derivative(f: &UniPoly) -> crate::error::Result<UniPoly> {
    let (fi, _) = clear_denominators(f);
    let dfi = derivative(&fi);
    let g = int_gcd(fi, dfi);
    Ok(UniPoly::new(
        f.var(),
        g.iter().rev().map(|c| Rat::from_integer(c.clone())).collect(),
    ))
}

/// Gcd of two integer polynomials (primitive, positive leading coefficient)
/// via the subresultant PRS.
pub fn int_gcd(a: IntPoly, b: IntPoly) -> IntPoly {
    let a = trim(a);
    let b = trim(b);
    if is_zero_poly(&a) {
        return make_primitive(b);
    }
    if is_zero_poly(&b) {
        return make_primitive(a);
    }
    let (hi, lo) = if deg(&a) >= deg(&b) { (a, b) } else { (b, a) };
    let chain = subres_chain(hi, lo);
    let last = chain.polys.last().unwrap().clone();
    if deg(&last) == 0 {
        return vec![BigInt::one()];
    }
    // chain stopped because the next pseudo-remainder was zero
    make_primitive(last)
}

fn make_primitive(p: IntPoly) -> IntPoly {
    if is_zero_poly(&p) {
        return p;
    }
    let mut g = BigInt::zero();
    for c in &p {
        g = g.gcd(c);
    }
    if p[0].is_negative() {
        g = -g;
    }
    p.iter().map(|c| c / &g).collect()
}

/// Exact sign of a descending integer polynomial at num/den (den > 0).
pub fn sign_at(p: &[BigInt], num: &BigInt, den: &BigInt) -> i8 {
    let mut acc = p[0].clone();
    let mut dpow = BigInt::one();
    for c in p.iter().skip(1) {
        dpow *= den;
        acc = acc * num + c * &dpow;
    }
    sign(&acc)
}

/// Scaled f64 mirror of an integer polynomial for certified sign evaluation.
/// Only the sign of values matters, so a common positive power-of-two scale
/// is dropped.
#[derive(Debug, Clone)]
pub struct FloatPoly {
    coeffs: Vec<f64>,
    shifted: bool,
}

impl FloatPoly {
    pub fn new(p: &[BigInt]) -> Self {
        let max_bits = p.iter().map(|c| c.bits()).max().unwrap_or(0);
        let shift = max_bits.saturating_sub(900);
        let coeffs = p
            .iter()
            .map(|c| {
                use num_traits::ToPrimitive;
                (c >> shift).to_f64().unwrap_or(f64::NAN)
            })
            .collect();
        FloatPoly { coeffs, shifted: shift > 0 }
    }

    /// Certified sign at an exactly-representable point, or None when the
    /// rounding-error bound cannot separate the value from zero.
    pub fn certified_sign(&self, t: f64) -> Option<i8> {
        let n = self.coeffs.len();
        let at = t.abs();
        let mut v = self.coeffs[0];
        let mut s1 = v.abs();
        let mut s2 = 1.0f64;
        for c in self.coeffs.iter().skip(1) {
            v = v * t + c;
            s1 = s1 * at + c.abs();
            s2 = s2 * at + 1.0;
        }
        let eps = f64::EPSILON;
        let mut bound = s1 * eps * (2.0 * n as f64 + 6.0);
        if self.shifted {
            bound += 2.0 * s2;
        }
        if !v.is_finite() || !bound.is_finite() {
            return None;
        }
        if v.abs() > bound {
            Some(if v > 0.0 { 1 } else { -1 })
        } else {
            None
        }
    }
}
