//! Discrimination sequences, sign lists, and distinct-real-root counting.
//!
//! The discrimination matrix of f interleaves shifted coefficient rows of f
//! and f'; the sequence D_1..D_n of its even-order leading principal minors
//! determines the number of distinct real roots: mu - 2 nu, where mu counts
//! nonzero entries and nu counts sign changes of the revised sign list.

use num_bigint::BigInt;
use num_traits::Zero;

use super::subres;
use crate::error::{Error, Result};
use crate::polycore::{sign_of, Rat, UniPoly};

/// Above this degree the minors are computed through the subresultant chain
/// instead of direct determinants; the two paths are property-tested equal.
const DIRECT_MINOR_LIMIT: usize = 16;

/// The minors D_1..D_n of the discrimination matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscriminationSequence {
    pub values: Vec<Rat>,
}

impl DiscriminationSequence {
    pub fn sign_list(&self) -> SignList {
        SignList::new(self.values.iter().map(sign_of).collect())
    }
}

/// A sign list together with its revision. Interior zero runs of the revised
/// list are replaced by the alternating pattern [-s, -s, s, s, -s, ...] seeded
/// by the sign preceding the run; trailing zeros are kept as zeros and do not
/// count toward mu.
#[derive(Debug, Clone, PartialEq)]
pub struct SignList {
    pub signs: Vec<i8>,
    pub revised: Vec<i8>,
}

impl SignList {
    pub fn new(signs: Vec<i8>) -> Self {
        let revised = revise(&signs);
        SignList { signs, revised }
    }
}

/// Apply the zero-run revision rule to a raw sign list.
pub fn revised_sign_list(s: &SignList) -> SignList {
    SignList::new(s.signs.clone())
}

fn revise(signs: &[i8]) -> Vec<i8> {
    let mut out = signs.to_vec();
    let n = signs.len();
    let mut i = 0;
    while i < n {
        if signs[i] == 0 {
            i += 1;
            continue;
        }
        // find the next nonzero after i
        let mut j = i + 1;
        while j < n && signs[j] == 0 {
            j += 1;
        }
        if j < n && j > i + 1 {
            // interior zero run signs[i+1..j]
            for r in 1..(j - i) {
                let flip = !(r.div_ceil(2)).is_multiple_of(2);
                out[i + r] = if flip { -signs[i] } else { signs[i] };
            }
        }
        i = j;
    }
    out
}

/// Root count from a revised sign list per the mu - 2 nu rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RootCount {
    pub mu: usize,
    pub nu: usize,
    pub distinct_real: usize,
}

impl RootCount {
    pub fn from_sign_list(s: &SignList) -> Self {
        let mu = s.revised.iter().filter(|&&v| v != 0).count();
        let nz: Vec<i8> = s.revised.iter().copied().filter(|&v| v != 0).collect();
        let nu = nz.windows(2).filter(|w| w[0] != w[1]).count();
        let distinct = mu as i64 - 2 * nu as i64;
        assert!(distinct >= 0, "mu - 2nu must be nonnegative");
        RootCount { mu, nu, distinct_real: distinct as usize }
    }
}

/// Build the 2n x 2n discrimination matrix of an integer polynomial
/// (descending coefficients).
fn discrimination_matrix_int(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = subres::deg(f);
    let fp = subres::derivative(f);
    let dim = 2 * n;
    let mut m = vec![vec![BigInt::zero(); dim]; dim];
    for pair in 0..n {
        for (t, c) in f.iter().enumerate() {
            let col = pair + t;
            if col < dim {
                m[2 * pair][col] = c.clone();
            }
        }
        for (t, c) in fp.iter().enumerate() {
            let col = pair + 1 + t;
            if col < dim {
                m[2 * pair + 1][col] = c.clone();
            }
        }
    }
    m
}

/// The discrimination sequence [D_1, ..., D_n] of f, exact.
pub fn discrimination_sequence(f: &UniPoly) -> Result<DiscriminationSequence> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let n = f.degree();
    if n == 0 {
        return Err(Error::DegreeTooSmall);
    }
    let (fi, scale) = subres::clear_denominators(f);
    let values = if n <= DIRECT_MINOR_LIMIT {
        minors_direct(&fi, n, &scale)
    } else {
        minors_via_chain(&fi, n, &scale)
    };
    Ok(DiscriminationSequence { values })
}

fn minors_direct(fi: &[BigInt], n: usize, scale: &Rat) -> Vec<Rat> {
    let m = discrimination_matrix_int(fi);
    (1..=n)
        .map(|k| {
            let sub: Vec<Vec<BigInt>> = m[..2 * k].iter().map(|r| r[..2 * k].to_vec()).collect();
            let d = crate::polycore::int_det(sub);
            // clearing denominators scaled every row by `scale`
            Rat::from_integer(d) / scale.pow(2 * k as i32)
        })
        .collect()
}

/// D_k = (-1)^(k(k-1)/2) * a0 * sr_{n-k} where sr_j are the principal signed
/// subresultant coefficients of (f, f').
fn minors_via_chain(fi: &[BigInt], n: usize, scale: &Rat) -> Vec<Rat> {
    let fp = subres::derivative(fi);
    let chain = subres::subres_chain(fi.to_vec(), fp);
    let sr = subres::principal_coeffs(&chain);
    let a0 = fi[0].clone();
    (1..=n)
        .map(|k| {
            let v = &a0 * &sr[n - k];
            let v = if (k * (k - 1) / 2) % 2 == 1 { -v } else { v };
            Rat::from_integer(v) / scale.pow(2 * k as i32)
        })
        .collect()
}

/// Number of distinct real roots of f by the discrimination sequence.
pub fn count_distinct_real_roots(f: &UniPoly) -> Result<RootCount> {
    let seq = discrimination_sequence(f)?;
    Ok(RootCount::from_sign_list(&seq.sign_list()))
}

/// Root count from an already-built (f, f') chain; positive scalings drop out
/// of the sign list, so only the sign of the leading coefficient enters.
pub(crate) fn count_from_chain(chain: &subres::SubresChain, n: usize) -> RootCount {
    let sr = subres::principal_coeffs(chain);
    let a0 = &chain.polys[0][0];
    let a0_sign: i8 = if a0.sign() == num_bigint::Sign::Minus { -1 } else { 1 };
    let signs: Vec<i8> = (1..=n)
        .map(|k| {
            let s = match sr[n - k].sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
            let eps: i8 = if (k * (k - 1) / 2) % 2 == 1 { -1 } else { 1 };
            eps * a0_sign * s
        })
        .collect();
    RootCount::from_sign_list(&SignList::new(signs))
}
