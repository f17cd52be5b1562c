//! Hurwitz criterion: all roots in the open left half plane iff every leading
//! principal minor of the Hurwitz matrix is positive.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::{rat_det, Rat, UniPoly};

/// Result of the Hurwitz test: the verdict plus the principal minors as
/// evidence.
#[derive(Debug, Clone)]
pub struct HurwitzReport {
    pub stable: bool,
    pub minors: Vec<Rat>,
}

/// Test whether all roots of f have negative real part. The leading
/// coefficient is normalized positive first (roots are unchanged).
pub fn hurwitz_stable(f: &UniPoly) -> Result<HurwitzReport> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == 0 {
        return Err(Error::DegreeTooSmall);
    }
    let n = f.degree();
    let mut desc: Vec<Rat> = f.coeffs().iter().rev().cloned().collect();
    if desc[0].is_negative() {
        for c in desc.iter_mut() {
            *c = -c.clone();
        }
    }
    // H[i][j] = a_{2(j+1) - (i+1)} (1-indexed a_k, a_0 = leading)
    let coeff = |k: i64| -> Rat {
        if k < 0 || k as usize > n {
            Rat::zero()
        } else {
            desc[k as usize].clone()
        }
    };
    let mut minors = Vec::with_capacity(n);
    let mut stable = true;
    for size in 1..=n {
        let rows: Vec<Vec<Rat>> = (0..size)
            .map(|i| {
                (0..size)
                    .map(|j| coeff(2 * (j as i64 + 1) - (i as i64 + 1)))
                    .collect()
            })
            .collect();
        let d = rat_det(&rows)?;
        if !d.is_positive() {
            stable = false;
        }
        minors.push(d);
    }
    Ok(HurwitzReport { stable, minors })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{parse_rat, rat_i64, Var};

    fn p(asc: &[&str]) -> UniPoly {
        UniPoly::new(Var::Lambda, asc.iter().map(|s| parse_rat(s).unwrap()).collect())
    }

    #[test]
    fn first_order() {
        assert!(hurwitz_stable(&p(&["1", "1"])).unwrap().stable);
        assert!(!hurwitz_stable(&p(&["-1", "1"])).unwrap().stable);
    }

    #[test]
    fn paper_second_order() {
        // lambda^2 + 3.75 lambda + 2.7344 is stable
        let r = hurwitz_stable(&p(&["2.7344", "3.75", "1"])).unwrap();
        assert!(r.stable);
        assert!(r.minors.iter().all(|m| m.is_positive()));
    }

    #[test]
    fn root_at_plus_one() {
        // lambda^2 - 1 has a root at +1
        let r = hurwitz_stable(&p(&["-1", "0", "1"])).unwrap();
        assert!(!r.stable);
    }

    #[test]
    fn negative_leading_coefficient_normalized() {
        // -(lambda+1)(lambda+2) = -lambda^2 -3lambda -2: still stable roots
        let r = hurwitz_stable(&p(&["-2", "-3", "-1"])).unwrap();
        assert!(r.stable);
    }

    #[test]
    fn marginal_oscillator_not_stable() {
        // lambda^2 + 1: roots on the imaginary axis
        let r = hurwitz_stable(&p(&["1", "0", "1"])).unwrap();
        assert!(!r.stable);
    }

    #[test]
    fn agrees_with_known_cubic() {
        // lambda^3 + 2 lambda^2 + 3 lambda + 1: Hurwitz stable (2*3 > 1)
        assert!(hurwitz_stable(&p(&["1", "3", "2", "1"])).unwrap().stable);
        // lambda^3 + lambda^2 + lambda + 2: 1*1 < 2 -> unstable
        assert!(!hurwitz_stable(&p(&["2", "1", "1", "1"])).unwrap().stable);
        let _ = rat_i64(0);
    }
}
