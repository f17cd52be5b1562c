//! Sylvester resultants: numeric for univariate pairs, polynomial-valued for
//! bivariate pairs with one variable eliminated.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polycore::{rat_det, rat_i64, BiPoly, PolyMatrix, Rat, UniPoly, Var};

/// Rows of the Sylvester matrix of (f, g): deg(g) rows of f-coefficients and
/// deg(f) rows of g-coefficients, descending, each shifted one column right.
fn sylvester_rows<E: Clone + Zero>(
    f: &[E],
    g: &[E],
) -> Vec<Vec<E>> {
    // f, g descending, lengths l+1 and m+1
    let l = f.len() - 1;
    let m = g.len() - 1;
    let dim = l + m;
    let mut rows = Vec::with_capacity(dim);
    for i in 0..m {
        let mut row = vec![E::zero(); dim];
        for (t, c) in f.iter().enumerate() {
            row[i + t] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..l {
        let mut row = vec![E::zero(); dim];
        for (t, c) in g.iter().enumerate() {
            row[i + t] = c.clone();
        }
        rows.push(row);
    }
    rows
}

/// Resultant of two univariate polynomials: the determinant of their
/// Sylvester matrix. Zero exactly when f and g share a (complex) root.
/// Degree-zero inputs follow the usual convention Res(c, g) = c^deg(g).
pub fn sylvester_resultant(f: &UniPoly, g: &UniPoly) -> Result<Rat> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.var() != g.var() {
        return Err(Error::VarMismatch(f.var(), g.var()));
    }
    let fd: Vec<Rat> = f.coeffs().iter().rev().cloned().collect();
    let gd: Vec<Rat> = g.coeffs().iter().rev().cloned().collect();
    if f.degree() == 0 && g.degree() == 0 {
        return Ok(Rat::one());
    }
    rat_det(&sylvester_rows(&fd, &gd))
}

/// The resultant of F and G with `eliminate` eliminated, as an exact
/// polynomial in the remaining variable.
///
/// Computed by evaluation-interpolation: the Sylvester matrix in the chosen
/// view is fixed, so specializing the remaining variable commutes with the
/// determinant; enough exact samples pin the polynomial.
pub fn bivar_resultant(f: &BiPoly, g: &BiPoly, eliminate: Var) -> Result<UniPoly> {
    let (fv, gv, remaining) = views_for(f, g, eliminate)?;
    let l = fv.len() - 1;
    let m = gv.len() - 1;
    if l == 0 && m == 0 {
        return Ok(UniPoly::constant(remaining, Rat::one()));
    }
    let fdeg = fv.iter().map(|p| p.degree()).max().unwrap();
    let gdeg = gv.iter().map(|p| p.degree()).max().unwrap();
    let degree_bound = m * fdeg + l * gdeg;

    let fd: Vec<UniPoly> = fv.into_iter().rev().collect();
    let gd: Vec<UniPoly> = gv.into_iter().rev().collect();
    let mut samples: Vec<(Rat, Rat)> = Vec::with_capacity(degree_bound + 1);
    let mut t = 0i64;
    while samples.len() < degree_bound + 1 {
        let tv = rat_i64(t);
        let rows: Vec<Vec<Rat>> = sylvester_rows(
            &fd.iter().map(|p| p.eval(&tv)).collect::<Vec<_>>(),
            &gd.iter().map(|p| p.eval(&tv)).collect::<Vec<_>>(),
        );
        samples.push((tv, rat_det(&rows)?));
        t = if t >= 0 { -(t + 1) } else { -t };
    }
    Ok(newton_interpolate(remaining, &samples))
}

/// Sylvester matrix of the chosen view with polynomial entries; the direct
/// (non-interpolating) route to the same determinant.
pub fn sylvester_matrix_poly(
    f: &BiPoly,
    g: &BiPoly,
    eliminate: Var,
) -> Result<PolyMatrix<UniPoly>> {
    let (fv, gv, remaining) = views_for(f, g, eliminate)?;
    if fv.len() == 1 && gv.len() == 1 {
        return PolyMatrix::new(vec![vec![UniPoly::constant(remaining, Rat::one())]]);
    }
    let fd: Vec<UniPoly> = fv.into_iter().rev().collect();
    let gd: Vec<UniPoly> = gv.into_iter().rev().collect();
    let zero = UniPoly::zero(remaining);
    let l = fd.len() - 1;
    let m = gd.len() - 1;
    let dim = l + m;
    let mut rows = Vec::with_capacity(dim);
    for i in 0..m {
        let mut row = vec![zero.clone(); dim];
        for (t, c) in fd.iter().enumerate() {
            row[i + t] = c.clone();
        }
        rows.push(row);
    }
    for i in 0..l {
        let mut row = vec![zero.clone(); dim];
        for (t, c) in gd.iter().enumerate() {
            row[i + t] = c.clone();
        }
        rows.push(row);
    }
    PolyMatrix::new(rows)
}

fn views_for(
    f: &BiPoly,
    g: &BiPoly,
    eliminate: Var,
) -> Result<(Vec<UniPoly>, Vec<UniPoly>, Var)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::DegenerateView);
    }
    let remaining = match eliminate {
        Var::Z => Var::Y,
        Var::Y => Var::Z,
        Var::Lambda => return Err(Error::VarMismatch(Var::Z, Var::Lambda)),
    };
    Ok((f.view(eliminate), g.view(eliminate), remaining))
}

/// Exact polynomial interpolation through distinct sample points.
fn newton_interpolate(var: Var, samples: &[(Rat, Rat)]) -> UniPoly {
    let n = samples.len();
    // divided differences
    let mut table: Vec<Rat> = samples.iter().map(|(_, v)| v.clone()).collect();
    let mut coeffs_newton = vec![table[0].clone()];
    for k in 1..n {
        for i in (k..n).rev() {
            let num = table[i].clone() - table[i - 1].clone();
            let den = samples[i].0.clone() - samples[i - k].0.clone();
            table[i] = num / den;
        }
        coeffs_newton.push(table[k].clone());
    }
    // expand: p = c0 + (x-x0)(c1 + (x-x1)(c2 + ...))
    let mut p = UniPoly::zero(var);
    for k in (0..n).rev() {
        let linear = UniPoly::new(var, vec![-samples[k].0.clone(), Rat::one()]);
        p = p
            .mul(&linear)
            .unwrap()
            .add(&UniPoly::constant(var, coeffs_newton[k].clone()))
            .unwrap();
    }
    p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, rat_i64};

    fn p(asc: &[i64]) -> UniPoly {
        UniPoly::new(Var::Z, asc.iter().map(|&c| rat_i64(c)).collect())
    }

    fn bp(terms: &[(i64, usize, usize)]) -> BiPoly {
        let mut f = BiPoly::zero();
        for &(c, i, j) in terms {
            f = f.add(&BiPoly::monomial(rat_i64(c), i, j));
        }
        f
    }

    #[test]
    fn univariate_pairs() {
        // f = z-1, g = z+1: no common root, det [[1,-1],[1,1]] = 2
        assert_eq!(sylvester_resultant(&p(&[-1, 1]), &p(&[1, 1])).unwrap(), rat_i64(2));
        // shared factor -> 0
        assert!(sylvester_resultant(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap().is_zero());
        // constants
        assert_eq!(sylvester_resultant(&p(&[3]), &p(&[1, 2])).unwrap(), rat_i64(3));
        assert!(sylvester_resultant(&UniPoly::zero(Var::Z), &p(&[1])).is_err());
    }

    #[test]
    fn planted_common_roots_vanish() {
        // f = (z-2) q1, g = (z-2) q2 -> resultant 0; perturbed -> nonzero
        let f = p(&[-2, 1]).mul(&p(&[3, 1, 1])).unwrap();
        let g = p(&[-2, 1]).mul(&p(&[-1, 2])).unwrap();
        assert!(sylvester_resultant(&f, &g).unwrap().is_zero());
        let g2 = g.add(&p(&[1])).unwrap();
        assert!(!sylvester_resultant(&f, &g2).unwrap().is_zero());
    }

    #[test]
    fn corollary_style_pair() {
        // F = 2(1-c)z*y + 2a, G = (1+c)(1-z^2)y - 2az at a=1, c=0:
        // eliminating y gives -2z^2 - 2
        let f = bp(&[(2, 1, 1), (2, 0, 0)]);
        let g = bp(&[(1, 0, 1), (-1, 2, 1), (-2, 1, 0)]);
        let r = bivar_resultant(&f, &g, Var::Y).unwrap();
        assert_eq!(r, UniPoly::new(Var::Z, vec![rat_i64(-2), rat_i64(0), rat_i64(-2)]));
    }

    #[test]
    fn antisymmetric_linear_pair() {
        // F = z - y, G = z + y, eliminate z -> proportional to y
        let f = bp(&[(1, 1, 0), (-1, 0, 1)]);
        let g = bp(&[(1, 1, 0), (1, 0, 1)]);
        let r = bivar_resultant(&f, &g, Var::Z).unwrap();
        assert_eq!(r.var(), Var::Y);
        assert_eq!(r.degree(), 1);
        assert!(r.coeff(0).is_zero());
        assert_eq!(r.coeff(1), rat_i64(2));
    }

    #[test]
    fn interpolation_matches_direct_determinant() {
        let mut state = 5u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) % 7) as i64 - 3
        };
        for _ in 0..10 {
            let f = bp(&[(next(), 0, 0), (next(), 1, 0), (next(), 0, 1), (next(), 2, 1), (next(), 1, 2)]);
            let g = bp(&[(next(), 0, 0), (next(), 1, 1), (next(), 2, 0), (next(), 0, 2)]);
            if f.is_zero() || g.is_zero() {
                continue;
            }
            for elim in [Var::Z, Var::Y] {
                let via_interp = bivar_resultant(&f, &g, elim).unwrap();
                let via_det = sylvester_matrix_poly(&f, &g, elim).unwrap().det();
                assert_eq!(via_interp, via_det);
            }
        }
    }

    #[test]
    fn planted_bivariate_common_point() {
        // F and G both vanish at (z0, y0) = (1/2, -2); the resultants must
        // vanish there exactly.
        let z0 = rat(1, 2);
        let y0 = rat_i64(-2);
        let f = bp(&[(1, 1, 0)])
            .sub(&BiPoly::constant(z0.clone()))
            .mul(&bp(&[(3, 1, 1), (1, 0, 0)]))
            .add(
                &bp(&[(1, 0, 1)])
                    .sub(&BiPoly::constant(y0.clone()))
                    .mul(&bp(&[(2, 2, 0), (-1, 0, 1)])),
            );
        let g = bp(&[(1, 1, 0)])
            .sub(&BiPoly::constant(z0.clone()))
            .mul(&bp(&[(-1, 0, 2), (4, 1, 0)]))
            .add(
                &bp(&[(1, 0, 1)])
                    .sub(&BiPoly::constant(y0.clone()))
                    .mul(&bp(&[(5, 0, 0), (1, 1, 1)])),
            );
        assert!(f.eval(&z0, &y0).is_zero());
        assert!(g.eval(&z0, &y0).is_zero());
        let ry = bivar_resultant(&f, &g, Var::Z).unwrap();
        assert!(ry.eval(&y0).is_zero());
        let rz = bivar_resultant(&f, &g, Var::Y).unwrap();
        assert!(rz.eval(&z0).is_zero());
    }
}
