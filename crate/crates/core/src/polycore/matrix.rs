//! Matrices with exact entries: numeric rational matrices and square matrices
//! of polynomial entries, with fraction-free determinants.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::poly::{Coeff, Poly, UniPoly, Var};
use super::bipoly::Poly2;
use super::rat::Rat;
use crate::error::{Error, Result};

/// Entry ring for exact determinant computation. `exact_div` panics on a
/// nonzero remainder: inside Bareiss elimination the divisions are exact by
/// construction, so a failure is an arithmetic bug, not an input error.
pub trait DetEntry: Clone {
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn exact_div(&self, other: &Self) -> Self;
}

impl<T: Coeff> DetEntry for Poly<T> {
    fn is_zero(&self) -> bool {
        Poly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly::add(self, other).expect("uniform variable tags")
    }
    fn sub(&self, other: &Self) -> Self {
        Poly::sub(self, other).expect("uniform variable tags")
    }
    fn mul(&self, other: &Self) -> Self {
        Poly::mul(self, other).expect("uniform variable tags")
    }
    fn neg(&self) -> Self {
        Poly::neg(self)
    }
    fn exact_div(&self, other: &Self) -> Self {
        Poly::exact_div(self, other).expect("nonzero divisor")
    }
}

impl<T: Coeff> DetEntry for Poly2<T> {
    fn is_zero(&self) -> bool {
        Poly2::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        Poly2::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        Poly2::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        Poly2::mul(self, other)
    }
    fn neg(&self) -> Self {
        Poly2::neg(self)
    }
    fn exact_div(&self, other: &Self) -> Self {
        // long division in z with exact coefficient division in y
        assert!(!Poly2::is_zero(other), "division by zero polynomial");
        let mut rem: Vec<Poly<T>> = self.view(Var::Z);
        let div: Vec<Poly<T>> = other.view(Var::Z);
        let dd = div.len() - 1;
        let dlead = div.last().unwrap();
        if rem.is_empty() {
            return Poly2::zero();
        }
        assert!(rem.len() >= div.len(), "exact_div degree underflow");
        let mut quot: Vec<Poly<T>> = vec![Poly::zero(Var::Y); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = rem[k + dd].clone();
            if Poly::is_zero(&top) {
                continue;
            }
            let q = Poly::exact_div(&top, dlead).expect("nonzero leading coefficient");
            for (j, d) in div.iter().enumerate() {
                rem[k + j] = Poly::sub(&rem[k + j], &Poly::mul(&q, d).unwrap()).unwrap();
            }
            quot[k] = q;
        }
        assert!(rem.iter().all(Poly::is_zero), "exact_div with nonzero remainder");
        Poly2::new(quot.into_iter().map(|p| p.coeffs().to_vec()).collect())
    }
}

impl DetEntry for Rat {
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn exact_div(&self, other: &Self) -> Self {
        self / other
    }
}

/// Square matrix of exact ring entries (polynomials or scalars).
#[derive(Debug, Clone)]
pub struct PolyMatrix<E: DetEntry> {
    n: usize,
    rows: Vec<Vec<E>>,
}

impl<E: DetEntry> PolyMatrix<E> {
    pub fn new(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: r.len() });
            }
        }
        Ok(PolyMatrix { n, rows })
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &E {
        &self.rows[i][j]
    }

    /// Exact determinant: cofactor expansion for n <= 4, fraction-free
    /// Bareiss elimination over the entry ring for larger matrices.
    pub fn det(&self) -> E {
        if self.n <= 4 {
            det_cofactor(&self.rows)
        } else {
            det_bareiss(self.rows.clone())
        }
    }
}

fn det_cofactor<E: DetEntry>(rows: &[Vec<E>]) -> E {
    let n = rows.len();
    if n == 1 {
        return rows[0][0].clone();
    }
    // expand along the first column
    let mut acc: Option<E> = None;
    for i in 0..n {
        if rows[i][0].is_zero() {
            continue;
        }
        let minor: Vec<Vec<E>> = rows
            .iter()
            .enumerate()
            .filter(|(r, _)| *r != i)
            .map(|(_, row)| row[1..].to_vec())
            .collect();
        let mut term = rows[i][0].mul(&det_cofactor(&minor));
        if i % 2 == 1 {
            term = term.neg();
        }
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.unwrap_or_else(|| rows[0][0].sub(&rows[0][0]))
}

fn det_bareiss<E: DetEntry>(mut m: Vec<Vec<E>>) -> E {
    let n = m.len();
    let zero = m[0][0].sub(&m[0][0]);
    let mut negate = false;
    let mut prev: Option<E> = None;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return zero;
            };
            m.swap(k, r);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let t = m[k][k].mul(&m[i][j]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = match &prev {
                    None => t,
                    Some(p) => t.exact_div(p),
                };
            }
            m[i][k] = zero.clone();
        }
        prev = Some(m[k][k].clone());
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        d.neg()
    } else {
        d
    }
}

/// Determinant of a rational matrix via integer Bareiss after clearing row
/// denominators.
pub fn rat_det(rows: &[Vec<Rat>]) -> Result<Rat> {
    let n = rows.len();
    if n == 0 {
        return Err(Error::DimensionMismatch { expected: 1, got: 0 });
    }
    for r in rows {
        if r.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: r.len() });
        }
    }
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for row in rows {
        let mut l = BigInt::one();
        for c in row {
            l = l.lcm(c.denom());
        }
        m.push(row.iter().map(|c| c.numer() * (&l / c.denom())).collect());
        scale *= l;
    }
    Ok(Rat::new(int_det(m), scale))
}

/// Fraction-free integer determinant (Bareiss with row pivoting).
pub fn int_det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, r);
            negate = !negate;
        }
        let (head, tail) = m.split_at_mut(k + 1);
        let pivot_row = &head[k];
        for row in tail.iter_mut() {
            for j in k + 1..n {
                let t = &pivot_row[k] * &row[j] - &row[k] * &pivot_row[j];
                row[j] = t / &prev;
            }
            row[k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Dense rational matrix (square or rectangular) used for system data.
#[derive(Debug, Clone, PartialEq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rat>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix { rows, cols, data: vec![Rat::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        for row in &rows {
            if row.len() != c {
                return Err(Error::DimensionMismatch { expected: c, got: row.len() });
            }
        }
        Ok(RatMatrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() })
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.data[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.data[i * self.cols + j]
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * c).collect(),
        }
    }

    pub fn det(&self) -> Result<Rat> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch { expected: self.rows, got: self.cols });
        }
        let rows: Vec<Vec<Rat>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).clone()).collect())
            .collect();
        rat_det(&rows)
    }

    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| super::rat::rat_to_f64(self.at(i, j))).collect())
            .collect()
    }
}

/// Characteristic polynomial of the pencil det(lambda P - Q), normalized to
/// monic. Its roots are the eigenvalues of P^-1 Q; requires det P != 0.
pub fn pencil_char_poly(p: &RatMatrix, q: &RatMatrix) -> Result<UniPoly> {
    if p.nrows() != p.ncols() {
        return Err(Error::DimensionMismatch { expected: p.nrows(), got: p.ncols() });
    }
    if q.nrows() != p.nrows() || q.ncols() != p.ncols() {
        return Err(Error::DimensionMismatch { expected: p.nrows(), got: q.nrows() });
    }
    if Zero::is_zero(&p.det()?) {
        return Err(Error::SingularPencil);
    }
    let n = p.nrows();
    let rows: Vec<Vec<UniPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    UniPoly::new(Var::Lambda, vec![-q.at(i, j).clone(), p.at(i, j).clone()])
                })
                .collect()
        })
        .collect();
    let det = PolyMatrix::new(rows)?.det();
    let lead = det.leading().expect("det P != 0 implies nonzero leading term").clone();
    Ok(det.scale(&(Rat::one() / lead)))
}
