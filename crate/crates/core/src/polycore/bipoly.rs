//! Dense bivariate polynomials in (z, y) over exact coefficient fields.
//!
//! Two presentation views are available: as a polynomial in z with
//! coefficients in y, and as a polynomial in y with coefficients in z. Both
//! elimination orders of the stability pipeline read off one of the views.

use num_traits::{Signed, Zero};

use super::poly::{Coeff, Poly, UniPoly, Var};
use super::rat::{CRat, Rat};
use crate::error::{Error, Result};

/// Coefficient grid indexed by (degree in z, degree in y): `grid[i][j]` is the
/// coefficient of z^i y^j. Trailing all-zero rows and columns are trimmed.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly2<T: Coeff> {
    grid: Vec<Vec<T>>,
}

/// Real-rational bivariate polynomial.
pub type BiPoly = Poly2<Rat>;
/// Complex-rational bivariate polynomial.
pub type CBiPoly = Poly2<CRat>;

impl<T: Coeff> Poly2<T> {
    pub fn new(mut grid: Vec<Vec<T>>) -> Self {
        for row in &mut grid {
            while row.last().is_some_and(|c| c.is_zero()) {
                row.pop();
            }
        }
        while grid.last().is_some_and(|r| r.is_empty()) {
            grid.pop();
        }
        Poly2 { grid }
    }

    pub fn zero() -> Self {
        Poly2 { grid: Vec::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![vec![c]])
    }

    /// The monomial c * z^i y^j.
    pub fn monomial(c: T, i: usize, j: usize) -> Self {
        let mut grid = vec![Vec::new(); i + 1];
        let mut row = vec![T::zero(); j + 1];
        row[j] = c;
        grid[i] = row;
        Self::new(grid)
    }

    pub fn is_zero(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.grid
            .get(i)
            .and_then(|r| r.get(j))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Degree in z (zero polynomial reports 0).
    pub fn deg_z(&self) -> usize {
        self.grid.len().saturating_sub(1)
    }

    /// Degree in y (zero polynomial reports 0).
    pub fn deg_y(&self) -> usize {
        self.grid.iter().map(|r| r.len()).max().unwrap_or(1).saturating_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let ni = (self.grid.len()).max(other.grid.len());
        let mut grid = Vec::with_capacity(ni);
        for i in 0..ni {
            let nj = self
                .grid
                .get(i)
                .map_or(0, |r| r.len())
                .max(other.grid.get(i).map_or(0, |r| r.len()));
            grid.push((0..nj).map(|j| self.coeff(i, j) + other.coeff(i, j)).collect());
        }
        Self::new(grid)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Poly2 {
            grid: self
                .grid
                .iter()
                .map(|r| r.iter().map(|c| -c.clone()).collect())
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let ni = self.deg_z() + other.deg_z() + 1;
        let nj = self.deg_y() + other.deg_y() + 1;
        let mut grid = vec![vec![T::zero(); nj]; ni];
        for (i1, r1) in self.grid.iter().enumerate() {
            for (j1, c1) in r1.iter().enumerate() {
                if c1.is_zero() {
                    continue;
                }
                for (i2, r2) in other.grid.iter().enumerate() {
                    for (j2, c2) in r2.iter().enumerate() {
                        if c2.is_zero() {
                            continue;
                        }
                        grid[i1 + i2][j1 + j2] =
                            grid[i1 + i2][j1 + j2].clone() + c1.clone() * c2.clone();
                    }
                }
            }
        }
        Self::new(grid)
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(
            self.grid
                .iter()
                .map(|r| r.iter().map(|a| a.clone() * c.clone()).collect())
                .collect(),
        )
    }

    pub fn eval(&self, z: &T, y: &T) -> T {
        let mut acc = T::zero();
        for row in self.grid.iter().rev() {
            let mut rv = T::zero();
            for c in row.iter().rev() {
                rv = rv * y.clone() + c.clone();
            }
            acc = acc * z.clone() + rv;
        }
        acc
    }

    /// View as polynomial in `main` with univariate coefficients in the other
    /// variable, ascending in the main variable. Coefficient polynomials are
    /// tagged with the non-main variable.
    pub fn view(&self, main: Var) -> Vec<Poly<T>> {
        match main {
            Var::Z => self
                .grid
                .iter()
                .map(|row| Poly::new(Var::Y, row.clone()))
                .collect(),
            Var::Y => {
                let nj = self.deg_y() + 1;
                if self.is_zero() {
                    return Vec::new();
                }
                (0..nj)
                    .map(|j| {
                        Poly::new(
                            Var::Z,
                            (0..self.grid.len()).map(|i| self.coeff(i, j)).collect(),
                        )
                    })
                    .collect()
            }
            Var::Lambda => panic!("bivariate polynomials carry (z, y) only"),
        }
    }

    /// Substitute an exact value for one variable, leaving a univariate
    /// polynomial in the other.
    pub fn substitute(&self, var: Var, value: &T) -> Poly<T> {
        match var {
            Var::Y => {
                // evaluate each row at y=value -> poly in z
                let coeffs = self
                    .grid
                    .iter()
                    .map(|row| {
                        let mut acc = T::zero();
                        for c in row.iter().rev() {
                            acc = acc * value.clone() + c.clone();
                        }
                        acc
                    })
                    .collect();
                Poly::new(Var::Z, coeffs)
            }
            Var::Z => {
                let nj = if self.is_zero() { 0 } else { self.deg_y() + 1 };
                let coeffs = (0..nj)
                    .map(|j| {
                        let mut acc = T::zero();
                        for i in (0..self.grid.len()).rev() {
                            acc = acc * value.clone() + self.coeff(i, j);
                        }
                        acc
                    })
                    .collect();
                Poly::new(Var::Y, coeffs)
            }
            Var::Lambda => panic!("bivariate polynomials carry (z, y) only"),
        }
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly2<U> {
        Poly2::new(
            self.grid
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        )
    }
}

impl BiPoly {
    /// Partial derivative.
    pub fn derivative(&self, var: Var) -> BiPoly {
        match var {
            Var::Z => {
                if self.grid.len() <= 1 {
                    return BiPoly::zero();
                }
                Poly2::new(
                    self.grid
                        .iter()
                        .enumerate()
                        .skip(1)
                        .map(|(i, row)| {
                            row.iter().map(|c| c * Rat::from_integer(i.into())).collect()
                        })
                        .collect(),
                )
            }
            Var::Y => Poly2::new(
                self.grid
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .skip(1)
                            .map(|(j, c)| c * Rat::from_integer(j.into()))
                            .collect()
                    })
                    .collect(),
            ),
            Var::Lambda => panic!("bivariate polynomials carry (z, y) only"),
        }
    }

    pub fn max_abs_coeff(&self) -> Rat {
        self.grid
            .iter()
            .flat_map(|r| r.iter())
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    /// f64 grid for fast numeric evaluation (Newton polish).
    pub fn to_f64_grid(&self) -> Vec<Vec<f64>> {
        self.grid
            .iter()
            .map(|r| r.iter().map(super::rat::rat_to_f64).collect())
            .collect()
    }

    pub fn eval_f64(grid: &[Vec<f64>], z: f64, y: f64) -> f64 {
        let mut acc = 0.0;
        for row in grid.iter().rev() {
            let mut rv = 0.0;
            for c in row.iter().rev() {
                rv = rv * y + c;
            }
            acc = acc * z + rv;
        }
        acc
    }
}

impl CBiPoly {
    /// Split into exact real and imaginary parts coefficient-wise.
    pub fn split_real_imag(&self) -> (BiPoly, BiPoly) {
        let re = Poly2::new(
            self.grid
                .iter()
                .map(|r| r.iter().map(|c| c.re.clone()).collect())
                .collect(),
        );
        let im = Poly2::new(
            self.grid
                .iter()
                .map(|r| r.iter().map(|c| c.im.clone()).collect())
                .collect(),
        );
        (re, im)
    }
}

/// Rebuild a bivariate polynomial from its z-view (ascending coefficient
/// polynomials in y).
pub fn from_view_z(rows: &[UniPoly]) -> Result<BiPoly> {
    for r in rows {
        if r.var() != Var::Y {
            return Err(Error::VarMismatch(Var::Y, r.var()));
        }
    }
    Ok(Poly2::new(rows.iter().map(|r| r.coeffs().to_vec()).collect()))
}
