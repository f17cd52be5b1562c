//! Dense univariate polynomials over exact coefficient fields.

use std::fmt;

use num_traits::{One, Signed, Zero};

use super::rat::{CRat, Rat};
use crate::error::{Error, Result};

/// Variable tag. Binary operations require matching tags; this prevents
/// silently mixing the roles of the two elimination orders.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    Z,
    Y,
    Lambda,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::Z => write!(f, "z"),
            Var::Y => write!(f, "y"),
            Var::Lambda => write!(f, "lambda"),
        }
    }
}

/// Coefficient field: exact, no rounding anywhere.
pub trait Coeff: Clone + PartialEq + Zero + One + std::ops::Neg<Output = Self> + std::ops::Sub<Output = Self> + std::ops::Div<Output = Self> {}

impl Coeff for Rat {}
impl Coeff for CRat {}

/// Dense univariate polynomial, coefficients in ascending degree.
/// The coefficient list never ends with a zero unless the polynomial is
/// identically zero (then it is empty).
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<T: Coeff> {
    var: Var,
    coeffs: Vec<T>,
}

/// Real-rational univariate polynomial.
pub type UniPoly = Poly<Rat>;
/// Complex-rational univariate polynomial.
pub type CUniPoly = Poly<CRat>;

impl<T: Coeff> Poly<T> {
    pub fn new(var: Var, mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { var, coeffs }
    }

    pub fn zero(var: Var) -> Self {
        Poly { var, coeffs: Vec::new() }
    }

    pub fn constant(var: Var, c: T) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial c * x^k.
    pub fn monomial(var: Var, c: T, k: usize) -> Self {
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree; zero polynomial reports 0 by convention, check `is_zero` first
    /// where the distinction matters.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficient of x^k (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> T {
        self.coeffs.get(k).cloned().unwrap_or_else(T::zero)
    }

    /// Ascending coefficient slice; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    fn check_var(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VarMismatch(self.var, other.var));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        Ok(Self::new(self.var, coeffs))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        Ok(Self::new(self.var, coeffs))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.var));
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Ok(Self::new(self.var, coeffs))
    }

    pub fn neg(&self) -> Self {
        Poly {
            var: self.var,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        if c.is_zero() {
            return Self::zero(self.var);
        }
        Self::new(self.var, self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::constant(self.var, T::one());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same var");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same var");
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.var);
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| {
                let mut k = T::zero();
                for _ in 0..i {
                    k = k + T::one();
                }
                c.clone() * k
            })
            .collect();
        Self::new(self.var, coeffs)
    }

    pub fn eval(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Euclidean division; the coefficient domain is a field so this is exact.
    /// Returns (quotient, remainder) with deg rem < deg divisor.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.check_var(divisor)?;
        if divisor.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() || self.degree() < divisor.degree() {
            return Ok((Self::zero(self.var), self.clone()));
        }
        let dlead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let dq = self.degree() - divisor.degree() + 1;
        let mut quot = vec![T::zero(); dq];
        for k in (0..dq).rev() {
            let top = rem[k + divisor.degree()].clone();
            if top.is_zero() {
                continue;
            }
            let q = top / dlead.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * d.clone();
            }
            quot[k] = q;
        }
        Ok((Self::new(self.var, quot), Self::new(self.var, rem)))
    }

    /// Exact quotient; errors are reserved for genuine zero divisors, a
    /// nonzero remainder panics because it signals an internal arithmetic bug.
    pub fn exact_div(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        assert!(r.is_zero(), "exact_div with nonzero remainder");
        Ok(q)
    }

    /// Monic gcd via Euclid over the coefficient field.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.check_var(other)?;
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            return Ok(a);
        }
        let lead = a.leading().unwrap().clone();
        Ok(Self::new(a.var, a.coeffs.iter().map(|c| c.clone() / lead.clone()).collect()))
    }

    /// p / gcd(p, p'): same distinct roots, all simple.
    pub fn square_free_part(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.degree() == 0 {
            return Ok(self.clone());
        }
        let g = self.gcd(&self.derivative())?;
        if g.degree() == 0 {
            return Ok(self.clone());
        }
        self.exact_div(&g)
    }

    pub fn map_coeffs<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.var, self.coeffs.iter().map(f).collect())
    }
}

impl UniPoly {
    /// Largest absolute coefficient (zero polynomial gives 0).
    pub fn max_abs_coeff(&self) -> Rat {
        self.coeffs
            .iter()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(Rat::zero)
    }

    pub fn to_f64_coeffs(&self) -> Vec<f64> {
        self.coeffs.iter().map(super::rat::rat_to_f64).collect()
    }

    pub fn eval_f64(coeffs: &[f64], x: f64) -> f64 {
        let mut acc = 0.0;
        for c in coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
}

impl CUniPoly {
    /// Split into exact real and imaginary parts: p = re + i*im.
    pub fn split_real_imag(&self) -> (UniPoly, UniPoly) {
        let re = Poly::new(self.var, self.coeffs.iter().map(|c| c.re.clone()).collect());
        let im = Poly::new(self.var, self.coeffs.iter().map(|c| c.im.clone()).collect());
        (re, im)
    }

    pub fn from_parts(re: &UniPoly, im: &UniPoly) -> Result<Self> {
        if re.var() != im.var() {
            return Err(Error::VarMismatch(re.var(), im.var()));
        }
        let n = re.coeffs().len().max(im.coeffs().len());
        let coeffs = (0..n).map(|i| CRat::new(re.coeff(i), im.coeff(i))).collect();
        Ok(Poly::new(re.var(), coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let cs = super::rat::format_rat(c);
                match i {
                    0 => cs,
                    1 => format!("{}*{}", cs, self.var),
                    _ => format!("{}*{}^{}", cs, self.var, i),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}

impl fmt::Display for CUniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let cs = format!(
                    "({}{}{}i)",
                    super::rat::format_rat(&c.re),
                    if c.im.is_negative() { "" } else { "+" },
                    super::rat::format_rat(&c.im)
                );
                match i {
                    0 => cs,
                    1 => format!("{}*{}", cs, self.var),
                    _ => format!("{}*{}^{}", cs, self.var, i),
                }
            })
            .collect();
        write!(f, "{}", terms.join(" + "))
    }
}
