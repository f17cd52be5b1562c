//! The neutral delay differential system under analysis.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::{Rat, RatMatrix};

/// Linear neutral system
/// `x'(t) - sum_k B_k x'(t - k tau) = A0 x(t) + sum_k A_k x(t - k tau)`
/// with state dimension n and delay multiplicity N (delays tau, 2 tau, ...,
/// N tau; tau itself stays free, the stability verdict quantifies over it).
///
/// Construction enforces the standing assumption det(I - sum B_k) != 0.
#[derive(Debug, Clone)]
pub struct NeutralSystem {
    n: usize,
    a0: RatMatrix,
    a: Vec<RatMatrix>,
    b: Vec<RatMatrix>,
}

/// Addresses one coefficient matrix of a system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatrixSlot {
    A0,
    /// A_k, 1-based delay index.
    A(usize),
    /// B_k, 1-based delay index.
    B(usize),
}

impl NeutralSystem {
    pub fn new(a0: RatMatrix, a: Vec<RatMatrix>, b: Vec<RatMatrix>) -> Result<Self> {
        let n = a0.nrows();
        if a0.ncols() != n || n == 0 {
            return Err(Error::DimensionMismatch { expected: n.max(1), got: a0.ncols() });
        }
        if a.len() != b.len() || a.is_empty() {
            return Err(Error::Config(format!(
                "need equal nonzero counts of A and B matrices, got {} and {}",
                a.len(),
                b.len()
            )));
        }
        for m in a.iter().chain(b.iter()) {
            if m.nrows() != n || m.ncols() != n {
                return Err(Error::DimensionMismatch { expected: n, got: m.nrows() });
            }
        }
        let sys = NeutralSystem { n, a0, a, b };
        if sys.neutral_pencil_lhs().det()?.is_zero() {
            return Err(Error::SingularPencil);
        }
        Ok(sys)
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// Delay multiplicity N.
    pub fn delay_count(&self) -> usize {
        self.a.len()
    }

    pub fn a0(&self) -> &RatMatrix {
        &self.a0
    }

    pub fn a(&self) -> &[RatMatrix] {
        &self.a
    }

    pub fn b(&self) -> &[RatMatrix] {
        &self.b
    }

    /// I - sum B_k.
    pub fn neutral_pencil_lhs(&self) -> RatMatrix {
        let mut m = RatMatrix::identity(self.n);
        for bk in &self.b {
            m = m.sub(bk);
        }
        m
    }

    /// A0 + sum A_k.
    pub fn total_state_matrix(&self) -> RatMatrix {
        let mut m = self.a0.clone();
        for ak in &self.a {
            m = m.add(ak);
        }
        m
    }

    /// I - sum B_k (-1)^k, the difference-operator symbol at the bilinear
    /// transform pole (theta = pi).
    pub fn pole_lhs(&self) -> RatMatrix {
        let mut m = RatMatrix::identity(self.n);
        for (k, bk) in self.b.iter().enumerate() {
            if (k + 1) % 2 == 1 {
                m = m.add(bk);
            } else {
                m = m.sub(bk);
            }
        }
        m
    }

    /// A0 + sum A_k (-1)^k.
    pub fn pole_rhs(&self) -> RatMatrix {
        let mut m = self.a0.clone();
        for (k, ak) in self.a.iter().enumerate() {
            if (k + 1) % 2 == 1 {
                m = m.sub(ak);
            } else {
                m = m.add(ak);
            }
        }
        m
    }

    /// The same system with every B_k zeroed (retarded variant).
    pub fn retarded_variant(&self) -> NeutralSystem {
        let zeros = vec![RatMatrix::zeros(self.n, self.n); self.b.len()];
        NeutralSystem::new(self.a0.clone(), self.a.clone(), zeros)
            .expect("identity neutral pencil is nonsingular")
    }

    /// Replace one matrix entry, revalidating the standing assumption.
    pub fn with_entry(&self, slot: MatrixSlot, i: usize, j: usize, value: Rat) -> Result<Self> {
        if i >= self.n || j >= self.n {
            return Err(Error::Config(format!("entry ({i},{j}) outside {0}x{0}", self.n)));
        }
        let mut a0 = self.a0.clone();
        let mut a = self.a.clone();
        let mut b = self.b.clone();
        match slot {
            MatrixSlot::A0 => *a0.at_mut(i, j) = value,
            MatrixSlot::A(k) => {
                let m = a
                    .get_mut(k.wrapping_sub(1))
                    .ok_or_else(|| Error::Config(format!("A[{k}] out of range")))?;
                *m.at_mut(i, j) = value;
            }
            MatrixSlot::B(k) => {
                let m = b
                    .get_mut(k.wrapping_sub(1))
                    .ok_or_else(|| Error::Config(format!("B[{k}] out of range")))?;
                *m.at_mut(i, j) = value;
            }
        }
        NeutralSystem::new(a0, a, b)
    }

    pub fn entry(&self, slot: MatrixSlot, i: usize, j: usize) -> Result<Rat> {
        if i >= self.n || j >= self.n {
            return Err(Error::Config(format!("entry ({i},{j}) outside {0}x{0}", self.n)));
        }
        let m = match slot {
            MatrixSlot::A0 => &self.a0,
            MatrixSlot::A(k) => self
                .a
                .get(k.wrapping_sub(1))
                .ok_or_else(|| Error::Config(format!("A[{k}] out of range")))?,
            MatrixSlot::B(k) => self
                .b
                .get(k.wrapping_sub(1))
                .ok_or_else(|| Error::Config(format!("B[{k}] out of range")))?,
        };
        Ok(m.at(i, j).clone())
    }
}

/// Parse an entry path like `A0[0][1]`, `A[2][0][1]`, `B[1][1][0]`.
/// Delay indices are 1-based, row/column indices 0-based.
pub fn parse_entry_path(path: &str) -> Result<(MatrixSlot, usize, usize)> {
    let bad = || Error::Config(format!("cannot parse entry path '{path}'"));
    let (name, rest) = path.split_once('[').ok_or_else(bad)?;
    let idx: Vec<usize> = rest
        .trim_end_matches(']')
        .split("][")
        .map(|s| s.parse::<usize>().map_err(|_| bad()))
        .collect::<Result<_>>()?;
    match (name.trim(), idx.as_slice()) {
        ("A0", [i, j]) => Ok((MatrixSlot::A0, *i, *j)),
        ("A", [k, i, j]) => Ok((MatrixSlot::A(*k), *i, *j)),
        ("B", [k, i, j]) => Ok((MatrixSlot::B(*k), *i, *j)),
        _ => Err(bad()),
    }
}
