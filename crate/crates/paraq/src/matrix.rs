//! Dense square matrices over an arbitrary coefficient ring.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;
use crate::ring::Ring;

/// Square matrix with entries in `C`, stored row-major. All representation
/// matrices in this crate are square, so rectangular shapes are not modeled.
#[derive(Clone, PartialEq)]
pub struct Matrix<C: Ring> {
    dim: usize,
    entries: Vec<C>,
}

impl<C: Ring> Matrix<C> {
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> C) -> Self {
        assert!(dim > 0, "empty matrix");
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<C>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix is not square");
        Matrix {
            dim,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn diagonal(diag: Vec<C>) -> Self {
        assert!(!diag.is_empty());
        let zero = diag[0].zero_like();
        let dim = diag.len();
        let mut m = Matrix::from_fn(dim, |_, _| zero.clone());
        for (i, d) in diag.into_iter().enumerate() {
            *m.at_mut(i, i) = d;
        }
        m
    }

    /// Identity of dimension `dim`; `witness` supplies the entry shape.
    pub fn identity(dim: usize, witness: &C) -> Self {
        Matrix::from_fn(dim, |i, j| {
            if i == j {
                witness.one_like()
            } else {
                witness.zero_like()
            }
        })
    }

    pub fn zero(dim: usize, witness: &C) -> Self {
        Matrix::from_fn(dim, |_, _| witness.zero_like())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, i: usize, j: usize) -> &C {
        &self.entries[i * self.dim + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut C {
        &mut self.entries[i * self.dim + j]
    }

    pub fn map<D: Ring>(&self, mut f: impl FnMut(&C) -> D) -> Matrix<D> {
        Matrix::from_fn(self.dim, |i, j| f(self.at(i, j)))
    }

    /// Position and value of the first nonzero entry in row-major order;
    /// used as the witness in failed-check reports.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &C)> {
        (0..self.dim * self.dim)
            .find(|k| !self.entries[*k].is_zero())
            .map(|k| (k / self.dim, k % self.dim, &self.entries[k]))
    }

    /// Kronecker product; entry products are taken left factor first.
    pub fn kron(&self, other: &Matrix<C>) -> Matrix<C> {
        let d2 = other.dim;
        Matrix::from_fn(self.dim * d2, |i, j| {
            self.at(i / d2, j / d2).clone() * other.at(i % d2, j % d2).clone()
        })
    }

    pub fn commutator(&self, other: &Matrix<C>) -> Matrix<C> {
        self.clone() * other.clone() - other.clone() * self.clone()
    }

    /// Exact Gauss-Jordan inverse with unit-pivot search. Requires
    /// commutative entries; returns `None` when no unit pivot exists.
    pub fn inverse(&self) -> Option<Matrix<C>> {
        let n = self.dim;
        let witness = &self.entries[0];
        let mut a = self.clone();
        let mut inv = Matrix::identity(n, witness);
        for col in 0..n {
            let (pivot_row, pivot_inv) =
                (col..n).find_map(|r| a.at(r, col).try_inv().map(|p| (r, p)))?;
            if pivot_row != col {
                for j in 0..n {
                    let d = a.dim;
                    a.entries.swap(pivot_row * d + j, col * d + j);
                    inv.entries.swap(pivot_row * d + j, col * d + j);
                }
            }
            for j in 0..n {
                *a.at_mut(col, j) = a.at(col, j).clone() * pivot_inv.clone();
                *inv.at_mut(col, j) = inv.at(col, j).clone() * pivot_inv.clone();
            }
            for r in 0..n {
                if r == col || a.at(r, col).is_zero() {
                    continue;
                }
                let factor = a.at(r, col).clone();
                for j in 0..n {
                    let delta = factor.clone() * a.at(col, j).clone();
                    *a.at_mut(r, j) = a.at(r, j).clone() - delta;
                    let delta = factor.clone() * inv.at(col, j).clone();
                    *inv.at_mut(r, j) = inv.at(r, j).clone() - delta;
                }
            }
        }
        Some(inv)
    }
}

impl Matrix<Rational> {
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from_int(x)).collect())
                .collect(),
        )
    }
}

impl<C: Ring> Add for Matrix<C> {
    type Output = Matrix<C>;
    fn add(self, rhs: Matrix<C>) -> Matrix<C> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix::from_fn(self.dim, |i, j| {
            self.at(i, j).clone() + rhs.at(i, j).clone()
        })
    }
}

impl<C: Ring> Sub for Matrix<C> {
    type Output = Matrix<C>;
    fn sub(self, rhs: Matrix<C>) -> Matrix<C> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix::from_fn(self.dim, |i, j| {
            self.at(i, j).clone() - rhs.at(i, j).clone()
        })
    }
}

impl<C: Ring> Neg for Matrix<C> {
    type Output = Matrix<C>;
    fn neg(self) -> Matrix<C> {
        self.map(|c| -c.clone())
    }
}

impl<C: Ring> Mul for Matrix<C> {
    type Output = Matrix<C>;
    fn mul(self, rhs: Matrix<C>) -> Matrix<C> {
        assert_eq!(self.dim, rhs.dim, "matrix dimension mismatch");
        Matrix::from_fn(self.dim, |i, j| {
            let mut acc = self.entries[0].zero_like();
            for k in 0..self.dim {
                acc = acc + self.at(i, k).clone() * rhs.at(k, j).clone();
            }
            acc
        })
    }
}

impl<C: Ring> Ring for Matrix<C> {
    fn zero_like(&self) -> Self {
        Matrix::zero(self.dim, &self.entries[0])
    }

    fn one_like(&self) -> Self {
        Matrix::identity(self.dim, &self.entries[0])
    }

    fn is_zero(&self) -> bool {
        self.entries.iter().all(C::is_zero)
    }

    fn scale(&self, k: &Rational) -> Self {
        self.map(|c| c.scale(k))
    }

    fn try_inv(&self) -> Option<Self> {
        self.inverse()
    }
}

impl<C: Ring + fmt::Display> fmt::Display for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for Matrix<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix(dim={})", self.dim)?;
        for i in 0..self.dim {
            write!(f, "  [")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{:?}", self.at(i, j))?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}
