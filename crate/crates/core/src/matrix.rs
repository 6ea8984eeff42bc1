//! Dense exact matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A dense `rows × cols` matrix stored row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactMatrix<S> {
    rows: usize,
    cols: usize,
    entries: Vec<S>,
}

impl<S: Scalar> ExactMatrix<S> {
    pub fn new(rows: usize, cols: usize, entries: Vec<S>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(ExactMatrix {
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Self::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&n| S::from_int(n)))
            .collect();
        ExactMatrix::new(r, c, entries).expect("rectangular integer literal")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix {
            rows,
            cols,
            entries: vec![S::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for k in 0..n {
            m.entries[k * n + k] = S::one();
        }
        m
    }

    /// The matrix unit `E_{ij}`.
    pub fn unit(rows: usize, cols: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(rows, cols);
        m.entries[i * cols + j] = S::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<S> {
        self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: S) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(S::is_zero)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = out.entries[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::Shape("cannot add matrices of different shapes".into()));
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.clone() + b.clone())
            .collect();
        Ok(ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn scale(&self, s: &S) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(S::conj).collect(),
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.transpose().conj()
    }

    pub fn trace(&self) -> S {
        (0..self.rows.min(self.cols)).fold(S::zero(), |acc, k| acc + self.get(k, k).clone())
    }

    /// Kronecker product; row index of `a ⊗ b` is `i_a · rows(b) + i_b`.
    pub fn kron(&self, rhs: &Self) -> Self {
        let rows = self.rows * rhs.rows;
        let cols = self.cols * rhs.cols;
        let mut out = Self::zeros(rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..rhs.rows {
                    for j2 in 0..rhs.cols {
                        let b = rhs.get(i2, j2);
                        out.set(i1 * rhs.rows + i2, j1 * rhs.cols + j2, a.clone() * b.clone());
                    }
                }
            }
        }
        out
    }

    /// The permutation `C^m ⊗ C^n → C^n ⊗ C^m`, `e_i ⊗ e_j ↦ e_j ⊗ e_i`.
    pub fn swap(m: usize, n: usize) -> Self {
        let mut out = Self::zeros(m * n, m * n);
        for i in 0..m {
            for j in 0..n {
                out.set(j * m + i, i * n + j, S::one());
            }
        }
        out
    }

    /// Hilbert–Schmidt inner product `tr(self† · rhs)`.
    pub fn hs_inner(&self, rhs: &Self) -> S {
        self.entries
            .iter()
            .zip(&rhs.entries)
            .fold(S::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
    }

    /// Inverse by Gauss–Jordan elimination, `None` when singular or not square.
    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let mut aug: Vec<Vec<S>> = (0..n)
            .map(|i| {
                let mut row: Vec<S> = (0..n).map(|j| self.get(i, j).clone()).collect();
                row.extend((0..n).map(|j| if i == j { S::one() } else { S::zero() }));
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
            aug.swap(col, pivot);
            let p = aug[col][col].clone();
            for x in aug[col].iter_mut() {
                *x = x.clone() / p.clone();
            }
            for r in 0..n {
                if r != col && !aug[r][col].is_zero() {
                    let factor = aug[r][col].clone();
                    for c in 0..2 * n {
                        let v = aug[col][c].clone();
                        aug[r][c] = aug[r][c].clone() - factor.clone() * v;
                    }
                }
            }
        }
        let entries = aug.into_iter().flat_map(|row| row.into_iter().skip(n)).collect();
        Some(ExactMatrix {
            rows: n,
            cols: n,
            entries,
        })
    }

    pub fn map<F: Fn(&S) -> S>(&self, f: F) -> Self {
        ExactMatrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(f).collect(),
        }
    }

    /// Rows of entry strings, the serialized form.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.get(i, j).to_string()).collect())
            .collect()
    }

    pub fn parse_rows(rows: &[Vec<String>]) -> Result<Self> {
        let parsed = rows
            .iter()
            .map(|row| row.iter().map(|s| S::parse(s)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(parsed)
    }
}

impl<S: Scalar> fmt::Display for ExactMatrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as G;

    type M = ExactMatrix<G>;

    #[test]
    fn adjoint_is_involutive_and_conjugates() {
        let m = M::from_rows(vec![
            vec![G::from_ints(1, 1), G::from_ints(0, 2)],
            vec![G::from_ints(3, 0), G::from_ints(0, -1)],
        ])
        .unwrap();
        assert_eq!(m.adjoint().adjoint(), m);
        assert_eq!(*m.adjoint().get(0, 1), G::from_ints(3, 0));
        assert_eq!(*m.adjoint().get(1, 0), G::from_ints(0, -2));
    }

    #[test]
    fn inverse_of_shear() {
        let a = M::from_ints(&[&[1, 1], &[0, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(inv, M::from_ints(&[&[1, -1], &[0, 1]]));
        assert_eq!(a.mul(&inv).unwrap(), M::identity(2));
        assert!(M::from_ints(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn kronecker_layout_and_swap() {
        let a = M::from_ints(&[&[1, 2], &[3, 4]]);
        let b = M::identity(2);
        let k = a.kron(&b);
        assert_eq!(*k.get(0, 2), G::from_int(2));
        assert_eq!(*k.get(3, 1), G::from_int(3));
        let s = M::swap(2, 3);
        let x = M::from_ints(&[&[1], &[0]]);
        let y = M::from_ints(&[&[0], &[0], &[1]]);
        assert_eq!(s.mul(&x.kron(&y)).unwrap(), y.kron(&x));
    }

    #[test]
    fn shape_errors() {
        assert!(M::new(2, 2, vec![G::from_int(1)]).is_err());
        assert!(M::identity(2).mul(&M::identity(3)).is_err());
    }
}
