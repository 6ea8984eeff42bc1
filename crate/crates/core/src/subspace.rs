//! Operator subspaces `V ⊆ B(C^d, C^c)` in canonical form.
//!
//! A subspace is stored as the reduced row-echelon form of its vectorized
//! spanning set (pivots normalized to 1, zero rows dropped). Two subspaces
//! are equal iff their bases are equal as lists.

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::Scalar;

/// Reduced row-echelon form in place; returns the pivot columns.
fn rref<S: Scalar>(rows: &mut Vec<Vec<S>>, width: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&k| !rows[k][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let lead = rows[r][col].clone();
        if !lead.is_one() {
            for x in rows[r].iter_mut() {
                *x = x.clone() / lead.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                if !p.is_zero() {
                    *x = x.clone() - factor.clone() * p.clone();
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{x : row · x = 0 for every row}` in `S^width`.
pub(crate) fn nullspace<S: Scalar>(mut rows: Vec<Vec<S>>, width: usize) -> Vec<Vec<S>> {
    let pivots = rref(&mut rows, width);
    let free: Vec<usize> = (0..width).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![S::zero(); width];
            v[f] = S::one();
            for (row, &p) in rows.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Canonical span of vectors in `S^width`.
pub(crate) fn span_rows<S: Scalar>(mut rows: Vec<Vec<S>>, width: usize) -> Vec<Vec<S>> {
    rows.retain(|r| r.iter().any(|x| !x.is_zero()));
    rref(&mut rows, width);
    rows
}

/// A linear subspace of the `codomain_dim × domain_dim` matrices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorSubspace<S> {
    domain_dim: usize,
    codomain_dim: usize,
    basis: Vec<ExactMatrix<S>>,
}

impl<S: Scalar> OperatorSubspace<S> {
    /// Canonical span of `mats`, each of shape `codomain_dim × domain_dim`.
    pub fn span(mats: &[ExactMatrix<S>], domain_dim: usize, codomain_dim: usize) -> Result<Self> {
        if let Some(bad) = mats
            .iter()
            .find(|m| m.rows() != codomain_dim || m.cols() != domain_dim)
        {
            return Err(Error::Shape(format!(
                "expected {codomain_dim}x{domain_dim}, got {}x{}",
                bad.rows(),
                bad.cols()
            )));
        }
        let rows = mats.iter().map(|m| m.entries().to_vec()).collect();
        Ok(Self::from_vectors(rows, domain_dim, codomain_dim))
    }

    fn from_vectors(rows: Vec<Vec<S>>, domain_dim: usize, codomain_dim: usize) -> Self {
        let width = domain_dim * codomain_dim;
        let basis = span_rows(rows, width)
            .into_iter()
            .map(|v| ExactMatrix::new(codomain_dim, domain_dim, v).expect("vector width"))
            .collect();
        OperatorSubspace {
            domain_dim,
            codomain_dim,
            basis,
        }
    }

    pub fn zero(domain_dim: usize, codomain_dim: usize) -> Self {
        OperatorSubspace {
            domain_dim,
            codomain_dim,
            basis: Vec::new(),
        }
    }

    /// All of `B(C^d, C^c)`.
    pub fn full(domain_dim: usize, codomain_dim: usize) -> Self {
        let basis = (0..codomain_dim)
            .flat_map(|i| (0..domain_dim).map(move |j| (i, j)))
            .map(|(i, j)| ExactMatrix::unit(codomain_dim, domain_dim, i, j))
            .collect();
        OperatorSubspace {
            domain_dim,
            codomain_dim,
            basis,
        }
    }

    /// `C · 1`.
    pub fn scalars(dim: usize) -> Self {
        Self::span(&[ExactMatrix::identity(dim)], dim, dim).expect("square identity")
    }

    pub fn domain_dim(&self) -> usize {
        self.domain_dim
    }

    pub fn codomain_dim(&self) -> usize {
        self.codomain_dim
    }

    pub fn basis(&self) -> &[ExactMatrix<S>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.domain_dim * self.codomain_dim
    }

    fn check_same_shape(&self, other: &Self) -> Result<()> {
        if (self.domain_dim, self.codomain_dim) != (other.domain_dim, other.codomain_dim) {
            return Err(Error::Shape(format!(
                "subspaces of B(C^{}, C^{}) and B(C^{}, C^{})",
                self.domain_dim, self.codomain_dim, other.domain_dim, other.codomain_dim
            )));
        }
        Ok(())
    }

    pub fn contains(&self, m: &ExactMatrix<S>) -> bool {
        if m.rows() != self.codomain_dim || m.cols() != self.domain_dim {
            return false;
        }
        if m.is_zero() {
            return true;
        }
        let mut rows: Vec<Vec<S>> = self.basis.iter().map(|b| b.entries().to_vec()).collect();
        rows.push(m.entries().to_vec());
        span_rows(rows, self.domain_dim * self.codomain_dim).len() == self.dim()
    }

    /// Inclusion `self ⊆ other`.
    pub fn is_subspace_of(&self, other: &Self) -> bool {
        self.check_same_shape(other).is_ok() && self.basis.iter().all(|b| other.contains(b))
    }

    pub fn join(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let rows = self
            .basis
            .iter()
            .chain(&other.basis)
            .map(|b| b.entries().to_vec())
            .collect();
        Ok(Self::from_vectors(rows, self.domain_dim, self.codomain_dim))
    }

    /// Intersection, computed as `¬(¬v ∨ ¬w)` under the Hilbert–Schmidt form.
    pub fn meet(&self, other: &Self) -> Result<Self> {
        self.check_same_shape(other)?;
        let complement_join = self.hs_orthocomplement().join(&other.hs_orthocomplement())?;
        Ok(complement_join.hs_orthocomplement())
    }

    /// `span{w·v : w ∈ self, v ∈ inner}` for `self: Y→Z`, `inner: X→Y`.
    pub fn product(&self, inner: &Self) -> Result<Self> {
        if self.domain_dim != inner.codomain_dim {
            return Err(Error::Shape(format!(
                "cannot compose B(C^{}, ·) after B(·, C^{})",
                self.domain_dim, inner.codomain_dim
            )));
        }
        let mut mats = Vec::with_capacity(self.dim() * inner.dim());
        for w in &self.basis {
            for v in &inner.basis {
                mats.push(w.mul(v)?);
            }
        }
        Self::span(&mats, inner.domain_dim, self.codomain_dim)
    }

    /// `{v† : v ∈ self}`.
    pub fn adjoint(&self) -> Self {
        let mats: Vec<_> = self.basis.iter().map(ExactMatrix::adjoint).collect();
        Self::span(&mats, self.codomain_dim, self.domain_dim).expect("adjoint shapes")
    }

    /// `{vᵀ : v ∈ self}`, the action on duals.
    pub fn transpose(&self) -> Self {
        let mats: Vec<_> = self.basis.iter().map(ExactMatrix::transpose).collect();
        Self::span(&mats, self.codomain_dim, self.domain_dim).expect("transpose shapes")
    }

    /// `{b : tr(a†b) = 0 for all a ∈ self}`.
    pub fn hs_orthocomplement(&self) -> Self {
        let width = self.domain_dim * self.codomain_dim;
        let rows = self
            .basis
            .iter()
            .map(|a| a.entries().iter().map(S::conj).collect())
            .collect();
        Self::from_vectors(nullspace(rows, width), self.domain_dim, self.codomain_dim)
    }

    /// Whether every element of `self` is Hilbert–Schmidt orthogonal to every element of `other`.
    pub fn is_hs_orthogonal(&self, other: &Self) -> bool {
        self.basis
            .iter()
            .all(|a| other.basis.iter().all(|b| a.hs_inner(b).is_zero()))
    }

    /// `span{v ⊗ w}`.
    pub fn kron(&self, other: &Self) -> Self {
        let mats: Vec<_> = self
            .basis
            .iter()
            .flat_map(|v| other.basis.iter().map(move |w| v.kron(w)))
            .collect();
        Self::span(
            &mats,
            self.domain_dim * other.domain_dim,
            self.codomain_dim * other.codomain_dim,
        )
        .expect("kronecker shapes")
    }

    /// The common kernel `⋂ ker v` as a subspace of `B(C, C^d)` (column vectors).
    pub fn kernel_intersection(&self) -> Self {
        let d = self.domain_dim;
        let rows: Vec<Vec<S>> = self
            .basis
            .iter()
            .flat_map(|m| (0..m.rows()).map(move |i| (0..d).map(|j| m.get(i, j).clone()).collect()))
            .collect();
        let vectors = nullspace(rows, d);
        Self::from_vectors(vectors, 1, d)
    }

    /// Whether some element has nonzero trace (square shapes only).
    pub fn has_nonzero_trace(&self) -> bool {
        self.domain_dim == self.codomain_dim && self.basis.iter().any(|b| !b.trace().is_zero())
    }

    /// Basis as rows of entry strings.
    pub fn to_strings(&self) -> Vec<Vec<Vec<String>>> {
        self.basis.iter().map(ExactMatrix::to_strings).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational as G;
    use num_traits::Zero;

    type M = ExactMatrix<G>;
    type V = OperatorSubspace<G>;

    fn shear() -> M {
        M::from_ints(&[&[1, 1], &[0, 1]])
    }

    #[test]
    fn empty_span_is_zero() {
        let v = V::span(&[], 2, 2).unwrap();
        assert_eq!(v.dim(), 0);
        assert!(v.is_zero());
    }

    #[test]
    fn scalar_multiples_collapse() {
        let i2 = M::identity(2);
        let v = V::span(&[i2.clone(), i2.scale(&G::from_int(2))], 2, 2).unwrap();
        assert_eq!(v.basis(), &[i2]);
    }

    #[test]
    fn rref_basis_of_shear_and_identity() {
        let v = V::span(&[shear(), M::identity(2)], 2, 2).unwrap();
        assert_eq!(v.dim(), 2);
        assert_eq!(v.basis(), &[M::identity(2), M::from_ints(&[&[0, 1], &[0, 0]])]);
        // idempotent
        assert_eq!(V::span(v.basis(), 2, 2).unwrap(), v);
    }

    #[test]
    fn span_rejects_bad_shapes() {
        assert!(V::span(&[M::identity(2), M::identity(3)], 2, 2).is_err());
    }

    #[test]
    fn shear_times_inverse_is_scalars() {
        let v = V::span(&[shear()], 2, 2).unwrap();
        let w = V::span(&[shear().inverse().unwrap()], 2, 2).unwrap();
        assert_eq!(v.product(&w).unwrap(), V::scalars(2));
        assert_eq!(w.product(&v).unwrap(), V::scalars(2));
    }

    #[test]
    fn products_with_zero_and_full() {
        let v = V::span(&[shear()], 2, 2).unwrap();
        assert!(v.product(&V::zero(2, 2)).unwrap().is_zero());
        let full = V::full(2, 2);
        assert_eq!(full.product(&full).unwrap().dim(), 4);
        assert!(V::full(3, 2).product(&V::full(2, 2)).is_err());
    }

    #[test]
    fn adjoint_of_shear() {
        let v = V::span(&[shear()], 2, 2).unwrap();
        let expected = V::span(&[M::from_ints(&[&[1, 0], &[1, 1]])], 2, 2).unwrap();
        assert_eq!(v.adjoint(), expected);
        assert!(V::zero(2, 3).adjoint().is_zero());
        assert_eq!(V::zero(2, 3).adjoint().domain_dim(), 3);
    }

    #[test]
    fn join_and_meet_basics() {
        let e11 = V::span(&[M::unit(2, 2, 0, 0)], 2, 2).unwrap();
        let e22 = V::span(&[M::unit(2, 2, 1, 1)], 2, 2).unwrap();
        assert_eq!(e11.join(&e22).unwrap().dim(), 2);
        assert_eq!(e11.join(&V::zero(2, 2)).unwrap(), e11);
        assert_eq!(e11.meet(&V::full(2, 2)).unwrap(), e11);
        assert!(e11.meet(&e22).unwrap().is_zero());
        let diag = e11.join(&e22).unwrap();
        let sc = V::scalars(2);
        assert_eq!(diag.meet(&sc).unwrap(), sc);
    }

    #[test]
    fn kernel_intersection_examples() {
        let zero = V::zero(2, 3);
        assert_eq!(zero.kernel_intersection(), V::full(1, 2));
        let e11 = V::span(&[M::unit(2, 2, 0, 0)], 2, 2).unwrap();
        let expected = V::span(&[M::from_ints(&[&[0], &[1]])], 1, 2).unwrap();
        assert_eq!(e11.kernel_intersection(), expected);
        assert!(V::full(2, 1).kernel_intersection().is_zero());
    }

    #[test]
    fn orthocomplement_examples() {
        assert_eq!(V::zero(2, 2).hs_orthocomplement(), V::full(2, 2));
        assert!(V::full(2, 2).hs_orthocomplement().is_zero());
        let traceless = V::scalars(2).hs_orthocomplement();
        assert_eq!(traceless.dim(), 3);
        assert!(traceless.basis().iter().all(|b| b.trace().is_zero()));
    }

    #[test]
    fn kronecker_examples() {
        let sc = V::scalars(2);
        assert_eq!(sc.kron(&sc), V::scalars(4));
        assert!(sc.kron(&V::zero(2, 2)).is_zero());
    }
}
