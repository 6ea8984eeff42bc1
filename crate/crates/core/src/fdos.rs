//! FdOS: finite-dimensional Hilbert spaces with operator subspaces as
//! morphisms. Matrices over it give qRel.

use std::marker::PhantomData;

use crate::error::Result;
use crate::matrix::ExactMatrix;
use crate::quantaloid::{CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid};
use crate::scalar::Scalar;
use crate::subspace::OperatorSubspace;

/// Objects are dimensions `n ≥ 1`; `hom(m, n)` is the lattice of subspaces of
/// `B(C^m, C^n)`.
#[derive(Clone, Debug, Default)]
pub struct FdOs<S> {
    _scalar: PhantomData<fn() -> S>,
}

impl<S: Scalar> FdOs<S> {
    pub fn new() -> Self {
        FdOs {
            _scalar: PhantomData,
        }
    }

    /// `vec(I_n)` as an `n²×1` column, indexed `i·n + j`.
    pub fn vec_identity(n: usize) -> ExactMatrix<S> {
        let mut m = ExactMatrix::zeros(n * n, 1);
        for i in 0..n {
            m.set(i * n + i, 0, S::one());
        }
        m
    }
}

impl<S: Scalar> Quantaloid for FdOs<S> {
    type Obj = usize;
    type Mor = OperatorSubspace<S>;

    fn source(&self, f: &OperatorSubspace<S>) -> usize {
        f.domain_dim()
    }

    fn target(&self, f: &OperatorSubspace<S>) -> usize {
        f.codomain_dim()
    }

    fn compose(&self, g: &OperatorSubspace<S>, f: &OperatorSubspace<S>) -> Result<OperatorSubspace<S>> {
        g.product(f)
    }

    fn identity(&self, x: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::scalars(*x)
    }

    fn bottom(&self, x: &usize, y: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::zero(*x, *y)
    }

    fn top(&self, x: &usize, y: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::full(*x, *y)
    }

    fn join(&self, f: &OperatorSubspace<S>, g: &OperatorSubspace<S>) -> Result<OperatorSubspace<S>> {
        f.join(g)
    }

    fn meet(&self, f: &OperatorSubspace<S>, g: &OperatorSubspace<S>) -> Result<OperatorSubspace<S>> {
        f.meet(g)
    }

    fn leq(&self, f: &OperatorSubspace<S>, g: &OperatorSubspace<S>) -> Result<bool> {
        self.check_parallel(f, g)?;
        Ok(f.is_subspace_of(g))
    }

    fn is_bottom(&self, f: &OperatorSubspace<S>) -> bool {
        f.is_zero()
    }
}

impl<S: Scalar> DaggerQuantaloid for FdOs<S> {
    fn dagger(&self, f: &OperatorSubspace<S>) -> OperatorSubspace<S> {
        f.adjoint()
    }
}

fn span_one<S: Scalar>(m: ExactMatrix<S>) -> OperatorSubspace<S> {
    let (c, d) = (m.rows(), m.cols());
    OperatorSubspace::span(&[m], d, c).expect("shape taken from the matrix")
}

impl<S: Scalar> MonoidalQuantaloid for FdOs<S> {
    fn unit_object(&self) -> usize {
        1
    }

    fn tensor_objects(&self, x: &usize, y: &usize) -> usize {
        x * y
    }

    fn tensor(&self, f: &OperatorSubspace<S>, g: &OperatorSubspace<S>) -> OperatorSubspace<S> {
        f.kron(g)
    }

    fn associator(&self, x: &usize, y: &usize, z: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::scalars(x * y * z)
    }

    fn left_unitor(&self, x: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::scalars(*x)
    }

    fn right_unitor(&self, x: &usize) -> OperatorSubspace<S> {
        OperatorSubspace::scalars(*x)
    }

    fn symmetry(&self, x: &usize, y: &usize) -> OperatorSubspace<S> {
        span_one(ExactMatrix::swap(*x, *y))
    }

    fn enumerate_scalars(&self) -> Option<Vec<OperatorSubspace<S>>> {
        Some(vec![OperatorSubspace::zero(1, 1), OperatorSubspace::scalars(1)])
    }
}

impl<S: Scalar> CompactQuantaloid for FdOs<S> {
    fn dual(&self, x: &usize) -> usize {
        *x
    }

    fn eta(&self, x: &usize) -> OperatorSubspace<S> {
        span_one(Self::vec_identity(*x))
    }

    fn epsilon(&self, x: &usize) -> OperatorSubspace<S> {
        span_one(Self::vec_identity(*x).transpose())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational;

    type B = FdOs<GaussianRational>;

    #[test]
    fn snake_in_the_base() {
        let b = B::new();
        for n in 1..=3 {
            // (ε ⊗ id) ∘ (id ⊗ η) = id up to unitors, which are all scalars here
            let lhs = b.tensor(&b.epsilon(&n), &b.identity(&n));
            let rhs = b.tensor(&b.identity(&n), &b.eta(&n));
            assert_eq!(b.compose(&lhs, &rhs).unwrap(), b.identity(&n));
        }
    }

    #[test]
    fn symmetry_is_unitary() {
        let b = B::new();
        let s = b.symmetry(&2, &3);
        assert_eq!(b.compose(&b.dagger(&s), &s).unwrap(), b.identity(&6));
        assert_eq!(b.compose(&b.symmetry(&3, &2), &s).unwrap(), b.identity(&6));
    }
}
