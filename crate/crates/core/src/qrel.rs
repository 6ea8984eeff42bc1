//! Quantum sets and quantum relations: dagger kernels, zero-monos,
//! orthocomplements and the facts about PERs and maps into classical sets.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::biproduct::{quote_object, tuple};
use crate::compact::trace;
use crate::error::{Error, Result};
use crate::fdos::FdOs;
use crate::finrel::FiniteSet;
use crate::label::Label;
use crate::matr::{Matr, MatrMorphism, MatrObject};
use crate::matrix::ExactMatrix;
use crate::predicates::{endorelation_class, is_map};
use crate::quantaloid::{DaggerQuantaloid, MonoidalQuantaloid, Orthocomplemented, Quantaloid};
use crate::scalar::Scalar;
use crate::subspace::OperatorSubspace;

/// qRel over the scalar field `S`.
pub type QRelOver<S> = Matr<FdOs<S>>;
/// A quantum set: labelled atoms with their dimensions.
pub type QObject = MatrObject<usize>;
pub type QMorphism<S> = MatrMorphism<usize, OperatorSubspace<S>>;

pub fn qrel<S: Scalar>() -> QRelOver<S> {
    Matr::new(FdOs::new())
}

/// JSON shape of a quantum set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantumSet {
    pub atoms: Vec<Atom>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Atom {
    pub label: Label,
    pub dim: usize,
}

impl QuantumSet {
    pub fn new(atoms: &[(Label, usize)]) -> Result<QObject> {
        if atoms.iter().any(|(_, d)| *d == 0) {
            return Err(Error::Precondition("atom dimensions must be at least 1".into()));
        }
        MatrObject::new(atoms.to_vec())
    }

    pub fn from_object(x: &QObject) -> Self {
        QuantumSet {
            atoms: x
                .components()
                .iter()
                .map(|(l, d)| Atom {
                    label: l.clone(),
                    dim: *d,
                })
                .collect(),
        }
    }

    pub fn to_object(&self) -> Result<QObject> {
        let atoms: Vec<_> = self.atoms.iter().map(|a| (a.label.clone(), a.dim)).collect();
        QuantumSet::new(&atoms)
    }
}

/// One atom labelled `label` of dimension `dim`.
pub fn atom(label: impl Into<Label>, dim: usize) -> QObject {
    QuantumSet::new(&[(label.into(), dim)]).expect("positive dimension")
}

fn column<S: Scalar>(m: &ExactMatrix<S>) -> Vec<S> {
    (0..m.rows()).map(|i| m.get(i, 0).clone()).collect()
}

fn inner<S: Scalar>(u: &[S], v: &[S]) -> S {
    u.iter().zip(v).fold(S::zero(), |acc, (a, b)| acc + a.conj() * b.clone())
}

/// Some `s` with `|s|² = q`, searching sums of two squares.
fn norm_root<S: Scalar>(q: &BigRational) -> Option<S> {
    if !q.is_positive() {
        return None;
    }
    // q = m/d = (m·d)/d², so it suffices to write m·d = x² + y²
    let n = q.numer() * q.denom();
    let limit = n.sqrt();
    if limit > BigInt::from(2_000_000u32) {
        return None;
    }
    let limit = limit.to_u64()?;
    let d = BigRational::from_integer(q.denom().clone());
    for x in 0..=limit {
        let rest = &n - BigInt::from(x) * BigInt::from(x);
        if rest.is_negative() {
            break;
        }
        let y = rest.sqrt();
        if &y * &y == rest {
            let re = BigRational::from_integer(BigInt::from(x)) / &d;
            let im = BigRational::from_integer(y) / &d;
            if let Some(s) = S::from_parts(re.clone(), im.clone()).or_else(|| S::from_parts(im, re)) {
                return Some(s);
            }
        }
    }
    None
}

/// Gram–Schmidt without normalisation.
fn orthogonalize<S: Scalar>(vs: &[Vec<S>]) -> Vec<Vec<S>> {
    let mut ws: Vec<Vec<S>> = Vec::new();
    for v in vs {
        let mut w = v.clone();
        for u in &ws {
            let c = inner(u, v) / inner(u, u);
            for (wi, ui) in w.iter_mut().zip(u) {
                *wi = wi.clone() - c.clone() * ui.clone();
            }
        }
        ws.push(w);
    }
    ws
}

/// Columns of equal norm rescaled from an orthogonal family, if the field allows.
fn equalize<S: Scalar>(ws: &[Vec<S>]) -> Option<Vec<Vec<S>>> {
    let norms: Vec<BigRational> = ws.iter().map(|w| inner(w, w).norm_sq().sqrt_rational()).collect();
    let target = norms[0].clone();
    ws.iter()
        .zip(&norms)
        .map(|(w, r)| {
            let s: S = norm_root(&(target.clone() / r))?;
            Some(w.iter().map(|x| s.clone() * x.clone()).collect())
        })
        .collect()
}

trait SqrtRational {
    fn sqrt_rational(&self) -> BigRational;
}

impl SqrtRational for BigRational {
    /// Only used on squares of nonnegative rationals.
    fn sqrt_rational(&self) -> BigRational {
        BigRational::new(self.numer().sqrt(), self.denom().sqrt())
    }
}

/// An `n × k` matrix whose columns span `vs` and satisfy `e†e = c·I`.
fn isometry_up_to_scale<S: Scalar>(vs: &[Vec<S>], n: usize) -> Result<ExactMatrix<S>> {
    let k = vs.len();
    if k == n {
        return Ok(ExactMatrix::identity(n));
    }
    let to_matrix = |cols: &[Vec<S>]| {
        let mut m = ExactMatrix::zeros(n, k);
        for (j, c) in cols.iter().enumerate() {
            for (i, x) in c.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    };
    // the first column is free; later ones are mixed with small integers until
    // the orthogonalized norms lie in a common class modulo field norms
    let coeffs: Vec<i64> = vec![0, 1, -1, 2, -2, 3];
    let mut attempts = 0usize;
    let mut mix = vec![0usize; k * k];
    loop {
        let basis: Vec<Vec<S>> = (0..k)
            .map(|a| {
                let mut v = vs[a].clone();
                for b in (a + 1)..k {
                    let c = S::from_int(coeffs[mix[a * k + b]]);
                    for (vi, wi) in v.iter_mut().zip(&vs[b]) {
                        *vi = vi.clone() + c.clone() * wi.clone();
                    }
                }
                v
            })
            .collect();
        if let Some(cols) = equalize(&orthogonalize(&basis)) {
            return Ok(to_matrix(&cols));
        }
        attempts += 1;
        // advance the mixing odometer over the strictly upper triangle
        let mut pos = None;
        for a in 0..k {
            for b in (a + 1)..k {
                let idx = a * k + b;
                if mix[idx] + 1 < coeffs.len() {
                    mix[idx] += 1;
                    pos = Some(idx);
                    break;
                }
                mix[idx] = 0;
            }
            if pos.is_some() {
                break;
            }
        }
        if pos.is_none() || attempts > 4096 {
            return Err(Error::NotRepresentable(format!(
                "no orthogonal basis of equal norms found for a {k}-dimensional kernel in dimension {n}"
            )));
        }
    }
}

/// `P_R(X) = ⋂ ker r` over all blocks leaving atom `X`, as column vectors.
fn atom_kernel<S: Scalar>(r: &QMorphism<S>, i: usize) -> Result<OperatorSubspace<S>> {
    let n = *r.source().component(i);
    let mut p = OperatorSubspace::full(1, n);
    for j in 0..r.target().len() {
        if let Some(block) = r.block(i, j) {
            p = p.meet(&block.kernel_intersection())?;
        }
    }
    Ok(p)
}

/// The dagger kernel `E : K → X` of `R : X → Y`.
///
/// `K` has one atom per atom of `X` with nonzero common kernel, of that
/// kernel's dimension; `E` is spanned blockwise by an isometry up to scale.
/// Errors with `NotRepresentable` when no such isometry exists over `S`,
/// which cannot happen for atoms of dimension at most 2.
pub fn dagger_kernel<S: Scalar>(q: &QRelOver<S>, r: &QMorphism<S>) -> Result<(QObject, QMorphism<S>)> {
    let x = r.source().clone();
    let mut atoms = Vec::new();
    let mut blocks = Vec::new();
    for i in 0..x.len() {
        let p = atom_kernel(r, i)?;
        if p.is_zero() {
            continue;
        }
        let n = *x.component(i);
        let vs: Vec<Vec<S>> = p.basis().iter().map(column).collect();
        let e = isometry_up_to_scale(&vs, n)?;
        let k = atoms.len();
        atoms.push((x.label(i).clone(), vs.len()));
        blocks.push(((k, i), OperatorSubspace::span(&[e], vs.len(), n)?));
    }
    let kernel = MatrObject::new(atoms)?;
    let e = q.morphism(&kernel, &x, blocks)?;
    Ok((kernel, e))
}

/// Trivial dagger kernel; decided from the common kernels alone.
pub fn is_zero_mono<S: Scalar>(r: &QMorphism<S>) -> Result<bool> {
    for i in 0..r.source().len() {
        if !atom_kernel(r, i)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `¬R`, blockwise Hilbert–Schmidt complement.
pub fn orthocomplement<S: Scalar>(q: &QRelOver<S>, r: &QMorphism<S>) -> Result<QMorphism<S>> {
    let (x, y) = (r.source(), r.target());
    let mut blocks = Vec::new();
    for i in 0..x.len() {
        for j in 0..y.len() {
            blocks.push(((i, j), q.block(r, i, j).hs_orthocomplement()));
        }
    }
    q.morphism(x, y, blocks)
}

impl<S: Scalar> Orthocomplemented for QRelOver<S> {
    fn negate(&self, r: &QMorphism<S>) -> Result<QMorphism<S>> {
        orthocomplement(self, r)
    }
}

/// `R ⊥ S` iff `Tr(R ∘ S†) = 0`.
pub fn is_perp_by_trace<S: Scalar>(q: &QRelOver<S>, r: &QMorphism<S>, s: &QMorphism<S>) -> Result<bool> {
    q.check_parallel(r, s)?;
    Ok(q.is_bottom(&trace(q, &q.compose(r, &q.dagger(s))?)?))
}

/// `R ⊥ S` iff each block of `S` is HS-orthogonal to the matching block of `R`.
pub fn is_perp_blockwise<S: Scalar>(q: &QRelOver<S>, r: &QMorphism<S>, s: &QMorphism<S>) -> Result<bool> {
    q.check_parallel(r, s)?;
    Ok(r.blocks()
        .iter()
        .all(|(&(i, j), b)| s.block(i, j).is_none_or(|c| b.is_hs_orthogonal(c))))
}

/// Whether `Tr(R)` is nonzero, read off the diagonal blocks directly.
pub fn trace_is_nonzero_blockwise<S: Scalar>(r: &QMorphism<S>) -> Result<bool> {
    if r.source() != r.target() {
        return Err(Error::Precondition("trace needs an endomorphism".into()));
    }
    Ok(r.blocks()
        .iter()
        .any(|(&(i, j), b)| i == j && b.has_nonzero_trace()))
}

/// Outcome of testing the claim that zero-monic PERs contain the identity, on one relation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PerCheck {
    pub zero_monic: bool,
    pub contains_identity: bool,
}

impl PerCheck {
    /// Whether the claim holds for this relation.
    pub fn holds(&self) -> bool {
        !self.zero_monic || self.contains_identity
    }
}

pub fn zero_monic_per_check<S: Scalar>(q: &QRelOver<S>, p: &QMorphism<S>) -> Result<PerCheck> {
    if !endorelation_class(q, p)?.per {
        return Err(Error::Precondition("relation is not a PER".into()));
    }
    let x = p.source().clone();
    Ok(PerCheck {
        zero_monic: is_zero_mono(p)?,
        contains_identity: q.leq(&q.identity(&x), p)?,
    })
}

/// Both sides of the characterization of maps into a classical set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassicalCodomainCheck {
    pub pairwise_orthogonal: bool,
    pub covers_top: bool,
    pub is_map: bool,
}

impl ClassicalCodomainCheck {
    pub fn criterion(&self) -> bool {
        self.pairwise_orthogonal && self.covers_top
    }

    pub fn agrees(&self) -> bool {
        self.criterion() == self.is_map
    }
}

/// `f = ⟨f_α⟩ : X → `A` from effects `f_α : X → 1`.
pub fn classical_tuple<S: Scalar>(
    q: &QRelOver<S>,
    x: &QObject,
    a: &FiniteSet,
    effects: &[QMorphism<S>],
) -> Result<QMorphism<S>> {
    let i = q.unit_object();
    for f in effects {
        if f.source() != x || *f.target() != i {
            return Err(Error::ObjectMismatch("expected effects X -> 1".into()));
        }
    }
    let qa = quote_object(q, a)?;
    tuple(q, x, &qa, effects)
}

pub fn classical_codomain_map_check<S: Scalar>(
    q: &QRelOver<S>,
    x: &QObject,
    a: &FiniteSet,
    effects: &[QMorphism<S>],
) -> Result<ClassicalCodomainCheck> {
    let f = classical_tuple(q, x, a, effects)?;
    if f.target().components().iter().any(|(_, d)| *d != 1) {
        return Err(Error::Precondition("codomain has an atom of dimension > 1".into()));
    }
    let i = q.unit_object();
    let mut pairwise_orthogonal = true;
    for (k, fa) in effects.iter().enumerate() {
        for fb in &effects[k + 1..] {
            let scalar = q.compose(fa, &q.dagger(fb))?;
            if !q.is_bottom(&trace(q, &scalar)?) {
                pairwise_orthogonal = false;
            }
        }
    }
    let join = q.sup(x, &i, effects)?;
    Ok(ClassicalCodomainCheck {
        pairwise_orthogonal,
        covers_top: join == q.top(x, &i),
        is_map: is_map(q, &f)?,
    })
}

/// A two-sided inverse when `R` is a permutation of atoms with each block
/// spanned by one invertible matrix; verified by composition.
pub fn try_inverse<S: Scalar>(q: &QRelOver<S>, r: &QMorphism<S>) -> Result<Option<QMorphism<S>>> {
    let (x, y) = (r.source(), r.target());
    if x.len() != y.len() || r.blocks().len() != x.len() {
        return Ok(None);
    }
    let mut blocks = Vec::new();
    for (&(i, j), b) in r.blocks() {
        let [m] = b.basis() else { return Ok(None) };
        let Some(inv) = m.inverse() else { return Ok(None) };
        blocks.push(((j, i), OperatorSubspace::span(&[inv], m.rows(), m.cols())?));
    }
    let s = q.morphism(y, x, blocks)?;
    let ok = q.compose(&s, r)? == q.identity(x) && q.compose(r, &s)? == q.identity(y);
    Ok(ok.then_some(s))
}

/// The shear `a = [[1,1],[0,1]]`: `span{a}` and `span{a⁻¹}` on one 2-dimensional atom.
pub fn shear_fixture<S: Scalar>() -> (QObject, QMorphism<S>, QMorphism<S>) {
    let q = qrel::<S>();
    let h = atom("H", 2);
    let a = ExactMatrix::from_rows(vec![
        vec![S::one(), S::one()],
        vec![S::zero(), S::one()],
    ])
    .expect("2x2");
    let inv = a.inverse().expect("invertible");
    let mk = |m: ExactMatrix<S>| {
        q.morphism(&h, &h, [((0, 0), OperatorSubspace::span(&[m], 2, 2).expect("2x2"))])
            .expect("typed")
    };
    (h.clone(), mk(a), mk(inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::predicates::{is_dagger_iso, is_dagger_mono, is_inverse_pair};
    use crate::GaussianRational as G;

    fn q() -> QRelOver<G> {
        qrel()
    }

    fn single(m: &[&[i64]]) -> (QObject, QMorphism<G>) {
        let h = atom("H", m.len());
        let qq = q();
        let r = qq
            .morphism(
                &h,
                &h,
                [((0, 0), OperatorSubspace::span(&[ExactMatrix::from_ints(m)], m[0].len(), m.len()).unwrap())],
            )
            .unwrap();
        (h, r)
    }

    #[test]
    fn shear_fixture_is_invertible_but_not_unitary() {
        let qq = q();
        let (h, r, s) = shear_fixture::<G>();
        assert_eq!(qq.compose(&r, &s).unwrap(), qq.identity(&h));
        assert!(is_inverse_pair(&qq, &r, &s).unwrap());
        assert_eq!(try_inverse(&qq, &r).unwrap(), Some(s));
        assert!(!is_dagger_iso(&qq, &r).unwrap());
        assert!(!is_map(&qq, &r).unwrap());
    }

    #[test]
    fn kernel_of_rank_one_projection() {
        let qq = q();
        let (_, r) = single(&[&[1, 0], &[0, 0]]);
        let (k, e) = dagger_kernel(&qq, &r).unwrap();
        assert_eq!(k.components(), &[(Label::name("H"), 1)]);
        assert!(is_dagger_mono(&qq, &e).unwrap());
        assert!(qq.is_bottom(&qq.compose(&r, &e).unwrap()));
        let expected = ExactMatrix::from_ints(&[&[0], &[1]]);
        assert_eq!(e.block(0, 0).unwrap().basis(), &[expected]);
    }

    #[test]
    fn kernels_of_extremes() {
        let qq = q();
        let x = QuantumSet::new(&[(Label::Index(0), 1), (Label::Index(1), 2)]).unwrap();
        let y = atom("y", 2);
        let (k, e) = dagger_kernel(&qq, &qq.bottom(&x, &y)).unwrap();
        assert_eq!(k, x);
        assert_eq!(e, qq.identity(&x));
        let (k, _) = dagger_kernel(&qq, &qq.top(&x, &y)).unwrap();
        assert!(k.is_empty());
        assert!(is_zero_mono(&qq.top(&x, &y)).unwrap());
    }

    #[test]
    fn three_dimensional_kernel_needs_equal_norms() {
        let qq = q();
        // kernel spanned by (1,0,0) and (0,1,1): norms 1 and 2, rescalable by 1+i
        let (_, r) = single(&[&[0, 1, -1], &[0, 0, 0], &[0, 0, 0]]);
        let (k, e) = dagger_kernel(&qq, &r).unwrap();
        assert_eq!(k.components()[0].1, 2);
        assert!(is_dagger_mono(&qq, &e).unwrap());
    }

    #[test]
    fn orthocomplement_of_scalars() {
        let qq = q();
        let (_, r) = single(&[&[1, 0], &[0, 1]]);
        let n = orthocomplement(&qq, &r).unwrap();
        assert_eq!(n.block(0, 0).unwrap().dim(), 3);
        assert!(is_perp_by_trace(&qq, &r, &n).unwrap());
        assert!(is_perp_blockwise(&qq, &r, &n).unwrap());
        assert!(!is_perp_by_trace(&qq, &r, &r).unwrap());
    }

    #[test]
    fn per_examples() {
        let qq = q();
        let h = atom("H", 2);
        let id = zero_monic_per_check(&qq, &qq.identity(&h)).unwrap();
        assert!(id.zero_monic && id.contains_identity);
        let full = zero_monic_per_check(&qq, &qq.top(&h, &h)).unwrap();
        assert!(full.zero_monic && full.contains_identity);
        let (_, e11) = single(&[&[1, 0], &[0, 0]]);
        let c = zero_monic_per_check(&qq, &e11).unwrap();
        assert!(!c.zero_monic && !c.contains_identity && c.holds());
        let (_, shear) = single(&[&[1, 1], &[0, 1]]);
        assert!(zero_monic_per_check(&qq, &shear).is_err());
    }

    #[test]
    fn classical_codomain_examples() {
        let qq = q();
        let h = atom("H", 1);
        let i = qq.unit_object();
        let top = qq.top(&h, &i);
        let two = FiniteSet::indexed(2);
        let c = classical_codomain_map_check(&qq, &h, &two, &[top.clone(), top.clone()]).unwrap();
        assert!(!c.criterion() && !c.is_map);
        let one = FiniteSet::indexed(1);
        let c = classical_codomain_map_check(&qq, &h, &one, &[top]).unwrap();
        assert!(c.criterion() && c.is_map);
    }
}
