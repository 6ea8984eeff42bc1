//! Seeded generators of objects and morphisms for each instance.

use std::fmt::Debug;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::error::Result;
use crate::finrel::FiniteSet;
use crate::label::Label;
use crate::matr::{Matr, MatrMorphism, MatrObject};
use crate::matrix::ExactMatrix;
use crate::predicates::is_map;
use crate::qrel::{qrel, QMorphism, QObject, QRelOver, QuantumSet};
use crate::quantale::{Quantale, QuantaleBase};
use crate::quantaloid::{DaggerQuantaloid, Quantaloid};
use crate::scalar::Scalar;
use crate::serial::{QRelationJson, SetJson};
use crate::subspace::OperatorSubspace;

pub type Rng8 = ChaCha8Rng;

/// Source of test objects and morphisms for one instance.
pub trait Generator: Sync {
    type Obj: Clone + Debug + PartialEq + Send + Sync;
    type Mor: Clone + Debug + PartialEq + Send + Sync;

    /// Every object within the exhaustive bounds, or `None` when objects are sampled.
    fn exhaustive_objects(&self) -> Option<Vec<Self::Obj>>;
    fn random_object(&self, rng: &mut Rng8) -> Self::Obj;
    /// The whole homset when it is finite and enumerable.
    fn homset(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>>;
    fn random_morphism(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng8) -> Self::Mor;
    /// A random internal map `x → y`, if one is easy to produce.
    fn random_map(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng8) -> Option<Self::Mor>;
    fn show_object(&self, x: &Self::Obj) -> Value;
    fn show(&self, f: &Self::Mor) -> Value;
}

/// Objects: either every object in the bounds or `n` samples.
pub fn objects<G: Generator>(g: &G, rng: &mut Rng8, n: usize) -> Vec<G::Obj> {
    g.exhaustive_objects()
        .unwrap_or_else(|| (0..n).map(|_| g.random_object(rng)).collect())
}

/// The homset if it has at most `limit` elements, else `n` samples.
pub fn morphisms<G: Generator>(g: &G, x: &G::Obj, y: &G::Obj, rng: &mut Rng8, limit: usize, n: usize) -> Vec<G::Mor> {
    match g.homset(x, y) {
        Some(all) if all.len() <= limit => all,
        _ => (0..n).map(|_| g.random_morphism(x, y, rng)).collect(),
    }
}

/// Reflexive transitive closure `⋁ₙ (id ∨ r)ⁿ`.
pub fn preorder_closure<Q: Quantaloid>(q: &Q, r: &Q::Mor) -> Result<Q::Mor> {
    let mut p = q.join(&q.identity(&q.source(r)), r)?;
    loop {
        let next = q.join(&p, &q.compose(&p, &p)?)?;
        if next == p {
            return Ok(p);
        }
        p = next;
    }
}

/// Symmetric transitive closure of `r ∨ r†`, a PER.
pub fn per_closure<Q: DaggerQuantaloid>(q: &Q, r: &Q::Mor) -> Result<Q::Mor> {
    let mut p = q.join(r, &q.dagger(r))?;
    loop {
        let next = q.join(&p, &q.compose(&p, &p)?)?;
        if next == p {
            return Ok(p);
        }
        p = next;
    }
}

/// Preorders on `x`: all of them when the homset is small, else closures of samples.
pub fn preorders<Q, G>(q: &Q, g: &G, x: &G::Obj, rng: &mut Rng8, limit: usize, n: usize) -> Result<Vec<G::Mor>>
where
    Q: Quantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    if let Some(all) = g.homset(x, x).filter(|a| a.len() <= limit) {
        let mut out = Vec::new();
        for r in all {
            if q.leq(&q.identity(x), &r)? && q.leq(&q.compose(&r, &r)?, &r)? {
                out.push(r);
            }
        }
        return Ok(out);
    }
    let mut out = vec![q.identity(x), q.top(x, x)];
    while out.len() < n {
        let r = g.random_morphism(x, x, rng);
        let r = if rng.gen_bool(0.5) { q.meet(&r, &g.random_morphism(x, x, rng))? } else { r };
        out.push(preorder_closure(q, &r)?);
    }
    Ok(out)
}

/// Maps `x → y`: all of them when the homset is small, else `n` random maps.
pub fn maps<Q, G>(q: &Q, g: &G, x: &G::Obj, y: &G::Obj, rng: &mut Rng8, limit: usize, n: usize) -> Result<Vec<G::Mor>>
where
    Q: DaggerQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    if let Some(all) = g.homset(x, y).filter(|a| a.len() <= limit) {
        let mut out = Vec::new();
        for f in all {
            if is_map(q, &f)? {
                out.push(f);
            }
        }
        return Ok(out);
    }
    Ok((0..n).filter_map(|_| g.random_map(x, y, rng)).collect())
}

fn indexed_object<O: Clone + PartialEq + Debug>(parts: Vec<O>) -> MatrObject<O> {
    MatrObject::new(parts.into_iter().enumerate().map(|(i, o)| (Label::Index(i), o)).collect())
        .expect("distinct index labels")
}

/// Generator for Rel and V-Rel: sets of at most `max_size` elements.
#[derive(Clone, Debug)]
pub struct QuantaleGen<Q: Quantale> {
    pub instance: Matr<QuantaleBase<Q>>,
    pub max_size: usize,
}

impl<Q: Quantale> QuantaleGen<Q> {
    pub fn new(quantale: Q, max_size: usize) -> Self {
        QuantaleGen {
            instance: Matr::new(QuantaleBase::new(quantale)),
            max_size,
        }
    }

    fn quantale(&self) -> &Q {
        self.instance.base().quantale()
    }

    pub fn set(n: usize) -> MatrObject<()> {
        indexed_object(vec![(); n])
    }

    fn from_entries(&self, x: &MatrObject<()>, y: &MatrObject<()>, entries: Vec<Q::Elem>) -> MatrMorphism<(), Q::Elem> {
        let m = y.len();
        let blocks = entries.into_iter().enumerate().map(|(k, v)| ((k / m, k % m), v));
        self.instance.morphism(x, y, blocks).expect("in range")
    }
}

impl<Q: Quantale> Generator for QuantaleGen<Q> {
    type Obj = MatrObject<()>;
    type Mor = MatrMorphism<(), Q::Elem>;

    fn exhaustive_objects(&self) -> Option<Vec<Self::Obj>> {
        Some((0..=self.max_size).map(Self::set).collect())
    }

    fn random_object(&self, rng: &mut Rng8) -> Self::Obj {
        Self::set(rng.gen_range(0..=self.max_size))
    }

    fn homset(&self, x: &Self::Obj, y: &Self::Obj) -> Option<Vec<Self::Mor>> {
        let elems = self.quantale().elements();
        let cells = x.len() * y.len();
        let count = (elems.len() as f64).powi(cells as i32);
        if count > (1u64 << 20) as f64 {
            return None;
        }
        let mut out = Vec::with_capacity(count as usize);
        let mut digits = vec![0usize; cells];
        loop {
            let entries = digits.iter().map(|&d| elems[d].clone()).collect();
            out.push(self.from_entries(x, y, entries));
            let mut k = 0;
            while k < cells && digits[k] + 1 == elems.len() {
                digits[k] = 0;
                k += 1;
            }
            if k == cells {
                return Some(out);
            }
            digits[k] += 1;
        }
    }

    fn random_morphism(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng8) -> Self::Mor {
        let elems = self.quantale().elements();
        let entries = (0..x.len() * y.len())
            .map(|_| elems.choose(rng).expect("nonempty quantale").clone())
            .collect();
        self.from_entries(x, y, entries)
    }

    fn random_map(&self, x: &Self::Obj, y: &Self::Obj, rng: &mut Rng8) -> Option<Self::Mor> {
        if y.is_empty() && !x.is_empty() {
            return None;
        }
        let e = self.quantale().unit();
        let blocks: Vec<_> = (0..x.len()).map(|i| ((i, rng.gen_range(0..y.len())), e.clone())).collect();
        Some(self.instance.morphism(x, y, blocks).expect("in range"))
    }

    fn show_object(&self, x: &Self::Obj) -> Value {
        json!(SetJson::from_object(x))
    }

    fn show(&self, f: &Self::Mor) -> Value {
        let q = self.quantale();
        let entries: Vec<Value> = f
            .blocks()
            .iter()
            .map(|(&(i, j), v)| json!([f.source().label(i), f.target().label(j), q.element_name(v)]))
            .collect();
        json!({
            "source": SetJson::from_object(f.source()),
            "target": SetJson::from_object(f.target()),
            "entries": entries,
        })
    }
}

/// Generator for qRel: at most `max_atoms` atoms of dimension at most
/// `max_dim`; operator entries are Gaussian integers with parts in
/// `-range..=range`.
#[derive(Clone, Debug)]
pub struct QRelGen<S: Scalar> {
    pub instance: QRelOver<S>,
    pub max_atoms: usize,
    pub max_dim: usize,
    pub range: i64,
}

impl<S: Scalar> QRelGen<S> {
    pub fn new(max_atoms: usize, max_dim: usize) -> Self {
        QRelGen {
            instance: qrel::<S>(),
            max_atoms,
            max_dim,
            range: 2,
        }
    }

    pub fn object(dims: &[usize]) -> QObject {
        indexed_object(dims.to_vec())
    }

    pub fn random_entry(&self, rng: &mut Rng8) -> S {
        let re = rng.gen_range(-self.range..=self.range);
        let im = rng.gen_range(-self.range..=self.range);
        S::from_parts(
            num_rational::BigRational::from_integer(re.into()),
            num_rational::BigRational::from_integer(im.into()),
        )
        .unwrap_or_else(|| S::from_int(re))
    }

    pub fn random_matrix(&self, rows: usize, cols: usize, rng: &mut Rng8) -> ExactMatrix<S> {
        let entries = (0..rows * cols).map(|_| self.random_entry(rng)).collect();
        ExactMatrix::new(rows, cols, entries).expect("sized")
    }

    /// A subspace of `B(C^d, C^c)` whose dimension is drawn uniformly first.
    pub fn random_subspace(&self, d: usize, c: usize, rng: &mut Rng8) -> OperatorSubspace<S> {
        let k = rng.gen_range(0..=d * c);
        let mut best = OperatorSubspace::zero(d, c);
        for _ in 0..8 {
            let mats: Vec<_> = (0..k).map(|_| self.random_matrix(c, d, rng)).collect();
            let v = OperatorSubspace::span(&mats, d, c).expect("shapes agree");
            if v.dim() == k {
                return v;
            }
            if v.dim() > best.dim() {
                best = v;
            }
        }
        best
    }

    /// `[[a, -b̄], [b, ā]]` for random nonzero `(a, b)`: a multiple of a unitary.
    pub fn random_scaled_unitary(&self, rng: &mut Rng8) -> ExactMatrix<S> {
        loop {
            let (a, b) = (self.random_entry(rng), self.random_entry(rng));
            if a.is_zero() && b.is_zero() {
                continue;
            }
            return ExactMatrix::from_rows(vec![vec![a.clone(), -b.conj()], vec![b, a.conj()]]).expect("square");
        }
    }

    /// A random map-like block from an atom of dim `d` to one of dim `c`, if
    /// such a block exists: everything when `c = 1`, a scaled unitary when `c = d`.
    fn map_block(&self, d: usize, c: usize, rng: &mut Rng8) -> Option<OperatorSubspace<S>> {
        if c == 1 {
            return Some(OperatorSubspace::full(d, 1));
        }
        match (d, c) {
            (2, 2) => Some(OperatorSubspace::span(&[self.random_scaled_unitary(rng)], 2, 2).expect("2x2")),
            (d, c) if d == c => Some(OperatorSubspace::scalars(d)),
            _ => None,
        }
    }
}

impl<S: Scalar> Generator for QRelGen<S> {
    type Obj = QObject;
    type Mor = QMorphism<S>;

    fn exhaustive_objects(&self) -> Option<Vec<QObject>> {
        None
    }

    fn random_object(&self, rng: &mut Rng8) -> QObject {
        let n = if rng.gen_ratio(1, 10) { 0 } else { rng.gen_range(1..=self.max_atoms) };
        let dims: Vec<usize> = (0..n).map(|_| rng.gen_range(1..=self.max_dim)).collect();
        Self::object(&dims)
    }

    /// Finite only between objects of one-dimensional atoms, where each
    /// block is `0` or all of `B(C, C)`.
    fn homset(&self, x: &QObject, y: &QObject) -> Option<Vec<QMorphism<S>>> {
        let classical = |o: &QObject| (0..o.len()).all(|i| *o.component(i) == 1);
        let cells = x.len() * y.len();
        if !classical(x) || !classical(y) || cells > 12 {
            return None;
        }
        let full = OperatorSubspace::full(1, 1);
        let out = (0..1usize << cells)
            .map(|bits| {
                let blocks = (0..cells)
                    .filter(|k| bits >> k & 1 == 1)
                    .map(|k| ((k / y.len(), k % y.len()), full.clone()));
                self.instance.morphism(x, y, blocks).expect("typed blocks")
            })
            .collect();
        Some(out)
    }

    fn random_morphism(&self, x: &QObject, y: &QObject, rng: &mut Rng8) -> QMorphism<S> {
        let mut blocks = Vec::new();
        for i in 0..x.len() {
            for j in 0..y.len() {
                blocks.push(((i, j), self.random_subspace(*x.component(i), *y.component(j), rng)));
            }
        }
        self.instance.morphism(x, y, blocks).expect("typed blocks")
    }

    fn random_map(&self, x: &QObject, y: &QObject, rng: &mut Rng8) -> Option<QMorphism<S>> {
        let mut blocks = Vec::new();
        for i in 0..x.len() {
            let d = *x.component(i);
            let targets: Vec<usize> = (0..y.len()).filter(|&j| *y.component(j) == 1 || *y.component(j) == d).collect();
            let j = *targets.choose(rng)?;
            blocks.push(((i, j), self.map_block(d, *y.component(j), rng)?));
        }
        Some(self.instance.morphism(x, y, blocks).expect("typed blocks"))
    }

    fn show_object(&self, x: &QObject) -> Value {
        json!(QuantumSet::from_object(x))
    }

    fn show(&self, f: &QMorphism<S>) -> Value {
        json!(QRelationJson::from_morphism(f))
    }
}

/// Generator for a one-object quantale base: every element is a morphism.
#[derive(Clone, Debug)]
pub struct BaseGen<Q: Quantale> {
    pub instance: QuantaleBase<Q>,
}

impl<Q: Quantale> BaseGen<Q> {
    pub fn new(quantale: Q) -> Self {
        BaseGen {
            instance: QuantaleBase::new(quantale),
        }
    }
}

impl<Q: Quantale> Generator for BaseGen<Q> {
    type Obj = ();
    type Mor = Q::Elem;

    fn exhaustive_objects(&self) -> Option<Vec<()>> {
        Some(vec![()])
    }

    fn random_object(&self, _: &mut Rng8) {}

    fn homset(&self, _: &(), _: &()) -> Option<Vec<Q::Elem>> {
        Some(self.instance.quantale().elements())
    }

    fn random_morphism(&self, _: &(), _: &(), rng: &mut Rng8) -> Q::Elem {
        self.instance.quantale().elements().choose(rng).expect("nonempty").clone()
    }

    fn random_map(&self, _: &(), _: &(), _: &mut Rng8) -> Option<Q::Elem> {
        Some(self.instance.quantale().unit())
    }

    fn show_object(&self, _: &()) -> Value {
        json!("*")
    }

    fn show(&self, f: &Q::Elem) -> Value {
        json!(self.instance.quantale().element_name(f))
    }
}

/// Generator for FdOS: dimensions up to `max_dim`, random operator subspaces.
#[derive(Clone, Debug)]
pub struct FdOsGen<S: Scalar> {
    pub instance: crate::fdos::FdOs<S>,
    pub entries: QRelGen<S>,
}

impl<S: Scalar> FdOsGen<S> {
    pub fn new(max_dim: usize) -> Self {
        FdOsGen {
            instance: crate::fdos::FdOs::new(),
            entries: QRelGen::new(1, max_dim),
        }
    }
}

impl<S: Scalar> Generator for FdOsGen<S> {
    type Obj = usize;
    type Mor = OperatorSubspace<S>;

    fn exhaustive_objects(&self) -> Option<Vec<usize>> {
        None
    }

    fn random_object(&self, rng: &mut Rng8) -> usize {
        rng.gen_range(1..=self.entries.max_dim)
    }

    fn homset(&self, _: &usize, _: &usize) -> Option<Vec<OperatorSubspace<S>>> {
        None
    }

    fn random_morphism(&self, x: &usize, y: &usize, rng: &mut Rng8) -> OperatorSubspace<S> {
        self.entries.random_subspace(*x, *y, rng)
    }

    fn random_map(&self, x: &usize, y: &usize, rng: &mut Rng8) -> Option<OperatorSubspace<S>> {
        self.entries.map_block(*x, *y, rng)
    }

    fn show_object(&self, x: &usize) -> Value {
        json!(x)
    }

    fn show(&self, f: &OperatorSubspace<S>) -> Value {
        json!({"from": f.domain_dim(), "to": f.codomain_dim(), "basis": f.to_strings()})
    }
}

/// Every set of the given size as a plain [`FiniteSet`] with index labels.
pub fn finite_set(n: usize) -> FiniteSet {
    FiniteSet::indexed(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::GaussianRational as G;
    use rand::SeedableRng;

    #[test]
    fn rel_homset_size() {
        let g = QuantaleGen::new(crate::Boolean, 3);
        let x = QuantaleGen::<crate::Boolean>::set(2);
        let y = QuantaleGen::<crate::Boolean>::set(3);
        let all = g.homset(&x, &y).unwrap();
        assert_eq!(all.len(), 64);
        let mut distinct = all.clone();
        distinct.dedup();
        assert_eq!(distinct.len(), 64);
    }

    #[test]
    fn qrel_random_maps_are_maps() {
        let g = QRelGen::<G>::new(2, 2);
        let mut rng = Rng8::seed_from_u64(3);
        let mut found = 0;
        for _ in 0..40 {
            let (x, y) = (g.random_object(&mut rng), g.random_object(&mut rng));
            if let Some(f) = g.random_map(&x, &y, &mut rng) {
                assert!(is_map(&g.instance, &f).unwrap());
                found += 1;
            }
        }
        assert!(found > 10);
    }

    #[test]
    fn subspace_dimensions_cover_extremes() {
        let g = QRelGen::<G>::new(1, 2);
        let mut rng = Rng8::seed_from_u64(1);
        let dims: Vec<usize> = (0..60).map(|_| g.random_subspace(2, 2, &mut rng).dim()).collect();
        assert!(dims.contains(&0) && dims.contains(&4));
    }
}
