//! V-valued relations computed directly from their defining formulas, the
//! embedding `(-)∘` of Rel, the `V`-valued power set and the non-allegory
//! witness.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finrel::{BoolRelation, FiniteSet, Function};
use crate::label::Label;
use crate::matr::{Matr, MatrMorphism};
use crate::quantale::{FiniteQuantale, Quantale, QuantaleBase};
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid,
};

/// A function `X × Y → V`, stored as a matrix of element indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VRelation {
    source: FiniteSet,
    target: FiniteSet,
    matrix: Vec<Vec<usize>>,
}

impl VRelation {
    pub fn constant(source: &FiniteSet, target: &FiniteSet, v: usize) -> Self {
        VRelation {
            source: source.clone(),
            target: target.clone(),
            matrix: vec![vec![v; target.len()]; source.len()],
        }
    }

    pub fn from_matrix(source: &FiniteSet, target: &FiniteSet, matrix: Vec<Vec<usize>>) -> Result<Self> {
        if matrix.len() != source.len() || matrix.iter().any(|r| r.len() != target.len()) {
            return Err(Error::Shape("V-relation matrix does not match its sets".into()));
        }
        Ok(VRelation {
            source: source.clone(),
            target: target.clone(),
            matrix,
        })
    }

    pub fn source(&self) -> &FiniteSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet {
        &self.target
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.matrix[i][j]
    }

    pub fn matrix(&self) -> &[Vec<usize>] {
        &self.matrix
    }

    /// Every V-relation `a → b` over a quantale with `size` elements.
    pub fn all(a: &FiniteSet, b: &FiniteSet, size: usize) -> Vec<VRelation> {
        let cells = a.len() * b.len();
        let count = size.pow(cells as u32);
        (0..count)
            .map(|mut code| {
                let mut m = vec![vec![0; b.len()]; a.len()];
                for row in m.iter_mut() {
                    for x in row.iter_mut() {
                        *x = code % size;
                        code /= size;
                    }
                }
                VRelation {
                    source: a.clone(),
                    target: b.clone(),
                    matrix: m,
                }
            })
            .collect()
    }
}

/// V-Rel by its entrywise formulas.
#[derive(Clone, Debug)]
pub struct DirectVRel {
    q: Arc<FiniteQuantale>,
}

impl DirectVRel {
    pub fn new(q: FiniteQuantale) -> Self {
        DirectVRel { q: Arc::new(q) }
    }

    pub fn quantale(&self) -> &FiniteQuantale {
        &self.q
    }

    fn map2(&self, f: &VRelation, g: &VRelation, op: impl Fn(usize, usize) -> usize) -> Result<VRelation> {
        self.check_parallel(f, g)?;
        let mut out = f.clone();
        for (row, grow) in out.matrix.iter_mut().zip(&g.matrix) {
            for (a, &b) in row.iter_mut().zip(grow) {
                *a = op(*a, b);
            }
        }
        Ok(out)
    }

    /// The relation with `e` on the given pairs and `⊥` elsewhere.
    fn indicator(&self, source: &FiniteSet, target: &FiniteSet, pairs: impl IntoIterator<Item = (usize, usize)>) -> VRelation {
        let mut r = VRelation::constant(source, target, self.q.bottom());
        for (i, j) in pairs {
            r.matrix[i][j] = self.q.unit();
        }
        r
    }
}

impl Quantaloid for DirectVRel {
    type Obj = FiniteSet;
    type Mor = VRelation;

    fn source(&self, f: &VRelation) -> FiniteSet {
        f.source.clone()
    }

    fn target(&self, f: &VRelation) -> FiniteSet {
        f.target.clone()
    }

    /// `(s ∙ r)(x, z) = ⋁_y r(x, y) · s(y, z)`.
    fn compose(&self, s: &VRelation, r: &VRelation) -> Result<VRelation> {
        if r.target != s.source {
            return Err(Error::ObjectMismatch("V-relations do not compose".into()));
        }
        let q = &*self.q;
        let mut out = VRelation::constant(&r.source, &s.target, q.bottom());
        for x in 0..r.source.len() {
            for z in 0..s.target.len() {
                out.matrix[x][z] = (0..r.target.len())
                    .fold(q.bottom(), |acc, y| q.join(&acc, &q.mul(&r.matrix[x][y], &s.matrix[y][z])));
            }
        }
        Ok(out)
    }

    fn identity(&self, x: &FiniteSet) -> VRelation {
        self.indicator(x, x, (0..x.len()).map(|i| (i, i)))
    }

    fn bottom(&self, x: &FiniteSet, y: &FiniteSet) -> VRelation {
        VRelation::constant(x, y, self.q.bottom())
    }

    fn top(&self, x: &FiniteSet, y: &FiniteSet) -> VRelation {
        VRelation::constant(x, y, self.q.top())
    }

    fn join(&self, f: &VRelation, g: &VRelation) -> Result<VRelation> {
        self.map2(f, g, |a, b| self.q.join(&a, &b))
    }

    fn meet(&self, f: &VRelation, g: &VRelation) -> Result<VRelation> {
        self.map2(f, g, |a, b| self.q.meet(&a, &b))
    }

    fn leq(&self, f: &VRelation, g: &VRelation) -> Result<bool> {
        self.check_parallel(f, g)?;
        Ok(f.matrix
            .iter()
            .zip(&g.matrix)
            .all(|(r, s)| r.iter().zip(s).all(|(a, b)| self.q.leq(a, b))))
    }
}

impl DaggerQuantaloid for DirectVRel {
    fn dagger(&self, f: &VRelation) -> VRelation {
        let mut out = VRelation::constant(&f.target, &f.source, self.q.bottom());
        for (i, row) in f.matrix.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                out.matrix[j][i] = v;
            }
        }
        out
    }
}

impl MonoidalQuantaloid for DirectVRel {
    fn unit_object(&self) -> FiniteSet {
        FiniteSet::singleton()
    }

    fn tensor_objects(&self, x: &FiniteSet, y: &FiniteSet) -> FiniteSet {
        x.product(y)
    }

    /// `(r × s)((x₁, x₂), (y₁, y₂)) = r(x₁, y₁) · s(x₂, y₂)`.
    fn tensor(&self, r: &VRelation, s: &VRelation) -> VRelation {
        let source = r.source.product(&s.source);
        let target = r.target.product(&s.target);
        let mut out = VRelation::constant(&source, &target, self.q.bottom());
        let (ss, st) = (s.source.len(), s.target.len());
        for x1 in 0..r.source.len() {
            for x2 in 0..ss {
                for y1 in 0..r.target.len() {
                    for y2 in 0..st {
                        out.matrix[x1 * ss + x2][y1 * st + y2] =
                            self.q.mul(&r.matrix[x1][y1], &s.matrix[x2][y2]);
                    }
                }
            }
        }
        out
    }

    fn associator(&self, x: &FiniteSet, y: &FiniteSet, z: &FiniteSet) -> VRelation {
        let source = x.product(y).product(z);
        let target = x.product(&y.product(z));
        self.indicator(&source, &target, (0..source.len()).map(|k| (k, k)))
    }

    fn left_unitor(&self, x: &FiniteSet) -> VRelation {
        self.indicator(&FiniteSet::singleton().product(x), x, (0..x.len()).map(|k| (k, k)))
    }

    fn right_unitor(&self, x: &FiniteSet) -> VRelation {
        self.indicator(&x.product(&FiniteSet::singleton()), x, (0..x.len()).map(|k| (k, k)))
    }

    fn symmetry(&self, x: &FiniteSet, y: &FiniteSet) -> VRelation {
        let (n, m) = (x.len(), y.len());
        self.indicator(&x.product(y), &y.product(x), (0..n * m).map(|k| (k, (k % m) * n + k / m)))
    }

    fn enumerate_scalars(&self) -> Option<Vec<VRelation>> {
        let i = FiniteSet::singleton();
        Some(self.q.elements().into_iter().map(|v| VRelation::constant(&i, &i, v)).collect())
    }
}

impl CompactQuantaloid for DirectVRel {
    fn dual(&self, x: &FiniteSet) -> FiniteSet {
        x.clone()
    }

    fn eta(&self, x: &FiniteSet) -> VRelation {
        let n = x.len();
        self.indicator(&FiniteSet::singleton(), &x.product(x), (0..n).map(|a| (0, a * n + a)))
    }

    fn epsilon(&self, x: &FiniteSet) -> VRelation {
        self.dagger(&self.eta(x))
    }
}

impl Biproducts for DirectVRel {
    fn biproduct(&self, family: &[(Label, FiniteSet)]) -> Result<Biproduct<FiniteSet, VRelation>> {
        let rel = crate::finrel::FinRel.biproduct(family)?;
        let lift = |r: &BoolRelation| circ_embed(&self.q, r).expect("biproduct of a validated quantale");
        Ok(Biproduct {
            object: rel.object,
            labels: rel.labels,
            summands: rel.summands,
            injections: rel.injections.iter().map(lift).collect(),
            projections: rel.projections.iter().map(lift).collect(),
        })
    }
}

pub fn vrel_instance(q: FiniteQuantale) -> crate::VRel {
    Matr::new(QuantaleBase::new(q))
}

pub fn vrelation_to_matr(q: &FiniteQuantale, r: &VRelation) -> MatrMorphism<(), usize> {
    let blocks = r
        .matrix
        .iter()
        .enumerate()
        .flat_map(|(i, row)| row.iter().enumerate().map(move |(j, &v)| ((i, j), v)))
        .filter(|(_, v)| *v != q.bottom());
    Matr::new(QuantaleBase::new(q.clone()))
        .morphism(
            &crate::finrel::set_to_matr(&r.source),
            &crate::finrel::set_to_matr(&r.target),
            blocks,
        )
        .expect("blocks are typed")
}

pub fn matr_to_vrelation(q: &FiniteQuantale, f: &MatrMorphism<(), usize>) -> VRelation {
    let source = crate::finrel::matr_to_set(f.source());
    let target = crate::finrel::matr_to_set(f.target());
    let mut r = VRelation::constant(&source, &target, q.bottom());
    for (&(i, j), &v) in f.blocks() {
        r.matrix[i][j] = v;
    }
    r
}

/// `r∘(x, y) = e` if `(x, y) ∈ r`, else `⊥`.
pub fn circ_embed(q: &FiniteQuantale, r: &BoolRelation) -> Result<VRelation> {
    if q.size() < 2 {
        return Err(Error::Precondition("(-)∘ needs a nontrivial quantale".into()));
    }
    let mut out = VRelation::constant(r.source(), r.target(), q.bottom());
    for (i, j) in r.pairs() {
        out.matrix[i][j] = q.unit();
    }
    Ok(out)
}

/// `κ_X : `X → X∘`, the diagonal matrix of units.
pub fn kappa(q: &FiniteQuantale, x: &FiniteSet) -> Result<MatrMorphism<(), usize>> {
    let v = vrel_instance(q.clone());
    let quoted = crate::biproduct::quote_object(&v, x)?;
    let circ_obj = crate::finrel::set_to_matr(x);
    v.morphism(&quoted.object, &circ_obj, (0..x.len()).map(|k| ((k, k), q.unit())))
}

/// The `V`-valued power set `V^X` with truth effect and counit.
#[derive(Clone, Debug, PartialEq)]
pub struct VPower {
    pub base: FiniteSet,
    /// Functions `X → V` in lexicographic order, labelled by their value tuples.
    pub object: FiniteSet,
    pub functions: Vec<Vec<usize>>,
    /// `Ω = V` as a set.
    pub omega_set: FiniteSet,
    /// `ω : V → 1`, `ω(v, *) = v`.
    pub omega: VRelation,
    /// `∋ : V^X → X`, `∋(φ, x) = φ(x)`.
    pub counit: VRelation,
}

pub fn v_power_adjoint(q: &FiniteQuantale, x: &FiniteSet) -> VPower {
    let omega_set = FiniteSet::new(q.names().iter().map(|n| Label::from(n.as_str())).collect())
        .expect("distinct element names");
    let funcs = Function::all(x, &omega_set);
    let functions: Vec<Vec<usize>> = funcs.iter().map(|f| f.table().to_vec()).collect();
    let object = FiniteSet::new(
        functions
            .iter()
            .map(|f| Label::Tuple(f.iter().map(|&v| Label::from(q.names()[v].as_str())).collect()))
            .collect(),
    )
    .expect("distinct functions");
    let one = FiniteSet::singleton();
    let omega = VRelation {
        source: omega_set.clone(),
        target: one,
        matrix: (0..q.size()).map(|v| vec![v]).collect(),
    };
    let counit = VRelation {
        source: object.clone(),
        target: x.clone(),
        matrix: functions.clone(),
    };
    VPower {
        base: x.clone(),
        object,
        functions,
        omega_set,
        omega,
        counit,
    }
}

impl VPower {
    /// `f_v : A → V^X`, `a ↦ v(a, -)`.
    pub fn transpose(&self, v: &VRelation) -> Result<Function> {
        if v.target != self.base {
            return Err(Error::ObjectMismatch("relation does not land in X".into()));
        }
        let map = (0..v.source.len())
            .map(|a| {
                self.functions
                    .iter()
                    .position(|f| *f == v.matrix[a])
                    .ok_or_else(|| Error::Precondition("value outside V".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Function::new(&v.source, &self.object, map)
    }
}

/// For affine `V`: `None` if `V` is a frame, otherwise some `v ≰ v·v·v`
/// with the `1 × 1` relation `r = (v)` violating `r ≤ r ∘ r† ∘ r`.
pub fn allegory_witness(q: &FiniteQuantale) -> Result<Option<(usize, VRelation)>> {
    if !q.is_affine() {
        return Err(Error::Precondition("allegory witness needs an affine quantale".into()));
    }
    if q.is_frame() {
        return Ok(None);
    }
    let one = FiniteSet::singleton();
    let v = q
        .elements()
        .into_iter()
        .find(|v| !q.leq(v, &q.mul(v, &q.mul(v, v))))
        .ok_or_else(|| Error::Precondition("affine non-frame without a witness".into()))?;
    Ok(Some((v, VRelation::constant(&one, &one, v))))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boolean_vrel_is_rel() {
        let q = FiniteQuantale::boolean();
        let d = DirectVRel::new(q.clone());
        let x = FiniteSet::indexed(2);
        for r in BoolRelation::all(&x, &x) {
            for s in BoolRelation::all(&x, &x) {
                let direct = crate::finrel::FinRel.compose(&s, &r).unwrap();
                let via = d
                    .compose(&circ_embed(&q, &s).unwrap(), &circ_embed(&q, &r).unwrap())
                    .unwrap();
                assert_eq!(via, circ_embed(&q, &direct).unwrap());
            }
        }
    }

    #[test]
    fn singleton_composition_reads_mul_table() {
        let q = FiniteQuantale::lukasiewicz3();
        let d = DirectVRel::new(q.clone());
        let one = FiniteSet::singleton();
        let half = VRelation::constant(&one, &one, 1);
        assert_eq!(d.compose(&half, &half).unwrap().get(0, 0), q.mul(&1, &1));
    }

    #[test]
    fn witnesses() {
        assert!(allegory_witness(&FiniteQuantale::boolean()).unwrap().is_none());
        assert!(allegory_witness(&FiniteQuantale::chain3_min()).unwrap().is_none());
        let q = FiniteQuantale::lukasiewicz3();
        let (v, r) = allegory_witness(&q).unwrap().unwrap();
        assert_eq!(q.names()[v], "1/2");
        let d = DirectVRel::new(q);
        let rrr = d.chain(&[&r, &d.dagger(&r), &r]).unwrap();
        assert!(!d.leq(&r, &rrr).unwrap());
        assert!(allegory_witness(&FiniteQuantale::nonaffine3()).is_err());
    }

    #[test]
    fn power_counts() {
        let q = FiniteQuantale::chain3_min();
        let p = v_power_adjoint(&q, &FiniteSet::indexed(1));
        assert_eq!(p.object.len(), 3);
    }
}
