//! Finite sets, functions and Boolean relations as a standalone Rel instance,
//! independent of [`Matr`](crate::matr::Matr) so the two can be compared, plus
//! the Set-side constructions: power sets, down-sets and exponentials built
//! from power objects.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::label::Label;
use crate::matr::{Matr, MatrMorphism, MatrObject};
use crate::quantale::{Boolean, QuantaleBase};
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Orthocomplemented,
    Quantaloid,
};

/// A finite set of distinct labels in a fixed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SetJson")]
pub struct FiniteSet {
    labels: Vec<Label>,
}

#[derive(Deserialize)]
struct SetJson {
    labels: Vec<Label>,
}

impl TryFrom<SetJson> for FiniteSet {
    type Error = Error;
    fn try_from(s: SetJson) -> Result<Self> {
        FiniteSet::new(s.labels)
    }
}

impl FiniteSet {
    pub fn new(labels: Vec<Label>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for l in &labels {
            if !seen.insert(l) {
                return Err(Error::Precondition(format!("duplicate label {l}")));
            }
        }
        Ok(FiniteSet { labels })
    }

    pub fn from_names(names: &[&str]) -> Self {
        FiniteSet::new(names.iter().map(|&n| Label::from(n)).collect()).expect("distinct names")
    }

    /// `{0, …, n-1}`.
    pub fn indexed(n: usize) -> Self {
        FiniteSet {
            labels: crate::label::index_labels(n),
        }
    }

    pub fn empty() -> Self {
        FiniteSet { labels: Vec::new() }
    }

    /// The one-element set, labelled like the monoidal unit.
    pub fn singleton() -> Self {
        FiniteSet {
            labels: vec![Label::unit()],
        }
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.labels[i]
    }

    pub fn position(&self, l: &Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|m| m == l)
            .ok_or_else(|| Error::Index(format!("no element labelled {l}")))
    }

    /// Pairs in lexicographic order; `(i, j) ↦ i·|other| + j`.
    pub fn product(&self, other: &FiniteSet) -> FiniteSet {
        let mut labels = Vec::with_capacity(self.len() * other.len());
        for a in &self.labels {
            for b in &other.labels {
                labels.push(Label::pair(a, b));
            }
        }
        FiniteSet { labels }
    }
}

/// A total function between finite sets, as an index table.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Function {
    source: FiniteSet,
    target: FiniteSet,
    map: Vec<usize>,
}

impl Function {
    pub fn new(source: &FiniteSet, target: &FiniteSet, map: Vec<usize>) -> Result<Self> {
        if map.len() != source.len() || map.iter().any(|&j| j >= target.len()) {
            return Err(Error::Shape("function table does not match its sets".into()));
        }
        Ok(Function {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    pub fn identity(x: &FiniteSet) -> Self {
        Function {
            source: x.clone(),
            target: x.clone(),
            map: (0..x.len()).collect(),
        }
    }

    pub fn source(&self) -> &FiniteSet {
        &self.source
    }

    pub fn target(&self) -> &FiniteSet {
        &self.target
    }

    pub fn apply(&self, i: usize) -> usize {
        self.map[i]
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    /// `self ∘ f`.
    pub fn after(&self, f: &Function) -> Result<Function> {
        if f.target != self.source {
            return Err(Error::ObjectMismatch("functions do not compose".into()));
        }
        Function::new(&f.source, &self.target, f.map.iter().map(|&j| self.map[j]).collect())
    }

    pub fn graph(&self) -> BoolRelation {
        let mut r = BoolRelation::empty(&self.source, &self.target);
        for (i, &j) in self.map.iter().enumerate() {
            r.matrix[i][j] = true;
        }
        r
    }

    /// Every function `a → b`, in lexicographic order of tables.
    pub fn all(a: &FiniteSet, b: &FiniteSet) -> Vec<Function> {
        let (n, m) = (a.len(), b.len());
        if m == 0 {
            return if n == 0 {
                vec![Function::new(a, b, vec![]).expect("empty function")]
            } else {
                vec![]
            };
        }
        let count = m.pow(n as u32);
        (0..count)
            .map(|mut code| {
                let mut map = vec![0; n];
                for slot in map.iter_mut().rev() {
                    *slot = code % m;
                    code /= m;
                }
                Function::new(a, b, map).expect("in range")
            })
            .collect()
    }
}

/// A relation as a Boolean matrix, rows indexed by the source.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BoolRelation {
    source: FiniteSet,
    target: FiniteSet,
    matrix: Vec<Vec<bool>>,
}

impl BoolRelation {
    pub fn empty(source: &FiniteSet, target: &FiniteSet) -> Self {
        BoolRelation {
            source: source.clone(),
            target: target.clone(),
            matrix: vec![vec![false; target.len()]; source.len()],
        }
    }

    pub fn full(source: &FiniteSet, target: &FiniteSet) -> Self {
        BoolRelation {
            source: source.clone(),
            target: target.clone(),
            matrix: vec![vec![true; target.len()]; source.len()],
        }
    }

    pub fn identity(x: &FiniteSet) -> Self {
        Function::identity(x).graph()
    }

    pub fn from_pairs(source: &FiniteSet, target: &FiniteSet, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut r = BoolRelation::empty(source, target);
        for &(i, j) in pairs {
            if i >= source.len() || j >= target.len() {
                return Err(Error::Index(format!("pair ({i}, {j}) out of range")));
            }
            r.matrix[i][j] = true;
        }
        Ok(r)
    }

    pub fn from_matrix(source: &FiniteSet, target: &FiniteSet, matrix: Vec<Vec<bool>>) -> Result<Self> {
        if matrix.len() != source.len() || matrix.iter().any(|row| row.len() != target.len()) {
            return Err(Error::Shape("relation matrix does not match its sets".into()));
        }
        Ok(BoolRelation {
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

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.matrix[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.matrix[i][j] = value;
    }

    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The elements related to `i`.
    pub fn image(&self, i: usize) -> Vec<usize> {
        (0..self.target.len()).filter(|&j| self.matrix[i][j]).collect()
    }

    /// `Some(f)` when the relation is the graph of a function.
    pub fn as_function(&self) -> Option<Function> {
        let map = (0..self.source.len())
            .map(|i| match self.image(i).as_slice() {
                [j] => Some(*j),
                _ => None,
            })
            .collect::<Option<Vec<usize>>>()?;
        Function::new(&self.source, &self.target, map).ok()
    }

    /// Every relation `a → b`; bit `i·|b| + j` of the index decides `(i, j)`.
    pub fn all(a: &FiniteSet, b: &FiniteSet) -> Vec<BoolRelation> {
        let cells = a.len() * b.len();
        assert!(cells < 24, "too many relations to enumerate");
        (0..1usize << cells)
            .map(|code| {
                let mut r = BoolRelation::empty(a, b);
                for i in 0..a.len() {
                    for j in 0..b.len() {
                        r.matrix[i][j] = code >> (i * b.len() + j) & 1 == 1;
                    }
                }
                r
            })
            .collect()
    }
}

/// Rel as a direct Boolean-matrix instance.
#[derive(Clone, Copy, Debug, Default)]
pub struct FinRel;

impl Quantaloid for FinRel {
    type Obj = FiniteSet;
    type Mor = BoolRelation;

    fn source(&self, f: &BoolRelation) -> FiniteSet {
        f.source.clone()
    }

    fn target(&self, f: &BoolRelation) -> FiniteSet {
        f.target.clone()
    }

    fn compose(&self, g: &BoolRelation, f: &BoolRelation) -> Result<BoolRelation> {
        if f.target != g.source {
            return Err(Error::ObjectMismatch("relations do not compose".into()));
        }
        let mut out = BoolRelation::empty(&f.source, &g.target);
        for i in 0..f.source.len() {
            for k in 0..g.target.len() {
                out.matrix[i][k] = (0..f.target.len()).any(|j| f.matrix[i][j] && g.matrix[j][k]);
            }
        }
        Ok(out)
    }

    fn identity(&self, x: &FiniteSet) -> BoolRelation {
        BoolRelation::identity(x)
    }

    fn bottom(&self, x: &FiniteSet, y: &FiniteSet) -> BoolRelation {
        BoolRelation::empty(x, y)
    }

    fn top(&self, x: &FiniteSet, y: &FiniteSet) -> BoolRelation {
        BoolRelation::full(x, y)
    }

    fn join(&self, f: &BoolRelation, g: &BoolRelation) -> Result<BoolRelation> {
        self.check_parallel(f, g)?;
        let mut out = f.clone();
        for (row, grow) in out.matrix.iter_mut().zip(&g.matrix) {
            for (a, b) in row.iter_mut().zip(grow) {
                *a |= *b;
            }
        }
        Ok(out)
    }

    fn meet(&self, f: &BoolRelation, g: &BoolRelation) -> Result<BoolRelation> {
        self.check_parallel(f, g)?;
        let mut out = f.clone();
        for (row, grow) in out.matrix.iter_mut().zip(&g.matrix) {
            for (a, b) in row.iter_mut().zip(grow) {
                *a &= *b;
            }
        }
        Ok(out)
    }

    fn leq(&self, f: &BoolRelation, g: &BoolRelation) -> Result<bool> {
        self.check_parallel(f, g)?;
        Ok(f.matrix
            .iter()
            .zip(&g.matrix)
            .all(|(r, s)| r.iter().zip(s).all(|(a, b)| !a || *b)))
    }
}

impl DaggerQuantaloid for FinRel {
    fn dagger(&self, f: &BoolRelation) -> BoolRelation {
        let mut out = BoolRelation::empty(&f.target, &f.source);
        for (i, j) in f.pairs() {
            out.matrix[j][i] = true;
        }
        out
    }
}

impl MonoidalQuantaloid for FinRel {
    fn unit_object(&self) -> FiniteSet {
        FiniteSet::singleton()
    }

    fn tensor_objects(&self, x: &FiniteSet, y: &FiniteSet) -> FiniteSet {
        x.product(y)
    }

    fn tensor(&self, f: &BoolRelation, g: &BoolRelation) -> BoolRelation {
        let source = f.source.product(&g.source);
        let target = f.target.product(&g.target);
        let mut out = BoolRelation::empty(&source, &target);
        let (gs, gt) = (g.source.len(), g.target.len());
        for (a, c) in f.pairs() {
            for (b, d) in g.pairs() {
                out.matrix[a * gs + b][c * gt + d] = true;
            }
        }
        out
    }

    fn associator(&self, x: &FiniteSet, y: &FiniteSet, z: &FiniteSet) -> BoolRelation {
        let source = x.product(y).product(z);
        let target = x.product(&y.product(z));
        let n = source.len();
        BoolRelation::from_pairs(&source, &target, &(0..n).map(|k| (k, k)).collect::<Vec<_>>())
            .expect("same size")
    }

    fn left_unitor(&self, x: &FiniteSet) -> BoolRelation {
        let source = FiniteSet::singleton().product(x);
        Function::new(&source, x, (0..x.len()).collect()).expect("bijection").graph()
    }

    fn right_unitor(&self, x: &FiniteSet) -> BoolRelation {
        let source = x.product(&FiniteSet::singleton());
        Function::new(&source, x, (0..x.len()).collect()).expect("bijection").graph()
    }

    fn symmetry(&self, x: &FiniteSet, y: &FiniteSet) -> BoolRelation {
        let (n, m) = (x.len(), y.len());
        let map = (0..n * m).map(|k| (k % m) * n + k / m).collect();
        Function::new(&x.product(y), &y.product(x), map).expect("bijection").graph()
    }

    fn enumerate_scalars(&self) -> Option<Vec<BoolRelation>> {
        let i = FiniteSet::singleton();
        Some(vec![BoolRelation::empty(&i, &i), BoolRelation::full(&i, &i)])
    }
}

impl CompactQuantaloid for FinRel {
    fn dual(&self, x: &FiniteSet) -> FiniteSet {
        x.clone()
    }

    fn eta(&self, x: &FiniteSet) -> BoolRelation {
        let n = x.len();
        let pairs: Vec<_> = (0..n).map(|a| (0, a * n + a)).collect();
        BoolRelation::from_pairs(&FiniteSet::singleton(), &x.product(x), &pairs).expect("in range")
    }

    fn epsilon(&self, x: &FiniteSet) -> BoolRelation {
        self.dagger(&self.eta(x))
    }
}

impl Biproducts for FinRel {
    /// Disjoint union, labelled as in [`Matr`].
    fn biproduct(&self, family: &[(Label, FiniteSet)]) -> Result<Biproduct<FiniteSet, BoolRelation>> {
        let mut labels = Vec::new();
        let mut offsets = Vec::new();
        for (l, x) in family {
            offsets.push(labels.len());
            if x.len() == 1 {
                labels.push(l.clone());
            } else {
                labels.extend(x.labels.iter().map(|m| Label::pair(l, m)));
            }
        }
        let object = FiniteSet::new(labels)?;
        let mut injections = Vec::new();
        let mut projections = Vec::new();
        for ((_, x), &off) in family.iter().zip(&offsets) {
            let inj = Function::new(x, &object, (off..off + x.len()).collect())?.graph();
            projections.push(self.dagger(&inj));
            injections.push(inj);
        }
        Ok(Biproduct {
            object,
            labels: family.iter().map(|(l, _)| l.clone()).collect(),
            summands: family.iter().map(|(_, x)| x.clone()).collect(),
            injections,
            projections,
        })
    }
}

/// In Rel, `Tr(r ∘ s†) = 0` iff `r` and `s` are disjoint, so `¬r` is the complement.
impl Orthocomplemented for FinRel {
    fn negate(&self, r: &BoolRelation) -> Result<BoolRelation> {
        let mut out = BoolRelation::full(&r.source, &r.target);
        for (i, j) in r.pairs() {
            out.set(i, j, false);
        }
        Ok(out)
    }
}

impl Orthocomplemented for crate::Rel {
    fn negate(&self, r: &MatrMorphism<(), bool>) -> Result<MatrMorphism<(), bool>> {
        let (x, y) = (r.source(), r.target());
        let blocks = (0..x.len())
            .flat_map(|i| (0..y.len()).map(move |j| (i, j)))
            .filter(|k| r.block(k.0, k.1).is_none())
            .map(|k| (k, true));
        self.morphism(x, y, blocks)
    }
}

/// The Boolean one-object base Rel is built on.
pub fn rel_instance() -> crate::Rel {
    Matr::new(QuantaleBase::new(Boolean))
}

pub fn set_to_matr(x: &FiniteSet) -> MatrObject<()> {
    MatrObject::new(x.labels.iter().map(|l| (l.clone(), ())).collect()).expect("labels are unique")
}

pub fn matr_to_set(x: &MatrObject<()>) -> FiniteSet {
    FiniteSet {
        labels: x.labels().cloned().collect(),
    }
}

pub fn relation_to_matr(r: &BoolRelation) -> MatrMorphism<(), bool> {
    rel_instance()
        .morphism(
            &set_to_matr(&r.source),
            &set_to_matr(&r.target),
            r.pairs().into_iter().map(|p| (p, true)),
        )
        .expect("blocks are typed")
}

pub fn matr_to_relation(f: &MatrMorphism<(), bool>) -> BoolRelation {
    let pairs: Vec<_> = f.blocks().iter().filter(|(_, &b)| b).map(|(&k, _)| k).collect();
    BoolRelation::from_pairs(&matr_to_set(f.source()), &matr_to_set(f.target()), &pairs)
        .expect("in range")
}

/// The power set of `X` with membership `∋` and singleton map `{·}`.
#[derive(Clone, Debug, PartialEq)]
pub struct Powerset {
    pub base: FiniteSet,
    /// Subsets in bitmask order; labelled by the tuple of their members.
    pub object: FiniteSet,
    pub members: Vec<Vec<usize>>,
    /// `∋_X : P(X) → X`.
    pub ni: BoolRelation,
    /// `{·}_X : X → P(X)`.
    pub singleton: Function,
}

fn subset_label(x: &FiniteSet, members: &[usize]) -> Label {
    Label::Tuple(members.iter().map(|&i| x.label(i).clone()).collect())
}

pub fn powerset_adjoint(x: &FiniteSet) -> Powerset {
    let n = x.len();
    assert!(n < 20, "power set too large");
    let members: Vec<Vec<usize>> = (0..1usize << n)
        .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect())
        .collect();
    let object = FiniteSet::new(members.iter().map(|m| subset_label(x, m)).collect())
        .expect("distinct subsets");
    let mut ni = BoolRelation::empty(&object, x);
    for (s, m) in members.iter().enumerate() {
        for &i in m {
            ni.matrix[s][i] = true;
        }
    }
    let singleton = Function::new(x, &object, (0..n).map(|i| 1 << i).collect()).expect("in range");
    Powerset {
        base: x.clone(),
        object,
        members,
        ni,
        singleton,
    }
}

impl Powerset {
    pub fn index_of(&self, members: &[usize]) -> usize {
        members.iter().map(|&i| 1usize << i).sum()
    }

    /// The unique `f_v : A → P(X)` with `∋ ∘ f_v = v`.
    pub fn transpose(&self, v: &BoolRelation) -> Result<Function> {
        if v.target != self.base {
            return Err(Error::ObjectMismatch("relation does not land in X".into()));
        }
        let map = (0..v.source.len()).map(|a| self.index_of(&v.image(a))).collect();
        Function::new(&v.source, &self.object, map)
    }

    /// `P(g) : P(X) → P(X')` for a relation `g : X → X'`, from the universal property.
    pub fn on_relation(&self, target: &Powerset, g: &BoolRelation) -> Result<Function> {
        target.transpose(&FinRel.compose(g, &self.ni)?)
    }
}

/// A preordered set with its down-sets ordered by inclusion.
#[derive(Clone, Debug, PartialEq)]
pub struct Downsets {
    pub base: FiniteSet,
    pub order: BoolRelation,
    pub object: FiniteSet,
    pub members: Vec<Vec<usize>>,
    /// Inclusion order on down-sets.
    pub inclusion: BoolRelation,
    /// Membership, a monotone relation `D(X) → X`.
    pub counit: BoolRelation,
    /// `x ↦ ↓x`.
    pub unit: Function,
}

pub fn is_preorder(le: &BoolRelation) -> bool {
    let n = le.source.len();
    le.source == le.target
        && (0..n).all(|i| le.matrix[i][i])
        && (0..n).all(|i| {
            (0..n).all(|j| (0..n).all(|k| !(le.matrix[i][j] && le.matrix[j][k]) || le.matrix[i][k]))
        })
}

/// Down-closed subsets of a preorder `le` (with `(a, b) ∈ le` meaning `a ≤ b`).
pub fn downset_adjoint(le: &BoolRelation) -> Result<Downsets> {
    if !is_preorder(le) {
        return Err(Error::Precondition("relation is not a preorder".into()));
    }
    let x = le.source.clone();
    let p = powerset_adjoint(&x);
    let is_down = |m: &Vec<usize>| m.iter().all(|&b| (0..x.len()).all(|a| !le.matrix[a][b] || m.contains(&a)));
    let members: Vec<Vec<usize>> = p.members.into_iter().filter(is_down).collect();
    let object = FiniteSet::new(members.iter().map(|m| subset_label(&x, m)).collect())?;
    let d = members.len();
    let mut inclusion = BoolRelation::empty(&object, &object);
    for s in 0..d {
        for t in 0..d {
            inclusion.matrix[s][t] = members[s].iter().all(|i| members[t].contains(i));
        }
    }
    let mut counit = BoolRelation::empty(&object, &x);
    for (s, m) in members.iter().enumerate() {
        for &i in m {
            counit.matrix[s][i] = true;
        }
    }
    let unit_map = (0..x.len())
        .map(|b| {
            let down: Vec<usize> = (0..x.len()).filter(|&a| le.matrix[a][b]).collect();
            members.iter().position(|m| *m == down).expect("principal down-sets are down-sets")
        })
        .collect();
    let unit = Function::new(&x, &object, unit_map)?;
    Ok(Downsets {
        base: x,
        order: le.clone(),
        object,
        members,
        inclusion,
        counit,
        unit,
    })
}

impl Downsets {
    /// The monotone function `a ↦ {x : (a, x) ∈ v}` for a monotone relation `v : A → X`.
    pub fn transpose(&self, v: &BoolRelation) -> Result<Function> {
        let map = (0..v.source.len())
            .map(|a| {
                let img = v.image(a);
                self.members
                    .iter()
                    .position(|m| *m == img)
                    .ok_or_else(|| Error::Precondition("relation fibre is not a down-set".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Function::new(&v.source, &self.object, map)
    }

    /// `∋ ∘ f` for a monotone function into `D(X)`.
    pub fn untranspose(&self, f: &Function) -> Result<BoolRelation> {
        FinRel.compose(&self.counit, &f.graph())
    }
}

/// Whether `v : A → X` satisfies `≽_X ∘ v = v = v ∘ ≽_A` for preorders given as `≤`.
pub fn is_monotone_bool_relation(v: &BoolRelation, le_a: &BoolRelation, le_x: &BoolRelation) -> bool {
    let ge_a = FinRel.dagger(le_a);
    let ge_x = FinRel.dagger(le_x);
    // relations compose left to right as matrices: (v ∘ ≽_A)(a', x) = ∃a. a' ≽ a, v(a, x)
    let (Ok(after), Ok(before)) = (FinRel.compose(&ge_x, v), FinRel.compose(v, &ge_a)) else {
        return false;
    };
    after == *v && before == *v
}

pub fn is_monotone_function(f: &Function, le_a: &BoolRelation, le_b: &BoolRelation) -> bool {
    let n = f.source.len();
    (0..n).all(|a| (0..n).all(|b| !le_a.matrix[a][b] || le_b.matrix[f.map[a]][f.map[b]]))
}

/// `Y^X` reconstructed from power objects: the functional relations inside
/// `P(X × Y)` cut out by a pullback, with evaluation and currying.
#[derive(Clone, Debug, PartialEq)]
pub struct Exponential {
    pub domain: FiniteSet,
    pub codomain: FiniteSet,
    pub object: FiniteSet,
    /// `m : Y^X → P(X × Y)`.
    pub inclusion: Function,
    /// The relation each element of `Y^X` stands for.
    pub graphs: Vec<BoolRelation>,
    /// `e : Y^X × X → Y`.
    pub eval: Function,
}

/// The unique `χ : X → Ω` whose pullback of `true` is `A`, found by search.
///
/// `Ω = {0, 1}` with `true` selecting `1`. Returns every classifying function;
/// uniqueness means the result has length one.
pub fn classifiers(x: &FiniteSet, subset: &[usize]) -> Vec<Function> {
    let omega = FiniteSet::indexed(2);
    Function::all(x, &omega)
        .into_iter()
        .filter(|chi| {
            let pulled: Vec<usize> = (0..x.len()).filter(|&i| chi.apply(i) == 1).collect();
            pulled == subset
        })
        .collect()
}

pub fn exponential_via_power(x: &FiniteSet, y: &FiniteSet) -> Result<Exponential> {
    let xy = x.product(y);
    let p_xy = powerset_adjoint(&xy);
    let p_y = powerset_adjoint(y);
    let p_x = powerset_adjoint(x);
    let (nx, ny) = (x.len(), y.len());
    // v : P(X × Y) × X → P(Y), the transpose of membership
    let v = |r: usize, i: usize| -> usize {
        let img: Vec<usize> = (0..ny)
            .filter(|&j| p_xy.ni.get(r, i * ny + j))
            .collect();
        p_y.index_of(&img)
    };
    // σ_Y : P(Y) → Ω classifies the image of {·}_Y
    let singletons: Vec<usize> = (0..ny).map(|j| p_y.singleton.apply(j)).collect();
    let mut singletons_sorted = singletons.clone();
    singletons_sorted.sort_unstable();
    let sigma = match classifiers(&p_y.object, &singletons_sorted).as_slice() {
        [chi] => chi.clone(),
        _ => return Err(Error::Precondition("singleton classifier is not unique".into())),
    };
    // u : P(X × Y) → P(X), transpose of σ_Y ∘ v
    let u = |r: usize| -> usize {
        let xs: Vec<usize> = (0..nx).filter(|&i| sigma.apply(v(r, i)) == 1).collect();
        p_x.index_of(&xs)
    };
    // k : 1 → P(X) selects all of X
    let k = p_x.index_of(&(0..nx).collect::<Vec<_>>());
    // Y^X is the pullback of u along k
    let chosen: Vec<usize> = (0..p_xy.object.len()).filter(|&r| u(r) == k).collect();
    let object = FiniteSet::new(chosen.iter().map(|&r| p_xy.object.label(r).clone()).collect())?;
    let inclusion = Function::new(&object, &p_xy.object, chosen.clone())?;
    let graphs = chosen
        .iter()
        .map(|&r| {
            let pairs: Vec<_> = p_xy.members[r].iter().map(|&c| (c / ny, c % ny)).collect();
            BoolRelation::from_pairs(x, y, &pairs)
        })
        .collect::<Result<Vec<_>>>()?;
    // e is the factorization of v ∘ (m × id) through {·}_Y
    let ex = object.product(x);
    let eval_map = (0..ex.len())
        .map(|c| {
            let (g, i) = (c / nx, c % nx);
            let s = v(chosen[g], i);
            singletons
                .iter()
                .position(|&t| t == s)
                .ok_or_else(|| Error::Precondition("evaluation does not factor".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    let eval = Function::new(&ex, y, eval_map)?;
    Ok(Exponential {
        domain: x.clone(),
        codomain: y.clone(),
        object,
        inclusion,
        graphs,
        eval,
    })
}

impl Exponential {
    /// `curry(f) : Z → Y^X` for `f : Z × X → Y`.
    pub fn curry(&self, z: &FiniteSet, f: &Function) -> Result<Function> {
        if *f.source() != z.product(&self.domain) || *f.target() != self.codomain {
            return Err(Error::ObjectMismatch("expected f : Z × X → Y".into()));
        }
        let nx = self.domain.len();
        let map = (0..z.len())
            .map(|c| {
                let pairs: Vec<_> = (0..nx).map(|i| (i, f.apply(c * nx + i))).collect();
                let g = BoolRelation::from_pairs(&self.domain, &self.codomain, &pairs)?;
                self.graphs
                    .iter()
                    .position(|h| *h == g)
                    .ok_or_else(|| Error::Precondition("graph missing from Y^X".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Function::new(z, &self.object, map)
    }

    /// `e ∘ (g × id_X)`.
    pub fn uncurry(&self, g: &Function) -> Result<Function> {
        let z = g.source();
        let nx = self.domain.len();
        let map = (0..z.len() * nx)
            .map(|c| self.eval.apply(g.apply(c / nx) * nx + c % nx))
            .collect();
        Function::new(&z.product(&self.domain), &self.codomain, map)
    }
}

/// The dagger kernel of a relation: the elements related to nothing.
pub fn rel_kernel(r: &BoolRelation) -> (FiniteSet, BoolRelation) {
    let idx: Vec<usize> = (0..r.source.len()).filter(|&i| r.image(i).is_empty()).collect();
    let k = FiniteSet::new(idx.iter().map(|&i| r.source.label(i).clone()).collect())
        .expect("sub-list of distinct labels");
    let e = Function::new(&k, &r.source, idx).expect("in range").graph();
    (k, e)
}

pub fn rel_is_zero_mono(r: &BoolRelation) -> bool {
    rel_kernel(r).0.is_empty()
}

/// Zero-mono by the definition: no nonzero `f : 1 → X` with `r ∘ f = 0`.
///
/// Points suffice since every nonzero relation into `X` contains one.
pub fn rel_is_zero_mono_by_definition(r: &BoolRelation) -> bool {
    let one = FiniteSet::singleton();
    BoolRelation::all(&one, &r.source)
        .iter()
        .filter(|f| !f.pairs().is_empty())
        .all(|f| !FinRel.compose(r, f).expect("typed").pairs().is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn powerset_of_singleton() {
        let x = FiniteSet::from_names(&["a"]);
        let p = powerset_adjoint(&x);
        assert_eq!(p.object.len(), 2);
        assert_eq!(p.ni.pairs(), vec![(1, 0)]);
    }

    #[test]
    fn powerset_transpose_of_top_is_constant() {
        let (a, x) = (FiniteSet::indexed(2), FiniteSet::indexed(3));
        let p = powerset_adjoint(&x);
        let f = p.transpose(&BoolRelation::full(&a, &x)).unwrap();
        assert!(f.table().iter().all(|&s| p.members[s] == vec![0, 1, 2]));
        let v = BoolRelation::from_pairs(&a, &x, &[(0, 2), (1, 0), (1, 1)]).unwrap();
        let fv = p.transpose(&v).unwrap();
        assert_eq!(FinRel.compose(&p.ni, &fv.graph()).unwrap(), v);
    }

    #[test]
    fn downsets_of_small_orders() {
        let two = FiniteSet::indexed(2);
        let discrete = BoolRelation::identity(&two);
        assert_eq!(downset_adjoint(&discrete).unwrap().object.len(), 4);
        let chain = BoolRelation::from_pairs(&two, &two, &[(0, 0), (0, 1), (1, 1)]).unwrap();
        let d = downset_adjoint(&chain).unwrap();
        assert_eq!(d.members, vec![vec![], vec![0], vec![0, 1]]);
        let empty = BoolRelation::empty(&FiniteSet::empty(), &FiniteSet::empty());
        assert_eq!(downset_adjoint(&empty).unwrap().object.len(), 1);
        assert!(downset_adjoint(&BoolRelation::empty(&two, &two)).is_err());
    }

    #[test]
    fn exponential_counts() {
        let e = exponential_via_power(&FiniteSet::indexed(2), &FiniteSet::indexed(3)).unwrap();
        assert_eq!(e.object.len(), 9);
        let e = exponential_via_power(&FiniteSet::empty(), &FiniteSet::indexed(3)).unwrap();
        assert_eq!(e.object.len(), 1);
    }

    #[test]
    fn kernel_in_rel() {
        let x = FiniteSet::indexed(3);
        let r = BoolRelation::from_pairs(&x, &FiniteSet::singleton(), &[(0, 0), (2, 0)]).unwrap();
        let (k, e) = rel_kernel(&r);
        assert_eq!(k.labels(), &[Label::Index(1)]);
        assert!(FinRel.compose(&r, &e).unwrap().pairs().is_empty());
        assert!(!rel_is_zero_mono(&r));
        assert!(!rel_is_zero_mono_by_definition(&r));
    }

    #[test]
    fn finrel_matches_matr_on_composition() {
        let x = FiniteSet::indexed(2);
        let rel = rel_instance();
        for f in BoolRelation::all(&x, &x) {
            for g in BoolRelation::all(&x, &x) {
                let direct = FinRel.compose(&g, &f).unwrap();
                let via = rel.compose(&relation_to_matr(&g), &relation_to_matr(&f)).unwrap();
                assert_eq!(matr_to_relation(&via), direct);
            }
        }
    }
}
