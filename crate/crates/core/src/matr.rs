//! `Matr(B)`: the free biproduct completion of a base quantaloid.
//!
//! Objects are finite labelled families of base objects; a morphism is a
//! matrix of base morphisms, stored sparsely with `⊥` blocks omitted.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::label::Label;
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MatrObject<O> {
    components: Vec<(Label, O)>,
}

impl<O: Clone + PartialEq + fmt::Debug> MatrObject<O> {
    /// Fails on duplicate labels.
    pub fn new(components: Vec<(Label, O)>) -> Result<Self> {
        for (k, (l, _)) in components.iter().enumerate() {
            if components[..k].iter().any(|(m, _)| m == l) {
                return Err(Error::Precondition(format!("duplicate label {l}")));
            }
        }
        Ok(MatrObject { components })
    }

    pub fn zero() -> Self {
        MatrObject {
            components: Vec::new(),
        }
    }

    pub fn components(&self) -> &[(Label, O)] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn label(&self, i: usize) -> &Label {
        &self.components[i].0
    }

    pub fn component(&self, i: usize) -> &O {
        &self.components[i].1
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.components.iter().map(|(l, _)| l)
    }

    pub fn position(&self, label: &Label) -> Result<usize> {
        self.components
            .iter()
            .position(|(l, _)| l == label)
            .ok_or_else(|| Error::Index(format!("no component labelled {label}")))
    }
}

/// A matrix of base morphisms; key `(i, j)` is the block from source
/// component `i` to target component `j`.
#[derive(Clone, Debug, PartialEq)]
pub struct MatrMorphism<O, M> {
    source: MatrObject<O>,
    target: MatrObject<O>,
    blocks: BTreeMap<(usize, usize), M>,
}

impl<O: Clone + PartialEq + fmt::Debug, M: Clone> MatrMorphism<O, M> {
    pub fn source(&self) -> &MatrObject<O> {
        &self.source
    }

    pub fn target(&self) -> &MatrObject<O> {
        &self.target
    }

    /// Non-bottom blocks in `(source, target)` order.
    pub fn blocks(&self) -> &BTreeMap<(usize, usize), M> {
        &self.blocks
    }

    pub fn block(&self, i: usize, j: usize) -> Option<&M> {
        self.blocks.get(&(i, j))
    }
}

/// The biproduct completion of `B`.
#[derive(Clone, Debug, Default)]
pub struct Matr<B> {
    base: B,
}

pub type Obj<B> = MatrObject<<B as Quantaloid>::Obj>;
pub type Mor<B> = MatrMorphism<<B as Quantaloid>::Obj, <B as Quantaloid>::Mor>;

impl<B: Quantaloid> Matr<B> {
    pub fn new(base: B) -> Self {
        Matr { base }
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    /// Builds a morphism from blocks, checking each block's type and
    /// dropping bottoms. Repeated keys are joined.
    pub fn morphism(
        &self,
        source: &Obj<B>,
        target: &Obj<B>,
        blocks: impl IntoIterator<Item = ((usize, usize), B::Mor)>,
    ) -> Result<Mor<B>> {
        let mut map: BTreeMap<(usize, usize), B::Mor> = BTreeMap::new();
        for ((i, j), m) in blocks {
            if i >= source.len() || j >= target.len() {
                return Err(Error::Index(format!(
                    "block ({i}, {j}) outside {}x{}",
                    source.len(),
                    target.len()
                )));
            }
            let (s, t) = (self.base.source(&m), self.base.target(&m));
            if s != *source.component(i) || t != *target.component(j) {
                return Err(Error::ObjectMismatch(format!(
                    "block ({i}, {j}) has type {s:?} -> {t:?}, expected {:?} -> {:?}",
                    source.component(i),
                    target.component(j)
                )));
            }
            let m = match map.remove(&(i, j)) {
                Some(prev) => self.base.join(&prev, &m)?,
                None => m,
            };
            map.insert((i, j), m);
        }
        map.retain(|_, m| !self.base.is_bottom(m));
        Ok(MatrMorphism {
            source: source.clone(),
            target: target.clone(),
            blocks: map,
        })
    }

    fn raw(&self, source: &Obj<B>, target: &Obj<B>, mut blocks: BTreeMap<(usize, usize), B::Mor>) -> Mor<B> {
        blocks.retain(|_, m| !self.base.is_bottom(m));
        MatrMorphism {
            source: source.clone(),
            target: target.clone(),
            blocks,
        }
    }

    /// The block `(i, j)`, with `⊥` filled in.
    pub fn block(&self, f: &Mor<B>, i: usize, j: usize) -> B::Mor {
        f.blocks
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| self.base.bottom(f.source.component(i), f.target.component(j)))
    }

    fn zip_blocks(
        &self,
        f: &Mor<B>,
        g: &Mor<B>,
        op: impl Fn(&B::Mor, &B::Mor) -> Result<B::Mor>,
    ) -> Result<Mor<B>> {
        self.check_parallel(f, g)?;
        let mut out = BTreeMap::new();
        for i in 0..f.source.len() {
            for j in 0..f.target.len() {
                let (a, b) = (f.blocks.get(&(i, j)), g.blocks.get(&(i, j)));
                if a.is_none() && b.is_none() {
                    continue;
                }
                out.insert((i, j), op(&self.block(f, i, j), &self.block(g, i, j))?);
            }
        }
        Ok(self.raw(&f.source, &f.target, out))
    }

    /// A diagonal morphism `x → x` with base morphism `d(i)` on component `i`.
    pub fn diagonal(&self, x: &Obj<B>, d: impl Fn(usize, &B::Obj) -> B::Mor) -> Mor<B> {
        let blocks = (0..x.len()).map(|i| ((i, i), d(i, x.component(i)))).collect();
        self.raw(x, x, blocks)
    }

    /// A morphism given by a function on component indices.
    pub fn from_function(
        &self,
        source: &Obj<B>,
        target: &Obj<B>,
        f: impl Fn(usize) -> usize,
        block: impl Fn(&B::Obj, &B::Obj) -> B::Mor,
    ) -> Mor<B> {
        let blocks = (0..source.len())
            .map(|i| {
                let j = f(i);
                ((i, j), block(source.component(i), target.component(j)))
            })
            .collect();
        self.raw(source, target, blocks)
    }
}

impl<B: Quantaloid> Quantaloid for Matr<B> {
    type Obj = Obj<B>;
    type Mor = Mor<B>;

    fn source(&self, f: &Mor<B>) -> Obj<B> {
        f.source.clone()
    }

    fn target(&self, f: &Mor<B>) -> Obj<B> {
        f.target.clone()
    }

    fn compose(&self, g: &Mor<B>, f: &Mor<B>) -> Result<Mor<B>> {
        if f.target != g.source {
            return Err(Error::ObjectMismatch(format!(
                "cannot compose: target {} components vs source {} components",
                f.target.len(),
                g.source.len()
            )));
        }
        let mut by_source: BTreeMap<usize, Vec<(usize, &B::Mor)>> = BTreeMap::new();
        for (&(j, k), m) in &g.blocks {
            by_source.entry(j).or_default().push((k, m));
        }
        let mut out: BTreeMap<(usize, usize), B::Mor> = BTreeMap::new();
        for (&(i, j), a) in &f.blocks {
            let Some(row) = by_source.get(&j) else { continue };
            for &(k, b) in row {
                let c = self.base.compose(b, a)?;
                if self.base.is_bottom(&c) {
                    continue;
                }
                let c = match out.remove(&(i, k)) {
                    Some(prev) => self.base.join(&prev, &c)?,
                    None => c,
                };
                out.insert((i, k), c);
            }
        }
        Ok(self.raw(&f.source, &g.target, out))
    }

    fn identity(&self, x: &Obj<B>) -> Mor<B> {
        self.diagonal(x, |_, o| self.base.identity(o))
    }

    fn bottom(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        self.raw(x, y, BTreeMap::new())
    }

    fn top(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        let mut blocks = BTreeMap::new();
        for i in 0..x.len() {
            for j in 0..y.len() {
                blocks.insert((i, j), self.base.top(x.component(i), y.component(j)));
            }
        }
        self.raw(x, y, blocks)
    }

    fn join(&self, f: &Mor<B>, g: &Mor<B>) -> Result<Mor<B>> {
        self.zip_blocks(f, g, |a, b| self.base.join(a, b))
    }

    fn meet(&self, f: &Mor<B>, g: &Mor<B>) -> Result<Mor<B>> {
        self.check_parallel(f, g)?;
        let mut out = BTreeMap::new();
        for (key, a) in &f.blocks {
            if let Some(b) = g.blocks.get(key) {
                out.insert(*key, self.base.meet(a, b)?);
            }
        }
        Ok(self.raw(&f.source, &f.target, out))
    }

    fn leq(&self, f: &Mor<B>, g: &Mor<B>) -> Result<bool> {
        self.check_parallel(f, g)?;
        for (&(i, j), a) in &f.blocks {
            match g.blocks.get(&(i, j)) {
                Some(b) => {
                    if !self.base.leq(a, b)? {
                        return Ok(false);
                    }
                }
                None => return Ok(false),
            }
        }
        Ok(true)
    }

    fn is_bottom(&self, f: &Mor<B>) -> bool {
        f.blocks.is_empty()
    }

    fn check_parallel(&self, f: &Mor<B>, g: &Mor<B>) -> Result<()> {
        if f.source != g.source || f.target != g.target {
            return Err(Error::ObjectMismatch("morphisms are not parallel".into()));
        }
        Ok(())
    }
}

impl<B: DaggerQuantaloid> DaggerQuantaloid for Matr<B> {
    fn dagger(&self, f: &Mor<B>) -> Mor<B> {
        let blocks = f
            .blocks
            .iter()
            .map(|(&(i, j), m)| ((j, i), self.base.dagger(m)))
            .collect();
        self.raw(&f.target, &f.source, blocks)
    }
}

impl<B: MonoidalQuantaloid> MonoidalQuantaloid for Matr<B> {
    fn unit_object(&self) -> Obj<B> {
        MatrObject {
            components: vec![(Label::unit(), self.base.unit_object())],
        }
    }

    /// Components are pairs in lexicographic order: `(i, j) ↦ i·|y| + j`.
    fn tensor_objects(&self, x: &Obj<B>, y: &Obj<B>) -> Obj<B> {
        let mut components = Vec::with_capacity(x.len() * y.len());
        for (a, xa) in &x.components {
            for (b, yb) in &y.components {
                components.push((Label::pair(a, b), self.base.tensor_objects(xa, yb)));
            }
        }
        MatrObject { components }
    }

    fn tensor(&self, f: &Mor<B>, g: &Mor<B>) -> Mor<B> {
        let source = self.tensor_objects(&f.source, &g.source);
        let target = self.tensor_objects(&f.target, &g.target);
        let (ys, yt) = (g.source.len(), g.target.len());
        let mut blocks = BTreeMap::new();
        for (&(a, c), fm) in &f.blocks {
            for (&(b, d), gm) in &g.blocks {
                blocks.insert((a * ys + b, c * yt + d), self.base.tensor(fm, gm));
            }
        }
        self.raw(&source, &target, blocks)
    }

    fn associator(&self, x: &Obj<B>, y: &Obj<B>, z: &Obj<B>) -> Mor<B> {
        let source = self.tensor_objects(&self.tensor_objects(x, y), z);
        let target = self.tensor_objects(x, &self.tensor_objects(y, z));
        // ((a, b), c) and (a, (b, c)) share the index (a·|y| + b)·|z| + c
        let mut blocks = BTreeMap::new();
        let mut k = 0;
        for xa in x.components.iter().map(|(_, o)| o) {
            for yb in y.components.iter().map(|(_, o)| o) {
                for zc in z.components.iter().map(|(_, o)| o) {
                    blocks.insert((k, k), self.base.associator(xa, yb, zc));
                    k += 1;
                }
            }
        }
        self.raw(&source, &target, blocks)
    }

    fn left_unitor(&self, x: &Obj<B>) -> Mor<B> {
        let source = self.tensor_objects(&self.unit_object(), x);
        let blocks = (0..x.len())
            .map(|i| ((i, i), self.base.left_unitor(x.component(i))))
            .collect();
        self.raw(&source, x, blocks)
    }

    fn right_unitor(&self, x: &Obj<B>) -> Mor<B> {
        let source = self.tensor_objects(x, &self.unit_object());
        let blocks = (0..x.len())
            .map(|i| ((i, i), self.base.right_unitor(x.component(i))))
            .collect();
        self.raw(&source, x, blocks)
    }

    fn symmetry(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        let source = self.tensor_objects(x, y);
        let target = self.tensor_objects(y, x);
        let (n, m) = (x.len(), y.len());
        let mut blocks = BTreeMap::new();
        for a in 0..n {
            for b in 0..m {
                blocks.insert(
                    (a * m + b, b * n + a),
                    self.base.symmetry(x.component(a), y.component(b)),
                );
            }
        }
        self.raw(&source, &target, blocks)
    }

    fn enumerate_scalars(&self) -> Option<Vec<Mor<B>>> {
        let j = self.unit_object();
        let scalars = self.base.enumerate_scalars()?;
        Some(
            scalars
                .into_iter()
                .map(|s| self.raw(&j, &j, BTreeMap::from([((0, 0), s)])))
                .collect(),
        )
    }
}

impl<B: CompactQuantaloid> CompactQuantaloid for Matr<B> {
    fn dual(&self, x: &Obj<B>) -> Obj<B> {
        MatrObject {
            components: x
                .components
                .iter()
                .map(|(l, o)| (l.clone(), self.base.dual(o)))
                .collect(),
        }
    }

    fn eta(&self, x: &Obj<B>) -> Mor<B> {
        let target = self.tensor_objects(&self.dual(x), x);
        let n = x.len();
        let blocks = (0..n)
            .map(|a| ((0, a * n + a), self.base.eta(x.component(a))))
            .collect();
        self.raw(&self.unit_object(), &target, blocks)
    }

    fn epsilon(&self, x: &Obj<B>) -> Mor<B> {
        let source = self.tensor_objects(x, &self.dual(x));
        let n = x.len();
        let blocks = (0..n)
            .map(|a| ((a * n + a, 0), self.base.epsilon(x.component(a))))
            .collect();
        self.raw(&source, &self.unit_object(), blocks)
    }
}

impl<B: Quantaloid> Biproducts for Matr<B> {
    /// Concatenates the families. A single-component summand keeps its family
    /// label; otherwise components are labelled `(family, component)`.
    fn biproduct(&self, family: &[(Label, Obj<B>)]) -> Result<Biproduct<Obj<B>, Mor<B>>> {
        let mut components = Vec::new();
        let mut offsets = Vec::with_capacity(family.len());
        for (label, x) in family {
            offsets.push(components.len());
            if x.len() == 1 {
                components.push((label.clone(), x.component(0).clone()));
            } else {
                for (l, o) in &x.components {
                    components.push((Label::pair(label, l), o.clone()));
                }
            }
        }
        let object = MatrObject::new(components)?;
        let mut injections = Vec::with_capacity(family.len());
        let mut projections = Vec::with_capacity(family.len());
        for ((_, x), &off) in family.iter().zip(&offsets) {
            let inj = (0..x.len())
                .map(|i| ((i, off + i), self.base.identity(x.component(i))))
                .collect();
            let proj = (0..x.len())
                .map(|i| ((off + i, i), self.base.identity(x.component(i))))
                .collect();
            injections.push(self.raw(x, &object, inj));
            projections.push(self.raw(&object, x, proj));
        }
        Ok(Biproduct {
            object,
            labels: family.iter().map(|(l, _)| l.clone()).collect(),
            summands: family.iter().map(|(_, x)| x.clone()).collect(),
            injections,
            projections,
        })
    }

    fn zero_object(&self) -> Obj<B> {
        MatrObject::zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quantale::{Boolean, QuantaleBase};

    fn rel() -> Matr<QuantaleBase<Boolean>> {
        Matr::new(QuantaleBase::new(Boolean))
    }

    fn set(n: usize) -> Obj<QuantaleBase<Boolean>> {
        MatrObject::new((0..n).map(|i| (Label::Index(i), ())).collect()).unwrap()
    }

    #[test]
    fn relational_composition() {
        let r = rel();
        let (x, y) = (set(2), set(3));
        let f = r.morphism(&x, &y, [((0, 1), true), ((1, 2), true)]).unwrap();
        let g = r.morphism(&y, &x, [((1, 0), true), ((2, 0), true)]).unwrap();
        let gf = r.compose(&g, &f).unwrap();
        assert_eq!(gf, r.morphism(&x, &x, [((0, 0), true), ((1, 0), true)]).unwrap());
        assert!(r.compose(&f, &f).is_err());
    }

    #[test]
    fn biproduct_identities() {
        let r = rel();
        let bp = r
            .biproduct(&[(Label::name("a"), set(2)), (Label::name("b"), set(1))])
            .unwrap();
        assert_eq!(bp.object.len(), 3);
        assert_eq!(bp.object.label(2), &Label::name("b"));
        let mut sum = r.bottom(&bp.object, &bp.object);
        for k in 0..2 {
            let pi = r.compose(&bp.projections[k], &bp.injections[k]).unwrap();
            assert_eq!(pi, r.identity(&bp.summands[k]));
            let ip = r.compose(&bp.injections[k], &bp.projections[k]).unwrap();
            sum = r.join(&sum, &ip).unwrap();
        }
        assert_eq!(sum, r.identity(&bp.object));
    }

    #[test]
    fn snake_identities() {
        let r = rel();
        let x = set(3);
        let id = r.identity(&x);
        let lhs = r
            .chain(&[
                &r.left_unitor(&x),
                &r.tensor(&r.epsilon(&x), &id),
                &r.dagger(&r.associator(&x, &r.dual(&x), &x)),
                &r.tensor(&id, &r.eta(&x)),
                &r.dagger(&r.right_unitor(&x)),
            ])
            .unwrap();
        assert_eq!(lhs, id);
    }
}
