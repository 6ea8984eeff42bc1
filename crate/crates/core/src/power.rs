//! Power objects from a truth object: the counit `∋_X` solved from its coname
//! and the transpose `v ↦ f_v` built through `⌞v⌟ ↦ k_v ↦ f_v`.
//!
//! Maps are plain functions between finite sets and relations live in
//! `Matr` over a one-object quantale base, which covers Rel (`V = 2`) and
//! V-Rel. For qRel only the truth-value bijection is available.

use crate::compact::{coname, unconame};
use crate::error::{Error, Result};
use crate::finrel::{matr_to_set, set_to_matr, FiniteSet, Function};
use crate::label::Label;
use crate::matr::{Matr, MatrMorphism, MatrObject};
use crate::order::{omega_forward, omega_inverse, OmegaOf};
use crate::predicates::is_map;
use crate::quantale::{Quantale, QuantaleBase};
use crate::quantaloid::{Biproducts, CompactQuantaloid, MonoidalQuantaloid, Orthocomplemented, Quantaloid};

/// Largest hom count searched exhaustively for uniqueness claims.
pub const SEARCH_BUDGET: usize = 1 << 16;

type Obj = MatrObject<()>;

/// The internal hom `[A, B]` of finite sets with its evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct FunctionSpace {
    pub domain: FiniteSet,
    pub codomain: FiniteSet,
    /// `[A, B]`, each function labelled by the tuple of its values.
    pub object: FiniteSet,
    pub tables: Vec<Vec<usize>>,
    /// `Eval : [A, B] × A → B`.
    pub eval: Function,
}

pub fn function_space(a: &FiniteSet, b: &FiniteSet) -> FunctionSpace {
    let tables: Vec<Vec<usize>> = Function::all(a, b).iter().map(|f| f.table().to_vec()).collect();
    let object = FiniteSet::new(
        tables
            .iter()
            .map(|t| Label::Tuple(t.iter().map(|&j| b.label(j).clone()).collect()))
            .collect(),
    )
    .expect("distinct functions");
    let map = tables
        .iter()
        .flat_map(|t| t.iter().copied())
        .collect();
    let eval = Function::new(&object.product(a), b, map).expect("in range");
    FunctionSpace {
        domain: a.clone(),
        codomain: b.clone(),
        object,
        tables,
        eval,
    }
}

impl FunctionSpace {
    /// The unique `f : C → [A, B]` with `Eval ∘ (f × id_A) = g`.
    pub fn curry(&self, c: &FiniteSet, g: &Function) -> Result<Function> {
        if *g.source() != c.product(&self.domain) || *g.target() != self.codomain {
            return Err(Error::ObjectMismatch("curry needs a function C × A → B".into()));
        }
        let n = self.domain.len();
        let map = (0..c.len())
            .map(|k| {
                let row = &g.table()[k * n..(k + 1) * n];
                self.tables
                    .iter()
                    .position(|t| t == row)
                    .ok_or_else(|| Error::Precondition("row is not a function".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Function::new(c, &self.object, map)
    }

    /// `f × id_A` followed by `Eval`.
    pub fn uncurry(&self, f: &Function) -> Result<Function> {
        let c = f.source();
        let n = self.domain.len();
        let map = (0..c.len() * n).map(|k| self.tables[f.apply(k / n)][k % n]).collect();
        Function::new(&c.product(&self.domain), &self.codomain, map)
    }
}

/// Sets embedded in `V`-valued relations with truth object `Ω = V` and
/// `ω(v, *) = v`. For `V = 2` this is `Ω = I ⊕ I` with `ω = p₁`.
#[derive(Clone, Debug)]
pub struct SetPower<Q: Quantale> {
    relations: Matr<QuantaleBase<Q>>,
    values: Vec<Q::Elem>,
    omega: FiniteSet,
}

pub type RelMor<Q> = MatrMorphism<(), <Q as Quantale>::Elem>;

impl<Q: Quantale> SetPower<Q> {
    pub fn new(q: Q) -> Result<Self> {
        let values = q.elements();
        if values.len() < 2 {
            return Err(Error::Precondition("power objects need a nontrivial quantale".into()));
        }
        let omega = FiniteSet::new(values.iter().map(|v| Label::from(q.element_name(v).as_str())).collect())?;
        Ok(SetPower {
            relations: Matr::new(QuantaleBase::new(q)),
            values,
            omega,
        })
    }

    pub fn relations(&self) -> &Matr<QuantaleBase<Q>> {
        &self.relations
    }

    fn quantale(&self) -> &Q {
        self.relations.base().quantale()
    }

    pub fn omega(&self) -> &FiniteSet {
        &self.omega
    }

    /// `ω : E(Ω) → I`.
    pub fn omega_effect(&self) -> RelMor<Q> {
        let r = &self.relations;
        let blocks = self.values.iter().cloned().enumerate().map(|(k, v)| ((k, 0), v));
        r.morphism(&self.embed_object(&self.omega), &r.unit_object(), blocks)
            .expect("typed blocks")
    }

    pub fn embed_object(&self, a: &FiniteSet) -> Obj {
        set_to_matr(a)
    }

    /// `E(f)`: the graph of `f` with the unit on each edge.
    pub fn embed(&self, f: &Function) -> RelMor<Q> {
        let e = self.quantale().unit();
        let blocks = (0..f.source().len()).map(|i| ((i, f.apply(i)), e.clone()));
        self.relations
            .morphism(&self.embed_object(f.source()), &self.embed_object(f.target()), blocks)
            .expect("typed blocks")
    }

    /// `f ↦ ω ∘ E(f)`.
    pub fn forward(&self, f: &Function) -> Result<RelMor<Q>> {
        if *f.target() != self.omega {
            return Err(Error::ObjectMismatch("expected a function into Ω".into()));
        }
        self.relations.compose(&self.omega_effect(), &self.embed(f))
    }

    /// Inverse of [`SetPower::forward`]: `a ↦ r(a, *)`.
    pub fn classify(&self, a: &FiniteSet, r: &RelMor<Q>) -> Result<Function> {
        let rel = &self.relations;
        if *r.source() != self.embed_object(a) || *r.target() != rel.unit_object() {
            return Err(Error::ObjectMismatch("expected an effect E(A) → I".into()));
        }
        let map = (0..a.len())
            .map(|i| {
                let v = rel.block(r, i, 0);
                self.values.iter().position(|w| *w == v).expect("values are exhaustive")
            })
            .collect();
        Function::new(a, &self.omega, map)
    }
}

/// `P(X) = [X*, Ω]` with the counit `∋_X : E(P(X)) → X`.
#[derive(Clone, Debug)]
pub struct PowerObject<M> {
    pub base: Obj,
    pub space: FunctionSpace,
    pub counit: M,
}

impl<M> PowerObject<M> {
    pub fn set(&self) -> &FiniteSet {
        &self.space.object
    }
}

/// Solves `ω ∘ E(Eval) = ⌞∋_X⌟` for `∋_X`.
pub fn counit<Q: Quantale>(ctx: &SetPower<Q>, x: &Obj) -> Result<PowerObject<RelMor<Q>>> {
    let r = ctx.relations();
    let xs = matr_to_set(&r.dual(x));
    let space = function_space(&xs, ctx.omega());
    let named = r.compose(&ctx.omega_effect(), &ctx.embed(&space.eval))?;
    let p = ctx.embed_object(&space.object);
    let counit = unconame(r, &p, x, &named)?;
    Ok(PowerObject {
        base: x.clone(),
        space,
        counit,
    })
}

/// `f_v : A → P(X)` for `v : E(A) → X`, via `k_v` with `ω ∘ E(k_v) = ⌞v⌟`.
pub fn transpose<Q: Quantale>(ctx: &SetPower<Q>, pw: &PowerObject<RelMor<Q>>, v: &RelMor<Q>) -> Result<Function> {
    let r = ctx.relations();
    if *v.target() != pw.base {
        return Err(Error::ObjectMismatch("relation does not land in X".into()));
    }
    let a = matr_to_set(v.source());
    let k = coname(r, v)?;
    let kv = ctx.classify(&a.product(&pw.space.domain), &k)?;
    pw.space.curry(&a, &kv)
}

/// `∋_X ∘ E(f)`.
pub fn untranspose<Q: Quantale>(ctx: &SetPower<Q>, pw: &PowerObject<RelMor<Q>>, f: &Function) -> Result<RelMor<Q>> {
    ctx.relations().compose(&pw.counit, &ctx.embed(f))
}

/// All functions `A → P(X)` whose image under `∋_X ∘ E(-)` is `v`, found by
/// search. Errors when the hom set exceeds [`SEARCH_BUDGET`].
pub fn transposes_by_search<Q: Quantale>(
    ctx: &SetPower<Q>,
    pw: &PowerObject<RelMor<Q>>,
    v: &RelMor<Q>,
) -> Result<Vec<Function>> {
    let a = matr_to_set(v.source());
    let count = (pw.set().len() as f64).powi(a.len() as i32);
    if count > SEARCH_BUDGET as f64 {
        return Err(Error::Unsupported(format!("{count} candidates exceed the search budget")));
    }
    let mut out = Vec::new();
    for f in Function::all(&a, pw.set()) {
        if untranspose(ctx, pw, &f)? == *v {
            out.push(f);
        }
    }
    Ok(out)
}

/// `P(g) : P(X) → P(Y)` for a relation `g : X → Y`, the transpose of `g ∘ ∋_X`.
pub fn power_on_morphism<Q: Quantale>(
    ctx: &SetPower<Q>,
    px: &PowerObject<RelMor<Q>>,
    py: &PowerObject<RelMor<Q>>,
    g: &RelMor<Q>,
) -> Result<Function> {
    transpose(ctx, py, &ctx.relations().compose(g, &px.counit)?)
}

/// One effect `r : X → I` pushed through `r ↦ ⟨¬r, r⟩ ↦ p₁ ∘ -`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaRoundTrip {
    /// `⟨¬r, r⟩` is a map.
    pub is_map: bool,
    /// `p₁ ∘ ⟨¬r, r⟩ = r`.
    pub recovers: bool,
    /// `p₀ ∘ f = ¬(p₁ ∘ f)`.
    pub complement: bool,
}

impl OmegaRoundTrip {
    pub fn holds(&self) -> bool {
        self.is_map && self.recovers && self.complement
    }
}

pub fn omega_round_trip<C>(c: &C, omega: &OmegaOf<C>, r: &C::Mor) -> Result<OmegaRoundTrip>
where
    C: Biproducts + MonoidalQuantaloid + Orthocomplemented,
{
    let f = omega_inverse(c, omega, r)?;
    Ok(OmegaRoundTrip {
        is_map: is_map(c, &f)?,
        recovers: omega_forward(c, omega, &f)? == *r,
        complement: c.compose(omega.p0(), &f)? == c.negate(r)?,
    })
}

/// Map side of the bijection: `f ↦ p₁ ∘ f ↦ ⟨¬(p₁∘f), p₁∘f⟩` returns `f`.
pub fn omega_map_round_trip<C>(c: &C, omega: &OmegaOf<C>, f: &C::Mor) -> Result<bool>
where
    C: Biproducts + MonoidalQuantaloid + Orthocomplemented,
{
    if !is_map(c, f)? {
        return Err(Error::Precondition("not a map".into()));
    }
    Ok(omega_inverse(c, omega, &omega_forward(c, omega, f)?)? == *f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finrel::{powerset_adjoint, relation_to_matr, BoolRelation};
    use crate::order::omega_order;
    use crate::qrel::{atom, qrel};
    use crate::quantale::{Boolean, FiniteQuantale};
    use crate::GaussianRational;

    #[test]
    fn rel_counit_is_membership() {
        let ctx = SetPower::new(Boolean).unwrap();
        let x = FiniteSet::from_names(&["a", "b"]);
        let pw = counit(&ctx, &set_to_matr(&x)).unwrap();
        let ps = powerset_adjoint(&x);
        assert_eq!(pw.set().len(), 4);
        for (s, table) in pw.space.tables.iter().enumerate() {
            let members: Vec<usize> = (0..x.len()).filter(|&i| table[i] == 1).collect();
            let t = ps.index_of(&members);
            for i in 0..x.len() {
                assert_eq!(pw.counit.block(s, i).is_some(), ps.ni.get(t, i));
            }
        }
    }

    #[test]
    fn rel_transpose_is_unique() {
        let ctx = SetPower::new(Boolean).unwrap();
        let (a, x) = (FiniteSet::indexed(2), FiniteSet::indexed(2));
        let pw = counit(&ctx, &set_to_matr(&x)).unwrap();
        for v in BoolRelation::all(&a, &x) {
            let v = relation_to_matr(&v);
            let f = transpose(&ctx, &pw, &v).unwrap();
            assert_eq!(untranspose(&ctx, &pw, &f).unwrap(), v);
            assert_eq!(transposes_by_search(&ctx, &pw, &v).unwrap(), vec![f]);
        }
    }

    #[test]
    fn vrel_singleton_transpose() {
        let q = FiniteQuantale::chain3_min();
        let ctx = SetPower::new(q.clone()).unwrap();
        let one = set_to_matr(&FiniteSet::singleton());
        let pw = counit(&ctx, &one).unwrap();
        for v in 0..3 {
            let r = ctx.relations().morphism(&one, &one, [((0, 0), v)]).unwrap();
            let f = transpose(&ctx, &pw, &r).unwrap();
            assert_eq!(pw.space.tables[f.apply(0)], vec![v]);
        }
    }

    #[test]
    fn qrel_omega_effects() {
        let q = qrel::<GaussianRational>();
        let omega = omega_order(&q).unwrap();
        let x = atom("x", 2);
        let one = q.unit_object();
        for r in [q.top(&x, &one), q.bottom(&x, &one)] {
            assert!(omega_round_trip(&q, &omega, &r).unwrap().holds());
        }
    }
}
