//! Internal preorders: monotone maps and relations, the diamond functors,
//! tensors, biproducts and compact structure of monotone relations, and the
//! ordered truth object `Ω`.

use crate::biproduct::{quote_morphism, quote_object, tuple};
use crate::compact::star;
use crate::error::{Error, Result};
use crate::finrel::{BoolRelation, FiniteSet};
use crate::label::Label;
use crate::predicates::{is_affine, is_bijective, is_map};
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Orthocomplemented,
    Quantaloid,
};

/// An object with a reflexive, transitive endomorphism `≼`.
#[derive(Clone, Debug, PartialEq)]
pub struct Preordered<O, M> {
    pub object: O,
    pub le: M,
}

pub type PreorderedOf<Q> = Preordered<<Q as Quantaloid>::Obj, <Q as Quantaloid>::Mor>;

/// Validates `id ≤ ≼` and `≼ ∘ ≼ ≤ ≼`.
pub fn make_preordered<Q: Quantaloid>(q: &Q, x: &Q::Obj, le: &Q::Mor) -> Result<PreorderedOf<Q>> {
    if q.source(le) != *x || q.target(le) != *x {
        return Err(Error::ObjectMismatch("order is not an endomorphism of the object".into()));
    }
    if !q.leq(&q.identity(x), le)? {
        return Err(Error::Precondition("relation is not reflexive".into()));
    }
    if !q.leq(&q.compose(le, le)?, le)? {
        return Err(Error::Precondition("relation is not transitive".into()));
    }
    Ok(Preordered {
        object: x.clone(),
        le: le.clone(),
    })
}

/// The flat order `id_X`.
pub fn flat<Q: Quantaloid>(q: &Q, x: &Q::Obj) -> PreorderedOf<Q> {
    Preordered {
        object: x.clone(),
        le: q.identity(x),
    }
}

/// `≽ = ≼†`.
pub fn ge<Q: DaggerQuantaloid>(q: &Q, p: &PreorderedOf<Q>) -> Q::Mor {
    q.dagger(&p.le)
}

/// `(X, ≽)`.
pub fn opposite<Q: DaggerQuantaloid>(q: &Q, p: &PreorderedOf<Q>) -> Result<PreorderedOf<Q>> {
    make_preordered(q, &p.object, &ge(q, p))
}

/// `(X*, ≼*)`.
pub fn dual<C: CompactQuantaloid>(c: &C, p: &PreorderedOf<C>) -> Result<PreorderedOf<C>> {
    make_preordered(c, &c.dual(&p.object), &star(c, &p.le)?)
}

fn expect_between<Q: Quantaloid>(q: &Q, f: &Q::Mor, p: &PreorderedOf<Q>, r: &PreorderedOf<Q>) -> Result<()> {
    if q.source(f) != p.object || q.target(f) != r.object {
        return Err(Error::ObjectMismatch("morphism does not run between the preordered objects".into()));
    }
    Ok(())
}

/// The three equivalent monotonicity conditions for a map `f: X → Y`:
/// `f∘≼_X ≤ ≼_Y∘f`, `f∘≼_X∘f† ≤ ≼_Y` and `≼_X ≤ f†∘≼_Y∘f`.
pub fn monotone_map_conditions<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<[bool; 3]> {
    expect_between(q, f, p, r)?;
    if !is_map(q, f)? {
        return Err(Error::Precondition("not a map".into()));
    }
    let fd = q.dagger(f);
    let c1 = q.leq(&q.compose(f, &p.le)?, &q.compose(&r.le, f)?)?;
    let c2 = q.leq(&q.chain(&[f, &p.le, &fd])?, &r.le)?;
    let c3 = q.leq(&p.le, &q.chain(&[&fd, &r.le, f])?)?;
    Ok([c1, c2, c3])
}

/// Monotonicity of a map; errors if the three conditions disagree.
pub fn is_monotone_map<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<bool> {
    let c = monotone_map_conditions(q, f, p, r)?;
    if c[0] != c[1] || c[1] != c[2] {
        return Err(Error::LawViolation(format!("monotonicity conditions disagree: {c:?}")));
    }
    Ok(c[0])
}

/// `≼_X = f†∘≼_Y∘f`.
pub fn is_order_embedding<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<bool> {
    expect_between(q, f, p, r)?;
    Ok(is_map(q, f)? && p.le == q.chain(&[&q.dagger(f), &r.le, f])?)
}

/// Order isomorphism by definition: `f` and the candidate inverse `g` are
/// monotone maps with `g∘f = id` and `f∘g = id`.
pub fn is_order_isomorphism_with<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    g: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<bool> {
    expect_between(q, f, p, r)?;
    expect_between(q, g, r, p)?;
    if q.compose(g, f)? != q.identity(&p.object) || q.compose(f, g)? != q.identity(&r.object) {
        return Ok(false);
    }
    if !is_map(q, f)? || !is_map(q, g)? {
        return Ok(false);
    }
    Ok(is_monotone_map(q, f, p, r)? && is_monotone_map(q, g, r, p)?)
}

/// Order isomorphism as a bijective map with `f∘≼_X = ≼_Y∘f`.
pub fn is_order_isomorphism<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<bool> {
    expect_between(q, f, p, r)?;
    Ok(is_map(q, f)? && is_bijective(q, f)? && q.compose(f, &p.le)? == q.compose(&r.le, f)?)
}

/// Whether `v` is a monotone relation, by `≽_Y∘v = v = v∘≽_X`; errors if the
/// inequality form `≽_Y∘v ≤ v`, `v∘≽_X ≤ v` disagrees.
pub fn is_monotone_relation<Q: DaggerQuantaloid>(
    q: &Q,
    v: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<bool> {
    expect_between(q, v, p, r)?;
    let left = q.compose(&ge(q, r), v)?;
    let right = q.compose(v, &ge(q, p))?;
    let equal = left == *v && right == *v;
    let below = q.leq(&left, v)? && q.leq(&right, v)?;
    if equal != below {
        return Err(Error::LawViolation("monotone relation forms disagree".into()));
    }
    Ok(equal)
}

fn expect_monotone<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor, p: &PreorderedOf<Q>, r: &PreorderedOf<Q>) -> Result<()> {
    if !is_monotone_map(q, f, p, r)? {
        return Err(Error::Precondition("map is not monotone".into()));
    }
    Ok(())
}

/// `f_◇ = ≽_Y ∘ f`.
pub fn diamond_lower<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<Q::Mor> {
    expect_monotone(q, f, p, r)?;
    q.compose(&ge(q, r), f)
}

/// `f^◇ = f† ∘ ≽_Y`.
pub fn diamond_upper<Q: DaggerQuantaloid>(
    q: &Q,
    f: &Q::Mor,
    p: &PreorderedOf<Q>,
    r: &PreorderedOf<Q>,
) -> Result<Q::Mor> {
    expect_monotone(q, f, p, r)?;
    q.compose(&q.dagger(f), &ge(q, r))
}

/// `(X ⊗ Y, ≼_X ⊗ ≼_Y)`.
pub fn preorder_tensor<M: MonoidalQuantaloid>(
    m: &M,
    p: &PreorderedOf<M>,
    r: &PreorderedOf<M>,
) -> Result<PreorderedOf<M>> {
    make_preordered(m, &m.tensor_objects(&p.object, &r.object), &m.tensor(&p.le, &r.le))
}

/// A biproduct of preordered objects with the monotone-relation injections
/// `≽_X ∘ i_β` and projections `≽_β ∘ p_β`.
#[derive(Clone, Debug)]
pub struct MonRelBiproduct<O, M> {
    pub object: Preordered<O, M>,
    pub underlying: Biproduct<O, M>,
    pub injections: Vec<M>,
    pub projections: Vec<M>,
}

pub fn monrel_biproduct<C: Biproducts + DaggerQuantaloid>(
    c: &C,
    family: &[(Label, PreorderedOf<C>)],
) -> Result<MonRelBiproduct<C::Obj, C::Mor>> {
    let objects: Vec<_> = family.iter().map(|(l, p)| (l.clone(), p.object.clone())).collect();
    let bp = c.biproduct(&objects)?;
    let terms = family
        .iter()
        .enumerate()
        .map(|(k, (_, p))| c.chain(&[&bp.injections[k], &p.le, &bp.projections[k]]))
        .collect::<Result<Vec<_>>>()?;
    let le = c.sup(&bp.object, &bp.object, &terms)?;
    let object = make_preordered(c, &bp.object, &le)?;
    let ge_x = ge(c, &object);
    let mut injections = Vec::with_capacity(family.len());
    let mut projections = Vec::with_capacity(family.len());
    for (k, (_, p)) in family.iter().enumerate() {
        injections.push(c.compose(&ge_x, &bp.injections[k])?);
        projections.push(c.compose(&ge(c, p), &bp.projections[k])?);
    }
    Ok(MonRelBiproduct {
        object,
        underlying: bp,
        injections,
        projections,
    })
}

/// Unit and counit of a preordered object in monotone relations:
/// `η = (≽* ⊗ ≽) ∘ η_X` and `ε = ε_X ∘ (≽ ⊗ ≽*)`, with the dual `(X*, ≼*)`.
#[derive(Clone, Debug)]
pub struct MonRelCompact<O, M> {
    pub dual: Preordered<O, M>,
    pub eta: M,
    pub epsilon: M,
}

pub fn monrel_compact<C: CompactQuantaloid>(c: &C, p: &PreorderedOf<C>) -> Result<MonRelCompact<C::Obj, C::Mor>> {
    let x = &p.object;
    let g = ge(c, p);
    let gs = star(c, &g)?;
    let eta = c.compose(&c.tensor(&gs, &g), &c.eta(x))?;
    let epsilon = c.compose(&c.epsilon(x), &c.tensor(&g, &gs))?;
    Ok(MonRelCompact {
        dual: dual(c, p)?,
        eta,
        epsilon,
    })
}

/// The first snake composite in monotone relations,
/// `λ_◇ ∘ (ε ⊗ ≽) ∘ (α_◇)⁻¹ ∘ (≽ ⊗ η) ∘ (ρ_◇)⁻¹`; it should equal `≽`.
pub fn monrel_snake_left<C: CompactQuantaloid>(c: &C, p: &PreorderedOf<C>) -> Result<C::Mor> {
    let x = &p.object;
    let xs = c.dual(x);
    let i = c.unit_object();
    let g = ge(c, p);
    let gs = star(c, &g)?;
    let k = monrel_compact(c, p)?;
    let lambda = c.compose(&g, &c.left_unitor(x))?;
    let alpha_inv = c.compose(
        &c.tensor(&c.tensor(&g, &gs), &g),
        &c.dagger(&c.associator(x, &xs, x)),
    )?;
    let rho_inv = c.compose(&c.tensor(&g, &c.identity(&i)), &c.dagger(&c.right_unitor(x)))?;
    c.chain(&[
        &lambda,
        &c.tensor(&k.epsilon, &g),
        &alpha_inv,
        &c.tensor(&g, &k.eta),
        &rho_inv,
    ])
}

/// The second snake composite
/// `(ρ_{X*})_◇ ∘ (≽* ⊗ ε) ∘ α_◇ ∘ (η ⊗ ≽*) ∘ (λ_{X*})_◇⁻¹`; it should equal `≽*`.
pub fn monrel_snake_right<C: CompactQuantaloid>(c: &C, p: &PreorderedOf<C>) -> Result<C::Mor> {
    let x = &p.object;
    let xs = c.dual(x);
    let i = c.unit_object();
    let g = ge(c, p);
    let gs = star(c, &g)?;
    let k = monrel_compact(c, p)?;
    let rho = c.compose(&gs, &c.right_unitor(&xs))?;
    let alpha = c.compose(&c.tensor(&gs, &c.tensor(&g, &gs)), &c.associator(&xs, x, &xs))?;
    let lambda_inv = c.compose(&c.tensor(&c.identity(&i), &gs), &c.dagger(&c.left_unitor(&xs)))?;
    c.chain(&[
        &rho,
        &c.tensor(&gs, &k.epsilon),
        &alpha,
        &c.tensor(&k.eta, &gs),
        &lambda_inv,
    ])
}

/// The ordered truth object `Ω = `2` with `≼_Ω = `⊑` where `0 ⊑ 1`.
#[derive(Clone, Debug)]
pub struct Omega<O, M> {
    pub two: Biproduct<O, M>,
    pub order: Preordered<O, M>,
}

impl<O: Clone, M: Clone> Omega<O, M> {
    pub fn object(&self) -> &O {
        &self.two.object
    }

    pub fn p0(&self) -> &M {
        &self.two.projections[0]
    }

    pub fn p1(&self) -> &M {
        &self.two.projections[1]
    }
}

pub type OmegaOf<C> = Omega<<C as Quantaloid>::Obj, <C as Quantaloid>::Mor>;

/// The two-element chain `0 ⊑ 1` as a plain relation.
pub fn two_chain() -> (FiniteSet, BoolRelation) {
    let two = FiniteSet::indexed(2);
    let le = BoolRelation::from_pairs(&two, &two, &[(0, 0), (0, 1), (1, 1)]).expect("in range");
    (two, le)
}

pub fn omega_order<C: Biproducts + MonoidalQuantaloid>(c: &C) -> Result<OmegaOf<C>> {
    if !is_affine(c) {
        return Err(Error::Precondition("Ω-order needs an affine instance".into()));
    }
    let (two, le) = two_chain();
    let bp = quote_object(c, &two)?;
    let le = quote_morphism(c, &le)?;
    let order = make_preordered(c, &bp.object, &le)?;
    Ok(Omega { two: bp, order })
}

/// `p₀∘≼ = p₀`, `p₁∘≼ = ⊤`, `p₁∘≽ = p₁`, `p₀∘≽ = ⊤`, in that order.
pub fn eval_identities<C: Biproducts + MonoidalQuantaloid>(c: &C, omega: &OmegaOf<C>) -> Result<[bool; 4]> {
    let le = &omega.order.le;
    let ge = c.dagger(le);
    let top = c.top(omega.object(), &c.unit_object());
    Ok([
        c.compose(omega.p0(), le)? == *omega.p0(),
        c.compose(omega.p1(), le)? == top,
        c.compose(omega.p1(), &ge)? == *omega.p1(),
        c.compose(omega.p0(), &ge)? == top,
    ])
}

/// `f ↦ p₁ ∘ f`.
pub fn omega_forward<C: Biproducts>(c: &C, omega: &OmegaOf<C>, f: &C::Mor) -> Result<C::Mor> {
    c.compose(omega.p1(), f)
}

/// `r ↦ ⟨¬r, r⟩ : X → Ω`.
pub fn omega_inverse<C: Biproducts + Orthocomplemented>(
    c: &C,
    omega: &OmegaOf<C>,
    r: &C::Mor,
) -> Result<C::Mor> {
    let x = c.source(r);
    tuple(c, &x, &omega.two, &[c.negate(r)?, r.clone()])
}

/// Outcome of exercising `PreOrd((X,≼), Ω) ≅ MonRel((X,≼), (I, id))` on
/// enumerated candidates.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DownsetBijection {
    /// Candidates `X → Ω` that are monotone maps.
    pub monotone_maps: usize,
    /// Candidates `X → I` that are monotone relations.
    pub monotone_relations: usize,
    /// Every forward image is a monotone relation and maps back to its source.
    pub forward_round_trips: bool,
    /// Every inverse image is a monotone map and maps forward to its source.
    pub inverse_round_trips: bool,
}

impl DownsetBijection {
    pub fn holds(&self) -> bool {
        self.forward_round_trips && self.inverse_round_trips && self.monotone_maps == self.monotone_relations
    }
}

/// Runs the bijection on candidate maps `X → Ω` and candidate effects `X → I`.
/// With exhaustive candidates the counts are the two cardinalities.
pub fn downset_bijection<C>(
    c: &C,
    omega: &OmegaOf<C>,
    p: &PreorderedOf<C>,
    map_candidates: &[C::Mor],
    effect_candidates: &[C::Mor],
) -> Result<DownsetBijection>
where
    C: Biproducts + MonoidalQuantaloid + Orthocomplemented,
{
    let unit = flat(c, &c.unit_object());
    let mut out = DownsetBijection {
        forward_round_trips: true,
        inverse_round_trips: true,
        ..Default::default()
    };
    for f in map_candidates {
        if !is_map(c, f)? || !is_monotone_map(c, f, p, &omega.order)? {
            continue;
        }
        out.monotone_maps += 1;
        let v = omega_forward(c, omega, f)?;
        let back = omega_inverse(c, omega, &v)?;
        if !is_monotone_relation(c, &v, p, &unit)? || back != *f {
            out.forward_round_trips = false;
        }
    }
    for v in effect_candidates {
        if !is_monotone_relation(c, v, p, &unit)? {
            continue;
        }
        out.monotone_relations += 1;
        let f = omega_inverse(c, omega, v)?;
        let ok = is_map(c, &f)? && is_monotone_map(c, &f, p, &omega.order)? && omega_forward(c, omega, &f)? == *v;
        if !ok {
            out.inverse_round_trips = false;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finrel::{relation_to_matr, rel_instance};
    use crate::qrel::{atom, qrel};
    use crate::GaussianRational;

    fn all_rel(a: &FiniteSet, b: &FiniteSet) -> Vec<crate::matr::Mor<crate::QuantaleBase<crate::Boolean>>> {
        BoolRelation::all(a, b)
            .iter()
            .map(relation_to_matr)
            .collect()
    }

    #[test]
    fn chain_in_rel() {
        let r = rel_instance();
        let omega = omega_order(&r).unwrap();
        assert_eq!(eval_identities(&r, &omega).unwrap(), [true; 4]);
        let op = opposite(&r, &omega.order).unwrap();
        assert_eq!(opposite(&r, &op).unwrap(), omega.order);
        let (_, le) = two_chain();
        assert_eq!(op.le, relation_to_matr(&crate::finrel::FinRel.dagger(&le)));
    }

    #[test]
    fn downsets_of_chain() {
        let r = rel_instance();
        let omega = omega_order(&r).unwrap();
        let two = FiniteSet::indexed(2);
        let b = downset_bijection(&r, &omega, &omega.order, &all_rel(&two, &two), &all_rel(&two, &FiniteSet::singleton())).unwrap();
        assert!(b.holds());
        assert_eq!(b.monotone_maps, 3);
    }

    #[test]
    fn monrel_snake_in_qrel() {
        let q = qrel::<GaussianRational>();
        let omega = omega_order(&q).unwrap();
        assert_eq!(eval_identities(&q, &omega).unwrap(), [true; 4]);
        let p = &omega.order;
        assert_eq!(monrel_snake_left(&q, p).unwrap(), ge(&q, p));
        let d = monrel_compact(&q, p).unwrap();
        assert_eq!(monrel_snake_right(&q, p).unwrap(), ge(&q, &d.dual));
        let x = atom("x", 2);
        let fl = flat(&q, &x);
        assert_eq!(monrel_snake_left(&q, &fl).unwrap(), q.identity(&x));
    }
}
