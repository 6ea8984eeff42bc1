//! Decision procedures for endorelation classes, internal maps, dagger
//! monos/epis and instance-level properties. Failed checks carry a witness.

use serde::Serialize;

use crate::compact::trace;
use crate::error::Result;
use crate::quantaloid::{CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid};

/// The two sides of a violated (in)equality.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness<M> {
    pub law: String,
    pub lhs: M,
    pub rhs: M,
}

pub type Check<M> = std::result::Result<(), Witness<M>>;

fn check_leq<Q: Quantaloid>(q: &Q, law: &str, lhs: Q::Mor, rhs: Q::Mor) -> Result<Check<Q::Mor>> {
    Ok(if q.leq(&lhs, &rhs)? {
        Ok(())
    } else {
        Err(Witness {
            law: law.to_string(),
            lhs,
            rhs,
        })
    })
}

fn check_eq<Q: Quantaloid>(law: &str, lhs: Q::Mor, rhs: Q::Mor) -> Check<Q::Mor> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(Witness {
            law: law.to_string(),
            lhs,
            rhs,
        })
    }
}

/// Flags of an endomorphism. `irreflexive` is only decided with compact data.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct EndoClass {
    pub reflexive: bool,
    pub transitive: bool,
    pub idempotent: bool,
    pub symmetric: bool,
    pub antisymmetric: bool,
    pub preorder: bool,
    pub order: bool,
    pub per: bool,
    pub equivalence: bool,
    pub projection: bool,
    pub irreflexive: Option<bool>,
}

impl EndoClass {
    /// Names of the flags that hold.
    pub fn names(&self) -> Vec<&'static str> {
        let flags = [
            (self.reflexive, "reflexive"),
            (self.transitive, "transitive"),
            (self.idempotent, "idempotent"),
            (self.symmetric, "symmetric"),
            (self.antisymmetric, "antisymmetric"),
            (self.preorder, "preorder"),
            (self.order, "order"),
            (self.per, "PER"),
            (self.equivalence, "equivalence"),
            (self.projection, "projection"),
            (self.irreflexive == Some(true), "irreflexive"),
        ];
        flags.iter().filter(|(b, _)| *b).map(|(_, n)| *n).collect()
    }
}

fn expect_endo<Q: Quantaloid>(q: &Q, r: &Q::Mor) -> Result<Q::Obj> {
    let x = q.source(r);
    if q.target(r) != x {
        return Err(crate::Error::Precondition("expected an endomorphism".into()));
    }
    Ok(x)
}

pub fn endorelation_class<Q: DaggerQuantaloid>(q: &Q, r: &Q::Mor) -> Result<EndoClass> {
    let x = expect_endo(q, r)?;
    let id = q.identity(&x);
    let rr = q.compose(r, r)?;
    let rd = q.dagger(r);
    let reflexive = q.leq(&id, r)?;
    let transitive = q.leq(&rr, r)?;
    let idempotent = rr == *r;
    let symmetric = rd == *r;
    let antisymmetric = q.leq(&q.meet(r, &rd)?, &id)?;
    Ok(EndoClass {
        reflexive,
        transitive,
        idempotent,
        symmetric,
        antisymmetric,
        preorder: reflexive && transitive,
        order: reflexive && transitive && antisymmetric,
        per: symmetric && transitive,
        equivalence: reflexive && transitive && symmetric,
        projection: idempotent && symmetric,
        irreflexive: None,
    })
}

/// As [`endorelation_class`], also deciding irreflexivity `Tr(r) = 0`.
pub fn endorelation_class_compact<C: CompactQuantaloid>(c: &C, r: &C::Mor) -> Result<EndoClass> {
    let mut class = endorelation_class(c, r)?;
    class.irreflexive = Some(is_irreflexive(c, r)?);
    Ok(class)
}

pub fn is_irreflexive<C: CompactQuantaloid>(c: &C, r: &C::Mor) -> Result<bool> {
    Ok(c.is_bottom(&trace(c, r)?))
}

/// `f† ∘ f ≥ id` and `f ∘ f† ≤ id`.
pub fn check_map<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<Check<Q::Mor>> {
    let (x, y) = (q.source(f), q.target(f));
    let fd = q.dagger(f);
    let total = check_leq(q, "id ≤ f†∘f", q.identity(&x), q.compose(&fd, f)?)?;
    if total.is_err() {
        return Ok(total);
    }
    check_leq(q, "f∘f† ≤ id", q.compose(f, &fd)?, q.identity(&y))
}

pub fn is_map<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(check_map(q, f)?.is_ok())
}

pub fn is_dagger_mono<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(q.compose(&q.dagger(f), f)? == q.identity(&q.source(f)))
}

pub fn is_dagger_epi<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(q.compose(f, &q.dagger(f))? == q.identity(&q.target(f)))
}

pub fn is_dagger_iso<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(is_dagger_mono(q, f)? && is_dagger_epi(q, f)?)
}

/// A map with `f† ∘ f = id`.
pub fn is_injective<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(is_map(q, f)? && is_dagger_mono(q, f)?)
}

/// A map with `f ∘ f† = id`.
pub fn is_surjective<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(is_map(q, f)? && is_dagger_epi(q, f)?)
}

pub fn is_bijective<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor) -> Result<bool> {
    Ok(is_map(q, f)? && is_dagger_iso(q, f)?)
}

/// `p = p† = p ∘ p`.
pub fn is_projection<Q: DaggerQuantaloid>(q: &Q, p: &Q::Mor) -> Result<bool> {
    Ok(q.source(p) == q.target(p) && q.dagger(p) == *p && q.compose(p, p)? == *p)
}

/// Whether `g` is a two-sided inverse of `f`.
pub fn is_inverse_pair<Q: Quantaloid>(q: &Q, f: &Q::Mor, g: &Q::Mor) -> Result<bool> {
    if q.source(g) != q.target(f) || q.target(g) != q.source(f) {
        return Ok(false);
    }
    Ok(q.compose(g, f)? == q.identity(&q.source(f)) && q.compose(f, g)? == q.identity(&q.target(f)))
}

/// `s · f = λ_Y ∘ (s ⊗ f) ∘ λ_X⁻¹`.
pub fn scalar_mul<M: MonoidalQuantaloid>(m: &M, s: &M::Mor, f: &M::Mor) -> Result<M::Mor> {
    let i = m.unit_object();
    if m.source(s) != i || m.target(s) != i {
        return Err(crate::Error::Precondition("expected a scalar I -> I".into()));
    }
    let (x, y) = (m.source(f), m.target(f));
    m.chain(&[&m.left_unitor(&y), &m.tensor(s, f), &m.dagger(&m.left_unitor(&x))])
}

/// At least two scalars: `id_I ≠ 0_I`.
pub fn is_nondegenerate<M: MonoidalQuantaloid>(m: &M) -> bool {
    let i = m.unit_object();
    m.identity(&i) != m.bottom(&i, &i)
}

/// `id_I = ⊤_I`.
pub fn is_affine<M: MonoidalQuantaloid>(m: &M) -> bool {
    let i = m.unit_object();
    m.identity(&i) == m.top(&i, &i)
}

/// `Some(true)` iff the instance has exactly the scalars `0_I` and `id_I`;
/// `None` when the scalars cannot be enumerated.
pub fn has_exactly_two_scalars<M: MonoidalQuantaloid>(m: &M) -> Option<bool> {
    m.enumerate_scalars().map(|s| s.len() == 2)
}

/// Checks that maps are discretely ordered, for a parallel pair of maps.
pub fn check_maps_discrete<Q: DaggerQuantaloid>(q: &Q, f: &Q::Mor, g: &Q::Mor) -> Result<Check<Q::Mor>> {
    if is_map(q, f)? && is_map(q, g)? && q.leq(f, g)? {
        return Ok(check_eq::<Q>("f ≤ g for maps implies f = g", f.clone(), g.clone()));
    }
    Ok(Ok(()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Label;
    use crate::matr::MatrObject;
    use crate::quantale::{Boolean, FiniteQuantale, QuantaleBase};
    use crate::{Rel, VRel};

    fn set(n: usize) -> MatrObject<()> {
        MatrObject::new((0..n).map(|i| (Label::Index(i), ())).collect()).unwrap()
    }

    #[test]
    fn identity_class() {
        let r = Rel::new(QuantaleBase::new(Boolean));
        let x = set(2);
        let c = endorelation_class_compact(&r, &r.identity(&x)).unwrap();
        assert_eq!(
            c.names(),
            [
                "reflexive", "transitive", "idempotent", "symmetric", "antisymmetric",
                "preorder", "order", "PER", "equivalence", "projection"
            ]
        );
    }

    #[test]
    fn top_and_zero_classes() {
        let r = Rel::new(QuantaleBase::new(Boolean));
        let x = set(2);
        let top = endorelation_class(&r, &r.top(&x, &x)).unwrap();
        assert!(top.reflexive && top.transitive && top.symmetric && top.equivalence);
        assert!(!top.antisymmetric);
        let zero = endorelation_class_compact(&r, &r.bottom(&x, &x)).unwrap();
        assert!(zero.transitive && zero.symmetric && zero.antisymmetric && zero.per);
        assert!(zero.projection && zero.irreflexive == Some(true) && !zero.reflexive);
        assert!(!is_dagger_mono(&r, &r.bottom(&x, &x)).unwrap());
    }

    #[test]
    fn function_graphs_are_maps() {
        let r = Rel::new(QuantaleBase::new(Boolean));
        let (x, y) = (set(3), set(3));
        let f = r.morphism(&x, &y, [((0, 1), true), ((1, 1), true), ((2, 0), true)]).unwrap();
        assert!(is_map(&r, &f).unwrap());
        assert!(!is_injective(&r, &f).unwrap());
        let not_total = r.morphism(&x, &y, [((0, 1), true)]).unwrap();
        let w = check_map(&r, &not_total).unwrap().unwrap_err();
        assert_eq!(w.law, "id ≤ f†∘f");
    }

    #[test]
    fn scalar_multiplication_in_vrel() {
        let q = FiniteQuantale::chain3_min();
        let v = VRel::new(QuantaleBase::new(q));
        let (x, y) = (set(2), set(2));
        let f = v.morphism(&x, &y, [((0, 0), 2), ((0, 1), 1), ((1, 1), 2)]).unwrap();
        let j = v.unit_object();
        let half = v.morphism(&j, &j, [((0, 0), 1)]).unwrap();
        let expected = v.morphism(&x, &y, [((0, 0), 1), ((0, 1), 1), ((1, 1), 1)]).unwrap();
        assert_eq!(scalar_mul(&v, &half, &f).unwrap(), expected);
        assert_eq!(scalar_mul(&v, &v.identity(&j), &f).unwrap(), f);
        assert!(v.is_bottom(&scalar_mul(&v, &v.bottom(&j, &j), &f).unwrap()));
        assert!(is_nondegenerate(&v) && is_affine(&v));
        let na = VRel::new(QuantaleBase::new(FiniteQuantale::nonaffine3()));
        assert!(!is_affine(&na));
    }
}
