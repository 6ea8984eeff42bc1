//! Names, conames, duals and traces in a compact quantaloid.

use crate::error::{Error, Result};
use crate::quantaloid::{CompactQuantaloid, Quantaloid};

/// `⌜f⌝ = (id_{X*} ⊗ f) ∘ η_X : I → X* ⊗ Y`.
pub fn name<C: CompactQuantaloid>(c: &C, f: &C::Mor) -> Result<C::Mor> {
    let x = c.source(f);
    let lhs = c.tensor(&c.identity(&c.dual(&x)), f);
    c.compose(&lhs, &c.eta(&x))
}

/// `⌞f⌟ = ε_Y ∘ (f ⊗ id_{Y*}) : X ⊗ Y* → I`.
pub fn coname<C: CompactQuantaloid>(c: &C, f: &C::Mor) -> Result<C::Mor> {
    let y = c.target(f);
    let lhs = c.tensor(f, &c.identity(&c.dual(&y)));
    c.compose(&c.epsilon(&y), &lhs)
}

fn expect_type<C: Quantaloid>(c: &C, f: &C::Mor, source: &C::Obj, target: &C::Obj) -> Result<()> {
    if c.source(f) != *source || c.target(f) != *target {
        return Err(Error::ObjectMismatch(format!(
            "expected a morphism {source:?} -> {target:?}"
        )));
    }
    Ok(())
}

/// Inverse of [`name`]: recovers `f: X → Y` from `h: I → X* ⊗ Y`.
pub fn unname<C: CompactQuantaloid>(c: &C, x: &C::Obj, y: &C::Obj, h: &C::Mor) -> Result<C::Mor> {
    let xs = c.dual(x);
    expect_type(c, h, &c.unit_object(), &c.tensor_objects(&xs, y))?;
    c.chain(&[
        &c.left_unitor(y),
        &c.tensor(&c.epsilon(x), &c.identity(y)),
        &c.dagger(&c.associator(x, &xs, y)),
        &c.tensor(&c.identity(x), h),
        &c.dagger(&c.right_unitor(x)),
    ])
}

/// Inverse of [`coname`]: recovers `f: X → Y` from `k: X ⊗ Y* → I`.
pub fn unconame<C: CompactQuantaloid>(c: &C, x: &C::Obj, y: &C::Obj, k: &C::Mor) -> Result<C::Mor> {
    let ys = c.dual(y);
    expect_type(c, k, &c.tensor_objects(x, &ys), &c.unit_object())?;
    c.chain(&[
        &c.left_unitor(y),
        &c.tensor(k, &c.identity(y)),
        &c.dagger(&c.associator(x, &ys, y)),
        &c.tensor(&c.identity(x), &c.eta(y)),
        &c.dagger(&c.right_unitor(x)),
    ])
}

/// The dual morphism `f*: Y* → X*`.
pub fn star<C: CompactQuantaloid>(c: &C, f: &C::Mor) -> Result<C::Mor> {
    let (x, y) = (c.source(f), c.target(f));
    let (xs, ys) = (c.dual(&x), c.dual(&y));
    c.chain(&[
        &c.right_unitor(&xs),
        &c.tensor(&c.identity(&xs), &c.epsilon(&y)),
        &c.associator(&xs, &y, &ys),
        &c.tensor(&c.tensor(&c.identity(&xs), f), &c.identity(&ys)),
        &c.tensor(&c.eta(&x), &c.identity(&ys)),
        &c.dagger(&c.left_unitor(&ys)),
    ])
}

/// `Tr(f) = ε_X ∘ (f ⊗ id_{X*}) ∘ ε_X† : I → I` for an endomorphism `f`.
pub fn trace<C: CompactQuantaloid>(c: &C, f: &C::Mor) -> Result<C::Mor> {
    let x = c.source(f);
    if c.target(f) != x {
        return Err(Error::Precondition("trace needs an endomorphism".into()));
    }
    let eps = c.epsilon(&x);
    c.chain(&[&eps, &c.tensor(f, &c.identity(&c.dual(&x))), &c.dagger(&eps)])
}

pub fn dimension<C: CompactQuantaloid>(c: &C, x: &C::Obj) -> Result<C::Mor> {
    trace(c, &c.identity(x))
}

/// `λ ∘ (ε_X ⊗ id) ∘ α⁻¹ ∘ (id ⊗ η_X) ∘ ρ⁻¹`, which should be `id_X`.
pub fn snake_left<C: CompactQuantaloid>(c: &C, x: &C::Obj) -> Result<C::Mor> {
    let xs = c.dual(x);
    let id = c.identity(x);
    c.chain(&[
        &c.left_unitor(x),
        &c.tensor(&c.epsilon(x), &id),
        &c.dagger(&c.associator(x, &xs, x)),
        &c.tensor(&id, &c.eta(x)),
        &c.dagger(&c.right_unitor(x)),
    ])
}

/// `ρ ∘ (id ⊗ ε_X) ∘ α ∘ (η_X ⊗ id) ∘ λ⁻¹`, which should be `id_{X*}`.
pub fn snake_right<C: CompactQuantaloid>(c: &C, x: &C::Obj) -> Result<C::Mor> {
    let xs = c.dual(x);
    let id = c.identity(&xs);
    c.chain(&[
        &c.right_unitor(&xs),
        &c.tensor(&id, &c.epsilon(x)),
        &c.associator(&xs, x, &xs),
        &c.tensor(&c.eta(x), &id),
        &c.dagger(&c.left_unitor(&xs)),
    ])
}

/// `σ ∘ ε_X†`, which dagger compactness requires to equal `η_X`.
pub fn swapped_counit_dagger<C: CompactQuantaloid>(c: &C, x: &C::Obj) -> Result<C::Mor> {
    let xs = c.dual(x);
    c.compose(&c.symmetry(x, &xs), &c.dagger(&c.epsilon(x)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Label;
    use crate::matr::MatrObject;
    use crate::quantale::{Boolean, QuantaleBase};
    use crate::quantaloid::DaggerQuantaloid;
    use crate::Rel;

    #[test]
    fn name_round_trip_in_rel() {
        let r = Rel::new(QuantaleBase::new(Boolean));
        let x = MatrObject::new(vec![(Label::Index(0), ()), (Label::Index(1), ())]).unwrap();
        let y = MatrObject::new(vec![(Label::name("a"), ())]).unwrap();
        let f = r.morphism(&x, &y, [((1, 0), true)]).unwrap();
        let n = name(&r, &f).unwrap();
        assert_eq!(unname(&r, &x, &y, &n).unwrap(), f);
        let k = coname(&r, &f).unwrap();
        assert_eq!(unconame(&r, &x, &y, &k).unwrap(), f);
        assert_eq!(snake_left(&r, &x).unwrap(), r.identity(&x));
        assert_eq!(snake_right(&r, &x).unwrap(), r.identity(&r.dual(&x)));
        let s = star(&r, &f).unwrap();
        assert_eq!(s, r.dagger(&f));
    }
}
