//! The instance contract: quantaloids, daggers, monoidal and compact
//! structure, and finite biproducts.

use std::fmt::Debug;

use crate::error::{Error, Result};
use crate::label::Label;

/// A category enriched in complete lattices, with finite sups computable.
///
/// Homsets carry a decidable order; composition preserves sups in each
/// argument.
pub trait Quantaloid: Send + Sync {
    type Obj: Clone + Debug + PartialEq + Send + Sync;
    type Mor: Clone + Debug + PartialEq + Send + Sync;

    fn source(&self, f: &Self::Mor) -> Self::Obj;
    fn target(&self, f: &Self::Mor) -> Self::Obj;

    /// `g ∘ f`.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor>;
    fn identity(&self, x: &Self::Obj) -> Self::Mor;

    fn bottom(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;
    fn top(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;

    fn join(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;
    fn meet(&self, f: &Self::Mor, g: &Self::Mor) -> Result<Self::Mor>;

    /// `⋁ fs` in `hom(x, y)`; the empty sup is `⊥`.
    fn sup(&self, x: &Self::Obj, y: &Self::Obj, fs: &[Self::Mor]) -> Result<Self::Mor> {
        let mut acc = self.bottom(x, y);
        for f in fs {
            self.check_parallel(&acc, f)?;
            acc = self.join(&acc, f)?;
        }
        Ok(acc)
    }

    /// `f ≤ g` iff `f ∨ g = g`.
    fn leq(&self, f: &Self::Mor, g: &Self::Mor) -> Result<bool> {
        Ok(self.join(f, g)? == *g)
    }

    fn is_bottom(&self, f: &Self::Mor) -> bool {
        *f == self.bottom(&self.source(f), &self.target(f))
    }

    fn check_parallel(&self, f: &Self::Mor, g: &Self::Mor) -> Result<()> {
        if self.source(f) != self.source(g) || self.target(f) != self.target(g) {
            return Err(Error::ObjectMismatch(format!(
                "morphisms are not parallel: {:?} -> {:?} vs {:?} -> {:?}",
                self.source(f),
                self.target(f),
                self.source(g),
                self.target(g)
            )));
        }
        Ok(())
    }

    /// Composite of a chain written in diagrammatic-reverse order:
    /// `chain(&[a, b, c]) = a ∘ b ∘ c`.
    fn chain(&self, fs: &[&Self::Mor]) -> Result<Self::Mor> {
        let (last, rest) = fs
            .split_last()
            .ok_or_else(|| Error::Precondition("empty composite".into()))?;
        let mut acc = (*last).clone();
        for g in rest.iter().rev() {
            acc = self.compose(g, &acc)?;
        }
        Ok(acc)
    }
}

/// A quantaloid with an identity-on-objects involution that is an order
/// isomorphism on homsets.
pub trait DaggerQuantaloid: Quantaloid {
    fn dagger(&self, f: &Self::Mor) -> Self::Mor;
}

/// Dagger symmetric monoidal structure whose tensor preserves sups in each
/// argument. Coherence isomorphisms are unitary, so their inverses are their
/// daggers.
pub trait MonoidalQuantaloid: DaggerQuantaloid {
    fn unit_object(&self) -> Self::Obj;
    fn tensor_objects(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Obj;
    fn tensor(&self, f: &Self::Mor, g: &Self::Mor) -> Self::Mor;

    /// `α: (x ⊗ y) ⊗ z → x ⊗ (y ⊗ z)`.
    fn associator(&self, x: &Self::Obj, y: &Self::Obj, z: &Self::Obj) -> Self::Mor;
    /// `λ: I ⊗ x → x`.
    fn left_unitor(&self, x: &Self::Obj) -> Self::Mor;
    /// `ρ: x ⊗ I → x`.
    fn right_unitor(&self, x: &Self::Obj) -> Self::Mor;
    /// `σ: x ⊗ y → y ⊗ x`.
    fn symmetry(&self, x: &Self::Obj, y: &Self::Obj) -> Self::Mor;

    /// All scalars `I → I`, when the scalar homset is finite and enumerable.
    fn enumerate_scalars(&self) -> Option<Vec<Self::Mor>> {
        None
    }
}

/// Compact closed structure: duals with unit and counit.
pub trait CompactQuantaloid: MonoidalQuantaloid {
    fn dual(&self, x: &Self::Obj) -> Self::Obj;
    /// `η: I → x* ⊗ x`.
    fn eta(&self, x: &Self::Obj) -> Self::Mor;
    /// `ε: x ⊗ x* → I`.
    fn epsilon(&self, x: &Self::Obj) -> Self::Mor;
}

/// A chosen biproduct of a labelled family with its injections and projections.
#[derive(Clone, Debug, PartialEq)]
pub struct Biproduct<O, M> {
    pub object: O,
    pub labels: Vec<Label>,
    pub summands: Vec<O>,
    pub injections: Vec<M>,
    pub projections: Vec<M>,
}

impl<O, M> Biproduct<O, M> {
    pub fn position(&self, label: &Label) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .ok_or_else(|| Error::Index(format!("no summand labelled {label}")))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Finite biproducts of labelled families (the empty family gives the zero object).
pub trait Biproducts: Quantaloid {
    fn biproduct(&self, family: &[(Label, Self::Obj)]) -> Result<Biproduct<Self::Obj, Self::Mor>>;

    fn zero_object(&self) -> Self::Obj {
        self.biproduct(&[])
            .expect("empty biproduct always exists")
            .object
    }
}

/// An orthocomplementation on homsets, `¬r = ⋁{s : Tr(r ∘ s†) = 0}`.
///
/// Implemented only by instances known to have dagger kernels with `⊤`
/// effects zero-monic and zero-monic PERs equivalences (Rel and qRel).
pub trait Orthocomplemented: Quantaloid {
    fn negate(&self, r: &Self::Mor) -> Result<Self::Mor>;
}

/// The full structure shared by Rel, V-Rel and qRel.
pub trait DaggerCompactBiproducts: CompactQuantaloid + Biproducts {}

impl<Q: CompactQuantaloid + Biproducts> DaggerCompactBiproducts for Q {}
