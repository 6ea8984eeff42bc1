//! Deliberately broken instances. The suites must reject each of them with a
//! counterexample.

use crate::error::Result;
use crate::label::Label;
use crate::matr::{Matr, Mor, Obj};
use crate::quantale::FiniteQuantale;
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid,
};

/// A matrix quantaloid whose unit `η_X` loses its first diagonal block.
/// Everything else is delegated unchanged.
#[derive(Clone, Debug)]
pub struct DropEta<B>(pub Matr<B>);

impl<B: Quantaloid> Quantaloid for DropEta<B> {
    type Obj = Obj<B>;
    type Mor = Mor<B>;

    fn source(&self, f: &Mor<B>) -> Obj<B> {
        self.0.source(f)
    }
    fn target(&self, f: &Mor<B>) -> Obj<B> {
        self.0.target(f)
    }
    fn compose(&self, g: &Mor<B>, f: &Mor<B>) -> Result<Mor<B>> {
        self.0.compose(g, f)
    }
    fn identity(&self, x: &Obj<B>) -> Mor<B> {
        self.0.identity(x)
    }
    fn bottom(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        self.0.bottom(x, y)
    }
    fn top(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        self.0.top(x, y)
    }
    fn join(&self, f: &Mor<B>, g: &Mor<B>) -> Result<Mor<B>> {
        self.0.join(f, g)
    }
    fn meet(&self, f: &Mor<B>, g: &Mor<B>) -> Result<Mor<B>> {
        self.0.meet(f, g)
    }
}

impl<B: DaggerQuantaloid> DaggerQuantaloid for DropEta<B> {
    fn dagger(&self, f: &Mor<B>) -> Mor<B> {
        self.0.dagger(f)
    }
}

impl<B: MonoidalQuantaloid> MonoidalQuantaloid for DropEta<B> {
    fn unit_object(&self) -> Obj<B> {
        self.0.unit_object()
    }
    fn tensor_objects(&self, x: &Obj<B>, y: &Obj<B>) -> Obj<B> {
        self.0.tensor_objects(x, y)
    }
    fn tensor(&self, f: &Mor<B>, g: &Mor<B>) -> Mor<B> {
        self.0.tensor(f, g)
    }
    fn associator(&self, x: &Obj<B>, y: &Obj<B>, z: &Obj<B>) -> Mor<B> {
        self.0.associator(x, y, z)
    }
    fn left_unitor(&self, x: &Obj<B>) -> Mor<B> {
        self.0.left_unitor(x)
    }
    fn right_unitor(&self, x: &Obj<B>) -> Mor<B> {
        self.0.right_unitor(x)
    }
    fn symmetry(&self, x: &Obj<B>, y: &Obj<B>) -> Mor<B> {
        self.0.symmetry(x, y)
    }
    fn enumerate_scalars(&self) -> Option<Vec<Mor<B>>> {
        self.0.enumerate_scalars()
    }
}

impl<B: CompactQuantaloid> CompactQuantaloid for DropEta<B> {
    fn dual(&self, x: &Obj<B>) -> Obj<B> {
        self.0.dual(x)
    }
    fn eta(&self, x: &Obj<B>) -> Mor<B> {
        let eta = self.0.eta(x);
        let blocks = eta.blocks().iter().skip(1).map(|(&k, m)| (k, m.clone()));
        self.0
            .morphism(eta.source(), eta.target(), blocks)
            .expect("blocks of a well-typed morphism")
    }
    fn epsilon(&self, x: &Obj<B>) -> Mor<B> {
        self.0.epsilon(x)
    }
}

impl<B: Quantaloid> Biproducts for DropEta<B> {
    fn biproduct(&self, family: &[(Label, Obj<B>)]) -> Result<Biproduct<Obj<B>, Mor<B>>> {
        self.0.biproduct(family)
    }
}

/// The three-element Łukasiewicz chain with `1/2 · 1 = 0`, which breaks the
/// unit law on one side.
pub fn broken_unit_quantale() -> FiniteQuantale {
    FiniteQuantale::lukasiewicz3().with_mutated_mul(1, 2, 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lawcheck::gen::QuantaleGen;
    use crate::lawcheck::{laws, Config, Cx, Verdict};
    use crate::quantale::{Boolean, QuantaleBase};

    fn failures(cx: Cx) -> Vec<String> {
        cx.finish()
            .into_iter()
            .filter(|l| l.verdict == Verdict::Fail)
            .inspect(|l| assert!(l.counterexample.is_some()))
            .map(|l| l.law)
            .collect()
    }

    #[test]
    fn dropped_eta_breaks_the_snake_equations() {
        let cfg = Config::with_seed(1);
        let gen = QuantaleGen::new(Boolean, 2);
        let mutant = DropEta(Matr::new(QuantaleBase::new(Boolean)));
        let mut cx = Cx::new(&cfg, "mutant");
        laws::compact(&mutant, &gen, &mut cx);
        let failed = failures(cx);
        assert!(failed.iter().any(|l| l.starts_with("snake")), "{failed:?}");

        let mut cx = Cx::new(&cfg, "original");
        laws::compact(&gen.instance, &gen, &mut cx);
        assert!(failures(cx).is_empty());
    }

    #[test]
    fn mutated_product_breaks_the_identity_law() {
        let cfg = Config::with_seed(1);
        let gen = QuantaleGen::new(broken_unit_quantale(), 2);
        let mut cx = Cx::new(&cfg, "mutant");
        laws::quantaloid(&gen.instance, &gen, &mut cx);
        let failed = failures(cx);
        assert!(failed.iter().any(|l| l == "identity"), "{failed:?}");
    }
}
