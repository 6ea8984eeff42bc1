//! The suite catalogue. Each suite names the statement it exercises by a
//! verbatim anchor phrase and lists the instances that supply its structure.

use super::gen::{BaseGen, FdOsGen, QRelGen, QuantaleGen};
use super::{laws, specific, Cx, Instance, Kind};
use crate::gaussian::GaussianRational;
use crate::quantale::{Boolean, Quantale};

type Run = fn(&Instance, &mut Cx) -> Option<String>;

#[derive(Clone, Copy, Debug)]
pub struct Suite {
    pub name: &'static str,
    /// A phrase quoted verbatim from the statement the suite checks.
    pub anchor: &'static str,
    pub kinds: &'static [Kind],
    /// The structure an instance must supply, shown when a suite is skipped.
    pub needs: &'static str,
    pub run: Run,
}

impl PartialEq for Suite {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
    }
}

const ALL: &[Kind] = &[Kind::Rel, Kind::VRel, Kind::QRel];
const ORTHO: &[Kind] = &[Kind::Rel, Kind::QRel];
const REL: &[Kind] = &[Kind::Rel];
const VREL: &[Kind] = &[Kind::VRel];
const QREL: &[Kind] = &[Kind::QRel];
const SETS: &[Kind] = &[Kind::Rel, Kind::VRel];

/// Binds `$c` to the instance and `$g` to its generator, then evaluates
/// `$body` once per instance type.
macro_rules! dispatch {
    ($inst:expr, |$c:ident, $g:ident| $body:expr) => {
        match $inst {
            Instance::Rel => {
                let gen = QuantaleGen::new(Boolean, 3);
                let ($c, $g) = (&gen.instance, &gen);
                $body
            }
            Instance::VRel { quantale, .. } => {
                let gen = QuantaleGen::new(quantale.clone(), 2);
                let ($c, $g) = (&gen.instance, &gen);
                $body
            }
            Instance::QRel => {
                let gen = QRelGen::<GaussianRational>::new(2, 2);
                let ($c, $g) = (&gen.instance, &gen);
                $body
            }
        }
    };
}

/// Like `dispatch!` for the orthocomplemented instances.
macro_rules! dispatch_ortho {
    ($inst:expr, |$c:ident, $g:ident| $body:expr) => {
        match $inst {
            Instance::Rel => {
                let gen = QuantaleGen::new(Boolean, 3);
                let ($c, $g) = (&gen.instance, &gen);
                $body
            }
            Instance::QRel => {
                let gen = QRelGen::<GaussianRational>::new(2, 2);
                let ($c, $g) = (&gen.instance, &gen);
                $body
            }
            Instance::VRel { .. } => return Some("homsets are not orthocomplemented".into()),
        }
    };
}

fn qrel_gen() -> QRelGen<GaussianRational> {
    QRelGen::new(2, 2)
}

fn quantaloid(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::quantaloid(c, g, cx));
    None
}

fn dagger(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::dagger(c, g, cx));
    None
}

fn monoidal(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::monoidal(c, g, cx));
    None
}

fn coherence(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::coherence(c, g, cx));
    None
}

fn compact(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::compact(c, g, cx));
    None
}

fn names(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::names(c, g, cx));
    None
}

fn traces(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::traces(c, g, cx));
    None
}

fn biproducts(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::biproducts(c, g, cx));
    None
}

fn superposition(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::superposition(c, g, cx));
    None
}

fn distributivity(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::distributivity(c, g, cx));
    None
}

/// Expected (nondegenerate, affine, number of scalars), read off the
/// instance description rather than computed in the instance.
fn expected_scalars(i: &Instance) -> (bool, bool, usize) {
    match i {
        Instance::Rel | Instance::QRel => (true, true, 2),
        Instance::VRel { quantale: q, .. } => (q.unit() != q.bottom(), q.unit() == q.top(), q.elements().len()),
    }
}

fn scalars(i: &Instance, cx: &mut Cx) -> Option<String> {
    let expected = expected_scalars(i);
    dispatch!(i, |c, g| laws::scalars(c, g, cx, expected));
    None
}

fn maps(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::internal_maps(c, g, cx));
    None
}

/// The generic laws on the base quantaloids that the matrix construction
/// lifts: each quantale as a one-object quantaloid, and FdOS.
fn base(i: &Instance, cx: &mut Cx) -> Option<String> {
    fn run<C, G>(c: &C, g: &G, cx: &mut Cx)
    where
        C: crate::CompactQuantaloid<Obj = G::Obj, Mor = G::Mor>,
        G: super::gen::Generator,
    {
        laws::quantaloid(c, g, cx);
        laws::dagger(c, g, cx);
        laws::monoidal(c, g, cx);
        laws::coherence(c, g, cx);
        laws::compact(c, g, cx);
    }
    match i {
        Instance::Rel => {
            let g = BaseGen::new(Boolean);
            run(&g.instance, &g, cx)
        }
        Instance::VRel { quantale, .. } => {
            let g = BaseGen::new(quantale.clone());
            run(&g.instance, &g, cx)
        }
        Instance::QRel => {
            let g = FdOsGen::<GaussianRational>::new(2);
            run(&g.instance, &g, cx)
        }
    }
    None
}

fn quote(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| specific::quote(c, g, cx, 3, 2));
    None
}

fn preorders(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::preorder_laws(c, g, cx));
    None
}

fn diamond(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::diamonds(c, g, cx));
    None
}

fn monrel(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch!(i, |c, g| laws::monrel(c, g, cx));
    None
}

fn orthomodular(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch_ortho!(i, |c, g| laws::orthomodular(c, g, cx));
    None
}

fn effects(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch_ortho!(i, |c, g| laws::effects_oml(c, g, cx));
    None
}

fn nondegenerate(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch_ortho!(i, |c, g| specific::nondegeneracy(c, g, cx));
    None
}

fn kernels(i: &Instance, cx: &mut Cx) -> Option<String> {
    match i {
        Instance::Rel => specific::rel_kernels(cx),
        Instance::QRel => specific::qrel_kernels(&qrel_gen(), cx),
        Instance::VRel { .. } => return Some("dagger kernels are only constructed for Rel and qRel".into()),
    }
    None
}

fn zero_monic(i: &Instance, cx: &mut Cx) -> Option<String> {
    match i {
        Instance::Rel => specific::rel_zero_monic(cx),
        Instance::QRel => specific::qrel_effects(&qrel_gen(), cx),
        Instance::VRel { .. } => return Some("zero-monos are only decided for Rel and qRel".into()),
    }
    None
}

fn shear(_: &Instance, cx: &mut Cx) -> Option<String> {
    specific::shear(&qrel_gen(), cx);
    None
}

fn classical(_: &Instance, cx: &mut Cx) -> Option<String> {
    specific::classical_codomain(&qrel_gen(), cx);
    None
}

fn perp(_: &Instance, cx: &mut Cx) -> Option<String> {
    let g = qrel_gen();
    specific::qrel_perp(&g.instance, &g, cx);
    None
}

fn circ(i: &Instance, cx: &mut Cx) -> Option<String> {
    if let Instance::VRel { quantale, .. } = i {
        specific::vrel_quantale(quantale, cx);
    }
    None
}

fn allegory(i: &Instance, cx: &mut Cx) -> Option<String> {
    match i {
        Instance::VRel { quantale, .. } => specific::allegory(quantale, cx),
        _ => None,
    }
}

fn eval(i: &Instance, cx: &mut Cx) -> Option<String> {
    if let Instance::VRel { quantale, .. } = i {
        if !quantale.is_affine() {
            return Some("the quantale is not affine".into());
        }
    }
    dispatch!(i, |c, g| laws::eval_laws(c, g, cx));
    None
}

fn omega(i: &Instance, cx: &mut Cx) -> Option<String> {
    dispatch_ortho!(i, |c, g| specific::omega_bijection(c, g, cx));
    None
}

fn power(i: &Instance, cx: &mut Cx) -> Option<String> {
    match i {
        Instance::Rel => specific::set_power(Boolean, cx, 3),
        Instance::VRel { quantale, .. } => specific::set_power(quantale.clone(), cx, 2),
        Instance::QRel => {}
    }
    None
}

fn exponential(_: &Instance, cx: &mut Cx) -> Option<String> {
    specific::exponential(cx);
    None
}

fn downsets(_: &Instance, cx: &mut Cx) -> Option<String> {
    specific::downsets(cx);
    None
}

macro_rules! suite {
    ($name:expr, $anchor:expr, $kinds:expr, $needs:expr, $run:expr) => {
        Suite {
            name: $name,
            anchor: $anchor,
            kinds: $kinds,
            needs: $needs,
            run: $run,
        }
    };
}

const SUITES: &[Suite] = &[
    suite!("quantaloid", "composition or morphisms preserves suprema", ALL, "a quantaloid", quantaloid),
    suite!("dagger", r"r\mapsto r^\dag$ is an order isomorphism", ALL, "a dagger", dagger),
    suite!("monoidal", "preserves suprema in both arguments separately", ALL, "a monoidal product", monoidal),
    suite!("coherence", "satisfying the usual coherence conditions", ALL, "a monoidal product", coherence),
    suite!("compact", "compact closed category", ALL, "duals", compact),
    suite!("names", "the following bijections are order isomorphisms", ALL, "duals", names),
    suite!("trace", "preserves arbitrary suprema", ALL, "duals and biproducts", traces),
    suite!("biproduct", "is a quantaloid with small biproducts", ALL, "biproducts", biproducts),
    suite!("superposition", "is a commutative monoid", ALL, "biproducts", superposition),
    suite!(
        "distributivity",
        "is an infinitely distributive symmetric monoidal category",
        ALL,
        "biproducts and a monoidal product",
        distributivity
    ),
    suite!("scalars", "precisely two scalars", ALL, "a monoidal product", scalars),
    suite!("maps", "is a monoidal subcategory of", ALL, "a dagger and a monoidal product", maps),
    suite!(
        "base",
        "is a dagger quantaloid with all small dagger biproducts if",
        ALL,
        "a base quantaloid",
        base
    ),
    suite!("quote", "defines a faithful functor", ALL, "biproducts", quote),
    suite!("preorders", "is monotone if and only if", ALL, "duals", preorders),
    suite!("diamond", r"There are functors $(-)_\diamond", ALL, "a dagger", diamond),
    suite!("monrel", "is defined as the category of preordered object", ALL, "duals and biproducts", monrel),
    suite!(
        "orthomodular",
        "are complete orthomodular lattices",
        ORTHO,
        "orthocomplemented homsets",
        orthomodular
    ),
    suite!(
        "effects",
        "are ortho-isomorphic complete orthomodular lattices",
        ORTHO,
        "orthocomplemented homsets",
        effects
    ),
    suite!("nondegenerate", r"if and only if $f=0_{X,Y}$", ORTHO, "orthocomplemented homsets", nondegenerate),
    suite!("kernels", "has dagger kernels.", ORTHO, "dagger kernels", kernels),
    suite!(
        "zero-monic",
        r"is a zero-mono if and only if $R=\top_{\mathcal Y,\mathbf 1}$",
        ORTHO,
        "dagger kernels",
        zero_monic
    ),
    suite!("shear", "that is not a dagger isomorphism", QREL, "quantum relations", shear),
    suite!(
        "classical-codomain",
        r"is a map if and only if $f_\alpha\perp f_\beta$",
        QREL,
        "quantum relations",
        classical
    ),
    suite!("perp", "is a complete orthomodular lattice with orthogonality relation", QREL, "quantum relations", perp),
    suite!("circ", "faithful homomorphism of dagger quantaloids", VREL, "a quantale", circ),
    suite!("allegory", "is not an allegory", VREL, "a quantale", allegory),
    suite!("eval", "Then the following identities hold:", ALL, "biproducts", eval),
    suite!("omega", r"the map $f\mapsto p_1\circ f$", ORTHO, "orthocomplemented homsets", omega),
    suite!("power", "has a right adjoint $P$", SETS, "a quantale", power),
    suite!("exponential", r"Then $\mathbf S$ is symmetric monoidal closed.", REL, "relations", exponential),
    suite!("downset", "has a right adjoint $D$", REL, "relations", downsets),
];

pub fn builtin_suites() -> &'static [Suite] {
    SUITES
}

pub fn find_suite(name: &str) -> Option<Suite> {
    SUITES.iter().find(|s| s.name == name).copied()
}
