//! Law groups generic over the instance traits. Each function records its
//! laws in a [`Cx`]; the suites pick the groups an instance supports.

use rand::Rng;
use serde_json::Value;

use super::gen::{maps, objects, preorders, Generator, Rng8};
use super::{expect_all, expect_eq, expect_leq, fail, Cx, Fail, Outcome};
use crate::biproduct::{
    cotuple, distributivity_iso, matrix_element, matrix_elements, reassemble, superposition_sum, tuple,
};
use crate::compact::{coname, name, snake_left, snake_right, star, swapped_counit_dagger, trace, unconame, unname};
use crate::error::Result;
use crate::label::Label;
use crate::order::{
    diamond_lower, diamond_upper, dual, eval_identities, flat, ge, is_monotone_map, is_monotone_relation,
    is_order_isomorphism, is_order_isomorphism_with, make_preordered, monrel_biproduct, monrel_compact,
    monrel_snake_left, monrel_snake_right, omega_order, opposite, preorder_tensor, Preordered, PreorderedOf,
};
use crate::predicates::{
    check_map, check_maps_discrete, is_bijective, is_dagger_iso, is_map, scalar_mul,
};
use crate::quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Orthocomplemented, Quantaloid,
};

type Bp<G> = Biproduct<<G as Generator>::Obj, <G as Generator>::Mor>;

fn biproduct_of<C: Biproducts>(c: &C, objs: &[C::Obj]) -> Result<Biproduct<C::Obj, C::Mor>> {
    let family: Vec<_> = objs.iter().enumerate().map(|(k, o)| (Label::Index(k), o.clone())).collect();
    c.biproduct(&family)
}

fn any(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().flatten().next()
}

pub fn quantaloid<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: Quantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    cx.cases(g, "order-antisymmetric", 2, &[(0, 1), (0, 1)], |_, m| {
        let (f, h) = (&m[0], &m[1]);
        if !c.leq(f, f)? {
            return Ok(fail("f ≤ f fails"));
        }
        if c.leq(f, h)? && c.leq(h, f)? {
            return Ok(expect_eq(g, "f ≤ h ≤ f", f, h));
        }
        Ok(None)
    });
    cx.cases(g, "join-least-upper-bound", 2, &[(0, 1), (0, 1), (0, 1)], |_, m| {
        let (f, h, k) = (&m[0], &m[1], &m[2]);
        let j = c.join(f, h)?;
        let mut out = vec![
            expect_leq(c, g, "f ≤ f ∨ h", f, &j)?,
            expect_leq(c, g, "h ≤ f ∨ h", h, &j)?,
            expect_eq(g, "f ∨ h = h ∨ f", &j, &c.join(h, f)?),
        ];
        if c.leq(f, k)? && c.leq(h, k)? {
            out.push(expect_leq(c, g, "f ∨ h ≤ k", &j, k)?);
        }
        let sup = c.sup(&c.source(f), &c.target(f), &[f.clone(), h.clone(), k.clone()])?;
        out.push(expect_eq(g, "⋁{f,h,k} = (f ∨ h) ∨ k", &sup, &c.join(&j, k)?));
        Ok(any(out))
    });
    cx.cases(g, "meet-greatest-lower-bound", 2, &[(0, 1), (0, 1), (0, 1)], |_, m| {
        let (f, h, k) = (&m[0], &m[1], &m[2]);
        let w = c.meet(f, h)?;
        let mut out = vec![
            expect_leq(c, g, "f ∧ h ≤ f", &w, f)?,
            expect_leq(c, g, "f ∧ h ≤ h", &w, h)?,
        ];
        if c.leq(k, f)? && c.leq(k, h)? {
            out.push(expect_leq(c, g, "k ≤ f ∧ h", k, &w)?);
        }
        Ok(any(out))
    });
    cx.cases(g, "bottom-and-top", 2, &[(0, 1)], |o, m| {
        let (bot, top) = (c.bottom(&o[0], &o[1]), c.top(&o[0], &o[1]));
        Ok(any(vec![
            expect_leq(c, g, "⊥ ≤ f", &bot, &m[0])?,
            expect_leq(c, g, "f ≤ ⊤", &m[0], &top)?,
            expect_eq(g, "empty sup is ⊥", &c.sup(&o[0], &o[1], &[])?, &bot),
        ]))
    });
    cx.cases(g, "associativity", 4, &[(0, 1), (1, 2), (2, 3)], |_, m| {
        let (f, h, k) = (&m[0], &m[1], &m[2]);
        let lhs = c.compose(k, &c.compose(h, f)?)?;
        let rhs = c.compose(&c.compose(k, h)?, f)?;
        Ok(expect_eq(g, "k∘(h∘f) = (k∘h)∘f", &lhs, &rhs))
    });
    cx.cases(g, "identity", 2, &[(0, 1)], |o, m| {
        let f = &m[0];
        Ok(any(vec![
            expect_eq(g, "f∘id = f", &c.compose(f, &c.identity(&o[0]))?, f),
            expect_eq(g, "id∘f = f", &c.compose(&c.identity(&o[1]), f)?, f),
        ]))
    });
    cx.cases(g, "composition-preserves-joins-left", 3, &[(0, 1), (0, 1), (1, 2)], |_, m| {
        let (f1, f2, h) = (&m[0], &m[1], &m[2]);
        let lhs = c.compose(h, &c.join(f1, f2)?)?;
        let rhs = c.join(&c.compose(h, f1)?, &c.compose(h, f2)?)?;
        Ok(expect_eq(g, "h∘(f1 ∨ f2) = h∘f1 ∨ h∘f2", &lhs, &rhs))
    });
    cx.cases(g, "composition-preserves-joins-right", 3, &[(0, 1), (1, 2), (1, 2)], |_, m| {
        let (f, h1, h2) = (&m[0], &m[1], &m[2]);
        let lhs = c.compose(&c.join(h1, h2)?, f)?;
        let rhs = c.join(&c.compose(h1, f)?, &c.compose(h2, f)?)?;
        Ok(expect_eq(g, "(h1 ∨ h2)∘f = h1∘f ∨ h2∘f", &lhs, &rhs))
    });
    cx.cases(g, "composition-preserves-empty-sup", 3, &[(0, 1), (1, 2)], |o, m| {
        let (f, h) = (&m[0], &m[1]);
        Ok(any(vec![
            expect_eq(g, "h∘⊥ = ⊥", &c.compose(h, &c.bottom(&o[0], &o[1]))?, &c.bottom(&o[0], &o[2])),
            expect_eq(g, "⊥∘f = ⊥", &c.compose(&c.bottom(&o[1], &o[2]), f)?, &c.bottom(&o[0], &o[2])),
        ]))
    });
}

pub fn dagger<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: DaggerQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    cx.cases(g, "dagger-involutive", 2, &[(0, 1)], |_, m| {
        Ok(expect_eq(g, "f†† = f", &c.dagger(&c.dagger(&m[0])), &m[0]))
    });
    cx.cases(g, "dagger-contravariant", 3, &[(0, 1), (1, 2)], |_, m| {
        let lhs = c.dagger(&c.compose(&m[1], &m[0])?);
        let rhs = c.compose(&c.dagger(&m[0]), &c.dagger(&m[1]))?;
        Ok(expect_eq(g, "(h∘f)† = f†∘h†", &lhs, &rhs))
    });
    cx.cases(g, "dagger-identity", 1, &[], |o, _| {
        let id = c.identity(&o[0]);
        Ok(expect_eq(g, "id† = id", &c.dagger(&id), &id))
    });
    cx.cases(g, "dagger-order-isomorphism", 2, &[(0, 1), (0, 1)], |_, m| {
        let (f, h) = (&m[0], &m[1]);
        let (fd, hd) = (c.dagger(f), c.dagger(h));
        if c.leq(f, h)? != c.leq(&fd, &hd)? {
            return Ok(fail("f ≤ h and f† ≤ h† disagree"));
        }
        Ok(expect_eq(g, "(f ∨ h)† = f† ∨ h†", &c.dagger(&c.join(f, h)?), &c.join(&fd, &hd)?))
    });
}

pub fn monoidal<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: MonoidalQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    cx.cases(g, "tensor-preserves-joins-left", 4, &[(0, 1), (0, 1), (2, 3)], |_, m| {
        let (f1, f2, h) = (&m[0], &m[1], &m[2]);
        let lhs = c.tensor(&c.join(f1, f2)?, h);
        let rhs = c.join(&c.tensor(f1, h), &c.tensor(f2, h))?;
        Ok(expect_eq(g, "(f1 ∨ f2)⊗h = f1⊗h ∨ f2⊗h", &lhs, &rhs))
    });
    cx.cases(g, "tensor-preserves-joins-right", 4, &[(0, 1), (2, 3), (2, 3)], |_, m| {
        let (f, h1, h2) = (&m[0], &m[1], &m[2]);
        let lhs = c.tensor(f, &c.join(h1, h2)?);
        let rhs = c.join(&c.tensor(f, h1), &c.tensor(f, h2))?;
        Ok(expect_eq(g, "f⊗(h1 ∨ h2) = f⊗h1 ∨ f⊗h2", &lhs, &rhs))
    });
    cx.cases(g, "tensor-preserves-bottom", 4, &[(0, 1), (2, 3)], |o, m| {
        let (f, h) = (&m[0], &m[1]);
        let bot = c.bottom(&c.tensor_objects(&o[0], &o[2]), &c.tensor_objects(&o[1], &o[3]));
        Ok(any(vec![
            expect_eq(g, "⊥⊗h = ⊥", &c.tensor(&c.bottom(&o[0], &o[1]), h), &bot),
            expect_eq(g, "f⊗⊥ = ⊥", &c.tensor(f, &c.bottom(&o[2], &o[3])), &bot),
        ]))
    });
    cx.cases(g, "tensor-functorial", 6, &[(0, 1), (1, 2), (3, 4), (4, 5)], |o, m| {
        let lhs = c.tensor(&c.compose(&m[1], &m[0])?, &c.compose(&m[3], &m[2])?);
        let rhs = c.compose(&c.tensor(&m[1], &m[3]), &c.tensor(&m[0], &m[2]))?;
        let ids = c.tensor(&c.identity(&o[0]), &c.identity(&o[3]));
        Ok(any(vec![
            expect_eq(g, "(h1∘f1)⊗(h2∘f2) = (h1⊗h2)∘(f1⊗f2)", &lhs, &rhs),
            expect_eq(g, "id⊗id = id", &ids, &c.identity(&c.tensor_objects(&o[0], &o[3]))),
        ]))
    });
    cx.cases(g, "tensor-dagger", 4, &[(0, 1), (2, 3)], |_, m| {
        let lhs = c.dagger(&c.tensor(&m[0], &m[1]));
        let rhs = c.tensor(&c.dagger(&m[0]), &c.dagger(&m[1]));
        Ok(expect_eq(g, "(f⊗h)† = f†⊗h†", &lhs, &rhs))
    });
}

fn is_unitary<C: DaggerQuantaloid>(c: &C, f: &C::Mor) -> Result<bool> {
    is_dagger_iso(c, f)
}

pub fn coherence<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: MonoidalQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let i = c.unit_object();
    cx.cases(g, "triangle", 2, &[], |o, _| {
        let (x, y) = (&o[0], &o[1]);
        let lhs = c.compose(&c.tensor(&c.identity(x), &c.left_unitor(y)), &c.associator(x, &i, y))?;
        let rhs = c.tensor(&c.right_unitor(x), &c.identity(y));
        Ok(expect_eq(g, "(id⊗λ)∘α = ρ⊗id", &lhs, &rhs))
    });
    cx.cases(g, "pentagon", 4, &[], |o, _| {
        let (w, x, y, z) = (&o[0], &o[1], &o[2], &o[3]);
        let t = |a: &C::Obj, b: &C::Obj| c.tensor_objects(a, b);
        let lhs = c.compose(&c.associator(w, x, &t(y, z)), &c.associator(&t(w, x), y, z))?;
        let rhs = c.chain(&[
            &c.tensor(&c.identity(w), &c.associator(x, y, z)),
            &c.associator(w, &t(x, y), z),
            &c.tensor(&c.associator(w, x, y), &c.identity(z)),
        ])?;
        Ok(expect_eq(g, "pentagon", &lhs, &rhs))
    });
    cx.cases(g, "hexagon", 3, &[], |o, _| {
        let (x, y, z) = (&o[0], &o[1], &o[2]);
        let t = |a: &C::Obj, b: &C::Obj| c.tensor_objects(a, b);
        let lhs = c.chain(&[&c.associator(y, z, x), &c.symmetry(x, &t(y, z)), &c.associator(x, y, z)])?;
        let rhs = c.chain(&[
            &c.tensor(&c.identity(y), &c.symmetry(x, z)),
            &c.associator(y, x, z),
            &c.tensor(&c.symmetry(x, y), &c.identity(z)),
        ])?;
        Ok(expect_eq(g, "hexagon", &lhs, &rhs))
    });
    cx.cases(g, "symmetry-involutive", 2, &[], |o, _| {
        let (x, y) = (&o[0], &o[1]);
        let lhs = c.compose(&c.symmetry(y, x), &c.symmetry(x, y))?;
        Ok(expect_eq(g, "σ∘σ = id", &lhs, &c.identity(&c.tensor_objects(x, y))))
    });
    cx.cases(g, "coherence-unitary", 3, &[], |o, _| {
        let (x, y, z) = (&o[0], &o[1], &o[2]);
        let flags = [
            is_unitary(c, &c.associator(x, y, z))?,
            is_unitary(c, &c.left_unitor(x))?,
            is_unitary(c, &c.right_unitor(x))?,
            is_unitary(c, &c.symmetry(x, y))?,
        ];
        Ok(expect_all("coherence isomorphisms are dagger isos", &["α", "λ", "ρ", "σ"], &flags))
    });
    cx.cases(g, "coherence-natural", 4, &[(0, 1), (2, 3)], |o, m| {
        let (f, h) = (&m[0], &m[1]);
        let sigma = c.compose(&c.symmetry(&o[1], &o[3]), &c.tensor(f, h))?;
        let sigma_r = c.compose(&c.tensor(h, f), &c.symmetry(&o[0], &o[2]))?;
        let id_i = c.identity(&i);
        let lambda = c.compose(&c.left_unitor(&o[1]), &c.tensor(&id_i, f))?;
        let lambda_r = c.compose(f, &c.left_unitor(&o[0]))?;
        let rho = c.compose(&c.right_unitor(&o[1]), &c.tensor(f, &id_i))?;
        let rho_r = c.compose(f, &c.right_unitor(&o[0]))?;
        Ok(any(vec![
            expect_eq(g, "σ natural", &sigma, &sigma_r),
            expect_eq(g, "λ natural", &lambda, &lambda_r),
            expect_eq(g, "ρ natural", &rho, &rho_r),
        ]))
    });
    cx.cases(g, "associator-natural", 6, &[(0, 1), (2, 3), (4, 5)], |o, m| {
        let (f, h, k) = (&m[0], &m[1], &m[2]);
        let lhs = c.compose(&c.associator(&o[1], &o[3], &o[5]), &c.tensor(&c.tensor(f, h), k))?;
        let rhs = c.compose(&c.tensor(f, &c.tensor(h, k)), &c.associator(&o[0], &o[2], &o[4]))?;
        Ok(expect_eq(g, "α natural", &lhs, &rhs))
    });
}

pub fn compact<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    cx.cases(g, "snake-left", 1, &[], |o, _| {
        Ok(expect_eq(g, "λ∘(ε⊗id)∘α⁻¹∘(id⊗η)∘ρ⁻¹ = id", &snake_left(c, &o[0])?, &c.identity(&o[0])))
    });
    cx.cases(g, "snake-right", 1, &[], |o, _| {
        let xs = c.dual(&o[0]);
        Ok(expect_eq(g, "ρ∘(id⊗ε)∘α∘(η⊗id)∘λ⁻¹ = id", &snake_right(c, &o[0])?, &c.identity(&xs)))
    });
    cx.cases(g, "dagger-compact", 1, &[], |o, _| {
        Ok(expect_eq(g, "σ∘ε† = η", &swapped_counit_dagger(c, &o[0])?, &c.eta(&o[0])))
    });
    cx.cases(g, "epsilon-natural", 2, &[(0, 1)], |o, m| {
        let f = &m[0];
        let (x, y) = (&o[0], &o[1]);
        let lhs = c.compose(&c.epsilon(y), &c.tensor(f, &c.identity(&c.dual(y))))?;
        let rhs = c.compose(&c.epsilon(x), &c.tensor(&c.identity(x), &star(c, f)?))?;
        Ok(expect_eq(g, "ε_Y∘(f⊗id) = ε_X∘(id⊗f*)", &lhs, &rhs))
    });
}

pub fn names<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    cx.cases(g, "name-round-trip", 2, &[(0, 1)], |o, m| {
        let f = &m[0];
        Ok(any(vec![
            expect_eq(g, "unname(⌜f⌝) = f", &unname(c, &o[0], &o[1], &name(c, f)?)?, f),
            expect_eq(g, "unconame(⌞f⌟) = f", &unconame(c, &o[0], &o[1], &coname(c, f)?)?, f),
        ]))
    });
    let i = c.unit_object();
    let cfg = cx.config().clone();
    cx.each_with(
        "name-surjective",
        |rng| {
            let mut out = Vec::new();
            for x in objects(g, rng, cfg.samples.min(12)) {
                for y in objects(g, rng, 3) {
                    for _ in 0..cfg.tuple_samples.min(8) {
                        let xy = c.tensor_objects(&c.dual(&x), &y);
                        let h = g.random_morphism(&i, &xy, rng);
                        let k = g.random_morphism(&c.tensor_objects(&x, &c.dual(&y)), &i, rng);
                        out.push((x.clone(), y.clone(), h, k));
                    }
                }
            }
            Ok(out)
        },
        |(_, _, h, k)| vec![g.show(h), g.show(k)],
        |(x, y, h, k)| {
            Ok(any(vec![
                expect_eq(g, "⌜unname(h)⌝ = h", &name(c, &unname(c, x, y, h)?)?, h),
                expect_eq(g, "⌞unconame(k)⌟ = k", &coname(c, &unconame(c, x, y, k)?)?, k),
            ]))
        },
    );
    cx.cases(g, "name-order-isomorphism", 2, &[(0, 1), (0, 1)], |_, m| {
        let (f, h) = (&m[0], &m[1]);
        let agree = c.leq(f, h)? == c.leq(&name(c, f)?, &name(c, h)?)?
            && c.leq(f, h)? == c.leq(&coname(c, f)?, &coname(c, h)?)?;
        Ok((!agree).then(|| Fail {
            detail: "f ≤ h disagrees with the order of names".into(),
            values: Vec::new(),
        }))
    });
    cx.cases(g, "star-involutive", 2, &[(0, 1)], |_, m| {
        let f = &m[0];
        Ok(any(vec![
            expect_eq(g, "f** = f", &star(c, &star(c, f)?)?, f),
            expect_eq(g, "(f*)† = (f†)*", &c.dagger(&star(c, f)?), &star(c, &c.dagger(f))?),
        ]))
    });
}

pub fn traces<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor> + Biproducts,
    G: Generator,
{
    let i = c.unit_object();
    let cfg = cx.config().clone();
    cx.each_with(
        "trace-of-scalar",
        |rng| {
            Ok(c.enumerate_scalars()
                .unwrap_or_else(|| (0..cfg.samples).map(|_| g.random_morphism(&i, &i, rng)).collect()))
        },
        |s| vec![g.show(s)],
        |s| Ok(expect_eq(g, "Tr(s) = s", &trace(c, s)?, s)),
    );
    cx.cases(g, "trace-of-zero", 1, &[], |o, _| {
        let zero = c.bottom(&o[0], &o[0]);
        Ok(expect_eq(g, "Tr(0) = 0", &trace(c, &zero)?, &c.bottom(&i, &i)))
    });
    cx.cases(g, "trace-multiplicative", 2, &[(0, 0), (1, 1)], |_, m| {
        let lhs = trace(c, &c.tensor(&m[0], &m[1]))?;
        let rhs = c.compose(&trace(c, &m[0])?, &trace(c, &m[1])?)?;
        Ok(expect_eq(g, "Tr(f⊗h) = Tr(f)∘Tr(h)", &lhs, &rhs))
    });
    cx.cases(g, "trace-cyclic", 2, &[(0, 1), (1, 0)], |_, m| {
        let lhs = trace(c, &c.compose(&m[1], &m[0])?)?;
        let rhs = trace(c, &c.compose(&m[0], &m[1])?)?;
        Ok(expect_eq(g, "Tr(h∘f) = Tr(f∘h)", &lhs, &rhs))
    });
    cx.cases(g, "trace-preserves-joins", 1, &[(0, 0), (0, 0)], |_, m| {
        let lhs = trace(c, &c.join(&m[0], &m[1])?)?;
        let rhs = c.join(&trace(c, &m[0])?, &trace(c, &m[1])?)?;
        Ok(expect_eq(g, "Tr(f ∨ h) = Tr(f) ∨ Tr(h)", &lhs, &rhs))
    });
}

pub fn biproducts<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: Biproducts<Obj = G::Obj, Mor = G::Mor> + DaggerQuantaloid,
    G: Generator,
{
    let families = |o: &[G::Obj]| -> Vec<Vec<G::Obj>> { (0..=o.len()).map(|k| o[..k].to_vec()).collect() };
    cx.cases(g, "projection-injection", 3, &[], |o, _| {
        for fam in families(o) {
            let bp = biproduct_of(c, &fam)?;
            for (a, xa) in fam.iter().enumerate() {
                for (b, xb) in fam.iter().enumerate() {
                    let lhs = c.compose(&bp.projections[b], &bp.injections[a])?;
                    let rhs = if a == b { c.identity(xa) } else { c.bottom(xa, xb) };
                    if let Some(f) = expect_eq(g, &format!("p_{b}∘i_{a}"), &lhs, &rhs) {
                        return Ok(Some(f));
                    }
                }
            }
        }
        Ok(None)
    });
    cx.cases(g, "injections-cover-identity", 3, &[], |o, _| {
        for fam in families(o) {
            let bp = biproduct_of(c, &fam)?;
            let terms = bp
                .injections
                .iter()
                .zip(&bp.projections)
                .map(|(i, p)| c.compose(i, p))
                .collect::<Result<Vec<_>>>()?;
            let sum = c.sup(&bp.object, &bp.object, &terms)?;
            if let Some(f) = expect_eq(g, "⋁ i∘p = id", &sum, &c.identity(&bp.object)) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    });
    cx.cases(g, "dagger-biproduct", 3, &[], |o, _| {
        let bp = biproduct_of(c, o)?;
        Ok(any(
            bp.injections
                .iter()
                .zip(&bp.projections)
                .map(|(i, p)| expect_eq(g, "p = i†", p, &c.dagger(i))),
        ))
    });
    cx.cases(g, "zero-object", 1, &[], |o, _| {
        let z = c.zero_object();
        let x = &o[0];
        Ok(any(vec![
            expect_eq(g, "id_0 = ⊥", &c.identity(&z), &c.bottom(&z, &z)),
            expect_eq(g, "hom(x, 0) = {⊥}", &c.top(x, &z), &c.bottom(x, &z)),
            expect_eq(g, "hom(0, x) = {⊥}", &c.top(&z, x), &c.bottom(&z, x)),
        ]))
    });
    cx.cases(g, "tuple-universal", 3, &[(2, 0), (2, 1), (0, 2), (1, 2)], |o, m| {
        let fam = [o[0].clone(), o[1].clone()];
        let bp = biproduct_of(c, &fam)?;
        let w = &o[2];
        let t = tuple(c, w, &bp, &m[..2])?;
        let k = cotuple(c, w, &bp, &m[2..])?;
        let mut out = Vec::new();
        for a in 0..2 {
            out.push(expect_eq(g, "p∘⟨f⟩ = f", &c.compose(&bp.projections[a], &t)?, &m[a]));
            out.push(expect_eq(g, "[h]∘i = h", &c.compose(&k, &bp.injections[a])?, &m[2 + a]));
        }
        let ps: Vec<_> = bp.projections.iter().map(|p| c.compose(p, &t)).collect::<Result<_>>()?;
        out.push(expect_eq(g, "⟨p∘t⟩ = t", &tuple(c, w, &bp, &ps)?, &t));
        Ok(any(out))
    });
}

pub fn superposition<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: Biproducts<Obj = G::Obj, Mor = G::Mor> + MonoidalQuantaloid,
    G: Generator,
{
    cx.cases(g, "sum-is-join", 2, &[(0, 1), (0, 1), (0, 1)], |o, m| {
        for k in 0..=3 {
            let fs = &m[..k];
            let lhs = superposition_sum(c, &o[0], &o[1], fs)?;
            let rhs = c.sup(&o[0], &o[1], fs)?;
            if let Some(f) = expect_eq(g, &format!("Σ of {k} = ⋁ of {k}"), &lhs, &rhs) {
                return Ok(Some(f));
            }
        }
        Ok(None)
    });
    cx.cases(g, "sum-monoid", 2, &[(0, 1), (0, 1), (0, 1)], |o, m| {
        let (x, y) = (&o[0], &o[1]);
        let s = |fs: &[G::Mor]| superposition_sum(c, x, y, fs);
        let (f, h, k) = (m[0].clone(), m[1].clone(), m[2].clone());
        Ok(any(vec![
            expect_eq(g, "f + h = h + f", &s(&[f.clone(), h.clone()])?, &s(&[h.clone(), f.clone()])?),
            expect_eq(
                g,
                "(f + h) + k = f + (h + k)",
                &s(&[s(&[f.clone(), h.clone()])?, k.clone()])?,
                &s(&[f.clone(), s(&[h.clone(), k.clone()])?])?,
            ),
            expect_eq(g, "f + 0 = f", &s(&[f.clone(), c.bottom(x, y)])?, &f),
            expect_eq(g, "f + f = f", &s(&[f.clone(), f.clone()])?, &f),
        ]))
    });
    cx.cases(g, "tensor-distributes-over-sums", 4, &[(0, 1), (0, 1), (2, 3)], |o, m| {
        let lhs = c.tensor(&superposition_sum(c, &o[0], &o[1], &m[..2])?, &m[2]);
        let terms = [c.tensor(&m[0], &m[2]), c.tensor(&m[1], &m[2])];
        let rhs = superposition_sum(c, &c.tensor_objects(&o[0], &o[2]), &c.tensor_objects(&o[1], &o[3]), &terms)?;
        Ok(expect_eq(g, "(f1 + f2)⊗h = f1⊗h + f2⊗h", &lhs, &rhs))
    });
    let cfg = cx.config().clone();
    let draw = |rng: &mut Rng8| -> Result<Vec<(Bp<G>, Bp<G>, Bp<G>, G::Mor, G::Mor)>> {
        let mut out = Vec::new();
        for _ in 0..cfg.samples {
            let pick = |rng: &mut Rng8| -> Vec<G::Obj> {
                let k = rng.gen_range(1..=2);
                (0..k).map(|_| g.random_object(rng)).collect()
            };
            let (a, b, d) = (pick(rng), pick(rng), pick(rng));
            let (a, b, d) = (biproduct_of(c, &a)?, biproduct_of(c, &b)?, biproduct_of(c, &d)?);
            let f = g.random_morphism(&a.object, &b.object, rng);
            let h = g.random_morphism(&b.object, &d.object, rng);
            out.push((a, b, d, f, h));
        }
        Ok(out)
    };
    cx.each_with(
        "matrix-calculus",
        draw,
        |(_, _, _, f, h)| vec![g.show(f), g.show(h)],
        |(a, b, d, f, h)| {
            let ef = matrix_elements(c, f, a, b)?;
            let eh = matrix_elements(c, h, b, d)?;
            let mut out = vec![expect_eq(g, "f = Σ i∘f_αβ∘p", &reassemble(c, a, b, &ef)?, f)];
            let hf = c.compose(h, f)?;
            for al in 0..a.len() {
                for ga in 0..d.len() {
                    let terms = (0..b.len())
                        .map(|be| c.compose(&eh[be][ga], &ef[al][be]))
                        .collect::<Result<Vec<_>>>()?;
                    let rhs = c.sup(&a.summands[al], &d.summands[ga], &terms)?;
                    out.push(expect_eq(g, "(h∘f)_αγ = Σ h_βγ∘f_αβ", &matrix_element(c, &hf, a, d, al, ga)?, &rhs));
                }
            }
            let fd = c.dagger(f);
            for al in 0..a.len() {
                for be in 0..b.len() {
                    let lhs = matrix_element(c, &fd, b, a, be, al)?;
                    out.push(expect_eq(g, "(f†)_βα = (f_αβ)†", &lhs, &c.dagger(&ef[al][be])));
                }
            }
            Ok(any(out))
        },
    );
}

pub fn distributivity<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: Biproducts<Obj = G::Obj, Mor = G::Mor> + MonoidalQuantaloid,
    G: Generator,
{
    cx.cases(g, "distributivity-inverse", 3, &[], |o, _| {
        for k in 0..=2 {
            let ys: Vec<_> = o[1..1 + k].iter().enumerate().map(|(n, y)| (Label::Index(n), y.clone())).collect();
            let (phi, psi) = distributivity_iso(c, &o[0], &ys)?;
            let out = any(vec![
                expect_eq(g, "φ∘ψ = id", &c.compose(&phi, &psi)?, &c.identity(&c.source(&psi))),
                expect_eq(g, "ψ∘φ = id", &c.compose(&psi, &phi)?, &c.identity(&c.source(&phi))),
                expect_eq(g, "φ† = ψ", &c.dagger(&phi), &psi),
            ]);
            if out.is_some() {
                return Ok(out);
            }
        }
        Ok(None)
    });
}

/// Scalar action and instance flags; `expected` is `(nondegenerate, affine, scalar count)`.
pub fn scalars<C, G>(c: &C, g: &G, cx: &mut Cx, expected: (bool, bool, usize))
where
    C: MonoidalQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let i = c.unit_object();
    let ss = c.enumerate_scalars().unwrap_or_default();
    cx.cases(g, "scalar-action", 2, &[(0, 1)], |o, m| {
        let f = &m[0];
        let mut out = vec![
            expect_eq(g, "id_I·f = f", &scalar_mul(c, &c.identity(&i), f)?, f),
            expect_eq(g, "0·f = 0", &scalar_mul(c, &c.bottom(&i, &i), f)?, &c.bottom(&o[0], &o[1])),
        ];
        for s in &ss {
            for t in &ss {
                let lhs = scalar_mul(c, &c.compose(s, t)?, f)?;
                let rhs = scalar_mul(c, s, &scalar_mul(c, t, f)?)?;
                out.push(expect_eq(g, "(s∘t)·f = s·(t·f)", &lhs, &rhs));
            }
        }
        Ok(any(out))
    });
    cx.each(
        "instance-flags",
        [()],
        |_| Vec::new(),
        |_| {
            let (nd, af, n) = expected;
            let got = (
                crate::predicates::is_nondegenerate(c),
                crate::predicates::is_affine(c),
                c.enumerate_scalars().map(|s| s.len()).unwrap_or(0),
            );
            Ok((got != (nd, af, n)).then(|| Fail {
                detail: format!("expected (nondegenerate, affine, scalars) = {:?}, got {got:?}", (nd, af, n)),
                values: Vec::new(),
            }))
        },
    );
}

pub fn internal_maps<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: MonoidalQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let cfg = cx.config().clone();
    let triples = |rng: &mut Rng8| -> Result<Vec<(G::Mor, G::Mor, G::Mor)>> {
        let mut out = Vec::new();
        let obs = objects(g, rng, 6);
        for _ in 0..cfg.samples {
            let pick = |rng: &mut Rng8| obs[rng.gen_range(0..obs.len())].clone();
            let (x, y, z) = (pick(rng), pick(rng), pick(rng));
            let f = maps(c, g, &x, &y, rng, 64, 1)?;
            let h = maps(c, g, &y, &z, rng, 64, 1)?;
            let f2 = maps(c, g, &x, &y, rng, 64, 1)?;
            if let (Some(f), Some(h), Some(f2)) = (pick_one(&f, rng), pick_one(&h, rng), pick_one(&f2, rng)) {
                out.push((f, h, f2));
            }
        }
        Ok(out)
    };
    cx.cases(g, "identity-is-map", 1, &[], |o, _| {
        Ok(check_map(c, &c.identity(&o[0]))?.err().map(|w| Fail {
            detail: w.law,
            values: vec![("lhs".into(), g.show(&w.lhs)), ("rhs".into(), g.show(&w.rhs))],
        }))
    });
    cx.each_with(
        "maps-compose-and-tensor",
        triples,
        |(f, h, _)| vec![g.show(f), g.show(h)],
        |(f, h, _)| {
            let flags = [is_map(c, &c.compose(h, f)?)?, is_map(c, &c.tensor(f, h))?];
            Ok(expect_all("maps are closed", &["h∘f", "f⊗h"], &flags))
        },
    );
    cx.each_with(
        "maps-discrete",
        triples,
        |(f, _, f2)| vec![g.show(f), g.show(f2)],
        |(f, _, f2)| {
            Ok(check_maps_discrete(c, f, f2)?.err().map(|w| Fail {
                detail: w.law,
                values: vec![("lhs".into(), g.show(&w.lhs)), ("rhs".into(), g.show(&w.rhs))],
            }))
        },
    );
    cx.each_with(
        "bijective-iff-dagger-iso",
        triples,
        |(f, _, _)| vec![g.show(f)],
        |(f, _, _)| {
            let bij = is_bijective(c, f)?;
            let iso = is_dagger_iso(c, f)?;
            Ok((bij != iso).then(|| Fail {
                detail: format!("bijective = {bij}, dagger iso = {iso}"),
                values: Vec::new(),
            }))
        },
    );
}

fn pick_one<T: Clone>(items: &[T], rng: &mut Rng8) -> Option<T> {
    (!items.is_empty()).then(|| items[rng.gen_range(0..items.len())].clone())
}

pub fn orthomodular<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor> + Orthocomplemented,
    G: Generator,
{
    cx.cases(g, "double-negation", 2, &[(0, 1)], |_, m| {
        Ok(expect_eq(g, "¬¬R = R", &c.negate(&c.negate(&m[0])?)?, &m[0]))
    });
    cx.cases(g, "complement", 2, &[(0, 1)], |o, m| {
        let r = &m[0];
        let n = c.negate(r)?;
        Ok(any(vec![
            expect_eq(g, "R ∧ ¬R = 0", &c.meet(r, &n)?, &c.bottom(&o[0], &o[1])),
            expect_eq(g, "R ∨ ¬R = ⊤", &c.join(r, &n)?, &c.top(&o[0], &o[1])),
        ]))
    });
    cx.cases(g, "order-reversing", 2, &[(0, 1), (0, 1)], |_, m| {
        let (r, s) = (&m[0], &c.join(&m[0], &m[1])?);
        expect_leq(c, g, "R ≤ S implies ¬S ≤ ¬R", &c.negate(s)?, &c.negate(r)?)
    });
    cx.cases(g, "orthomodular-law", 2, &[(0, 1), (0, 1)], |_, m| {
        let (r, s) = (&m[0], &c.join(&m[0], &m[1])?);
        let rhs = c.join(r, &c.meet(s, &c.negate(r)?)?)?;
        Ok(expect_eq(g, "R ≤ S implies S = R ∨ (S ∧ ¬R)", s, &rhs))
    });
    cx.cases(g, "negation-is-largest-perp", 2, &[(0, 1), (0, 1)], |o, m| {
        let (r, s) = (&m[0], &m[1]);
        let i = c.unit_object();
        let perp = trace(c, &c.compose(r, &c.dagger(s))?)? == c.bottom(&i, &i);
        let below = c.leq(s, &c.negate(r)?)?;
        let _ = o;
        Ok((perp != below).then(|| Fail {
            detail: format!("Tr(R∘S†) = 0 is {perp} but S ≤ ¬R is {below}"),
            values: Vec::new(),
        }))
    });
}

pub fn effects_oml<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor> + Orthocomplemented,
    G: Generator,
{
    let i = c.unit_object();
    let cfg = cx.config().clone();
    let effects = |rng: &mut Rng8| -> Result<Vec<(G::Mor, G::Mor)>> {
        let mut out = Vec::new();
        for x in objects(g, rng, cfg.samples.min(20)) {
            for (a, b) in pairs_of(g, &x, &i, rng, &cfg) {
                out.push((a, b));
            }
        }
        Ok(out)
    };
    cx.each_with(
        "effects-orthomodular",
        effects,
        |(r, s)| vec![g.show(r), g.show(s)],
        |(r, s)| {
            let x = c.source(r);
            let n = c.negate(r)?;
            let s = c.join(r, s)?;
            Ok(any(vec![
                expect_eq(g, "¬¬r = r", &c.negate(&n)?, r),
                expect_eq(g, "r ∧ ¬r = 0", &c.meet(r, &n)?, &c.bottom(&x, &i)),
                expect_eq(g, "r ∨ ¬r = ⊤", &c.join(r, &n)?, &c.top(&x, &i)),
                expect_eq(g, "r ≤ s implies s = r ∨ (s ∧ ¬r)", &s, &c.join(r, &c.meet(&s, &n)?)?),
                expect_leq(c, g, "r ≤ s implies ¬s ≤ ¬r", &c.negate(&s)?, &n)?,
            ]))
        },
    );
    cx.cases(g, "coname-ortho-isomorphism", 2, &[(0, 1), (0, 1)], |_, m| {
        let (r, s) = (&m[0], &m[1]);
        let out = any(vec![expect_eq(g, "⌞¬r⌟ = ¬⌞r⌟", &coname(c, &c.negate(r)?)?, &c.negate(&coname(c, r)?)?)]);
        if out.is_some() {
            return Ok(out);
        }
        if c.leq(r, s)? != c.leq(&coname(c, r)?, &coname(c, s)?)? {
            return Ok(fail("coname does not reflect the order"));
        }
        Ok(None)
    });
}

fn pairs_of<G: Generator>(g: &G, x: &G::Obj, y: &G::Obj, rng: &mut Rng8, cfg: &super::Config) -> Vec<(G::Mor, G::Mor)> {
    match g.homset(x, y) {
        Some(all) if all.len() * all.len() <= cfg.exhaustive_limit => {
            let mut out = Vec::new();
            for a in &all {
                for b in &all {
                    out.push((a.clone(), b.clone()));
                }
            }
            out
        }
        _ => (0..cfg.tuple_samples)
            .map(|_| (g.random_morphism(x, y, rng), g.random_morphism(x, y, rng)))
            .collect(),
    }
}

fn show_pre<G: Generator>(g: &G, p: &Preordered<G::Obj, G::Mor>) -> Value {
    serde_json::json!({"object": g.show_object(&p.object), "order": g.show(&p.le)})
}

/// Preordered objects drawn from the generator.
fn preordered<C, G>(c: &C, g: &G, rng: &mut Rng8, cfg: &super::Config, per_object: usize) -> Result<Vec<Preordered<G::Obj, G::Mor>>>
where
    C: Quantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let mut out = Vec::new();
    for x in objects(g, rng, cfg.samples.min(12)) {
        let mut ps = preorders(c, g, &x, rng, 64, per_object)?;
        while ps.len() > per_object {
            let k = rng.gen_range(0..ps.len());
            ps.swap_remove(k);
        }
        for le in ps {
            out.push(make_preordered(c, &x, &le)?);
        }
    }
    Ok(out)
}

/// Monotone maps between drawn preordered objects.
fn monotone_maps<C, G>(c: &C, g: &G, rng: &mut Rng8, cfg: &super::Config, want: usize) -> Result<Vec<(PreorderedOf<C>, PreorderedOf<C>, G::Mor)>>
where
    C: DaggerQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let pres = preordered(c, g, rng, cfg, 4)?;
    let mut out = Vec::new();
    let mut attempts = 0;
    while out.len() < want && attempts < want * 40 && !pres.is_empty() {
        attempts += 1;
        let p = &pres[rng.gen_range(0..pres.len())];
        let r = &pres[rng.gen_range(0..pres.len())];
        let Some(f) = pick_one(&maps(c, g, &p.object, &r.object, rng, 64, 1)?, rng) else { continue };
        if is_monotone_map(c, &f, p, r)? {
            out.push((p.clone(), r.clone(), f));
        }
    }
    Ok(out)
}

pub fn preorder_laws<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let cfg = cx.config().clone();
    cx.each_with(
        "opposite-and-dual",
        |rng| preordered(c, g, rng, &cfg, 6),
        |p| vec![show_pre(g, p)],
        |p| {
            let op = opposite(c, p)?;
            let du = dual(c, p)?;
            Ok(any(vec![
                expect_eq(g, "(X^op)^op = X", &opposite(c, &op)?.le, &p.le),
                expect_eq(g, "X** = X", &dual(c, &du)?.le, &p.le),
            ]))
        },
    );
    cx.each_with(
        "monotone-map-conditions-agree",
        |rng| {
            let pres = preordered(c, g, rng, &cfg, 3)?;
            let mut out = Vec::new();
            for _ in 0..cfg.samples {
                if pres.is_empty() {
                    break;
                }
                let p = pres[rng.gen_range(0..pres.len())].clone();
                let r = pres[rng.gen_range(0..pres.len())].clone();
                if let Some(f) = pick_one(&maps(c, g, &p.object, &r.object, rng, 64, 1)?, rng) {
                    out.push((p, r, f));
                }
            }
            Ok(out)
        },
        |(p, r, f)| vec![show_pre(g, p), show_pre(g, r), g.show(f)],
        |(p, r, f)| {
            let flat_src = flat(c, &p.object);
            let trivially = is_monotone_map(c, f, &flat_src, r)?;
            is_monotone_map(c, f, p, r)?;
            Ok((!trivially).then(|| Fail {
                detail: "a map out of a trivially ordered object is not monotone".into(),
                values: Vec::new(),
            }))
        },
    );
    cx.each_with(
        "order-isomorphisms",
        |rng| monotone_maps(c, g, rng, &cfg, cfg.samples),
        |(p, r, f)| vec![show_pre(g, p), show_pre(g, r), g.show(f)],
        |(p, r, f)| {
            let direct = is_order_isomorphism(c, f, p, r)?;
            let by_inverse = is_dagger_iso(c, f)? && is_order_isomorphism_with(c, f, &c.dagger(f), p, r)?;
            Ok((direct != by_inverse).then(|| Fail {
                detail: format!("order isomorphism: characterization {direct}, definition {by_inverse}"),
                values: Vec::new(),
            }))
        },
    );
    cx.each_with(
        "tensor-of-preorders",
        |rng| {
            let pres = preordered(c, g, rng, &cfg, 3)?;
            let mut out = Vec::new();
            for _ in 0..cfg.samples.min(40) {
                if pres.is_empty() {
                    break;
                }
                out.push((pres[rng.gen_range(0..pres.len())].clone(), pres[rng.gen_range(0..pres.len())].clone()));
            }
            Ok(out)
        },
        |(p, r)| vec![show_pre(g, p), show_pre(g, r)],
        |(p, r)| {
            preorder_tensor(c, p, r)?;
            Ok(None)
        },
    );
    cx.each_with(
        "monotone-relations-closed",
        |rng| {
            let pres = preordered(c, g, rng, &cfg, 3)?;
            let mut out = Vec::new();
            for _ in 0..cfg.samples {
                if pres.is_empty() {
                    break;
                }
                let p = pres[rng.gen_range(0..pres.len())].clone();
                let r = pres[rng.gen_range(0..pres.len())].clone();
                let s = pres[rng.gen_range(0..pres.len())].clone();
                let wrap = |v: G::Mor, a: &PreorderedOf<C>, b: &PreorderedOf<C>| -> Result<G::Mor> {
                    c.chain(&[&ge(c, b), &v, &ge(c, a)])
                };
                let v = wrap(g.random_morphism(&p.object, &r.object, rng), &p, &r)?;
                let v2 = wrap(g.random_morphism(&p.object, &r.object, rng), &p, &r)?;
                let w = wrap(g.random_morphism(&r.object, &s.object, rng), &r, &s)?;
                out.push((p, r, s, v, v2, w));
            }
            Ok(out)
        },
        |(_, _, _, v, v2, w)| vec![g.show(v), g.show(v2), g.show(w)],
        |(p, r, s, v, v2, w)| {
            let flags = [
                is_monotone_relation(c, v, p, r)?,
                is_monotone_relation(c, &c.compose(w, v)?, p, s)?,
                is_monotone_relation(c, &c.join(v, v2)?, p, r)?,
                is_monotone_relation(c, &c.dagger(v), &opposite(c, r)?, &opposite(c, p)?)?,
                is_monotone_relation(c, &c.bottom(&p.object, &r.object), p, r)?,
            ];
            Ok(expect_all("monotone relations", &["≽∘v∘≽", "w∘v", "v ∨ v'", "v† on opposites", "⊥"], &flags))
        },
    );
}

pub fn diamonds<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: DaggerQuantaloid<Obj = G::Obj, Mor = G::Mor>,
    G: Generator,
{
    let cfg = cx.config().clone();
    cx.each_with(
        "diamond-adjunction",
        |rng| monotone_maps(c, g, rng, &cfg, cfg.samples),
        |(p, r, f)| vec![show_pre(g, p), show_pre(g, r), g.show(f)],
        |(p, r, f)| {
            let lo = diamond_lower(c, f, p, r)?;
            let up = diamond_upper(c, f, p, r)?;
            let flags = [is_monotone_relation(c, &lo, p, r)?, is_monotone_relation(c, &up, r, p)?];
            if let Some(bad) = expect_all("diamonds are monotone relations", &["f◇", "f^◇"], &flags) {
                return Ok(Some(bad));
            }
            Ok(any(vec![
                expect_leq(c, g, "f◇∘f^◇ ≤ id", &c.compose(&lo, &up)?, &ge(c, r))?,
                expect_leq(c, g, "f^◇∘f◇ ≥ id", &ge(c, p), &c.compose(&up, &lo)?)?,
            ]))
        },
    );
    cx.each_with(
        "diamond-functorial",
        |rng| {
            let ms = monotone_maps(c, g, rng, &cfg, cfg.samples * 2)?;
            let mut out = Vec::new();
            for (p, r, f) in &ms {
                for (r2, s, h) in &ms {
                    if r2 == r && out.len() < cfg.samples {
                        out.push((p.clone(), r.clone(), s.clone(), f.clone(), h.clone()));
                    }
                }
            }
            Ok(out)
        },
        |(_, _, _, f, h)| vec![g.show(f), g.show(h)],
        |(p, r, s, f, h)| {
            let hf = c.compose(h, f)?;
            Ok(any(vec![
                expect_eq(
                    g,
                    "(h∘f)◇ = h◇∘f◇",
                    &diamond_lower(c, &hf, p, s)?,
                    &c.compose(&diamond_lower(c, h, r, s)?, &diamond_lower(c, f, p, r)?)?,
                ),
                expect_eq(
                    g,
                    "(h∘f)^◇ = f^◇∘h^◇",
                    &diamond_upper(c, &hf, p, s)?,
                    &c.compose(&diamond_upper(c, f, p, r)?, &diamond_upper(c, h, r, s)?)?,
                ),
                expect_eq(g, "id◇ = ≽", &diamond_lower(c, &c.identity(&p.object), p, p)?, &ge(c, p)),
            ]))
        },
    );
}

pub fn monrel<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = G::Obj, Mor = G::Mor> + Biproducts,
    G: Generator,
{
    let cfg = cx.config().clone();
    cx.each_with(
        "monrel-biproduct",
        |rng| {
            let pres = preordered(c, g, rng, &cfg, 3)?;
            let mut out = Vec::new();
            for _ in 0..cfg.samples.min(60) {
                if pres.is_empty() {
                    break;
                }
                let k = rng.gen_range(0..=2);
                out.push((0..k).map(|_| pres[rng.gen_range(0..pres.len())].clone()).collect::<Vec<_>>());
            }
            Ok(out)
        },
        |fam| fam.iter().map(|p| show_pre(g, p)).collect(),
        |fam| {
            let labelled: Vec<_> = fam.iter().enumerate().map(|(k, p)| (Label::Index(k), p.clone())).collect();
            let bp = monrel_biproduct(c, &labelled)?;
            let mut out = Vec::new();
            for (a, pa) in fam.iter().enumerate() {
                out.push(
                    (!is_monotone_relation(c, &bp.injections[a], pa, &bp.object)?
                        || !is_monotone_relation(c, &bp.projections[a], &bp.object, pa)?)
                    .then(|| Fail {
                        detail: "injection or projection is not a monotone relation".into(),
                        values: Vec::new(),
                    }),
                );
                for (b, pb) in fam.iter().enumerate() {
                    let lhs = c.compose(&bp.projections[b], &bp.injections[a])?;
                    let rhs = if a == b { ge(c, pa) } else { c.bottom(&pa.object, &pb.object) };
                    out.push(expect_eq(g, "p_β∘i_α = δ", &lhs, &rhs));
                }
            }
            let terms = bp
                .injections
                .iter()
                .zip(&bp.projections)
                .map(|(i, p)| c.compose(i, p))
                .collect::<Result<Vec<_>>>()?;
            let sum = c.sup(&bp.object.object, &bp.object.object, &terms)?;
            out.push(expect_eq(g, "⋁ i∘p = ≽", &sum, &ge(c, &bp.object)));
            Ok(any(out))
        },
    );
    cx.each_with(
        "monrel-compact",
        |rng| preordered(c, g, rng, &cfg, 4),
        |p| vec![show_pre(g, p)],
        |p| {
            let cpt = monrel_compact(c, p)?;
            let unit = flat(c, &c.unit_object());
            let pp = preorder_tensor(c, &cpt.dual, p)?;
            let qq = preorder_tensor(c, p, &cpt.dual)?;
            let mono = [
                is_monotone_relation(c, &cpt.eta, &unit, &pp)?,
                is_monotone_relation(c, &cpt.epsilon, &qq, &unit)?,
            ];
            if let Some(bad) = expect_all("unit and counit are monotone relations", &["η", "ε"], &mono) {
                return Ok(Some(bad));
            }
            Ok(any(vec![
                expect_eq(g, "left snake = ≽", &monrel_snake_left(c, p)?, &ge(c, p)),
                expect_eq(g, "right snake = ≽*", &monrel_snake_right(c, p)?, &ge(c, &cpt.dual)),
            ]))
        },
    );
}

pub fn eval_laws<C, G>(c: &C, g: &G, cx: &mut Cx)
where
    C: Biproducts<Obj = G::Obj, Mor = G::Mor> + MonoidalQuantaloid,
    G: Generator,
{
    cx.each(
        "eval-identities",
        [()],
        |_| Vec::new(),
        |_| {
            let omega = omega_order(c)?;
            let flags = eval_identities(c, &omega)?;
            Ok(expect_all("eval identities", &["p₀∘≼ = p₀", "p₁∘≼ = ⊤", "p₁∘≽ = p₁", "p₀∘≽ = ⊤"], &flags))
        },
    );
    let _ = g;
}
