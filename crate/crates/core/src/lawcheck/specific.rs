//! Law groups tied to one instance: kernels and effects of qRel, the
//! quantale-specific facts of V-Rel, power objects and the order suites that
//! need exhaustive enumeration.

use rand::Rng;
use serde_json::{json, Value};

use super::gen::{objects, per_closure, Generator, QRelGen, QuantaleGen, Rng8};
use super::{expect_all, expect_eq, fail, Cx, Fail, Outcome};
use crate::biproduct::{quote_coherence, quote_morphism, quote_object, quote_unit_coherence, unquote};
use crate::error::Result;
use crate::finrel::{
    exponential_via_power, matr_to_set, relation_to_matr, rel_is_zero_mono,
    rel_is_zero_mono_by_definition, rel_kernel, set_to_matr, BoolRelation, FinRel, FiniteSet, Function,
};
use crate::gaussian::GaussianRational;
use crate::matrix::ExactMatrix;
use crate::order::{downset_bijection, make_preordered, omega_order};
use crate::power::{counit, power_on_morphism, transpose, transposes_by_search, untranspose, SetPower};
use crate::predicates::{endorelation_class, is_dagger_iso, is_map, is_nondegenerate, is_affine};
use crate::qrel::{
    classical_codomain_map_check, dagger_kernel, is_perp_blockwise, is_perp_by_trace, is_zero_mono,
    shear_fixture, try_inverse, zero_monic_per_check, QMorphism, QObject, QRelOver,
};
use crate::quantale::{FiniteQuantale, Quantale};
use crate::quantaloid::{
    Biproducts, CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Orthocomplemented, Quantaloid,
};
use crate::serial::{RelationJson, VRelationJson};
use crate::subspace::OperatorSubspace;
use crate::vrel::{allegory_witness, circ_embed, kappa, matr_to_vrelation, vrelation_to_matr, DirectVRel, VRelation};

type G = GaussianRational;
type QM = QMorphism<G>;

fn any(outcomes: impl IntoIterator<Item = Outcome>) -> Outcome {
    outcomes.into_iter().flatten().next()
}

fn show_rel(r: &BoolRelation) -> Value {
    serde_json::to_value(RelationJson::from_relation(r)).expect("serializable")
}

/// Every relation between sets of at most `max` elements, with its sets.
fn all_relations(max: usize) -> Vec<BoolRelation> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            out.extend(BoolRelation::all(&FiniteSet::indexed(a), &FiniteSet::indexed(b)));
        }
    }
    out
}

/// Composable pairs of relations on sets of at most `max` elements:
/// exhaustive when every set has at most `full` elements, sampled otherwise.
fn relation_pairs(max: usize, full: usize, rng: &mut Rng8, per_shape: usize) -> Vec<(BoolRelation, BoolRelation)> {
    let mut out = Vec::new();
    for a in 0..=max {
        for b in 0..=max {
            for c in 0..=max {
                let (x, y, z) = (FiniteSet::indexed(a), FiniteSet::indexed(b), FiniteSet::indexed(c));
                let rs = BoolRelation::all(&x, &y);
                let ss = BoolRelation::all(&y, &z);
                if a.max(b).max(c) <= full {
                    for r in &rs {
                        for s in &ss {
                            out.push((r.clone(), s.clone()));
                        }
                    }
                } else {
                    for _ in 0..per_shape {
                        out.push((rs[rng.gen_range(0..rs.len())].clone(), ss[rng.gen_range(0..ss.len())].clone()));
                    }
                }
            }
        }
    }
    out
}

/// Laws of the embedding `` `(-) `` of Rel. `max` bounds the sets; laws
/// over pairs of relations are exhaustive up to `full` elements.
pub fn quote<C, Gn>(c: &C, g: &Gn, cx: &mut Cx, max: usize, full: usize)
where
    C: CompactQuantaloid<Obj = Gn::Obj, Mor = Gn::Mor> + Biproducts,
    Gn: Generator,
{
    let singles = all_relations(max);
    let per_shape = cx.config().tuple_samples;
    cx.each_with(
        "quote-functorial",
        |rng| Ok(relation_pairs(max, full, rng, per_shape)),
        |(r, s)| vec![show_rel(r), show_rel(s)],
        |(r, s)| {
            let lhs = quote_morphism(c, &FinRel.compose(s, r)?)?;
            let rhs = c.compose(&quote_morphism(c, s)?, &quote_morphism(c, r)?)?;
            let id = quote_morphism(c, &BoolRelation::identity(r.source()))?;
            let qa = quote_object(c, r.source())?;
            Ok(any([
                expect_eq(g, "`(s∘r) = `s∘`r", &lhs, &rhs),
                expect_eq(g, "`id = id", &id, &c.identity(&qa.object)),
            ]))
        },
    );
    cx.each(
        "quote-dagger-sup-faithful",
        singles.iter(),
        |r| vec![show_rel(r)],
        |r| {
            let q = quote_morphism(c, r)?;
            let (a, b) = (r.source(), r.target());
            let (qa, qb) = (quote_object(c, a)?.object, quote_object(c, b)?.object);
            let bot = quote_morphism(c, &BoolRelation::empty(a, b))?;
            Ok(any([
                expect_eq(g, "`(r†) = (`r)†", &quote_morphism(c, &FinRel.dagger(r))?, &c.dagger(&q)),
                expect_eq(g, "`⊥ = ⊥", &bot, &c.bottom(&qa, &qb)),
                (unquote(c, a, b, &q)? != **r).then(|| Fail {
                    detail: "unquote(`r) differs from r".into(),
                    values: Vec::new(),
                }),
            ]))
        },
    );
    cx.each_with(
        "quote-preserves-joins",
        |rng| {
            let mut out = Vec::new();
            for a in 0..=max {
                for b in 0..=max {
                    let (x, y) = (FiniteSet::indexed(a), FiniteSet::indexed(b));
                    let rs = BoolRelation::all(&x, &y);
                    if a.max(b) <= full {
                        for r in &rs {
                            out.extend(rs.iter().map(|s| (r.clone(), s.clone())));
                        }
                        continue;
                    }
                    for _ in 0..per_shape {
                        out.push((rs[rng.gen_range(0..rs.len())].clone(), rs[rng.gen_range(0..rs.len())].clone()));
                    }
                }
            }
            Ok(out)
        },
        |(r, s)| vec![show_rel(r), show_rel(s)],
        |(r, s)| {
            let lhs = quote_morphism(c, &FinRel.join(r, s)?)?;
            let rhs = c.join(&quote_morphism(c, r)?, &quote_morphism(c, s)?)?;
            Ok(expect_eq(g, "`(r ∨ s) = `r ∨ `s", &lhs, &rhs))
        },
    );
    let affine = is_affine(c);
    cx.each(
        "quote-preserves-top",
        (0..=max).flat_map(|a| (0..=max).map(move |b| (a, b))).filter(|_| affine),
        |(a, b)| vec![json!([a, b])],
        |&(a, b)| {
            let (x, y) = (FiniteSet::indexed(a), FiniteSet::indexed(b));
            let (qa, qb) = (quote_object(c, &x)?.object, quote_object(c, &y)?.object);
            Ok(expect_eq(g, "`⊤ = ⊤", &quote_morphism(c, &BoolRelation::full(&x, &y))?, &c.top(&qa, &qb)))
        },
    );
    cx.each(
        "quote-preserves-biproducts",
        (0..=max).flat_map(|a| (0..=max).map(move |b| (a, b))),
        |(a, b)| vec![json!([a, b])],
        |&(a, b)| {
            // A ⊔ B as indices 0..a then a..a+b, with injection relations.
            let (x, y, s) = (FiniteSet::indexed(a), FiniteSet::indexed(b), FiniteSet::indexed(a + b));
            let ia = BoolRelation::from_pairs(&x, &s, &(0..a).map(|k| (k, k)).collect::<Vec<_>>())?;
            let ib = BoolRelation::from_pairs(&y, &s, &(0..b).map(|k| (k, a + k)).collect::<Vec<_>>())?;
            let (qa, qb) = (quote_morphism(c, &ia)?, quote_morphism(c, &ib)?);
            let (pa, pb) = (c.dagger(&qa), c.dagger(&qb));
            let (ox, oy) = (quote_object(c, &x)?.object, quote_object(c, &y)?.object);
            let os = quote_object(c, &s)?.object;
            Ok(any([
                expect_eq(g, "p_A∘i_A = id", &c.compose(&pa, &qa)?, &c.identity(&ox)),
                expect_eq(g, "p_B∘i_B = id", &c.compose(&pb, &qb)?, &c.identity(&oy)),
                expect_eq(g, "p_B∘i_A = 0", &c.compose(&pb, &qa)?, &c.bottom(&ox, &oy)),
                expect_eq(
                    g,
                    "i_A∘p_A ∨ i_B∘p_B = id",
                    &c.join(&c.compose(&qa, &pa)?, &c.compose(&qb, &pb)?)?,
                    &c.identity(&os),
                ),
            ]))
        },
    );
    let two_scalars = c.enumerate_scalars().map(|s| s.len() == 2);
    let cfg = cx.config().clone();
    cx.each_with(
        "quote-full",
        |rng| {
            let mut out = Vec::new();
            if two_scalars == Some(false) {
                return Ok(out);
            }
            // every morphism `A → `B when the homsets are enumerable
            let mut finite = true;
            for a in 0..=max {
                for b in 0..=max {
                    let (x, y) = (FiniteSet::indexed(a), FiniteSet::indexed(b));
                    let (qa, qb) = (quote_object(c, &x)?.object, quote_object(c, &y)?.object);
                    match g.homset(&qa, &qb) {
                        Some(all) => out.extend(all.into_iter().map(|f| (x.clone(), y.clone(), f))),
                        None => finite = false,
                    }
                }
            }
            if !finite {
                out.clear();
                for _ in 0..cfg.samples {
                    let (x, y) = (FiniteSet::indexed(rng.gen_range(0..=max)), FiniteSet::indexed(rng.gen_range(0..=max)));
                    let (qa, qb) = (quote_object(c, &x)?.object, quote_object(c, &y)?.object);
                    out.push((x, y, g.random_morphism(&qa, &qb, rng)));
                }
            }
            Ok(out)
        },
        |(_, _, f)| vec![g.show(f)],
        |(x, y, f)| {
            let r = unquote(c, x, y, f)?;
            Ok(expect_eq(g, "`(unquote f) = f", &quote_morphism(c, &r)?, f))
        },
    );
    cx.each_with(
        "quote-monoidal",
        |rng| {
            let mut out = Vec::new();
            for a in 0..=max.min(2) {
                for b in 0..=max.min(2) {
                    for a2 in 0..=max.min(2) {
                        for b2 in 0..=max.min(2) {
                            let r = BoolRelation::all(&FiniteSet::indexed(a), &FiniteSet::indexed(a2));
                            let s = BoolRelation::all(&FiniteSet::indexed(b), &FiniteSet::indexed(b2));
                            for _ in 0..4 {
                                out.push((r[rng.gen_range(0..r.len())].clone(), s[rng.gen_range(0..s.len())].clone()));
                            }
                        }
                    }
                }
            }
            Ok(out)
        },
        |(r, s)| vec![show_rel(r), show_rel(s)],
        |(r, s)| {
            let (a, b, a2, b2) = (r.source(), s.source(), r.target(), s.target());
            let phi = quote_coherence(c, a, b)?;
            let phi2 = quote_coherence(c, a2, b2)?;
            let rs = FinRel.tensor(r, s);
            if rs.source() != &a.product(b) {
                return Ok(fail("product relation has unexpected labelling"));
            }
            let lhs = c.compose(&phi2, &c.tensor(&quote_morphism(c, r)?, &quote_morphism(c, s)?))?;
            let rhs = c.compose(&quote_morphism(c, &rs)?, &phi)?;
            let unit = quote_unit_coherence(c)?;
            Ok(any([
                (!is_dagger_iso(c, &phi)?).then(|| Fail {
                    detail: "φ is not a dagger isomorphism".into(),
                    values: vec![("φ".into(), g.show(&phi))],
                }),
                expect_eq(g, "φ∘(`r⊗`s) = `(r×s)∘φ", &lhs, &rhs),
                expect_eq(g, "unit coherence is the identity", &unit, &c.identity(&c.unit_object())),
            ]))
        },
    );
}

/// Dagger kernels of Rel: `E` is a dagger mono, `R∘E = 0`, and every `S`
/// with `R∘S = 0` factors as `E∘(E†∘S)`.
pub fn rel_kernels(cx: &mut Cx) {
    let rels = all_relations(3);
    cx.each(
        "kernel-properties",
        rels.iter(),
        |r| vec![show_rel(r)],
        |r| {
            let (_, e) = rel_kernel(r);
            let x = r.source();
            let mono = FinRel.compose(&FinRel.dagger(&e), &e)? == BoolRelation::identity(e.source());
            let zero = FinRel.compose(r, &e)?.pairs().is_empty();
            let mut universal = true;
            for w in [FiniteSet::indexed(1), FiniteSet::indexed(2)] {
                for s in BoolRelation::all(&w, x) {
                    if FinRel.compose(r, &s)?.pairs().is_empty() {
                        let t = FinRel.compose(&FinRel.dagger(&e), &s)?;
                        universal &= FinRel.compose(&e, &t)? == s;
                    }
                }
            }
            Ok(expect_all("dagger kernel", &["E†∘E = id", "R∘E = 0", "S = E∘E†∘S"], &[mono, zero, universal]))
        },
    );
    cx.each(
        "zero-mono-definitions-agree",
        rels.iter(),
        |r| vec![show_rel(r)],
        |r| {
            let by_kernel = rel_is_zero_mono(r);
            let by_def = rel_is_zero_mono_by_definition(r);
            let rdr = FinRel.compose(&FinRel.dagger(r), r)?;
            let square = rel_is_zero_mono(&rdr);
            Ok(((by_kernel, square) != (by_def, by_def)).then(|| Fail {
                detail: format!("zero-mono: kernel {by_kernel}, definition {by_def}, r†∘r {square}"),
                values: Vec::new(),
            }))
        },
    );
}

/// Zero-monic effects are `⊤` and zero-monic PERs are equivalences in Rel.
pub fn rel_zero_monic(cx: &mut Cx) {
    cx.each(
        "zero-monic-effects-are-top",
        (0..=3).flat_map(|n| BoolRelation::all(&FiniteSet::indexed(n), &FiniteSet::singleton())),
        |r| vec![show_rel(r)],
        |r| {
            let top = *r == BoolRelation::full(r.source(), r.target());
            Ok((rel_is_zero_mono(r) != top).then(|| Fail {
                detail: format!("effect is zero-monic = {}, top = {top}", !top),
                values: Vec::new(),
            }))
        },
    );
    cx.each(
        "zero-monic-pers-are-equivalences",
        (0..=3).flat_map(|n| {
            let x = FiniteSet::indexed(n);
            BoolRelation::all(&x, &x)
        }),
        |r| vec![show_rel(r)],
        |p| {
            let c = crate::finrel::rel_instance();
            let m = relation_to_matr(p);
            let class = endorelation_class(&c, &m)?;
            if !class.per || !rel_is_zero_mono(p) {
                return Ok(None);
            }
            Ok((!class.equivalence).then(|| Fail {
                detail: "zero-monic PER is not an equivalence relation".into(),
                values: Vec::new(),
            }))
        },
    );
}

/// `f†∘f = 0` iff `f = 0`.
pub fn nondegeneracy<C, Gn>(c: &C, g: &Gn, cx: &mut Cx)
where
    C: DaggerQuantaloid<Obj = Gn::Obj, Mor = Gn::Mor>,
    Gn: Generator,
{
    cx.cases(g, "nondegeneracy", 2, &[(0, 1)], |o, m| {
        let f = &m[0];
        let zero = c.compose(&c.dagger(f), f)? == c.bottom(&o[0], &o[0]);
        let is_bot = *f == c.bottom(&o[0], &o[1]);
        Ok((zero != is_bot).then(|| Fail {
            detail: format!("f†∘f = 0 is {zero} but f = 0 is {is_bot}"),
            values: Vec::new(),
        }))
    });
}

/// The common null space of the blocks of `r` leaving atom `i`, as
/// column vectors.
fn null_space(r: &QM, i: usize) -> Result<OperatorSubspace<G>> {
    let n = *r.source().component(i);
    let mut p = OperatorSubspace::full(1, n);
    for j in 0..r.target().len() {
        if let Some(b) = r.block(i, j) {
            p = p.meet(&b.kernel_intersection())?;
        }
    }
    Ok(p)
}

/// A relation `S : W → X` with `R∘S = 0`, built from null vectors of `R`.
pub fn annihilated(gen: &QRelGen<G>, r: &QM, rng: &mut Rng8) -> Result<(QObject, QM)> {
    let q = &gen.instance;
    let x = r.source().clone();
    let w = gen.random_object(rng);
    let mut blocks = Vec::new();
    for i in 0..x.len() {
        let nulls = null_space(r, i)?;
        if nulls.is_zero() {
            continue;
        }
        let n = *x.component(i);
        for k in 0..w.len() {
            let d = *w.component(k);
            let count = rng.gen_range(0..=2);
            let mut mats = Vec::new();
            for _ in 0..count {
                // Σ_v v·u_v† with v in the null space and u random.
                let mut m = ExactMatrix::<G>::zeros(n, d);
                for v in nulls.basis() {
                    let u = gen.random_matrix(1, d, rng);
                    m = m.add(&v.mul(&u)?)?;
                }
                mats.push(m);
            }
            blocks.push(((k, i), OperatorSubspace::span(&mats, d, n)?));
        }
    }
    Ok((w.clone(), q.morphism(&w, &x, blocks)?))
}

/// Checks a candidate dagger kernel `E` of `R` against test relations `S`
/// annihilated by `R`.
pub fn check_kernel(q: &QRelOver<G>, r: &QM, e: &QM, tests: &[QM]) -> Result<Outcome> {
    let k = e.source().clone();
    let mono = q.compose(&q.dagger(e), e)? == q.identity(&k);
    let zero = q.is_bottom(&q.compose(r, e)?);
    let mut factor = true;
    for s in tests {
        if !q.is_bottom(&q.compose(r, s)?) {
            return Ok(fail("test relation is not annihilated by R"));
        }
        let t = q.compose(&q.dagger(e), s)?;
        factor &= q.compose(e, &t)? == *s;
    }
    Ok(expect_all("dagger kernel", &["E†∘E = id", "R∘E = 0", "E∘(E†∘S) = S"], &[mono, zero, factor]))
}

pub fn qrel_kernels(gen: &QRelGen<G>, cx: &mut Cx) {
    let q = &gen.instance;
    let cfg = cx.config().clone();
    cx.each_with(
        "dagger-kernel",
        |rng| {
            let mut out = Vec::new();
            for _ in 0..cfg.samples {
                let (x, y) = (gen.random_object(rng), gen.random_object(rng));
                let r = gen.random_morphism(&x, &y, rng);
                let mut tests = Vec::new();
                for _ in 0..20 {
                    tests.push(annihilated(gen, &r, rng)?.1);
                }
                out.push((r, tests));
            }
            Ok(out)
        },
        |(r, _)| vec![gen.show(r)],
        |(r, tests)| {
            let (_, e) = dagger_kernel(q, r)?;
            check_kernel(q, r, &e, tests)
        },
    );
    cx.each_with(
        "zero-mono-iff-square",
        |rng| {
            Ok((0..cfg.samples)
                .map(|_| {
                    let (x, y) = (gen.random_object(rng), gen.random_object(rng));
                    gen.random_morphism(&x, &y, rng)
                })
                .collect())
        },
        |r| vec![gen.show(r)],
        |r: &QM| {
            let a = is_zero_mono(r)?;
            let b = is_zero_mono(&q.compose(&q.dagger(r), r)?)?;
            let by_kernel = dagger_kernel(q, r)?.0.len() == 0;
            Ok(((a, a) != (b, by_kernel)).then(|| Fail {
                detail: format!("r zero-mono {a}, r†∘r zero-mono {b}, trivial kernel {by_kernel}"),
                values: Vec::new(),
            }))
        },
    );
}

/// Lines `span{(1, z)}` and `span{(z, 1)}` in `C²` for Gaussian integers
/// `z` with parts in `-2..=2`, as `rows × cols` matrices.
fn line_grid(rows: usize, cols: usize) -> Vec<ExactMatrix<G>> {
    let mut out = Vec::new();
    for re in -2i64..=2 {
        for im in -2i64..=2 {
            let z = G::from_ints(re, im);
            for v in [[<G as num_traits::One>::one(), z.clone()], [z.clone(), <G as num_traits::One>::one()]] {
                let m = if rows == 1 {
                    ExactMatrix::from_rows(vec![v.to_vec()])
                } else {
                    ExactMatrix::from_rows(vec![vec![v[0].clone()], vec![v[1].clone()]])
                };
                out.push(m.expect("shape"));
            }
        }
    }
    let _ = cols;
    out
}

/// All effects on a single atom of dimension `d ≤ 2` up to the line grid.
fn atom_effects(d: usize) -> Vec<OperatorSubspace<G>> {
    let mut out = vec![OperatorSubspace::zero(d, 1), OperatorSubspace::full(d, 1)];
    if d == 2 {
        for m in line_grid(1, 2) {
            let s = OperatorSubspace::span(&[m], 2, 1).expect("1x2");
            if !out.contains(&s) {
                out.push(s);
            }
        }
    }
    out
}

pub fn qrel_effects(gen: &QRelGen<G>, cx: &mut Cx) {
    let q = &gen.instance;
    let one = q.unit_object();
    let mut singles = Vec::new();
    for d in 1..=2 {
        let x = QRelGen::<G>::object(&[d]);
        for e in atom_effects(d) {
            singles.push(q.morphism(&x, &one, [((0, 0), e)]).expect("typed"));
        }
    }
    cx.each(
        "zero-monic-effects-single-atom",
        singles.iter(),
        |r| vec![gen.show(r)],
        |r: &&QM| {
            let x = r.source().clone();
            let d = *x.component(0);
            let zm = is_zero_mono(r)?;
            // By definition against the grid of states 1 → X.
            let mut states = vec![OperatorSubspace::full(1, d)];
            if d == 2 {
                states.extend(line_grid(2, 1).into_iter().map(|m| OperatorSubspace::span(&[m], 1, 2).expect("2x1")));
            }
            let mut by_def = true;
            for s in states {
                let f = q.morphism(&one, &x, [((0, 0), s)])?;
                if q.is_bottom(&q.compose(r, &f)?) {
                    by_def = false;
                }
            }
            let top = **r == q.top(&x, &one);
            Ok(((zm, by_def) != (top, top)).then(|| Fail {
                detail: format!("zero-mono {zm}, by states {by_def}, top {top}"),
                values: Vec::new(),
            }))
        },
    );
    let cfg = cx.config().clone();
    cx.each_with(
        "zero-monic-effects-sampled",
        |rng| {
            Ok((0..cfg.samples)
                .map(|_| {
                    let x = gen.random_object(rng);
                    if rng.gen_bool(0.2) {
                        q.top(&x, &one)
                    } else {
                        gen.random_morphism(&x, &one, rng)
                    }
                })
                .collect())
        },
        |r| vec![gen.show(r)],
        |r: &QM| {
            let top = *r == q.top(r.source(), &one);
            Ok((is_zero_mono(r)? != top).then(|| Fail {
                detail: format!("effect zero-mono differs from being top ({top})"),
                values: Vec::new(),
            }))
        },
    );
    cx.each_with(
        "zero-monic-pers-contain-identity",
        |rng| {
            let mut out = Vec::new();
            for _ in 0..cfg.samples * 5 {
                let x = gen.random_object(rng);
                let r = gen.random_morphism(&x, &x, rng);
                out.push(per_closure(q, &r)?);
            }
            Ok(out)
        },
        |p| vec![gen.show(p)],
        |p: &QM| {
            let check = zero_monic_per_check(q, p)?;
            Ok((!check.holds()).then(|| Fail {
                detail: "zero-monic PER does not contain the identity".into(),
                values: Vec::new(),
            }))
        },
    );
}

pub fn qrel_perp<Gn: Generator<Obj = QObject, Mor = QM>>(q: &QRelOver<G>, gen: &Gn, cx: &mut Cx) {
    cx.cases(gen, "perp-trace-agrees-with-blockwise", 2, &[(0, 1), (0, 1)], |_, m| {
        let (r, s) = (&m[0], &m[1]);
        let by_trace = is_perp_by_trace(q, r, s)?;
        let blockwise = is_perp_blockwise(q, r, s)?;
        let with_neg = is_perp_blockwise(q, r, &q.negate(r)?)?;
        Ok((by_trace != blockwise || !with_neg).then(|| Fail {
            detail: format!("R ⊥ S: trace {by_trace}, blockwise {blockwise}; R ⊥ ¬R blockwise {with_neg}"),
            values: Vec::new(),
        }))
    });
}

pub fn classical_codomain(gen: &QRelGen<G>, cx: &mut Cx) {
    let q = &gen.instance;
    let one = q.unit_object();
    let cfg = cx.config().clone();
    cx.each_with(
        "classical-codomain-criterion",
        |rng| {
            let mut out = Vec::new();
            for k in 0..cfg.samples {
                let x = gen.random_object(rng);
                let a = FiniteSet::indexed(rng.gen_range(1..=3));
                let effects = if k % 4 == 0 {
                    // a map X → `A split into its components
                    let qa = quote_object(q, &a)?;
                    match gen.random_map(&x, &qa.object, rng) {
                        Some(f) => qa.projections.iter().map(|p| q.compose(p, &f)).collect::<Result<Vec<_>>>()?,
                        None => continue,
                    }
                } else {
                    (0..a.len()).map(|_| gen.random_morphism(&x, &one, rng)).collect()
                };
                out.push((x, a, effects));
            }
            Ok(out)
        },
        |(_, _, es)| es.iter().map(|e| gen.show(e)).collect(),
        |(x, a, es)| {
            let check = classical_codomain_map_check(q, x, a, es)?;
            Ok((!check.agrees()).then(|| Fail {
                detail: format!(
                    "orthogonal {}, covers ⊤ {}, but is_map {}",
                    check.pairwise_orthogonal, check.covers_top, check.is_map
                ),
                values: Vec::new(),
            }))
        },
    );
}

pub fn shear(gen: &QRelGen<G>, cx: &mut Cx) {
    let q = &gen.instance;
    cx.each(
        "invertible-not-dagger-iso",
        [shear_fixture::<G>()],
        |(_, r, s)| vec![gen.show(r), gen.show(s)],
        |(h, r, s)| {
            let id = q.identity(h);
            let rdr = q.compose(&q.dagger(r), r)?;
            let inverse = try_inverse(q, r)?;
            Ok(any([
                expect_eq(gen, "S∘R = id", &q.compose(s, r)?, &id),
                expect_eq(gen, "R∘S = id", &q.compose(r, s)?, &id),
                (inverse.as_ref() != Some(s)).then(|| Fail {
                    detail: "inverse not found".into(),
                    values: Vec::new(),
                }),
                is_dagger_iso(q, r)?.then(|| Fail {
                    detail: "R is a dagger isomorphism".into(),
                    values: vec![("R†∘R".into(), gen.show(&rdr))],
                }),
                is_map(q, r)?.then(|| Fail {
                    detail: "R is a map".into(),
                    values: Vec::new(),
                }),
            ]))
        },
    );
}

fn show_vrel(q: &FiniteQuantale, r: &VRelation) -> Value {
    serde_json::to_value(VRelationJson::from_vrelation(q, r)).expect("serializable")
}

/// `(-)∘` is a faithful homomorphism of dagger quantaloids, `κ` is a
/// natural dagger isomorphism from `` `(-) ``, and the entrywise V-Rel agrees
/// with the matrix construction.
pub fn vrel_quantale(q: &FiniteQuantale, cx: &mut Cx) {
    let gen = QuantaleGen::new(q.clone(), 2);
    let v = &gen.instance;
    let direct = DirectVRel::new(q.clone());
    let per_shape = cx.config().tuple_samples;
    cx.each(
        "quantale-axioms",
        [q.to_tables()],
        |_| Vec::new(),
        |t| {
            FiniteQuantale::from_tables(t)?;
            Ok(None)
        },
    );
    let circ = |r: &BoolRelation| -> Result<_> { Ok(vrelation_to_matr(q, &circ_embed(q, r)?)) };
    cx.each_with(
        "circ-homomorphism",
        |rng| Ok(relation_pairs(2, 2, rng, per_shape)),
        |(r, s)| vec![show_rel(r), show_rel(s)],
        |(r, s)| {
            let lhs = circ(&FinRel.compose(s, r)?)?;
            let rhs = v.compose(&circ(s)?, &circ(r)?)?;
            Ok(any([
                expect_eq(&gen, "(s∘r)∘ = s∘∘r∘", &lhs, &rhs),
                expect_eq(&gen, "(r†)∘ = (r∘)†", &circ(&FinRel.dagger(r))?, &v.dagger(&circ(r)?)),
                expect_eq(
                    &gen,
                    "id∘ = id",
                    &circ(&BoolRelation::identity(r.source()))?,
                    &v.identity(&set_to_matr(r.source())),
                ),
            ]))
        },
    );
    let singles = all_relations(2);
    cx.each(
        "circ-faithful-and-sup",
        singles.iter(),
        |r| vec![show_rel(r)],
        |r| {
            let (a, b) = (r.source(), r.target());
            let images: Vec<_> = BoolRelation::all(a, b).iter().map(circ).collect::<Result<_>>()?;
            let mut distinct = images.clone();
            distinct.dedup();
            let injective = {
                let mut seen = Vec::new();
                images.iter().all(|m| {
                    let new = !seen.contains(&m);
                    seen.push(m);
                    new
                })
            };
            let s = BoolRelation::full(a, b);
            Ok(any([
                (!injective).then(|| Fail {
                    detail: "(-)∘ identifies two relations".into(),
                    values: Vec::new(),
                }),
                expect_eq(&gen, "(r ∨ ⊤)∘ = r∘ ∨ ⊤∘", &circ(&FinRel.join(r, &s)?)?, &v.join(&circ(r)?, &circ(&s)?)?),
            ]))
        },
    );
    cx.each_with(
        "kappa-natural-dagger-iso",
        |rng| Ok(relation_pairs(2, 2, rng, per_shape).into_iter().map(|(r, _)| r).collect::<Vec<_>>()),
        |r| vec![show_rel(r)],
        |r| {
            let (ka, kb) = (kappa(q, r.source())?, kappa(q, r.target())?);
            let lhs = v.compose(&kb, &quote_morphism(v, r)?)?;
            let rhs = v.compose(&circ(r)?, &ka)?;
            Ok(any([
                (!is_dagger_iso(v, &ka)?).then(|| Fail {
                    detail: "κ is not a dagger isomorphism".into(),
                    values: vec![("κ".into(), gen.show(&ka))],
                }),
                expect_eq(&gen, "κ_B∘`r = r∘∘κ_A", &lhs, &rhs),
            ]))
        },
    );
    let cfg = cx.config().clone();
    cx.each_with(
        "entrywise-agrees-with-matrices",
        |rng| {
            let mut out = Vec::new();
            for _ in 0..cfg.samples {
                let pick = |rng: &mut Rng8| gen.random_object(rng);
                let (x, y, z, w) = (pick(rng), pick(rng), pick(rng), pick(rng));
                out.push((
                    gen.random_morphism(&x, &y, rng),
                    gen.random_morphism(&y, &z, rng),
                    gen.random_morphism(&x, &y, rng),
                    gen.random_morphism(&z, &w, rng),
                ));
            }
            Ok(out)
        },
        |(f, h, f2, k)| vec![gen.show(f), gen.show(h), gen.show(f2), gen.show(k)],
        |(f, h, f2, k)| {
            let d = |m: &crate::matr::MatrMorphism<(), usize>| matr_to_vrelation(q, m);
            let back = |r: &VRelation| vrelation_to_matr(q, r);
            let x = f.source().clone();
            Ok(any([
                expect_eq(&gen, "compose", &back(&direct.compose(&d(h), &d(f))?), &v.compose(h, f)?),
                expect_eq(&gen, "dagger", &back(&direct.dagger(&d(f))), &v.dagger(f)),
                expect_eq(&gen, "join", &back(&direct.join(&d(f), &d(f2))?), &v.join(f, f2)?),
                expect_eq(&gen, "meet", &back(&direct.meet(&d(f), &d(f2))?), &v.meet(f, f2)?),
                expect_eq(&gen, "tensor", &back(&direct.tensor(&d(f), &d(k))), &v.tensor(f, k)),
                expect_eq(
                    &gen,
                    "identity",
                    &back(&direct.identity(&matr_to_set(&x))),
                    &v.identity(&x),
                ),
            ]))
        },
    );
}

pub fn allegory(q: &FiniteQuantale, cx: &mut Cx) -> Option<String> {
    if !q.is_affine() {
        return Some("the quantale is not affine".into());
    }
    let gen = QuantaleGen::new(q.clone(), 1);
    let v = &gen.instance;
    cx.each(
        "allegory-witness",
        [()],
        |_| Vec::new(),
        |_| {
            let w = allegory_witness(q)?;
            match (q.is_frame(), w) {
                (true, None) => Ok(None),
                (true, Some(_)) => Ok(fail("a frame produced a witness")),
                (false, None) => Ok(fail("a non-frame produced no witness")),
                (false, Some((x, r))) => {
                    let cube = q.mul(&x, &q.mul(&x, &x));
                    let m = vrelation_to_matr(q, &r);
                    let rhs = v.chain(&[&m, &v.dagger(&m), &m])?;
                    let modular = v.leq(&m, &rhs)?;
                    Ok((q.leq(&x, &cube) || modular).then(|| Fail {
                        detail: "witness does not violate r ≤ r∘r†∘r".into(),
                        values: vec![("r".into(), show_vrel(q, &r))],
                    }))
                }
            }
        },
    );
    None
}

/// Counts and triangle identities of `P(X)` for sets of at most `max`
/// elements, with uniqueness of transposes by search.
pub fn set_power<Q: Quantale>(quantale: Q, cx: &mut Cx, max: usize) {
    let ctx = match SetPower::new(quantale.clone()) {
        Ok(c) => c,
        Err(e) => {
            cx.each("power-object", [()], |_| Vec::new(), |_| Ok(fail(format!("error: {e}"))));
            return;
        }
    };
    let gen = QuantaleGen::new(quantale.clone(), max);
    let r = ctx.relations();
    let nv = quantale.elements().len();
    let shapes: Vec<(usize, usize)> = (0..=max).flat_map(|a| (0..=max).map(move |x| (a, x))).collect();
    cx.each(
        "power-object",
        shapes.iter(),
        |(a, x)| vec![json!({"A": a, "X": x})],
        |&&(a, x)| {
            let (sa, sx) = (FiniteSet::indexed(a), FiniteSet::indexed(x));
            let ox = set_to_matr(&sx);
            let pw = counit(&ctx, &ox)?;
            let hom = gen.homset(&set_to_matr(&sa), &ox).expect("small");
            let expected = nv.pow((a * x) as u32);
            let maps = pw.set().len().pow(a as u32);
            if hom.len() != expected || maps != expected {
                return Ok(fail(format!(
                    "|Set(A, P(X))| = {maps}, |Rel(A, X)| = {}, expected {expected}",
                    hom.len()
                )));
            }
            for v in &hom {
                let f = transpose(&ctx, &pw, v)?;
                if untranspose(&ctx, &pw, &f)? != *v {
                    return Ok(Some(Fail {
                        detail: "∋∘E(f_v) differs from v".into(),
                        values: vec![("v".into(), gen.show(v))],
                    }));
                }
                if transposes_by_search(&ctx, &pw, v)? != vec![f] {
                    return Ok(Some(Fail {
                        detail: "transpose is not unique".into(),
                        values: vec![("v".into(), gen.show(v))],
                    }));
                }
            }
            Ok(None)
        },
    );
    let cfg = cx.config().clone();
    cx.each_with(
        "power-functor",
        |rng| {
            let mut out = Vec::new();
            for _ in 0..cfg.samples {
                let o: Vec<_> = (0..3).map(|_| QuantaleGen::<Q>::set(rng.gen_range(0..=max.min(2)))).collect();
                out.push((gen.random_morphism(&o[0], &o[1], rng), gen.random_morphism(&o[1], &o[2], rng)));
            }
            Ok(out)
        },
        |(f, h)| vec![gen.show(f), gen.show(h)],
        |(f, h)| {
            let (x, y, z) = (f.source(), f.target(), h.target());
            let (px, py, pz) = (counit(&ctx, x)?, counit(&ctx, y)?, counit(&ctx, z)?);
            let lhs = power_on_morphism(&ctx, &px, &pz, &r.compose(h, f)?)?;
            let rhs = power_on_morphism(&ctx, &py, &pz, h)?.after(&power_on_morphism(&ctx, &px, &py, f)?)?;
            let id = power_on_morphism(&ctx, &px, &px, &r.identity(x))?;
            Ok(any([
                (lhs != rhs).then(|| Fail {
                    detail: "P(h∘f) differs from P(h)∘P(f)".into(),
                    values: Vec::new(),
                }),
                (id != Function::identity(px.set())).then(|| Fail {
                    detail: "P(id) is not the identity".into(),
                    values: Vec::new(),
                }),
            ]))
        },
    );
}

/// The truth-value bijection `X → I` against maps `X → Ω`.
pub fn omega_bijection<C, Gn>(c: &C, g: &Gn, cx: &mut Cx)
where
    C: CompactQuantaloid<Obj = Gn::Obj, Mor = Gn::Mor> + Biproducts + Orthocomplemented,
    Gn: Generator,
{
    let cfg = cx.config().clone();
    let i = c.unit_object();
    cx.each_with(
        "omega-effect-round-trip",
        |rng| {
            // Whole homsets when they are enumerable, otherwise samples.
            Ok(match g.exhaustive_objects() {
                Some(xs) => xs.iter().flat_map(|x| g.homset(x, &i).unwrap_or_default()).collect(),
                None => objects(g, rng, cfg.samples).into_iter().map(|x| g.random_morphism(&x, &i, rng)).collect(),
            })
        },
        |r| vec![g.show(r)],
        |r| {
            let omega = omega_order(c)?;
            let t = crate::power::omega_round_trip(c, &omega, r)?;
            Ok(expect_all("Ω round trip", &["⟨¬r, r⟩ is a map", "p₁∘⟨¬r, r⟩ = r", "p₀∘f = ¬r"], &[t.is_map, t.recovers, t.complement]))
        },
    );
    cx.each_with(
        "omega-map-round-trip",
        |rng| {
            let omega = omega_order(c)?;
            let mut out = Vec::new();
            if let Some(xs) = g.exhaustive_objects() {
                for x in xs {
                    for f in g.homset(&x, omega.object()).unwrap_or_default() {
                        if is_map(c, &f)? {
                            out.push(f);
                        }
                    }
                }
            } else {
                for x in objects(g, rng, cfg.samples) {
                    if let Some(f) = g.random_map(&x, omega.object(), rng) {
                        out.push(f);
                    }
                }
            }
            Ok(out)
        },
        |f| vec![g.show(f)],
        |f| {
            let omega = omega_order(c)?;
            Ok((!crate::power::omega_map_round_trip(c, &omega, f)?).then(|| Fail {
                detail: "map does not survive the round trip".into(),
                values: Vec::new(),
            }))
        },
    );
}

pub fn exponential(cx: &mut Cx) {
    let shapes: Vec<(usize, usize)> = (0..=3).flat_map(|a| (0..=3).map(move |b| (a, b))).collect();
    cx.each(
        "exponential-via-power",
        shapes.iter(),
        |(x, y)| vec![json!({"X": x, "Y": y})],
        |&&(nx, ny)| {
            let (x, y) = (FiniteSet::indexed(nx), FiniteSet::indexed(ny));
            let e = exponential_via_power(&x, &y)?;
            if e.object.len() != ny.pow(nx as u32) {
                return Ok(fail(format!("|Y^X| = {}, expected {}", e.object.len(), ny.pow(nx as u32))));
            }
            for (k, graph) in e.graphs.iter().enumerate() {
                let Some(f) = graph.as_function() else {
                    return Ok(fail("element of Y^X is not a function"));
                };
                for i in 0..nx {
                    if e.eval.apply(k * nx + i) != f.apply(i) {
                        return Ok(fail("evaluation differs from application"));
                    }
                }
            }
            let z = FiniteSet::indexed(2);
            for f in Function::all(&z.product(&x), &y) {
                if e.uncurry(&e.curry(&z, &f)?)? != f {
                    return Ok(fail("uncurry∘curry is not the identity"));
                }
            }
            Ok(None)
        },
    );
}

/// Down-sets of every partial order on at most 3 elements against monotone
/// maps into `Ω` and monotone effects.
pub fn downsets(cx: &mut Cx) {
    let c = crate::finrel::rel_instance();
    let mut posets = Vec::new();
    for n in 0..=3 {
        let x = FiniteSet::indexed(n);
        for le in BoolRelation::all(&x, &x) {
            let m = relation_to_matr(&le);
            if endorelation_class(&c, &m).map(|k| k.order).unwrap_or(false) {
                posets.push(le);
            }
        }
    }
    cx.each(
        "downset-bijection",
        posets.iter(),
        |le| vec![show_rel(le)],
        |le| {
            let omega = omega_order(&c)?;
            let x = set_to_matr(le.source());
            let p = make_preordered(&c, &x, &relation_to_matr(le))?;
            let maps: Vec<_> = BoolRelation::all(le.source(), &FiniteSet::indexed(2))
                .iter()
                .map(relation_to_matr)
                .map(|m| c.morphism(&x, omega.object(), m.blocks().iter().map(|(&k, &v)| (k, v))).expect("typed"))
                .collect();
            let effects: Vec<_> = BoolRelation::all(le.source(), &FiniteSet::singleton()).iter().map(relation_to_matr).collect();
            let b = downset_bijection(&c, &omega, &p, &maps, &effects)?;
            // Independent count of down-sets.
            let n = le.source().len();
            let count = (0..1usize << n)
                .filter(|mask| {
                    le.pairs().iter().all(|&(a, bb)| mask >> bb & 1 == 0 || mask >> a & 1 == 1)
                })
                .count();
            Ok((!b.holds() || b.monotone_maps != count).then(|| Fail {
                detail: format!(
                    "monotone maps {}, monotone effects {}, down-sets {count}, round trips {}/{}",
                    b.monotone_maps, b.monotone_relations, b.forward_round_trips, b.inverse_round_trips
                ),
                values: Vec::new(),
            }))
        },
    );
}

/// Instance flags: nondegenerate, affine, scalar count.
pub fn instance_flags<M: MonoidalQuantaloid>(m: &M) -> (bool, bool, usize) {
    (
        is_nondegenerate(m),
        is_affine(m),
        m.enumerate_scalars().map(|s| s.len()).unwrap_or(0),
    )
}
