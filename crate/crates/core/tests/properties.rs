use num_traits::{One, Zero};
use proptest::prelude::*;

use qlab::finrel::{BoolRelation, FinRel, FiniteSet};
use qlab::lawcheck::{find_suite, render_json, run_suite, Config, Instance, Verdict};
use qlab::matrix::ExactMatrix;
use qlab::serial::{parse, render, RelationJson};
use qlab::subspace::OperatorSubspace;
use qlab::{GaussianRational as G, Quantaloid};

fn gaussian() -> impl Strategy<Value = G> {
    (-4i64..=4, -4i64..=4).prop_map(|(a, b)| G::from_ints(a, b))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = ExactMatrix<G>> {
    prop::collection::vec(gaussian(), rows * cols).prop_map(move |e| ExactMatrix::new(rows, cols, e).unwrap())
}

fn subspace(d: usize, c: usize) -> impl Strategy<Value = OperatorSubspace<G>> {
    prop::collection::vec(matrix(c, d), 0..=d * c).prop_map(move |ms| OperatorSubspace::span(&ms, d, c).unwrap())
}

fn relation(a: usize, b: usize) -> impl Strategy<Value = BoolRelation> {
    prop::collection::vec(any::<bool>(), a * b).prop_map(move |bits| {
        let pairs: Vec<_> = (0..a * b).filter(|&k| bits[k]).map(|k| (k / b, k % b)).collect();
        BoolRelation::from_pairs(&FiniteSet::indexed(a), &FiniteSet::indexed(b), &pairs).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_field_inverses(a in gaussian(), b in gaussian()) {
        prop_assert_eq!(a.clone() + b.clone() - b.clone(), a.clone());
        if !b.is_zero() {
            prop_assert_eq!(a.clone() * b.clone() / b.clone(), a);
            prop_assert!((b.clone() / b).is_one());
        }
    }

    #[test]
    fn adjoint_reverses_products(a in matrix(2, 3), b in matrix(3, 2)) {
        let lhs = a.mul(&b).unwrap().adjoint();
        let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn subspace_dimensions_are_modular(v in subspace(2, 2), w in subspace(2, 2)) {
        let (j, m) = (v.join(&w).unwrap(), v.meet(&w).unwrap());
        prop_assert_eq!(j.dim() + m.dim(), v.dim() + w.dim());
        prop_assert!(m.is_subspace_of(&v) && v.is_subspace_of(&j));
    }

    #[test]
    fn orthocomplement_is_an_involution(v in subspace(2, 2)) {
        let n = v.hs_orthocomplement();
        prop_assert_eq!(n.dim() + v.dim(), 4);
        prop_assert!(n.is_hs_orthogonal(&v));
        prop_assert_eq!(n.hs_orthocomplement(), v);
    }

    #[test]
    fn relation_composition_matches_pairs(r in relation(3, 2), s in relation(2, 3)) {
        let c = FinRel.compose(&s, &r).unwrap();
        for i in 0..3 {
            for k in 0..3 {
                let direct = (0..2).any(|j| r.get(i, j) && s.get(j, k));
                prop_assert_eq!(c.get(i, k), direct);
            }
        }
    }

    #[test]
    fn relations_round_trip_through_json(r in relation(3, 2)) {
        let text = render(&RelationJson::from_relation(&r));
        let back: RelationJson = parse(&text).unwrap();
        prop_assert_eq!(back.to_relation().unwrap(), r);
    }
}

#[test]
fn reports_are_reproducible() {
    let suite = find_suite("quantaloid").unwrap();
    for inst in [Instance::Rel, Instance::QRel] {
        let cfg = Config::with_seed(11);
        let a = run_suite(&suite, &inst, &cfg);
        let b = run_suite(&suite, &inst, &cfg);
        assert_eq!(a.verdict, Verdict::Pass);
        assert_eq!(render_json(&[a]), render_json(&[b]));
    }
}

#[test]
fn missing_structure_is_skipped() {
    let suite = find_suite("kernels").unwrap();
    let r = run_suite(&suite, &Instance::vrel("chain3-min").unwrap(), &Config::default());
    assert_eq!(r.verdict, Verdict::Skipped);
    assert!(r.skipped.is_some());
}
