//! Matrix calculus over dagger biproducts: tuples, cotuples, `Δ`/`∇`,
//! superposition sums, matrix elements, distributivity, and the embedding
//! `` `(-) `` of finite sets and relations.

use crate::error::{Error, Result};
use crate::finrel::{BoolRelation, FiniteSet};
use crate::label::{index_labels, Label};
use crate::quantaloid::{Biproduct, Biproducts, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid};

type Bp<C> = Biproduct<<C as Quantaloid>::Obj, <C as Quantaloid>::Mor>;

fn expect_len<T>(bp_len: usize, items: &[T]) -> Result<()> {
    if bp_len != items.len() {
        return Err(Error::Index(format!(
            "family has {} members but the biproduct has {bp_len} summands",
            items.len()
        )));
    }
    Ok(())
}

/// `⟨f_α⟩ = ⋁ i_α ∘ f_α : Y → ⊕ X_α`.
pub fn tuple<C: Biproducts>(c: &C, y: &C::Obj, bp: &Bp<C>, fs: &[C::Mor]) -> Result<C::Mor> {
    expect_len(bp.len(), fs)?;
    let terms = fs
        .iter()
        .zip(&bp.injections)
        .map(|(f, i)| c.compose(i, f))
        .collect::<Result<Vec<_>>>()?;
    c.sup(y, &bp.object, &terms)
}

/// `[g_α] = ⋁ g_α ∘ p_α : ⊕ X_α → Y`.
pub fn cotuple<C: Biproducts>(c: &C, y: &C::Obj, bp: &Bp<C>, gs: &[C::Mor]) -> Result<C::Mor> {
    expect_len(bp.len(), gs)?;
    let terms = gs
        .iter()
        .zip(&bp.projections)
        .map(|(g, p)| c.compose(g, p))
        .collect::<Result<Vec<_>>>()?;
    c.sup(&bp.object, y, &terms)
}

/// `n` copies of `x`, labelled `0, …, n-1`.
pub fn copies<C: Biproducts>(c: &C, x: &C::Obj, n: usize) -> Result<Bp<C>> {
    let family: Vec<_> = index_labels(n).into_iter().map(|l| (l, x.clone())).collect();
    c.biproduct(&family)
}

/// `Δ = ⟨id_X⟩ : X → ⊕_A X`.
pub fn delta<C: Biproducts>(c: &C, x: &C::Obj, bp: &Bp<C>) -> Result<C::Mor> {
    tuple(c, x, bp, &vec![c.identity(x); bp.len()])
}

/// `∇ = [id_X] : ⊕_A X → X`.
pub fn nabla<C: Biproducts>(c: &C, x: &C::Obj, bp: &Bp<C>) -> Result<C::Mor> {
    cotuple(c, x, bp, &vec![c.identity(x); bp.len()])
}

/// `⊕ f_α = ⋁ i'_α ∘ f_α ∘ p_α`.
pub fn direct_sum<C: Biproducts>(c: &C, source: &Bp<C>, target: &Bp<C>, fs: &[C::Mor]) -> Result<C::Mor> {
    expect_len(source.len(), fs)?;
    expect_len(target.len(), fs)?;
    let terms = fs
        .iter()
        .enumerate()
        .map(|(k, f)| c.chain(&[&target.injections[k], f, &source.projections[k]]))
        .collect::<Result<Vec<_>>>()?;
    c.sup(&source.object, &target.object, &terms)
}

/// `Σ f_α = ∇ ∘ (⊕ f_α) ∘ Δ` for parallel `f_α : X → Y`.
pub fn superposition_sum<C: Biproducts>(c: &C, x: &C::Obj, y: &C::Obj, fs: &[C::Mor]) -> Result<C::Mor> {
    for f in fs {
        if c.source(f) != *x || c.target(f) != *y {
            return Err(Error::ObjectMismatch("summands are not parallel".into()));
        }
    }
    let xs = copies(c, x, fs.len())?;
    let ys = copies(c, y, fs.len())?;
    c.chain(&[&nabla(c, y, &ys)?, &direct_sum(c, &xs, &ys, fs)?, &delta(c, x, &xs)?])
}

/// `f_{α,β} = p_β ∘ f ∘ i_α`.
pub fn matrix_element<C: Quantaloid>(
    c: &C,
    f: &C::Mor,
    source: &Biproduct<C::Obj, C::Mor>,
    target: &Biproduct<C::Obj, C::Mor>,
    alpha: usize,
    beta: usize,
) -> Result<C::Mor> {
    let (Some(i), Some(p)) = (source.injections.get(alpha), target.projections.get(beta)) else {
        return Err(Error::Index(format!("matrix element ({alpha}, {beta}) out of range")));
    };
    c.chain(&[p, f, i])
}

/// All matrix elements, indexed `[α][β]`.
pub fn matrix_elements<C: Quantaloid>(
    c: &C,
    f: &C::Mor,
    source: &Biproduct<C::Obj, C::Mor>,
    target: &Biproduct<C::Obj, C::Mor>,
) -> Result<Vec<Vec<C::Mor>>> {
    (0..source.len())
        .map(|a| (0..target.len()).map(|b| matrix_element(c, f, source, target, a, b)).collect())
        .collect()
}

/// `Σ i_β ∘ f_{α,β} ∘ p_α`.
pub fn reassemble<C: Quantaloid>(
    c: &C,
    source: &Biproduct<C::Obj, C::Mor>,
    target: &Biproduct<C::Obj, C::Mor>,
    elements: &[Vec<C::Mor>],
) -> Result<C::Mor> {
    expect_len(source.len(), elements)?;
    let mut terms = Vec::new();
    for (a, row) in elements.iter().enumerate() {
        expect_len(target.len(), row)?;
        for (b, f) in row.iter().enumerate() {
            terms.push(c.chain(&[&target.injections[b], f, &source.projections[a]])?);
        }
    }
    c.sup(&source.object, &target.object, &terms)
}

/// The canonical `φ = [id_X ⊗ i_α] : ⊕(X ⊗ Y_α) → X ⊗ ⊕Y_α` and its
/// inverse `ψ = ⟨id_X ⊗ p_α⟩`.
pub fn distributivity_iso<C>(c: &C, x: &C::Obj, ys: &[(Label, C::Obj)]) -> Result<(C::Mor, C::Mor)>
where
    C: Biproducts + MonoidalQuantaloid,
{
    let sum = c.biproduct(ys)?;
    let family: Vec<_> = ys
        .iter()
        .map(|(l, y)| (l.clone(), c.tensor_objects(x, y)))
        .collect();
    let split = c.biproduct(&family)?;
    let id = c.identity(x);
    let x_sum = c.tensor_objects(x, &sum.object);
    let phis: Vec<_> = sum.injections.iter().map(|i| c.tensor(&id, i)).collect();
    let psis: Vec<_> = sum.projections.iter().map(|p| c.tensor(&id, p)).collect();
    let phi = cotuple(c, &x_sum, &split, &phis)?;
    let psi = tuple(c, &x_sum, &split, &psis)?;
    Ok((phi, psi))
}

/// `` `A = ⊕_{α ∈ A} I ``.
pub fn quote_object<C: Biproducts + MonoidalQuantaloid>(c: &C, a: &FiniteSet) -> Result<Bp<C>> {
    let i = c.unit_object();
    let family: Vec<_> = a.labels().iter().map(|l| (l.clone(), i.clone())).collect();
    c.biproduct(&family)
}

/// `` `r = ⋁_{(α,β) ∈ r} i_β ∘ p_α ``.
pub fn quote_morphism<C: Biproducts + MonoidalQuantaloid>(c: &C, r: &BoolRelation) -> Result<C::Mor> {
    let a = quote_object(c, r.source())?;
    let b = quote_object(c, r.target())?;
    let terms = r
        .pairs()
        .into_iter()
        .map(|(i, j)| c.compose(&b.injections[j], &a.projections[i]))
        .collect::<Result<Vec<_>>>()?;
    c.sup(&a.object, &b.object, &terms)
}

/// `φ_{A,B} = ⟨λ_I ∘ (p_α ⊗ p_β)⟩_{(α,β)} : `A ⊗ `B → `(A × B)`.
pub fn quote_coherence<C: Biproducts + MonoidalQuantaloid>(c: &C, a: &FiniteSet, b: &FiniteSet) -> Result<C::Mor> {
    let qa = quote_object(c, a)?;
    let qb = quote_object(c, b)?;
    let qab = quote_object(c, &a.product(b))?;
    let i = c.unit_object();
    let lambda = c.left_unitor(&i);
    let mut components = Vec::with_capacity(a.len() * b.len());
    for pa in &qa.projections {
        for pb in &qb.projections {
            components.push(c.compose(&lambda, &c.tensor(pa, pb))?);
        }
    }
    tuple(c, &c.tensor_objects(&qa.object, &qb.object), &qab, &components)
}

/// `φ : I → `1`, which is the identity here since `` `1 `` is `I` itself.
pub fn quote_unit_coherence<C: Biproducts + MonoidalQuantaloid>(c: &C) -> Result<C::Mor> {
    let one = quote_object(c, &FiniteSet::singleton())?;
    if one.object != c.unit_object() {
        return Err(Error::Unsupported("`1 is not literally the unit object".into()));
    }
    Ok(c.identity(&one.object))
}

/// The relation `` `r `` names, read back off its matrix elements.
pub fn unquote<C: Biproducts + MonoidalQuantaloid + DaggerQuantaloid>(
    c: &C,
    a: &FiniteSet,
    b: &FiniteSet,
    f: &C::Mor,
) -> Result<BoolRelation> {
    let qa = quote_object(c, a)?;
    let qb = quote_object(c, b)?;
    let id = c.identity(&c.unit_object());
    let mut pairs = Vec::new();
    for i in 0..a.len() {
        for j in 0..b.len() {
            let e = matrix_element(c, f, &qa, &qb, i, j)?;
            if e == id {
                pairs.push((i, j));
            } else if !c.is_bottom(&e) {
                return Err(Error::Precondition(format!(
                    "matrix element ({i}, {j}) is neither 0 nor id"
                )));
            }
        }
    }
    BoolRelation::from_pairs(a, b, &pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finrel::{relation_to_matr, rel_instance, FinRel};
    use crate::fdos::FdOs;
    use crate::matr::Matr;
    use crate::GaussianRational;

    #[test]
    fn sums_are_sups_in_rel() {
        let rel = FinRel;
        let x = FiniteSet::indexed(2);
        let all = BoolRelation::all(&x, &x);
        let fam = [all[3].clone(), all[6].clone(), all[9].clone()];
        let sum = superposition_sum(&rel, &x, &x, &fam).unwrap();
        assert_eq!(sum, rel.sup(&x, &x, &fam).unwrap());
        assert_eq!(superposition_sum(&rel, &x, &x, &[]).unwrap(), rel.bottom(&x, &x));
    }

    #[test]
    fn quote_agrees_across_instances() {
        let a = FiniteSet::indexed(2);
        let r = BoolRelation::from_pairs(&a, &a, &[(0, 1), (1, 1)]).unwrap();
        let rel = rel_instance();
        assert_eq!(quote_morphism(&rel, &r).unwrap(), relation_to_matr(&r));
        assert_eq!(quote_morphism(&FinRel, &r).unwrap(), r);
        let q: Matr<FdOs<GaussianRational>> = Matr::new(FdOs::new());
        let qr = quote_morphism(&q, &r).unwrap();
        assert_eq!(unquote(&q, &a, &a, &qr).unwrap(), r);
    }

    #[test]
    fn distributivity_round_trip() {
        let q: Matr<FdOs<GaussianRational>> = Matr::new(FdOs::new());
        let x = crate::matr::MatrObject::new(vec![(Label::name("x"), 2)]).unwrap();
        let y1 = crate::matr::MatrObject::new(vec![(Label::Index(0), 1)]).unwrap();
        let y2 = crate::matr::MatrObject::new(vec![(Label::Index(0), 2), (Label::Index(1), 1)]).unwrap();
        let ys = [(Label::name("a"), y1), (Label::name("b"), y2)];
        let (phi, psi) = distributivity_iso(&q, &x, &ys).unwrap();
        assert_eq!(q.compose(&psi, &phi).unwrap(), q.identity(&q.source(&phi)));
        assert_eq!(q.compose(&phi, &psi).unwrap(), q.identity(&q.source(&psi)));
    }
}
