//! Finite commutative unital quantales and the one-object quantaloids they
//! induce.

use std::fmt::Debug;
use std::hash::Hash;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::quantaloid::{
    CompactQuantaloid, DaggerQuantaloid, MonoidalQuantaloid, Quantaloid,
};

/// A complete lattice with an associative, commutative, unital
/// multiplication distributing over joins.
pub trait Quantale: Clone + Debug + Send + Sync {
    type Elem: Clone + Debug + PartialEq + Eq + Hash + Send + Sync;

    fn bottom(&self) -> Self::Elem;
    fn top(&self) -> Self::Elem;
    fn unit(&self) -> Self::Elem;
    fn join(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn meet(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn elements(&self) -> Vec<Self::Elem>;
    fn element_name(&self, a: &Self::Elem) -> String;
    fn parse_element(&self, name: &str) -> Result<Self::Elem>;

    fn leq(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.join(a, b) == *b
    }
}

/// The two-element Boolean quantale `{⊥ < ⊤}` with `· = ∧`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Boolean;

impl Quantale for Boolean {
    type Elem = bool;

    fn bottom(&self) -> bool {
        false
    }
    fn top(&self) -> bool {
        true
    }
    fn unit(&self) -> bool {
        true
    }
    fn join(&self, a: &bool, b: &bool) -> bool {
        *a || *b
    }
    fn meet(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn mul(&self, a: &bool, b: &bool) -> bool {
        *a && *b
    }
    fn elements(&self) -> Vec<bool> {
        vec![false, true]
    }
    fn element_name(&self, a: &bool) -> String {
        if *a { "1" } else { "0" }.to_string()
    }
    fn parse_element(&self, name: &str) -> Result<bool> {
        match name.trim() {
            "0" | "false" | "⊥" => Ok(false),
            "1" | "true" | "⊤" => Ok(true),
            other => Err(Error::parse(format!("not a Boolean: {other:?}"))),
        }
    }
}

/// Raw quantale tables as read from JSON; either `leq` or `join` must be given.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuantaleTables {
    pub elements: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<Vec<bool>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub join: Option<Vec<Vec<String>>>,
    pub mul: Vec<Vec<String>>,
    pub unit: String,
}

/// A validated finite quantale; elements are indices into `names`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteQuantale {
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
    meet: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    unit: usize,
    bottom: usize,
    top: usize,
}

/// Outcome of [`validate_quantale`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantaleReport {
    pub valid: bool,
    /// First violated law with its witnesses.
    pub violation: Option<String>,
    pub nontrivial: bool,
    pub affine: bool,
    pub idempotent: bool,
    pub commutative: bool,
    pub frame: bool,
}

struct Lattice {
    leq: Vec<Vec<bool>>,
    join: Vec<Vec<usize>>,
}

fn index_of(names: &[String], s: &str) -> Result<usize> {
    names
        .iter()
        .position(|n| n == s.trim())
        .ok_or_else(|| Error::InvalidQuantale(format!("unknown element {s:?}")))
}

fn square_table<T: Clone>(table: &[Vec<T>], n: usize, what: &str) -> Result<()> {
    if table.len() != n || table.iter().any(|row| row.len() != n) {
        return Err(Error::InvalidQuantale(format!("{what} table must be {n}x{n}")));
    }
    Ok(())
}

fn index_table(names: &[String], table: &[Vec<String>], what: &str) -> Result<Vec<Vec<usize>>> {
    square_table(table, names.len(), what)?;
    table
        .iter()
        .map(|row| row.iter().map(|s| index_of(names, s)).collect())
        .collect()
}

/// Builds the lattice from whichever table is present, cross-checking when both are.
fn lattice_from_tables(t: &QuantaleTables) -> Result<std::result::Result<Lattice, String>> {
    let n = t.elements.len();
    let names = &t.elements;
    let from_join = |join: &Vec<Vec<usize>>| -> Vec<Vec<bool>> {
        (0..n).map(|a| (0..n).map(|b| join[a][b] == b).collect()).collect()
    };
    let (leq, join) = match (&t.leq, &t.join) {
        (None, None) => {
            return Err(Error::InvalidQuantale("either leq or join table is required".into()))
        }
        (_, Some(j)) => {
            let join = index_table(names, j, "join")?;
            for a in 0..n {
                if join[a][a] != a {
                    return Ok(Err(format!("join not idempotent at {}", names[a])));
                }
                for b in 0..n {
                    if join[a][b] != join[b][a] {
                        return Ok(Err(format!(
                            "join not commutative at ({}, {})",
                            names[a], names[b]
                        )));
                    }
                    for c in 0..n {
                        if join[join[a][b]][c] != join[a][join[b][c]] {
                            return Ok(Err(format!(
                                "join not associative at ({}, {}, {})",
                                names[a], names[b], names[c]
                            )));
                        }
                    }
                }
            }
            let leq = from_join(&join);
            if let Some(given) = &t.leq {
                square_table(given, n, "leq")?;
                if *given != leq {
                    return Ok(Err("leq table disagrees with join table".into()));
                }
            }
            (leq, join)
        }
        (Some(l), None) => {
            square_table(l, n, "leq")?;
            for a in 0..n {
                if !l[a][a] {
                    return Ok(Err(format!("leq not reflexive at {}", names[a])));
                }
                for b in 0..n {
                    if a != b && l[a][b] && l[b][a] {
                        return Ok(Err(format!(
                            "leq not antisymmetric at ({}, {})",
                            names[a], names[b]
                        )));
                    }
                    for c in 0..n {
                        if l[a][b] && l[b][c] && !l[a][c] {
                            return Ok(Err(format!(
                                "leq not transitive at ({}, {}, {})",
                                names[a], names[b], names[c]
                            )));
                        }
                    }
                }
            }
            let mut join = vec![vec![0; n]; n];
            for a in 0..n {
                for b in 0..n {
                    let ubs: Vec<usize> = (0..n).filter(|&u| l[a][u] && l[b][u]).collect();
                    match ubs.iter().find(|&&u| ubs.iter().all(|&v| l[u][v])) {
                        Some(&u) => join[a][b] = u,
                        None => {
                            return Ok(Err(format!(
                                "no least upper bound of ({}, {})",
                                names[a], names[b]
                            )))
                        }
                    }
                }
            }
            (l.clone(), join)
        }
    };
    Ok(Ok(Lattice { leq, join }))
}

/// Checks every quantale axiom on raw tables.
///
/// Malformed tables (wrong sizes, unknown element names) are errors; a
/// well-formed table that violates a law yields a report with
/// `valid == false` and the first violation.
pub fn validate_quantale(t: &QuantaleTables) -> Result<QuantaleReport> {
    let n = t.elements.len();
    let names = &t.elements;
    let invalid = |msg: String| QuantaleReport {
        valid: false,
        violation: Some(msg),
        nontrivial: false,
        affine: false,
        idempotent: false,
        commutative: false,
        frame: false,
    };
    if n == 0 {
        return Ok(invalid("a complete lattice has a bottom element".into()));
    }
    for (k, a) in names.iter().enumerate() {
        if names[..k].contains(a) {
            return Err(Error::InvalidQuantale(format!("duplicate element {a:?}")));
        }
    }
    let mul = index_table(names, &t.mul, "mul")?;
    let unit = index_of(names, &t.unit)?;
    let lattice = match lattice_from_tables(t)? {
        Ok(l) => l,
        Err(msg) => return Ok(invalid(msg)),
    };
    let Lattice { leq, join } = lattice;
    // finite join-semilattices with a least element are complete
    let Some(bottom) = (0..n).find(|&b| (0..n).all(|a| leq[b][a])) else {
        return Ok(invalid("no bottom element".into()));
    };
    let top = (0..n).find(|&t| (0..n).all(|a| leq[a][t])).expect("finite join-semilattice");
    let meet = meet_table(&leq);

    for a in 0..n {
        for b in 0..n {
            if mul[a][b] != mul[b][a] {
                return Ok(invalid(format!(
                    "mul not commutative at ({}, {})",
                    names[a], names[b]
                )));
            }
            for c in 0..n {
                if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                    return Ok(invalid(format!(
                        "mul not associative at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
            }
        }
    }
    for a in 0..n {
        if mul[a][unit] != a {
            return Ok(invalid(format!("{} is not a unit at {}", names[unit], names[a])));
        }
        if mul[a][bottom] != bottom {
            return Ok(invalid(format!(
                "empty join not preserved: {}·⊥ ≠ ⊥",
                names[a]
            )));
        }
        for b in 0..n {
            for c in 0..n {
                if mul[join[a][b]][c] != join[mul[a][c]][mul[b][c]] {
                    return Ok(invalid(format!(
                        "mul does not distribute over join at ({}, {}, {})",
                        names[a], names[b], names[c]
                    )));
                }
            }
        }
    }
    let affine = unit == top;
    let idempotent = (0..n).all(|a| mul[a][a] == a);
    let frame = affine && (0..n).all(|a| (0..n).all(|b| mul[a][b] == meet[a][b]));
    Ok(QuantaleReport {
        valid: true,
        violation: None,
        nontrivial: n > 1,
        affine,
        idempotent,
        commutative: true,
        frame,
    })
}

fn meet_table(leq: &[Vec<bool>]) -> Vec<Vec<usize>> {
    let n = leq.len();
    (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    let lbs: Vec<usize> = (0..n).filter(|&l| leq[l][a] && leq[l][b]).collect();
                    *lbs.iter()
                        .find(|&&l| lbs.iter().all(|&m| leq[m][l]))
                        .expect("complete lattice has meets")
                })
                .collect()
        })
        .collect()
}

impl FiniteQuantale {
    /// Validates and builds a quantale; fails with the first violated law.
    pub fn from_tables(t: &QuantaleTables) -> Result<Self> {
        let report = validate_quantale(t)?;
        if !report.valid {
            return Err(Error::InvalidQuantale(
                report.violation.unwrap_or_else(|| "invalid".into()),
            ));
        }
        let names = t.elements.clone();
        let mul = index_table(&names, &t.mul, "mul")?;
        let unit = index_of(&names, &t.unit)?;
        let Lattice { leq, join } = lattice_from_tables(t)?.map_err(Error::InvalidQuantale)?;
        let n = names.len();
        let bottom = (0..n).find(|&b| (0..n).all(|a| leq[b][a])).expect("validated");
        let top = (0..n).find(|&t| (0..n).all(|a| leq[a][t])).expect("validated");
        let meet = meet_table(&leq);
        Ok(FiniteQuantale {
            names,
            leq,
            join,
            meet,
            mul,
            unit,
            bottom,
            top,
        })
    }

    /// A chain `names[0] < names[1] < …` with the given multiplication.
    fn chain(names: &[&str], unit: &str, mul: impl Fn(usize, usize) -> usize) -> Self {
        let n = names.len();
        let elements: Vec<String> = names.iter().map(|s| s.to_string()).collect();
        let tables = QuantaleTables {
            leq: Some((0..n).map(|a| (0..n).map(|b| a <= b).collect()).collect()),
            join: None,
            mul: (0..n)
                .map(|a| (0..n).map(|b| elements[mul(a, b)].clone()).collect())
                .collect(),
            unit: unit.to_string(),
            elements,
        };
        FiniteQuantale::from_tables(&tables).expect("built-in quantale is valid")
    }

    /// `{0 < 1}` with `· = ∧`.
    pub fn boolean() -> Self {
        Self::chain(&["0", "1"], "1", |a, b| a.min(b))
    }

    /// `{0 < 1/2 < 1}` with `· = min`; a frame.
    pub fn chain3_min() -> Self {
        Self::chain(&["0", "1/2", "1"], "1", |a, b| a.min(b))
    }

    /// `{0 < 1/3 < 2/3 < 1}` with `· = min`; a frame.
    pub fn chain4_min() -> Self {
        Self::chain(&["0", "1/3", "2/3", "1"], "1", |a, b| a.min(b))
    }

    /// `{0 < 1/2 < 1}` with Łukasiewicz `a·b = max(0, a+b-1)`; affine, not a frame.
    pub fn lukasiewicz3() -> Self {
        Self::chain(&["0", "1/2", "1"], "1", |a, b| (a + b).saturating_sub(2))
    }

    /// `{0 < e < ⊤}` with `⊤·⊤ = ⊤`; unit below top, so not affine.
    pub fn nonaffine3() -> Self {
        Self::chain(&["0", "e", "T"], "e", |a, b| match (a, b) {
            (0, _) | (_, 0) => 0,
            (1, x) | (x, 1) => x,
            _ => 2,
        })
    }

    /// A copy with one product entry overwritten and no validation, for
    /// mutation tests of the law suites.
    #[doc(hidden)]
    pub fn with_mutated_mul(&self, a: usize, b: usize, value: usize) -> Self {
        let mut out = self.clone();
        out.mul[a][b] = value;
        out
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn to_tables(&self) -> QuantaleTables {
        let n = self.size();
        QuantaleTables {
            elements: self.names.clone(),
            leq: Some(self.leq.clone()),
            join: None,
            mul: (0..n)
                .map(|a| (0..n).map(|b| self.names[self.mul[a][b]].clone()).collect())
                .collect(),
            unit: self.names[self.unit].clone(),
        }
    }

    pub fn report(&self) -> QuantaleReport {
        validate_quantale(&self.to_tables()).expect("tables of a built quantale")
    }

    pub fn is_affine(&self) -> bool {
        self.unit == self.top
    }

    pub fn is_frame(&self) -> bool {
        self.report().frame
    }
}

impl Quantale for FiniteQuantale {
    type Elem = usize;

    fn bottom(&self) -> usize {
        self.bottom
    }
    fn top(&self) -> usize {
        self.top
    }
    fn unit(&self) -> usize {
        self.unit
    }
    fn join(&self, a: &usize, b: &usize) -> usize {
        self.join[*a][*b]
    }
    fn meet(&self, a: &usize, b: &usize) -> usize {
        self.meet[*a][*b]
    }
    fn mul(&self, a: &usize, b: &usize) -> usize {
        self.mul[*a][*b]
    }
    fn elements(&self) -> Vec<usize> {
        (0..self.size()).collect()
    }
    fn element_name(&self, a: &usize) -> String {
        self.names[*a].clone()
    }
    fn parse_element(&self, name: &str) -> Result<usize> {
        index_of(&self.names, name).map_err(|_| Error::parse(format!("unknown element {name:?}")))
    }
    fn leq(&self, a: &usize, b: &usize) -> bool {
        self.leq[*a][*b]
    }
}

/// The built-in quantales by name.
pub fn builtin_quantales() -> Vec<(&'static str, FiniteQuantale)> {
    vec![
        ("bool2", FiniteQuantale::boolean()),
        ("chain3-min", FiniteQuantale::chain3_min()),
        ("chain4-min", FiniteQuantale::chain4_min()),
        ("lukasiewicz3", FiniteQuantale::lukasiewicz3()),
        ("nonaffine3", FiniteQuantale::nonaffine3()),
    ]
}

pub fn builtin_quantale(name: &str) -> Option<FiniteQuantale> {
    builtin_quantales()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, q)| q)
}

/// A quantale viewed as a one-object quantaloid: the base of V-Rel.
#[derive(Clone, Debug)]
pub struct QuantaleBase<Q> {
    quantale: Arc<Q>,
}

impl<Q: Quantale> QuantaleBase<Q> {
    pub fn new(quantale: Q) -> Self {
        QuantaleBase {
            quantale: Arc::new(quantale),
        }
    }

    pub fn quantale(&self) -> &Q {
        &self.quantale
    }
}

impl<Q: Quantale> Quantaloid for QuantaleBase<Q> {
    type Obj = ();
    type Mor = Q::Elem;

    fn source(&self, _: &Q::Elem) {}
    fn target(&self, _: &Q::Elem) {}

    fn compose(&self, g: &Q::Elem, f: &Q::Elem) -> Result<Q::Elem> {
        Ok(self.quantale.mul(f, g))
    }
    fn identity(&self, _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn bottom(&self, _: &(), _: &()) -> Q::Elem {
        self.quantale.bottom()
    }
    fn top(&self, _: &(), _: &()) -> Q::Elem {
        self.quantale.top()
    }
    fn join(&self, f: &Q::Elem, g: &Q::Elem) -> Result<Q::Elem> {
        Ok(self.quantale.join(f, g))
    }
    fn meet(&self, f: &Q::Elem, g: &Q::Elem) -> Result<Q::Elem> {
        Ok(self.quantale.meet(f, g))
    }
    fn leq(&self, f: &Q::Elem, g: &Q::Elem) -> Result<bool> {
        Ok(self.quantale.leq(f, g))
    }
    fn is_bottom(&self, f: &Q::Elem) -> bool {
        *f == self.quantale.bottom()
    }
}

impl<Q: Quantale> DaggerQuantaloid for QuantaleBase<Q> {
    fn dagger(&self, f: &Q::Elem) -> Q::Elem {
        f.clone()
    }
}

impl<Q: Quantale> MonoidalQuantaloid for QuantaleBase<Q> {
    fn unit_object(&self) {}
    fn tensor_objects(&self, _: &(), _: &()) {}
    fn tensor(&self, f: &Q::Elem, g: &Q::Elem) -> Q::Elem {
        self.quantale.mul(f, g)
    }
    fn associator(&self, _: &(), _: &(), _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn left_unitor(&self, _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn right_unitor(&self, _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn symmetry(&self, _: &(), _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn enumerate_scalars(&self) -> Option<Vec<Q::Elem>> {
        Some(self.quantale.elements())
    }
}

impl<Q: Quantale> CompactQuantaloid for QuantaleBase<Q> {
    fn dual(&self, _: &()) {}
    fn eta(&self, _: &()) -> Q::Elem {
        self.quantale.unit()
    }
    fn epsilon(&self, _: &()) -> Q::Elem {
        self.quantale.unit()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables(q: &FiniteQuantale) -> QuantaleTables {
        q.to_tables()
    }

    #[test]
    fn builtins_validate() {
        for (name, q) in builtin_quantales() {
            let r = q.report();
            assert!(r.valid, "{name}");
            assert!(r.nontrivial, "{name}");
        }
        assert!(FiniteQuantale::boolean().report().frame);
        assert!(FiniteQuantale::chain3_min().report().frame);
        let luk = FiniteQuantale::lukasiewicz3().report();
        assert!(luk.affine && !luk.frame && !luk.idempotent);
        assert!(!FiniteQuantale::nonaffine3().report().affine);
    }

    #[test]
    fn affine_idempotent_implies_frame() {
        for (_, q) in builtin_quantales() {
            let r = q.report();
            if r.affine && r.idempotent {
                assert!(r.frame);
            }
        }
    }

    #[test]
    fn non_associative_mul_is_reported() {
        let base = tables(&FiniteQuantale::chain3_min());
        // first commutative table on the 3-chain that is not associative
        let found = (0..3usize.pow(6)).find_map(|code| {
            let mut t = base.clone();
            let mut k = code;
            for a in 0..3 {
                for b in a..3 {
                    let v = t.elements[k % 3].clone();
                    k /= 3;
                    t.mul[a][b] = v.clone();
                    t.mul[b][a] = v;
                }
            }
            let r = validate_quantale(&t).unwrap();
            let msg = r.violation.unwrap_or_default();
            msg.contains("associative").then_some(msg)
        });
        let msg = found.expect("a non-associative table exists");
        assert!(msg.contains('(') && msg.matches(',').count() == 2, "{msg}");
    }

    #[test]
    fn join_table_input_is_cross_checked() {
        let q = FiniteQuantale::chain3_min();
        let mut t = tables(&q);
        t.join = Some(
            (0..3)
                .map(|a| (0..3).map(|b| q.names()[a.max(b)].clone()).collect())
                .collect(),
        );
        assert!(validate_quantale(&t).unwrap().valid);
        t.leq.as_mut().unwrap()[0][2] = false;
        assert!(!validate_quantale(&t).unwrap().valid);
        t.leq = None;
        assert_eq!(FiniteQuantale::from_tables(&t).unwrap(), q);
    }

    #[test]
    fn malformed_tables_are_errors() {
        let mut t = tables(&FiniteQuantale::boolean());
        t.mul.pop();
        assert!(validate_quantale(&t).is_err());
        let mut t = tables(&FiniteQuantale::boolean());
        t.unit = "7".into();
        assert!(validate_quantale(&t).is_err());
        let mut t = tables(&FiniteQuantale::boolean());
        t.leq = None;
        assert!(validate_quantale(&t).is_err());
    }

    #[test]
    fn json_shape() {
        let json = r#"{"elements":["0","1"],"leq":[[true,true],[false,true]],
                       "mul":[["0","0"],["0","1"]],"unit":"1"}"#;
        let t: QuantaleTables = serde_json::from_str(json).unwrap();
        assert_eq!(FiniteQuantale::from_tables(&t).unwrap(), FiniteQuantale::boolean());
    }
}
