//! JSON forms of sets, relations, V-relations, quantum sets and quantum
//! relations. Parse errors carry line and column.

use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finrel::{BoolRelation, FiniteSet};
use crate::label::Label;
use crate::matr::{MatrMorphism, MatrObject};
use crate::matrix::ExactMatrix;
use crate::qrel::{QMorphism, QObject, QRelOver, QuantumSet};
use crate::quantale::{FiniteQuantale, Quantale};
use crate::scalar::Scalar;
use crate::subspace::OperatorSubspace;
use crate::vrel::VRelation;

/// Parses JSON text, reporting syntax and shape errors with their position.
pub fn parse<T: DeserializeOwned>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        let full = e.to_string();
        let suffix = format!(" at line {} column {}", e.line(), e.column());
        Error::Parse {
            line: e.line(),
            column: e.column(),
            message: full.strip_suffix(&suffix).unwrap_or(&full).to_string(),
        }
    })
}

/// Canonical pretty-printed JSON with a trailing newline.
pub fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable value");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetJson {
    pub labels: Vec<Label>,
}

impl SetJson {
    pub fn from_set(x: &FiniteSet) -> Self {
        SetJson {
            labels: x.labels().to_vec(),
        }
    }

    pub fn from_object<O: Clone + PartialEq + std::fmt::Debug>(x: &MatrObject<O>) -> Self {
        SetJson {
            labels: x.labels().cloned().collect(),
        }
    }

    pub fn to_set(&self) -> Result<FiniteSet> {
        FiniteSet::new(self.labels.clone())
    }
}

/// A relation as its set of related label pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationJson {
    pub source: SetJson,
    pub target: SetJson,
    pub pairs: Vec<(Label, Label)>,
}

impl RelationJson {
    pub fn from_relation(r: &BoolRelation) -> Self {
        RelationJson {
            source: SetJson::from_set(r.source()),
            target: SetJson::from_set(r.target()),
            pairs: r
                .pairs()
                .into_iter()
                .map(|(i, j)| (r.source().label(i).clone(), r.target().label(j).clone()))
                .collect(),
        }
    }

    pub fn to_relation(&self) -> Result<BoolRelation> {
        let (a, b) = (self.source.to_set()?, self.target.to_set()?);
        let pairs = self
            .pairs
            .iter()
            .map(|(x, y)| Ok((a.position(x)?, b.position(y)?)))
            .collect::<Result<Vec<_>>>()?;
        BoolRelation::from_pairs(&a, &b, &pairs)
    }

    pub fn from_matr(f: &MatrMorphism<(), bool>) -> Self {
        RelationJson {
            source: SetJson::from_object(f.source()),
            target: SetJson::from_object(f.target()),
            pairs: f
                .blocks()
                .keys()
                .map(|&(i, j)| (f.source().label(i).clone(), f.target().label(j).clone()))
                .collect(),
        }
    }

    pub fn to_matr(&self) -> Result<MatrMorphism<(), bool>> {
        Ok(crate::finrel::relation_to_matr(&self.to_relation()?))
    }
}

/// A V-relation as its non-bottom entries, values named by the quantale.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct VRelationJson {
    pub source: SetJson,
    pub target: SetJson,
    pub entries: Vec<(Label, Label, String)>,
}

impl VRelationJson {
    pub fn from_vrelation(q: &FiniteQuantale, r: &VRelation) -> Self {
        let (a, b) = (r.source(), r.target());
        let mut entries = Vec::new();
        for i in 0..a.len() {
            for j in 0..b.len() {
                let v = r.get(i, j);
                if v != q.bottom() {
                    entries.push((a.label(i).clone(), b.label(j).clone(), q.element_name(&v)));
                }
            }
        }
        VRelationJson {
            source: SetJson::from_set(a),
            target: SetJson::from_set(b),
            entries,
        }
    }

    pub fn to_vrelation(&self, q: &FiniteQuantale) -> Result<VRelation> {
        let (a, b) = (self.source.to_set()?, self.target.to_set()?);
        let mut m = vec![vec![q.bottom(); b.len()]; a.len()];
        for (x, y, v) in &self.entries {
            let (i, j) = (a.position(x)?, b.position(y)?);
            m[i][j] = q.join(&m[i][j], &q.parse_element(v)?);
        }
        VRelation::from_matrix(&a, &b, m)
    }
}

/// One block of a quantum relation: a basis of operators `C^{dim from} → C^{dim to}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BlockJson {
    pub from: Label,
    pub to: Label,
    pub basis: Vec<Vec<Vec<String>>>,
}

/// A quantum relation: nonzero blocks with canonical bases.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QRelationJson {
    pub source: QuantumSet,
    pub target: QuantumSet,
    pub blocks: Vec<BlockJson>,
}

impl QRelationJson {
    pub fn from_morphism<S: Scalar>(f: &QMorphism<S>) -> Self {
        QRelationJson {
            source: QuantumSet::from_object(f.source()),
            target: QuantumSet::from_object(f.target()),
            blocks: f
                .blocks()
                .iter()
                .map(|(&(i, j), v)| BlockJson {
                    from: f.source().label(i).clone(),
                    to: f.target().label(j).clone(),
                    basis: v.to_strings(),
                })
                .collect(),
        }
    }

    pub fn to_morphism<S: Scalar>(&self, q: &QRelOver<S>) -> Result<QMorphism<S>> {
        let (x, y): (QObject, QObject) = (self.source.to_object()?, self.target.to_object()?);
        let blocks = self
            .blocks
            .iter()
            .map(|b| {
                let (i, j) = (x.position(&b.from)?, y.position(&b.to)?);
                let (d, c) = (*x.component(i), *y.component(j));
                let mats = b
                    .basis
                    .iter()
                    .map(|rows| ExactMatrix::parse_rows(rows))
                    .collect::<Result<Vec<_>>>()?;
                Ok(((i, j), OperatorSubspace::span(&mats, d, c)?))
            })
            .collect::<Result<Vec<_>>>()?;
        q.morphism(&x, &y, blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrel::{qrel, shear_fixture};
    use crate::GaussianRational as G;

    #[test]
    fn parse_error_has_position() {
        let err = parse::<SetJson>("{\n  \"labels\": [1,\n  }").unwrap_err();
        match err {
            Error::Parse { line, .. } => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn relation_round_trip() {
        let a = FiniteSet::from_names(&["a", "b"]);
        let r = BoolRelation::from_pairs(&a, &a, &[(0, 1), (1, 1)]).unwrap();
        let j = RelationJson::from_relation(&r);
        let back: RelationJson = parse(&render(&j)).unwrap();
        assert_eq!(back.to_relation().unwrap(), r);
    }

    #[test]
    fn qrelation_round_trip() {
        let q = qrel::<G>();
        let (_, r, s) = shear_fixture::<G>();
        for f in [r, s] {
            let j = QRelationJson::from_morphism(&f);
            let back: QRelationJson = parse(&render(&j)).unwrap();
            assert_eq!(back.to_morphism(&q).unwrap(), f);
        }
    }

    #[test]
    fn vrelation_round_trip() {
        let q = FiniteQuantale::lukasiewicz3();
        let a = FiniteSet::indexed(2);
        let r = VRelation::from_matrix(&a, &a, vec![vec![0, 1], vec![2, 0]]).unwrap();
        let j = VRelationJson::from_vrelation(&q, &r);
        let back: VRelationJson = parse(&render(&j)).unwrap();
        assert_eq!(back.to_vrelation(&q).unwrap(), r);
    }
}
