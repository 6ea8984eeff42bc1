//! JSON forms of objects and morphisms for each instance.

use qlab::finrel::set_to_matr;
use qlab::qrel::{qrel, QuantumSet};
use qlab::quantale::FiniteQuantale;
use qlab::serial::{QRelationJson, RelationJson, SetJson, VRelationJson};
use qlab::vrel::{matr_to_vrelation, vrel_instance, vrelation_to_matr};
use qlab::{Biproducts, CompactQuantaloid, GaussianRational, Quantaloid, Result};
use serde_json::Value;

/// An instance together with its serialization.
pub trait Codec {
    type C: CompactQuantaloid + Biproducts;

    fn instance(&self) -> &Self::C;
    fn parse_object(&self, v: &Value) -> Result<<Self::C as Quantaloid>::Obj>;
    fn parse_morphism(&self, v: &Value) -> Result<<Self::C as Quantaloid>::Mor>;
    fn show_object(&self, x: &<Self::C as Quantaloid>::Obj) -> Value;
    fn show_morphism(&self, f: &<Self::C as Quantaloid>::Mor) -> Value;
}

fn from_value<T: serde::de::DeserializeOwned>(v: &Value) -> Result<T> {
    qlab::serial::parse(&v.to_string())
}

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("serializable")
}

pub struct RelCodec(pub qlab::Rel);

impl Codec for RelCodec {
    type C = qlab::Rel;

    fn instance(&self) -> &qlab::Rel {
        &self.0
    }
    fn parse_object(&self, v: &Value) -> Result<qlab::MatrObject<()>> {
        Ok(set_to_matr(&from_value::<SetJson>(v)?.to_set()?))
    }
    fn parse_morphism(&self, v: &Value) -> Result<qlab::MatrMorphism<(), bool>> {
        from_value::<RelationJson>(v)?.to_matr()
    }
    fn show_object(&self, x: &qlab::MatrObject<()>) -> Value {
        to_value(&SetJson::from_object(x))
    }
    fn show_morphism(&self, f: &qlab::MatrMorphism<(), bool>) -> Value {
        to_value(&RelationJson::from_matr(f))
    }
}

pub struct VRelCodec {
    pub quantale: FiniteQuantale,
    pub instance: qlab::VRel,
}

impl VRelCodec {
    pub fn new(quantale: FiniteQuantale) -> Self {
        VRelCodec {
            instance: vrel_instance(quantale.clone()),
            quantale,
        }
    }
}

impl Codec for VRelCodec {
    type C = qlab::VRel;

    fn instance(&self) -> &qlab::VRel {
        &self.instance
    }
    fn parse_object(&self, v: &Value) -> Result<qlab::MatrObject<()>> {
        Ok(set_to_matr(&from_value::<SetJson>(v)?.to_set()?))
    }
    fn parse_morphism(&self, v: &Value) -> Result<qlab::MatrMorphism<(), usize>> {
        let r = from_value::<VRelationJson>(v)?.to_vrelation(&self.quantale)?;
        Ok(vrelation_to_matr(&self.quantale, &r))
    }
    fn show_object(&self, x: &qlab::MatrObject<()>) -> Value {
        to_value(&SetJson::from_object(x))
    }
    fn show_morphism(&self, f: &qlab::MatrMorphism<(), usize>) -> Value {
        to_value(&VRelationJson::from_vrelation(&self.quantale, &matr_to_vrelation(&self.quantale, f)))
    }
}

pub struct QRelCodec(pub qlab::QRel);

impl QRelCodec {
    pub fn new() -> Self {
        QRelCodec(qrel::<GaussianRational>())
    }
}

impl Codec for QRelCodec {
    type C = qlab::QRel;

    fn instance(&self) -> &qlab::QRel {
        &self.0
    }
    fn parse_object(&self, v: &Value) -> Result<qlab::qrel::QObject> {
        from_value::<QuantumSet>(v)?.to_object()
    }
    fn parse_morphism(&self, v: &Value) -> Result<qlab::qrel::QMorphism<GaussianRational>> {
        from_value::<QRelationJson>(v)?.to_morphism(&self.0)
    }
    fn show_object(&self, x: &qlab::qrel::QObject) -> Value {
        to_value(&QuantumSet::from_object(x))
    }
    fn show_morphism(&self, f: &qlab::qrel::QMorphism<GaussianRational>) -> Value {
        to_value(&QRelationJson::from_morphism(f))
    }
}
