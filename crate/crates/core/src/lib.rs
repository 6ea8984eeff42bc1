//! Exact computation in quantaloids of relations: Rel, V-Rel and the
//! quantum relations qRel, as matrices over a base quantaloid.

pub mod biproduct;
pub mod compact;
pub mod error;
pub mod fdos;
pub mod finrel;
pub mod gaussian;
pub mod label;
pub mod lawcheck;
pub mod matr;
pub mod matrix;
pub mod order;
pub mod power;
pub mod predicates;
pub mod quantale;
pub mod qrel;
pub mod quantaloid;
pub mod scalar;
pub mod serial;
pub mod subspace;
pub mod vrel;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use label::Label;
pub use matr::{Matr, MatrMorphism, MatrObject};
pub use quantale::{Boolean, FiniteQuantale, Quantale, QuantaleBase};
pub use quantaloid::{
    Biproduct, Biproducts, CompactQuantaloid, DaggerCompactBiproducts, DaggerQuantaloid,
    MonoidalQuantaloid, Orthocomplemented, Quantaloid,
};
pub use scalar::Scalar;

pub type Matrix = matrix::ExactMatrix<GaussianRational>;
pub type Subspace = subspace::OperatorSubspace<GaussianRational>;

/// Rel as matrices over the Boolean quantale.
pub type Rel = Matr<QuantaleBase<Boolean>>;
/// V-Rel for a finite quantale `V`.
pub type VRel = Matr<QuantaleBase<FiniteQuantale>>;
/// qRel over the Gaussian rationals.
pub type QRel = Matr<fdos::FdOs<GaussianRational>>;
/// qRel restricted to real rational scalars.
pub type RealQRel = Matr<fdos::FdOs<num_rational::BigRational>>;
