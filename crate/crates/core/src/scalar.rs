//! The scalar fields the exact linear algebra runs over.
//!
//! Everything in [`crate::matrix`] and [`crate::subspace`] is generic over
//! [`Scalar`]: an exact field with an involutive conjugation. Two instances
//! ship: [`BigRational`] (trivial conjugation) and
//! [`GaussianRational`](crate::gaussian::GaussianRational).

use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An exact field with conjugation.
pub trait Scalar:
    Clone
    + Debug
    + Display
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// Field involution; the identity on real fields.
    fn conj(&self) -> Self;

    fn from_int(n: i64) -> Self;

    /// Parses the textual form produced by `Display`.
    fn parse(text: &str) -> Result<Self>;

    /// Builds `re + im·i`, or `None` when the field has no imaginary unit.
    fn from_parts(re: BigRational, im: BigRational) -> Option<Self>;

    /// Squared modulus `z·conj(z)` as a rational.
    fn norm_sq(&self) -> BigRational;
}

impl Scalar for BigRational {
    fn conj(&self) -> Self {
        self.clone()
    }

    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn parse(text: &str) -> Result<Self> {
        parse_rational(text)
    }

    fn from_parts(re: BigRational, im: BigRational) -> Option<Self> {
        im.is_zero().then_some(re)
    }

    fn norm_sq(&self) -> BigRational {
        self * self
    }
}

/// Parses `a` or `a/b` with optional sign; whitespace is ignored.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(Error::parse("empty number"));
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s.as_str(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn is_negative(r: &BigRational) -> bool {
    r.is_negative()
}
