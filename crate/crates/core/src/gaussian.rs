//! Gaussian rationals: the field `Q(i)`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{fmt_rational, is_negative, parse_rational, Scalar};

/// A complex number with rational real and imaginary parts.
///
/// Both parts are kept in lowest terms with positive denominators (the
/// `BigRational` invariant), so structural equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational::new(re, im)
    }
}

impl Div for GaussianRational {
    type Output = Self;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: Self) -> Self {
        let n = rhs.norm_sq();
        let num = self * rhs.conj();
        GaussianRational::new(num.re / &n, num.im / n)
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl Scalar for GaussianRational {
    fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    fn from_int(n: i64) -> Self {
        Self::from_ints(n, 0)
    }

    fn parse(text: &str) -> Result<Self> {
        text.parse()
    }

    fn from_parts(re: BigRational, im: BigRational) -> Option<Self> {
        Some(GaussianRational::new(re, im))
    }

    fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

impl From<BigRational> for GaussianRational {
    fn from(re: BigRational) -> Self {
        GaussianRational::new(re, BigRational::zero())
    }
}

/// Serializes as `"a/b+c/d i"`, omitting zero parts: `"3"`, `"1/2 i"`, `"-1+2 i"`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{} i", fmt_rational(&self.im)),
            (false, false) => {
                let sign = if is_negative(&self.im) { "" } else { "+" };
                write!(
                    f,
                    "{}{}{} i",
                    fmt_rational(&self.re),
                    sign,
                    fmt_rational(&self.im)
                )
            }
        }
    }
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::parse("empty number"));
        }
        let Some(body) = s.strip_suffix('i') else {
            return Ok(GaussianRational::from(parse_rational(&s)?));
        };
        // split at the last sign that is not leading
        let split = body
            .char_indices()
            .filter(|&(k, c)| k > 0 && (c == '+' || c == '-'))
            .map(|(k, _)| k)
            .last();
        let (re, im) = match split {
            Some(k) => (parse_rational(&body[..k])?, &body[k..]),
            None => (BigRational::zero(), body),
        };
        let im = match im {
            "" | "+" => BigRational::one(),
            "-" => -BigRational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Ok(GaussianRational::new(re, im))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn display_omits_zero_parts() {
        assert_eq!(GaussianRational::from_ints(3, 0).to_string(), "3");
        assert_eq!(GaussianRational::from_ints(-1, 2).to_string(), "-1+2 i");
        assert_eq!(GaussianRational::from_ints(0, 0).to_string(), "0");
        let half_i = GaussianRational::i() / GaussianRational::from_int(2);
        assert_eq!(half_i.to_string(), "1/2 i");
        assert_eq!(GaussianRational::from_ints(1, -1).to_string(), "1-1 i");
    }

    #[test]
    fn parsing_is_whitespace_insensitive() {
        assert_eq!(g(" -1 + 2 i "), GaussianRational::from_ints(-1, 2));
        assert_eq!(g("1/2 i"), g("1/2i"));
        assert_eq!(g("i"), GaussianRational::i());
        assert_eq!(g("-i"), -GaussianRational::i());
        assert_eq!(g("2/4"), g("1/2"));
        assert_eq!(g("-1/2-3/4 i").im, parse_rational("-3/4").unwrap());
        assert!("1/0".parse::<GaussianRational>().is_err());
        assert!("abc".parse::<GaussianRational>().is_err());
        assert!("".parse::<GaussianRational>().is_err());
    }

    #[test]
    fn field_operations() {
        let a = GaussianRational::from_ints(1, 2);
        let b = GaussianRational::from_ints(3, -1);
        assert_eq!((a.clone() * b.clone()) / b.clone(), a);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(GaussianRational::i() * GaussianRational::i(), -GaussianRational::one());
        assert_eq!(a.norm_sq(), parse_rational("5").unwrap());
    }
}
