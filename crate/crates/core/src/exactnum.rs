//! Exact arithmetic over the rationals and the Gaussian rationals `Q(i)`.
//!
//! [`Rational`] is `num_rational::BigRational`, which is always stored in lowest
//! terms with a positive denominator. [`GaussianRational`] pairs two of them.
//! Because both components are canonical, structural equality is value equality,
//! which is what lets polynomial identities be checked by comparing term maps.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use num_rational::BigRational as Rational;

/// Builds the rational `numer / denom`.
///
/// # Panics
///
/// Panics if `denom` is zero.
pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// An element `re + im*i` of `Q(i)`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: Rational) -> Self {
        Self {
            re,
            im: Rational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `re^2 + im^2`.
    pub fn norm(&self) -> Rational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self {
            re: &self.re / &n,
            im: -(&self.im / &n),
        })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    /// Returns the real part if the imaginary part is zero.
    pub fn to_rational(&self) -> Option<Rational> {
        self.is_real().then(|| self.re.clone())
    }

    /// `true` when the value is a negative rational, or purely imaginary with a
    /// negative imaginary part, or has a negative real part. Used to pull a
    /// leading minus sign out when rendering.
    pub(crate) fn has_negative_lead(&self) -> bool {
        if self.re.is_zero() {
            self.im.is_negative()
        } else {
            self.re.is_negative()
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        Self::from_rational(Rational::one())
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        Self::from_rational(r)
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;

    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        if self.is_real() && rhs.is_real() {
            return GaussianRational::from_rational(&self.re * &rhs.re);
        }
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -&self.re,
            im: -&self.im,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for GaussianRational {
            type Output = GaussianRational;

            fn $m(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$m(&rhs)
            }
        }

        impl<'a> $tr<&'a GaussianRational> for GaussianRational {
            type Output = GaussianRational;

            fn $m(self, rhs: &GaussianRational) -> GaussianRational {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for GaussianRational {
    type Output = GaussianRational;

    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

/// # Panics
///
/// Panics on division by zero; use [`GaussianRational::checked_div`] to get an error instead.
impl Div for GaussianRational {
    type Output = GaussianRational;

    fn div(self, rhs: GaussianRational) -> GaussianRational {
        self.checked_div(&rhs).expect("division by zero in Q(i)")
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = &*self * rhs;
    }
}

fn fmt_imaginary(f: &mut fmt::Formatter<'_>, magnitude: &Rational) -> fmt::Result {
    if magnitude.is_one() {
        write!(f, "i")
    } else {
        write!(f, "{magnitude}*i")
    }
}

/// Renders as `p/q`, `r/s*i` or `p/q+r/s*i`; a unit imaginary part is written `i`.
impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) => {
                if self.im.is_negative() {
                    write!(f, "-")?;
                }
                fmt_imaginary(f, &self.im.abs())
            }
            (false, false) => {
                write!(f, "{}", self.re)?;
                write!(f, "{}", if self.im.is_negative() { "-" } else { "+" })?;
                fmt_imaginary(f, &self.im.abs())
            }
        }
    }
}

/// Serialized as its textual form so certificates stay free of floats.
impl Serialize for GaussianRational {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        parse_gaussian(&text).map_err(serde::de::Error::custom)
    }
}

/// Parses the rendered form produced by `Display` (`p/q`, `p/q*i`, `p/q+r/s*i`, `-i`, ...).
///
/// Only the canonical rendering is accepted; general expressions go through the
/// polynomial parser in the command-line crate.
pub fn parse_gaussian(text: &str) -> Result<GaussianRational> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a Gaussian rational: {text:?}"));
    let Some(body) = text.strip_suffix('i') else {
        return text.parse::<Rational>().map(GaussianRational::from_rational).map_err(|_| bad());
    };
    // split off the real part at the last sign that is not the leading one
    let split = body
        .char_indices()
        .skip(1)
        .filter(|&(_, c)| c == '+' || c == '-')
        .map(|(k, _)| k)
        .last();
    let (re_text, im_text) = match split {
        Some(k) => (&body[..k], &body[k..]),
        None => ("0", body),
    };
    let (negative, magnitude) = match im_text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, im_text.strip_prefix('+').unwrap_or(im_text)),
    };
    let im = if magnitude.is_empty() {
        Rational::one()
    } else {
        let digits = magnitude.strip_suffix('*').ok_or_else(bad)?;
        if digits.is_empty() || digits.starts_with(['+', '-']) {
            return Err(bad());
        }
        digits.parse::<Rational>().map_err(|_| bad())?
    };
    let im = if negative { -im } else { im };
    let re = re_text.parse::<Rational>().map_err(|_| bad())?;
    Ok(GaussianRational::new(re, im))
}
