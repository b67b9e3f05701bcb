//! Scalar abstraction and the exact integer/rational helpers every other
//! module builds on: factorials, multinomials and the generalized binomial
//! coefficient `binom(t, j) = t (t-1) ... (t-j+1) / j!`.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Num, One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Field-like scalar the Bell kernels, transforms and series are generic over.
///
/// `BigRational` is the exact instance used for every identity check. The
/// float instances exist so the same kernels can be evaluated approximately;
/// nothing that compares for equality should be run over them.
pub trait Scalar: Clone + Debug + PartialEq + Num + Neg<Output = Self> + Send + Sync {
    fn from_i64(value: i64) -> Self;
    fn from_bigint(value: &BigInt) -> Self;

    fn from_usize(value: usize) -> Self {
        Self::from_bigint(&BigInt::from(value))
    }

    fn powu(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for BigRational {
    fn from_i64(value: i64) -> Self {
        BigRational::from_integer(BigInt::from(value))
    }

    fn from_bigint(value: &BigInt) -> Self {
        BigRational::from_integer(value.clone())
    }
}

macro_rules! float_scalar {
    ($($t:ty),*) => {$(
        impl Scalar for $t {
            fn from_i64(value: i64) -> Self {
                value as $t
            }

            fn from_bigint(value: &BigInt) -> Self {
                value.to_f64().unwrap_or(f64::NAN) as $t
            }

            fn powu(&self, exp: usize) -> Self {
                self.powi(exp as i32)
            }
        }
    )*};
}

float_scalar!(f32, f64);

/// n!
pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Integer binomial coefficient; zero when `j > n`.
pub fn binomial(n: usize, j: usize) -> BigInt {
    if j > n {
        return BigInt::zero();
    }
    let j = j.min(n - j);
    let mut acc = BigInt::one();
    for i in 0..j {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `n! / (v_1! v_2! ...)`. Integral whenever the parts sum to at most `n`
/// in the way the Bell coefficients use it; a proper rational otherwise.
pub fn multinomial(n: usize, parts: &[usize]) -> BigRational {
    let den = parts
        .iter()
        .fold(BigInt::one(), |acc, &p| acc * factorial(p));
    BigRational::new(factorial(n), den)
}

/// Generalized binomial coefficient for any scalar `t` and `j >= 0`.
pub fn binomial_general<T: Scalar>(t: &T, j: usize) -> T {
    let mut num = T::one();
    for i in 0..j {
        num = num * (t.clone() - T::from_usize(i));
    }
    num / T::from_bigint(&factorial(j))
}

/// Same as [`binomial_general`] but zero for negative `j`, which is the
/// convention the displayed sums rely on when a lower index runs below zero.
pub fn binomial_signed<T: Scalar>(t: &T, j: i64) -> T {
    if j < 0 {
        T::zero()
    } else {
        binomial_general(t, j as usize)
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(value: i64) -> BigRational {
    BigRational::from_i64(value)
}

/// Canonical text form: `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Parses `"p/q"` or `"p"`. Accepts the typographic minus sign U+2212.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::ParseRational(text.to_string());
    let cleaned = text.trim().replace('\u{2212}', "-");
    let (num, den) = match cleaned.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (cleaned.as_str(), "1"),
    };
    let num = BigInt::from_str_radix(num, 10).map_err(|_| bad())?;
    let den = BigInt::from_str_radix(den, 10).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// Converts an integral rational to an integer; `None` if it is not integral.
pub fn to_integer(value: &BigRational) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// `(-1)^e` as a scalar.
pub fn sign<T: Scalar>(e: usize) -> T {
    if e.is_even() {
        T::one()
    } else {
        -T::one()
    }
}

#[cfg(test)]
pub(crate) fn is_canonical(value: &BigRational) -> bool {
    use num_traits::Signed;
    value.denom().is_positive() && value.numer().gcd(value.denom()).is_one()
}

/// Serde adapter writing rationals as canonical strings.
pub mod rational_string {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::format_rational(value))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let text = String::deserialize(d)?;
        super::parse_rational(&text).map_err(serde::de::Error::custom)
    }
}
