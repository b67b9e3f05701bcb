//! Finite 1-based sequences `x = (x_1, x_2, ...)`.

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith::{factorial, format_rational, parse_rational, rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct Sequence<T> {
    values: Vec<T>,
}

impl<T: Scalar> Sequence<T> {
    pub fn new(values: Vec<T>) -> Self {
        Self { values }
    }

    pub fn from_fn(len: usize, f: impl Fn(usize) -> T) -> Self {
        Self::new((1..=len).map(f).collect())
    }

    pub fn ones(len: usize) -> Self {
        Self::from_fn(len, |_| T::one())
    }

    /// `x_j = (j-1)!`, the specialization giving unsigned Stirling numbers
    /// of the first kind.
    pub fn factorials(len: usize) -> Self {
        Self::from_fn(len, |j| T::from_bigint(&factorial(j - 1)))
    }

    /// `x_j = j`.
    pub fn identity(len: usize) -> Self {
        Self::from_fn(len, |j| T::from_usize(j))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `x_j`, 1-based.
    pub fn get(&self, j: usize) -> Result<&T> {
        if j == 0 {
            return Err(Error::Range("sequence indices start at 1".into()));
        }
        self.values.get(j - 1).ok_or(Error::SequenceTooShort {
            needed: j,
            available: self.values.len(),
        })
    }

    /// Fails unless `x_1 .. x_len` are all available.
    pub fn require(&self, len: usize) -> Result<()> {
        if len > self.values.len() {
            Err(Error::SequenceTooShort {
                needed: len,
                available: self.values.len(),
            })
        } else {
            Ok(())
        }
    }

    pub fn as_slice(&self) -> &[T] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<T> {
        self.values
    }

    /// First `len` entries.
    pub fn truncated(&self, len: usize) -> Result<Self> {
        self.require(len)?;
        Ok(Self::new(self.values[..len].to_vec()))
    }

    pub fn map(&self, f: impl Fn(usize, &T) -> T) -> Self {
        Self::new(
            self.values
                .iter()
                .enumerate()
                .map(|(i, v)| f(i + 1, v))
                .collect(),
        )
    }
}

impl Sequence<BigRational> {
    /// Reproducible small rationals: numerators uniform in `[-9, 9]`,
    /// denominators uniform in `[1, 9]`, drawn from ChaCha8 seeded with `seed`.
    pub fn small_random(seed: u64, len: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        Self::new(
            (0..len)
                .map(|_| {
                    let p = rng.gen_range(-9i64..=9);
                    let q = rng.gen_range(1i64..=9);
                    rational(p, q)
                })
                .collect(),
        )
    }

    pub fn parse<S: AsRef<str>>(entries: &[S]) -> Result<Self> {
        entries
            .iter()
            .map(|s| parse_rational(s.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(Self::new)
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.values.iter().map(format_rational).collect()
    }
}

impl Serialize for Sequence<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.values.len()))?;
        for v in &self.values {
            seq.serialize_element(&format_rational(v))?;
        }
        seq.end()
    }
}
