//! Index sets `pi_d(m, l)` (vectors with `sum i_j = l` and `sum j*i_j = m`)
//! and the binomial-product weights `W_{m,l}(v)` built from them.

use std::hash::{Hash, Hasher};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::binomial;
use crate::error::{Error, Result};

/// Finite vector of nonnegative integers `(i_1, ..., i_d)`.
///
/// Equality and hashing ignore trailing zeros, so `(1, 2)` and `(1, 2, 0)`
/// denote the same element.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IndexVector(Vec<usize>);

impl IndexVector {
    pub fn new(entries: Vec<usize>) -> Self {
        Self(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry `i_j` with 1-based `j`; zero past the end.
    pub fn get(&self, j: usize) -> usize {
        assert!(j >= 1, "index vectors are 1-based");
        self.0.get(j - 1).copied().unwrap_or(0)
    }

    pub fn trimmed(&self) -> &[usize] {
        let end = self.0.iter().rposition(|&e| e != 0).map_or(0, |p| p + 1);
        &self.0[..end]
    }

    /// `i_1 + i_2 + ...`
    pub fn count(&self) -> usize {
        self.0.iter().sum()
    }

    /// `i_1 + 2 i_2 + 3 i_3 + ...`
    pub fn weight(&self) -> usize {
        self.0.iter().enumerate().map(|(j, &e)| (j + 1) * e).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Iterates `(j, i_j)` over the nonzero entries, `j` 1-based.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(j, &e)| (j + 1, e))
    }
}

impl From<Vec<usize>> for IndexVector {
    fn from(entries: Vec<usize>) -> Self {
        Self(entries)
    }
}

impl PartialEq for IndexVector {
    fn eq(&self, other: &Self) -> bool {
        self.trimmed() == other.trimmed()
    }
}

impl Eq for IndexVector {}

impl Hash for IndexVector {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.trimmed().hash(state);
    }
}

/// All vectors of length `d` with `sum i_j = l` and `sum j*i_j = m`, in
/// lexicographic order. Empty when no such vector exists.
pub fn enumerate_pi(m: usize, l: usize, d: usize) -> Vec<IndexVector> {
    assert!(d >= 1, "enumerate_pi needs d >= 1");
    enumerate_bounded(m, l, &vec![usize::MAX; d])
}

/// Like [`enumerate_pi`] with the extra constraint `i_j <= bounds[j-1]`.
fn enumerate_bounded(m: usize, l: usize, bounds: &[usize]) -> Vec<IndexVector> {
    let mut out = Vec::new();
    let mut current = vec![0; bounds.len()];
    fill(1, l, m, bounds, &mut current, &mut out);
    out
}

fn feasible(from: usize, d: usize, count: usize, weight: usize) -> bool {
    if count == 0 {
        return weight == 0;
    }
    from <= d && from * count <= weight && weight <= d * count
}

fn fill(
    j: usize,
    count: usize,
    weight: usize,
    bounds: &[usize],
    current: &mut Vec<usize>,
    out: &mut Vec<IndexVector>,
) {
    let d = bounds.len();
    if j > d {
        if count == 0 && weight == 0 {
            out.push(IndexVector(current.clone()));
        }
        return;
    }
    let top = count.min(weight / j).min(bounds[j - 1]);
    for i in 0..=top {
        let (c, w) = (count - i, weight - j * i);
        if feasible(j + 1, d, c, w) {
            current[j - 1] = i;
            fill(j + 1, c, w, bounds, current, out);
        }
    }
    current[j - 1] = 0;
}

/// `W_{m,l}(v) = sum over i in pi_d(m,l) of prod_j binom(v_j, i_j)`, with
/// `d = len(v)`. Zero when the index set is empty; `W_{0,0}(v) = 1`.
pub fn w_coefficient(m: usize, l: usize, v: &IndexVector) -> Result<BigInt> {
    if v.is_zero() {
        return Err(Error::ZeroVector);
    }
    let bounds = v.trimmed();
    if bounds.is_empty() {
        return Ok(BigInt::zero());
    }
    Ok(enumerate_bounded(m, l, bounds)
        .iter()
        .map(|i| {
            i.entries()
                .iter()
                .zip(bounds)
                .fold(BigInt::one(), |acc, (&ij, &vj)| acc * binomial(vj, ij))
        })
        .sum())
}

/// `(k, n) = (sum v_j, sum j*v_j)` for an index vector `v`, i.e. the pair
/// with `v in pi(n, k)`.
pub fn shape_of(v: &IndexVector) -> (usize, usize) {
    (v.count(), v.weight())
}
