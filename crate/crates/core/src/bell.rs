//! Partial Bell polynomials `B_{n,k}`.
//!
//! Two independent routes are provided: the sum over `pi(n, k)` of the
//! multinomial-weighted monomials ([`bell_symbolic`], [`bell_eval`]) and the
//! one-step recurrence
//! `B_{n,k} = (1/k) sum_{m=k-1}^{n-1} binom(n, m) x_{n-m} B_{m,k-1}`
//! ([`bell_recursive`], [`BellTriangle`]). Everything downstream is tested by
//! playing them against each other.
//!
//! Boundary conventions: `B_{0,0} = 1`, `B_{n,0} = 0` for `n > 0`,
//! `B_{n,k} = 0` for `k > n`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::{binomial, factorial, to_integer, Scalar};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_pi, IndexVector};
use crate::poly::{Monomial, SparsePoly};
use crate::sequence::Sequence;

/// `n! / prod_j (i_j! (j!)^{i_j})`, the integer coefficient of the monomial
/// `x^i` in `B_{n,k}`.
pub fn bell_coefficient(n: usize, i: &IndexVector) -> BigInt {
    let den = i.nonzero().fold(BigInt::one(), |acc, (j, e)| {
        let fj = factorial(j);
        let mut d = acc * factorial(e);
        for _ in 0..e {
            d *= &fj;
        }
        d
    });
    let (q, r) = factorial(n).div_rem(&den);
    assert!(r.is_zero(), "Bell coefficient for {i:?} is not integral");
    q
}

fn check_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

/// `B_{n,k}` as an exact polynomial in `x_1, ..., x_{n-k+1}`.
pub fn bell_symbolic(n: usize, k: usize) -> Result<SparsePoly<BigRational>> {
    check_range(n, k)?;
    let mut p = SparsePoly::zero();
    for i in enumerate_pi(n, k, n - k + 1) {
        let exps = i.entries().iter().map(|&e| e as u32).collect();
        let c = bell_coefficient(n, &i);
        p.add_term(Monomial::new(exps), BigRational::from_integer(c));
    }
    Ok(p)
}

/// `B_{n,k}(x)` from the defining sum.
pub fn bell_eval<T: Scalar>(n: usize, k: usize, x: &Sequence<T>) -> Result<T> {
    if k == 0 {
        return Ok(if n == 0 { T::one() } else { T::zero() });
    }
    if k > n {
        return Ok(T::zero());
    }
    let d = n - k + 1;
    x.require(d)?;
    let xs = x.as_slice();
    let mut acc = T::zero();
    for i in enumerate_pi(n, k, d) {
        let mut term = T::from_bigint(&bell_coefficient(n, &i));
        for (j, e) in i.nonzero() {
            term = term * xs[j - 1].powu(e);
        }
        acc = acc + term;
    }
    Ok(acc)
}

/// `B_{n,k}(x)` from the one-step recurrence, memoized per call.
pub fn bell_recursive<T: Scalar>(n: usize, k: usize, x: &Sequence<T>) -> Result<T> {
    check_range(n, k)?;
    let span = n - k;
    x.require(span + 1)?;
    let xs = x.as_slice();
    // level[l][m - l] = B_{m,l} for l <= m <= l + span
    let mut prev: Vec<T> = (0..=span)
        .map(|m| if m == 0 { T::one() } else { T::zero() })
        .collect();
    for l in 1..=k {
        let mut cur = Vec::with_capacity(span + 1);
        let inv_l = T::one() / T::from_usize(l);
        for m in l..=l + span {
            let mut acc = T::zero();
            for j in (l - 1)..m {
                let off = j - (l - 1);
                if off > span {
                    break;
                }
                acc = acc
                    + T::from_bigint(&binomial(m, j)) * xs[m - j - 1].clone() * prev[off].clone();
            }
            cur.push(acc * inv_l.clone());
        }
        prev = cur;
    }
    Ok(prev[span].clone())
}

/// Every `B_{m,l}(x)` with `0 <= l <= m <= n`, built with the recurrence.
#[derive(Clone, Debug)]
pub struct BellTriangle<T> {
    rows: Vec<Vec<T>>,
}

impl<T: Scalar> BellTriangle<T> {
    pub fn new(n: usize, x: &Sequence<T>) -> Result<Self> {
        x.require(n)?;
        let xs = x.as_slice();
        let mut rows: Vec<Vec<T>> = Vec::with_capacity(n + 1);
        rows.push(vec![T::one()]);
        for m in 1..=n {
            let mut row = vec![T::zero(); m + 1];
            for l in 1..=m {
                let mut acc = T::zero();
                for j in (l - 1)..m {
                    acc = acc
                        + T::from_bigint(&binomial(m, j))
                            * xs[m - j - 1].clone()
                            * rows[j][l - 1].clone();
                }
                row[l] = acc / T::from_usize(l);
            }
            rows.push(row);
        }
        Ok(Self { rows })
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    /// `B_{m,l}`, zero for `l > m`. Panics if `m` exceeds the order.
    pub fn get(&self, m: usize, l: usize) -> T {
        self.rows[m].get(l).cloned().unwrap_or_else(T::zero)
    }
}

fn integral(value: BigRational) -> BigInt {
    to_integer(&value).expect("Stirling number must be integral")
}

/// Stirling numbers of the second kind, `S(n,k) = B_{n,k}(1, 1, ...)`.
pub fn stirling2(n: usize, k: usize) -> BigInt {
    let x = Sequence::<BigRational>::ones(n.max(1));
    integral(bell_eval(n, k, &x).expect("sequence covers n"))
}

/// Unsigned Stirling numbers of the first kind, `B_{n,k}(0!, 1!, 2!, ...)`.
pub fn stirling1_unsigned(n: usize, k: usize) -> BigInt {
    let x = Sequence::<BigRational>::factorials(n.max(1));
    integral(bell_eval(n, k, &x).expect("sequence covers n"))
}
