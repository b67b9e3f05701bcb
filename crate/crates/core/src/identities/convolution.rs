//! Bell convolution identities.
//!
//! Substituting the Bell structure into the binomial family gives, for
//! `1 <= k <= n`,
//!
//! ```text
//! sum_{l,m} kernel(l, m, tau) binom(n, m) / binom(k, l) B_{m,l}(x) B_{n-m,k-l}(x)
//!     = c(tau) binom(tau, k) B_{n,k}(x)
//! ```
//!
//! where the kernel and `c` are those of the matching binomial identity.
//! Constant `alpha` collapses the sum to a single `l`, and `r = 1` turns the
//! result into a vanishing sum.

use num_traits::{One, Zero};

use super::report::{AffineForm, IdentityReport};
use crate::arith::{binomial, binomial_general, format_rational};
use crate::bell::{stirling1_unsigned, stirling2, BellTriangle};
use crate::error::{Error, Result};
use crate::sequence::Sequence;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConvolutionVariant {
    /// Kernel `alpha(k,n)/alpha binom(alpha, k-l) binom(tau-alpha, l)`.
    First,
    /// Kernel `alpha(0,0)/alpha binom(tau-alpha, k-l) binom(alpha, l)`.
    Second,
    /// Partial-fraction kernel `tau binom(alpha, k-l) binom(tau-alpha, l) / (alpha (tau-alpha))`.
    PartialFraction,
}

impl ConvolutionVariant {
    pub fn name(self) -> &'static str {
        match self {
            ConvolutionVariant::First => "bell-conv-first",
            ConvolutionVariant::Second => "bell-conv-second",
            ConvolutionVariant::PartialFraction => "bell-conv-partial-fraction",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StirlingKind {
    First,
    Second,
}

fn rat(value: num_bigint::BigInt) -> Rational {
    Rational::from_integer(value)
}

fn require_range(n: usize, k: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::Range(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    Ok(())
}

fn require_r(n: usize, k: usize, r: usize) -> Result<()> {
    require_range(n, k)?;
    if r == 0 || r > k {
        return Err(Error::Range(format!("need 1 <= r <= k, got k={k}, r={r}")));
    }
    Ok(())
}

/// `(l, m)` pairs where `B_{m,l} B_{n-m,k-l}` is not identically zero.
fn bell_pairs(n: usize, k: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..=k).flat_map(move |l| {
        (0..=n).filter_map(move |m| {
            let left = l <= m && (l == 0) == (m == 0);
            let right = k - l <= n - m && (k == l) == (n == m);
            (left && right).then_some((l, m))
        })
    })
}

pub fn check_bell_convolution(
    variant: ConvolutionVariant,
    n: usize,
    k: usize,
    alpha: &AffineForm,
    tau: &Rational,
    x: &Sequence<Rational>,
) -> Result<IdentityReport> {
    require_range(n, k)?;
    let bell = BellTriangle::new(n, x)?;
    let alpha_kn = alpha.eval(k, n);
    let alpha_00 = alpha.eval(0, 0);
    let mut lhs = Rational::zero();
    for (l, m) in bell_pairs(n, k) {
        let a = alpha.eval(l, m);
        if a.is_zero() {
            return Err(Error::Pole {
                site: format!("alpha(l={l}, m={m}) = 0"),
            });
        }
        let rest = tau - &a;
        let kernel = match variant {
            ConvolutionVariant::First => {
                &alpha_kn / &a * binomial_general(&a, k - l) * binomial_general(&rest, l)
            }
            ConvolutionVariant::Second => {
                &alpha_00 / &a * binomial_general(&rest, k - l) * binomial_general(&a, l)
            }
            ConvolutionVariant::PartialFraction => {
                if rest.is_zero() {
                    return Err(Error::Pole {
                        site: format!("tau - alpha(l={l}, m={m}) = 0"),
                    });
                }
                tau * binomial_general(&a, k - l) * binomial_general(&rest, l) / (&a * &rest)
            }
        };
        lhs += kernel * rat(binomial(n, m)) / rat(binomial(k, l))
            * bell.get(m, l)
            * bell.get(n - m, k - l);
    }
    let factor = match variant {
        ConvolutionVariant::PartialFraction => {
            (tau - &alpha_00 + &alpha_kn) / (&alpha_kn * (tau - &alpha_00))
        }
        _ => Rational::one(),
    };
    let rhs = factor * binomial_general(tau, k) * bell.get(n, k);
    Ok(IdentityReport::builder(variant.name())
        .param("n", n)
        .param("k", k)
        .param("alpha", alpha)
        .param("tau", format_rational(tau))
        .finish(lhs, rhs))
}

/// `binom(k, r) B_{n,k} = sum_{m=k-r}^{n-r} binom(n, m) B_{m,k-r} B_{n-m,r}`.
pub fn check_alpha_constant(
    n: usize,
    k: usize,
    r: usize,
    x: &Sequence<Rational>,
) -> Result<IdentityReport> {
    require_r(n, k, r)?;
    let bell = BellTriangle::new(n, x)?;
    let mut lhs = Rational::zero();
    for m in (k - r)..=(n - r) {
        lhs += rat(binomial(n, m)) * bell.get(m, k - r) * bell.get(n - m, r);
    }
    Ok(IdentityReport::builder("alpha-constant")
        .param("n", n)
        .param("k", k)
        .param("r", r)
        .finish(lhs, rat(binomial(k, r)) * bell.get(n, k)))
}

/// `sum_{m=k-1}^{n-1} (binom(n, m)/k - binom(n-1, m)) x_{n-m} B_{m,k-1} = 0`.
pub fn check_zerosum(n: usize, k: usize, x: &Sequence<Rational>) -> Result<IdentityReport> {
    require_range(n, k)?;
    if n < 2 {
        return Err(Error::Range(format!("need n >= 2, got n={n}")));
    }
    let bell = BellTriangle::new(n, x)?;
    let inv_k = Rational::new(1.into(), (k as i64).into());
    let mut lhs = Rational::zero();
    for m in (k - 1)..n {
        let weight = rat(binomial(n, m)) * &inv_k - rat(binomial(n - 1, m));
        lhs += weight * x.get(n - m)? * bell.get(m, k - 1);
    }
    Ok(IdentityReport::builder("zerosum")
        .param("n", n)
        .param("k", k)
        .finish(lhs, Rational::zero()))
}

/// The alpha-constant recurrence on Stirling numbers, evaluated with the
/// integer Stirling tables rather than Bell polynomials.
pub fn check_stirling_recurrence(
    n: usize,
    k: usize,
    r: usize,
    kind: StirlingKind,
) -> Result<IdentityReport> {
    require_r(n, k, r)?;
    let s = |a: usize, b: usize| match kind {
        StirlingKind::First => stirling1_unsigned(a, b),
        StirlingKind::Second => stirling2(a, b),
    };
    let mut lhs = num_bigint::BigInt::zero();
    for m in (k - r)..=(n - r) {
        lhs += binomial(n, m) * s(m, k - r) * s(n - m, r);
    }
    let name = match kind {
        StirlingKind::First => "stirling-rec-first",
        StirlingKind::Second => "stirling-rec-second",
    };
    Ok(IdentityReport::builder(name)
        .param("n", n)
        .param("k", k)
        .param("r", r)
        .finish(rat(binomial(k, r) * s(n, k)), rat(lhs)))
}
