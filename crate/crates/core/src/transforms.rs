//! The functions `Q_{n,b}(lambda, z) = sum_k binom(lambda + b k, k - 1) (k - 1)! B_{n,k}(z)`
//! and the inverse pair of sequence transforms built from them.
//!
//! With `y = forward_transform(x)` the composition rule
//! `Q_{n,0}(lambda, y) = Q_{n,b}(lambda + a n, x)` holds for every `lambda`;
//! taking `lambda = -a n - b` and rearranging yields the inverse map.

use num_traits::Zero;

use crate::arith::{binomial, binomial_general, factorial, Scalar};
use crate::bell::BellTriangle;
use crate::error::{Error, Result};
use crate::identities::report::{sample_points, Certification, IdentityReport};
use crate::sequence::Sequence;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct TransformParams {
    pub a: i64,
    pub b: i64,
}

impl TransformParams {
    pub fn new(a: i64, b: i64) -> Self {
        Self { a, b }
    }

    /// `a n + b`, the denominator of the inverse prefactor.
    pub fn denominator(&self, n: usize) -> i64 {
        self.a * n as i64 + self.b
    }
}

fn require_n(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Range("n must be positive".into()));
    }
    Ok(())
}

/// `sum_{k=k0}^n binom(shift(k), k - k0) (k - 1)! B_{n,k}`.
fn bell_sum<T: Scalar>(
    tri: &BellTriangle<T>,
    n: usize,
    k0: usize,
    shift: impl Fn(usize) -> T,
) -> T {
    let mut acc = T::zero();
    for k in k0.max(1)..=n {
        acc = acc
            + binomial_general(&shift(k), k - k0)
                * T::from_bigint(&factorial(k - 1))
                * tri.get(n, k);
    }
    acc
}

fn q_from_triangle<T: Scalar>(tri: &BellTriangle<T>, n: usize, b: i64, lambda: &T) -> T {
    bell_sum(tri, n, 1, |k| lambda.clone() + T::from_i64(b * k as i64))
}

/// `Q_{n,b}(lambda, z)`; needs `z_1, ..., z_n`.
pub fn q_function<T: Scalar>(n: usize, b: i64, lambda: &T, z: &Sequence<T>) -> Result<T> {
    require_n(n)?;
    let tri = BellTriangle::new(n, z)?;
    Ok(q_from_triangle(&tri, n, b, lambda))
}

/// `y_n = Q_{n,b}(a n, x)` for `n = 1..=n_max`. Any `(a, b)` is accepted.
pub fn forward_transform<T: Scalar>(
    x: &Sequence<T>,
    params: TransformParams,
    n_max: usize,
) -> Result<Sequence<T>> {
    require_n(n_max)?;
    let tri = BellTriangle::new(n_max, x)?;
    let values = (1..=n_max)
        .map(|n| q_from_triangle(&tri, n, params.b, &T::from_i64(params.a * n as i64)))
        .collect();
    Ok(Sequence::new(values))
}

fn inverse_from_triangle<T: Scalar>(
    tri: &BellTriangle<T>,
    params: TransformParams,
    n: usize,
) -> Result<T> {
    let den = params.denominator(n);
    if den == 0 {
        return Err(Error::ZeroDenominator { n });
    }
    let an = params.a * n as i64;
    let top = T::from_i64(-an - params.b);
    let mut acc = T::zero();
    for k in 1..=n {
        acc = acc
            + T::from_i64(an + params.b * k as i64)
                * binomial_general(&top, k - 1)
                * T::from_bigint(&factorial(k - 1))
                * tri.get(n, k);
    }
    Ok(acc / T::from_i64(den))
}

/// The single entry `x_n` of the inverse map.
pub fn inverse_transform_term<T: Scalar>(
    y: &Sequence<T>,
    params: TransformParams,
    n: usize,
) -> Result<T> {
    require_n(n)?;
    if params.a == 0 && params.b == 0 {
        return Err(Error::DegenerateParams);
    }
    let tri = BellTriangle::new(n, y)?;
    inverse_from_triangle(&tri, params, n)
}

/// `x_n = sum_k (a n + b k)/(a n + b) binom(-a n - b, k - 1) (k - 1)! B_{n,k}(y)`.
///
/// Refuses `(a, b) = (0, 0)` and any `n <= n_max` with `a n + b = 0`.
pub fn inverse_transform<T: Scalar>(
    y: &Sequence<T>,
    params: TransformParams,
    n_max: usize,
) -> Result<Sequence<T>> {
    require_n(n_max)?;
    if params.a == 0 && params.b == 0 {
        return Err(Error::DegenerateParams);
    }
    if let Some(n) = (1..=n_max).find(|&n| params.denominator(n) == 0) {
        return Err(Error::ZeroDenominator { n });
    }
    let tri = BellTriangle::new(n_max, y)?;
    let values = (1..=n_max)
        .map(|n| inverse_from_triangle(&tri, params, n))
        .collect::<Result<_>>()?;
    Ok(Sequence::new(values))
}

/// Inverts the forward map by forward substitution. The map is triangular
/// with unit diagonal (`y_n = x_n + terms in x_1..x_{n-1}`), so this works
/// for every `(a, b)`, including where the closed-form inverse is undefined.
pub fn solve_forward<T: Scalar>(
    y: &Sequence<T>,
    params: TransformParams,
    n_max: usize,
) -> Result<Sequence<T>> {
    require_n(n_max)?;
    y.require(n_max)?;
    let mut x: Vec<T> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let mut trial = x.clone();
        trial.push(T::zero());
        let rest = forward_transform(&Sequence::new(trial), params, n)?;
        let rest_n = rest.get(n)?.clone();
        x.push(y.get(n)?.clone() - rest_n);
    }
    Ok(Sequence::new(x))
}

/// `L_n = Q_{n,0}(-1, z)`, the coefficients of `log(1 + sum z_n t^n/n!)`.
pub fn log_polynomials<T: Scalar>(z: &Sequence<T>, n_max: usize) -> Result<Sequence<T>> {
    require_n(n_max)?;
    let tri = BellTriangle::new(n_max, z)?;
    let minus_one = -T::one();
    Ok(Sequence::new(
        (1..=n_max)
            .map(|n| q_from_triangle(&tri, n, 0, &minus_one))
            .collect(),
    ))
}

/// `P^{(r)}_n = r Q_{n,0}(r - 1, z)`, the coefficients of `(1 + sum z_n t^n/n!)^r`.
pub fn potential_polynomials<T: Scalar>(
    r: &T,
    z: &Sequence<T>,
    n_max: usize,
) -> Result<Sequence<T>> {
    require_n(n_max)?;
    let tri = BellTriangle::new(n_max, z)?;
    let lambda = r.clone() - T::one();
    Ok(Sequence::new(
        (1..=n_max)
            .map(|n| r.clone() * q_from_triangle(&tri, n, 0, &lambda))
            .collect(),
    ))
}

/// `Q_{n,0}(lambda) = z_n + sum_{i=1}^{lambda} i/(lambda+1) sum_{m=1}^{n-1} binom(n,m) z_{n-m} Q_{m,0}(i-1)`
/// for integer `lambda >= 0`.
pub fn q_recurrence_check(
    n: usize,
    lambda: usize,
    z: &Sequence<Rational>,
) -> Result<IdentityReport> {
    require_n(n)?;
    let tri = BellTriangle::new(n, z)?;
    let lhs = q_from_triangle(&tri, n, 0, &Rational::from_usize(lambda));
    let mut rhs = z.get(n)?.clone();
    for i in 1..=lambda {
        let inner_lambda = Rational::from_usize(i - 1);
        let mut inner = Rational::zero();
        for m in 1..n {
            inner += Rational::from_bigint(&binomial(n, m))
                * z.get(n - m)?
                * q_from_triangle(&tri, m, 0, &inner_lambda);
        }
        rhs += Rational::from_usize(i) / Rational::from_usize(lambda + 1) * inner;
    }
    Ok(IdentityReport::builder("q-recurrence")
        .param("n", n)
        .param("lambda", lambda)
        .finish(lhs, rhs))
}

/// Product rule
/// `Q_{n1,b1}(l1) Q_{n2,b2}(l2) = sum_k sum_l k! binom(d1, k-l) binom(d2, l) / (d1 d2 binom(k, l)) B_{n1,k-l} B_{n2,l}`
/// with `d1 = l1 + b1 (k-l) + 1`, `d2 = l2 + b2 l + 1`.
#[allow(clippy::too_many_arguments)]
pub fn q_product_check(
    n1: usize,
    n2: usize,
    b1: i64,
    b2: i64,
    lambda1: &Rational,
    lambda2: &Rational,
    z: &Sequence<Rational>,
) -> Result<IdentityReport> {
    require_n(n1)?;
    require_n(n2)?;
    let tri = BellTriangle::new(n1.max(n2), z)?;
    let lhs = q_from_triangle(&tri, n1, b1, lambda1) * q_from_triangle(&tri, n2, b2, lambda2);
    let mut rhs = Rational::zero();
    for k in 2..=n1 + n2 {
        for l in 1..=n2.min(k - 1) {
            let k1 = k - l;
            if k1 > n1 {
                continue;
            }
            let d1 = lambda1 + Rational::from_i64(b1 * k1 as i64 + 1);
            let d2 = lambda2 + Rational::from_i64(b2 * l as i64 + 1);
            if d1.is_zero() || d2.is_zero() {
                return Err(Error::Pole {
                    site: format!("product denominator at k={k}, l={l}"),
                });
            }
            rhs += Rational::from_bigint(&factorial(k))
                * binomial_general(&d1, k1)
                * binomial_general(&d2, l)
                / (&d1 * &d2 * Rational::from_bigint(&binomial(k, l)))
                * tri.get(n1, k1)
                * tri.get(n2, l);
        }
    }
    Ok(IdentityReport::builder("q-product")
        .param("n1", n1)
        .param("n2", n2)
        .param("b1", b1)
        .param("b2", b2)
        .rational("lambda1", lambda1)
        .rational("lambda2", lambda2)
        .finish(lhs, rhs))
}

/// With `y = forward_transform(x)`:
/// `sum_{k>=k0} binom(lambda, k-k0) (k-1)! B_{n,k}(y) = sum_{k>=k0} binom(lambda + a n + b k, k-k0) (k-1)! B_{n,k}(x)`.
pub fn lambda_identity_check(
    x: &Sequence<Rational>,
    params: TransformParams,
    n: usize,
    lambda: &Rational,
    k0: usize,
) -> Result<IdentityReport> {
    require_n(n)?;
    if k0 == 0 {
        return Err(Error::Range("k0 must be positive".into()));
    }
    let y = forward_transform(x, params, n)?;
    let tri_x = BellTriangle::new(n, x)?;
    let tri_y = BellTriangle::new(n, &y)?;
    let lhs = bell_sum(&tri_y, n, k0, |_| lambda.clone());
    let an = params.a * n as i64;
    let rhs = bell_sum(&tri_x, n, k0, |k| {
        lambda + Rational::from_i64(an + params.b * k as i64)
    });
    Ok(IdentityReport::builder("lambda-identity")
        .param("a", params.a)
        .param("b", params.b)
        .param("n", n)
        .param("k0", k0)
        .rational("lambda", lambda)
        .finish(lhs, rhs))
}

/// Both sides of [`lambda_identity_check`] are polynomials in `lambda` of
/// degree at most `n - k0`; checks `n + 1` distinct sample values.
pub fn certify_lambda(
    x: &Sequence<Rational>,
    params: TransformParams,
    n: usize,
    k0: usize,
) -> Result<Certification> {
    let samples = sample_points()
        .take(n + 1)
        .map(|lambda| lambda_identity_check(x, params, n, &lambda, k0))
        .collect::<Result<Vec<_>>>()?;
    Ok(Certification {
        identity: "lambda-identity".into(),
        parameter: "lambda".into(),
        degree_bound: n.saturating_sub(k0),
        samples,
        skipped_poles: Vec::new(),
    })
}
