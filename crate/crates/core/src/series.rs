//! Truncated exponential generating functions `sum_{n=0}^{N} c_n t^n / n!`.
//!
//! `egf_log`, `egf_exp` and `egf_pow` work from derivative recurrences and
//! never touch Bell polynomials, so they are an independent check on
//! [`log_polynomials`](crate::transforms::log_polynomials) and
//! [`potential_polynomials`](crate::transforms::potential_polynomials).

use num_traits::One;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::arith::{binomial, format_rational, Scalar};
use crate::error::{Error, Result};
use crate::sequence::Sequence;
use crate::transforms::{forward_transform, q_function, TransformParams};
use crate::Rational;

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedEgf<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> TruncatedEgf<T> {
    /// Series with coefficients `c_0, ..., c_N`. Panics on an empty list.
    pub fn new(coeffs: Vec<T>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self { coeffs }
    }

    /// `1 + sum_{n=1}^{N} z_n t^n / n!`.
    pub fn one_plus(z: &Sequence<T>, order: usize) -> Result<Self> {
        z.require(order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(T::one());
        coeffs.extend_from_slice(&z.as_slice()[..order]);
        Ok(Self::new(coeffs))
    }

    pub fn constant(c: T, order: usize) -> Self {
        let mut coeffs = vec![T::zero(); order + 1];
        coeffs[0] = c;
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &T {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficients `c_1, ..., c_N` as a 1-based sequence.
    pub fn tail(&self) -> Sequence<T> {
        Sequence::new(self.coeffs[1..].to_vec())
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|n| self.coeffs[n].clone() + other.coeffs[n].clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|v| v.clone() * c.clone()).collect())
    }

    /// Binomial convolution `(c d)_n = sum_m binom(n, m) c_m d_{n-m}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::new(
            (0..=order)
                .map(|n| {
                    (0..=n).fold(T::zero(), |acc, m| {
                        acc + T::from_bigint(&binomial(n, m))
                            * self.coeffs[m].clone()
                            * other.coeffs[n - m].clone()
                    })
                })
                .collect(),
        )
    }

    /// Term-wise derivative; the order drops by one (an order-0 series
    /// differentiates to the zero constant).
    pub fn derivative(&self) -> Self {
        if self.order() == 0 {
            return Self::constant(T::zero(), 0);
        }
        Self::new(self.coeffs[1..].to_vec())
    }
}

fn require_unit(z: &TruncatedEgf<impl Scalar>) -> Result<()> {
    if !z.coeff(0).is_one() {
        return Err(Error::ConstantTerm);
    }
    Ok(())
}

/// `log Z` from `Z (log Z)' = Z'`.
pub fn egf_log<T: Scalar>(z: &TruncatedEgf<T>) -> Result<TruncatedEgf<T>> {
    require_unit(z)?;
    let c = z.coeffs();
    let mut l = vec![T::zero(); c.len()];
    for n in 0..z.order() {
        let mut acc = c[n + 1].clone();
        for m in 1..=n {
            acc = acc - T::from_bigint(&binomial(n, m)) * c[m].clone() * l[n + 1 - m].clone();
        }
        l[n + 1] = acc;
    }
    Ok(TruncatedEgf::new(l))
}

/// `exp L` from `E' = L' E`; requires a zero constant term.
pub fn egf_exp<T: Scalar>(l: &TruncatedEgf<T>) -> Result<TruncatedEgf<T>> {
    if !l.coeff(0).is_zero() {
        return Err(Error::Range(
            "exp needs a series with constant term 0".into(),
        ));
    }
    let c = l.coeffs();
    let mut e = vec![T::zero(); c.len()];
    e[0] = T::one();
    for n in 0..l.order() {
        e[n + 1] = (0..=n).fold(T::zero(), |acc, m| {
            acc + T::from_bigint(&binomial(n, m)) * c[m + 1].clone() * e[n - m].clone()
        });
    }
    Ok(TruncatedEgf::new(e))
}

/// `Z^r` from `(Z^r)' Z = r Z' Z^r`.
pub fn egf_pow<T: Scalar>(z: &TruncatedEgf<T>, r: &T) -> Result<TruncatedEgf<T>> {
    require_unit(z)?;
    let c = z.coeffs();
    let mut p = vec![T::zero(); c.len()];
    p[0] = T::one();
    for n in 0..z.order() {
        let mut acc = T::zero();
        for m in 0..=n {
            acc = acc
                + r.clone() * T::from_bigint(&binomial(n, m)) * c[m + 1].clone() * p[n - m].clone();
        }
        for m in 0..n {
            acc = acc - T::from_bigint(&binomial(n, m)) * p[m + 1].clone() * c[n - m].clone();
        }
        p[n + 1] = acc;
    }
    Ok(TruncatedEgf::new(p))
}

/// `F(Y)` for the polynomial `F(w) = sum_i f_i w^i`, by Horner's rule with
/// series multiplication.
pub fn compose_poly<T: Scalar>(f: &[T], y: &TruncatedEgf<T>) -> TruncatedEgf<T> {
    let order = y.order();
    let mut acc = TruncatedEgf::constant(T::zero(), order);
    for c in f.iter().rev() {
        acc = acc.mul(y).add(&TruncatedEgf::constant(c.clone(), order));
    }
    acc
}

/// `F(Y)` where `Y = 1 + sum y_n t^n/n!` and `y = forward_transform(x)`, from
/// the closed form: `F(1)` at `n = 0`, then
/// `sum_l f_l l Q_{n,b}(l - 1 + a n, x)` for `n >= 1`.
///
/// `y` must be exactly the forward transform of `x` up to its order.
pub fn egf_apply_poly(
    y: &TruncatedEgf<Rational>,
    f: &[Rational],
    params: TransformParams,
    x: &Sequence<Rational>,
) -> Result<TruncatedEgf<Rational>> {
    let order = y.order();
    if order > 0 {
        let expected = forward_transform(x, params, order)?;
        if y.tail() != expected {
            return Err(Error::Inconsistent(
                "series does not match the forward transform of x".into(),
            ));
        }
    }
    if !y.coeff(0).is_one() {
        return Err(Error::ConstantTerm);
    }
    let mut coeffs = vec![f.iter().sum::<Rational>()];
    for n in 1..=order {
        let mut acc = Rational::from_i64(0);
        for (l, c) in f.iter().enumerate().skip(1) {
            let lambda = Rational::from_i64(l as i64 - 1 + params.a * n as i64);
            acc += c * Rational::from_usize(l) * q_function(n, params.b, &lambda, x)?;
        }
        coeffs.push(acc);
    }
    Ok(TruncatedEgf::new(coeffs))
}

/// `{"order": N, "coeffs": ["c_0", ..., "c_N"]}`.
impl Serialize for TruncatedEgf<Rational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TruncatedEgf", 2)?;
        st.serialize_field("order", &self.order())?;
        let coeffs: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        st.serialize_field("coeffs", &coeffs)?;
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rational};
    use crate::transforms::{log_polynomials, potential_polynomials};

    type E = TruncatedEgf<Rational>;

    fn random_series(seed: u64, order: usize) -> E {
        E::one_plus(&Sequence::small_random(seed, order), order).unwrap()
    }

    #[test]
    fn mul_is_binomial_convolution() {
        // e^t * e^t = e^{2t}
        let e = E::new(vec![int(1); 6]);
        let sq = e.mul(&e);
        for n in 0..=5 {
            assert_eq!(sq.coeff(n), &int(1 << n));
        }
        let short = E::new(vec![int(1); 3]);
        assert_eq!(e.mul(&short).order(), 2);
    }

    #[test]
    fn log_examples() {
        let one = E::constant(int(1), 5);
        assert!(egf_log(&one).unwrap().coeffs().iter().all(|c| c == &int(0)));
        let z = E::new(vec![int(1), int(1), int(0), int(0)]);
        let l = egf_log(&z).unwrap();
        assert_eq!(l.coeff(2), &int(-1));
        assert_eq!(
            egf_log(&E::new(vec![int(2), int(1)])),
            Err(Error::ConstantTerm)
        );
    }

    #[test]
    fn log_and_pow_match_bell_route() {
        for seed in 0..5 {
            let z = random_series(seed, 10);
            let l = egf_log(&z).unwrap();
            assert_eq!(l.tail(), log_polynomials(&z.tail(), 10).unwrap());
            for r in [int(2), int(-1), rational(1, 2), rational(5, 3)] {
                let p = egf_pow(&z, &r).unwrap();
                assert_eq!(p.tail(), potential_polynomials(&r, &z.tail(), 10).unwrap());
            }
        }
    }

    #[test]
    fn pow_examples() {
        let z = random_series(3, 8);
        assert_eq!(egf_pow(&z, &int(2)).unwrap(), z.mul(&z));
        let inv = egf_pow(&z, &int(-1)).unwrap();
        assert_eq!(inv.mul(&z), E::constant(int(1), 8));
        let root = egf_pow(&z, &rational(1, 2)).unwrap();
        assert_eq!(root.mul(&root), z);
    }

    #[test]
    fn exp_inverts_log() {
        for seed in 0..5 {
            let z = random_series(seed + 40, 8);
            assert_eq!(egf_exp(&egf_log(&z).unwrap()).unwrap(), z);
        }
        assert!(egf_exp(&E::new(vec![int(1), int(2)])).is_err());
    }

    #[test]
    fn apply_poly_matches_horner() {
        let x = Sequence::small_random(77, 6);
        let p = TransformParams::new(1, 1);
        let y = E::one_plus(&forward_transform(&x, p, 6).unwrap(), 6).unwrap();
        let polys = [
            vec![int(0), int(1)],
            vec![int(0), int(0), int(1)],
            vec![int(3)],
            vec![rational(1, 2), int(-2), rational(3, 4)],
            vec![int(1), rational(-1, 3), int(2), rational(5, 7)],
        ];
        for f in &polys {
            let closed = egf_apply_poly(&y, f, p, &x).unwrap();
            assert_eq!(closed, compose_poly(f, &y), "F = {f:?}");
        }
        assert_eq!(egf_apply_poly(&y, &polys[0], p, &x).unwrap(), y);
        assert_eq!(
            egf_apply_poly(&y, &polys[2], p, &x).unwrap(),
            E::constant(int(3), 6)
        );
    }

    #[test]
    fn apply_poly_rejects_mismatched_series() {
        let x = Sequence::small_random(5, 4);
        let p = TransformParams::new(2, 3);
        let y = E::one_plus(&x, 4).unwrap();
        assert!(matches!(
            egf_apply_poly(&y, &[int(1), int(1)], p, &x),
            Err(Error::Inconsistent(_))
        ));
    }

    #[test]
    fn json_shape() {
        let e = E::new(vec![int(1), rational(-1, 2)]);
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"order":1,"coeffs":["1","-1/2"]}"#
        );
    }
}
