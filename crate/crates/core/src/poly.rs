//! Sparse multivariate polynomials in `x_1, x_2, ...`.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::arith::{format_rational, Scalar};
use crate::error::{Error, Result};
use crate::sequence::Sequence;

/// Exponent vector `(e_1, e_2, ...)` with trailing zeros stripped.
///
/// Ordered graded-lexicographically with `x_1 > x_2 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Self(exps)
    }

    pub fn one() -> Self {
        Self(Vec::new())
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Self) -> Self {
        let len = self.0.len().max(other.0.len());
        let exps = (0..len)
            .map(|i| self.0.get(i).unwrap_or(&0) + other.0.get(i).unwrap_or(&0))
            .collect();
        Self::new(exps)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial stored as monomial -> nonzero coefficient.
#[derive(Clone, Debug, PartialEq)]
pub struct SparsePoly<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> SparsePoly<T> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    /// The variable `x_j`, 1-based.
    pub fn var(j: usize) -> Self {
        assert!(j >= 1, "variables are 1-based");
        let mut exps = vec![0; j];
        exps[j - 1] = 1;
        Self::monomial(Monomial::new(exps), T::one())
    }

    pub fn monomial(m: Monomial, c: T) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Highest variable index that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn coeff(&self, exps: &[u32]) -> T {
        self.terms
            .get(&Monomial::new(exps.to_vec()))
            .cloned()
            .unwrap_or_else(T::zero)
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter().rev()
    }

    pub fn scale(&self, c: &T) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Evaluates at `x_j = point[j-1]`.
    pub fn eval(&self, point: &[T]) -> Result<T> {
        let need = self.num_vars();
        if point.len() < need {
            return Err(Error::SequenceTooShort {
                needed: need,
                available: point.len(),
            });
        }
        let mut acc = T::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                term = term * x.powu(e as usize);
            }
            acc = acc + term;
        }
        Ok(acc)
    }

    pub fn eval_seq(&self, x: &Sequence<T>) -> Result<T> {
        self.eval(x.as_slice())
    }
}

impl<T: Scalar> Add for &SparsePoly<T> {
    type Output = SparsePoly<T>;

    fn add(self, rhs: Self) -> SparsePoly<T> {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<T: Scalar> Neg for &SparsePoly<T> {
    type Output = SparsePoly<T>;

    fn neg(self) -> SparsePoly<T> {
        self.scale(&-T::one())
    }
}

impl<T: Scalar> Sub for &SparsePoly<T> {
    type Output = SparsePoly<T>;

    fn sub(self, rhs: Self) -> SparsePoly<T> {
        self + &(-rhs)
    }
}

impl<T: Scalar> Mul for &SparsePoly<T> {
    type Output = SparsePoly<T>;

    fn mul(self, rhs: Self) -> SparsePoly<T> {
        let mut out = SparsePoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca.clone() * cb.clone());
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly<BigRational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{}", format_rational(c))?;
            for (j, &e) in m.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", j + 1)?,
                    _ => write!(f, "*x{}^{}", j + 1, e)?,
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    coeff: String,
    exps: &'a [u32],
}

/// `[{"coeff": "p/q", "exps": [e1, e2, ...]}, ...]`, descending graded-lex.
impl Serialize for SparsePoly<BigRational> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.terms.len()))?;
        for (m, c) in self.terms() {
            seq.serialize_element(&TermRecord {
                coeff: format_rational(c),
                exps: m.exps(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rational};
    use proptest::prelude::*;

    type P = SparsePoly<BigRational>;

    fn arb_poly() -> impl Strategy<Value = P> {
        prop::collection::vec(
            (prop::collection::vec(0u32..3, 0..4), -5i64..5, 1i64..4),
            0..5,
        )
        .prop_map(|terms| {
            let mut p = P::zero();
            for (e, a, b) in terms {
                p.add_term(Monomial::new(e), rational(a, b));
            }
            p
        })
    }

    #[test]
    fn canonical_storage() {
        let mut p = P::zero();
        p.add_term(Monomial::new(vec![1, 0, 0]), int(2));
        p.add_term(Monomial::new(vec![1]), int(-2));
        assert!(p.is_zero());
        let q = &P::var(1) * &P::var(3);
        assert_eq!(q.coeff(&[1, 0, 1, 0]), int(1));
        assert_eq!(q.num_vars(), 3);
    }

    #[test]
    fn graded_lex_order_and_json() {
        let p =
            &(&P::var(1) * &P::var(3)).scale(&int(4)) + &(&P::var(2) * &P::var(2)).scale(&int(3));
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(
            json,
            r#"[{"coeff":"4","exps":[1,0,1]},{"coeff":"3","exps":[0,2]}]"#
        );
        assert_eq!(p.to_string(), "4*x1*x3 + 3*x2^2");
    }

    #[test]
    fn eval_needs_enough_variables() {
        let p = P::var(3);
        assert!(p.eval(&[int(1), int(2)]).is_err());
        assert_eq!(p.eval(&[int(1), int(2), int(5)]).unwrap(), int(5));
        assert_eq!(P::zero().total_degree(), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn eval_is_a_homomorphism(a in arb_poly(), b in arb_poly(),
                                  pt in prop::collection::vec((-4i64..4, 1i64..3), 4)) {
            let pt: Vec<_> = pt.into_iter().map(|(p, q)| rational(p, q)).collect();
            let prod = (&a * &b).eval(&pt).unwrap();
            prop_assert_eq!(prod, a.eval(&pt).unwrap() * b.eval(&pt).unwrap());
        }
    }
}
