//! Exact partial Bell polynomials, the binomial and Bell convolution
//! identities built on them, and the inverse pair of sequence transforms
//!
//! ```text
//! y_n = sum_k binom(a n + b k, k - 1) (k - 1)! B_{n,k}(x)
//! x_n = sum_k (a n + b k)/(a n + b) binom(-a n - b, k - 1) (k - 1)! B_{n,k}(y)
//! ```
//!
//! The Bell kernels, transforms and series are generic over [`Scalar`];
//! identity checks run over [`Rational`] only, where equality is exact.

pub mod arith;
pub mod bell;
pub mod error;
pub mod identities;
pub mod partitions;
pub mod poly;
pub mod sequence;
pub mod series;
pub mod transforms;

pub use arith::Scalar;
pub use error::{Error, Result};
pub use partitions::IndexVector;
pub use poly::{Monomial, SparsePoly};
pub use sequence::Sequence;
pub use series::TruncatedEgf;
pub use transforms::TransformParams;

/// Arbitrary-precision rational; the scalar for everything that is compared.
pub type Rational = num_rational::BigRational;
pub type Integer = num_bigint::BigInt;

pub type RationalSequence = Sequence<Rational>;
pub type RationalPoly = SparsePoly<Rational>;

pub type F64Sequence = Sequence<f64>;
pub type F32Sequence = Sequence<f32>;

pub type RationalEgf = TruncatedEgf<Rational>;
pub type F64Egf = TruncatedEgf<f64>;
