//! Exact checkers for the binomial and Bell convolution identities.
//!
//! Every checker evaluates both sides over [`Rational`](crate::Rational) and
//! returns an [`IdentityReport`]. A vanishing denominator is an error for a
//! single-point check; the `tau` certifier steps over such points instead and
//! records them.

pub mod binomial;
pub mod convolution;
pub mod report;

pub use binomial::{
    certify_th1, check_general_binomial, check_hagen_rothe, check_negative_one,
    check_reciprocal_binomial, check_th1, check_th1b_single, check_th1c, check_th1c_single,
    check_vanishing_sum, th1a_kernel, HagenRotheVariant, Th1Identity, Th1Variant, WeightSupport,
};
pub use convolution::{
    check_alpha_constant, check_bell_convolution, check_stirling_recurrence, check_zerosum,
    ConvolutionVariant, StirlingKind,
};
pub use report::{AffineForm, Certification, CertificationSummary, IdentityReport, PoleRecord};
