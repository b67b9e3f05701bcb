use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{format_rational, int, parse_rational, rational_string};
use crate::error::{Error, Result};
use crate::Rational;

/// `alpha(l, m) = c0 + c1*l + c2*m`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineForm {
    #[serde(with = "rational_string")]
    pub c0: Rational,
    #[serde(with = "rational_string")]
    pub c1: Rational,
    #[serde(with = "rational_string")]
    pub c2: Rational,
}

impl AffineForm {
    pub fn new(c0: Rational, c1: Rational, c2: Rational) -> Self {
        Self { c0, c1, c2 }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(c, int(0), int(0))
    }

    pub fn from_ints(c0: i64, c1: i64, c2: i64) -> Self {
        Self::new(int(c0), int(c1), int(c2))
    }

    pub fn eval(&self, l: usize, m: usize) -> Rational {
        &self.c0 + &self.c1 * int(l as i64) + &self.c2 * int(m as i64)
    }

    /// Parses `"c0,c1,c2"`.
    pub fn parse(text: &str) -> Result<Self> {
        let parts: Vec<&str> = text.split(',').collect();
        if parts.len() != 3 {
            return Err(Error::Range(format!(
                "affine form needs three comma-separated coefficients, got {text:?}"
            )));
        }
        Ok(Self::new(
            parse_rational(parts[0])?,
            parse_rational(parts[1])?,
            parse_rational(parts[2])?,
        ))
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}*l + {}*m",
            format_rational(&self.c0),
            format_rational(&self.c1),
            format_rational(&self.c2)
        )
    }
}

/// A parameter value that made some denominator vanish and was stepped over.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PoleRecord {
    pub l: usize,
    pub m: usize,
    #[serde(with = "rational_string")]
    pub tau: Rational,
}

/// Outcome of checking one identity at one parameter point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub params: BTreeMap<String, String>,
    #[serde(with = "rational_string")]
    pub lhs: Rational,
    #[serde(with = "rational_string")]
    pub rhs: Rational,
    pub pass: bool,
    pub skipped_poles: Vec<PoleRecord>,
}

impl IdentityReport {
    pub fn builder(identity: &str) -> ReportBuilder {
        ReportBuilder {
            identity: identity.to_string(),
            params: BTreeMap::new(),
        }
    }
}

pub struct ReportBuilder {
    identity: String,
    params: BTreeMap<String, String>,
}

impl ReportBuilder {
    pub fn param(mut self, name: &str, value: impl fmt::Display) -> Self {
        self.params.insert(name.to_string(), value.to_string());
        self
    }

    pub fn rational(self, name: &str, value: &Rational) -> Self {
        self.param(name, format_rational(value))
    }

    pub fn finish(self, lhs: Rational, rhs: Rational) -> IdentityReport {
        IdentityReport {
            pass: lhs == rhs,
            identity: self.identity,
            params: self.params,
            lhs,
            rhs,
            skipped_poles: Vec::new(),
        }
    }
}

/// Samples of a one-parameter identity whose two sides are polynomials of
/// degree at most `degree_bound` in the sampled parameter (after clearing
/// the parameter's own linear denominators). Agreement at
/// `degree_bound + 1` distinct points certifies it for every value.
#[derive(Clone, Debug, Serialize)]
pub struct Certification {
    pub identity: String,
    pub parameter: String,
    pub degree_bound: usize,
    pub samples: Vec<IdentityReport>,
    pub skipped_poles: Vec<PoleRecord>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CertificationSummary {
    pub identity: String,
    pub parameter: String,
    pub degree_bound: usize,
    pub samples: usize,
    pub failed: usize,
    pub skipped_poles: usize,
    pub certified: bool,
}

impl Certification {
    pub fn certified(&self) -> bool {
        self.samples.len() > self.degree_bound && self.samples.iter().all(|r| r.pass)
    }

    pub fn summary(&self) -> CertificationSummary {
        CertificationSummary {
            identity: self.identity.clone(),
            parameter: self.parameter.clone(),
            degree_bound: self.degree_bound,
            samples: self.samples.len(),
            failed: self.samples.iter().filter(|r| !r.pass).count(),
            skipped_poles: self.skipped_poles.len(),
            certified: self.certified(),
        }
    }
}

/// Distinct sample values `(7i - 10)/3`, a mix of integers and thirds.
pub(crate) fn sample_points() -> impl Iterator<Item = Rational> {
    (0i64..).map(|i| crate::arith::rational(7 * i - 10, 3))
}
