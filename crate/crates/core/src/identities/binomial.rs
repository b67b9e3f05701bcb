//! Binomial convolution identities over the weights `W_{m,l}(v)`.
//!
//! For `v in pi_d(n, k)` with `k > 0` and `alpha` affine in `(l, m)` the
//! double sums below equal `binom(tau, k)` identically in `tau`:
//!
//! ```text
//! (A) sum alpha(k,n)/alpha * binom(alpha, k-l) binom(tau-alpha, l) / binom(k,l) * W
//! (B) sum alpha(0,0)/alpha * binom(tau-alpha, k-l) binom(alpha, l) / binom(k,l) * W
//! ```
//!
//! and the partial-fraction combination (C) equals
//! `(tau - alpha(0,0) + alpha(k,n)) / (alpha(k,n) (tau - alpha(0,0))) * binom(tau, k)`.
//! Sums range over `0 <= l <= k`, `l <= m <= n`; terms with `W = 0` are
//! dropped, so a pole only counts where the weight is nonzero.

use num_traits::{One, Zero};

use super::report::{sample_points, AffineForm, Certification, IdentityReport, PoleRecord};
use crate::arith::{binomial, binomial_general, factorial, format_rational, int, sign};
use crate::error::{Error, Result};
use crate::partitions::{w_coefficient, IndexVector};
use crate::poly::SparsePoly;
use crate::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Th1Variant {
    A,
    B,
}

/// The three `tau`-identities of the family, for grid certification.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Th1Identity {
    A,
    B,
    C,
}

impl Th1Identity {
    pub fn name(self) -> &'static str {
        match self {
            Th1Identity::A => "th1a",
            Th1Identity::B => "th1b",
            Th1Identity::C => "th1c",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HagenRotheVariant {
    Symmetric,
    Asymmetric,
    ChuVandermonde,
}

/// Nonzero weights `W_{m,l}(v)` together with `k = sum v_j`, `n = sum j v_j`.
#[derive(Clone, Debug)]
pub struct WeightSupport {
    pub k: usize,
    pub n: usize,
    pub terms: Vec<(usize, usize, Rational)>,
}

impl WeightSupport {
    pub fn new(v: &IndexVector) -> Result<Self> {
        if v.is_zero() {
            return Err(Error::ZeroVector);
        }
        let (k, n) = (v.count(), v.weight());
        let mut terms = Vec::new();
        for l in 0..=k {
            for m in l..=n {
                let w = w_coefficient(m, l, v)?;
                if !w.is_zero() {
                    terms.push((l, m, Rational::from_integer(w)));
                }
            }
        }
        Ok(Self { k, n, terms })
    }

    fn check_alpha(&self, alpha: &AffineForm) -> Result<()> {
        for &(l, m, _) in &self.terms {
            if alpha.eval(l, m).is_zero() {
                return Err(Error::Pole {
                    site: format!("alpha(l={l}, m={m}) = 0"),
                });
            }
        }
        Ok(())
    }

    /// First support point where `tau - alpha(l, m)` vanishes.
    fn tau_collision(&self, alpha: &AffineForm, tau: &Rational) -> Option<(usize, usize)> {
        self.terms
            .iter()
            .find(|(l, m, _)| alpha.eval(*l, *m) == *tau)
            .map(|&(l, m, _)| (l, m))
    }
}

fn vector_label(v: &IndexVector) -> String {
    let entries: Vec<String> = v.trimmed().iter().map(|e| e.to_string()).collect();
    format!("[{}]", entries.join(","))
}

fn binom_k(k: usize, l: usize) -> Rational {
    Rational::from_integer(binomial(k, l))
}

/// `sum (-1)^{|i|} prod binom(v_j, i_j) P(i)` over `0 <= i_j <= v_j`, which
/// vanishes whenever `deg P < sum v_j`. Refuses polynomials at or above the
/// bound, where the sum genuinely need not vanish.
pub fn check_vanishing_sum(v: &IndexVector, p: &SparsePoly<Rational>) -> Result<IdentityReport> {
    let bound = v.count();
    if let Some(degree) = p.total_degree() {
        if degree as usize >= bound {
            return Err(Error::DegreeBound { degree, bound });
        }
    }
    let dims = v.entries();
    if p.num_vars() > dims.len() {
        return Err(Error::Range(format!(
            "polynomial uses x_{} but v has only {} entries",
            p.num_vars(),
            dims.len()
        )));
    }
    let mut point = vec![0usize; dims.len()];
    let mut lhs = Rational::zero();
    loop {
        let weight = point
            .iter()
            .zip(dims)
            .fold(Rational::one(), |acc, (&i, &vj)| {
                acc * Rational::from_integer(binomial(vj, i))
            });
        let at: Vec<Rational> = point.iter().map(|&i| int(i as i64)).collect();
        let total: usize = point.iter().sum();
        lhs += sign::<Rational>(total) * weight * p.eval(&at)?;

        // odometer over the box
        let mut j = 0;
        loop {
            if j == dims.len() {
                let report = IdentityReport::builder("vanishing-sum")
                    .param("v", vector_label(v))
                    .param("p", p)
                    .finish(lhs, Rational::zero());
                return Ok(report);
            }
            if point[j] < dims[j] {
                point[j] += 1;
                break;
            }
            point[j] = 0;
            j += 1;
        }
    }
}

fn th1_lhs(
    variant: Th1Identity,
    support: &WeightSupport,
    alpha: &AffineForm,
    tau: &Rational,
) -> Rational {
    let (k, n) = (support.k, support.n);
    let alpha_kn = alpha.eval(k, n);
    let alpha_00 = alpha.eval(0, 0);
    let mut lhs = Rational::zero();
    for (l, m, w) in &support.terms {
        let (l, m) = (*l, *m);
        let a = alpha.eval(l, m);
        let rest = tau - &a;
        let term = match variant {
            Th1Identity::A => {
                &alpha_kn / &a * binomial_general(&a, k - l) * binomial_general(&rest, l)
                    / binom_k(k, l)
            }
            Th1Identity::B => {
                &alpha_00 / &a * binomial_general(&rest, k - l) * binomial_general(&a, l)
                    / binom_k(k, l)
            }
            Th1Identity::C => {
                tau * binomial_general(&a, k - l) * binomial_general(&rest, l)
                    / (&a * &rest * binom_k(k, l))
            }
        };
        lhs += term * w;
    }
    lhs
}

fn th1c_rhs(support: &WeightSupport, alpha: &AffineForm, tau: &Rational) -> Rational {
    let alpha_kn = alpha.eval(support.k, support.n);
    let alpha_00 = alpha.eval(0, 0);
    (tau - &alpha_00 + &alpha_kn) / (&alpha_kn * (tau - &alpha_00))
        * binomial_general(tau, support.k)
}

fn th1_report(
    which: Th1Identity,
    v: &IndexVector,
    support: &WeightSupport,
    alpha: &AffineForm,
    tau: &Rational,
) -> IdentityReport {
    let lhs = th1_lhs(which, support, alpha, tau);
    let rhs = match which {
        Th1Identity::C => th1c_rhs(support, alpha, tau),
        _ => binomial_general(tau, support.k),
    };
    IdentityReport::builder(which.name())
        .param("v", vector_label(v))
        .param("n", support.n)
        .param("k", support.k)
        .param("alpha", alpha)
        .rational("tau", tau)
        .finish(lhs, rhs)
}

/// Checks variant A or B at one `tau`.
pub fn check_th1(
    variant: Th1Variant,
    v: &IndexVector,
    alpha: &AffineForm,
    tau: &Rational,
) -> Result<IdentityReport> {
    let support = WeightSupport::new(v)?;
    support.check_alpha(alpha)?;
    let which = match variant {
        Th1Variant::A => Th1Identity::A,
        Th1Variant::B => Th1Identity::B,
    };
    Ok(th1_report(which, v, &support, alpha, tau))
}

/// Checks the partial-fraction form at one `tau`.
pub fn check_th1c(v: &IndexVector, alpha: &AffineForm, tau: &Rational) -> Result<IdentityReport> {
    let support = WeightSupport::new(v)?;
    support.check_alpha(alpha)?;
    if let Some((l, m)) = support.tau_collision(alpha, tau) {
        return Err(Error::Pole {
            site: format!(
                "tau - alpha(l={l}, m={m}) = 0 at tau = {}",
                format_rational(tau)
            ),
        });
    }
    Ok(th1_report(Th1Identity::C, v, &support, alpha, tau))
}

/// Certifies one identity of the family as a function of `tau` by exact
/// evaluation at `2k + 2` distinct non-pole sample points.
///
/// Fails with [`Error::Pole`] when `alpha` itself vanishes on the support of
/// `W`, since then no `tau` makes the instance defined.
pub fn certify_th1(
    which: Th1Identity,
    v: &IndexVector,
    alpha: &AffineForm,
) -> Result<Certification> {
    let support = WeightSupport::new(v)?;
    support.check_alpha(alpha)?;
    let degree_bound = 2 * support.k + 1;
    let mut samples = Vec::with_capacity(degree_bound + 1);
    let mut skipped = Vec::new();
    for tau in sample_points() {
        if samples.len() > degree_bound {
            break;
        }
        if which == Th1Identity::C {
            if let Some((l, m)) = support.tau_collision(alpha, &tau) {
                skipped.push(PoleRecord { l, m, tau });
                continue;
            }
        }
        samples.push(th1_report(which, v, &support, alpha, &tau));
    }
    Ok(Certification {
        identity: which.name().to_string(),
        parameter: "tau".into(),
        degree_bound,
        samples,
        skipped_poles: skipped,
    })
}

/// One-variable form of (B): `sum_l alpha(0)/alpha(l) binom(tau - alpha(l), k-l) binom(alpha(l), l)`.
pub fn check_th1b_single(
    alpha: &dyn Fn(usize) -> Rational,
    k: usize,
    tau: &Rational,
) -> Result<IdentityReport> {
    let a0 = alpha(0);
    let mut lhs = Rational::zero();
    for l in 0..=k {
        let a = alpha(l);
        if a.is_zero() {
            return Err(Error::Pole {
                site: format!("alpha({l}) = 0"),
            });
        }
        lhs += &a0 / &a * binomial_general(&(tau - &a), k - l) * binomial_general(&a, l);
    }
    Ok(IdentityReport::builder("th1b-single")
        .param("k", k)
        .rational("tau", tau)
        .finish(lhs, binomial_general(tau, k)))
}

/// One-variable form of (C).
pub fn check_th1c_single(
    alpha: &dyn Fn(usize) -> Rational,
    k: usize,
    tau: &Rational,
) -> Result<IdentityReport> {
    let mut lhs = Rational::zero();
    for l in 0..=k {
        let a = alpha(l);
        let rest = tau - &a;
        if a.is_zero() || rest.is_zero() {
            return Err(Error::Pole {
                site: format!("alpha({l}) or tau - alpha({l}) vanishes"),
            });
        }
        lhs += tau * binomial_general(&a, k - l) * binomial_general(&rest, l) / (&a * &rest);
    }
    let (a0, ak) = (alpha(0), alpha(k));
    let rhs = (tau - &a0 + &ak) / (&ak * (tau - &a0)) * binomial_general(tau, k);
    Ok(IdentityReport::builder("th1c-single")
        .param("k", k)
        .rational("tau", tau)
        .finish(lhs, rhs))
}

fn nonzero(value: Rational, what: impl FnOnce() -> String) -> Result<Rational> {
    if value.is_zero() {
        Err(Error::Pole { site: what() })
    } else {
        Ok(value)
    }
}

/// The Hagen-Rothe identities and their `z = 0` specialization
/// (Chu-Vandermonde), where `z` is ignored.
pub fn check_hagen_rothe(
    variant: HagenRotheVariant,
    x: &Rational,
    y: &Rational,
    z: &Rational,
    k: usize,
) -> Result<IdentityReport> {
    let zl = |l: usize| z * int(l as i64);
    let mut lhs = Rational::zero();
    let (name, rhs) = match variant {
        HagenRotheVariant::ChuVandermonde => {
            for l in 0..=k {
                lhs += binomial_general(x, l) * binomial_general(y, k - l);
            }
            ("chu-vandermonde", binomial_general(&(x + y), k))
        }
        HagenRotheVariant::Asymmetric => {
            for l in 0..=k {
                let xl = nonzero(x + zl(l), || format!("x + {l} z = 0"))?;
                lhs +=
                    x / &xl * binomial_general(&xl, l) * binomial_general(&(y + zl(k - l)), k - l);
            }
            (
                "hagen-rothe-asymmetric",
                binomial_general(&(x + y + zl(k)), k),
            )
        }
        HagenRotheVariant::Symmetric => {
            let total = nonzero(x + y + zl(k), || format!("x + y + {k} z = 0"))?;
            for l in 0..=k {
                let xl = nonzero(x + zl(l), || format!("x + {l} z = 0"))?;
                let yl = nonzero(y + zl(k - l), || format!("y + {} z = 0", k - l))?;
                lhs +=
                    x / &xl * binomial_general(&xl, l) * (y / &yl) * binomial_general(&yl, k - l);
            }
            let rhs = (x + y) / &total * binomial_general(&total, k);
            ("hagen-rothe-symmetric", rhs)
        }
    };
    let mut builder = IdentityReport::builder(name)
        .rational("x", x)
        .rational("y", y);
    if variant != HagenRotheVariant::ChuVandermonde {
        builder = builder.rational("z", z);
    }
    Ok(builder.param("k", k).finish(lhs, rhs))
}

/// The `tau = -1` specialization of (B),
/// `sum (-1)^l alpha(0,0)/alpha binom(alpha + k - l, k) W = 1`.
///
/// When `alpha = z - k + l` for an integer `z > k` the reciprocal-binomial
/// formula it reduces to is checked as a second report.
pub fn check_negative_one(v: &IndexVector, alpha: &AffineForm) -> Result<Vec<IdentityReport>> {
    let support = WeightSupport::new(v)?;
    support.check_alpha(alpha)?;
    let k = support.k;
    let a00 = alpha.eval(0, 0);
    let mut lhs = Rational::zero();
    for (l, m, w) in &support.terms {
        let a = alpha.eval(*l, *m);
        lhs +=
            sign::<Rational>(*l) * &a00 / &a * binomial_general(&(&a + int((k - l) as i64)), k) * w;
    }
    let mut reports = vec![IdentityReport::builder("negative-one")
        .param("v", vector_label(v))
        .param("alpha", alpha)
        .finish(lhs, Rational::one())];

    let z = &alpha.c0 + int(k as i64);
    if alpha.c1.is_one() && alpha.c2.is_zero() && z.is_integer() && z > int(k as i64) {
        reports.push(check_reciprocal_binomial(&z, k)?);
    }
    Ok(reports)
}

/// `1 / binom(z, k) = sum_{l=1}^{k} (-1)^{l-1} binom(k, l) l / (z - k + l)`.
pub fn check_reciprocal_binomial(z: &Rational, k: usize) -> Result<IdentityReport> {
    let c = nonzero(binomial_general(z, k), || "binom(z, k) = 0".into())?;
    let mut rhs = Rational::zero();
    for l in 1..=k {
        let d = nonzero(z - int(k as i64) + int(l as i64), || {
            format!("z - k + {l} = 0")
        })?;
        rhs += sign::<Rational>(l - 1) * binom_k(k, l) * int(l as i64) / d;
    }
    Ok(IdentityReport::builder("reciprocal-binomial")
        .rational("z", z)
        .param("k", k)
        .finish(Rational::one() / c, rhs))
}

/// `sum (-1)^l / k! * p(m, l, tau) * W_{m,l}(v) = gamma_k * binom(tau, k)`.
///
/// The degree hypotheses on `p` are the caller's responsibility; a failing
/// report cannot tell a false instance from a violated hypothesis.
pub fn check_general_binomial(
    v: &IndexVector,
    p: &dyn Fn(usize, usize, &Rational) -> Rational,
    gamma_k: &Rational,
    tau: &Rational,
) -> Result<IdentityReport> {
    let support = WeightSupport::new(v)?;
    let kf = Rational::from_integer(factorial(support.k));
    let mut lhs = Rational::zero();
    for (l, m, w) in &support.terms {
        lhs += sign::<Rational>(*l) / &kf * p(*m, *l, tau) * w;
    }
    Ok(IdentityReport::builder("general-binomial")
        .param("v", vector_label(v))
        .rational("gamma_k", gamma_k)
        .rational("tau", tau)
        .finish(lhs, gamma_k * binomial_general(tau, support.k)))
}

/// The kernel `p_{m,l}(tau)` that turns the general theorem into (A); its
/// `gamma_k` is 1.
pub fn th1a_kernel(
    alpha: AffineForm,
    k: usize,
    n: usize,
) -> impl Fn(usize, usize, &Rational) -> Rational {
    move |m, l, tau| {
        let a = alpha.eval(l, m);
        sign::<Rational>(l) * Rational::from_integer(factorial(k)) * alpha.eval(k, n) / &a
            * binomial_general(&a, k - l)
            * binomial_general(&(tau - &a), l)
            / binom_k(k, l)
    }
}
