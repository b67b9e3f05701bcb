//! `bellpoly`: compute partial Bell polynomials, transforms and series, and
//! verify the identities among them with exact rational arithmetic.
//!
//! Exit status: 0 on success, 1 if any identity check fails, 2 on usage or
//! input errors.

mod input;
mod output;

use std::process::ExitCode;

use bellpoly::arith::{binomial_general, factorial, format_rational, sign};
use bellpoly::bell::{bell_eval, bell_symbolic, stirling1_unsigned, stirling2};
use bellpoly::identities::{
    certify_th1, check_alpha_constant, check_bell_convolution, check_general_binomial,
    check_hagen_rothe, check_negative_one, check_stirling_recurrence, check_th1, check_th1c,
    check_vanishing_sum, check_zerosum, th1a_kernel, AffineForm, ConvolutionVariant,
    HagenRotheVariant, StirlingKind, Th1Identity, Th1Variant, WeightSupport,
};
use bellpoly::series::{egf_apply_poly, egf_log, egf_pow};
use bellpoly::transforms::{
    certify_lambda, forward_transform, inverse_transform, lambda_identity_check, log_polynomials,
    potential_polynomials, q_function, q_product_check, q_recurrence_check,
};
use bellpoly::{Monomial, Rational, RationalEgf, RationalPoly, TransformParams};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use input::{index_vector, load_sequence, rational, rational_list};
use output::{Format, Output};

#[derive(Parser)]
#[command(
    name = "bellpoly",
    version,
    about = "Exact partial Bell polynomial toolkit"
)]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SeqArgs {
    /// ones | factorials | identity-j | random | path to a JSON array
    #[arg(long, default_value = "ones")]
    x: String,
    #[arg(long)]
    seed: Option<u64>,
}

impl SeqArgs {
    fn load(&self, len: usize) -> Result<bellpoly::RationalSequence, String> {
        load_sequence(&self.x, len, self.seed)
    }
}

#[derive(Subcommand)]
enum Command {
    /// B_{n,k}: symbolic, or evaluated at --x
    Bell {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        symbolic: bool,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// Stirling numbers of either kind
    Stirling {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value = "second")]
        kind: Kind,
    },
    /// Q_{n,b}(lambda, x)
    Q {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[command(flatten)]
        seq: SeqArgs,
    },
    #[command(subcommand)]
    Transform(TransformCommand),
    #[command(subcommand)]
    Series(SeriesCommand),
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    First,
    Second,
}

impl From<Kind> for StirlingKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::First => StirlingKind::First,
            Kind::Second => StirlingKind::Second,
        }
    }
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: i64,
    #[arg(long, allow_hyphen_values = true)]
    b: i64,
}

impl ParamArgs {
    fn get(self) -> TransformParams {
        TransformParams::new(self.a, self.b)
    }
}

#[derive(Subcommand)]
enum TransformCommand {
    /// y_n = Q_{n,b}(a n, x)
    Forward {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// x from y by the closed-form inverse
    Inverse {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// inverse(forward(x)) == x
    Roundtrip {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// The lambda identity; without --lambda, certified at n+1 sample values
    Lambda {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        lambda: Option<String>,
        #[arg(long, default_value = "1")]
        k0: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// log(1 + sum x_n t^n/n!)
    Log {
        #[arg(long)]
        n_max: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// (1 + sum x_n t^n/n!)^r
    Pow {
        #[arg(long)]
        n_max: usize,
        #[arg(long, allow_hyphen_values = true)]
        r: String,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// F(Y) for Y = 1 + sum y_n t^n/n!, y the forward transform of x
    ApplyPoly {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        n_max: usize,
        /// coefficients c0,c1,...,cm of F
        #[arg(long, allow_hyphen_values = true)]
        f: String,
        #[command(flatten)]
        seq: SeqArgs,
    },
}

#[derive(Args, Clone)]
struct BinomialArgs {
    /// index vector, e.g. 2,1
    #[arg(long)]
    v: String,
    /// affine alpha(l, m) = c0 + c1 l + c2 m as c0,c1,c2
    #[arg(long, allow_hyphen_values = true, default_value = "1,0,0")]
    alpha: String,
    /// without it, certify at 2k+2 sample values
    #[arg(long, allow_hyphen_values = true)]
    tau: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum HrVariant {
    Symmetric,
    Asymmetric,
}

#[derive(Clone, Copy, ValueEnum)]
enum ConvVariant {
    First,
    Second,
    PartialFraction,
}

#[derive(Subcommand)]
enum VerifyCommand {
    Th1a(BinomialArgs),
    Th1b(BinomialArgs),
    Th1c(BinomialArgs),
    HagenRothe {
        #[arg(long, value_enum, default_value = "symmetric")]
        variant: HrVariant,
        #[arg(long, allow_hyphen_values = true)]
        x_val: String,
        #[arg(long, allow_hyphen_values = true)]
        y_val: String,
        #[arg(long, allow_hyphen_values = true)]
        z_val: String,
        #[arg(long)]
        k: usize,
    },
    ChuVandermonde {
        #[arg(long, allow_hyphen_values = true)]
        x_val: String,
        #[arg(long, allow_hyphen_values = true)]
        y_val: String,
        #[arg(long)]
        k: usize,
    },
    NegativeOne {
        #[arg(long)]
        v: String,
        #[arg(long, allow_hyphen_values = true)]
        alpha: String,
    },
    /// Every monomial of degree < sum(v), or just --exps
    VanishingSum {
        #[arg(long)]
        v: String,
        #[arg(long)]
        exps: Option<String>,
    },
    BellConv {
        #[arg(long, value_enum, default_value = "first")]
        variant: ConvVariant,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "1,1,0")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true)]
        tau: String,
        #[command(flatten)]
        seq: SeqArgs,
    },
    AlphaConstant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    Zerosum {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    StirlingRec {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_enum, default_value = "second")]
        kind: Kind,
    },
    QRecurrence {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        lambda: usize,
        #[command(flatten)]
        seq: SeqArgs,
    },
    QProduct {
        #[arg(long)]
        n1: usize,
        #[arg(long)]
        n2: usize,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b1: i64,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        b2: i64,
        #[arg(long, allow_hyphen_values = true)]
        lambda1: String,
        #[arg(long, allow_hyphen_values = true)]
        lambda2: String,
        #[command(flatten)]
        seq: SeqArgs,
    },
    /// The pluggable-kernel theorem on its two textbook kernels
    GeneralBinomialDemo {
        #[arg(long, default_value = "2,1")]
        v: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1,1,0")]
        alpha: String,
        #[arg(long, allow_hyphen_values = true, default_value = "5")]
        tau: String,
        /// also run p = tau^k, which violates the degree hypothesis and fails
        #[arg(long)]
        counterexample: bool,
    },
}

type Run = Result<Output, String>;

fn lib<T>(r: bellpoly::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn sequence_output(header: &str, values: &[(&str, &bellpoly::RationalSequence)]) -> Output {
    let mut out = Output::table(&["n", header]);
    let mut record = serde_json::Map::new();
    for (name, seq) in values {
        record.insert(name.to_string(), json!(seq));
    }
    out.record(record);
    let last = values.last().expect("at least one sequence").1;
    for (i, v) in last.to_strings().into_iter().enumerate() {
        out.row(vec![(i + 1).to_string(), v]);
    }
    out
}

fn series_output(series: &RationalEgf, bell_route_agrees: Option<bool>) -> Output {
    let mut out = Output::table(&["n", "coeff"]);
    let mut record = json!({ "series": series });
    if let Some(ok) = bell_route_agrees {
        record["bell_route_agrees"] = json!(ok);
        out.pass = ok;
    }
    out.record(record);
    for (i, c) in series.coeffs().iter().enumerate() {
        out.row(vec![i.to_string(), format_rational(c)]);
    }
    out
}

fn run_bell(n: usize, k: usize, symbolic: bool, seq: &SeqArgs) -> Run {
    if symbolic {
        let p = lib(bell_symbolic(n, k))?;
        let mut out = Output::table(&["coeff", "exps"]);
        out.record(json!({ "n": n, "k": k, "display": p.to_string(), "terms": p }));
        for (m, c) in p.terms() {
            let exps: Vec<String> = m.exps().iter().map(u32::to_string).collect();
            out.row(vec![format_rational(c), exps.join(";")]);
        }
        return Ok(out);
    }
    let x = seq.load(n.max(1))?;
    let value = lib(bell_eval(n, k, &x))?;
    let mut out = Output::table(&["n", "k", "value"]);
    out.record(json!({ "n": n, "k": k, "value": format_rational(&value) }));
    out.row(vec![n.to_string(), k.to_string(), format_rational(&value)]);
    Ok(out)
}

fn run_transform(cmd: &TransformCommand) -> Run {
    match cmd {
        TransformCommand::Forward { params, n_max, seq } => {
            let x = seq.load(*n_max)?;
            let y = lib(forward_transform(&x, params.get(), *n_max))?;
            Ok(sequence_output("y", &[("x", &x), ("y", &y)]))
        }
        TransformCommand::Inverse { params, n_max, seq } => {
            let y = seq.load(*n_max)?;
            let x = lib(inverse_transform(&y, params.get(), *n_max))?;
            Ok(sequence_output("x", &[("y", &y), ("x", &x)]))
        }
        TransformCommand::Roundtrip { params, n_max, seq } => {
            let x = seq.load(*n_max)?;
            let x = lib(x.truncated(*n_max))?;
            let y = lib(forward_transform(&x, params.get(), *n_max))?;
            let back = lib(inverse_transform(&y, params.get(), *n_max))?;
            let mut out = Output::table(&["n", "x", "y", "recovered", "pass"]);
            let pass = back == x;
            out.record(json!({
                "a": params.a, "b": params.b, "n_max": n_max,
                "x": x, "y": y, "recovered": back, "pass": pass,
            }));
            let (xs, ys, bs) = (x.to_strings(), y.to_strings(), back.to_strings());
            for i in 0..*n_max {
                out.row(vec![
                    (i + 1).to_string(),
                    xs[i].clone(),
                    ys[i].clone(),
                    bs[i].clone(),
                    (xs[i] == bs[i]).to_string(),
                ]);
            }
            out.pass = pass;
            Ok(out)
        }
        TransformCommand::Lambda {
            params,
            n,
            lambda,
            k0,
            seq,
        } => {
            let x = seq.load(*n)?;
            match lambda {
                Some(l) => {
                    let r = lib(lambda_identity_check(
                        &x,
                        params.get(),
                        *n,
                        &rational(l)?,
                        *k0,
                    ))?;
                    Ok(Output::reports(&[r]))
                }
                None => Ok(Output::certification(&lib(certify_lambda(
                    &x,
                    params.get(),
                    *n,
                    *k0,
                ))?)),
            }
        }
    }
}

fn run_series(cmd: &SeriesCommand) -> Run {
    match cmd {
        SeriesCommand::Log { n_max, seq } => {
            let z = seq.load(*n_max)?;
            let series = lib(RationalEgf::one_plus(&z, *n_max))?;
            let log = lib(egf_log(&series))?;
            let agrees = log.tail() == lib(log_polynomials(&z, *n_max))?;
            Ok(series_output(&log, Some(agrees)))
        }
        SeriesCommand::Pow { n_max, r, seq } => {
            let z = seq.load(*n_max)?;
            let r = rational(r)?;
            let series = lib(RationalEgf::one_plus(&z, *n_max))?;
            let pow = lib(egf_pow(&series, &r))?;
            let agrees = pow.tail() == lib(potential_polynomials(&r, &z, *n_max))?;
            Ok(series_output(&pow, Some(agrees)))
        }
        SeriesCommand::ApplyPoly {
            params,
            n_max,
            f,
            seq,
        } => {
            let x = seq.load(*n_max)?;
            let f = rational_list(f)?;
            let y = lib(forward_transform(&x, params.get(), *n_max))?;
            let series = lib(RationalEgf::one_plus(&y, *n_max))?;
            let closed = lib(egf_apply_poly(&series, &f, params.get(), &x))?;
            let agrees = closed == bellpoly::series::compose_poly(&f, &series);
            Ok(series_output(&closed, Some(agrees)))
        }
    }
}

fn run_binomial(which: Th1Identity, args: &BinomialArgs) -> Run {
    let v = index_vector(&args.v)?;
    let alpha = lib(AffineForm::parse(&args.alpha))?;
    match &args.tau {
        Some(t) => {
            let tau = rational(t)?;
            let report = match which {
                Th1Identity::A => check_th1(Th1Variant::A, &v, &alpha, &tau),
                Th1Identity::B => check_th1(Th1Variant::B, &v, &alpha, &tau),
                Th1Identity::C => check_th1c(&v, &alpha, &tau),
            };
            Ok(Output::reports(&[lib(report)?]))
        }
        None => Ok(Output::certification(&lib(certify_th1(which, &v, &alpha))?)),
    }
}

fn run_vanishing_sum(v: &str, exps: Option<&str>) -> Run {
    let v = index_vector(v)?;
    let mut reports = Vec::new();
    match exps {
        Some(e) => {
            let exps = e
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse::<u32>()
                        .map_err(|_| format!("bad exponent {s:?}"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            let p = RationalPoly::monomial(Monomial::new(exps), Rational::from_integer(1.into()));
            reports.push(lib(check_vanishing_sum(&v, &p))?);
        }
        None => {
            let d = v.trimmed().len();
            let total = v.count();
            if total == 0 {
                return Err(bellpoly::Error::ZeroVector.to_string());
            }
            for degree in 0..total {
                for exps in monomial_exponents(d, degree) {
                    let p = RationalPoly::monomial(
                        Monomial::new(exps),
                        Rational::from_integer(1.into()),
                    );
                    reports.push(lib(check_vanishing_sum(&v, &p))?);
                }
            }
        }
    }
    Ok(Output::reports(&reports))
}

/// Exponent vectors in `d` variables with total degree exactly `degree`.
fn monomial_exponents(d: usize, degree: usize) -> Vec<Vec<u32>> {
    if d == 0 {
        return if degree == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for head in (0..=degree).rev() {
        for mut tail in monomial_exponents(d - 1, degree - head) {
            tail.insert(0, head as u32);
            out.push(tail);
        }
    }
    out
}

fn run_general_demo(v: &str, alpha: &str, tau: &str, counterexample: bool) -> Run {
    let v = index_vector(v)?;
    let alpha = lib(AffineForm::parse(alpha))?;
    let tau = rational(tau)?;
    let support = lib(WeightSupport::new(&v))?;
    let (k, n) = (support.k, support.n);
    let one = Rational::from_integer(1.into());
    let mut reports = Vec::new();

    let kernel = th1a_kernel(alpha, k, n);
    reports.push(lib(check_general_binomial(&v, &kernel, &one, &tau))?);

    let single = move |_m: usize, l: usize, t: &Rational| {
        if l == k {
            sign::<Rational>(l) * Rational::from_integer(factorial(k)) * binomial_general(t, k)
        } else {
            Rational::from_integer(0.into())
        }
    };
    reports.push(lib(check_general_binomial(&v, &single, &one, &tau))?);

    if counterexample {
        let bad =
            move |_m: usize, _l: usize, t: &Rational| (0..k).fold(one.clone(), |acc, _| acc * t);
        let gamma = sign::<Rational>(k);
        reports.push(lib(check_general_binomial(&v, &bad, &gamma, &tau))?);
    }
    Ok(Output::reports(&reports))
}

fn run_verify(cmd: &VerifyCommand) -> Run {
    let one = |r: bellpoly::Result<bellpoly::identities::IdentityReport>| -> Run {
        Ok(Output::reports(&[lib(r)?]))
    };
    match cmd {
        VerifyCommand::Th1a(args) => run_binomial(Th1Identity::A, args),
        VerifyCommand::Th1b(args) => run_binomial(Th1Identity::B, args),
        VerifyCommand::Th1c(args) => run_binomial(Th1Identity::C, args),
        VerifyCommand::HagenRothe {
            variant,
            x_val,
            y_val,
            z_val,
            k,
        } => {
            let variant = match variant {
                HrVariant::Symmetric => HagenRotheVariant::Symmetric,
                HrVariant::Asymmetric => HagenRotheVariant::Asymmetric,
            };
            one(check_hagen_rothe(
                variant,
                &rational(x_val)?,
                &rational(y_val)?,
                &rational(z_val)?,
                *k,
            ))
        }
        VerifyCommand::ChuVandermonde { x_val, y_val, k } => one(check_hagen_rothe(
            HagenRotheVariant::ChuVandermonde,
            &rational(x_val)?,
            &rational(y_val)?,
            &Rational::from_integer(0.into()),
            *k,
        )),
        VerifyCommand::NegativeOne { v, alpha } => {
            let v = index_vector(v)?;
            let alpha = lib(AffineForm::parse(alpha))?;
            Ok(Output::reports(&lib(check_negative_one(&v, &alpha))?))
        }
        VerifyCommand::VanishingSum { v, exps } => run_vanishing_sum(v, exps.as_deref()),
        VerifyCommand::BellConv {
            variant,
            n,
            k,
            alpha,
            tau,
            seq,
        } => {
            let variant = match variant {
                ConvVariant::First => ConvolutionVariant::First,
                ConvVariant::Second => ConvolutionVariant::Second,
                ConvVariant::PartialFraction => ConvolutionVariant::PartialFraction,
            };
            let x = seq.load(*n)?;
            let alpha = lib(AffineForm::parse(alpha))?;
            one(check_bell_convolution(
                variant,
                *n,
                *k,
                &alpha,
                &rational(tau)?,
                &x,
            ))
        }
        VerifyCommand::AlphaConstant { n, k, r, seq } => {
            one(check_alpha_constant(*n, *k, *r, &seq.load(*n)?))
        }
        VerifyCommand::Zerosum { n, k, seq } => one(check_zerosum(*n, *k, &seq.load(*n)?)),
        VerifyCommand::StirlingRec { n, k, r, kind } => {
            one(check_stirling_recurrence(*n, *k, *r, (*kind).into()))
        }
        VerifyCommand::QRecurrence { n, lambda, seq } => {
            one(q_recurrence_check(*n, *lambda, &seq.load(*n)?))
        }
        VerifyCommand::QProduct {
            n1,
            n2,
            b1,
            b2,
            lambda1,
            lambda2,
            seq,
        } => one(q_product_check(
            *n1,
            *n2,
            *b1,
            *b2,
            &rational(lambda1)?,
            &rational(lambda2)?,
            &seq.load(*n1.max(n2))?,
        )),
        VerifyCommand::GeneralBinomialDemo {
            v,
            alpha,
            tau,
            counterexample,
        } => run_general_demo(v, alpha, tau, *counterexample),
    }
}

fn run(cli: &Cli) -> Run {
    match &cli.command {
        Command::Bell {
            n,
            k,
            symbolic,
            seq,
        } => run_bell(*n, *k, *symbolic, seq),
        Command::Stirling { n, k, kind } => {
            let value = match kind {
                Kind::First => stirling1_unsigned(*n, *k),
                Kind::Second => stirling2(*n, *k),
            };
            let kind = match kind {
                Kind::First => "first",
                Kind::Second => "second",
            };
            let mut out = Output::table(&["n", "k", "kind", "value"]);
            out.record(json!({ "n": n, "k": k, "kind": kind, "value": value.to_string() }));
            out.row(vec![
                n.to_string(),
                k.to_string(),
                kind.into(),
                value.to_string(),
            ]);
            Ok(out)
        }
        Command::Q { n, b, lambda, seq } => {
            let x = seq.load(*n)?;
            let lambda = rational(lambda)?;
            let value = lib(q_function(*n, *b, &lambda, &x))?;
            let mut out = Output::table(&["n", "b", "lambda", "value"]);
            out.record(json!({
                "n": n, "b": b, "lambda": format_rational(&lambda), "value": format_rational(&value),
            }));
            out.row(vec![
                n.to_string(),
                b.to_string(),
                format_rational(&lambda),
                format_rational(&value),
            ]);
            Ok(out)
        }
        Command::Transform(cmd) => run_transform(cmd),
        Command::Series(cmd) => run_series(cmd),
        Command::Verify(cmd) => run_verify(cmd),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            if let Err(e) = out.write(cli.format) {
                eprintln!("bellpoly: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("bellpoly: {msg}");
            ExitCode::from(2)
        }
    }
}
