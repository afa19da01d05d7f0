//! Command-line surface: `verify`, `eval` and `dump-op`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage error,
//! 3 computation error.

use std::ffi::OsString;

use clap::{Args, Parser, Subcommand};

use crate::families::{cont_dual_hahn, para_racah, wilson, wilson_scaled, ParamSet};
use crate::kernel::{format_rational, parse_rational, parse_rational_list, LambdaPoly, Rational};
use crate::ops::sheun::lambda_op;
use crate::ops::{sheun_basis, DifferenceOperator};
use crate::structure::{mu, mustar, p_op, sklyanin_set, tau, taustar, universal_set};
use crate::verify::{has_hard_failure, render, run_suite, Format, Suite, VerifyConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_COMPUTE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "sheun",
    version,
    about = "S-Heun operators on the quadratic grid: verification, evaluation and export"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a verification suite and print its report.
    Verify(VerifyArgs),
    /// Print the λ-coefficients of a polynomial, lowest degree first.
    Eval(EvalArgs),
    /// Print a named operator as JSON.
    DumpOp(DumpOpArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// sheun, stab, appendix, universal, sklyanin, casimir, rains, wilson,
    /// representation, pararacah, truncation or all.
    #[arg(long)]
    pub suite: Option<String>,
    #[arg(long, default_value_t = 5)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Highest degree for the wilson and representation suites.
    #[arg(long = "n-max")]
    pub n_max: Option<usize>,
    /// Lattice size for the pararacah and truncation suites.
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    pub format: String,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    /// wilson, wilson-scaled, cdhahn or pararacah.
    pub family: Option<String>,
    #[arg(long = "family")]
    pub family_flag: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long = "N")]
    pub big_n: Option<usize>,
    /// Comma-separated rationals: a,b,c,d (wilson), a,b,c (cdhahn), a,c,w (pararacah).
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    /// text, json or csv.
    #[arg(long, default_value = "text")]
    pub format: String,
}

#[derive(Debug, Args)]
pub struct DumpOpArgs {
    /// L, M1, M2, R1, R2, X, P, mu, mustar, tau, taustar, U, V, Y, R, S0, S3, S+, S-.
    pub name: String,
    /// a,b,c,d for the structure operators, s,t for P, a,b,c,d or e1 for U, V, Y, R.
    #[arg(long, allow_hyphen_values = true)]
    pub params: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub s: Option<String>,
}

/// What went wrong, mapped to an exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_COMPUTE,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Compute(m) => m,
        }
    }
}

impl From<crate::Error> for CliError {
    fn from(e: crate::Error) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// Result of a whole invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn required<T: Clone>(value: &Option<T>, flag: &str) -> Result<T, CliError> {
    value
        .clone()
        .ok_or_else(|| usage(format!("missing required flag {flag}")))
}

fn parse_format(text: &str) -> Result<Format, CliError> {
    text.parse().map_err(usage)
}

fn parse_params(text: &Option<String>, flag: &str) -> Result<Vec<Rational>, CliError> {
    let text = required(text, flag)?;
    parse_rational_list(&text).map_err(|e| usage(format!("{flag}: {e}")))
}

fn param_set(text: &Option<String>) -> Result<ParamSet, CliError> {
    let v = parse_params(text, "--params")?;
    ParamSet::from_slice(&v).map_err(|e| usage(format!("--params: {e}")))
}

fn arity(v: &[Rational], n: usize, what: &str) -> Result<(), CliError> {
    if v.len() == n {
        Ok(())
    } else {
        Err(usage(format!("--params: {what} takes {n} values, got {}", v.len())))
    }
}

/// Runs a suite; exit status 1 iff an entry fails as printed and under its correction.
pub fn cmd_verify(args: &VerifyArgs) -> Result<(String, i32), CliError> {
    let suite: Suite = required(&args.suite, "--suite")?.parse().map_err(usage)?;
    let format = parse_format(&args.format)?;
    if args.trials == 0 {
        return Err(usage("--trials must be at least 1"));
    }
    if args.n_max == Some(0) {
        return Err(usage("--n-max must be at least 1"));
    }
    match (suite, args.big_n) {
        (Suite::ParaRacah, Some(n)) if n < 2 => return Err(usage("--N must be at least 2 for pararacah")),
        (Suite::Truncation, Some(0)) => return Err(usage("--N must be at least 1 for truncation")),
        _ => {}
    }
    let cfg = VerifyConfig {
        trials: args.trials,
        seed: args.seed,
        n_max: args.n_max,
        big_n: args.big_n,
    };
    let reports = run_suite(suite, &cfg);
    let code = if has_hard_failure(&reports) {
        EXIT_VERIFY_FAILED
    } else {
        EXIT_OK
    };
    Ok((render(&reports, format), code))
}

fn format_coefficients(p: &LambdaPoly, format: Format) -> String {
    let coeffs: Vec<String> = if p.is_zero() {
        vec!["0".to_string()]
    } else {
        p.coeffs().iter().map(format_rational).collect()
    };
    match format {
        Format::Text => format!("{}\n", coeffs.join(", ")),
        Format::Csv => format!("{}\n", coeffs.join(",")),
        Format::Json => format!("{}\n", serde_json::to_string(&coeffs).expect("strings serialize")),
    }
}

/// Evaluates a polynomial family and prints its coefficients.
pub fn cmd_eval(args: &EvalArgs) -> Result<String, CliError> {
    let family = match (&args.family, &args.family_flag) {
        (Some(f), None) | (None, Some(f)) => f.clone(),
        (Some(a), Some(b)) if a == b => a.clone(),
        (Some(_), Some(_)) => return Err(usage("family given twice with different values")),
        (None, None) => return Err(usage("missing required flag --family")),
    };
    let format = parse_format(&args.format)?;
    let n = required(&args.n, "--n")?;
    let poly = match family.as_str() {
        "wilson" => wilson(n, &param_set(&args.params)?)?,
        "wilson-scaled" => wilson_scaled(n, &param_set(&args.params)?)?,
        "cdhahn" => {
            let v = parse_params(&args.params, "--params")?;
            arity(&v, 3, "cdhahn")?;
            cont_dual_hahn(n, &v[0], &v[1], &v[2])?
        }
        "pararacah" => {
            let big_n = required(&args.big_n, "--N")?;
            let v = parse_params(&args.params, "--params")?;
            arity(&v, 3, "pararacah")?;
            para_racah(n, big_n, &v[0], &v[1], &v[2])?
        }
        other => {
            return Err(usage(format!(
                "unknown family `{other}` (expected wilson, wilson-scaled, cdhahn or pararacah)"
            )))
        }
    };
    Ok(format_coefficients(&poly, format))
}

fn e1_from_params(text: &Option<String>) -> Result<Rational, CliError> {
    let v = parse_params(text, "--params")?;
    match v.len() {
        1 => Ok(v[0].clone()),
        4 => Ok(v.iter().sum()),
        k => Err(usage(format!(
            "--params: U, V, Y, R take e1 or a,b,c,d, got {k} values"
        ))),
    }
}

/// Builds a named operator.
pub fn named_operator(args: &DumpOpArgs) -> Result<DifferenceOperator, CliError> {
    let b = sheun_basis();
    let s = || -> Result<Rational, CliError> {
        let text = required(&args.s, "--s")?;
        parse_rational(&text).map_err(|e| usage(format!("--s: {e}")))
    };
    Ok(match args.name.as_str() {
        "L" => b.l,
        "M1" => b.m1,
        "M2" => b.m2,
        "R1" => b.r1,
        "R2" => b.r2,
        "X" => lambda_op(),
        "P" => {
            let v = parse_params(&args.params, "--params")?;
            arity(&v, 2, "P")?;
            p_op(&v[0], &v[1])
        }
        "mu" => mu(&param_set(&args.params)?),
        "mustar" => mustar(&param_set(&args.params)?),
        "tau" => {
            if args.params.is_some() {
                param_set(&args.params)?;
            }
            tau()
        }
        "taustar" => taustar(&param_set(&args.params)?),
        "U" => universal_set(&e1_from_params(&args.params)?).u,
        "V" => universal_set(&e1_from_params(&args.params)?).v,
        "Y" => universal_set(&e1_from_params(&args.params).unwrap_or_default()).y,
        "R" => universal_set(&e1_from_params(&args.params)?).r,
        "S0" => sklyanin_set(&s()?)?.s0,
        "S3" => sklyanin_set(&s()?)?.s3,
        "S+" | "Splus" => sklyanin_set(&s()?)?.splus,
        "S-" | "S−" | "Sminus" => sklyanin_set(&s()?)?.sminus,
        other => {
            return Err(CliError::Compute(
                crate::Error::UnknownOperator(other.to_string()).to_string(),
            ))
        }
    })
}

/// Prints a named operator in the operator JSON format.
pub fn cmd_dump_op(args: &DumpOpArgs) -> Result<String, CliError> {
    let op = named_operator(args)?;
    let mut s = serde_json::to_string_pretty(&op.to_json()).expect("JSON values serialize");
    s.push('\n');
    Ok(s)
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: EXIT_OK,
                }
            };
        }
    };
    let result = match &cli.command {
        Command::Verify(a) => cmd_verify(a),
        Command::Eval(a) => cmd_eval(a).map(|s| (s, EXIT_OK)),
        Command::DumpOp(a) => cmd_dump_op(a).map(|s| (s, EXIT_OK)),
    };
    match result {
        Ok((stdout, code)) => Outcome {
            stdout,
            stderr: String::new(),
            code,
        },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message()),
            code: e.exit_code(),
        },
    }
}
