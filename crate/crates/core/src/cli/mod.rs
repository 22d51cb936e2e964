//! The `eulerint` command-line front end.
//!
//! Exit codes: 0 on success (audit-only findings included), 1 on usage,
//! parse or I/O errors, 2 when a verified identity fails.

pub mod expr;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::error::Error;
use crate::exactnum::Rational;
use crate::identities::{audit_grid, registry, AuditReport, GridRanges};
use crate::oracle::product_integral;
use crate::polyalg::{basis_poly, Family};
use crate::special_sequences::{bernoulli_numbers, euler_numbers};

pub use expr::{parse_expr, ParseError, ProductExpr};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFIED_FAILURE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "eulerint", version, about = "Exact integrals of Euler/Bernoulli polynomial products")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print E_0..E_max or B_0..B_max.
    Numbers {
        #[arg(long, value_enum)]
        kind: Kind,
        #[arg(long)]
        max: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print the polynomial E_n(x) or B_n(x).
    Show {
        #[arg(long, value_enum)]
        family: FamilyArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact integral over [0, 1] of a product expression.
    Integrate {
        expr: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Exact value of a product expression at a rational point.
    Eval {
        expr: String,
        #[arg(long)]
        at: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check registered identities over a parameter grid.
    Audit(AuditArgs),
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    /// Every registered identity.
    #[arg(long, conflicts_with = "ids")]
    pub all: bool,
    /// Comma-separated identity ids.
    #[arg(long, value_delimiter = ',')]
    pub ids: Vec<String>,
    /// Default bound for every parameter.
    #[arg(long, default_value_t = 8)]
    pub max: usize,
    #[arg(long)]
    pub n_max: Option<usize>,
    /// Also bounds `q` for items indexed by (q, p).
    #[arg(long)]
    pub m_max: Option<usize>,
    #[arg(long)]
    pub p_max: Option<usize>,
    /// Write the JSON report here.
    #[arg(long)]
    pub report: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Euler,
    Bernoulli,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    #[value(name = "E")]
    E,
    #[value(name = "B")]
    B,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::E => Family::Euler,
            FamilyArg::B => Family::Bernoulli,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Domain(#[from] Error),
    #[error("cannot write report to {path}: {source}")]
    Report { path: PathBuf, source: std::io::Error },
    #[error("audit needs --all or --ids")]
    NoIds,
}

/// Text produced by a command plus the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: EXIT_OK }
    }
}

pub fn cmd_numbers(kind: Kind, max: usize, format: Format) -> String {
    let (name, table) = match kind {
        Kind::Euler => ("euler", euler_numbers(max)),
        Kind::Bernoulli => ("bernoulli", bernoulli_numbers(max)),
    };
    match format {
        Format::Text => table.values().iter().map(Rational::to_string).collect::<Vec<_>>().join(", "),
        Format::Json => json!({ "kind": name, "values": table.values() }).to_string(),
    }
}

pub fn cmd_show(family: Family, n: usize, format: Format) -> String {
    let p = basis_poly(family, n);
    match format {
        Format::Text => p.to_string(),
        Format::Json => serde_json::to_string(&p).expect("polynomial serializes"),
    }
}

pub fn cmd_integrate(text: &str, format: Format) -> Result<String, CliError> {
    let expr = parse_expr(text)?;
    let value = product_integral(&expr.to_spec());
    Ok(match format {
        Format::Text => value.to_string(),
        Format::Json => json!({ "expr": expr.to_string(), "value": value }).to_string(),
    })
}

pub fn cmd_eval(text: &str, at: &str, format: Format) -> Result<String, CliError> {
    let expr = parse_expr(text)?;
    let x: Rational = at.parse()?;
    let value = expr.to_spec().expand().eval(&x);
    Ok(match format {
        Format::Text => value.to_string(),
        Format::Json => json!({ "expr": expr.to_string(), "at": x, "value": value }).to_string(),
    })
}

fn summary_lines(report: &AuditReport) -> String {
    let mut out = String::new();
    for s in &report.summary {
        let status = if s.holds_everywhere { "HOLDS" } else { "FAILS" };
        let oracle = match s.oracle_agrees_everywhere {
            Some(true) => "oracle agrees",
            Some(false) => "oracle disagrees",
            None => "no oracle",
        };
        let class = serde_json::to_value(s.class).expect("class serializes");
        let mut line =
            format!("{:<14} {:<9} {status} ({} checked, {oracle})", s.id, class.as_str().unwrap_or_default(), s.checked);
        if let Some(p) = s.first_failure {
            line.push_str(&format!("; first failure at {p}"));
        }
        out.push_str(&line);
        out.push('\n');
    }
    out
}

pub fn cmd_audit(args: &AuditArgs) -> Result<Outcome, CliError> {
    let ids: Vec<String> = if args.all {
        registry().iter().map(|i| i.id.to_string()).collect()
    } else if args.ids.is_empty() {
        return Err(CliError::NoIds);
    } else {
        args.ids.iter().map(|s| s.trim().to_string()).collect()
    };
    let ranges = GridRanges {
        m_max: args.m_max.unwrap_or(args.max),
        n_max: args.n_max.unwrap_or(args.max),
        p_max: args.p_max.unwrap_or(args.max),
    };
    let report = audit_grid(&ids, ranges)?;
    let json = report.to_json();
    if let Some(path) = &args.report {
        std::fs::write(path, &json).map_err(|source| CliError::Report { path: path.clone(), source })?;
    }
    let stdout = match args.format {
        Format::Text => summary_lines(&report),
        Format::Json => json,
    };
    let code = if report.has_verified_failure() { EXIT_VERIFIED_FAILURE } else { EXIT_OK };
    Ok(Outcome { stdout, code })
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Numbers { kind, max, format } => Ok(Outcome::ok(cmd_numbers(*kind, *max, *format))),
        Command::Show { family, n, format } => Ok(Outcome::ok(cmd_show((*family).into(), *n, *format))),
        Command::Integrate { expr, format } => cmd_integrate(expr, *format).map(Outcome::ok),
        Command::Eval { expr, at, format } => cmd_eval(expr, at, *format).map(Outcome::ok),
        Command::Audit(args) => cmd_audit(args),
    }
}

/// Parse `args`, run the command and return the exit code.
pub fn run<I, T>(args: I, out: &mut impl Write, err: &mut impl Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            let text = outcome.stdout.trim_end_matches('\n');
            let _ = writeln!(out, "{text}");
            outcome.code
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("eulerint").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn integrate_examples() {
        assert_eq!(run_args(&["integrate", "E1*E1"]), (0, "1/12\n".into(), String::new()));
        assert_eq!(run_args(&["integrate", "E1^3"]).1, "0\n");
        assert_eq!(run_args(&["integrate", "B2*E1"]).1, "0\n");
        let (_, json, _) = run_args(&["integrate", "E1 * E1", "--format", "json"]);
        assert_eq!(json.trim(), r#"{"expr":"E1*E1","value":"1/12"}"#);
    }

    #[test]
    fn parse_errors_exit_one() {
        let (code, out, err) = run_args(&["integrate", "E1*F2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("byte 3"), "{err}");
    }

    #[test]
    fn show_and_numbers() {
        assert_eq!(run_args(&["show", "--family", "E", "--n", "3"]).1, "x^3 - 3/2*x^2 + 1/4\n");
        assert_eq!(run_args(&["show", "--family", "B", "--n", "1"]).1, "x - 1/2\n");
        assert_eq!(run_args(&["numbers", "--kind", "euler", "--max", "3"]).1, "1, -1/2, 0, 1/4\n");
        assert_eq!(
            run_args(&["numbers", "--kind", "euler", "--max", "3", "--format", "json"]).1.trim(),
            r#"{"kind":"euler","values":["1","-1/2","0","1/4"]}"#
        );
        assert_eq!(
            run_args(&["show", "--family", "E", "--n", "3", "--format", "json"]).1.trim(),
            r#"{"coeffs":["1/4","0","-3/2","1"]}"#
        );
    }

    #[test]
    fn eval_at_point() {
        assert_eq!(run_args(&["eval", "E3", "--at", "1/2"]).1, "0\n");
        assert_eq!(run_args(&["eval", "E1^2(x+1/2)", "--at", "3"]).1, "9\n");
        assert_eq!(run_args(&["eval", "E3", "--at", "1/0"]).0, EXIT_USAGE);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["audit"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["audit", "--ids", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["numbers", "--kind", "euler", "--max", "-1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).0, EXIT_OK);
    }

    #[test]
    fn audit_exit_codes() {
        let (code, out, _) = run_args(&["audit", "--ids", "thm4_closed", "--m-max", "12", "--n-max", "12"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.starts_with("thm4_closed") && out.contains("HOLDS"), "{out}");
        // audit-class failures never change the exit code
        let (code, out, _) = run_args(&["audit", "--ids", "eq2", "--n-max", "10"]);
        assert_eq!(code, EXIT_OK);
        assert!(out.contains("FAILS"));
    }

    #[test]
    fn unwritable_report() {
        let (code, _, err) = run_args(&["audit", "--ids", "thm1", "--report", "/nonexistent-dir/x/report.json"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("cannot write report"));
    }
}
