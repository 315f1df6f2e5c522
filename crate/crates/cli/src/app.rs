use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qweyl_core::expr::render_combination;
use qweyl_core::iqg::{check_intertwine, check_iu_relations_via_phi, check_psi_informational};
use qweyl_core::operators::{check_braid_suite, check_endo_suite, check_omega_commutes};
use qweyl_core::polymod::{check_iu_module, check_module_homomorphism, check_tcal_suite};
use qweyl_core::{
    act, big_omega, big_psi, braid_t, check_weyl_relations, omega_spec, phi, psi_spec, reduce, tau,
    BraidKind, BraidParams, Check, Fault, Report, Sign, Summary, Tables, Variant, VariantKind,
};
use serde::Serialize;
use thiserror::Error;

use crate::parse::{parse_iqg, parse_poly, parse_weyl, ParseError};

pub const TOOL_VERSION: &str = concat!("qweyl ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Algebra(#[from] qweyl_core::Error),
    #[error("{0}")]
    Usage(String),
    #[error("cannot write {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

#[derive(Debug, Parser)]
#[command(
    name = "qweyl",
    version,
    about = "Exact computation and verification in modified q-Weyl algebras"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct AlgebraArgs {
    /// jmath (n = 2r) or imath (n = 2r + 1).
    #[arg(long)]
    pub variant: VariantKind,
    #[arg(long)]
    pub rank: u32,
}

impl AlgebraArgs {
    pub fn variant(&self) -> Result<Variant, CliError> {
        Ok(Variant::new(self.variant, self.rank)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Op {
    #[value(name = "T")]
    T,
    #[value(name = "tau")]
    Tau,
    #[value(name = "omega")]
    Omega,
    #[value(name = "psi")]
    Psi,
    #[value(name = "Omega")]
    BigOmega,
    #[value(name = "Psi")]
    BigPsi,
    #[value(name = "phi")]
    Phi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    WeylRelations,
    EndoWellDefined,
    Braid,
    OmegaCommute,
    PhiRelations,
    Intertwine,
    ModuleHomomorphism,
    Tcal,
    IuModule,
    /// Expected to report failures; not part of `all`.
    PsiInformational,
    All,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::WeylRelations,
        Suite::EndoWellDefined,
        Suite::Braid,
        Suite::OmegaCommute,
        Suite::PhiRelations,
        Suite::Intertwine,
        Suite::ModuleHomomorphism,
        Suite::Tcal,
        Suite::IuModule,
    ];

    pub fn name(self) -> String {
        self.to_possible_value()
            .expect("no skipped variants")
            .get_name()
            .to_owned()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Algebra {
    Weyl,
    Iqg,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    FlipPrimeNextD,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the canonical form of a Weyl expression.
    Normalize {
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Apply an operator to an expression and print the normalized result.
    Apply {
        #[arg(long)]
        op: Op,
        #[arg(long)]
        i: Option<u32>,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        e: Sign,
        #[arg(long, default_value = "prime")]
        kind: BraidKind,
        expr: String,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Act on a polynomial with a Weyl or ıquantum expression.
    Act {
        expr: String,
        poly: String,
        #[arg(long, value_enum, default_value = "weyl")]
        on: Algebra,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        #[arg(long, default_value = "+1", allow_hyphen_values = true)]
        e: Sign,
        /// Exponent bound for polynomial grid checks.
        #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
        degree: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, hide = true)]
        inject_fault: Option<FaultArg>,
        #[command(flatten)]
        algebra: AlgebraArgs,
    },
}

/// Serialized verification result; field order is the key order.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub checks: Vec<Check>,
    pub e: i64,
    pub rank: u32,
    pub suite: String,
    pub summary: Summary,
    #[serde(rename = "toolVersion")]
    pub tool_version: String,
    pub variant: String,
}

impl VerifyReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            match c.status {
                qweyl_core::Status::Fail => {
                    let _ = writeln!(
                        out,
                        "FAIL {}: {}\n  lhs: {}\n  rhs: {}",
                        c.id, c.description, c.lhs, c.rhs
                    );
                }
                qweyl_core::Status::Skipped => {
                    let _ = writeln!(out, "skip {}: {}", c.id, c.description);
                }
                qweyl_core::Status::Pass => {}
            }
        }
        let s = self.summary;
        let _ = writeln!(
            out,
            "{} {} r={} e={}: {} passed, {} failed, {} skipped",
            self.suite,
            self.variant,
            self.rank,
            if self.e > 0 { "+1" } else { "-1" },
            s.passed,
            s.failed,
            s.skipped
        );
        out
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Output of a successful command invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

pub fn run_suite(t: &Tables, suite: Suite, e: Sign, degree: u32) -> Report {
    let v = t.variant();
    let report = match suite {
        Suite::WeylRelations => check_weyl_relations(v),
        Suite::EndoWellDefined => check_endo_suite(t, e),
        Suite::Braid => check_braid_suite(t, e),
        Suite::OmegaCommute => check_omega_commutes(t, e),
        Suite::PhiRelations => check_iu_relations_via_phi(v),
        Suite::Intertwine => check_intertwine(t, e),
        Suite::ModuleHomomorphism => check_module_homomorphism(&v, degree),
        Suite::Tcal => check_tcal_suite(t, e, degree),
        Suite::IuModule => check_iu_module(&v, e, degree),
        Suite::PsiInformational => check_psi_informational(v),
        Suite::All => {
            return Suite::ALL
                .iter()
                .map(|&s| run_suite(t, s, e, degree))
                .collect();
        }
    };
    report.prefixed(&suite.name())
}

pub fn verify(
    v: Variant,
    suite: Suite,
    e: Sign,
    degree: u32,
    fault: Option<Fault>,
) -> VerifyReport {
    let t = match fault {
        Some(f) => Tables::with_fault(v, f),
        None => Tables::new(v),
    };
    let mut report = run_suite(&t, suite, e, degree);
    report.sort();
    VerifyReport {
        summary: report.summary(),
        checks: report.checks().to_vec(),
        e: e.value(),
        rank: v.rank(),
        suite: suite.name(),
        tool_version: TOOL_VERSION.to_owned(),
        variant: v.kind().name().to_owned(),
    }
}

fn braid_params(
    v: &Variant,
    i: Option<u32>,
    e: Sign,
    kind: BraidKind,
) -> Result<BraidParams, CliError> {
    let i = i.ok_or_else(|| CliError::Usage("--i is required for this operator".into()))?;
    Ok(BraidParams::new(v, i, e, kind)?)
}

pub fn run(cmd: Command) -> Result<Outcome, CliError> {
    match cmd {
        Command::Normalize { expr, algebra } => {
            let v = algebra.variant()?;
            let x = reduce(v, &parse_weyl(&expr, &v)?)?;
            Ok(Outcome::ok(format!("{x}\n")))
        }
        Command::Apply {
            op,
            i,
            e,
            kind,
            expr,
            algebra,
        } => {
            let v = algebra.variant()?;
            let text = match op {
                Op::T | Op::Omega | Op::Psi => {
                    let spec = match op {
                        Op::T => braid_t(v, braid_params(&v, i, e, kind)?)?,
                        Op::Omega => omega_spec(v),
                        _ => psi_spec(v),
                    };
                    let x = reduce(v, &parse_weyl(&expr, &v)?)?;
                    spec.apply(&x)?.to_string()
                }
                Op::Tau | Op::BigOmega | Op::BigPsi => {
                    let subst = match op {
                        Op::Tau => tau(v, braid_params(&v, i, e, kind)?)?,
                        Op::BigOmega => big_omega(v),
                        _ => big_psi(v),
                    };
                    let u = parse_iqg(&expr, &v)?;
                    render_combination(&subst.apply(&u)?.expand())
                }
                Op::Phi => phi(v, &parse_iqg(&expr, &v)?)?.to_string(),
            };
            Ok(Outcome::ok(format!("{text}\n")))
        }
        Command::Act {
            expr,
            poly,
            on,
            algebra,
        } => {
            let v = algebra.variant()?;
            let u = match on {
                Algebra::Weyl => reduce(v, &parse_weyl(&expr, &v)?)?,
                Algebra::Iqg => phi(v, &parse_iqg(&expr, &v)?)?,
            };
            let f = parse_poly(&poly, &v)?;
            Ok(Outcome::ok(format!("{}\n", act(&v, &u, &f)?)))
        }
        Command::Verify {
            suite,
            e,
            degree,
            format,
            out,
            inject_fault,
            algebra,
        } => {
            let v = algebra.variant()?;
            let fault = inject_fault.map(|FaultArg::FlipPrimeNextD| Fault::FlipPrimeNextD);
            let report = verify(v, suite, e, degree, fault);
            let body = match format {
                Format::Json => report.to_json(),
                Format::Text => report.to_text(),
            };
            let code = if report.all_passed() { 0 } else { 1 };
            let stdout = match out {
                Some(path) => {
                    std::fs::write(&path, &body).map_err(|source| CliError::Io { path, source })?;
                    report
                        .to_text()
                        .lines()
                        .last()
                        .map(|l| format!("{l}\n"))
                        .unwrap_or_default()
                }
                None => body,
            };
            Ok(Outcome { stdout, code })
        }
    }
}
