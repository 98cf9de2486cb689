//! Command-line front end: catalog verifications, the Steenrod, Dickson and
//! invariant suites, and user case files.  Exit code 0 means every executed
//! check passed, 1 means some check failed (mismatch, containment or method
//! disagreement), 2 means a usage or configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;

use dchow::catalog::{
    build_case, dickson_suite, emit_report, invariants_suite, list_cases, load_case_file,
    steenrod_suite, verify_case, ReportFormat, Suites, VerificationReport,
};
use dchow::error::Error;
use dchow::hilbert::Method;

#[derive(Parser)]
#[command(
    name = "dchow",
    about = "Degree-by-degree verification of kernel/image defects in mod-p Chow rings of Borel-subgroup classifying spaces",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct OutputOpts {
    /// Truncation degree for all degree-wise computations.
    #[arg(long, default_value_t = 24)]
    max_degree: u32,
    /// Hilbert-function engine: groebner, linalg, or both (dual-witnessed).
    #[arg(long, default_value = "both")]
    method: String,
    /// Report format: text or json.
    #[arg(long, default_value = "text")]
    format: String,
    /// Write the report here instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List the runnable case ids.
    ListCases,
    /// Verify catalog cases: containment, the difference series D, claimed
    /// series, factorization and bound checks.
    Verify {
        /// Case id, repeatable (e.g. pu3, so_odd:3:versal, f4_chow).
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Run every runnable catalog case.
        #[arg(long)]
        all: bool,
        /// Scenario for scenario-bearing cases (split, versal, lambda0, ...).
        #[arg(long)]
        scenario: Option<String>,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Run the reduced-power and Milnor-derivation identity suites.
    SteenrodCheck {
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Expand the spin Euler class over an elementary abelian 2-group and
    /// check the Dickson-coefficient identities.
    DicksonCheck {
        /// 2-rank of the group, 1..=4.
        #[arg(long = "h")]
        h: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Check invariance of the named rank-4 classes and the invariant-slice
    /// dimensions against the presentation series.
    InvariantsCheck {
        #[command(flatten)]
        out: OutputOpts,
    },
    /// Verify a case loaded from a JSON case file.
    CaseFile {
        path: PathBuf,
        #[command(flatten)]
        out: OutputOpts,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(all_passed) => {
            if all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::MethodDisagreement { .. } | Error::Containment(_) => ExitCode::from(1),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> dchow::Result<bool> {
    match cli.command {
        Command::ListCases => {
            for id in list_cases() {
                println!("{id}");
            }
            Ok(true)
        }
        Command::Verify {
            cases,
            all,
            scenario,
            out,
        } => {
            let mut ids = cases;
            if all {
                ids.extend(
                    list_cases()
                        .into_iter()
                        .filter(|c| !c.contains('<')),
                );
            }
            if ids.is_empty() {
                return Err(Error::Catalog(
                    "nothing to verify: pass --case <id> (repeatable) or --all".into(),
                ));
            }
            let method = Method::parse(&out.method)?;
            let specs = ids
                .iter()
                .map(|id| build_case(id, scenario.as_deref()))
                .collect::<dchow::Result<Vec<_>>>()?;
            // Cases fan out to a worker pool; report assembly stays ordered.
            let reports = specs
                .par_iter()
                .map(|case| verify_case(case, out.max_degree, method))
                .collect::<dchow::Result<Vec<_>>>()?;
            emit_all(&reports, &out)?;
            Ok(reports.iter().all(|r| r.passed()))
        }
        Command::SteenrodCheck { out } => {
            let suites = Suites {
                steenrod: Some(steenrod_suite()?),
                dickson: Some(
                    (1..=3)
                        .map(dickson_suite)
                        .collect::<dchow::Result<Vec<_>>>()?
                        .into_iter()
                        .flatten()
                        .collect(),
                ),
                invariants: None,
            };
            let report = VerificationReport::for_suites("steenrod-suite", 3, out.max_degree, suites);
            emit_all(std::slice::from_ref(&report), &out)?;
            Ok(report.passed())
        }
        Command::DicksonCheck { h, out } => {
            let suites = Suites {
                steenrod: None,
                dickson: Some(dickson_suite(h)?),
                invariants: None,
            };
            let report = VerificationReport::for_suites(
                &format!("dickson-suite:h={h}"),
                2,
                out.max_degree,
                suites,
            );
            emit_all(std::slice::from_ref(&report), &out)?;
            Ok(report.passed())
        }
        Command::InvariantsCheck { out } => {
            let cap = out.max_degree.min(15);
            let suites = Suites {
                steenrod: None,
                dickson: None,
                invariants: Some(invariants_suite(cap)?),
            };
            let report = VerificationReport::for_suites("invariants-suite", 3, cap, suites);
            emit_all(std::slice::from_ref(&report), &out)?;
            Ok(report.passed())
        }
        Command::CaseFile { path, out } => {
            let case = load_case_file(&path)?;
            let method = Method::parse(&out.method)?;
            let report = verify_case(&case, out.max_degree, method)?;
            emit_all(std::slice::from_ref(&report), &out)?;
            Ok(report.passed())
        }
    }
}

fn emit_all(reports: &[VerificationReport], out: &OutputOpts) -> dchow::Result<()> {
    let format = ReportFormat::parse(&out.format)?;
    let rendered = match format {
        ReportFormat::Json => {
            if reports.len() == 1 {
                let mut s = emit_report(&reports[0], format);
                s.push('\n');
                s
            } else {
                let mut s = serde_json::to_string_pretty(reports)
                    .expect("report serialization cannot fail");
                s.push('\n');
                s
            }
        }
        ReportFormat::Text => {
            let mut s = String::new();
            for (i, r) in reports.iter().enumerate() {
                if i > 0 {
                    s.push_str("\n");
                }
                s.push_str(&emit_report(r, format));
            }
            s
        }
    };
    match &out.output {
        Some(path) => std::fs::write(path, rendered)?,
        None => print!("{rendered}"),
    }
    Ok(())
}
