//! `forge`: construct biharmonic functions on U(n), SO(n) and Sp(n), and
//! verify them numerically.
//!
//! Exit codes: 0 success, 1 verification failure, 2 configuration error.

use std::path::Path;
use std::process::ExitCode;

use biharm::report::VerificationReport;
use clap::{Parser, Subcommand};

mod config;
mod construct;
mod morphism;
mod reproduce;
mod verify;

use config::{write_file, CliError, CliResult};

#[derive(Debug, Parser)]
#[command(name = "forge", version, about = "Biharmonic functions on classical compact groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Build a proper biharmonic coefficient table and its generating quadruple.
    Construct(construct::ConstructArgs),
    /// Check a constructed function at sampled points.
    Verify(verify::VerifyArgs),
    /// Recompute the exact fixtures and compare.
    Reproduce(reproduce::ReproduceArgs),
    /// Check harmonic morphisms from orthogonal families or eigenfamilies.
    Morphism(morphism::MorphismArgs),
}

pub(crate) fn emit_report(report: &VerificationReport, out: Option<&Path>, json: bool) -> CliResult<()> {
    let text = report.to_json();
    if let Some(path) = out {
        write_file(path, &(text.clone() + "\n"))?;
    }
    if json {
        println!("{text}");
    } else {
        println!("{} ({}, {} points, seed {})", report.subject, report.group, report.points, report.seed);
        for c in &report.checks {
            let verdict = if c.pass { "ok  " } else { "FAIL" };
            println!("  {verdict} {}: {:.3e} (tolerance {:.1e})", c.name, c.max_residual, c.tolerance);
        }
        println!("verdict: {}", if report.verdict { "pass" } else { "fail" });
    }
    Ok(())
}

fn verdict(report: VerificationReport) -> CliResult<()> {
    if report.verdict {
        Ok(())
    } else {
        Err(CliError::Failed(format!("verification failed: {}", report.subject)))
    }
}

fn run(cli: Cli) -> CliResult<()> {
    config::init_threads()?;
    match cli.command {
        Command::Construct(a) => construct::run(&a),
        Command::Verify(a) => verdict(verify::run(&a)?),
        Command::Reproduce(a) => reproduce::run(&a),
        Command::Morphism(a) => verdict(morphism::run(&a)?),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e @ CliError::Failed(_)) => {
            eprintln!("forge: {e}");
            ExitCode::from(1)
        }
        Err(e @ CliError::Config(_)) => {
            eprintln!("forge: {e}");
            ExitCode::from(2)
        }
    }
}
