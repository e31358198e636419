use std::path::PathBuf;

use biharm::construct::{
    build_phi, eigen_constants, eigenfamily_ek, mu_rational, proper_indices, tilde_c, CoeffTable,
};
use biharm::forms::{QuadrupleData, QuadrupleFamily};
use biharm::report::VerificationReport;
use biharm::verify::{tol, verify_biharmonic, verify_eigenfamily, verify_harmonic, verify_quadruple};
use clap::{Args, ValueEnum};

use crate::config::{config, read_file, CliResult, SamplingArgs};
use crate::emit_report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Expect {
    /// Harmonic if the table solves `T c = 0` exactly, otherwise biharmonic.
    Auto,
    Harmonic,
    Biharmonic,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Coefficient table written by `construct`.
    #[arg(long)]
    pub coeffs: PathBuf,
    /// Quadruple written by `construct`.
    #[arg(long)]
    pub quadruple: PathBuf,
    /// Optional group check: fail unless the quadruple lives on this family.
    #[arg(long)]
    pub group: Option<String>,
    /// Optional group check on n.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Expect::Auto)]
    pub expect: Expect,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    /// Report file; written even when the verdict is a failure.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Print the full report JSON instead of text.
    #[arg(long)]
    pub json: bool,
}

fn load(args: &VerifyArgs) -> CliResult<(CoeffTable, QuadrupleFamily)> {
    let table = CoeffTable::from_json(&read_file(&args.coeffs)?)?;
    let data = QuadrupleData::from_json(&read_file(&args.quadruple)?)?;
    if let Some(g) = &args.group {
        let kind = biharm::groups::GroupKind::from_tag(g)?;
        if kind != data.group {
            return Err(config(format!("quadruple is on group {}, not {g}", data.group.tag())));
        }
    }
    if let Some(n) = args.n {
        if n != data.n {
            return Err(config(format!("quadruple has n = {}, not {n}", data.n)));
        }
    }
    Ok((table, QuadrupleFamily::from_data(&data)?))
}

pub fn run(args: &VerifyArgs) -> CliResult<VerificationReport> {
    let (table, fam) = load(args)?;
    let spec = fam.spec;
    if spec.kind == biharm::groups::GroupKind::QuaternionicUnitary && spec.n == 1 {
        return Err(config("Sp(1) has no proper biharmonic quotients; use n ≥ 2"));
    }
    let idx = proper_indices(&fam);
    let m = table.arity();
    if m > idx.len() {
        return Err(config(format!("table has {m} variables but the quadruple provides {} proper quotients", idx.len())));
    }
    let pairs: Vec<_> = idx[..m].iter().map(|&i| (fam.quotient(i), fam.tau_closed_form(i))).collect();
    let phi = build_phi(&table, &pairs)?;
    let campaign = args.sampling.campaign(&spec)?;
    let expect = match args.expect {
        Expect::Auto if tilde_c(&table, &mu_rational(&spec)).is_zero() => Expect::Harmonic,
        Expect::Auto => Expect::Biharmonic,
        e => e,
    };

    let mut report = campaign.report(format!("degrees {:?} on {spec}", table.degrees()));
    report.extend(verify_quadruple(&fam, &campaign, tol::RELATION)?);
    let (lambda, mu) = eigen_constants(spec.mu, 1);
    report.extend(verify_eigenfamily("E_1", &eigenfamily_ek(&fam, 1)?, lambda, mu, &campaign, tol::RELATION)?);
    let name = table.to_string();
    report.extend(match expect {
        Expect::Harmonic => verify_harmonic(&name, &phi, &campaign, args.sampling.tol_or(tol::HARMONIC)?)?,
        _ => verify_biharmonic(&name, &phi, &campaign, args.sampling.tol_or(tol::BIHARMONIC)?)?,
    });
    emit_report(&report, args.out.as_deref(), args.json)?;
    Ok(report)
}
