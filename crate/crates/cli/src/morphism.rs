use std::path::PathBuf;

use biharm::construct::{eigen_constants, eigenfamily_ek, morphism_from_eigenfamily, orthogonal_family, Polynomial};
use biharm::report::VerificationReport;
use biharm::verify::{sample_quadruple_vectors, tol, verify_eigenfamily, verify_morphism};
use clap::{Args, ValueEnum};

use crate::config::{build_family, config, CliResult, GroupArgs, SamplingArgs};
use crate::emit_report;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// `Q_α/Q_β` on U(n).
    Orthogonal,
    /// `P(φ)/Q(φ)` over the eigenfamily `{τ(f_j)^k}` of a quadruple.
    Eigen,
}

#[derive(Debug, Args)]
pub struct MorphismArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    #[arg(long, value_enum, default_value_t = Family::Orthogonal)]
    pub family: Family,
    /// Power k of the eigenfamily.
    #[arg(long, default_value_t = 1)]
    pub k: u32,
    /// Numerator polynomial in x0, x1, … (eigen family only).
    #[arg(long, default_value = "x0")]
    pub num: String,
    /// Denominator polynomial of the same degree.
    #[arg(long, default_value = "x1")]
    pub den: String,
    #[command(flatten)]
    pub sampling: SamplingArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub json: bool,
}

pub fn run(args: &MorphismArgs) -> CliResult<VerificationReport> {
    let spec = args.group.spec()?;
    let campaign = args.sampling.campaign(&spec)?;
    let t = args.sampling.tol_or(tol::MORPHISM)?;
    let report = match args.family {
        Family::Orthogonal => {
            if args.group.choice.is_some() {
                return Err(config("--choice does not apply to orthogonal families"));
            }
            let q = &sample_quadruple_vectors(&spec, args.sampling.seed)[1];
            let fam = orthogonal_family(q, &spec, 0)?;
            let mut report = campaign.report(format!("orthogonal family on {spec}"));
            report.extend(verify_eigenfamily("orthogonal", &fam, 0.0, 0.0, &campaign, t)?);
            for (i, f) in fam.iter().enumerate() {
                report.extend(verify_morphism(&format!("Q{}/Q1", i + 2), f, &campaign, t)?);
            }
            report
        }
        Family::Eigen => {
            let choice = args.group.sp_choice(&spec)?;
            let fam = build_family(&spec, choice, args.sampling.seed, None)?;
            let ek = eigenfamily_ek(&fam, args.k)?;
            let vars = ek.len();
            let num = Polynomial::parse(vars, &args.num)?;
            let den = Polynomial::parse(vars, &args.den)?;
            let f = morphism_from_eigenfamily(&ek, &num, &den)?;
            let (lambda, mu) = eigen_constants(spec.mu, args.k);
            let mut report = campaign.report(format!("({}) / ({}) over E_{} on {spec}", args.num, args.den, args.k));
            report.extend(verify_eigenfamily(&format!("E_{}", args.k), &ek, lambda, mu, &campaign, t)?);
            report.extend(verify_morphism("P/Q", &f, &campaign, t)?);
            report
        }
    };
    emit_report(&report, args.out.as_deref(), args.json)?;
    Ok(report)
}
