//! Run configuration shared by the subcommands.

use std::fs;
use std::path::Path;

use biharm::forms::{make_quadruple, QuadrupleFamily, QuadrupleOptions, SpChoice};
use biharm::groups::{GroupKind, GroupSpec};
use biharm::verify::{sample_quadruple_vectors, Campaign};
use biharm::Complex64;
use clap::Args;
use serde::Deserialize;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, unreadable or malformed input, violated hypotheses. Exit 2.
    #[error("{0}")]
    Config(String),
    /// A verification or fixture comparison did not pass. Exit 1.
    #[error("{0}")]
    Failed(String),
}

impl From<biharm::Error> for CliError {
    fn from(e: biharm::Error) -> Self {
        CliError::Config(e.to_string())
    }
}

pub type CliResult<T> = Result<T, CliError>;

pub fn config(msg: impl Into<String>) -> CliError {
    CliError::Config(msg.into())
}

#[derive(Debug, Clone, Args)]
pub struct GroupArgs {
    /// Group family: su, so or sp.
    #[arg(long, default_value = "su")]
    pub group: String,
    /// Matrix size n.
    #[arg(long, default_value_t = 3)]
    pub n: usize,
    /// Sp(n) block choice: 9, 10 or 11 (default 10).
    #[arg(long)]
    pub choice: Option<u8>,
}

impl GroupArgs {
    pub fn spec(&self) -> CliResult<GroupSpec> {
        Ok(GroupSpec::new(GroupKind::from_tag(&self.group)?, self.n)?)
    }

    pub fn sp_choice(&self, spec: &GroupSpec) -> CliResult<Option<SpChoice>> {
        match (spec.kind, self.choice) {
            (GroupKind::QuaternionicUnitary, None) => Ok(Some(SpChoice::Ten)),
            (GroupKind::QuaternionicUnitary, Some(c)) => Ok(Some(SpChoice::try_from(c)?)),
            (_, None) => Ok(None),
            (_, Some(_)) => Err(config("--choice only applies to --group sp")),
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct SamplingArgs {
    /// Number of sampled group points.
    #[arg(long, default_value_t = 20)]
    pub points: usize,
    /// Seed for vectors and sample points.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Residual tolerance (defaults depend on the check).
    #[arg(long)]
    pub tol: Option<f64>,
}

impl SamplingArgs {
    pub fn campaign(&self, spec: &GroupSpec) -> CliResult<Campaign> {
        if self.points == 0 {
            return Err(config("--points must be positive"));
        }
        Ok(Campaign::new(spec, self.seed, self.points))
    }

    pub fn tol_or(&self, default: f64) -> CliResult<f64> {
        match self.tol {
            Some(t) if !(t.is_finite() && t > 0.0) => Err(config(format!("--tol must be positive, got {t}"))),
            Some(t) => Ok(t),
            None => Ok(default),
        }
    }
}

/// Explicit generating vectors, each a list of `[re, im]` pairs.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct VectorFile {
    p: Vec<Complex64>,
    q: Vec<Complex64>,
    a: Vec<Complex64>,
    b: Vec<Complex64>,
}

pub fn read_file(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| config(format!("cannot read {}: {e}", path.display())))
}

pub fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|e| config(format!("cannot write {}: {e}", path.display())))
}

/// Quadruple family from explicit vectors or seeded Gaussian draws.
pub fn build_family(spec: &GroupSpec, choice: Option<SpChoice>, seed: u64, vectors: Option<&Path>) -> CliResult<QuadrupleFamily> {
    if spec.kind == GroupKind::QuaternionicUnitary && spec.n == 1 {
        return Err(config("Sp(1) has no proper biharmonic quotients; use n ≥ 2"));
    }
    let [p, q, a, b] = match vectors {
        Some(path) => {
            let v: VectorFile = serde_json::from_str(&read_file(path)?)
                .map_err(|e| config(format!("malformed vectors file {}: {e}", path.display())))?;
            [v.p, v.q, v.a, v.b]
        }
        None => sample_quadruple_vectors(spec, seed),
    };
    let options = QuadrupleOptions {
        choice,
        ..Default::default()
    };
    Ok(make_quadruple(spec, &p, &q, &a, &b, &options)?)
}

/// Install the global rayon pool, capped by `FORGE_THREADS` when set.
pub fn init_threads() -> CliResult<()> {
    let Ok(raw) = std::env::var("FORGE_THREADS") else {
        return Ok(());
    };
    let threads: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| config(format!("FORGE_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| config(format!("cannot configure thread pool: {e}")))
}
