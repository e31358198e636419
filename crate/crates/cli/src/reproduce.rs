use std::path::PathBuf;

use biharm::algebra::Rational;
use biharm::construct::{
    biharmonic_coeffs, harmonic_coeffs, mat_mul, multi_biharmonic_family, tension_restriction_matrix, CoeffTable,
};
use clap::Args;
use serde::{Deserialize, Serialize};

use crate::config::{config, read_file, CliError, CliResult};

const EMBEDDED: &str = include_str!("../fixtures/fixtures.json");

#[derive(Debug, Args)]
pub struct ReproduceArgs {
    /// Alternative fixture store (defaults to the embedded one).
    #[arg(long)]
    pub fixtures: Option<PathBuf>,
    /// Print the pass/fail matrix as JSON.
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Store {
    mu: String,
    tables: Vec<TableFixture>,
    matrices: Vec<MatrixFixture>,
    relations: Vec<RelationFixture>,
}

#[derive(Debug, Deserialize, Clone, Copy, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
enum TableKind {
    Harmonic,
    Biharmonic,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TableFixture {
    name: String,
    kind: TableKind,
    coeffs: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixFixture {
    name: String,
    degrees: Vec<u32>,
    power: u32,
    rows: Vec<Vec<String>>,
}

/// `Σ weights_i c_i = 0` for every member of the biharmonic family.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelationFixture {
    name: String,
    degrees: Vec<u32>,
    weights: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct Row {
    pub fixture: String,
    pub pass: bool,
    pub detail: String,
}

fn parse(s: &str, fixture: &str) -> CliResult<Rational> {
    s.parse().map_err(|_| config(format!("fixture {fixture}: {s:?} is not an exact rational")))
}

fn parse_all(v: &[String], fixture: &str) -> CliResult<Vec<Rational>> {
    v.iter().map(|s| parse(s, fixture)).collect()
}

fn table_row(f: &TableFixture, mu: &Rational) -> CliResult<Row> {
    let want = CoeffTable::from_vec(parse_all(&f.coeffs, &f.name)?)?;
    let d = want.degrees()[0];
    if d == 0 {
        return Err(config(format!("fixture {}: degree must be positive", f.name)));
    }
    let got = match f.kind {
        TableKind::Harmonic => harmonic_coeffs(d, mu)?,
        TableKind::Biharmonic => biharmonic_coeffs(d, mu, Rational::from_integer(1.into()), Rational::from_integer(0.into()))?,
    };
    let pass = got.proportional(&want);
    Ok(Row {
        fixture: f.name.clone(),
        pass,
        detail: format!("computed {got}"),
    })
}

fn matrix_row(f: &MatrixFixture, mu: &Rational) -> CliResult<Row> {
    let want = f.rows.iter().map(|r| parse_all(r, &f.name)).collect::<CliResult<Vec<_>>>()?;
    if f.power == 0 {
        return Err(config(format!("fixture {}: power must be positive", f.name)));
    }
    let t = tension_restriction_matrix(&f.degrees, mu)?;
    let mut got = t.clone();
    for _ in 1..f.power {
        got = mat_mul(&got, &t);
    }
    let show = |m: &[Vec<Rational>]| {
        m.iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("; ")
    };
    Ok(Row {
        fixture: f.name.clone(),
        pass: got == want,
        detail: format!("computed [{}]", show(&got)),
    })
}

fn relation_row(f: &RelationFixture, mu: &Rational) -> CliResult<Row> {
    let w = parse_all(&f.weights, &f.name)?;
    let fam = multi_biharmonic_family(&f.degrees, mu)?;
    let mut pass = true;
    for t in &fam.basis_tables {
        let c = t.values();
        if c.len() != w.len() {
            return Err(config(format!("fixture {}: {} weights for {} coefficients", f.name, w.len(), c.len())));
        }
        let s: Rational = c.iter().zip(&w).map(|(x, y)| x * y).sum();
        pass &= s == Rational::from_integer(0.into());
    }
    Ok(Row {
        fixture: f.name.clone(),
        pass,
        detail: format!("{} family members checked", fam.dimension()),
    })
}

pub fn rows(store_text: &str) -> CliResult<Vec<Row>> {
    let store: Store = serde_json::from_str(store_text).map_err(|e| config(format!("malformed fixture store: {e}")))?;
    let mu = parse(&store.mu, "mu")?;
    let mut out = Vec::new();
    for f in &store.tables {
        out.push(table_row(f, &mu)?);
    }
    for f in &store.matrices {
        out.push(matrix_row(f, &mu)?);
    }
    for f in &store.relations {
        out.push(relation_row(f, &mu)?);
    }
    Ok(out)
}

pub fn run(args: &ReproduceArgs) -> CliResult<()> {
    let text = match &args.fixtures {
        Some(path) => read_file(path)?,
        None => EMBEDDED.to_string(),
    };
    let rows = rows(&text)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&rows).expect("rows serialise"));
    } else {
        let width = rows.iter().map(|r| r.fixture.len()).max().unwrap_or(0);
        for r in &rows {
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            println!("{:<width$}  {verdict}  {}", r.fixture, r.detail);
        }
    }
    let failed: Vec<&str> = rows.iter().filter(|r| !r.pass).map(|r| r.fixture.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("fixture mismatch: {}", failed.join(", "))))
    }
}
