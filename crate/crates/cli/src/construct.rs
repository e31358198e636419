use std::fs;
use std::path::PathBuf;

use biharm::algebra::rat;
use biharm::construct::{biharmonic_coeffs, mu_rational, multi_biharmonic_family, proper_indices, CoeffTable};
use clap::Args;

use crate::config::{build_family, config, write_file, CliResult, GroupArgs};

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub group: GroupArgs,
    /// Degrees d1,d2,… of the proper biharmonic member.
    #[arg(long, value_delimiter = ',', required = true)]
    pub degrees: Vec<u32>,
    /// Seed for the generating vectors.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON file with explicit vectors {"p", "q", "a", "b"} as [re, im] lists.
    #[arg(long)]
    pub vectors: Option<PathBuf>,
    /// Output directory for coeffs.json and quadruple.json.
    #[arg(long, default_value = ".")]
    pub out: PathBuf,
    /// Print a JSON summary instead of text.
    #[arg(long)]
    pub json: bool,
}

pub fn proper_table(degrees: &[u32], mu: &biharm::algebra::Rational) -> CliResult<CoeffTable> {
    if degrees.is_empty() || degrees.contains(&0) {
        return Err(config(format!("degrees must be positive, got {degrees:?}")));
    }
    Ok(match degrees {
        [d] => biharmonic_coeffs(*d, mu, rat(1, 1), rat(0, 1))?,
        _ => multi_biharmonic_family(degrees, mu)?
            .proper_member()
            .cloned()
            .ok_or_else(|| config("no proper member"))?,
    })
}

pub fn run(args: &ConstructArgs) -> CliResult<()> {
    let spec = args.group.spec()?;
    let choice = args.group.sp_choice(&spec)?;
    let fam = build_family(&spec, choice, args.seed, args.vectors.as_deref())?;
    let available = proper_indices(&fam).len();
    if args.degrees.len() > available {
        return Err(config(format!(
            "{} degrees need {} proper quotients but {spec} provides {available}",
            args.degrees.len(),
            args.degrees.len()
        )));
    }
    let table = proper_table(&args.degrees, &mu_rational(&spec))?;
    fs::create_dir_all(&args.out).map_err(|e| config(format!("cannot create {}: {e}", args.out.display())))?;
    let coeffs = args.out.join("coeffs.json");
    let quadruple = args.out.join("quadruple.json");
    write_file(&coeffs, &table.to_json())?;
    write_file(&quadruple, &fam.data.to_json())?;
    if args.json {
        let summary = serde_json::json!({
            "group": spec,
            "degrees": args.degrees,
            "coeffs": coeffs,
            "quadruple": quadruple,
        });
        println!("{}", serde_json::to_string_pretty(&summary).expect("summary serialises"));
    } else {
        println!("{spec}, degrees {:?}: {table}", args.degrees);
        println!("wrote {} and {}", coeffs.display(), quadruple.display());
    }
    Ok(())
}
