use clap::{Args, Parser, Subcommand};
use lssa_core::json::{cocycle_from_json, table_from_json};
use lssa_core::report::Report;
use lssa_core::scalar::parse_ratfun;
use lssa_core::sl21::Family;
use lssa_core::suites::{self, DEFAULT_SEED};
use lssa_core::{slmm, Error, RatFun, Rational, Result};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "lssa", version, about = "Exact checks of left-symmetric superalgebra structures on sl(m|n)")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Rebuild the three sl(2|1) families and compare with the stored tables.
    VerifyTables {
        #[arg(long, conflicts_with = "at")]
        symbolic: bool,
        /// Specialize first, e.g. `k=2,k1=1,k2=3`.
        #[arg(long)]
        at: Option<String>,
    },
    /// Build one family member, symbolic in any parameter left unbound.
    Build {
        /// A, B or C.
        family: Family,
        /// Bindings such as `k=2` or `k1=1,k2=2`.
        params: Vec<String>,
        #[command(flatten)]
        out: OutArg,
    },
    /// Check a product table stored as JSON.
    CheckProduct { path: PathBuf },
    /// Check a cocycle stored as JSON and the product it induces.
    CheckCocycle { path: PathBuf },
    /// Construct and verify the structure on sl(m+1|m).
    Thm4 {
        #[arg(long)]
        m: usize,
        #[arg(long, default_value_t = slmm::DEFAULT_MAX_M)]
        max_m: usize,
        /// Write the product table here.
        #[arg(long)]
        emit: Option<PathBuf>,
    },
    /// Certify that the candidate modules for sl(m|1) admit no bijective evaluation cocycle.
    Nonexist {
        #[arg(long)]
        m: usize,
    },
    /// Dimensions and singular vectors of sl(2|1) Kac modules.
    Kacdim {
        #[arg(long, default_value_t = 4)]
        max_i: u32,
    },
    /// Behaviour of the families and Kac modules under the -st twist.
    Negst,
    /// Seeded random checks of the algebraic identities.
    Props {
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Args)]
struct OutArg {
    /// Write the product table here.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn split_bindings(args: &[String]) -> Result<Vec<(String, String)>> {
    let mut out = Vec::new();
    for part in args.iter().flat_map(|a| a.split(',')).filter(|s| !s.trim().is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| Error::Parse(format!("expected name=value, got {part:?}")))?;
        out.push((name.trim().to_string(), value.trim().to_string()));
    }
    Ok(out)
}

fn rational_bindings(text: &str) -> Result<Vec<(String, Rational)>> {
    split_bindings(&[text.to_string()])?
        .into_iter()
        .map(|(n, v)| {
            let r = parse_ratfun(&v)?.as_constant().ok_or_else(|| Error::Parse(format!("{n}: {v:?} is not a number")))?;
            Ok((n, r))
        })
        .collect()
}

fn family_params(fam: Family, args: &[String]) -> Result<Vec<RatFun>> {
    let names = fam.parameter_names();
    let bound = split_bindings(args)?;
    if let Some((n, _)) = bound.iter().find(|(n, _)| !names.contains(&n.as_str())) {
        return Err(Error::Invalid(format!("family {fam} has no parameter {n:?}; expected {}", names.join(", "))));
    }
    names
        .iter()
        .map(|n| match bound.iter().rev().find(|(b, _)| b == n) {
            Some((_, v)) => parse_ratfun(v),
            None => Ok(RatFun::var(n)),
        })
        .collect()
}

fn write_json(path: &PathBuf, v: &Value) -> Result<()> {
    let text = serde_json::to_string_pretty(v)?;
    std::fs::write(path, text + "\n").map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

fn read(path: &PathBuf) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{}: {e}", path.display())))
}

/// A report plus an optional table that goes to a file or, in JSON mode, to stdout.
fn run(cli: &Cli) -> Result<(Report, Option<Value>)> {
    Ok(match &cli.cmd {
        Cmd::VerifyTables { at: Some(point), .. } => (suites::verify_tables_at(&rational_bindings(point)?)?, None),
        Cmd::VerifyTables { .. } => (suites::verify_tables_symbolic()?, None),
        Cmd::Build { family, params, out } => {
            let (r, t) = suites::build(*family, &family_params(*family, params)?)?;
            if let Some(p) = &out.out {
                write_json(p, &t)?;
            }
            (r, Some(t))
        }
        Cmd::CheckProduct { path } => (suites::check_product(&table_from_json(&read(path)?)?), None),
        Cmd::CheckCocycle { path } => (suites::check_cocycle(&cocycle_from_json(&read(path)?)?), None),
        Cmd::Thm4 { m, max_m, emit } => {
            let (r, t) = suites::sl_mm(*m, *max_m)?;
            if let Some(p) = emit {
                write_json(p, &t)?;
            }
            (r, Some(t))
        }
        Cmd::Nonexist { m } => (suites::nonexistence(*m)?, None),
        Cmd::Kacdim { max_i } => (suites::kac_dimensions(*max_i)?, None),
        Cmd::Negst => (suites::negst()?, None),
        Cmd::Props { cases } => (suites::properties(cli.seed, *cases), None),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, table)) => {
            if cli.json {
                let mut v = json!({"passed": report.passed(), "report": report.to_json()});
                if let Some(t) = table {
                    v["table"] = t;
                }
                println!("{}", serde_json::to_string_pretty(&v).expect("json"));
            } else {
                print!("{}", report.to_text());
            }
            if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            if cli.json {
                println!("{}", json!({"passed": false, "error": e.to_string()}));
            } else {
                eprintln!("error: {e}");
            }
            ExitCode::from(2)
        }
    }
}
