//! Command-line front end: closed-form queries, oracle cross-checks,
//! Richardson plans, agreement sweeps and module inspection.
//!
//! Exit codes: 0 on success, 2 on parse/validation errors, 3 when a formula
//! disagrees with the oracle (or a certification fails).

use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::build::build_delta_plain;
use crate::build::build_delta_signed;
use crate::field::{Field, FieldChoice, PrimeField, Rationals};
use crate::formulas::{ext1_dim_signed, ext1_dim_unsigned, hom_dim_signed, hom_dim_unsigned};
use crate::quiver::AlgebraKind;
use crate::rep;
use crate::richardson::{self, SymDimVector};
use crate::show::describe;
use crate::signed::{SignedSubset, UnsignedSubset};
use crate::sweeps::{self, CheckKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MISMATCH: i32 = 3;

/// Environment variable overriding the default coefficient field.
pub const FIELD_ENV: &str = "DELTA_ORBIT_FIELD";

#[derive(Debug, Parser)]
#[command(name = "delta-orbit", version, about = "Hom/Ext calculus for standard-filtered modules, with an exact oracle")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Alg {
    A,
    D,
}

impl Alg {
    fn kind(self) -> AlgebraKind {
        match self {
            Alg::A => AlgebraKind::Plain,
            Alg::D => AlgebraKind::Signed,
        }
    }
}

#[derive(Debug, Args)]
struct CommonArgs {
    /// Coefficient field: "rat" or "fp:P" for an odd prime P. Falls back to
    /// the DELTA_ORBIT_FIELD environment variable, then to "rat".
    #[arg(long)]
    field: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Print elapsed wall time to stderr (stdout stays deterministic).
    #[arg(long)]
    timing: bool,
}

#[derive(Debug, Args)]
struct PairArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "d")]
    alg: Alg,
    /// Left argument, e.g. "8+,7-,6+,5-,4+,1-" (or "8,7,6" for --alg a).
    #[arg(long = "I")]
    i: String,
    /// Right argument.
    #[arg(long = "J")]
    j: String,
    /// Recompute with the linear-algebra oracle and compare.
    #[arg(long)]
    oracle: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct RichardsonArgs {
    /// Symmetric dimension vector, e.g. "1,3,5,4,5,3,1".
    #[arg(long)]
    d: String,
    /// Certify the assembled module with the oracle.
    #[arg(long)]
    verify: bool,
    /// List all sign variants of the construction.
    #[arg(long)]
    variants: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct SweepArgs {
    #[arg(long)]
    n: usize,
    /// Comma-separated checks: hom,ext,complement,tilde,E,cyclic.
    #[arg(long, default_value = "hom,ext,complement,tilde,E,cyclic")]
    checks: String,
    /// Worker threads for the sweep (default: all available).
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Args)]
struct ShowArgs {
    /// Module descriptor, e.g. "P(1+)", "Delta(5+,3-)+Q(1-)", "E(5+,3-)".
    #[arg(long)]
    module: String,
    #[arg(long)]
    n: usize,
    #[arg(long, value_enum, default_value = "d")]
    alg: Alg,
    /// Include the full matrices of the representation.
    #[arg(long)]
    matrices: bool,
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// dim Hom between two standard-filtered modules.
    Hom(PairArgs),
    /// dim Ext^1 between two standard-filtered modules.
    Ext(PairArgs),
    /// Decompose a symmetric dimension vector into a rigid module plan.
    Richardson(RichardsonArgs),
    /// Exhaustively compare formulas against the oracle at rank n.
    Sweep(SweepArgs),
    /// Build a named module and print its invariants.
    Show(ShowArgs),
}

fn resolve_field(common: &CommonArgs) -> Result<FieldChoice, String> {
    let spec = match &common.field {
        Some(s) => s.clone(),
        None => std::env::var(FIELD_ENV).unwrap_or_else(|_| "rat".to_string()),
    };
    spec.parse::<FieldChoice>().map_err(|e| e.to_string())
}

fn oracle_pair_dims<F: Field>(
    alg: AlgebraKind,
    n: usize,
    i: &str,
    j: &str,
    ext: bool,
    field: F,
) -> Result<usize, String> {
    match alg {
        AlgebraKind::Plain => {
            let iu = UnsignedSubset::parse(n, i).map_err(|e| e.to_string())?;
            let ju = UnsignedSubset::parse(n, j).map_err(|e| e.to_string())?;
            let a = build_delta_plain(&iu, field.clone()).map_err(|e| e.to_string())?;
            let b = build_delta_plain(&ju, field).map_err(|e| e.to_string())?;
            Ok(if ext {
                rep::ext1_dim(&a.rep, &b.rep)
            } else {
                rep::hom_dim(&a.rep, &b.rep)
            })
        }
        AlgebraKind::Signed => {
            let is = SignedSubset::parse(n, i).map_err(|e| e.to_string())?;
            let js = SignedSubset::parse(n, j).map_err(|e| e.to_string())?;
            let a = build_delta_signed(&is, field.clone()).map_err(|e| e.to_string())?;
            let b = build_delta_signed(&js, field).map_err(|e| e.to_string())?;
            Ok(if ext {
                rep::ext1_dim(&a.rep, &b.rep)
            } else {
                rep::hom_dim(&a.rep, &b.rep)
            })
        }
    }
}

fn cmd_pair(args: &PairArgs, ext: bool) -> Result<i32, String> {
    let field = resolve_field(&args.common)?;
    let alg = args.alg.kind();
    let op = if ext { "ext1" } else { "hom" };
    let formula = match alg {
        AlgebraKind::Plain => {
            let i = UnsignedSubset::parse(args.n, &args.i).map_err(|e| e.to_string())?;
            let j = UnsignedSubset::parse(args.n, &args.j).map_err(|e| e.to_string())?;
            if ext {
                ext1_dim_unsigned(&i, &j)
            } else {
                hom_dim_unsigned(&i, &j)
            }
        }
        AlgebraKind::Signed => {
            let i = SignedSubset::parse(args.n, &args.i).map_err(|e| e.to_string())?;
            let j = SignedSubset::parse(args.n, &args.j).map_err(|e| e.to_string())?;
            if ext {
                ext1_dim_signed(&i, &j).map_err(|e| e.to_string())?
            } else {
                hom_dim_signed(&i, &j)
            }
        }
    };
    let oracle = if args.oracle {
        Some(match field {
            FieldChoice::Rationals => {
                oracle_pair_dims(alg, args.n, &args.i, &args.j, ext, Rationals)?
            }
            FieldChoice::Prime(p) => {
                let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                oracle_pair_dims(alg, args.n, &args.i, &args.j, ext, f)?
            }
        })
    } else {
        None
    };
    let matches = oracle.map(|o| o == formula);
    match args.common.format {
        Format::Json => {
            let value = json!({
                "op": op,
                "algebra": alg.letter(),
                "n": args.n,
                "field": field.to_string(),
                "I": args.i,
                "J": args.j,
                "formula": formula,
                "oracle": oracle,
                "match": matches,
            });
            println!("{}", value);
        }
        Format::Csv => {
            println!("op,algebra,n,I,J,formula,oracle,match");
            println!(
                "{},{},{},\"{}\",\"{}\",{},{},{}",
                op,
                alg.letter(),
                args.n,
                args.i,
                args.j,
                formula,
                oracle.map(|o| o.to_string()).unwrap_or_default(),
                matches.map(|m| m.to_string()).unwrap_or_default(),
            );
        }
        Format::Text => {
            let mut line = format!(
                "{} algebra={} n={} I={} J={} formula={}",
                op,
                alg.letter(),
                args.n,
                args.i,
                args.j,
                formula
            );
            if let Some(o) = oracle {
                line.push_str(&format!(" oracle={} match={}", o, o == formula));
            }
            println!("{}", line);
        }
    }
    if matches == Some(false) {
        return Ok(EXIT_MISMATCH);
    }
    Ok(EXIT_OK)
}

fn parse_dim_vector(s: &str) -> Result<SymDimVector, String> {
    let entries: Result<Vec<usize>, _> =
        s.split(',').map(|t| t.trim().parse::<usize>()).collect();
    let entries = entries.map_err(|e| format!("cannot parse dimension vector: {}", e))?;
    SymDimVector::new(entries).map_err(|e| e.to_string())
}

fn cmd_richardson(args: &RichardsonArgs) -> Result<i32, String> {
    let field = resolve_field(&args.common)?;
    let d = parse_dim_vector(&args.d)?;
    let plan = richardson::decompose(&d).map_err(|e| e.to_string())?;
    let report = if args.verify {
        Some(match field {
            FieldChoice::Rationals => {
                richardson::certify(&plan, Rationals).map_err(|e| e.to_string())?
            }
            FieldChoice::Prime(p) => {
                let f = PrimeField::new(p).map_err(|e| e.to_string())?;
                richardson::certify(&plan, f).map_err(|e| e.to_string())?
            }
        })
    } else {
        None
    };
    match args.common.format {
        Format::Json => {
            let mut value = plan.to_json();
            if let Some(r) = &report {
                value["certificate"] = json!({
                    "total_dim": r.total_dim,
                    "ext_self": r.ext_self,
                    "rigid": r.rigid,
                    "restricted_support": r.restricted_support,
                    "support_matches": r.support_matches,
                    "ok": r.ok(),
                });
            }
            if args.variants {
                value["variant_list"] = json!(plan
                    .variants()
                    .iter()
                    .map(|v| v
                        .stages
                        .iter()
                        .map(|s| json!({
                            "k": s.k,
                            "kind": s.kind.as_str(),
                            "flipped": s.flipped,
                            "I": s.i_set.to_string(),
                            "J": s.j_set.to_string(),
                        }))
                        .collect::<Vec<_>>())
                    .collect::<Vec<_>>());
            }
            println!("{}", value);
        }
        Format::Csv => {
            println!("k,kind,f,g,e,I,J");
            for s in &plan.stages {
                let fmt = |v: &[usize]| {
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
                };
                println!(
                    "{},{},\"{}\",\"{}\",\"{}\",\"{}\",\"{}\"",
                    s.k,
                    s.kind.as_str(),
                    fmt(&s.f),
                    fmt(&s.g),
                    fmt(&s.e),
                    s.i_set,
                    s.j_set
                );
            }
        }
        Format::Text => {
            println!("d = ({})  N = {}", args.d, plan.total);
            if plan.parity_warning {
                eprintln!("warning: N is odd while n is even; the construction is degenerate");
            }
            for s in &plan.stages {
                let fmt = |v: &[usize]| {
                    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
                };
                println!(
                    "stage {}: kind={} f=({}) g=({}) e=({}) I={{{}}} J={{{}}}",
                    s.k,
                    s.kind.as_str(),
                    fmt(&s.f),
                    fmt(&s.g),
                    fmt(&s.e),
                    s.i_set,
                    s.j_set
                );
            }
            println!("variants = {}", plan.variant_count());
            if args.variants {
                for (vi, v) in plan.variants().iter().enumerate() {
                    let desc: Vec<String> = v
                        .stages
                        .iter()
                        .map(|s| {
                            format!(
                                "k{}:{}{}",
                                s.k,
                                s.kind.as_str(),
                                if s.flipped { "(flipped)" } else { "" }
                            )
                        })
                        .collect();
                    println!("variant {}: {}", vi, desc.join(" "));
                }
            }
            if let Some(r) = &report {
                println!(
                    "certificate: total_dim={} ext_self={} support_matches={} ok={}",
                    r.total_dim,
                    r.ext_self,
                    r.support_matches,
                    r.ok()
                );
            }
        }
    }
    if let Some(r) = &report {
        if !r.ok() {
            return Ok(EXIT_MISMATCH);
        }
    }
    Ok(EXIT_OK)
}

fn cmd_sweep(args: &SweepArgs) -> Result<i32, String> {
    let field = resolve_field(&args.common)?;
    let checks: Result<Vec<CheckKind>, _> = args
        .checks
        .split(',')
        .map(|t| t.trim().parse::<CheckKind>())
        .collect();
    let checks = checks.map_err(|e| e.to_string())?;
    let outcomes =
        sweeps::run_checks(args.n, &checks, field, args.jobs).map_err(|e| e.to_string())?;
    let clean = outcomes.iter().all(|o| o.clean());
    match args.common.format {
        Format::Json => {
            let value = json!({
                "n": args.n,
                "field": field.to_string(),
                "outcomes": outcomes.iter().map(|o| json!({
                    "check": o.check,
                    "cases": o.cases,
                    "mismatches": o.mismatches,
                })).collect::<Vec<_>>(),
                "ok": clean,
            });
            println!("{}", value);
        }
        Format::Csv => {
            println!("check,cases,mismatches");
            for o in &outcomes {
                println!("{},{},{}", o.check, o.cases, o.mismatches.len());
            }
        }
        Format::Text => {
            for o in &outcomes {
                println!(
                    "check={} cases={} mismatches={}",
                    o.check,
                    o.cases,
                    o.mismatches.len()
                );
                for m in o.mismatches.iter().take(5) {
                    println!("  mismatch: {}", m);
                }
            }
            println!("sweep: {}", if clean { "OK" } else { "MISMATCH" });
        }
    }
    Ok(if clean { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_show(args: &ShowArgs) -> Result<i32, String> {
    let field = resolve_field(&args.common)?;
    let value = describe(
        args.alg.kind(),
        args.n,
        &args.module,
        field,
        args.matrices,
    )
    .map_err(|e| e.to_string())?;
    match args.common.format {
        Format::Json => println!("{}", value),
        Format::Csv | Format::Text => {
            println!("module = {}", args.module);
            println!(
                "algebra={} n={} field={} total_dim={}",
                value["algebra"].as_str().unwrap_or(""),
                value["n"],
                value["field"].as_str().unwrap_or(""),
                value["total_dim"]
            );
            println!(
                "delta_support = {}",
                value["delta_support"].as_str().unwrap_or("(none)")
            );
            println!(
                "nabla_support = {}",
                value["nabla_support"].as_str().unwrap_or("(none)")
            );
            println!("dims = {}", value["dims"]);
            println!("socle = {}  top = {}", value["socle"], value["top"]);
            if let Some(cls) = value["class"].as_str() {
                println!(
                    "class = {} (r = {})  tilde_I = {}  tilde_J = {}",
                    cls,
                    value["r"],
                    value["tilde_I"].as_str().unwrap_or(""),
                    value["tilde_J"].as_str().unwrap_or("")
                );
            }
            if args.matrices {
                println!("matrices = {}", value["matrices"]);
            }
        }
    }
    Ok(EXIT_OK)
}

/// Runs the CLI on explicit arguments and returns the process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    let start = Instant::now();
    let (result, timing) = match &cli.cmd {
        Cmd::Hom(a) => (cmd_pair(a, false), a.common.timing),
        Cmd::Ext(a) => (cmd_pair(a, true), a.common.timing),
        Cmd::Richardson(a) => (cmd_richardson(a), a.common.timing),
        Cmd::Sweep(a) => (cmd_sweep(a), a.common.timing),
        Cmd::Show(a) => (cmd_show(a), a.common.timing),
    };
    if timing {
        eprintln!("elapsed: {} ms", start.elapsed().as_millis());
    }
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {}", msg);
            EXIT_USAGE
        }
    }
}

/// Entry point used by the binary.
pub fn run_from_env() -> i32 {
    run(std::env::args_os())
}
