//! `solgeom`: command-line front end for the `solfour` library.

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use solfour::classifier::{self, PillowcaseInvariant};
use solfour::extension::catalog::{self, CatalogEntry};
use solfour::extension;
use solfour::verify::{self, VerifyParams};
use solfour::{Error, IntMatrix};

const THREADS_VAR: &str = "SOLFOUR_THREADS";

#[derive(Parser)]
#[command(name = "solgeom", version, about = "Invariants and group computations for Sol^3 x E^1 manifolds")]
struct Cli {
    /// Print a human-readable rendering instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate, normalize, compare and enumerate the matrix invariant.
    #[command(subcommand)]
    Invariant(InvariantCommand),
    /// Computations on a catalogued or described group.
    Group(GroupArgs),
    /// Run a verification sweep.
    Verify(VerifyArgs),
    /// List the catalog identifiers.
    Catalog,
}

#[derive(Subcommand)]
enum InvariantCommand {
    /// Check that a matrix literal `p,q;r,p` is a normalized invariant.
    Validate {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Normalize a matrix, choosing between it and its inverse.
    Normalize {
        #[arg(allow_hyphen_values = true)]
        matrix: String,
    },
    /// Decide whether two matrices give the same invariant.
    Isom {
        #[arg(allow_hyphen_values = true)]
        left: String,
        #[arg(allow_hyphen_values = true)]
        right: String,
    },
    /// List all invariants with entries bounded by `--max`.
    Enumerate {
        #[arg(long, default_value_t = 20)]
        max: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum GroupOp {
    H1,
    Center,
    Torsion,
    W1,
    Presentation,
    Ilattice,
    Describe,
}

#[derive(Args)]
struct GroupArgs {
    #[arg(value_enum)]
    op: GroupOp,
    /// Catalog identifier or path to a JSON group description.
    group: String,
    /// Word-length bound for the torsion search.
    #[arg(long, default_value_t = classifier::TORSION_WORD_BOUND)]
    max_word: usize,
}

#[derive(Args)]
struct VerifyArgs {
    suite: String,
    #[arg(long = "box", default_value_t = 3)]
    box_bound: i64,
    /// Entry bound for conjugator searches.
    #[arg(long, default_value_t = 10)]
    bound: i64,
    #[arg(long, default_value_t = 20)]
    max: u64,
    #[arg(long, default_value_t = 12)]
    a_max: i64,
    #[arg(long, default_value_t = classifier::TORSION_WORD_BOUND)]
    max_word: usize,
    #[arg(long, default_value_t = 100)]
    conjugations: usize,
    #[arg(long, default_value_t = VerifyParams::default().seed)]
    seed: u64,
}

/// A command's result: the JSON document and the exit code it implies.
struct Outcome {
    doc: Value,
    code: u8,
}

impl Outcome {
    fn ok(schema: &str, body: Value) -> Self {
        Outcome { doc: with_schema(schema, body), code: 0 }
    }
}

fn with_schema(schema: &str, body: Value) -> Value {
    let mut map = Map::new();
    map.insert("schema".into(), Value::String(format!("solgeom/{schema}/v1")));
    if let Value::Object(rest) = body {
        map.extend(rest);
    }
    Value::Object(map)
}

fn to_value(x: &impl Serialize) -> Value {
    serde_json::to_value(x).expect("serializable report")
}

fn parse_matrix(s: &str) -> Result<IntMatrix, Error> {
    s.parse()
}

fn invariant(cmd: InvariantCommand) -> Result<Outcome, Error> {
    Ok(match cmd {
        InvariantCommand::Validate { matrix } => {
            let inv = classifier::validate(&parse_matrix(&matrix)?)?;
            Outcome::ok("invariant", json!({ "valid": true, "invariant": inv }))
        }
        InvariantCommand::Normalize { matrix } => {
            let m = parse_matrix(&matrix)?;
            let inv = classifier::normalize(&m)?;
            let inverted = inv.matrix() != m;
            Outcome::ok("invariant", json!({ "invariant": inv, "inverted": inverted }))
        }
        InvariantCommand::Isom { left, right } => {
            let a = classifier::normalize(&parse_matrix(&left)?)?;
            let b = classifier::normalize(&parse_matrix(&right)?)?;
            let swap = classifier::swap_partner(&a);
            Outcome::ok(
                "isomorphism",
                json!({
                    "isomorphic": classifier::isomorphic(&a, &b),
                    "left": a,
                    "right": b,
                    "left_swap_partner": swap,
                    "related_by_swap": swap == b,
                }),
            )
        }
        InvariantCommand::Enumerate { max } => {
            let all: Vec<PillowcaseInvariant> = classifier::enumerate(max);
            Outcome::ok("enumeration", json!({ "max": max, "count": all.len(), "invariants": all }))
        }
    })
}

fn load_group(arg: &str) -> Result<CatalogEntry, Error> {
    let path = Path::new(arg);
    if arg.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Parse(format!("cannot read {arg}: {e}")))?;
        let value: Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{arg}: {e}")))?;
        let group = catalog::from_description(&value)?;
        return Ok(CatalogEntry {
            id: arg.to_string(),
            group,
            sol_e1: false,
            pillowcase: false,
            presentation: None,
            notes: Vec::new(),
        });
    }
    catalog::lookup(arg)
}

fn group(args: GroupArgs) -> Result<Outcome, Error> {
    let entry = load_group(&args.group)?;
    let g = &entry.group;
    let id = entry.id.clone();
    Ok(match args.op {
        GroupOp::H1 => {
            let ab = match &entry.presentation {
                Some(p) => p.abelianize(),
                None => extension::abelianization(g),
            };
            let s = ab.summary();
            Outcome::ok("h1", json!({ "group": id, "rank": s.rank, "torsion": s.torsion }))
        }
        GroupOp::Center => {
            let c = extension::center(g)?;
            let gens: Vec<String> = c.generators.iter().map(|z| g.render(z)).collect();
            let mut body = json!({ "group": id, "rank": c.rank, "generators": gens });
            if let [only] = gens.as_slice() {
                body["generator"] = Value::String(only.clone());
            }
            Outcome::ok("center", body)
        }
        GroupOp::Torsion => {
            let found = g.find_torsion(args.max_word)?;
            let witness = found.as_ref().map(|w| g.render(w));
            Outcome::ok(
                "torsion",
                json!({
                    "group": id,
                    "max_word": args.max_word,
                    "torsion_found": found.is_some(),
                    "witness": witness,
                }),
            )
        }
        GroupOp::W1 => {
            let r = extension::w1_factors_through_z4(g)?;
            Outcome::ok(
                "w1",
                json!({
                    "group": id,
                    "factors_through_z4": r.factors,
                    "character": r.character,
                    "witness": r.witness,
                }),
            )
        }
        GroupOp::Presentation => {
            let p = entry.presentation.clone().unwrap_or_else(|| g.defining_presentation());
            let relators: Vec<String> = p.relators.iter().map(|w| w.render(&p.generators)).collect();
            Outcome::ok(
                "presentation",
                json!({
                    "group": id,
                    "generators": p.generators,
                    "relators": relators,
                    "text": p.to_string(),
                    "notes": entry.notes,
                }),
            )
        }
        GroupOp::Ilattice => {
            let basis = extension::i_lattice(g);
            Outcome::ok("ilattice", json!({ "group": id, "rank": basis.len(), "basis": basis }))
        }
        GroupOp::Describe => Outcome::ok("description", catalog::to_description(g)),
    })
}

fn run_verify(args: VerifyArgs) -> Result<Outcome, Error> {
    let params = VerifyParams {
        box_bound: args.box_bound,
        conjugator_bound: args.bound,
        max_entry: args.max,
        a_max: args.a_max,
        max_word: args.max_word,
        conjugations: args.conjugations,
        seed: args.seed,
        ..VerifyParams::default()
    };
    let report = verify::run_suite(&args.suite, &params)?;
    let code = if report.passed() { 0 } else { 2 };
    Ok(Outcome { doc: with_schema("verification", to_value(&report)), code })
}

fn error_doc(e: &Error) -> Value {
    let kind = match e {
        Error::Constraint(v) => v.code().to_string(),
        Error::UnknownCatalog(_) => "unknown-catalog".into(),
        Error::UnknownSuite(_) => "unknown-suite".into(),
        Error::Parse(_) => "parse".into(),
        _ => "input".into(),
    };
    with_schema("error", json!({ "error": kind, "message": e.to_string() }))
}

fn render_scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        other => other.to_string(),
    }
}

/// Top-level fields as `key: value` lines; arrays of objects become tables.
fn pretty(doc: &Value) -> String {
    let mut out = String::new();
    let Value::Object(map) = doc else {
        return render_scalar(doc);
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (key, value) in map.iter().filter(|(k, _)| k.as_str() != "schema") {
        match value {
            Value::Array(rows) if rows.first().is_some_and(Value::is_object) => {
                out.push_str(&format!("{key}: {}\n", rows.len()));
                let cols: Vec<&String> = rows[0].as_object().unwrap().keys().collect();
                let cells: Vec<Vec<String>> = rows
                    .iter()
                    .map(|r| cols.iter().map(|c| render_scalar(&r[c.as_str()])).collect())
                    .collect();
                let widths: Vec<usize> = cols
                    .iter()
                    .enumerate()
                    .map(|(i, c)| cells.iter().map(|r| r[i].len()).chain([c.len()]).max().unwrap())
                    .collect();
                let line = |items: Vec<&str>| {
                    let padded: Vec<String> =
                        items.iter().zip(&widths).map(|(s, w)| format!("{s:<w$}")).collect();
                    format!("  {}\n", padded.join("  ").trim_end())
                };
                out.push_str(&line(cols.iter().map(|c| c.as_str()).collect()));
                for r in &cells {
                    out.push_str(&line(r.iter().map(String::as_str).collect()));
                }
            }
            Value::String(s) if s.contains('\n') => {
                out.push_str(&format!("{key}:\n{s}\n"));
            }
            _ => out.push_str(&format!("{key:<width$}  {}\n", render_scalar(value))),
        }
    }
    out
}

fn configure_threads() {
    let Ok(raw) = std::env::var(THREADS_VAR) else { return };
    match raw.trim().parse::<usize>() {
        Ok(n) if n > 0 => {
            // Only fails if a pool already exists, which cannot happen this early.
            let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
        }
        _ => eprintln!("solgeom: ignoring {THREADS_VAR}={raw:?}"),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads();
    let result = match cli.command {
        Command::Invariant(cmd) => invariant(cmd),
        Command::Group(args) => group(args),
        Command::Verify(args) => run_verify(args),
        Command::Catalog => Ok(Outcome::ok("catalog", json!({ "ids": catalog::CATALOG_IDS }))),
    };
    let (doc, code) = match result {
        Ok(o) => (o.doc, o.code),
        Err(e) => {
            eprintln!("solgeom: {e}");
            (error_doc(&e), 1)
        }
    };
    if cli.pretty {
        print!("{}", pretty(&doc));
    } else {
        println!("{doc}");
    }
    ExitCode::from(code)
}
