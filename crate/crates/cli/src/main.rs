use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use simtree::certify::{certify, certify_by_complete_ordering, count_bounds};
use simtree::complex::{alpha, dewdney_count_formula, tree_count_formula};
use simtree::cycles::find_cycle;
use simtree::enumerate::{evaluate_space, near_misses, Conjecture, EnumSpace, Status};
use simtree::paths::{components, find_ordering, find_path, find_reduced_path};
use simtree::{fixtures, FacetList, PureComplex, Simplex};

/// Simplicial trees, paths and cycles on pure simplicial complexes.
///
/// Inputs are facet-list JSON files `{"n": 2, "facets": [[1,2,3], ...]}`;
/// `-` reads standard input. Results are JSON on standard output.
/// Exit codes: 0 success, 1 `check-tree` on a non-tree, 2 bad input.
#[derive(Parser)]
#[command(name = "simtree", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Facet-list JSON file.
    file: PathBuf,
}

#[derive(Args)]
struct Endpoints {
    /// Start simplex, as `1,2` or `[1,2]`.
    #[arg(long, value_parser = parse_simplex)]
    from: Simplex,
    /// End simplex, same dimension as `--from`.
    #[arg(long, value_parser = parse_simplex)]
    to: Simplex,
    #[command(flatten)]
    input: Input,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    C1,
    C2,
    New,
}

impl From<Which> for Conjecture {
    fn from(w: Which) -> Self {
        match w {
            Which::C1 => Conjecture::C1,
            Which::C2 => Conjecture::C2,
            Which::New => Conjecture::NewConj,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run all five tree certificates.
    CheckTree(Input),
    /// Facet classes of the connected components.
    Components(Input),
    /// A shortest path sequence between two simplices, or null.
    FindPath(Endpoints),
    /// A reduced path sequence between two simplices, or null.
    FindReducedPath(Endpoints),
    /// An (m,n)-simplicial cycle sequence, or null.
    FindCycle {
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        input: Input,
    },
    /// Face counts with the tree and Dewdney count formulas.
    Count(Input),
    /// An (n-1)-ordering of the facets, or null.
    Ordering {
        /// Require an (n-1)-complete ordering, searched with backtracking.
        #[arg(long)]
        complete: bool,
        #[command(flatten)]
        input: Input,
    },
    /// Exhaustive counterexample search; prints one verdict per line.
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        min_facets: usize,
        #[arg(long)]
        max_facets: usize,
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, value_enum)]
        conjecture: Which,
        /// Count complexes up to isomorphism (default).
        #[arg(long, overrides_with = "no_iso")]
        iso: bool,
        /// Count labelled complexes.
        #[arg(long, overrides_with = "iso")]
        no_iso: bool,
        /// Write counterexamples here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write every verdict whose premises hold here.
        #[arg(long)]
        audit: Option<PathBuf>,
    },
    /// Write the built-in fixtures into a directory.
    Fixtures { dir: PathBuf },
}

struct Failure {
    kind: String,
    message: String,
}

impl From<simtree::Error> for Failure {
    fn from(e: simtree::Error) -> Self {
        Failure {
            kind: e.kind().to_string(),
            message: e.to_string(),
        }
    }
}

fn io_failure(path: &Path, e: io::Error) -> Failure {
    Failure {
        kind: "io".into(),
        message: format!("{}: {e}", path.display()),
    }
}

enum Output {
    Document(Value),
    Lines(Vec<Value>),
}

fn parse_simplex(s: &str) -> Result<Simplex, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    let vertices = inner
        .split(',')
        .map(|v| {
            v.trim()
                .parse::<u32>()
                .map_err(|e| format!("bad vertex {v:?}: {e}"))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Simplex::new(vertices).map_err(|e| e.to_string())
}

fn load(input: &Input) -> Result<PureComplex, Failure> {
    let text = if input.file.as_os_str() == "-" {
        let mut buf = String::new();
        io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| io_failure(&input.file, e))?;
        buf
    } else {
        fs::read_to_string(&input.file).map_err(|e| io_failure(&input.file, e))?
    };
    let list: FacetList = serde_json::from_str(&text).map_err(|e| Failure {
        kind: "malformed_input".into(),
        message: format!("{}: {e}", input.file.display()),
    })?;
    Ok(PureComplex::from_facet_list(&list)?)
}

fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(cmd: Command) -> Result<(Output, u8), Failure> {
    let doc = |v: Value| Ok((Output::Document(v), 0));
    match cmd {
        Command::CheckTree(input) => {
            let report = certify(&load(&input)?);
            let code = if report.by_definition { 0 } else { 1 };
            Ok((Output::Document(to_value(&report)), code))
        }
        Command::Components(input) => doc(to_value(&components(&load(&input)?))),
        Command::FindPath(e) => {
            let k = load(&e.input)?;
            doc(to_value(&find_path(&k, &e.from, &e.to)?))
        }
        Command::FindReducedPath(e) => {
            let k = load(&e.input)?;
            match find_reduced_path(&k, &e.from, &e.to) {
                Ok(p) => doc(to_value(&p)),
                Err(simtree::Error::NotConnectedPair) => doc(Value::Null),
                Err(err) => Err(err.into()),
            }
        }
        Command::FindCycle { m, input } => {
            let k = load(&input)?;
            if m >= k.dim() {
                return Err(simtree::Error::DimensionOutOfRange {
                    k: m,
                    n: k.dim() - 1,
                }
                .into());
            }
            doc(to_value(&find_cycle(&k, m)))
        }
        Command::Count(input) => doc(count_report(&load(&input)?)?),
        Command::Ordering { complete, input } => {
            let k = load(&input)?;
            let o = if complete {
                certify_by_complete_ordering(&k)
            } else {
                find_ordering(&k)
            };
            doc(to_value(&o))
        }
        Command::Search {
            n,
            min_facets,
            max_facets,
            max_vertices,
            conjecture,
            no_iso,
            out,
            audit,
            ..
        } => {
            let space = EnumSpace {
                n,
                min_facets,
                max_facets,
                max_vertices,
                up_to_iso: !no_iso,
            };
            let verdicts = evaluate_space(&space, conjecture.into())?;
            let hits: Vec<Value> = verdicts
                .iter()
                .filter(|v| v.status == Status::Counterexample)
                .map(to_value)
                .collect();
            eprintln!(
                "{} counterexamples among {} complexes",
                hits.len(),
                verdicts.len()
            );
            if let Some(path) = audit {
                let lines: Vec<Value> = near_misses(&verdicts).into_iter().map(to_value).collect();
                write_lines(&path, &lines)?;
            }
            match out {
                Some(path) => {
                    write_lines(&path, &hits)?;
                    Ok((Output::Lines(Vec::new()), 0))
                }
                None => Ok((Output::Lines(hits), 0)),
            }
        }
        Command::Fixtures { dir } => {
            fs::create_dir_all(&dir).map_err(|e| io_failure(&dir, e))?;
            let mut written = Vec::new();
            for (stem, k) in fixtures::all() {
                let path = dir.join(format!("{stem}.json"));
                let text = serde_json::to_string_pretty(&k.to_facet_list()).expect("serializable");
                fs::write(&path, text + "\n").map_err(|e| io_failure(&path, e))?;
                written.push(path.display().to_string());
            }
            doc(json!({ "written": written }))
        }
    }
}

fn count_report(k: &PureComplex) -> Result<Value, Failure> {
    let n = k.dim();
    let p = k.vertex_count() as i64;
    let counts = (0..=n)
        .map(|d| alpha(k, d))
        .collect::<Result<Vec<_>, _>>()?;
    let tree: Vec<Value> = (1..=n)
        .map(|d| {
            let expected = tree_count_formula(p, n as i64, d as i64);
            json!({ "k": d, "actual": counts[d], "expected": expected, "matches": counts[d] as i64 == expected })
        })
        .collect();
    let dewdney: Vec<Value> = (1..n)
        .map(|d| {
            let expected = dewdney_count_formula(p, n as i64 - 1, n as i64, d as i64);
            json!({
                "k": d,
                "actual": counts[d],
                "expected": expected.to_string(),
                "matches": expected == (counts[d] as i64).into(),
            })
        })
        .collect();
    Ok(json!({
        "n": n,
        "p": p,
        "alpha": counts,
        "tree_formula": tree,
        "dewdney_formula": dewdney,
        "bounds": to_value(&count_bounds(k)),
    }))
}

fn write_lines(path: &Path, lines: &[Value]) -> Result<(), Failure> {
    let mut text = String::new();
    for l in lines {
        text.push_str(&l.to_string());
        text.push('\n');
    }
    fs::write(path, text).map_err(|e| io_failure(path, e))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = match run(cli.command) {
        Ok((Output::Document(v), code)) => {
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            )
            .ok();
            code
        }
        Ok((Output::Lines(lines), code)) => {
            for l in lines {
                writeln!(out, "{l}").ok();
            }
            code
        }
        Err(f) => {
            let v = json!({ "error": { "kind": f.kind, "message": f.message } });
            writeln!(
                out,
                "{}",
                serde_json::to_string_pretty(&v).expect("serializable")
            )
            .ok();
            2
        }
    };
    ExitCode::from(code)
}
