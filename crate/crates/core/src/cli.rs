//! Command-line front end. [`run`] does all the work so the binary stays a
//! one-liner and the dispatch can be driven from tests.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde_json::{json, Value};

use crate::census::{census_record, run_census_with_threads, CensusRecord, Family};
use crate::closed_form::{ratio_report, sandwich_bounds_cwdd, size_cwdd};
use crate::cw::realize;
use crate::error::Error;
use crate::graph::{
    edge_ideal_generators, emit_edge_list, format_ideal, parse_graph, recognize, LabeledGraph,
};
use crate::lattice::{enumerate, LatticePoint2, NamedSet, Point};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_GRAPH_CAP: i32 = 4;

/// Largest census upper end accepted without `--force`.
pub const CENSUS_CAP: i64 = 300;

pub const THREADS_ENV: &str = "CW_CENSUS_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cwlattice",
    version,
    about = "Lattice-point census for Cameron-Walker graph invariants"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TextFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Cross-check enumerations against closed forms over a range of n
    Census {
        #[arg(long = "from")]
        from: i64,
        #[arg(long)]
        to: i64,
        #[arg(long, default_value = "all")]
        family: Family,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
        /// Write the report here instead of stdout
        #[arg(long)]
        output: Option<PathBuf>,
        /// Allow an upper end above 300
        #[arg(long)]
        force: bool,
    },
    /// Print the points of a set, one per row
    Enumerate {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        set: NamedSet,
        #[arg(long, value_enum, default_value = "csv")]
        format: TableFormat,
    },
    /// Run every check for a single n
    Verify {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Sandwich bounds and asymptotic ratios for |CWdd(n)|
    Bounds {
        #[arg(long)]
        n: i64,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Build a Cameron-Walker structure with the given depth and dim
    Realize {
        #[arg(long)]
        n: i64,
        #[arg(long)]
        depth: i64,
        #[arg(long)]
        dim: i64,
        /// Also print the edge list of the built graph
        #[arg(long)]
        emit_graph: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Decide whether an edge-list graph is Cameron-Walker
    Recognize {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
    /// Print the generators of the edge ideal of an edge-list graph
    Ideal {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: TextFormat,
    },
}

/// A failed command: exit status plus a message for stderr.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::GraphTooLarge { .. } => EXIT_GRAPH_CAP,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and executes the command.
/// Returns the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = sink.write_all(rendered.as_bytes());
            return code;
        }
    };
    let threads = std::env::var(THREADS_ENV).ok();
    match execute(cli.command, threads.as_deref(), out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn parse_threads(raw: Option<&str>) -> Result<Option<usize>, Failure> {
    match raw {
        None => Ok(None),
        Some(s) => match s.trim().parse::<usize>() {
            Ok(t) if t > 0 => Ok(Some(t)),
            _ => Err(Failure::usage(format!(
                "{THREADS_ENV} must be a positive integer, got {s:?}"
            ))),
        },
    }
}

fn execute(command: Command, threads: Option<&str>, out: &mut dyn Write) -> CmdResult {
    match command {
        Command::Census {
            from,
            to,
            family,
            format,
            output,
            force,
        } => {
            if to > CENSUS_CAP && !force {
                return Err(Failure::usage(format!(
                    "--to {to} exceeds {CENSUS_CAP}; pass --force to run it anyway"
                )));
            }
            let threads = parse_threads(threads)?;
            let report = run_census_with_threads(from, to, family, threads)?;
            let text = match format {
                TableFormat::Csv => report.to_csv(),
                TableFormat::Json => report.to_json(),
            };
            match output {
                Some(path) => std::fs::write(path, text)?,
                None => out.write_all(text.as_bytes())?,
            }
            Ok(if report.all_pass() {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Enumerate { n, set, format } => {
            let points = enumerate(set, n)?.points();
            match format {
                TableFormat::Csv => {
                    for p in &points {
                        let row: Vec<String> = p.coords().iter().map(i64::to_string).collect();
                        writeln!(out, "{}", row.join(","))?;
                    }
                }
                TableFormat::Json => {
                    let rows: Vec<Vec<i64>> = points.iter().map(Point::coords).collect();
                    write_json(out, &json!({ "set": set, "n": n, "points": rows }))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify { n, format } => {
            if n < 3 {
                return Err(Failure::usage(format!("verify needs n >= 3, got {n}")));
            }
            let record = census_record(n, Family::All);
            match format {
                TextFormat::Text => write_verify_text(out, &record)?,
                TextFormat::Json => {
                    write_json(out, &serde_json::to_value(&record).expect("record"))?
                }
            }
            Ok(if record.pass { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Bounds { n, format } => {
            let (lo, hi) = sandwich_bounds_cwdd(n)?;
            let ratios = ratio_report(n)?;
            let cwdd = BigRational::from_integer(size_cwdd(n));
            let rows = [
                ("sandwich_lower", &lo),
                ("cwdd", &cwdd),
                ("sandwich_upper", &hi),
                ("cwdd_over_c_plus", &ratios.cwdd_over_cplus),
                ("cwdd_over_c_minus", &ratios.cwdd_over_cminus),
                ("cwdd_over_n_squared", &ratios.cwdd_over_nsq),
            ];
            match format {
                TextFormat::Text => {
                    writeln!(out, "n = {n}")?;
                    for (name, value) in rows {
                        writeln!(out, "{name} = {value}")?;
                    }
                }
                TextFormat::Json => {
                    let mut obj = serde_json::Map::new();
                    obj.insert("n".into(), json!(n));
                    for (name, value) in rows {
                        obj.insert(name.into(), rational_json(value));
                    }
                    write_json(out, &Value::Object(obj))?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Realize {
            n,
            depth,
            dim,
            emit_graph,
            format,
        } => {
            let point = LatticePoint2::new(depth, dim)?;
            let realization = realize(n, point)?;
            let Some(structure) = &realization.structure else {
                return Err(Failure {
                    code: EXIT_UNSUPPORTED,
                    message: format!("no construction for (depth, dim) = {point} at n = {n}"),
                });
            };
            let edges = if emit_graph {
                Some(emit_edge_list(&structure.build_graph()?, None)?)
            } else {
                None
            };
            match format {
                TextFormat::Text => {
                    writeln!(out, "{structure}")?;
                    if let Some(e) = edges {
                        out.write_all(e.as_bytes())?;
                    }
                }
                TextFormat::Json => {
                    let mut v = json!({
                        "n": n,
                        "kind": realization.kind.to_string(),
                        "m": structure.leafed_side(),
                        "p": structure.triangle_side(),
                        "s": structure.leaves,
                        "t": structure.triangles,
                    });
                    if let Some(e) = edges {
                        v["edges"] = json!(e.lines().collect::<Vec<_>>());
                    }
                    write_json(out, &v)?;
                }
            }
            Ok(EXIT_OK)
        }
        Command::Recognize { input, format } => {
            let LabeledGraph { graph, .. } = read_graph(&input)?;
            let r = recognize(&graph)?;
            match format {
                TextFormat::Text => {
                    let (m, im) = (r.matching, r.induced_matching);
                    if r.is_cameron_walker() {
                        writeln!(out, "CW: m={m} im={im}")?;
                    } else {
                        writeln!(out, "not CW: m={m} im={im} ({})", r.verdict)?;
                    }
                }
                TextFormat::Json => write_json(
                    out,
                    &json!({
                        "cameron_walker": r.is_cameron_walker(),
                        "verdict": r.verdict.to_string(),
                        "matching_number": r.matching,
                        "induced_matching_number": r.induced_matching,
                    }),
                )?,
            }
            Ok(EXIT_OK)
        }
        Command::Ideal { input, format } => {
            let LabeledGraph { graph, labels } = read_graph(&input)?;
            let gens = edge_ideal_generators(&graph, Some(&labels))?;
            match format {
                TextFormat::Text => writeln!(out, "{}", format_ideal(&gens))?,
                TextFormat::Json => {
                    let names: Vec<String> = gens.iter().map(ToString::to_string).collect();
                    write_json(out, &json!({ "generators": names }))?;
                }
            }
            Ok(EXIT_OK)
        }
    }
}

fn read_graph(path: &PathBuf) -> Result<LabeledGraph, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text)?)
}

fn write_json(out: &mut dyn Write, v: &Value) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut *out, v)?;
    writeln!(out)
}

/// `{num, den}`, with components as JSON integers when they fit in an `i64`
/// and as decimal strings otherwise.
fn rational_json(x: &BigRational) -> Value {
    let part = |b: &num_bigint::BigInt| match b.to_i64() {
        Some(v) => json!(v),
        None => json!(b.to_string()),
    };
    json!({ "num": part(x.numer()), "den": part(x.denom()) })
}

fn write_verify_text(out: &mut dyn Write, r: &CensusRecord) -> std::io::Result<()> {
    let show = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |x| x.to_string());
    writeln!(out, "n = {} (k = {}, i = {})", r.n, r.k, r.i)?;
    for c in &r.counts {
        let mark = if c.matches() { "ok" } else { "MISMATCH" };
        writeln!(
            out,
            "{:<8} enumerated {:>8}  closed form {:>8}  {mark}",
            c.set.tag(),
            show(c.enumerated),
            show(c.closed_form)
        )?;
    }
    let flag = |b: bool| if b { "ok" } else { "FAILED" };
    writeln!(out, "disjointness {}", flag(r.disjointness_ok))?;
    writeln!(out, "sandwich {}", flag(r.sandwich_ok))?;
    writeln!(out, "containment {}", flag(r.containment_ok))?;
    writeln!(out, "{}", if r.pass { "pass" } else { "fail" })
}
