use std::io::Read as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use booklab::constructions::{
    b42_construction, b42_lower_bound_ceil, b42_predicted_count, book_extremal, gp_construction,
    gp_predicted_count, k4_packing, k4_packing_triangles, turan_clique_count,
};
use booklab::graph::io::{parse_graph, to_edge_list, to_graph6};
use booklab::graph::{canonical_form, count_cliques, turan_graph, Graph};
use booklab::partitions::{beta, sum_free_partitions};
use booklab::patterns::{first_violation, is_free};
use booklab::search::{climb_with_restarts, exact_ex};
use booklab::{Engine, Error, ForbiddenFamily, Partition, SearchOptions, SearchReport};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

const SCHEMA: &str = "booklab/1";

/// Clique counts, forbidden books and extremal constructions for generalized
/// Turán problems.
///
/// Graphs are read as graph6 or as an edge list ("n" on the first line, then
/// one "u v" pair per line). JSON goes to stdout and diagnostics to stderr.
///
/// Exit codes: 0 success, 1 I/O failure, 2 invalid parameter or usage,
/// 3 resource limit.
#[derive(Parser)]
#[command(name = "booklab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count r-cliques of a graph.
    Count {
        #[command(flatten)]
        input: InputArg,
        /// Clique size.
        #[arg(long)]
        r: usize,
    },
    /// Test a graph against a forbidden family and report a violation.
    Free {
        #[command(flatten)]
        input: InputArg,
        /// Forbidden family, e.g. "B(4,1),H1,K(5)".
        #[arg(long)]
        forbid: String,
    },
    /// Build an explicit construction and verify it.
    Construct(ConstructArgs),
    /// Exhaustive ex(n, K_r, F).
    Exact(ExactArgs),
    /// Zykov-symmetrization hill climbing from a starting graph.
    Climb {
        #[command(flatten)]
        input: InputArg,
        #[arg(long)]
        r: usize,
        #[arg(long, default_value = "")]
        forbid: String,
        /// Seed for the relabelled restarts.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of climbs; run 0 uses the input labelling.
        #[arg(long, default_value_t = 1)]
        restarts: usize,
    },
    /// beta(r, s): the most parts of an s-sum-free partition of r.
    Beta {
        r: usize,
        s: usize,
        /// Also list every s-sum-free partition, one JSON line each.
        #[arg(long)]
        all: bool,
    },
    /// Closed-form values against computed ones, one row per n.
    Table(TableArgs),
    /// Convert between graph6 and edge-list text.
    Convert {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, value_enum, default_value_t = Format::G6)]
        to: Format,
        /// Relabel to the canonical form first.
        #[arg(long)]
        canonical: bool,
    },
}

#[derive(clap::Args)]
struct InputArg {
    /// Graph file, "-" for stdin, or a literal graph6 string.
    #[arg(long)]
    input: String,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    G6,
    Edgelist,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// K_{s+1} ∨ T_{r-s-1}(n-s-1)
    BookExtremal,
    /// disjoint K_4's plus a clique on the remainder
    K4,
    /// the partition construction; needs --partition and --s
    Gp,
    /// disjoint triangles joined to an independent set
    B42,
    /// complete r-partite Turán graph
    Turan,
}

#[derive(clap::Args)]
struct ConstructArgs {
    #[arg(long, value_enum)]
    kind: Kind,
    #[arg(long)]
    n: usize,
    /// Clique size (book-extremal) or number of parts (turan).
    #[arg(long)]
    r: Option<usize>,
    /// Overlap of the forbidden book (book-extremal, gp).
    #[arg(long)]
    s: Option<usize>,
    /// Partition for gp, e.g. "3,1".
    #[arg(long)]
    partition: Option<String>,
    /// Family to verify against; each kind has a default.
    #[arg(long)]
    family: Option<String>,
    /// Format of the graph written with --out.
    #[arg(long, value_enum, default_value_t = Format::G6)]
    format: Format,
    /// Write the graph here; the JSON summary still goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    Labeled,
    Canonical,
}

#[derive(clap::Args)]
struct ExactArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    /// Forbidden family; empty forbids nothing.
    #[arg(long, default_value = "")]
    forbid: String,
    #[arg(long, value_enum, default_value_t = EngineArg::Canonical)]
    engine: EngineArg,
    /// Soft deadline; on expiry a partial report has "exhaustive": false.
    #[arg(long)]
    max_seconds: Option<f64>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Raise or lower the engine's vertex cap (labeled 7, canonical 10).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Theorem {
    /// ex(n, K_3, B(3,1)) piecewise in n mod 4
    #[value(name = "1.1")]
    T11,
    /// ex(n, K_4, {B(4,1), H1, K(5)}) = floor((n-2)^2/4)
    #[value(name = "2.1")]
    T21,
    /// K_2 ∨ T_2(n-2) count against floor((n-2)^2/4)
    #[value(name = "1.3")]
    T13,
    /// B(4,2)-free construction against n^2/12 - 2
    #[value(name = "1.7")]
    T17,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableFormat {
    Json,
    Csv,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    theorem: Theorem,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest n computed exhaustively (1.1 and 2.1); larger n use the construction.
    #[arg(long, default_value_t = 8)]
    exhaustive_max: usize,
    #[arg(long, value_enum, default_value_t = TableFormat::Json)]
    format: TableFormat,
}

enum Failure {
    Lib(Error),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_resource_limit() { 3 } else { 2 })
        }
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Count { input, r } => {
            let g = read_graph(&input.input)?;
            emit(json!({"schema": SCHEMA, "n": g.n(), "r": r, "count": count_cliques(&g, r)}));
        }
        Command::Free { input, forbid } => {
            let g = read_graph(&input.input)?;
            let family: ForbiddenFamily = forbid.parse()?;
            let violation = first_violation(&g, &family)?;
            emit(json!({
                "schema": SCHEMA,
                "n": g.n(),
                "family": family,
                "free": violation.is_none(),
                "violation": violation,
            }));
        }
        Command::Construct(args) => construct(args)?,
        Command::Exact(args) => exact(args)?,
        Command::Climb {
            input,
            r,
            forbid,
            seed,
            restarts,
        } => {
            let g = read_graph(&input.input)?;
            let family: ForbiddenFamily = forbid.parse()?;
            let start = Instant::now();
            let outcome = climb_with_restarts(&g, r, &family, seed, restarts)?;
            let moves = serde_json::to_value(&outcome.moves).expect("moves serialize");
            let graph6 = to_graph6(&outcome.graph);
            let mut value = report_json(outcome.into_report(r, &family), start);
            value["graph6"] = json!(graph6);
            value["moves"] = moves;
            value["seed"] = json!(seed);
            value["restarts"] = json!(restarts.max(1));
            emit(value);
        }
        Command::Beta { r, s, all } => {
            let (b, witness) = beta(r, s)?;
            emit(
                json!({"schema": SCHEMA, "r": r, "s": s, "beta": b, "partition": witness.to_string()}),
            );
            if all {
                for p in sum_free_partitions(r, s) {
                    emit(json!({
                        "schema": SCHEMA,
                        "r": r,
                        "s": s,
                        "partition": p.to_string(),
                        "parts": p.len(),
                        "maximum": p.len() == b,
                    }));
                }
            }
        }
        Command::Table(args) => table(args)?,
        Command::Convert {
            input,
            to,
            canonical,
        } => {
            let mut g = read_graph(&input.input)?;
            if canonical {
                g = canonical_form(&g).to_graph();
            }
            print!("{}", render(&g, to));
        }
    }
    Ok(())
}

fn emit(value: Value) {
    println!("{value}");
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::G6 => format!("{}\n", to_graph6(g)),
        Format::Edgelist => to_edge_list(g),
    }
}

fn read_graph(input: &str) -> Outcome<Graph> {
    let text = if input == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Io(format!("stdin: {e}")))?;
        buf
    } else if Path::new(input).is_file() {
        std::fs::read_to_string(input).map_err(|e| Failure::Io(format!("{input}: {e}")))?
    } else {
        input.to_string()
    };
    Ok(parse_graph(&text)?)
}

fn report_json(report: SearchReport, start: Instant) -> Value {
    let witnesses: Vec<&str> = report.witnesses.iter().map(|w| w.graph6()).collect();
    let mut value = json!({
        "schema": SCHEMA,
        "n": report.n,
        "r": report.r,
        "family": report.family,
        "maximum": report.maximum,
        "witnesses_g6": witnesses,
        "examined": report.examined,
        "engine": report.engine,
        "strategy": report.strategy,
        "exhaustive": report.exhaustive,
        "wall_ms": start.elapsed().as_millis() as u64,
    });
    if !report.trajectory.is_empty() {
        value["trajectory"] = json!(report.trajectory);
    }
    value
}

fn exact(args: ExactArgs) -> Outcome {
    let family: ForbiddenFamily = args.forbid.parse()?;
    let max_time = match args.max_seconds {
        Some(secs) if !(secs.is_finite() && secs >= 0.0) => {
            return Err(Error::InvalidParameter(format!(
                "--max-seconds must be a non-negative number, got {secs}"
            ))
            .into());
        }
        other => other.map(Duration::from_secs_f64),
    };
    let opts = SearchOptions {
        max_n: args.max_n,
        max_time,
        jobs: args.jobs,
        shards: None,
    };
    let engine = match args.engine {
        EngineArg::Labeled => Engine::LabeledBruteForce,
        EngineArg::Canonical => Engine::CanonicalGeneration,
    };
    let start = Instant::now();
    let report = exact_ex(args.n, args.r, &family, engine, &opts)?;
    if !report.exhaustive {
        eprintln!("warning: deadline reached, report is partial");
    }
    emit(report_json(report, start));
    Ok(())
}

fn need(value: Option<usize>, flag: &str, kind: &str) -> Outcome<usize> {
    value.ok_or_else(|| Error::InvalidParameter(format!("--kind {kind} needs {flag}")).into())
}

fn construct(args: ConstructArgs) -> Outcome {
    let n = args.n;
    // (graph, clique size counted, predicted count, default family)
    let (g, r, predicted, default_family) = match args.kind {
        Kind::BookExtremal => {
            let r = need(args.r, "--r", "book-extremal")?;
            let s = args.s.unwrap_or(1);
            let g = book_extremal(n, r, s)?;
            let k = r - s - 1;
            (
                g,
                r,
                turan_clique_count(n - s - 1, k, k),
                format!("B({r},{s})"),
            )
        }
        Kind::K4 => (k4_packing(n), 3, k4_packing_triangles(n), "B(3,1)".into()),
        Kind::Gp => {
            let text = args.partition.as_deref().ok_or_else(|| {
                Failure::Lib(Error::InvalidParameter(
                    "--kind gp needs --partition".into(),
                ))
            })?;
            let p: Partition = text.parse()?;
            let s = need(args.s, "--s", "gp")?;
            let g = gp_construction(n, &p, s)?;
            let r = p.total();
            (g, r, gp_predicted_count(n, &p), format!("B({r},{s})"))
        }
        Kind::B42 => (
            b42_construction(n),
            4,
            b42_predicted_count(n),
            "B(4,2)".into(),
        ),
        Kind::Turan => {
            let t = need(args.r, "--r", "turan")?;
            let g = turan_graph(n, t)?;
            (g, t, turan_clique_count(n, t, t), format!("K({})", t + 1))
        }
    };
    let family: ForbiddenFamily = args.family.unwrap_or(default_family).parse()?;
    let count = count_cliques(&g, r);
    let verified_free = is_free(&g, &family)?;
    if let Some(path) = &args.out {
        std::fs::write(path, render(&g, args.format))
            .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    }
    emit(json!({
        "schema": SCHEMA,
        "kind": args.kind.to_possible_value().map(|v| v.get_name().to_string()),
        "n": n,
        "r": r,
        "family": family,
        "graph6": to_graph6(&g),
        "count": count,
        "predicted_count": predicted,
        "verified_free": verified_free,
    }));
    Ok(())
}

struct Row {
    n: usize,
    formula: u64,
    computed: u64,
    matches: bool,
    method: String,
}

fn exhaustive_row(n: usize, r: usize, family: &ForbiddenFamily, formula: u64) -> Outcome<Row> {
    let rep = exact_ex(
        n,
        r,
        family,
        Engine::CanonicalGeneration,
        &SearchOptions::default(),
    )?;
    Ok(Row {
        n,
        formula,
        computed: rep.maximum,
        matches: rep.maximum == formula,
        method: "exhaustive canonical-generation".into(),
    })
}

fn construction_row(
    n: usize,
    g: &Graph,
    r: usize,
    family: &ForbiddenFamily,
    formula: u64,
    name: &str,
    at_least: bool,
) -> Outcome<Row> {
    let computed = count_cliques(g, r);
    let free = is_free(g, family)?;
    let matches = free
        && if at_least {
            computed >= formula
        } else {
            computed == formula
        };
    let relation = if at_least { ">=" } else { "==" };
    let method = if free {
        format!("construction {name}, count {relation} formula")
    } else {
        format!("construction {name} NOT {family}-free")
    };
    Ok(Row {
        n,
        formula,
        computed,
        matches,
        method,
    })
}

fn table(args: TableArgs) -> Outcome {
    let (theorem, lo_default, hi_default) = match args.theorem {
        Theorem::T11 => ("1.1", 1, 8),
        Theorem::T21 => ("2.1", 2, 8),
        Theorem::T13 => ("1.3", 4, 40),
        Theorem::T17 => ("1.7", 6, 120),
    };
    let lo = args.n_min.unwrap_or(lo_default);
    let hi = args.n_max.unwrap_or(hi_default);
    if lo < lo_default {
        return Err(
            Error::InvalidParameter(format!("table {theorem} starts at n = {lo_default}")).into(),
        );
    }
    let b31: ForbiddenFamily = "B(3,1)".parse()?;
    let k4_family: ForbiddenFamily = "B(4,1),H1,K(5)".parse()?;
    let b41: ForbiddenFamily = "B(4,1)".parse()?;
    let b42: ForbiddenFamily = "B(4,2)".parse()?;
    if args.format == TableFormat::Csv {
        println!("theorem,n,formula,computed,match,method");
    }
    for n in lo..=hi {
        let row = match args.theorem {
            Theorem::T11 => {
                let formula = k4_packing_triangles(n);
                if n <= args.exhaustive_max {
                    exhaustive_row(n, 3, &b31, formula)?
                } else {
                    construction_row(n, &k4_packing(n), 3, &b31, formula, "k4_packing", false)?
                }
            }
            Theorem::T21 => {
                let formula = turan_clique_count(n - 2, 2, 2);
                if n <= args.exhaustive_max || n < 4 {
                    exhaustive_row(n, 4, &k4_family, formula)?
                } else {
                    let g = book_extremal(n, 4, 1)?;
                    construction_row(n, &g, 4, &k4_family, formula, "K2+T2(n-2)", false)?
                }
            }
            Theorem::T13 => {
                let g = book_extremal(n, 4, 1)?;
                let formula = turan_clique_count(n - 2, 2, 2);
                construction_row(n, &g, 4, &b41, formula, "K2+T2(n-2)", false)?
            }
            Theorem::T17 => {
                let g = b42_construction(n);
                let formula = b42_lower_bound_ceil(n);
                construction_row(n, &g, 4, &b42, formula, "b42", true)?
            }
        };
        match args.format {
            TableFormat::Json => emit(json!({
                "schema": SCHEMA,
                "theorem": theorem,
                "n": row.n,
                "formula": row.formula,
                "computed": row.computed,
                "match": row.matches,
                "method": row.method,
            })),
            TableFormat::Csv => println!(
                "{theorem},{},{},{},{},\"{}\"",
                row.n, row.formula, row.computed, row.matches, row.method
            ),
        }
    }
    Ok(())
}
