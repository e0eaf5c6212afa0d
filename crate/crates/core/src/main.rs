use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use plcolor::checks::CheckConfig;
use plcolor::lab::{
    hunt_counterexamples, run_catalog, show_witness, HuntSpec, InputSource, ResultsCache, RunConfig, RunReport,
    SCHEMA_VERSION,
};
use plcolor::{AdversaryOptions, Caps, Error, FamilySpec, LambdaTable};

#[derive(Parser)]
#[command(name = "plcolor", version, about = "Partial list coloring tables and inequality checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute λ_t tables.
    Table(Common),
    /// Compute tables and evaluate every statement on them.
    Check(Common),
    /// Search random graphs for conjecture counterexamples.
    Hunt(HuntArgs),
    /// Print a cached minimizing assignment and a maximum coloring under it.
    Witness(WitnessArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edges,
}

#[derive(Args, Clone)]
struct Common {
    /// Graph file(s).
    #[arg(long)]
    input: Vec<PathBuf>,
    /// Format of the --input files.
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Named graph, e.g. `cycle:5`, `bipartite:2,4`, `gnp:6,1/2,7`.
    #[arg(long)]
    family: Vec<String>,
    #[arg(long)]
    t_max: Option<usize>,
    /// Palette bound; below n*t the computed λ_t may be too large.
    #[arg(long)]
    palette: Option<usize>,
    /// Worker threads (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[arg(long)]
    out_json: Option<PathBuf>,
    #[arg(long)]
    out_csv: Option<PathBuf>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Only these statements (comma separated ids).
    #[arg(long, value_delimiter = ',')]
    statements: Vec<String>,
    #[arg(long)]
    max_vertices: Option<usize>,
    #[arg(long)]
    max_t: Option<usize>,
    /// Lift the size caps on the adversary.
    #[arg(long)]
    unsafe_caps: bool,
}

#[derive(Args)]
struct HuntArgs {
    #[command(flatten)]
    common: Common,
    #[arg(long, default_value_t = 6)]
    n_min: usize,
    #[arg(long, default_value_t = 8)]
    n_max: usize,
    /// Edge probability as a fraction.
    #[arg(long, default_value = "1/2")]
    p: String,
    #[arg(long, default_value_t = 100)]
    count: usize,
    /// Counterexample bundles are appended here as they are found.
    #[arg(long, default_value = "counterexamples.jsonl")]
    bundles: PathBuf,
}

#[derive(Args)]
struct WitnessArgs {
    #[arg(long)]
    cache: PathBuf,
    /// The graph, in graph6.
    #[arg(long)]
    graph: String,
    #[arg(long)]
    t: usize,
    #[arg(long)]
    palette: Option<usize>,
}

fn parse_fraction(s: &str) -> Result<(u64, u64), Error> {
    let bad = || Error::InvalidArgument(format!("bad probability {s:?}"));
    let (a, b) = s.split_once('/').ok_or_else(bad)?;
    Ok((a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?))
}

fn config(c: &Common) -> Result<RunConfig, Error> {
    let mut inputs: Vec<InputSource> = c
        .input
        .iter()
        .map(|p| match c.format {
            Format::Graph6 => InputSource::Graph6File(p.clone()),
            Format::Edges => InputSource::EdgeListFile(p.clone()),
        })
        .collect();
    for f in &c.family {
        inputs.push(InputSource::Family(f.parse::<FamilySpec>()?));
    }
    let mut caps = if c.unsafe_caps { Caps::unlimited() } else { Caps::default() };
    if let Some(v) = c.max_vertices {
        caps.max_vertices = v;
    }
    if let Some(t) = c.max_t {
        caps.max_t = t;
    }
    let jobs = c.jobs.unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    Ok(RunConfig {
        inputs,
        hunt: None,
        t_max: c.t_max,
        caps,
        palette: c.palette,
        jobs,
        out_json: c.out_json.clone(),
        out_csv: c.out_csv.clone(),
        cache: c.cache.clone(),
        bundles: None,
        checks: CheckConfig {
            seed: c.seed,
            statements: (!c.statements.is_empty()).then(|| c.statements.clone()),
            ..Default::default()
        },
    })
}

fn report_run(report: &RunReport, print_json: bool) -> ExitCode {
    if print_json {
        print!("{}", report.to_json());
    }
    let s = &report.summary;
    let st = &report.stats;
    eprintln!(
        "{} graphs ({} errors), {} verdicts, {} held; {} counterexamples, {} proved-statement failures",
        s.graphs,
        s.errors,
        s.verdicts,
        s.held,
        s.counterexamples,
        s.proved_failures + s.unconfirmed
    );
    eprintln!(
        "{:.2?} elapsed; cache {} hits, {} misses{}",
        st.elapsed,
        st.cache_hits,
        st.cache_misses,
        if st.duplicates > 0 { format!("; {} duplicate graphs skipped", st.duplicates) } else { String::new() }
    );
    for g in &report.graphs {
        for v in &g.table_violations {
            eprintln!("solver bug: table of {}: {v}", g.graph);
        }
        if let Some(r) = &g.report {
            for v in r.bugs() {
                eprintln!("solver bug: {} fails {}", g.graph, v.describe());
            }
        }
    }
    for b in &report.counterexamples {
        let tag = if b.double_check.confirmed { "counterexample" } else { "solver bug: unconfirmed counterexample" };
        eprintln!("{tag}: {} {}", b.graph, b.verdict.describe());
    }
    if st.aborted {
        eprintln!("run aborted after a proved-statement failure");
    }
    ExitCode::from(report.exit_code() as u8)
}

#[derive(Serialize)]
struct TableRow {
    index: usize,
    graph: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    table: Option<LambdaTable>,
}

#[derive(Serialize)]
struct TableReport {
    version: u32,
    tables: Vec<TableRow>,
}

fn tables(c: &Common) -> Result<ExitCode, Error> {
    use rayon::prelude::*;
    let cfg = config(c)?;
    cfg.validate()?;
    let graphs = cfg.load_graphs()?;
    let cache = match &cfg.cache {
        Some(p) => ResultsCache::open(p)?,
        None => ResultsCache::in_memory(),
    };
    let opts = AdversaryOptions {
        caps: cfg.caps,
        palette: cfg.palette,
        parallel: graphs.len() == 1 && cfg.jobs > 1,
        no_certificate: false,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| Error::Io(e.to_string()))?;
    let rows: Vec<Result<TableRow, Error>> = pool.install(|| {
        graphs
            .par_iter()
            .enumerate()
            .map(|(index, g)| {
                let mut row = TableRow {
                    index,
                    graph: g.to_graph6(),
                    label: g.label().map(str::to_string),
                    error: None,
                    table: None,
                };
                match cache.table(g, &opts, cfg.t_limit()) {
                    Ok(t) => row.table = Some(t),
                    Err(e @ (Error::Integrity(_) | Error::Io(_))) => return Err(e),
                    Err(e) => row.error = Some(e.to_string()),
                }
                Ok(row)
            })
            .collect()
    });
    let rows = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    let mut bad = false;
    for r in &rows {
        if let Some(t) = &r.table {
            for v in t.invariant_violations() {
                eprintln!("solver bug: table of {}: {v}", r.graph);
                bad = true;
            }
        }
    }
    let report = TableReport { version: SCHEMA_VERSION, tables: rows };
    let mut json = serde_json::to_string_pretty(&report).expect("tables serialize");
    json.push('\n');
    match &cfg.out_json {
        Some(p) => std::fs::write(p, json).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?,
        None => print!("{json}"),
    }
    if let Some(p) = &cfg.out_csv {
        let mut w = csv::Writer::from_path(p).map_err(|e| Error::Io(e.to_string()))?;
        w.write_record(["index", "graph", "t", "lambda"]).map_err(|e| Error::Io(e.to_string()))?;
        for r in &report.tables {
            if let Some(t) = &r.table {
                for (i, v) in t.values.iter().enumerate() {
                    w.write_record([r.index.to_string(), r.graph.clone(), i.to_string(), v.to_string()])
                        .map_err(|e| Error::Io(e.to_string()))?;
                }
            }
        }
        w.flush()?;
    }
    eprintln!("cache {} hits, {} misses", cache.hits(), cache.misses());
    Ok(if bad { ExitCode::from(3) } else { ExitCode::SUCCESS })
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Table(c) => tables(&c),
        Command::Check(c) => {
            let cfg = config(&c)?;
            let report = run_catalog(&cfg)?;
            Ok(report_run(&report, cfg.out_json.is_none()))
        }
        Command::Hunt(h) => {
            let mut cfg = config(&h.common)?;
            let (p_num, p_den) = parse_fraction(&h.p)?;
            cfg.hunt =
                Some(HuntSpec { n_min: h.n_min, n_max: h.n_max, p_num, p_den, count: h.count, seed: h.common.seed });
            cfg.bundles = Some(h.bundles);
            let report = hunt_counterexamples(&cfg)?;
            Ok(report_run(&report, cfg.out_json.is_none()))
        }
        Command::Witness(w) => {
            let view = show_witness(&w.cache, &w.graph, w.t, w.palette)?;
            println!("{}", serde_json::to_string_pretty(&view).expect("witnesses serialize"));
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            // usage errors are operational; 2 is reserved for counterexamples
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
