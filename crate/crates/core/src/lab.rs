//! Catalog runs: tables and checks over many graphs, an append-only results
//! cache, and a randomized hunt for conjecture counterexamples.
//!
//! Reports are order-stable by input position and contain nothing that
//! depends on timing or thread count, so identical configurations produce
//! byte-identical JSON.

use std::collections::{HashMap, HashSet};
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Read, Seek, SeekFrom, Write};
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::adversary::{
    effective_palette, lambda_t, lambda_t_oracle, lambda_table_with, AdversaryOptions, AdversaryResult, Caps,
    LambdaTable,
};
use crate::assignment::{ListAssignment, PartialColoring};
use crate::checks::{
    check_agh, check_all, check_conjecture2, CheckConfig, ConjectureReport, Params, TableSource, Verdict,
};
use crate::error::{Error, Result};
use crate::graph::{parse_edge_list_blocks, parse_graph6_lines, FamilySpec, Graph};
use crate::rng::XorShift64;
use crate::solver::{lambda_of_assignment, lambda_of_assignment_oracle};

/// Version of the report and cache formats.
pub const SCHEMA_VERSION: u32 = 1;

/// How the open readings of two statements are resolved; copied into every
/// report.
pub const NOTES: &[&str] = &[
    "Theorem14.1 ranges over induced subgraphs only.",
    "Theorem9.4 reports reflexivity, antisymmetry and transitivity as separate verdicts.",
];

#[derive(Clone, Debug)]
pub enum InputSource {
    Graph6File(PathBuf),
    EdgeListFile(PathBuf),
    Family(FamilySpec),
    Graphs(Vec<Graph>),
}

/// `count` draws of gnp(n, num/den) with n uniform in `n_min..=n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HuntSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub p_num: u64,
    pub p_den: u64,
    pub count: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub inputs: Vec<InputSource>,
    pub hunt: Option<HuntSpec>,
    /// Largest t tried when building a table; defaults to the cap on t.
    pub t_max: Option<usize>,
    pub caps: Caps,
    pub palette: Option<usize>,
    pub jobs: usize,
    pub out_json: Option<PathBuf>,
    pub out_csv: Option<PathBuf>,
    pub cache: Option<PathBuf>,
    /// Counterexample bundles are appended here (JSON lines) as found.
    pub bundles: Option<PathBuf>,
    pub checks: CheckConfig,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            inputs: Vec::new(),
            hunt: None,
            t_max: None,
            caps: Caps::default(),
            palette: None,
            jobs: 1,
            out_json: None,
            out_csv: None,
            cache: None,
            bundles: None,
            checks: CheckConfig::default(),
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.caps.max_vertices == 0 || self.caps.max_t == 0 {
            return Err(Error::InvalidArgument("caps must be at least 1".into()));
        }
        if self.inputs.is_empty() && self.hunt.is_none() {
            return Err(Error::InvalidArgument("no input graphs given".into()));
        }
        if self.jobs == 0 {
            return Err(Error::InvalidArgument("jobs must be at least 1".into()));
        }
        if let Some(h) = &self.hunt {
            if h.n_min == 0 || h.n_min > h.n_max || h.n_max > 64 {
                return Err(Error::InvalidArgument(format!("bad vertex range {}..={}", h.n_min, h.n_max)));
            }
            if h.p_den == 0 || h.p_num > h.p_den {
                return Err(Error::InvalidArgument(format!("bad probability {}/{}", h.p_num, h.p_den)));
            }
        }
        Ok(())
    }

    pub fn t_limit(&self) -> usize {
        self.t_max.unwrap_or(self.caps.max_t)
    }

    pub fn load_graphs(&self) -> Result<Vec<Graph>> {
        let mut out = Vec::new();
        for input in &self.inputs {
            match input {
                InputSource::Graph6File(p) => out.extend(read_with(p, parse_graph6_lines)?),
                InputSource::EdgeListFile(p) => out.extend(read_with(p, parse_edge_list_blocks)?),
                InputSource::Family(f) => out.push(f.generate()?.with_label(f.to_string())),
                InputSource::Graphs(gs) => out.extend(gs.iter().cloned()),
            }
        }
        Ok(out)
    }
}

type LineParser = fn(&str) -> std::result::Result<Vec<Graph>, (usize, crate::ParseError)>;

fn read_with(path: &Path, parse: LineParser) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse(&text).map_err(|(line, error)| Error::Input { source_name: path.display().to_string(), line, error })
}

/// The graphs a hunt visits, duplicates (by graph6) removed, and the number
/// of duplicates dropped.
pub fn hunt_graphs(spec: &HuntSpec) -> Result<(Vec<Graph>, usize)> {
    let mut rng = XorShift64::new(spec.seed);
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for _ in 0..spec.count {
        let n = spec.n_min + rng.below((spec.n_max - spec.n_min + 1) as u64) as usize;
        let fam = FamilySpec::Gnp { n, num: spec.p_num, den: spec.p_den, seed: rng.next_u64() };
        let g = fam.generate()?;
        if seen.insert(g.to_graph6()) {
            out.push(g.with_label(fam.to_string()));
        }
    }
    let dups = spec.count - out.len();
    Ok((out, dups))
}

/// One cached λ_t value with its minimizing assignment.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub version: u32,
    pub graph: String,
    pub t: usize,
    pub palette: usize,
    pub value: usize,
    pub palette_limited: bool,
    pub lists: Vec<u64>,
}

type CacheKey = (String, usize, usize);

/// λ_t results keyed by (graph6, t, palette, schema version), mirrored to an
/// append-only JSON-lines file when a path is given. Entries are validated
/// whenever they are read back.
pub struct ResultsCache {
    entries: Mutex<HashMap<CacheKey, CacheEntry>>,
    file: Option<Mutex<File>>,
    hits: AtomicU64,
    misses: AtomicU64,
}

impl ResultsCache {
    pub fn in_memory() -> Self {
        ResultsCache {
            entries: Mutex::new(HashMap::new()),
            file: None,
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        }
    }

    pub fn open(path: &Path) -> Result<Self> {
        let mut entries = HashMap::new();
        if path.exists() {
            let reader = BufReader::new(File::open(path)?);
            for (i, line) in reader.lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let e: CacheEntry = serde_json::from_str(&line)
                    .map_err(|err| Error::Integrity(format!("{}:{}: {err}", path.display(), i + 1)))?;
                if e.version != SCHEMA_VERSION {
                    continue;
                }
                let key = (e.graph.clone(), e.t, e.palette);
                if let Some(old) = entries.get(&key) {
                    if *old != e {
                        return Err(Error::Integrity(format!(
                            "{}:{}: conflicting entries for {} t = {}",
                            path.display(),
                            i + 1,
                            e.graph,
                            e.t
                        )));
                    }
                }
                entries.insert(key, e);
            }
        }
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        let len = file.metadata()?.len();
        if len > 0 {
            let mut last = [0u8];
            let mut r = File::open(path)?;
            r.seek(SeekFrom::Start(len - 1))?;
            r.read_exact(&mut last)?;
            if last[0] != b'\n' {
                file.write_all(b"\n")?;
            }
        }
        Ok(ResultsCache {
            entries: Mutex::new(entries),
            file: Some(Mutex::new(file)),
            hits: AtomicU64::new(0),
            misses: AtomicU64::new(0),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.lock().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn hits(&self) -> u64 {
        self.hits.load(Ordering::Relaxed)
    }

    /// Adversary runs performed because of a miss.
    pub fn misses(&self) -> u64 {
        self.misses.load(Ordering::Relaxed)
    }

    /// The entry for `(g, t, palette)`, checked against the graph: the
    /// witness must be a t-uniform assignment within the palette whose λ_L
    /// is the stored value.
    pub fn get(&self, g: &Graph, t: usize, palette: usize) -> Result<Option<AdversaryResult>> {
        let key = (g.to_graph6(), t, palette);
        let Some(e) = self.entries.lock().unwrap().get(&key).cloned() else {
            return Ok(None);
        };
        let bad = |why: String| Error::Integrity(format!("cache entry for {} t = {t}: {why}", key.0));
        let witness = ListAssignment::new(g, e.lists.clone(), palette).map_err(|err| bad(err.to_string()))?;
        if witness.uniform_size() != Some(t) {
            return Err(bad("witness is not t-uniform".into()));
        }
        if e.palette_limited != (palette < g.n() * t) {
            return Err(bad("palette flag does not match".into()));
        }
        let actual = lambda_of_assignment(g, &witness)?.value;
        if actual != e.value {
            return Err(bad(format!("witness colors {actual} vertices, entry says {}", e.value)));
        }
        Ok(Some(AdversaryResult {
            value: e.value,
            witness,
            classes: 0,
            pruned: 0,
            certified: 0,
            palette,
            palette_limited: e.palette_limited,
        }))
    }

    pub fn put(&self, g: &Graph, t: usize, r: &AdversaryResult) -> Result<()> {
        let e = CacheEntry {
            version: SCHEMA_VERSION,
            graph: g.to_graph6(),
            t,
            palette: r.palette,
            value: r.value,
            palette_limited: r.palette_limited,
            lists: r.witness.masks().to_vec(),
        };
        let key = (e.graph.clone(), t, r.palette);
        let mut entries = self.entries.lock().unwrap();
        if entries.contains_key(&key) {
            return Ok(());
        }
        if let Some(f) = &self.file {
            let mut line = serde_json::to_string(&e).expect("cache entries serialize");
            line.push('\n');
            let mut f = f.lock().unwrap();
            f.write_all(line.as_bytes())?;
            f.flush()?;
        }
        entries.insert(key, e);
        Ok(())
    }

    /// λ_t from the cache, computing and recording it on a miss.
    pub fn lambda_t(&self, g: &Graph, t: usize, opts: &AdversaryOptions) -> Result<AdversaryResult> {
        if t > 0 {
            if let Some(hit) = self.get(g, t, effective_palette(g.n(), t, opts))? {
                self.hits.fetch_add(1, Ordering::Relaxed);
                return Ok(hit);
            }
            self.misses.fetch_add(1, Ordering::Relaxed);
        }
        let r = lambda_t(g, t, opts)?;
        if t > 0 {
            self.put(g, t, &r)?;
        }
        Ok(r)
    }

    pub fn table(&self, g: &Graph, opts: &AdversaryOptions, t_max: usize) -> Result<LambdaTable> {
        lambda_table_with(g, t_max, |g, t| self.lambda_t(g, t, opts))
    }
}

/// Subgraph tables for the checks, served from the shared cache.
struct CachedTables<'a> {
    cache: &'a ResultsCache,
    opts: AdversaryOptions,
    t_max: usize,
    memo: HashMap<String, LambdaTable>,
}

impl TableSource for CachedTables<'_> {
    fn table(&mut self, g: &Graph) -> Result<LambdaTable> {
        let key = g.to_graph6();
        if let Some(t) = self.memo.get(&key) {
            return Ok(t.clone());
        }
        let t = self.cache.table(g, &self.opts, self.t_max)?;
        self.memo.insert(key, t.clone());
        Ok(t)
    }
}

/// How a conjecture failure was confirmed independently.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DoubleCheck {
    pub method: String,
    pub confirmed: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub values: Vec<usize>,
}

/// Everything needed to reproduce a conjecture failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bundle {
    pub version: u32,
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub palette: Option<usize>,
    pub statement: String,
    pub params: Params,
    pub verdict: Verdict,
    pub table: LambdaTable,
    pub double_check: DoubleCheck,
}

fn conjecture_verdict(tab: &LambdaTable, statement: &str, params: &Params) -> Result<Verdict> {
    let all = match statement {
        "Conjecture1" => check_agh(tab),
        "Conjecture2" => check_conjecture2(tab),
        other => return Err(Error::InvalidArgument(format!("{other} is not a conjecture"))),
    };
    all.into_iter()
        .find(|v| v.params == *params)
        .ok_or_else(|| Error::InvalidArgument(format!("{statement} has no instance {params:?}")))
}

/// Raw enumeration visits C(n t, t)^n assignments; n = 5, t = 2 alone is
/// 45^5, far too many to wait for.
fn raw_oracle_feasible(n: usize, t: usize) -> bool {
    const BUDGET: f64 = 2e6;
    if n > 5 || t > 2 {
        return false;
    }
    let p = (n * t) as f64;
    let choices = if t == 1 { p } else { p * (p - 1.0) / 2.0 };
    choices.powi(n as i32) <= BUDGET
}

/// Recomputes the table of `g` without the search shortcuts (and by raw
/// enumeration where that is feasible), checks each stored witness with the
/// brute-force λ_L oracle where feasible, and re-evaluates the verdict.
pub fn double_check(g: &Graph, tab: &LambdaTable, verdict: &Verdict, palette: Option<usize>) -> Result<DoubleCheck> {
    let plain = AdversaryOptions { caps: Caps::unlimited(), palette, parallel: false, no_certificate: true };
    let mut raw = true;
    let mut witnesses_ok = true;
    let mut values = vec![0];
    for t in 1..=tab.chi_l {
        let v = if raw_oracle_feasible(g.n(), t) && palette.is_none() {
            lambda_t_oracle(g, t)?
        } else {
            raw = false;
            lambda_t(g, t, &plain)?.value
        };
        values.push(v);
        let w = &tab.witnesses[t];
        let lw = match lambda_of_assignment_oracle(g, w) {
            Ok(x) => x,
            Err(Error::TooLarge(_)) => lambda_of_assignment(g, w)?.value,
            Err(e) => return Err(e),
        };
        witnesses_ok &= lw == tab.values[t];
    }
    let method = if raw { "raw enumeration oracle" } else { "search without shortcuts" }.to_string();
    if !witnesses_ok || values != tab.values {
        return Ok(DoubleCheck { method, confirmed: false, values });
    }
    let again = conjecture_verdict(tab, &verdict.statement, &verdict.params)?;
    let confirmed = !again.holds && again.lhs == verdict.lhs && again.rhs == verdict.rhs;
    Ok(DoubleCheck { method, confirmed, values })
}

/// Recomputes the failing verdict of a bundle from the graph alone.
pub fn replay_bundle(b: &Bundle) -> Result<(Verdict, bool)> {
    let g = Graph::from_graph6(&b.graph)?;
    let opts = AdversaryOptions { caps: Caps::unlimited(), palette: b.palette, ..Default::default() };
    let tab = lambda_table_with(&g, usize::MAX, |g, t| lambda_t(g, t, &opts))?;
    let v = conjecture_verdict(&tab, &b.statement, &b.params)?;
    let reproduced = !v.holds && v.lhs == b.verdict.lhs && v.rhs == b.verdict.rhs;
    Ok((v, reproduced))
}

/// Outcome for one input graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphReport {
    pub index: usize,
    pub graph: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    /// Broken table invariants; any entry is a solver bug.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub table_violations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<ConjectureReport>,
}

impl GraphReport {
    pub fn bug_count(&self) -> usize {
        self.table_violations.len() + self.report.as_ref().map_or(0, |r| r.bugs().count())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunSummary {
    pub graphs: usize,
    pub completed: usize,
    pub errors: usize,
    pub verdicts: usize,
    pub held: usize,
    pub proved_failures: usize,
    pub counterexamples: usize,
    pub unconfirmed: usize,
}

/// Timing and cache counters; kept out of the JSON.
#[derive(Clone, Debug, Default)]
pub struct RunStats {
    pub elapsed: Duration,
    pub cache_hits: u64,
    pub cache_misses: u64,
    pub duplicates: usize,
    pub aborted: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RunReport {
    pub version: u32,
    pub notes: Vec<String>,
    pub summary: RunSummary,
    pub graphs: Vec<GraphReport>,
    pub counterexamples: Vec<Bundle>,
    #[serde(skip)]
    pub stats: RunStats,
}

impl RunReport {
    /// 0: everything consistent; 2: conjecture counterexample; 3: a proved
    /// statement failed or a counterexample did not survive re-checking.
    pub fn exit_code(&self) -> i32 {
        if self.summary.proved_failures > 0 || self.summary.unconfirmed > 0 {
            3
        } else if self.summary.counterexamples > 0 {
            2
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// One row per graph and statement; failed graphs get a single row.
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::Writer::from_writer(w);
        let csv_err = |e: csv::Error| Error::Io(e.to_string());
        out.write_record(["index", "graph", "status", "statement", "checked", "held", "failed", "error"])
            .map_err(csv_err)?;
        for g in &self.graphs {
            let idx = g.index.to_string();
            match &g.report {
                Some(r) if g.error.is_none() => {
                    for (stmt, tally) in &r.summary {
                        out.write_record([
                            idx.as_str(),
                            &g.graph,
                            "ok",
                            stmt,
                            &tally.checked.to_string(),
                            &tally.held.to_string(),
                            &tally.failed.to_string(),
                            "",
                        ])
                        .map_err(csv_err)?;
                    }
                }
                _ => {
                    let err = g.error.clone().unwrap_or_default();
                    out.write_record([idx.as_str(), &g.graph, "error", "", "", "", "", &err]).map_err(csv_err)?;
                }
            }
        }
        out.flush()?;
        Ok(())
    }

    pub fn write_outputs(&self, json: Option<&Path>, csv_path: Option<&Path>) -> Result<()> {
        if let Some(p) = json {
            std::fs::write(p, self.to_json()).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
        }
        if let Some(p) = csv_path {
            let f = File::create(p).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            self.write_csv(f)?;
        }
        Ok(())
    }
}

struct Worker<'a> {
    cfg: &'a RunConfig,
    checks: CheckConfig,
    opts: AdversaryOptions,
    cache: &'a ResultsCache,
    bundle_file: Option<&'a Mutex<File>>,
    stop: &'a AtomicBool,
}

enum Outcome {
    Done(Box<GraphReport>, Vec<Bundle>),
    Fatal(Error),
}

impl Worker<'_> {
    fn process(&self, index: usize, g: &Graph) -> Outcome {
        let mut entry = GraphReport {
            index,
            graph: g.to_graph6(),
            label: g.label().map(str::to_string),
            error: None,
            table_violations: Vec::new(),
            report: None,
        };
        if self.stop.load(Ordering::Relaxed) {
            entry.error = Some("not processed: run aborted".into());
            return Outcome::Done(Box::new(entry), Vec::new());
        }
        let fatal = |e: &Error| matches!(e, Error::Integrity(_) | Error::Io(_));
        let t_max = self.cfg.t_limit();
        let tab = match self.cache.table(g, &self.opts, t_max) {
            Ok(t) => t,
            Err(e) if fatal(&e) => return Outcome::Fatal(e),
            Err(e) => {
                entry.error = Some(e.to_string());
                return Outcome::Done(Box::new(entry), Vec::new());
            }
        };
        entry.table_violations = tab.invariant_violations();
        let mut sub = CachedTables {
            cache: self.cache,
            opts: AdversaryOptions { parallel: false, ..self.opts.clone() },
            t_max,
            memo: HashMap::new(),
        };
        let rep = match check_all(g, &tab, &self.checks, &mut sub) {
            Ok(r) => r,
            Err(e) if fatal(&e) => return Outcome::Fatal(e),
            Err(e) => {
                entry.error = Some(e.to_string());
                return Outcome::Done(Box::new(entry), Vec::new());
            }
        };
        let mut bundles = Vec::new();
        for v in rep.counterexamples() {
            let dc = match double_check(g, &tab, v, self.cfg.palette) {
                Ok(dc) => dc,
                Err(e) => return Outcome::Fatal(e),
            };
            let b = Bundle {
                version: SCHEMA_VERSION,
                graph: entry.graph.clone(),
                palette: self.cfg.palette,
                statement: v.statement.clone(),
                params: v.params.clone(),
                verdict: v.clone(),
                table: tab.clone(),
                double_check: dc,
            };
            if let Some(f) = self.bundle_file {
                let mut line = serde_json::to_string(&b).expect("bundles serialize");
                line.push('\n');
                let mut f = f.lock().unwrap();
                if let Err(e) = f.write_all(line.as_bytes()).and_then(|_| f.flush()) {
                    return Outcome::Fatal(e.into());
                }
            }
            bundles.push(b);
        }
        entry.report = Some(rep);
        if entry.bug_count() > 0 || bundles.iter().any(|b| !b.double_check.confirmed) {
            self.stop.store(true, Ordering::Relaxed);
        }
        Outcome::Done(Box::new(entry), bundles)
    }
}

fn run_graphs(cfg: &RunConfig, graphs: Vec<Graph>, checks: CheckConfig, duplicates: usize) -> Result<RunReport> {
    cfg.validate()?;
    let start = Instant::now();
    let cache = match &cfg.cache {
        Some(p) => ResultsCache::open(p)?,
        None => ResultsCache::in_memory(),
    };
    let bundle_file = match &cfg.bundles {
        Some(p) => Some(Mutex::new(OpenOptions::new().create(true).append(true).open(p)?)),
        None => None,
    };
    let stop = AtomicBool::new(false);
    let worker = Worker {
        cfg,
        checks,
        opts: AdversaryOptions {
            caps: cfg.caps,
            palette: cfg.palette,
            // a lone graph gets the whole pool inside the search instead
            parallel: graphs.len() == 1 && cfg.jobs > 1,
            no_certificate: false,
        },
        cache: &cache,
        bundle_file: bundle_file.as_ref(),
        stop: &stop,
    };
    let pool = rayon::ThreadPoolBuilder::new().num_threads(cfg.jobs).build().map_err(|e| Error::Io(e.to_string()))?;
    let outcomes: Vec<Outcome> =
        pool.install(|| graphs.par_iter().enumerate().map(|(i, g)| worker.process(i, g)).collect());
    let mut entries = Vec::with_capacity(outcomes.len());
    let mut bundles = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Fatal(e) => return Err(e),
            Outcome::Done(entry, b) => {
                entries.push(*entry);
                bundles.extend(b);
            }
        }
    }
    let mut summary = RunSummary { graphs: entries.len(), ..Default::default() };
    for e in &entries {
        if e.error.is_some() {
            summary.errors += 1;
        }
        summary.proved_failures += e.table_violations.len();
        if let Some(r) = &e.report {
            summary.completed += 1;
            summary.verdicts += r.verdicts.len();
            summary.held += r.verdicts.iter().filter(|v| v.holds).count();
            summary.proved_failures += r.bugs().count();
        }
    }
    summary.counterexamples = bundles.iter().filter(|b| b.double_check.confirmed).count();
    summary.unconfirmed = bundles.len() - summary.counterexamples;
    let report = RunReport {
        version: SCHEMA_VERSION,
        notes: NOTES.iter().map(|s| s.to_string()).collect(),
        summary,
        graphs: entries,
        counterexamples: bundles,
        stats: RunStats {
            elapsed: start.elapsed(),
            cache_hits: cache.hits(),
            cache_misses: cache.misses(),
            duplicates,
            aborted: stop.load(Ordering::Relaxed),
        },
    };
    report.write_outputs(cfg.out_json.as_deref(), cfg.out_csv.as_deref())?;
    Ok(report)
}

/// Tables and the full checklist for every input graph.
pub fn run_catalog(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let graphs = cfg.load_graphs()?;
    run_graphs(cfg, graphs, cfg.checks.clone(), 0)
}

/// The conjecture verdicts over the hunt's random graphs.
pub fn hunt_counterexamples(cfg: &RunConfig) -> Result<RunReport> {
    cfg.validate()?;
    let spec = cfg.hunt.as_ref().ok_or_else(|| Error::InvalidArgument("hunt needs a gnp specification".into()))?;
    let (graphs, dups) = hunt_graphs(spec)?;
    run_graphs(cfg, graphs, cfg.checks.clone().conjectures_only(), dups)
}

/// A cached minimizing assignment with a maximum coloring under it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessView {
    pub graph: String,
    pub t: usize,
    pub palette: usize,
    pub value: usize,
    pub assignment: ListAssignment,
    pub coloring: PartialColoring,
}

/// Looks up λ_t of `graph6` in the cache and validates what it finds.
pub fn show_witness(cache: &Path, graph6: &str, t: usize, palette: Option<usize>) -> Result<WitnessView> {
    if !cache.exists() {
        return Err(Error::CacheMiss(format!("{graph6} t = {t} (no cache at {})", cache.display())));
    }
    let g = Graph::from_graph6(graph6)?;
    let c = ResultsCache::open(cache)?;
    let opts = AdversaryOptions { palette, ..Default::default() };
    let p = effective_palette(g.n(), t, &opts);
    let hit = c.get(&g, t, p)?.ok_or_else(|| Error::CacheMiss(format!("{graph6} t = {t} palette {p}")))?;
    let coloring = lambda_of_assignment(&g, &hit.witness)?.witness;
    coloring.validate(&g, &hit.witness)?;
    if coloring.colored_count() != hit.value {
        return Err(Error::Integrity(format!("coloring of {graph6} does not reach {}", hit.value)));
    }
    Ok(WitnessView { graph: g.to_graph6(), t, palette: p, value: hit.value, assignment: hit.witness, coloring })
}
