mod common;

use std::fs;

use common::*;
use plcolor::checks::{check_agh, CheckConfig};
use plcolor::lab::{
    double_check, hunt_counterexamples, hunt_graphs, replay_bundle, run_catalog, show_witness, Bundle, DoubleCheck,
    HuntSpec, InputSource, ResultsCache, RunConfig, SCHEMA_VERSION,
};
use plcolor::{lambda_table, AdversaryOptions, Error, FamilySpec, Graph};

fn family(s: &str) -> InputSource {
    InputSource::Family(s.parse::<FamilySpec>().unwrap())
}

fn catalog() -> RunConfig {
    RunConfig {
        inputs: vec![family("complete:3"), family("cycle:5"), family("bipartite:2,4"), family("petersen")],
        ..Default::default()
    }
}

#[test]
fn warm_cache_reproduces_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = RunConfig { cache: Some(dir.path().join("cache.jsonl")), ..catalog() };
    let cold = run_catalog(&cfg).unwrap();
    assert!(cold.stats.cache_misses > 0);
    let warm = run_catalog(&cfg).unwrap();
    assert_eq!(warm.stats.cache_misses, 0);
    assert!(warm.stats.cache_hits > 0);
    assert_eq!(cold.to_json(), warm.to_json());
    // petersen has chi_l = 3 but 10 vertices; it must still run within caps
    assert_eq!(cold.summary.errors, 0, "{}", cold.to_json());
    assert_eq!(cold.exit_code(), 0);
}

#[test]
fn complete_graphs_are_tight() {
    let cfg = RunConfig { inputs: (1..=4).map(|n| family(&format!("complete:{n}"))).collect(), ..Default::default() };
    let rep = run_catalog(&cfg).unwrap();
    for g in &rep.graphs {
        let r = g.report.as_ref().unwrap();
        assert_eq!(r.table.values, (0..=r.table.n).collect::<Vec<_>>());
        for v in r.verdicts.iter().filter(|v| v.statement == "Conjecture1") {
            assert!(v.holds && v.lhs == v.rhs);
        }
    }
    let single = run_catalog(&RunConfig { inputs: vec![family("complete:1")], ..Default::default() }).unwrap();
    assert_eq!(single.graphs[0].report.as_ref().unwrap().table.values, vec![0, 1]);
}

#[test]
fn tampered_cache_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    let cfg = RunConfig { cache: Some(path.clone()), inputs: vec![family("complete:3")], ..Default::default() };
    run_catalog(&cfg).unwrap();
    let text = fs::read_to_string(&path).unwrap();
    let tampered = text.replacen("\"value\":2", "\"value\":1", 1);
    assert_ne!(text, tampered);
    fs::write(&path, tampered).unwrap();
    assert!(matches!(run_catalog(&cfg), Err(Error::Integrity(_))));
    assert!(matches!(show_witness(&path, "Bw", 2, None), Err(Error::Integrity(_))));

    fs::write(&path, format!("{text}{}", text.lines().next().unwrap().replace("\"value\":", "\"value\":9"))).unwrap();
    assert!(matches!(ResultsCache::open(&path), Err(Error::Integrity(_))));
    fs::write(&path, "not json\n").unwrap();
    assert!(matches!(ResultsCache::open(&path), Err(Error::Integrity(_))));
}

#[test]
fn witness_for_triangle() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cache.jsonl");
    assert!(matches!(show_witness(&path, "Bw", 2, None), Err(Error::CacheMiss(_))));
    run_catalog(&RunConfig { cache: Some(path.clone()), inputs: vec![family("complete:3")], ..Default::default() })
        .unwrap();
    let w = show_witness(&path, "Bw", 2, None).unwrap();
    assert_eq!(w.value, 2);
    assert!(w.assignment.masks().iter().all(|&m| m == 0b11));
    assert_eq!(w.coloring.colored_count(), 2);
    let full = show_witness(&path, "Bw", 3, None).unwrap();
    assert_eq!(full.coloring.colored_count(), 3);
    assert!(matches!(show_witness(&path, "Bw", 7, None), Err(Error::CacheMiss(_))));
}

#[test]
fn results_do_not_depend_on_jobs() {
    let mut inputs = vec![InputSource::Graphs(data("atlas_n1_5.g6"))];
    inputs.push(family("prism:3"));
    let one = run_catalog(&RunConfig { inputs: inputs.clone(), jobs: 1, ..Default::default() }).unwrap();
    let four = run_catalog(&RunConfig { inputs, jobs: 4, ..Default::default() }).unwrap();
    assert_eq!(one.to_json(), four.to_json());
    let mut a = Vec::new();
    let mut b = Vec::new();
    one.write_csv(&mut a).unwrap();
    four.write_csv(&mut b).unwrap();
    assert_eq!(a, b);
    let csv = String::from_utf8(a).unwrap();
    assert!(csv.starts_with("index,graph,status,statement,checked,held,failed,error\n"));
    assert!(csv.lines().count() > 53);
}

#[test]
fn single_graph_uses_parallel_search() {
    let cfg = |jobs| RunConfig { inputs: vec![family("bipartite:3,3")], jobs, ..Default::default() };
    assert_eq!(run_catalog(&cfg(1)).unwrap().to_json(), run_catalog(&cfg(4)).unwrap().to_json());
}

#[test]
fn edge_list_and_graph6_inputs_agree() {
    let dir = tempfile::tempdir().unwrap();
    let edges = dir.path().join("c5.txt");
    fs::write(&edges, "5\n0 1\n1 2\n2 3\n3 4\n4 0\n").unwrap();
    let g6 = dir.path().join("c5.g6");
    fs::write(&g6, "Dhc\n").unwrap();
    let a = run_catalog(&RunConfig { inputs: vec![InputSource::EdgeListFile(edges)], ..Default::default() }).unwrap();
    let b = run_catalog(&RunConfig { inputs: vec![InputSource::Graph6File(g6)], ..Default::default() }).unwrap();
    let reports = |r: &plcolor::lab::RunReport| serde_json::to_string(&r.graphs[0].report).unwrap();
    assert_eq!(reports(&a), reports(&b));
    let missing = RunConfig { inputs: vec![InputSource::Graph6File(dir.path().join("nope"))], ..Default::default() };
    assert!(matches!(run_catalog(&missing), Err(Error::Io(_))));
}

#[test]
fn hunts_are_reproducible() {
    let spec = HuntSpec { n_min: 5, n_max: 5, p_num: 1, p_den: 2, count: 10, seed: 17 };
    let (a, _) = hunt_graphs(&spec).unwrap();
    let (b, _) = hunt_graphs(&spec).unwrap();
    assert_eq!(a.iter().map(Graph::to_graph6).collect::<Vec<_>>(), b.iter().map(Graph::to_graph6).collect::<Vec<_>>());
    let dir = tempfile::tempdir().unwrap();
    let bundles = dir.path().join("bundles.jsonl");
    let cfg = RunConfig { hunt: Some(spec.clone()), bundles: Some(bundles.clone()), ..Default::default() };
    let rep = hunt_counterexamples(&cfg).unwrap();
    assert_eq!(rep.counterexamples.len(), 0);
    assert!(rep
        .graphs
        .iter()
        .flat_map(|g| &g.report)
        .flat_map(|r| &r.verdicts)
        .all(|v| v.statement.starts_with("Conjecture")));
    assert_eq!(rep.to_json(), hunt_counterexamples(&cfg).unwrap().to_json());
    let empty = RunConfig { hunt: Some(HuntSpec { count: 0, ..spec }), ..Default::default() };
    assert_eq!(hunt_counterexamples(&empty).unwrap().summary.graphs, 0);
}

#[test]
fn fabricated_counterexamples_are_not_confirmed() {
    let g = fam("cycle:5");
    let mut tab = lambda_table(&g, &AdversaryOptions::default()).unwrap();
    tab.values[2] = 3; // 3 * 3 < 2 * 5
    let verdict = check_agh(&tab).into_iter().find(|v| !v.holds).unwrap();
    let dc = double_check(&g, &tab, &verdict, None).unwrap();
    assert!(!dc.confirmed);
    assert_eq!(dc.values, vec![0, 2, 4, 5]);
    let bundle = Bundle {
        version: SCHEMA_VERSION,
        graph: g.to_graph6(),
        palette: None,
        statement: verdict.statement.clone(),
        params: verdict.params.clone(),
        verdict: verdict.clone(),
        table: tab,
        double_check: DoubleCheck { method: dc.method, confirmed: false, values: dc.values },
    };
    let json = serde_json::to_string(&bundle).unwrap();
    let back: Bundle = serde_json::from_str(&json).unwrap();
    let (again, reproduced) = replay_bundle(&back).unwrap();
    assert!(again.holds);
    assert!(!reproduced);
}

#[test]
fn statement_filter_and_caps() {
    let cfg = RunConfig {
        inputs: vec![family("complete:5"), family("cycle:4")],
        checks: CheckConfig { statements: Some(vec!["Theorem2".into()]), ..Default::default() },
        ..Default::default()
    };
    let rep = run_catalog(&cfg).unwrap();
    assert!(rep.graphs[0].error.is_some(), "K5 needs t = 5 > 4");
    let r = rep.graphs[1].report.as_ref().unwrap();
    assert!(r.verdicts.iter().all(|v| v.statement == "Theorem2"));
    assert_eq!(rep.exit_code(), 0);
}
