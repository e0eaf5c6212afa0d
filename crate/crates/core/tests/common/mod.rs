#![allow(dead_code)]

use plcolor::{FamilySpec, Graph, ListAssignment};
use proptest::prelude::*;

pub fn fam(s: &str) -> Graph {
    s.parse::<FamilySpec>().unwrap().generate().unwrap()
}

pub fn data(name: &str) -> Vec<Graph> {
    let path = format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"));
    plcolor::graph::parse_graph6_lines(&std::fs::read_to_string(path).unwrap()).unwrap()
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut g = Graph::empty(n);
    let mut i = 0;
    for v in 1..n {
        for u in 0..v {
            if bits >> (i % 64) & 1 == 1 {
                g.add_edge(u, v);
            }
            i += 1;
        }
    }
    g
}

/// Graphs on `lo..=hi` vertices, any edge set.
pub fn arb_graph(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi, any::<u64>()).prop_map(|(n, bits)| graph_from_bits(n, bits))
}

/// A graph with lists of sizes in `1..=max_list` drawn from `0..palette`.
pub fn arb_graph_and_lists(
    lo: usize,
    hi: usize,
    max_list: usize,
    palette: usize,
) -> impl Strategy<Value = (Graph, ListAssignment)> {
    arb_graph(lo, hi).prop_flat_map(move |g| {
        let n = g.n();
        let list = proptest::sample::subsequence((0..palette as u32).collect::<Vec<_>>(), 1..=max_list);
        (Just(g), proptest::collection::vec(list, n)).prop_map(|(g, lists)| {
            let l = ListAssignment::from_color_lists(&g, &lists).unwrap();
            (g, l)
        })
    })
}

/// A graph with a t-uniform assignment over `0..palette`.
pub fn arb_uniform(lo: usize, hi: usize, t: usize, palette: usize) -> impl Strategy<Value = (Graph, Vec<u64>)> {
    arb_graph(lo, hi).prop_flat_map(move |g| {
        let n = g.n();
        let list = proptest::sample::subsequence((0..palette).collect::<Vec<_>>(), t)
            .prop_map(|cs| cs.iter().fold(0u64, |m, &c| m | 1 << c));
        (Just(g), proptest::collection::vec(list, n))
    })
}
