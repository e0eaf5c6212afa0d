mod common;

use common::*;
use plcolor::solver::{is_k_colorable, list_coloring};
use plcolor::{
    alon_tarsi_certifies, chromatic_number, combine_assignments, independence_number, is_list_colorable,
    is_sub_assignment, lambda_of_assignment, lambda_of_assignment_oracle, max_partial_constant, restrict_assignment,
    split_coloring, Graph, ListAssignment, VertexSet,
};
use proptest::prelude::*;

fn brute_alpha(g: &Graph) -> usize {
    (0u64..1 << g.n()).filter(|&m| g.is_independent(VertexSet(m))).map(|m| m.count_ones() as usize).max().unwrap()
}

fn brute_colorable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, v: usize, col: &mut Vec<usize>) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| !g.has_edge(u, v) || col[u] != c) {
                col[v] = c;
                if go(g, k, v + 1, col) {
                    return true;
                }
            }
        }
        false
    }
    go(g, k, 0, &mut vec![0; g.n()])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn lambda_matches_oracle((g, l) in arb_graph_and_lists(1, 7, 3, 6)) {
        let fast = lambda_of_assignment(&g, &l).unwrap();
        prop_assert_eq!(fast.value, lambda_of_assignment_oracle(&g, &l).unwrap());
        fast.witness.validate(&g, &l).unwrap();
        prop_assert_eq!(fast.witness.colored_count(), fast.value);
    }

    #[test]
    fn list_colorability_is_lambda_equals_n((g, l) in arb_graph_and_lists(1, 8, 3, 5)) {
        let full = lambda_of_assignment(&g, &l).unwrap().value == g.n();
        prop_assert_eq!(is_list_colorable(&g, &l).unwrap(), full);
        if let Some(c) = list_coloring(&g, &l).unwrap() {
            c.validate(&g, &l).unwrap();
            prop_assert_eq!(c.colored_count(), g.n());
        }
    }

    #[test]
    fn larger_lists_never_hurt((g, l) in arb_graph_and_lists(1, 8, 3, 6), extra in any::<u64>()) {
        let mut lists = l.masks().to_vec();
        for (v, m) in lists.iter_mut().enumerate() {
            *m |= (extra >> (v * 6)) & 0b11_1111 & !(1 << 6);
        }
        let bigger = ListAssignment::new(&g, lists, 6.max(l.palette())).unwrap();
        prop_assert!(is_sub_assignment(&l, &bigger).unwrap());
        prop_assert!(lambda_of_assignment(&g, &l).unwrap().value <= lambda_of_assignment(&g, &bigger).unwrap().value);
    }

    #[test]
    fn restriction_cannot_gain((g, l) in arb_graph_and_lists(1, 8, 3, 6), mask in any::<u64>()) {
        let s = VertexSet(mask & VertexSet::full(g.n()).0);
        prop_assume!(!s.is_empty());
        let (h, lh, _) = restrict_assignment(&g, &l, s).unwrap();
        prop_assert!(lambda_of_assignment(&g, &l).unwrap().value >= lambda_of_assignment(&h, &lh).unwrap().value);
    }

    #[test]
    fn classic_invariants(g in arb_graph(1, 7)) {
        prop_assert_eq!(independence_number(&g), brute_alpha(&g));
        let chi = chromatic_number(&g);
        prop_assert!(brute_colorable(&g, chi));
        prop_assert!(chi == 1 || !brute_colorable(&g, chi - 1));
        prop_assert_eq!(is_k_colorable(&g, chi), true);
        prop_assert_eq!(max_partial_constant(&g, 1).value, brute_alpha(&g));
        for s in 1..=g.n() {
            let r = max_partial_constant(&g, s);
            prop_assert_eq!(r.value == g.n(), s >= chi);
            prop_assert!(r.witness.is_proper(&g));
            prop_assert!(r.witness.colors().iter().flatten().all(|&c| (c as usize) < s));
        }
    }

    #[test]
    fn combined_coloring_splits_into_both_parts(
        (g, l1) in arb_uniform(1, 5, 2, 4),
        l2 in proptest::collection::vec(proptest::sample::subsequence((0..3usize).collect::<Vec<_>>(), 1), 5),
    ) {
        let l1 = ListAssignment::new(&g, l1, 4).unwrap();
        let l2 = ListAssignment::new(&g, l2[..g.n()].iter().map(|c| 1u64 << c[0]).collect(), 3).unwrap();
        let comb = combine_assignments(&l1, &l2).unwrap();
        prop_assert_eq!(comb.assignment.uniform_size(), Some(3));
        let best = lambda_of_assignment(&g, &comb.assignment).unwrap();
        let (r, s) = split_coloring(&l1, &l2, &best.witness).unwrap();
        prop_assert_eq!(r.len() + s.len(), best.value);
        prop_assert!((r & s).is_empty());
        prop_assert!(r.len() <= lambda_of_assignment(&g, &l1).unwrap().value);
        prop_assert!(s.len() <= lambda_of_assignment(&g, &l2).unwrap().value);
    }

    #[test]
    fn alon_tarsi_certificates_are_sound((g, lists) in arb_uniform(1, 6, 2, 5)) {
        if alon_tarsi_certifies(&g, g.vertices().0, 2) {
            let l = ListAssignment::new(&g, lists, 5).unwrap();
            prop_assert!(is_list_colorable(&g, &l).unwrap());
        }
    }
}

#[test]
fn oracle_guards() {
    let g = fam("path:9");
    let l = ListAssignment::constant(&g, 2).unwrap();
    assert!(lambda_of_assignment_oracle(&g, &l).is_err());
    assert_eq!(lambda_of_assignment(&g, &l).unwrap().value, 9);
}

#[test]
fn assignment_json_shape() {
    let g = fam("cycle:4");
    let l = ListAssignment::constant(&g, 2).unwrap();
    let json = serde_json::to_string(&l).unwrap();
    assert_eq!(json, r#"{"graph":"Cl","lists":[[0,1],[0,1],[0,1],[0,1]]}"#);
    let back: ListAssignment = serde_json::from_str(&json).unwrap();
    assert_eq!(back, l);
    assert!(serde_json::from_str::<ListAssignment>(r#"{"graph":"Cl","lists":[[0],[1]]}"#).is_err());
}

#[test]
fn mismatched_graph_is_rejected() {
    let l = ListAssignment::constant(&fam("cycle:4"), 2).unwrap();
    assert!(lambda_of_assignment(&fam("path:4"), &l).is_err());
}
