mod common;

use common::NaiveChecker;
use halin_star::verify::{find_all_violations, violates_at};
use halin_star::{find_violation, EdgeColoring, Graph, ViolationKind};
use proptest::prelude::*;

/// A simple graph on at most 8 vertices with at most 14 edges.
fn small_graph() -> impl Strategy<Value = Graph> {
    (3usize..=8).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        proptest::sample::subsequence(pairs.clone(), 0..=pairs.len().min(14))
            .prop_map(move |edges| Graph::from_edges(n, &edges).unwrap())
    })
}

fn graph_and_coloring() -> impl Strategy<Value = (Graph, EdgeColoring)> {
    small_graph().prop_flat_map(|g| {
        let m = g.edge_count();
        (Just(g), proptest::collection::vec(proptest::option::weighted(0.85, 1u32..=4), m))
            .prop_map(|(g, colors)| (g, EdgeColoring::from_assignment(colors, 4)))
    })
}

/// Unassigns the later edge of every conflicting adjacent pair.
fn make_proper(g: &Graph, c: &mut EdgeColoring) {
    for e in 0..g.edge_count() {
        if c.get(e).is_some() && g.adjacent_edges(e).any(|f| f < e && c.get(f) == c.get(e)) {
            c.clear(e);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn verdict_matches_subset_enumeration((g, c) in graph_and_coloring()) {
        let naive = NaiveChecker::new(&g);
        prop_assert_eq!(find_violation(&g, &c).unwrap().is_none(), naive.is_star(c.assignment()));
    }

    #[test]
    fn bicolored_counts_match_on_proper_colorings((g, mut c) in graph_and_coloring()) {
        make_proper(&g, &mut c);
        let naive = NaiveChecker::new(&g);
        prop_assert!(naive.proper(c.assignment()));
        let all = find_all_violations(&g, &c).unwrap();
        prop_assert!(all.iter().all(|v| v.kind != ViolationKind::AdjacentSameColor));
        prop_assert_eq!(all.len(), naive.bicolored_count(c.assignment()));
    }

    #[test]
    fn incremental_check_agrees((g, mut c) in graph_and_coloring(), pick in any::<prop::sample::Index>(), color in 1u32..=4) {
        prop_assume!(g.edge_count() > 0);
        make_proper(&g, &mut c);
        let e = pick.index(g.edge_count());
        c.set(e, color);
        let all = find_all_violations(&g, &c).unwrap();
        let involved = all.iter().any(|v| v.edges.contains(&e));
        prop_assert_eq!(violates_at(&g, &c, e), involved);
    }
}

#[test]
fn unassigned_edges_never_violate() {
    let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
    let c = EdgeColoring::from_assignment(vec![Some(1), Some(2), None, Some(2)], 2);
    assert!(find_violation(&g, &c).unwrap().is_none());
    assert!(NaiveChecker::new(&g).is_star(c.assignment()));
}
