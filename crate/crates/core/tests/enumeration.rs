mod common;

use std::collections::BTreeSet;

use common::{cubic_tree_count, double_bfs_diameter, oracle_canonical};
use halin_star::format::write_tree;
use halin_star::gen::{enumerate_small_cubic_halin, generate, Family, GenSpec};
use halin_star::{build_halin, longest_tree_path};
use proptest::prelude::*;

#[test]
fn cubic_counts_match_binary_tree_oracle() {
    let trees = enumerate_small_cubic_halin(8);
    for leaves in 3..=8 {
        let found = trees.iter().filter(|t| t.leaves().len() == leaves).count();
        assert_eq!(found, cubic_tree_count(leaves), "{leaves} leaves");
    }
    assert_eq!(trees.len(), (3..=8).map(cubic_tree_count).sum::<usize>());
}

#[test]
fn enumerated_trees_are_distinct_cubic_halin_trees() {
    let trees = enumerate_small_cubic_halin(10);
    let codes: BTreeSet<Vec<u8>> = trees.iter().map(oracle_canonical).collect();
    assert_eq!(codes.len(), trees.len());
    for t in trees {
        assert!(build_halin(t).unwrap().is_cubic());
    }
}

#[test]
fn smallest_enumerations() {
    assert_eq!(enumerate_small_cubic_halin(3).len(), 1);
    let four = enumerate_small_cubic_halin(4);
    assert_eq!(four.len(), 2);
    let prism = generate(&GenSpec::new(Family::EllThreeCubic, 0, 0, 0)).unwrap();
    assert!(four.iter().any(|t| oracle_canonical(t) == oracle_canonical(&prism)));
}

#[test]
fn general_oracle_agrees_on_cubic_trees() {
    // a cubic Halin graph with L leaves has 3L - 3 edges
    let cubic_by_oracle = common::small_halin_trees(3, 3 * 7 - 3);
    let by_library = enumerate_small_cubic_halin(7);
    let a: BTreeSet<Vec<u8>> = cubic_by_oracle.iter().map(oracle_canonical).collect();
    let b: BTreeSet<Vec<u8>> = by_library.iter().map(oracle_canonical).collect();
    assert_eq!(a, b);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn longest_path_has_diameter_length(n in 1usize..30, seed in any::<u64>(), delta in 4usize..9, cubic in any::<bool>()) {
        let spec = if cubic {
            GenSpec::new(Family::CubicRandom, n, 0, seed)
        } else {
            GenSpec::new(Family::BoundedDeltaRandom, n + 10, delta, seed)
        };
        let g = build_halin(generate(&spec).unwrap()).unwrap();
        let path = longest_tree_path(&g);
        prop_assert_eq!(path.len() - 1, double_bfs_diameter(&g));
        for w in path.windows(2) {
            prop_assert!(g.tree_incident(w[0]).any(|(x, _)| x == w[1]));
        }
        let distinct: BTreeSet<_> = path.iter().collect();
        prop_assert_eq!(distinct.len(), path.len());
    }

    #[test]
    fn generation_is_deterministic(n in 1usize..30, seed in any::<u64>(), delta in 4usize..9) {
        for spec in [GenSpec::new(Family::CubicRandom, n, 0, seed), GenSpec::new(Family::BoundedDeltaRandom, n + 10, delta, seed)] {
            let a = write_tree(&generate(&spec).unwrap());
            let b = write_tree(&generate(&spec).unwrap());
            prop_assert_eq!(a, b);
        }
    }

    #[test]
    fn generated_degrees(n in 1usize..30, seed in any::<u64>(), delta in 4usize..9) {
        let cubic = build_halin(generate(&GenSpec::new(Family::CubicRandom, n, 0, seed)).unwrap()).unwrap();
        prop_assert!(cubic.is_cubic());
        prop_assert_eq!(cubic.tree().internal_vertices().len(), n);
        let t = generate(&GenSpec::new(Family::BoundedDeltaRandom, 40, delta, seed)).unwrap();
        prop_assert!(t.vertex_count() <= 40);
        prop_assert_eq!(build_halin(t).unwrap().max_degree(), delta);
    }
}
