use std::collections::BTreeSet;

use ctswap::neighborhood::{
    complete_tree_count, count_neighbors_formula, degree_lower_bound, degree_upper_bound, enumerate_neighbors,
};
use ctswap::oracle::oracle_neighbors;
use ctswap::{neighborhood, pd_to_tree, CartesianTree};

#[test]
fn formula_counts_enumeration() {
    for n in 1..=8 {
        for t in CartesianTree::enumerate(n) {
            assert_eq!(count_neighbors_formula(&t), neighborhood(&t).len(), "{t:?}");
        }
    }
}

#[test]
fn enumeration_equals_brute_force() {
    for n in 1..=8 {
        for t in CartesianTree::enumerate(n) {
            let brute: BTreeSet<_> = oracle_neighbors(&t).unwrap();
            assert_eq!(neighborhood(&t).neighbors, brute, "{t:?}");
        }
    }
}

#[test]
fn complete_trees() {
    for h in 1..=4u32 {
        let t = CartesianTree::complete(h);
        let count = neighborhood(&t).len();
        assert_eq!(count, complete_tree_count(h));
        assert_eq!(count, degree_upper_bound(t.len()));
    }
}

#[test]
fn degree_bounds() {
    for n in 1..=8 {
        let mut over = Vec::new();
        for t in CartesianTree::enumerate(n) {
            let d = neighborhood(&t).len();
            assert!(degree_lower_bound(n) <= d, "{t:?} {d}");
            if d > degree_upper_bound(n) {
                over.push((format!("{t:?}"), d));
            }
        }
        // complete trees are not the maximum at n = 7
        let expected: Vec<(String, usize)> = if n == 7 {
            vec![("(2 1 (6 (4 3 5) 7))".into(), 15), ("(6 (2 1 (4 3 5)) 7)".into(), 15)]
        } else {
            Vec::new()
        };
        assert_eq!(over, expected, "n = {n}");
    }
}

#[test]
fn positions_are_disjoint() {
    for n in 2..=8 {
        for t in CartesianTree::enumerate(n) {
            let set = neighborhood(&t);
            let mut seen = BTreeSet::new();
            for (_, tables) in &set.per_position {
                for table in tables {
                    assert!(seen.insert(table.clone()), "{t:?}");
                }
            }
        }
    }
}

#[test]
fn per_position_relation_is_symmetric() {
    for n in 2..=7 {
        for t in CartesianTree::enumerate(n) {
            let base = ctswap::tree_to_pd(&t);
            for i in 1..n {
                for table in enumerate_neighbors(&t, i).unwrap() {
                    let other = pd_to_tree(&table).unwrap();
                    assert!(enumerate_neighbors(&other, i).unwrap().contains(&base), "{t:?} {i}");
                }
            }
        }
    }
}
