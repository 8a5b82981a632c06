mod common;

use ctswap::neighborhood::degree_upper_bound;
use ctswap::oracle::{oracle_neighbors, oracle_search};
use ctswap::pd::{adjust_pd, PdStream};
use ctswap::{forward_pd, search_ac, search_pd, tree_to_pd, CartesianTree, PdAutomaton, SearchOptions, Sequence};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn language_is_the_swap_class() {
    for m in 1..=8 {
        let trees = CartesianTree::enumerate(m);
        let tables: Vec<_> = trees.iter().map(tree_to_pd).collect();
        for (t, base) in trees.iter().zip(&tables) {
            let a = PdAutomaton::for_pattern(&ctswap::neighborhood::canonical_keys(t), false).unwrap();
            let ng = oracle_neighbors(t).unwrap();
            for table in &tables {
                assert_eq!(a.accepts(table), table == base || ng.contains(table), "{t:?} {table}");
            }
            assert!(a.state_count() <= 1 + m * (1 + degree_upper_bound(m)));
        }
    }
}

#[test]
fn methods_agree() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for round in 0..1000 {
        let m = rng.gen_range(1..=10);
        let n = rng.gen_range(m..=300);
        let (p, t) = if round % 2 == 0 {
            (common::random_permutation(&mut rng, m), common::random_permutation(&mut rng, n))
        } else {
            (common::random_floats(&mut rng, m), common::random_floats(&mut rng, n))
        };
        let expected = oracle_search(&p, &t, false).unwrap();
        let (ps, ts) = (Sequence::new(p).unwrap(), Sequence::new(t).unwrap());
        let ac = search_ac(&ps, &ts, &SearchOptions::default()).unwrap();
        let pd = search_pd(&ps, &ts, &SearchOptions::default()).unwrap();
        let ac_pos: Vec<usize> = ac.matches.iter().map(|r| r.position).collect();
        assert_eq!(ac_pos, expected);
        assert_eq!(ac.matches, pd.matches);
    }
}

#[test]
fn adjusted_symbols_follow_window_tables() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for _ in 0..200 {
        let t = common::random_floats(&mut rng, 120);
        let m = rng.gen_range(1..=12);
        let j = rng.gen_range(0..=t.len() - m);
        let global: Vec<usize> = PdStream::new(&t).map(|(_, d)| d).collect();
        let fed: Vec<usize> = (0..m).map(|k| adjust_pd(global[j + k], k)).collect();
        assert_eq!(fed, forward_pd(&t[j..j + m]).to_vec());
        // the window's own table as a one-pattern automaton finds it at j
        let a = PdAutomaton::build(&[forward_pd(&t[j..j + m])]).unwrap();
        assert!(a.scan(&t).iter().any(|h| h.position == j + 1));
    }
}

#[test]
fn json_round_trip_preserves_scans() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let p = common::random_permutation(&mut rng, 7);
    let t = common::random_floats(&mut rng, 500);
    let a = PdAutomaton::for_pattern(&p, false).unwrap();
    let b = PdAutomaton::from_json(&a.to_json().unwrap()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.scan(&t), b.scan(&t));
}
