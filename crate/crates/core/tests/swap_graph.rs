use ctswap::neighborhood::{complete_tree_count, degree_lower_bound, degree_upper_bound};
use ctswap::{tree_to_pd, CartesianTree, SwapGraph};

#[test]
fn handshake_symmetry_and_bounds() {
    for n in 1..=8 {
        let g = SwapGraph::build(n).unwrap();
        let total: usize = (0..g.vertex_count()).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.edge_count());
        assert!(g.is_symmetric());
        let over = (0..g.vertex_count()).filter(|&v| g.degree(v) > degree_upper_bound(n)).count();
        assert_eq!(over, if n == 7 { 2 } else { 0 }, "n = {n}");
        for v in 0..g.vertex_count() {
            assert!(degree_lower_bound(n) <= g.degree(v));
        }
    }
}

#[test]
fn complete_tree_degrees() {
    for h in 1..=2u32 {
        let t = CartesianTree::complete(h);
        let g = SwapGraph::build(t.len()).unwrap();
        let v = g.index_of(&tree_to_pd(&t)).unwrap();
        assert_eq!(g.degree(v), complete_tree_count(h));
    }
}

#[test]
fn small_diameters() {
    for n in 3..=7 {
        let g = SwapGraph::build(n).unwrap();
        let stats = g.stats();
        assert!(stats.connected);
        assert!(stats.diameter as f64 >= stats.diameter_lower_bound, "{n}: {stats:?}");
    }
}
