//! Trees one swap away from a given tree.
//!
//! A swap at `i` only reshapes the subtree whose root is the smaller of the
//! two swapped keys. If `i` is that root (`x[i] < x[i+1]`), the key at `i+1`
//! (leftmost node of the right subtree) moves to the end of the left subtree
//! and settles somewhere along that subtree's right branch. Otherwise `i+1`
//! is the root and the key at `i` lands on the left branch of the right
//! subtree. Every depth on the receiving branch is reachable, so the count at
//! `i` is the branch length plus one.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::pd::{forward_pd, tree_to_pd, PdTable};
use crate::tree::CartesianTree;

/// The neighborhood `ng(T)` of a tree, split by swap position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborSet {
    /// Forward table of the tree itself.
    pub base: PdTable,
    pub neighbors: BTreeSet<PdTable>,
    /// `(i, tables reachable by a swap at i)` for `i = 1..n-1`.
    pub per_position: Vec<(usize, Vec<PdTable>)>,
}

impl NeighborSet {
    pub fn len(&self) -> usize {
        self.neighbors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.neighbors.is_empty()
    }

    pub fn contains(&self, table: &PdTable) -> bool {
        self.neighbors.contains(table)
    }

    /// The base table followed by every neighbor, as fed to the automaton.
    pub fn with_base(&self) -> Vec<PdTable> {
        std::iter::once(self.base.clone()).chain(self.neighbors.iter().cloned()).collect()
    }
}

/// Keys that realize `tree`: labels `1..=n` handed out in pre-order, so each
/// node is smaller than its descendants, read back by position.
pub fn canonical_keys(tree: &CartesianTree) -> Vec<u64> {
    let mut keys = vec![0; tree.len()];
    for (label, pos) in tree.pre_order().into_iter().enumerate() {
        keys[pos - 1] = label as u64 + 1;
    }
    keys
}

/// `ng(T, i)`: forward tables of every tree reachable by a swap at `i` from
/// some sequence realizing `tree`.
pub fn enumerate_neighbors(tree: &CartesianTree, i: usize) -> Result<Vec<PdTable>> {
    let n = tree.len();
    if i == 0 || i >= n {
        return Err(Error::PositionOutOfRange { position: i, len: n });
    }
    let keys = canonical_keys(tree);
    let lesser = keys[i - 1] < keys[i];
    // root of the affected subtree, receiving branch, moved key's new position
    let (root, branch, moved_to): (usize, Vec<usize>, usize) = if lesser {
        (i, tree.right_branch(tree.left(i)).collect(), i)
    } else {
        (i + 1, tree.left_branch(tree.right(i + 1)).collect(), i + 1)
    };

    // doubled keys leave the odd values free for the moved key
    let mut work: Vec<u64> = keys.iter().map(|k| 2 * k).collect();
    work.swap(i - 1, i);
    let mut out = Vec::with_capacity(branch.len() + 1);
    // the moved key sits just above `lower`: depth 0 above the subtree root,
    // depth d above the d-th branch node
    for depth in 0..=branch.len() {
        let lower = if depth == 0 { root } else { branch[depth - 1] };
        work[moved_to - 1] = 2 * keys[lower - 1] + 1;
        out.push(forward_pd(&work));
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// `ng(T)` as the union of `ng(T, i)` over all positions.
pub fn neighborhood(tree: &CartesianTree) -> NeighborSet {
    let n = tree.len();
    let mut neighbors = BTreeSet::new();
    let mut per_position = Vec::with_capacity(n.saturating_sub(1));
    for i in 1..n {
        let tables = enumerate_neighbors(tree, i).unwrap_or_default();
        neighbors.extend(tables.iter().cloned());
        per_position.push((i, tables));
    }
    NeighborSet { base: tree_to_pd(tree), neighbors, per_position }
}

/// `|ng(T)|` from branch lengths alone:
/// `|ng(T)| = |ng(A)| + |ng(B)| + |ng(T, k-1)| + |ng(T, k)|`, where `k` is
/// the root, `|ng(T, k-1)| = lbl(B) + 1` and `|ng(T, k)| = lbr(A) + 1` when
/// the corresponding subtree is nonempty.
pub fn count_neighbors_formula(tree: &CartesianTree) -> usize {
    fn count(tree: &CartesianTree, node: Option<usize>) -> usize {
        let Some(root) = node else {
            return 0;
        };
        let (a, b) = (tree.left(root), tree.right(root));
        let mut total = count(tree, a) + count(tree, b);
        if a.is_some() {
            total += tree.left_branch_len(b) + 1;
        }
        if b.is_some() {
            total += tree.right_branch_len(a) + 1;
        }
        total
    }
    count(tree, tree.root())
}

/// Minimum degree in the swap graph: one distinct tree per swap position.
pub fn degree_lower_bound(n: usize) -> usize {
    n.saturating_sub(1)
}

/// `⌈3(n-1) - 2(log2(n+1) - 1)⌉`, the maximum degree, attained by complete
/// trees.
pub fn degree_upper_bound(n: usize) -> usize {
    if n == 0 {
        return 0;
    }
    let v = 3.0 * (n as f64 - 1.0) - 2.0 * (((n + 1) as f64).log2() - 1.0);
    // log2 is exact on powers of two; elsewhere the value is irrational
    (v - 1e-9).ceil().max(0.0) as usize
}

/// `|ng(T_h)| = 6(2^h - 1) - 2h` for the complete tree of height `h`.
pub fn complete_tree_count(h: u32) -> usize {
    6 * ((1usize << h) - 1) - 2 * h as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pd(values: &[usize]) -> PdTable {
        PdTable::forward(values.to_vec()).unwrap()
    }

    #[test]
    fn canonical_examples() {
        assert_eq!(canonical_keys(&CartesianTree::build(&[5])), vec![1]);
        assert_eq!(canonical_keys(&CartesianTree::build(&[2, 1, 3])), vec![2, 1, 3]);
        assert_eq!(canonical_keys(&CartesianTree::right_comb(3)), vec![1, 2, 3]);
        for t in CartesianTree::enumerate(6) {
            assert_eq!(CartesianTree::build(&canonical_keys(&t)), t);
        }
    }

    #[test]
    fn per_position_examples() {
        let balanced = CartesianTree::build(&[2, 1, 3]);
        assert_eq!(enumerate_neighbors(&balanced, 1).unwrap(), vec![pd(&[0, 1, 1]), pd(&[0, 1, 2])]);

        let comb = CartesianTree::right_comb(3);
        assert_eq!(enumerate_neighbors(&comb, 1).unwrap(), vec![pd(&[0, 0, 1])]);

        let edge = CartesianTree::right_comb(2);
        assert_eq!(enumerate_neighbors(&edge, 1).unwrap(), vec![pd(&[0, 0])]);

        assert!(matches!(
            enumerate_neighbors(&comb, 3),
            Err(Error::PositionOutOfRange { position: 3, len: 3 })
        ));
    }

    #[test]
    fn neighborhood_examples() {
        assert_eq!(neighborhood(&CartesianTree::complete(1)).len(), 4);
        assert_eq!(neighborhood(&CartesianTree::complete(2)).len(), 14);
        assert_eq!(neighborhood(&CartesianTree::right_comb(3)).len(), 2);
        assert!(neighborhood(&CartesianTree::build(&[1])).is_empty());
    }

    #[test]
    fn formula_examples() {
        assert_eq!(count_neighbors_formula(&CartesianTree::build(&[1])), 0);
        assert_eq!(count_neighbors_formula(&CartesianTree::complete(3)), 36);
        for n in 1..=8 {
            assert_eq!(count_neighbors_formula(&CartesianTree::right_comb(n)), n - 1);
            assert_eq!(count_neighbors_formula(&CartesianTree::left_comb(n)), n - 1);
        }
    }

    #[test]
    fn closed_form_values() {
        let values: Vec<usize> = (1..=4).map(complete_tree_count).collect();
        assert_eq!(values, vec![4, 14, 36, 82]);
        for h in 1..=4u32 {
            let n = (1usize << (h + 1)) - 1;
            assert_eq!(degree_upper_bound(n), complete_tree_count(h));
        }
        assert_eq!(degree_upper_bound(1), 0);
        // 3 - 2 (log2 3 - 1) = 1.83
        assert_eq!(degree_upper_bound(2), 2);
        assert_eq!(degree_upper_bound(3), 4);
    }

    #[test]
    fn per_position_disjoint() {
        for t in CartesianTree::enumerate(6) {
            let set = neighborhood(&t);
            let total: usize = set.per_position.iter().map(|(_, v)| v.len()).sum();
            assert_eq!(total, set.len());
        }
    }
}
