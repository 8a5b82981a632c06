//! Cartesian trees over sequence positions.
//!
//! Nodes are the positions `1..=n`. The root holds the minimum key and an
//! in-order walk visits the positions in increasing order. Index `0` is used
//! internally as the "no node" sentinel.

use std::fmt;

/// Binary tree over positions `1..=n`, min-heap ordered on the keys it was
/// built from.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CartesianTree {
    root: usize,
    left: Vec<usize>,
    right: Vec<usize>,
}

impl CartesianTree {
    /// Builds the Cartesian tree of `keys` with a monotone stack in linear
    /// time. Keys are assumed pairwise distinct.
    pub fn build<T: PartialOrd>(keys: &[T]) -> Self {
        let n = keys.len();
        let mut left = vec![0; n + 1];
        let mut right = vec![0; n + 1];
        // rightmost path, bottom at the end
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        for pos in 1..=n {
            let mut last_popped = 0;
            while let Some(&top) = stack.last() {
                if keys[top - 1] < keys[pos - 1] {
                    break;
                }
                last_popped = stack.pop().unwrap_or(0);
            }
            left[pos] = last_popped;
            if let Some(&top) = stack.last() {
                right[top] = pos;
            }
            stack.push(pos);
        }
        let root = stack.first().copied().unwrap_or(0);
        Self { root, left, right }
    }

    /// Assembles a tree from child arrays indexed by position (`0` = none).
    /// The caller guarantees the arrays describe a binary tree whose in-order
    /// sequence is `1..=n`.
    pub(crate) fn from_parts(root: usize, left: Vec<usize>, right: Vec<usize>) -> Self {
        debug_assert_eq!(left.len(), right.len());
        Self { root, left, right }
    }

    pub fn empty() -> Self {
        Self { root: 0, left: vec![0], right: vec![0] }
    }

    pub fn len(&self) -> usize {
        self.left.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.root == 0
    }

    pub fn root(&self) -> Option<usize> {
        some(self.root)
    }

    pub fn left(&self, pos: usize) -> Option<usize> {
        some(self.left[pos])
    }

    pub fn right(&self, pos: usize) -> Option<usize> {
        some(self.right[pos])
    }

    /// Parent of every position, `0` for the root. Index `0` is unused.
    pub fn parents(&self) -> Vec<usize> {
        let mut parent = vec![0; self.len() + 1];
        for pos in 1..=self.len() {
            for child in [self.left[pos], self.right[pos]] {
                if child != 0 {
                    parent[child] = pos;
                }
            }
        }
        parent
    }

    pub fn in_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = Vec::new();
        let mut cur = self.root;
        while cur != 0 || !stack.is_empty() {
            while cur != 0 {
                stack.push(cur);
                cur = self.left[cur];
            }
            let node = stack.pop().unwrap_or(0);
            out.push(node);
            cur = self.right[node];
        }
        out
    }

    pub fn pre_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack: Vec<usize> = self.root().into_iter().collect();
        while let Some(node) = stack.pop() {
            out.push(node);
            if self.right[node] != 0 {
                stack.push(self.right[node]);
            }
            if self.left[node] != 0 {
                stack.push(self.left[node]);
            }
        }
        out
    }

    /// Length of the path that starts at `pos` and keeps taking left
    /// children (`lbl`). `None` means the empty tree, length 0.
    pub fn left_branch_len(&self, pos: Option<usize>) -> usize {
        self.branch(pos, &self.left).count()
    }

    /// Length of the right branch (`lbr`) starting at `pos`.
    pub fn right_branch_len(&self, pos: Option<usize>) -> usize {
        self.branch(pos, &self.right).count()
    }

    /// Nodes of the left branch starting at `pos`, top to bottom.
    pub fn left_branch(&self, pos: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        self.branch(pos, &self.left)
    }

    /// Nodes of the right branch starting at `pos`, top to bottom.
    pub fn right_branch(&self, pos: Option<usize>) -> impl Iterator<Item = usize> + '_ {
        self.branch(pos, &self.right)
    }

    fn branch<'a>(
        &'a self,
        pos: Option<usize>,
        links: &'a [usize],
    ) -> impl Iterator<Item = usize> + 'a {
        std::iter::successors(pos, move |&p| some(links[p]))
    }

    /// Number of nodes in the subtree rooted at every position.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![0; self.len() + 1];
        for node in self.pre_order().into_iter().rev() {
            size[node] = 1 + size[self.left[node]] + size[self.right[node]];
        }
        size[0] = 0;
        size
    }

    /// Every binary tree with `n` nodes (Catalan(n) of them), produced by the
    /// usual split into left and right subtree sizes.
    pub fn enumerate(n: usize) -> Vec<CartesianTree> {
        shapes(1, n)
            .into_iter()
            .map(|(root, children)| {
                let mut left = vec![0; n + 1];
                let mut right = vec![0; n + 1];
                for (offset, (l, r)) in children.into_iter().enumerate() {
                    left[offset + 1] = l;
                    right[offset + 1] = r;
                }
                Self { root, left, right }
            })
            .collect()
    }

    /// Complete binary tree of height `h` (`2^(h+1) - 1` nodes).
    pub fn complete(h: u32) -> CartesianTree {
        let n = (1usize << (h + 1)) - 1;
        // heights put the deepest nodes on odd positions; the minimum sits
        // in the middle of every range
        let keys: Vec<u32> = (1..=n).map(|pos| h - pos.trailing_zeros()).collect();
        CartesianTree::build(&keys)
    }

    /// Increasing sequence: every node is the right child of the previous one.
    pub fn right_comb(n: usize) -> CartesianTree {
        let keys: Vec<usize> = (0..n).collect();
        CartesianTree::build(&keys)
    }

    pub fn left_comb(n: usize) -> CartesianTree {
        let keys: Vec<usize> = (0..n).rev().collect();
        CartesianTree::build(&keys)
    }
}

fn some(pos: usize) -> Option<usize> {
    (pos != 0).then_some(pos)
}

type Shape = (usize, Vec<(usize, usize)>);

// all shapes on positions lo..=hi as (root, [(left, right)] per position)
fn shapes(lo: usize, hi: usize) -> Vec<Shape> {
    if lo > hi {
        return vec![(0, Vec::new())];
    }
    let mut out = Vec::new();
    for root in lo..=hi {
        let lefts = shapes(lo, root - 1);
        let rights = shapes(root + 1, hi);
        for (lroot, lchildren) in &lefts {
            for (rroot, rchildren) in &rights {
                let mut children = Vec::with_capacity(hi - lo + 1);
                children.extend_from_slice(lchildren);
                children.push((*lroot, *rroot));
                children.extend_from_slice(rchildren);
                out.push((root, children));
            }
        }
    }
    out
}

/// Catalan number `C(n)`, the count of binary trees with `n` nodes.
pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

impl fmt::Debug for CartesianTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &CartesianTree, node: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if node == 0 {
                return write!(f, ".");
            }
            if t.left[node] == 0 && t.right[node] == 0 {
                return write!(f, "{node}");
            }
            write!(f, "({node} ")?;
            go(t, t.left[node], f)?;
            write!(f, " ")?;
            go(t, t.right[node], f)?;
            write!(f, ")")
        }
        go(self, self.root, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    // recursive construction straight from the definition
    fn build_naive(keys: &[i64], offset: usize, left: &mut [usize], right: &mut [usize]) -> usize {
        if keys.is_empty() {
            return 0;
        }
        let (min_idx, _) = keys.iter().enumerate().min_by_key(|(_, k)| **k).unwrap();
        let root = offset + min_idx + 1;
        left[root] = build_naive(&keys[..min_idx], offset, left, right);
        right[root] = build_naive(&keys[min_idx + 1..], root, left, right);
        root
    }

    fn naive(keys: &[i64]) -> CartesianTree {
        let n = keys.len();
        let (mut left, mut right) = (vec![0; n + 1], vec![0; n + 1]);
        let root = build_naive(keys, 0, &mut left, &mut right);
        CartesianTree::from_parts(root, left, right)
    }

    #[test]
    fn singleton() {
        let t = CartesianTree::build(&[1]);
        assert_eq!(t.root(), Some(1));
        assert_eq!((t.left(1), t.right(1)), (None, None));
    }

    #[test]
    fn minimum_in_the_middle() {
        let t = CartesianTree::build(&[2, 1, 3]);
        assert_eq!(t.root(), Some(2));
        assert_eq!(t.left(2), Some(1));
        assert_eq!(t.right(2), Some(3));
    }

    #[test]
    fn figure_sequence() {
        let keys = [4, 5, 6, 2, 1, 7, 8, 3, 9];
        let t = CartesianTree::build(&keys);
        assert_eq!(t.root(), Some(5));
        assert_eq!(t.in_order(), (1..=9).collect::<Vec<_>>());
        assert_eq!(t, naive(&keys));
    }

    #[test]
    fn matches_recursive_definition() {
        let seqs: [&[i64]; 4] = [&[3, 1, 4, 2, 5], &[5, 4, 3, 2, 1], &[1, 2, 3], &[9, 2, 7, 1, 8, 3]];
        for keys in seqs {
            assert_eq!(CartesianTree::build(keys), naive(keys), "{keys:?}");
        }
    }

    #[test]
    fn enumeration_counts_and_distinct() {
        for n in 0..=8 {
            let trees = CartesianTree::enumerate(n);
            assert_eq!(trees.len() as u64, catalan(n));
            let unique: std::collections::HashSet<_> = trees.iter().cloned().collect();
            assert_eq!(unique.len(), trees.len());
            for t in &trees {
                assert_eq!(t.in_order(), (1..=n).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn catalan_values() {
        let expected = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, c) in expected.iter().enumerate() {
            assert_eq!(catalan(n), *c);
        }
    }

    #[test]
    fn complete_tree_shape() {
        let t = CartesianTree::complete(2);
        assert_eq!(t.len(), 7);
        assert_eq!(t.root(), Some(4));
        assert_eq!((t.left(4), t.right(4)), (Some(2), Some(6)));
        assert_eq!(t.left_branch_len(t.root()), 3);
        assert_eq!(t.right_branch_len(t.right(4)), 2);
        assert_eq!(t.subtree_sizes()[4], 7);
    }

    #[test]
    fn parents_and_branches() {
        let t = CartesianTree::right_comb(4);
        assert_eq!(t.parents(), vec![0, 0, 1, 2, 3]);
        assert_eq!(t.right_branch(t.root()).collect::<Vec<_>>(), vec![1, 2, 3, 4]);
        assert_eq!(t.left_branch_len(t.root()), 1);
        assert_eq!(format!("{:?}", CartesianTree::build(&[2, 1, 3])), "(2 1 3)");
    }
}
