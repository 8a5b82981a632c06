//! Parent-distance tables.
//!
//! The forward table stores, for each position, the distance back to the
//! nearest strictly smaller key (0 when there is none). The reverse table is
//! the same read right to left. Either one determines the Cartesian tree.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tree::CartesianTree;

/// A parent-distance table. Entry `k` (0-based) describes position `k + 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PdTable(Vec<usize>);

impl PdTable {
    /// Wraps a forward table after checking it is realizable.
    pub fn forward(values: Vec<usize>) -> Result<Self> {
        let table = PdTable(values);
        pd_to_tree(&table)?;
        Ok(table)
    }

    /// Wraps a reverse table after checking it is realizable.
    pub fn reverse(values: Vec<usize>) -> Result<Self> {
        let table = PdTable(values);
        reverse_pd_to_tree(&table)?;
        Ok(table)
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        PdTable(values)
    }

    /// Value at 1-based position `pos`.
    #[inline]
    pub fn at(&self, pos: usize) -> usize {
        self.0[pos - 1]
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// The table read back to front. Mirrors a forward table into the reverse
    /// table of the mirrored sequence and vice versa.
    pub fn mirrored(&self) -> PdTable {
        PdTable(self.0.iter().rev().copied().collect())
    }
}

impl Deref for PdTable {
    type Target = [usize];

    fn deref(&self) -> &[usize] {
        &self.0
    }
}

impl fmt::Debug for PdTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for PdTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

/// Forward and reverse tables of one sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PdTables {
    pub forward: PdTable,
    pub reverse: PdTable,
}

impl PdTables {
    pub fn of<T: PartialOrd>(keys: &[T]) -> Self {
        Self { forward: forward_pd(keys), reverse: reverse_pd(keys) }
    }

    pub fn of_tree(tree: &CartesianTree) -> Self {
        Self { forward: tree_to_pd(tree), reverse: tree_to_reverse_pd(tree) }
    }

    /// Completes a forward table with its reverse counterpart.
    pub fn from_forward(forward: PdTable) -> Result<Self> {
        let tree = pd_to_tree(&forward)?;
        Ok(Self { reverse: tree_to_reverse_pd(&tree), forward })
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }
}

/// Forward parent-distance table by a single monotone-stack pass.
pub fn forward_pd<T: PartialOrd>(keys: &[T]) -> PdTable {
    PdTable(PdStream::new(keys).map(|(_, d)| d).collect())
}

/// Reverse parent-distance table: distance to the nearest strictly smaller
/// key on the right, 0 when none.
pub fn reverse_pd<T: PartialOrd>(keys: &[T]) -> PdTable {
    let n = keys.len();
    let mut out = vec![0; n];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for idx in (0..n).rev() {
        while let Some(&top) = stack.last() {
            if keys[top] < keys[idx] {
                break;
            }
            stack.pop();
        }
        out[idx] = stack.last().map_or(0, |&top| top - idx);
        stack.push(idx);
    }
    PdTable(out)
}

/// Reads a forward table off a tree: a node's nearest smaller key on the
/// left is its closest ancestor that has it in its right subtree.
pub fn tree_to_pd(tree: &CartesianTree) -> PdTable {
    let mut out = vec![0; tree.len()];
    let mut stack: Vec<(usize, usize)> = tree.root().map(|r| (r, 0)).into_iter().collect();
    while let Some((node, anchor)) = stack.pop() {
        out[node - 1] = if anchor == 0 { 0 } else { node - anchor };
        if let Some(l) = tree.left(node) {
            stack.push((l, anchor));
        }
        if let Some(r) = tree.right(node) {
            stack.push((r, node));
        }
    }
    PdTable(out)
}

pub fn tree_to_reverse_pd(tree: &CartesianTree) -> PdTable {
    let mut out = vec![0; tree.len()];
    let mut stack: Vec<(usize, usize)> = tree.root().map(|r| (r, 0)).into_iter().collect();
    while let Some((node, anchor)) = stack.pop() {
        out[node - 1] = if anchor == 0 { 0 } else { anchor - node };
        if let Some(l) = tree.left(node) {
            stack.push((l, node));
        }
        if let Some(r) = tree.right(node) {
            stack.push((r, anchor));
        }
    }
    PdTable(out)
}

/// Rebuilds the tree of a forward table.
///
/// Replays the monotone stack: a value `d > 0` at position `pos` says the
/// parent-to-be `pos - d` is on the rightmost path. If it is not there, the
/// table is not realizable and `InvalidPd` names the position.
pub fn pd_to_tree(pd: &PdTable) -> Result<CartesianTree> {
    let n = pd.len();
    let mut left = vec![0; n + 1];
    let mut right = vec![0; n + 1];
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    for (pos, &d) in (1..=n).zip(pd.iter()) {
        if d >= pos {
            return Err(Error::InvalidPd { position: pos });
        }
        let anchor = if d == 0 { 0 } else { pos - d };
        let mut last_popped = 0;
        while let Some(&top) = stack.last() {
            if top <= anchor {
                break;
            }
            last_popped = stack.pop().unwrap_or(0);
        }
        if anchor != 0 {
            match stack.last() {
                Some(&top) if top == anchor => right[anchor] = pos,
                _ => return Err(Error::InvalidPd { position: pos }),
            }
        }
        left[pos] = last_popped;
        stack.push(pos);
    }
    let root = stack.first().copied().unwrap_or(0);
    Ok(CartesianTree::from_parts(root, left, right))
}

/// Rebuilds the tree of a reverse table by mirroring.
pub fn reverse_pd_to_tree(rpd: &PdTable) -> Result<CartesianTree> {
    let n = rpd.len();
    let mirrored = pd_to_tree(&rpd.mirrored()).map_err(|e| match e {
        Error::InvalidPd { position } => Error::InvalidPd { position: n + 1 - position },
        other => other,
    })?;
    let flip = |p: usize| if p == 0 { 0 } else { n + 1 - p };
    let mut left = vec![0; n + 1];
    let mut right = vec![0; n + 1];
    for pos in 1..=n {
        left[flip(pos)] = flip(mirrored.right(pos).unwrap_or(0));
        right[flip(pos)] = flip(mirrored.left(pos).unwrap_or(0));
    }
    Ok(CartesianTree::from_parts(flip(mirrored.root().unwrap_or(0)), left, right))
}

/// Streams `(position, forward PD)` pairs over a sequence, one monotone
/// stack pass, amortized O(1) per element. Positions are 1-based.
#[derive(Debug, Clone)]
pub struct PdStream<'a, T> {
    keys: &'a [T],
    next: usize,
    stack: Vec<usize>,
}

impl<'a, T: PartialOrd> PdStream<'a, T> {
    pub fn new(keys: &'a [T]) -> Self {
        Self { keys, next: 0, stack: Vec::new() }
    }
}

impl<T: PartialOrd> Iterator for PdStream<'_, T> {
    type Item = (usize, usize);

    fn next(&mut self) -> Option<(usize, usize)> {
        let idx = self.next;
        let key = self.keys.get(idx)?;
        self.next += 1;
        while let Some(&top) = self.stack.last() {
            if self.keys[top] < *key {
                break;
            }
            self.stack.pop();
        }
        let d = self.stack.last().map_or(0, |&top| idx - top);
        self.stack.push(idx);
        Some((idx + 1, d))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let rest = self.keys.len() - self.next;
        (rest, Some(rest))
    }
}

/// Re-reads a global parent distance inside a window where `depth` elements
/// precede the current one. A parent outside the window counts as none.
#[inline]
pub fn adjust_pd(global: usize, depth: usize) -> usize {
    if global <= depth {
        global
    } else {
        0
    }
}
