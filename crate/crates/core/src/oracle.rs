//! Brute-force ground truth.
//!
//! Nothing here touches the parent-distance machinery: trees are built
//! directly from keys, swaps are applied to concrete sequences and every
//! realizer of a tree is enumerated. Slow on purpose.
//!
//! Two sequences swap-match when their Cartesian trees are equal or one swap
//! apart, meaning some sequence with the first tree becomes a sequence with
//! the second after one adjacent swap. [`literal_swap_match`] only swaps the
//! two given sequences themselves; it is stricter and is not a function of
//! the trees.

use std::collections::{BTreeSet, HashMap};

use crate::error::{Error, Result};
use crate::pd::PdTable;
use crate::pd_matcher::{prepare, MatchKind, MatchReport, SearchOptions, SearchOutcome};
use crate::sequence::Sequence;
use crate::tree::CartesianTree;
use crate::zones::{apply_swap, Orientation, SwapDirection};

/// Largest tree size for [`oracle_neighbors`].
pub const NEIGHBOR_GUARD: usize = 8;
/// Largest pattern length for [`oracle_search`].
pub const SEARCH_GUARD: usize = 12;

/// Same Cartesian tree.
pub fn oracle_ct_match<T: PartialOrd>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x.len(), y.len())?;
    Ok(CartesianTree::build(x) == CartesianTree::build(y))
}

/// Equal trees, or one swap applied to `x` or to `y` gives equal trees.
pub fn literal_swap_match<T: PartialOrd + Clone>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x.len(), y.len())?;
    let ty = CartesianTree::build(y);
    let tx = CartesianTree::build(x);
    if tx == ty {
        return Ok(true);
    }
    for i in 1..x.len() {
        if CartesianTree::build(&apply_swap(x, i)?) == ty || CartesianTree::build(&apply_swap(y, i)?) == tx {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Equal trees, or trees one swap apart.
pub fn oracle_swap_match<T: PartialOrd>(x: &[T], y: &[T]) -> Result<bool> {
    same_len(x.len(), y.len())?;
    let tx = CartesianTree::build(x);
    let ty = CartesianTree::build(y);
    Ok(tx == ty || swap_class(&tx).contains_key(&ty))
}

/// Every permutation of `1..=n` whose Cartesian tree is `tree`: the heap
/// order's linear extensions, ranks handed out smallest first.
pub fn realizers(tree: &CartesianTree) -> Vec<Vec<usize>> {
    let n = tree.len();
    let mut out = Vec::new();
    let mut keys = vec![0; n];
    let mut frontier: Vec<usize> = tree.root().into_iter().collect();
    extend(tree, 1, &mut frontier, &mut keys, &mut out);
    out
}

fn extend(
    tree: &CartesianTree,
    rank: usize,
    frontier: &mut Vec<usize>,
    keys: &mut [usize],
    out: &mut Vec<Vec<usize>>,
) {
    if frontier.is_empty() {
        out.push(keys.to_vec());
        return;
    }
    for k in 0..frontier.len() {
        let node = frontier.swap_remove(k);
        keys[node - 1] = rank;
        let children: Vec<usize> = [tree.left(node), tree.right(node)].into_iter().flatten().collect();
        frontier.extend(&children);
        extend(tree, rank + 1, frontier, keys, out);
        frontier.truncate(frontier.len() - children.len());
        frontier.push(node);
        let last = frontier.len() - 1;
        frontier.swap(k, last);
    }
}

/// Trees reachable from `tree` by one swap on any realizer, with one
/// `(i, direction)` that does it.
fn swap_class(tree: &CartesianTree) -> HashMap<CartesianTree, (usize, SwapDirection)> {
    let mut class = HashMap::new();
    for z in realizers(tree) {
        for i in 1..z.len() {
            let swapped = apply_swap(&z, i).unwrap_or_default();
            let direction = if z[i - 1] < z[i] { SwapDirection::Lesser } else { SwapDirection::Greater };
            class.entry(CartesianTree::build(&swapped)).or_insert((i, direction));
        }
    }
    class
}

/// Forward parent distances by scanning left for each position.
pub fn naive_pd<T: PartialOrd>(keys: &[T]) -> PdTable {
    let values = (0..keys.len())
        .map(|j| (0..j).rev().find(|&k| keys[k] < keys[j]).map_or(0, |k| j - k))
        .collect();
    PdTable::from_vec_unchecked(values)
}

/// `ng(tree)` by enumerating every realizer and every swap.
pub fn oracle_neighbors(tree: &CartesianTree) -> Result<BTreeSet<PdTable>> {
    if tree.len() > NEIGHBOR_GUARD {
        return Err(Error::SizeTooLarge { n: tree.len(), limit: NEIGHBOR_GUARD });
    }
    let mut out = BTreeSet::new();
    for z in realizers(tree) {
        for i in 1..z.len() {
            out.insert(naive_pd(&apply_swap(&z, i)?));
        }
    }
    Ok(out)
}

/// 1-based starts of every window of `t` swap-matching `p`.
pub fn oracle_search<T: PartialOrd>(p: &[T], t: &[T], exact_only: bool) -> Result<Vec<usize>> {
    Ok(oracle_reports(p, t, exact_only)?.into_iter().map(|r| r.position).collect())
}

fn oracle_reports<T: PartialOrd>(p: &[T], t: &[T], exact_only: bool) -> Result<Vec<MatchReport>> {
    let m = p.len();
    if m > SEARCH_GUARD {
        return Err(Error::SizeTooLarge { n: m, limit: SEARCH_GUARD });
    }
    if m == 0 || m > t.len() {
        return Ok(Vec::new());
    }
    let base = CartesianTree::build(p);
    let class = if exact_only { HashMap::new() } else { swap_class(&base) };
    let mut out = Vec::new();
    for start in 1..=t.len() - m + 1 {
        let tree = CartesianTree::build(&t[start - 1..start - 1 + m]);
        let kind = if tree == base {
            MatchKind::Exact
        } else if let Some(&(i, direction)) = class.get(&tree) {
            MatchKind::Swap { i, direction, orientation: Orientation::Pattern }
        } else {
            continue;
        };
        out.push(MatchReport { position: start, kind });
    }
    Ok(out)
}

/// Search entry point matching the other methods.
pub fn search_oracle(p: &Sequence, t: &Sequence, opts: &SearchOptions) -> Result<SearchOutcome> {
    let (p, t) = prepare(p, t, opts.tie_mode)?;
    let matches = oracle_reports(p.keys(), t.keys(), opts.exact_only)?;
    Ok(SearchOutcome { count: matches.len(), matches, comparisons: 0 })
}

fn same_len(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::LengthMismatch { left, right })
    }
}
