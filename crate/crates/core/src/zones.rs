//! Effect of one adjacent swap on both parent-distance tables.
//!
//! Around a swap at position `i`, the tables of the source `x` and of
//! `y = τ(x, i)` split into zones: green zones (prefix of the forward table,
//! suffix of the reverse table) are untouched, blue zones lie beyond the
//! subtree holding the swap and are also untouched, red zones move by at most
//! one, and positions `i`, `i + 1` follow fixed rules depending on whether
//! `x[i] < x[i + 1]`.
//!
//! Naming of the eight values at the swap, all 1-based:
//! `a→ = pd[i]`, `b→ = pd[i+1]`, `a← = rpd[i+1]`, `b← = rpd[i]`. The reverse
//! table is read right to left, so its "first" value sits at `i + 1`.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pd::{pd_to_tree, PdTables};
use crate::tree::CartesianTree;

/// `τ(keys, i)`: exchanges positions `i` and `i + 1` (1-based).
pub fn apply_swap<T: Clone>(keys: &[T], i: usize) -> Result<Vec<T>> {
    if i == 0 || i >= keys.len() {
        return Err(Error::PositionOutOfRange { position: i, len: keys.len() });
    }
    let mut out = keys.to_vec();
    out.swap(i - 1, i);
    Ok(out)
}

/// Order of the two swapped keys in the source sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SwapDirection {
    /// `x[i] < x[i + 1]`
    Lesser,
    /// `x[i] > x[i + 1]`
    Greater,
}

impl SwapDirection {
    /// `Lesser` iff the forward table has `pd[i + 1] = 1`.
    pub fn of(x: &PdTables, i: usize) -> SwapDirection {
        if x.forward.at(i + 1) == 1 {
            SwapDirection::Lesser
        } else {
            SwapDirection::Greater
        }
    }
}

/// Which side of a comparison the swap was applied to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// the pattern's tree is the source, the window is `τ` of it
    Pattern,
    /// the window's tree is the source
    Window,
}

/// Zone boundaries for a swap at `i` in tables of length `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ZoneLayout {
    pub i: usize,
    pub n: usize,
    /// reverse blue zone ends at `i - l`
    pub l: usize,
    /// forward blue zone starts at `i + r`
    pub r: usize,
}

impl ZoneLayout {
    pub fn forward_green(&self) -> RangeInclusive<usize> {
        1..=self.i - 1
    }

    pub fn reverse_green(&self) -> RangeInclusive<usize> {
        self.i + 2..=self.n
    }

    pub fn forward_blue(&self) -> RangeInclusive<usize> {
        self.i + self.r..=self.n
    }

    pub fn reverse_blue(&self) -> RangeInclusive<usize> {
        1..=self.i - self.l
    }

    pub fn forward_red(&self) -> RangeInclusive<usize> {
        self.i + 2..=(self.i + self.r - 1).min(self.n)
    }

    pub fn reverse_red(&self) -> RangeInclusive<usize> {
        self.i - self.l + 1..=self.i - 1
    }
}

/// Computes `l` and `r` from the source tables.
pub fn zone_layout(x: &PdTables, i: usize, direction: SwapDirection) -> ZoneLayout {
    let n = x.len();
    let (a_fwd, b_fwd) = (x.forward.at(i), x.forward.at(i + 1));
    let (a_rev, b_rev) = (x.reverse.at(i + 1), x.reverse.at(i));
    let r = match direction {
        SwapDirection::Lesser if b_rev > 1 => b_rev,
        SwapDirection::Greater if a_rev > 0 => a_rev + 1,
        _ => n - i + 1,
    };
    let l = match direction {
        SwapDirection::Lesser if a_fwd > 0 => a_fwd,
        SwapDirection::Greater if b_fwd > 1 => b_fwd - 1,
        _ => i,
    };
    // clamp so that garbage tables cannot produce inverted ranges
    ZoneLayout { i, n, l: l.min(i), r: r.min(n - i + 1) }
}

/// Counts table-entry comparisons for the complexity instrumentation.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct Probe {
    pub comparisons: u64,
}

impl Probe {
    #[inline]
    fn eq(&mut self, a: usize, b: usize) -> bool {
        self.comparisons += 1;
        a == b
    }

    #[inline]
    fn range_eq(&mut self, a: &[usize], b: &[usize], range: RangeInclusive<usize>) -> bool {
        range.into_iter().all(|pos| self.eq(a[pos - 1], b[pos - 1]))
    }
}

/// The four rules at positions `i` and `i + 1`. The last one is only an
/// upper bound.
pub fn check_position_lemma(
    x: &PdTables,
    y: &PdTables,
    i: usize,
    direction: SwapDirection,
) -> bool {
    position_lemma(x, y, i, direction, &mut Probe::default())
}

fn position_lemma(
    x: &PdTables,
    y: &PdTables,
    i: usize,
    direction: SwapDirection,
    probe: &mut Probe,
) -> bool {
    let n = x.len();
    let (xf, xr, yf, yr) = (&x.forward, &x.reverse, &y.forward, &y.reverse);
    probe.comparisons += 4;
    match direction {
        SwapDirection::Lesser => {
            let a_fwd = xf.at(i);
            let b_rev = xr.at(i);
            yr.at(i) == 1
                && yf.at(i + 1) == if a_fwd == 0 { 0 } else { a_fwd + 1 }
                && yr.at(i + 1) == b_rev.saturating_sub(1)
                && yf.at(i) <= if a_fwd == 0 { i - 1 } else { a_fwd }
        }
        SwapDirection::Greater => {
            let a_rev = xr.at(i + 1);
            let b_fwd = xf.at(i + 1);
            yf.at(i + 1) == 1
                && yr.at(i) == if a_rev == 0 { 0 } else { a_rev + 1 }
                && yf.at(i) == b_fwd.saturating_sub(1)
                && yr.at(i + 1) <= if a_rev == 0 { n - i - 1 } else { a_rev }
        }
    }
}

/// Forward tables agree on `1..i-1`, reverse tables on `i+2..n`.
pub fn check_green_zones(x: &PdTables, y: &PdTables, i: usize) -> bool {
    green_zones(x, y, i, &mut Probe::default())
}

fn green_zones(x: &PdTables, y: &PdTables, i: usize, probe: &mut Probe) -> bool {
    let n = x.len();
    probe.range_eq(&x.forward, &y.forward, 1..=i - 1)
        && probe.range_eq(&x.reverse, &y.reverse, i + 2..=n)
}

/// Both blue segments agree; empty segments pass.
pub fn check_blue_zones(x: &PdTables, y: &PdTables, layout: &ZoneLayout) -> bool {
    blue_zones(x, y, layout, &mut Probe::default())
}

fn blue_zones(x: &PdTables, y: &PdTables, layout: &ZoneLayout, probe: &mut Probe) -> bool {
    probe.range_eq(&x.forward, &y.forward, layout.forward_blue())
        && probe.range_eq(&x.reverse, &y.reverse, layout.reverse_blue())
}

/// Red segments move by at most one, in the direction fixed by the swap.
pub fn check_red_zones(
    x: &PdTables,
    y: &PdTables,
    layout: &ZoneLayout,
    direction: SwapDirection,
) -> bool {
    red_zones(x, y, layout, direction, &mut Probe::default())
}

fn red_zones(
    x: &PdTables,
    y: &PdTables,
    layout: &ZoneLayout,
    direction: SwapDirection,
    probe: &mut Probe,
) -> bool {
    // Lesser: forward values may drop by one, reverse values may grow by one
    let (fwd_step, rev_step): (isize, isize) = match direction {
        SwapDirection::Lesser => (-1, 1),
        SwapDirection::Greater => (1, -1),
    };
    let within = |probe: &mut Probe, a: usize, b: usize, step: isize| {
        probe.comparisons += 1;
        let delta = b as isize - a as isize;
        delta == 0 || delta == step
    };
    layout
        .forward_red()
        .all(|pos| within(probe, x.forward.at(pos), y.forward.at(pos), fwd_step))
        && layout
            .reverse_red()
            .all(|pos| within(probe, x.reverse.at(pos), y.reverse.at(pos), rev_step))
}

/// Values that cannot point across the swapped pair stay the same: for
/// `j ∉ {i, i+1}`, `pd[j] ∉ {j-i-1, j-i}` forces `pd_y[j] = pd_x[j]`, and
/// `rpd[j] ∉ {i-j, i+1-j}` forces `rpd_y[j] = rpd_x[j]`.
///
/// A necessary condition only; useful as a fast filter.
pub fn check_prop_zones(x: &PdTables, y: &PdTables, i: usize) -> bool {
    let n = x.len() as isize;
    let i = i as isize;
    (1..=n).filter(|&j| j != i && j != i + 1).all(|j| {
        let pos = j as usize;
        let fx = x.forward.at(pos) as isize;
        let rx = x.reverse.at(pos) as isize;
        let fwd_ok = fx == j - i - 1 || fx == j - i || y.forward.at(pos) as isize == fx;
        let rev_ok = rx == i - j || rx == i + 1 - j || y.reverse.at(pos) as isize == rx;
        fwd_ok && rev_ok
    })
}

/// Locates the swap from the first forward mismatch `f` and the last
/// reverse mismatch `r`.
///
/// Returns at most two positions: `{f}` when `r = f + 1`, `{r}` when
/// `r = f - 1`, `{f - 1, f}` when `r = f`, nothing for wider gaps. Equal
/// tables also give nothing.
pub fn candidate_swap_positions(p: &PdTables, x: &PdTables) -> Vec<usize> {
    candidates(p, x, &mut Probe::default())
}

fn candidates(p: &PdTables, x: &PdTables, probe: &mut Probe) -> Vec<usize> {
    let m = p.len();
    let Some(f) = (1..=m).find(|&pos| !probe.eq(p.forward.at(pos), x.forward.at(pos))) else {
        return Vec::new();
    };
    let Some(r) = (1..=m).rev().find(|&pos| !probe.eq(p.reverse.at(pos), x.reverse.at(pos)))
    else {
        return Vec::new();
    };
    let raw: &[usize] = if r == f + 1 {
        &[f]
    } else if r + 1 == f {
        &[r]
    } else if r == f {
        &[f - 1, f]
    } else {
        &[]
    };
    raw.iter().copied().filter(|&c| c >= 1 && c < m).collect()
}

/// Outcome of each individual check for one candidate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZoneChecks {
    pub position: bool,
    pub green: bool,
    pub blue: bool,
    pub red: bool,
    /// the exact realizability test; only evaluated when the zones pass
    pub realizable: bool,
}

impl ZoneChecks {
    pub fn zones_pass(&self) -> bool {
        self.position && self.green && self.blue && self.red
    }

    pub fn all(&self) -> bool {
        self.zones_pass() && self.realizable
    }
}

/// Evidence that two trees are one swap apart.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwapWitness {
    pub i: usize,
    pub direction: SwapDirection,
    pub orientation: Orientation,
    pub checks: ZoneChecks,
}

/// Runs every zone check for `y` against source `x` at `i`, without
/// short-circuiting, then the realizability test if they all pass.
pub fn diagnose(x: &PdTables, y: &PdTables, i: usize) -> (SwapDirection, ZoneChecks) {
    let direction = SwapDirection::of(x, i);
    let layout = zone_layout(x, i, direction);
    let mut checks = ZoneChecks {
        position: check_position_lemma(x, y, i, direction),
        green: check_green_zones(x, y, i),
        blue: check_blue_zones(x, y, &layout),
        red: check_red_zones(x, y, &layout, direction),
        realizable: false,
    };
    if checks.zones_pass() {
        checks.realizable = swap_realizable(x, y, i);
    }
    (direction, checks)
}

/// Zone conjunction for `y` against source `x` at `i`, short-circuiting.
pub fn zones_hold(x: &PdTables, y: &PdTables, i: usize) -> bool {
    zones_hold_probed(x, y, i, &mut Probe::default())
}

fn zones_hold_probed(x: &PdTables, y: &PdTables, i: usize, probe: &mut Probe) -> bool {
    let direction = SwapDirection::of(x, i);
    let layout = zone_layout(x, i, direction);
    position_lemma(x, y, i, direction, probe)
        && green_zones(x, y, i, probe)
        && blue_zones(x, y, &layout, probe)
        && red_zones(x, y, &layout, direction, probe)
}

/// Exact test that some sequence with tree `x` turns into tree `y` by the
/// swap at `i`.
///
/// `z` realizes tree `T` iff every parent key is below its children's. Such a
/// `z` with `τ(z, i)` realizing `T'` exists iff the heap constraints of `T`
/// together with those of `T'` pulled back through the swap are acyclic.
/// Linear in the table length.
pub fn swap_realizable(x: &PdTables, y: &PdTables, i: usize) -> bool {
    let (Ok(source), Ok(target)) = (pd_to_tree(&x.forward), pd_to_tree(&y.forward)) else {
        return false;
    };
    swap_realizable_trees(&source, &target, i)
}

pub(crate) fn swap_realizable_trees(source: &CartesianTree, target: &CartesianTree, i: usize) -> bool {
    let n = source.len();
    if target.len() != n || i == 0 || i >= n {
        return false;
    }
    let pull = |pos: usize| {
        if pos == i {
            i + 1
        } else if pos == i + 1 {
            i
        } else {
            pos
        }
    };
    let mut succ: Vec<Vec<usize>> = vec![Vec::with_capacity(4); n + 1];
    let mut indegree = vec![0usize; n + 1];
    for (pos, &parent) in source.parents().iter().enumerate().skip(1) {
        if parent != 0 {
            succ[parent].push(pos);
            indegree[pos] += 1;
        }
    }
    for (pos, &parent) in target.parents().iter().enumerate().skip(1) {
        if parent != 0 {
            succ[pull(parent)].push(pull(pos));
            indegree[pull(pos)] += 1;
        }
    }
    let mut ready: Vec<usize> = (1..=n).filter(|&v| indegree[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = ready.pop() {
        seen += 1;
        for &w in &succ[v] {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                ready.push(w);
            }
        }
    }
    seen == n
}

/// Decides whether the pattern and window trees are one swap apart (and not
/// equal), returning how.
///
/// For each pincer candidate both orientations are tried: the pattern as
/// source, then the window. A candidate is accepted when the position rules
/// and the green, blue and red zones all hold and the exact realizability
/// test confirms it.
pub fn verify_swap_match(p: &PdTables, x: &PdTables) -> Option<SwapWitness> {
    verify_swap_match_probed(p, x, &mut Probe::default())
}

pub(crate) fn verify_swap_match_probed(
    p: &PdTables,
    x: &PdTables,
    probe: &mut Probe,
) -> Option<SwapWitness> {
    if p.len() != x.len() || p.len() < 2 {
        return None;
    }
    for i in candidates(p, x, probe) {
        for orientation in [Orientation::Pattern, Orientation::Window] {
            let (source, target) = match orientation {
                Orientation::Pattern => (p, x),
                Orientation::Window => (x, p),
            };
            if zones_hold_probed(source, target, i, probe) && swap_realizable(source, target, i) {
                let checks = ZoneChecks {
                    position: true,
                    green: true,
                    blue: true,
                    red: true,
                    realizable: true,
                };
                let direction = SwapDirection::of(source, i);
                return Some(SwapWitness { i, direction, orientation, checks });
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tables(keys: &[i32]) -> PdTables {
        PdTables::of(keys)
    }

    const FIG: [i32; 9] = [4, 5, 6, 2, 1, 7, 8, 3, 9];

    #[test]
    fn swap_examples() {
        assert_eq!(apply_swap(&[1, 2], 1).unwrap(), vec![2, 1]);
        assert_eq!(apply_swap(&FIG, 4).unwrap(), vec![4, 5, 6, 1, 2, 7, 8, 3, 9]);
        assert_eq!(apply_swap(&[2, 1, 3], 2).unwrap(), vec![2, 3, 1]);
        assert_eq!(
            apply_swap(&[1, 2, 3], 3),
            Err(Error::PositionOutOfRange { position: 3, len: 3 })
        );
        assert!(apply_swap(&[1, 2, 3], 0).is_err());
    }

    #[test]
    fn layout_examples() {
        let x = tables(&FIG);
        assert_eq!(SwapDirection::of(&x, 5), SwapDirection::Lesser);
        let lay = zone_layout(&x, 5, SwapDirection::Lesser);
        assert_eq!(lay.r, 5);
        assert!(lay.forward_blue().is_empty());

        let x = tables(&[2, 1, 3]);
        let lay = zone_layout(&x, 2, SwapDirection::Lesser);
        assert_eq!(lay.l, 2);
        assert!(lay.reverse_blue().is_empty());

        let x = tables(&[1, 2, 3]);
        let lay = zone_layout(&x, 1, SwapDirection::Lesser);
        assert_eq!((lay.l, lay.r), (1, 3));
        assert!(lay.forward_blue().is_empty() && lay.reverse_blue().is_empty());
        assert!(lay.reverse_red().is_empty());
        assert_eq!(lay.forward_red(), 3..=3);

        let x = tables(&[2, 3, 1, 4]);
        let lay = zone_layout(&x, 1, SwapDirection::Lesser);
        assert_eq!(lay.r, 2);
        assert_eq!(lay.forward_blue(), 3..=4);
        let y = tables(&[3, 2, 1, 4]);
        assert!(check_blue_zones(&x, &y, &lay));
        let bad = PdTables {
            forward: crate::pd::PdTable::from_vec_unchecked(vec![0, 0, 0, 2]),
            reverse: y.reverse.clone(),
        };
        assert!(!check_blue_zones(&x, &bad, &lay));
    }

    #[test]
    fn position_lemma_examples() {
        let x = tables(&FIG);
        let y = tables(&apply_swap(&FIG, 4).unwrap());
        assert_eq!(SwapDirection::of(&x, 4), SwapDirection::Greater);
        assert!(check_position_lemma(&x, &y, 4, SwapDirection::Greater));

        assert!(check_position_lemma(
            &tables(&[1, 2, 3]),
            &tables(&[2, 1, 3]),
            1,
            SwapDirection::Lesser
        ));
        assert!(!check_position_lemma(
            &tables(&[1, 2, 3]),
            &tables(&[1, 3, 2]),
            1,
            SwapDirection::Lesser
        ));
    }

    #[test]
    fn greater_bound_uses_mirrored_range() {
        // a← = 0 at i = 1 with a long reverse distance afterwards; the bound
        // must be n - i - 1, not i - 1
        let x = tables(&[3, 1, 4, 2]);
        let y = tables(&[1, 3, 4, 2]);
        assert_eq!(y.reverse.at(2), 2);
        assert!(check_position_lemma(&x, &y, 1, SwapDirection::Greater));
    }

    #[test]
    fn green_examples() {
        let x = tables(&[1, 2, 3]);
        assert!(check_green_zones(&x, &x, 1));
        assert!(check_green_zones(&x, &tables(&[1, 3, 2]), 2));
        assert!(!check_green_zones(&tables(&[1, 2, 3, 4]), &tables(&[2, 1, 3, 4]), 3));
    }

    #[test]
    fn red_examples() {
        let x = tables(&[1, 2, 3]);
        let lay = zone_layout(&x, 2, SwapDirection::Lesser);
        assert!(lay.forward_red().is_empty() && lay.reverse_red().is_empty());
        assert!(check_red_zones(&x, &x, &lay, SwapDirection::Lesser));

        let keys = [3, 1, 4, 2, 5];
        let x = tables(&keys);
        let y = tables(&apply_swap(&keys, 2).unwrap());
        let dir = SwapDirection::of(&x, 2);
        let lay = zone_layout(&x, 2, dir);
        assert!(check_red_zones(&x, &y, &lay, dir));

        // bump a red entry by two
        let x = tables(&[1, 2, 3, 4]);
        let y = tables(&[2, 1, 3, 4]);
        let lay = zone_layout(&x, 1, SwapDirection::Lesser);
        assert_eq!(lay.forward_red(), 3..=4);
        assert!(check_red_zones(&x, &y, &lay, SwapDirection::Lesser));
        let mut bumped = y.forward.clone().into_vec();
        bumped[2] += 2;
        let bad = PdTables {
            forward: crate::pd::PdTable::from_vec_unchecked(bumped),
            reverse: y.reverse.clone(),
        };
        assert!(!check_red_zones(&x, &bad, &lay, SwapDirection::Lesser));
    }

    #[test]
    fn pincer_examples() {
        let p = tables(&[1, 2, 3]);
        assert_eq!(candidate_swap_positions(&p, &tables(&[1, 3, 2])), vec![2]);
        assert_eq!(candidate_swap_positions(&p, &tables(&[2, 1, 3])), vec![1]);
        let (a, b) = (tables(&[1, 2, 3, 4]), tables(&[4, 3, 2, 1]));
        assert_eq!(candidate_swap_positions(&a, &b), vec![2]);
        assert!(verify_swap_match(&a, &b).is_none());
        assert!(candidate_swap_positions(&tables(&[1, 2, 3, 4, 5]), &tables(&[2, 1, 3, 5, 4])).is_empty());
        assert!(candidate_swap_positions(&p, &p).is_empty());
    }

    #[test]
    fn prop_zones_examples() {
        let x = tables(&FIG);
        assert!(check_prop_zones(&x, &x, 3));
        for i in 1..FIG.len() {
            let y = tables(&apply_swap(&FIG, i).unwrap());
            assert!(check_prop_zones(&x, &y, i), "i = {i}");
        }
    }

    #[test]
    fn verify_examples() {
        let w = verify_swap_match(&tables(&[1, 3, 2]), &tables(&[2, 1, 3])).unwrap();
        assert_eq!(w.i, 1);
        assert!(w.checks.all());
        assert!(verify_swap_match(&tables(&[1, 3, 2]), &tables(&[1, 3, 2])).is_none());
        assert!(verify_swap_match(&tables(&[1, 2, 3, 4]), &tables(&[4, 3, 2, 1])).is_none());
    }

    #[test]
    fn class_match_not_reachable_from_the_concrete_pattern() {
        // C(4,1,3,2) is one swap from C(2,3,1,4) (via (2,5,1,4)), although no
        // swap of these two concrete sequences links them
        let w = verify_swap_match(&tables(&[2, 3, 1, 4]), &tables(&[4, 1, 3, 2])).unwrap();
        assert_eq!(w.i, 2);
    }

    #[test]
    fn diagnose_records_failures() {
        let (dir, checks) = diagnose(&tables(&[1, 2, 3]), &tables(&[1, 3, 2]), 1);
        assert_eq!(dir, SwapDirection::Lesser);
        assert!(!checks.position);
        assert!(!checks.realizable);
        let (_, checks) = diagnose(&tables(&[1, 2, 3]), &tables(&[2, 1, 3]), 1);
        assert!(checks.all());
    }

    #[test]
    fn realizability() {
        let x = tables(&[2, 1, 3]);
        assert!(swap_realizable(&x, &tables(&[1, 2, 3]), 1));
        assert!(swap_realizable(&x, &tables(&[1, 3, 2]), 1));
        assert!(!swap_realizable(&x, &tables(&[3, 2, 1]), 1));
        assert!(!swap_realizable(&x, &x, 1));
    }
}
