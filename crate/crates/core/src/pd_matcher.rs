//! Sliding-window matcher over forward and reverse parent-distance tables.
//!
//! For every window the two tables are recomputed from scratch (O(m)). Equal
//! forward tables are an exact match; otherwise the pincer yields at most two
//! candidate swap positions and each is checked against the zone rules in
//! both orientations. Worst case Θ(mn), Θ(m) extra space per worker.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::pd::PdTables;
use crate::sequence::{Sequence, TieMode};
use crate::zones::{verify_swap_match_probed, Orientation, Probe, SwapDirection};

/// How a window matched.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MatchKind {
    Exact,
    Swap { i: usize, direction: SwapDirection, orientation: Orientation },
}

/// One matching window, `position` being its 1-based start.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchReport {
    pub position: usize,
    #[serde(flatten)]
    pub kind: MatchKind,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    pub tie_mode: TieMode,
    /// only report windows with the pattern's exact tree
    pub exact_only: bool,
    /// worker threads for the parallel scan
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { tie_mode: TieMode::Strict, exact_only: false, threads: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SearchOutcome {
    pub count: usize,
    pub matches: Vec<MatchReport>,
    /// table-entry comparisons spent on equality and zone checks
    pub comparisons: u64,
}

/// Precomputed pattern side of the matcher.
#[derive(Debug, Clone)]
pub struct PdMatcher {
    pattern: PdTables,
    exact_only: bool,
}

impl PdMatcher {
    /// Keys must be pairwise distinct.
    pub fn new<T: PartialOrd>(pattern: &[T]) -> Self {
        Self { pattern: PdTables::of(pattern), exact_only: false }
    }

    pub fn exact_only(mut self, yes: bool) -> Self {
        self.exact_only = yes;
        self
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern.len()
    }

    /// Classifies one window of the pattern's length.
    pub fn check_window<T: PartialOrd>(&self, window: &[T], probe: &mut Probe) -> Option<MatchKind> {
        let tables = PdTables::of(window);
        self.check_tables(&tables, probe)
    }

    fn check_tables(&self, tables: &PdTables, probe: &mut Probe) -> Option<MatchKind> {
        let exact = self
            .pattern
            .forward
            .iter()
            .zip(tables.forward.iter())
            .all(|(a, b)| {
                probe.comparisons += 1;
                a == b
            });
        if exact {
            return Some(MatchKind::Exact);
        }
        if self.exact_only {
            return None;
        }
        verify_swap_match_probed(&self.pattern, tables, probe).map(|w| MatchKind::Swap {
            i: w.i,
            direction: w.direction,
            orientation: w.orientation,
        })
    }

    /// Scans `text` window by window, sequentially.
    pub fn scan<T: PartialOrd>(&self, text: &[T]) -> SearchOutcome {
        self.scan_range(text, 1, self.window_count(text.len()))
    }

    /// Splits the window starts into contiguous chunks and scans them on
    /// `threads` workers; chunks overlap by `m - 1` keys. Results come back
    /// in position order.
    pub fn scan_parallel<T: PartialOrd + Sync>(&self, text: &[T], threads: usize) -> Result<SearchOutcome> {
        let windows = self.window_count(text.len());
        if threads <= 1 || windows < 2 {
            return Ok(self.scan(text));
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| Error::ThreadPool(e.to_string()))?;
        let chunk = windows.div_ceil(threads * 4).max(1);
        let starts: Vec<usize> = (1..=windows).step_by(chunk).collect();
        let parts: Vec<SearchOutcome> = pool.install(|| {
            starts
                .par_iter()
                .map(|&first| self.scan_range(text, first, (first + chunk - 1).min(windows)))
                .collect()
        });
        let mut out = SearchOutcome::default();
        for part in parts {
            out.count += part.count;
            out.comparisons += part.comparisons;
            out.matches.extend(part.matches);
        }
        Ok(out)
    }

    fn window_count(&self, n: usize) -> usize {
        let m = self.pattern.len();
        if m == 0 || m > n {
            0
        } else {
            n - m + 1
        }
    }

    fn scan_range<T: PartialOrd>(&self, text: &[T], first: usize, last: usize) -> SearchOutcome {
        let m = self.pattern.len();
        let mut probe = Probe::default();
        let mut matches = Vec::new();
        for start in first..=last {
            let window = &text[start - 1..start - 1 + m];
            if let Some(kind) = self.check_window(window, &mut probe) {
                matches.push(MatchReport { position: start, kind });
            }
        }
        SearchOutcome { count: matches.len(), matches, comparisons: probe.comparisons }
    }
}

/// Counts and reports every window of `t` that matches `p` exactly or after
/// one swap, using the double parent-distance method.
pub fn search_pd(p: &Sequence, t: &Sequence, opts: &SearchOptions) -> Result<SearchOutcome> {
    let (p, t) = prepare(p, t, opts.tie_mode)?;
    let matcher = PdMatcher::new(p.keys()).exact_only(opts.exact_only);
    matcher.scan_parallel(t.keys(), opts.threads)
}

/// Validates and tie-processes a pattern/text pair for any search method.
pub fn prepare(p: &Sequence, t: &Sequence, mode: TieMode) -> Result<(Sequence, Sequence)> {
    if p.is_empty() {
        return Err(Error::EmptyPattern);
    }
    let p = p.prepare(mode, p.len())?;
    let t = t.prepare(mode, p.len())?;
    Ok((p, t))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(keys: &[f64]) -> Sequence {
        Sequence::new(keys.to_vec()).unwrap()
    }

    #[test]
    fn running_example() {
        let out = search_pd(&seq(&[1., 3., 2.]), &seq(&[2., 1., 3., 5., 4.]), &SearchOptions::default()).unwrap();
        assert_eq!(out.count, 3);
        let positions: Vec<_> = out.matches.iter().map(|m| m.position).collect();
        assert_eq!(positions, vec![1, 2, 3]);
        assert_eq!(out.matches[2].kind, MatchKind::Exact);
        assert!(matches!(out.matches[0].kind, MatchKind::Swap { i: 1, .. }));
        assert!(matches!(out.matches[1].kind, MatchKind::Swap { .. }));
    }

    #[test]
    fn single_key_pattern_matches_everywhere() {
        let out = search_pd(&seq(&[7.]), &seq(&[5., 1., 9.]), &SearchOptions::default()).unwrap();
        assert_eq!(out.count, 3);
        assert!(out.matches.iter().all(|m| m.kind == MatchKind::Exact));
    }

    #[test]
    fn two_key_pattern_matches_everywhere() {
        let out = search_pd(&seq(&[1., 2.]), &seq(&[3., 1., 4.]), &SearchOptions::default()).unwrap();
        assert_eq!(out.count, 2);
    }

    #[test]
    fn pattern_longer_than_text() {
        let out = search_pd(&seq(&[1., 2., 3.]), &seq(&[1., 2.]), &SearchOptions::default()).unwrap();
        assert_eq!(out, SearchOutcome::default());
    }

    #[test]
    fn exact_only() {
        let opts = SearchOptions { exact_only: true, ..Default::default() };
        let out = search_pd(&seq(&[1., 3., 2.]), &seq(&[2., 1., 3., 5., 4.]), &opts).unwrap();
        assert_eq!(out.count, 1);
        assert_eq!(out.matches[0].position, 3);
    }

    #[test]
    fn ties() {
        let p = seq(&[1., 3., 2.]);
        let t = seq(&[2., 1., 2., 5., 4.]);
        let err = search_pd(&p, &t, &SearchOptions::default()).unwrap_err();
        assert_eq!(err, Error::Tie { first: 1, second: 3 });
        let lenient = SearchOptions { tie_mode: TieMode::Lenient, ..Default::default() };
        assert!(search_pd(&p, &t, &lenient).is_ok());
        assert_eq!(search_pd(&seq(&[]), &t, &SearchOptions::default()), Err(Error::EmptyPattern));
    }

    #[test]
    fn parallel_matches_sequential() {
        let text: Vec<f64> = (0..500).map(|k| ((k * 7919) % 503) as f64).collect();
        let pattern = [3., 1., 4., 2., 5.];
        let matcher = PdMatcher::new(&pattern);
        let seq_out = matcher.scan(&text);
        let par_out = matcher.scan_parallel(&text, 4).unwrap();
        assert_eq!(seq_out, par_out);
        assert!(seq_out.count > 0);
    }
}
