//! Aho-Corasick automaton over parent-distance tables.
//!
//! The trie is keyed by forward PD values. Reading the text, each global PD
//! value is re-read relative to the current state's depth (a parent further
//! back than the matched prefix counts as absent), so one pass over the text
//! finds every window whose table is in the set. Built from the pattern's
//! table plus its whole neighborhood, it answers swap search in
//! O(n log σ) after an O(m·|ng|) build.

use std::collections::{BTreeMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::neighborhood::neighborhood;
use crate::pd::{adjust_pd, PdStream, PdTable, PdTables};
use crate::pd_matcher::{prepare, MatchKind, MatchReport, SearchOptions, SearchOutcome};
use crate::sequence::Sequence;
use crate::tree::CartesianTree;
use crate::zones::verify_swap_match;

const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct State {
    pub depth: usize,
    pub edges: BTreeMap<usize, usize>,
    pub fail: usize,
    /// index into the pattern list, on accepting states only
    pub accept: Option<usize>,
}

/// Trie plus failure links over equal-length PD tables. State 0 is the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PdAutomaton {
    schema: u32,
    pattern_len: usize,
    patterns: Vec<PdTable>,
    states: Vec<State>,
}

/// One accepted window.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AcHit {
    pub position: usize,
    pub pattern: usize,
}

impl PdAutomaton {
    /// Duplicate tables are stored once. All tables must share one length.
    pub fn build(tables: &[PdTable]) -> Result<Self> {
        let Some(first) = tables.first() else {
            return Err(Error::EmptyPatternSet);
        };
        let m = first.len();
        if m == 0 {
            return Err(Error::EmptyPattern);
        }
        let mut patterns: Vec<PdTable> = Vec::with_capacity(tables.len());
        let mut states = vec![State { depth: 0, edges: BTreeMap::new(), fail: 0, accept: None }];
        for table in tables {
            if table.len() != m {
                return Err(Error::LengthMismatch { left: m, right: table.len() });
            }
            let mut s = 0;
            for &c in table.iter() {
                s = match states[s].edges.get(&c) {
                    Some(&t) => t,
                    None => {
                        let t = states.len();
                        let depth = states[s].depth + 1;
                        states.push(State { depth, edges: BTreeMap::new(), fail: 0, accept: None });
                        states[s].edges.insert(c, t);
                        t
                    }
                };
            }
            if states[s].accept.is_none() {
                states[s].accept = Some(patterns.len());
                patterns.push(table.clone());
            }
        }
        let mut automaton = Self { schema: SCHEMA, pattern_len: m, patterns, states };
        automaton.link();
        Ok(automaton)
    }

    /// Automaton for the swap class of `pattern`: its own table first, then
    /// every neighbor.
    pub fn for_pattern<T: PartialOrd>(pattern: &[T], exact_only: bool) -> Result<Self> {
        if pattern.is_empty() {
            return Err(Error::EmptyPattern);
        }
        let tree = CartesianTree::build(pattern);
        if exact_only {
            return Self::build(&[PdTables::of_tree(&tree).forward]);
        }
        Self::build(&neighborhood(&tree).with_base())
    }

    fn link(&mut self) {
        let mut queue = VecDeque::new();
        let root_children: Vec<usize> = self.states[0].edges.values().copied().collect();
        for t in root_children {
            self.states[t].fail = 0;
            queue.push_back(t);
        }
        while let Some(s) = queue.pop_front() {
            let children: Vec<(usize, usize)> = self.states[s].edges.iter().map(|(&c, &t)| (c, t)).collect();
            for (c, t) in children {
                let mut f = self.states[s].fail;
                let fail = loop {
                    let c2 = adjust_pd(c, self.states[f].depth);
                    if let Some(&g) = self.states[f].edges.get(&c2) {
                        break g;
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = self.states[f].fail;
                };
                self.states[t].fail = fail;
                queue.push_back(t);
            }
        }
    }

    pub fn pattern_len(&self) -> usize {
        self.pattern_len
    }

    pub fn patterns(&self) -> &[PdTable] {
        &self.patterns
    }

    pub fn states(&self) -> &[State] {
        &self.states
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    fn step(&self, mut s: usize, global: usize, transitions: &mut u64) -> usize {
        loop {
            *transitions += 1;
            let c = adjust_pd(global, self.states[s].depth);
            if let Some(&t) = self.states[s].edges.get(&c) {
                return t;
            }
            if s == 0 {
                return 0;
            }
            s = self.states[s].fail;
        }
    }

    /// Whether `table` is one of the stored tables.
    pub fn accepts(&self, table: &PdTable) -> bool {
        let mut s = 0;
        for c in table.iter() {
            match self.states[s].edges.get(c) {
                Some(&t) => s = t,
                None => return false,
            }
        }
        self.states[s].accept.is_some()
    }

    /// Every window of `text` whose forward table is stored.
    pub fn scan<T: PartialOrd>(&self, text: &[T]) -> Vec<AcHit> {
        self.scan_counted(text).0
    }

    /// Like [`scan`](Self::scan), also returning the number of transitions
    /// taken including failure steps.
    pub fn scan_counted<T: PartialOrd>(&self, text: &[T]) -> (Vec<AcHit>, u64) {
        let mut hits = Vec::new();
        let mut transitions = 0;
        let mut s = 0;
        for (pos, global) in PdStream::new(text) {
            s = self.step(s, global, &mut transitions);
            if let Some(pattern) = self.states[s].accept {
                hits.push(AcHit { position: pos + 1 - self.pattern_len, pattern });
            }
        }
        (hits, transitions)
    }

    pub fn to_json(&self) -> Result<String> {
        serde_json::to_string_pretty(self).map_err(|e| Error::MalformedAutomaton(e.to_string()))
    }

    /// Parses and structurally validates a serialized automaton.
    pub fn from_json(text: &str) -> Result<Self> {
        let a: PdAutomaton = serde_json::from_str(text).map_err(|e| Error::MalformedAutomaton(e.to_string()))?;
        a.validate()?;
        Ok(a)
    }

    fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedAutomaton(msg));
        if self.schema != SCHEMA {
            return bad(format!("unsupported schema {}", self.schema));
        }
        if self.pattern_len == 0 || self.patterns.is_empty() || self.states.is_empty() {
            return bad("empty automaton".into());
        }
        if self.states[0].depth != 0 || !self.states[0].edges.contains_key(&0) {
            return bad("root must have depth 0 and an edge on 0".into());
        }
        for (idx, st) in self.states.iter().enumerate() {
            if st.fail >= self.states.len() || (idx != 0 && self.states[st.fail].depth >= st.depth) {
                return bad(format!("state {idx}: bad failure link"));
            }
            for (&c, &t) in &st.edges {
                if t >= self.states.len() || self.states[t].depth != st.depth + 1 || c > st.depth {
                    return bad(format!("state {idx}: bad edge {c} -> {t}"));
                }
            }
            if let Some(p) = st.accept {
                if st.depth != self.pattern_len || p >= self.patterns.len() {
                    return bad(format!("state {idx}: bad accept"));
                }
            }
        }
        for (k, table) in self.patterns.iter().enumerate() {
            if table.len() != self.pattern_len || !self.accepts(table) {
                return bad(format!("pattern {k} is not accepted"));
            }
        }
        Ok(())
    }
}

/// Swap search through the automaton. Hits on the pattern's own table are
/// exact; others are annotated with a swap witness for their window.
pub fn search_ac(p: &Sequence, t: &Sequence, opts: &SearchOptions) -> Result<SearchOutcome> {
    let (p, t) = prepare(p, t, opts.tie_mode)?;
    let automaton = PdAutomaton::for_pattern(p.keys(), opts.exact_only)?;
    Ok(automaton.search(t.keys()))
}

impl PdAutomaton {
    /// Scans `text` and reports matches relative to the first stored table:
    /// hits on it are exact, other hits carry a swap witness against it.
    pub fn search<T: PartialOrd>(&self, text: &[T]) -> SearchOutcome {
        let (hits, transitions) = self.scan_counted(text);
        let reference = PdTables::from_forward(self.patterns[0].clone()).ok();
        let m = self.pattern_len;
        let matches: Vec<MatchReport> = hits
            .into_iter()
            .map(|hit| {
                let window = &text[hit.position - 1..hit.position - 1 + m];
                let witness = match (&reference, hit.pattern) {
                    (Some(r), k) if k > 0 => verify_swap_match(r, &PdTables::of(window)),
                    _ => None,
                };
                let kind = match witness {
                    Some(w) => MatchKind::Swap { i: w.i, direction: w.direction, orientation: w.orientation },
                    None => MatchKind::Exact,
                };
                MatchReport { position: hit.position, kind }
            })
            .collect();
        SearchOutcome { count: matches.len(), matches, comparisons: transitions }
    }
}
