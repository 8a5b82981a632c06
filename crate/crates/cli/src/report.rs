//! Serializable reports. Every JSON document carries `"schema": 1`.

use ctswap::swap_graph::GraphStats;
use ctswap::{MatchKind, MatchReport, PdTable};
use serde::{Deserialize, Serialize};

pub const SCHEMA: u32 = 1;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub schema: u32,
    pub method: String,
    pub pattern_len: usize,
    pub text_len: usize,
    pub exact_only: bool,
    pub count: usize,
    pub matches: Vec<MatchReport>,
    pub comparisons: u64,
}

impl SearchReport {
    pub fn positions(&self) -> Vec<usize> {
        self.matches.iter().map(|m| m.position).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("count: {}\n", self.count);
        for m in &self.matches {
            out.push_str(&format!("{}\t{}\n", m.position, describe(&m.kind)));
        }
        out
    }
}

fn describe(kind: &MatchKind) -> String {
    match kind {
        MatchKind::Exact => "exact".into(),
        MatchKind::Swap { i, direction, orientation } => {
            format!("swap i={i} {} {}", lower(direction), lower(orientation))
        }
    }
}

fn lower<T: Serialize>(value: &T) -> String {
    serde_json::to_value(value).ok().and_then(|v| v.as_str().map(String::from)).unwrap_or_default()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PositionNeighbors {
    pub i: usize,
    pub count: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tables: Option<Vec<PdTable>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct NeighborsReport {
    pub schema: u32,
    pub pattern_len: usize,
    pub base: PdTable,
    pub count: usize,
    pub formula_count: usize,
    pub lower_bound: usize,
    pub upper_bound: usize,
    pub upper_bound_holds: bool,
    pub per_position: Vec<PositionNeighbors>,
}

impl NeighborsReport {
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "neighbors: {}\nbase: {}\nbounds: {} <= {} <= {}{}\n",
            self.count,
            self.base,
            self.lower_bound,
            self.count,
            self.upper_bound,
            if self.upper_bound_holds { "" } else { " (upper bound exceeded)" }
        );
        for p in &self.per_position {
            out.push_str(&format!("i={}\t{}\n", p.i, p.count));
            for t in p.tables.iter().flatten() {
                out.push_str(&format!("  {t}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphReport {
    pub schema: u32,
    #[serde(flatten)]
    pub stats: GraphStats,
}

impl GraphReport {
    pub fn to_text(&self) -> String {
        let s = &self.stats;
        format!(
            "n: {}\nvertices: {}\nedges: {}\nconnected: {} ({} components)\ndiameter: {} (lower bound {:.3})\n\
             degree: min {} max {} mean {:.3} (bounds {}..{})\n",
            s.n,
            s.vertices,
            s.edges,
            s.connected,
            s.components,
            s.diameter,
            s.diameter_lower_bound,
            s.degree.min,
            s.degree.max,
            s.degree.mean,
            s.degree.lower_bound,
            s.degree.upper_bound
        )
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRow {
    pub input: String,
    pub run: usize,
    pub seconds: f64,
    pub comparisons: u64,
    pub matches: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchReport {
    pub schema: u32,
    pub method: String,
    pub pattern_len: usize,
    pub text_len: usize,
    pub seed: u64,
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    pub fn to_text(&self) -> String {
        let mut out = format!("{:<8} {:>4} {:>12} {:>14} {:>9}\n", "input", "run", "seconds", "comparisons", "matches");
        for r in &self.rows {
            out.push_str(&format!(
                "{:<8} {:>4} {:>12.6} {:>14} {:>9}\n",
                r.input, r.run, r.seconds, r.comparisons, r.matches
            ));
        }
        out
    }
}
