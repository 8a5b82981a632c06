//! The swap graph `G_n`: one vertex per Cartesian tree on `n` nodes, an edge
//! between two trees when a single adjacent swap turns (some sequence of) one
//! into the other.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::neighborhood::{degree_lower_bound, degree_upper_bound, neighborhood};
use crate::pd::{tree_to_pd, PdTable};
use crate::tree::CartesianTree;

/// Largest `n` built unless the caller raises the guard. `C(10) = 16796`.
pub const DEFAULT_GUARD: usize = 10;

#[derive(Debug, Clone)]
pub struct SwapGraph {
    n: usize,
    vertices: Vec<PdTable>,
    index: HashMap<PdTable, usize>,
    adj: Vec<Vec<usize>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub mean: f64,
    pub lower_bound: usize,
    pub upper_bound: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphStats {
    pub n: usize,
    pub vertices: usize,
    pub edges: usize,
    pub connected: bool,
    pub components: usize,
    /// diameter of the largest component
    pub diameter: usize,
    pub diameter_lower_bound: f64,
    pub degree: DegreeStats,
}

impl SwapGraph {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with_guard(n, DEFAULT_GUARD)
    }

    pub fn build_with_guard(n: usize, guard: usize) -> Result<Self> {
        if n > guard {
            return Err(Error::SizeTooLarge { n, limit: guard });
        }
        let trees = CartesianTree::enumerate(n);
        let vertices: Vec<PdTable> = trees.iter().map(tree_to_pd).collect();
        let index: HashMap<PdTable, usize> =
            vertices.iter().cloned().enumerate().map(|(k, v)| (v, k)).collect();
        let adj: Vec<Vec<usize>> = trees
            .par_iter()
            .map(|t| {
                let mut out: Vec<usize> = neighborhood(t).neighbors.iter().map(|v| index[v]).collect();
                out.sort_unstable();
                out
            })
            .collect();
        Ok(Self { n, vertices, index, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> &[PdTable] {
        &self.vertices
    }

    pub fn index_of(&self, table: &PdTable) -> Option<usize> {
        self.index.get(table).copied()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Undirected edges `(u, v)` with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, vs)| vs.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Whether every edge appears in both adjacency lists.
    pub fn is_symmetric(&self) -> bool {
        self.adj
            .iter()
            .enumerate()
            .all(|(u, vs)| vs.iter().all(|&v| self.adj[v].binary_search(&u).is_ok()))
    }

    fn bfs(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertices.len()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap_or(0);
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(d + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Component label per vertex.
    pub fn components(&self) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.vertices.len()];
        let mut next = 0;
        for s in 0..self.vertices.len() {
            if label[s] != usize::MAX {
                continue;
            }
            for (v, d) in self.bfs(s).into_iter().enumerate() {
                if d.is_some() {
                    label[v] = next;
                }
            }
            next += 1;
        }
        label
    }

    pub fn is_connected(&self) -> bool {
        self.components().iter().all(|&c| c == 0)
    }

    /// Eccentricity maximum over the largest component, by BFS from every
    /// vertex in parallel.
    pub fn diameter(&self) -> usize {
        if self.vertices.is_empty() {
            return 0;
        }
        let label = self.components();
        let mut sizes: HashMap<usize, usize> = HashMap::new();
        for &c in &label {
            *sizes.entry(c).or_default() += 1;
        }
        let (&biggest, _) = sizes.iter().max_by_key(|(c, s)| (**s, std::cmp::Reverse(**c))).unwrap_or((&0, &0));
        (0..self.vertices.len())
            .into_par_iter()
            .filter(|&v| label[v] == biggest)
            .map(|v| self.bfs(v).into_iter().flatten().max().unwrap_or(0))
            .max()
            .unwrap_or(0)
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let degrees: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        let total: usize = degrees.iter().sum();
        DegreeStats {
            min: degrees.iter().copied().min().unwrap_or(0),
            max: degrees.iter().copied().max().unwrap_or(0),
            mean: if degrees.is_empty() { 0.0 } else { total as f64 / degrees.len() as f64 },
            lower_bound: degree_lower_bound(self.n),
            upper_bound: degree_upper_bound(self.n),
        }
    }

    pub fn stats(&self) -> GraphStats {
        let label = self.components();
        let components = label.iter().copied().max().map_or(0, |c| c + 1);
        GraphStats {
            n: self.n,
            vertices: self.vertex_count(),
            edges: self.edge_count(),
            connected: components <= 1,
            components,
            diameter: self.diameter(),
            diameter_lower_bound: diameter_lower_bound(self.n),
            degree: self.degree_stats(),
        }
    }

    /// Graphviz rendering, vertices labelled by their forward tables.
    pub fn to_dot(&self) -> String {
        let mut out = format!("graph G{} {{\n", self.n);
        for (k, v) in self.vertices.iter().enumerate() {
            let _ = writeln!(out, "  v{k} [label=\"{v}\"];");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        out.push_str("}\n");
        out
    }

    /// One edge per line, both endpoints as forward tables.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{}\t{}", self.vertices[u], self.vertices[v]);
        }
        out
    }
}

/// `k(n) = (2n ln 2 - ln(n+1)) / (ln 3 + ln n)`, a lower bound on the
/// diameter of `G_n`.
pub fn diameter_lower_bound(n: usize) -> f64 {
    if n == 0 {
        return 0.0;
    }
    let n = n as f64;
    let denom = 3f64.ln() + n.ln();
    (2.0 * n * 2f64.ln() - (n + 1.0).ln()) / denom
}
