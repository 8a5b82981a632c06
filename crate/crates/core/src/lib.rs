//! Cartesian tree pattern matching on numeric sequences, exact and up to one
//! adjacent swap.
//!
//! Trees are handled through their parent-distance tables. Two matchers are
//! provided: a sliding-window check over forward and reverse tables
//! ([`search_pd`]) and an Aho-Corasick automaton over a pattern's whole swap
//! neighborhood ([`search_ac`]). [`oracle`] holds brute-force references and
//! [`swap_graph`] the graph of trees one swap apart.
//!
//! Positions are 1-based throughout.

pub mod automaton;
pub mod error;
pub mod neighborhood;
pub mod oracle;
pub mod pd;
pub mod pd_matcher;
pub mod sequence;
pub mod swap_graph;
pub mod tree;
pub mod zones;

pub use automaton::{search_ac, PdAutomaton};
pub use error::{Error, Result};
pub use neighborhood::{enumerate_neighbors, neighborhood, NeighborSet};
pub use oracle::search_oracle;
pub use pd::{forward_pd, pd_to_tree, reverse_pd, tree_to_pd, PdTable, PdTables};
pub use pd_matcher::{search_pd, MatchKind, MatchReport, SearchOptions, SearchOutcome};
pub use sequence::{Sequence, TieMode};
pub use swap_graph::SwapGraph;
pub use tree::CartesianTree;
pub use zones::{apply_swap, verify_swap_match, Orientation, SwapDirection, SwapWitness};
