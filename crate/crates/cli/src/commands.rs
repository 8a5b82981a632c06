//! Subcommand definitions and their implementations.

use std::fs;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use ctswap::neighborhood::{count_neighbors_formula, degree_lower_bound, degree_upper_bound};
use ctswap::oracle::SEARCH_GUARD;
use ctswap::pd_matcher::PdMatcher;
use ctswap::swap_graph::DEFAULT_GUARD;
use ctswap::{
    neighborhood, search_ac, search_oracle, search_pd, PdAutomaton, SearchOptions, SearchOutcome, Sequence,
    SwapGraph, TieMode,
};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::input::{read_series, InputError};
use crate::report::{BenchReport, BenchRow, GraphReport, NeighborsReport, PositionNeighbors, SearchReport, SCHEMA};

/// Environment variable raising the `graph` size guard.
pub const GUARD_ENV: &str = "CTSWAP_GUARD_N";
/// `--verify` skips the oracle above this many window-times-pattern steps.
const ORACLE_BUDGET: usize = 20_000_000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error("{0}")]
    Core(#[from] ctswap::Error),
    #[error("{0}")]
    Usage(String),
    #[error("assertion failed: {0}")]
    Assertion(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Assertion(_) => 1,
            _ => 2,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "ctswap", version, about = "Cartesian tree matching with one adjacent swap")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find every window of TEXT matching PATTERN exactly or after one swap
    Search(SearchArgs),
    /// Run a saved automaton over TEXT
    Scan(ScanArgs),
    /// Build the swap automaton of PATTERN and save it as JSON
    BuildAutomaton(BuildArgs),
    /// List the trees one swap away from PATTERN's tree
    Neighbors(NeighborsArgs),
    /// Build and analyze the swap graph of all trees on N nodes
    Graph(GraphArgs),
    /// Time a search method on seeded random and comb inputs
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Pd,
    Ac,
    Oracle,
}

impl Method {
    fn name(self) -> &'static str {
        match self {
            Method::Pd => "pd",
            Method::Ac => "ac",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Output {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NeighborsOutput {
    Text,
    Json,
    Tables,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ties {
    Strict,
    Lenient,
}

impl From<Ties> for TieMode {
    fn from(t: Ties) -> TieMode {
        match t {
            Ties::Strict => TieMode::Strict,
            Ties::Lenient => TieMode::Lenient,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Export {
    Dot,
    Edges,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    pub pattern: PathBuf,
    pub text: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Pd)]
    pub method: Method,
    /// Report only windows with the pattern's own tree
    #[arg(long)]
    pub exact_only: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    #[arg(long, value_enum, default_value_t = Ties::Strict)]
    pub tie_mode: Ties,
    /// Also run the other methods and fail on any disagreement
    #[arg(long)]
    pub verify: bool,
    /// Worker threads for the pd method
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    pub automaton: PathBuf,
    pub text: PathBuf,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
    #[arg(long, value_enum, default_value_t = Ties::Strict)]
    pub tie_mode: Ties,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    pub pattern: PathBuf,
    /// Destination file; stdout when absent
    #[arg(short, long)]
    pub out: Option<PathBuf>,
    #[arg(long)]
    pub exact_only: bool,
    #[arg(long, value_enum, default_value_t = Ties::Strict)]
    pub tie_mode: Ties,
}

#[derive(Debug, Args)]
pub struct NeighborsArgs {
    pub pattern: PathBuf,
    #[arg(long, value_enum, default_value_t = NeighborsOutput::Text)]
    pub output: NeighborsOutput,
    #[arg(long, value_enum, default_value_t = Ties::Strict)]
    pub tie_mode: Ties,
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    #[arg(long)]
    pub n: usize,
    /// Print the graph itself instead of statistics
    #[arg(long, value_enum)]
    pub export: Option<Export>,
    /// Print statistics (the default without --export)
    #[arg(long)]
    pub stats: bool,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 16)]
    pub pattern_len: usize,
    #[arg(long, default_value_t = 100_000)]
    pub text_len: usize,
    #[arg(long, value_enum, default_value_t = Method::Pd)]
    pub method: Method,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 3)]
    pub repeat: usize,
    #[arg(long, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

/// Runs one command and returns what it prints on stdout.
pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Search(a) => search(&a),
        Command::Scan(a) => scan(&a),
        Command::BuildAutomaton(a) => build_automaton(&a),
        Command::Neighbors(a) => neighbors(&a),
        Command::Graph(a) => graph(&a),
        Command::Bench(a) => bench(&a),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).unwrap_or_default();
    s.push('\n');
    s
}

fn run_method(method: Method, p: &Sequence, t: &Sequence, opts: &SearchOptions) -> Result<SearchOutcome, CliError> {
    Ok(match method {
        Method::Pd => search_pd(p, t, opts)?,
        Method::Ac => search_ac(p, t, opts)?,
        Method::Oracle => search_oracle(p, t, opts)?,
    })
}

fn search(a: &SearchArgs) -> Result<String, CliError> {
    if a.threads == 0 {
        return Err(CliError::Usage("--threads must be at least 1".into()));
    }
    let p = read_series(&a.pattern)?;
    let t = read_series(&a.text)?;
    let opts = SearchOptions { tie_mode: a.tie_mode.into(), exact_only: a.exact_only, threads: a.threads };
    let outcome = run_method(a.method, &p, &t, &opts)?;
    if a.verify {
        let positions = |o: &SearchOutcome| o.matches.iter().map(|m| m.position).collect::<Vec<_>>();
        let mut others = vec![Method::Pd, Method::Ac];
        let m = p.len();
        if m <= SEARCH_GUARD && t.len().saturating_mul(m * m) <= ORACLE_BUDGET {
            others.push(Method::Oracle);
        }
        for other in others.into_iter().filter(|&o| o != a.method) {
            let o = run_method(other, &p, &t, &opts)?;
            if positions(&o) != positions(&outcome) {
                return Err(CliError::Assertion(format!(
                    "{} found {} matches, {} found {}",
                    a.method.name(),
                    outcome.count,
                    other.name(),
                    o.count
                )));
            }
        }
    }
    let report = SearchReport {
        schema: SCHEMA,
        method: a.method.name().into(),
        pattern_len: p.len(),
        text_len: t.len(),
        exact_only: a.exact_only,
        count: outcome.count,
        matches: outcome.matches,
        comparisons: outcome.comparisons,
    };
    Ok(match a.output {
        Output::Text => report.to_text(),
        Output::Json => json(&report),
    })
}

fn load_automaton(path: &PathBuf) -> Result<PdAutomaton, CliError> {
    let text = fs::read_to_string(path).map_err(|source| InputError::Io { path: path.clone(), source })?;
    Ok(PdAutomaton::from_json(&text)?)
}

fn scan(a: &ScanArgs) -> Result<String, CliError> {
    let automaton = load_automaton(&a.automaton)?;
    let t = read_series(&a.text)?.prepare(a.tie_mode.into(), automaton.pattern_len())?;
    let outcome = automaton.search(t.keys());
    let report = SearchReport {
        schema: SCHEMA,
        method: "ac".into(),
        pattern_len: automaton.pattern_len(),
        text_len: t.len(),
        exact_only: automaton.patterns().len() == 1,
        count: outcome.count,
        matches: outcome.matches,
        comparisons: outcome.comparisons,
    };
    Ok(match a.output {
        Output::Text => report.to_text(),
        Output::Json => json(&report),
    })
}

fn build_automaton(a: &BuildArgs) -> Result<String, CliError> {
    let p = read_series(&a.pattern)?;
    let p = p.prepare(a.tie_mode.into(), p.len())?;
    let automaton = PdAutomaton::for_pattern(p.keys(), a.exact_only)?;
    let mut text = automaton.to_json()?;
    text.push('\n');
    match &a.out {
        Some(path) => {
            fs::write(path, text).map_err(|source| InputError::Io { path: path.clone(), source })?;
            Ok(format!(
                "wrote {} ({} states, {} tables)\n",
                path.display(),
                automaton.state_count(),
                automaton.patterns().len()
            ))
        }
        None => Ok(text),
    }
}

fn neighbors(a: &NeighborsArgs) -> Result<String, CliError> {
    let p = read_series(&a.pattern)?;
    let p = p.prepare(a.tie_mode.into(), p.len())?;
    let tree = ctswap::CartesianTree::build(p.keys());
    let set = neighborhood(&tree);
    let n = p.len();
    let formula = count_neighbors_formula(&tree);
    if formula != set.len() {
        return Err(CliError::Assertion(format!("formula gives {formula}, enumeration {}", set.len())));
    }
    if set.len() < degree_lower_bound(n) {
        return Err(CliError::Assertion(format!("{} neighbors, below n - 1 = {}", set.len(), n - 1)));
    }
    let upper = degree_upper_bound(n);
    if set.len() > upper {
        eprintln!("warning: {} neighbors exceeds the upper bound {upper}", set.len());
    }
    let with_tables = a.output != NeighborsOutput::Text;
    let report = NeighborsReport {
        schema: SCHEMA,
        pattern_len: n,
        base: set.base.clone(),
        count: set.len(),
        formula_count: formula,
        lower_bound: degree_lower_bound(n),
        upper_bound: upper,
        upper_bound_holds: set.len() <= upper,
        per_position: set
            .per_position
            .iter()
            .map(|(i, tables)| PositionNeighbors {
                i: *i,
                count: tables.len(),
                tables: with_tables.then(|| tables.clone()),
            })
            .collect(),
    };
    Ok(match a.output {
        NeighborsOutput::Text => report.to_text(),
        NeighborsOutput::Json => json(&report),
        NeighborsOutput::Tables => set.neighbors.iter().map(|t| format!("{t}\n")).collect(),
    })
}

fn guard_from_env() -> Result<usize, CliError> {
    match std::env::var(GUARD_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{GUARD_ENV}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_GUARD),
    }
}

fn graph(a: &GraphArgs) -> Result<String, CliError> {
    let g = SwapGraph::build_with_guard(a.n, guard_from_env()?)?;
    if let Some(export) = a.export {
        if !a.stats {
            return Ok(match export {
                Export::Dot => g.to_dot(),
                Export::Edges => g.to_edge_list(),
            });
        }
    }
    let report = GraphReport { schema: SCHEMA, stats: g.stats() };
    let mut out = match a.output {
        Output::Text => report.to_text(),
        Output::Json => json(&report),
    };
    if let (Some(export), true) = (a.export, a.stats) {
        out.push_str(&match export {
            Export::Dot => g.to_dot(),
            Export::Edges => g.to_edge_list(),
        });
    }
    Ok(out)
}

fn bench(a: &BenchArgs) -> Result<String, CliError> {
    let (m, n) = (a.pattern_len, a.text_len);
    if m == 0 || m > n {
        return Err(CliError::Usage("need 1 <= --pattern-len <= --text-len".into()));
    }
    if a.method == Method::Oracle && m > SEARCH_GUARD {
        return Err(CliError::Core(ctswap::Error::SizeTooLarge { n: m, limit: SEARCH_GUARD }));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
    let shuffled = |rng: &mut ChaCha8Rng, len: usize| {
        let mut v: Vec<f64> = (1..=len).map(|k| k as f64).collect();
        v.shuffle(rng);
        v
    };
    let random = (shuffled(&mut rng, m), shuffled(&mut rng, n));
    // increasing text against an increasing pattern swapped in the middle
    let mut comb_pattern: Vec<f64> = (1..=m).map(|k| k as f64).collect();
    if m >= 2 {
        comb_pattern.swap(m / 2 - 1, m / 2);
    }
    let comb = (comb_pattern, (1..=n).map(|k| k as f64).collect::<Vec<_>>());

    let mut rows = Vec::new();
    for run in 0..a.repeat {
        for (name, (p, t)) in [("random", &random), ("comb", &comb)] {
            let start = Instant::now();
            let (matches, comparisons) = match a.method {
                Method::Pd => {
                    let out = PdMatcher::new(p).scan(t);
                    (out.count, out.comparisons)
                }
                Method::Ac => {
                    let (hits, transitions) = PdAutomaton::for_pattern(p, false)?.scan_counted(t);
                    (hits.len(), transitions)
                }
                Method::Oracle => (ctswap::oracle::oracle_search(p, t, false)?.len(), 0),
            };
            rows.push(BenchRow {
                input: name.into(),
                run,
                seconds: start.elapsed().as_secs_f64(),
                comparisons,
                matches,
            });
        }
    }
    let report =
        BenchReport { schema: SCHEMA, method: a.method.name().into(), pattern_len: m, text_len: n, seed: a.seed, rows };
    Ok(match a.output {
        Output::Text => report.to_text(),
        Output::Json => json(&report),
    })
}
