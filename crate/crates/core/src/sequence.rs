//! Numeric key sequences and tie handling.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::pd::{forward_pd, reverse_pd, PdTable, PdTables};
use crate::tree::CartesianTree;
use crate::zones::apply_swap;

/// How equal keys are treated.
///
/// Everything in this crate assumes pairwise distinct keys inside any window
/// that gets compared. `Strict` enforces that; `Lenient` breaks ties by
/// position, the earlier index being the smaller key.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum TieMode {
    #[default]
    Strict,
    Lenient,
}

/// A sequence of finite `f64` keys.
#[derive(Debug, Clone, PartialEq)]
pub struct Sequence {
    keys: Vec<f64>,
}

impl Sequence {
    /// Rejects NaN and infinities.
    pub fn new(keys: Vec<f64>) -> Result<Self> {
        if let Some(idx) = keys.iter().position(|k| !k.is_finite()) {
            return Err(Error::NonFinite { position: idx + 1 });
        }
        Ok(Self { keys })
    }

    pub fn keys(&self) -> &[f64] {
        &self.keys
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    /// Fails with the first pair of equal keys, anywhere in the sequence.
    pub fn check_distinct(&self) -> Result<()> {
        self.check_window_distinct(self.len().max(1))
    }

    /// Fails if two equal keys are less than `window` positions apart, i.e.
    /// if some window of that length would contain a tie.
    pub fn check_window_distinct(&self, window: usize) -> Result<()> {
        if window <= 1 {
            return Ok(());
        }
        let mut last_seen: HashMap<u64, usize> = HashMap::with_capacity(self.len());
        for (idx, key) in self.keys.iter().enumerate() {
            if let Some(prev) = last_seen.insert(key_bits(*key), idx) {
                if idx - prev < window {
                    return Err(Error::Tie { first: prev + 1, second: idx + 1 });
                }
            }
        }
        Ok(())
    }

    /// Replaces every key by its rank under (key, position) order, so ties
    /// resolve with the earlier position smaller.
    pub fn tie_broken(&self) -> Sequence {
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by(|&a, &b| self.keys[a].total_cmp(&self.keys[b]).then(a.cmp(&b)));
        let mut ranks = vec![0.0; self.len()];
        for (rank, idx) in order.into_iter().enumerate() {
            ranks[idx] = rank as f64;
        }
        Sequence { keys: ranks }
    }

    /// Returns keys fit for comparing windows of length `window` under `mode`.
    pub fn prepare(&self, mode: TieMode, window: usize) -> Result<Sequence> {
        match mode {
            TieMode::Strict => {
                self.check_window_distinct(window)?;
                Ok(self.clone())
            }
            TieMode::Lenient => Ok(self.tie_broken()),
        }
    }

    pub fn cartesian_tree(&self) -> Result<CartesianTree> {
        self.check_distinct()?;
        Ok(CartesianTree::build(&self.keys))
    }

    pub fn forward_pd(&self) -> Result<PdTable> {
        self.check_distinct()?;
        Ok(forward_pd(&self.keys))
    }

    pub fn reverse_pd(&self) -> Result<PdTable> {
        self.check_distinct()?;
        Ok(reverse_pd(&self.keys))
    }

    pub fn tables(&self) -> Result<PdTables> {
        self.check_distinct()?;
        Ok(PdTables::of(&self.keys))
    }

    /// `τ(self, i)`.
    pub fn swapped(&self, i: usize) -> Result<Sequence> {
        Ok(Sequence { keys: apply_swap(&self.keys, i)? })
    }
}

impl TryFrom<Vec<f64>> for Sequence {
    type Error = Error;

    fn try_from(keys: Vec<f64>) -> Result<Self> {
        Sequence::new(keys)
    }
}

// -0.0 and 0.0 compare equal, so they must collide here too.
fn key_bits(key: f64) -> u64 {
    if key == 0.0 {
        0
    } else {
        key.to_bits()
    }
}
