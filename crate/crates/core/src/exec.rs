//! Per-level evaluation strategy.
//!
//! Candidate evaluation within one level is independent per pattern. The
//! miner hands each level to an [`Executor`]; results come back in input
//! order, so the mined sets do not depend on the strategy.

use alloc::vec::Vec;

use crate::pattern::Pattern;

pub trait Executor {
    fn map<T, F>(&self, patterns: &[Pattern], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Pattern) -> T + Sync + Send;
}

/// Evaluates candidates one after another on the calling thread.
#[derive(Clone, Copy, Debug, Default)]
pub struct Sequential;

impl Executor for Sequential {
    fn map<T, F>(&self, patterns: &[Pattern], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Pattern) -> T + Sync + Send,
    {
        patterns.iter().map(f).collect()
    }
}
