//! Rayon-backed [`Executor`]: candidates of one level are evaluated in
//! parallel, results come back in input order.

use std::sync::Arc;

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuilder};
use rbm_core::{Executor, Pattern};

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "RBM_THREADS";

#[derive(Clone, Default)]
pub struct Parallel {
    pool: Option<Arc<ThreadPool>>,
}

impl Parallel {
    /// Uses rayon's global pool.
    pub fn global() -> Self {
        Parallel::default()
    }

    pub fn with_threads(threads: usize) -> Result<Self, String> {
        if threads == 0 {
            return Err("thread count must be at least 1".into());
        }
        let pool = ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .map_err(|e| e.to_string())?;
        Ok(Parallel {
            pool: Some(Arc::new(pool)),
        })
    }

    /// Reads [`THREADS_ENV`]; unset or empty means the global pool.
    pub fn from_env() -> Result<Self, String> {
        match std::env::var(THREADS_ENV) {
            Ok(v) if !v.trim().is_empty() => {
                let n = v
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| format!("{THREADS_ENV}={v:?} is not a thread count"))?;
                Parallel::with_threads(n)
            }
            _ => Ok(Parallel::global()),
        }
    }
}

impl Executor for Parallel {
    fn map<T, F>(&self, patterns: &[Pattern], f: F) -> Vec<T>
    where
        T: Send,
        F: Fn(&Pattern) -> T + Sync + Send,
    {
        let run = || patterns.par_iter().map(&f).collect();
        match &self.pool {
            Some(pool) => pool.install(run),
            None => run(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn preserves_order() {
        let pats: Vec<Pattern> = (1..200).map(Pattern::singleton).collect();
        let exec = Parallel::with_threads(3).unwrap();
        let got = exec.map(&pats, |p| p.items()[0]);
        assert_eq!(got, (1..200).collect::<Vec<_>>());
        assert!(Parallel::with_threads(0).is_err());
    }
}
