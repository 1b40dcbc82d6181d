use crate::error::{Error, Result};

/// Default cap on enumerated objects (tableaux, words) per call.
pub const DEFAULT_GUARD: u64 = 10_000_000;

/// Resource guard and parallelism degree shared by the enumeration engines.
///
/// Results never depend on `workers`; only wall-clock time does.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Config {
    pub guard: u64,
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            guard: DEFAULT_GUARD,
            workers: 1,
        }
    }
}

impl Config {
    pub fn new(guard: u64, workers: usize) -> Result<Self> {
        if guard == 0 {
            return Err(Error::Range("guard must be positive".into()));
        }
        if workers == 0 {
            return Err(Error::Range("worker count must be at least 1".into()));
        }
        Ok(Config { guard, workers })
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    pub fn with_guard(mut self, guard: u64) -> Self {
        self.guard = guard.max(1);
        self
    }

    /// Runs `op` on a pool with exactly `self.workers` threads. Calls made from
    /// inside a pool of the right size run inline.
    pub fn install<R, F>(&self, op: F) -> R
    where
        R: Send,
        F: FnOnce() -> R + Send,
    {
        if rayon::current_thread_index().is_some() && rayon::current_num_threads() == self.workers {
            return op();
        }
        match rayon::ThreadPoolBuilder::new().num_threads(self.workers).build() {
            Ok(pool) => pool.install(op),
            Err(_) => op(),
        }
    }

    pub(crate) fn check(&self, what: impl Into<String>, count: u128) -> Result<()> {
        if count > self.guard as u128 {
            Err(Error::GuardExceeded {
                what: what.into(),
                limit: self.guard,
            })
        } else {
            Ok(())
        }
    }
}
