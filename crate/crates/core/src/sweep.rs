//! Data-parallel sweeps over independent instances.
//!
//! With the `parallel` feature (on by default) [`Executor::Parallel`] runs on
//! the rayon pool; without it, it falls back to the sequential loop.

use std::ops::Range;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Executor {
    Sequential,
    #[default]
    Parallel,
}

impl Executor {
    /// True when `Parallel` actually runs on more than one thread.
    pub fn is_parallel(self) -> bool {
        cfg!(feature = "parallel") && self == Executor::Parallel
    }

    /// Folds `map(i)` over `range` with an associative `reduce`.
    pub fn map_reduce<T, Id, M, R>(self, range: Range<u64>, identity: Id, map: M, reduce: R) -> T
    where
        T: Send,
        Id: Fn() -> T + Sync + Send,
        M: Fn(u64) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Executor::Parallel {
            return range.into_par_iter().map(map).reduce(identity, reduce);
        }
        range.map(map).fold(identity(), reduce)
    }

    /// `f` applied to every item, results in input order.
    pub fn map_collect<I, O, F>(self, items: &[I], f: F) -> Vec<O>
    where
        I: Sync,
        O: Send,
        F: Fn(&I) -> O + Sync + Send,
    {
        #[cfg(feature = "parallel")]
        if self == Executor::Parallel {
            return items.par_iter().map(f).collect();
        }
        items.iter().map(f).collect()
    }
}
