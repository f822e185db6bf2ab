//! Execution strategy for data-parallel loops.
//!
//! With the `parallel` feature (on by default) [`Strategy::Parallel`] runs on
//! the rayon global pool. Without it every strategy degrades to a plain
//! sequential loop, so callers never need their own `cfg` gates.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// How a batch of independent evaluations is scheduled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    Sequential,
    #[default]
    Parallel,
}

impl Strategy {
    /// The strategy actually used after feature resolution.
    pub fn effective(self) -> Strategy {
        if cfg!(feature = "parallel") {
            self
        } else {
            Strategy::Sequential
        }
    }
}

/// Batches smaller than this are always run sequentially.
pub const PARALLEL_THRESHOLD: usize = 8;

/// Maps `f` over `items`, preserving order.
pub fn map<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if strategy == Strategy::Parallel && items.len() >= PARALLEL_THRESHOLD {
            return items.par_iter().map(f).collect();
        }
    }
    let _ = strategy;
    items.iter().map(f).collect()
}

/// Maps `f` over `0..len`, preserving order.
pub fn map_range<R, F>(strategy: Strategy, len: usize, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if strategy == Strategy::Parallel && len >= PARALLEL_THRESHOLD {
            return (0..len).into_par_iter().map(f).collect();
        }
    }
    let _ = strategy;
    (0..len).map(f).collect()
}
