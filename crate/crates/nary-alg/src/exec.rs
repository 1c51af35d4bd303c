//! Execution strategy for the data-parallel inner loops.
//!
//! With the `parallel` feature (default) the heavy loops fan out over rayon;
//! without it only the sequential path is compiled. Results are identical
//! either way: parallel maps preserve order and every reduction below is
//! order-insensitive.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exec {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Exec {
    fn default() -> Self {
        #[cfg(feature = "parallel")]
        {
            Exec::Parallel
        }
        #[cfg(not(feature = "parallel"))]
        {
            Exec::Sequential
        }
    }
}

/// Maps `f` over `0..len`, preserving order.
pub(crate) fn map_range<U, F>(exec: Exec, len: usize, f: F) -> Vec<U>
where
    U: Send,
    F: Fn(usize) -> U + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).map(f).collect(),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().map(f).collect(),
    }
}

/// Finds the first index in `0..len` for which `f` returns `Some`, in index
/// order, so the reported witness does not depend on the schedule.
pub(crate) fn find_first<U, F>(exec: Exec, len: usize, f: F) -> Option<U>
where
    U: Send,
    F: Fn(usize) -> Option<U> + Sync + Send,
{
    match exec {
        Exec::Sequential => (0..len).find_map(f),
        #[cfg(feature = "parallel")]
        Exec::Parallel => (0..len).into_par_iter().find_map_first(f),
    }
}
