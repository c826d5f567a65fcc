//! Execution strategy for node and grid maps.
//!
//! Heavy loops (disk quadrature nodes, solution grids) map a pure function
//! over a slice. With the `parallel` feature the map runs on rayon; results
//! are collected back in input order and reduced sequentially, so parallel
//! and sequential runs produce bit-identical sums.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Sequential,
    #[cfg(feature = "parallel")]
    Parallel,
}

impl Default for Strategy {
    #[cfg(feature = "parallel")]
    fn default() -> Self {
        Strategy::Parallel
    }
    #[cfg(not(feature = "parallel"))]
    fn default() -> Self {
        Strategy::Sequential
    }
}

/// Maps `f` over `items`, preserving order.
pub fn map_collect<T, R, F>(strategy: Strategy, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match strategy {
        Strategy::Sequential => items.iter().map(f).collect(),
        #[cfg(feature = "parallel")]
        Strategy::Parallel => items.par_iter().map(f).collect(),
    }
}
