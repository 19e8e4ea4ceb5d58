//! Parallel-or-sequential execution strategy.
//!
//! With the default `parallel` feature the enumeration kernels fan out over
//! rayon; without it (or after [`force_sequential`]) they run sequentially on
//! the calling thread. Every caller merges results deterministically (sorted
//! sets, max-reductions), so both paths return identical values — the bench
//! suite compares their speed on the same inputs.

use std::sync::atomic::{AtomicBool, Ordering};

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Forces sequential execution at runtime even when the `parallel` feature is
/// compiled in. Intended for benchmarks and debugging.
pub fn force_sequential(on: bool) {
    FORCE_SEQUENTIAL.store(on, Ordering::Relaxed);
}

/// True when calls should fan out over rayon.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

/// Maps `f` over `items`, in parallel when enabled. Output order matches
/// input order on both paths.
pub fn map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().map(f).collect();
        }
    }
    items.into_iter().map(f).collect()
}

/// Filter-maps `f` over `items`, preserving input order on both paths.
pub fn filter_map_collect<T, U, F>(items: Vec<T>, f: F) -> Vec<U>
where
    T: Send,
    U: Send,
    F: Fn(T) -> Option<U> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return items.into_par_iter().filter_map(f).collect();
        }
    }
    items.into_iter().filter_map(f).collect()
}
