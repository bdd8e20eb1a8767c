//! Data-parallel plumbing. Instance-level loops (redundancy analysis,
//! scheme preprocessing, verification sweeps) funnel through `try_map`,
//! which preserves input order so parallel and sequential builds produce
//! identical results. The `parallel` feature swaps rayon in; without it
//! everything runs sequentially with the same API.

use crate::error::Result;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Order-preserving fallible map over a slice.
#[cfg(feature = "parallel")]
pub fn try_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> Result<U> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn try_map<T, U, F>(items: &[T], f: F) -> Result<Vec<U>>
where
    F: Fn(&T) -> Result<U>,
{
    items.iter().map(f).collect()
}

/// Runs `f` under a bounded worker pool: `jobs == 0` uses the default
/// pool, `jobs >= 1` pins the worker count. Results do not depend on
/// the pool size; the knob only bounds CPU use.
#[cfg(feature = "parallel")]
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    if jobs == 0 {
        return f();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("worker pool")
        .install(f)
}

#[cfg(not(feature = "parallel"))]
pub fn with_jobs<R>(_jobs: usize, f: impl FnOnce() -> R) -> R {
    f()
}
