//! Order-preserving map over independent work items.
//!
//! With the `parallel` feature the items run on the rayon pool; without it
//! they run in sequence. Results come back in input order either way, so
//! exact outputs do not depend on the schedule.

#[cfg(feature = "parallel")]
use rayon::prelude::*;

#[cfg(feature = "parallel")]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    items.par_iter().map(f).collect()
}

#[cfg(not(feature = "parallel"))]
pub fn map<T, R, F>(items: &[T], f: F) -> Vec<R>
where
    F: Fn(&T) -> R,
{
    items.iter().map(f).collect()
}

/// Whether work is actually spread over threads in this build.
pub const fn is_parallel() -> bool {
    cfg!(feature = "parallel")
}
