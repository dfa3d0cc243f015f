//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature each helper runs on the current rayon pool when
//! that pool has more than one thread, and otherwise takes the plain iterator
//! path. Without the feature only the iterator path exists. Every helper
//! returns the same value on both paths: `find_map_first` yields the match with
//! the smallest index, and the collecting helpers preserve input order.

use std::ops::Range;

/// Number of worker threads the helpers will use.
pub fn threads() -> usize {
    #[cfg(feature = "parallel")]
    {
        rayon::current_num_threads()
    }
    #[cfg(not(feature = "parallel"))]
    {
        1
    }
}

#[cfg(feature = "parallel")]
fn parallel_enabled() -> bool {
    rayon::current_num_threads() > 1
}

/// First `Some` in index order.
pub fn find_map_first<R, F>(range: Range<usize>, f: F) -> Option<R>
where
    R: Send,
    F: Fn(usize) -> Option<R> + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return range.into_par_iter().find_map_first(f);
    }
    range.into_iter().find_map(f)
}

/// `f` applied to each index, results in index order.
pub fn map_collect<R, F>(range: Range<usize>, f: F) -> Vec<R>
where
    R: Send,
    F: Fn(usize) -> R + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).collect();
    }
    range.into_iter().map(f).collect()
}

/// Sum of `f` over the range.
pub fn sum_u64<F>(range: Range<usize>, f: F) -> u64
where
    F: Fn(usize) -> u64 + Sync + Send,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        use rayon::prelude::*;
        return range.into_par_iter().map(f).sum();
    }
    range.into_iter().map(f).sum()
}

/// Runs `f` inside a pool with `threads` workers (0 means the rayon default).
/// Without the `parallel` feature the closure runs on the calling thread.
pub fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> R {
    #[cfg(feature = "parallel")]
    {
        match rayon::ThreadPoolBuilder::new().num_threads(threads).build() {
            Ok(pool) => pool.install(f),
            Err(e) => {
                log::warn!("could not build a {threads}-thread pool ({e}); running inline");
                f()
            }
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}
