//! Execution strategy for the data-parallel kernels.
//!
//! Compiled with the `parallel` feature (the default) the hot loops fan out
//! through rayon; without it they run sequentially.  Even with the feature
//! on, parallelism can be disabled at runtime ([`set_parallel`]) so a single
//! binary can benchmark both modes.
//!
//! Every kernel routed through this module is *bit-identical* between the
//! two modes: the work items are independent (disjoint row chunks of a
//! matrix, independent output slots) and all arithmetic is exact integer
//! arithmetic mod p, so no reduction order can leak into results.  The
//! acceptance suite asserts that equality on real workloads.

use std::sync::atomic::{AtomicBool, Ordering};

static PARALLEL: AtomicBool = AtomicBool::new(true);

/// Globally enable or disable the rayon paths at runtime.  No-op (always
/// sequential) when the `parallel` feature is compiled out.
pub fn set_parallel(on: bool) {
    PARALLEL.store(on, Ordering::Relaxed);
}

/// Whether a kernel invoked right now would use rayon.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && PARALLEL.load(Ordering::Relaxed)
}

/// Apply `f` to each `chunk`-sized mutable window of `data` (the last window
/// may be short), passing the window index.  Windows are disjoint, so this
/// parallelizes without synchronization.
pub fn for_each_chunk_mut<T, F>(data: &mut [T], chunk: usize, f: F)
where
    T: Send,
    F: Fn(usize, &mut [T]) + Sync,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            data.par_chunks_mut(chunk)
                .enumerate()
                .for_each(|(i, c)| f(i, c));
            return;
        }
    }
    for (i, c) in data.chunks_mut(chunk).enumerate() {
        f(i, c);
    }
}

/// Compute `f(0), ..., f(n-1)` preserving index order in the output.
pub fn map_indexed<T, F>(n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        if parallel_enabled() {
            use rayon::prelude::*;
            return (0..n).into_par_iter().map(f).collect();
        }
    }
    (0..n).map(f).collect()
}
