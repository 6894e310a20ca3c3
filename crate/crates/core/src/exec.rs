//! Data-parallel execution helpers with a sequential fallback.
//!
//! Reductions are chunked at a fixed width and the chunk partials are combined
//! in index order, so parallel and sequential builds (and any thread count)
//! produce bit-identical floating-point results. Element-wise maps are
//! trivially deterministic.

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use std::sync::atomic::{AtomicBool, Ordering};

/// Chunk width for deterministic reductions.
pub const CHUNK: usize = 4096;

static FORCE_SEQUENTIAL: AtomicBool = AtomicBool::new(false);

/// Force the sequential code path at runtime even when the `parallel`
/// feature is enabled. Used by the benchmark suite to compare both paths
/// within one build.
pub fn force_sequential(on: bool) {
    FORCE_SEQUENTIAL.store(on, Ordering::Relaxed);
}

/// True when work is dispatched through rayon.
pub fn parallel_enabled() -> bool {
    cfg!(feature = "parallel") && !FORCE_SEQUENTIAL.load(Ordering::Relaxed)
}

/// Map `f` over `0..count`, preserving index order in the output.
pub fn map_indexed<T: Send, F>(count: usize, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync,
{
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        return (0..count).into_par_iter().map(|i| f(i)).collect();
    }
    (0..count).map(f).collect()
}

/// Apply `f` to fixed-size chunks of `data`; `f` receives the chunk index.
pub fn for_each_chunk_mut<T: Send, F>(data: &mut [T], chunk: usize, f: F)
where
    F: Fn(usize, &mut [T]) + Sync,
{
    debug_assert!(chunk > 0);
    #[cfg(feature = "parallel")]
    if parallel_enabled() {
        data.par_chunks_mut(chunk)
            .enumerate()
            .for_each(|(c, s)| f(c, s));
        return;
    }
    data.chunks_mut(chunk).enumerate().for_each(|(c, s)| f(c, s));
}

/// Deterministic chunked sum of `term(i)` over `0..len`.
pub fn sum_terms<F>(len: usize, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let nchunks = len.div_ceil(CHUNK);
    let partials = map_indexed(nchunks, |c| {
        let start = c * CHUNK;
        let end = ((c + 1) * CHUNK).min(len);
        let mut acc = 0.0;
        for i in start..end {
            acc += term(i);
        }
        acc
    });
    partials.iter().sum()
}

/// Chunked maximum of `term(i)` over `0..len` (0 for an empty range).
pub fn max_terms<F>(len: usize, term: F) -> f64
where
    F: Fn(usize) -> f64 + Sync,
{
    let nchunks = len.div_ceil(CHUNK);
    let partials = map_indexed(nchunks, |c| {
        let start = c * CHUNK;
        let end = ((c + 1) * CHUNK).min(len);
        let mut acc = f64::NEG_INFINITY;
        for i in start..end {
            acc = acc.max(term(i));
        }
        acc
    });
    partials.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b)).max(0.0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chunked_sum_matches_sequential_fold() {
        let data: Vec<f64> = (0..10_000).map(|i| (i as f64).sin()).collect();
        let s = sum_terms(data.len(), |i| data[i]);
        force_sequential(true);
        let s_seq = sum_terms(data.len(), |i| data[i]);
        force_sequential(false);
        assert_eq!(s.to_bits(), s_seq.to_bits());
    }

    #[test]
    fn max_over_empty_range_is_zero() {
        assert_eq!(max_terms(0, |_| 5.0), 0.0);
    }
}
