//! Deterministic sharding over a fixed worker pool.

use rayon::prelude::*;
use rayon::ThreadPoolBuilder;

/// Runs `f` inside a pool of `jobs` worker threads.
pub fn with_jobs<R: Send>(jobs: usize, f: impl FnOnce() -> R + Send) -> R {
    ThreadPoolBuilder::new().num_threads(jobs.max(1)).build().expect("thread pool").install(f)
}

/// Splits `items` into `jobs` contiguous shards, folds each shard with
/// `fold` on a worker, and returns the per-shard results in shard order.
pub fn shard_fold<T, R, F>(items: &[T], jobs: usize, fold: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&[T]) -> R + Sync + Send,
{
    let jobs = jobs.max(1);
    let chunk = items.len().div_ceil(jobs).max(1);
    with_jobs(jobs, || items.par_chunks(chunk).map(&fold).collect())
}

/// Order-preserving parallel map.
pub fn sharded_map<T, R, F>(items: &[T], jobs: usize, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    shard_fold(items, jobs, |shard| shard.iter().map(&f).collect::<Vec<_>>()).into_iter().flatten().collect()
}
