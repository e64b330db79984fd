//! A rayon-backed [`UnitRunner`].

use std::sync::atomic::{AtomicU64, AtomicUsize, Ordering};

use rayon::prelude::*;
use wordrep_core::search::{UnitJob, UnitOutcome, UnitResult, UnitRunner};

/// Runs work units on a dedicated pool. Results match [`Sequential`]
/// exactly: a unit that finds a word or hits its limit only cancels units
/// with a larger index, and the merge reads units in index order.
///
/// [`Sequential`]: wordrep_core::search::Sequential
pub struct Parallel {
    pool: rayon::ThreadPool,
}

impl Parallel {
    pub fn new(workers: usize) -> Self {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(workers.max(1)).build().expect("thread pool");
        Parallel { pool }
    }
}

impl UnitRunner for Parallel {
    fn run(&self, units: usize, limit: u64, job: &UnitJob<'_>) -> Vec<Option<UnitResult>> {
        let stop = AtomicUsize::new(usize::MAX);
        let total = AtomicU64::new(0);
        let done_max = AtomicUsize::new(0);
        self.pool.install(|| {
            (0..units)
                .into_par_iter()
                .map(|i| {
                    if stop.load(Ordering::SeqCst) < i {
                        return None;
                    }
                    // Each unit may use the whole limit on its own; the
                    // merge accounts for the sum.
                    let r = job(i, limit, &stop);
                    if matches!(r.outcome, UnitOutcome::Found(_) | UnitOutcome::LimitHit) {
                        stop.fetch_min(i, Ordering::SeqCst);
                    }
                    // Once the finished units alone exceed the limit, the
                    // running total up to the highest finished index does
                    // too, so nothing past that index is needed.
                    done_max.fetch_max(i, Ordering::SeqCst);
                    let used = total.fetch_add(r.nodes, Ordering::SeqCst) + r.nodes;
                    if used > limit {
                        stop.fetch_min(done_max.load(Ordering::SeqCst), Ordering::SeqCst);
                    }
                    Some(r)
                })
                .collect()
        })
    }
}
