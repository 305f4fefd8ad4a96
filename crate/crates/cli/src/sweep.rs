//! Parallel evaluation over many tops with output in input order.

use std::collections::BTreeMap;
use std::sync::mpsc;

use rayon::prelude::*;

/// Runs `job` over `items` on `pool` and hands each result to `emit` in the
/// order of `items`, as soon as every earlier result is available.
pub fn ordered<T, R, E>(pool: &rayon::ThreadPool, items: &[T], job: impl Fn(&T) -> R + Sync, mut emit: E)
where
    T: Sync,
    R: Send,
    E: FnMut(R),
{
    let (tx, rx) = mpsc::channel();
    std::thread::scope(|scope| {
        let job = &job;
        scope.spawn(move || {
            pool.install(|| {
                items
                    .par_iter()
                    .enumerate()
                    .for_each_with(tx, |tx, (idx, item)| {
                        let _ = tx.send((idx, job(item)));
                    })
            })
        });
        let mut pending = BTreeMap::new();
        let mut next = 0;
        for (idx, result) in rx {
            pending.insert(idx, result);
            while let Some(result) = pending.remove(&next) {
                emit(result);
                next += 1;
            }
        }
    });
}
