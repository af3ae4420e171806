//! Threaded fuzz driver. Iterations are sharded round-robin over worker
//! threads, each iteration seeds its own RNG stream from (seed, index), and
//! per-index results are folded back in index order — so the summary is
//! byte-identical for any thread count.

use covgeo_core::inequality::{fuzz_iteration, FuzzConfig, FuzzSummary};
use covgeo_core::Result;

/// Worker thread cap from the `COVGEO_THREADS` environment variable
/// (defaults to 1; values below 1 are treated as 1).
pub fn threads_from_env() -> usize {
    std::env::var("COVGEO_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .unwrap_or(1)
        .max(1)
}

pub fn fuzz_parallel(config: &FuzzConfig, threads: usize) -> Result<FuzzSummary> {
    if threads <= 1 || config.count <= 1 {
        return covgeo_core::fuzz(config);
    }
    let workers = threads.min(config.count as usize);
    let mut slots: Vec<Option<Result<FuzzSummary>>> = Vec::new();
    slots.resize_with(config.count as usize, || None);

    std::thread::scope(|scope| {
        let mut handles = Vec::with_capacity(workers);
        for worker in 0..workers {
            let config = config.clone();
            handles.push(scope.spawn(move || {
                let mut mine = Vec::new();
                let mut index = worker as u64;
                while index < config.count {
                    mine.push((index, fuzz_iteration(&config, index)));
                    index += workers as u64;
                }
                mine
            }));
        }
        for handle in handles {
            for (index, outcome) in handle.join().expect("fuzz worker panicked") {
                slots[index as usize] = Some(outcome);
            }
        }
    });

    let mut summary = covgeo_core::fuzz(&FuzzConfig {
        count: 0,
        ..config.clone()
    })?;
    for slot in slots {
        summary.absorb(slot.expect("all indices scheduled")?);
    }
    // restore the requested count in the echoed config
    summary.config = config.clone();
    Ok(summary)
}
