//! Thread-pool versions of the exponent scan and the Pansiot search.
//!
//! Both merge shard results with the core's deterministic merge rules, so
//! the output does not depend on the thread count.

use anyhow::{anyhow, Result};
use balword_core::pansiot::{canonical_start, search_from, SearchConfig, SearchOutcome};
use balword_core::words::{scan_periods, scan_periods_from, MaxExponent, RepetitionCandidate};
use balword_core::Letter;
use rayon::prelude::*;

/// Periods below this are scanned sequentially to get a strong seed.
const SEED_PERIODS: usize = 64;
const CHUNK: usize = 256;

/// `None` uses rayon's default (all cores).
pub fn pool(threads: Option<usize>) -> Result<rayon::ThreadPool> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(t) = threads {
        b = b.num_threads(t.max(1));
    }
    b.build().map_err(|e| anyhow!("thread pool: {e}"))
}

/// Same result as `max_factor_exponent`, with periods sharded across the
/// pool.
pub fn max_factor_exponent(pool: &rayon::ThreadPool, w: &[Letter]) -> Result<MaxExponent> {
    let n = w.len();
    let seed = scan_periods(w, 1..SEED_PERIODS.min(n)).ok_or(balword_core::Error::EmptyWord)?;
    if n <= SEED_PERIODS {
        return Ok(seed.into());
    }
    let chunks: Vec<(usize, usize)> = (SEED_PERIODS..n).step_by(CHUNK).map(|s| (s, (s + CHUNK).min(n))).collect();
    let best = pool.install(|| {
        chunks
            .par_iter()
            .map(|&(lo, hi)| scan_periods_from(w, lo..hi, seed))
            .reduce(|| seed, RepetitionCandidate::merge)
    });
    Ok(best.into())
}

/// Same result as `pansiot::search`, split over the first free letter.
pub fn search(pool: &rayon::ThreadPool, cfg: &SearchConfig) -> SearchOutcome {
    let start = canonical_start(cfg.d);
    if cfg.depth <= start.len() || cfg.d < 3 {
        return balword_core::pansiot::search(cfg);
    }
    let branches: Vec<Vec<Letter>> = (0..cfg.d as Letter)
        .map(|y| {
            let mut p = start.clone();
            p.push(y);
            p
        })
        .collect();
    let outcomes: Vec<Option<SearchOutcome>> =
        pool.install(|| branches.par_iter().map(|p| search_from(cfg, p)).collect());
    // the root node is counted here, as in the serial search
    let mut merged = SearchOutcome { nodes: 1, ..SearchOutcome::default() };
    if outcomes.iter().all(Option::is_none) {
        merged.dead_ends = 1;
        merged.longest_dead_end = start.len();
    }
    for o in outcomes.into_iter().flatten() {
        merged = merged.merge(o, cfg.max_words);
    }
    merged
}
