use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{degenerate_report, Best, Engine, SearchOptions, SearchReport, LABELED_DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, count_cliques, Graph};
use crate::patterns::{is_free, ForbiddenFamily};

const STRATEGY: &str = "all labeled graphs, edge-mask prefix shards";

/// Sweeps all `2^C(n,2)` labelled graphs on `n` vertices.
///
/// The edge mask is split by its top bits into independent shards whose
/// results merge by maximum with witness union, so the report does not depend
/// on the shard count.
pub fn brute_force_labeled(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let engine = Engine::LabeledBruteForce;
    opts.check_cap(engine, n, LABELED_DEFAULT_CAP)?;
    if n > 64 {
        return Err(Error::ResourceLimit(
            "labeled sweep supports n <= 64 only".into(),
        ));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let m = pairs.len();
    if m >= 63 {
        return Err(Error::ResourceLimit(format!(
            "labeled sweep over 2^{m} graphs is out of range"
        )));
    }
    if n < r {
        return degenerate_report(n, r, family, engine, STRATEGY);
    }

    let shard_bits = opts
        .shards
        .map(|s| s.max(1).next_power_of_two().trailing_zeros() as usize)
        .unwrap_or(6)
        .min(m);
    let low_bits = m - shard_bits;
    let deadline = opts.deadline();
    let timed_out = AtomicBool::new(false);

    let sweep = |prefix: u64| -> Result<(Best, u64)> {
        let mut best = Best::default();
        let mut examined = 0u64;
        let mut rows = vec![0u64; n];
        for low in 0..1u64 << low_bits {
            if low % 4096 == 0 && past(deadline, &timed_out) {
                break;
            }
            let mask = prefix << low_bits | low;
            rows.iter_mut().for_each(|w| *w = 0);
            let mut bits = mask;
            while bits != 0 {
                let (i, j) = pairs[bits.trailing_zeros() as usize];
                bits &= bits - 1;
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            examined += 1;
            let g = Graph::from_word_rows(n, &rows);
            let count = count_cliques(&g, r);
            if best.admits(count) && is_free(&g, family)? {
                best.offer(count, || canonical_form(&g));
            }
        }
        Ok((best, examined))
    };

    let shards: Vec<Result<(Best, u64)>> =
        opts.run(|| (0..1u64 << shard_bits).into_par_iter().map(sweep).collect())?;
    let mut best = Best::default();
    let mut examined = 0;
    for shard in shards {
        let (b, e) = shard?;
        best = best.merge(b);
        examined += e;
    }
    let (maximum, witnesses) = best.finish();
    Ok(SearchReport {
        n,
        r,
        family: family.clone(),
        maximum,
        witnesses,
        examined,
        engine,
        strategy: STRATEGY,
        exhaustive: !timed_out.load(Ordering::Relaxed),
        trajectory: vec![],
    })
}

pub(crate) fn past(deadline: Option<Instant>, flag: &AtomicBool) -> bool {
    if flag.load(Ordering::Relaxed) {
        return true;
    }
    if deadline.is_some_and(|d| Instant::now() >= d) {
        flag.store(true, Ordering::Relaxed);
        return true;
    }
    false
}
