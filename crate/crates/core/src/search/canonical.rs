use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use super::labeled::past;
use super::{degenerate_report, Best, Engine, SearchOptions, SearchReport, CANONICAL_DEFAULT_CAP};
use crate::error::Result;
use crate::graph::{canonical_form, count_cliques, CanonicalForm, Graph};
use crate::patterns::{is_free, ForbiddenFamily};

const STRATEGY: &str = "vertex augmentation with per-level canonical-form dedup";

/// Visits one representative of every isomorphism class of family-free
/// graphs on `n` vertices.
///
/// Level `k + 1` is built from the classes at level `k` by adding a vertex with
/// every possible neighbourhood and deduplicating by canonical form. Only
/// family-free graphs are extended: every family here is closed under taking
/// subgraphs, so deleting a vertex from a free graph leaves a free graph and
/// each free class has a free parent.
pub fn canonical_generation(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    let engine = Engine::CanonicalGeneration;
    opts.check_cap(engine, n, CANONICAL_DEFAULT_CAP)?;
    if n < r {
        return degenerate_report(n, r, family, engine, STRATEGY);
    }
    let deadline = opts.deadline();
    let timed_out = AtomicBool::new(false);

    let mut level: Vec<Graph> = if is_free(&Graph::empty(0), family)? {
        vec![Graph::empty(0)]
    } else {
        vec![]
    };
    for _ in 0..n {
        let children: Vec<Result<Vec<CanonicalForm>>> = opts.run(|| {
            level
                .par_iter()
                .map(|parent| {
                    if past(deadline, &timed_out) {
                        return Ok(vec![]);
                    }
                    free_children(parent, family)
                })
                .collect()
        })?;
        let mut next = BTreeSet::new();
        for batch in children {
            next.extend(batch?);
        }
        level = next.into_iter().map(|f| f.to_graph()).collect();
    }

    let examined = level.len() as u64;
    let counted: Vec<(u64, &Graph)> =
        opts.run(|| level.par_iter().map(|g| (count_cliques(g, r), g)).collect())?;
    let mut best = Best::default();
    for (count, g) in counted {
        // level graphs are already canonically labelled
        best.offer(count, || canonical_form(g));
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

fn free_children(parent: &Graph, family: &ForbiddenFamily) -> Result<Vec<CanonicalForm>> {
    let k = parent.n();
    let mut out = Vec::with_capacity(1 << k);
    let mut child = Graph::empty(k + 1);
    for (u, v) in parent.edges() {
        child.add_edge(u, v);
    }
    for mask in 0u64..1 << k {
        let mut g = child.clone();
        for i in (0..k).filter(|&i| mask >> i & 1 == 1) {
            g.add_edge(i, k);
        }
        if is_free(&g, family)? {
            out.push(canonical_form(&g));
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Number of isomorphism classes of family-free graphs on `n` vertices.
pub fn count_classes(n: usize, family: &ForbiddenFamily, opts: &SearchOptions) -> Result<u64> {
    canonical_generation(n, 0, family, opts).map(|rep| rep.examined)
}
