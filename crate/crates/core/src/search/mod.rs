//! Exact and heuristic computation of `ex(n, K_r, F)`.
//!
//! Two exhaustive engines are provided: a sweep over every labelled graph
//! ([`brute_force_labeled`]) and an isomorph-free generator
//! ([`canonical_generation`]). They are independent implementations so each
//! checks the other. [`symmetrize`] is a Zykov-symmetrization hill climber
//! for sizes beyond exhaustive reach.

mod canonical;
mod climb;
mod labeled;

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use serde::Serialize;

pub use canonical::{canonical_generation, count_classes};
pub use climb::{
    cleanup_edges, climb, climb_with_restarts, cuv_move, symmetrize, ClimbOutcome, MoveKind,
};
pub use labeled::brute_force_labeled;

use crate::error::{Error, Result};
use crate::graph::{canonical_form, count_cliques, CanonicalForm, Graph};
use crate::patterns::{is_free, ForbiddenFamily};

/// Default largest `n` for the labelled sweep (`2^21` graphs at `n = 7`).
pub const LABELED_DEFAULT_CAP: usize = 7;
/// Default largest `n` for canonical generation.
pub const CANONICAL_DEFAULT_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Engine {
    LabeledBruteForce,
    CanonicalGeneration,
    HillClimb,
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Engine::LabeledBruteForce => "labeled-brute-force",
            Engine::CanonicalGeneration => "canonical-generation",
            Engine::HillClimb => "hill-climb",
        })
    }
}

impl std::str::FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Engine> {
        match s {
            "labeled" | "labeled-brute-force" => Ok(Engine::LabeledBruteForce),
            "canonical" | "canonical-generation" => Ok(Engine::CanonicalGeneration),
            "climb" | "hill-climb" => Ok(Engine::HillClimb),
            _ => Err(Error::Parse(format!(
                "unknown engine {s:?}; expected labeled or canonical"
            ))),
        }
    }
}

/// Limits shared by the exhaustive engines.
#[derive(Clone, Debug, Default)]
pub struct SearchOptions {
    /// Overrides the engine's default vertex cap.
    pub max_n: Option<usize>,
    /// Soft deadline; an engine that runs out of time returns a partial
    /// report with `exhaustive = false`.
    pub max_time: Option<Duration>,
    /// Worker threads; `None` uses the global rayon pool.
    pub jobs: Option<usize>,
    /// Number of top-level shards for the labelled sweep (rounded to a power
    /// of two). The result does not depend on it.
    pub shards: Option<usize>,
}

impl SearchOptions {
    pub(crate) fn deadline(&self) -> Option<Instant> {
        self.max_time.map(|d| Instant::now() + d)
    }

    pub(crate) fn check_cap(&self, engine: Engine, n: usize, default: usize) -> Result<()> {
        let cap = self.max_n.unwrap_or(default);
        if n > cap {
            return Err(Error::ResourceLimit(format!(
                "{engine} is capped at n={cap} (requested n={n}); raise the cap to override"
            )));
        }
        Ok(())
    }

    pub(crate) fn run<T: Send>(&self, work: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            None => Ok(work()),
            Some(jobs) => {
                let pool = rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build()
                    .map_err(|e| Error::ResourceLimit(format!("thread pool: {e}")))?;
                Ok(pool.install(work))
            }
        }
    }
}

/// Outcome of a search.
#[derive(Clone, Debug, Serialize)]
pub struct SearchReport {
    pub n: usize,
    pub r: usize,
    pub family: ForbiddenFamily,
    /// Best clique count found among family-free graphs.
    pub maximum: u64,
    /// Canonical forms of the graphs attaining `maximum`, sorted.
    pub witnesses: Vec<CanonicalForm>,
    /// Graphs (labelled or isomorphism classes, by engine) visited.
    pub examined: u64,
    pub engine: Engine,
    /// Generation strategy or other engine detail.
    pub strategy: &'static str,
    pub exhaustive: bool,
    /// Clique count before the climb and after each accepted move.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub trajectory: Vec<u64>,
}

impl SearchReport {
    /// Checks every witness is family-free and attains `maximum`.
    pub fn verify(&self) -> Result<bool> {
        for w in &self.witnesses {
            let g = w.to_graph();
            if g.n() != self.n
                || count_cliques(&g, self.r) != self.maximum
                || !is_free(&g, &self.family)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// `ex(n, K_r, family)` by the chosen exhaustive engine.
pub fn exact_ex(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    engine: Engine,
    opts: &SearchOptions,
) -> Result<SearchReport> {
    match engine {
        Engine::LabeledBruteForce => brute_force_labeled(n, r, family, opts),
        Engine::CanonicalGeneration => canonical_generation(n, r, family, opts),
        Engine::HillClimb => Err(Error::InvalidParameter(
            "hill climbing is not exhaustive; use symmetrize".into(),
        )),
    }
}

/// For `n < r` no graph has an `r`-clique, so the answer is 0 witnessed by the
/// edgeless graph (or no witness if even that is forbidden).
pub(crate) fn degenerate_report(
    n: usize,
    r: usize,
    family: &ForbiddenFamily,
    engine: Engine,
    strategy: &'static str,
) -> Result<SearchReport> {
    let empty = Graph::empty(n);
    let witnesses = if is_free(&empty, family)? {
        vec![canonical_form(&empty)]
    } else {
        vec![]
    };
    Ok(SearchReport {
        n,
        r,
        family: family.clone(),
        maximum: 0,
        witnesses,
        examined: 0,
        engine,
        strategy,
        exhaustive: true,
        trajectory: vec![],
    })
}

/// Running best: maximum count and the set of canonical forms attaining it.
#[derive(Default)]
pub(crate) struct Best {
    pub maximum: Option<u64>,
    pub witnesses: BTreeSet<CanonicalForm>,
}

impl Best {
    /// Whether a graph with `count` cliques could still enter the witness set.
    pub fn admits(&self, count: u64) -> bool {
        self.maximum.is_none_or(|m| count >= m)
    }

    pub fn offer(&mut self, count: u64, form: impl FnOnce() -> CanonicalForm) {
        match self.maximum {
            Some(m) if count < m => {}
            Some(m) if count == m => {
                self.witnesses.insert(form());
            }
            _ => {
                self.maximum = Some(count);
                self.witnesses = BTreeSet::from([form()]);
            }
        }
    }

    pub fn merge(mut self, other: Best) -> Best {
        match (self.maximum, other.maximum) {
            (_, None) => {}
            (None, Some(_)) => return other,
            (Some(a), Some(b)) if b > a => return other,
            (Some(a), Some(b)) if a == b => self.witnesses.extend(other.witnesses),
            _ => {}
        }
        self
    }

    pub fn finish(self) -> (u64, Vec<CanonicalForm>) {
        (
            self.maximum.unwrap_or(0),
            self.witnesses.into_iter().collect(),
        )
    }
}
