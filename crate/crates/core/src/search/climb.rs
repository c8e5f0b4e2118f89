//! Zykov-symmetrization hill climbing.
//!
//! The basic move `C_uv` replaces the neighbourhood of a vertex `u` by that
//! of a non-adjacent vertex `v`, making `u` a clone of `v`. The climber
//! alternates edge cleanup with the best admissible move: a move is admissible
//! when the result is still family-free and has strictly more `r`-cliques.
//! Single moves are scanned first; paired moves `C_xy(C_zy(G))`, which clone
//! `y` onto both `x` and `z`, are scanned only when no single move improves.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{Engine, SearchReport};
use crate::error::{Error, Result};
use crate::graph::{canonical_form, count_cliques, find_clique_in, Graph};
use crate::patterns::{is_free, ForbiddenFamily};

/// `C_uv(G)`: `u` loses all its edges and becomes adjacent to `N(v)`.
pub fn cuv_move(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    let n = g.n();
    if u >= n || v >= n {
        return Err(Error::InvalidMove(format!("vertex out of range ({u},{v})")));
    }
    if u == v {
        return Err(Error::InvalidMove(format!("u = v = {u}")));
    }
    if g.has_edge(u, v) {
        return Err(Error::InvalidMove(format!("{u}{v} is an edge")));
    }
    let mut out = g.clone();
    for w in g.neighbors(u).iter() {
        out.remove_edge(u, w);
    }
    for w in g.neighbors(v).iter() {
        out.add_edge(u, w);
    }
    Ok(out)
}

/// Deletes every edge that lies in no `r`-clique, until none is left.
/// The `r`-clique count is unchanged.
pub fn cleanup_edges(g: &Graph, r: usize) -> Graph {
    let mut current = g.clone();
    loop {
        let doomed: Vec<(usize, usize)> = current
            .edges()
            .into_iter()
            .filter(|&(u, v)| !edge_in_clique(&current, u, v, r))
            .collect();
        if doomed.is_empty() {
            return current;
        }
        for (u, v) in doomed {
            current.remove_edge(u, v);
        }
    }
}

fn edge_in_clique(g: &Graph, u: usize, v: usize, r: usize) -> bool {
    if r < 2 {
        return false;
    }
    let mut common = g.neighbors(u);
    common.intersect_with(g.row(v));
    find_clique_in(g, &common, r - 2).is_some()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum MoveKind {
    /// `C_uv`
    Single { u: usize, v: usize },
    /// `C_xy(C_zy(G))`
    Paired { x: usize, y: usize, z: usize },
}

#[derive(Clone, Debug)]
pub struct ClimbOutcome {
    pub graph: Graph,
    /// Clique count of the start graph, then after each accepted move.
    pub trajectory: Vec<u64>,
    pub moves: Vec<MoveKind>,
    /// Candidate moves evaluated.
    pub examined: u64,
}

impl ClimbOutcome {
    pub fn count(&self) -> u64 {
        *self
            .trajectory
            .last()
            .expect("trajectory starts with the input count")
    }

    pub fn into_report(self, r: usize, family: &ForbiddenFamily) -> SearchReport {
        SearchReport {
            n: self.graph.n(),
            r,
            family: family.clone(),
            maximum: self.count(),
            witnesses: vec![canonical_form(&self.graph)],
            examined: self.examined,
            engine: Engine::HillClimb,
            strategy: "zykov symmetrization, best-improvement single then paired moves",
            exhaustive: false,
            trajectory: self.trajectory,
        }
    }
}

/// Climbs from `g` until no admissible move exists.
///
/// Moves are scanned lexicographically and the best strict improvement wins,
/// ties going to the first one scanned.
pub fn climb(g: &Graph, r: usize, family: &ForbiddenFamily) -> Result<ClimbOutcome> {
    if !is_free(g, family)? {
        return Err(Error::InvalidInput(format!(
            "starting graph is not {family}-free"
        )));
    }
    let mut current = cleanup_edges(g, r);
    let mut count = count_cliques(&current, r);
    let mut outcome = ClimbOutcome {
        graph: current.clone(),
        trajectory: vec![count],
        moves: vec![],
        examined: 0,
    };
    loop {
        let found = match best_single(&current, r, family, count, &mut outcome.examined)? {
            Some(hit) => Some(hit),
            None => best_paired(&current, r, family, count, &mut outcome.examined)?,
        };
        let Some((next_count, next, kind)) = found else {
            break;
        };
        debug_assert!(next_count > count);
        current = cleanup_edges(&next, r);
        count = next_count;
        outcome.trajectory.push(count);
        outcome.moves.push(kind);
    }
    outcome.graph = current;
    Ok(outcome)
}

type Candidate = (u64, Graph, MoveKind);

fn best_single(
    g: &Graph,
    r: usize,
    family: &ForbiddenFamily,
    count: u64,
    examined: &mut u64,
) -> Result<Option<Candidate>> {
    let n = g.n();
    let mut best: Option<Candidate> = None;
    for u in 0..n {
        for v in (0..n).filter(|&v| v != u && !g.has_edge(u, v)) {
            *examined += 1;
            let moved = cuv_move(g, u, v)?;
            let c = count_cliques(&moved, r);
            let bar = best.as_ref().map_or(count, |b| b.0);
            if c > bar && is_free(&moved, family)? {
                best = Some((c, moved, MoveKind::Single { u, v }));
            }
        }
    }
    Ok(best)
}

fn best_paired(
    g: &Graph,
    r: usize,
    family: &ForbiddenFamily,
    count: u64,
    examined: &mut u64,
) -> Result<Option<Candidate>> {
    let n = g.n();
    let mut best: Option<Candidate> = None;
    for x in 0..n {
        for y in (0..n).filter(|&y| y != x && !g.has_edge(x, y)) {
            for z in (x + 1..n).filter(|&z| z != y && !g.has_edge(z, y)) {
                *examined += 1;
                let moved = cuv_move(&cuv_move(g, z, y)?, x, y)?;
                let c = count_cliques(&moved, r);
                let bar = best.as_ref().map_or(count, |b| b.0);
                if c > bar && is_free(&moved, family)? {
                    best = Some((c, moved, MoveKind::Paired { x, y, z }));
                }
            }
        }
    }
    Ok(best)
}

/// Runs `restarts` climbs (at least one). Run 0 starts from `g` itself; run
/// `i > 0` starts from `g` relabelled by a permutation drawn from
/// `ChaCha8(seed + i)`, which changes the scan order. The best final count
/// wins, ties going to the lowest run index.
pub fn climb_with_restarts(
    g: &Graph,
    r: usize,
    family: &ForbiddenFamily,
    seed: u64,
    restarts: usize,
) -> Result<ClimbOutcome> {
    let runs: Vec<Result<ClimbOutcome>> = (0..restarts.max(1) as u64)
        .into_par_iter()
        .map(|i| {
            if i == 0 {
                return climb(g, r, family);
            }
            let mut perm: Vec<usize> = (0..g.n()).collect();
            perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed.wrapping_add(i)));
            climb(&g.permuted(&perm), r, family)
        })
        .collect();
    let mut best: Option<ClimbOutcome> = None;
    for run in runs {
        let run = run?;
        if best.as_ref().is_none_or(|b| run.count() > b.count()) {
            best = Some(run);
        }
    }
    Ok(best.expect("at least one run"))
}

/// Single deterministic climb reported as a [`SearchReport`].
pub fn symmetrize(g: &Graph, r: usize, family: &ForbiddenFamily) -> Result<SearchReport> {
    let outcome = climb(g, r, family)?;
    Ok(outcome.into_report(r, family))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{join, turan_graph};

    fn family(text: &str) -> ForbiddenFamily {
        text.parse().unwrap()
    }

    #[test]
    fn cuv_examples() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let moved = cuv_move(&g, 2, 0).unwrap();
        assert_eq!(moved.edges(), vec![(0, 1), (1, 2)]);
        let isolated = Graph::from_edges(4, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(cuv_move(&isolated, 1, 3).unwrap().degree(1), 0);
        assert!(matches!(cuv_move(&g, 0, 1), Err(Error::InvalidMove(_))));
        assert!(matches!(cuv_move(&g, 2, 2), Err(Error::InvalidMove(_))));
    }

    #[test]
    fn cleanup_examples() {
        assert_eq!(cleanup_edges(&Graph::cycle(5), 4), Graph::empty(5));
        let mut pendant = Graph::complete(5);
        for v in 0..4 {
            pendant.remove_edge(v, 4);
        }
        pendant.add_edge(3, 4);
        let cleaned = cleanup_edges(&pendant, 4);
        assert_eq!(cleaned.edge_count(), 6);
        assert_eq!(cleaned.degree(4), 0);
        let g = join(&Graph::complete(2), &turan_graph(4, 2).unwrap()).unwrap();
        assert_eq!(cleanup_edges(&g, 4), g);
    }

    #[test]
    fn fixed_points() {
        let f = family("B(4,1),H1,K(5)");
        let g = join(&Graph::complete(2), &turan_graph(8, 2).unwrap()).unwrap();
        let rep = symmetrize(&g, 4, &f).unwrap();
        assert_eq!(rep.maximum, 16);
        assert_eq!(rep.trajectory, vec![16]);

        let rep = symmetrize(&Graph::cycle(5), 4, &family("B(4,1)")).unwrap();
        assert_eq!(rep.maximum, 0);
        assert_eq!(rep.witnesses, vec![canonical_form(&Graph::empty(5))]);

        let rep = symmetrize(&Graph::complete(6), 4, &family("B(4,1)")).unwrap();
        assert_eq!(rep.maximum, 15);
        assert!(!rep.exhaustive);
    }

    #[test]
    fn rejects_non_free_input() {
        let err = symmetrize(&Graph::complete(7), 4, &family("B(4,1)")).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(_)));
    }

    #[test]
    fn restarts_are_deterministic() {
        let f = family("B(4,1),H1,K(5)");
        let g = Graph::path(9);
        let a = climb_with_restarts(&g, 4, &f, 7, 4).unwrap();
        let b = climb_with_restarts(&g, 4, &f, 7, 4).unwrap();
        assert_eq!(a.graph, b.graph);
        assert_eq!(a.trajectory, b.trajectory);
    }
}
