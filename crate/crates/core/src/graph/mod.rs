//! Simple undirected graphs on bit-vector adjacency rows.

mod bitset;
mod canon;
mod cliques;
pub mod io;
mod subgraph;

use std::fmt;

pub use bitset::VertexSet;
pub use canon::{canonical_form, canonical_labeling, CanonicalForm};
pub use cliques::{count_cliques, enumerate_cliques, find_clique_in, has_clique, CliqueIter};
pub use subgraph::{contains_subgraph, find_subgraph};

use crate::error::{Error, Result};
use bitset::{words_for, WORD_BITS};

/// Largest vertex count any graph may have.
pub const MAX_VERTICES: usize = 4096;

/// An undirected, loop-free graph on vertices `0..n`.
///
/// Row `v` is the neighbourhood of `v` packed into `words` 64-bit words, so for
/// `n <= 64` every row is a single word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics when `n` exceeds [`MAX_VERTICES`]; use [`Graph::try_empty`] for a
    /// checked variant.
    pub fn empty(n: usize) -> Graph {
        Self::try_empty(n).expect("vertex count exceeds MAX_VERTICES")
    }

    pub fn try_empty(n: usize) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::CapacityExceeded {
                requested: n,
                cap: MAX_VERTICES,
            });
        }
        let words = words_for(n);
        Ok(Graph {
            n,
            words,
            rows: vec![0; n * words],
        })
    }

    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        let all = VertexSet::full(n);
        for v in 0..n {
            let row = g.row_mut(v);
            row.copy_from_slice(all.words());
            row[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        }
        g
    }

    pub fn cycle(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        if n >= 3 {
            for v in 0..n {
                g.add_edge(v, (v + 1) % n);
            }
        }
        g
    }

    pub fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    /// Builds a graph from an edge list; loops and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::try_empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidInput(format!(
                    "edge ({u},{v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph on at most 64 vertices from single-word rows.
    pub(crate) fn from_word_rows(n: usize, rows: &[u64]) -> Graph {
        debug_assert!(n <= WORD_BITS && rows.len() == n);
        Graph {
            n,
            words: 1,
            rows: if n == 0 { vec![] } else { rows.to_vec() },
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    #[inline]
    fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.rows[v * self.words..(v + 1) * self.words]
    }

    /// First word of every row; meaningful only when `n <= 64`.
    #[inline]
    pub(crate) fn word_rows(&self) -> Option<&[u64]> {
        (self.words == 1).then_some(&self.rows[..])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.row(u)[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    /// Inserts the edge `uv`. Panics on loops or out-of-range endpoints.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n && u != v, "bad edge ({u},{v})");
        let w = self.words;
        self.rows[u * w + v / WORD_BITS] |= 1 << (v % WORD_BITS);
        self.rows[v * w + u / WORD_BITS] |= 1 << (u % WORD_BITS);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "bad edge ({u},{v})");
        let w = self.words;
        self.rows[u * w + v / WORD_BITS] &= !(1 << (v % WORD_BITS));
        self.rows[v * w + u / WORD_BITS] &= !(1 << (u % WORD_BITS));
    }

    /// Copy of the graph with edge `uv` removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.remove_edge(u, v);
        g
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_words(self.row(v))
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u).iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    /// Induced subgraph on `vertices`, relabelled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut g = Graph::empty(vertices.len());
        for (i, &a) in vertices.iter().enumerate() {
            for (j, &b) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(a, b) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n, "permutation length mismatch");
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Checks symmetry, irreflexivity and that no bit at or above `n` is set.
    pub fn validate(&self) -> Result<()> {
        let universe = VertexSet::full(self.n);
        for u in 0..self.n {
            let row = self.neighbors(u);
            if !row.is_subset(&universe) {
                return Err(Error::InvalidInput(format!("row {u} has bits beyond n")));
            }
            if row.contains(u) {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            if let Some(v) = row.iter().find(|&v| !self.has_edge(v, u)) {
                return Err(Error::InvalidInput(format!("asymmetric pair ({u},{v})")));
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Complete `t`-partite graph on `n` vertices with vertex `i` in part `i mod t`.
pub fn turan_graph(n: usize, t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(Error::InvalidParameter(
            "Turán graph needs at least one part".into(),
        ));
    }
    let mut g = Graph::try_empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u % t != v % t {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Sizes of the parts of `turan_graph(n, t)`, largest first.
pub fn turan_part_sizes(n: usize, t: usize) -> Vec<usize> {
    (0..t).map(|i| n / t + usize::from(i < n % t)).collect()
}

/// Join: disjoint union plus every edge between the two vertex sets.
/// Vertices of `b` are shifted by `a.n()`.
pub fn join(a: &Graph, b: &Graph) -> Result<Graph> {
    let mut g = disjoint_union(a, b)?;
    for u in 0..a.n {
        for v in 0..b.n {
            g.add_edge(u, a.n + v);
        }
    }
    Ok(g)
}

pub fn disjoint_union(a: &Graph, b: &Graph) -> Result<Graph> {
    let n = a.n + b.n;
    let mut g = Graph::try_empty(n)?;
    for (u, v) in a.edges() {
        g.add_edge(u, v);
    }
    for (u, v) in b.edges() {
        g.add_edge(a.n + u, a.n + v);
    }
    Ok(g)
}
