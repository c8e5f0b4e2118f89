//! Canonical labelling.
//!
//! Vertices are first coloured by iterated degree refinement, which yields an
//! ordered partition that depends only on the isomorphism class. Positions
//! `0..n` are then filled cell by cell; at each position every surviving
//! partial labelling is extended by each admissible vertex and only the
//! extensions whose new adjacency column is lexicographically smallest are
//! kept. The survivors at the end all share the minimal upper-triangle
//! encoding, which is returned as a graph6 string.
//!
//! A candidate is skipped when a twin of it (same neighbourhood apart from
//! each other) was already tried at the same node: swapping twins is an
//! automorphism fixing the prefix, so both subtrees give equal encodings.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use super::{io, Graph, VertexSet};

/// Isomorphism-invariant key: the graph6 string of the canonical relabelling.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    n: usize,
    key: Vec<u8>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn key(&self) -> &[u8] {
        &self.key
    }

    pub fn graph6(&self) -> &str {
        std::str::from_utf8(&self.key).expect("graph6 is ASCII")
    }

    /// The canonically labelled representative.
    pub fn to_graph(&self) -> Graph {
        io::from_graph6(self.graph6()).expect("canonical key is valid graph6")
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm({})", self.graph6())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.graph6())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.graph6())
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let order = canonical_labeling(g);
    let relabelled = g.induced(&order);
    CanonicalForm {
        n: g.n(),
        key: io::to_graph6(&relabelled).into_bytes(),
    }
}

/// `order[k]` is the vertex of `g` placed at canonical position `k`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n <= 1 {
        return (0..n).collect();
    }
    let colour = refine(g);
    let mut by_cell: Vec<usize> = (0..n).collect();
    by_cell.sort_by_key(|&v| colour[v]);
    let cell_at: Vec<usize> = by_cell.iter().map(|&v| colour[v]).collect();
    let twins = twin_table(g);

    let mut frontier: Vec<Vec<usize>> = vec![Vec::with_capacity(n)];
    for (k, &cell) in cell_at.iter().enumerate() {
        let mut best: Option<VertexSet> = None;
        let mut next: Vec<Vec<usize>> = Vec::new();
        for partial in &frontier {
            let mut tried: Vec<usize> = Vec::new();
            for v in (0..n).filter(|&v| colour[v] == cell && !partial.contains(&v)) {
                if tried.iter().any(|&t| twins[t].contains(v)) {
                    continue;
                }
                tried.push(v);
                let column = VertexSet::from_vertices(
                    k,
                    partial
                        .iter()
                        .enumerate()
                        .filter(|&(_, &p)| g.has_edge(p, v))
                        .map(|(i, _)| i),
                );
                let ord = match &best {
                    None => Ordering::Less,
                    Some(b) => column.cmp_membership(b),
                };
                if ord == Ordering::Greater {
                    continue;
                }
                if ord == Ordering::Less {
                    next.clear();
                    best = Some(column);
                }
                let mut extended = partial.clone();
                extended.push(v);
                next.push(extended);
            }
        }
        frontier = next;
    }
    frontier.swap_remove(0)
}

/// Ordered colour refinement. Colours start as degree ranks; each round a
/// vertex's signature is its colour followed by its neighbour count in every
/// colour class, and new colours are the ranks of the sorted signatures.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let degrees = g.degrees();
    let mut colour = rank(&degrees.iter().map(|&d| vec![d]).collect::<Vec<_>>());
    let mut classes = colour.iter().max().map_or(0, |m| m + 1);
    loop {
        let signatures: Vec<Vec<usize>> = (0..n)
            .map(|v| {
                let mut sig = vec![0; classes + 1];
                sig[0] = colour[v];
                for u in g.neighbors(v).iter() {
                    sig[1 + colour[u]] += 1;
                }
                sig
            })
            .collect();
        let refined = rank(&signatures);
        let refined_classes = refined.iter().max().map_or(0, |m| m + 1);
        colour = refined;
        if refined_classes == classes {
            return colour;
        }
        classes = refined_classes;
    }
}

fn rank<T: Ord>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<&T> = keys.iter().collect();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(&k).expect("present"))
        .collect()
}

fn twin_table(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    let twins = |u: usize, v: usize| {
        let mut a = g.neighbors(u);
        a.remove(v);
        let mut b = g.neighbors(v);
        b.remove(u);
        a == b
    };
    (0..n)
        .map(|u| VertexSet::from_vertices(n, (0..n).filter(|&v| v != u && twins(u, v))))
        .collect()
}
