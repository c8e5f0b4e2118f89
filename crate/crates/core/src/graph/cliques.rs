//! Fixed-size clique counting, enumeration and existence search.
//!
//! All routines extend a partial clique by the vertices in the intersection of
//! the chosen rows, restricted to indices above the last chosen vertex, so every
//! `r`-subset is visited at most once.

use super::{Graph, VertexSet};

/// Number of `r`-vertex subsets of `g` that induce complete subgraphs.
pub fn count_cliques(g: &Graph, r: usize) -> u64 {
    match r {
        0 => 1,
        1 => g.n() as u64,
        _ if r > g.n() => 0,
        _ => match g.word_rows() {
            Some(rows) if g.n() > 0 => count_word(rows, low_mask(g.n()), r),
            _ => count_generic(g, VertexSet::full(g.n()), r),
        },
    }
}

#[inline]
fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

fn count_word(rows: &[u64], mut cand: u64, k: usize) -> u64 {
    if k == 1 {
        return u64::from(cand.count_ones());
    }
    if k == 2 {
        let mut total = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            cand &= cand - 1;
            total += u64::from((cand & rows[v]).count_ones());
        }
        return total;
    }
    let mut total = 0;
    while cand.count_ones() as usize >= k {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let next = cand & rows[v];
        if next.count_ones() as usize >= k - 1 {
            total += count_word(rows, next, k - 1);
        }
    }
    total
}

fn count_generic(g: &Graph, mut cand: VertexSet, k: usize) -> u64 {
    if k == 1 {
        return cand.len() as u64;
    }
    let mut total = 0;
    while cand.len() >= k {
        let v = cand.pop_first().expect("nonempty");
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.len() >= k - 1 {
            total += count_generic(g, next, k - 1);
        }
    }
    total
}

/// Lazily yields every `r`-clique of `g` exactly once, in lexicographic order
/// of the sorted vertex lists.
pub fn enumerate_cliques(g: &Graph, r: usize) -> CliqueIter<'_> {
    CliqueIter::new(g, r)
}

/// Depth-first clique stream backed by an explicit stack of candidate sets.
pub struct CliqueIter<'g> {
    g: &'g Graph,
    r: usize,
    chosen: Vec<usize>,
    stack: Vec<VertexSet>,
    done: bool,
}

impl<'g> CliqueIter<'g> {
    fn new(g: &'g Graph, r: usize) -> Self {
        let feasible = r <= g.n();
        CliqueIter {
            g,
            r,
            chosen: Vec::with_capacity(r),
            stack: if feasible && r > 0 {
                vec![VertexSet::full(g.n())]
            } else {
                vec![]
            },
            done: !feasible,
        }
    }

    /// Like `next`, but hands back the clique as a sorted vertex slice.
    pub fn next_slice(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if self.r == 0 {
            self.done = true;
            return Some(&self.chosen[..0]);
        }
        if self.chosen.len() == self.r {
            self.chosen.pop();
        }
        loop {
            let depth = self.chosen.len();
            let top = self.stack.last_mut()?;
            let need = self.r - depth;
            if top.len() < need {
                self.stack.pop();
                if self.stack.is_empty() {
                    self.done = true;
                    return None;
                }
                self.chosen.pop();
                continue;
            }
            let v = top.pop_first().expect("nonempty");
            if need == 1 {
                self.chosen.push(v);
                return Some(&self.chosen);
            }
            let mut next = top.clone();
            next.intersect_with(self.g.row(v));
            if next.len() >= need - 1 {
                self.chosen.push(v);
                self.stack.push(next);
            }
        }
    }
}

impl Iterator for CliqueIter<'_> {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let n = self.g.n();
        self.next_slice()
            .map(|c| VertexSet::from_vertices(n, c.iter().copied()))
    }
}

/// Whether `g` contains a clique on `k` vertices.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    find_clique_in(g, &VertexSet::full(g.n()), k).is_some()
}

/// Finds a `k`-clique inside `cand`, preferring the lexicographically first one.
///
/// Branches are cut with a greedy colouring bound: a candidate set that can
/// be covered by fewer than `k` independent sets cannot hold a `k`-clique.
pub fn find_clique_in(g: &Graph, cand: &VertexSet, k: usize) -> Option<Vec<usize>> {
    let mut chosen = Vec::with_capacity(k);
    search_clique(g, cand.clone(), k, &mut chosen).then_some(chosen)
}

fn search_clique(g: &Graph, mut cand: VertexSet, k: usize, chosen: &mut Vec<usize>) -> bool {
    if k == 0 {
        return true;
    }
    if cand.len() < k {
        return false;
    }
    if k == 1 {
        chosen.push(cand.first().expect("nonempty"));
        return true;
    }
    if k >= 3 && colour_bound_below(g, &cand, k) {
        return false;
    }
    while cand.len() >= k {
        let v = cand.pop_first().expect("nonempty");
        let mut next = cand.clone();
        next.intersect_with(g.row(v));
        if next.len() >= k - 1 {
            chosen.push(v);
            if search_clique(g, next, k - 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// True when a greedy colouring of `cand` uses fewer than `k` colours.
fn colour_bound_below(g: &Graph, cand: &VertexSet, k: usize) -> bool {
    let mut uncoloured = cand.clone();
    let mut colours = 0;
    while !uncoloured.is_empty() {
        if colours + 1 >= k {
            return false;
        }
        let mut class = uncoloured.clone();
        while let Some(v) = class.pop_first() {
            uncoloured.remove(v);
            class.difference_with(g.row(v));
        }
        colours += 1;
    }
    colours < k
}
