//! Explicit lower-bound constructions and their closed-form clique counts.

use crate::error::{Error, Result};
use crate::graph::{disjoint_union, join, turan_graph, turan_part_sizes, Graph};
use crate::partitions::{is_s_sum_free, subset_with_sum, Partition};

/// `K_{s+1} ∨ T_{r-s-1}(n-s-1)`, which has no two `r`-cliques sharing exactly
/// `s` vertices whenever `r >= 2s + 1`.
///
/// `s = 1` gives `K_2 ∨ T_{r-2}(n-2)` and `s = 0` gives `K_1 ∨ T_{r-1}(n-1)`.
pub fn book_extremal(n: usize, r: usize, s: usize) -> Result<Graph> {
    if r < 2 * s + 1 {
        return Err(Error::InvalidParameter(format!(
            "book_extremal needs r >= 2s+1 (got r={r}, s={s}); use gp_construction instead"
        )));
    }
    if n < r {
        return Err(Error::InvalidParameter(format!(
            "book_extremal needs n >= r (got n={n}, r={r})"
        )));
    }
    join(&Graph::complete(s + 1), &turan_graph(n - s - 1, r - s - 1)?)
}

/// Disjoint copies of `K_4` on `4⌊n/4⌋` vertices plus a clique on the
/// remaining `n mod 4`.
pub fn k4_packing(n: usize) -> Graph {
    let mut g = Graph::empty(0);
    for _ in 0..n / 4 {
        g = disjoint_union(&g, &Graph::complete(4)).expect("within capacity");
    }
    disjoint_union(&g, &Graph::complete(n % 4)).expect("within capacity")
}

/// Triangle count of `k4_packing(n)`: `n`, `n-1`, `n-2`, `n-2` for
/// `n ≡ 0, 1, 2, 3 (mod 4)`, with the small cases clamped at zero.
pub fn k4_packing_triangles(n: usize) -> u64 {
    let n = n as u64;
    match n % 4 {
        0 => n,
        1 => n - 1,
        _ => n.saturating_sub(2),
    }
}

/// Graph built from an `s`-sum-free partition `(a_1, ..., a_t)`.
///
/// The vertex set splits into `t` parts with Turán sizes (vertex `v` in part
/// `v mod t`). Part `i` holds `⌊|X_i| / a_i⌋` disjoint copies of `K_{a_i}`;
/// leftover vertices have no neighbours inside their part. Every pair of
/// vertices in different parts is adjacent.
pub fn gp_construction(n: usize, p: &Partition, s: usize) -> Result<Graph> {
    let r = p.total();
    if s >= r {
        return Err(Error::InvalidParameter(format!(
            "overlap s={s} must be smaller than r={r}"
        )));
    }
    if !is_s_sum_free(p, s) {
        let subset = subset_with_sum(p, s).unwrap_or_default();
        let terms: Vec<String> = subset
            .iter()
            .map(|&i| format!("a_{}={}", i + 1, p.parts()[i]))
            .collect();
        return Err(Error::InvalidParameter(format!(
            "partition {p} is not {s}-sum-free: {{{}}} sums to {s}",
            terms.join(", ")
        )));
    }
    if n < r {
        return Err(Error::InvalidParameter(format!(
            "gp_construction needs n >= r (got n={n}, r={r})"
        )));
    }
    let t = p.len();
    let mut g = Graph::try_empty(n)?;
    for u in 0..n {
        for v in u + 1..n {
            if u % t != v % t {
                g.add_edge(u, v);
            }
        }
    }
    for (i, &a) in p.parts().iter().enumerate() {
        let members: Vec<usize> = (i..n).step_by(t).collect();
        for block in members.chunks_exact(a) {
            for (x, &u) in block.iter().enumerate() {
                for &v in &block[x + 1..] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    Ok(g)
}

/// `∏ ⌊|X_i| / a_i⌋` over the exact part sizes used by [`gp_construction`].
pub fn gp_predicted_count(n: usize, p: &Partition) -> u64 {
    turan_part_sizes(n, p.len())
        .iter()
        .zip(p.parts())
        .map(|(&size, &a)| (size / a) as u64)
        .product()
}

/// With `n = 6m + t`, `0 <= t <= 5`: `m` disjoint triangles completely joined
/// to an independent set of `3m + t` vertices. Triangle vertices come first.
///
/// For `n < 6` this is the edgeless graph on `n` vertices.
pub fn b42_construction(n: usize) -> Graph {
    let (m, t) = (n / 6, n % 6);
    let mut g = Graph::empty(n);
    let side = 3 * m;
    for tri in 0..m {
        let base = 3 * tri;
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
    }
    for u in 0..side {
        for v in side..side + 3 * m + t {
            g.add_edge(u, v);
        }
    }
    g
}

/// `m (3m + t)` for `n = 6m + t`.
pub fn b42_predicted_count(n: usize) -> u64 {
    let (m, t) = ((n / 6) as u64, (n % 6) as u64);
    m * (3 * m + t)
}

/// Smallest integer at least `n^2/12 - 2`, i.e. `ceil((n^2 - 24) / 12)`
/// clamped at zero.
pub fn b42_lower_bound_ceil(n: usize) -> u64 {
    let n2 = (n * n) as u64;
    n2.saturating_sub(24).div_ceil(12)
}

/// Number of `s`-cliques in `T_t(n)`: the elementary symmetric polynomial of
/// degree `s` in the part sizes.
pub fn turan_clique_count(n: usize, t: usize, s: usize) -> u64 {
    if t == 0 {
        return u64::from(s == 0 && n == 0);
    }
    let mut e = vec![0u64; s + 1];
    e[0] = 1;
    for size in turan_part_sizes(n, t) {
        for k in (1..=s).rev() {
            e[k] += e[k - 1] * size as u64;
        }
    }
    e[s]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_cliques, enumerate_cliques};
    use crate::patterns::{is_free, ForbiddenFamily};

    fn family(text: &str) -> ForbiddenFamily {
        text.parse().unwrap()
    }

    #[test]
    fn b42_bound_rounding() {
        assert_eq!(b42_lower_bound_ceil(12), 10);
        assert_eq!(b42_lower_bound_ceil(11), 9);
        assert_eq!(b42_lower_bound_ceil(4), 0);
        for n in 5..200u64 {
            let c = b42_lower_bound_ceil(n as usize);
            assert!(12 * c + 24 >= n * n && (c == 0 || 12 * (c - 1) + 24 < n * n));
        }
    }

    #[test]
    fn book_extremal_examples() {
        let g = book_extremal(6, 4, 1).unwrap();
        assert_eq!(count_cliques(&g, 4), 4);
        assert_eq!(
            g,
            join(&Graph::complete(2), &turan_graph(4, 2).unwrap()).unwrap()
        );
        let g = book_extremal(5, 3, 0).unwrap();
        assert_eq!(count_cliques(&g, 3), 4);
        for r in 2..7 {
            for s in 0..=(r - 1) / 2 {
                assert_eq!(book_extremal(r, r, s).unwrap(), Graph::complete(r));
            }
        }
        assert!(book_extremal(10, 4, 2).is_err());
        assert!(book_extremal(3, 4, 1).is_err());
    }

    #[test]
    fn k4_packing_examples() {
        assert_eq!(count_cliques(&k4_packing(8), 3), 8);
        assert_eq!(count_cliques(&k4_packing(9), 3), 8);
        assert_eq!(count_cliques(&k4_packing(7), 3), 5);
        assert_eq!(k4_packing(9).n(), 9);
        assert!(is_free(&k4_packing(11), &family("B(3,1)")).unwrap());
    }

    #[test]
    fn gp_example_overlaps() {
        let p = Partition::new(vec![3, 1]).unwrap();
        let g = gp_construction(12, &p, 2).unwrap();
        assert_eq!(count_cliques(&g, 4), 12);
        assert_eq!(gp_predicted_count(12, &p), 12);
        let cliques: Vec<_> = enumerate_cliques(&g, 4).collect();
        let mut seen = [false; 5];
        for (i, a) in cliques.iter().enumerate() {
            for b in &cliques[i + 1..] {
                seen[a.intersection_len(b)] = true;
            }
        }
        assert!(!seen[2]);
        assert!(is_free(&g, &family("B(4,2)")).unwrap());
    }

    #[test]
    fn gp_rejects_non_sum_free() {
        let p = Partition::new(vec![2, 2, 2]).unwrap();
        let err = gp_construction(6, &p, 2).unwrap_err().to_string();
        assert!(err.contains("a_1=2"), "{err}");
    }

    #[test]
    fn gp_predicted_examples() {
        let p31 = Partition::new(vec![3, 1]).unwrap();
        assert_eq!(gp_predicted_count(24, &p31), 48);
        assert_eq!(count_cliques(&gp_construction(24, &p31, 2).unwrap(), 4), 48);
        let p4 = Partition::new(vec![4]).unwrap();
        assert_eq!(gp_predicted_count(8, &p4), 2);
        assert_eq!(count_cliques(&gp_construction(8, &p4, 1).unwrap(), 4), 2);
    }

    #[test]
    fn b42_examples() {
        assert_eq!(count_cliques(&b42_construction(12), 4), 12);
        assert_eq!(count_cliques(&b42_construction(7), 4), 4);
        assert_eq!(count_cliques(&b42_construction(6), 4), 3);
        assert_eq!(b42_construction(5).edge_count(), 0);
        assert!(is_free(&b42_construction(13), &family("B(4,2)")).unwrap());
    }

    #[test]
    fn turan_counts() {
        assert_eq!(turan_clique_count(7, 3, 3), 12);
        for n in 0..=100 {
            let g = turan_graph(n, 2).unwrap();
            assert_eq!(turan_clique_count(n, 2, 2), (n * n / 4) as u64);
            assert_eq!(count_cliques(&g, 2), (n * n / 4) as u64);
            assert_eq!(turan_clique_count(n, 5, 1), n as u64);
        }
        assert_eq!(turan_clique_count(3, 5, 4), 0);
    }
}
