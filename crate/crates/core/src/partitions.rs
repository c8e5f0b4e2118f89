//! Integer partitions, the `s`-sum-free property and `beta(r, s)`, the largest
//! number of parts of an `s`-sum-free partition of `r`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Non-increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Sorts `parts` into non-increasing order; zero parts are rejected.
    pub fn new(mut parts: Vec<usize>) -> Result<Partition> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter(
                "a partition needs at least one part".into(),
            ));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidParameter(
                "partition parts must be positive".into(),
            ));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The integer being partitioned.
    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = inner
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::Parse(format!("bad partition {text:?}")))?;
        Partition::new(parts)
    }
}

/// All partitions of `r` in reverse-lexicographic order, starting at `(r)`.
pub fn enumerate_partitions(r: usize) -> Partitions {
    Partitions {
        next: (r >= 1).then(|| vec![r]),
    }
}

pub struct Partitions {
    next: Option<Vec<usize>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let current = self.next.take()?;
        // Successor: drop trailing 1s, decrement the last part > 1 and refill
        // the freed amount greedily with parts no larger than it.
        let mut succ = current.clone();
        let mut freed = 0;
        while succ.last() == Some(&1) {
            succ.pop();
            freed += 1;
        }
        if let Some(last) = succ.last_mut() {
            *last -= 1;
            freed += 1;
            let cap = *last;
            while freed > 0 {
                let part = freed.min(cap);
                succ.push(part);
                freed -= part;
            }
            self.next = Some(succ);
        }
        Some(Partition { parts: current })
    }
}

/// Whether no sub-multiset of the parts sums to exactly `s`.
///
/// Reachable sums are tracked as a bit vector and each part shifts-and-ors it.
pub fn is_s_sum_free(p: &Partition, s: usize) -> bool {
    let total = p.total();
    if s > total {
        return true;
    }
    let words = s / 64 + 1;
    let mut reach = vec![0u64; words];
    reach[0] = 1;
    for &a in &p.parts {
        if a > s {
            continue;
        }
        let (word_shift, bit_shift) = (a / 64, a % 64);
        for w in (0..words).rev() {
            let mut shifted = 0;
            if w >= word_shift {
                shifted = reach[w - word_shift] << bit_shift;
                if bit_shift > 0 && w > word_shift {
                    shifted |= reach[w - word_shift - 1] >> (64 - bit_shift);
                }
            }
            reach[w] |= shifted;
        }
        if reach[s / 64] >> (s % 64) & 1 == 1 {
            return false;
        }
    }
    reach[s / 64] >> (s % 64) & 1 == 0
}

/// `beta(r, s)` with the first partition (in enumeration order) attaining it.
pub fn beta(r: usize, s: usize) -> Result<(usize, Partition)> {
    if s == 0 || s >= r {
        return Err(Error::InvalidParameter(format!(
            "beta({r},{s}) needs 1 <= s < r"
        )));
    }
    let mut best: Option<Partition> = None;
    for p in enumerate_partitions(r).filter(|p| is_s_sum_free(p, s)) {
        if best.as_ref().is_none_or(|b| p.len() > b.len()) {
            best = Some(p);
        }
    }
    let best = best.expect("(r) itself is s-sum-free");
    Ok((best.len(), best))
}

/// Every `s`-sum-free partition of `r`, in enumeration order.
pub fn sum_free_partitions(r: usize, s: usize) -> impl Iterator<Item = Partition> {
    enumerate_partitions(r).filter(move |p| is_s_sum_free(p, s))
}

/// Returns a sub-multiset of parts summing to `s` (as indices), if any.
pub fn subset_with_sum(p: &Partition, s: usize) -> Option<Vec<usize>> {
    // reach[x] = index of the part that first made x reachable
    let mut via: Vec<Option<(usize, usize)>> = vec![None; s + 1];
    let mut reachable = vec![false; s + 1];
    reachable[0] = true;
    for (i, &a) in p.parts.iter().enumerate() {
        for x in (a..=s).rev() {
            if !reachable[x] && reachable[x - a] {
                reachable[x] = true;
                via[x] = Some((i, x - a));
            }
        }
    }
    if !reachable[s] {
        return None;
    }
    let mut out = vec![];
    let mut x = s;
    while x > 0 {
        let (i, prev) = via[x].expect("reachable sums have a predecessor");
        out.push(i);
        x = prev;
    }
    out.sort_unstable();
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parts(r: usize) -> Vec<Vec<usize>> {
        enumerate_partitions(r).map(|p| p.parts).collect()
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(
            parts(4),
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(parts(6).len(), 11);
        assert_eq!(parts(1), vec![vec![1]]);
        assert!(parts(0).is_empty());
    }

    #[test]
    fn sum_free_examples() {
        let p = |v: Vec<usize>| Partition::new(v).unwrap();
        assert!(is_s_sum_free(&p(vec![3, 1]), 2));
        assert!(!is_s_sum_free(&p(vec![2, 2]), 2));
        assert!(!is_s_sum_free(&p(vec![1, 1, 1, 1]), 2));
        assert!(is_s_sum_free(&p(vec![70, 70]), 69));
        assert!(!is_s_sum_free(&p(vec![70, 65, 1]), 135));
        assert!(!is_s_sum_free(&p(vec![64, 64, 1]), 129));
        assert!(is_s_sum_free(&p(vec![64, 64, 1]), 127));
    }

    #[test]
    fn beta_examples() {
        assert_eq!(
            beta(4, 2).unwrap(),
            (2, Partition::new(vec![3, 1]).unwrap())
        );
        let (b, w) = beta(6, 3).unwrap();
        assert_eq!(b, 3);
        assert!(w.parts() == [4, 1, 1] || w.parts() == [2, 2, 2]);
        assert_eq!(beta(3, 1).unwrap(), (1, Partition::new(vec![3]).unwrap()));
        assert!(beta(3, 3).is_err());
        assert!(beta(3, 0).is_err());
    }

    #[test]
    fn subset_diagnostic() {
        let p = Partition::new(vec![2, 2, 1]).unwrap();
        assert_eq!(subset_with_sum(&p, 2), Some(vec![0]));
        assert_eq!(
            subset_with_sum(&Partition::new(vec![3, 1]).unwrap(), 2),
            None
        );
    }

    #[test]
    fn parsing() {
        assert_eq!("(3,1)".parse::<Partition>().unwrap().parts(), &[3, 1]);
        assert_eq!("1,3".parse::<Partition>().unwrap().parts(), &[3, 1]);
        assert!("3,0".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }
}
