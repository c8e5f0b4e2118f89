use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

pub(crate) const WORD_BITS: usize = 64;

pub(crate) type Words = SmallVec<[u64; 1]>;

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(WORD_BITS).max(1)
}

/// A subset of `{0, ..., n-1}` stored as a fixed-width bit vector.
///
/// Sets with at most 64 elements live inline in a single word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet {
    bits: Words,
}

impl VertexSet {
    /// Empty set able to hold vertices `0..n`.
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: SmallVec::from_elem(0, words_for(n)),
        }
    }

    /// The set `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        let mut set = Self::empty(n);
        for (w, word) in set.bits.iter_mut().enumerate() {
            let lo = w * WORD_BITS;
            if n >= lo + WORD_BITS {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        set
    }

    pub fn from_vertices(n: usize, vertices: impl IntoIterator<Item = usize>) -> Self {
        let mut set = Self::empty(n);
        for v in vertices {
            set.insert(v);
        }
        set
    }

    pub(crate) fn from_words(bits: &[u64]) -> Self {
        VertexSet {
            bits: SmallVec::from_slice(bits),
        }
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        self.bits
            .get(v / WORD_BITS)
            .is_some_and(|w| w >> (v % WORD_BITS) & 1 == 1)
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.bits[v / WORD_BITS] |= 1 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.bits[v / WORD_BITS] &= !(1 << (v % WORD_BITS));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.iter().all(|&w| w == 0)
    }

    /// Smallest element, if any.
    #[inline]
    pub fn first(&self) -> Option<usize> {
        self.bits
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD_BITS + w.trailing_zeros() as usize)
    }

    /// Removes and returns the smallest element.
    #[inline]
    pub fn pop_first(&mut self) -> Option<usize> {
        for (i, w) in self.bits.iter_mut().enumerate() {
            if *w != 0 {
                let b = w.trailing_zeros() as usize;
                *w &= *w - 1;
                return Some(i * WORD_BITS + b);
            }
        }
        None
    }

    #[inline]
    pub fn intersect_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= b;
        }
    }

    #[inline]
    pub fn difference_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a &= !b;
        }
    }

    #[inline]
    pub fn union_with(&mut self, other: &[u64]) {
        for (a, b) in self.bits.iter_mut().zip(other) {
            *a |= b;
        }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(&other.bits);
        out
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.bits,
            index: 0,
            current: self.bits.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Lexicographic comparison of the membership sequences `0, 1, 2, ...`
    /// where absence sorts before presence.
    pub(crate) fn cmp_membership(&self, other: &VertexSet) -> Ordering {
        for (a, b) in self.bits.iter().zip(&other.bits) {
            let diff = a ^ b;
            if diff != 0 {
                let bit = diff.trailing_zeros();
                return if a >> bit & 1 == 1 {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD_BITS + b);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_set_respects_width() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(5).to_vec(), vec![0, 1, 2, 3, 4]);
        assert_eq!(VertexSet::full(64).len(), 64);
        let big = VertexSet::full(130);
        assert_eq!(big.len(), 130);
        assert!(big.contains(129));
        assert!(!big.contains(130));
    }

    #[test]
    fn pop_first_walks_in_order() {
        let mut s = VertexSet::from_vertices(100, [70, 3, 64, 9]);
        let mut out = vec![];
        while let Some(v) = s.pop_first() {
            out.push(v);
        }
        assert_eq!(out, vec![3, 9, 64, 70]);
    }

    #[test]
    fn membership_order() {
        let a = VertexSet::from_vertices(4, [1]);
        let b = VertexSet::from_vertices(4, [0]);
        assert_eq!(a.cmp_membership(&b), Ordering::Less);
        assert_eq!(b.cmp_membership(&a), Ordering::Greater);
        assert_eq!(a.cmp_membership(&a), Ordering::Equal);
    }
}
