//! Fixed-width bit vectors over the vertices of one graph.
//!
//! A [`VertexSet`] is the universal currency of this crate: neighborhoods,
//! separators, components, bags and solutions are all vertex sets. The width
//! is fixed at construction and all binary operations require equal widths.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

const WORD_BITS: usize = 64;

/// A set of vertices of a graph with a fixed vertex count.
///
/// Ordering is lexicographic on the ascending element sequence, so sorted
/// lists of sets are stable across runs and platforms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    nbits: u32,
    words: Vec<u64>,
}

#[inline]
fn word_count(nbits: u32) -> usize {
    (nbits as usize).div_ceil(WORD_BITS)
}

impl VertexSet {
    /// Empty set of the given width.
    pub fn empty(nbits: usize) -> Self {
        assert!(nbits <= crate::graph::MAX_VERTICES, "width above supported cap");
        VertexSet { nbits: nbits as u32, words: vec![0; word_count(nbits as u32)] }
    }

    /// Set containing all `nbits` vertices.
    pub fn full(nbits: usize) -> Self {
        let mut s = Self::empty(nbits);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD_BITS;
            let in_word = nbits.saturating_sub(lo).min(WORD_BITS);
            *w = if in_word == WORD_BITS { u64::MAX } else { (1u64 << in_word) - 1 };
        }
        s
    }

    pub fn singleton(nbits: usize, v: usize) -> Self {
        let mut s = Self::empty(nbits);
        s.insert(v);
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(nbits: usize, iter: I) -> Self {
        let mut s = Self::empty(nbits);
        for v in iter {
            s.insert(v);
        }
        s
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.nbits as usize
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        debug_assert!(v < self.nbits as usize);
        self.words[v / WORD_BITS] >> (v % WORD_BITS) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(v < self.nbits as usize, "vertex {} out of range", v);
        self.words[v / WORD_BITS] |= 1u64 << (v % WORD_BITS);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        assert!(v < self.nbits as usize, "vertex {} out of range", v);
        self.words[v / WORD_BITS] &= !(1u64 << (v % WORD_BITS));
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest vertex in the set, if any.
    pub fn min_vertex(&self) -> Option<usize> {
        for (i, &w) in self.words.iter().enumerate() {
            if w != 0 {
                return Some(i * WORD_BITS + w.trailing_zeros() as usize);
            }
        }
        None
    }

    #[inline]
    fn check_width(&self, other: &VertexSet) {
        assert_eq!(self.nbits, other.nbits, "vertex-set width mismatch: {} vs {}", self.nbits, other.nbits);
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a | b).collect();
        VertexSet { nbits: self.nbits, words }
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        VertexSet { nbits: self.nbits, words }
    }

    /// Set difference `self \ other`.
    pub fn minus(&self, other: &VertexSet) -> VertexSet {
        self.check_width(other);
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a & !b).collect();
        VertexSet { nbits: self.nbits, words }
    }

    /// Complement within the full vertex set of the same width.
    pub fn complement(&self) -> VertexSet {
        let mut out = VertexSet::full(self.nbits as usize);
        for (o, &w) in out.words.iter_mut().zip(&self.words) {
            *o &= !w;
        }
        out
    }

    pub fn union_in_place(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_in_place(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn minus_in_place(&mut self, other: &VertexSet) {
        self.check_width(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        !self.intersects(other)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.check_width(other);
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    /// Ascending iterator over the members.
    pub fn iter(&self) -> SetIter<'_> {
        SetIter { set: self, word_idx: 0, current: self.words.first().copied().unwrap_or(0) }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    /// Lexicographic order on ascending element sequences:
    /// `{0,2} < {0,3} < {0} < {1}` and the empty set sorts last among
    /// sets sharing no elements... more precisely a proper "prefix" set
    /// sorts before its extensions are exhausted. Implemented via the
    /// lowest differing element.
    fn cmp(&self, other: &Self) -> Ordering {
        self.check_width(other);
        for (i, (&a, &b)) in self.words.iter().zip(&other.words).enumerate() {
            if a != b {
                let diff = a ^ b;
                let bit = diff & diff.wrapping_neg();
                let in_self = a & bit != 0;
                // The set holding the lowest differing element compares
                // smaller, unless the other set has nothing at or past it
                // (then the other is a prefix and comes first).
                let rest_nonempty = |s: &VertexSet| -> bool {
                    let mut w = s.words[i] & !(bit | (bit - 1));
                    if w != 0 {
                        return true;
                    }
                    for j in i + 1..s.words.len() {
                        w |= s.words[j];
                    }
                    w != 0
                };
                return if in_self {
                    if rest_nonempty(other) { Ordering::Less } else { Ordering::Greater }
                } else if rest_nonempty(self) {
                    Ordering::Greater
                } else {
                    Ordering::Less
                };
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct SetIter<'a> {
    set: &'a VertexSet,
    word_idx: usize,
    current: u64,
}

impl<'a> Iterator for SetIter<'a> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word_idx * WORD_BITS + bit);
            }
            self.word_idx += 1;
            if self.word_idx >= self.set.words.len() {
                return None;
            }
            self.current = self.set.words[self.word_idx];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = SetIter<'a>;

    fn into_iter(self) -> SetIter<'a> {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    /// Collects into a set whose width is the supported maximum; mostly
    /// useful in tests. Prefer [`VertexSet::from_indices`] in library code.
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_indices(crate::graph::MAX_VERTICES, iter)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vs(items: &[usize]) -> VertexSet {
        VertexSet::from_indices(130, items.iter().copied())
    }

    #[test]
    fn basic_ops() {
        let a = vs(&[0, 5, 64, 129]);
        let b = vs(&[5, 64, 100]);
        assert_eq!(a.len(), 4);
        assert!(a.contains(129) && !a.contains(1));
        assert_eq!(a.intersection(&b).to_vec(), vec![5, 64]);
        assert_eq!(a.minus(&b).to_vec(), vec![0, 129]);
        assert_eq!(a.union(&b).len(), 5);
        assert!(vs(&[5, 64]).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert_eq!(a.min_vertex(), Some(0));
        assert_eq!(VertexSet::empty(10).min_vertex(), None);
    }

    #[test]
    fn complement_is_involution() {
        let a = vs(&[0, 3, 129]);
        assert_eq!(a.complement().complement(), a);
        assert_eq!(a.complement().len(), 130 - 3);
    }

    #[test]
    fn order_matches_sequence_lexicographic() {
        // Compare against the order of sorted element vectors.
        let sets = [
            vs(&[]),
            vs(&[0]),
            vs(&[0, 1]),
            vs(&[0, 2]),
            vs(&[0, 2, 5]),
            vs(&[1]),
            vs(&[1, 2]),
            vs(&[2, 64]),
            vs(&[129]),
        ];
        for x in &sets {
            for y in &sets {
                let expect = x.to_vec().cmp(&y.to_vec());
                assert_eq!(x.cmp(y), expect, "{:?} vs {:?}", x, y);
            }
        }
    }

    #[test]
    fn full_width_boundaries() {
        for n in [1usize, 63, 64, 65, 128] {
            let f = VertexSet::full(n);
            assert_eq!(f.len(), n);
            assert_eq!(f.complement().len(), 0);
        }
    }
}
