//! Fixed-width bitsets over graph vertices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Number of 64-bit words in a [`VertexSet`].
pub const WORDS: usize = 4;

/// Largest vertex count a [`Graph`](crate::Graph) can hold.
pub const MAX_VERTICES: usize = WORDS * 64;

/// A set of vertex indices below [`MAX_VERTICES`].
///
/// Sets compare as the unsigned integer whose bit `v` is set iff `v` is a
/// member, so `{0,1} < {2} < {0,2}`. Every tie-break in the crate uses this
/// order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "vertex set width {n} exceeds {MAX_VERTICES}"
        );
        let mut s = VertexSet::new();
        for (w, word) in s.words.iter_mut().enumerate() {
            let lo = w * 64;
            if n >= lo + 64 {
                *word = u64::MAX;
            } else if n > lo {
                *word = (1u64 << (n - lo)) - 1;
            }
        }
        s
    }

    pub fn singleton(v: usize) -> Self {
        let mut s = VertexSet::new();
        s.insert(v);
        s
    }

    /// Builds a set from the low word only; handy for enumeration masks.
    pub const fn from_bits(bits: u64) -> Self {
        let mut words = [0; WORDS];
        words[0] = bits;
        VertexSet { words }
    }

    /// Low 64 bits of the set.
    pub const fn low_bits(&self) -> u64 {
        self.words[0]
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.words[v >> 6] |= 1u64 << (v & 63);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.words[v >> 6] &= !(1u64 << (v & 63));
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v >> 6] >> (v & 63) & 1 == 1
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .zip(other.words.iter())
            .any(|(a, b)| a & b != 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    /// Largest member.
    pub fn last(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .rev()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + 63 - w.leading_zeros() as usize)
    }

    /// Members strictly below `bound`.
    pub fn below(&self, bound: usize) -> VertexSet {
        *self & VertexSet::full(bound.min(MAX_VERTICES))
    }

    /// Complement relative to `{0, .., n-1}`.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet::full(n) - *self
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            idx: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.words.iter().rev().cmp(other.words.iter().rev())
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter {
    words: [u64; WORDS],
    idx: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.idx < WORDS {
            let w = self.words[self.idx];
            if w != 0 {
                self.words[self.idx] = w & (w - 1);
                return Some(self.idx * 64 + w.trailing_zeros() as usize);
            }
            self.idx += 1;
        }
        None
    }
}

impl IntoIterator for &VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::new();
        for v in iter {
            s.insert(v);
        }
        s
    }
}

macro_rules! bitop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                self.$af(rhs);
                self
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                for ($a, $b) in self.words.iter_mut().zip(rhs.words.iter()) {
                    *$a = $e;
                }
            }
        }
    };
}

bitop!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| *a | b);
bitop!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| *a & b);
bitop!(Sub, sub, SubAssign, sub_assign, |a, b| *a & !b);

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_complement() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(130).len(), 130);
        let s: VertexSet = [1, 3, 70].into_iter().collect();
        let c = s.complement(80);
        assert_eq!(c.len(), 77);
        assert!(!c.contains(70));
        assert!(c.contains(79));
        assert!(!c.contains(80));
    }

    #[test]
    fn integer_order() {
        let a: VertexSet = [0, 1].into_iter().collect();
        let b = VertexSet::singleton(2);
        let c: VertexSet = [0, 2].into_iter().collect();
        let d = VertexSet::singleton(100);
        assert!(a < b && b < c && c < d);
    }

    #[test]
    fn iteration_spans_words() {
        let s: VertexSet = [0, 63, 64, 200, 255].into_iter().collect();
        assert_eq!(s.to_vec(), vec![0, 63, 64, 200, 255]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(255));
        assert_eq!(s.below(64).to_vec(), vec![0, 63]);
        assert_eq!(format!("{}", s.below(64)), "{0,63}");
    }
}
