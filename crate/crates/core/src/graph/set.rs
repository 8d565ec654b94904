//! Fixed-capacity bitset over vertex indices.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Largest vertex count any [`Graph`](super::Graph) may have.
pub const MAX_VERTICES: usize = 256;

const WORDS: usize = MAX_VERTICES / 64;

/// A subset of `0..MAX_VERTICES`, stored as four machine words.
///
/// The set is `Copy`; every set operation is a handful of word operations.
/// Ordering is lexicographic on the ascending member sequence, so `{0, 3}`
/// sorts before `{1}` and `{0}` sorts before `{0, 1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    words: [u64; WORDS],
}

impl VertexSet {
    pub const fn new() -> Self {
        VertexSet { words: [0; WORDS] }
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "{n} exceeds MAX_VERTICES");
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

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < MAX_VERTICES, "vertex {v} exceeds MAX_VERTICES");
        let (w, b) = (v / 64, v % 64);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= MAX_VERTICES {
            return false;
        }
        let (w, b) = (v / 64, v % 64);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < MAX_VERTICES && self.words[v / 64] & (1 << (v % 64)) != 0
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    #[inline]
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

    #[inline]
    pub fn union(&self, other: &Self) -> Self {
        *self | *other
    }

    #[inline]
    pub fn intersection(&self, other: &Self) -> Self {
        *self & *other
    }

    #[inline]
    pub fn difference(&self, other: &Self) -> Self {
        *self - *other
    }

    #[inline]
    pub fn is_subset(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    #[inline]
    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        !self.is_disjoint(other)
    }

    /// Members strictly greater than `v`.
    pub fn above(&self, v: usize) -> Self {
        if v + 1 >= MAX_VERTICES {
            return VertexSet::new();
        }
        *self - VertexSet::full(v + 1)
    }

    pub fn iter(&self) -> Iter {
        Iter {
            words: self.words,
            word: 0,
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        // The lowest element of the symmetric difference decides: the side
        // holding it is smaller unless the other side has run out of members.
        let mut diff = VertexSet::new();
        for i in 0..WORDS {
            diff.words[i] = self.words[i] ^ other.words[i];
        }
        let Some(v) = diff.first() else {
            return Ordering::Equal;
        };
        let (rest, ord) = if self.contains(v) {
            (other, Ordering::Less)
        } else {
            (self, Ordering::Greater)
        };
        if rest.above(v).is_empty() {
            ord.reverse()
        } else {
            ord
        }
    }
}

impl PartialOrd for VertexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct Iter {
    words: [u64; WORDS],
    word: usize,
}

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        while self.word < WORDS {
            let w = self.words[self.word];
            if w != 0 {
                self.words[self.word] = w & (w - 1);
                return Some(self.word * 64 + w.trailing_zeros() as usize);
            }
            self.word += 1;
        }
        None
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;
    fn into_iter(self) -> Iter {
        self.iter()
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

impl<'a> FromIterator<&'a usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = &'a usize>>(iter: I) -> Self {
        iter.into_iter().copied().collect()
    }
}

impl From<&[usize]> for VertexSet {
    fn from(vs: &[usize]) -> Self {
        vs.iter().collect()
    }
}

impl<const N: usize> From<[usize; N]> for VertexSet {
    fn from(vs: [usize; N]) -> Self {
        vs.iter().collect()
    }
}

macro_rules! word_op {
    ($tr:ident, $f:ident, $tra:ident, $fa:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(mut self, rhs: VertexSet) -> VertexSet {
                self.$fa(rhs);
                self
            }
        }
        impl $tra for VertexSet {
            #[inline]
            fn $fa(&mut self, rhs: VertexSet) {
                for i in 0..WORDS {
                    let $a = self.words[i];
                    let $b = rhs.words[i];
                    self.words[i] = $e;
                }
            }
        }
    };
}

word_op!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| a | b);
word_op!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| a & b);
word_op!(Sub, sub, SubAssign, sub_assign, |a, b| a & !b);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// Comma-separated members, e.g. `0,2,4`; the empty set prints as `-`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!(
                "vertex {v} exceeds capacity {MAX_VERTICES}"
            )));
        }
        Ok(vs.into_iter().collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_and_len() {
        assert_eq!(VertexSet::full(0).len(), 0);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(65).len(), 65);
        assert_eq!(VertexSet::full(256).len(), 256);
        assert_eq!(VertexSet::full(130).last(), Some(129));
    }

    #[test]
    fn iteration_is_ascending() {
        let s = VertexSet::from([200, 3, 64, 0, 63]);
        assert_eq!(s.to_vec(), vec![0, 3, 63, 64, 200]);
        assert_eq!(s.first(), Some(0));
        assert_eq!(s.last(), Some(200));
    }

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from([0, 3]);
        let b = VertexSet::from([1]);
        let c = VertexSet::from([0]);
        let d = VertexSet::from([0, 2]);
        assert!(a < b);
        assert!(c < a);
        assert!(d < a);
        assert!(VertexSet::new() < c);
        let mut v = vec![b, a, d, c];
        v.sort();
        assert_eq!(v, vec![c, d, a, b]);
    }

    #[test]
    fn above_and_ops() {
        let s = VertexSet::from([1, 5, 70]);
        assert_eq!(s.above(5).to_vec(), vec![70]);
        assert_eq!(s.above(255), VertexSet::new());
        let t = VertexSet::from([5, 6]);
        assert_eq!((s & t).to_vec(), vec![5]);
        assert_eq!((s - t).to_vec(), vec![1, 70]);
        assert_eq!((s | t).len(), 4);
        assert!(VertexSet::from([5]).is_subset(&s));
    }

    #[test]
    fn display() {
        assert_eq!(VertexSet::from([0, 2, 4]).to_string(), "0,2,4");
        assert_eq!(VertexSet::new().to_string(), "-");
    }
}
