//! Fixed-universe vertex subsets backed by 64-bit words.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;

/// A subset of `0..universe`.
///
/// Ordering is lexicographic on the sorted member lists, so `{0, 3} < {1, 2}` and a
/// proper prefix sorts first. Solvers use this order to pick a canonical witness.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

#[inline]
fn word_count(universe: usize) -> usize {
    universe.div_ceil(64)
}

impl VertexSet {
    pub fn empty(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; word_count(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * 64;
            let hi = (lo + 64).min(universe);
            *w = if hi - lo == 64 {
                u64::MAX
            } else {
                (1u64 << (hi - lo)) - 1
            };
        }
        s
    }

    /// Builds a set from members, returning the first out-of-range vertex on failure.
    pub fn from_members<I: IntoIterator<Item = usize>>(
        universe: usize,
        members: I,
    ) -> Result<Self, usize> {
        let mut s = Self::empty(universe);
        for v in members {
            if v >= universe {
                return Err(v);
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Single-word constructor used by the search routines (`universe <= 64`).
    pub fn from_mask(universe: usize, mask: u64) -> Self {
        assert!(universe <= 64, "from_mask needs universe <= 64");
        let mut s = Self::empty(universe);
        if universe > 0 {
            let valid = if universe == 64 {
                u64::MAX
            } else {
                (1u64 << universe) - 1
            };
            s.words[0] = mask & valid;
        }
        s
    }

    /// The set as a single word, if the universe fits.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        self.words[v / 64] |= 1u64 << (v % 64);
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        if v < self.universe {
            self.words[v / 64] &= !(1u64 << (v % 64));
        }
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn complement(&self) -> Self {
        let mut c = Self::full(self.universe);
        for (a, b) in c.words.iter_mut().zip(&self.words) {
            *a &= !b;
        }
        c
    }

    pub fn union(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a & !b)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_len(&self, other: &Self) -> usize {
        debug_assert_eq!(self.universe, other.universe);
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(u64, u64) -> u64) -> Self {
        assert_eq!(self.universe, other.universe, "universe mismatch");
        VertexSet {
            universe: self.universe,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
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

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter()
            .cmp(other.iter())
            .then(self.universe.cmp(&other.universe))
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

/// Serialized as the sorted member list; the universe comes from the host graph.
impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// Lexicographic comparison of two single-word masks, matching `Ord for VertexSet`.
#[inline]
pub fn mask_lex_less(a: u64, b: u64) -> bool {
    if a == b {
        return false;
    }
    let diff = a ^ b;
    let low = diff.trailing_zeros();
    if a >> low & 1 == 1 {
        // `a` has the smaller next element, unless `b` already ran out (prefix).
        b >> low != 0
    } else {
        a >> low == 0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order() {
        let a = VertexSet::from_members(8, [0, 3]).unwrap();
        let b = VertexSet::from_members(8, [1, 2]).unwrap();
        assert!(a < b);
        let p = VertexSet::from_members(8, [0]).unwrap();
        assert!(p < a);
        assert!(mask_lex_less(0b1001, 0b0110));
        assert!(mask_lex_less(0b0001, 0b1001));
        assert!(!mask_lex_less(0b1001, 0b0001));
        assert!(mask_lex_less(0, 1));
    }

    #[test]
    fn multiword_complement_and_iter() {
        let s = VertexSet::from_members(130, [0, 64, 129]).unwrap();
        assert_eq!(s.to_vec(), vec![0, 64, 129]);
        let c = s.complement();
        assert_eq!(c.len(), 127);
        assert!(!c.contains(129));
        assert!(c.contains(128));
        assert_eq!(VertexSet::from_members(3, [3]), Err(3));
    }

    #[test]
    fn mask_order_agrees_with_set_order() {
        for a in 0u64..64 {
            for b in 0u64..64 {
                let sa = VertexSet::from_mask(6, a);
                let sb = VertexSet::from_mask(6, b);
                assert_eq!(mask_lex_less(a, b), sa < sb, "{a:b} vs {b:b}");
            }
        }
    }
}
