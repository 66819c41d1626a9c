//! Bitset vertex sets bound to a fixed vertex count.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitOr, Sub};

use smallvec::{smallvec, SmallVec};

const WORD: usize = 64;

type Words = SmallVec<[u64; 1]>;

/// A subset of `0..n`. Graphs with up to 64 vertices use a single inline word.
///
/// Binary set operations panic when the operands are bound to different `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    n: usize,
    words: Words,
}

fn word_count(n: usize) -> usize {
    n.div_ceil(WORD).max(1)
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet { n, words: smallvec![0; word_count(n)] }
    }

    pub fn full(n: usize) -> Self {
        let mut s = Self::empty(n);
        for (i, w) in s.words.iter_mut().enumerate() {
            let lo = i * WORD;
            let hi = (lo + WORD).min(n);
            if hi > lo {
                let width = hi - lo;
                *w = if width == WORD { !0 } else { (1u64 << width) - 1 };
            }
        }
        s
    }

    pub fn singleton(n: usize, v: usize) -> Self {
        let mut s = Self::empty(n);
        s.insert(v);
        s
    }

    /// Builds a set from vertex indices. Panics on an index `>= n`.
    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Self {
        let mut s = Self::empty(n);
        for v in vertices {
            s.insert(v);
        }
        s
    }

    /// The set whose members are the set bits of `mask` (only valid for `n <= 64`).
    pub fn from_mask(n: usize, mask: u64) -> Self {
        assert!(n <= WORD, "from_mask needs n <= 64");
        let valid = if n == WORD { !0 } else { (1u64 << n) - 1 };
        assert_eq!(mask & !valid, 0, "mask has bits outside 0..{n}");
        VertexSet { n, words: smallvec![mask] }
    }

    /// Bound vertex count.
    pub fn universe(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / WORD] |= 1u64 << (v % WORD);
    }

    pub fn remove(&mut self, v: usize) {
        assert!(v < self.n, "vertex {v} out of range 0..{}", self.n);
        self.words[v / WORD] &= !(1u64 << (v % WORD));
    }

    pub fn contains(&self, v: usize) -> bool {
        v < self.n && self.words[v / WORD] >> (v % WORD) & 1 == 1
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> Iter<'_> {
        Iter { words: &self.words, index: 0, current: self.words[0] }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Single-word view, for `n <= 64`.
    pub fn mask(&self) -> Option<u64> {
        (self.words.len() == 1).then(|| self.words[0])
    }

    fn check_same(&self, other: &VertexSet) {
        assert_eq!(self.n, other.n, "vertex sets bound to different vertex counts");
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.check_same(other);
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        !self.is_disjoint(other)
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.check_same(other);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn complement(&self) -> VertexSet {
        let mut out = Self::full(self.n);
        out.difference_with(self);
        out
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.check_same(other);
        self.words.iter().zip(&other.words).map(|(a, b)| (a & b).count_ones() as usize).sum()
    }
}

impl<'a> BitOr<&'a VertexSet> for &'a VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(rhs);
        out
    }
}

impl<'a> BitAnd<&'a VertexSet> for &'a VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(rhs);
        out
    }
}

impl<'a> Sub<&'a VertexSet> for &'a VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(rhs);
        out
    }
}

/// Canonical order: sets compare like their ascending member lists compare
/// in a dictionary, so `{0,2} < {0,2,5} < {1} < {1,3}`.
impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then_with(|| {
            let diff = self.words.iter().zip(&other.words).position(|(a, b)| a != b);
            let Some(i) = diff else { return Ordering::Equal };
            let x = self.words[i] ^ other.words[i];
            let bit = x.trailing_zeros() as usize;
            let v = i * WORD + bit;
            // whoever holds `v` diverges first; the other side is either a
            // prefix (smaller) or continues with a larger vertex (larger)
            let self_holds = self.contains(v);
            let rest = if self_holds { other } else { self };
            if rest.has_member_above(v) == self_holds {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        })
    }
}

impl VertexSet {
    fn has_member_above(&self, v: usize) -> bool {
        let i = v / WORD;
        let shift = v % WORD;
        let above = if shift == WORD - 1 { 0 } else { self.words[i] >> (shift + 1) };
        above != 0 || self.words[i + 1..].iter().any(|&w| w != 0)
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
                return Some(self.index * WORD + bit);
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
