//! Argument identifiers and bitset-backed argument sets.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

/// A dense, 1-based argument identifier.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ArgId(u32);

impl ArgId {
    /// Creates an identifier. Panics on `0`, which is never a valid id.
    pub const fn new(id: u32) -> Self {
        assert!(id > 0, "argument ids are 1-based");
        ArgId(id)
    }

    /// Builds the id for a zero-based position.
    pub fn from_index(index: usize) -> Self {
        ArgId(index as u32 + 1)
    }

    pub const fn get(self) -> u32 {
        self.0
    }

    /// Zero-based position of this argument.
    pub fn index(self) -> usize {
        self.0 as usize - 1
    }
}

impl fmt::Display for ArgId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite set of arguments.
///
/// Bit `i` stands for `ArgId(i + 1)`. Trailing zero words are always trimmed,
/// so structurally equal sets compare and hash equal regardless of how they
/// were built. The total order is the lexicographic order of the ascending
/// member lists, which is the canonical order used for extension output.
#[derive(Clone, Default)]
pub struct ArgSet {
    words: Vec<u64>,
}

impl ArgSet {
    pub fn new() -> Self {
        ArgSet { words: Vec::new() }
    }

    /// The set `{1, ..., n}`.
    pub fn full(n: usize) -> Self {
        let mut words = vec![u64::MAX; n / 64];
        if !n.is_multiple_of(64) {
            words.push((1u64 << (n % 64)) - 1);
        }
        ArgSet { words }
    }

    pub fn singleton(a: ArgId) -> Self {
        let mut s = ArgSet::new();
        s.insert(a);
        s
    }

    pub fn from_ids<I: IntoIterator<Item = u32>>(ids: I) -> Self {
        ids.into_iter().map(ArgId::new).collect()
    }

    /// Builds a set from a bitmask over arguments `1..=64`.
    pub fn from_mask(mask: u64) -> Self {
        let mut s = ArgSet { words: vec![mask] };
        s.trim();
        s
    }

    /// The bitmask of this set, if every member is at most 64.
    pub fn to_mask(&self) -> Option<u64> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0]),
            _ => None,
        }
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn contains(&self, a: ArgId) -> bool {
        let i = a.index();
        self.words
            .get(i / 64)
            .is_some_and(|w| w & (1u64 << (i % 64)) != 0)
    }

    pub fn insert(&mut self, a: ArgId) -> bool {
        let i = a.index();
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        let bit = 1u64 << (i % 64);
        let fresh = self.words[i / 64] & bit == 0;
        self.words[i / 64] |= bit;
        fresh
    }

    pub fn remove(&mut self, a: ArgId) -> bool {
        let i = a.index();
        let Some(w) = self.words.get_mut(i / 64) else {
            return false;
        };
        let bit = 1u64 << (i % 64);
        let present = *w & bit != 0;
        *w &= !bit;
        self.trim();
        present
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    /// Largest member, if any.
    pub fn last(&self) -> Option<ArgId> {
        let last = self.words.len().checked_sub(1)?;
        let w = self.words[last];
        Some(ArgId::from_index(last * 64 + 63 - w.leading_zeros() as usize))
    }

    pub fn first(&self) -> Option<ArgId> {
        self.iter().next()
    }

    pub fn is_subset(&self, other: &ArgSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn is_superset(&self, other: &ArgSet) -> bool {
        other.is_subset(self)
    }

    pub fn is_proper_subset(&self, other: &ArgSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn intersects(&self, other: &ArgSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn is_disjoint(&self, other: &ArgSet) -> bool {
        !self.intersects(other)
    }

    pub fn union(&self, other: &ArgSet) -> ArgSet {
        let (long, short) = if self.words.len() >= other.words.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w |= s;
        }
        ArgSet { words }
    }

    pub fn intersection(&self, other: &ArgSet) -> ArgSet {
        let mut s = ArgSet {
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & b)
                .collect(),
        };
        s.trim();
        s
    }

    pub fn difference(&self, other: &ArgSet) -> ArgSet {
        let mut words = self.words.clone();
        for (w, o) in words.iter_mut().zip(&other.words) {
            *w &= !o;
        }
        let mut s = ArgSet { words };
        s.trim();
        s
    }

    pub fn union_with(&mut self, other: &ArgSet) {
        if self.words.len() < other.words.len() {
            self.words.resize(other.words.len(), 0);
        }
        for (w, o) in self.words.iter_mut().zip(&other.words) {
            *w |= o;
        }
    }

    /// Members in ascending order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<u32> {
        self.iter().map(ArgId::get).collect()
    }
}

impl PartialEq for ArgSet {
    fn eq(&self, other: &Self) -> bool {
        self.words == other.words
    }
}

impl Eq for ArgSet {}

impl Hash for ArgSet {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.words.hash(state);
    }
}

impl Ord for ArgSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ArgSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Formats as `[1 3 5]`, and `[]` for the empty set.
impl fmt::Display for ArgSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, a) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{a}")?;
        }
        f.write_str("]")
    }
}

impl FromIterator<ArgId> for ArgSet {
    fn from_iter<I: IntoIterator<Item = ArgId>>(iter: I) -> Self {
        let mut s = ArgSet::new();
        for a in iter {
            s.insert(a);
        }
        s
    }
}

impl Extend<ArgId> for ArgSet {
    fn extend<I: IntoIterator<Item = ArgId>>(&mut self, iter: I) {
        for a in iter {
            self.insert(a);
        }
    }
}

impl<'a> IntoIterator for &'a ArgSet {
    type Item = ArgId;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = ArgId;

    fn next(&mut self) -> Option<ArgId> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(ArgId::from_index(self.word * 64 + bit));
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
        }
    }
}

/// Canonical form of a family of extensions: ascending lexicographic order,
/// duplicates removed.
pub fn canonicalize(mut family: Vec<ArgSet>) -> Vec<ArgSet> {
    family.sort();
    family.dedup();
    family
}
