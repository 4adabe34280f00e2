//! Fixed-length bit vectors over a graph's canonical arc order.

use std::cmp::Ordering;
use std::fmt;

const WORD: usize = 64;

/// A subset of a graph's arcs, stored as a bit vector whose component `j`
/// is set iff the arc with 0-based canonical index `j` belongs to the set.
///
/// Sets are ordered by comparing their sorted member indices
/// lexicographically, so `{0, 2} < {0, 3} < {1}` and a proper prefix sorts
/// first.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ArcSet {
    len: usize,
    words: Vec<u64>,
}

impl ArcSet {
    pub fn empty(len: usize) -> Self {
        ArcSet {
            len,
            words: vec![0; len.div_ceil(WORD)],
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    /// Set of the first `k` indices.
    pub fn prefix(len: usize, k: usize) -> Self {
        let mut s = Self::empty(len);
        for i in 0..k.min(len) {
            s.insert(i);
        }
        s
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(len: usize, indices: I) -> Self {
        let mut s = Self::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    /// Length of the underlying vector (the arc count of the owning graph).
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / WORD] >> (i % WORD) & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "arc index {i} out of range {}", self.len);
        self.words[i / WORD] |= 1 << (i % WORD);
    }

    pub fn remove(&mut self, i: usize) {
        if i < self.len {
            self.words[i / WORD] &= !(1 << (i % WORD));
        }
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.contains(i))
    }

    pub fn intersection(&self, other: &ArcSet) -> ArcSet {
        self.zip_with(other, |a, b| a & b)
    }

    pub fn union(&self, other: &ArcSet) -> ArcSet {
        self.zip_with(other, |a, b| a | b)
    }

    pub fn difference(&self, other: &ArcSet) -> ArcSet {
        self.zip_with(other, |a, b| a & !b)
    }

    pub fn is_subset(&self, other: &ArcSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Componentwise 0/1 vector.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.contains(i) as u8).collect()
    }

    fn zip_with(&self, other: &ArcSet, f: impl Fn(u64, u64) -> u64) -> ArcSet {
        assert_eq!(self.len, other.len, "arc sets over different universes");
        ArcSet {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }
}

impl Ord for ArcSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter()).then(self.len.cmp(&other.len))
    }
}

impl PartialOrd for ArcSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ArcSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_operations() {
        let a = ArcSet::from_indices(70, [0, 3, 65]);
        let b = ArcSet::from_indices(70, [3, 4]);
        assert_eq!(a.intersection(&b).iter().collect::<Vec<_>>(), vec![3]);
        assert_eq!(a.union(&b).count(), 4);
        assert_eq!(a.difference(&b).iter().collect::<Vec<_>>(), vec![0, 65]);
        assert!(ArcSet::from_indices(70, [3]).is_subset(&b));
        assert!(!a.is_subset(&b));
        assert!(ArcSet::empty(5).is_empty());
        assert_eq!(ArcSet::prefix(5, 2).to_bits(), vec![1, 1, 0, 0, 0]);
    }

    #[test]
    fn lexicographic_order() {
        let s = |v: &[usize]| ArcSet::from_indices(6, v.iter().copied());
        let mut v = vec![s(&[1]), s(&[0, 3]), s(&[0, 2]), s(&[0]), s(&[])];
        v.sort();
        assert_eq!(v, vec![s(&[]), s(&[0]), s(&[0, 2]), s(&[0, 3]), s(&[1])]);
    }
}
