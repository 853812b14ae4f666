use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// A finite set of vertex indices, stored as a bitset.
///
/// Two words are kept inline, so sets over at most 128 vertices never
/// allocate. Trailing zero words are always trimmed, which makes the derived
/// `Eq` and `Hash` agree with set equality.
///
/// The `Ord` implementation is the lexicographic order of the sorted index
/// sequences, e.g. `{0, 2} < {0, 2, 5} < {0, 3} < {1}`.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct VertexSet {
    words: SmallVec<[u64; 2]>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_mask(mask: u128) -> Self {
        let mut words = SmallVec::new();
        words.push(mask as u64);
        words.push((mask >> 64) as u64);
        let mut set = Self { words };
        set.trim();
        set
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Self {
        let mut set = Self::new();
        for i in indices {
            set.insert(i);
        }
        set
    }

    /// The set as a 128-bit mask, if every element is below 128.
    pub fn as_mask(&self) -> Option<u128> {
        match self.words.len() {
            0 => Some(0),
            1 => Some(self.words[0] as u128),
            2 => Some(self.words[0] as u128 | (self.words[1] as u128) << 64),
            _ => None,
        }
    }

    pub fn insert(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] |= 1 << b;
    }

    pub fn remove(&mut self, i: usize) {
        let (w, b) = (i / 64, i % 64);
        if w < self.words.len() {
            self.words[w] &= !(1 << b);
            self.trim();
        }
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = self.clone();
        s.remove(i);
        s
    }

    pub fn contains(&self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn last(&self) -> Option<usize> {
        let last = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - last.leading_zeros() as usize)
    }

    /// Elements in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            word: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words.len() <= other.words.len()
            && self.words.iter().zip(&other.words).all(|(a, b)| a & !b == 0)
    }

    pub fn intersects(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).any(|(a, b)| a & b != 0)
    }

    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut words: SmallVec<[u64; 2]> =
            self.words.iter().zip(&other.words).map(|(a, b)| a & b).collect();
        while words.last() == Some(&0) {
            words.pop();
        }
        VertexSet { words }
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let len = self.words.len().max(other.words.len());
        let words = (0..len)
            .map(|i| self.word(i) | other.word(i))
            .collect();
        VertexSet { words }
    }

    fn word(&self, i: usize) -> u64 {
        self.words.get(i).copied().unwrap_or(0)
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    /// True if the set has an element strictly greater than `i`.
    fn has_above(&self, i: usize) -> bool {
        let (w, b) = (i / 64, i % 64);
        (self.word(w) >> b >> 1) != 0 || self.words.iter().skip(w + 1).any(|&x| x != 0)
    }
}

impl Ord for VertexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        let len = self.words.len().max(other.words.len());
        for w in 0..len {
            let (a, b) = (self.word(w), other.word(w));
            if a == b {
                continue;
            }
            // Both sequences agree below the lowest differing element x.
            let x = w * 64 + (a ^ b).trailing_zeros() as usize;
            return if a >> (x % 64) & 1 == 1 {
                if other.has_above(x) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            } else if self.has_above(x) {
                Ordering::Greater
            } else {
                Ordering::Less
            };
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

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        Self::from_indices(iter)
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    word: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let b = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.word * 64 + b);
            }
            self.word += 1;
            self.current = *self.words.get(self.word)?;
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
    use proptest::prelude::*;

    #[test]
    fn basic_ops() {
        let mut s = VertexSet::from_indices([3, 70, 1]);
        assert_eq!(s.to_vec(), vec![1, 3, 70]);
        assert_eq!(s.len(), 3);
        assert_eq!(s.last(), Some(70));
        s.remove(70);
        assert_eq!(s, VertexSet::from_indices([1, 3]));
        assert_eq!(s.as_mask(), Some(0b1010));
        assert!(VertexSet::new().is_empty());
    }

    #[test]
    fn lexicographic_examples() {
        let a = VertexSet::from_indices([0, 2]);
        let b = VertexSet::from_indices([0, 2, 5]);
        let c = VertexSet::from_indices([0, 3]);
        let d = VertexSet::from_indices([1]);
        assert!(a < b && b < c && c < d);
        assert!(VertexSet::from_indices([0, 130]) < VertexSet::from_indices([1]));
    }

    proptest! {
        #[test]
        fn order_matches_sorted_vectors(
            a in proptest::collection::btree_set(0usize..150, 0..8),
            b in proptest::collection::btree_set(0usize..150, 0..8),
        ) {
            let va: Vec<usize> = a.iter().copied().collect();
            let vb: Vec<usize> = b.iter().copied().collect();
            let sa = VertexSet::from_indices(va.clone());
            let sb = VertexSet::from_indices(vb.clone());
            prop_assert_eq!(sa.cmp(&sb), va.cmp(&vb));
            prop_assert_eq!(sa.is_subset(&sb), a.is_subset(&b));
            prop_assert_eq!(sa.intersection_len(&sb), a.intersection(&b).count());
            prop_assert_eq!(sa.union(&sb).to_vec(), a.union(&b).copied().collect::<Vec<_>>());
        }
    }
}
