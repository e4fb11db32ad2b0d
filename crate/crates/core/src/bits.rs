//! Small fixed-width and growable bitsets used by the search routines.

use alloc::vec;
use alloc::vec::Vec;

/// A fixed-width bitset of `64 * W` bits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct Bits<const W: usize>(pub [u64; W]);

impl<const W: usize> Bits<W> {
    #[inline]
    pub fn empty() -> Self {
        Bits([0; W])
    }

    #[inline]
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn or(mut self, other: &Self) -> Self {
        for (a, b) in self.0.iter_mut().zip(other.0.iter()) {
            *a |= *b;
        }
        self
    }

    #[inline]
    pub fn intersects(&self, other: &Self) -> bool {
        self.0.iter().zip(other.0.iter()).any(|(a, b)| a & b != 0)
    }
}

/// Growable bitset over `0..len`, used for sets of triple indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct IndexSet {
    words: Vec<u64>,
}

impl IndexSet {
    pub fn new(len: usize) -> Self {
        IndexSet {
            words: vec![0; len.div_ceil(64)],
        }
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn union_with(&mut self, other: &IndexSet) {
        for (a, b) in self.words.iter_mut().zip(other.words.iter()) {
            *a |= *b;
        }
    }

    /// Number of indices in `from..` that are not in `self`, given `len`.
    pub fn count_absent_from(&self, from: usize, len: usize) -> usize {
        if from >= len {
            return 0;
        }
        let mut total = 0;
        let first = from / 64;
        let last = (len - 1) / 64;
        for w in first..=last {
            let mut live = !self.words[w];
            if w == first {
                live &= u64::MAX << (from % 64);
            }
            if w == last && !len.is_multiple_of(64) {
                live &= (1u64 << (len % 64)) - 1;
            }
            total += live.count_ones() as usize;
        }
        total
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(w, &word)| {
            let mut rest = word;
            core::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let bit = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(w * 64 + bit)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_count_respects_bounds() {
        let mut s = IndexSet::new(130);
        s.insert(3);
        s.insert(64);
        s.insert(129);
        assert_eq!(s.count_absent_from(0, 130), 127);
        assert_eq!(s.count_absent_from(64, 130), 64);
        assert_eq!(s.count_absent_from(129, 130), 0);
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![3, 64, 129]);
    }

    #[test]
    fn fixed_bits_cross_words() {
        let mut a = Bits::<2>::empty();
        a.set(63);
        let mut b = Bits::<2>::empty();
        b.set(64);
        assert!(!a.intersects(&b));
        let c = a.or(&b);
        assert!(c.get(63) && c.get(64) && !c.get(0));
        assert!(c.intersects(&a));
    }
}
