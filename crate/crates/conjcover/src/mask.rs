//! Bitmasks over the elements of an enumerated group.

/// A subset of a group's elements as a bitmask, with cached cardinality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubsetMask {
    bits: Vec<u64>,
    len: usize,
    ones: u32,
}

impl SubsetMask {
    pub fn empty(len: usize) -> SubsetMask {
        SubsetMask {
            bits: vec![0; len.div_ceil(64)],
            len,
            ones: 0,
        }
    }

    pub fn full(len: usize) -> SubsetMask {
        let mut mask = SubsetMask::empty(len);
        for i in 0..len {
            mask.bits[i / 64] |= 1u64 << (i % 64);
        }
        mask.ones = len as u32;
        mask
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = u32>) -> SubsetMask {
        let mut mask = SubsetMask::empty(len);
        for i in indices {
            mask.insert(i);
        }
        mask
    }

    /// Number of bits the mask ranges over (the group order).
    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.ones == 0
    }

    /// Cached population count.
    pub fn cardinality(&self) -> usize {
        self.ones as usize
    }

    pub fn is_full(&self) -> bool {
        self.ones as usize == self.len
    }

    #[inline]
    pub fn contains(&self, index: u32) -> bool {
        let i = index as usize;
        debug_assert!(i < self.len);
        self.bits[i / 64] & (1u64 << (i % 64)) != 0
    }

    /// Sets a bit; returns true if it was newly set.
    #[inline]
    pub fn insert(&mut self, index: u32) -> bool {
        let i = index as usize;
        debug_assert!(i < self.len);
        let word = &mut self.bits[i / 64];
        let bit = 1u64 << (i % 64);
        if *word & bit == 0 {
            *word |= bit;
            self.ones += 1;
            true
        } else {
            false
        }
    }

    pub fn union_with(&mut self, other: &SubsetMask) {
        debug_assert_eq!(self.len, other.len);
        let mut ones = 0u32;
        for (w, o) in self.bits.iter_mut().zip(&other.bits) {
            *w |= o;
            ones += w.count_ones();
        }
        self.ones = ones;
    }

    pub fn intersection(&self, other: &SubsetMask) -> SubsetMask {
        debug_assert_eq!(self.len, other.len);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let ones = bits.iter().map(|w| w.count_ones()).sum();
        SubsetMask {
            bits,
            len: self.len,
            ones,
        }
    }

    pub fn union(&self, other: &SubsetMask) -> SubsetMask {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn is_subset_of(&self, other: &SubsetMask) -> bool {
        debug_assert_eq!(self.len, other.len);
        self.bits.iter().zip(&other.bits).all(|(a, b)| a & !b == 0)
    }

    /// Indices of set bits in increasing order.
    pub fn iter_ones(&self) -> impl Iterator<Item = u32> + '_ {
        self.bits.iter().enumerate().flat_map(|(wi, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let bit = w.trailing_zeros();
                    w &= w - 1;
                    Some(wi as u32 * 64 + bit)
                }
            })
        })
    }

    pub fn to_indices(&self) -> Vec<u32> {
        self.iter_ones().collect()
    }

    /// The raw words, usable as a hash key for state deduplication.
    pub fn words(&self) -> &[u64] {
        &self.bits
    }
}

impl std::fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SubsetMask({}/{})", self.ones, self.len)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_and_count() {
        let mut m = SubsetMask::empty(100);
        assert!(m.insert(3));
        assert!(!m.insert(3));
        assert!(m.insert(99));
        assert_eq!(m.cardinality(), 2);
        assert_eq!(m.to_indices(), vec![3, 99]);
        assert!(m.contains(99));
        assert!(!m.contains(98));
    }

    #[test]
    fn union_and_subset() {
        let a = SubsetMask::from_indices(70, [1, 5, 64]);
        let b = SubsetMask::from_indices(70, [5, 65]);
        let u = a.union(&b);
        assert_eq!(u.cardinality(), 4);
        assert!(a.is_subset_of(&u));
        assert!(b.is_subset_of(&u));
        assert!(!a.is_subset_of(&b));
        assert_eq!(a.intersection(&b).to_indices(), vec![5]);
    }

    #[test]
    fn full_mask() {
        let f = SubsetMask::full(65);
        assert!(f.is_full());
        assert_eq!(f.cardinality(), 65);
    }
}
