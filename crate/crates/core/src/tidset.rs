use alloc::vec;
use alloc::vec::Vec;

const BITS: usize = 64;

/// Fixed-width bitset over transaction indices `0..len`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct TidSet {
    words: Vec<u64>,
    len: usize,
}

impl TidSet {
    pub fn empty(len: usize) -> Self {
        TidSet {
            words: vec![0; len.div_ceil(BITS)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = TidSet {
            words: vec![u64::MAX; len.div_ceil(BITS)],
            len,
        };
        s.trim();
        s
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = TidSet::empty(len);
        for i in indices {
            s.insert(i);
        }
        s
    }

    fn trim(&mut self) {
        let rem = self.len % BITS;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    /// Width of the universe, not the number of members.
    pub fn universe(&self) -> usize {
        self.len
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.len, "tid {i} out of range {}", self.len);
        self.words[i / BITS] |= 1 << (i % BITS);
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.len && self.words[i / BITS] & (1 << (i % BITS)) != 0
    }

    pub fn count(&self) -> u64 {
        self.words.iter().map(|w| w.count_ones() as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &TidSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= *b;
        }
    }

    pub fn union_with(&mut self, other: &TidSet) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    pub fn is_subset_of(&self, other: &TidSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// `|self ∩ other|` without allocating.
    pub fn intersection_count(&self, other: &TidSet) -> u64 {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as u64)
            .sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            core::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(wi * BITS + t)
            })
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let a = TidSet::from_indices(70, [0, 3, 64, 69]);
        let b = TidSet::from_indices(70, [3, 64, 65]);
        assert_eq!(a.count(), 4);
        assert_eq!(a.intersection_count(&b), 2);
        let mut c = a.clone();
        c.intersect_with(&b);
        assert_eq!(c.iter().collect::<Vec<_>>(), vec![3, 64]);
        assert!(c.is_subset_of(&a) && c.is_subset_of(&b));
        let mut d = a.clone();
        d.union_with(&b);
        assert_eq!(d.iter().collect::<Vec<_>>(), vec![0, 3, 64, 65, 69]);
        assert!(!a.contains(70));
    }

    #[test]
    fn full_is_trimmed() {
        let f = TidSet::full(70);
        assert_eq!(f.count(), 70);
        assert!(TidSet::from_indices(70, [69]).is_subset_of(&f));
        assert_eq!(TidSet::full(0).count(), 0);
        assert!(TidSet::empty(5).is_empty());
    }
}
