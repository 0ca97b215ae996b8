use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::error::{Error, Result};

/// Item identifier as it appears in the input (FIMI: non-negative decimal).
pub type Item = u32;

/// A non-empty itemset kept in strictly ascending order.
///
/// Patterns order by size first, then lexicographically by item id. Every
/// mined collection is emitted in this order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Pattern(Vec<Item>);

impl Pattern {
    /// Sorts and deduplicates `items`.
    pub fn new(items: impl IntoIterator<Item = Item>) -> Result<Self> {
        let mut v: Vec<Item> = items.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptyPattern);
        }
        Ok(Pattern(v))
    }

    pub fn singleton(item: Item) -> Self {
        Pattern(alloc::vec![item])
    }

    /// `items` must be strictly ascending and non-empty.
    pub(crate) fn from_sorted(items: Vec<Item>) -> Self {
        debug_assert!(!items.is_empty());
        debug_assert!(items.windows(2).all(|w| w[0] < w[1]));
        Pattern(items)
    }

    pub fn items(&self) -> &[Item] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, item: Item) -> bool {
        self.0.binary_search(&item).is_ok()
    }

    pub fn is_subset_of(&self, other: &Pattern) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut it = other.0.iter();
        'outer: for a in &self.0 {
            for b in it.by_ref() {
                match b.cmp(a) {
                    Ordering::Less => continue,
                    Ordering::Equal => continue 'outer,
                    Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn is_strict_subset_of(&self, other: &Pattern) -> bool {
        self.len() < other.len() && self.is_subset_of(other)
    }

    /// `self ∪ {item}`.
    pub fn with(&self, item: Item) -> Pattern {
        let mut v = self.0.clone();
        if let Err(pos) = v.binary_search(&item) {
            v.insert(pos, item);
        }
        Pattern(v)
    }

    /// `self ∖ {item}`, or `None` when that would be empty.
    pub fn without(&self, item: Item) -> Option<Pattern> {
        let v: Vec<Item> = self.0.iter().copied().filter(|&i| i != item).collect();
        (!v.is_empty()).then_some(Pattern(v))
    }

    /// The subsets of size `len - 1`, in lexicographic order. Empty for
    /// singletons.
    pub fn direct_subsets(&self) -> impl Iterator<Item = Pattern> + '_ {
        let n = self.0.len();
        let count = if n > 1 { n } else { 0 };
        // Dropping from the back first yields lexicographic order.
        (0..count).rev().map(move |skip| {
            let v = self
                .0
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &x)| x)
                .collect();
            Pattern(v)
        })
    }

    pub fn union(&self, other: &Pattern) -> Pattern {
        let mut v = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                Ordering::Less => {
                    v.push(self.0[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    v.push(other.0[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    v.push(self.0[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        v.extend_from_slice(&self.0[i..]);
        v.extend_from_slice(&other.0[j..]);
        Pattern(v)
    }

    /// Items of `self` not in `other`.
    pub fn difference(&self, other: &Pattern) -> Vec<Item> {
        self.0
            .iter()
            .copied()
            .filter(|&i| !other.contains(i))
            .collect()
    }
}

impl Ord for Pattern {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Pattern {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        Ok(())
    }
}
