//! Bit-packed element sets over a group's index space.

use std::cmp::Ordering;
use std::fmt;

/// A subset of the elements of a group of known order, packed 64 elements
/// per word. Used for subgroups, cosets, vertex sets and membership rows.
///
/// Equality and hashing look only at the membership bits; the universe size
/// is carried along so iteration and complement are well-defined.
#[derive(Clone)]
pub struct SubgroupSet {
    universe: usize,
    bits: Vec<u64>,
    order: usize,
    /// Set by lattice analysis once computed; `None` until then.
    pub is_normal: Option<bool>,
    pub is_abelian: Option<bool>,
}

impl PartialEq for SubgroupSet {
    fn eq(&self, other: &Self) -> bool {
        self.universe == other.universe && self.bits == other.bits
    }
}
impl Eq for SubgroupSet {}

impl std::hash::Hash for SubgroupSet {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.bits.hash(state);
    }
}

impl fmt::Debug for SubgroupSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SubgroupSet(order {}, {{", self.order)?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}})")
    }
}

impl SubgroupSet {
    pub fn empty(universe: usize) -> Self {
        let words = universe.div_ceil(64);
        SubgroupSet {
            universe,
            bits: vec![0; words],
            order: 0,
            is_normal: None,
            is_abelian: None,
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        for e in 0..universe {
            s.insert(e);
        }
        s
    }

    pub fn from_elements(universe: usize, elems: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Self::empty(universe);
        for e in elems {
            s.insert(e);
        }
        s
    }

    #[inline]
    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.order == 0
    }

    #[inline]
    pub fn contains(&self, e: usize) -> bool {
        debug_assert!(e < self.universe);
        self.bits[e >> 6] & (1u64 << (e & 63)) != 0
    }

    /// Returns true if the element was newly inserted.
    #[inline]
    pub fn insert(&mut self, e: usize) -> bool {
        debug_assert!(e < self.universe);
        let w = &mut self.bits[e >> 6];
        let mask = 1u64 << (e & 63);
        if *w & mask == 0 {
            *w |= mask;
            self.order += 1;
            true
        } else {
            false
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().flat_map(|(w, &word)| {
            let base = w << 6;
            BitIter { word }.map(move |b| base + b)
        })
    }

    pub fn elements(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn is_subset(&self, other: &SubgroupSet) -> bool {
        self.bits
            .iter()
            .zip(&other.bits)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn intersection(&self, other: &SubgroupSet) -> SubgroupSet {
        debug_assert_eq!(self.universe, other.universe);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & b)
            .collect();
        let order = bits.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            universe: self.universe,
            bits,
            order,
            is_normal: None,
            is_abelian: None,
        }
    }

    pub fn union(&self, other: &SubgroupSet) -> SubgroupSet {
        debug_assert_eq!(self.universe, other.universe);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a | b)
            .collect();
        let order = bits.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            universe: self.universe,
            bits,
            order,
            is_normal: None,
            is_abelian: None,
        }
    }

    pub fn difference(&self, other: &SubgroupSet) -> SubgroupSet {
        debug_assert_eq!(self.universe, other.universe);
        let bits: Vec<u64> = self
            .bits
            .iter()
            .zip(&other.bits)
            .map(|(a, b)| a & !b)
            .collect();
        let order = bits.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            universe: self.universe,
            bits,
            order,
            is_normal: None,
            is_abelian: None,
        }
    }

    pub fn intersects(&self, other: &SubgroupSet) -> bool {
        self.bits.iter().zip(&other.bits).any(|(a, b)| a & b != 0)
    }

    /// Smallest member, if any.
    pub fn min_element(&self) -> Option<usize> {
        for (w, &word) in self.bits.iter().enumerate() {
            if word != 0 {
                return Some((w << 6) + word.trailing_zeros() as usize);
            }
        }
        None
    }

    /// Total order used everywhere lists of subgroups are sorted:
    /// ascending order first, then the membership bit string read from
    /// element 0 upward.
    pub fn canonical_cmp(&self, other: &SubgroupSet) -> Ordering {
        self.order.cmp(&other.order).then_with(|| {
            for (a, b) in self.bits.iter().zip(&other.bits) {
                let ord = a.reverse_bits().cmp(&b.reverse_bits());
                if ord != Ordering::Equal {
                    return ord;
                }
            }
            Ordering::Equal
        })
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.bits
    }

    pub(crate) fn from_words(universe: usize, bits: Vec<u64>) -> Self {
        let order = bits.iter().map(|w| w.count_ones() as usize).sum();
        SubgroupSet {
            universe,
            bits,
            order,
            is_normal: None,
            is_abelian: None,
        }
    }
}

struct BitIter {
    word: u64,
}

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.word == 0 {
            return None;
        }
        let b = self.word.trailing_zeros() as usize;
        self.word &= self.word - 1;
        Some(b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_iter_roundtrip() {
        let mut s = SubgroupSet::empty(130);
        for e in [0, 1, 63, 64, 65, 129] {
            assert!(s.insert(e));
            assert!(!s.insert(e));
        }
        assert_eq!(s.order(), 6);
        assert_eq!(s.elements(), vec![0, 1, 63, 64, 65, 129]);
    }

    #[test]
    fn canonical_order_prefers_small_first_difference() {
        // {0,1} vs {0,2}: bit strings 1100... and 1010...; the latter is
        // lexicographically smaller.
        let a = SubgroupSet::from_elements(8, [0, 1]);
        let b = SubgroupSet::from_elements(8, [0, 2]);
        assert_eq!(b.canonical_cmp(&a), Ordering::Less);
        let small = SubgroupSet::from_elements(8, [5]);
        assert_eq!(small.canonical_cmp(&a), Ordering::Less);
    }

    #[test]
    fn subset_and_intersection() {
        let a = SubgroupSet::from_elements(100, [0, 10, 70]);
        let b = SubgroupSet::from_elements(100, [0, 10, 70, 99]);
        assert!(a.is_subset(&b));
        assert!(!b.is_subset(&a));
        assert_eq!(a.intersection(&b).elements(), vec![0, 10, 70]);
        assert_eq!(b.difference(&a).elements(), vec![99]);
    }
}
