use std::cmp::Ordering;
use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

/// Largest vertex count a [`VertexSet`] can address.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices stored as a 64-bit mask.
///
/// The same value stands for a squarefree monomial: vertex `i` in the set
/// means the variable `x_i` divides the monomial. Set difference is then
/// the squarefree colon `m / gcd(m, m')`, and subset is divisibility.
///
/// The derived `Ord` compares raw bit patterns.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < MAX_VERTICES);
        VertexSet(1u64 << v)
    }

    /// `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n >= MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[must_use]
    pub fn with(self, v: usize) -> Self {
        self | Self::singleton(v)
    }

    #[must_use]
    pub fn without(self, v: usize) -> Self {
        self - Self::singleton(v)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Complement inside `{0, ..., n-1}`.
    #[must_use]
    pub fn complement(self, n: usize) -> Self {
        Self::full(n) - self
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }

    /// Lexicographic comparison of the ascending index sequences, so
    /// `{0,1} < {0,2} < {1,2}` and a proper prefix sorts first.
    pub fn lex_cmp(self, other: VertexSet) -> Ordering {
        let mut a = self.iter();
        let mut b = other.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some(x), Some(y)) if x != y => return x.cmp(&y),
                _ => {}
            }
        }
    }

    /// Canonical order used for cover families: cardinality, then bit pattern.
    pub fn canonical_cmp(self, other: VertexSet) -> Ordering {
        self.len().cmp(&other.len()).then(self.0.cmp(&other.0))
    }

    /// Iterates over every subset of `self`, including the empty set and `self`.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(0),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl DoubleEndedIterator for Iter {
    fn next_back(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = 63 - self.0.leading_zeros() as usize;
        self.0 &= !(1u64 << v);
        Some(v)
    }
}

/// Subsets of a mask in increasing numeric order.
#[derive(Clone, Debug)]
pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == self.mask {
            None
        } else {
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(VertexSet(cur))
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl BitOrAssign for VertexSet {
    fn bitor_assign(&mut self, rhs: VertexSet) {
        self.0 |= rhs.0;
    }
}

impl BitAndAssign for VertexSet {
    fn bitand_assign(&mut self, rhs: VertexSet) {
        self.0 &= rhs.0;
    }
}

impl SubAssign for VertexSet {
    fn sub_assign(&mut self, rhs: VertexSet) {
        self.0 &= !rhs.0;
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    #[test]
    fn basic_ops() {
        let a = set(&[0, 2, 5]);
        let b = set(&[2, 3]);
        assert_eq!(a | b, set(&[0, 2, 3, 5]));
        assert_eq!(a & b, set(&[2]));
        assert_eq!(a - b, set(&[0, 5]));
        assert_eq!(a.complement(6), set(&[1, 3, 4]));
        assert_eq!(a.len(), 3);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert!(set(&[0, 5]).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(a.iter().rev().collect::<Vec<_>>(), vec![5, 2, 0]);
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::EMPTY.first(), None);
    }

    #[test]
    fn lex_order() {
        let mut v = vec![set(&[1, 2]), set(&[0, 2]), set(&[0, 1]), set(&[0])];
        v.sort_by(|a, b| a.lex_cmp(*b));
        assert_eq!(v, vec![set(&[0]), set(&[0, 1]), set(&[0, 2]), set(&[1, 2])]);
    }

    #[test]
    fn subsets_enumerates_all() {
        let s = set(&[1, 4, 6]);
        let all: Vec<_> = s.subsets().collect();
        assert_eq!(all.len(), 8);
        assert!(all.iter().all(|t| t.is_subset(s)));
        assert_eq!(VertexSet::EMPTY.subsets().count(), 1);
    }

    proptest! {
        #[test]
        fn closed_under_ambient_ops(a in 0u64..(1 << 10), b in 0u64..(1 << 10)) {
            let (a, b) = (VertexSet::from_bits(a), VertexSet::from_bits(b));
            let full = VertexSet::full(10);
            for s in [a | b, a & b, a - b, a.complement(10)] {
                prop_assert!(s.is_subset(full));
            }
            prop_assert_eq!((a | b).len() + (a & b).len(), a.len() + b.len());
            prop_assert_eq!(a.complement(10).complement(10), a);
        }
    }
}
