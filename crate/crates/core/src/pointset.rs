use std::cmp::Ordering;
use std::fmt;

/// Largest number of points a [`FiniteSpace`](crate::FiniteSpace) may carry.
pub const MAX_POINTS: usize = 64;

/// A subset of the points of a finite space, stored as a bitmask.
///
/// Sets order lexicographically by their sorted element lists, so
/// `{0} < {0,1} < {0,1,2} < {0,1,3} < {1}`. This is the canonical order used
/// for open families and cover certificates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct PointSet(u64);

impl PointSet {
    pub const EMPTY: PointSet = PointSet(0);

    pub fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_POINTS);
        if n == MAX_POINTS {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        PointSet(1u64 << i)
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_POINTS && self.0 & (1u64 << i) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1u64 << i;
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1u64 << i);
    }

    pub fn with(self, i: usize) -> Self {
        PointSet(self.0 | (1u64 << i))
    }

    pub fn without(self, i: usize) -> Self {
        PointSet(self.0 & !(1u64 << i))
    }

    pub fn union(self, other: Self) -> Self {
        PointSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        PointSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        PointSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = PointSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl IntoIterator for PointSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Iter {}

impl Ord for PointSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for PointSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
