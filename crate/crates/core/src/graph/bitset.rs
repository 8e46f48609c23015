use std::fmt;
use std::ops::{BitAnd, BitAndAssign, BitOr, BitOrAssign, Sub, SubAssign};

use serde::{Deserialize, Serialize};

/// Maximum number of vertices a [`Graph`](super::Graph) may have.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices, one bit per vertex.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub const fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Complement relative to `{0, ..., n-1}`.
    #[inline]
    pub const fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & VertexSet::full(n).0)
    }

    /// Smallest element, if any.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Largest element, if any.
    #[inline]
    pub const fn last(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    #[inline]
    pub fn iter(self) -> Iter {
        Iter(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} out of range");
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Iter;

    fn into_iter(self) -> Iter {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct Iter(u64);

impl Iterator for Iter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Iter {}

macro_rules! binop {
    ($tr:ident, $f:ident, $atr:ident, $af:ident, |$a:ident, $b:ident| $e:expr) => {
        impl $tr for VertexSet {
            type Output = VertexSet;
            #[inline]
            fn $f(self, rhs: VertexSet) -> VertexSet {
                let ($a, $b) = (self.0, rhs.0);
                VertexSet($e)
            }
        }
        impl $atr for VertexSet {
            #[inline]
            fn $af(&mut self, rhs: VertexSet) {
                *self = $tr::$f(*self, rhs);
            }
        }
    };
}

binop!(BitOr, bitor, BitOrAssign, bitor_assign, |a, b| a | b);
binop!(BitAnd, bitand, BitAndAssign, bitand_assign, |a, b| a & b);
binop!(Sub, sub, SubAssign, sub_assign, |a, b| a & !b);

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_algebra() {
        let a: VertexSet = [0, 2, 5].into_iter().collect();
        let b: VertexSet = [2, 3].into_iter().collect();
        assert_eq!((a | b).iter().collect::<Vec<_>>(), vec![0, 2, 3, 5]);
        assert_eq!((a & b).iter().collect::<Vec<_>>(), vec![2]);
        assert_eq!((a - b).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert_eq!(a.complement(6).iter().collect::<Vec<_>>(), vec![1, 3, 4]);
        assert_eq!(a.first(), Some(0));
        assert_eq!(a.last(), Some(5));
        assert!(VertexSet::singleton(2).is_subset(a));
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
    }

    #[test]
    fn display() {
        let a: VertexSet = [1, 4].into_iter().collect();
        assert_eq!(a.to_string(), "{1,4}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
