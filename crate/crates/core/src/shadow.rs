//! Vertex sets packed into a machine word.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of vertices a lattice may carry.
pub const MAX_VERTICES: usize = 64;

/// The shadow of a face: the set of vertices lying below it.
///
/// Ordering is lexicographic on the ascending list of member indices, so
/// `{0} < {0,1} < {0,2} < {1}`. This is the order used for every report and
/// file the crate emits.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Shadow(pub u64);

impl Shadow {
    pub const EMPTY: Shadow = Shadow(0);

    /// The set `{0, .., n-1}`.
    pub fn full(n: usize) -> Shadow {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            Shadow(u64::MAX)
        } else {
            Shadow((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Shadow {
        debug_assert!(v < MAX_VERTICES);
        Shadow(1u64 << v)
    }

    pub fn from_indices<I: IntoIterator<Item = usize>>(indices: I) -> Shadow {
        indices
            .into_iter()
            .fold(Shadow::EMPTY, |acc, v| acc.with(v))
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Shadow {
        Shadow(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Shadow {
        Shadow(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn is_subset(self, other: Shadow) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_proper_subset(self, other: Shadow) -> bool {
        self != other && self.is_subset(other)
    }

    #[inline]
    pub fn union(self, other: Shadow) -> Shadow {
        Shadow(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Shadow) -> Shadow {
        Shadow(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Shadow) -> Shadow {
        Shadow(self.0 & !other.0)
    }

    #[inline]
    pub fn is_disjoint(self, other: Shadow) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest member, if any.
    pub fn last(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Member indices in ascending order.
    pub fn iter(self) -> ShadowIter {
        ShadowIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }

    /// Iterates over every subset of `self`, including `self` and the empty set.
    pub fn subsets(self) -> Subsets {
        Subsets {
            mask: self.0,
            next: Some(self.0),
        }
    }

    /// Apply a vertex map; `map[v]` is the image of `v`.
    pub fn map(self, map: &[usize]) -> Shadow {
        self.iter().fold(Shadow::EMPTY, |acc, v| acc.with(map[v]))
    }

    /// Render using vertex labels, e.g. `{a,b}`.
    pub fn display<'a>(self, labels: &'a [String]) -> LabelledShadow<'a> {
        LabelledShadow {
            shadow: self,
            labels,
        }
    }
}

impl Ord for Shadow {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.0 == other.0 {
            return Ordering::Equal;
        }
        let low = (self.0 ^ other.0).trailing_zeros();
        // The set holding the first differing element is smaller, unless the
        // other set stops there (it is then a proper prefix).
        let self_holds = self.0 >> low & 1 == 1;
        let rest = if self_holds { other.0 } else { self.0 };
        let rest_continues = low < 63 && rest >> (low + 1) != 0;
        if self_holds == rest_continues {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for Shadow {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Shadow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

pub struct LabelledShadow<'a> {
    shadow: Shadow,
    labels: &'a [String],
}

impl fmt::Display for LabelledShadow<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.shadow.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            match self.labels.get(v) {
                Some(label) => write!(f, "{label}")?,
                None => write!(f, "#{v}")?,
            }
        }
        write!(f, "}}")
    }
}

pub struct ShadowIter(u64);

impl Iterator for ShadowIter {
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
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for ShadowIter {}

pub struct Subsets {
    mask: u64,
    next: Option<u64>,
}

impl Iterator for Subsets {
    type Item = Shadow;

    fn next(&mut self) -> Option<Shadow> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            Some((cur - 1) & self.mask)
        };
        Some(Shadow(cur))
    }
}
