//! Dense index sets over edges and vertices.
//!
//! Both set types are fixed-universe bitmaps: the universe size is set at
//! construction and every member is strictly below it.

use std::fmt;

macro_rules! index_set {
    ($(#[$meta:meta])* $name:ident, $what:literal) => {
        $(#[$meta])*
        #[derive(Clone, PartialEq, Eq, Hash)]
        pub struct $name {
            bits: Vec<bool>,
            len: usize,
        }

        impl $name {
            /// Empty set over a universe of `universe` indices.
            pub fn new(universe: usize) -> Self {
                Self { bits: vec![false; universe], len: 0 }
            }

            /// Set containing every index of the universe.
            pub fn full(universe: usize) -> Self {
                Self { bits: vec![true; universe], len: universe }
            }

            /// Builds a set from indices, panicking on an out-of-range index.
            pub fn from_indices<I: IntoIterator<Item = usize>>(universe: usize, indices: I) -> Self {
                let mut set = Self::new(universe);
                for i in indices {
                    assert!(i < universe, concat!($what, " index {} out of range {}"), i, universe);
                    set.insert(i);
                }
                set
            }

            /// Like [`Self::from_indices`] but reports the first out-of-range index.
            pub fn try_from_indices<I: IntoIterator<Item = usize>>(
                universe: usize,
                indices: I,
            ) -> Result<Self, usize> {
                let mut set = Self::new(universe);
                for i in indices {
                    if i >= universe {
                        return Err(i);
                    }
                    set.insert(i);
                }
                Ok(set)
            }

            #[inline]
            pub fn universe(&self) -> usize {
                self.bits.len()
            }

            #[inline]
            pub fn len(&self) -> usize {
                self.len
            }

            #[inline]
            pub fn is_empty(&self) -> bool {
                self.len == 0
            }

            #[inline]
            pub fn contains(&self, i: usize) -> bool {
                self.bits.get(i).copied().unwrap_or(false)
            }

            /// Returns true if `i` was not already present.
            #[inline]
            pub fn insert(&mut self, i: usize) -> bool {
                let was = std::mem::replace(&mut self.bits[i], true);
                if !was {
                    self.len += 1;
                }
                !was
            }

            /// Returns true if `i` was present.
            #[inline]
            pub fn remove(&mut self, i: usize) -> bool {
                let was = std::mem::replace(&mut self.bits[i], false);
                if was {
                    self.len -= 1;
                }
                was
            }

            /// Members in increasing index order.
            pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
                self.bits.iter().enumerate().filter_map(|(i, &b)| b.then_some(i))
            }

            pub fn to_vec(&self) -> Vec<usize> {
                self.iter().collect()
            }

            pub fn complement(&self) -> Self {
                let bits: Vec<bool> = self.bits.iter().map(|b| !b).collect();
                let len = bits.len() - self.len;
                Self { bits, len }
            }

            pub fn union(&self, other: &Self) -> Self {
                self.zip_with(other, |a, b| a || b)
            }

            pub fn intersection(&self, other: &Self) -> Self {
                self.zip_with(other, |a, b| a && b)
            }

            pub fn difference(&self, other: &Self) -> Self {
                self.zip_with(other, |a, b| a && !b)
            }

            pub fn is_subset(&self, other: &Self) -> bool {
                self.iter().all(|i| other.contains(i))
            }

            fn zip_with(&self, other: &Self, f: impl Fn(bool, bool) -> bool) -> Self {
                assert_eq!(self.universe(), other.universe(), "universe mismatch");
                let bits: Vec<bool> = self
                    .bits
                    .iter()
                    .zip(&other.bits)
                    .map(|(&a, &b)| f(a, b))
                    .collect();
                let len = bits.iter().filter(|&&b| b).count();
                Self { bits, len }
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.debug_set().entries(self.iter()).finish()
            }
        }
    };
}

index_set!(
    /// A subset of edge indices `0..m`; the ground-set element type of both matroids.
    EdgeSet,
    "edge"
);

index_set!(
    /// A subset of vertex indices `0..n`.
    VertexSet,
    "vertex"
);
