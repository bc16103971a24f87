//! Dense subsets of a finite carrier.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::Element;

/// A subset of the carrier `{0, .., universe-1}` of some algebra.
///
/// Sets remember the size of the carrier they were built for; mixing sets
/// from carriers of different sizes is a logic error and panics in the
/// binary operations.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    /// The one-element set `{0}`.
    pub fn zero(universe: usize) -> Self {
        let mut s = Self::empty(universe);
        s.insert(0);
        s
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(universe: usize, elements: I) -> Self {
        let mut s = Self::empty(universe);
        for e in elements {
            s.insert(e);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn contains(&self, e: Element) -> bool {
        self.bits.contains(e)
    }

    /// Inserts `e`, returning `true` if it was not already present.
    pub fn insert(&mut self, e: Element) -> bool {
        assert!(e < self.universe(), "element {e} outside carrier");
        !self.bits.put(e)
    }

    pub fn remove(&mut self, e: Element) {
        self.bits.set(e, false);
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// True if the set is exactly `{0}`.
    pub fn is_zero(&self) -> bool {
        self.len() == 1 && self.contains(0)
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.universe()
    }

    pub fn iter(&self) -> impl Iterator<Item = Element> + '_ {
        self.bits.ones()
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.check_universe(other);
        self.bits.is_subset(&other.bits)
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn intersection(&self, other: &ElementSet) -> ElementSet {
        self.check_universe(other);
        let mut bits = self.bits.clone();
        bits.intersect_with(&other.bits);
        ElementSet { bits }
    }

    pub fn complement(&self) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    pub fn to_vec(&self) -> Vec<Element> {
        self.iter().collect()
    }

    fn check_universe(&self, other: &ElementSet) {
        assert_eq!(
            self.universe(),
            other.universe(),
            "sets over different carriers"
        );
    }
}

impl fmt::Display for ElementSet {
    /// Ascending members in braces, e.g. `{0,1,2,4}`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, e) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}/{}", self.universe())
    }
}
