use std::fmt;

use fixedbitset::FixedBitSet;

/// A set of vertex ids drawn from a fixed universe `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet { bits: FixedBitSet::with_capacity(universe) }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Builds a set from ids. Panics if an id is outside the universe.
    pub fn from_ids<I: IntoIterator<Item = usize>>(universe: usize, ids: I) -> Self {
        let mut s = Self::new(universe);
        for v in ids {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) -> bool {
        assert!(v < self.universe(), "vertex {v} outside universe {}", self.universe());
        !self.bits.put(v)
    }

    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe() {
            return false;
        }
        let was = self.bits.contains(v);
        self.bits.set(v, false);
        was
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet { bits }
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    /// Comma separated ascending ids, `-` for the empty set.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        let mut first = true;
        for v in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn insert_remove_and_display() {
        let mut s = VertexSet::new(6);
        assert!(s.insert(4));
        assert!(!s.insert(4));
        s.insert(1);
        assert_eq!(s.to_vec(), vec![1, 4]);
        assert_eq!(s.to_string(), "1,4");
        assert!(s.remove(4));
        assert!(!s.remove(5));
        assert_eq!(s.len(), 1);
        assert_eq!(VertexSet::new(3).to_string(), "-");
    }

    #[test]
    fn complement_stays_in_universe() {
        let s = VertexSet::from_ids(5, [0, 2]);
        assert_eq!(s.complement().to_vec(), vec![1, 3, 4]);
        assert_eq!(VertexSet::full(3).len(), 3);
    }

    #[test]
    #[should_panic]
    fn out_of_universe_insert_panics() {
        VertexSet::new(2).insert(2);
    }
}
