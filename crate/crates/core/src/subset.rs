//! Index subsets of `{1..M+N}` as bitmasks. The Hasse diagram of the
//! Q-function family is implicit: inclusion, complement and the level
//! (cardinality) are O(1) on the mask.

use std::fmt;

/// Subset of `{1..M+N}` with index `a` stored in bit `a-1`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subset(pub u32);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn full(size: usize) -> Subset {
        Subset((1u32 << size) - 1)
    }

    pub fn from_indices(indices: &[u8]) -> Subset {
        let mut mask = 0u32;
        for &i in indices {
            assert!(i >= 1, "indices are 1-based");
            mask |= 1 << (i - 1);
        }
        Subset(mask)
    }

    pub fn singleton(i: u8) -> Subset {
        Subset::from_indices(&[i])
    }

    pub fn contains(self, i: u8) -> bool {
        self.0 >> (i - 1) & 1 == 1
    }

    pub fn insert(self, i: u8) -> Subset {
        Subset(self.0 | 1 << (i - 1))
    }

    pub fn remove(self, i: u8) -> Subset {
        Subset(self.0 & !(1 << (i - 1)))
    }

    pub fn union(self, other: Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn complement(self, size: usize) -> Subset {
        Subset(!self.0 & (Subset::full(size).0))
    }

    pub fn card(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// Members in ascending order.
    pub fn indices(self) -> Vec<u8> {
        (1..=32).filter(|&i| self.contains(i)).collect()
    }

    /// All `2^size` subsets in mask order (deterministic).
    pub fn all(size: usize) -> impl Iterator<Item = Subset> {
        (0..1u32 << size).map(Subset)
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx = self.indices();
        let inner: Vec<String> = idx.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", inner.join(","))
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_is_involutive() {
        for s in Subset::all(5) {
            assert_eq!(s.complement(5).complement(5), s);
        }
    }

    #[test]
    fn indices_round_trip() {
        let s = Subset::from_indices(&[1, 3, 4]);
        assert_eq!(s.indices(), vec![1, 3, 4]);
        assert_eq!(s.card(), 3);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(format!("{s}"), "{1,3,4}");
    }
}
