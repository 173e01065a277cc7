//! Canonical index sets `ξ^α` for Grassmann monomials.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Largest supported Grassmann rank; monomials are stored as 64-bit masks.
pub const MAX_RANK: usize = 64;

/// A finite subset of `{1, …, 64}`, stored as a bitmask (index `i` ↦ bit `i-1`).
///
/// Ordered by cardinality first, then lexicographically on the ascending
/// index sequence, so `1 < ξ₁ < ξ₂ < ξ₁ξ₂ < ξ₁ξ₃`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Monomial(u64);

impl Monomial {
    pub const EMPTY: Monomial = Monomial(0);

    pub fn from_bits(bits: u64) -> Self {
        Monomial(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// Single generator `ξ_index`; `index` is 1-based.
    pub fn generator(index: usize) -> Self {
        debug_assert!((1..=MAX_RANK).contains(&index));
        Monomial(1u64 << (index - 1))
    }

    /// Builds from strictly increasing 1-based indices.
    pub fn from_sorted(indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        let mut last = 0usize;
        for &i in indices {
            if i == 0 || i > MAX_RANK {
                return Err(Error::IndexOutOfRange {
                    index: i as i64,
                    rank: MAX_RANK,
                });
            }
            if i <= last {
                return Err(Error::parse(0, "indices must be strictly increasing"));
            }
            last = i;
            bits |= 1u64 << (i - 1);
        }
        Ok(Monomial(bits))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_odd(self) -> bool {
        self.len() % 2 == 1
    }

    pub fn contains(self, index: usize) -> bool {
        (1..=MAX_RANK).contains(&index) && self.0 & (1u64 << (index - 1)) != 0
    }

    /// Largest index present, 0 for the empty set.
    pub fn max_index(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    pub fn indices(self) -> Indices {
        Indices(self.0)
    }

    pub fn is_disjoint(self, other: Monomial) -> bool {
        self.0 & other.0 == 0
    }

    pub fn is_subset(self, other: Monomial) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: Monomial) -> Monomial {
        Monomial(self.0 | other.0)
    }

    pub fn difference(self, other: Monomial) -> Monomial {
        Monomial(self.0 & !other.0)
    }

    /// Keeps only indices `<= rank`.
    pub fn truncate(self, rank: usize) -> Monomial {
        if rank >= 64 {
            self
        } else {
            Monomial(self.0 & ((1u64 << rank) - 1))
        }
    }

    /// Number of pairs `(a, b)` with `a ∈ self`, `b ∈ other`, `a > b`.
    pub fn inversions(self, other: Monomial) -> u32 {
        let mut count = 0;
        for b in other.indices() {
            // bits strictly above position b-1
            let above = if b >= 64 { 0 } else { self.0 >> b };
            count += above.count_ones();
        }
        count
    }

    /// `ξ^self · ξ^other` as `(sign, ξ^{self ∪ other})`, or `None` when the
    /// sets overlap.
    pub fn product(self, other: Monomial) -> Option<(bool, Monomial)> {
        if !self.is_disjoint(other) {
            return None;
        }
        let negative = self.inversions(other) % 2 == 1;
        Some((negative, self.union(other)))
    }

    /// Number of indices of `self` strictly below `index`.
    pub fn count_below(self, index: usize) -> usize {
        let mask = if index == 0 {
            0
        } else if index > 64 {
            u64::MAX
        } else {
            (1u64 << (index - 1)) - 1
        };
        (self.0 & mask).count_ones() as usize
    }
}

/// Ascending iterator over the 1-based indices of a [`Monomial`].
#[derive(Clone)]
pub struct Indices(u64);

impl Iterator for Indices {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let tz = self.0.trailing_zeros();
        self.0 &= self.0 - 1;
        Some(tz as usize + 1)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.indices().cmp(other.indices()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.indices()).finish()
    }
}

/// Sorts a raw index list by adjacent transpositions.
///
/// Returns `None` if an index repeats, else the sign parity of the sort and
/// the resulting set.
pub(crate) fn sort_with_sign(raw: &[usize]) -> Option<(bool, Monomial)> {
    let mut v = raw.to_vec();
    let mut negative = false;
    // insertion sort counts transpositions exactly
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    let mut bits = 0u64;
    for i in v {
        bits |= 1u64 << (i - 1);
    }
    Some((negative, Monomial(bits)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ix: &[usize]) -> Monomial {
        Monomial::from_sorted(ix).unwrap()
    }

    #[test]
    fn order_is_cardinality_then_lex() {
        let mut v = vec![m(&[1, 3]), m(&[2]), m(&[]), m(&[1, 2]), m(&[1]), m(&[2, 3])];
        v.sort();
        assert_eq!(
            v,
            vec![m(&[]), m(&[1]), m(&[2]), m(&[1, 2]), m(&[1, 3]), m(&[2, 3])]
        );
    }

    #[test]
    fn product_signs() {
        assert_eq!(m(&[2]).product(m(&[1])), Some((true, m(&[1, 2]))));
        assert_eq!(m(&[1, 3]).product(m(&[2])), Some((true, m(&[1, 2, 3]))));
        assert_eq!(m(&[1]).product(m(&[2, 3])), Some((false, m(&[1, 2, 3]))));
        assert_eq!(m(&[1]).product(m(&[1])), None);
    }

    #[test]
    fn high_indices() {
        let a = Monomial::generator(64);
        let b = Monomial::generator(1);
        assert_eq!(a.max_index(), 64);
        assert_eq!(a.inversions(b), 1);
        assert_eq!(b.inversions(a), 0);
        assert_eq!(a.truncate(63), Monomial::EMPTY);
    }

    #[test]
    fn sort_counts_transpositions() {
        assert_eq!(sort_with_sign(&[3, 1, 2]), Some((false, m(&[1, 2, 3]))));
        assert_eq!(sort_with_sign(&[2, 1]), Some((true, m(&[1, 2]))));
        assert_eq!(sort_with_sign(&[1, 2, 1]), None);
    }
}
