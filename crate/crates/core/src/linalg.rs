//! Exact sparse Gaussian elimination over the rationals.

use std::collections::BTreeMap;

use crate::grassmann::add_term;
use crate::scalar::Scalar;

pub type SparseVec<K> = BTreeMap<K, Scalar>;

/// A reduced row-echelon basis of a subspace of `Scalar^K`.
///
/// Rows are keyed by their pivot, the smallest key in the row; each pivot
/// coefficient is 1 and no row has a nonzero entry at another row's pivot.
/// For a given subspace this form is unique.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon<K: Ord + Clone> {
    rows: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Echelon {
            rows: BTreeMap::new(),
        }
    }
}

fn axpy<K: Ord + Clone>(target: &mut SparseVec<K>, factor: &Scalar, row: &SparseVec<K>) {
    for (k, v) in row {
        add_term(target, k.clone(), factor * v);
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.rows.values()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// Residue of `v` modulo the span; zero iff `v` lies in the span.
    pub fn reduce(&self, mut v: SparseVec<K>) -> SparseVec<K> {
        let hits: Vec<K> = v
            .keys()
            .filter(|k| self.rows.contains_key(*k))
            .cloned()
            .collect();
        for p in hits {
            if let Some(c) = v.get(&p).cloned() {
                axpy(&mut v, &-c, &self.rows[&p]);
            }
        }
        v
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v.clone()).is_empty()
    }

    /// Adds `v` to the span. Returns `false` if it was already there.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.iter().next().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        let inv = lead.recip().expect("nonzero lead");
        for c in r.values_mut() {
            *c *= &inv;
        }
        for row in self.rows.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                axpy(row, &-c, &r);
            }
        }
        r.retain(|_, c| !c.is_zero());
        self.rows.insert(pivot, r);
        true
    }
}

/// Rank of the span of `vectors`.
pub fn rank_of<K, I>(vectors: I) -> usize
where
    K: Ord + Clone,
    I: IntoIterator<Item = SparseVec<K>>,
{
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(entries: &[(u32, i64)]) -> SparseVec<u32> {
        let mut out = BTreeMap::new();
        for (k, c) in entries {
            add_term(&mut out, *k, Scalar::from_int(*c));
        }
        out
    }

    #[test]
    fn rank_and_membership() {
        let mut e = Echelon::new();
        assert!(e.insert(v(&[(0, 1), (1, 2)])));
        assert!(e.insert(v(&[(1, 1), (2, 1)])));
        assert!(!e.insert(v(&[(0, 1), (1, 3), (2, 1)])));
        assert_eq!(e.rank(), 2);
        assert!(e.contains(&v(&[(0, 2), (1, 4)])));
        assert!(!e.contains(&v(&[(2, 1)])));
    }

    #[test]
    fn reduced_form_is_unique() {
        let a = [v(&[(0, 1), (1, 2)]), v(&[(1, 1), (2, 1)])];
        let b = [v(&[(0, 1), (1, 3), (2, 1)]), v(&[(0, 2), (1, 5), (2, 1)])];
        let mut ea = Echelon::new();
        a.into_iter().for_each(|x| {
            ea.insert(x);
        });
        let mut eb = Echelon::new();
        b.into_iter().for_each(|x| {
            eb.insert(x);
        });
        assert_eq!(ea, eb);
        let first = ea.rows().next().unwrap();
        assert_eq!(first, &v(&[(0, 1), (2, -2)]));
    }

    #[test]
    fn rank_of_dependent_family() {
        let vs = vec![v(&[(0, 1)]), v(&[(1, 1)]), v(&[(0, 1), (1, 1)]), v(&[])];
        assert_eq!(rank_of(vs), 2);
    }
}
