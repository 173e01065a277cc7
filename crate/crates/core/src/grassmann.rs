//! Finite-rank Grassmann algebras `∧(q)` over the rationals.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::Add;

use serde::{Deserialize, Serialize};

use crate::error::{expect_rank, Error, Result};
use crate::monomial::{sort_with_sign, Monomial, MAX_RANK};
use crate::scalar::Scalar;

/// Homogeneity class of an element. Zero reports `Even`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
    Mixed,
}

impl Parity {
    pub fn of_degree(degree: usize) -> Self {
        if degree.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_homogeneous(self) -> bool {
        self != Parity::Mixed
    }

    /// 0 or 1; `None` for `Mixed`.
    pub fn bit(self) -> Option<u8> {
        match self {
            Parity::Even => Some(0),
            Parity::Odd => Some(1),
            Parity::Mixed => None,
        }
    }

    /// Sum in ℤ/2; `Mixed` is absorbing.
    pub fn combine(self, other: Parity) -> Parity {
        match (self.bit(), other.bit()) {
            (Some(a), Some(b)) => Parity::of_degree(usize::from(a ^ b)),
            _ => Parity::Mixed,
        }
    }
}

/// Position in the filtration `∧(q) = I₀ ⊇ I₁ ⊇ …`; zero lies in every ideal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Finite(usize),
    Infinite,
}

impl Add for Level {
    type Output = Level;

    fn add(self, rhs: Level) -> Level {
        match (self, rhs) {
            (Level::Finite(a), Level::Finite(b)) => Level::Finite(a + b),
            _ => Level::Infinite,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(k) => write!(f, "{k}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

/// Direction of a rank change between `∧(q)` and `∧(target)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RankChange {
    /// The standard embedding `∧(q) ↪ ∧(target)`, `target ≥ q`.
    Include,
    /// The retraction sending `ξ_i ↦ 0` for `i > target`.
    Project,
}

/// An element `Σ a_α ξ^α` of `∧(rank)` with only nonzero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GrassmannElement {
    rank: usize,
    terms: BTreeMap<Monomial, Scalar>,
}

pub(crate) fn check_rank(rank: usize) -> Result<()> {
    if rank > MAX_RANK {
        Err(Error::RankTooLarge(rank))
    } else {
        Ok(())
    }
}

pub(crate) fn add_term<K: Ord>(terms: &mut BTreeMap<K, Scalar>, key: K, coeff: Scalar) {
    if coeff.is_zero() {
        return;
    }
    match terms.entry(key) {
        Entry::Vacant(e) => {
            e.insert(coeff);
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += &coeff;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl GrassmannElement {
    pub fn zero(rank: usize) -> Self {
        GrassmannElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(rank: usize, value: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        if !value.is_zero() {
            terms.insert(Monomial::EMPTY, value);
        }
        GrassmannElement { rank, terms }
    }

    pub fn one(rank: usize) -> Self {
        Self::scalar(rank, Scalar::one())
    }

    /// The generator `ξ_index` of `∧(rank)`.
    pub fn generator(rank: usize, index: usize) -> Result<Self> {
        check_rank(rank)?;
        if index == 0 || index > rank {
            return Err(Error::IndexOutOfRange {
                index: index as i64,
                rank,
            });
        }
        Ok(Self::monomial(rank, Monomial::generator(index), Scalar::one()))
    }

    pub(crate) fn monomial(rank: usize, m: Monomial, coeff: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, m, coeff);
        GrassmannElement { rank, terms }
    }

    /// Builds from already-canonical monomials, merging duplicates.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, Scalar)>,
    {
        check_rank(rank)?;
        let mut map = BTreeMap::new();
        for (m, c) in terms {
            if m.max_index() > rank {
                return Err(Error::IndexOutOfRange {
                    index: m.max_index() as i64,
                    rank,
                });
            }
            add_term(&mut map, m, c);
        }
        Ok(GrassmannElement { rank, terms: map })
    }

    pub(crate) fn from_map_unchecked(rank: usize, terms: BTreeMap<Monomial, Scalar>) -> Self {
        debug_assert!(terms.iter().all(|(m, c)| m.max_index() <= rank && !c.is_zero()));
        GrassmannElement { rank, terms }
    }

    /// Canonicalizes raw `(index list, coefficient)` data: each list is sorted
    /// with the sign of its permutation, lists with a repeated index vanish,
    /// like monomials are merged and zeros dropped.
    pub fn normalize(rank: i64, raw_terms: &[(Vec<i64>, Scalar)]) -> Result<Self> {
        if rank < 0 {
            return Err(Error::NonCanonicalRank(rank));
        }
        let rank = rank as usize;
        check_rank(rank)?;
        let mut terms = BTreeMap::new();
        for (indices, coeff) in raw_terms {
            let mut ix = Vec::with_capacity(indices.len());
            for &i in indices {
                if i < 1 || i as usize > rank {
                    return Err(Error::IndexOutOfRange { index: i, rank });
                }
                ix.push(i as usize);
            }
            if let Some((negative, m)) = sort_with_sign(&ix) {
                let c = if negative { -coeff } else { coeff.clone() };
                add_term(&mut terms, m, c);
            }
        }
        Ok(GrassmannElement { rank, terms })
    }

    /// `Σ cᵢ·aᵢ`. An empty list yields zero in `∧(0)`.
    pub fn lin_comb(pairs: &[(Scalar, &GrassmannElement)]) -> Result<Self> {
        let rank = pairs.first().map_or(0, |(_, a)| a.rank);
        let mut terms = BTreeMap::new();
        for (c, a) in pairs {
            expect_rank(rank, a.rank)?;
            for (m, v) in &a.terms {
                add_term(&mut terms, *m, c * v);
            }
        }
        Ok(GrassmannElement { rank, terms })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored (nonzero) terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in monomial order.
    pub fn terms(&self) -> btree_map::Iter<'_, Monomial, Scalar> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: Monomial) -> Scalar {
        self.terms.get(&m).cloned().unwrap_or_default()
    }

    /// Largest generator index that occurs, 0 if none.
    pub fn max_index(&self) -> usize {
        self.terms.keys().map(|m| m.max_index()).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        expect_rank(self.rank, other.rank)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            add_term(&mut terms, *m, c.clone());
        }
        Ok(GrassmannElement {
            rank: self.rank,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        GrassmannElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// The Grassmann product: `ξ^α·ξ^β = ±ξ^{α∪β}` with the sign of the
    /// inversions between `α` and `β`, zero when they meet.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        expect_rank(self.rank, other.rank)?;
        let mut terms = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if let Some((negative, m)) = ma.product(*mb) {
                    let c = ca * cb;
                    add_term(&mut terms, m, if negative { -c } else { c });
                }
            }
        }
        Ok(GrassmannElement {
            rank: self.rank,
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.rank);
        for _ in 0..exp {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(self).expect("same rank");
        }
        acc
    }

    /// The constant term `a_∅`.
    pub fn body(&self) -> Scalar {
        self.coefficient(Monomial::EMPTY)
    }

    /// The nilpotent part `a − a_∅`.
    pub fn soul(&self) -> Self {
        let mut terms = self.terms.clone();
        terms.remove(&Monomial::EMPTY);
        GrassmannElement {
            rank: self.rank,
            terms,
        }
    }

    pub fn parity(&self) -> Parity {
        let mut even = false;
        let mut odd = false;
        for m in self.terms.keys() {
            if m.is_odd() {
                odd = true;
            } else {
                even = true;
            }
        }
        match (even, odd) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::Mixed,
        }
    }

    pub fn even_part(&self) -> Self {
        self.filter(|m| !m.is_odd())
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|m| m.is_odd())
    }

    fn filter(&self, keep: impl Fn(Monomial) -> bool) -> Self {
        GrassmannElement {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(**m))
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn parity_decompose(&self) -> (Self, Self, Parity) {
        (self.even_part(), self.odd_part(), self.parity())
    }

    /// Largest `k` with `self ∈ I_k`.
    pub fn filtration_level(&self) -> Level {
        self.terms
            .keys()
            .next()
            .map_or(Level::Infinite, |m| Level::Finite(m.len()))
    }

    /// Two-sided inverse via the terminating geometric series in the soul.
    pub fn invert(&self) -> Result<Self> {
        let body = self.body();
        let inv_body = body.recip().ok_or(Error::NotInvertible)?;
        // a = b(1 + s), s nilpotent of order ≤ rank + 1
        let minus_s = self.soul().scale(&-&inv_body);
        let mut sum = Self::one(self.rank);
        let mut power = Self::one(self.rank);
        loop {
            power = power.mul(&minus_s)?;
            if power.is_zero() {
                break;
            }
            sum = sum.add(&power)?;
        }
        Ok(sum.scale(&inv_body))
    }

    /// Applies the standard embedding or the canonical retraction.
    pub fn change_rank(&self, target: usize, mode: RankChange) -> Result<Self> {
        check_rank(target)?;
        match mode {
            RankChange::Include => {
                if target < self.rank {
                    return Err(Error::RankMismatch {
                        expected: self.rank,
                        found: target,
                    });
                }
                Ok(GrassmannElement {
                    rank: target,
                    terms: self.terms.clone(),
                })
            }
            RankChange::Project => Ok(GrassmannElement {
                rank: target,
                terms: self
                    .terms
                    .iter()
                    .filter(|(m, _)| m.max_index() <= target)
                    .map(|(m, c)| (*m, c.clone()))
                    .collect(),
            }),
        }
    }

    pub fn include(&self, target: usize) -> Result<Self> {
        self.change_rank(target, RankChange::Include)
    }

    pub fn project(&self, target: usize) -> Self {
        self.change_rank(target, RankChange::Project)
            .expect("projection to a supported rank")
    }

    /// Largest absolute coefficient; zero for the zero element.
    pub fn max_abs_coefficient(&self) -> Scalar {
        self.terms
            .values()
            .map(Scalar::abs)
            .max()
            .unwrap_or_default()
    }
}

/// The monomial basis `{ξ^α}` of `∧(rank)` in monomial order.
pub fn monomial_basis(rank: usize) -> Vec<GrassmannElement> {
    assert!(rank < 32, "monomial basis of rank {rank} is too large to enumerate");
    let mut ms: Vec<Monomial> = (0..1u64 << rank).map(Monomial::from_bits).collect();
    ms.sort();
    ms.into_iter()
        .map(|m| GrassmannElement::monomial(rank, m, Scalar::one()))
        .collect()
}

impl fmt::Debug for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ q={}", self, self.rank)
    }
}

impl fmt::Display for GrassmannElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_element(self))
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    indices: Vec<usize>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct ElementRepr {
    rank: usize,
    terms: Vec<TermRepr>,
}

impl Serialize for GrassmannElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ElementRepr {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| TermRepr {
                    indices: m.indices().collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GrassmannElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ElementRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(repr.terms.len());
        for t in repr.terms {
            let m = Monomial::from_sorted(&t.indices).map_err(D::Error::custom)?;
            terms.push((m, t.coeff));
        }
        GrassmannElement::from_terms(repr.rank, terms).map_err(D::Error::custom)
    }
}
