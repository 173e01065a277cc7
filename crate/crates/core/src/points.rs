//! The functor of points of the polynomial superdomains `ℝ^{m,n}`.
//!
//! A `q`-point is a list of `m` even and `n` odd elements of `∧(q)`;
//! superfunctions are polynomials in even coordinates `x₁…x_m` and odd
//! coordinates `θ₁…θ_n` and are evaluated at a point by substitution.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{expect_rank, Error, Result};
use crate::grassmann::{add_term, GrassmannElement, Parity};
use crate::hom::{j_family, lemma1_epi, GradedHom, GradedMap, OddLineHom, SubalgebraBasis};
use crate::monomial::{sort_with_sign, Monomial, MAX_RANK};
use crate::scalar::Scalar;

/// The superdomain `ℝ^{m,n}`; `pt_n` is `ℝ^{0,n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SuperDomainSpec {
    pub even_dim: usize,
    pub odd_dim: usize,
}

impl SuperDomainSpec {
    pub fn new(even_dim: usize, odd_dim: usize) -> Self {
        SuperDomainSpec { even_dim, odd_dim }
    }

    pub(crate) fn expect(&self, other: &SuperDomainSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::DomainMismatch(
                self.even_dim,
                self.odd_dim,
                other.even_dim,
                other.odd_dim,
            ))
        }
    }
}

/// Dimension of `pt_q(ℝ^{m,n}) = [ℝ^m ⊗ ∧(q)₀] ⊕ [ℝ^n ⊗ ∧(q)₁]`, saturating
/// at `u128::MAX`.
pub fn points_dim(domain: SuperDomainSpec, q: usize) -> u128 {
    if q == 0 {
        domain.even_dim as u128
    } else {
        let half = u32::try_from(q - 1)
            .ok()
            .and_then(|s| 1u128.checked_shl(s))
            .unwrap_or(u128::MAX);
        ((domain.even_dim + domain.odd_dim) as u128).saturating_mul(half)
    }
}

/// `x^e θ^α`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FnMonomial {
    pub x: Vec<u32>,
    pub th: Monomial,
}

impl FnMonomial {
    pub fn degree(&self) -> u32 {
        self.x.iter().sum::<u32>() + self.th.len() as u32
    }
}

impl Ord for FnMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.th.cmp(&other.th))
    }
}

impl PartialOrd for FnMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial superfunction on `ℝ^{m,n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperFunction {
    domain: SuperDomainSpec,
    terms: BTreeMap<FnMonomial, Scalar>,
}

impl SuperFunction {
    pub fn zero(domain: SuperDomainSpec) -> Self {
        SuperFunction {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(domain: SuperDomainSpec, c: Scalar) -> Self {
        let mut f = Self::zero(domain);
        add_term(
            &mut f.terms,
            FnMonomial {
                x: vec![0; domain.even_dim],
                th: Monomial::EMPTY,
            },
            c,
        );
        f
    }

    /// Builds from raw `(x exponents, θ index list, coefficient)` triples;
    /// θ lists are sorted with sign and vanish on repeats.
    pub fn from_raw(
        domain: SuperDomainSpec,
        raw: &[(Vec<u32>, Vec<usize>, Scalar)],
    ) -> Result<Self> {
        if domain.odd_dim > MAX_RANK {
            return Err(Error::RankTooLarge(domain.odd_dim));
        }
        let mut terms = BTreeMap::new();
        for (x, th, c) in raw {
            expect_rank(domain.even_dim, x.len())?;
            for &a in th {
                if a == 0 || a > domain.odd_dim {
                    return Err(Error::IndexOutOfRange {
                        index: a as i64,
                        rank: domain.odd_dim,
                    });
                }
            }
            if let Some((negative, th)) = sort_with_sign(th) {
                let c = if negative { -c } else { c.clone() };
                add_term(&mut terms, FnMonomial { x: x.clone(), th }, c);
            }
        }
        Ok(SuperFunction { domain, terms })
    }

    pub fn domain(&self) -> SuperDomainSpec {
        self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FnMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.domain.expect(&other.domain)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut terms, k.clone(), c.clone());
        }
        Ok(SuperFunction {
            domain: self.domain,
            terms,
        })
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            add_term(&mut terms, k.clone(), v * c);
        }
        SuperFunction {
            domain: self.domain,
            terms,
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.domain.expect(&other.domain)?;
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if let Some((negative, th)) = ka.th.product(kb.th) {
                    let x = ka.x.iter().zip(&kb.x).map(|(a, b)| a + b).collect();
                    let c = ca * cb;
                    add_term(
                        &mut terms,
                        FnMonomial { x, th },
                        if negative { -c } else { c },
                    );
                }
            }
        }
        Ok(SuperFunction {
            domain: self.domain,
            terms,
        })
    }
}

impl fmt::Debug for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} on R^({},{})",
            self, self.domain.even_dim, self.domain.odd_dim
        )
    }
}

impl fmt::Display for SuperFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_superfunction(self))
    }
}

/// A `q`-point of `ℝ^{m,n}`: even coordinates in `∧(q)₀`, odd ones in `∧(q)₁`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QPoint {
    q: usize,
    evens: Vec<GrassmannElement>,
    odds: Vec<GrassmannElement>,
}

impl QPoint {
    pub fn new(q: usize, evens: Vec<GrassmannElement>, odds: Vec<GrassmannElement>) -> Result<Self> {
        crate::grassmann::check_rank(q)?;
        for (i, e) in evens.iter().enumerate() {
            expect_rank(q, e.rank())?;
            if e.parity() != Parity::Even {
                return Err(Error::ParityViolation(format!(
                    "even coordinate x{} is not even",
                    i + 1
                )));
            }
        }
        for (a, o) in odds.iter().enumerate() {
            expect_rank(q, o.rank())?;
            if o.terms().any(|(m, _)| !m.is_odd()) {
                return Err(Error::NotOdd(a + 1));
            }
        }
        Ok(QPoint { q, evens, odds })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn evens(&self) -> &[GrassmannElement] {
        &self.evens
    }

    pub fn odds(&self) -> &[GrassmannElement] {
        &self.odds
    }

    pub fn domain(&self) -> SuperDomainSpec {
        SuperDomainSpec::new(self.evens.len(), self.odds.len())
    }

    pub fn coordinates(&self) -> impl Iterator<Item = &GrassmannElement> {
        self.evens.iter().chain(&self.odds)
    }

    /// Largest generator index occurring in any coordinate.
    pub fn max_index(&self) -> usize {
        self.coordinates().map(|c| c.max_index()).max().unwrap_or(0)
    }

    pub(crate) fn map_coordinates(
        &self,
        q: usize,
        mut f: impl FnMut(&GrassmannElement) -> Result<GrassmannElement>,
    ) -> Result<QPoint> {
        Ok(QPoint {
            q,
            evens: self.evens.iter().map(&mut f).collect::<Result<_>>()?,
            odds: self.odds.iter().map(&mut f).collect::<Result<_>>()?,
        })
    }

    pub fn include(&self, target: usize) -> Result<QPoint> {
        self.map_coordinates(target, |c| c.include(target))
    }

    pub fn project(&self, target: usize) -> QPoint {
        self.map_coordinates(target, |c| Ok(c.project(target)))
            .expect("projection is total")
    }
}

impl fmt::Debug for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} @ q={}", self, self.q)
    }
}

impl fmt::Display for QPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_point(self))
    }
}

/// `f_q[κ]`: substitutes the coordinates of `κ` into `f`, odd factors in
/// ascending order.
pub fn eval_superfunction(f: &SuperFunction, kappa: &QPoint) -> Result<GrassmannElement> {
    f.domain.expect(&kappa.domain())?;
    let q = kappa.q;
    let mut out = GrassmannElement::zero(q);
    for (mono, c) in &f.terms {
        let mut acc = GrassmannElement::scalar(q, c.clone());
        for (x, &e) in kappa.evens.iter().zip(&mono.x) {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(&x.pow(e))?;
        }
        for a in mono.th.indices() {
            if acc.is_zero() {
                break;
            }
            acc = acc.mul(&kappa.odds[a - 1])?;
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

/// Pushes `κ` forward along `φ`.
pub fn induced_point_map(phi: &GradedHom, kappa: &QPoint) -> Result<QPoint> {
    expect_rank(phi.source_rank(), kappa.q)?;
    kappa.map_coordinates(phi.target_rank(), |c| phi.apply(c))
}

/// The underlying 0-point.
pub fn body_of_point(kappa: &QPoint) -> QPoint {
    induced_point_map(&GradedHom::augmentation(kappa.q), kappa).expect("augmentation matches rank")
}

/// The 0-point `x₀` seen as a `q`-point via `k ↪ ∧(q)`.
pub fn embed_point(x0: &QPoint, q: usize) -> Result<QPoint> {
    expect_rank(0, x0.q)?;
    x0.include(q)
}

/// The line of 1-points `λ ↦ x_λ = j_λ ∘ κ♯` over the body of `κ`.
#[derive(Debug, Clone)]
pub struct FibreLine {
    kappa: QPoint,
    algebra: SubalgebraBasis,
    h: OddLineHom,
}

impl FibreLine {
    /// Fails with `NoOddSector` when the coordinates of `κ` generate an
    /// algebra without odd elements.
    pub fn new(kappa: &QPoint) -> Result<Self> {
        let gens: Vec<GrassmannElement> = kappa.coordinates().cloned().collect();
        let algebra = SubalgebraBasis::closure(kappa.q, &gens)?;
        let h = lemma1_epi(&algebra)?;
        Ok(FibreLine {
            kappa: kappa.clone(),
            algebra,
            h,
        })
    }

    pub fn algebra(&self) -> &SubalgebraBasis {
        &self.algebra
    }

    pub fn h(&self) -> &OddLineHom {
        &self.h
    }

    pub fn point(&self, lambda: &Scalar) -> Result<QPoint> {
        let j = j_family(&self.h, &self.algebra, lambda.clone())?;
        self.kappa.map_coordinates(1, |c| j.apply(c))
    }
}

#[derive(Serialize, Deserialize)]
struct FnTermRepr {
    x: Vec<u32>,
    th: Vec<usize>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct SuperFunctionRepr {
    dims: [usize; 2],
    terms: Vec<FnTermRepr>,
}

impl Serialize for SuperFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        SuperFunctionRepr {
            dims: [self.domain.even_dim, self.domain.odd_dim],
            terms: self
                .terms
                .iter()
                .map(|(k, c)| FnTermRepr {
                    x: k.x.clone(),
                    th: k.th.indices().collect(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = SuperFunctionRepr::deserialize(deserializer)?;
        let raw: Vec<_> = r.terms.into_iter().map(|t| (t.x, t.th, t.coeff)).collect();
        SuperFunction::from_raw(SuperDomainSpec::new(r.dims[0], r.dims[1]), &raw)
            .map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PointRepr {
    q: usize,
    evens: Vec<GrassmannElement>,
    odds: Vec<GrassmannElement>,
}

impl Serialize for QPoint {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        PointRepr {
            q: self.q,
            evens: self.evens.clone(),
            odds: self.odds.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for QPoint {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = PointRepr::deserialize(deserializer)?;
        QPoint::new(r.q, r.evens, r.odds).map_err(serde::de::Error::custom)
    }
}
