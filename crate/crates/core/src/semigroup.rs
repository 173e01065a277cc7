//! Finite-range endomorphisms of the infinite-rank Grassmann algebra and
//! their action on the direct limit `pt_∞(ℝ^{m,n})`.
//!
//! Nothing of infinite rank is ever built: an endomorphism `g` is kept as the
//! images of `ξ₁…ξ_s` inside some `∧(j)` (generators past `s` go to 0), and a
//! point of the direct limit is kept as its minimal-rank representative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{expect_rank, Error, Result};
use crate::grassmann::{GrassmannElement, RankChange};
use crate::hom::GradedHom;
use crate::points::{induced_point_map, QPoint, SuperDomainSpec};

/// An element of the semigroup `E`: `ξ_i ↦ images[i]` for `i ≤ support`,
/// `ξ_i ↦ 0` beyond, all images lying in `∧(range_rank)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteRangeEndo {
    range_rank: usize,
    images: Vec<GrassmannElement>,
}

impl FiniteRangeEndo {
    pub fn new(range_rank: usize, images: Vec<GrassmannElement>) -> Result<Self> {
        // reuse the odd-image validation of graded homs
        let hom = GradedHom::new(images.len(), range_rank, images)?;
        Ok(FiniteRangeEndo {
            range_rank,
            images: hom.images().to_vec(),
        })
    }

    /// `π_n` seen as an element of `E`.
    pub fn projection(n: usize) -> Self {
        let hom = GradedHom::identity(n);
        FiniteRangeEndo {
            range_rank: n,
            images: hom.images().to_vec(),
        }
    }

    pub fn support(&self) -> usize {
        self.images.len()
    }

    pub fn range_rank(&self) -> usize {
        self.range_rank
    }

    pub fn images(&self) -> &[GrassmannElement] {
        &self.images
    }

    /// `g_{j,n} = π_j ∘ g ∘ i_n : ∧(n) → ∧(j)`.
    pub fn restricted_hom(&self, n: usize, j: usize) -> Result<GradedHom> {
        let mode = if j >= self.range_rank {
            RankChange::Include
        } else {
            RankChange::Project
        };
        let images = (0..n)
            .map(|i| match self.images.get(i) {
                Some(img) => img.change_rank(j, mode),
                None => Ok(GrassmannElement::zero(j)),
            })
            .collect::<Result<Vec<_>>>()?;
        GradedHom::new(n, j, images)
    }

    /// `self ∘ inner`, by substitution.
    pub fn compose(&self, inner: &FiniteRangeEndo) -> FiniteRangeEndo {
        let g = self
            .restricted_hom(inner.range_rank, self.range_rank)
            .expect("ranks are consistent");
        let images = inner
            .images
            .iter()
            .map(|img| g.apply(img).expect("rank matches"))
            .collect();
        FiniteRangeEndo {
            range_rank: self.range_rank,
            images,
        }
    }
}

/// `g ∘ h`.
pub fn endo_compose(g: &FiniteRangeEndo, h: &FiniteRangeEndo) -> FiniteRangeEndo {
    g.compose(h)
}

impl fmt::Debug for FiniteRangeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (range {})", self, self.range_rank)
    }
}

impl fmt::Display for FiniteRangeEndo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_map(&self.images))
    }
}

/// A point of `pt_∞(ℝ^{m,n})`, held as its minimal-rank representative.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PtInftyClass {
    domain: SuperDomainSpec,
    representative: QPoint,
}

impl PtInftyClass {
    pub fn domain(&self) -> SuperDomainSpec {
        self.domain
    }

    pub fn representative(&self) -> &QPoint {
        &self.representative
    }

    /// Rank of the minimal representative.
    pub fn rank(&self) -> usize {
        self.representative.q()
    }

    /// `î_n(κ)`.
    pub fn of(kappa: &QPoint) -> Self {
        normalize_class(kappa, kappa.domain()).expect("domain taken from the point")
    }
}

impl fmt::Debug for PtInftyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}]", self.representative)
    }
}

/// Projects `κ` to the smallest rank that still contains every generator it
/// mentions.
pub fn normalize_class(kappa: &QPoint, domain: SuperDomainSpec) -> Result<PtInftyClass> {
    domain.expect(&kappa.domain())?;
    let r = kappa.max_index();
    Ok(PtInftyClass {
        domain,
        representative: kappa.project(r),
    })
}

pub fn classes_equal(a: &PtInftyClass, b: &PtInftyClass) -> Result<bool> {
    a.domain.expect(&b.domain)?;
    Ok(a.representative == b.representative)
}

/// The motion of `pt_∞` determined by `g`.
pub fn act(g: &FiniteRangeEndo, c: &PtInftyClass) -> PtInftyClass {
    act_at(g, c, g.range_rank).expect("range rank is admissible")
}

/// [`act`] computed through `∧(j)` for a chosen `j ≥ range_rank(g)`.
pub fn act_at(g: &FiniteRangeEndo, c: &PtInftyClass, j: usize) -> Result<PtInftyClass> {
    if j < g.range_rank {
        return Err(Error::RankMismatch {
            expected: g.range_rank,
            found: j,
        });
    }
    let n = c.rank();
    let g_jn = g.restricted_hom(n, j)?;
    let moved = induced_point_map(&g_jn, &c.representative)?;
    normalize_class(&moved, c.domain)
}

/// `π̂_n` on the direct limit.
pub fn retract(n: usize, c: &PtInftyClass) -> PtInftyClass {
    act(&FiniteRangeEndo::projection(n), c)
}

/// Findings of [`reconstruct_pt_n`] on a sample of classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReconstructionReport {
    pub n: usize,
    pub sampled: usize,
    /// Classes of rank ≤ n, all of which must be fixed by `π̂_n`.
    pub low_rank: usize,
    /// Indices of samples violating a check.
    pub failures: Vec<usize>,
}

impl ReconstructionReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks on `samples` that `π̂_n` lands in classes of rank ≤ n, fixes exactly
/// the classes of rank ≤ n, is idempotent, and agrees with truncating the
/// representative, so `pt_n` is recovered as the image of `π̂_n`.
pub fn reconstruct_pt_n(
    domain: SuperDomainSpec,
    n: usize,
    samples: &[PtInftyClass],
) -> Result<ReconstructionReport> {
    let mut failures = Vec::new();
    let mut low_rank = 0;
    for (i, c) in samples.iter().enumerate() {
        domain.expect(&c.domain)?;
        let r = retract(n, c);
        let fixed = r == *c;
        let low = c.rank() <= n;
        if low {
            low_rank += 1;
        }
        let truncated = normalize_class(&c.representative.project(n.min(c.rank())), domain)?;
        let ok = r.rank() <= n && fixed == low && retract(n, &r) == r && r == truncated;
        if !ok {
            failures.push(i);
        }
    }
    Ok(ReconstructionReport {
        n,
        sampled: samples.len(),
        low_rank,
        failures,
    })
}

#[derive(Serialize, Deserialize)]
struct EndoRepr {
    support: usize,
    range_rank: usize,
    images: Vec<GrassmannElement>,
}

impl Serialize for FiniteRangeEndo {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        EndoRepr {
            support: self.support(),
            range_rank: self.range_rank,
            images: self.images.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FiniteRangeEndo {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = EndoRepr::deserialize(deserializer)?;
        expect_rank(r.support, r.images.len()).map_err(serde::de::Error::custom)?;
        FiniteRangeEndo::new(r.range_rank, r.images).map_err(serde::de::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct ClassRepr {
    domain: SuperDomainSpec,
    representative: QPoint,
}

impl Serialize for PtInftyClass {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ClassRepr {
            domain: self.domain,
            representative: self.representative.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for PtInftyClass {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = ClassRepr::deserialize(deserializer)?;
        normalize_class(&r.representative, r.domain).map_err(serde::de::Error::custom)
    }
}
