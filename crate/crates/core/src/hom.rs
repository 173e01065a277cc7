//! Graded algebra homomorphisms between Grassmann algebras, graded unital
//! subalgebras, and the surjection of a subalgebra with odd elements onto
//! `∧(1)` together with its one-parameter family `j_λ`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{expect_rank, Error, Result};
use crate::grassmann::{check_rank, GrassmannElement, Parity};
use crate::linalg::{Echelon, SparseVec};
use crate::monomial::Monomial;
use crate::scalar::Scalar;

/// A unital graded homomorphism `∧(source_rank) → ∧(target_rank)`, determined
/// by the odd images of the free generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedHom {
    source_rank: usize,
    target_rank: usize,
    images: Vec<GrassmannElement>,
}

impl GradedHom {
    pub fn new(
        source_rank: usize,
        target_rank: usize,
        images: Vec<GrassmannElement>,
    ) -> Result<Self> {
        check_rank(source_rank)?;
        check_rank(target_rank)?;
        expect_rank(source_rank, images.len())?;
        for (i, img) in images.iter().enumerate() {
            expect_rank(target_rank, img.rank())?;
            if img.terms().any(|(m, _)| !m.is_odd()) {
                return Err(Error::NotOdd(i + 1));
            }
        }
        Ok(GradedHom {
            source_rank,
            target_rank,
            images,
        })
    }

    pub fn identity(rank: usize) -> Self {
        let images = (1..=rank)
            .map(|i| GrassmannElement::generator(rank, i).expect("in range"))
            .collect();
        GradedHom {
            source_rank: rank,
            target_rank: rank,
            images,
        }
    }

    /// The augmentation `∧(q) → ∧(0) = k`, `a ↦ a_∅`.
    pub fn augmentation(rank: usize) -> Self {
        GradedHom {
            source_rank: rank,
            target_rank: 0,
            images: vec![GrassmannElement::zero(0); rank],
        }
    }

    /// The standard embedding `∧(q) ↪ ∧(target)`.
    pub fn inclusion(rank: usize, target: usize) -> Result<Self> {
        if target < rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: target,
            });
        }
        let images = (1..=rank)
            .map(|i| GrassmannElement::generator(target, i))
            .collect::<Result<_>>()?;
        Ok(GradedHom {
            source_rank: rank,
            target_rank: target,
            images,
        })
    }

    /// The retraction `∧(q) → ∧(target)` killing `ξ_i` for `i > target`.
    pub fn projection(rank: usize, target: usize) -> Result<Self> {
        check_rank(target)?;
        let images = (1..=rank)
            .map(|i| {
                if i <= target {
                    GrassmannElement::generator(target, i)
                } else {
                    Ok(GrassmannElement::zero(target))
                }
            })
            .collect::<Result<_>>()?;
        Ok(GradedHom {
            source_rank: rank,
            target_rank: target,
            images,
        })
    }

    pub fn source_rank(&self) -> usize {
        self.source_rank
    }

    pub fn target_rank(&self) -> usize {
        self.target_rank
    }

    /// Images of `ξ₁, …, ξ_q`.
    pub fn images(&self) -> &[GrassmannElement] {
        &self.images
    }

    fn apply_monomial(&self, m: Monomial) -> GrassmannElement {
        let mut acc = GrassmannElement::one(self.target_rank);
        for i in m.indices() {
            acc = acc.mul(&self.images[i - 1]).expect("common target rank");
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    /// Substitutes `ξ_i ↦ images[i]`, multiplying in ascending index order.
    pub fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement> {
        expect_rank(self.source_rank, a.rank())?;
        let mut out = GrassmannElement::zero(self.target_rank);
        for (m, c) in a.terms() {
            out = out.add(&self.apply_monomial(*m).scale(c))?;
        }
        Ok(out)
    }

    /// `self ∘ inner`.
    pub fn compose(&self, inner: &GradedHom) -> Result<GradedHom> {
        expect_rank(self.source_rank, inner.target_rank)?;
        let images = inner
            .images
            .iter()
            .map(|img| self.apply(img))
            .collect::<Result<_>>()?;
        Ok(GradedHom {
            source_rank: inner.source_rank,
            target_rank: self.target_rank,
            images,
        })
    }
}

/// `g ∘ f`.
pub fn compose_hom(g: &GradedHom, f: &GradedHom) -> Result<GradedHom> {
    g.compose(f)
}

#[derive(Serialize, Deserialize)]
struct HomRepr {
    source_rank: usize,
    target_rank: usize,
    images: Vec<GrassmannElement>,
}

impl Serialize for GradedHom {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        HomRepr {
            source_rank: self.source_rank,
            target_rank: self.target_rank,
            images: self.images.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for GradedHom {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let r = HomRepr::deserialize(deserializer)?;
        GradedHom::new(r.source_rank, r.target_rank, r.images).map_err(serde::de::Error::custom)
    }
}

fn to_sparse(a: &GrassmannElement) -> SparseVec<Monomial> {
    a.terms().map(|(m, c)| (*m, c.clone())).collect()
}

/// The smallest graded unital subalgebra of `∧(rank)` containing a set of
/// homogeneous generators, stored as a reduced echelon basis over the
/// monomial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubalgebraBasis {
    rank: usize,
    echelon: Echelon<Monomial>,
    basis: Vec<GrassmannElement>,
}

impl SubalgebraBasis {
    /// Closes `{1} ∪ generators` under multiplication.
    ///
    /// The span is grown by right-multiplying every new spanning vector by
    /// each generator until nothing new appears; a span containing 1 and the
    /// generators that is stable under right multiplication by the generators
    /// is the generated subalgebra.
    pub fn closure(rank: usize, generators: &[GrassmannElement]) -> Result<Self> {
        check_rank(rank)?;
        for (i, g) in generators.iter().enumerate() {
            expect_rank(rank, g.rank())?;
            if !g.parity().is_homogeneous() {
                return Err(Error::NotHomogeneous(i + 1));
            }
        }
        let gens: Vec<&GrassmannElement> = generators.iter().filter(|g| !g.is_zero()).collect();
        let mut echelon = Echelon::new();
        let mut queue = vec![GrassmannElement::one(rank)];
        echelon.insert(to_sparse(&queue[0]));
        for g in &gens {
            if echelon.insert(to_sparse(g)) {
                queue.push((*g).clone());
            }
        }
        while let Some(v) = queue.pop() {
            for g in &gens {
                let p = v.mul(g)?;
                if !p.is_zero() && echelon.insert(to_sparse(&p)) {
                    queue.push(p);
                }
            }
        }
        Ok(Self::from_echelon(rank, echelon))
    }

    fn from_echelon(rank: usize, echelon: Echelon<Monomial>) -> Self {
        let basis = echelon
            .rows()
            .map(|row| GrassmannElement::from_map_unchecked(rank, row.clone()))
            .collect();
        SubalgebraBasis {
            rank,
            echelon,
            basis,
        }
    }

    /// All of `∧(rank)`.
    pub fn full(rank: usize) -> Result<Self> {
        let gens = (1..=rank)
            .map(|i| GrassmannElement::generator(rank, i))
            .collect::<Result<Vec<_>>>()?;
        Self::closure(rank, &gens)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Reduced echelon basis in pivot order.
    pub fn basis(&self) -> &[GrassmannElement] {
        &self.basis
    }

    pub fn even(&self) -> impl Iterator<Item = &GrassmannElement> {
        self.basis.iter().filter(|b| b.parity() == Parity::Even)
    }

    pub fn odd(&self) -> impl Iterator<Item = &GrassmannElement> {
        self.basis.iter().filter(|b| b.parity() == Parity::Odd)
    }

    pub fn contains(&self, a: &GrassmannElement) -> bool {
        a.rank() == self.rank && self.echelon.contains(&to_sparse(a))
    }
}

/// A linear map between Grassmann algebras that can be audited by
/// [`verify_hom`].
pub trait GradedMap {
    fn source_rank(&self) -> usize;
    fn target_rank(&self) -> usize;
    fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement>;

    /// `apply(a·b)`; maps that only read a few coefficients override this.
    fn apply_product(&self, a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
        self.apply(&a.mul(b)?)
    }
}

impl GradedMap for GradedHom {
    fn source_rank(&self) -> usize {
        self.source_rank
    }

    fn target_rank(&self) -> usize {
        self.target_rank
    }

    fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement> {
        GradedHom::apply(self, a)
    }
}

/// Coefficient of `ξ^target` in `a·b`, read off without forming the product.
fn product_coefficient(a: &GrassmannElement, b: &GrassmannElement, target: Monomial) -> Scalar {
    let mut acc = Scalar::zero();
    for (ma, ca) in a.terms() {
        if !ma.is_subset(target) {
            continue;
        }
        let rest = target.difference(*ma);
        let cb = b.coefficient(rest);
        if cb.is_zero() {
            continue;
        }
        let term = ca * &cb;
        if ma.inversions(rest) % 2 == 1 {
            acc -= &term;
        } else {
            acc += &term;
        }
    }
    acc
}

/// The linear map `∧(q) → ∧(1)`, `a ↦ a_∅ + a_β ζ`, for an odd-cardinality `β`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OddLineHom {
    rank: usize,
    beta: Monomial,
}

impl OddLineHom {
    pub fn new(rank: usize, beta: Monomial) -> Result<Self> {
        check_rank(rank)?;
        if beta.max_index() > rank {
            return Err(Error::IndexOutOfRange {
                index: beta.max_index() as i64,
                rank,
            });
        }
        if !beta.is_odd() {
            return Err(Error::ParityViolation(format!(
                "beta must have odd cardinality, got {}",
                beta.len()
            )));
        }
        Ok(OddLineHom { rank, beta })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn beta(&self) -> Monomial {
        self.beta
    }

    /// `|β|`.
    pub fn m(&self) -> usize {
        self.beta.len()
    }

    fn line(body: Scalar, slope: Scalar) -> GrassmannElement {
        let zeta = Monomial::generator(1);
        GrassmannElement::from_terms(1, [(Monomial::EMPTY, body), (zeta, slope)])
            .expect("rank one")
    }
}

impl GradedMap for OddLineHom {
    fn source_rank(&self) -> usize {
        self.rank
    }

    fn target_rank(&self) -> usize {
        1
    }

    fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement> {
        expect_rank(self.rank, a.rank())?;
        Ok(Self::line(a.body(), a.coefficient(self.beta)))
    }

    fn apply_product(&self, a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
        expect_rank(self.rank, a.rank())?;
        expect_rank(self.rank, b.rank())?;
        Ok(Self::line(
            a.body() * b.body(),
            product_coefficient(a, b, self.beta),
        ))
    }
}

/// Constructs the surjection `A → ∧(1)`.
///
/// `m` is the least cardinality of a monomial carrying a nonzero coefficient
/// in some odd element of `A`; `β` is the first such monomial in the
/// monomial order. The result is re-verified on the basis of `A`.
pub fn lemma1_epi(a: &SubalgebraBasis) -> Result<OddLineHom> {
    let beta = a
        .odd()
        .flat_map(|b| b.terms().map(|(m, _)| *m))
        .min()
        .ok_or(Error::NoOddSector)?;
    let h = OddLineHom::new(a.rank(), beta)?;
    let report = verify_hom(&h, a.basis())?;
    if !report.is_clean() || !report.surjective {
        return Err(Error::VerificationFailed(format!(
            "beta = {:?}: {:?}",
            beta, report
        )));
    }
    Ok(h)
}

/// The map `j_λ(a₀ + a₁) = body(a₀) + λ·h(a₁)` on a subalgebra `A`.
#[derive(Debug, Clone)]
pub struct JMap {
    h: OddLineHom,
    lambda: Scalar,
    domain: SubalgebraBasis,
}

impl JMap {
    pub fn lambda(&self) -> &Scalar {
        &self.lambda
    }

    pub fn domain(&self) -> &SubalgebraBasis {
        &self.domain
    }

    pub fn h(&self) -> &OddLineHom {
        &self.h
    }

    /// Images of the domain basis; two `j_λ` agree iff these agree.
    pub fn basis_images(&self) -> Result<Vec<GrassmannElement>> {
        self.domain.basis().iter().map(|b| self.apply(b)).collect()
    }
}

/// The family member `j_λ` built from `h = lemma1_epi(A)`.
pub fn j_family(h: &OddLineHom, a: &SubalgebraBasis, lambda: Scalar) -> Result<JMap> {
    expect_rank(h.rank(), a.rank())?;
    Ok(JMap {
        h: h.clone(),
        lambda,
        domain: a.clone(),
    })
}

impl GradedMap for JMap {
    fn source_rank(&self) -> usize {
        self.h.rank
    }

    fn target_rank(&self) -> usize {
        1
    }

    fn apply(&self, a: &GrassmannElement) -> Result<GrassmannElement> {
        let (even, odd, _) = a.parity_decompose();
        let h_odd = self.h.apply(&odd)?.odd_part();
        GrassmannElement::scalar(1, even.body()).add(&h_odd.scale(&self.lambda))
    }

    fn apply_product(&self, a: &GrassmannElement, b: &GrassmannElement) -> Result<GrassmannElement> {
        // only the ∅ and β coefficients of a·b are read
        let line = self.h.apply_product(a, b)?;
        let zeta = Monomial::generator(1);
        Ok(OddLineHom::line(
            line.body(),
            line.coefficient(zeta) * &self.lambda,
        ))
    }
}

/// Outcome of [`verify_hom`]. Clean means no multiplicativity or grading
/// violations and unital; surjectivity is reported separately.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    /// Basis index pairs `(i, j)` with `map(bᵢbⱼ) ≠ map(bᵢ)map(bⱼ)`.
    pub multiplicativity: Vec<(usize, usize)>,
    pub unital: bool,
    /// Basis indices whose image is not of the same parity.
    pub grading: Vec<usize>,
    /// The images span the whole target algebra.
    pub surjective: bool,
    pub checked_pairs: usize,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.multiplicativity.is_empty() && self.unital && self.grading.is_empty()
    }
}

/// Audits `map` on the span of `domain_basis` (assumed multiplicatively
/// closed): products of all basis pairs, the image of 1, and parities.
pub fn verify_hom<M: GradedMap + ?Sized>(
    map: &M,
    domain_basis: &[GrassmannElement],
) -> Result<VerificationReport> {
    let q = map.source_rank();
    let p = map.target_rank();
    let images = domain_basis
        .iter()
        .map(|b| map.apply(b))
        .collect::<Result<Vec<_>>>()?;

    let mut multiplicativity = Vec::new();
    for (i, bi) in domain_basis.iter().enumerate() {
        for (j, bj) in domain_basis.iter().enumerate() {
            let lhs = map.apply_product(bi, bj)?;
            let rhs = images[i].mul(&images[j])?;
            if lhs != rhs {
                multiplicativity.push((i, j));
            }
        }
    }

    let unital = map.apply(&GrassmannElement::one(q))? == GrassmannElement::one(p);

    let grading = domain_basis
        .iter()
        .zip(&images)
        .enumerate()
        .filter(|(_, (b, img))| {
            let pb = b.parity();
            !pb.is_homogeneous() || (!img.is_zero() && img.parity() != pb)
        })
        .map(|(i, _)| i)
        .collect();

    let surjective = p < 32 && {
        let mut e = Echelon::new();
        for img in &images {
            e.insert(img.terms().map(|(m, c)| (*m, c.clone())).collect::<BTreeMap<_, _>>());
        }
        e.rank() == 1usize << p
    };

    Ok(VerificationReport {
        multiplicativity,
        unital,
        grading,
        surjective,
        checked_pairs: domain_basis.len() * domain_basis.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grassmann::monomial_basis;

    fn s(n: i64) -> Scalar {
        Scalar::from_int(n)
    }

    fn xi(q: usize, i: usize) -> GrassmannElement {
        GrassmannElement::generator(q, i).unwrap()
    }

    fn mono(q: usize, ix: &[usize]) -> GrassmannElement {
        GrassmannElement::from_terms(q, [(Monomial::from_sorted(ix).unwrap(), s(1))]).unwrap()
    }

    #[test]
    fn make_hom_accepts_odd_images() {
        let img = xi(2, 1).add(&xi(2, 2)).unwrap();
        assert!(GradedHom::new(1, 2, vec![img]).is_ok());
        assert!(GradedHom::new(2, 1, vec![xi(1, 1), xi(1, 1)]).is_ok());
        let bad = GrassmannElement::one(1).add(&xi(1, 1)).unwrap();
        assert_eq!(GradedHom::new(1, 1, vec![bad]), Err(Error::NotOdd(1)));
        assert!(matches!(
            GradedHom::new(2, 1, vec![xi(1, 1)]),
            Err(Error::RankMismatch { .. })
        ));
        assert!(matches!(
            GradedHom::new(1, 1, vec![xi(2, 1)]),
            Err(Error::RankMismatch { .. })
        ));
    }

    #[test]
    fn apply_examples() {
        let phi = GradedHom::new(1, 2, vec![xi(2, 1).add(&xi(2, 2)).unwrap()]).unwrap();
        let a = GrassmannElement::scalar(1, s(3)).add(&xi(1, 1).scale(&s(2))).unwrap();
        let expected = GrassmannElement::scalar(2, s(3))
            .add(&xi(2, 1).scale(&s(2)))
            .unwrap()
            .add(&xi(2, 2).scale(&s(2)))
            .unwrap();
        assert_eq!(phi.apply(&a).unwrap(), expected);
        let sq = xi(1, 1).mul(&xi(1, 1)).unwrap();
        assert!(phi.apply(&sq).unwrap().is_zero());

        let psi = GradedHom::new(1, 4, vec![mono(4, &[2, 3, 4])]).unwrap();
        assert_eq!(psi.apply(&xi(1, 1)).unwrap(), mono(4, &[2, 3, 4]));
        assert!(phi.apply(&xi(2, 1)).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = GradedHom::new(1, 2, vec![xi(2, 1).add(&xi(2, 2)).unwrap()]).unwrap();
        let g = GradedHom::new(2, 1, vec![xi(1, 1), xi(1, 1)]).unwrap();
        let gf = compose_hom(&g, &f).unwrap();
        assert_eq!(gf.images(), &[xi(1, 1).scale(&s(2))]);
        assert_eq!(compose_hom(&GradedHom::identity(2), &f).unwrap(), f);
        let aug = compose_hom(&GradedHom::augmentation(2), &f).unwrap();
        assert_eq!(aug, GradedHom::augmentation(1));
        assert!(compose_hom(&f, &f).is_err());
    }

    #[test]
    fn augmentation_is_body() {
        let a = GrassmannElement::scalar(2, s(3)).add(&mono(2, &[1, 2])).unwrap();
        let aug = GradedHom::augmentation(2);
        assert_eq!(aug.apply(&a).unwrap(), GrassmannElement::scalar(0, s(3)));
        assert_eq!(GradedHom::augmentation(0), GradedHom::identity(0));
    }

    #[test]
    fn closure_examples() {
        let a = SubalgebraBasis::closure(3, &[mono(3, &[1, 2, 3])]).unwrap();
        assert_eq!(a.basis(), &[GrassmannElement::one(3), mono(3, &[1, 2, 3])]);
        let full = SubalgebraBasis::closure(2, &[xi(2, 1), xi(2, 2)]).unwrap();
        assert_eq!(full.dim(), 4);
        let even = SubalgebraBasis::closure(2, &[mono(2, &[1, 2])]).unwrap();
        assert_eq!(even.dim(), 2);
        assert_eq!(even.odd().count(), 0);
        let mixed = GrassmannElement::one(2).add(&xi(2, 1)).unwrap();
        assert_eq!(
            SubalgebraBasis::closure(2, &[mixed]),
            Err(Error::NotHomogeneous(1))
        );
    }

    #[test]
    fn lemma1_on_full_algebra() {
        let a = SubalgebraBasis::full(2).unwrap();
        let h = lemma1_epi(&a).unwrap();
        assert_eq!(h.m(), 1);
        assert_eq!(h.beta(), Monomial::generator(1));
        assert!(h.apply(&mono(2, &[1, 2])).unwrap().is_zero());
    }

    #[test]
    fn lemma1_on_top_monomial() {
        let a = SubalgebraBasis::closure(3, &[mono(3, &[1, 2, 3])]).unwrap();
        let h = lemma1_epi(&a).unwrap();
        assert_eq!(h.m(), 3);
        assert_eq!(h.beta(), Monomial::from_sorted(&[1, 2, 3]).unwrap());
        let z = GrassmannElement::scalar(3, s(4))
            .add(&mono(3, &[1, 2, 3]).scale(&s(7)))
            .unwrap();
        let img = h.apply(&z).unwrap();
        assert_eq!(img.body(), s(4));
        assert_eq!(img.coefficient(Monomial::generator(1)), s(7));
    }

    #[test]
    fn lemma1_needs_odd_sector() {
        let a = SubalgebraBasis::closure(2, &[mono(2, &[1, 2])]).unwrap();
        assert_eq!(lemma1_epi(&a), Err(Error::NoOddSector));
    }

    #[test]
    fn line_map_is_not_a_hom_on_everything() {
        // β = {1,2,3}: h(ξ₁ξ₂ξ₃) = ζ but h(ξ₁)h(ξ₂ξ₃) = 0
        let h = OddLineHom::new(3, Monomial::from_sorted(&[1, 2, 3]).unwrap()).unwrap();
        let report = verify_hom(&h, &monomial_basis(3)).unwrap();
        assert!(!report.multiplicativity.is_empty());
        // a singleton β only reads linear terms and stays multiplicative
        let h1 = OddLineHom::new(3, Monomial::generator(1)).unwrap();
        assert!(verify_hom(&h1, &monomial_basis(3)).unwrap().is_clean());
        assert!(OddLineHom::new(3, Monomial::from_sorted(&[1, 2]).unwrap()).is_err());
    }

    #[test]
    fn substitution_homs_verify() {
        let phi = GradedHom::new(
            2,
            3,
            vec![xi(3, 1).add(&mono(3, &[1, 2, 3])).unwrap(), xi(3, 2).scale(&s(-2))],
        )
        .unwrap();
        let r = verify_hom(&phi, &monomial_basis(2)).unwrap();
        assert!(r.is_clean());
        assert!(!r.surjective);
        assert!(verify_hom(&GradedHom::identity(3), &monomial_basis(3)).unwrap().surjective);
    }

    #[test]
    fn j_family_on_rank_one() {
        let a = SubalgebraBasis::full(1).unwrap();
        let h = lemma1_epi(&a).unwrap();
        let j5 = j_family(&h, &a, s(5)).unwrap();
        let z = GrassmannElement::scalar(1, s(2)).add(&xi(1, 1).scale(&s(3))).unwrap();
        let expected = GrassmannElement::scalar(1, s(2)).add(&xi(1, 1).scale(&s(15))).unwrap();
        assert_eq!(j5.apply(&z).unwrap(), expected);
        assert!(verify_hom(&j5, a.basis()).unwrap().is_clean());

        let j0 = j_family(&h, &a, s(0)).unwrap();
        assert_eq!(j0.apply(&z).unwrap(), GrassmannElement::scalar(1, s(2)));
    }

    #[test]
    fn hom_json() {
        let phi = GradedHom::new(1, 2, vec![xi(2, 2)]).unwrap();
        let json = serde_json::to_string(&phi).unwrap();
        assert!(json.starts_with(r#"{"source_rank":1,"target_rank":2,"images":[{"rank":2"#));
        let back: GradedHom = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);
    }
}
