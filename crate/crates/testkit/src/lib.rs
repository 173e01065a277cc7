//! Seeded random generators and brute-force oracles for the superpoint test
//! suites. The oracles deliberately avoid the kernel's bitmask sign tricks:
//! they work on explicit index words and count adjacent swaps.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use superpoint_core::{
    normalize_class, FiniteRangeEndo, FormMonomial, GradedHom, GrassmannElement, Monomial,
    PtInftyClass, QPoint, Scalar, SuperDomainSpec, SuperForm, SuperFunction,
};

pub struct Gen {
    rng: ChaCha8Rng,
}

impl Gen {
    pub fn new(seed: u64) -> Self {
        Gen {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn range(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.gen_range(lo..=hi)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen()
    }

    /// Small rational `p/q` with `|p| ≤ 4`, `1 ≤ q ≤ 3`; may be zero.
    pub fn scalar(&mut self) -> Scalar {
        let p = self.rng.gen_range(-4..=4);
        let q = self.rng.gen_range(1..=3);
        Scalar::ratio(p, q)
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A random subset of `{1..q}`; `parity` forces odd/even cardinality.
    pub fn monomial(&mut self, q: usize, parity: Option<bool>) -> Monomial {
        let mut bits = 0u64;
        for i in 0..q {
            if self.rng.gen_bool(0.4) {
                bits |= 1 << i;
            }
        }
        let mut m = Monomial::from_bits(bits);
        if let Some(odd) = parity {
            if m.is_odd() != odd {
                assert!(q > 0 || !odd, "no odd monomials in rank 0");
                let i = self.rng.gen_range(0..q);
                m = Monomial::from_bits(bits ^ (1 << i));
            }
        }
        m
    }

    fn element_with(&mut self, q: usize, parity: Option<bool>, max_terms: usize) -> GrassmannElement {
        let n = self.range(0, max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| (self.monomial(q, parity), self.nonzero_scalar()))
            .collect();
        GrassmannElement::from_terms(q, terms).unwrap()
    }

    pub fn element(&mut self, q: usize, max_terms: usize) -> GrassmannElement {
        self.element_with(q, None, max_terms)
    }

    /// Homogeneous of the given parity; odd requires `q ≥ 1`.
    pub fn homogeneous(&mut self, q: usize, odd: bool, max_terms: usize) -> GrassmannElement {
        if odd && q == 0 {
            return GrassmannElement::zero(0);
        }
        self.element_with(q, Some(odd), max_terms)
    }

    pub fn odd(&mut self, q: usize, max_terms: usize) -> GrassmannElement {
        self.homogeneous(q, true, max_terms)
    }

    pub fn hom(&mut self, source: usize, target: usize, max_terms: usize) -> GradedHom {
        let images = (0..source).map(|_| self.odd(target, max_terms)).collect();
        GradedHom::new(source, target, images).unwrap()
    }

    /// A monomial of exactly `card` distinct indices from `{1..q}`.
    pub fn monomial_of_len(&mut self, q: usize, card: usize) -> Monomial {
        let mut idx: Vec<usize> = (1..=q).collect();
        idx.shuffle(&mut self.rng);
        let mut chosen = idx[..card.min(q)].to_vec();
        chosen.sort_unstable();
        Monomial::from_sorted(&chosen).unwrap()
    }

    /// Homogeneous element built from low-degree monomials (degree 1 or 3
    /// when odd, 2 when even), so that products rarely vanish.
    pub fn low_degree(&mut self, q: usize, odd: bool, max_terms: usize) -> GrassmannElement {
        let n = self.range(1, max_terms);
        let terms: Vec<_> = (0..n)
            .map(|_| {
                let card = match (odd, self.range(0, 3)) {
                    (true, 0) if q >= 3 => 3,
                    (true, _) => 1,
                    (false, _) => 2.min(q - q % 2),
                };
                (self.monomial_of_len(q, card), self.nonzero_scalar())
            })
            .collect();
        GrassmannElement::from_terms(q, terms).unwrap()
    }

    /// One to six homogeneous generators in `∧(q)`, at least one of them a
    /// nonzero odd element.
    pub fn subalgebra_gens(&mut self, q: usize) -> Vec<GrassmannElement> {
        assert!(q >= 1);
        let count = self.range(1, 6);
        let mut gens = Vec::with_capacity(count);
        loop {
            let g = self.low_degree(q, true, 3);
            if !g.is_zero() {
                gens.push(g);
                break;
            }
        }
        for _ in 1..count {
            let odd = self.coin();
            let g = if self.coin() {
                self.low_degree(q, odd, 3)
            } else {
                self.homogeneous(q, odd, 3)
            };
            gens.push(g);
        }
        gens.shuffle(&mut self.rng);
        gens
    }

    pub fn even_gens(&mut self, q: usize) -> Vec<GrassmannElement> {
        let count = self.range(1, 3);
        (0..count).map(|_| self.homogeneous(q, false, 3)).collect()
    }

    pub fn superfunction(&mut self, domain: SuperDomainSpec, max_deg: u32, max_terms: usize) -> SuperFunction {
        let n = self.range(0, max_terms);
        let raw: Vec<_> = (0..n)
            .map(|_| {
                let x = (0..domain.even_dim)
                    .map(|_| self.rng.gen_range(0..=max_deg))
                    .collect();
                let th = self.monomial(domain.odd_dim, None).indices().collect();
                (x, th, self.nonzero_scalar())
            })
            .collect();
        SuperFunction::from_raw(domain, &raw).unwrap()
    }

    pub fn point(&mut self, domain: SuperDomainSpec, q: usize, max_terms: usize) -> QPoint {
        let evens = (0..domain.even_dim)
            .map(|_| self.homogeneous(q, false, max_terms))
            .collect();
        let odds = (0..domain.odd_dim)
            .map(|_| self.homogeneous(q, true, max_terms))
            .collect();
        QPoint::new(q, evens, odds).unwrap()
    }

    pub fn endo(&mut self, support: usize, range_rank: usize, max_terms: usize) -> FiniteRangeEndo {
        let images = (0..support).map(|_| self.odd(range_rank, max_terms)).collect();
        FiniteRangeEndo::new(range_rank, images).unwrap()
    }

    pub fn class(&mut self, domain: SuperDomainSpec, q: usize, max_terms: usize) -> PtInftyClass {
        let p = self.point(domain, q, max_terms);
        normalize_class(&p, domain).unwrap()
    }

    /// A monomial with form degree ≤ `max_degree` and weight ≤ `max_weight`.
    pub fn form_monomial(&mut self, m: usize, n: usize, max_weight: usize, max_degree: usize) -> FormMonomial {
        let mut mono = FormMonomial::unit(m, n);
        let p = self.range(0, max_degree.min(max_weight));
        let mut placed = 0;
        for _ in 0..p {
            if self.coin() && m > 0 {
                let i = self.range(1, m);
                if !mono.dx.contains(i) {
                    mono.dx = mono.dx.union(Monomial::generator(i));
                    placed += 1;
                }
            } else if n > 0 {
                mono.dxi[self.range(0, n - 1)] += 1;
                placed += 1;
            }
        }
        let extra = self.range(0, max_weight - placed);
        for _ in 0..extra {
            if self.coin() && m > 0 {
                mono.x[self.range(0, m - 1)] += 1;
            } else if n > 0 {
                let a = self.range(1, n);
                if !mono.xi.contains(a) {
                    mono.xi = mono.xi.union(Monomial::generator(a));
                }
            }
        }
        mono
    }

    pub fn form(&mut self, m: usize, n: usize, max_weight: usize, max_degree: usize, max_terms: usize) -> SuperForm {
        let count = self.range(0, max_terms);
        let terms: Vec<_> = (0..count)
            .map(|_| (self.form_monomial(m, n, max_weight, max_degree), self.nonzero_scalar()))
            .collect();
        SuperForm::from_terms(m, n, terms).unwrap()
    }

    /// A form whose monomials all have total parity `parity`.
    pub fn homogeneous_form(
        &mut self,
        m: usize,
        n: usize,
        parity: u8,
        max_weight: usize,
        max_degree: usize,
        max_terms: usize,
    ) -> SuperForm {
        let count = self.range(0, max_terms);
        let mut terms = Vec::with_capacity(count);
        for _ in 0..count * 4 {
            if terms.len() == count {
                break;
            }
            let mono = self.form_monomial(m, n, max_weight, max_degree);
            if mono.parity() == parity {
                terms.push((mono, self.nonzero_scalar()));
            }
        }
        SuperForm::from_terms(m, n, terms).unwrap()
    }
}

/// Sorts `word` by adjacent swaps. `odd(i)` tells whether item `i` is odd;
/// swapping two odd items flips the sign. Returns `None` when two equal odd
/// items meet.
pub fn bubble_sort_sign<T: Ord + Copy>(word: &mut [T], odd: impl Fn(&T) -> bool) -> Option<bool> {
    let mut negative = false;
    for end in (1..word.len()).rev() {
        for k in 0..end {
            if word[k] > word[k + 1] {
                if odd(&word[k]) && odd(&word[k + 1]) {
                    negative = !negative;
                }
                word.swap(k, k + 1);
            }
        }
    }
    if word.windows(2).any(|w| w[0] == w[1] && odd(&w[0])) {
        return None;
    }
    Some(negative)
}

/// Product in `∧(q)` by concatenating index words and bubble-sorting.
pub fn oracle_mul(a: &GrassmannElement, b: &GrassmannElement) -> GrassmannElement {
    let mut out = Vec::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut word: Vec<usize> = ma.indices().chain(mb.indices()).collect();
            if let Some(negative) = bubble_sort_sign(&mut word, |_| true) {
                let c = ca * cb;
                out.push((Monomial::from_sorted(&word).unwrap(), if negative { -c } else { c }));
            }
        }
    }
    GrassmannElement::from_terms(a.rank().max(b.rank()), out).unwrap()
}

/// `φ(a)` by substituting images into each monomial, left to right.
pub fn oracle_apply(images: &[GrassmannElement], target: usize, a: &GrassmannElement) -> GrassmannElement {
    let mut out = GrassmannElement::zero(target);
    for (m, c) in a.terms() {
        let mut prod = GrassmannElement::one(target);
        for i in m.indices() {
            prod = oracle_mul(&prod, &images[i - 1]);
        }
        out = out.add(&prod.scale(c)).unwrap();
    }
    out
}

/// `f(κ)` by direct expansion of each monomial `x^e θ^α`.
pub fn oracle_eval(f: &SuperFunction, kappa: &QPoint) -> GrassmannElement {
    let q = kappa.q();
    let mut out = GrassmannElement::zero(q);
    for (mono, c) in f.terms() {
        let mut prod = GrassmannElement::scalar(q, c.clone());
        for (i, &e) in mono.x.iter().enumerate() {
            for _ in 0..e {
                prod = oracle_mul(&prod, &kappa.evens()[i]);
            }
        }
        for a in mono.th.indices() {
            prod = oracle_mul(&prod, &kappa.odds()[a - 1]);
        }
        out = out.add(&prod).unwrap();
    }
    out
}

/// A form generator in canonical order: x < ξ < dx < dξ, then by index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Letter {
    X(usize),
    Xi(usize),
    Dx(usize),
    Dxi(usize),
}

impl Letter {
    pub fn is_odd(&self) -> bool {
        matches!(self, Letter::Xi(_) | Letter::Dx(_))
    }
}

pub fn letters(mono: &FormMonomial) -> Vec<Letter> {
    let mut w = Vec::new();
    for (i, &e) in mono.x.iter().enumerate() {
        w.extend(std::iter::repeat_n(Letter::X(i + 1), e as usize));
    }
    w.extend(mono.xi.indices().map(Letter::Xi));
    w.extend(mono.dx.indices().map(Letter::Dx));
    for (a, &e) in mono.dxi.iter().enumerate() {
        w.extend(std::iter::repeat_n(Letter::Dxi(a + 1), e as usize));
    }
    w
}

/// Canonical `(sign, monomial)` of an arbitrary word of letters.
pub fn sort_letters(m: usize, n: usize, mut word: Vec<Letter>) -> Option<(bool, FormMonomial)> {
    let negative = bubble_sort_sign(&mut word, Letter::is_odd)?;
    let mut mono = FormMonomial::unit(m, n);
    for l in word {
        match l {
            Letter::X(i) => mono.x[i - 1] += 1,
            Letter::Xi(a) => mono.xi = mono.xi.union(Monomial::generator(a)),
            Letter::Dx(i) => mono.dx = mono.dx.union(Monomial::generator(i)),
            Letter::Dxi(a) => mono.dxi[a - 1] += 1,
        }
    }
    Some((negative, mono))
}

fn signed(negative: bool, c: Scalar) -> Scalar {
    if negative {
        -c
    } else {
        c
    }
}

pub fn oracle_wedge(a: &SuperForm, b: &SuperForm) -> SuperForm {
    let (m, n) = a.dims();
    let mut out = Vec::new();
    for (ma, ca) in a.terms() {
        for (mb, cb) in b.terms() {
            let mut word = letters(ma);
            word.extend(letters(mb));
            if let Some((negative, mono)) = sort_letters(m, n, word) {
                out.push((mono, signed(negative, ca * cb)));
            }
        }
    }
    SuperForm::from_terms(m, n, out).unwrap()
}

/// `d` letter by letter: replace one coordinate by its differential, with
/// the sign of the odd letters passed over.
pub fn oracle_d(w: &SuperForm) -> SuperForm {
    let (m, n) = w.dims();
    let mut out = Vec::new();
    for (mono, c) in w.terms() {
        let word = letters(mono);
        let mut passed_odd = 0;
        for (k, l) in word.iter().enumerate() {
            let dl = match *l {
                Letter::X(i) => Some(Letter::Dx(i)),
                Letter::Xi(a) => Some(Letter::Dxi(a)),
                _ => None,
            };
            if let Some(dl) = dl {
                let mut new_word = word.clone();
                new_word[k] = dl;
                if let Some((negative, mono)) = sort_letters(m, n, new_word) {
                    out.push((mono, signed(negative ^ (passed_odd % 2 == 1), c.clone())));
                }
            }
            if l.is_odd() {
                passed_odd += 1;
            }
        }
    }
    SuperForm::from_terms(m, n, out).unwrap()
}

/// Every monomial of weight exactly `w` and form degree ≤ `max_degree`.
pub fn all_form_monomials(m: usize, n: usize, w: usize, max_degree: usize) -> Vec<FormMonomial> {
    // letters with multiplicity: x and dξ repeat, ξ and dx do not
    let mut alphabet = Vec::new();
    alphabet.extend((1..=m).map(Letter::X));
    alphabet.extend((1..=n).map(Letter::Xi));
    alphabet.extend((1..=m).map(Letter::Dx));
    alphabet.extend((1..=n).map(Letter::Dxi));
    let mut out = Vec::new();
    let mut word = Vec::new();
    fn rec(
        alphabet: &[Letter],
        start: usize,
        left: usize,
        max_degree: usize,
        word: &mut Vec<Letter>,
        out: &mut Vec<Vec<Letter>>,
    ) {
        if left == 0 {
            out.push(word.clone());
            return;
        }
        for k in start..alphabet.len() {
            let l = alphabet[k];
            if l.is_odd() && word.last() == Some(&l) {
                continue;
            }
            let degree = word
                .iter()
                .filter(|x| matches!(x, Letter::Dx(_) | Letter::Dxi(_)))
                .count();
            if matches!(l, Letter::Dx(_) | Letter::Dxi(_)) && degree == max_degree {
                continue;
            }
            word.push(l);
            rec(alphabet, k, left - 1, max_degree, word, out);
            word.pop();
        }
    }
    let mut words = Vec::new();
    rec(&alphabet, 0, w, max_degree, &mut word, &mut words);
    for word in words {
        if let Some((_, mono)) = sort_letters(m, n, word) {
            out.push(mono);
        }
    }
    out
}
