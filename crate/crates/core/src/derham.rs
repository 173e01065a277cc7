//! The super de Rham complex of the polynomial superdomain `ℝ^{m,n}`.
//!
//! Generators carry a single total parity (form degree plus intrinsic parity,
//! mod 2): `x` even, `ξ` odd, `dx` odd, `dξ` even, and any two generators
//! satisfy `uv = (−1)^{|u||v|} vu`. So `dx_i² = 0` while powers of `dξ_a`
//! survive and the complex is unbounded in form degree.
//!
//! Every operator here preserves the weight (total degree in all four kinds
//! of generators) except the wedge product, which adds weights. Truncating by
//! weight is therefore exact.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grassmann::add_term;
use crate::linalg::Echelon;
use crate::monomial::{Monomial, MAX_RANK};
use crate::scalar::Scalar;

/// One of the four kinds of generators, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Generator {
    X(usize),
    Xi(usize),
    Dx(usize),
    Dxi(usize),
}

impl Generator {
    /// Total parity: 1 for `ξ` and `dx`.
    pub fn parity(self) -> u8 {
        match self {
            Generator::X(_) | Generator::Dxi(_) => 0,
            Generator::Xi(_) | Generator::Dx(_) => 1,
        }
    }
}

/// `x^e ξ^α dx^I dξ^K` in canonical generator order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FormMonomial {
    pub x: Vec<u32>,
    pub xi: Monomial,
    pub dx: Monomial,
    pub dxi: Vec<u32>,
}

impl FormMonomial {
    pub fn unit(m: usize, n: usize) -> Self {
        FormMonomial {
            x: vec![0; m],
            xi: Monomial::EMPTY,
            dx: Monomial::EMPTY,
            dxi: vec![0; n],
        }
    }

    pub fn form_degree(&self) -> usize {
        self.dx.len() + self.dxi.iter().sum::<u32>() as usize
    }

    pub fn weight(&self) -> usize {
        self.x.iter().sum::<u32>() as usize + self.xi.len() + self.form_degree()
    }

    /// Total parity of the monomial.
    pub fn parity(&self) -> u8 {
        ((self.xi.len() + self.dx.len()) % 2) as u8
    }

    /// Odd generators packed into one index space: `ξ_a ↦ a`, `dx_i ↦ n + i`.
    /// Canonical order of odd factors is ascending in this space.
    fn odd_key(&self) -> Monomial {
        let n = self.dxi.len();
        Monomial::from_bits(self.xi.bits() | (self.dx.bits() << n))
    }

    /// `self ∧ other` as `(negative, product)`, `None` if an odd generator
    /// repeats.
    pub fn wedge(&self, other: &FormMonomial) -> Option<(bool, FormMonomial)> {
        let (negative, _) = self.odd_key().product(other.odd_key())?;
        Some((
            negative,
            FormMonomial {
                x: self.x.iter().zip(&other.x).map(|(a, b)| a + b).collect(),
                xi: self.xi.union(other.xi),
                dx: self.dx.union(other.dx),
                dxi: self.dxi.iter().zip(&other.dxi).map(|(a, b)| a + b).collect(),
            },
        ))
    }

    /// The generators as a word in canonical order, powers expanded.
    pub fn word(&self) -> Vec<Generator> {
        let mut w = Vec::with_capacity(self.weight());
        for (i, &e) in self.x.iter().enumerate() {
            w.extend(std::iter::repeat_n(Generator::X(i + 1), e as usize));
        }
        w.extend(self.xi.indices().map(Generator::Xi));
        w.extend(self.dx.indices().map(Generator::Dx));
        for (a, &k) in self.dxi.iter().enumerate() {
            w.extend(std::iter::repeat_n(Generator::Dxi(a + 1), k as usize));
        }
        w
    }

    fn from_word(m: usize, n: usize, word: &[Generator]) -> Self {
        // callers pass sub-words of a canonical word, so no reordering happens
        let mut out = FormMonomial::unit(m, n);
        for g in word {
            match *g {
                Generator::X(i) => out.x[i - 1] += 1,
                Generator::Xi(a) => out.xi = out.xi.union(Monomial::generator(a)),
                Generator::Dx(i) => out.dx = out.dx.union(Monomial::generator(i)),
                Generator::Dxi(a) => out.dxi[a - 1] += 1,
            }
        }
        out
    }
}

impl Ord for FormMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.form_degree()
            .cmp(&other.form_degree())
            .then_with(|| self.weight().cmp(&other.weight()))
            .then_with(|| other.x.cmp(&self.x))
            .then_with(|| self.xi.cmp(&other.xi))
            .then_with(|| self.dx.cmp(&other.dx))
            .then_with(|| other.dxi.cmp(&self.dxi))
    }
}

impl PartialOrd for FormMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A graded differential form on `ℝ^{m,n}` with polynomial coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SuperForm {
    m: usize,
    n: usize,
    terms: BTreeMap<FormMonomial, Scalar>,
}

fn check_dims(m: usize, n: usize) -> Result<()> {
    if m + n > MAX_RANK {
        Err(Error::RankTooLarge(m + n))
    } else {
        Ok(())
    }
}

impl SuperForm {
    pub fn zero(m: usize, n: usize) -> Self {
        SuperForm {
            m,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, n: usize, c: Scalar) -> Self {
        Self::from_monomial(m, n, FormMonomial::unit(m, n), c)
    }

    pub fn one(m: usize, n: usize) -> Self {
        Self::constant(m, n, Scalar::one())
    }

    fn from_monomial(m: usize, n: usize, mono: FormMonomial, c: Scalar) -> Self {
        let mut terms = BTreeMap::new();
        add_term(&mut terms, mono, c);
        SuperForm { m, n, terms }
    }

    /// A single generator.
    pub fn generator(m: usize, n: usize, g: Generator) -> Result<Self> {
        check_dims(m, n)?;
        let (index, bound) = match g {
            Generator::X(i) | Generator::Dx(i) => (i, m),
            Generator::Xi(a) | Generator::Dxi(a) => (a, n),
        };
        if index == 0 || index > bound {
            return Err(Error::IndexOutOfRange {
                index: index as i64,
                rank: bound,
            });
        }
        Ok(Self::from_monomial(
            m,
            n,
            FormMonomial::from_word(m, n, &[g]),
            Scalar::one(),
        ))
    }

    /// Builds from canonical monomials, checking their shape.
    pub fn from_terms<I>(m: usize, n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (FormMonomial, Scalar)>,
    {
        check_dims(m, n)?;
        let mut map = BTreeMap::new();
        for (mono, c) in terms {
            if mono.x.len() != m || mono.dxi.len() != n {
                return Err(Error::DomainMismatch(m, n, mono.x.len(), mono.dxi.len()));
            }
            for (idx, bound) in [(mono.xi.max_index(), n), (mono.dx.max_index(), m)] {
                if idx > bound {
                    return Err(Error::IndexOutOfRange {
                        index: idx as i64,
                        rank: bound,
                    });
                }
            }
            add_term(&mut map, mono, c);
        }
        Ok(SuperForm { m, n, terms: map })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.m, self.n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FormMonomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn expect_dims(&self, other: &SuperForm) -> Result<()> {
        if (self.m, self.n) == (other.m, other.n) {
            Ok(())
        } else {
            Err(Error::DomainMismatch(self.m, self.n, other.m, other.n))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.expect_dims(other)?;
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            add_term(&mut terms, k.clone(), c.clone());
        }
        Ok(SuperForm {
            m: self.m,
            n: self.n,
            terms,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&Scalar::from_int(-1)))
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut terms = BTreeMap::new();
        for (k, v) in &self.terms {
            add_term(&mut terms, k.clone(), v * c);
        }
        SuperForm {
            m: self.m,
            n: self.n,
            terms,
        }
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        self.expect_dims(other)?;
        let mut terms = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if let Some((negative, k)) = ka.wedge(kb) {
                    let c = ca * cb;
                    add_term(&mut terms, k, if negative { -c } else { c });
                }
            }
        }
        Ok(SuperForm {
            m: self.m,
            n: self.n,
            terms,
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.m, self.n);
        for _ in 0..exp {
            acc = acc.wedge(self).expect("same dims");
        }
        acc
    }

    /// Total parity, `None` if both parities occur. Zero reports `Some(0)`.
    pub fn parity(&self) -> Option<u8> {
        let mut seen = [false; 2];
        for k in self.terms.keys() {
            seen[k.parity() as usize] = true;
        }
        match seen {
            [_, false] => Some(0),
            [false, true] => Some(1),
            [true, true] => None,
        }
    }

    /// Form degree if homogeneous; zero reports `Some(0)`.
    pub fn form_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(FormMonomial::form_degree);
        let first = it.next().unwrap_or(0);
        it.all(|d| d == first).then_some(first)
    }

    pub fn weight_part(&self, w: usize) -> Self {
        self.filter(|k| k.weight() == w)
    }

    pub fn degree_part(&self, p: usize) -> Self {
        self.filter(|k| k.form_degree() == p)
    }

    fn filter(&self, keep: impl Fn(&FormMonomial) -> bool) -> Self {
        SuperForm {
            m: self.m,
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, c)| (k.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct weights present, ascending.
    pub fn weights(&self) -> Vec<usize> {
        let mut ws: Vec<usize> = self.terms.keys().map(FormMonomial::weight).collect();
        ws.sort_unstable();
        ws.dedup();
        ws
    }

    fn word_form(&self, word: &[Generator]) -> SuperForm {
        Self::from_monomial(
            self.m,
            self.n,
            FormMonomial::from_word(self.m, self.n, word),
            Scalar::one(),
        )
    }

    /// Extends a rule on generators to the graded derivation of the given
    /// parity: `D(u₁…u_k) = Σ_j (−1)^{|D|(|u₁|+…+|u_{j−1}|)} u₁…D(u_j)…u_k`.
    fn derive(&self, parity: u8, rule: &impl Fn(Generator) -> Option<SuperForm>) -> SuperForm {
        let mut out = SuperForm::zero(self.m, self.n);
        for (mono, c) in &self.terms {
            let word = mono.word();
            let mut prefix_parity = 0u8;
            for (j, &g) in word.iter().enumerate() {
                if let Some(dg) = rule(g) {
                    if !dg.is_zero() {
                        let left = self.word_form(&word[..j]);
                        let right = self.word_form(&word[j + 1..]);
                        let mut term = left
                            .wedge(&dg)
                            .and_then(|t| t.wedge(&right))
                            .expect("same dims");
                        let mut coeff = c.clone();
                        if parity & prefix_parity == 1 {
                            coeff = -coeff;
                        }
                        term = term.scale(&coeff);
                        out = out.add(&term).expect("same dims");
                    }
                }
                prefix_parity ^= g.parity();
            }
        }
        out
    }

    /// The exterior differential.
    pub fn d(&self) -> SuperForm {
        let (m, n) = (self.m, self.n);
        self.derive(1, &|g| match g {
            Generator::X(i) => SuperForm::generator(m, n, Generator::Dx(i)).ok(),
            Generator::Xi(a) => SuperForm::generator(m, n, Generator::Dxi(a)).ok(),
            Generator::Dx(_) | Generator::Dxi(_) => None,
        })
    }

    /// Contraction with the Euler field `Σ xᵢ∂/∂xᵢ + Σ ξₐ∂/∂ξₐ`.
    pub fn euler_contract(&self) -> SuperForm {
        let (m, n) = (self.m, self.n);
        self.derive(1, &|g| match g {
            Generator::Dx(i) => SuperForm::generator(m, n, Generator::X(i)).ok(),
            Generator::Dxi(a) => SuperForm::generator(m, n, Generator::Xi(a)).ok(),
            Generator::X(_) | Generator::Xi(_) => None,
        })
    }

    /// The Lie derivative along the Euler field: each weight-`w` monomial
    /// scaled by `w`.
    pub fn euler_weight(&self) -> SuperForm {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            add_term(&mut terms, k.clone(), c * &Scalar::from_int(k.weight() as i64));
        }
        SuperForm {
            m: self.m,
            n: self.n,
            terms,
        }
    }

    pub fn is_closed(&self) -> bool {
        self.d().is_zero()
    }
}

/// `i_E ω`.
pub fn euler_contract(omega: &SuperForm) -> SuperForm {
    omega.euler_contract()
}

/// A primitive of a closed form: `τ = Σ_{w ≥ 1} i_E(ω_w) / w`, so that
/// `dτ = ω − ω₀` with `ω₀` the constant part.
pub fn antiderivative(omega: &SuperForm) -> Result<SuperForm> {
    if !omega.is_closed() {
        return Err(Error::NotClosed);
    }
    let mut tau = SuperForm::zero(omega.m, omega.n);
    for w in omega.weights() {
        if w == 0 {
            continue;
        }
        let part = omega.weight_part(w).euler_contract();
        tau = tau.add(&part.scale(&Scalar::ratio(1, w as i64)))?;
    }
    Ok(tau)
}

/// Default cap on the number of monomials in a single `(p, w)` block.
pub const DEFAULT_BLOCK_CAP: usize = 200_000;

fn compositions(total: u32, parts: usize, out: &mut Vec<Vec<u32>>) {
    fn rec(total: u32, parts: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() + 1 == parts {
            cur.push(total);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=total).rev() {
            cur.push(first);
            rec(total - first, parts, cur, out);
            cur.pop();
        }
    }
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return;
    }
    rec(total, parts, &mut Vec::new(), out);
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Monomial> {
    (0..1u64 << n)
        .map(Monomial::from_bits)
        .filter(|s| s.len() == k)
        .collect()
}

/// Monomial basis of the block of form degree `p` and weight `w`.
pub fn block_basis(m: usize, n: usize, p: usize, w: usize, cap: usize) -> Result<Vec<FormMonomial>> {
    check_dims(m, n)?;
    if m > 20 || n > 20 {
        return Err(Error::BudgetExceeded {
            needed: usize::MAX,
            cap,
        });
    }
    let mut out = Vec::new();
    if w < p {
        return Ok(out);
    }
    for i in 0..=p.min(m) {
        let k = p - i;
        let mut dxis = Vec::new();
        compositions(k as u32, n, &mut dxis);
        let rest = w - p;
        for dx in subsets_of_size(m, i) {
            for dxi in &dxis {
                for a in 0..=rest.min(n) {
                    let mut xs = Vec::new();
                    compositions((rest - a) as u32, m, &mut xs);
                    for xi in subsets_of_size(n, a) {
                        for x in &xs {
                            if out.len() >= cap {
                                return Err(Error::BudgetExceeded {
                                    needed: out.len() + 1,
                                    cap,
                                });
                            }
                            out.push(FormMonomial {
                                x: x.clone(),
                                xi,
                                dx,
                                dxi: dxi.clone(),
                            });
                        }
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

fn rank_of_d(m: usize, n: usize, basis: &[FormMonomial]) -> usize {
    let mut e = Echelon::new();
    for mono in basis {
        let img = SuperForm::from_monomial(m, n, mono.clone(), Scalar::one()).d();
        e.insert(img.terms.into_iter().collect());
    }
    e.rank()
}

/// `dim H^p` for `p = 0..=max_degree`, from exact ranks of `d` on every
/// weight block up to `max_weight`.
pub fn cohomology_dims(m: usize, n: usize, max_degree: usize, max_weight: usize) -> Result<Vec<usize>> {
    cohomology_dims_with_cap(m, n, max_degree, max_weight, DEFAULT_BLOCK_CAP)
}

pub fn cohomology_dims_with_cap(
    m: usize,
    n: usize,
    max_degree: usize,
    max_weight: usize,
    cap: usize,
) -> Result<Vec<usize>> {
    // rank[p][w] = rank of d : Ω^p_w → Ω^{p+1}_w
    let mut sizes = vec![vec![0usize; max_weight + 1]; max_degree + 1];
    let mut ranks = vec![vec![0usize; max_weight + 1]; max_degree + 1];
    for p in 0..=max_degree {
        for w in 0..=max_weight {
            let basis = block_basis(m, n, p, w, cap)?;
            sizes[p][w] = basis.len();
            ranks[p][w] = rank_of_d(m, n, &basis);
        }
    }
    Ok((0..=max_degree)
        .map(|p| {
            (0..=max_weight)
                .map(|w| {
                    let nullity = sizes[p][w] - ranks[p][w];
                    let boundaries = if p == 0 { 0 } else { ranks[p - 1][w] };
                    nullity - boundaries
                })
                .sum()
        })
        .collect())
}

/// `dim H^p` from the Euler homotopy: after checking `d i_E + i_E d = w` on
/// every basis monomial of every block, each block of weight `w ≥ 1` is
/// contractible and only weight 0 contributes.
pub fn cohomology_dims_homotopy(
    m: usize,
    n: usize,
    max_degree: usize,
    max_weight: usize,
) -> Result<Vec<usize>> {
    let mut dims = vec![0usize; max_degree + 1];
    for (p, dim) in dims.iter_mut().enumerate() {
        for w in 0..=max_weight {
            let basis = block_basis(m, n, p, w, DEFAULT_BLOCK_CAP)?;
            for mono in &basis {
                let mu = SuperForm::from_monomial(m, n, mono.clone(), Scalar::one());
                let lhs = mu.euler_contract().d().add(&mu.d().euler_contract())?;
                if lhs != mu.scale(&Scalar::from_int(w as i64)) {
                    return Err(Error::VerificationFailed(format!(
                        "homotopy identity fails on {mu}"
                    )));
                }
            }
            if w == 0 {
                *dim += basis.len();
            }
        }
    }
    Ok(dims)
}

/// A graded derivation of the superfunction algebra, given by its values on
/// the coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    parity: u8,
    on_x: Vec<SuperForm>,
    on_xi: Vec<SuperForm>,
}

impl Derivation {
    pub fn new(parity: u8, on_x: Vec<SuperForm>, on_xi: Vec<SuperForm>) -> Result<Self> {
        let (m, n) = (on_x.len(), on_xi.len());
        let checks = on_x
            .iter()
            .map(|v| (v, parity))
            .chain(on_xi.iter().map(|v| (v, parity ^ 1)));
        for (i, (v, want)) in checks.enumerate() {
            if v.dims() != (m, n) {
                return Err(Error::DomainMismatch(m, n, v.m, v.n));
            }
            if v.form_degree() != Some(0) {
                return Err(Error::NotAFunction(v.form_degree().unwrap_or(1)));
            }
            if !v.is_zero() && v.parity() != Some(want) {
                return Err(Error::ParityViolation(format!(
                    "value on generator {} must have parity {want}",
                    i + 1
                )));
            }
        }
        Ok(Derivation {
            parity: parity & 1,
            on_x,
            on_xi,
        })
    }

    /// `∂/∂x_i`.
    pub fn partial_x(m: usize, n: usize, i: usize) -> Result<Self> {
        let on_x = (1..=m)
            .map(|j| {
                if j == i {
                    SuperForm::one(m, n)
                } else {
                    SuperForm::zero(m, n)
                }
            })
            .collect();
        if i == 0 || i > m {
            return Err(Error::IndexOutOfRange {
                index: i as i64,
                rank: m,
            });
        }
        Self::new(0, on_x, vec![SuperForm::zero(m, n); n])
    }

    /// The left derivative `∂/∂ξ_a`.
    pub fn partial_xi(m: usize, n: usize, a: usize) -> Result<Self> {
        if a == 0 || a > n {
            return Err(Error::IndexOutOfRange {
                index: a as i64,
                rank: n,
            });
        }
        let on_xi = (1..=n)
            .map(|j| {
                if j == a {
                    SuperForm::one(m, n)
                } else {
                    SuperForm::zero(m, n)
                }
            })
            .collect();
        Self::new(1, vec![SuperForm::zero(m, n); m], on_xi)
    }

    pub fn parity(&self) -> u8 {
        self.parity
    }
}

/// Applies `D` to a function (a form of degree 0) by the graded Leibniz rule.
pub fn graded_derivation_apply(d: &Derivation, f: &SuperForm) -> Result<SuperForm> {
    let (m, n) = (d.on_x.len(), d.on_xi.len());
    if f.dims() != (m, n) {
        return Err(Error::DomainMismatch(m, n, f.m, f.n));
    }
    if f.form_degree() != Some(0) {
        return Err(Error::NotAFunction(f.form_degree().unwrap_or(1)));
    }
    Ok(f.derive(d.parity, &|g| match g {
        Generator::X(i) => Some(d.on_x[i - 1].clone()),
        Generator::Xi(a) => Some(d.on_xi[a - 1].clone()),
        Generator::Dx(_) | Generator::Dxi(_) => None,
    }))
}

impl fmt::Debug for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on R^({},{})", self, self.m, self.n)
    }
}

impl fmt::Display for SuperForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::syntax::print_form(self))
    }
}

#[derive(Serialize, Deserialize)]
struct FormTermRepr {
    x: Vec<u32>,
    xi: Vec<usize>,
    dx: Vec<usize>,
    dxi: Vec<u32>,
    coeff: Scalar,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    dims: [usize; 2],
    terms: Vec<FormTermRepr>,
}

impl Serialize for SuperForm {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        FormRepr {
            dims: [self.m, self.n],
            terms: self
                .terms
                .iter()
                .map(|(k, c)| FormTermRepr {
                    x: k.x.clone(),
                    xi: k.xi.indices().collect(),
                    dx: k.dx.indices().collect(),
                    dxi: k.dxi.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SuperForm {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error as _;
        let r = FormRepr::deserialize(deserializer)?;
        let mut terms = Vec::with_capacity(r.terms.len());
        for t in r.terms {
            let xi = Monomial::from_sorted(&t.xi).map_err(D::Error::custom)?;
            let dx = Monomial::from_sorted(&t.dx).map_err(D::Error::custom)?;
            terms.push((
                FormMonomial {
                    x: t.x,
                    xi,
                    dx,
                    dxi: t.dxi,
                },
                t.coeff,
            ));
        }
        SuperForm::from_terms(r.dims[0], r.dims[1], terms).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(m: usize, n: usize, gen: Generator) -> SuperForm {
        SuperForm::generator(m, n, gen).unwrap()
    }

    fn w(a: &SuperForm, b: &SuperForm) -> SuperForm {
        a.wedge(b).unwrap()
    }

    fn s(k: i64) -> Scalar {
        Scalar::from_int(k)
    }

    use Generator::*;

    #[test]
    fn wedge_signs() {
        let dxi1 = g(2, 1, Dxi(1));
        let sq = w(&dxi1, &dxi1);
        assert!(!sq.is_zero());
        assert_eq!(sq.terms().next().unwrap().0.dxi, vec![2]);
        let dx1 = g(2, 1, Dx(1));
        assert!(w(&dx1, &dx1).is_zero());
        let dx2 = g(2, 1, Dx(2));
        assert_eq!(w(&dx1, &dx2), w(&dx2, &dx1).scale(&s(-1)));
        let xi1 = g(2, 1, Xi(1));
        assert_eq!(w(&xi1, &dx1), w(&dx1, &xi1).scale(&s(-1)));
        assert_eq!(w(&xi1, &dxi1), w(&dxi1, &xi1));
    }

    #[test]
    fn d_examples() {
        let x1 = g(1, 0, X(1));
        assert_eq!(w(&x1, &x1).d(), w(&x1, &g(1, 0, Dx(1))).scale(&s(2)));

        let (xi1, xi2) = (g(0, 2, Xi(1)), g(0, 2, Xi(2)));
        let (dxi1, dxi2) = (g(0, 2, Dxi(1)), g(0, 2, Dxi(2)));
        let f = w(&xi1, &xi2);
        let expected = w(&dxi1, &xi2).sub(&w(&xi1, &dxi2)).unwrap();
        assert_eq!(f.d(), expected);
        assert!(f.d().d().is_zero());

        let a = g(0, 1, Xi(1));
        let da = g(0, 1, Dxi(1));
        assert_eq!(w(&a, &da).d(), w(&da, &da));
    }

    #[test]
    fn euler_contract_examples() {
        let dxi1 = g(0, 1, Dxi(1));
        let xi1 = g(0, 1, Xi(1));
        assert_eq!(dxi1.euler_contract(), xi1);
        assert_eq!(
            w(&dxi1, &dxi1).euler_contract(),
            w(&xi1, &dxi1).scale(&s(2))
        );
        let mu = w(&xi1, &dxi1);
        let cartan = mu.euler_contract().d().add(&mu.d().euler_contract()).unwrap();
        assert_eq!(cartan, mu.scale(&s(2)));
    }

    #[test]
    fn antiderivative_examples() {
        let dxi1 = g(0, 1, Dxi(1));
        assert_eq!(antiderivative(&dxi1).unwrap(), g(0, 1, Xi(1)));
        let sq = w(&dxi1, &dxi1);
        assert_eq!(antiderivative(&sq).unwrap(), w(&g(0, 1, Xi(1)), &dxi1));
        let x1 = g(1, 0, X(1));
        let omega = w(&x1, &g(1, 0, Dx(1)));
        assert_eq!(
            antiderivative(&omega).unwrap(),
            w(&x1, &x1).scale(&Scalar::ratio(1, 2))
        );
        let open = w(&g(1, 1, X(1)), &g(1, 1, Dxi(1)));
        assert_eq!(antiderivative(&open), Err(Error::NotClosed));
    }

    #[test]
    fn antiderivative_keeps_constants_aside() {
        let f = SuperForm::constant(1, 1, s(3)).add(&g(1, 1, X(1))).unwrap();
        let tau = antiderivative(&f).unwrap_err();
        assert_eq!(tau, Error::NotClosed);
        let c = SuperForm::constant(1, 1, s(3));
        assert!(antiderivative(&c).unwrap().is_zero());
    }

    #[test]
    fn block_sizes() {
        // weight 1, degree 0 on R^{1,1}: x1, xi1
        assert_eq!(block_basis(1, 1, 0, 1, 100).unwrap().len(), 2);
        // degree 1 weight 1: dx1, dxi1
        assert_eq!(block_basis(1, 1, 1, 1, 100).unwrap().len(), 2);
        assert_eq!(block_basis(1, 1, 2, 1, 100).unwrap().len(), 0);
        assert!(matches!(
            block_basis(2, 2, 3, 5, 3),
            Err(Error::BudgetExceeded { cap: 3, .. })
        ));
    }

    #[test]
    fn cohomology_small_cases() {
        assert_eq!(cohomology_dims(1, 1, 3, 4).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(cohomology_dims(0, 2, 3, 4).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(cohomology_dims(2, 0, 2, 3).unwrap(), vec![1, 0, 0]);
        assert_eq!(cohomology_dims_homotopy(1, 1, 3, 4).unwrap(), vec![1, 0, 0, 0]);
    }

    #[test]
    fn partial_derivatives() {
        let (xi1, xi2) = (g(0, 2, Xi(1)), g(0, 2, Xi(2)));
        let f = w(&xi1, &xi2);
        let d1 = Derivation::partial_xi(0, 2, 1).unwrap();
        let d2 = Derivation::partial_xi(0, 2, 2).unwrap();
        assert_eq!(graded_derivation_apply(&d1, &f).unwrap(), xi2);
        assert_eq!(graded_derivation_apply(&d2, &f).unwrap(), xi1.scale(&s(-1)));
        let dx = Derivation::partial_x(1, 0, 1).unwrap();
        let x1 = g(1, 0, X(1));
        assert_eq!(
            graded_derivation_apply(&dx, &x1.pow(3)).unwrap(),
            x1.pow(2).scale(&s(3))
        );
        assert!(graded_derivation_apply(&d1, &g(0, 2, Dxi(1))).is_err());
    }

    #[test]
    fn derivation_parity_is_checked() {
        let bad = Derivation::new(0, vec![], vec![SuperForm::one(0, 1)]);
        assert!(matches!(bad, Err(Error::ParityViolation(_))));
        let ok = Derivation::new(1, vec![], vec![SuperForm::one(0, 1)]);
        assert!(ok.is_ok());
    }
}
