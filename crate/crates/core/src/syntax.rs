//! Concrete text syntax for kernel values.
//!
//! ```text
//! expr     := ['+'|'-'] term (('+'|'-') term)*
//! term     := rational | [rational '*'] factor ('*' factor)*
//! factor   := token ['^' nat]
//! rational := int ['/' nat]
//! token    := ('xi'|'x'|'th'|'dx'|'dxi') nat | 'zeta'
//! ```
//!
//! Maps and points are `;`-separated assignments such as
//! `xi1=xi1+xi2; xi2=0` or `x1=2 + xi1*xi2; th1=xi1`; unassigned
//! coordinates are 0. Whitespace is ignored everywhere.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derham::{Derivation, Generator, SuperForm};
use crate::error::{Error, Result};
use crate::grassmann::GrassmannElement;
use crate::hom::GradedHom;
use crate::monomial::Monomial;
use crate::points::{QPoint, SuperDomainSpec, SuperFunction};
use crate::scalar::Scalar;
use crate::semigroup::FiniteRangeEndo;

/// Generator families recognised by the lexer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TokenKind {
    /// `xiK`: ambient Grassmann generator, or odd form coordinate.
    Xi,
    /// `xK`: even coordinate.
    X,
    /// `thK`: odd coordinate of a superfunction.
    Th,
    Dx,
    Dxi,
    /// The generator of `∧(1)`.
    Zeta,
}

impl TokenKind {
    fn name(self) -> &'static str {
        match self {
            TokenKind::Xi => "xi",
            TokenKind::X => "x",
            TokenKind::Th => "th",
            TokenKind::Dx => "dx",
            TokenKind::Dxi => "dxi",
            TokenKind::Zeta => "zeta",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub kind: TokenKind,
    pub index: usize,
    pub power: u32,
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParsedTerm {
    pub coeff: Scalar,
    pub factors: Vec<Factor>,
}

/// A sum of signed terms, before any algebra is applied.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseTree {
    pub terms: Vec<ParsedTerm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Int(BigInt),
    Gen(TokenKind, usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn lex(text: &str, offset: usize) -> Result<Vec<(Tok, usize)>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let pos = offset + i;
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'+' | b'-' | b'*' | b'/' | b'^' => {
                out.push((
                    match c {
                        b'+' => Tok::Plus,
                        b'-' => Tok::Minus,
                        b'*' => Tok::Star,
                        b'/' => Tok::Slash,
                        _ => Tok::Caret,
                    },
                    pos,
                ));
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = text[start..i].parse().expect("digits");
                out.push((Tok::Int(n), pos));
            }
            b'a'..=b'z' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_lowercase() {
                    i += 1;
                }
                let word = &text[start..i];
                if word == "zeta" {
                    out.push((Tok::Gen(TokenKind::Zeta, 1), pos));
                    continue;
                }
                let kind = match word {
                    "xi" => TokenKind::Xi,
                    "x" => TokenKind::X,
                    "th" => TokenKind::Th,
                    "dx" => TokenKind::Dx,
                    "dxi" => TokenKind::Dxi,
                    _ => return Err(Error::parse(pos, format!("unknown token `{word}`"))),
                };
                let dstart = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if dstart == i {
                    return Err(Error::parse(pos, format!("`{word}` needs an index")));
                }
                let index: usize = text[dstart..i]
                    .parse()
                    .map_err(|_| Error::parse(offset + dstart, "index too large"))?;
                out.push((Tok::Gen(kind, index), pos));
            }
            _ => {
                return Err(Error::parse(
                    pos,
                    format!("unexpected character `{}`", text[i..].chars().next().unwrap()),
                ))
            }
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|(t, _)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |(_, p)| *p)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.at).map(|(t, _)| t.clone());
        self.at += 1;
        t
    }

    fn expr(&mut self) -> Result<ParseTree> {
        if self.toks.is_empty() {
            return Err(Error::parse(self.end, "empty expression"));
        }
        let mut terms = Vec::new();
        let mut negative = match self.peek() {
            Some(Tok::Minus) => {
                self.bump();
                true
            }
            Some(Tok::Plus) => {
                self.bump();
                false
            }
            _ => false,
        };
        loop {
            let mut term = self.term()?;
            if negative {
                term.coeff = -term.coeff;
            }
            terms.push(term);
            match self.peek() {
                None => break,
                Some(Tok::Plus) => negative = false,
                Some(Tok::Minus) => negative = true,
                Some(_) => return Err(Error::parse(self.pos(), "expected `+`, `-` or end")),
            }
            self.bump();
        }
        Ok(ParseTree { terms })
    }

    fn nat(&mut self) -> Result<BigInt> {
        let pos = self.pos();
        match self.bump() {
            Some(Tok::Int(n)) => Ok(n),
            _ => Err(Error::parse(pos, "expected a natural number")),
        }
    }

    fn term(&mut self) -> Result<ParsedTerm> {
        let mut coeff = Scalar::one();
        let mut factors = Vec::new();
        if let Some(Tok::Int(_)) = self.peek() {
            let num = self.nat()?;
            let mut den = BigInt::one();
            if let Some(Tok::Slash) = self.peek() {
                self.bump();
                let pos = self.pos();
                den = self.nat()?;
                if den.is_zero() {
                    return Err(Error::parse(pos, "zero denominator"));
                }
            }
            coeff = Scalar::from(num_rational::BigRational::new(num, den));
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                _ => return Ok(ParsedTerm { coeff, factors }),
            }
        }
        loop {
            factors.push(self.factor()?);
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                }
                _ => break,
            }
        }
        Ok(ParsedTerm { coeff, factors })
    }

    fn factor(&mut self) -> Result<Factor> {
        let position = self.pos();
        let (kind, index) = match self.bump() {
            Some(Tok::Gen(k, i)) => (k, i),
            _ => return Err(Error::parse(position, "expected a generator")),
        };
        let mut power = 1u32;
        if let Some(Tok::Caret) = self.peek() {
            self.bump();
            let pos = self.pos();
            let n = self.nat()?;
            power = u32::try_from(n).map_err(|_| Error::parse(pos, "exponent too large"))?;
        }
        let odd = matches!(
            kind,
            TokenKind::Xi | TokenKind::Th | TokenKind::Dx | TokenKind::Zeta
        );
        if odd && power > 1 {
            return Err(Error::parse(
                position,
                format!("odd generator `{}{}` cannot be raised to a power", kind.name(), index),
            ));
        }
        Ok(Factor {
            kind,
            index,
            power,
            position,
        })
    }
}

fn parse_tree_at(text: &str, offset: usize) -> Result<ParseTree> {
    let toks = lex(text, offset)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: offset + text.len(),
    };
    p.expr()
}

/// Parses the generic sum-of-products shape without interpreting tokens.
pub fn parse_tree(text: &str) -> Result<ParseTree> {
    parse_tree_at(text, 0)
}

fn out_of_range(f: &Factor, rank: usize) -> Error {
    Error::IndexOutOfRange {
        index: f.index as i64,
        rank,
    }
}

fn wrong_token(f: &Factor, what: &str) -> Error {
    Error::parse(
        f.position,
        format!("`{}` is not allowed in {what}", f.kind.name()),
    )
}

fn element_at(text: &str, offset: usize, rank: usize) -> Result<GrassmannElement> {
    let tree = parse_tree_at(text, offset)?;
    let mut raw = Vec::with_capacity(tree.terms.len());
    for t in &tree.terms {
        let mut ix = Vec::new();
        for f in &t.factors {
            match f.kind {
                TokenKind::Xi => {
                    if f.index == 0 || f.index > rank {
                        return Err(out_of_range(f, rank));
                    }
                }
                TokenKind::Zeta => {
                    if rank != 1 {
                        return Err(Error::parse(f.position, "`zeta` only denotes the generator of rank 1"));
                    }
                }
                _ => return Err(wrong_token(f, "a Grassmann element")),
            }
            if f.power > 0 {
                ix.push(f.index as i64);
            }
        }
        raw.push((ix, t.coeff.clone()));
    }
    GrassmannElement::normalize(rank as i64, &raw)
}

/// An element of `∧(rank)` in `xiK` tokens (`zeta` allowed for rank 1).
pub fn parse_element(text: &str, rank: usize) -> Result<GrassmannElement> {
    element_at(text, 0, rank)
}

/// A superfunction on `ℝ^{m,n}` in `xK` / `thK` tokens.
pub fn parse_superfunction(text: &str, domain: SuperDomainSpec) -> Result<SuperFunction> {
    let tree = parse_tree(text)?;
    let mut raw = Vec::with_capacity(tree.terms.len());
    for t in &tree.terms {
        let mut x = vec![0u32; domain.even_dim];
        let mut th = Vec::new();
        for f in &t.factors {
            match f.kind {
                TokenKind::X => {
                    if f.index == 0 || f.index > domain.even_dim {
                        return Err(out_of_range(f, domain.even_dim));
                    }
                    x[f.index - 1] += f.power;
                }
                TokenKind::Th => {
                    if f.index == 0 || f.index > domain.odd_dim {
                        return Err(out_of_range(f, domain.odd_dim));
                    }
                    if f.power > 0 {
                        th.push(f.index);
                    }
                }
                _ => return Err(wrong_token(f, "a superfunction")),
            }
        }
        raw.push((x, th, t.coeff.clone()));
    }
    SuperFunction::from_raw(domain, &raw)
}

/// A form on `ℝ^{m,n}` in `xK`, `xiK`, `dxK`, `dxiK` tokens; factors are
/// multiplied left to right with the wedge product.
pub fn parse_form(text: &str, domain: SuperDomainSpec) -> Result<SuperForm> {
    form_at(text, 0, domain)
}

fn form_at(text: &str, offset: usize, domain: SuperDomainSpec) -> Result<SuperForm> {
    let (m, n) = (domain.even_dim, domain.odd_dim);
    let tree = parse_tree_at(text, offset)?;
    let mut out = SuperForm::zero(m, n);
    for t in &tree.terms {
        let mut acc = SuperForm::constant(m, n, t.coeff.clone());
        for f in &t.factors {
            let (gen, bound) = match f.kind {
                TokenKind::X => (Generator::X(f.index), m),
                TokenKind::Xi => (Generator::Xi(f.index), n),
                TokenKind::Dx => (Generator::Dx(f.index), m),
                TokenKind::Dxi => (Generator::Dxi(f.index), n),
                _ => return Err(wrong_token(f, "a differential form")),
            };
            if f.index == 0 || f.index > bound {
                return Err(out_of_range(f, bound));
            }
            let g = SuperForm::generator(m, n, gen)?;
            acc = acc.wedge(&g.pow(f.power))?;
        }
        out = out.add(&acc)?;
    }
    Ok(out)
}

struct Assignment<'a> {
    kind: TokenKind,
    index: usize,
    position: usize,
    rhs: &'a str,
    rhs_offset: usize,
}

fn assignments(text: &str) -> Result<Vec<Assignment<'_>>> {
    let mut out: Vec<Assignment<'_>> = Vec::new();
    let mut offset = 0;
    for seg in text.split(';') {
        let seg_offset = offset;
        offset += seg.len() + 1;
        if seg.trim().is_empty() {
            continue;
        }
        let Some(eq) = seg.find('=') else {
            return Err(Error::parse(seg_offset, "expected `name=expression`"));
        };
        let lhs_toks = lex(&seg[..eq], seg_offset)?;
        let (kind, index, position) = match lhs_toks.as_slice() {
            [(Tok::Gen(k, i), p)] => (*k, *i, *p),
            _ => return Err(Error::parse(seg_offset, "left side must be a single generator")),
        };
        if out.iter().any(|a| a.kind == kind && a.index == index) {
            return Err(Error::parse(
                position,
                format!("`{}{}` assigned twice", kind.name(), index),
            ));
        }
        out.push(Assignment {
            kind,
            index,
            position,
            rhs: &seg[eq + 1..],
            rhs_offset: seg_offset + eq + 1,
        });
    }
    Ok(out)
}

/// Largest `xiK` index occurring on any right-hand side of a map or point.
pub fn infer_map_rank(text: &str) -> Result<usize> {
    let mut rank = 0;
    for a in assignments(text)? {
        for (t, _) in lex(a.rhs, a.rhs_offset)? {
            if let Tok::Gen(TokenKind::Xi, i) = t {
                rank = rank.max(i);
            }
        }
    }
    Ok(rank)
}

/// Largest generator index assigned on a left-hand side.
pub fn infer_map_support(text: &str) -> Result<usize> {
    Ok(assignments(text)?.iter().map(|a| a.index).max().unwrap_or(0))
}

fn map_images(text: &str, support: usize, target_rank: usize) -> Result<Vec<GrassmannElement>> {
    let mut images = vec![GrassmannElement::zero(target_rank); support];
    for a in assignments(text)? {
        if a.kind != TokenKind::Xi {
            return Err(Error::parse(a.position, "map assignments must target `xiK`"));
        }
        if a.index == 0 || a.index > support {
            return Err(Error::IndexOutOfRange {
                index: a.index as i64,
                rank: support,
            });
        }
        images[a.index - 1] = element_at(a.rhs, a.rhs_offset, target_rank)?;
    }
    Ok(images)
}

/// A homomorphism `∧(source_rank) → ∧(target_rank)` given as assignments.
pub fn parse_hom(text: &str, source_rank: usize, target_rank: usize) -> Result<GradedHom> {
    GradedHom::new(source_rank, target_rank, map_images(text, source_rank, target_rank)?)
}

/// An element of `E` with images in `∧(range_rank)`; the support is the
/// largest assigned index.
pub fn parse_endo(text: &str, range_rank: usize) -> Result<FiniteRangeEndo> {
    let support = infer_map_support(text)?;
    FiniteRangeEndo::new(range_rank, map_images(text, support, range_rank)?)
}

/// A `q`-point of `ℝ^{m,n}` given as `xK=…; thK=…` assignments.
pub fn parse_point(text: &str, domain: SuperDomainSpec, q: usize) -> Result<QPoint> {
    let mut evens = vec![GrassmannElement::zero(q); domain.even_dim];
    let mut odds = vec![GrassmannElement::zero(q); domain.odd_dim];
    for a in assignments(text)? {
        let (slot, bound) = match a.kind {
            TokenKind::X => (&mut evens, domain.even_dim),
            TokenKind::Th => (&mut odds, domain.odd_dim),
            _ => return Err(Error::parse(a.position, "point coordinates are `xK` or `thK`")),
        };
        if a.index == 0 || a.index > bound {
            return Err(Error::IndexOutOfRange {
                index: a.index as i64,
                rank: bound,
            });
        }
        slot[a.index - 1] = element_at(a.rhs, a.rhs_offset, q)?;
    }
    QPoint::new(q, evens, odds)
}

/// A graded derivation of parity `parity` given by its values on the
/// coordinates, e.g. `x1=xi1; xi1=1`; unassigned coordinates map to 0.
pub fn parse_derivation(text: &str, parity: u8, domain: SuperDomainSpec) -> Result<Derivation> {
    let (m, n) = (domain.even_dim, domain.odd_dim);
    let mut on_x = vec![SuperForm::zero(m, n); m];
    let mut on_xi = vec![SuperForm::zero(m, n); n];
    for a in assignments(text)? {
        let (slot, bound) = match a.kind {
            TokenKind::X => (&mut on_x, m),
            TokenKind::Xi => (&mut on_xi, n),
            _ => return Err(Error::parse(a.position, "derivations are given on `xK` and `xiK`")),
        };
        if a.index == 0 || a.index > bound {
            return Err(Error::IndexOutOfRange {
                index: a.index as i64,
                rank: bound,
            });
        }
        slot[a.index - 1] = form_at(a.rhs, a.rhs_offset, domain)?;
    }
    Derivation::new(parity, on_x, on_xi)
}

fn push_term(out: &mut String, coeff: &Scalar, factors: &str) {
    let negative = coeff.is_negative();
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    let mag = coeff.abs();
    if factors.is_empty() {
        out.push_str(&mag.to_string());
    } else {
        if !mag.is_one() {
            out.push_str(&mag.to_string());
            out.push('*');
        }
        out.push_str(factors);
    }
}

fn finish(out: String) -> String {
    if out.is_empty() {
        "0".to_string()
    } else {
        out
    }
}

fn monomial_text(m: Monomial, name: &str) -> String {
    m.indices()
        .map(|i| format!("{name}{i}"))
        .collect::<Vec<_>>()
        .join("*")
}

/// Canonical text of an element: terms in monomial order, reduced
/// coefficients, unit coefficients elided.
pub fn print_element(a: &GrassmannElement) -> String {
    let mut out = String::new();
    for (m, c) in a.terms() {
        push_term(&mut out, c, &monomial_text(*m, "xi"));
    }
    finish(out)
}

/// Prints an element of `∧(1)` in terms of `zeta`.
pub fn print_line(a: &GrassmannElement) -> String {
    let mut out = String::new();
    for (m, c) in a.terms() {
        let f = if m.is_empty() { String::new() } else { "zeta".into() };
        push_term(&mut out, c, &f);
    }
    finish(out)
}

fn power(name: &str, i: usize, e: u32) -> Option<String> {
    match e {
        0 => None,
        1 => Some(format!("{name}{i}")),
        _ => Some(format!("{name}{i}^{e}")),
    }
}

pub fn print_superfunction(f: &SuperFunction) -> String {
    let mut out = String::new();
    for (k, c) in f.terms() {
        let mut parts: Vec<String> = k
            .x
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| power("x", i + 1, e))
            .collect();
        parts.extend(k.th.indices().map(|a| format!("th{a}")));
        push_term(&mut out, c, &parts.join("*"));
    }
    finish(out)
}

pub fn print_form(w: &SuperForm) -> String {
    let mut out = String::new();
    for (k, c) in w.terms() {
        let mut parts: Vec<String> = k
            .x
            .iter()
            .enumerate()
            .filter_map(|(i, &e)| power("x", i + 1, e))
            .collect();
        parts.extend(k.xi.indices().map(|a| format!("xi{a}")));
        parts.extend(k.dx.indices().map(|i| format!("dx{i}")));
        parts.extend(
            k.dxi
                .iter()
                .enumerate()
                .filter_map(|(a, &e)| power("dxi", a + 1, e)),
        );
        push_term(&mut out, c, &parts.join("*"));
    }
    finish(out)
}

/// `xi1=…; xi2=…` listing every generator.
pub fn print_map(images: &[GrassmannElement]) -> String {
    images
        .iter()
        .enumerate()
        .map(|(i, img)| format!("xi{}={}", i + 1, print_element(img)))
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn print_hom(phi: &GradedHom) -> String {
    print_map(phi.images())
}

pub fn print_point(p: &QPoint) -> String {
    let evens = p
        .evens()
        .iter()
        .enumerate()
        .map(|(i, c)| format!("x{}={}", i + 1, print_element(c)));
    let odds = p
        .odds()
        .iter()
        .enumerate()
        .map(|(a, c)| format!("th{}={}", a + 1, print_element(c)));
    evens.chain(odds).collect::<Vec<_>>().join("; ")
}
