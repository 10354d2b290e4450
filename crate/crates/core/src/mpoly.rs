//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! Monomials are ordered by ascending total degree; within one degree the
//! exponent vectors are listed in descending lexicographic order, so for two
//! variables the degree-2 block reads `x1^2, x1*x2, x2^2`. The same order
//! indexes [`MonomialBasis`] columns everywhere in the crate.
//!
//! Text form (used by every file format):
//!
//! ```text
//! poly     := ['+'|'-'] term (('+'|'-') term)*
//! term     := rational ['*'] factors | rational | factors
//! factors  := factor (['*'] factor)*
//! factor   := 'x' index ['^' exponent]        (index is 1-based)
//! rational := int ['/' posint]
//! ```
//!
//! Whitespace is ignored and `#` starts a comment running to end of line.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

pub fn int(v: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `int` or `int/posint`.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let t = text.trim();
    let syntax = |message: &str| Error::Syntax {
        position: 0,
        message: format!("{message}: {t:?}"),
    };
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (t, None),
    };
    let num: BigInt = num.parse().map_err(|_| syntax("bad integer"))?;
    let den: BigInt = match den {
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return Err(syntax("denominator must be a positive integer"));
            }
            d.parse().map_err(|_| syntax("bad denominator"))?
        }
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(syntax("zero denominator"));
    }
    Ok(Scalar::new(num, den))
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiIndex {
    exponents: Vec<u32>,
    total: u32,
}

impl MultiIndex {
    pub fn new(exponents: Vec<u32>) -> Self {
        let total = exponents.iter().sum();
        MultiIndex { exponents, total }
    }

    pub fn zero(n: usize) -> Self {
        MultiIndex::new(vec![0; n])
    }

    /// The monomial `x_{var+1}` (0-based `var`).
    pub fn unit(n: usize, var: usize) -> Self {
        let mut e = vec![0; n];
        e[var] = 1;
        MultiIndex::new(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total(&self) -> u32 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }

    pub fn mul(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.len(), other.len());
        MultiIndex {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
            total: self.total + other.total,
        }
    }

    pub fn divides(&self, other: &MultiIndex) -> bool {
        self.exponents
            .iter()
            .zip(&other.exponents)
            .all(|(a, b)| a <= b)
    }

    pub fn evaluate(&self, coords: &[Scalar]) -> Scalar {
        let mut acc = Scalar::one();
        for (c, &e) in coords.iter().zip(&self.exponents) {
            if e > 0 {
                acc *= c.pow(e as i32);
            }
        }
        acc
    }

    /// All exponent vectors of total degree exactly `d`, in basis order.
    pub fn of_degree(n: usize, d: u32) -> Vec<MultiIndex> {
        fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == n {
                prefix.push(d);
                out.push(MultiIndex::new(prefix.clone()));
                prefix.pop();
                return;
            }
            for e in (0..=d).rev() {
                prefix.push(e);
                rec(n, d - e, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(MultiIndex::new(Vec::new()));
            }
            return out;
        }
        rec(n, d, &mut Vec::with_capacity(n), &mut out);
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total
            .cmp(&other.total)
            .then_with(|| other.exponents.cmp(&self.exponents))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.total == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "x{}", i + 1)?;
            } else {
                write!(f, "x{}^{}", i + 1, e)?;
            }
        }
        Ok(())
    }
}

/// A point of affine `n`-space with rational coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    coords: Vec<Scalar>,
}

impl Point {
    pub fn new(coords: Vec<Scalar>) -> Self {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Point::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// Parses a comma-separated list of rationals.
    pub fn parse(text: &str) -> Result<Point> {
        let mut coords = Vec::new();
        let mut start = 0;
        for piece in text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let c = parse_scalar(piece).map_err(|e| match e {
                Error::Syntax { message, .. } => Error::Syntax {
                    position: start + lead,
                    message,
                },
                other => other,
            })?;
            coords.push(c);
            start += piece.len() + 1;
        }
        Ok(Point::new(coords))
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `n` variables. No zero coefficient is ever stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<MultiIndex, Scalar>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Polynomial::constant(n, Scalar::one())
    }

    pub fn constant(n: usize, c: Scalar) -> Self {
        Polynomial::monomial(MultiIndex::zero(n), c)
    }

    /// `x_{var+1}`; `var` is 0-based.
    pub fn var(n: usize, var: usize) -> Self {
        Polynomial::monomial(MultiIndex::unit(n, var), Scalar::one())
    }

    pub fn monomial(alpha: MultiIndex, c: Scalar) -> Self {
        let mut p = Polynomial::zero(alpha.len());
        if !c.is_zero() {
            p.terms.insert(alpha, c);
        }
        p
    }

    /// Builds a polynomial from possibly repeated terms, summing duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, Scalar)>,
    {
        let mut p = Polynomial::zero(n);
        for (alpha, c) in terms {
            p.add_term(alpha, c);
        }
        p
    }

    /// Affine-linear form `c0 + c1*x1 + ... + cn*xn`.
    pub fn linear(constant: Scalar, coefficients: &[Scalar]) -> Self {
        let n = coefficients.len();
        let mut p = Polynomial::constant(n, constant);
        for (i, c) in coefficients.iter().enumerate() {
            p.add_term(MultiIndex::unit(n, i), c.clone());
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(MultiIndex::total)
    }

    /// Degree as a signed integer, `-1` standing in for the zero polynomial.
    pub fn degree_or_neg(&self) -> i64 {
        self.degree().map_or(-1, i64::from)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&MultiIndex, &Scalar)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, alpha: &MultiIndex) -> Scalar {
        self.terms.get(alpha).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn add_term(&mut self, alpha: MultiIndex, c: Scalar) {
        assert_eq!(alpha.len(), self.n, "multi-index length must equal n");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(alpha) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn evaluate(&self, point: &Point) -> Result<Scalar> {
        if point.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: point.dim(),
            });
        }
        Ok(self
            .terms
            .iter()
            .map(|(alpha, c)| c * alpha.evaluate(point.coords()))
            .fold(Scalar::zero(), |acc, v| acc + v))
    }

    /// Sum of the top-degree terms.
    pub fn leading_form(&self) -> Result<Polynomial> {
        let d = self.degree().ok_or(Error::ZeroPolynomial)?;
        Ok(self.homogeneous_part(d))
    }

    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .filter(|(a, _)| a.total() == d)
                .map(|(a, c)| (a.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        match (self.terms.keys().next(), self.terms.keys().next_back()) {
            (Some(lo), Some(hi)) => lo.total() == hi.total(),
            _ => true,
        }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.n);
        }
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(a, v)| (a.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, alpha: &MultiIndex) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(a, v)| (a.mul(alpha), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn parse(text: &str, n: usize) -> Result<Polynomial> {
        parse_polynomial(text, n)
    }

    fn check_dim(&self, other: &Polynomial) {
        assert_eq!(self.n, other.n, "polynomials live in different dimensions");
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (alpha, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if alpha.total() == 0 {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{alpha}")?;
            } else {
                write!(f, "{a}*{alpha}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_dim(rhs);
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.check_dim(rhs);
        let mut out = self.clone();
        for (a, c) in &rhs.terms {
            out.add_term(a.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_dim(rhs);
        let mut out = Polynomial::zero(self.n);
        for (a, c) in &self.terms {
            for (b, d) in &rhs.terms {
                out.add_term(a.mul(b), c * d);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().map(|(a, c)| (a.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: &Polynomial) -> Polynomial {
                (&self).$m(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// All monomials of total degree at most `m` in basis order. A negative
/// degree cap gives the empty basis of the zero space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialBasis {
    n: usize,
    m: i64,
    monomials: Vec<MultiIndex>,
}

impl MonomialBasis {
    pub fn new(n: usize, m: i64) -> Self {
        let monomials = if m < 0 {
            Vec::new()
        } else {
            (0..=m as u32)
                .flat_map(|d| MultiIndex::of_degree(n, d))
                .collect()
        };
        MonomialBasis { n, m, monomials }
    }

    /// A basis over an explicit, already ordered monomial list.
    pub fn from_monomials(n: usize, m: i64, monomials: Vec<MultiIndex>) -> Self {
        MonomialBasis { n, m, monomials }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> i64 {
        self.m
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[MultiIndex] {
        &self.monomials
    }

    pub fn get(&self, i: usize) -> &MultiIndex {
        &self.monomials[i]
    }

    pub fn index_of(&self, alpha: &MultiIndex) -> Option<usize> {
        self.monomials.binary_search(alpha).ok()
    }

    /// Coefficient vector of `p` over this basis; `None` if `p` has support
    /// outside the basis.
    pub fn coordinates(&self, p: &Polynomial) -> Option<Vec<Scalar>> {
        let mut v = vec![Scalar::zero(); self.len()];
        for (a, c) in p.terms() {
            v[self.index_of(a)?] = c.clone();
        }
        Some(v)
    }

    pub fn combine(&self, coefficients: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(
            self.n,
            self.monomials
                .iter()
                .cloned()
                .zip(coefficients.iter().cloned()),
        )
    }
}

pub fn monomial_basis(n: usize, m: i64) -> MonomialBasis {
    MonomialBasis::new(n, m)
}

pub fn parse_polynomial(text: &str, n: usize) -> Result<Polynomial> {
    Parser::new(text, n).parse()
}

/// Largest variable index (1-based) mentioned in `text`, for inferring the
/// ambient dimension of an input file.
pub fn max_variable_index(text: &str) -> usize {
    let mut best = 0;
    for line in text.lines() {
        let line = line.split('#').next().unwrap_or("");
        let bytes = line.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b'x' {
                let mut j = i + 1;
                let mut v = 0usize;
                while j < bytes.len() && bytes[j].is_ascii_digit() {
                    v = v * 10 + (bytes[j] - b'0') as usize;
                    j += 1;
                }
                best = best.max(v);
                i = j;
            } else {
                i += 1;
            }
        }
    }
    best
}

struct Parser {
    toks: Vec<(usize, char)>,
    pos: usize,
    n: usize,
    end: usize,
}

impl Parser {
    fn new(text: &str, n: usize) -> Self {
        let mut toks = Vec::new();
        let mut in_comment = false;
        for (i, ch) in text.char_indices() {
            if in_comment {
                if ch == '\n' {
                    in_comment = false;
                }
                continue;
            }
            if ch == '#' {
                in_comment = true;
            } else if !ch.is_whitespace() {
                toks.push((i, ch));
            }
        }
        Parser {
            toks,
            pos: 0,
            n,
            end: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.toks.get(self.pos).map(|t| t.1)
    }

    fn here(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            position: self.here(),
            message: message.into(),
        })
    }

    fn digits(&mut self) -> Option<String> {
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        (self.pos > start).then(|| self.toks[start..self.pos].iter().map(|t| t.1).collect())
    }

    fn parse(mut self) -> Result<Polynomial> {
        if self.toks.is_empty() {
            return self.err("empty expression");
        }
        let mut p = Polynomial::zero(self.n);
        let mut first = true;
        loop {
            let sign = match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    1
                }
                Some('-') => {
                    self.pos += 1;
                    -1
                }
                Some(_) if first => 1,
                Some(c) => return self.err(format!("expected '+' or '-', found {c:?}")),
                None => break,
            };
            first = false;
            let (alpha, c) = self.term()?;
            p.add_term(alpha, if sign < 0 { -c } else { c });
        }
        Ok(p)
    }

    fn term(&mut self) -> Result<(MultiIndex, Scalar)> {
        let mut coef = Scalar::one();
        let mut exps = vec![0u32; self.n];
        let mut need_factor = false;
        if let Some(num) = self.digits() {
            let mut value: Scalar = Scalar::from_integer(num.parse::<BigInt>().unwrap());
            if self.peek() == Some('/') {
                self.pos += 1;
                let Some(den) = self.digits() else {
                    return self.err("expected denominator after '/'");
                };
                let den: BigInt = den.parse().unwrap();
                if den.is_zero() {
                    return self.err("zero denominator");
                }
                value /= Scalar::from_integer(den);
            }
            coef = value;
            if self.peek() == Some('*') {
                self.pos += 1;
                need_factor = true;
            } else if self.peek() != Some('x') {
                return Ok((MultiIndex::new(exps), coef));
            }
        } else if self.peek() != Some('x') {
            return self.err("expected a coefficient or a variable");
        }
        loop {
            match self.peek() {
                Some('x') => {}
                _ if need_factor => return self.err("expected a variable after '*'"),
                _ => break,
            }
            self.pos += 1;
            let at = self.here();
            let Some(idx) = self.digits() else {
                return self.err("expected a variable index after 'x'");
            };
            let k: usize = idx.parse().map_err(|_| Error::Syntax {
                position: at,
                message: "variable index too large".into(),
            })?;
            if k == 0 || k > self.n {
                return Err(Error::VariableOutOfRange { index: k, n: self.n });
            }
            let mut e = 1u32;
            if self.peek() == Some('^') {
                self.pos += 1;
                let Some(ed) = self.digits() else {
                    return self.err("expected an exponent after '^'");
                };
                e = ed.parse().map_err(|_| Error::Syntax {
                    position: at,
                    message: "exponent too large".into(),
                })?;
            }
            exps[k - 1] += e;
            need_factor = false;
            if self.peek() == Some('*') {
                self.pos += 1;
                need_factor = true;
            }
        }
        Ok((MultiIndex::new(exps), coef))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mi(e: &[u32]) -> MultiIndex {
        MultiIndex::new(e.to_vec())
    }

    #[test]
    fn parse_circle() {
        let p = parse_polynomial("x1^2 + x2^2 - 1", 2).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coefficient(&mi(&[2, 0])), int(1));
        assert_eq!(p.coefficient(&mi(&[0, 2])), int(1));
        assert_eq!(p.coefficient(&mi(&[0, 0])), int(-1));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn parse_zero() {
        let p = parse_polynomial("0", 3).unwrap();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.degree_or_neg(), -1);
    }

    #[test]
    fn parse_rational_coefficients() {
        let p = parse_polynomial("3/2*x1*x2 - x1", 2).unwrap();
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.coefficient(&mi(&[1, 1])), frac(3, 2));
        assert_eq!(p.coefficient(&mi(&[1, 0])), int(-1));
        assert_eq!(p.degree(), Some(2));
    }

    #[test]
    fn parse_comments_and_juxtaposition() {
        let p = parse_polynomial("2x1 x2  # trailing\n + x2^2", 2).unwrap();
        assert_eq!(p.to_string(), "2*x1*x2 + x2^2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_polynomial("x3 + 1", 2),
            Err(Error::VariableOutOfRange { index: 3, n: 2 })
        ));
        match parse_polynomial("x1 + * x2", 2) {
            Err(Error::Syntax { position, .. }) => assert_eq!(position, 5),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_polynomial("1/0", 1).is_err());
        assert!(parse_polynomial("x1*", 1).is_err());
        assert!(parse_polynomial("", 1).is_err());
        assert!(parse_polynomial("x0", 1).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let circle = parse_polynomial("x1^2+x2^2-1", 2).unwrap();
        assert_eq!(circle.evaluate(&Point::from_ints(&[1, 0])).unwrap(), int(0));
        let x1 = Polynomial::var(2, 0);
        let q = Point::new(vec![frac(3, 2), int(5)]);
        assert_eq!(x1.evaluate(&q).unwrap(), frac(3, 2));
        let x1x2 = parse_polynomial("x1*x2", 2).unwrap();
        let q = Point::new(vec![frac(2, 3), frac(3, 2)]);
        assert_eq!(x1x2.evaluate(&q).unwrap(), int(1));
        assert!(matches!(
            x1x2.evaluate(&Point::from_ints(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn leading_form_examples() {
        let p = parse_polynomial("x1^2+x2^2-1", 2).unwrap();
        assert_eq!(p.leading_form().unwrap().to_string(), "x1^2 + x2^2");
        let p = parse_polynomial("x1*x2 + x1 + 1", 2).unwrap();
        assert_eq!(p.leading_form().unwrap().to_string(), "x1*x2");
        let h = parse_polynomial("x1^2 - 3*x1*x2", 2).unwrap();
        assert_eq!(h.leading_form().unwrap(), h);
        assert!(matches!(
            Polynomial::zero(2).leading_form(),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn basis_order_and_size() {
        let b = monomial_basis(2, 1);
        let names: Vec<_> = b.monomials().iter().map(|a| a.to_string()).collect();
        assert_eq!(names, ["1", "x1", "x2"]);
        assert_eq!(monomial_basis(2, 2).len(), 6);
        assert_eq!(monomial_basis(3, 2).len(), 10);
        assert!(monomial_basis(3, -1).is_empty());
        let b = monomial_basis(2, 2);
        let deg2: Vec<_> = b.monomials()[3..].iter().map(|a| a.to_string()).collect();
        assert_eq!(deg2, ["x1^2", "x1*x2", "x2^2"]);
    }

    #[test]
    fn basis_is_ordered_and_downward_closed() {
        for n in 1..=4 {
            for m in 0..=4 {
                let b = monomial_basis(n, m);
                let expected = crate::dimension::binom_e(m, n as u32);
                assert_eq!(b.len() as u64, expected);
                assert!(b.monomials().windows(2).all(|w| w[0] < w[1]));
                for (i, a) in b.monomials().iter().enumerate() {
                    for (j, c) in b.monomials().iter().enumerate() {
                        if c != a && c.divides(a) {
                            assert!(j < i);
                        }
                    }
                }
            }
        }
    }

    fn arb_poly(n: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
        let basis = monomial_basis(n, max_deg as i64);
        let len = basis.len();
        proptest::collection::vec((-4i64..=4, 1i64..=3), len).prop_map(move |cs| {
            basis.combine(
                &cs.iter()
                    .map(|&(a, b)| frac(a, b))
                    .collect::<Vec<_>>(),
            )
        })
    }

    fn arb_point(n: usize) -> impl Strategy<Value = Point> {
        proptest::collection::vec((-5i64..=5, 1i64..=4), n)
            .prop_map(|cs| Point::new(cs.iter().map(|&(a, b)| frac(a, b)).collect()))
    }

    proptest! {
        #[test]
        fn ring_axioms(p in arb_poly(2, 2), q in arb_poly(2, 2), r in arb_poly(2, 2)) {
            prop_assert_eq!(&(&p + &q) * &r, &(&p * &r) + &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert!((&p - &p).is_zero());
            if !p.is_zero() && !q.is_zero() {
                prop_assert_eq!((&p * &q).degree().unwrap(), p.degree().unwrap() + q.degree().unwrap());
                prop_assert_eq!(
                    (&p * &q).leading_form().unwrap(),
                    &p.leading_form().unwrap() * &q.leading_form().unwrap()
                );
            }
        }

        #[test]
        fn evaluate_is_homomorphism(p in arb_poly(3, 2), q in arb_poly(3, 2), x in arb_point(3)) {
            let (pv, qv) = (p.evaluate(&x).unwrap(), q.evaluate(&x).unwrap());
            prop_assert_eq!((&p * &q).evaluate(&x).unwrap(), &pv * &qv);
            prop_assert_eq!((&p + &q).evaluate(&x).unwrap(), pv + qv);
        }

        #[test]
        fn print_parse_roundtrip(p in arb_poly(3, 3)) {
            prop_assert_eq!(parse_polynomial(&p.to_string(), 3).unwrap(), p);
        }

        #[test]
        fn leading_form_splits_degree(p in arb_poly(2, 3)) {
            prop_assume!(!p.is_zero());
            let lf = p.leading_form().unwrap();
            prop_assert!(lf.is_homogeneous());
            let rest = &p - &lf;
            prop_assert!(rest.degree_or_neg() < p.degree_or_neg());
        }
    }
}
