//! The superpolynomial algebra on `C^{1|2n}`: one even generator `y` and odd
//! generators `x1, ..., x2n`.
//!
//! Monomials are stored in normal form `y^a * x_{s1} * ... * x_{sm}` with
//! `s1 < ... < sm`; products are brought back to normal form by counting
//! inversions. The odd part of a monomial is a bit set (bit `i-1` is `x_i`),
//! which caps `2n` at 64.
//!
//! Basis order within a degree is fixed once here and every matrix in the
//! crate depends on it: increasing number of odd factors (so decreasing
//! power of `y`), then the odd index sets in lexicographic order. For `n = 1`
//! and degree 2 this is `[y^2, y*x1, y*x2, x1*x2]`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use itertools::Itertools;
use num_traits::{One, Signed, Zero};

use crate::exact_linalg::{falling_factorial, format_rational, rat, Rational};
use crate::error::{Error, Result};

/// The rank parameter `n`; the odd dimension is `2n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceParams {
    n: usize,
}

impl SpaceParams {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 || 2 * n > 64 {
            return Err(Error::InvalidIndex(format!("n must satisfy 1 <= n <= 32, got {n}")));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn odd_dim(&self) -> usize {
        2 * self.n
    }
}

/// Parity in the `Z/2` grading.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(count: usize) -> Self {
        if count.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn add(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// `(-1)^{|a||b|}`.
    pub fn sign_with(self, other: Parity) -> i64 {
        if self.is_odd() && other.is_odd() {
            -1
        } else {
            1
        }
    }
}

/// `y^a * x_S` with `S` a strictly increasing subset of `{1, ..., 2n}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SuperMonomial {
    y_exp: u32,
    odd: u64,
}

impl SuperMonomial {
    pub fn one() -> Self {
        Self { y_exp: 0, odd: 0 }
    }

    pub fn y_pow(a: u32) -> Self {
        Self { y_exp: a, odd: 0 }
    }

    /// The odd generator `x_i` (1-based).
    pub fn x(i: usize) -> Self {
        assert!((1..=64).contains(&i), "odd index out of range");
        Self { y_exp: 0, odd: 1 << (i - 1) }
    }

    /// Builds `y^a * x_{s1} ... x_{sm}` from a strictly increasing 1-based index list.
    pub fn new(y_exp: u32, odd: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        let mut last = 0;
        for &i in odd {
            if i <= last || i > 64 {
                return Err(Error::InvalidIndex(format!(
                    "odd index list must be strictly increasing within 1..=64: {odd:?}"
                )));
            }
            bits |= 1 << (i - 1);
            last = i;
        }
        Ok(Self { y_exp, odd: bits })
    }

    pub fn y_exp(&self) -> u32 {
        self.y_exp
    }

    pub fn odd_bits(&self) -> u64 {
        self.odd
    }

    pub fn odd_len(&self) -> usize {
        self.odd.count_ones() as usize
    }

    /// Odd indices in increasing order, 1-based.
    pub fn odd_indices(&self) -> Vec<usize> {
        (0..64).filter(|b| self.odd >> b & 1 == 1).map(|b| b + 1).collect()
    }

    pub fn contains_odd(&self, i: usize) -> bool {
        self.odd >> (i - 1) & 1 == 1
    }

    pub fn degree(&self) -> usize {
        self.y_exp as usize + self.odd_len()
    }

    pub fn parity(&self) -> Parity {
        Parity::from_count(self.odd_len())
    }

    fn max_odd_index(&self) -> usize {
        64 - self.odd.leading_zeros() as usize
    }
}

impl Ord for SuperMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.odd_len().cmp(&other.odd_len()))
            .then_with(|| {
                let diff = self.odd ^ other.odd;
                if diff == 0 {
                    Ordering::Equal
                } else if self.odd & diff & diff.wrapping_neg() != 0 {
                    // the lowest differing index belongs to self
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            })
    }
}

impl PartialOrd for SuperMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Product of two monomials: `None` when an odd variable repeats, otherwise the
/// sign `(-1)^inv` of the reordering and the merged monomial.
pub fn mono_mul(a: &SuperMonomial, b: &SuperMonomial) -> Option<(i64, SuperMonomial)> {
    if a.odd & b.odd != 0 {
        return None;
    }
    // pairs (i in a, j in b) with i > j
    let mut inv = 0u32;
    let mut rest = b.odd;
    while rest != 0 {
        let j = rest.trailing_zeros();
        let above = if j == 63 { 0 } else { a.odd >> (j + 1) };
        inv += above.count_ones();
        rest &= rest - 1;
    }
    let sign = if inv.is_multiple_of(2) { 1 } else { -1 };
    Some((sign, SuperMonomial { y_exp: a.y_exp + b.y_exp, odd: a.odd | b.odd }))
}

/// Applies the constant-coefficient operator `d` to the monomial `m`.
///
/// The derivative monomial with `y`-exponent `a` and odd set `{s1 < ... < sm}`
/// stands for `dy^a * d_{sm} * ... * d_{s1}`, so `d_{s1}` acts first; with this
/// convention `<d_S, x_S> = 1`.
pub fn apply_derivative(d: &SuperMonomial, m: &SuperMonomial) -> Option<(Rational, SuperMonomial)> {
    if d.odd & !m.odd != 0 || d.y_exp > m.y_exp {
        return None;
    }
    let mut sign_exp = 0u32;
    let mut remaining = m.odd;
    let mut ds = d.odd;
    while ds != 0 {
        let s = ds.trailing_zeros();
        let below = remaining & ((1u64 << s) - 1);
        sign_exp += below.count_ones();
        remaining &= !(1u64 << s);
        ds &= ds - 1;
    }
    let mut coeff = falling_factorial(&rat(m.y_exp as i64), d.y_exp);
    if sign_exp % 2 == 1 {
        coeff = -coeff;
    }
    Some((coeff, SuperMonomial { y_exp: m.y_exp - d.y_exp, odd: remaining }))
}

/// `<d, m>`: constant term of `d(m)`; nonzero only for `d` and `m` of the same shape.
pub fn pairing(d: &SuperMonomial, m: &SuperMonomial) -> Rational {
    if d == m {
        falling_factorial(&rat(m.y_exp as i64), m.y_exp)
    } else {
        Rational::zero()
    }
}

/// Number of monomials of total degree `k`.
pub fn degree_dim(k: usize, params: &SpaceParams) -> usize {
    let m = params.odd_dim();
    (0..=k.min(m)).map(|j| binomial(m, j)).sum()
}

fn binomial(m: usize, j: usize) -> usize {
    (0..j).fold(1usize, |acc, i| acc * (m - i) / (i + 1))
}

/// All monomials of total degree `k` in the fixed basis order.
pub fn degree_basis(k: usize, params: &SpaceParams) -> Vec<SuperMonomial> {
    let m = params.odd_dim();
    let mut out = Vec::with_capacity(degree_dim(k, params));
    for j in 0..=k.min(m) {
        for combo in (0..m).combinations(j) {
            let bits = combo.iter().fold(0u64, |acc, &b| acc | 1 << b);
            out.push(SuperMonomial { y_exp: (k - j) as u32, odd: bits });
        }
    }
    out
}

/// A degree basis with reverse lookup.
#[derive(Debug, Clone)]
pub struct DegreeBasis {
    degree: usize,
    monomials: Vec<SuperMonomial>,
    index: HashMap<SuperMonomial, usize>,
}

impl DegreeBasis {
    pub fn new(k: usize, params: &SpaceParams) -> Self {
        let monomials = degree_basis(k, params);
        let index = monomials.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Self { degree: k, monomials, index }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[SuperMonomial] {
        &self.monomials
    }

    pub fn position(&self, m: &SuperMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }
}

/// Finite rational combination of monomials on `C^{1|2n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperPoly {
    params: SpaceParams,
    terms: BTreeMap<SuperMonomial, Rational>,
}

impl SuperPoly {
    pub fn zero(params: SpaceParams) -> Self {
        Self { params, terms: BTreeMap::new() }
    }

    pub fn one(params: SpaceParams) -> Self {
        Self::monomial(params, SuperMonomial::one(), Rational::one())
    }

    pub fn monomial(params: SpaceParams, m: SuperMonomial, c: Rational) -> Self {
        assert!(m.max_odd_index() <= params.odd_dim(), "monomial uses an odd index beyond 2n");
        let mut p = Self::zero(params);
        p.add_term(m, c);
        p
    }

    pub fn y(params: SpaceParams) -> Self {
        Self::monomial(params, SuperMonomial::y_pow(1), Rational::one())
    }

    pub fn x(params: SpaceParams, i: usize) -> Self {
        Self::monomial(params, SuperMonomial::x(i), Rational::one())
    }

    pub fn constant(params: SpaceParams, c: Rational) -> Self {
        Self::monomial(params, SuperMonomial::one(), c)
    }

    pub fn params(&self) -> SpaceParams {
        self.params
    }

    pub fn terms(&self) -> impl Iterator<Item = (&SuperMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &SuperMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: SuperMonomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero(self.params);
        }
        Self { params: self.params, terms: self.terms.iter().map(|(m, c)| (*m, c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.params);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some((sign, m)) = mono_mul(a, b) {
                    let c = ca * cb;
                    out.add_term(m, if sign < 0 { -c } else { c });
                }
            }
        }
        out
    }

    /// Multiplies on the left by the monomial `m` with coefficient `c`.
    pub fn mul_monomial_left(&self, m: &SuperMonomial, c: &Rational) -> Self {
        let mut out = Self::zero(self.params);
        for (b, cb) in &self.terms {
            if let Some((sign, prod)) = mono_mul(m, b) {
                let v = c * cb;
                out.add_term(prod, if sign < 0 { -v } else { v });
            }
        }
        out
    }

    pub fn derive_y(&self) -> Self {
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if m.y_exp > 0 {
                out.add_term(
                    SuperMonomial { y_exp: m.y_exp - 1, odd: m.odd },
                    c * rat(m.y_exp as i64),
                );
            }
        }
        out
    }

    /// Left superderivation `d_i` (1-based).
    pub fn derive_odd(&self, i: usize) -> Result<Self> {
        let max = self.params.odd_dim();
        if i == 0 || i > max {
            return Err(Error::OddIndexOutOfRange { index: i, max });
        }
        let bit = 1u64 << (i - 1);
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if m.odd & bit == 0 {
                continue;
            }
            let before = (m.odd & (bit - 1)).count_ones();
            let v = if before.is_multiple_of(2) { c.clone() } else { -c.clone() };
            out.add_term(SuperMonomial { y_exp: m.y_exp, odd: m.odd & !bit }, v);
        }
        Ok(out)
    }

    /// Applies the constant-coefficient operator `d` (see [`apply_derivative`]).
    pub fn apply_derivative(&self, d: &SuperMonomial) -> Self {
        let mut out = Self::zero(self.params);
        for (m, c) in &self.terms {
            if let Some((k, r)) = apply_derivative(d, m) {
                out.add_term(r, k * c);
            }
        }
        out
    }

    /// Degree if homogeneous; the zero polynomial is homogeneous of every degree
    /// and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Parity when all terms share it.
    pub fn parity(&self) -> Option<Parity> {
        let mut it = self.terms.keys();
        let p = it.next().map_or(Parity::Even, SuperMonomial::parity);
        it.all(|m| m.parity() == p).then_some(p)
    }

    /// Splits into homogeneous pieces keyed by degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<usize, SuperPoly> {
        let mut parts: BTreeMap<usize, SuperPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts.entry(m.degree()).or_insert_with(|| Self::zero(self.params)).add_term(*m, c.clone());
        }
        parts
    }

    /// Coordinates with respect to the degree-`k` basis.
    pub fn to_vector(&self, basis: &DegreeBasis) -> Result<Vec<Rational>> {
        let mut v = vec![Rational::zero(); basis.len()];
        for (m, c) in &self.terms {
            let pos = basis.position(m).ok_or(Error::NonHomogeneous(basis.degree()))?;
            v[pos] = c.clone();
        }
        Ok(v)
    }

    pub fn from_vector(params: SpaceParams, basis: &DegreeBasis, v: &[Rational]) -> Self {
        assert_eq!(v.len(), basis.len(), "coordinate vector length mismatch");
        let mut p = Self::zero(params);
        for (m, c) in basis.monomials().iter().zip(v) {
            p.add_term(*m, c.clone());
        }
        p
    }
}

impl fmt::Display for SuperMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut factors = Vec::new();
        match self.y_exp {
            0 => {}
            1 => factors.push("y".to_string()),
            a => factors.push(format!("y^{a}")),
        }
        factors.extend(self.odd_indices().into_iter().map(|i| format!("x{i}")));
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// Renders in normal form, highest degree first, e.g. `y^3 + 3*y*x1*x2`.
impl fmt::Display for SuperPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then(a.cmp(b)));
        for (k, (m, c)) in ordered.into_iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let is_unit = *m == SuperMonomial::one();
            if abs.is_one() && !is_unit {
                write!(f, "{m}")?;
            } else if is_unit {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                write!(f, "{}*{m}", format_rational(&abs))?;
            }
        }
        Ok(())
    }
}
