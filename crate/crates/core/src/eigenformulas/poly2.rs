use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::exact_linalg::{format_rational, Rational};

/// Polynomial in two variables `x`, `y` over the rationals, stored as a map
/// from exponent pairs `(a, b)` (for `x^a y^b`) to nonzero coefficients.
///
/// Used for the symmetric interpolation polynomials and for eigenvalues as
/// functions of `x = mu1 - (n + 1/2)`, `y = mu2`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SymPoly2 {
    terms: BTreeMap<(u32, u32), Rational>,
}

impl SymPoly2 {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn x() -> Self {
        Self::monomial(1, 0, Rational::one())
    }

    pub fn y() -> Self {
        Self::monomial(0, 1, Rational::one())
    }

    /// `c * x^a * y^b`.
    pub fn monomial(a: u32, b: u32, c: Rational) -> Self {
        let mut p = Self::zero();
        p.add_term(a, b, c);
        p
    }

    /// The monomial symmetric polynomial `m_(a,b)`: `x^a y^b + x^b y^a` for
    /// `a != b`, `x^a y^a` otherwise.
    pub fn monomial_symmetric(a: u32, b: u32) -> Self {
        let mut p = Self::monomial(a, b, Rational::one());
        if a != b {
            p.add_term(b, a, Rational::one());
        }
        p
    }

    pub fn add_term(&mut self, a: u32, b: u32, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: u32, b: u32) -> Rational {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|(a, b)| a + b).max()
    }

    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(&(a, b), c)| self.coeff(b, a) == *c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(a, b), c) in &other.terms {
            out.add_term(a, b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, c)| (*k, c * s)).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a + a2, b + b2, c * c2);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Falling factorial `p (p-1) ... (p-i+1)`.
    pub fn falling(&self, i: u32) -> Self {
        let mut acc = Self::one();
        for t in 0..i {
            acc = acc.mul(&self.sub(&Self::constant(Rational::from_integer(t.into()))));
        }
        acc
    }

    pub fn eval(&self, x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(a, b), c) in &self.terms {
            acc += c * crate::exact_linalg::pow(x, a) * crate::exact_linalg::pow(y, b);
        }
        acc
    }

    /// `p(sx, sy)` for polynomials `sx`, `sy`.
    pub fn substitute(&self, sx: &Self, sy: &Self) -> Self {
        let mut out = Self::zero();
        for (&(a, b), c) in &self.terms {
            out = out.add(&sx.pow(a).mul(&sy.pow(b)).scale(c));
        }
        out
    }
}

/// Renders by descending total degree, e.g. `x*y + x + y + 3/2`.
impl fmt::Display for SymPoly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut keys: Vec<&(u32, u32)> = self.terms.keys().collect();
        keys.sort_by(|p, q| (q.0 + q.1).cmp(&(p.0 + p.1)).then(q.0.cmp(&p.0)));
        for (idx, &&(a, b)) in keys.iter().enumerate() {
            let c = &self.terms[&(a, b)];
            let sign = if c.is_negative() { "-" } else { "+" };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mut factors = Vec::new();
            let abs = c.abs();
            if !abs.is_one() || (a == 0 && b == 0) {
                factors.push(format_rational(&abs));
            }
            match a {
                0 => {}
                1 => factors.push("x".into()),
                _ => factors.push(format!("x^{a}")),
            }
            match b {
                0 => {}
                1 => factors.push("y".into()),
                _ => factors.push(format!("y^{b}")),
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{rat, ratio};

    #[test]
    fn arithmetic_and_display() {
        let p = SymPoly2::x().add(&SymPoly2::y()).add(&SymPoly2::constant(ratio(3, 2)));
        assert_eq!(p.to_string(), "x + y + 3/2");
        assert!(p.is_symmetric());
        let q = p.mul(&SymPoly2::x());
        assert!(!q.is_symmetric());
        assert_eq!(q.total_degree(), Some(2));
        assert_eq!(q.eval(&rat(2), &rat(1)), rat(9));
    }

    #[test]
    fn shift_substitution() {
        let p = SymPoly2::x().mul(&SymPoly2::y());
        let s = p.substitute(
            &SymPoly2::x().sub(&SymPoly2::one()),
            &SymPoly2::y().sub(&SymPoly2::one()),
        );
        assert_eq!(s.eval(&rat(3), &rat(5)), rat(8));
    }

    #[test]
    fn falling_matches_scalar() {
        let p = SymPoly2::x().falling(3);
        assert_eq!(p.eval(&ratio(3, 2), &rat(0)), crate::exact_linalg::falling_factorial(&ratio(3, 2), 3));
    }
}
