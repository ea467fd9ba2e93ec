use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A pair `nu = (nu1, nu2)` with `nu1 >= nu2 >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    v1: u32,
    v2: u32,
}

impl BiPartition {
    pub fn new(v1: u32, v2: u32) -> Result<Self> {
        if v1 < v2 {
            return Err(Error::InvalidIndex(format!("({v1},{v2}) is not a partition: need nu1 >= nu2")));
        }
        Ok(Self { v1, v2 })
    }

    /// Panics unless `v1 >= v2`; for literals in code and tests.
    pub fn of(v1: u32, v2: u32) -> Self {
        Self::new(v1, v2).expect("nu1 >= nu2")
    }

    pub fn v1(&self) -> u32 {
        self.v1
    }

    pub fn v2(&self) -> u32 {
        self.v2
    }

    /// `|nu| = nu1 + nu2`.
    pub fn size(&self) -> u32 {
        self.v1 + self.v2
    }

    /// `nu1 - nu2`, the degree of the harmonic part of `V_nu`.
    pub fn diff(&self) -> u32 {
        self.v1 - self.v2
    }

    /// Membership in `Lambda*_n`: `nu2 >= floor(|nu|/2) - n`, equivalently
    /// `nu1 - nu2 <= 2n + 1`.
    pub fn in_lambda_star(&self, n: usize) -> bool {
        self.diff() as usize <= 2 * n + 1
    }

    /// All partitions of `k`, by increasing `nu2`.
    pub fn of_size(k: u32) -> impl Iterator<Item = BiPartition> {
        (0..=k / 2).map(move |v2| BiPartition { v1: k - v2, v2 })
    }

    /// All partitions with `|nu| <= d`, by size then `nu2`.
    pub fn up_to(d: u32) -> impl Iterator<Item = BiPartition> {
        (0..=d).flat_map(Self::of_size)
    }

    /// Members of `Lambda*_n` of size `k`, by increasing `nu2`.
    pub fn lambda_star_of_size(k: u32, n: usize) -> impl Iterator<Item = BiPartition> {
        Self::of_size(k).filter(move |p| p.in_lambda_star(n))
    }
}

impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.v1, self.v2)
    }
}

/// Parses `"a,b"` (surrounding parentheses allowed).
impl FromStr for BiPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let bad = || Error::InvalidIndex(format!("expected \"a,b\", got {s:?}"));
        let (a, b) = t.split_once(',').ok_or_else(bad)?;
        let a = a.trim().parse().map_err(|_| bad())?;
        let b = b.trim().parse().map_err(|_| bad())?;
        Self::new(a, b)
    }
}

/// `l_nu = min(nu1 - nu2, 2n + 1 - (nu1 - nu2))`; requires `nu` in `Lambda*_n`.
pub fn ell(nu: BiPartition, n: usize) -> usize {
    let d = nu.diff() as usize;
    assert!(d <= 2 * n + 1, "{nu} is outside Lambda*_{n}");
    d.min(2 * n + 1 - d)
}

/// Index `(i, 0)` of a harmonic component, `0 <= i <= 2n + 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarmonicIndex {
    i: u32,
}

impl HarmonicIndex {
    pub fn new(i: u32, n: usize) -> Result<Self> {
        if i as usize > 2 * n + 1 {
            return Err(Error::InvalidIndex(format!("harmonic index {i} exceeds 2n+1 = {}", 2 * n + 1)));
        }
        Ok(Self { i })
    }

    pub fn get(&self) -> u32 {
        self.i
    }

    pub fn partition(&self) -> BiPartition {
        BiPartition { v1: self.i, v2: 0 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_validate() {
        assert_eq!("2,1".parse::<BiPartition>().unwrap(), BiPartition::of(2, 1));
        assert_eq!("(3, 0)".parse::<BiPartition>().unwrap(), BiPartition::of(3, 0));
        assert!("1,2".parse::<BiPartition>().is_err());
        assert!("1;2".parse::<BiPartition>().is_err());
        assert!("x,1".parse::<BiPartition>().is_err());
    }

    #[test]
    fn ell_values() {
        assert_eq!(ell(BiPartition::of(0, 0), 1), 0);
        assert_eq!(ell(BiPartition::of(2, 0), 1), 1);
        assert_eq!(ell(BiPartition::of(3, 0), 1), 0);
    }

    #[test]
    fn lambda_star_counts() {
        for n in 1..=3 {
            for k in 0..=10u32 {
                let c = BiPartition::lambda_star_of_size(k, n).count();
                assert_eq!(c, (k as usize / 2).min(n) + 1);
            }
        }
        assert!(!BiPartition::of(4, 0).in_lambda_star(1));
        assert!(BiPartition::of(2, 1).in_lambda_star(1));
    }
}
