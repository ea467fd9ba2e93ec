use crate::eigenformulas::BiPartition;
use crate::error::{Error, Result};

/// The row index set `Lambda_{d,n}` (pairs with `|mu| <= d`, `mu2 <= n`) and
/// the column index set `Lambda*_{d,n}`, each in its fixed total order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexSets {
    pub d: u32,
    pub n: usize,
    /// Ordered by `(mu2, mu1)`.
    pub lam: Vec<BiPartition>,
    /// Ordered by `(floor((nu1 - nu2)/2), |nu|)`.
    pub lam_star: Vec<BiPartition>,
}

/// Sort key of the column order.
pub fn star_key(nu: &BiPartition) -> (u32, u32) {
    (nu.diff() / 2, nu.size())
}

pub fn index_sets(d: u32, n: usize) -> IndexSets {
    let mut lam: Vec<BiPartition> = BiPartition::up_to(d).filter(|m| m.v2() as usize <= n).collect();
    lam.sort_by_key(|m| (m.v2(), m.v1()));
    let mut lam_star: Vec<BiPartition> = BiPartition::up_to(d).filter(|m| m.in_lambda_star(n)).collect();
    lam_star.sort_by_key(star_key);
    IndexSets { d, n, lam, lam_star }
}

/// `min(floor(d/2), n)`, the largest admissible `j`.
pub fn max_j(d: u32, n: usize) -> usize {
    (d as usize / 2).min(n)
}

/// The `j`-restricted index sets and their boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetsJ {
    pub j: usize,
    /// `mu2 >= j`.
    pub lam: Vec<BiPartition>,
    /// `nu2 <= floor(|nu|/2) - j`.
    pub lam_star: Vec<BiPartition>,
    /// `{(m, j) : j <= m <= d - j}`.
    pub boundary: Vec<BiPartition>,
    /// `{(k - floor(k/2) + j, floor(k/2) - j) : 2j <= k <= d}`.
    pub boundary_star: Vec<BiPartition>,
}

pub fn subsets_j(d: u32, n: usize, j: usize) -> Result<SubsetsJ> {
    if j > max_j(d, n) {
        return Err(Error::InvalidIndex(format!("j = {j} exceeds min(floor(d/2), n) = {}", max_j(d, n))));
    }
    let sets = index_sets(d, n);
    let ju = j as u32;
    let lam = sets.lam.iter().copied().filter(|m| m.v2() >= ju).collect();
    let lam_star = sets
        .lam_star
        .iter()
        .copied()
        .filter(|v| v.v2() as i64 <= (v.size() / 2) as i64 - j as i64)
        .collect();
    let boundary = (ju..=d - ju).map(|m| BiPartition::of(m, ju)).collect();
    let boundary_star = (2 * ju..=d).map(|k| BiPartition::of(k - k / 2 + ju, k / 2 - ju)).collect();
    Ok(SubsetsJ { j, lam, lam_star, boundary, boundary_star })
}

/// `nu_(j) = (|nu| - floor(|nu|/2) + j, floor(|nu|/2) - j)`.
pub fn nu_sub_j(nu: BiPartition, j: usize) -> Result<BiPartition> {
    let half = nu.size() / 2;
    if j as u32 > half {
        return Err(Error::InvalidIndex(format!("j = {j} exceeds floor(|{nu}|/2) = {half}")));
    }
    Ok(BiPartition::of(nu.size() - half + j as u32, half - j as u32))
}
