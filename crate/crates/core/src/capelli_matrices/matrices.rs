use num_traits::{One, Zero};

use crate::eigenformulas::{ell, BiPartition};
use crate::error::{Error, Result};
use crate::exact_linalg::{pow, rat, vandermonde_det, PolyMatrix, RatMatrix, Rational, UniPoly};

use super::index::{index_sets, max_j, nu_sub_j, subsets_j};

fn ell_r(nu: BiPartition, n: usize) -> Rational {
    rat(ell(nu, n) as i64)
}

/// `lambda_{mu,nu}(x) = ((2x+1) l_nu - l_nu^2)^{mu2} |nu|^{mu1 - mu2}`, the
/// scalar of `C^{mu2} Z^{mu1 - mu2}` on `V_nu` when `x = n`.
pub fn lambda_entry(mu: BiPartition, nu: BiPartition, n: usize) -> UniPoly {
    let l = ell_r(nu, n);
    let base = UniPoly::linear(&l * rat(2), &l - &l * &l);
    base.pow(mu.v2()).scale(&pow(&rat(nu.size() as i64), mu.diff()))
}

/// `M_d = [lambda_{mu,nu}]`, rows over `Lambda_{d,n}`, columns over `Lambda*_{d,n}`.
pub fn build_md(d: u32, n: usize) -> PolyMatrix {
    let s = index_sets(d, n);
    PolyMatrix::from_fn(s.lam.len(), s.lam_star.len(), |i, j| lambda_entry(s.lam[i], s.lam_star[j], n))
}

/// `M_d' = [(2 l_nu)^{mu2} |nu|^{mu1 - mu2}]`.
pub fn build_md_prime(d: u32, n: usize) -> RatMatrix {
    let s = index_sets(d, n);
    RatMatrix::from_fn(s.lam.len(), s.lam_star.len(), |i, j| {
        let (mu, nu) = (s.lam[i], s.lam_star[j]);
        pow(&(ell_r(nu, n) * rat(2)), mu.v2()) * pow(&rat(nu.size() as i64), mu.diff())
    })
}

/// `S_{mu,nu,j}`: with `t_{-1} = mu2`, the sum over
/// `t_m` from `j - 1 - m` to `t_{m-1} - 1` (`0 <= m < j`) of
/// `prod_m l_{nu_(m)}^{t_{m-1} - 1 - t_m} * l_nu^{t_{j-1}}`.
///
/// For `j = 0` this is `l_nu^{mu2}`, and it equals 1 when `mu2 = j`.
pub fn s_value(mu: BiPartition, nu: BiPartition, j: usize, n: usize) -> Result<Rational> {
    let ells = (0..j)
        .map(|m| nu_sub_j(nu, m).map(|p| ell_r(p, n)))
        .collect::<Result<Vec<_>>>()?;
    Ok(s_rec(0, mu.v2() as i64, j, &ells, &ell_r(nu, n)))
}

fn s_rec(m: usize, prev: i64, j: usize, ells: &[Rational], l_nu: &Rational) -> Rational {
    if m == j {
        return pow(l_nu, prev as u32);
    }
    let lo = (j - 1 - m) as i64;
    let mut acc = Rational::zero();
    for t in lo..prev {
        let f = pow(&ells[m], (prev - 1 - t) as u32);
        if !f.is_zero() {
            acc += f * s_rec(m + 1, t, j, ells, l_nu);
        }
    }
    acc
}

/// `N_j = [2^{mu2 - j} |nu|^{mu1 - mu2} S_{mu,nu,j}]` over the `j`-restricted sets.
pub fn build_nj(d: u32, n: usize, j: usize) -> Result<RatMatrix> {
    let s = subsets_j(d, n, j)?;
    let mut m = RatMatrix::zeros(s.lam.len(), s.lam_star.len());
    for (r, &mu) in s.lam.iter().enumerate() {
        for (c, &nu) in s.lam_star.iter().enumerate() {
            m[(r, c)] = pow(&rat(2), mu.v2() - j as u32)
                * pow(&rat(nu.size() as i64), mu.diff())
                * s_value(mu, nu, j, n)?;
        }
    }
    Ok(m)
}

fn vandermonde_range(from: u32, to: u32) -> Rational {
    let pts: Vec<Rational> = (from..=to).map(|k| rat(k as i64)).collect();
    vandermonde_det(&pts)
}

/// The factor contributed by one step `N_j -> N_{j+1}`:
/// `det V(2j, ..., d) * prod_{nu in Lambda*_{d,n,j+1}} 2 (l_nu - l_{nu_(j)})`.
pub fn nj_step_factor(d: u32, n: usize, j: usize) -> Result<Rational> {
    let next = subsets_j(d, n, j + 1)?;
    let mut f = vandermonde_range(2 * j as u32, d);
    for &nu in &next.lam_star {
        f *= rat(2) * (ell_r(nu, n) - ell_r(nu_sub_j(nu, j)?, n));
    }
    Ok(f)
}

/// `det M_d'` in closed form, with the product over `j = 0 .. min(floor(d/2), n) - 1`.
pub fn det_md_prime_closed(d: u32, n: usize) -> Result<Rational> {
    let m = max_j(d, n);
    let mut a = Rational::one();
    for j in 0..m {
        a *= nj_step_factor(d, n, j)?;
    }
    Ok(a * vandermonde_range(2 * m as u32, d))
}

/// Pairs `(nu, nu')` of size `k` in `Lambda*_n` with `l_nu' < l_nu` and
/// `l_nu + l_nu' - 1 = s`.
pub fn g_k(k: u32, s: usize, n: usize) -> usize {
    let members: Vec<BiPartition> = BiPartition::lambda_star_of_size(k, n).collect();
    let mut count = 0;
    for &a in &members {
        for &b in &members {
            let (la, lb) = (ell(a, n), ell(b, n));
            if lb < la && la + lb == s + 1 {
                count += 1;
            }
        }
    }
    count
}

/// `f(d,s) = sum_{k <= d} g_k(s)`.
pub fn f_ds(d: u32, s: usize, n: usize) -> usize {
    (0..=d).map(|k| g_k(k, s, n)).sum()
}

/// `M_{d,s}` and the columns that were modified, as `(column, nu')` with the
/// column of `nu'` subtracted.
#[derive(Debug, Clone)]
pub struct Mds {
    pub matrix: PolyMatrix,
    pub modified: Vec<(usize, BiPartition)>,
}

/// Replaces the column of `nu` by `lambda_{., nu} - lambda_{., nu'}` whenever
/// a partner `nu'` with `|nu'| = |nu|`, `l_nu' < l_nu`, `l_nu + l_nu' - 1 = s` exists.
pub fn build_mds(d: u32, n: usize, s: usize) -> Result<Mds> {
    if n == 0 || s > 2 * n - 2 {
        return Err(Error::InvalidIndex(format!("s = {s} outside 0..=2n-2")));
    }
    let sets = index_sets(d, n);
    let mut matrix = build_md(d, n);
    let mut modified = Vec::new();
    for (c, &nu) in sets.lam_star.iter().enumerate() {
        let ln = ell(nu, n);
        let partners: Vec<BiPartition> = sets
            .lam_star
            .iter()
            .copied()
            .filter(|p| p.size() == nu.size() && ell(*p, n) < ln && ell(*p, n) + ln == s + 1)
            .collect();
        match partners.as_slice() {
            [] => {}
            [p] => {
                for (r, &mu) in sets.lam.iter().enumerate() {
                    matrix[(r, c)] = &lambda_entry(mu, nu, n) - &lambda_entry(mu, *p, n);
                }
                modified.push((c, *p));
            }
            _ => return Err(Error::Verification(format!("column {nu} has several partners for s = {s}"))),
        }
    }
    Ok(Mds { matrix, modified })
}

/// Outcome of comparing `det M_d` with `det M_d' * prod_s (x - s/2)^{f(d,s)}`.
#[derive(Debug, Clone)]
pub struct FactorizationReport {
    pub d: u32,
    pub n: usize,
    pub det_md: UniPoly,
    pub det_md_prime: Rational,
    /// `(s, f(d,s))` for `s = 0 ..= 2n-2`.
    pub factors: Vec<(usize, usize)>,
    pub product: UniPoly,
    pub degree_sum: usize,
    pub failures: Vec<String>,
}

impl FactorizationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn factorization_check(d: u32, n: usize) -> FactorizationReport {
    let det_md = build_md(d, n).det();
    let det_md_prime = build_md_prime(d, n).det();
    let factors: Vec<(usize, usize)> = (0..=2 * n - 2).map(|s| (s, f_ds(d, s, n))).collect();
    let mut product = UniPoly::constant(det_md_prime.clone());
    for &(s, f) in &factors {
        let lin = UniPoly::linear(Rational::one(), -rat(s as i64) / rat(2));
        product = &product * &lin.pow(f as u32);
    }
    let degree_sum: usize = index_sets(d, n).lam.iter().map(|m| m.v2() as usize).sum();
    let mut failures = Vec::new();
    if det_md != product {
        failures.push(format!("det M_d = {det_md} but the factored form is {product}"));
    }
    if det_md.degree() != Some(degree_sum) {
        failures.push(format!("deg det M_d = {:?}, expected {degree_sum}", det_md.degree()));
    }
    match det_md.exact_div(&UniPoly::constant(det_md_prime.clone())) {
        Ok(p) if p.is_monic() => {}
        _ => failures.push("det M_d / det M_d' is not monic".into()),
    }
    let f_total: usize = factors.iter().map(|&(_, f)| f).sum();
    if f_total != degree_sum {
        failures.push(format!("sum_s f(d,s) = {f_total}, sum mu2 = {degree_sum}"));
    }
    FactorizationReport { d, n, det_md, det_md_prime, factors, product, degree_sum, failures }
}

/// `det M_d` at `x = n`; errors if it vanishes.
pub fn det_nonvanishing(d: u32, n: usize) -> Result<Rational> {
    let v = build_md(d, n).eval(&rat(n as i64)).det();
    if v.is_zero() {
        return Err(Error::Verification(format!("det M_{d}({n}) = 0")));
    }
    Ok(v)
}
