use std::collections::BTreeSet;

use crate::eigenformulas::{ell, BiPartition};
use crate::exact_linalg::{rat, Rational, UniPoly};

use super::index::{index_sets, max_j, nu_sub_j, subsets_j};
use super::matrices::{build_md, build_md_prime, build_mds, build_nj, det_md_prime_closed, f_ds, nj_step_factor, s_value};

type Check = std::result::Result<(), String>;

fn fail<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

/// Cardinalities of `P*_{k,n}`, `|Lambda| = |Lambda*|` for every `j`, and the
/// disjoint unions `Lambda_j = Lambda_{j+1} + dLambda_j` on both sides.
pub fn index_set_check(d: u32, n: usize) -> Check {
    for k in 0..=d {
        let got = BiPartition::lambda_star_of_size(k, n).count();
        if got != (k as usize / 2).min(n) + 1 {
            return Err(format!("|P*_{{{k},{n}}}| = {got}"));
        }
    }
    let sets = index_sets(d, n);
    if sets.lam.len() != sets.lam_star.len() {
        return Err(format!("|Lambda| = {}, |Lambda*| = {}", sets.lam.len(), sets.lam_star.len()));
    }
    let top = max_j(d, n);
    for j in 0..=top {
        let s = subsets_j(d, n, j).map_err(fail)?;
        if s.lam.len() != s.lam_star.len() {
            return Err(format!("j = {j}: {} rows, {} columns", s.lam.len(), s.lam_star.len()));
        }
        if j == top {
            continue;
        }
        let next = subsets_j(d, n, j + 1).map_err(fail)?;
        disjoint_union(&s.lam, &next.lam, &s.boundary).map_err(|e| format!("Lambda, j = {j}: {e}"))?;
        disjoint_union(&s.lam_star, &next.lam_star, &s.boundary_star)
            .map_err(|e| format!("Lambda*, j = {j}: {e}"))?;
    }
    Ok(())
}

fn disjoint_union(whole: &[BiPartition], a: &[BiPartition], b: &[BiPartition]) -> Check {
    let a: BTreeSet<_> = a.iter().collect();
    let b: BTreeSet<_> = b.iter().collect();
    if let Some(x) = a.intersection(&b).next() {
        return Err(format!("{x} lies in both parts"));
    }
    let union: BTreeSet<_> = a.union(&b).copied().collect();
    if union != whole.iter().collect() {
        return Err("parts do not cover the set".into());
    }
    Ok(())
}

/// Distinct members of `Lambda*_{d,n}` of equal size have distinct `l`, and
/// `l_nu + l_nu' - 1` lies in `0..=2n-2`.
pub fn ell_check(d: u32, n: usize) -> Check {
    let sets = index_sets(d, n);
    for &a in &sets.lam_star {
        for &b in sets.lam_star.iter().filter(|b| **b != a && b.size() == a.size()) {
            let (la, lb) = (ell(a, n), ell(b, n));
            if la == lb {
                return Err(format!("l{a} = l{b}"));
            }
            if la + lb == 0 || la + lb - 1 > 2 * n - 2 {
                return Err(format!("l{a} + l{b} - 1 out of range"));
            }
        }
    }
    Ok(())
}

/// `(nu_(j))_(k) = nu_(k)` for all admissible `j`, `k`.
pub fn nu_sub_j_check(d: u32) -> Check {
    for nu in BiPartition::up_to(d) {
        let half = (nu.size() / 2) as usize;
        for j in 0..=half {
            let nj = nu_sub_j(nu, j).map_err(fail)?;
            for k in 0..=half {
                if nu_sub_j(nj, k).map_err(fail)? != nu_sub_j(nu, k).map_err(fail)? {
                    return Err(format!("({nu}_({j}))_({k}) differs from {nu}_({k})"));
                }
            }
        }
    }
    Ok(())
}

/// `S_{mu,nu,j} - S_{mu,nu_(j),j} = (l_nu - l_{nu_(j)}) S_{mu,nu,j+1}`, the
/// right side read as 0 when `mu2 = j`.
pub fn telescoping_check(d: u32, n: usize) -> Check {
    for j in 0..max_j(d, n) {
        let s = subsets_j(d, n, j).map_err(fail)?;
        for &mu in &s.lam {
            for &nu in &s.lam_star {
                let nj = nu_sub_j(nu, j).map_err(fail)?;
                let lhs = s_value(mu, nu, j, n).map_err(fail)? - s_value(mu, nj, j, n).map_err(fail)?;
                let rhs = if mu.v2() as usize > j {
                    (rat(ell(nu, n) as i64) - rat(ell(nj, n) as i64)) * s_value(mu, nu, j + 1, n).map_err(fail)?
                } else {
                    rat(0)
                };
                if lhs != rhs {
                    return Err(format!("mu = {mu}, nu = {nu}, j = {j}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// `N_0 = M_d'`, each step `det N_j = det N_{j+1} * step factor`, and the
/// closed form of `det M_d'` equals the direct determinant (and is nonzero).
pub fn md_prime_check(d: u32, n: usize) -> Check {
    let direct = build_md_prime(d, n);
    if build_nj(d, n, 0).map_err(fail)? != direct {
        return Err("N_0 differs from M_d'".into());
    }
    let top = max_j(d, n);
    for j in 0..top {
        let lhs = build_nj(d, n, j).map_err(fail)?.det();
        let rhs = build_nj(d, n, j + 1).map_err(fail)?.det() * nj_step_factor(d, n, j).map_err(fail)?;
        if lhs != rhs {
            return Err(format!("det N_{j} = {lhs}, recursion gives {rhs}"));
        }
    }
    let det = direct.det();
    let closed = det_md_prime_closed(d, n).map_err(fail)?;
    if closed != det {
        return Err(format!("closed form {closed}, direct determinant {det}"));
    }
    if det == rat(0) {
        return Err("det M_d' = 0".into());
    }
    Ok(())
}

/// For each `s`: `det M_{d,s} = det M_d`, the number of modified columns is
/// `f(d,s)`, which is the multiplicity of `s/2` as a root of `det M_d`, and
/// each modified column is divisible by `x - s/2`.
pub fn mds_check(d: u32, n: usize) -> Check {
    let det = build_md(d, n).det();
    for s in 0..=2 * n - 2 {
        let m = build_mds(d, n, s).map_err(fail)?;
        if m.matrix.det() != det {
            return Err(format!("s = {s}: det M_{{d,s}} differs from det M_d"));
        }
        if m.modified.len() != f_ds(d, s, n) {
            return Err(format!("s = {s}: {} modified columns, f = {}", m.modified.len(), f_ds(d, s, n)));
        }
        let half = rat(s as i64) / rat(2);
        if det.root_multiplicity(&half) != m.modified.len() {
            return Err(format!("s = {s}: x - {half} divides det M_d {} times", det.root_multiplicity(&half)));
        }
        let root = UniPoly::linear(rat(1), -half);
        for &(c, _) in &m.modified {
            for r in 0..m.matrix.rows() {
                if m.matrix[(r, c)].exact_div(&root).is_err() {
                    return Err(format!("s = {s}: entry ({r},{c}) not divisible by x - {s}/2"));
                }
            }
        }
    }
    Ok(())
}

/// `sum_s f(d,s) = sum_{mu in Lambda_{d,n}} mu2`.
pub fn sum_equality_check(d: u32, n: usize) -> Check {
    let lhs: usize = (0..=2 * n - 2).map(|s| f_ds(d, s, n)).sum();
    let rhs: usize = index_sets(d, n).lam.iter().map(|m| m.v2() as usize).sum();
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("sum f = {lhs}, sum mu2 = {rhs}"))
    }
}

/// `det M_d` evaluated at `x = n` agrees with `det` of the evaluated matrix.
pub fn evaluation_check(d: u32, n: usize) -> Check {
    let x = rat(n as i64);
    let a: Rational = build_md(d, n).det().eval(&x);
    let b = build_md(d, n).eval(&x).det();
    if a == b {
        Ok(())
    } else {
        Err(format!("det then evaluate = {a}, evaluate then det = {b}"))
    }
}
