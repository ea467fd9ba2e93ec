//! Index sets and their orders, the polynomial matrices `M_d`, `M_d'`,
//! `M_{d,s}`, `N_j`, the determinant factorization, and the expression of
//! `D_nu` through powers of the Casimir and the degree operator.
//!
//! Rows are indexed by `Lambda_{d,n}`, columns by `Lambda*_{d,n}`, in the
//! orders fixed by [`index_sets`]; every matrix here uses them.

mod checks;
mod express;
mod index;
mod matrices;

pub use checks::{
    ell_check, evaluation_check, index_set_check, md_prime_check, mds_check, nu_sub_j_check,
    sum_equality_check, telescoping_check,
};
pub use express::{central_express, express_check, CentralExpression};
pub use index::{index_sets, max_j, nu_sub_j, star_key, subsets_j, IndexSets, SubsetsJ};
pub use matrices::{
    build_md, build_md_prime, build_mds, build_nj, det_md_prime_closed, det_nonvanishing, f_ds,
    factorization_check, g_k, lambda_entry, nj_step_factor, s_value, FactorizationReport, Mds,
};

use crate::eigenformulas::{capelli_eigenvalue, BiPartition};

/// Checks that `[c_eta(eta')]` over `Lambda*_{d,n}`, ordered by size, is upper
/// unitriangular: `c_eta(eta') = delta` whenever `|eta'| <= |eta|`.
pub fn unitriangularity_check(d: u32, n: usize) -> std::result::Result<(), String> {
    let all: Vec<BiPartition> = BiPartition::up_to(d).filter(|e| e.in_lambda_star(n)).collect();
    for &eta in &all {
        for &other in all.iter().filter(|o| o.size() <= eta.size()) {
            let c = capelli_eigenvalue(eta, other, n);
            let want = i64::from(eta == other);
            if c != crate::exact_linalg::rat(want) {
                return Err(format!("c_{eta}({other}) = {c}, expected {want}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{rat, UniPoly};

    fn bp(a: u32, b: u32) -> BiPartition {
        BiPartition::of(a, b)
    }

    #[test]
    fn orders_for_d2_n1() {
        let s = index_sets(2, 1);
        assert_eq!(s.lam, vec![bp(0, 0), bp(1, 0), bp(2, 0), bp(1, 1)]);
        assert_eq!(s.lam_star, vec![bp(0, 0), bp(1, 0), bp(1, 1), bp(2, 0)]);
    }

    #[test]
    fn subsets_examples() {
        let s1 = subsets_j(2, 1, 1).unwrap();
        assert_eq!(s1.lam_star, vec![bp(2, 0)]);
        let s0 = subsets_j(2, 1, 0).unwrap();
        assert_eq!(s0.boundary, vec![bp(0, 0), bp(1, 0), bp(2, 0)]);
        assert_eq!(s0.lam, index_sets(2, 1).lam);
        assert!(subsets_j(2, 1, 2).is_err());
    }

    #[test]
    fn nu_sub_j_examples() {
        assert_eq!(nu_sub_j(bp(2, 0), 0).unwrap(), bp(1, 1));
        assert_eq!(nu_sub_j(bp(3, 1), 1).unwrap(), bp(3, 1));
        assert!(nu_sub_j(bp(1, 0), 1).is_err());
    }

    #[test]
    fn lambda_entry_examples() {
        assert_eq!(lambda_entry(bp(0, 0), bp(3, 1), 2), UniPoly::one());
        assert_eq!(lambda_entry(bp(1, 1), bp(1, 0), 1), UniPoly::linear(rat(2), rat(0)));
    }

    #[test]
    fn d2_n1_determinants() {
        assert_eq!(build_md(2, 1).det(), UniPoly::linear(rat(4), rat(0)));
        assert_eq!(build_md_prime(2, 1).det(), rat(4));
        assert_eq!(det_md_prime_closed(2, 1).unwrap(), rat(4));
        assert_eq!(det_md_prime_closed(1, 3).unwrap(), rat(1));
        assert_eq!(f_ds(2, 0, 1), 1);
        let r = factorization_check(2, 1);
        assert!(r.passed(), "{:?}", r.failures);
        assert_eq!(r.factors, vec![(0, 1)]);
        assert_eq!(det_nonvanishing(2, 1).unwrap(), rat(4));
        assert_eq!(det_nonvanishing(1, 1).unwrap(), rat(1));
    }

    #[test]
    fn s_value_cases() {
        // mu2 = j gives 1, j = 0 gives l^{mu2}
        assert_eq!(s_value(bp(2, 1), bp(3, 0), 1, 2).unwrap(), rat(1));
        assert_eq!(s_value(bp(3, 2), bp(3, 0), 0, 2).unwrap(), rat(4));
        assert_eq!(build_nj(4, 2, 0).unwrap(), build_md_prime(4, 2));
    }

    #[test]
    fn mds_example() {
        let m = build_mds(2, 1, 0).unwrap();
        assert_eq!(m.modified, vec![(3, bp(1, 1))]);
        assert_eq!(m.matrix.det(), UniPoly::linear(rat(4), rat(0)));
    }

    #[test]
    fn central_expression_small() {
        let e = central_express(bp(1, 0), 1).unwrap();
        assert_eq!(e.coeff(bp(1, 0)), rat(1));
        assert!(e.coeffs.iter().filter(|(m, _)| *m != bp(1, 0)).all(|(_, c)| *c == rat(0)));
        let e0 = central_express(bp(0, 0), 1).unwrap();
        assert_eq!(e0.coeffs, vec![(bp(0, 0), rat(1))]);
        let e11 = central_express(bp(1, 1), 1).unwrap();
        e11.verify_eigenvalues(4).unwrap();
        e11.verify_blocks(4).unwrap();
        unitriangularity_check(4, 1).unwrap();
    }
}
