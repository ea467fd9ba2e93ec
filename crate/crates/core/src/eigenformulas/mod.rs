//! Closed-form Capelli eigenvalues and the two-variable interpolation
//! polynomials that produce them.
//!
//! Eigenvalues are written in the coordinates `x = mu1 - (n + 1/2)`,
//! `y = mu2`, in which they are symmetric.

mod formulas;
mod knop_sahi;
mod partition;
mod poly2;

pub use formulas::{
    capelli_eigenvalue, capelli_eigenvalue_at, capelli_eigenvalue_poly, eigenvalue_by_reduction,
    harmonic_eigenvalue, reduce, Reduction,
};
pub use knop_sahi::{
    eigenvalue_from_knopsahi, interpolation_polynomial, knop_sahi_explicit, knop_sahi_normalization,
    knop_sahi_consistency_check, knop_sahi_shift, knop_sahi_vanishing, rho,
};
pub use partition::{ell, BiPartition, HarmonicIndex};
pub use poly2::SymPoly2;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{half_shift, rat, ratio};

    fn bp(a: u32, b: u32) -> BiPartition {
        BiPartition::of(a, b)
    }

    #[test]
    fn degree_one_eigenvalue_is_size() {
        for n in 1..=3 {
            for mu in BiPartition::up_to(6).filter(|m| m.in_lambda_star(n)) {
                assert_eq!(capelli_eigenvalue(bp(1, 0), mu, n), rat(mu.size() as i64));
            }
        }
    }

    #[test]
    fn spot_values() {
        assert_eq!(capelli_eigenvalue(bp(1, 1), bp(2, 1), 1), rat(-1));
        let h = HarmonicIndex::new(2, 1).unwrap();
        assert_eq!(harmonic_eigenvalue(h, bp(2, 0), 1), rat(1));
        assert_eq!(eigenvalue_from_knopsahi(bp(1, 1), bp(2, 1), 1).unwrap(), rat(-1));
        assert_eq!(eigenvalue_from_knopsahi(bp(1, 0), bp(2, 1), 2).unwrap(), rat(3));
    }

    #[test]
    fn reduce_examples() {
        let r = reduce(bp(1, 1), bp(1, 0), 1);
        assert_eq!(r.factor, rat(0));
        let r = reduce(bp(1, 1), bp(2, 1), 1);
        assert_eq!(r, Reduction { factor: rat(-1), nu: bp(0, 0), eta: bp(1, 0) });
        let r = reduce(bp(3, 0), bp(2, 2), 2);
        assert_eq!(r, Reduction { factor: rat(1), nu: bp(3, 0), eta: bp(2, 2) });
    }

    #[test]
    fn knop_sahi_small_cases() {
        for n in 1..=3 {
            let expected = SymPoly2::x().add(&SymPoly2::y()).add(&SymPoly2::constant(half_shift(n)));
            assert_eq!(knop_sahi_vanishing(bp(1, 0), n).unwrap(), expected);
            assert_eq!(knop_sahi_explicit(HarmonicIndex::new(1, n).unwrap(), n), expected);
            assert_eq!(knop_sahi_vanishing(bp(0, 0), n).unwrap(), SymPoly2::one());
            assert_eq!(knop_sahi_shift(bp(1, 1), n).unwrap(), SymPoly2::x().mul(&SymPoly2::y()));
        }
        assert!(knop_sahi_shift(bp(2, 0), 1).is_err());
        // (2,1) is x y (x + y - 2 + n + 1/2)
        let n = 1;
        let inner = SymPoly2::x()
            .add(&SymPoly2::y())
            .add(&SymPoly2::constant(half_shift(n) - rat(2)));
        let expected = SymPoly2::x().mul(&SymPoly2::y()).mul(&inner);
        assert_eq!(knop_sahi_shift(bp(2, 1), n).unwrap(), expected);
        assert_eq!(knop_sahi_vanishing(bp(2, 1), n).unwrap(), expected);
    }

    #[test]
    fn closed_form_poly_agrees_with_pointwise() {
        let n = 2;
        let p = capelli_eigenvalue_poly(bp(3, 1), n);
        assert!(p.is_symmetric());
        assert!(p.total_degree().unwrap() <= 4);
        let (m1, m2) = (ratio(7, 3), ratio(-5, 2));
        assert_eq!(p.eval(&(&m1 - half_shift(n)), &m2), capelli_eigenvalue_at(bp(3, 1), &m1, &m2, n));
    }
}
