//! The `gosp(1|2n)`-module structure on superpolynomials: the `gl(1|2n)`
//! action table, the `osp(1|2n)` basis, the `sl2` triple `(R^2, Laplacian, E)`,
//! the Casimir operator and highest-weight extraction.
//!
//! Matrix indices follow the action table: index 1 is `y` and index `j + 1`
//! is `x_j`, with `E_{ab}` acting as `gen_a d_b`.

mod casimir;
mod linop;
mod ops;
mod osp;
mod weights;

pub use casimir::{casimir, casimir_scalar, raw_casimir, verify_casimir, Casimir, CasimirOrdering};
pub use linop::LinOpBlocks;
pub use ops::{
    build_action, euler, lap_r_relation_check, laplacian, laplacian_with, r_squared, r_squared_poly, sl2_check,
    LaplacianForm, Sl2Report,
};
pub use osp::{
    build_osp_basis, is_osp, matrix_action, matrix_parity, osp_form, super_bracket,
    supertranspose, LieBasis, LieElement, WeightVector,
};
pub use weights::{cartan_weights, highest_weight_vectors, monomial_weight, WeightSpace};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{rat, RatMatrix};
    use crate::superspace::{SpaceParams, SuperMonomial, SuperPoly};

    fn sp(n: usize) -> SpaceParams {
        SpaceParams::new(n).unwrap()
    }

    fn mono(p: SpaceParams, y: u32, odd: &[usize]) -> SuperPoly {
        SuperPoly::monomial(p, SuperMonomial::new(y, odd).unwrap(), rat(1))
    }

    #[test]
    fn action_table_examples() {
        let p = sp(1);
        let e11 = build_action(1, 1, p, 3).unwrap();
        assert_eq!(e11.apply(&mono(p, 2, &[])).unwrap(), mono(p, 2, &[]).scale(&rat(2)));
        let e22 = build_action(2, 2, p, 3).unwrap();
        assert_eq!(e22.apply(&mono(p, 0, &[1])).unwrap(), mono(p, 0, &[1]));
        let e12 = build_action(1, 2, p, 3).unwrap();
        assert_eq!(e12.apply(&mono(p, 0, &[1])).unwrap(), mono(p, 1, &[]));
        assert!(build_action(0, 1, p, 3).is_err());
        assert!(build_action(1, 4, p, 3).is_err());
    }

    #[test]
    fn euler_and_laplacian_examples() {
        let p = sp(1);
        let e = euler(p, 4).unwrap();
        assert_eq!(e.apply(&mono(p, 1, &[1])).unwrap(), mono(p, 1, &[1]).scale(&rat(2)));
        let lap = laplacian(p, 4).unwrap();
        assert_eq!(lap.apply(&mono(p, 2, &[])).unwrap(), SuperPoly::constant(p, rat(2)));
        let r2 = r_squared_poly(p);
        assert_eq!(lap.apply(&r2).unwrap(), SuperPoly::constant(p, rat(-2)));
        assert_eq!(r2.to_string(), "y^2 + 2*x1*x2");
    }

    #[test]
    fn sl2_relations_hold() {
        for n in 1..=2 {
            let rep = sl2_check(sp(n), 6, LaplacianForm::Standard);
            assert!(rep.passed(), "{:?}", rep.failure);
        }
    }

    #[test]
    fn sl2_negative_controls() {
        let first = sl2_check(sp(1), 6, LaplacianForm::FirstOrderY);
        assert!(first.failure.unwrap().contains("degree shift"));
        assert!(!sl2_check(sp(1), 6, LaplacianForm::FlippedSign).passed());
        assert!(!sl2_check(sp(1), 3, LaplacianForm::Standard).passed());
    }

    #[test]
    fn osp_basis_shape() {
        for n in 1..=3 {
            let b = build_osp_basis(sp(n), 2).unwrap();
            assert_eq!(b.len(), 2 * n * n + 3 * n);
            assert_eq!(b.cartan().count(), n);
            let odd = b.elements().iter().filter(|e| e.parity.is_odd()).count();
            assert_eq!(odd, 2 * n);
            assert!(b.elements().iter().all(|e| is_osp(&e.matrix, sp(n))));
            // positive and negative roots pair up
            assert_eq!(b.positive_roots().count(), n * n + n);
        }
    }

    #[test]
    fn osp_basis_spans_solution_space() {
        // the defining condition is linear; its solution space has the right dimension
        for n in 1..=2 {
            let p = sp(n);
            let s = 2 * n + 1;
            let mut cols = Vec::new();
            for idx in 0..s * s {
                let mut x = RatMatrix::zeros(s, s);
                x[(idx / s, idx % s)] = rat(1);
                let j = osp_form(p);
                let img = &(&supertranspose(&x) * &j) + &(&j * &x);
                cols.push((0..s).flat_map(|i| img.row(i).to_vec()).collect::<Vec<_>>());
            }
            let map = RatMatrix::from_columns(s * s, &cols);
            assert_eq!(map.kernel_basis().len(), 2 * n * n + 3 * n);
        }
    }

    #[test]
    fn cartan_actions_match_table() {
        let p = sp(2);
        let b = build_osp_basis(p, 3).unwrap();
        for (i, h) in b.cartan().enumerate() {
            let i = i + 1;
            let expected = build_action(i + 1, i + 1, p, 3)
                .unwrap()
                .sub(&build_action(i + 3, i + 3, p, 3).unwrap());
            assert_eq!(h.action, expected);
        }
    }

    #[test]
    fn closure_and_faithfulness() {
        for n in 1..=2 {
            let b = build_osp_basis(sp(n), 3).unwrap();
            b.check_closure().unwrap();
        }
    }

    #[test]
    fn sl2_commutes_with_osp() {
        let p = sp(2);
        let k = 5;
        let b = build_osp_basis(p, k).unwrap();
        let ops = [euler(p, k).unwrap(), r_squared(p, k).unwrap(), laplacian(p, k).unwrap()];
        for e in b.elements() {
            for op in &ops {
                assert!(e.action.supercommutator(op).is_zero(), "{} vs shift {}", e.label, op.shift());
            }
        }
    }

    #[test]
    fn weights_of_generators() {
        let p = sp(1);
        let ws = cartan_weights(1, &p);
        let find = |pos: usize| ws.iter().find(|w| w.positions.contains(&pos)).unwrap().weight.clone();
        assert_eq!(find(0), WeightVector::zero(1));
        assert_eq!(find(1), WeightVector::new(vec![1]));
        assert_eq!(find(2), WeightVector::new(vec![-1]));
        let total: usize = cartan_weights(3, &sp(2)).iter().map(|w| w.positions.len()).sum();
        assert_eq!(total, 15);
    }

    #[test]
    fn positivity_rule() {
        assert!(WeightVector::new(vec![1, -1]).is_positive());
        assert!(!WeightVector::new(vec![-1, 1]).is_positive());
        assert!(WeightVector::new(vec![0, 1]).is_positive());
        assert!(!WeightVector::new(vec![0, -1]).is_positive());
        assert!(!WeightVector::zero(2).is_positive());
    }

    #[test]
    fn casimir_calibrates_on_small_degrees() {
        let b = build_osp_basis(sp(1), 4).unwrap();
        let c = casimir(&b).unwrap();
        assert_eq!(c.operator.scalar_on_block(0), Some(rat(0)));
        assert_eq!(c.operator.scalar_on_block(1), Some(rat(2)));
        let e = euler(sp(1), 4).unwrap();
        assert!(c.operator.supercommutator(&e).is_zero());
    }
}
