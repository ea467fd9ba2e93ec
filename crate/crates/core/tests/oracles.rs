//! Cross-module checks: closed formulas and matrix identities against the
//! brute-force constructions on superpolynomials.

use osp_capelli::capelli_matrices::{central_express, express_check, unitriangularity_check};
use osp_capelli::eigenformulas::{knop_sahi_consistency_check, BiPartition, SymPoly2};
use osp_capelli::exact_linalg::{ratio, rat};
use osp_capelli::fischer::*;
use osp_capelli::rep::*;
use osp_capelli::superspace::SpaceParams;

fn sp(n: usize) -> SpaceParams {
    SpaceParams::new(n).unwrap()
}

#[test]
fn sl2_and_laplacian_relations() {
    for n in 1..=3 {
        let r = sl2_check(sp(n), 8, LaplacianForm::Standard);
        assert!(r.passed(), "n={n}: {:?}", r.failure);
        lap_r_relation_check(sp(n), 8, 3).unwrap();
    }
}

#[test]
fn fischer_and_highest_weights() {
    for n in 1..=3 {
        fischer_check(&sp(n), 2 * n + 3).unwrap();
        for k in 0..=2 * n + 1 {
            highest_weight_check(k, &sp(n)).unwrap();
        }
        assert!(highest_weight_check(2 * n + 2, &sp(n)).is_err());
    }
}

#[test]
fn casimir_on_components() {
    for n in 1..=2 {
        let basis = build_osp_basis(sp(n), 5).unwrap();
        let c = casimir(&basis).unwrap();
        assert_eq!(c.ordering, CasimirOrdering::ParitySigned);
        assert_eq!(c.calibration, rat(-2));
        invariance_check(&c.operator, &basis).unwrap();
    }
}

#[test]
fn capelli_recursion() {
    for n in 1..=2 {
        cap_recursion_check(&sp(n), 4, 6).unwrap();
    }
}

#[test]
fn eigenvalues_three_ways() {
    for n in 1..=2 {
        eigenvalue_grid_check(&sp(n), 4).unwrap();
    }
    assert_eq!(eigenvalue_oracle(BiPartition::of(1, 1), BiPartition::of(2, 1), &sp(1)).unwrap(), rat(-1));
}

#[test]
fn knop_sahi() {
    for n in 1..=3 {
        knop_sahi_consistency_check(n, 5).unwrap();
        let p = osp_capelli::eigenformulas::knop_sahi_vanishing(BiPartition::of(1, 0), n).unwrap();
        let want = SymPoly2::x().add(&SymPoly2::y()).add(&SymPoly2::constant(rat(n as i64) + ratio(1, 2)));
        assert_eq!(p, want);
    }
}

#[test]
fn central_expressions_reproduce_operators() {
    for n in 1..=2 {
        express_check(&sp(n), 2, true).unwrap();
        unitriangularity_check(5, n).unwrap();
    }
    let ex = central_express(BiPartition::of(1, 1), 1).unwrap();
    ex.verify_blocks(6).unwrap();
}
