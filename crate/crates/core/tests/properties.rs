use num_traits::Zero;
use proptest::prelude::*;

use osp_capelli::capelli_matrices::{index_sets, nu_sub_j};
use osp_capelli::eigenformulas::{capelli_eigenvalue, capelli_eigenvalue_at, capelli_eigenvalue_poly, BiPartition};
use osp_capelli::exact_linalg::*;
use osp_capelli::superspace::*;

fn small_rat() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(p, q)| ratio(p, q))
}

fn rat_matrix(n: usize) -> impl Strategy<Value = RatMatrix> {
    prop::collection::vec(-4i64..=4, n * n)
        .prop_map(move |v| RatMatrix::from_fn(n, n, |i, j| rat(v[i * n + j])))
}

fn poly_matrix(n: usize) -> impl Strategy<Value = PolyMatrix> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, 3), n * n).prop_map(move |v| {
        PolyMatrix::from_fn(n, n, |i, j| UniPoly::from_coeffs(v[i * n + j].iter().map(|&c| rat(c)).collect()))
    })
}

/// A homogeneous superpolynomial of the given degree with small integer coefficients.
fn homogeneous(n: usize, k: usize) -> impl Strategy<Value = SuperPoly> {
    let params = SpaceParams::new(n).unwrap();
    let basis = DegreeBasis::new(k, &params);
    let len = basis.len();
    prop::collection::vec(-3i64..=3, len).prop_map(move |c| {
        let v: Vec<Rational> = c.iter().map(|&x| rat(x)).collect();
        SuperPoly::from_vector(params, &basis, &v)
    })
}

/// A polynomial of a single parity, built from one degree with a parity filter.
fn parity_pure(n: usize, k: usize, odd: bool) -> impl Strategy<Value = SuperPoly> {
    homogeneous(n, k).prop_map(move |p| {
        let mut q = SuperPoly::zero(p.params());
        for (m, c) in p.terms() {
            if m.parity().is_odd() == odd {
                q.add_term(*m, c.clone());
            }
        }
        q
    })
}

fn lambda_star_member(n: usize, max: u32) -> impl Strategy<Value = BiPartition> {
    let all: Vec<BiPartition> = BiPartition::up_to(max).filter(|p| p.in_lambda_star(n)).collect();
    prop::sample::select(all)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn falling_factorial_step(x in small_rat(), i in 0u32..20) {
        prop_assert_eq!(falling_factorial(&x, i + 1), falling_factorial(&x, i) * (&x - rat(i as i64)));
    }

    #[test]
    fn vandermonde_matches_matrix(nodes in prop::collection::vec(small_rat(), 0..=6)) {
        prop_assert_eq!(vandermonde_det(&nodes), vandermonde_matrix(&nodes).det());
    }

    #[test]
    fn det_is_multiplicative(a in poly_matrix(3), b in poly_matrix(3)) {
        prop_assert_eq!((&a * &b).det(), &a.det() * &b.det());
    }

    #[test]
    fn solve_row_recovers(m in rat_matrix(5), a in prop::collection::vec(-5i64..=5, 5)) {
        prop_assume!(!m.det().is_zero());
        let a: Vec<Rational> = a.into_iter().map(rat).collect();
        let target = m.vec_mul(&a);
        prop_assert_eq!(m.solve_row(&target).unwrap(), a);
    }

    #[test]
    fn supercommutativity((p, q, r) in (1usize..=3, 0usize..=3, 0usize..=3, any::<bool>(), any::<bool>())
        .prop_flat_map(|(n, k1, k2, o1, o2)| (parity_pure(n, k1, o1), parity_pure(n, k2, o2), homogeneous(n, 1))))
    {
        let odd = |x: &SuperPoly| x.parity().is_some_and(|p| p.is_odd());
        let sign = if odd(&p) && odd(&q) { rat(-1) } else { rat(1) };
        prop_assert_eq!(p.mul(&q), q.mul(&p).scale(&sign));
        prop_assert_eq!(p.mul(&q).mul(&r), p.mul(&q.mul(&r)));
    }

    #[test]
    fn super_leibniz((p, q) in (1usize..=3, 0usize..=3, 0usize..=3, any::<bool>())
        .prop_flat_map(|(n, k1, k2, o1)| (parity_pure(n, k1, o1), homogeneous(n, k2))))
    {
        let n = p.params().n();
        let sign = if p.parity().is_some_and(|x| x.is_odd()) { rat(-1) } else { rat(1) };
        for i in 1..=2 * n {
            let lhs = p.mul(&q).derive_odd(i).unwrap();
            let rhs = p.derive_odd(i).unwrap().mul(&q).add(&p.mul(&q.derive_odd(i).unwrap()).scale(&sign));
            prop_assert_eq!(lhs, rhs);
        }
        prop_assert_eq!(p.mul(&q).derive_y(), p.derive_y().mul(&q).add(&p.mul(&q.derive_y())));
    }

    #[test]
    fn derivatives_anticommute(p in (1usize..=3, 0usize..=5).prop_flat_map(|(n, k)| homogeneous(n, k))) {
        let n = p.params().n();
        for i in 1..=2 * n {
            prop_assert!(p.derive_odd(i).unwrap().derive_odd(i).unwrap().is_zero());
            prop_assert_eq!(p.derive_odd(i).unwrap().derive_y(), p.derive_y().derive_odd(i).unwrap());
            for j in (i + 1)..=2 * n {
                let ij = p.derive_odd(j).unwrap().derive_odd(i).unwrap();
                let ji = p.derive_odd(i).unwrap().derive_odd(j).unwrap();
                prop_assert_eq!(ij, ji.scale(&rat(-1)));
            }
        }
    }

    #[test]
    fn eigenvalue_symmetry(n in 1usize..=3, x in small_rat(), y in small_rat(), pick in any::<prop::sample::Index>()) {
        let all: Vec<BiPartition> = BiPartition::up_to(5).filter(|p| p.in_lambda_star(n)).collect();
        let nu = all[pick.index(all.len())];
        let h = half_shift(n);
        let f = |a: &Rational, b: &Rational| capelli_eigenvalue_at(nu, &(a + &h), b, n);
        prop_assert_eq!(f(&x, &y), f(&y, &x));
    }

    #[test]
    fn nu_sub_j_idempotent(a in 0u32..=12, b in 0u32..=12, j in 0usize..=6, k in 0usize..=6) {
        let nu = BiPartition::of(a.max(b), a.min(b));
        let half = (nu.size() / 2) as usize;
        prop_assume!(j <= half && k <= half);
        let nj = nu_sub_j(nu, j).unwrap();
        prop_assert_eq!(nu_sub_j(nj, k).unwrap(), nu_sub_j(nu, k).unwrap());
    }

    #[test]
    fn eigenvalue_vanishing(n in 1usize..=3, nu in lambda_star_member(3, 5), mu in lambda_star_member(3, 5)) {
        prop_assume!(nu.in_lambda_star(n) && mu.in_lambda_star(n) && mu.size() <= nu.size());
        let want = if mu == nu { rat(1) } else { rat(0) };
        prop_assert_eq!(capelli_eigenvalue(nu, mu, n), want);
    }
}

#[test]
fn degree_dimensions() {
    for n in 1..=3usize {
        let params = SpaceParams::new(n).unwrap();
        for k in 0..=2 * n + 4 {
            let want: usize = (0..=k.min(2 * n)).map(|j| binom(2 * n, j)).sum();
            assert_eq!(DegreeBasis::new(k, &params).len(), want, "n={n} k={k}");
        }
    }
}

fn binom(a: usize, b: usize) -> usize {
    (0..b).fold(1, |acc, i| acc * (a - i) / (i + 1))
}

#[test]
fn eigenvalue_degree_bound() {
    for n in 1..=3 {
        for nu in BiPartition::up_to(6).filter(|p| p.in_lambda_star(n)) {
            let p = capelli_eigenvalue_poly(nu, n);
            assert!(p.total_degree().unwrap_or(0) <= nu.size(), "{nu}");
            assert!(p.is_symmetric(), "{nu}");
        }
    }
}

#[test]
fn denominators_never_vanish() {
    for n in 1..=3usize {
        let h = half_shift(n);
        for k in 0..=2 * n as u32 + 1 {
            assert!(!falling_factorial(&h, k).is_zero());
        }
        for nu in index_sets(8, n).lam_star {
            assert!(!falling_factorial(&(rat(nu.v1() as i64) - &h), nu.v2()).is_zero());
        }
    }
}
