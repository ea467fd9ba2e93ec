//! Fischer decomposition `P^k = H_k + R^2 H_{k-2} + ...` into the
//! irreducibles `V_nu = R^{2 nu2} H_{nu1 - nu2}`, the Capelli operators
//! `D_nu` built from dual bases, and the brute-force eigenvalue oracle.

use num_traits::Zero;

use crate::eigenformulas::BiPartition;
use crate::error::{Error, Result};
use crate::exact_linalg::{RatMatrix, Rational};
use crate::exact_linalg::rat;
use crate::rep::{build_osp_basis, highest_weight_vectors, laplacian, r_squared, r_squared_poly, LieBasis, LinOpBlocks, WeightVector};
use crate::superspace::{apply_derivative, pairing, DegreeBasis, Parity, SpaceParams, SuperMonomial, SuperPoly};

/// `ker(Laplacian)` in degree `k`.
#[derive(Debug, Clone)]
pub struct HarmonicSpace {
    pub k: usize,
    pub basis: Vec<SuperPoly>,
}

impl HarmonicSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// An irreducible summand `V_nu` with an explicit basis.
#[derive(Debug, Clone)]
pub struct Component {
    pub nu: BiPartition,
    pub basis: Vec<SuperPoly>,
    vectors: Vec<Vec<Rational>>,
}

impl Component {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of the basis elements on `P^{|nu|}`.
    pub fn vectors(&self) -> &[Vec<Rational>] {
        &self.vectors
    }
}

pub fn harmonic_basis(k: usize, params: &SpaceParams) -> Result<HarmonicSpace> {
    let lap = laplacian(*params, k)?;
    let block = lap.block(k).expect("block k exists");
    let deg = DegreeBasis::new(k, params);
    let basis = block
        .kernel_basis()
        .iter()
        .map(|v| SuperPoly::from_vector(*params, &deg, v))
        .collect();
    Ok(HarmonicSpace { k, basis })
}

fn check_member(nu: BiPartition, params: &SpaceParams) -> Result<()> {
    if nu.in_lambda_star(params.n()) {
        Ok(())
    } else {
        Err(Error::InvalidIndex(format!(
            "{nu} violates nu2 >= floor(|nu|/2) - n for n = {}",
            params.n()
        )))
    }
}

/// `V_nu = R^{2 nu2} H_{nu1 - nu2}`.
pub fn component_basis(nu: BiPartition, params: &SpaceParams) -> Result<Component> {
    check_member(nu, params)?;
    let h = harmonic_basis(nu.diff() as usize, params)?;
    let r2 = r_squared_poly(*params);
    let basis: Vec<SuperPoly> = h
        .basis
        .into_iter()
        .map(|w| (0..nu.v2()).fold(w, |acc, _| r2.mul(&acc)))
        .collect();
    let deg = DegreeBasis::new(nu.size() as usize, params);
    let vectors = basis.iter().map(|p| p.to_vector(&deg)).collect::<Result<Vec<_>>>()?;
    if !vectors.is_empty() && RatMatrix::from_columns(deg.len(), &vectors).rank() != vectors.len() {
        return Err(Error::Verification(format!("basis of V{nu} is linearly dependent")));
    }
    Ok(Component { nu, basis, vectors })
}

/// All components of `P^k`, ordered by increasing `nu2`; checks that together
/// they form a basis of `P^k`.
pub fn fischer_decompose(k: usize, params: &SpaceParams) -> Result<Vec<Component>> {
    let comps = BiPartition::lambda_star_of_size(k as u32, params.n())
        .map(|nu| component_basis(nu, params))
        .collect::<Result<Vec<_>>>()?;
    let dim = DegreeBasis::new(k, params).len();
    let all: Vec<Vec<Rational>> = comps.iter().flat_map(|c| c.vectors.iter().cloned()).collect();
    if all.len() != dim || RatMatrix::from_columns(dim, &all).rank() != dim {
        return Err(Error::Verification(format!(
            "components of degree {k} do not form a basis ({} vectors, dim {dim})",
            all.len()
        )));
    }
    Ok(comps)
}

/// Constant-coefficient operators `v_i*` dual to the basis of `V_nu`, each
/// written as a polynomial whose monomial `y^a x_S` stands for the derivative
/// monomial `d_y^a d_S` (see [`apply_derivative`]). They pair to zero with
/// every other component of the same degree.
pub fn dual_basis(nu: BiPartition, params: &SpaceParams) -> Result<Vec<SuperPoly>> {
    check_member(nu, params)?;
    let k = nu.size() as usize;
    let deg = DegreeBasis::new(k, params);
    let comps = fischer_decompose(k, params)?;
    let mut offset = 0;
    let mut cols = Vec::new();
    for c in &comps {
        if c.nu == nu {
            offset = cols.len();
        }
        cols.extend(c.vectors.iter().cloned());
    }
    let dim = deg.len();
    // (P W)_{rj} = <d^{m_r}, w_j>, P diagonal
    let w = RatMatrix::from_columns(dim, &cols);
    let p = RatMatrix::from_fn(dim, dim, |r, s| {
        if r == s {
            pairing(&deg.monomials()[r], &deg.monomials()[r])
        } else {
            Rational::zero()
        }
    });
    let g = (&p * &w).inverse()?;
    let this = comps.iter().find(|c| c.nu == nu).expect("nu is a component");
    Ok((offset..offset + this.dim())
        .map(|j| SuperPoly::from_vector(*params, &deg, g.row(j)))
        .collect())
}

/// `D_nu = sum_r u_r d^{m_r}`: identity on `V_nu`, zero on the other
/// components of the same degree.
#[derive(Debug, Clone)]
pub struct CapelliOperator {
    pub nu: BiPartition,
    /// `(u_r, m_r)`: multiplication by `u_r` after the derivative monomial `m_r`.
    pub pairs: Vec<(SuperPoly, SuperMonomial)>,
    pub blocks: LinOpBlocks,
}

pub fn capelli_operator(nu: BiPartition, params: &SpaceParams, max_degree: usize) -> Result<CapelliOperator> {
    let comp = component_basis(nu, params)?;
    let duals = dual_basis(nu, params)?;
    let k = nu.size() as usize;
    let deg = DegreeBasis::new(k, params);
    let mut pairs = Vec::new();
    for m in deg.monomials() {
        let mut u = SuperPoly::zero(*params);
        for (w, v) in comp.basis.iter().zip(&duals) {
            let c = v.coeff(m);
            if !c.is_zero() {
                u = u.add(&w.scale(&c));
            }
        }
        if !u.is_zero() {
            pairs.push((u, *m));
        }
    }
    let blocks = LinOpBlocks::from_fn(*params, 0, Parity::Even, max_degree, |src| {
        let mut out = SuperPoly::zero(*params);
        for (u, d) in &pairs {
            if let Some((c, rest)) = apply_derivative(d, src) {
                out = out.add(&u.mul(&SuperPoly::monomial(*params, rest, c)));
            }
        }
        out
    })?;
    Ok(CapelliOperator { nu, pairs, blocks })
}

impl CapelliOperator {
    /// Applies the stored `(u_r, m_r)` pairs directly, without the blocks.
    pub fn apply(&self, p: &SuperPoly) -> SuperPoly {
        let mut out = SuperPoly::zero(p.params());
        for (u, d) in &self.pairs {
            out = out.add(&u.mul(&p.apply_derivative(d)));
        }
        out
    }

    /// The scalar by which the operator acts on `comp`, checked on every basis
    /// vector.
    pub fn scalar_on(&self, comp: &Component) -> Result<Rational> {
        scalar_action(&self.blocks, comp)
    }
}

/// The scalar by which a shift-0 operator acts on a component, checked on
/// every basis vector.
pub fn scalar_action(op: &LinOpBlocks, comp: &Component) -> Result<Rational> {
    let k = comp.nu.size() as usize;
    let block = op.block(k).ok_or_else(|| {
        Error::Dimension(format!("operator not built for degree {k}"))
    })?;
    let mut scalar: Option<Rational> = None;
    for v in comp.vectors() {
        let img = block.mul_vec(v);
        let i = v.iter().position(|c| !c.is_zero()).expect("basis vectors are nonzero");
        let s = &img[i] / &v[i];
        if img.iter().zip(v).any(|(a, b)| *a != b * &s) {
            return Err(Error::NonScalarAction {
                nu: comp.nu.to_string(),
                detail: "image is not proportional to the basis vector".into(),
            });
        }
        match &scalar {
            None => scalar = Some(s),
            Some(t) if *t != s => {
                return Err(Error::NonScalarAction {
                    nu: comp.nu.to_string(),
                    detail: format!("basis vectors scaled by {t} and {s}"),
                })
            }
            _ => {}
        }
    }
    Ok(scalar.unwrap_or_else(Rational::zero))
}

/// `c_nu(mu)` computed by applying `D_nu` to every basis vector of `V_mu`.
pub fn eigenvalue_oracle(nu: BiPartition, mu: BiPartition, params: &SpaceParams) -> Result<Rational> {
    check_member(mu, params)?;
    let d = capelli_operator(nu, params, mu.size() as usize)?;
    d.scalar_on(&component_basis(mu, params)?)
}

/// Checks that `op` supercommutes with every basis element of `osp(1|2n)` and
/// with `Z`; reports the first failure.
pub fn invariance_check(op: &LinOpBlocks, basis: &LieBasis) -> std::result::Result<(), String> {
    for e in basis.elements() {
        if !op.supercommutator(&e.action).is_zero() {
            return Err(format!("fails to supercommute with {}", e.label));
        }
    }
    if !op.supercommutator(basis.z_action()).is_zero() {
        return Err("fails to commute with Z".into());
    }
    Ok(())
}

/// For `k <= max_k`: the components of `P^k` have dimensions summing to
/// `dim P^k` and together form a basis, and `H_k = 0` once `k > 2n+1`.
pub fn fischer_check(params: &SpaceParams, max_k: usize) -> std::result::Result<(), String> {
    let n = params.n();
    for k in 0..=max_k {
        let comps = fischer_decompose(k, params).map_err(|e| e.to_string())?;
        let total: usize = comps.iter().map(Component::dim).sum();
        if total != DegreeBasis::new(k, params).len() {
            return Err(format!("degree {k}: component dimensions sum to {total}"));
        }
        let h = harmonic_basis(k, params).map_err(|e| e.to_string())?;
        if k > 2 * n + 1 && h.dim() != 0 {
            return Err(format!("H_{k} has dimension {}", h.dim()));
        }
    }
    Ok(())
}

/// Compares the brute-force eigenvalue of `D_nu` on `V_mu` with the closed
/// form, the reduction to harmonic indices and the Knop-Sahi evaluation, for
/// all `nu`, `mu` in `Lambda*_n` of size `<= max_size`. Also checks
/// `c_nu(mu) = delta` for `|mu| <= |nu|`.
pub fn eigenvalue_grid_check(params: &SpaceParams, max_size: u32) -> std::result::Result<(), String> {
    use crate::eigenformulas::{capelli_eigenvalue, eigenvalue_by_reduction, eigenvalue_from_knopsahi, harmonic_eigenvalue, HarmonicIndex};
    let n = params.n();
    let parts: Vec<BiPartition> = BiPartition::up_to(max_size).filter(|p| p.in_lambda_star(n)).collect();
    let comps = parts
        .iter()
        .map(|&mu| component_basis(mu, params))
        .collect::<Result<Vec<_>>>()
        .map_err(|e| e.to_string())?;
    for &nu in &parts {
        let op = capelli_operator(nu, params, max_size as usize).map_err(|e| e.to_string())?;
        for comp in &comps {
            let mu = comp.nu;
            let oracle = op.scalar_on(comp).map_err(|e| format!("D{nu} on V{mu}: {e}"))?;
            let closed = capelli_eigenvalue(nu, mu, n);
            let reduced = eigenvalue_by_reduction(nu, mu, n);
            let ks = eigenvalue_from_knopsahi(nu, mu, n).map_err(|e| e.to_string())?;
            if oracle != closed || oracle != reduced || oracle != ks {
                return Err(format!(
                    "c{nu}({mu}): oracle {oracle}, closed {closed}, reduction {reduced}, Knop-Sahi {ks}"
                ));
            }
            if nu.v2() == 0 {
                if let Ok(k) = HarmonicIndex::new(nu.v1(), n) {
                    let h = harmonic_eigenvalue(k, mu, n);
                    if h != oracle {
                        return Err(format!("c{nu}({mu}): harmonic formula {h}, oracle {oracle}"));
                    }
                }
            }
            if mu.size() <= nu.size() && oracle != rat(i64::from(mu == nu)) {
                return Err(format!("c{nu}({mu}) = {oracle}, expected {}", i64::from(mu == nu)));
            }
            if mu.v2() < nu.v2() && !oracle.is_zero() {
                return Err(format!("c{nu}({mu}) = {oracle} although mu2 < nu2"));
            }
        }
    }
    Ok(())
}

/// Checks `2 l2 (2 l1 - 2n - 1) D_l = R^2 D_{l - (1,1)} Lap` on degrees
/// `<= max_degree` for every `l` in `Lambda*_n` with `l2 >= 1`, `|l| <= max_size`.
pub fn cap_recursion_check(params: &SpaceParams, max_size: u32, max_degree: usize) -> std::result::Result<(), String> {
    if max_degree < 2 {
        return Err("max degree must be at least 2".into());
    }
    let n = params.n() as i64;
    let lap = laplacian(*params, max_degree).map_err(|e| e.to_string())?;
    let r2 = r_squared(*params, max_degree).map_err(|e| e.to_string())?;
    for lam in BiPartition::up_to(max_size).filter(|l| l.v2() >= 1 && l.in_lambda_star(params.n())) {
        let lower = BiPartition::of(lam.v1() - 1, lam.v2() - 1);
        let d_lam = capelli_operator(lam, params, max_degree).map_err(|e| e.to_string())?;
        let d_low = capelli_operator(lower, params, max_degree - 2).map_err(|e| e.to_string())?;
        let c = 2 * lam.v2() as i64 * (2 * lam.v1() as i64 - 2 * n - 1);
        let lhs = d_lam.blocks.scale(&rat(c));
        let rhs = r2.compose(&d_low.blocks.compose(&lap));
        lhs.diff_report(&rhs).map_err(|e| format!("{lam}: {e}"))?;
    }
    Ok(())
}

/// Weight `delta_1 + ... + delta_m` with `m = min(2n - k + 1, k)`, expected for
/// the highest-weight line of `H_k`.
pub fn expected_harmonic_weight(k: usize, n: usize) -> WeightVector {
    WeightVector::fundamental((2 * n + 1 - k).min(k), n)
}

/// Checks that `H_k` has exactly one highest-weight line, of the expected weight.
pub fn highest_weight_check(k: usize, params: &SpaceParams) -> std::result::Result<WeightVector, String> {
    let n = params.n();
    if k > 2 * n + 1 {
        return Err(format!("H_{k} = 0 for n = {n}"));
    }
    let h = harmonic_basis(k, params).map_err(|e| e.to_string())?;
    let deg = DegreeBasis::new(k, params);
    let vectors = h.basis.iter().map(|p| p.to_vector(&deg)).collect::<Result<Vec<_>>>().map_err(|e| e.to_string())?;
    let basis = build_osp_basis(*params, k).map_err(|e| e.to_string())?;
    let found = highest_weight_vectors(&vectors, k, &basis).map_err(|e| e.to_string())?;
    let expected = expected_harmonic_weight(k, n);
    match found.as_slice() {
        [(w, _)] if *w == expected => Ok(expected),
        [(w, _)] => Err(format!("H_{k}: highest weight {w}, expected {expected}")),
        _ => Err(format!("H_{k}: {} highest-weight vectors", found.len())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::rat;
    use crate::rep::{build_osp_basis, casimir, euler, laplacian, r_squared};

    fn sp(n: usize) -> SpaceParams {
        SpaceParams::new(n).unwrap()
    }

    fn bp(a: u32, b: u32) -> BiPartition {
        BiPartition::of(a, b)
    }

    #[test]
    fn harmonic_examples() {
        let p = sp(1);
        let h3 = harmonic_basis(3, &p).unwrap();
        assert_eq!(h3.dim(), 1);
        let expected = SuperPoly::monomial(p, SuperMonomial::y_pow(3), rat(1)).add(
            &SuperPoly::monomial(p, SuperMonomial::new(1, &[1, 2]).unwrap(), rat(3)),
        );
        let b = &h3.basis[0];
        let s = expected.coeff(&SuperMonomial::y_pow(3)) / b.coeff(&SuperMonomial::y_pow(3));
        assert_eq!(b.scale(&s), expected);
        assert_eq!(harmonic_basis(2, &p).unwrap().dim(), 3);
        assert_eq!(harmonic_basis(4, &p).unwrap().dim(), 0);
        assert_eq!(harmonic_basis(0, &p).unwrap().dim(), 1);
    }

    #[test]
    fn components() {
        let p = sp(1);
        assert_eq!(component_basis(bp(1, 0), &p).unwrap().dim(), 3);
        assert_eq!(component_basis(bp(2, 1), &p).unwrap().dim(), 3);
        assert!(component_basis(bp(4, 0), &p).is_err());
        let dims: Vec<(BiPartition, usize)> =
            fischer_decompose(4, &p).unwrap().iter().map(|c| (c.nu, c.dim())).collect();
        assert_eq!(dims, vec![(bp(3, 1), 3), (bp(2, 2), 1)]);
    }

    #[test]
    fn dual_basis_degree_one() {
        let p = sp(1);
        let d = dual_basis(bp(1, 0), &p).unwrap();
        let c = component_basis(bp(1, 0), &p).unwrap();
        for (i, v) in d.iter().enumerate() {
            for (j, w) in c.basis.iter().enumerate() {
                let val = v.terms().fold(Rational::zero(), |acc, (m, cm)| {
                    acc + cm * w.coeff(m) * pairing(m, m)
                });
                assert_eq!(val, rat(i64::from(i == j)));
            }
        }
    }

    #[test]
    fn capelli_operator_basics() {
        let p = sp(1);
        let k = 5;
        let d0 = capelli_operator(bp(0, 0), &p, k).unwrap();
        assert_eq!(d0.blocks, LinOpBlocks::identity(p, k));
        let d1 = capelli_operator(bp(1, 0), &p, k).unwrap();
        assert_eq!(d1.blocks, euler(p, k).unwrap());
        // D_(1,1) = -R^2 Lap / 2 for n = 1
        let d11 = capelli_operator(bp(1, 1), &p, k).unwrap();
        let rl = r_squared(p, k).unwrap().compose(&laplacian(p, k).unwrap());
        assert_eq!(d11.blocks.truncate(k - 2), rl.scale(&crate::exact_linalg::ratio(-1, 2)).truncate(k - 2));
    }

    #[test]
    fn oracle_spot_values() {
        let p = sp(1);
        assert_eq!(eigenvalue_oracle(bp(1, 0), bp(2, 1), &p).unwrap(), rat(3));
        assert_eq!(eigenvalue_oracle(bp(1, 1), bp(2, 1), &p).unwrap(), rat(-1));
        assert_eq!(eigenvalue_oracle(bp(2, 1), bp(2, 1), &p).unwrap(), rat(1));
    }

    #[test]
    fn invariance() {
        let p = sp(1);
        let b = build_osp_basis(p, 4).unwrap();
        let d = capelli_operator(bp(1, 0), &p, 4).unwrap();
        invariance_check(&d.blocks, &b).unwrap();
        let y = LinOpBlocks::from_fn(p, 1, Parity::Even, 4, |m| {
            SuperPoly::monomial(p, *m, rat(1)).mul(&SuperPoly::y(p))
        })
        .unwrap();
        assert!(invariance_check(&y, &b).is_err());
        let c = casimir(&b).unwrap();
        invariance_check(&c.operator, &b).unwrap();
    }

    #[test]
    fn pair_form_matches_blocks() {
        let p = sp(1);
        let d = capelli_operator(bp(2, 1), &p, 4).unwrap();
        let q = SuperPoly::monomial(p, SuperMonomial::new(2, &[1, 2]).unwrap(), rat(3))
            .add(&SuperPoly::monomial(p, SuperMonomial::y_pow(4), rat(-1)));
        assert_eq!(d.apply(&q), d.blocks.apply(&q).unwrap());
    }
}
