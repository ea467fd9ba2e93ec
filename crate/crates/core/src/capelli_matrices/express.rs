use num_traits::Zero;

use crate::eigenformulas::{capelli_eigenvalue, BiPartition};
use crate::error::{Error, Result};
use crate::exact_linalg::{rat, Rational};
use crate::fischer::capelli_operator;
use crate::rep::{build_osp_basis, casimir, euler, LinOpBlocks};
use crate::superspace::SpaceParams;

use super::index::index_sets;
use super::matrices::{build_md, lambda_entry};

/// `D_nu = sum_mu a_mu C^{mu2} Z^{mu1 - mu2}` over `mu` in `Lambda_{|nu|,n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralExpression {
    pub nu: BiPartition,
    pub n: usize,
    /// In the row order of `Lambda_{|nu|,n}`.
    pub coeffs: Vec<(BiPartition, Rational)>,
}

/// Solves `[a_mu] [lambda_{mu,eta}(n)] = [c_nu(eta)]` over `eta` in `Lambda*_{|nu|,n}`.
pub fn central_express(nu: BiPartition, n: usize) -> Result<CentralExpression> {
    if !nu.in_lambda_star(n) {
        return Err(Error::InvalidIndex(format!("{nu} is outside Lambda*_{n}")));
    }
    let d = nu.size();
    let sets = index_sets(d, n);
    let m = build_md(d, n).eval(&rat(n as i64));
    let target: Vec<Rational> = sets.lam_star.iter().map(|&eta| capelli_eigenvalue(nu, eta, n)).collect();
    let a = m.solve_row(&target)?;
    Ok(CentralExpression { nu, n, coeffs: sets.lam.into_iter().zip(a).collect() })
}

impl CentralExpression {
    pub fn coeff(&self, mu: BiPartition) -> Rational {
        self.coeffs
            .iter()
            .find(|(m, _)| *m == mu)
            .map_or_else(Rational::zero, |(_, c)| c.clone())
    }

    /// `sum_mu a_mu lambda_{mu,eta}(n)`, the predicted eigenvalue on `V_eta`.
    pub fn eigenvalue_at(&self, eta: BiPartition) -> Rational {
        let x = rat(self.n as i64);
        self.coeffs
            .iter()
            .map(|(mu, a)| a * lambda_entry(*mu, eta, self.n).eval(&x))
            .sum()
    }

    /// Compares with the closed-form eigenvalue on every `eta` in `Lambda*_n`
    /// with `|eta| <= |nu| + extra`.
    pub fn verify_eigenvalues(&self, extra: u32) -> std::result::Result<(), String> {
        for eta in BiPartition::up_to(self.nu.size() + extra).filter(|e| e.in_lambda_star(self.n)) {
            let lhs = self.eigenvalue_at(eta);
            let rhs = capelli_eigenvalue(self.nu, eta, self.n);
            if lhs != rhs {
                return Err(format!("on V{eta}: combination gives {lhs}, c_nu = {rhs}"));
            }
        }
        Ok(())
    }

    /// The operator `sum_mu a_mu C^{mu2} E^{mu1 - mu2}` on degrees `0..=max_degree`.
    pub fn operator(&self, params: &SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
        let basis = build_osp_basis(*params, max_degree)?;
        let c = casimir(&basis)?.operator;
        let e = euler(*params, max_degree)?;
        Ok(self.operator_from(&c, &e))
    }

    /// Same as [`Self::operator`], from a calibrated Casimir and the degree
    /// operator already built on the same degrees.
    pub fn operator_from(&self, c: &LinOpBlocks, e: &LinOpBlocks) -> LinOpBlocks {
        let params = c.params();
        let max_degree = c.max_source_degree().unwrap_or(0);
        let mut total = LinOpBlocks::zero(params, 0, crate::superspace::Parity::Even, max_degree);
        for (mu, a) in &self.coeffs {
            if a.is_zero() {
                continue;
            }
            let mut term = LinOpBlocks::identity(params, max_degree);
            for _ in 0..mu.v2() {
                term = c.compose(&term);
            }
            for _ in 0..mu.diff() {
                term = e.compose(&term);
            }
            total = total.add(&term.scale(a));
        }
        total
    }

    /// Block-level comparison with the Capelli operator built from dual bases.
    pub fn verify_blocks(&self, max_degree: usize) -> std::result::Result<(), String> {
        let params = SpaceParams::new(self.n).map_err(|e| e.to_string())?;
        let lhs = self.operator(&params, max_degree).map_err(|e| e.to_string())?;
        self.compare_blocks(&lhs)
    }

    /// Compares an already built combination with `D_nu` on the same degrees.
    pub fn compare_blocks(&self, op: &LinOpBlocks) -> std::result::Result<(), String> {
        let top = op.max_source_degree().ok_or("empty operator")?;
        let rhs = capelli_operator(self.nu, &op.params(), top).map_err(|e| e.to_string())?;
        op.diff_report(&rhs.blocks)
    }
}

/// For every `nu` in `Lambda*_n` with `|nu| <= max_size`: the combination
/// reproduces `c_nu(eta)` for `|eta| <= |nu| + 4`, and, when `with_blocks`,
/// equals `D_nu` as an operator on degrees `<= |nu| + 4`.
pub fn express_check(params: &SpaceParams, max_size: u32, with_blocks: bool) -> std::result::Result<(), String> {
    let n = params.n();
    let top = max_size as usize + 4;
    let ops = if with_blocks {
        let basis = build_osp_basis(*params, top).map_err(|e| e.to_string())?;
        let c = casimir(&basis).map_err(|e| e.to_string())?.operator;
        Some((c, euler(*params, top).map_err(|e| e.to_string())?))
    } else {
        None
    };
    for nu in BiPartition::up_to(max_size).filter(|p| p.in_lambda_star(n)) {
        let ex = central_express(nu, n).map_err(|e| e.to_string())?;
        ex.verify_eigenvalues(4).map_err(|e| format!("{nu}: {e}"))?;
        if let Some((c, e)) = &ops {
            let deg = nu.size() as usize + 4;
            let op = ex.operator_from(&c.truncate(deg), &e.truncate(deg));
            ex.compare_blocks(&op).map_err(|e| format!("{nu}: {e}"))?;
        }
    }
    Ok(())
}
