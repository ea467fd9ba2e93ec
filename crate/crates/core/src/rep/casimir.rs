use num_traits::Zero;

use crate::eigenformulas::{ell, BiPartition};
use crate::error::{Error, Result};
use crate::exact_linalg::{rat, Rational};
use crate::fischer::fischer_decompose;
use crate::superspace::Parity;

use super::osp::LieBasis;
use super::LinOpBlocks;

/// How the two dual bases are multiplied together.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CasimirOrdering {
    /// `sum_a x_a x^a`.
    Plain,
    /// `sum_a (-1)^{|a|} x_a x^a`.
    ParitySigned,
}

/// The calibrated Casimir operator.
#[derive(Debug, Clone)]
pub struct Casimir {
    pub operator: LinOpBlocks,
    /// Factor applied to the raw operator built from `str(XY)`.
    pub calibration: Rational,
    pub ordering: CasimirOrdering,
}

/// Expected scalar `(2n+1) l - l^2` on `V_nu`.
pub fn casimir_scalar(nu: BiPartition, n: usize) -> Rational {
    let l = rat(ell(nu, n) as i64);
    &l * rat(2 * n as i64 + 1) - &l * &l
}

/// `sum_{a,c} s_a H_{ca} rho(x_a) rho(x_c)` with `H` the inverse Gram matrix of
/// the supertrace form and `s_a` the ordering sign.
pub fn raw_casimir(basis: &LieBasis, ordering: CasimirOrdering) -> Result<LinOpBlocks> {
    let h = basis.gram_matrix().inverse()?;
    let els = basis.elements();
    let mut c = LinOpBlocks::zero(basis.params(), 0, Parity::Even, basis.max_degree());
    for (a, xa) in els.iter().enumerate() {
        let mut dual = LinOpBlocks::zero(basis.params(), 0, xa.parity, basis.max_degree());
        for (k, xc) in els.iter().enumerate() {
            if !h[(k, a)].is_zero() {
                dual = dual.add(&xc.action.scale(&h[(k, a)]));
            }
        }
        let mut term = xa.action.compose(&dual);
        if ordering == CasimirOrdering::ParitySigned && xa.parity.is_odd() {
            term = term.scale(&rat(-1));
        }
        c = c.add(&term);
    }
    Ok(c)
}

/// Builds the Casimir, calibrates it to `2n` on degree 1 and checks the scalar
/// on every component of degree `<= max_degree` of the basis.
pub fn casimir(basis: &LieBasis) -> Result<Casimir> {
    if basis.max_degree() < 1 {
        return Err(Error::Calibration("need the degree-1 block to calibrate".into()));
    }
    let n = basis.params().n();
    let mut problems = Vec::new();
    for ordering in [CasimirOrdering::Plain, CasimirOrdering::ParitySigned] {
        let raw = raw_casimir(basis, ordering)?;
        let Some(s) = raw.scalar_on_block(1).filter(|s| !s.is_zero()) else {
            problems.push(format!("{ordering:?}: not a nonzero scalar on degree 1"));
            continue;
        };
        let calibration = rat(2 * n as i64) / s;
        let operator = raw.scale(&calibration);
        let cas = Casimir { operator, calibration, ordering };
        match verify_casimir(&cas, basis) {
            Ok(()) => return Ok(cas),
            Err(e) => problems.push(format!("{ordering:?}: {e}")),
        }
    }
    Err(Error::Calibration(problems.join("; ")))
}

/// Checks the Casimir scalar on every `V_nu` with `|nu| <= max_degree`.
pub fn verify_casimir(cas: &Casimir, basis: &LieBasis) -> Result<()> {
    let params = basis.params();
    for k in 0..=basis.max_degree() {
        let block = cas.operator.block(k).expect("blocks built to max degree");
        for comp in fischer_decompose(k, &params)? {
            let expected = casimir_scalar(comp.nu, params.n());
            for v in comp.vectors() {
                let image = block.mul_vec(v);
                if image.iter().zip(v).any(|(a, b)| *a != b * &expected) {
                    return Err(Error::NonScalarAction {
                        nu: comp.nu.to_string(),
                        detail: format!("Casimir does not act by {expected}"),
                    });
                }
            }
        }
    }
    Ok(())
}
