use std::collections::BTreeMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_linalg::{RatMatrix, Rational};
use crate::superspace::{DegreeBasis, SpaceParams, SuperMonomial};

use super::osp::{LieBasis, WeightVector};

/// Weight of a monomial: `+delta_i` for each `x_i` with `i <= n`, `-delta_i`
/// for each `x_{i+n}`, nothing for `y`.
pub fn monomial_weight(m: &SuperMonomial, params: &SpaceParams) -> WeightVector {
    let n = params.n();
    let mut w = vec![0i64; n];
    for i in m.odd_indices() {
        if i <= n {
            w[i - 1] += 1;
        } else {
            w[i - n - 1] -= 1;
        }
    }
    WeightVector::new(w)
}

/// A Cartan weight space of `P^k`, spanned by the listed basis monomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSpace {
    pub weight: WeightVector,
    pub positions: Vec<usize>,
}

/// Joint eigenspaces of the Cartan on `P^k`. Monomials are weight vectors, so
/// each space is spanned by basis monomials.
pub fn cartan_weights(k: usize, params: &SpaceParams) -> Vec<WeightSpace> {
    let basis = DegreeBasis::new(k, params);
    let mut by_weight: BTreeMap<WeightVector, Vec<usize>> = BTreeMap::new();
    for (pos, m) in basis.monomials().iter().enumerate() {
        by_weight.entry(monomial_weight(m, params)).or_default().push(pos);
    }
    by_weight
        .into_iter()
        .map(|(weight, positions)| WeightSpace { weight, positions })
        .collect()
}

/// Highest-weight vectors inside the span of `subspace` (coordinate vectors on
/// `P^k`): the joint kernel of all positive root vectors, split by weight.
///
/// The subspace is assumed invariant, so its intersection with each weight
/// space can be taken separately.
pub fn highest_weight_vectors(
    subspace: &[Vec<Rational>],
    k: usize,
    basis: &LieBasis,
) -> Result<Vec<(WeightVector, Vec<Rational>)>> {
    let params = basis.params();
    let dim = DegreeBasis::new(k, &params).len();
    if subspace.is_empty() {
        return Ok(Vec::new());
    }
    let s = RatMatrix::from_columns(dim, subspace);
    let positives: Vec<&RatMatrix> = basis
        .positive_roots()
        .map(|e| {
            e.action.block(k).ok_or_else(|| {
                Error::Dimension(format!("osp action not built for degree {k}"))
            })
        })
        .collect::<Result<_>>()?;

    let mut out = Vec::new();
    for ws in cartan_weights(k, &params) {
        let mut inside = vec![true; dim];
        for &p in &ws.positions {
            inside[p] = false;
        }
        let outside: Vec<usize> = (0..dim).filter(|&i| inside[i]).collect();
        // combinations of the subspace basis landing in this weight space
        let coeffs = if outside.is_empty() {
            unit_vectors(s.cols())
        } else {
            s.select_rows(&outside).kernel_basis()
        };
        if coeffs.is_empty() {
            continue;
        }
        let w = &s * &RatMatrix::from_columns(s.cols(), &coeffs);
        let mut stacked: Option<RatMatrix> = None;
        for x in &positives {
            let img = *x * &w;
            stacked = Some(match stacked {
                None => img,
                Some(acc) => acc.vstack(&img),
            });
        }
        let kernel = match stacked {
            Some(m) => m.kernel_basis(),
            None => unit_vectors(w.cols()),
        };
        for c in kernel {
            let v = w.mul_vec(&c);
            if v.iter().any(|x| !x.is_zero()) {
                out.push((ws.weight.clone(), v));
            }
        }
    }
    Ok(out)
}

fn unit_vectors(m: usize) -> Vec<Vec<Rational>> {
    (0..m)
        .map(|j| (0..m).map(|i| Rational::from_integer(i64::from(i == j).into())).collect())
        .collect()
}
