use num_traits::One;

use crate::error::{Error, Result};
use crate::exact_linalg::{factorial, falling_factorial, gen_binomial, half_shift, rat, RatMatrix, Rational};

use super::partition::{BiPartition, HarmonicIndex};
use super::poly2::SymPoly2;

/// The shift `rho = (-n - 1/2, 0)`.
pub fn rho(n: usize) -> [Rational; 2] {
    [-half_shift(n), Rational::from_integer(0.into())]
}

/// `(nu1 - nu2)! nu2! (nu1 - n - 1/2)^(nu2)` (falling power), the value of
/// `P_nu` at `nu + rho`.
pub fn knop_sahi_normalization(nu: BiPartition, n: usize) -> Rational {
    factorial(nu.diff()) * factorial(nu.v2()) * falling_factorial(&(rat(nu.v1() as i64) - half_shift(n)), nu.v2())
}

/// The symmetric polynomial of degree `<= |nu|` vanishing at `mu + rho` for
/// every partition `mu != nu` with `|mu| <= |nu|` and taking the value
/// `value` at `nu + rho`.
///
/// Solved in the basis `m_(a,b)`, `a >= b`, `a + b <= |nu|`, which has exactly
/// one element per interpolation node.
pub fn interpolation_polynomial(nu: BiPartition, rho: &[Rational; 2], value: &Rational) -> Result<SymPoly2> {
    let d = nu.size();
    let basis: Vec<(u32, u32)> = BiPartition::up_to(d).map(|p| (p.v1(), p.v2())).collect();
    let nodes: Vec<BiPartition> = BiPartition::up_to(d).collect();
    let polys: Vec<SymPoly2> = basis.iter().map(|&(a, b)| SymPoly2::monomial_symmetric(a, b)).collect();
    let m = RatMatrix::from_fn(nodes.len(), basis.len(), |i, j| {
        let x = rat(nodes[i].v1() as i64) + &rho[0];
        let y = rat(nodes[i].v2() as i64) + &rho[1];
        polys[j].eval(&x, &y)
    });
    let rhs: Vec<Rational> = nodes
        .iter()
        .map(|&mu| if mu == nu { value.clone() } else { Rational::from_integer(0.into()) })
        .collect();
    let coeffs = m.solve(&rhs)?;
    let mut p = SymPoly2::zero();
    for (c, q) in coeffs.iter().zip(&polys) {
        p = p.add(&q.scale(c));
    }
    Ok(p)
}

/// `P_nu^rho` from its vanishing conditions and normalization.
pub fn knop_sahi_vanishing(nu: BiPartition, n: usize) -> Result<SymPoly2> {
    interpolation_polynomial(nu, &rho(n), &knop_sahi_normalization(nu, n))
}

/// The binomial-sum formula for `P_(k,0)^rho`.
pub fn knop_sahi_explicit(k: HarmonicIndex, n: usize) -> SymPoly2 {
    let h = half_shift(n);
    let k = k.get();
    let x_h = SymPoly2::x().add(&SymPoly2::constant(h.clone()));
    let mut s = SymPoly2::zero();
    for i in 0..=k {
        let c = gen_binomial(&h, k - i) * gen_binomial(&h, i);
        let t = x_h
            .sub(&SymPoly2::constant(rat(i as i64)))
            .falling(k - i)
            .mul(&SymPoly2::y().falling(i));
        s = s.add(&t.scale(&c));
    }
    s.scale(&(Rational::one() / gen_binomial(&h, k)))
}

/// `x y P_{nu'}(x - 1, y - 1)` with `nu' = (nu1 - 1, nu2 - 1)`.
pub fn knop_sahi_shift(nu: BiPartition, n: usize) -> Result<SymPoly2> {
    if nu.v2() == 0 {
        return Err(Error::InvalidIndex(format!("shift identity needs nu2 >= 1, got {nu}")));
    }
    let inner = knop_sahi_vanishing(BiPartition::of(nu.v1() - 1, nu.v2() - 1), n)?;
    let one = SymPoly2::one();
    let shifted = inner.substitute(&SymPoly2::x().sub(&one), &SymPoly2::y().sub(&one));
    Ok(SymPoly2::x().mul(&SymPoly2::y()).mul(&shifted))
}

/// `c_nu(mu) = P_nu(mu1 - n - 1/2, mu2) / normalization`.
pub fn eigenvalue_from_knopsahi(nu: BiPartition, mu: BiPartition, n: usize) -> Result<Rational> {
    let p = knop_sahi_vanishing(nu, n)?;
    let x = rat(mu.v1() as i64) - half_shift(n);
    let y = rat(mu.v2() as i64);
    Ok(p.eval(&x, &y) / knop_sahi_normalization(nu, n))
}

/// For every `nu` in `Lambda*_n` with `|nu| <= max_size`: the vanishing
/// solution agrees with the binomial-sum formula when `nu = (k,0)`,
/// `k <= 2n+1`, with the shift identity when `nu2 >= 1`, and with the closed
/// eigenvalue formula through the normalization on every `|mu| <= max_size`.
pub fn knop_sahi_consistency_check(n: usize, max_size: u32) -> std::result::Result<(), String> {
    for nu in BiPartition::up_to(max_size).filter(|p| p.in_lambda_star(n)) {
        let p = knop_sahi_vanishing(nu, n).map_err(|e| format!("{nu}: {e}"))?;
        if nu.v2() == 0 {
            if let Ok(k) = HarmonicIndex::new(nu.v1(), n) {
                if knop_sahi_explicit(k, n) != p {
                    return Err(format!("{nu}: explicit formula differs from the vanishing solution"));
                }
            }
        } else if knop_sahi_shift(nu, n).map_err(|e| e.to_string())? != p {
            return Err(format!("{nu}: shift identity differs from the vanishing solution"));
        }
        if !p.is_symmetric() {
            return Err(format!("{nu}: P is not symmetric"));
        }
        let closed = super::formulas::capelli_eigenvalue_poly(nu, n);
        if p.scale(&(Rational::one() / knop_sahi_normalization(nu, n))) != closed {
            return Err(format!("{nu}: normalized P differs from the closed eigenvalue polynomial"));
        }
    }
    Ok(())
}
