use num_traits::Zero;

use crate::exact_linalg::{factorial, falling_factorial, gen_binomial, half_shift, rat, Rational};

use super::partition::{BiPartition, HarmonicIndex};
use super::poly2::SymPoly2;

/// The closed form `c_nu(mu) = a * b`, evaluated at rational `mu1`, `mu2`.
///
/// The expression is polynomial in `(mu1, mu2)`, so it makes sense off the
/// lattice as well.
pub fn capelli_eigenvalue_at(nu: BiPartition, mu1: &Rational, mu2: &Rational, n: usize) -> Rational {
    let h = half_shift(n);
    let (v1, v2, d) = (nu.v1(), nu.v2(), nu.diff());
    let a_num = falling_factorial(mu2, v2) * falling_factorial(&(mu1 - &h), v2);
    let a_den = factorial(v2) * falling_factorial(&(rat(v1 as i64) - &h), v2) * falling_factorial(&h, d);
    let mut b = Rational::zero();
    for i in 0..=d {
        let t = gen_binomial(&h, d - i)
            * gen_binomial(&h, i)
            * falling_factorial(&(mu1 - rat((v2 + i) as i64)), d - i)
            * falling_factorial(&(mu2 - rat(v2 as i64)), i);
        b += t;
    }
    a_num / a_den * b
}

/// `c_nu(mu)` by the closed form.
pub fn capelli_eigenvalue(nu: BiPartition, mu: BiPartition, n: usize) -> Rational {
    capelli_eigenvalue_at(nu, &rat(mu.v1() as i64), &rat(mu.v2() as i64), n)
}

/// The closed form as a polynomial in `x = mu1 - (n + 1/2)` and `y = mu2`.
pub fn capelli_eigenvalue_poly(nu: BiPartition, n: usize) -> SymPoly2 {
    let h = half_shift(n);
    let (v1, v2, d) = (nu.v1(), nu.v2(), nu.diff());
    let mu1 = SymPoly2::x().add(&SymPoly2::constant(h.clone()));
    let mu2 = SymPoly2::y();
    let a_num = mu2.falling(v2).mul(&SymPoly2::x().falling(v2));
    let a_den = factorial(v2) * falling_factorial(&(rat(v1 as i64) - &h), v2) * falling_factorial(&h, d);
    let mut b = SymPoly2::zero();
    for i in 0..=d {
        let c = gen_binomial(&h, d - i) * gen_binomial(&h, i);
        let shift = |p: &SymPoly2, s: u32| p.sub(&SymPoly2::constant(rat(s as i64)));
        let t = shift(&mu1, v2 + i).falling(d - i).mul(&shift(&mu2, v2).falling(i));
        b = b.add(&t.scale(&c));
    }
    a_num.mul(&b).scale(&(Rational::from_integer(1.into()) / a_den))
}

/// Eigenvalue of a harmonic Capelli operator `D_(k,0)` on `V_mu`.
pub fn harmonic_eigenvalue(k: HarmonicIndex, mu: BiPartition, n: usize) -> Rational {
    let h = half_shift(n);
    let k = k.get();
    let (m1, m2) = (rat(mu.v1() as i64), rat(mu.v2() as i64));
    let mut s = Rational::zero();
    for i in 0..=k {
        s += gen_binomial(&h, k - i)
            * gen_binomial(&h, i)
            * falling_factorial(&(&m1 - rat(i as i64)), k - i)
            * falling_factorial(&m2, i);
    }
    s / falling_factorial(&h, k)
}

/// Result of peeling `l = min(lambda2, mu2)` boxes off both partitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub factor: Rational,
    pub nu: BiPartition,
    pub eta: BiPartition,
}

/// `c_lambda(mu) = factor * c_nu(eta)` with
/// `factor = mu2^(lambda2) (mu1 - n - 1/2)^(lambda2) / (lambda2! (lambda1 - n - 1/2)^(lambda2))`
/// (falling powers).
pub fn reduce(lambda: BiPartition, mu: BiPartition, n: usize) -> Reduction {
    let h = half_shift(n);
    let l = lambda.v2().min(mu.v2());
    let (l1, l2) = (lambda.v1(), lambda.v2());
    let num = falling_factorial(&rat(mu.v2() as i64), l2)
        * falling_factorial(&(rat(mu.v1() as i64) - &h), l2);
    let den = factorial(l2) * falling_factorial(&(rat(l1 as i64) - &h), l2);
    Reduction {
        factor: num / den,
        nu: BiPartition::of(l1 - l, l2 - l),
        eta: BiPartition::of(mu.v1() - l, mu.v2() - l),
    }
}

/// `c_lambda(mu)` through [`reduce`] followed by [`harmonic_eigenvalue`].
pub fn eigenvalue_by_reduction(lambda: BiPartition, mu: BiPartition, n: usize) -> Rational {
    let r = reduce(lambda, mu, n);
    if r.factor.is_zero() {
        return r.factor;
    }
    let k = HarmonicIndex::new(r.nu.v1(), n).expect("reduced index is harmonic");
    r.factor * harmonic_eigenvalue(k, r.eta, n)
}
