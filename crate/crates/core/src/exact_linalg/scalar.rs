use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `n + 1/2`, the half-integer shift that appears in every eigenvalue formula.
pub fn half_shift(n: usize) -> Rational {
    ratio(2 * n as i64 + 1, 2)
}

/// Falling factorial `x (x-1) ... (x-i+1)`; the empty product is 1.
pub fn falling_factorial(x: &Rational, i: u32) -> Rational {
    let mut acc = Rational::one();
    let mut term = x.clone();
    for _ in 0..i {
        acc *= &term;
        term -= Rational::one();
    }
    acc
}

pub fn factorial(k: u32) -> Rational {
    falling_factorial(&rat(k as i64), k)
}

/// Generalized binomial coefficient `x^{(k)} / k!` for rational `x`.
pub fn gen_binomial(x: &Rational, k: u32) -> Rational {
    falling_factorial(x, k) / factorial(k)
}

/// `base^exp` with the convention `0^0 = 1`.
pub fn pow(base: &Rational, exp: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// Vandermonde determinant `prod_{j<i} (a_i - a_j)`.
pub fn vandermonde_det(points: &[Rational]) -> Rational {
    let mut acc = Rational::one();
    for i in 0..points.len() {
        for j in 0..i {
            acc *= &points[i] - &points[j];
        }
    }
    acc
}

/// Renders a rational as `p/q` (or `p` when integral).
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
