//! Exact arithmetic substrate: rationals, `Q[x]`, and dense linear algebra
//! over both.

mod matrix;
mod polymatrix;
mod scalar;
mod unipoly;

pub use matrix::RatMatrix;
pub use polymatrix::{PolyMatrix, COFACTOR_LIMIT};
pub use scalar::{
    factorial, falling_factorial, format_rational, gen_binomial, half_shift, pow, rat, ratio,
    vandermonde_det, Rational,
};
pub use unipoly::UniPoly;

/// The node-power matrix `[a_j^(i-1)]` with `0^0 = 1`.
pub fn vandermonde_matrix(points: &[Rational]) -> RatMatrix {
    let s = points.len();
    RatMatrix::from_fn(s, s, |i, j| pow(&points[j], i as u32))
}
