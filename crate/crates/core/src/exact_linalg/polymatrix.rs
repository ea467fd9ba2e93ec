use std::ops::{Index, IndexMut, Mul};

use super::matrix::RatMatrix;
use super::scalar::Rational;
use super::unipoly::UniPoly;

/// Dense matrix with entries in `Q[x]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<UniPoly>,
}

/// Largest size handled by cofactor expansion in [`PolyMatrix::det`].
pub const COFACTOR_LIMIT: usize = 4;

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![UniPoly::zero(); rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> UniPoly) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<UniPoly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_rational(m: &RatMatrix) -> Self {
        Self::from_fn(m.rows(), m.cols(), |i, j| UniPoly::constant(m[(i, j)].clone()))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> Vec<UniPoly> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn eval(&self, x: &Rational) -> RatMatrix {
        RatMatrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].eval(x))
    }

    /// Exact determinant. Cofactor expansion up to [`COFACTOR_LIMIT`],
    /// fraction-free elimination beyond.
    pub fn det(&self) -> UniPoly {
        if self.rows <= COFACTOR_LIMIT {
            self.det_cofactor()
        } else {
            self.det_bareiss()
        }
    }

    /// Laplace expansion along the first row.
    pub fn det_cofactor(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let idx: Vec<usize> = (0..self.cols).collect();
        self.cofactor_rec(0, &idx)
    }

    fn cofactor_rec(&self, row: usize, cols: &[usize]) -> UniPoly {
        match cols.len() {
            0 => UniPoly::one(),
            1 => self[(row, cols[0])].clone(),
            _ => {
                let mut acc = UniPoly::zero();
                for (k, &c) in cols.iter().enumerate() {
                    let entry = &self[(row, c)];
                    if entry.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> =
                        cols.iter().enumerate().filter(|&(i, _)| i != k).map(|(_, &c)| c).collect();
                    let term = entry * &self.cofactor_rec(row + 1, &rest);
                    acc = if k % 2 == 0 { &acc + &term } else { &acc - &term };
                }
                acc
            }
        }
    }

    /// Bareiss elimination over `Q[x]`: every intermediate division is exact.
    pub fn det_bareiss(&self) -> UniPoly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return UniPoly::one();
        }
        let mut a = self.clone();
        let mut negate = false;
        let mut prev = UniPoly::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                let Some(p) = (k + 1..n).find(|&i| !a[(i, k)].is_zero()) else {
                    return UniPoly::zero();
                };
                a.swap_rows(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&a[(k, k)] * &a[(i, j)]) - &(&a[(i, k)] * &a[(k, j)]);
                    a[(i, j)] = num
                        .exact_div(&prev)
                        .expect("Bareiss step divides exactly by the previous pivot");
                }
                a[(i, k)] = UniPoly::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        if negate {
            -&det
        } else {
            det
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Index<(usize, usize)> for PolyMatrix {
    type Output = UniPoly;
    fn index(&self, (i, j): (usize, usize)) -> &UniPoly {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut UniPoly {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product dimension mismatch");
        PolyMatrix::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(UniPoly::zero(), |acc, k| &acc + &(&self[(i, k)] * &rhs[(k, j)]))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::scalar::rat;

    fn c(v: i64) -> UniPoly {
        UniPoly::constant(rat(v))
    }

    #[test]
    fn two_by_two() {
        let m = PolyMatrix::from_rows(vec![vec![c(1), UniPoly::x()], vec![UniPoly::x(), c(1)]]);
        let expected = UniPoly::from_coeffs(vec![rat(1), rat(0), rat(-1)]);
        assert_eq!(m.det(), expected);
        assert_eq!(m.det_bareiss(), expected);
    }

    #[test]
    fn diagonal_cube() {
        let m = PolyMatrix::from_fn(3, 3, |i, j| if i == j { UniPoly::x() } else { UniPoly::zero() });
        assert_eq!(m.det(), UniPoly::x().pow(3));
        assert_eq!(m.det_bareiss(), UniPoly::x().pow(3));
    }

    #[test]
    fn bareiss_needs_pivoting() {
        // zero leading pivot forces a row swap
        let m = PolyMatrix::from_rows(vec![
            vec![c(0), c(1), UniPoly::x()],
            vec![c(1), c(0), c(2)],
            vec![UniPoly::x(), c(3), c(0)],
        ]);
        assert_eq!(m.det_bareiss(), m.det_cofactor());
        let singular = PolyMatrix::from_rows(vec![
            vec![UniPoly::x(), UniPoly::x()],
            vec![c(2), c(2)],
        ]);
        assert!(singular.det_bareiss().is_zero());
    }
}
