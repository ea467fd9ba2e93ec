use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact_linalg::{rat, RatMatrix, Rational};
use crate::superspace::{Parity, SpaceParams, SuperPoly};

use super::ops::{euler, polarize};
use super::LinOpBlocks;

/// Integer coordinates in the basis `delta_1, ..., delta_n` of the dual Cartan.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightVector(Vec<i64>);

impl WeightVector {
    pub fn zero(n: usize) -> Self {
        Self(vec![0; n])
    }

    pub fn new(coords: Vec<i64>) -> Self {
        Self(coords)
    }

    /// `delta_i` (1-based).
    pub fn delta(i: usize, n: usize) -> Self {
        let mut v = vec![0; n];
        v[i - 1] = 1;
        Self(v)
    }

    /// `delta_1 + ... + delta_m`.
    pub fn fundamental(m: usize, n: usize) -> Self {
        Self((0..n).map(|i| i64::from(i < m)).collect())
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Positivity for the Borel with simple roots `delta_i - delta_{i+1}` and
    /// `delta_n`: a nonzero root is positive iff all partial sums are `>= 0`.
    pub fn is_positive(&self) -> bool {
        let mut sum = 0;
        for &c in &self.0 {
            sum += c;
            if sum < 0 {
                return false;
            }
        }
        !self.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A homogeneous element of `osp(1|2n)` together with its action on
/// superpolynomials.
#[derive(Debug, Clone)]
pub struct LieElement {
    pub label: String,
    /// `(2n+1) x (2n+1)` matrix; row/column 0 is `y`, index `i` is `x_i`.
    pub matrix: RatMatrix,
    pub parity: Parity,
    pub root: WeightVector,
    pub action: LinOpBlocks,
}

/// Homogeneous basis of `osp(1|2n)`, the Cartan sublist and the central
/// element `Z` (acting as the degree operator).
#[derive(Debug, Clone)]
pub struct LieBasis {
    params: SpaceParams,
    max_degree: usize,
    elements: Vec<LieElement>,
    cartan: Vec<usize>,
    z_action: LinOpBlocks,
}

/// The even supersymmetric form: `J[0][0] = 1`, `J[i][i+n] = 1`,
/// `J[i+n][i] = -1`.
pub fn osp_form(params: SpaceParams) -> RatMatrix {
    let n = params.n();
    let mut j = RatMatrix::zeros(2 * n + 1, 2 * n + 1);
    j[(0, 0)] = rat(1);
    for i in 1..=n {
        j[(i, i + n)] = rat(1);
        j[(i + n, i)] = rat(-1);
    }
    j
}

/// Supertranspose with one even index: `[[A, B], [C, D]]` goes to
/// `[[A^T, -C^T], [B^T, D^T]]`.
pub fn supertranspose(x: &RatMatrix) -> RatMatrix {
    RatMatrix::from_fn(x.cols(), x.rows(), |i, j| {
        let v = x[(j, i)].clone();
        if i == 0 && j > 0 {
            -v
        } else {
            v
        }
    })
}

/// `X^{st} J + J X = 0`.
pub fn is_osp(x: &RatMatrix, params: SpaceParams) -> bool {
    let j = osp_form(params);
    (&(&supertranspose(x) * &j) + &(&j * x)).is_zero()
}

/// Parity of a matrix that is homogeneous; `None` for mixed support.
pub fn matrix_parity(x: &RatMatrix) -> Option<Parity> {
    let mut seen: Option<Parity> = None;
    for i in 0..x.rows() {
        for j in 0..x.cols() {
            if x[(i, j)].is_zero() {
                continue;
            }
            let p = if (i == 0) == (j == 0) { Parity::Even } else { Parity::Odd };
            match seen {
                None => seen = Some(p),
                Some(q) if q != p => return None,
                _ => {}
            }
        }
    }
    Some(seen.unwrap_or(Parity::Even))
}

/// Super bracket `XY - (-1)^{|X||Y|} YX` of homogeneous matrices.
pub fn super_bracket(x: &RatMatrix, px: Parity, y: &RatMatrix, py: Parity) -> RatMatrix {
    let xy = x * y;
    let yx = y * x;
    if px.sign_with(py) < 0 {
        &xy + &yx
    } else {
        &xy - &yx
    }
}

/// Action of an arbitrary matrix `sum X_ab E_ab` by linearity of the table.
pub fn matrix_action(x: &RatMatrix, parity: Parity, params: SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
    let entries: Vec<(usize, usize, Rational)> = (0..x.rows())
        .flat_map(|a| (0..x.cols()).map(move |b| (a, b)))
        .filter(|&(a, b)| !x[(a, b)].is_zero())
        .map(|(a, b)| (a, b, x[(a, b)].clone()))
        .collect();
    LinOpBlocks::from_fn(params, 0, parity, max_degree, |m| {
        let mut out = SuperPoly::zero(params);
        for (a, b, c) in &entries {
            out = out.add(&polarize(a + 1, b + 1, params, m).scale(c));
        }
        out
    })
}

fn unit(size: usize, entries: &[(usize, usize, i64)]) -> RatMatrix {
    let mut m = RatMatrix::zeros(size, size);
    for &(i, j, v) in entries {
        m[(i, j)] += rat(v);
    }
    m
}

fn cartan_matrix(i: usize, n: usize) -> RatMatrix {
    unit(2 * n + 1, &[(i, i, 1), (i + n, i + n, -1)])
}

/// Root of `x` under the adjoint action of the Cartan; errors if `x` is not a
/// joint eigenvector.
fn root_of(x: &RatMatrix, n: usize) -> Result<WeightVector> {
    let (a, b) = (0..x.rows())
        .flat_map(|a| (0..x.cols()).map(move |b| (a, b)))
        .find(|&(a, b)| !x[(a, b)].is_zero())
        .ok_or_else(|| Error::Verification("zero matrix has no root".into()))?;
    let mut coords = Vec::with_capacity(n);
    for k in 1..=n {
        let h = cartan_matrix(k, n);
        let c = &h[(a, a)] - &h[(b, b)];
        let br = &(&h * x) - &(x * &h);
        if br != x.scale(&c) {
            return Err(Error::Verification(format!("matrix is not a root vector for h{k}")));
        }
        let c = c.to_integer();
        coords.push(i64::try_from(c).expect("small root coordinate"));
    }
    Ok(WeightVector(coords))
}

/// Root-vector matrices with labels, in a fixed order: Cartan, then the even
/// roots, then the odd ones.
fn osp_matrices(n: usize) -> Vec<(String, RatMatrix)> {
    let s = 2 * n + 1;
    let mut out = Vec::new();
    for i in 1..=n {
        out.push((format!("h{i}"), cartan_matrix(i, n)));
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push((format!("e[d{i}-d{j}]"), unit(s, &[(i, j, 1), (j + n, i + n, -1)])));
            }
        }
    }
    for i in 1..=n {
        for j in i..=n {
            let (up, down) = if i == j {
                (unit(s, &[(i, i + n, 1)]), unit(s, &[(i + n, i, 1)]))
            } else {
                (
                    unit(s, &[(i, j + n, 1), (j, i + n, 1)]),
                    unit(s, &[(i + n, j, 1), (j + n, i, 1)]),
                )
            };
            let (lu, ld) = if i == j {
                (format!("e[2d{i}]"), format!("e[-2d{i}]"))
            } else {
                (format!("e[d{i}+d{j}]"), format!("e[-d{i}-d{j}]"))
            };
            out.push((lu, up));
            out.push((ld, down));
        }
    }
    for i in 1..=n {
        out.push((format!("f[d{i}]"), unit(s, &[(0, i + n, 1), (i, 0, 1)])));
        out.push((format!("f[-d{i}]"), unit(s, &[(0, i, 1), (i + n, 0, -1)])));
    }
    out
}

/// Homogeneous basis of `osp(1|2n)` with actions on degrees `0..=max_degree`.
pub fn build_osp_basis(params: SpaceParams, max_degree: usize) -> Result<LieBasis> {
    let n = params.n();
    let mut elements = Vec::new();
    let mut cartan = Vec::new();
    for (idx, (label, matrix)) in osp_matrices(n).into_iter().enumerate() {
        if !is_osp(&matrix, params) {
            return Err(Error::Verification(format!("{label} does not preserve the form")));
        }
        let parity = matrix_parity(&matrix).expect("basis matrices are homogeneous");
        let root = root_of(&matrix, n)?;
        if label.starts_with('h') {
            cartan.push(idx);
        }
        let action = matrix_action(&matrix, parity, params, max_degree)?;
        elements.push(LieElement { label, matrix, parity, root, action });
    }
    let z_action = euler(params, max_degree)?;
    Ok(LieBasis { params, max_degree, elements, cartan, z_action })
}

impl LieBasis {
    pub fn params(&self) -> SpaceParams {
        self.params
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn elements(&self) -> &[LieElement] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn cartan(&self) -> impl Iterator<Item = &LieElement> {
        self.cartan.iter().map(|&i| &self.elements[i])
    }

    pub fn positive_roots(&self) -> impl Iterator<Item = &LieElement> {
        self.elements.iter().filter(|e| e.root.is_positive())
    }

    /// Action of the central element `Z`.
    pub fn z_action(&self) -> &LinOpBlocks {
        &self.z_action
    }

    /// Coordinates of `x` in the basis, or `None` if `x` is outside the span.
    pub fn coordinates(&self, x: &RatMatrix) -> Option<Vec<Rational>> {
        let flat = |m: &RatMatrix| -> Vec<Rational> {
            (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
        };
        let cols: Vec<Vec<Rational>> = self.elements.iter().map(|e| flat(&e.matrix)).collect();
        let len = cols[0].len();
        let mut all = cols;
        all.push(flat(x));
        let aug = RatMatrix::from_columns(len, &all);
        let (r, pivots) = aug.rref();
        let dim = self.elements.len();
        if pivots.last() == Some(&dim) {
            return None;
        }
        let mut c = vec![Rational::zero(); dim];
        for (row, &p) in pivots.iter().enumerate() {
            c[p] = r[(row, dim)].clone();
        }
        Some(c)
    }

    /// For every pair of basis elements, the bracket lies in the span and the
    /// action of the bracket is the supercommutator of the actions.
    pub fn check_closure(&self) -> std::result::Result<(), String> {
        for (i, a) in self.elements.iter().enumerate() {
            for b in &self.elements[i..] {
                let br = super_bracket(&a.matrix, a.parity, &b.matrix, b.parity);
                let coords = self
                    .coordinates(&br)
                    .ok_or_else(|| format!("[{}, {}] leaves the span", a.label, b.label))?;
                let mut expected = LinOpBlocks::zero(self.params, 0, a.parity.add(b.parity), self.max_degree);
                for (c, e) in coords.iter().zip(&self.elements) {
                    if !c.is_zero() {
                        expected = expected.add(&e.action.scale(c));
                    }
                }
                let actual = a.action.supercommutator(&b.action);
                actual
                    .diff_report(&expected)
                    .map_err(|m| format!("action of [{}, {}]: {m}", a.label, b.label))?;
            }
        }
        Ok(())
    }

    /// Gram matrix of the supertrace form `str(XY)` on the basis.
    pub fn gram_matrix(&self) -> RatMatrix {
        let d = self.elements.len();
        RatMatrix::from_fn(d, d, |a, b| {
            let p = &self.elements[a].matrix * &self.elements[b].matrix;
            let mut s = p[(0, 0)].clone();
            for i in 1..p.rows() {
                s -= &p[(i, i)];
            }
            s
        })
    }
}

