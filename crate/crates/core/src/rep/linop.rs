use num_traits::Zero;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::exact_linalg::{RatMatrix, Rational};
use crate::superspace::{degree_dim, DegreeBasis, Parity, SpaceParams, SuperMonomial, SuperPoly};

/// A homogeneous operator on superpolynomials, stored as one exact matrix per
/// source degree.
///
/// Block `k` maps coordinates on `P^k` to coordinates on `P^{k+shift}` (an
/// empty target when `k + shift < 0`). Blocks exist for source degrees
/// `0..=max_source_degree()`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinOpBlocks {
    params: SpaceParams,
    shift: i32,
    parity: Parity,
    blocks: Vec<RatMatrix>,
}

fn target_dim(k: usize, shift: i32, params: &SpaceParams) -> usize {
    let t = k as i64 + shift as i64;
    if t < 0 {
        0
    } else {
        degree_dim(t as usize, params)
    }
}

impl LinOpBlocks {
    /// Builds the operator from its action on monomials, covering every source
    /// degree whose target degree stays within `max_degree`.
    pub fn from_fn<F>(
        params: SpaceParams,
        shift: i32,
        parity: Parity,
        max_degree: usize,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(&SuperMonomial) -> SuperPoly + Sync,
    {
        let top = max_degree as i64 - shift.max(0) as i64;
        if top < 0 {
            return Ok(Self { params, shift, parity, blocks: Vec::new() });
        }
        let blocks = (0..=top as usize)
            .into_par_iter()
            .map(|k| {
                let src = DegreeBasis::new(k, &params);
                let t = k as i64 + shift as i64;
                let tgt = (t >= 0).then(|| DegreeBasis::new(t as usize, &params));
                let mut m = RatMatrix::zeros(tgt.as_ref().map_or(0, DegreeBasis::len), src.len());
                for (j, mono) in src.monomials().iter().enumerate() {
                    let image = f(mono);
                    for (im, c) in image.terms() {
                        let pos = tgt.as_ref().and_then(|b| b.position(im)).ok_or_else(|| {
                            Error::ShiftMismatch(format!(
                                "image of {mono} contains {im}, expected degree {t}"
                            ))
                        })?;
                        m[(pos, j)] = c.clone();
                    }
                }
                Ok(m)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { params, shift, parity, blocks })
    }

    pub fn from_blocks(params: SpaceParams, shift: i32, parity: Parity, blocks: Vec<RatMatrix>) -> Self {
        for (k, b) in blocks.iter().enumerate() {
            assert_eq!(b.cols(), degree_dim(k, &params), "block {k} has wrong source dimension");
            assert_eq!(b.rows(), target_dim(k, shift, &params), "block {k} has wrong target dimension");
        }
        Self { params, shift, parity, blocks }
    }

    pub fn identity(params: SpaceParams, max_degree: usize) -> Self {
        Self::scalar(params, max_degree, &Rational::from_integer(1.into()))
    }

    pub fn scalar(params: SpaceParams, max_degree: usize, s: &Rational) -> Self {
        let blocks = (0..=max_degree).map(|k| RatMatrix::scalar(degree_dim(k, &params), s)).collect();
        Self { params, shift: 0, parity: Parity::Even, blocks }
    }

    pub fn zero(params: SpaceParams, shift: i32, parity: Parity, max_source_degree: usize) -> Self {
        let blocks = (0..=max_source_degree)
            .map(|k| RatMatrix::zeros(target_dim(k, shift, &params), degree_dim(k, &params)))
            .collect();
        Self { params, shift, parity, blocks }
    }

    pub fn params(&self) -> SpaceParams {
        self.params
    }

    pub fn shift(&self) -> i32 {
        self.shift
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Number of source degrees covered; `None` when no block exists.
    pub fn max_source_degree(&self) -> Option<usize> {
        self.blocks.len().checked_sub(1)
    }

    pub fn block(&self, k: usize) -> Option<&RatMatrix> {
        self.blocks.get(k)
    }

    pub fn blocks(&self) -> &[RatMatrix] {
        &self.blocks
    }

    pub fn truncate(&self, max_source_degree: usize) -> Self {
        let mut out = self.clone();
        out.blocks.truncate(max_source_degree + 1);
        out
    }

    /// `self ∘ other`, defined on the source degrees where both factors are.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.params, other.params, "operators on different spaces");
        let mut blocks = Vec::new();
        for (k, b) in other.blocks.iter().enumerate() {
            let mid = k as i64 + other.shift as i64;
            let shift = self.shift + other.shift;
            if mid < 0 {
                blocks.push(RatMatrix::zeros(target_dim(k, shift, &self.params), b.cols()));
                continue;
            }
            match self.blocks.get(mid as usize) {
                Some(a) => blocks.push(a * b),
                None => break,
            }
        }
        Self {
            params: self.params,
            shift: self.shift + other.shift,
            parity: self.parity.add(other.parity),
            blocks,
        }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&RatMatrix, &RatMatrix) -> RatMatrix) -> Self {
        assert_eq!(self.params, other.params, "operators on different spaces");
        assert_eq!(self.shift, other.shift, "operators with different degree shifts");
        let blocks = self.blocks.iter().zip(&other.blocks).map(|(a, b)| f(a, b)).collect();
        Self { params: self.params, shift: self.shift, parity: self.parity, blocks }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self {
            params: self.params,
            shift: self.shift,
            parity: self.parity,
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    /// `A∘B - (-1)^{|A||B|} B∘A`.
    pub fn supercommutator(&self, other: &Self) -> Self {
        let ab = self.compose(other);
        let ba = other.compose(self);
        let len = ab.blocks.len().min(ba.blocks.len());
        let ab = ab.truncate_len(len);
        let ba = ba.truncate_len(len);
        if self.parity.sign_with(other.parity) < 0 {
            ab.add(&ba)
        } else {
            ab.sub(&ba)
        }
    }

    fn truncate_len(mut self, len: usize) -> Self {
        self.blocks.truncate(len);
        self
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(RatMatrix::is_zero)
    }

    /// Exact comparison; reports the first mismatch.
    pub fn diff_report(&self, other: &Self) -> std::result::Result<(), String> {
        if self.shift != other.shift {
            return Err(format!("degree shifts differ: {} vs {}", self.shift, other.shift));
        }
        if self.blocks.len() != other.blocks.len() {
            return Err(format!(
                "covered source degrees differ: {} vs {} blocks",
                self.blocks.len(),
                other.blocks.len()
            ));
        }
        for (k, (a, b)) in self.blocks.iter().zip(&other.blocks).enumerate() {
            if a != b {
                let (i, j) = (0..a.rows())
                    .flat_map(|i| (0..a.cols()).map(move |j| (i, j)))
                    .find(|&(i, j)| a[(i, j)] != b[(i, j)])
                    .unwrap_or((0, 0));
                return Err(format!("source degree {k}, entry ({i},{j}) differs"));
            }
        }
        Ok(())
    }

    /// Applies the operator to a polynomial whose degrees are all covered.
    pub fn apply(&self, p: &SuperPoly) -> Result<SuperPoly> {
        let mut out = SuperPoly::zero(self.params);
        for (k, part) in p.homogeneous_parts() {
            let block = self.blocks.get(k).ok_or_else(|| {
                Error::Dimension(format!("operator has no block for source degree {k}"))
            })?;
            let t = k as i64 + self.shift as i64;
            if t < 0 {
                continue;
            }
            let src = DegreeBasis::new(k, &self.params);
            let tgt = DegreeBasis::new(t as usize, &self.params);
            let v = block.mul_vec(&part.to_vector(&src)?);
            out = out.add(&SuperPoly::from_vector(self.params, &tgt, &v));
        }
        Ok(out)
    }

    /// Applies block `k` to a coordinate vector on `P^k`.
    pub fn apply_vector(&self, k: usize, v: &[Rational]) -> Option<Vec<Rational>> {
        self.blocks.get(k).map(|b| b.mul_vec(v))
    }

    /// True when block `k` is `s` times the identity for some `s`, returned.
    pub fn scalar_on_block(&self, k: usize) -> Option<Rational> {
        let b = self.blocks.get(k)?;
        if self.shift != 0 || b.rows() == 0 {
            return None;
        }
        let s = b[(0, 0)].clone();
        let ok = (0..b.rows()).all(|i| {
            (0..b.cols()).all(|j| if i == j { b[(i, j)] == s } else { b[(i, j)].is_zero() })
        });
        ok.then_some(s)
    }
}
