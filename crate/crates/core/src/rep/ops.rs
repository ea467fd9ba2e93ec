use crate::error::{Error, Result};
use crate::exact_linalg::{rat, Rational};
use crate::superspace::{Parity, SpaceParams, SuperMonomial, SuperPoly};

use super::LinOpBlocks;

fn index_parity(a: usize) -> Parity {
    if a == 1 {
        Parity::Even
    } else {
        Parity::Odd
    }
}

fn check_gl_index(a: usize, params: &SpaceParams) -> Result<()> {
    let max = params.odd_dim() + 1;
    if a == 0 || a > max {
        return Err(Error::InvalidIndex(format!("gl index {a} outside 1..={max}")));
    }
    Ok(())
}

/// `gen_a * d_b` applied to a monomial, with index 1 standing for `y` and
/// index `j + 1` for `x_j`.
pub(crate) fn polarize(a: usize, b: usize, params: SpaceParams, m: &SuperMonomial) -> SuperPoly {
    let p = SuperPoly::monomial(params, *m, rat(1));
    let d = if b == 1 {
        p.derive_y()
    } else {
        p.derive_odd(b - 1).expect("index checked by caller")
    };
    let g = if a == 1 { SuperMonomial::y_pow(1) } else { SuperMonomial::x(a - 1) };
    d.mul_monomial_left(&g, &rat(1))
}

/// The operator of the elementary matrix `E_{ab}` of `gl(1|2n)` (1-based
/// indices, 1 for `y`), as blocks on degrees `0..=max_degree`.
pub fn build_action(a: usize, b: usize, params: SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
    check_gl_index(a, &params)?;
    check_gl_index(b, &params)?;
    let parity = index_parity(a).add(index_parity(b));
    LinOpBlocks::from_fn(params, 0, parity, max_degree, |m| polarize(a, b, params, m))
}

/// The degree operator `E = y d_y + sum x_i d_i`.
pub fn euler(params: SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
    LinOpBlocks::from_fn(params, 0, Parity::Even, max_degree, |m| {
        (1..=params.odd_dim() + 1)
            .fold(SuperPoly::zero(params), |acc, a| acc.add(&polarize(a, a, params, m)))
    })
}

/// `R^2 = y^2 - 2 sum_{i<=n} x_{i+n} x_i` as a polynomial.
pub fn r_squared_poly(params: SpaceParams) -> SuperPoly {
    let n = params.n();
    let mut r = SuperPoly::monomial(params, SuperMonomial::y_pow(2), rat(1));
    for i in 1..=n {
        let term = SuperPoly::x(params, i + n).mul(&SuperPoly::x(params, i));
        r = r.sub(&term.scale(&rat(2)));
    }
    r
}

/// Multiplication by `R^2`, degree shift `+2`.
pub fn r_squared(params: SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
    let r2 = r_squared_poly(params);
    LinOpBlocks::from_fn(params, 2, Parity::Even, max_degree, |m| {
        r2.mul(&SuperPoly::monomial(params, *m, rat(1)))
    })
}

/// Which formula to use for the Laplacian. Only [`LaplacianForm::Standard`] is
/// the real operator; the others exist as negative controls.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LaplacianForm {
    /// `d_y^2 - 2 sum d_{i+n} d_i`.
    #[default]
    Standard,
    /// `d_y - 2 sum d_{i+n} d_i`, which has no single degree shift.
    FirstOrderY,
    /// `d_y^2 + 2 sum d_{i+n} d_i`.
    FlippedSign,
}

fn laplacian_poly(form: LaplacianForm, p: &SuperPoly) -> SuperPoly {
    let params = p.params();
    let n = params.n();
    let mut odd = SuperPoly::zero(params);
    for i in 1..=n {
        let d = p.derive_odd(i).and_then(|q| q.derive_odd(i + n)).expect("indices in range");
        odd = odd.add(&d);
    }
    let two = rat(2);
    match form {
        LaplacianForm::Standard => p.derive_y().derive_y().sub(&odd.scale(&two)),
        LaplacianForm::FirstOrderY => p.derive_y().sub(&odd.scale(&two)),
        LaplacianForm::FlippedSign => p.derive_y().derive_y().add(&odd.scale(&two)),
    }
}

/// The super Laplacian `d_y^2 - 2 sum_{i<=n} d_{i+n} d_i`, degree shift `-2`.
pub fn laplacian(params: SpaceParams, max_degree: usize) -> Result<LinOpBlocks> {
    laplacian_with(params, max_degree, LaplacianForm::Standard)
}

pub fn laplacian_with(params: SpaceParams, max_degree: usize, form: LaplacianForm) -> Result<LinOpBlocks> {
    LinOpBlocks::from_fn(params, -2, Parity::Even, max_degree, |m| {
        laplacian_poly(form, &SuperPoly::monomial(params, *m, rat(1)))
    })
}

/// Outcome of checking the `sl2` relations of `h = E + (1-2n)/2`,
/// `e = R^2/2`, `f = -Laplacian/2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sl2Report {
    pub n: usize,
    pub max_degree: usize,
    pub failure: Option<String>,
}

impl Sl2Report {
    pub fn passed(&self) -> bool {
        self.failure.is_none()
    }
}

/// Checks `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h` exactly on degrees `<= K-2`.
pub fn sl2_check(params: SpaceParams, max_degree: usize, form: LaplacianForm) -> Sl2Report {
    let failure = sl2_failure(params, max_degree, form).err();
    Sl2Report { n: params.n(), max_degree, failure }
}

fn sl2_failure(params: SpaceParams, k: usize, form: LaplacianForm) -> std::result::Result<(), String> {
    if k < 4 {
        return Err(format!("max degree must be at least 4, got {k}"));
    }
    let lap = laplacian_with(params, k, form).map_err(|e| e.to_string())?;
    let r2 = r_squared(params, k).map_err(|e| e.to_string())?;
    let e_op = euler(params, k).map_err(|e| e.to_string())?;
    let shift = Rational::new((1 - 2 * params.n() as i64).into(), 2.into());
    let h = e_op.add(&LinOpBlocks::scalar(params, k, &shift));
    let e = r2.scale(&Rational::new(1.into(), 2.into()));
    let f = lap.scale(&Rational::new((-1).into(), 2.into()));
    let top = k - 2;

    let he = h.supercommutator(&e).truncate(top);
    he.diff_report(&e.scale(&rat(2)).truncate(top)).map_err(|m| format!("[h,e] = 2e: {m}"))?;
    let hf = h.supercommutator(&f).truncate(top);
    hf.diff_report(&f.scale(&rat(-2)).truncate(top)).map_err(|m| format!("[h,f] = -2f: {m}"))?;
    let ef = e.supercommutator(&f).truncate(top);
    ef.diff_report(&h.truncate(top)).map_err(|m| format!("[e,f] = h: {m}"))?;
    Ok(())
}

/// Checks `Lap (R^2)^t - (R^2)^t Lap = 2t(2k+1-2n+2(t-1)) (R^2)^{t-1}` on
/// `P^k` for `1 <= t <= max_t` and `k <= K - 2t`.
pub fn lap_r_relation_check(params: SpaceParams, max_degree: usize, max_t: usize) -> std::result::Result<(), String> {
    let lap = laplacian(params, max_degree).map_err(|e| e.to_string())?;
    let r2 = r_squared(params, max_degree).map_err(|e| e.to_string())?;
    let n = params.n() as i64;
    let mut prev = LinOpBlocks::identity(params, max_degree);
    for t in 1..=max_t {
        if 2 * t > max_degree {
            break;
        }
        let pow_t = r2.compose(&prev);
        let lhs = lap.compose(&pow_t).sub(&pow_t.compose(&lap).truncate(max_degree - 2 * t));
        for k in 0..=max_degree - 2 * t {
            let c = 2 * t as i64 * (2 * k as i64 + 1 - 2 * n + 2 * (t as i64 - 1));
            let want = prev.block(k).expect("covered").scale(&rat(c));
            if lhs.block(k) != Some(&want) {
                return Err(format!("t = {t}, degree {k}"));
            }
        }
        prev = pow_t;
    }
    Ok(())
}
