//! One function per subcommand, each returning a [`Report`].

use std::fmt;

use num_traits::Zero;
use osp_capelli::capelli_matrices::{central_express, det_md_prime_closed, factorization_check};
use osp_capelli::eigenformulas::{capelli_eigenvalue, eigenvalue_from_knopsahi, BiPartition};
use osp_capelli::exact_linalg::rat;
use osp_capelli::fischer::{capelli_operator, component_basis, fischer_decompose, harmonic_basis};
use osp_capelli::rep::{build_osp_basis, highest_weight_vectors};
use osp_capelli::superspace::{DegreeBasis, SpaceParams};

use crate::output::{Cell, Report, Table};
use crate::suite::{run_suite, SuiteConfig, CHECKS};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad input; exit code 2.
    Usage(String),
    /// A computation failed outright; exit code 1.
    Failed(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Failed(m) => write!(f, "error: {m}"),
        }
    }
}

fn failed<E: fmt::Display>(e: E) -> CliError {
    CliError::Failed(e.to_string())
}

fn params(n: usize) -> Result<SpaceParams, CliError> {
    SpaceParams::new(n).map_err(|e| CliError::Usage(e.to_string()))
}

fn require_member(nu: BiPartition, n: usize, what: &str) -> Result<(), CliError> {
    if nu.in_lambda_star(n) {
        Ok(())
    } else {
        Err(CliError::Usage(format!("{what} = {nu} violates {what}2 >= floor(|{what}|/2) - n for n = {n}")))
    }
}

pub fn cmd_eigenvalue(
    n: usize,
    nu: BiPartition,
    mu: Option<BiPartition>,
    max_degree: usize,
    oracle: bool,
) -> Result<Report, CliError> {
    let p = params(n)?;
    require_member(nu, n, "nu")?;
    let mus: Vec<BiPartition> = match mu {
        Some(m) => {
            require_member(m, n, "mu")?;
            vec![m]
        }
        None => BiPartition::up_to(max_degree as u32).filter(|m| m.in_lambda_star(n)).collect(),
    };
    let top = mus.iter().map(|m| m.size() as usize).max().unwrap_or(0);
    let op = if oracle { Some(capelli_operator(nu, &p, top).map_err(failed)?) } else { None };

    let mut cols = vec!["nu", "mu", "c_formula", "c_knopsahi"];
    if oracle {
        cols.push("c_oracle");
    }
    cols.push("agree");
    let mut table = Table::new("eigenvalues", &cols);
    let mut all = true;
    for &m in &mus {
        let c = capelli_eigenvalue(nu, m, n);
        let ks = eigenvalue_from_knopsahi(nu, m, n).map_err(failed)?;
        let mut row: Vec<Cell> = vec![nu.to_string().into(), m.to_string().into(), c.clone().into(), ks.clone().into()];
        let mut agree = c == ks;
        if let Some(op) = &op {
            let o = op.scalar_on(&component_basis(m, &p).map_err(failed)?).map_err(failed)?;
            agree &= o == c;
            row.push(o.into());
        }
        row.push(agree.into());
        all &= agree;
        table.push(row);
    }
    let mut r = Report::new("eigenvalue");
    r.field("n", n);
    r.field("nu", nu.to_string());
    r.tables.push(table);
    r.passed = Some(all);
    Ok(r)
}

pub fn cmd_matrix(n: usize, d: u32) -> Result<Report, CliError> {
    params(n)?;
    let rep = factorization_check(d, n);
    let closed = det_md_prime_closed(d, n).map_err(failed)?;
    let at_n = rep.det_md.eval(&rat(n as i64));
    let mut r = Report::new("matrix");
    r.field("n", n);
    r.field("d", d);
    r.field("det_md", rep.det_md.to_string());
    r.field("det_md_prime", rep.det_md_prime.clone());
    r.field("det_md_prime_closed", closed.clone());
    r.field("factored", factored(&rep.det_md_prime, &rep.factors));
    r.field("degree", rep.degree_sum);
    r.field("det_md_at_n", at_n.clone());
    let mut failures = rep.failures.clone();
    if closed != rep.det_md_prime {
        failures.push(format!("closed form {closed} differs from det M_d' = {}", rep.det_md_prime));
    }
    if at_n.is_zero() {
        failures.push(format!("det M_d vanishes at x = {n}"));
    }
    let mut t = Table::new("factors", &["s", "root", "f"]);
    for &(s, f) in &rep.factors {
        t.push(vec![s.into(), (rat(s as i64) / rat(2)).into(), f.into()]);
    }
    r.tables.push(t);
    if !failures.is_empty() {
        r.field("failures", failures.join("; "));
    }
    r.passed = Some(failures.is_empty());
    Ok(r)
}

/// `det M_d' * prod (x - s/2)^f` as text, omitting trivial factors.
fn factored(lead: &osp_capelli::exact_linalg::Rational, factors: &[(usize, usize)]) -> String {
    let mut parts = vec![osp_capelli::exact_linalg::format_rational(lead)];
    parts.extend(factors
        .iter()
        .filter(|(_, f)| *f > 0)
        .map(|&(s, f)| {
            let lin = match s {
                0 => "x".to_string(),
                s if s % 2 == 0 => format!("(x - {})", s / 2),
                s => format!("(x - {s}/2)"),
            };
            if f == 1 {
                lin
            } else {
                format!("{lin}^{f}")
            }
        }));
    parts.join(" * ")
}

pub fn cmd_express(n: usize, nu: BiPartition, verify_blocks: Option<usize>) -> Result<Report, CliError> {
    let p = params(n)?;
    require_member(nu, n, "nu")?;
    let ex = central_express(nu, n).map_err(failed)?;
    let mut r = Report::new("express");
    r.field("n", n);
    r.field("nu", nu.to_string());
    let mut t = Table::new("coefficients", &["mu", "operator", "coefficient"]);
    for (mu, a) in &ex.coeffs {
        t.push(vec![mu.to_string().into(), format!("C^{} Z^{}", mu.v2(), mu.diff()).into(), a.clone().into()]);
    }
    r.tables.push(t);
    let mut ok = true;
    match ex.verify_eigenvalues(4) {
        Ok(()) => r.field("eigenvalue_check", "pass"),
        Err(e) => {
            ok = false;
            r.field("eigenvalue_check", format!("fail: {e}"));
        }
    }
    if let Some(k) = verify_blocks {
        let op = ex.operator(&p, k).map_err(failed)?;
        r.field("block_check_degrees", k);
        match ex.compare_blocks(&op) {
            Ok(()) => r.field("block_check", "pass"),
            Err(e) => {
                ok = false;
                r.field("block_check", format!("fail: {e}"));
            }
        }
    }
    r.passed = Some(ok);
    Ok(r)
}

pub fn cmd_decompose(n: usize, max_degree: usize, bases: bool) -> Result<Report, CliError> {
    let p = params(n)?;
    let lie = build_osp_basis(p, max_degree).map_err(failed)?;
    let mut comps_t = Table::new("components", &["k", "nu", "dim", "highest_weight"]);
    let mut deg_t = Table::new("degrees", &["k", "dim", "component_sum"]);
    let mut ok = true;
    for k in 0..=max_degree {
        let comps = fischer_decompose(k, &p).map_err(failed)?;
        let mut sum = 0;
        for c in &comps {
            let hw = highest_weight_vectors(c.vectors(), k, &lie).map_err(failed)?;
            let label = match hw.as_slice() {
                [(w, _)] => w.to_string(),
                _ => {
                    ok = false;
                    format!("{} lines", hw.len())
                }
            };
            comps_t.push(vec![k.into(), c.nu.to_string().into(), c.dim().into(), label.into()]);
            sum += c.dim();
        }
        let dim = DegreeBasis::new(k, &p).len();
        ok &= dim == sum;
        deg_t.push(vec![k.into(), dim.into(), sum.into()]);
    }
    let mut r = Report::new("decompose");
    r.field("n", n);
    r.field("max_degree", max_degree);
    r.tables.push(deg_t);
    r.tables.push(comps_t);
    if bases {
        let mut t = Table::new("harmonic_bases", &["k", "index", "polynomial"]);
        for k in 0..=max_degree.min(2 * n + 1) {
            for (i, poly) in harmonic_basis(k, &p).map_err(failed)?.basis.iter().enumerate() {
                t.push(vec![k.into(), i.into(), poly.to_string().into()]);
            }
        }
        r.tables.push(t);
    }
    r.passed = Some(ok);
    Ok(r)
}

/// Runs the suite; timings go to the returned diagnostics, not the report, so
/// the report is identical across runs.
pub fn cmd_verify(cfg: &SuiteConfig) -> Result<(Report, Vec<String>), CliError> {
    for &n in &cfg.ns {
        params(n)?;
    }
    let results = run_suite(cfg);
    let mut t = Table::new("checks", &["check", "n", "status", "detail"]);
    let mut diagnostics = Vec::new();
    let mut failed_count = 0;
    for r in &results {
        let (status, detail) = match &r.outcome {
            Ok(()) => ("pass", String::new()),
            Err(e) => {
                failed_count += 1;
                ("fail", e.clone())
            }
        };
        t.push(vec![r.check.into(), r.n.into(), status.into(), detail.into()]);
        diagnostics.push(format!("{:<22} n={} {:<4} {:>9.3}s", r.check, r.n, status, r.elapsed.as_secs_f64()));
    }
    let mut cols = vec!["check".to_string()];
    cols.extend(cfg.ns.iter().map(|n| format!("n={n}")));
    let col_refs: Vec<&str> = cols.iter().map(String::as_str).collect();
    let mut grid = Table::new("matrix", &col_refs);
    for &check in CHECKS {
        let mut row: Vec<Cell> = vec![check.into()];
        for &n in &cfg.ns {
            let res = results.iter().find(|r| r.check == check && r.n == n).expect("every case ran");
            row.push(if res.outcome.is_ok() { "pass" } else { "FAIL" }.into());
        }
        grid.push(row);
    }
    let mut r = Report::new("verify");
    r.field("n", cfg.ns.iter().map(ToString::to_string).collect::<Vec<_>>().join(","));
    r.field("max_degree", cfg.max_degree);
    r.field("d", cfg.d);
    r.field("seed", cfg.seed.to_string());
    r.field("checks", results.len());
    r.field("failed", failed_count as usize);
    r.tables.push(grid);
    r.tables.push(t);
    r.passed = Some(failed_count == 0);
    Ok((r, diagnostics))
}
