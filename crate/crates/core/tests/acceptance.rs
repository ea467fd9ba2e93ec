//! Acceptance suite: one line per criterion, all comparisons exact. Exits
//! nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use osp_capelli::capelli_matrices::*;
use osp_capelli::eigenformulas::{capelli_eigenvalue, knop_sahi_consistency_check, knop_sahi_vanishing, BiPartition, SymPoly2};
use osp_capelli::exact_linalg::{half_shift, rat, UniPoly};
use osp_capelli::fischer::*;
use osp_capelli::rep::*;
use osp_capelli::superspace::SpaceParams;

type Check = Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn sp(n: usize) -> Result<SpaceParams, String> {
    SpaceParams::new(n).map_err(|e| e.to_string())
}

fn for_n(f: impl Fn(usize) -> Check) -> Check {
    (1..=3).try_for_each(|n| f(n).map_err(|e| format!("n = {n}: {e}")))
}

fn for_n_d(f: impl Fn(usize, u32) -> Check) -> Check {
    for_n(|n| (0..=8).try_for_each(|d| f(n, d).map_err(|e| format!("d = {d}: {e}"))))
}

fn sl2_triple() -> Check {
    for_n(|n| {
        let r = sl2_check(sp(n)?, 12, LaplacianForm::Standard);
        r.failure.map_or(Ok(()), Err)
    })
}

fn fischer() -> Check {
    for_n(|n| fischer_check(&sp(n)?, 2 * n + 4))
}

fn highest_weights() -> Check {
    for_n(|n| (0..=2 * n + 1).try_for_each(|k| highest_weight_check(k, &sp(n)?).map(|_| ())))
}

fn casimir_scalars() -> Check {
    for_n(|n| {
        let basis = build_osp_basis(sp(n)?, 6).map_err(|e| e.to_string())?;
        let c = casimir(&basis).map_err(|e| e.to_string())?;
        verify_casimir(&c, &basis).map_err(|e| e.to_string())
    })
}

fn eigenvalues() -> Check {
    for_n(|n| eigenvalue_grid_check(&sp(n)?, 6))?;
    for_n(|n| {
        for mu in BiPartition::up_to(8).filter(|m| m.in_lambda_star(n)) {
            if capelli_eigenvalue(BiPartition::of(1, 0), mu, n) != rat(mu.size() as i64) {
                return Err(format!("c(1,0)({mu}) differs from |mu|"));
            }
        }
        Ok(())
    })?;
    let spot = capelli_eigenvalue(BiPartition::of(1, 1), BiPartition::of(2, 1), 1);
    if spot != rat(-1) {
        return Err(format!("c(1,1)((2,1)) = {spot} at n = 1"));
    }
    Ok(())
}

fn knop_sahi() -> Check {
    for_n(|n| {
        knop_sahi_consistency_check(n, 6)?;
        let p = knop_sahi_vanishing(BiPartition::of(1, 0), n).map_err(|e| e.to_string())?;
        let want = SymPoly2::x().add(&SymPoly2::y()).add(&SymPoly2::constant(half_shift(n)));
        if p != want {
            return Err(format!("P(1,0) = {p}"));
        }
        Ok(())
    })
}

fn factorization() -> Check {
    for_n_d(|n, d| {
        let r = factorization_check(d, n);
        if r.passed() {
            Ok(())
        } else {
            Err(r.failures.join("; "))
        }
    })?;
    let r = factorization_check(2, 1);
    if r.det_md != UniPoly::linear(rat(4), rat(0)) || f_ds(2, 0, 1) != 1 {
        return Err(format!("n = 1, d = 2: det M_2 = {}", r.det_md));
    }
    Ok(())
}

fn md_prime() -> Check {
    for_n_d(|n, d| md_prime_check(d, n))?;
    let v = build_md_prime(2, 1).det();
    if v != rat(4) {
        return Err(format!("det M_2' = {v} at n = 1"));
    }
    Ok(())
}

fn constructivity() -> Check {
    for_n_d(|n, d| det_nonvanishing(d, n).map(|_| ()).map_err(|e| e.to_string()))?;
    for_n(|n| express_check(&sp(n)?, 4, n <= 2))
}

fn structural() -> Check {
    for_n_d(|n, d| {
        index_set_check(d, n)?;
        ell_check(d, n)?;
        telescoping_check(d, n)?;
        mds_check(d, n)?;
        unitriangularity_check(d, n)?;
        sum_equality_check(d, n)
    })?;
    nu_sub_j_check(8)
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("sl2 triple, n<=3, degrees<=10", sl2_triple),
        ("Fischer decomposition, k<=2n+4", fischer),
        ("highest weights of H_k, k<=2n+1", highest_weights),
        ("Casimir scalars, |nu|<=6", casimir_scalars),
        ("eigenvalues: closed form, reduction, Knop-Sahi vs oracle, |nu|,|mu|<=6", eigenvalues),
        ("Knop-Sahi vanishing / explicit / shift, |nu|<=6", knop_sahi),
        ("det M_d factorization, d<=8", factorization),
        ("closed det M_d' and N_j recursion, d<=8", md_prime),
        ("det M_d(n) != 0 and central expressions", constructivity),
        ("structural lemmas, d<=8", structural),
    ];
    let mut failed = 0;
    let total = Instant::now();
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {:>2}: PASS  {name}  ({secs:.2}s)", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2}: FAIL  {name}  ({secs:.2}s): {e}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria passed ({:.2}s)",
        criteria.len() - failed,
        criteria.len(),
        total.elapsed().as_secs_f64()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
