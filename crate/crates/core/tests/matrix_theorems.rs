use osp_capelli::capelli_matrices::*;

fn all_cases(f: impl Fn(u32, usize) -> Result<(), String>) {
    for n in 1..=3 {
        for d in 0..=8 {
            if let Err(e) = f(d, n) {
                panic!("d={d} n={n}: {e}");
            }
        }
    }
}

#[test]
fn factorization_and_nonvanishing() {
    all_cases(|d, n| {
        let r = factorization_check(d, n);
        if !r.passed() {
            return Err(r.failures.join("; "));
        }
        det_nonvanishing(d, n).map(|_| ()).map_err(|e| e.to_string())?;
        evaluation_check(d, n)
    });
}

#[test]
fn md_prime_closed_form_and_recursion() {
    all_cases(md_prime_check);
}

#[test]
fn s_telescoping() {
    all_cases(telescoping_check);
}

#[test]
fn mds_determinant_and_divisibility() {
    all_cases(mds_check);
}

#[test]
fn index_set_lemmas() {
    all_cases(|d, n| {
        index_set_check(d, n)?;
        ell_check(d, n)?;
        sum_equality_check(d, n)
    });
    nu_sub_j_check(12).unwrap();
}

#[test]
fn small_spot_values() {
    let r = factorization_check(1, 2);
    assert!(r.passed());
    assert_eq!(r.det_md.degree(), Some(0));
    assert!(r.factors.iter().all(|&(_, f)| f == 0));
    assert!(factorization_check(8, 3).passed());
}
