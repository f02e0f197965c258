//! One pass/fail line per acceptance criterion. Every comparison is exact.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use orthocount::brute::{
    build_group, check_strongly_sigma_real, count_involutions, count_twisted_involutions_sp, Coset, MatrixGroup,
};
use orthocount::degree_sums::{
    gl_order, group_order, involution_count, sigma_o, sigma_o_explicit, sigma_so, sigma_so_explicit, sigma_sp,
    sigma_sp_explicit, verify_identity, GroupSpec, InvolutionKind,
};
use orthocount::series::{expand_product, ProductFactor, QExponents};
use orthocount::symbols::{odd_symbols, orth_symbols, search, split_symbols};
use orthocount::Sign;

type Outcome = std::result::Result<(), String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn run_identities(names: &[&str], qs: &[u32], order: usize) -> Outcome {
    for name in names {
        let report = verify_identity(name, Some(qs), Some(order)).map_err(|e| format!("{name}: {e}"))?;
        if let Some(c) = report.first_failure() {
            return Err(format!("{name} fails at q={} ({:?})", c.q, c.mismatch));
        }
    }
    Ok(())
}

const QS: [u32; 7] = [2, 3, 4, 5, 7, 8, 9];

fn criterion_1() -> Outcome {
    run_identities(&["old-result", "genfun-O", "genfun-SO", "indicators-O-even", "indicators-SO-even"], &QS, 12)?;
    run_identities(&["euler"], &[2, 3, 5], 20)
}

fn criterion_2() -> Outcome {
    run_identities(&["T-product", "G-product", "R-product", "W-product"], &QS, 12)?;
    for n in 0..=8 {
        check(*split_symbols(n) == search::split_symbols(n), || format!("split symbols, rank {n}"))?;
        check(*orth_symbols(n) == search::orth_symbols(n), || format!("orthogonal symbols, rank {n}"))?;
        check(*odd_symbols(n) == search::odd_symbols(n), || format!("odd symbols, rank {n}"))?;
    }
    Ok(())
}

const ENVELOPE: [(u32, u32); 5] = [(1, 2), (1, 3), (2, 2), (2, 3), (3, 2)];

struct Built {
    n: u32,
    q: u32,
    tau: Sign,
    o: MatrixGroup,
    so: MatrixGroup,
}

fn build_envelope() -> Result<Vec<Built>, String> {
    let mut out = Vec::new();
    for (n, q) in ENVELOPE {
        for tau in Sign::both() {
            let o = build_group(&GroupSpec::orthogonal(n, q, tau)).map_err(|e| e.to_string())?;
            let so = build_group(&GroupSpec::special_orthogonal(n, q, tau)).map_err(|e| e.to_string())?;
            out.push(Built { n, q, tau, o, so });
        }
    }
    Ok(out)
}

fn count(g: &MatrixGroup, coset: Coset) -> Result<BigInt, String> {
    count_involutions(g, coset).map(BigInt::from).map_err(|e| e.to_string())
}

fn criterion_3(groups: &[Built]) -> Outcome {
    for b in groups {
        let (n, q, tau) = (b.n, b.q, b.tau);
        let s_o = sigma_o(n, q, tau).map_err(|e| e.to_string())?;
        let i_o = count(&b.o, Coset::All)?;
        check(s_o == i_o, || format!("Sigma(O{tau}({},{q})) = {s_o}, I = {i_o}", 2 * n))?;
        let s_so = sigma_so(n, q, tau).map_err(|e| e.to_string())?;
        let j = if n % 2 == 0 { count(&b.so, Coset::All)? } else { count(&b.o, Coset::OMinusSO)? };
        check(s_so == j, || format!("Sigma(SO{tau}({},{q})) = {s_so}, J = {j}", 2 * n))?;
    }
    Ok(())
}

fn criterion_4(groups: &[Built]) -> Outcome {
    for b in groups {
        let (n, q, tau) = (b.n, b.q, b.tau);
        let cases = [
            (InvolutionKind::orthogonal_for(q), &b.o, Coset::All),
            (InvolutionKind::SO, &b.so, Coset::All),
            (InvolutionKind::OMinusSO, &b.o, Coset::OMinusSO),
        ];
        for (kind, g, coset) in cases {
            let series = involution_count(kind, tau, n, q).map_err(|e| e.to_string())?;
            let brute = count(g, coset)?;
            check(series == brute, || format!("{kind} at ({tau},{},{q}): {series} vs {brute}", 2 * n))?;
        }
    }
    for q in [2, 3, 4, 5] {
        for n in 1..=6 {
            for tau in Sign::both() {
                for kind in [InvolutionKind::orthogonal_for(q), InvolutionKind::SO, InvolutionKind::OMinusSO] {
                    involution_count(kind, tau, n, q).map_err(|e| e.to_string())?;
                }
            }
        }
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for q in [3, 5] {
        let euler =
            expand_product(q, &[ProductFactor::new(-1, 1, QExponents::Progression { start: 0, step: 1 }, -1)], 4);
        for n in 0..=4u32 {
            let lhs = BigRational::new(
                sigma_sp(n, q).map_err(|e| e.to_string())?,
                orthocount::degree_sums::even_power_product(q, 1, n),
            );
            let rhs = euler.coeff(n as usize).map_err(|e| e.to_string())?;
            check(&lhs == rhs, || format!("Sp chain at n={n}, q={q}: {lhs} vs {rhs}"))?;
        }
    }
    for (n, q) in [(1, 3), (1, 5), (2, 3)] {
        let spec = GroupSpec::symplectic(n, q);
        let g = build_group(&spec).map_err(|e| e.to_string())?;
        let twisted = BigInt::from(count_twisted_involutions_sp(&g).map_err(|e| e.to_string())?);
        let expected = group_order(&spec).map_err(|e| e.to_string())? / gl_order(n, q);
        check(twisted == expected, || format!("twisted count for {spec}: {twisted} vs {expected}"))?;
    }
    Ok(())
}

fn criterion_6(groups: &[Built]) -> Outcome {
    for b in groups.iter().filter(|b| b.n % 2 == 1) {
        let report = check_strongly_sigma_real(&b.so, &b.o).map_err(|e| e.to_string())?;
        check(report.passed(), || {
            format!("SO{}({},{}): {} elements not inverted", b.tau, 2 * b.n, b.q, report.failures.len())
        })?;
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for q in [2, 3] {
        for n in 1..=3 {
            for tau in Sign::both() {
                let i = (tau == Sign::Minus) as usize;
                let a = sigma_o(n, q, tau).map_err(|e| e.to_string())?;
                let b = sigma_o_explicit(n, q).map_err(|e| e.to_string())?[i].clone();
                check(a == b, || format!("Sigma(O{tau}({},{q})): {a} vs {b}", 2 * n))?;
                let a = sigma_so(n, q, tau).map_err(|e| e.to_string())?;
                let b = sigma_so_explicit(n, q).map_err(|e| e.to_string())?[i].clone();
                check(a == b, || format!("Sigma(SO{tau}({},{q})): {a} vs {b}", 2 * n))?;
            }
            let a = sigma_sp(n, q).map_err(|e| e.to_string())?;
            let b = sigma_sp_explicit(n, q).map_err(|e| e.to_string())?;
            check(a == b, || format!("Sigma(Sp({},{q})): {a} vs {b}", 2 * n))?;
        }
    }
    Ok(())
}

fn timed(id: u32, label: &'static str, f: impl FnOnce() -> Outcome) -> (u32, &'static str, Outcome, f64) {
    let t = Instant::now();
    let r = f();
    (id, label, r, t.elapsed().as_secs_f64())
}

#[test]
fn acceptance() {
    let mut results =
        vec![timed(1, "identity suite", criterion_1), timed(2, "sum-vs-product and symbol enumeration", criterion_2)];
    let t = Instant::now();
    let groups = build_envelope();
    let build_secs = t.elapsed().as_secs_f64();
    let brute =
        [(3, "degree sum = involution count"), (4, "involution series vs brute force"), (6, "strong sigma-reality")];
    for (id, label) in brute {
        results.push(match &groups {
            Ok(g) => timed(id, label, || match id {
                3 => criterion_3(g),
                4 => criterion_4(g),
                _ => criterion_6(g),
            }),
            Err(e) => (id, label, Err(format!("group construction: {e}")), 0.0),
        });
    }
    results.push(timed(5, "symplectic chain and twisted counts", criterion_5));
    results.push(timed(7, "graded vs explicit degree sums", criterion_7));
    results.sort_by_key(|r| r.0);
    println!("group construction: {build_secs:.2}s");
    for (id, label, r, secs) in &results {
        match r {
            Ok(()) => println!("criterion {id}: PASS  {label} ({secs:.2}s)"),
            Err(e) => println!("criterion {id}: FAIL  {label}: {e}"),
        }
    }
    assert!(results.iter().all(|r| r.2.is_ok()), "acceptance failures");
}
