use num_traits::ToPrimitive;
use orthocount::brute::{
    build_group, check_strongly_sigma_real, count_involutions, count_twisted_involutions_sp, Coset, MatrixGroup,
    MAX_BRUTE_ORDER, MAX_DIM,
};
use orthocount::degree_sums::{
    check_identity, gl_order, group_order, identity_applies, involution_count, j_count, sigma_o, sigma_o_explicit,
    sigma_so, sigma_so_explicit, sigma_sp, sigma_sp_explicit, GroupSpec, InvolutionKind,
};
use orthocount::Sign;
use rayon::prelude::*;

use crate::report::Record;

fn err(e: impl ToString) -> String {
    e.to_string()
}

pub fn identity_records(names: &[String], qs: &[u32], order: usize) -> Vec<Record> {
    let jobs: Vec<(&String, u32)> =
        names.iter().flat_map(|n| qs.iter().filter(|&&q| identity_applies(n, q)).map(move |&q| (n, q))).collect();
    jobs.par_iter()
        .map(|&(name, q)| {
            Record::timed(format!("identity/{name}"), format!("q={q:02} order={order:02}"), || {
                let check = check_identity(name, q, order).map_err(err)?;
                Ok(match check.mismatch {
                    None => (true, None, None),
                    Some(m) => {
                        (false, Some(format!("{}[{}] {}", m.component, m.index, m.lhs)), Some(m.rhs.to_string()))
                    }
                })
            })
        })
        .collect()
}

/// Whether the brute-force oracle can build `spec`.
pub fn brute_feasible(spec: &GroupSpec) -> bool {
    2 * spec.n as usize <= MAX_DIM
        && group_order(spec).ok().and_then(|o| o.to_u64()).is_some_and(|o| o <= MAX_BRUTE_ORDER)
}

fn label(kind: &str, tau: Option<Sign>, n: u32, q: u32) -> String {
    let t = tau.map(|t| t.to_string()).unwrap_or_default();
    format!("{kind}{t}({:02},{q:02})", 2 * n)
}

enum Job {
    Orthogonal { n: u32, q: u32, tau: Sign, brute: bool },
    Symplectic { n: u32, q: u32, brute: bool },
    Explicit { n: u32, q: u32 },
}

fn orthogonal_records(n: u32, q: u32, tau: Sign, brute: bool) -> Vec<Record> {
    let o_label = label("O", Some(tau), n, q);
    let so_label = label("SO", Some(tau), n, q);
    let mut out = vec![
        Record::compare("sigma-vs-series", o_label.clone(), || {
            Ok((
                sigma_o(n, q, tau).map_err(err)?,
                involution_count(InvolutionKind::orthogonal_for(q), tau, n, q).map_err(err)?,
            ))
        }),
        Record::compare("sigma-vs-series", so_label.clone(), || {
            Ok((sigma_so(n, q, tau).map_err(err)?, j_count(tau, n, q).map_err(err)?))
        }),
    ];
    if !brute {
        return out;
    }
    let built = build_group(&GroupSpec::orthogonal(n, q, tau))
        .and_then(|o| Ok((build_group(&GroupSpec::special_orthogonal(n, q, tau))?, o)));
    let (so, o) = match built {
        Ok(pair) => pair,
        Err(e) => {
            out.push(Record::timed("brute-build", o_label, || Err(e.to_string())));
            return out;
        }
    };
    let count = |g: &MatrixGroup, c: Coset| count_involutions(g, c).map_err(err);
    out.push(Record::compare("sigma-vs-brute", o_label.clone(), || {
        Ok((sigma_o(n, q, tau).map_err(err)?.to_string(), count(&o, Coset::All)?.to_string()))
    }));
    out.push(Record::compare("sigma-vs-brute", so_label.clone(), || {
        let j = if n.is_multiple_of(2) { count(&so, Coset::All)? } else { count(&o, Coset::OMinusSO)? };
        Ok((sigma_so(n, q, tau).map_err(err)?.to_string(), j.to_string()))
    }));
    for (kind, g, coset) in [
        (InvolutionKind::orthogonal_for(q), &o, Coset::All),
        (InvolutionKind::SO, &so, Coset::All),
        (InvolutionKind::OMinusSO, &o, Coset::OMinusSO),
    ] {
        out.push(Record::compare("series-vs-brute", format!("{o_label} {kind}"), || {
            Ok((involution_count(kind, tau, n, q).map_err(err)?.to_string(), count(g, coset)?.to_string()))
        }));
    }
    if n % 2 == 1 {
        out.push(Record::timed("sigma-real", so_label, || {
            let r = check_strongly_sigma_real(&so, &o).map_err(err)?;
            Ok((r.passed(), Some(format!("{} failures", r.failures.len())), Some(format!("{} elements", r.checked))))
        }));
    }
    out
}

fn symplectic_records(n: u32, q: u32, brute: bool) -> Vec<Record> {
    let spec = GroupSpec::symplectic(n, q);
    let name = label("Sp", None, n, q);
    let index = || Ok::<_, String>(group_order(&spec).map_err(err)? / gl_order(n, q));
    let mut out = Vec::new();
    if q % 2 == 1 {
        out.push(Record::compare("sigma-sp-vs-index", name.clone(), || Ok((sigma_sp(n, q).map_err(err)?, index()?))));
        if brute {
            out.push(Record::compare("twisted-sp-vs-index", name, || {
                let g = build_group(&spec).map_err(err)?;
                Ok((count_twisted_involutions_sp(&g).map_err(err)?.to_string(), index()?.to_string()))
            }));
        }
    }
    out
}

fn explicit_records(n: u32, q: u32) -> Vec<Record> {
    let mut out = Vec::new();
    for (i, tau) in Sign::both().into_iter().enumerate() {
        out.push(Record::compare("graded-vs-explicit", label("O", Some(tau), n, q), || {
            Ok((sigma_o(n, q, tau).map_err(err)?, sigma_o_explicit(n, q).map_err(err)?[i].clone()))
        }));
        out.push(Record::compare("graded-vs-explicit", label("SO", Some(tau), n, q), || {
            Ok((sigma_so(n, q, tau).map_err(err)?, sigma_so_explicit(n, q).map_err(err)?[i].clone()))
        }));
    }
    out.push(Record::compare("graded-vs-explicit", label("Sp", None, n, q), || {
        Ok((sigma_sp(n, q).map_err(err)?, sigma_sp_explicit(n, q).map_err(err)?))
    }));
    out
}

/// Largest rank for the explicit-enumeration cross-check.
pub const EXPLICIT_REPORT_RANK: u32 = 3;

/// Degree sums against involution counts (series and, where feasible, brute
/// force), symplectic checks and the two degree-sum routes.
pub fn group_records(max_n: u32, qs: &[u32], skip_brute: bool) -> Vec<Record> {
    let mut jobs = Vec::new();
    for &q in qs {
        for n in 1..=max_n {
            for tau in Sign::both() {
                let brute = !skip_brute && brute_feasible(&GroupSpec::orthogonal(n, q, tau));
                jobs.push(Job::Orthogonal { n, q, tau, brute });
            }
            let brute = !skip_brute && brute_feasible(&GroupSpec::symplectic(n, q));
            jobs.push(Job::Symplectic { n, q, brute });
            if n <= EXPLICIT_REPORT_RANK && q <= 3 {
                jobs.push(Job::Explicit { n, q });
            }
        }
    }
    jobs.par_iter()
        .flat_map_iter(|job| match *job {
            Job::Orthogonal { n, q, tau, brute } => orthogonal_records(n, q, tau, brute),
            Job::Symplectic { n, q, brute } => symplectic_records(n, q, brute),
            Job::Explicit { n, q } => explicit_records(n, q),
        })
        .collect()
}
