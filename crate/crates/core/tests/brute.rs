use std::collections::HashSet;

use num_bigint::BigInt;
use orthocount::brute::{
    build_group, build_group_with, check_strongly_sigma_real, coset_representative, count_involutions,
    count_sigma_twisted, count_twisted_involutions_sp, BuildStrategy, Coset, Mat,
};
use orthocount::degree_sums::{group_order, involution_count, GroupSpec, InvolutionKind};
use orthocount::Sign;

fn small_orthogonal() -> Vec<(u32, u32, Sign)> {
    let mut out = Vec::new();
    for (n, q) in [(1, 2), (1, 3), (2, 2), (2, 3)] {
        for tau in Sign::both() {
            out.push((n, q, tau));
        }
    }
    out
}

#[test]
fn orders_and_group_axioms() {
    for (n, q, tau) in small_orthogonal() {
        for spec in [GroupSpec::orthogonal(n, q, tau), GroupSpec::special_orthogonal(n, q, tau)] {
            let g = build_group(&spec).unwrap();
            assert_eq!(BigInt::from(g.len()), group_order(&spec).unwrap(), "{spec}");
            assert!(g.elements().iter().all(|x| g.form.preserves(x)), "{spec}");
            let f = g.field().clone();
            assert!(g.contains(&Mat::identity(2 * n as usize)));
            for x in g.elements().iter().step_by(7) {
                assert!(g.contains(&x.inverse(&f).unwrap()), "{spec}");
                for y in g.elements().iter().step_by(13) {
                    assert!(g.contains(&x.mul(y, &f)), "{spec}");
                }
            }
        }
    }
    for (n, q) in [(1, 2), (1, 3), (1, 5), (2, 2)] {
        let spec = GroupSpec::symplectic(n, q);
        let g = build_group(&spec).unwrap();
        assert_eq!(BigInt::from(g.len()), group_order(&spec).unwrap(), "{spec}");
    }
}

#[test]
fn elements_are_distinct() {
    let g = build_group(&GroupSpec::orthogonal(2, 3, Sign::Minus)).unwrap();
    let set: HashSet<_> = g.elements().iter().collect();
    assert_eq!(set.len(), g.len());
}

#[test]
fn closure_matches_enumeration_for_sp_4_3() {
    let spec = GroupSpec::symplectic(2, 3);
    let a = build_group_with(&spec, BuildStrategy::Closure).unwrap();
    let b = build_group_with(&spec, BuildStrategy::Enumerate).unwrap();
    assert_eq!(a.elements(), b.elements());
}

#[test]
fn involutions_match_series_extraction() {
    for (n, q, tau) in small_orthogonal() {
        let o = build_group(&GroupSpec::orthogonal(n, q, tau)).unwrap();
        let so = build_group(&GroupSpec::special_orthogonal(n, q, tau)).unwrap();
        let kind = InvolutionKind::orthogonal_for(q);
        let all = count_involutions(&o, Coset::All).unwrap();
        let inner = count_involutions(&o, Coset::SO).unwrap();
        let outer = count_involutions(&o, Coset::OMinusSO).unwrap();
        assert_eq!(all, inner + outer);
        assert_eq!(count_involutions(&so, Coset::All).unwrap(), inner);
        assert_eq!(BigInt::from(all), involution_count(kind, tau, n, q).unwrap(), "O{tau}({},{q})", 2 * n);
        assert_eq!(BigInt::from(inner), involution_count(InvolutionKind::SO, tau, n, q).unwrap());
        assert_eq!(BigInt::from(outer), involution_count(InvolutionKind::OMinusSO, tau, n, q).unwrap());
        let h = coset_representative(&o).unwrap();
        assert_eq!(count_sigma_twisted(&so, &h), outer, "O{tau}({},{q})", 2 * n);
    }
}

#[test]
fn twisted_symplectic_counts() {
    for (n, q, expected) in [(1, 3, 12), (1, 5, 30)] {
        let g = build_group(&GroupSpec::symplectic(n, q)).unwrap();
        assert_eq!(count_twisted_involutions_sp(&g).unwrap(), expected);
    }
}

#[test]
fn sigma_reality_in_dimension_two() {
    for q in [2, 3, 4, 5] {
        for tau in Sign::both() {
            let o = build_group(&GroupSpec::orthogonal(1, q, tau)).unwrap();
            let so = build_group(&GroupSpec::special_orthogonal(1, q, tau)).unwrap();
            let report = check_strongly_sigma_real(&so, &o).unwrap();
            assert!(report.passed(), "q={q} {tau}");
            assert_eq!(report.checked, so.len());
        }
    }
}
