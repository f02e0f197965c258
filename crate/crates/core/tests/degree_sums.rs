use num_bigint::BigInt;
use orthocount::degree_sums::{
    involution_count, j_count, sigma_o, sigma_o_explicit, sigma_o_table, sigma_so_explicit, sigma_so_table, sigma_sp,
    sigma_sp_explicit, InvolutionKind,
};
use orthocount::Sign;

#[test]
fn explicit_route_matches_graded_route() {
    for q in [2, 3] {
        let o = sigma_o_table(q, 3).unwrap();
        let so = sigma_so_table(q, 3).unwrap();
        for n in 1..=3 {
            let eo = sigma_o_explicit(n, q).unwrap();
            let eso = sigma_so_explicit(n, q).unwrap();
            for i in 0..2 {
                assert_eq!(eo[i], o[i][n as usize], "O n={n} q={q} i={i}");
                assert_eq!(eso[i], so[i][n as usize], "SO n={n} q={q} i={i}");
            }
            assert_eq!(sigma_sp_explicit(n, q).unwrap(), sigma_sp(n, q).unwrap(), "Sp n={n} q={q}");
        }
    }
}

#[test]
fn degree_sums_equal_involution_counts() {
    for q in [2, 3, 4, 5] {
        let o = sigma_o_table(q, 6).unwrap();
        let so = sigma_so_table(q, 6).unwrap();
        for n in 1..=6u32 {
            for (i, tau) in Sign::both().into_iter().enumerate() {
                let kind = InvolutionKind::orthogonal_for(q);
                assert_eq!(o[i][n as usize], involution_count(kind, tau, n, q).unwrap(), "O n={n} q={q}");
                assert_eq!(so[i][n as usize], j_count(tau, n, q).unwrap(), "SO n={n} q={q}");
            }
        }
    }
}

#[test]
fn involution_counts_are_nonnegative_integers() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        for n in 1..=8 {
            for tau in Sign::both() {
                for kind in [InvolutionKind::orthogonal_for(q), InvolutionKind::SO, InvolutionKind::OMinusSO] {
                    let c = involution_count(kind, tau, n, q).unwrap();
                    assert!(c >= BigInt::from(0));
                }
            }
        }
    }
}

#[test]
fn symplectic_degree_sums() {
    assert_eq!(sigma_sp(1, 3).unwrap(), BigInt::from(12));
    assert_eq!(sigma_sp(0, 5).unwrap(), BigInt::from(1));
    // |Sp(2n,q)| / |GL(n,q)| for odd q
    for (n, q) in [(1u32, 5u32), (2, 3), (3, 3)] {
        let sp = orthocount::degree_sums::group_order(&orthocount::degree_sums::GroupSpec::symplectic(n, q)).unwrap();
        let gl = orthocount::degree_sums::gl_order(n, q);
        assert_eq!(sigma_sp(n, q).unwrap(), sp / gl, "n={n} q={q}");
    }
}

#[test]
fn sign_graded_small_values() {
    assert_eq!(sigma_o(1, 2, Sign::Plus).unwrap(), BigInt::from(2));
    assert_eq!(sigma_o(1, 2, Sign::Minus).unwrap(), BigInt::from(4));
}
