use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use orthocount::degree_sums::{even_power_product, so_p_prime};
use orthocount::ffpoly::{
    closed_form_m_star, closed_form_n_star, count_m_star, count_n_star, enumerate_irreducibles,
    enumerate_self_dual_counts, irreducible_count, FiniteField,
};
use orthocount::series::{expand_partial_product, expand_product, ProductFactor, QExponents, TruncatedSeries};
use orthocount::symbols::{
    delta_odd, delta_orth, delta_symbol, odd_symbols, series_g_sum, series_r_sum, series_t_sum, split_delta_graded,
    split_symbols, OrthSymbol, SymbolRows,
};

fn series_strategy(order: usize) -> impl Strategy<Value = TruncatedSeries> {
    prop::collection::vec((-20i64..=20, 1i64..=9), order + 1).prop_map(move |cs| {
        TruncatedSeries::from_coeffs(order, cs.into_iter().map(|(n, d)| BigRational::new(n.into(), d.into())))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multiplication_commutes(a in series_strategy(16), b in series_strategy(16)) {
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn multiplication_associates(a in series_strategy(16), b in series_strategy(16), c in series_strategy(16)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
    }

    #[test]
    fn inverse_is_two_sided(a in series_strategy(16)) {
        prop_assume!(!a.coeffs()[0].is_zero());
        let inv = a.inv().unwrap();
        prop_assert_eq!(&a * &inv, TruncatedSeries::one(16));
    }

    #[test]
    fn partial_products_approach_the_full_product(q in prop::sample::select(vec![2u32, 3, 5]), cut in 2i64..10) {
        let factors = [
            ProductFactor::new(1, 1, QExponents::Progression { start: 1, step: 2 }, 1),
            ProductFactor::new(-1, 2, QExponents::OddPairSums, -1),
        ];
        let full = expand_product(q, &factors, 6);
        let near = expand_partial_product(q, &factors, 6, cut);
        let nearer = expand_partial_product(q, &factors, 6, cut + 4);
        for i in 1..=6 {
            let e1 = (&full.coeffs()[i] - &near.coeffs()[i]).abs();
            let e2 = (&full.coeffs()[i] - &nearer.coeffs()[i]).abs();
            prop_assert!(e2 <= e1, "coefficient {} did not improve", i);
        }
    }
}

#[test]
fn dual_is_an_involution() {
    for (q, max_d) in [(2, 8), (3, 6), (4, 4), (5, 4), (7, 3), (9, 3)] {
        let f = FiniteField::new(q).unwrap();
        for d in 1..=max_d {
            for p in enumerate_irreducibles(q, d).unwrap().iter() {
                assert_eq!(&p.dual(&f).unwrap().dual(&f).unwrap(), p, "q={q}");
            }
        }
    }
}

#[test]
fn self_dual_counts() {
    for q in [2u32, 3, 4, 5] {
        assert_eq!(count_n_star(q, 1).unwrap(), if q % 2 == 1 { 2 } else { 1 });
        for d in 1..=8 {
            let (n, m) = enumerate_self_dual_counts(q, d).unwrap();
            let total = enumerate_irreducibles(q, d).unwrap().len() as u64;
            assert_eq!(2 * m + n, total, "q={q} d={d}");
            if d % 2 == 1 && d > 1 {
                assert_eq!(n, 0, "q={q} d={d}");
            }
        }
    }
}

#[test]
fn closed_forms_match_enumeration() {
    for q in [2u32, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        let mut d = 1;
        while (q as u64).pow(d as u32) <= 1_000_000 {
            assert_eq!(closed_form_n_star(q, d), BigInt::from(count_n_star(q, d).unwrap()), "N* q={q} d={d}");
            assert_eq!(closed_form_m_star(q, d), BigInt::from(count_m_star(q, d).unwrap()), "M* q={q} d={d}");
            let total = enumerate_irreducibles(q, d).unwrap().len();
            assert_eq!(irreducible_count(q, d), BigInt::from(total), "q={q} d={d}");
            d += 1;
        }
    }
}

#[test]
fn t_is_r_plus_g() {
    for q in [2, 3, 4, 5, 7, 8, 9] {
        assert_eq!(series_t_sum(q, 12), &series_r_sum(q, 12) + &series_g_sum(q, 12), "q={q}");
        let all = split_delta_graded(q, 12, |_| true).total();
        assert_eq!(all, &series_t_sum(q, 12) + &series_g_sum(q, 12), "q={q}");
    }
}

fn positive_integer(x: &BigRational) -> bool {
    x.is_integer() && x.is_positive()
}

#[test]
fn full_degrees_are_positive_integers() {
    for q in [2u32, 3] {
        for n in 1..=6u32 {
            for s in split_symbols(n).iter() {
                let full = delta_symbol(s, q) * BigRational::from_integer(so_p_prime(n, q, s.defect_class()));
                assert!(positive_integer(&full), "{s} q={q}: {full}");
            }
            for u in odd_symbols(n).iter() {
                let full = delta_odd(u, q) * BigRational::from_integer(even_power_product(q, 1, n));
                assert!(positive_integer(&full), "{u} q={q}: {full}");
            }
        }
    }
}

#[test]
fn degenerate_pairs() {
    let two = BigRational::from_integer(2.into());
    for n in 0..=12u32 {
        for s in split_symbols(n).iter().filter(|s| s.is_degenerate() && !s.primed()) {
            for q in [2, 3, 5] {
                let d = delta_symbol(s, q);
                assert_eq!(d, delta_symbol(&s.with_prime(true), q));
                let x = OrthSymbol::new(s.row_a().to_vec(), s.row_b().to_vec()).unwrap();
                assert_eq!(delta_orth(&x, q), &two * &d);
            }
        }
    }
    assert!(delta_symbol(&split_symbols(0)[0], 2).is_one());
}
