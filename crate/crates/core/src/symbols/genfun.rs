//! The unipotent-degree generating functions T, G, R, W, by summation over
//! symbols and by infinite products.

use num_rational::BigRational;

use super::delta::{delta_odd, delta_orth, delta_symbol};
use super::enumerate::{odd_symbols, orth_symbols, split_symbols};
use super::symbol::SymbolRows;
use crate::series::{expand_product, frac, GradedSeries, ProductFactor, QExponents, TruncatedSeries};
use crate::Sign;

fn sum_by_rank(order: usize, term: impl Fn(u32) -> BigRational) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(order, (0..=order as u32).map(term))
}

/// `T = sum over orthogonal symbols of delta/2`.
pub fn series_t_sum(q: u32, order: usize) -> TruncatedSeries {
    orth_unipotent_graded(q, order).total()
}

/// `G = sum over degenerate symbols of delta/2`.
pub fn series_g_sum(q: u32, order: usize) -> TruncatedSeries {
    sum_by_rank(order, |n| {
        let half = frac(1, 2);
        split_symbols(n).iter().filter(|s| s.is_degenerate()).map(|s| delta_symbol(s, q) * &half).sum()
    })
}

/// `R = sum over non-degenerate symbols of delta`, so that `T = R + G`.
pub fn series_r_sum(q: u32, order: usize) -> TruncatedSeries {
    sum_by_rank(order, |n| split_symbols(n).iter().filter(|s| !s.is_degenerate()).map(|s| delta_symbol(s, q)).sum())
}

/// `W = sum over odd-defect symbols of delta`.
pub fn series_w_sum(q: u32, order: usize) -> TruncatedSeries {
    sum_by_rank(order, |n| odd_symbols(n).iter().map(|u| delta_odd(u, q)).sum())
}

/// `(T+, T-)`: halved orthogonal-symbol degrees split by defect class.
pub fn orth_unipotent_graded(q: u32, order: usize) -> GradedSeries {
    let half = frac(1, 2);
    let part = |sign: Sign| {
        sum_by_rank(order, |n| {
            orth_symbols(n).iter().filter(|x| x.defect_class() == sign).map(|x| delta_orth(x, q) * &half).sum()
        })
    };
    GradedSeries::new(part(Sign::Plus), part(Sign::Minus))
}

/// Sums of `delta` over symbols of `S` accepted by `keep`, split by defect class.
pub fn split_delta_graded(q: u32, order: usize, keep: impl Fn(&super::symbol::Symbol) -> bool) -> GradedSeries {
    let part = |sign: Sign| {
        sum_by_rank(order, |n| {
            split_symbols(n).iter().filter(|s| s.defect_class() == sign && keep(s)).map(|s| delta_symbol(s, q)).sum()
        })
    };
    GradedSeries::new(part(Sign::Plus), part(Sign::Minus))
}

/// `prod_{i>=1} (1 + z/q^{2i-1}) / (1 - z/q^{2i-1})`.
pub fn odd_ratio_factors() -> Vec<ProductFactor> {
    let odd = QExponents::Progression { start: 1, step: 2 };
    vec![ProductFactor::new(1, 1, odd.clone(), 1), ProductFactor::new(-1, 1, odd, -1)]
}

/// `prod_{i<j, i+j odd} (1 - z^2/q^{i+j})^{-1}`.
pub fn pair_factors() -> Vec<ProductFactor> {
    vec![ProductFactor::new(-1, 2, QExponents::OddPairSums, -1)]
}

pub fn series_t_product(q: u32, order: usize) -> TruncatedSeries {
    let mut f = odd_ratio_factors();
    f.extend(pair_factors());
    expand_product(q, &f, order)
}

pub fn series_g_product(q: u32, order: usize) -> TruncatedSeries {
    expand_product(q, &pair_factors(), order)
}

pub fn series_r_product(q: u32, order: usize) -> TruncatedSeries {
    let ratio = expand_product(q, &odd_ratio_factors(), order);
    let g = series_g_product(q, order);
    &(&ratio - &TruncatedSeries::one(order)) * &g
}

pub fn series_w_product(q: u32, order: usize) -> TruncatedSeries {
    let mut f = vec![
        ProductFactor::new(1, 1, QExponents::Progression { start: 2, step: 2 }, 1),
        ProductFactor::new(-1, 1, QExponents::Progression { start: 1, step: 2 }, -1),
    ];
    f.extend(pair_factors());
    expand_product(q, &f, order)
}
