//! The closed registry of checked identities. Each side is computed by its
//! own route and the two are compared coefficientwise.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Zero};
use rayon::prelude::*;

use super::fgs::{fgs_involution_series, InvolutionKind};
use super::graded::{centralizer_product, sigma_o_table, sigma_so_table, sigma_sp_table};
use super::group::{big, even_power_product, group_order, GroupSpec};
use crate::error::{Error, Result};
use crate::ffpoly::prime_power;
use crate::series::{expand_product, q_power, GradedSeries, ProductFactor, QExponents, TruncatedSeries};
use crate::symbols::{
    series_g_product, series_g_sum, series_r_product, series_r_sum, series_t_product, series_t_sum, series_w_product,
    series_w_sum,
};
use crate::{e_of_q, Sign};

pub const IDENTITY_NAMES: [&str; 11] = [
    "old-result",
    "genfun-O",
    "genfun-SO",
    "T-product",
    "G-product",
    "R-product",
    "W-product",
    "euler",
    "indicators-O-even",
    "indicators-SO-even",
    "sp-chain",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityConfig {
    pub qs: Vec<u32>,
    pub order: usize,
}

/// The field sizes and truncation order each identity runs at by default.
pub fn default_config(name: &str) -> Result<IdentityConfig> {
    let (qs, order): (&[u32], usize) = match name {
        "euler" => (&[2, 3, 5], 20),
        "old-result" | "genfun-O" | "genfun-SO" | "T-product" | "G-product" | "R-product" | "W-product"
        | "indicators-O-even" | "indicators-SO-even" => (&[2, 3, 4, 5, 7, 8, 9], 12),
        "sp-chain" => (&[3, 5], 4),
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    };
    Ok(IdentityConfig { qs: qs.to_vec(), order })
}

/// Whether `name` is defined at field size `q` (sp-chain needs odd `q`).
pub fn identity_applies(name: &str, q: u32) -> bool {
    name != "sp-chain" || q % 2 == 1
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub component: Sign,
    pub index: usize,
    pub lhs: BigRational,
    pub rhs: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub q: u32,
    pub order: usize,
    pub mismatch: Option<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub name: String,
    pub checks: Vec<IdentityCheck>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.mismatch.is_none())
    }

    pub fn first_failure(&self) -> Option<&IdentityCheck> {
        self.checks.iter().find(|c| c.mismatch.is_some())
    }
}

/// `1/(1-z) prod (1 - z/q^{2i-1})^e / (1 - z^2/q^{2i}) prod_{i<j, i+j odd} (1 - z^2/q^{i+j})^e`.
fn old_result_product(q: u32, order: usize) -> TruncatedSeries {
    let e = e_of_q(q) as i64;
    expand_product(
        q,
        &[
            ProductFactor::new(-1, 1, QExponents::Single(0), -1),
            ProductFactor::new(-1, 1, QExponents::Progression { start: 1, step: 2 }, e),
            ProductFactor::new(-1, 2, QExponents::Progression { start: 2, step: 2 }, -1),
            ProductFactor::new(-1, 2, QExponents::OddPairSums, e),
        ],
        order,
    )
}

fn power(f: &TruncatedSeries, e: u32) -> TruncatedSeries {
    if e == 2 {
        f * f
    } else {
        f.clone()
    }
}

fn ratio(a: &BigInt, b: &BigInt) -> BigRational {
    BigRational::new(a.clone(), b.clone())
}

/// `sum_tau Sigma_tau(n) / index_tau(n)` as a series, constant term given.
fn combined(table: &[Vec<BigInt>; 2], q: u32, factor: u32, constant: i64) -> TruncatedSeries {
    let order = table[0].len() - 1;
    TruncatedSeries::from_coeffs(
        order,
        (0..=order as u32).map(|n| {
            if n == 0 {
                return BigRational::from_integer(constant.into());
            }
            Sign::both()
                .into_iter()
                .map(|tau| {
                    let idx = super::group::so_p_prime(n, q, tau) * factor;
                    ratio(&table[(tau == Sign::Minus) as usize][n as usize], &idx)
                })
                .sum()
        }),
    )
}

/// `Sigma(G_tau) q^{p_exp} / |G_tau|` per type, with the given constant terms.
fn normalized(table: &[Vec<BigInt>; 2], q: u32, special: bool, constants: [i64; 2]) -> Result<GradedSeries> {
    let order = table[0].len() - 1;
    let mut parts = Vec::new();
    for (i, tau) in Sign::both().into_iter().enumerate() {
        let mut coeffs = vec![BigRational::from_integer(constants[i].into())];
        for n in 1..=order as u32 {
            let (spec, e) = if special {
                (GroupSpec::special_orthogonal(n, q, tau), n * n - n)
            } else {
                (GroupSpec::orthogonal(n, q, tau), n * n)
            };
            let num = &table[i][n as usize] * Pow::pow(&big(q), e);
            coeffs.push(ratio(&num, &group_order(&spec)?));
        }
        parts.push(TruncatedSeries::from_coeffs(order, coeffs));
    }
    let minus = parts.pop().expect("two parts");
    let plus = parts.pop().expect("two parts");
    Ok(GradedSeries::new(plus, minus))
}

fn ungraded(f: TruncatedSeries) -> GradedSeries {
    GradedSeries::ungraded(f)
}

/// Both sides of `name` at field size `q`.
pub fn identity_sides(name: &str, q: u32, order: usize) -> Result<(GradedSeries, GradedSeries)> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    let e = e_of_q(q);
    let n = order as u32;
    Ok(match name {
        "old-result" => (ungraded(centralizer_product(q, order)?.total()), ungraded(old_result_product(q, order))),
        "genfun-O" => {
            let lhs = combined(&sigma_o_table(q, n)?, q, 2, 1);
            let rhs = &old_result_product(q, order) * &power(&series_t_product(q, order), e);
            (ungraded(lhs), ungraded(rhs))
        }
        "genfun-SO" => {
            let lhs = combined(&sigma_so_table(q, n)?, q, 1, 2);
            let unip = &power(&series_t_product(q, order), e) + &power(&series_g_product(q, order), e);
            (ungraded(lhs), ungraded(&old_result_product(q, order) * &unip))
        }
        "T-product" => (ungraded(series_t_sum(q, order)), ungraded(series_t_product(q, order))),
        "G-product" => (ungraded(series_g_sum(q, order)), ungraded(series_g_product(q, order))),
        "R-product" => (ungraded(series_r_sum(q, order)), ungraded(series_r_product(q, order))),
        "W-product" => (ungraded(series_w_sum(q, order)), ungraded(series_w_product(q, order))),
        "euler" => {
            let mut c = BigRational::one();
            let mut coeffs = vec![c.clone()];
            for i in 1..=order as i64 {
                c /= BigRational::one() - q_power(q, -i);
                coeffs.push(c.clone());
            }
            let lhs = TruncatedSeries::from_coeffs(order, coeffs);
            let rhs = expand_product(
                q,
                &[ProductFactor::new(-1, 1, QExponents::Progression { start: 0, step: 1 }, -1)],
                order,
            );
            (ungraded(lhs), ungraded(rhs))
        }
        "indicators-O-even" => {
            let lhs = normalized(&sigma_o_table(q, n)?, q, false, [1, 0])?;
            (lhs, fgs_involution_series(InvolutionKind::orthogonal_for(q), q, order)?)
        }
        "indicators-SO-even" => {
            let lhs = normalized(&sigma_so_table(q, n)?, q, true, [2, 0])?;
            let so = fgs_involution_series(InvolutionKind::SO, q, order)?;
            let coset = fgs_involution_series(InvolutionKind::OMinusSO, q, order)?;
            let pick = |sign: Sign| {
                TruncatedSeries::from_coeffs(
                    order,
                    (0..=order).map(|i| {
                        let src = if i % 2 == 0 { &so } else { &coset };
                        src.component(sign).coeffs()[i].clone()
                    }),
                )
            };
            (lhs, GradedSeries::new(pick(Sign::Plus), pick(Sign::Minus)))
        }
        "sp-chain" => {
            if e == 1 {
                return Err(Error::ParityMismatch(format!("sp-chain needs odd q, got {q}")));
            }
            let table = sigma_sp_table(q, n)?;
            let lhs = TruncatedSeries::from_coeffs(
                order,
                (0..=n).map(|i| ratio(&table[i as usize], &even_power_product(q, 1, i))),
            );
            let rhs = expand_product(
                q,
                &[ProductFactor::new(-1, 1, QExponents::Progression { start: 0, step: 1 }, -1)],
                order,
            );
            (ungraded(lhs), ungraded(rhs))
        }
        _ => return Err(Error::UnknownIdentity(name.to_string())),
    })
}

fn first_mismatch(lhs: &GradedSeries, rhs: &GradedSeries) -> Option<Mismatch> {
    for component in Sign::both() {
        let (a, b) = (lhs.component(component).coeffs(), rhs.component(component).coeffs());
        let zero = BigRational::zero();
        for index in 0..a.len().max(b.len()) {
            let (x, y) = (a.get(index).unwrap_or(&zero), b.get(index).unwrap_or(&zero));
            if x != y {
                return Some(Mismatch { component, index, lhs: x.clone(), rhs: y.clone() });
            }
        }
    }
    None
}

pub fn check_identity(name: &str, q: u32, order: usize) -> Result<IdentityCheck> {
    let (lhs, rhs) = identity_sides(name, q, order)?;
    Ok(IdentityCheck { q, order, mismatch: first_mismatch(&lhs, &rhs) })
}

/// Runs `name` at each requested `q` (defaults from the registry). Checks at
/// different `q` run in parallel; the report keeps the requested order.
pub fn verify_identity(name: &str, qs: Option<&[u32]>, order: Option<usize>) -> Result<IdentityReport> {
    let config = default_config(name)?;
    let qs = qs.map(<[u32]>::to_vec).unwrap_or(config.qs);
    let order = order.unwrap_or(config.order);
    let checks = qs.par_iter().map(|&q| check_identity(name, q, order)).collect::<Result<Vec<_>>>()?;
    Ok(IdentityReport { name: name.to_string(), checks })
}
