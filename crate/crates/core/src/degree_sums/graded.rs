//! Degree sums by a sign-graded dynamic program over polynomial degrees.
//!
//! The coefficient of `z^n` in the `tau` component of each series below is
//! the sum of modified character degrees over characters of the type-`tau`
//! group of rank `n`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::group::{even_power_product, so_p_prime};
use crate::error::{Error, Result};
use crate::ffpoly::{poly_counts, prime_power};
use crate::series::{GradedSeries, TruncatedSeries};
use crate::symbols::{
    delta_gl, delta_u, orth_unipotent_graded, partitions, series_w_sum, split_delta_graded, SymbolRows,
};
use crate::{e_of_q, Sign};

pub const MAX_RANK: u32 = 12;
pub const MAX_FIELD: u32 = 16;

pub(crate) fn check_params(n: u32, q: u32) -> Result<()> {
    if prime_power(q).is_none() {
        return Err(Error::NotPrimePower(q));
    }
    if q > MAX_FIELD {
        return Err(Error::OutOfRange(format!("q = {q} exceeds {MAX_FIELD}")));
    }
    if n > MAX_RANK {
        return Err(Error::OutOfRange(format!("n = {n} exceeds {MAX_RANK}")));
    }
    Ok(())
}

/// `sum_lambda delta_U(lambda, 2d) z^{d |lambda|}`, graded by the parity of `|lambda|`.
pub fn unitary_factor(q: u32, d: usize, order: usize) -> GradedSeries {
    let mut g = GradedSeries::zero(order);
    for m in 0..=order / d {
        let sum: BigRational = partitions(m as u32).iter().map(|l| delta_u(l, 2 * d as u32, q)).sum();
        let part = if m % 2 == 0 { &mut g.plus } else { &mut g.minus };
        part.add_term(m * d, &sum);
    }
    g
}

/// `sum_lambda delta_GL(lambda, d) z^{d |lambda|}`.
pub fn linear_factor(q: u32, d: usize, order: usize) -> TruncatedSeries {
    TruncatedSeries::from_coeffs(
        order,
        (0..=order).map(|i| {
            if i % d != 0 {
                return BigRational::from_integer(0.into());
            }
            partitions((i / d) as u32).iter().map(|l| delta_gl(l, d as u32, q)).sum()
        }),
    )
}

/// `prod_d U_d^{N*(q;2d)} GL_d^{M*(q;d)}`, graded by `(-1)^{sum m_f}`.
pub fn centralizer_product(q: u32, order: usize) -> Result<GradedSeries> {
    let counts = poly_counts(q, (2 * order).max(1))?;
    let mut acc = GradedSeries::one(order);
    for d in 1..=order {
        let n = counts.n_star(2 * d);
        if *n != BigInt::from(0) {
            acc = &acc * &unitary_factor(q, d, order).pow(n)?;
        }
        let m = counts.m_star(d);
        if *m != BigInt::from(0) {
            acc = &acc * &GradedSeries::ungraded(linear_factor(q, d, order).pow(m)?);
        }
    }
    Ok(acc)
}

/// `C * (T+, T-)^e`.
pub fn orthogonal_series(q: u32, order: usize) -> Result<GradedSeries> {
    let t = orth_unipotent_graded(q, order);
    let tail = if e_of_q(q) == 2 { &t * &t } else { t };
    Ok(&centralizer_product(q, order)? * &tail)
}

/// The unipotent factor at the eigenvalues `±1` for the special orthogonal
/// groups, graded by defect class.
pub fn so_unipotent_factor(q: u32, order: usize) -> GradedSeries {
    if e_of_q(q) == 1 {
        return split_delta_graded(q, order, |_| true);
    }
    let gs = split_delta_graded(q, order, |s| s.is_degenerate());
    let rs = split_delta_graded(q, order, |s| !s.is_degenerate());
    let mixed = &(&(&gs * &rs) + &(&gs * &rs)) + &(&gs * &gs);
    &mixed.scale(&BigRational::new(1.into(), 2.into())) + &(&rs * &rs)
}

pub fn special_orthogonal_series(q: u32, order: usize) -> Result<GradedSeries> {
    Ok(&centralizer_product(q, order)? * &so_unipotent_factor(q, order))
}

/// `C * T * W` for odd `q`, `C * W` for even `q`.
pub fn symplectic_series(q: u32, order: usize) -> Result<TruncatedSeries> {
    let c = centralizer_product(q, order)?.total();
    let w = series_w_sum(q, order);
    let base = &c * &w;
    Ok(if e_of_q(q) == 2 { &base * &orth_unipotent_graded(q, order).total() } else { base })
}

pub(crate) fn integral(what: &str, value: BigRational) -> Result<BigInt> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::NonIntegral { what: what.to_string(), value: value.to_string() })
    }
}

/// `(q^n - tau) prod_{i<n} (q^{2i} - 1)`, with the value 1 at `n = 0`.
fn so_index(n: u32, q: u32, tau: Sign) -> BigInt {
    if n == 0 {
        BigInt::one()
    } else {
        so_p_prime(n, q, tau)
    }
}

fn positive(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    Ok(())
}

fn sign_index(tau: Sign) -> usize {
    (tau == Sign::Minus) as usize
}

/// `Sigma(O^tau(2n,q))` for `n = 0..=max_n`, indexed `[tau][n]`. The entries at
/// `n = 0` are the constant terms `1` and `0`.
pub fn sigma_o_table(q: u32, max_n: u32) -> Result<[Vec<BigInt>; 2]> {
    check_params(max_n, q)?;
    let f = orthogonal_series(q, max_n as usize)?;
    let row = |tau: Sign| -> Result<Vec<BigInt>> {
        (0..=max_n)
            .map(|n| {
                let c = f.component(tau).coeff(n as usize)?.clone();
                let scale = if n == 0 { BigInt::one() } else { so_index(n, q, tau) * 2 };
                integral(&format!("Sigma(O{tau}({},{q}))", 2 * n), c * BigRational::from_integer(scale))
            })
            .collect()
    };
    Ok([row(Sign::Plus)?, row(Sign::Minus)?])
}

/// `Sigma(SO^tau(2n,q))` for `n = 0..=max_n`; the entries at `n = 0` are `2`
/// and `0`, one for each of the two classes of the empty datum.
pub fn sigma_so_table(q: u32, max_n: u32) -> Result<[Vec<BigInt>; 2]> {
    check_params(max_n, q)?;
    let f = special_orthogonal_series(q, max_n as usize)?;
    let row = |tau: Sign| -> Result<Vec<BigInt>> {
        (0..=max_n)
            .map(|n| {
                let c = f.component(tau).coeff(n as usize)?.clone();
                let value = c * BigRational::from_integer(so_index(n, q, tau));
                integral(&format!("Sigma(SO{tau}({},{q}))", 2 * n), value)
            })
            .collect()
    };
    Ok([row(Sign::Plus)?, row(Sign::Minus)?])
}

/// `Sigma(Sp(2n,q))` for `n = 0..=max_n`.
pub fn sigma_sp_table(q: u32, max_n: u32) -> Result<Vec<BigInt>> {
    check_params(max_n, q)?;
    let f = symplectic_series(q, max_n as usize)?;
    (0..=max_n)
        .map(|n| {
            let value = f.coeff(n as usize)?.clone() * BigRational::from_integer(even_power_product(q, 1, n));
            integral(&format!("Sigma(Sp({},{q}))", 2 * n), value)
        })
        .collect()
}

pub fn sigma_o(n: u32, q: u32, tau: Sign) -> Result<BigInt> {
    positive(n)?;
    Ok(sigma_o_table(q, n)?[sign_index(tau)].swap_remove(n as usize))
}

pub fn sigma_so(n: u32, q: u32, tau: Sign) -> Result<BigInt> {
    positive(n)?;
    Ok(sigma_so_table(q, n)?[sign_index(tau)].swap_remove(n as usize))
}

pub fn sigma_sp(n: u32, q: u32) -> Result<BigInt> {
    Ok(sigma_sp_table(q, n)?.swap_remove(n as usize))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orthogonal() {
        assert_eq!(sigma_o(1, 2, Sign::Plus).unwrap(), BigInt::from(2));
        assert_eq!(sigma_o(1, 2, Sign::Minus).unwrap(), BigInt::from(4));
        assert_eq!(sigma_o(1, 3, Sign::Plus).unwrap(), BigInt::from(4));
        // dihedral of order 8: 1+1+1+1+2
        assert_eq!(sigma_o(1, 3, Sign::Minus).unwrap(), BigInt::from(6));
    }

    #[test]
    fn small_special_orthogonal() {
        for q in [2u32, 3, 4, 5, 7] {
            assert_eq!(sigma_so(1, q, Sign::Plus).unwrap(), BigInt::from(q - 1), "q={q}");
            assert_eq!(sigma_so(1, q, Sign::Minus).unwrap(), BigInt::from(q + 1), "q={q}");
        }
    }

    #[test]
    fn small_symplectic() {
        assert_eq!(sigma_sp(0, 3).unwrap(), BigInt::one());
        assert_eq!(sigma_sp(1, 3).unwrap(), BigInt::from(12));
        assert_eq!(sigma_sp(1, 2).unwrap(), BigInt::from(4));
        // Sp(4,2) is the symmetric group on six letters
        assert_eq!(sigma_sp(2, 2).unwrap(), BigInt::from(76));
    }

    #[test]
    fn centralizer_constant_term() {
        let c = centralizer_product(3, 4).unwrap();
        assert!(c.plus.coeffs()[0].is_one());
        assert_eq!(c.minus.coeffs()[0], BigRational::from_integer(0.into()));
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(sigma_o(1, 6, Sign::Plus).is_err());
        assert!(sigma_o(MAX_RANK + 1, 2, Sign::Plus).is_err());
        assert!(sigma_so(0, 3, Sign::Plus).is_err());
    }
}
