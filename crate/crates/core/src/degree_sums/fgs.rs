//! Generating functions for involution counts in the orthogonal groups, and
//! extraction of the counts from their coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Pow;

use super::graded::{check_params, integral};
use super::group::{big, group_order, GroupSpec};
use crate::error::{Error, Result};
use crate::series::{expand_product, frac, GradedSeries, ProductFactor, QExponents, TruncatedSeries};
use crate::{e_of_q, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InvolutionKind {
    /// `I(O^±(2n,q))`, q odd.
    OOddQ,
    /// `I(O^±(2n,q))`, q even.
    OEvenQ,
    /// `I(SO^±(2n,q))`.
    SO,
    /// Involutions in `O^±(2n,q) \ SO^±(2n,q)`.
    OMinusSO,
}

impl InvolutionKind {
    pub const ALL: [InvolutionKind; 4] =
        [InvolutionKind::OOddQ, InvolutionKind::OEvenQ, InvolutionKind::SO, InvolutionKind::OMinusSO];

    /// The orthogonal kind matching the parity of `q`.
    pub fn orthogonal_for(q: u32) -> Self {
        if q % 2 == 1 {
            InvolutionKind::OOddQ
        } else {
            InvolutionKind::OEvenQ
        }
    }

    fn uses_so_order(self) -> bool {
        matches!(self, InvolutionKind::SO | InvolutionKind::OMinusSO)
    }
}

impl fmt::Display for InvolutionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InvolutionKind::OOddQ => "O-odd-q",
            InvolutionKind::OEvenQ => "O-even-q",
            InvolutionKind::SO => "SO",
            InvolutionKind::OMinusSO => "O-minus-SO",
        })
    }
}

impl FromStr for InvolutionKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        InvolutionKind::ALL
            .into_iter()
            .find(|k| k.to_string() == s)
            .ok_or_else(|| Error::OutOfRange(format!("unknown involution kind {s}")))
    }
}

fn progression(start: i64) -> QExponents {
    QExponents::Progression { start, step: 2 }
}

/// Per-type series; the `+` and `-` components are the two branches.
pub fn fgs_involution_series(kind: InvolutionKind, q: u32, order: usize) -> Result<GradedSeries> {
    let odd = q % 2 == 1;
    match kind {
        InvolutionKind::OOddQ if !odd => return Err(Error::ParityMismatch(format!("{kind} needs odd q, got {q}"))),
        InvolutionKind::OEvenQ if odd => return Err(Error::ParityMismatch(format!("{kind} needs even q, got {q}"))),
        _ => {}
    }
    let e = e_of_q(q) as i64;
    let squares_from = |start| ProductFactor::new(-1, 2, progression(start), -1);
    Ok(match kind {
        InvolutionKind::OOddQ | InvolutionKind::OEvenQ => {
            let half = frac(1, 2);
            let a = expand_product(
                q,
                &[
                    ProductFactor::new(-1, 1, QExponents::Single(-1), -1),
                    ProductFactor::new(1, 1, progression(0), e),
                    squares_from(0),
                ],
                order,
            )
            .scale(&half);
            let b =
                expand_product(q, &[ProductFactor::new(1, 1, progression(1), e), squares_from(0)], order).scale(&half);
            GradedSeries::new(&a + &b, &a - &b)
        }
        InvolutionKind::SO => {
            let x = so_main_product(q, order);
            let y = expand_product(q, &[ProductFactor::new(1, 1, progression(2), e), squares_from(2)], order);
            GradedSeries::new(&x + &y, &x - &y)
        }
        InvolutionKind::OMinusSO => {
            let x = so_main_product(q, order).shift(1);
            GradedSeries::new(x.clone(), x)
        }
    })
}

/// `prod_{i>=1} (1 + z/q^{2i-1})^e / (1 - z^2/q^{2i-2})`.
fn so_main_product(q: u32, order: usize) -> TruncatedSeries {
    let e = e_of_q(q) as i64;
    expand_product(
        q,
        &[ProductFactor::new(1, 1, progression(1), e), ProductFactor::new(-1, 2, progression(0), -1)],
        order,
    )
}

/// Turns the coefficient of `z^n` into an involution count.
pub fn extract_count(kind: InvolutionKind, tau: Sign, n: u32, q: u32, coeff: &BigRational) -> Result<BigInt> {
    let (spec, p_exp) = if kind.uses_so_order() {
        (GroupSpec::special_orthogonal(n, q, tau), n * n - n)
    } else {
        (GroupSpec::orthogonal(n, q, tau), n * n)
    };
    let value = coeff * BigRational::new(group_order(&spec)?, Pow::pow(&big(q), p_exp));
    let count = integral(&format!("{kind} count for {spec}"), value)?;
    if count < BigInt::from(0) {
        return Err(Error::NonIntegral { what: format!("{kind} count for {spec}"), value: count.to_string() });
    }
    Ok(count)
}

pub fn involution_count(kind: InvolutionKind, tau: Sign, n: u32, q: u32) -> Result<BigInt> {
    check_params(n, q)?;
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let s = fgs_involution_series(kind, q, n as usize)?;
    extract_count(kind, tau, n, q, s.component(tau).coeff(n as usize)?)
}

/// `I(SO^tau)` for even `n`, `I(O^tau \ SO^tau)` for odd `n`.
pub fn j_count(tau: Sign, n: u32, q: u32) -> Result<BigInt> {
    let kind = if n.is_multiple_of(2) { InvolutionKind::SO } else { InvolutionKind::OMinusSO };
    involution_count(kind, tau, n, q)
}
