use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Pow, Zero};

use super::field::FiniteField;
use super::poly::{reduce_in_place, Poly};
use crate::error::{Error, Result};

/// Largest `q^d` accepted by the enumerators.
pub const ENUMERATION_LIMIT: u64 = 10_000_000;

/// Degrees with `q^d` up to this are enumerated by [`poly_counts`]; larger
/// ones use the closed-form counts.
pub const COUNT_ENUMERATION_THRESHOLD: u64 = 1 << 17;

fn check_range(q: u32, d: usize) -> Result<u64> {
    if d == 0 {
        return Err(Error::OutOfRange("degree must be positive".into()));
    }
    let size = (q as u64).checked_pow(d as u32).filter(|&s| s <= ENUMERATION_LIMIT);
    size.ok_or_else(|| Error::OutOfRange(format!("q^d too large for enumeration (q={q}, d={d})")))
}

type IrreducibleCache = OnceLock<Mutex<HashMap<(u32, usize), Arc<Vec<Poly>>>>>;

/// All monic irreducible polynomials of degree `d` over `F_q` with nonzero
/// constant term, in increasing coefficient-code order.
pub fn enumerate_irreducibles(q: u32, d: usize) -> Result<Arc<Vec<Poly>>> {
    static CACHE: IrreducibleCache = OnceLock::new();
    let size = check_range(q, d)?;
    let cache = CACHE.get_or_init(Default::default);
    if let Some(v) = cache.lock().unwrap().get(&(q, d)) {
        return Ok(v.clone());
    }
    let field = FiniteField::shared(q)?;
    let mut divisors = Vec::new();
    for e in 1..=d / 2 {
        divisors.push(enumerate_irreducibles(q, e)?);
    }
    let mut found = Vec::new();
    let mut scratch = Vec::with_capacity(d + 1);
    for code in 0..size {
        if code % q as u64 == 0 {
            continue;
        }
        let f = Poly::monic_from_code(q, d, code);
        let irreducible = divisors.iter().flat_map(|v| v.iter()).all(|g| {
            scratch.clear();
            scratch.extend_from_slice(f.coeffs());
            reduce_in_place(&mut scratch, g, &field);
            scratch.iter().any(|&c| c != 0)
        });
        if irreducible {
            found.push(f);
        }
    }
    let found = Arc::new(found);
    Ok(cache.lock().unwrap().entry((q, d)).or_insert(found).clone())
}

/// `(N*, M*)` for degree `d` by enumeration: self-dual irreducibles and
/// unordered pairs `{g, g*}` with `g != g*`.
pub fn enumerate_self_dual_counts(q: u32, d: usize) -> Result<(u64, u64)> {
    let field = FiniteField::shared(q)?;
    let irr = enumerate_irreducibles(q, d)?;
    let mut self_dual = 0u64;
    let mut other = 0u64;
    for f in irr.iter() {
        if f.dual(&field)? == *f {
            self_dual += 1;
        } else {
            other += 1;
        }
    }
    debug_assert!(other.is_multiple_of(2));
    Ok((self_dual, other / 2))
}

pub fn count_n_star(q: u32, d: usize) -> Result<u64> {
    Ok(enumerate_self_dual_counts(q, d)?.0)
}

pub fn count_m_star(q: u32, d: usize) -> Result<u64> {
    Ok(enumerate_self_dual_counts(q, d)?.1)
}

fn mobius(mut n: u64) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|k| n.is_multiple_of(*k)).collect()
}

/// Monic irreducibles of degree `d` with nonzero constant term, by Gauss's
/// formula.
pub fn irreducible_count(q: u32, d: usize) -> BigInt {
    let qb = BigInt::from(q);
    let mut total = BigInt::zero();
    for k in divisors(d as u64) {
        total += Pow::pow(&qb, d as u64 / k) * mobius(k);
    }
    let count = total / BigInt::from(d);
    if d == 1 {
        count - 1
    } else {
        count
    }
}

/// Closed-form count of self-dual monic irreducibles of degree `d`.
pub fn closed_form_n_star(q: u32, d: usize) -> BigInt {
    let odd_q = q % 2 == 1;
    if d == 1 {
        return BigInt::from(if odd_q { 2 } else { 1 });
    }
    if d % 2 == 1 {
        return BigInt::zero();
    }
    let m = (d / 2) as u64;
    let qb = BigInt::from(q);
    let mut total = BigInt::zero();
    for k in divisors(m).into_iter().filter(|k| k.is_odd()) {
        let mut term: BigInt = Pow::pow(&qb, m / k);
        if odd_q {
            term -= 1;
        }
        total += term * mobius(k);
    }
    total / BigInt::from(d)
}

pub fn closed_form_m_star(q: u32, d: usize) -> BigInt {
    (irreducible_count(q, d) - closed_form_n_star(q, d)) / 2
}

/// `N*(q; d)` and `M*(q; d)` for `1 <= d <= max_degree`.
#[derive(Clone, Debug)]
pub struct PolyCounts {
    pub q: u32,
    n_star: Vec<BigInt>,
    m_star: Vec<BigInt>,
    /// Degrees up to this were obtained by enumeration.
    pub enumerated_through: usize,
}

impl PolyCounts {
    pub fn n_star(&self, d: usize) -> &BigInt {
        &self.n_star[d]
    }

    pub fn m_star(&self, d: usize) -> &BigInt {
        &self.m_star[d]
    }

    pub fn max_degree(&self) -> usize {
        self.n_star.len() - 1
    }
}

/// Counts by enumeration where `q^d` is at most
/// [`COUNT_ENUMERATION_THRESHOLD`], by the closed forms beyond.
pub fn poly_counts(q: u32, max_degree: usize) -> Result<PolyCounts> {
    FiniteField::shared(q)?;
    let mut n_star = vec![BigInt::zero()];
    let mut m_star = vec![BigInt::zero()];
    let mut enumerated_through = 0;
    for d in 1..=max_degree {
        let small = (q as u64).checked_pow(d as u32).is_some_and(|s| s <= COUNT_ENUMERATION_THRESHOLD);
        if small && enumerated_through == d - 1 {
            let (n, m) = enumerate_self_dual_counts(q, d)?;
            n_star.push(n.into());
            m_star.push(m.into());
            enumerated_through = d;
        } else {
            n_star.push(closed_form_n_star(q, d));
            m_star.push(closed_form_m_star(q, d));
        }
    }
    Ok(PolyCounts { q, n_star, m_star, enumerated_through })
}
