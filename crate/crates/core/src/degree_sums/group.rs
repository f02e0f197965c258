use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupKind {
    O,
    SO,
    Sp,
}

/// `O^sign(2n, q)`, `SO^sign(2n, q)` or `Sp(2n, q)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupSpec {
    pub kind: GroupKind,
    pub n: u32,
    pub q: u32,
    pub sign: Option<Sign>,
}

impl GroupSpec {
    pub fn orthogonal(n: u32, q: u32, sign: Sign) -> Self {
        GroupSpec { kind: GroupKind::O, n, q, sign: Some(sign) }
    }

    pub fn special_orthogonal(n: u32, q: u32, sign: Sign) -> Self {
        GroupSpec { kind: GroupKind::SO, n, q, sign: Some(sign) }
    }

    pub fn symplectic(n: u32, q: u32) -> Self {
        GroupSpec { kind: GroupKind::Sp, n, q, sign: None }
    }

    pub fn dim(&self) -> u32 {
        2 * self.n
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sign = self.sign.map(|s| s.to_string()).unwrap_or_default();
        let name = match self.kind {
            GroupKind::O => "O",
            GroupKind::SO => "SO",
            GroupKind::Sp => "Sp",
        };
        write!(f, "{name}{sign}({},{})", 2 * self.n, self.q)
    }
}

pub(crate) fn big(q: u32) -> BigInt {
    BigInt::from(q)
}

/// `prod_{i=from}^{to} (q^{2i} - 1)`.
pub fn even_power_product(q: u32, from: u32, to: u32) -> BigInt {
    (from..=to).fold(BigInt::one(), |acc, i| acc * (Pow::pow(&big(q), 2 * i) - 1))
}

/// `(q^n - sign) prod_{i<n} (q^{2i} - 1)`: the prime-to-p part of
/// `|SO^sign(2n, q)|`, and 1 for `n = 0`.
pub fn so_p_prime(n: u32, q: u32, sign: Sign) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    (Pow::pow(&big(q), n) - sign.value()) * even_power_product(q, 1, n - 1)
}

/// Prime-to-p part of `|O^sign(2n, q)|`, and 1 for `n = 0`.
pub fn o_p_prime(n: u32, q: u32, sign: Sign) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    so_p_prime(n, q, sign) * 2
}

/// `|GL(n, q)|`.
pub fn gl_order(n: u32, q: u32) -> BigInt {
    let qn = Pow::pow(&big(q), n);
    (0..n).fold(BigInt::one(), |acc, i| acc * (&qn - Pow::pow(&big(q), i)))
}

pub fn group_order(spec: &GroupSpec) -> Result<BigInt> {
    let GroupSpec { kind, n, q, sign } = *spec;
    if n == 0 {
        return Err(Error::OutOfRange("n must be positive".into()));
    }
    let p_part = match kind {
        GroupKind::Sp => Pow::pow(&big(q), n * n),
        _ => Pow::pow(&big(q), n * n - n),
    };
    Ok(match kind {
        GroupKind::Sp => p_part * even_power_product(q, 1, n),
        GroupKind::O => p_part * o_p_prime(n, q, sign.ok_or(Error::OutOfRange("missing type".into()))?),
        GroupKind::SO => p_part * so_p_prime(n, q, sign.ok_or(Error::OutOfRange("missing type".into()))?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        let o = |n, q, s| group_order(&GroupSpec::orthogonal(n, q, s)).unwrap();
        assert_eq!(o(2, 2, Sign::Plus), BigInt::from(72));
        assert_eq!(o(2, 2, Sign::Minus), BigInt::from(120));
        assert_eq!(o(3, 2, Sign::Plus), BigInt::from(40320));
        assert_eq!(o(3, 2, Sign::Minus), BigInt::from(51840));
        assert_eq!(o(2, 3, Sign::Plus), BigInt::from(1152));
        assert_eq!(o(2, 3, Sign::Minus), BigInt::from(1440));
        let sp = |n, q| group_order(&GroupSpec::symplectic(n, q)).unwrap();
        assert_eq!(sp(1, 3), BigInt::from(24));
        assert_eq!(sp(2, 3), BigInt::from(51840));
        let so = group_order(&GroupSpec::special_orthogonal(1, 5, Sign::Plus)).unwrap();
        assert_eq!(so, BigInt::from(4));
        assert!(group_order(&GroupSpec::symplectic(0, 3)).is_err());
        assert_eq!(gl_order(2, 3), BigInt::from(48));
    }

    #[test]
    fn display() {
        assert_eq!(GroupSpec::orthogonal(2, 3, Sign::Minus).to_string(), "O-(4,3)");
        assert_eq!(GroupSpec::symplectic(1, 5).to_string(), "Sp(2,5)");
    }
}
