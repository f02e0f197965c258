use std::fmt;

use super::field::{Elem, FiniteField};
use crate::error::{Error, Result};

/// Polynomial in `t` over a finite field, coefficients lowest degree first,
/// without trailing zeros. The field is passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    coeffs: Vec<Elem>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Elem>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    /// Monic polynomial of degree `d` whose lower coefficients are the base-`q`
    /// digits of `code`, `a_0` least significant.
    pub fn monic_from_code(q: u32, d: usize, mut code: u64) -> Self {
        let mut coeffs = Vec::with_capacity(d + 1);
        for _ in 0..d {
            coeffs.push((code % q as u64) as Elem);
            code /= q as u64;
        }
        coeffs.push(1);
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1)
    }

    pub fn constant_term(&self) -> Elem {
        self.coeffs.first().copied().unwrap_or(0)
    }

    pub fn mul(&self, other: &Poly, field: &FiniteField) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::new(vec![]);
        }
        let mut out = vec![0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = field.add(out[i + j], field.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Remainder on division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Poly, field: &FiniteField) -> Poly {
        let mut r = self.coeffs.clone();
        reduce_in_place(&mut r, divisor, field);
        Poly::new(r)
    }

    pub fn divides(&self, other: &Poly, field: &FiniteField) -> bool {
        other.rem(self, field).is_zero()
    }

    pub fn eval(&self, x: Elem, field: &FiniteField) -> Elem {
        self.coeffs.iter().rev().fold(0, |acc, &c| field.add(field.mul(acc, x), c))
    }

    /// `f*(t) = a_0^{-1} t^d f(1/t)` for monic `f` with `f(0) != 0`.
    pub fn dual(&self, field: &FiniteField) -> Result<Poly> {
        let a0 = self.constant_term();
        if a0 == 0 {
            return Err(Error::ZeroConstantPolynomial);
        }
        if !self.is_monic() {
            return Err(Error::OutOfRange("dual of a non-monic polynomial".into()));
        }
        let inv = field.inv(a0);
        Ok(Poly::new(self.coeffs.iter().rev().map(|&c| field.mul(inv, c)).collect()))
    }
}

/// Replaces `r` by its remainder modulo `divisor` (leaves length at most
/// `deg divisor`; trailing zeros are not stripped).
pub(crate) fn reduce_in_place(r: &mut Vec<Elem>, divisor: &Poly, field: &FiniteField) {
    let d = divisor.coeffs.len() - 1;
    let lead_inv = field.inv(*divisor.coeffs.last().expect("division by zero polynomial"));
    while r.len() > d {
        let top = r.pop().unwrap();
        if top == 0 {
            continue;
        }
        let factor = field.mul(top, lead_inv);
        let shift = r.len() - d;
        for (i, &c) in divisor.coeffs[..d].iter().enumerate() {
            r[shift + i] = field.sub(r[shift + i], field.mul(factor, c));
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{coeff}t")?,
                _ => write!(f, "{coeff}t^{i}")?,
            }
        }
        Ok(())
    }
}
