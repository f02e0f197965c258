//! Truncated power series in `z` with exact rational coefficients at a fixed
//! numeric `q`, plus exact expansion of the infinite products used throughout.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `q^e` for any integer exponent.
pub fn q_power(q: u32, e: i64) -> BigRational {
    let base = BigInt::from(q);
    let mag = Pow::pow(&base, e.unsigned_abs());
    if e >= 0 {
        BigRational::from_integer(mag)
    } else {
        BigRational::new(BigInt::one(), mag)
    }
}

/// Power series modulo `z^(order+1)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(order, BigRational::one())
    }

    pub fn constant(order: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^n`, or zero when `n > order`.
    pub fn monomial(order: usize, n: usize, c: BigRational) -> Self {
        let mut s = Self::zero(order);
        if n <= order {
            s.coeffs[n] = c;
        }
        s
    }

    /// Pads with zeros or truncates to `order`.
    pub fn from_coeffs<I: IntoIterator<Item = BigRational>>(order: usize, coeffs: I) -> Self {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> Result<&BigRational> {
        self.coeffs.get(n).ok_or(Error::IndexOutOfRange { index: n, order: self.order() })
    }

    /// Adds `c` to the coefficient of `z^n`; ignored beyond the order.
    pub fn add_term(&mut self, n: usize, c: &BigRational) {
        if let Some(slot) = self.coeffs.get_mut(n) {
            *slot += c;
        }
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.iter().cloned())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for n in k..=order {
            s.coeffs[n] = self.coeffs[n - k].clone();
        }
        s
    }

    pub fn inv(&self) -> Result<Self> {
        let f0 = &self.coeffs[0];
        if f0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order();
        let inv0 = f0.recip();
        let mut g = Vec::with_capacity(order + 1);
        g.push(inv0.clone());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &g[n - k];
                }
            }
            g.push(-(acc * &inv0));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `f^alpha` for an integer exponent of any size, via the J.C.P. Miller
    /// recurrence. Needs a nonzero constant term unless `alpha >= 0`.
    pub fn pow(&self, alpha: &BigInt) -> Result<Self> {
        let order = self.order();
        let f0 = self.coeffs[0].clone();
        if f0.is_zero() {
            if alpha.is_negative() {
                return Err(Error::ZeroConstantTerm);
            }
            return Ok(self.pow_by_squaring(alpha));
        }
        let g0 = if f0.is_one() {
            BigRational::one()
        } else {
            let e =
                alpha.to_i32().ok_or_else(|| Error::OutOfRange(format!("exponent {alpha} with constant term {f0}")))?;
            Pow::pow(&f0, e)
        };
        let alpha1 = BigRational::from_integer(alpha + 1);
        let inv_f0 = f0.recip();
        let mut g = Vec::with_capacity(order + 1);
        g.push(g0);
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let w = &alpha1 * rat(k as i64) - rat(n as i64);
                acc += w * &self.coeffs[k] * &g[n - k];
            }
            g.push(acc * &inv_f0 / rat(n as i64));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    fn pow_by_squaring(&self, alpha: &BigInt) -> Self {
        let mut result = Self::one(self.order());
        let mut base = self.clone();
        let mut e = alpha.clone();
        let two = BigInt::from(2);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                result = &result * &base;
            }
            e /= &two;
            if !e.is_zero() {
                base = &base * &base;
            }
        }
        result
    }

    /// `exp(f)` for `f` with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::OutOfRange("exp needs zero constant term".into()));
        }
        let order = self.order();
        let mut g = Vec::with_capacity(order + 1);
        g.push(BigRational::one());
        for n in 1..=order {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += rat(k as i64) * &self.coeffs[k] * &g[n - k];
                }
            }
            g.push(acc / rat(n as i64));
        }
        Ok(TruncatedSeries { coeffs: g })
    }

    /// `(1 + c z^e)^power` by the generalized binomial theorem.
    pub fn binomial(order: usize, c: &BigRational, e: usize, power: &BigInt) -> Self {
        assert!(e >= 1);
        let mut s = Self::one(order);
        let p = BigRational::from_integer(power.clone());
        let mut term = BigRational::one();
        let mut j = 1;
        while e * j <= order {
            term = term * (&p - rat(j as i64 - 1)) / rat(j as i64) * c;
            if term.is_zero() {
                break;
            }
            s.coeffs[e * j] = term.clone();
            j += 1;
        }
        s
    }
}

fn zip_with(
    a: &TruncatedSeries,
    b: &TruncatedSeries,
    f: impl Fn(&BigRational, &BigRational) -> BigRational,
) -> TruncatedSeries {
    TruncatedSeries { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| f(x, y)).collect() }
}

impl Add for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn add(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl Sub for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn sub(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        zip_with(self, rhs, |x, y| x - y)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn neg(self) -> TruncatedSeries {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|x| -x).collect() }
    }
}

/// Operands of different orders multiply at the smaller order.
impl Mul for &TruncatedSeries {
    type Output = TruncatedSeries;
    fn mul(self, rhs: &TruncatedSeries) -> TruncatedSeries {
        let order = self.order().min(rhs.order());
        let mut out = TruncatedSeries::zero(order);
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }
}

macro_rules! owned_ops {
    ($ty:ty, $($tr:ident $m:ident),*) => {$(
        impl $tr for $ty {
            type Output = $ty;
            fn $m(self, rhs: $ty) -> $ty {
                $tr::$m(&self, &rhs)
            }
        }
    )*};
}
owned_ops!(TruncatedSeries, Add add, Sub sub, Mul mul);

/// A pair of series indexed by the sign group `{+, -}`, multiplied as an
/// element of the group algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSeries {
    pub plus: TruncatedSeries,
    pub minus: TruncatedSeries,
}

impl GradedSeries {
    pub fn new(plus: TruncatedSeries, minus: TruncatedSeries) -> Self {
        let order = plus.order().min(minus.order());
        GradedSeries { plus: plus.truncate(order), minus: minus.truncate(order) }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(TruncatedSeries::zero(order), TruncatedSeries::zero(order))
    }

    pub fn one(order: usize) -> Self {
        Self::ungraded(TruncatedSeries::one(order))
    }

    /// Concentrated in the `+` component.
    pub fn ungraded(f: TruncatedSeries) -> Self {
        let order = f.order();
        GradedSeries { plus: f, minus: TruncatedSeries::zero(order) }
    }

    pub fn order(&self) -> usize {
        self.plus.order()
    }

    pub fn component(&self, sign: crate::Sign) -> &TruncatedSeries {
        match sign {
            crate::Sign::Plus => &self.plus,
            crate::Sign::Minus => &self.minus,
        }
    }

    pub fn total(&self) -> TruncatedSeries {
        &self.plus + &self.minus
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GradedSeries { plus: self.plus.scale(c), minus: self.minus.scale(c) }
    }

    /// Integer power, computed on the two characters of the sign group.
    pub fn pow(&self, alpha: &BigInt) -> Result<Self> {
        let s = (&self.plus + &self.minus).pow(alpha)?;
        let d = (&self.plus - &self.minus).pow(alpha)?;
        let half = frac(1, 2);
        Ok(GradedSeries { plus: (&s + &d).scale(&half), minus: (&s - &d).scale(&half) })
    }
}

impl Add for &GradedSeries {
    type Output = GradedSeries;
    fn add(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries { plus: &self.plus + &rhs.plus, minus: &self.minus + &rhs.minus }
    }
}

impl Mul for &GradedSeries {
    type Output = GradedSeries;
    fn mul(self, rhs: &GradedSeries) -> GradedSeries {
        GradedSeries {
            plus: &(&self.plus * &rhs.plus) + &(&self.minus * &rhs.minus),
            minus: &(&self.plus * &rhs.minus) + &(&self.minus * &rhs.plus),
        }
    }
}

owned_ops!(GradedSeries, Add add, Mul mul);

/// Exponents `a` of `1/q` occurring in a family of product factors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QExponents {
    Single(i64),
    /// `start, start + step, start + 2 step, ...` with `step >= 1`.
    Progression {
        start: i64,
        step: i64,
    },
    /// `i + j` over all `1 <= i < j` with `i + j` odd; the value `s` occurs
    /// `(s - 1) / 2` times.
    OddPairSums,
}

impl QExponents {
    /// `sum over the family of q^(-a k)`, in closed form.
    fn power_sum(&self, q: u32, k: i64) -> BigRational {
        match *self {
            QExponents::Single(a) => q_power(q, -a * k),
            QExponents::Progression { start, step } => {
                let qs = q_power(q, step * k);
                q_power(q, -start * k) * &qs / (qs - rat(1))
            }
            QExponents::OddPairSums => {
                let q2 = q_power(q, 2 * k);
                let den = &(&q2 - rat(1)) * &(&q2 - rat(1));
                q_power(q, k) / den
            }
        }
    }

    /// Members with `a <= cutoff`, as `(a, multiplicity)`.
    pub fn members_up_to(&self, cutoff: i64) -> Vec<(i64, u64)> {
        match *self {
            QExponents::Single(a) => {
                if a <= cutoff {
                    vec![(a, 1)]
                } else {
                    vec![]
                }
            }
            QExponents::Progression { start, step } => {
                assert!(step >= 1);
                let mut v = Vec::new();
                let mut a = start;
                while a <= cutoff {
                    v.push((a, 1));
                    a += step;
                }
                v
            }
            QExponents::OddPairSums => (3..=cutoff).step_by(2).map(|s| (s, ((s - 1) / 2) as u64)).collect(),
        }
    }
}

/// The family of factors `(1 + sign * z^z_exp / q^a)^power` for `a` in
/// `exponents`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFactor {
    pub sign: i8,
    pub z_exp: usize,
    pub exponents: QExponents,
    pub power: i64,
}

impl ProductFactor {
    pub fn new(sign: i8, z_exp: usize, exponents: QExponents, power: i64) -> Self {
        assert!(sign == 1 || sign == -1);
        assert!(z_exp >= 1);
        ProductFactor { sign, z_exp, exponents, power }
    }
}

/// Exact truncation of an infinite product of factor families.
///
/// Each coefficient of an infinite product at numeric `q` is a convergent
/// infinite sum, so no finite set of factors yields it exactly. The product is
/// expanded through its logarithm instead: the coefficient of `z^(e k)` in
/// `log` of a family is `-(-sign)^k / k` times the closed-form power sum
/// `sum q^(-a k)`, and the result is exponentiated.
pub fn expand_product(q: u32, factors: &[ProductFactor], order: usize) -> TruncatedSeries {
    let mut log = TruncatedSeries::zero(order);
    for f in factors {
        let mut k = 1usize;
        while f.z_exp * k <= order {
            let kk = k as i64;
            let sign = if f.sign == 1 && k.is_multiple_of(2) || f.sign == -1 { -1 } else { 1 };
            let c = f.exponents.power_sum(q, kk) * rat(sign * f.power) / rat(kk);
            log.add_term(f.z_exp * k, &c);
            k += 1;
        }
    }
    log.exp().expect("log has zero constant term")
}

/// The finite sub-product over members with q-exponent at most `cutoff`,
/// multiplied out factor by factor.
pub fn expand_partial_product(q: u32, factors: &[ProductFactor], order: usize, cutoff: i64) -> TruncatedSeries {
    let mut acc = TruncatedSeries::one(order);
    for f in factors {
        for (a, mult) in f.exponents.members_up_to(cutoff) {
            let c = q_power(q, -a) * rat(f.sign as i64);
            let power = BigInt::from(f.power) * BigInt::from(mult);
            acc = &acc * &TruncatedSeries::binomial(order, &c, f.z_exp, &power);
        }
    }
    acc
}
