use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed};

use super::partition::Partition;
use super::symbol::{OddSymbol, OrthSymbol, Symbol, SymbolRows};

fn big_pow(q: u32, e: u32) -> BigInt {
    Pow::pow(&BigInt::from(q), e)
}

fn binom2(m: u32) -> u32 {
    m * m.saturating_sub(1) / 2
}

/// `sum_{i >= 1, len - 2i >= 2} C(len - 2i, 2)`.
pub fn c_value(len: u32) -> u32 {
    (1..).map(|i| len as i64 - 2 * i).take_while(|&m| m >= 2).map(|m| binom2(m as u32)).sum()
}

/// The common closed form: Vandermonde-type numerator over `2^two_exp q^c`
/// times the hook products `prod_i prod_{j <= x_i} (q^{2j} - 1)`.
fn delta_closed_form(a: &[u32], b: &[u32], two_exp: u32, q: u32) -> BigRational {
    let qa: Vec<BigInt> = a.iter().map(|&x| big_pow(q, x)).collect();
    let qb: Vec<BigInt> = b.iter().map(|&x| big_pow(q, x)).collect();
    let mut num = BigInt::one();
    for row in [&qa, &qb] {
        for i in 0..row.len() {
            for j in i + 1..row.len() {
                num *= (&row[j] - &row[i]).abs();
            }
        }
    }
    for x in &qa {
        for y in &qb {
            num *= x + y;
        }
    }
    let len = (a.len() + b.len()) as u32;
    let mut den = big_pow(2, two_exp) * big_pow(q, c_value(len));
    for &x in a.iter().chain(b) {
        for j in 1..=x {
            den *= big_pow(q, 2 * j) - 1;
        }
    }
    BigRational::new(num, den)
}

/// Modified unipotent degree of an even-defect symbol.
pub fn delta_symbol(s: &Symbol, q: u32) -> BigRational {
    let (a, b) = (s.row_a(), s.row_b());
    let len = (a.len() + b.len()) as u32;
    if len == 0 {
        return BigRational::one();
    }
    let two_exp = if s.is_degenerate() { a.len() as u32 } else { (len - 2) / 2 };
    delta_closed_form(a, b, two_exp, q)
}

/// Modified unipotent degree of an orthogonal symbol: doubled on degenerate ones.
pub fn delta_orth(x: &OrthSymbol, q: u32) -> BigRational {
    let (a, b) = (x.row_a(), x.row_b());
    let len = (a.len() + b.len()) as u32;
    if len == 0 {
        return BigRational::from_integer(2.into());
    }
    delta_closed_form(a, b, (len - 2) / 2, q)
}

/// Modified unipotent degree of an odd-defect symbol.
pub fn delta_odd(u: &OddSymbol, q: u32) -> BigRational {
    let (a, b) = (u.row_a(), u.row_b());
    let len = (a.len() + b.len()) as u32;
    delta_closed_form(a, b, (len - 1) / 2, q)
}

/// `Q^{n(lambda)} / prod_hooks (Q^h - 1)` with `Q = q^d`.
pub fn delta_gl(lambda: &Partition, d: u32, q: u32) -> BigRational {
    let big_q = big_pow(q, d);
    let mut den = BigInt::one();
    for h in lambda.hooks() {
        den *= Pow::pow(&big_q, h) - 1;
    }
    BigRational::new(Pow::pow(&big_q, lambda.n_value()), den)
}

/// `|Q^{n(lambda)} / prod_hooks (Q^h - (-1)^h)|` with `Q = q^(degree/2)`.
pub fn delta_u(lambda: &Partition, degree: u32, q: u32) -> BigRational {
    assert!(degree.is_multiple_of(2), "unitary slots have even degree");
    let big_q = big_pow(q, degree / 2);
    let mut den = BigInt::one();
    for h in lambda.hooks() {
        let sign = if h % 2 == 0 { 1 } else { -1 };
        den *= Pow::pow(&big_q, h) - sign;
    }
    BigRational::new(Pow::pow(&big_q, lambda.n_value()), den).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::frac;

    fn sym(a: &[u32], b: &[u32]) -> Symbol {
        Symbol::new(a.to_vec(), b.to_vec(), false).unwrap()
    }

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn c_values() {
        assert_eq!([0, 1, 2, 3, 4, 5, 6].map(c_value), [0, 0, 0, 0, 1, 3, 7]);
    }

    #[test]
    fn split_examples() {
        for q in [2u32, 3, 5] {
            let q = q as i64;
            assert_eq!(delta_symbol(&sym(&[0], &[1]), q as u32), frac(1, q - 1));
            assert_eq!(delta_symbol(&sym(&[0, 1], &[]), q as u32), frac(1, q + 1));
            let g = sym(&[1], &[1]);
            assert_eq!(delta_symbol(&g, q as u32), frac(q, (q * q - 1) * (q * q - 1)));
            assert_eq!(delta_symbol(&g.with_prime(true), q as u32), delta_symbol(&g, q as u32));
            assert_eq!(delta_symbol(&sym(&[], &[]), q as u32), frac(1, 1));
        }
    }

    #[test]
    fn orth_examples() {
        let q = 3i64;
        let x = OrthSymbol::new(vec![0], vec![1]).unwrap();
        assert_eq!(delta_orth(&x, 3), frac(1, q - 1));
        assert_eq!(delta_orth(&x.swapped(), 3), frac(1, q - 1));
        let g = OrthSymbol::new(vec![1], vec![1]).unwrap();
        assert_eq!(delta_orth(&g, 3), frac(2 * q, (q * q - 1) * (q * q - 1)));
        assert_eq!(delta_orth(&OrthSymbol::new(vec![], vec![]).unwrap(), 3), frac(2, 1));
    }

    #[test]
    fn odd_examples() {
        let q = 4i64;
        assert_eq!(delta_odd(&OddSymbol::new(vec![0], vec![]).unwrap(), 4), frac(1, 1));
        assert_eq!(delta_odd(&OddSymbol::new(vec![1], vec![]).unwrap(), 4), frac(1, q * q - 1));
        assert_eq!(delta_odd(&OddSymbol::new(vec![0, 1], vec![1]).unwrap(), 4), frac(q, q * q - 1));
    }

    #[test]
    fn hook_formulas() {
        let q = 5i64;
        assert_eq!(delta_gl(&part(&[1, 1]), 1, 5), frac(q, (q - 1) * (q * q - 1)));
        assert_eq!(delta_u(&part(&[1, 1]), 2, 5), frac(q, (q + 1) * (q * q - 1)));
        assert_eq!(delta_gl(&Partition::empty(), 3, 5), frac(1, 1));
        assert_eq!(delta_u(&Partition::empty(), 4, 5), frac(1, 1));
        assert_eq!(delta_u(&part(&[1]), 2, 5), frac(1, q + 1));
    }
}
