//! Degree sums by listing every character: actual self-dual irreducibles and
//! dual pairs over `F_q`, every partition assignment, and every unipotent
//! label at the eigenvalues `±1`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::datum::{linear_p_prime, type_sign, unitary_p_prime, PolySlot, SemisimpleDatum};
use super::graded::{check_params, integral};
use super::group::{even_power_product, o_p_prime, so_p_prime};
use crate::error::{Error, Result};
use crate::ffpoly::{enumerate_irreducibles, FiniteField};
use crate::symbols::{
    delta_gl, delta_odd, delta_orth, delta_symbol, delta_u, odd_symbols, orth_symbols, partitions, split_symbols,
    OddSymbol, OrthSymbol, Symbol, SymbolRows,
};
use crate::{e_of_q, Sign};

/// Largest rank accepted by the explicit route.
pub const EXPLICIT_MAX_RANK: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyInventory {
    /// Degrees of the self-dual irreducibles other than `t ± 1`.
    pub self_dual: Vec<u32>,
    /// Degree of `g` for each unordered pair `{g, g*}`.
    pub pairs: Vec<u32>,
}

/// Every polynomial slot that can occur in rank `n`.
pub fn inventory(q: u32, n: u32) -> Result<PolyInventory> {
    let field = FiniteField::shared(q)?;
    let mut inv = PolyInventory { self_dual: vec![], pairs: vec![] };
    for d in 1..=2 * n as usize {
        for f in enumerate_irreducibles(q, d)?.iter() {
            let dual = f.dual(&field)?;
            if dual == *f {
                if d >= 2 {
                    inv.self_dual.push(d as u32);
                }
            } else if d <= n as usize && f < &dual {
                inv.pairs.push(d as u32);
            }
        }
    }
    Ok(inv)
}

/// Slot weight in the rank.
fn slot_weight(inv: &PolyInventory, i: usize) -> u32 {
    let k = inv.self_dual.len();
    if i < k {
        inv.self_dual[i] / 2
    } else {
        inv.pairs[i - k]
    }
}

type TorusVisitor<'a> = dyn FnMut(&[PolySlot], &[PolySlot], u32) -> Result<()> + 'a;

/// Calls `visit(self_dual, pairs, weight)` for every assignment of partitions
/// to slots with total weight at most `n`.
fn for_each_torus(inv: &PolyInventory, n: u32, visit: &mut TorusVisitor) -> Result<()> {
    fn go(
        inv: &PolyInventory,
        i: usize,
        left: u32,
        sd: &mut Vec<PolySlot>,
        pr: &mut Vec<PolySlot>,
        n: u32,
        visit: &mut TorusVisitor,
    ) -> Result<()> {
        let total = inv.self_dual.len() + inv.pairs.len();
        if i == total {
            return visit(sd, pr, n - left);
        }
        go(inv, i + 1, left, sd, pr, n, visit)?;
        let w = slot_weight(inv, i);
        let is_sd = i < inv.self_dual.len();
        let degree = if is_sd { inv.self_dual[i] } else { inv.pairs[i - inv.self_dual.len()] };
        for m in 1..=left / w {
            for lambda in partitions(m).iter() {
                let slot = PolySlot { degree, partition: lambda.clone() };
                let list = if is_sd { &mut *sd } else { &mut *pr };
                list.push(slot);
                go(inv, i + 1, left - m * w, sd, pr, n, visit)?;
                if is_sd {
                    sd.pop();
                } else {
                    pr.pop();
                }
            }
        }
        Ok(())
    }
    go(inv, 0, n, &mut vec![], &mut vec![], n, visit)
}

/// `prod psi_U prod psi_GL` over the torus slots.
fn torus_degree(sd: &[PolySlot], pr: &[PolySlot], q: u32) -> BigRational {
    let mut acc = BigRational::one();
    for s in sd {
        let m = s.multiplicity();
        acc *= delta_u(&s.partition, s.degree, q) * BigRational::from_integer(unitary_p_prime(m, s.degree, q));
    }
    for s in pr {
        let m = s.multiplicity();
        acc *= delta_gl(&s.partition, s.degree, q) * BigRational::from_integer(linear_p_prime(m, s.degree, q));
    }
    acc
}

fn torus_order(sd: &[PolySlot], pr: &[PolySlot], q: u32) -> BigInt {
    let u = sd.iter().map(|s| unitary_p_prime(s.multiplicity(), s.degree, q));
    let l = pr.iter().map(|s| linear_p_prime(s.multiplicity(), s.degree, q));
    u.chain(l).fold(BigInt::one(), |a, x| a * x)
}

fn ratio(a: BigInt) -> BigRational {
    BigRational::from_integer(a)
}

fn check_explicit(n: u32, q: u32) -> Result<()> {
    check_params(n, q)?;
    if n > EXPLICIT_MAX_RANK {
        return Err(Error::OutOfRange(format!("explicit route limited to n <= {EXPLICIT_MAX_RANK}")));
    }
    Ok(())
}

/// Unipotent degree of an orthogonal symbol of `O^eta(2m)`.
fn psi_orth(x: &OrthSymbol, q: u32) -> BigRational {
    let m = x.rank();
    if m == 0 {
        return BigRational::one();
    }
    delta_orth(x, q) * ratio(o_p_prime(m, q, x.defect_class())) / BigRational::from_integer(2.into())
}

/// Adds one character degree to the per-type totals after checking integrality.
fn record(totals: &mut [BigInt; 2], tau: Sign, degree: BigRational, count: u32) -> Result<()> {
    let d = integral("character degree", degree)?;
    if d <= BigInt::zero() {
        return Err(Error::NonIntegral { what: "character degree".into(), value: d.to_string() });
    }
    totals[(tau == Sign::Minus) as usize] += d * count;
    Ok(())
}

/// `[Sigma(O+(2n,q)), Sigma(O-(2n,q))]`.
pub fn sigma_o_explicit(n: u32, q: u32) -> Result<[BigInt; 2]> {
    check_explicit(n, q)?;
    let inv = inventory(q, n)?;
    let odd = e_of_q(q) == 2;
    let mut totals = [BigInt::zero(), BigInt::zero()];
    for_each_torus(&inv, n, &mut |sd, pr, used| {
        let r = n - used;
        let base = torus_degree(sd, pr, q);
        let torus = torus_order(sd, pr, q);
        for m_plus in 0..=r {
            let m_minus = r - m_plus;
            if !odd && m_minus > 0 {
                continue;
            }
            for xp in orth_symbols(m_plus).iter() {
                let minus_labels: Vec<Option<OrthSymbol>> =
                    if odd { orth_symbols(m_minus).iter().cloned().map(Some).collect() } else { vec![None] };
                for xm in minus_labels {
                    let datum = SemisimpleDatum {
                        self_dual: sd.to_vec(),
                        pairs: pr.to_vec(),
                        plus: Some(xp.clone()),
                        minus: xm.clone(),
                    };
                    let tau = type_sign(&datum);
                    let mut cent = &torus * o_p_prime(m_plus, q, datum.eta_plus());
                    let mut psi = &base * psi_orth(xp, q);
                    if let Some(x) = &xm {
                        cent *= o_p_prime(m_minus, q, datum.eta_minus());
                        psi *= psi_orth(x, q);
                    }
                    let index = ratio(o_p_prime(n, q, tau)) / ratio(cent);
                    record(&mut totals, tau, index * psi, 1)?;
                }
            }
        }
        Ok(())
    })?;
    Ok(totals)
}

/// Degree of the unipotent character of `SO^eta(2m)` labelled by `s`.
fn psi_split(s: &Symbol, q: u32) -> BigRational {
    delta_symbol(s, q) * ratio(so_p_prime(s.rank(), q, s.defect_class()))
}

/// `[Sigma(SO+(2n,q)), Sigma(SO-(2n,q))]`.
pub fn sigma_so_explicit(n: u32, q: u32) -> Result<[BigInt; 2]> {
    check_explicit(n, q)?;
    let inv = inventory(q, n)?;
    let odd = e_of_q(q) == 2;
    let mut totals = [BigInt::zero(), BigInt::zero()];
    for_each_torus(&inv, n, &mut |sd, pr, used| {
        let r = n - used;
        let base = torus_degree(sd, pr, q);
        let torus = torus_order(sd, pr, q);
        let parity =
            type_sign(&SemisimpleDatum::<Symbol> { self_dual: sd.to_vec(), pairs: vec![], plus: None, minus: None });
        let index = |tau: Sign, cent: BigInt| ratio(so_p_prime(n, q, tau)) / ratio(cent);
        for m_plus in 0..=r {
            let m_minus = r - m_plus;
            if !odd && m_minus > 0 {
                continue;
            }
            match (m_plus, m_minus) {
                (0, 0) => {
                    // two semisimple classes for the same data
                    record(&mut totals, parity, index(parity, torus.clone()) * &base, 2)?;
                }
                (m, 0) | (0, m) => {
                    for s in split_symbols(m).iter() {
                        let eta = s.defect_class();
                        let tau = eta * parity;
                        let cent = &torus * so_p_prime(m, q, eta);
                        record(&mut totals, tau, index(tau, cent) * &base * psi_split(s, q), 1)?;
                    }
                }
                (mp, mm) => {
                    let minus = split_symbols(mm);
                    for sp in split_symbols(mp).iter() {
                        for sm in minus.iter() {
                            let both_regular = !sp.is_degenerate() && !sm.is_degenerate();
                            if !both_regular {
                                let partner = (flip(sp), flip(sm));
                                if (sp.clone(), sm.clone()) > partner {
                                    continue;
                                }
                            }
                            let (ep, em) = (sp.defect_class(), sm.defect_class());
                            let tau = ep * em * parity;
                            let cent = &torus * so_p_prime(mp, q, ep) * so_p_prime(mm, q, em) * 2;
                            let psi = psi_split(sp, q) * psi_split(sm, q);
                            let deg = index(tau, cent) * &base * psi;
                            if both_regular {
                                record(&mut totals, tau, deg, 2)?;
                            } else {
                                record(&mut totals, tau, deg * BigRational::from_integer(2.into()), 1)?;
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    })?;
    Ok(totals)
}

fn flip(s: &Symbol) -> Symbol {
    if s.is_degenerate() {
        s.with_prime(!s.primed())
    } else {
        s.clone()
    }
}

/// `Sigma(Sp(2n,q))`. The slot of `t + 1` carries an orthogonal symbol for
/// odd `q`; the slot of `t - 1` carries an odd-defect symbol.
pub fn sigma_sp_explicit(n: u32, q: u32) -> Result<BigInt> {
    check_explicit(n, q)?;
    let inv = inventory(q, n)?;
    let odd = e_of_q(q) == 2;
    let full = even_power_product(q, 1, n);
    let mut totals = [BigInt::zero(), BigInt::zero()];
    for_each_torus(&inv, n, &mut |sd, pr, used| {
        let r = n - used;
        let base = torus_degree(sd, pr, q);
        let torus = torus_order(sd, pr, q);
        for m_plus in 0..=r {
            let m_minus = r - m_plus;
            if !odd && m_plus > 0 {
                continue;
            }
            for xp in orth_symbols(m_plus).iter() {
                let tail = even_power_product(q, 1, m_minus);
                for u in odd_symbols(m_minus).iter() {
                    let cent = &torus * o_p_prime(m_plus, q, xp.defect_class()) * &tail;
                    let psi = &base * psi_orth(xp, q) * psi_odd(u, &tail, q);
                    record(&mut totals, Sign::Plus, ratio(full.clone()) / ratio(cent) * psi, 1)?;
                }
            }
        }
        Ok(())
    })?;
    let [total, _] = totals;
    Ok(total)
}

fn psi_odd(u: &OddSymbol, tail: &BigInt, q: u32) -> BigRational {
    delta_odd(u, q) * ratio(tail.clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::degree_sums::{sigma_o, sigma_so, sigma_sp};

    #[test]
    fn inventory_counts() {
        let inv = inventory(3, 1).unwrap();
        assert_eq!(inv.self_dual, vec![2]);
        assert!(inv.pairs.is_empty());
        let inv = inventory(5, 1).unwrap();
        assert_eq!(inv.pairs, vec![1]);
        assert_eq!(inv.self_dual, vec![2, 2]);
    }

    #[test]
    fn symplectic_rank_one() {
        assert_eq!(sigma_sp_explicit(1, 3).unwrap(), BigInt::from(12));
        assert_eq!(sigma_sp_explicit(1, 2).unwrap(), BigInt::from(4));
    }

    #[test]
    fn agrees_with_graded_route_rank_two() {
        for q in [2, 3] {
            let o = sigma_o_explicit(2, q).unwrap();
            let so = sigma_so_explicit(2, q).unwrap();
            for (i, tau) in Sign::both().into_iter().enumerate() {
                assert_eq!(o[i], sigma_o(2, q, tau).unwrap(), "O q={q}");
                assert_eq!(so[i], sigma_so(2, q, tau).unwrap(), "SO q={q}");
            }
            assert_eq!(sigma_sp_explicit(2, q).unwrap(), sigma_sp(2, q).unwrap());
        }
    }
}
