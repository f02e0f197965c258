use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use super::partition::{partitions, Partition};
use super::symbol::{OddSymbol, OrthSymbol, Symbol, SymbolRows};
use crate::Sign;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    SPlus,
    SMinus,
    G,
    R,
    S,
    O,
    OPlus,
    OMinus,
    Odd,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AnySymbol {
    Split(Symbol),
    Orth(OrthSymbol),
    Odd(OddSymbol),
}

/// Row of length `len` built from a partition with at most `len` parts:
/// parts in increasing order, left-padded with zeros, plus `0, 1, 2, ...`.
fn row_from(lambda: &Partition, len: usize) -> Vec<u32> {
    let pad = len - lambda.len();
    (0..len).map(|i| if i < pad { 0 } else { lambda.parts()[len - 1 - i] } + i as u32).collect()
}

/// Reduced rows `(longer, shorter)` of defect `d` attached to `(alpha, beta)`.
fn rows_for(alpha: &Partition, beta: &Partition, d: usize) -> (Vec<u32>, Vec<u32>) {
    let k = beta.len().max(alpha.len().saturating_sub(d));
    (row_from(alpha, k + d), row_from(beta, k))
}

fn bipartitions(m: u32) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for s in 0..=m {
        for a in partitions(s).iter() {
            for b in partitions(m - s).iter() {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

/// Every even-defect symbol of rank `n`, degenerate ones in both copies.
fn generate_split(n: u32) -> Vec<Symbol> {
    let mut set = BTreeSet::new();
    let mut d = 0u32;
    while d * d / 4 <= n {
        for (alpha, beta) in bipartitions(n - d * d / 4) {
            let (a, b) = rows_for(&alpha, &beta, d as usize);
            let s = Symbol::new(a, b, false).expect("generated rows are reduced");
            if s.is_degenerate() {
                set.insert(s.with_prime(true));
            }
            set.insert(s);
        }
        d += 2;
    }
    set.into_iter().collect()
}

fn generate_odd(n: u32) -> Vec<OddSymbol> {
    let mut set = BTreeSet::new();
    let mut d = 1u32;
    while (d * d - 1) / 4 <= n {
        for (alpha, beta) in bipartitions(n - (d * d - 1) / 4) {
            let (a, b) = rows_for(&alpha, &beta, d as usize);
            set.insert(OddSymbol::new(a, b).expect("generated rows are reduced"));
        }
        d += 2;
    }
    set.into_iter().collect()
}

fn orth_from_split(split: &[Symbol]) -> Vec<OrthSymbol> {
    let mut set = BTreeSet::new();
    for s in split.iter().filter(|s| !s.primed()) {
        let x = OrthSymbol::new(s.row_a().to_vec(), s.row_b().to_vec()).unwrap();
        set.insert(x.swapped());
        set.insert(x);
    }
    set.into_iter().collect()
}

type Cache<T> = OnceLock<Mutex<HashMap<u32, Arc<Vec<T>>>>>;

fn cached<T>(cache: &'static Cache<T>, n: u32, make: impl FnOnce() -> Vec<T>) -> Arc<Vec<T>> {
    let map = cache.get_or_init(Default::default);
    if let Some(v) = map.lock().unwrap().get(&n) {
        return v.clone();
    }
    let v = Arc::new(make());
    map.lock().unwrap().entry(n).or_insert(v).clone()
}

/// All symbols of `S` of rank `n`, sorted.
pub fn split_symbols(n: u32) -> Arc<Vec<Symbol>> {
    static CACHE: Cache<Symbol> = OnceLock::new();
    cached(&CACHE, n, || generate_split(n))
}

/// All orthogonal symbols of rank `n`, sorted.
pub fn orth_symbols(n: u32) -> Arc<Vec<OrthSymbol>> {
    static CACHE: Cache<OrthSymbol> = OnceLock::new();
    cached(&CACHE, n, || orth_from_split(&split_symbols(n)))
}

/// All odd-defect symbols of rank `n`, sorted.
pub fn odd_symbols(n: u32) -> Arc<Vec<OddSymbol>> {
    static CACHE: Cache<OddSymbol> = OnceLock::new();
    cached(&CACHE, n, || generate_odd(n))
}

pub fn in_split_family(s: &Symbol, family: Family) -> bool {
    match family {
        Family::S => true,
        Family::SPlus => s.defect_class() == Sign::Plus,
        Family::SMinus => s.defect_class() == Sign::Minus,
        Family::G => s.is_degenerate(),
        Family::R => !s.is_degenerate(),
        _ => false,
    }
}

pub fn in_orth_family(x: &OrthSymbol, family: Family) -> bool {
    match family {
        Family::O => true,
        Family::OPlus => x.defect_class() == Sign::Plus,
        Family::OMinus => x.defect_class() == Sign::Minus,
        _ => false,
    }
}

/// Complete, duplicate-free list of reduced symbols of rank `n` in `family`.
pub fn enumerate_symbols(n: u32, family: Family) -> Vec<AnySymbol> {
    match family {
        Family::Odd => odd_symbols(n).iter().cloned().map(AnySymbol::Odd).collect(),
        Family::O | Family::OPlus | Family::OMinus => {
            orth_symbols(n).iter().filter(|x| in_orth_family(x, family)).cloned().map(AnySymbol::Orth).collect()
        }
        _ => split_symbols(n).iter().filter(|s| in_split_family(s, family)).cloned().map(AnySymbol::Split).collect(),
    }
}

/// Exhaustive bounded search, independent of the partition-based generator:
/// every pair of strictly increasing rows with `r + k <= 2n + 4` whose entries
/// sum to `n + floor(((r + k - 1) / 2)^2)`, kept if reduced. Pairs are
/// returned ordered, as `(row of length r, row of length k)`.
pub mod search {
    use super::*;

    fn increasing_rows(len: usize, sum: u32, lo: u32, out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>) {
        if len == 0 {
            if sum == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let l = len as u32;
        let min_sum = |start: u32| l * start + l * (l - 1) / 2;
        let mut x = lo;
        while min_sum(x) <= sum {
            cur.push(x);
            increasing_rows(len - 1, sum - x, x + 1, out, cur);
            cur.pop();
            x += 1;
        }
    }

    fn rows_with_sum(len: usize, sum: u32) -> Vec<Vec<u32>> {
        let mut out = Vec::new();
        increasing_rows(len, sum, 0, &mut out, &mut Vec::new());
        out
    }

    /// Reduced ordered pairs of rank `n` with row lengths `(r, k)` accepted by
    /// `keep_lengths`.
    pub fn ordered_pairs(n: u32, keep_lengths: impl Fn(usize, usize) -> bool) -> Vec<(Vec<u32>, Vec<u32>)> {
        let mut out = Vec::new();
        for total in 0..=(2 * n as usize + 4) {
            let target = n + if total == 0 { 0 } else { ((total - 1) * (total - 1) / 4) as u32 };
            for r in 0..=total {
                let k = total - r;
                if !keep_lengths(r, k) {
                    continue;
                }
                for s in 0..=target {
                    let firsts = rows_with_sum(r, s);
                    if firsts.is_empty() {
                        continue;
                    }
                    let seconds = rows_with_sum(k, target - s);
                    for a in &firsts {
                        for b in &seconds {
                            if !(a.first() == Some(&0) && b.first() == Some(&0)) {
                                out.push((a.clone(), b.clone()));
                            }
                        }
                    }
                }
            }
        }
        out
    }

    pub fn split_symbols(n: u32) -> Vec<Symbol> {
        let mut set = BTreeSet::new();
        for (a, b) in ordered_pairs(n, |r, k| r >= k && (r - k) % 2 == 0) {
            let degenerate = a == b;
            let s = Symbol::new(a, b, false).unwrap();
            if degenerate {
                set.insert(s.with_prime(true));
            }
            set.insert(s);
        }
        set.into_iter().collect()
    }

    pub fn orth_symbols(n: u32) -> Vec<OrthSymbol> {
        let pairs = ordered_pairs(n, |r, k| r.abs_diff(k) % 2 == 0);
        let set: BTreeSet<_> = pairs.into_iter().map(|(a, b)| OrthSymbol::new(a, b).unwrap()).collect();
        set.into_iter().collect()
    }

    pub fn odd_symbols(n: u32) -> Vec<OddSymbol> {
        let pairs = ordered_pairs(n, |r, k| r > k && (r - k) % 2 == 1);
        let set: BTreeSet<_> = pairs.into_iter().map(|(a, b)| OddSymbol::new(a, b).unwrap()).collect();
        set.into_iter().collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn split_names(n: u32, family: Family) -> Vec<String> {
        enumerate_symbols(n, family)
            .into_iter()
            .map(|s| match s {
                AnySymbol::Split(s) => s.to_string(),
                _ => unreachable!(),
            })
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(split_names(0, Family::S), ["[{}, {}]", "[{}, {}]'"]);
        assert_eq!(split_names(1, Family::S), ["[{}, {0,1}]", "[{0}, {1}]"]);
        assert_eq!(split_names(2, Family::G), ["[{1}, {1}]", "[{1}, {1}]'"]);
        assert_eq!(enumerate_symbols(1, Family::O).len(), 4);
        assert_eq!(enumerate_symbols(0, Family::O).len(), 1);
        assert_eq!(enumerate_symbols(0, Family::Odd).len(), 1);
        assert_eq!(enumerate_symbols(1, Family::Odd).len(), 2);
    }

    #[test]
    fn rank_and_family_of_generated_symbols() {
        for n in 0..=8 {
            for s in split_symbols(n).iter() {
                assert_eq!(s.rank(), n);
            }
            for x in orth_symbols(n).iter() {
                assert_eq!(x.rank(), n);
            }
            for u in odd_symbols(n).iter() {
                assert_eq!(u.rank(), n);
            }
            let plus = enumerate_symbols(n, Family::SPlus).len();
            let minus = enumerate_symbols(n, Family::SMinus).len();
            assert_eq!(plus + minus, split_symbols(n).len());
            let g = enumerate_symbols(n, Family::G).len();
            let r = enumerate_symbols(n, Family::R).len();
            assert_eq!(g + r, split_symbols(n).len());
            assert_eq!(orth_symbols(n).len(), 2 * r + g / 2);
        }
    }

    #[test]
    fn generator_matches_search_small() {
        for n in 0..=4 {
            assert_eq!(*split_symbols(n), search::split_symbols(n), "S rank {n}");
            assert_eq!(*orth_symbols(n), search::orth_symbols(n), "O rank {n}");
            assert_eq!(*odd_symbols(n), search::odd_symbols(n), "odd rank {n}");
        }
    }
}
