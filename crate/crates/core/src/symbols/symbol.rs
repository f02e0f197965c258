use std::fmt;

use crate::error::{Error, Result};
use crate::Sign;

fn check_rows(a: &[u32], b: &[u32]) -> Result<()> {
    for row in [a, b] {
        if row.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSymbol(format!("row {row:?} is not strictly increasing")));
        }
    }
    if a.first() == Some(&0) && b.first() == Some(&0) {
        return Err(Error::InvalidSymbol(format!("[{a:?}, {b:?}] is not reduced")));
    }
    Ok(())
}

/// `sum of entries - floor(((r + k - 1) / 2)^2)`.
pub fn rank_of_rows(a: &[u32], b: &[u32]) -> u32 {
    let total: u32 = a.iter().chain(b).sum();
    let len = (a.len() + b.len()) as u32;
    let correction = if len == 0 { 0 } else { (len - 1) * (len - 1) / 4 };
    total - correction
}

/// Access to the two rows of any kind of symbol.
pub trait SymbolRows {
    fn row_a(&self) -> &[u32];
    fn row_b(&self) -> &[u32];

    fn rank(&self) -> u32 {
        rank_of_rows(self.row_a(), self.row_b())
    }

    /// `|r - k|`.
    fn defect(&self) -> u32 {
        self.row_a().len().abs_diff(self.row_b().len()) as u32
    }

    fn is_degenerate(&self) -> bool {
        self.row_a() == self.row_b()
    }

    /// `+` for defect `0 mod 4`, `-` for defect `2 mod 4`.
    fn defect_class(&self) -> Sign {
        Sign::from_parity(self.defect() % 4 == 2)
    }
}

fn write_row(f: &mut fmt::Formatter<'_>, row: &[u32]) -> fmt::Result {
    f.write_str("{")?;
    for (i, x) in row.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("}")
}

/// Reduced symbol of even defect, an unordered pair of rows. Stored with the
/// lexicographically smaller row first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Symbol {
    a: Vec<u32>,
    b: Vec<u32>,
    primed: bool,
}

impl Symbol {
    pub fn new(row1: Vec<u32>, row2: Vec<u32>, primed: bool) -> Result<Self> {
        check_rows(&row1, &row2)?;
        if (row1.len() + row2.len()) % 2 == 1 {
            return Err(Error::InvalidSymbol("odd defect".into()));
        }
        if primed && row1 != row2 {
            return Err(Error::InvalidSymbol("only degenerate symbols carry a prime".into()));
        }
        let (a, b) = if row1 <= row2 { (row1, row2) } else { (row2, row1) };
        Ok(Symbol { a, b, primed })
    }

    pub fn primed(&self) -> bool {
        self.primed
    }

    pub fn with_prime(&self, primed: bool) -> Self {
        assert!(!primed || self.is_degenerate());
        Symbol { primed, ..self.clone() }
    }
}

impl SymbolRows for Symbol {
    fn row_a(&self) -> &[u32] {
        &self.a
    }
    fn row_b(&self) -> &[u32] {
        &self.b
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        write_row(f, &self.a)?;
        f.write_str(", ")?;
        write_row(f, &self.b)?;
        f.write_str(if self.primed { "]'" } else { "]" })
    }
}

/// Reduced ordered pair of rows of even defect.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrthSymbol {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl OrthSymbol {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        check_rows(&a, &b)?;
        if (a.len() + b.len()) % 2 == 1 {
            return Err(Error::InvalidSymbol("odd defect".into()));
        }
        Ok(OrthSymbol { a, b })
    }

    /// The underlying unordered symbol (unprimed).
    pub fn unordered(&self) -> Symbol {
        Symbol::new(self.a.clone(), self.b.clone(), false).expect("rows already validated")
    }

    pub fn swapped(&self) -> OrthSymbol {
        OrthSymbol { a: self.b.clone(), b: self.a.clone() }
    }
}

impl SymbolRows for OrthSymbol {
    fn row_a(&self) -> &[u32] {
        &self.a
    }
    fn row_b(&self) -> &[u32] {
        &self.b
    }
}

impl fmt::Display for OrthSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_row(f, &self.a)?;
        f.write_str(", ")?;
        write_row(f, &self.b)?;
        f.write_str(")")
    }
}

/// Reduced symbol of odd positive defect; the first row is the longer one.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OddSymbol {
    a: Vec<u32>,
    b: Vec<u32>,
}

impl OddSymbol {
    pub fn new(a: Vec<u32>, b: Vec<u32>) -> Result<Self> {
        check_rows(&a, &b)?;
        if a.len() <= b.len() || (a.len() - b.len()).is_multiple_of(2) {
            return Err(Error::InvalidSymbol("defect must be odd and positive".into()));
        }
        Ok(OddSymbol { a, b })
    }
}

impl SymbolRows for OddSymbol {
    fn row_a(&self) -> &[u32] {
        &self.a
    }
    fn row_b(&self) -> &[u32] {
        &self.b
    }
}

impl fmt::Display for OddSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_row(f, &self.a)?;
        f.write_str(", ")?;
        write_row(f, &self.b)?;
        f.write_str(")")
    }
}
