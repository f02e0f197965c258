//! Exact character-degree sums, unipotent degree generating functions and
//! brute-force involution counts for finite orthogonal, special orthogonal
//! and symplectic groups.

pub mod brute;
pub mod degree_sums;
pub mod error;
pub mod ffpoly;
pub mod series;
pub mod symbols;

pub use error::{Error, Result};

use std::fmt;
use std::ops::Mul;

/// Type of an even-dimensional orthogonal group, or a sign in the grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_parity(odd: bool) -> Sign {
        if odd {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn both() -> [Sign; 2] {
        [Sign::Plus, Sign::Minus]
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_parity(self != rhs)
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Number of `±1` eigenvalue slots: 2 for odd `q`, 1 for even `q`.
pub fn e_of_q(q: u32) -> u32 {
    if q % 2 == 1 {
        2
    } else {
        1
    }
}
