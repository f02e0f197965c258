use num_bigint::BigInt;
use num_traits::{One, Pow};

use super::group::{big, even_power_product, so_p_prime};
use crate::symbols::{OddSymbol, OrthSymbol, Partition, Symbol, SymbolRows};
use crate::Sign;

/// Unipotent label attached to an eigenvalue `±1` slot.
pub trait EigenLabel {
    fn label_rank(&self) -> u32;
    /// Sign read off the defect class; `+` for labels without one.
    fn eta(&self) -> Sign;
}

impl EigenLabel for OrthSymbol {
    fn label_rank(&self) -> u32 {
        self.rank()
    }
    fn eta(&self) -> Sign {
        self.defect_class()
    }
}

impl EigenLabel for Symbol {
    fn label_rank(&self) -> u32 {
        self.rank()
    }
    fn eta(&self) -> Sign {
        self.defect_class()
    }
}

impl EigenLabel for OddSymbol {
    fn label_rank(&self) -> u32 {
        self.rank()
    }
    fn eta(&self) -> Sign {
        Sign::Plus
    }
}

/// A self-dual irreducible `f` (degree `deg f`, even) or a dual pair
/// `{g, g*}` (degree `deg g`) with its partition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySlot {
    pub degree: u32,
    pub partition: Partition,
}

impl PolySlot {
    pub fn multiplicity(&self) -> u32 {
        self.partition.size()
    }
}

/// Semisimple class data together with unipotent labels. `plus` is the slot
/// of `t + 1`, `minus` that of `t - 1`; a slot that does not exist for the
/// given `q` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleDatum<P, M = P> {
    pub self_dual: Vec<PolySlot>,
    pub pairs: Vec<PolySlot>,
    pub plus: Option<P>,
    pub minus: Option<M>,
}

impl<P: EigenLabel, M: EigenLabel> SemisimpleDatum<P, M> {
    pub fn m_plus(&self) -> u32 {
        self.plus.as_ref().map_or(0, EigenLabel::label_rank)
    }

    pub fn m_minus(&self) -> u32 {
        self.minus.as_ref().map_or(0, EigenLabel::label_rank)
    }

    pub fn eta_plus(&self) -> Sign {
        self.plus.as_ref().map_or(Sign::Plus, EigenLabel::eta)
    }

    pub fn eta_minus(&self) -> Sign {
        self.minus.as_ref().map_or(Sign::Plus, EigenLabel::eta)
    }

    /// `sum m_f deg(f)/2 + sum m_g deg(g) + m_+ + m_-`.
    pub fn weight(&self) -> u32 {
        let sd: u32 = self.self_dual.iter().map(|s| s.multiplicity() * s.degree / 2).sum();
        let pr: u32 = self.pairs.iter().map(|s| s.multiplicity() * s.degree).sum();
        sd + pr + self.m_plus() + self.m_minus()
    }

    fn self_dual_parity(&self) -> Sign {
        let total: u32 = self.self_dual.iter().map(PolySlot::multiplicity).sum();
        Sign::from_parity(total % 2 == 1)
    }

    /// Product of the unitary and linear centralizer factors.
    pub fn torus_part(&self, q: u32) -> BigInt {
        let u = self.self_dual.iter().map(|s| unitary_p_prime(s.multiplicity(), s.degree, q));
        let l = self.pairs.iter().map(|s| linear_p_prime(s.multiplicity(), s.degree, q));
        u.chain(l).fold(BigInt::one(), |acc, x| acc * x)
    }
}

/// `prod_{i=1}^{m} (Q^i - (-1)^i)` with `Q = q^(degree/2)`.
pub fn unitary_p_prime(m: u32, degree: u32, q: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        acc * (Pow::pow(&big(q), i * degree / 2) - sign)
    })
}

/// `prod_{i=1}^{m} (Q^i - 1)` with `Q = q^degree`.
pub fn linear_p_prime(m: u32, degree: u32, q: u32) -> BigInt {
    (1..=m).fold(BigInt::one(), |acc, i| acc * (Pow::pow(&big(q), i * degree) - 1))
}

/// `tau = eta(+) eta(-) (-1)^{sum m_f}`.
pub fn type_sign<P: EigenLabel, M: EigenLabel>(datum: &SemisimpleDatum<P, M>) -> Sign {
    datum.eta_plus() * datum.eta_minus() * datum.self_dual_parity()
}

/// Prime-to-p centralizer factor for the orthogonal groups.
pub fn p_o<P: EigenLabel, M: EigenLabel>(datum: &SemisimpleDatum<P, M>, q: u32) -> BigInt {
    datum.torus_part(q)
        * so_p_prime(datum.m_plus(), q, datum.eta_plus())
        * so_p_prime(datum.m_minus(), q, datum.eta_minus())
}

/// Prime-to-p centralizer factor for the symplectic group: orthogonal tail at
/// `t + 1`, type-B tail `prod_{i <= m_-} (q^{2i} - 1)` at `t - 1`.
pub fn p_sp<P: EigenLabel, M: EigenLabel>(datum: &SemisimpleDatum<P, M>, q: u32) -> BigInt {
    datum.torus_part(q) * so_p_prime(datum.m_plus(), q, datum.eta_plus()) * even_power_product(q, 1, datum.m_minus())
}
