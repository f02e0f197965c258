//! Finite fields `F_q`, polynomials over them, and the counts `N*`, `M*` of
//! self-dual irreducibles and dual pairs.

mod counts;
mod field;
mod poly;

pub use counts::{
    closed_form_m_star, closed_form_n_star, count_m_star, count_n_star, enumerate_irreducibles,
    enumerate_self_dual_counts, irreducible_count, poly_counts, PolyCounts, COUNT_ENUMERATION_THRESHOLD,
    ENUMERATION_LIMIT,
};
pub use field::{prime_power, Elem, FiniteField, MAX_Q};
pub use poly::Poly;
