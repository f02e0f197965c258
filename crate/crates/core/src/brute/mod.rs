//! Brute-force matrix groups over small fields, used as an independent
//! oracle for the involution counts.

mod build;
mod count;
mod forms;
mod matrix;

pub use build::{
    ambient_orthogonal, build_group, build_group_with, BuildStrategy, MatrixGroup, ENUMERATION_BOUND, MAX_BRUTE_ORDER,
};
pub use count::{
    check_strongly_sigma_real, coset_involutions, coset_representative, count_involutions, count_sigma_twisted,
    count_twisted_involutions_sp, so_membership, Coset, SigmaRealReport,
};
pub use forms::{FormSpace, QuadraticSpace, SymplecticSpace};
pub use matrix::{all_vectors, Mat, Vector, MAX_DIM};
