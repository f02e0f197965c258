//! Character degree sums of finite orthogonal and symplectic groups via
//! Jordan decomposition, and the involution series they are compared with.

mod datum;
mod explicit;
mod fgs;
mod graded;
mod group;
mod identities;

pub use datum::{linear_p_prime, p_o, p_sp, type_sign, unitary_p_prime, EigenLabel, PolySlot, SemisimpleDatum};
pub use explicit::{
    inventory, sigma_o_explicit, sigma_so_explicit, sigma_sp_explicit, PolyInventory, EXPLICIT_MAX_RANK,
};
pub use fgs::{extract_count, fgs_involution_series, involution_count, j_count, InvolutionKind};
pub use graded::{
    centralizer_product, linear_factor, orthogonal_series, sigma_o, sigma_o_table, sigma_so, sigma_so_table, sigma_sp,
    sigma_sp_table, so_unipotent_factor, special_orthogonal_series, symplectic_series, unitary_factor, MAX_FIELD,
    MAX_RANK,
};
pub use group::{even_power_product, gl_order, group_order, o_p_prime, so_p_prime, GroupKind, GroupSpec};
pub use identities::{
    check_identity, default_config, identity_applies, identity_sides, verify_identity, IdentityCheck, IdentityConfig,
    IdentityReport, Mismatch, IDENTITY_NAMES,
};
