//! Partitions, Lusztig symbols and their modified unipotent degrees.

mod delta;
mod enumerate;
mod genfun;
mod partition;
mod symbol;

pub use delta::{c_value, delta_gl, delta_odd, delta_orth, delta_symbol, delta_u};
pub use enumerate::{
    enumerate_symbols, in_orth_family, in_split_family, odd_symbols, orth_symbols, search, split_symbols, AnySymbol,
    Family,
};
pub use genfun::{
    odd_ratio_factors, orth_unipotent_graded, pair_factors, series_g_product, series_g_sum, series_r_product,
    series_r_sum, series_t_product, series_t_sum, series_w_product, series_w_sum, split_delta_graded,
};
pub use partition::{partitions, Partition};
pub use symbol::{rank_of_rows, OddSymbol, OrthSymbol, Symbol, SymbolRows};
