//! Graded free resolutions, Betti tables, regularity and projective dimension.

mod betti;
mod koszul;
mod schreyer;

pub use betti::BettiTable;
pub use koszul::{koszul_betti_oracle, MAX_KOSZUL_VARS};
pub use schreyer::{
    minimal_free_resolution, minimal_free_resolution_with_order, syzygies, GradedPresentation,
};

use crate::{AlgebraError, Ideal};

/// `reg(S/I)`; `None` for the unit ideal.
pub fn regularity_quotient(ideal: &Ideal) -> Result<Option<i64>, AlgebraError> {
    Ok(minimal_free_resolution(ideal)?.reg_quotient())
}

/// `reg(I) = reg(S/I) + 1`, with `reg((0)) = 0`.
pub fn regularity_ideal(ideal: &Ideal) -> Result<Option<i64>, AlgebraError> {
    Ok(minimal_free_resolution(ideal)?.reg_ideal())
}

pub fn proj_dim_quotient(ideal: &Ideal) -> Result<Option<usize>, AlgebraError> {
    Ok(minimal_free_resolution(ideal)?.pd_quotient())
}

pub fn proj_dim_ideal(ideal: &Ideal) -> Result<Option<usize>, AlgebraError> {
    Ok(minimal_free_resolution(ideal)?.pd_ideal())
}

/// `β_{i,j}(I) = β_{i+1,j}(S/I)` from the table of `S/I`.
pub fn betti_of_ideal(quotient_table: &BettiTable) -> BettiTable {
    quotient_table.ideal_view()
}
