//! Exact commutative algebra over GF(p) for small polynomial rings: packed
//! monomials, Groebner bases, ideal operations and graded free resolutions.
//!
//! Rings have at most 16 variables. All results are deterministic; work
//! limits come from the ring's [`Budget`] and are reported as errors.

mod field;
mod groebner;
mod ideal;
mod linalg;
mod monomial;
mod order;
mod poly;
pub mod resolution;
mod ring;
mod text;

pub use field::{Field, DEFAULT_PRIME};
pub use groebner::{groebner_basis, is_groebner_basis, s_polynomial};
pub use ideal::{Ideal, MAX_DIM_VARS};
pub use linalg::{rank, rank_sparse};
pub use monomial::{lane_mask, Monomial, MAX_EXPONENT, MAX_VARS};
pub use order::MonomialOrder;
pub use poly::{Polynomial, Term};
pub use resolution::{
    betti_of_ideal, koszul_betti_oracle, minimal_free_resolution,
    minimal_free_resolution_with_order, proj_dim_ideal, proj_dim_quotient, regularity_ideal,
    regularity_quotient, syzygies, BettiTable, GradedPresentation,
};
pub use ring::{Budget, Ring, RingKind};
pub use text::{format_list, parse_list};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("{0} is not an odd prime below 2^31")]
    InvalidPrime(u64),
    #[error("{nvars} variables exceed the supported maximum of {max}")]
    TooManyVariables { nvars: usize, max: usize },
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("resource budget exceeded: {what} limited to {limit}")]
    Budget { what: &'static str, limit: usize },
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

impl AlgebraError {
    /// Budget and size-limit errors, as opposed to bad input or bugs.
    pub fn is_resource(&self) -> bool {
        matches!(
            self,
            AlgebraError::Budget { .. } | AlgebraError::TooManyVariables { .. }
        )
    }
}
