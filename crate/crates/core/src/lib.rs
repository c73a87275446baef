//! Binomial edge ideals `J_G = (x_i y_j - x_j y_i : {i,j} ∈ E(G))` over GF(p):
//! constructors, minimal primes and cut sets, colon ideals by an edge, the
//! decompositions behind the regularity bounds, and a census that checks
//! regularity and Betti-number statements over small graphs.

pub mod census;
mod colon;
mod decompose;
mod error;
mod evidence;
mod ideals;
mod invariants;
mod primes;

pub use colon::{
    colon_identity_check, colon_path_ideal, simplicial_colon_check, EdgeColon, SimplicialColon,
};
pub use decompose::{
    generalized_block_decomposition_check, join_cutsets, join_cutsets_check,
    join_decomposition_check, merge_leaf_cliques, BlockSplit,
};
pub use error::CoreError;
pub use evidence::{Evidence, IdealComparison};
pub use ideals::{
    binomial_edge_ideal, binomial_edge_ideal_in, complete_ideal_on, edge_binomial, graph_ring,
    pair_ideal, pair_to_binomial, vertex_variables,
};
pub use invariants::Engine;
pub use primes::{
    component_ideal, cut_sets, dim_formula, dim_formula_check, height_formula_check,
    minimal_primes, minimal_primes_identity_check, prime_component, CutSetFamily, PrimeComponent,
    MAX_CUT_SET_N,
};
