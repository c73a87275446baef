//! Graph-theoretic structure for binomial edge ideal experiments.
//!
//! Graphs are small (at most 64 vertices, in practice at most 7 for the
//! exhaustive searches), simple and undirected, on the vertex labels `1..=n`.
//! Every routine is deterministic: ties are broken by the smallest label.

mod canon;
mod chordal;
mod cliques;
mod closed;
mod collection;
mod graph;
mod graph6;
mod paths;
mod structure;
mod vertex_set;

pub use canon::{
    are_isomorphic, canonical_form, canonical_graph, enumerate_graphs, CanonicalForm,
    MAX_CANONICAL_N, MAX_ENUMERATE_N,
};
pub use chordal::{
    chordal_witness, is_block_graph, is_chordal, is_generalized_block_graph,
    is_perfect_elimination_order, maximum_cardinality_search,
};
pub use cliques::{
    branches, clique_count, free_vertices, leaf_order, maximal_cliques, CliqueComplex, LeafOrder,
};
pub use closed::{closed_labeling, is_closed, DEFAULT_CLOSED_LIMIT};
pub use collection::{join_all, SetCollection};
pub use graph::{complete, complete_multipartite, cycle, edge, fan, multifan, path, Edge, Graph};
pub use graph6::{
    from_edge_list, from_graph6, read_graph6_lines, to_edge_list, to_graph6, GRAPH6_HEADER,
};
pub use paths::{longest_induced_path_length, simple_paths, DEFAULT_PATH_LIMIT};
pub use structure::{
    components_within, connected_components, cut_edges, cut_points, free_cut_edges, ge_closure,
    is_connected, is_cut_point_within, reduced_graph, reduced_graph_fixpoint, simplicial_vertices,
};
pub use vertex_set::{VertexSet, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("vertex {vertex} is not in 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("{0} vertices exceed the supported maximum")]
    TooManyVertices(usize),
    #[error("{{{}, {}}} is already an edge", .0.0, .0.1)]
    IsAnEdge(Edge),
    #[error("{{{}, {}}} is not an edge", .0.0, .0.1)]
    NotAnEdge(Edge),
    #[error("undecided at configured bound: {what} limited to n <= {limit}, got n = {n}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}
