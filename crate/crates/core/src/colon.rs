//! `J_{G\e} : f_e` against the closure `(G\e)_e` and the path ideal `I_G`.

use bei_algebra::{regularity_ideal, Ideal, Monomial, Polynomial, Ring};
use bei_graph::{
    connected_components, edge, ge_closure, simple_paths, Edge, Graph, GraphError,
    DEFAULT_PATH_LIMIT,
};

use crate::error::precondition;
use crate::evidence::Evidence;
use crate::ideals::{binomial_edge_ideal_in, edge_binomial, graph_ring, vertex_variables};
use crate::CoreError;

/// Monomials `y_{i_1}..y_{i_t} x_{i_{t+1}}..x_{i_s}`, `0 <= t <= s`, over all
/// paths `i, i_1, .., i_s, j` of `G` with `s >= 1`, where `e = {i, j}`, `i < j`.
pub fn colon_path_ideal_in(ring: &Ring, g: &Graph, e: Edge) -> Result<Ideal, CoreError> {
    let (i, j) = edge(e.0, e.1);
    if !g.has_edge(i, j) {
        return Err(GraphError::NotAnEdge((i, j)).into());
    }
    let mut gens = Vec::new();
    for p in simple_paths(g, i, j, DEFAULT_PATH_LIMIT)? {
        let inner = &p[1..p.len() - 1];
        for t in 0..=inner.len() {
            let m = inner.iter().enumerate().fold(Monomial::ONE, |m, (k, &v)| {
                m.mul(Monomial::var(if k < t { ring.y(v) } else { ring.x(v) }))
            });
            if !inner.is_empty() {
                gens.push(Polynomial::monomial(ring, m, 1));
            }
        }
    }
    Ok(Ideal::new(ring, gens)?)
}

pub fn colon_path_ideal(g: &Graph, e: Edge, p: u32) -> Result<Ideal, CoreError> {
    colon_path_ideal_in(&graph_ring(g.n(), p)?, g, e)
}

/// Everything computed for one edge `e` of `G`.
#[derive(Clone, Debug)]
pub struct EdgeColon {
    pub edge: Edge,
    /// `J_{G\e} : f_e`, computed directly.
    pub quotient: Ideal,
    /// `(G\e)_e`.
    pub closure: Graph,
    pub closure_ideal: Ideal,
    pub path_ideal: Ideal,
    pub is_cut_edge: bool,
    pub evidence: Evidence,
}

/// Computes the colon ideal and compares it with `J_{(G\e)_e} + I_G`; for a
/// cut edge also with `J_{(G\e)_e}` alone.
pub fn colon_identity_check(g: &Graph, e: Edge, p: u32) -> Result<EdgeColon, CoreError> {
    let ring = graph_ring(g.n(), p)?;
    let (i, j) = edge(e.0, e.1);
    if !g.has_edge(i, j) {
        return Err(GraphError::NotAnEdge((i, j)).into());
    }
    let h = g.without_edge((i, j));
    let quotient = binomial_edge_ideal_in(&ring, &h)?.quotient(&edge_binomial(&ring, i, j)?)?;
    let closure = ge_closure(&h, i, j)?;
    let closure_ideal = binomial_edge_ideal_in(&ring, &closure)?;
    let path_ideal = colon_path_ideal_in(&ring, g, (i, j))?;
    let is_cut_edge = connected_components(&h).len() > connected_components(g).len();

    let mut evidence = Evidence::new();
    evidence.equal(
        "J_{G-e} : f_e = J_{(G-e)_e} + I_G",
        &quotient,
        &closure_ideal.sum(&path_ideal)?,
    )?;
    if is_cut_edge {
        evidence.equal("J_{G-e} : f_e = J_{(G-e)_e}", &quotient, &closure_ideal)?;
        evidence.contained("I_G inside J_{(G-e)_e}", &path_ideal, &closure_ideal)?;
    }
    Ok(EdgeColon {
        edge: (i, j),
        quotient,
        closure,
        closure_ideal,
        path_ideal,
        is_cut_edge,
        evidence,
    })
}

#[derive(Clone, Debug)]
pub struct SimplicialColon {
    pub colon: EdgeColon,
    pub reg: i64,
    pub evidence: Evidence,
}

/// For `v` simplicial of degree at least 2 and `e = {v, w}`: the path ideal is
/// `(x_u, y_u : u ∈ N(v) \ w)`, the colon ideal is those variables plus `J` of
/// the closure on the remaining vertices, and its regularity is at most `n - 2`.
pub fn simplicial_colon_check(
    g: &Graph,
    v: usize,
    e: Edge,
    p: u32,
) -> Result<SimplicialColon, CoreError> {
    if v == 0 || v > g.n() {
        return Err(GraphError::VertexOutOfRange {
            vertex: v,
            n: g.n(),
        }
        .into());
    }
    let nv = g.neighbors(v);
    if !g.is_clique(nv) || nv.len() < 2 {
        return Err(precondition(format!(
            "vertex {v} is not simplicial of degree >= 2"
        )));
    }
    let w = match e {
        (a, b) if a == v => b,
        (a, b) if b == v => a,
        _ => {
            return Err(precondition(format!(
                "{{{}, {}}} is not incident to {v}",
                e.0, e.1
            )))
        }
    };
    let colon = colon_identity_check(g, (v, w), p)?;
    let ring = colon.quotient.ring().clone();
    let others = nv.without(w);
    let vars = vertex_variables(&ring, others)?;
    let rest = g.vertices().difference(others.with(v));
    let expected = vars.sum(&binomial_edge_ideal_in(
        &ring,
        &colon.closure.restrict(rest),
    )?)?;

    let mut evidence = colon.evidence.clone();
    evidence.equal("I_G = (x_u, y_u : u in N(v) - w)", &colon.path_ideal, &vars)?;
    evidence.equal(
        "J_{G-e} : f_e = vars + J of the closure off N[v] - w",
        &colon.quotient,
        &expected,
    )?;
    let reg = regularity_ideal(&colon.quotient)?
        .ok_or_else(|| precondition("colon ideal is the unit ideal"))?;
    let bound = g.n() as i64 - 2;
    evidence.fact(
        "reg(J_{G-e} : f_e) <= n - 2",
        reg.to_string(),
        bound.to_string(),
        reg <= bound,
    );
    Ok(SimplicialColon {
        colon,
        reg,
        evidence,
    })
}
