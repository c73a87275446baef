use bei_algebra::{Ideal, Monomial, MonomialOrder, Polynomial, Ring};
use bei_graph::{Graph, GraphError, VertexSet};

use crate::CoreError;

/// `K[x_1..x_n, y_1..y_n]` over GF(p).
pub fn graph_ring(n: usize, p: u32) -> Result<Ring, CoreError> {
    Ok(Ring::binomial(n, p)?)
}

fn check_vertex(ring: &Ring, v: usize) -> Result<usize, CoreError> {
    let n = ring
        .vertex_count()
        .ok_or_else(|| crate::error::precondition("not a binomial ring"))?;
    if v == 0 || v > n {
        return Err(GraphError::VertexOutOfRange { vertex: v, n }.into());
    }
    Ok(n)
}

/// `f_ij = x_i y_j - x_j y_i`. Swapping `i` and `j` negates it.
pub fn edge_binomial(ring: &Ring, i: usize, j: usize) -> Result<Polynomial, CoreError> {
    check_vertex(ring, i)?;
    check_vertex(ring, j)?;
    let xy = Monomial::var(ring.x(i)).mul(Monomial::var(ring.y(j)));
    let yx = Monomial::var(ring.x(j)).mul(Monomial::var(ring.y(i)));
    Ok(&Polynomial::monomial(ring, xy, 1) - &Polynomial::monomial(ring, yx, 1))
}

/// `J_G` inside `ring`, which must have at least `n` vertices.
pub fn binomial_edge_ideal_in(ring: &Ring, g: &Graph) -> Result<Ideal, CoreError> {
    let n = ring
        .vertex_count()
        .ok_or_else(|| crate::error::precondition("not a binomial ring"))?;
    if g.n() > n {
        return Err(crate::error::precondition(format!(
            "graph on {} vertices in a ring for {n}",
            g.n()
        )));
    }
    let gens = g
        .edges()
        .into_iter()
        .map(|(i, j)| edge_binomial(ring, i, j))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(ring, gens)?)
}

/// `J_G` over GF(p); the edgeless graph gives the zero ideal.
pub fn binomial_edge_ideal(g: &Graph, p: u32) -> Result<Ideal, CoreError> {
    binomial_edge_ideal_in(&graph_ring(g.n(), p)?, g)
}

/// `(x_i, y_i : i ∈ set)`.
pub fn vertex_variables(ring: &Ring, set: VertexSet) -> Result<Ideal, CoreError> {
    let mut slots = Vec::new();
    for v in set {
        check_vertex(ring, v)?;
        slots.extend([ring.x(v), ring.y(v)]);
    }
    Ok(Ideal::variables(ring, slots))
}

/// `J` of the complete graph on `set`.
pub fn complete_ideal_on(ring: &Ring, set: VertexSet) -> Result<Ideal, CoreError> {
    let vs = set.to_vec();
    let mut gens = Vec::new();
    for (a, &i) in vs.iter().enumerate() {
        for &j in &vs[a + 1..] {
            gens.push(edge_binomial(ring, i, j)?);
        }
    }
    Ok(Ideal::new(ring, gens)?)
}

/// `J_{G1,G2}`: the 2-minors `x_{it} x_{jl} - x_{il} x_{jt}` of a generic
/// `n1 x n2` matrix for `{i,j} ∈ E(G1)`, `{t,l} ∈ E(G2)`, `i < j`, `t < l`.
pub fn pair_ideal(g1: &Graph, g2: &Graph, p: u32) -> Result<Ideal, CoreError> {
    let ring = Ring::pair(g1.n(), g2.n(), p)?;
    let var = |i: usize, t: usize| Monomial::var(ring.matrix_var(i, t));
    let mut gens = Vec::new();
    for (i, j) in g1.edges() {
        for (t, l) in g2.edges() {
            let a = Polynomial::monomial(&ring, var(i, t).mul(var(j, l)), 1);
            let b = Polynomial::monomial(&ring, var(i, l).mul(var(j, t)), 1);
            gens.push(&a - &b);
        }
    }
    Ok(Ideal::new(&ring, gens)?)
}

/// Reads an ideal of the `2 x n` pair ring in `K[x_1..x_n, y_1..y_n]`, with
/// the first row as the `x` and the second as the `y` variables.
pub fn pair_to_binomial(ideal: &Ideal) -> Result<Ideal, CoreError> {
    let ring = ideal.ring();
    let bei_algebra::RingKind::Pair { m: 2, n } = ring.kind() else {
        return Err(crate::error::precondition(
            "expected the ring of a 2 x n matrix",
        ));
    };
    let target = Ring::binomial(n, ring.characteristic())?;
    // x_{1j} and x_{2j} sit in slots j-1 and n+j-1, exactly where x_j and y_j do
    let gens = ideal
        .generators()
        .iter()
        .map(|g| Polynomial::from_terms(&target, MonomialOrder::DegRevLex, g.terms().to_vec()));
    Ok(Ideal::new(&target, gens)?)
}
