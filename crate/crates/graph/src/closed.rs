use crate::cliques::maximal_cliques;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::GraphError;

/// Default vertex bound for the exhaustive closedness search.
pub const DEFAULT_CLOSED_LIMIT: usize = 10;

/// Searches for a relabeling under which every maximal clique is an interval.
///
/// Returns `Ok(Some(perm))` with `perm[v - 1]` the new label of `v`, `Ok(None)` when
/// no such labeling exists, and an error when `n` exceeds `limit`.
pub fn closed_labeling(g: &Graph, limit: usize) -> Result<Option<Vec<usize>>, GraphError> {
    if g.n() > limit {
        return Err(GraphError::LimitExceeded {
            what: "closedness search",
            n: g.n(),
            limit,
        });
    }
    let facets: Vec<VertexSet> = maximal_cliques(g).facets().to_vec();
    let mut order = Vec::with_capacity(g.n());
    if place(g, &facets, VertexSet::EMPTY, &mut order) {
        let mut perm = vec![0; g.n()];
        for (pos, &v) in order.iter().enumerate() {
            perm[v - 1] = pos + 1;
        }
        Ok(Some(perm))
    } else {
        Ok(None)
    }
}

pub fn is_closed(g: &Graph, limit: usize) -> Result<bool, GraphError> {
    closed_labeling(g, limit).map(|w| w.is_some())
}

// Vertices are placed at positions 1, 2, ... in turn. A facet that has been entered
// but not finished must receive the next vertex, otherwise it cannot be an interval.
fn place(g: &Graph, facets: &[VertexSet], placed: VertexSet, order: &mut Vec<usize>) -> bool {
    if placed.len() == g.n() {
        return true;
    }
    let open: Vec<VertexSet> = facets
        .iter()
        .copied()
        .filter(|f| !f.is_disjoint(placed) && !f.is_subset(placed))
        .collect();
    let mut candidates = g.vertices().difference(placed);
    for f in &open {
        candidates = candidates.intersection(*f);
    }
    for v in candidates {
        order.push(v);
        if place(g, facets, placed.with(v), order) {
            return true;
        }
        order.pop();
    }
    false
}
