//! Connectivity, cut structure and the edge constructions built on it.

use crate::graph::{edge, Edge, Graph};
use crate::vertex_set::VertexSet;
use crate::GraphError;

/// Connected components of the subgraph induced on `within`, sorted by minimum element.
pub fn components_within(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in within {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(g.neighbors(v));
            }
            next = next.intersection(within).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Partition of `1..=n` into connected components, sorted by minimum element.
pub fn connected_components(g: &Graph) -> Vec<VertexSet> {
    components_within(g, g.vertices())
}

pub fn is_connected(g: &Graph) -> bool {
    connected_components(g).len() <= 1
}

/// Bridges: edges whose deletion increases the number of components.
pub fn cut_edges(g: &Graph) -> Vec<Edge> {
    let base = connected_components(g).len();
    g.edges()
        .into_iter()
        .filter(|&e| connected_components(&g.without_edge(e)).len() > base)
        .collect()
}

/// Articulation vertices: deleting the vertex increases the number of components.
pub fn cut_points(g: &Graph) -> VertexSet {
    let all = g.vertices();
    let base = connected_components(g).len();
    all.iter()
        .filter(|&v| components_within(g, all.without(v)).len() > base)
        .collect()
}

/// True when `v` is a cut point of the subgraph induced on `within` (which must contain `v`).
pub fn is_cut_point_within(g: &Graph, within: VertexSet, v: usize) -> bool {
    components_within(g, within.without(v)).len() > components_within(g, within).len()
}

/// Vertices whose neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    (1..=g.n())
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

/// Cut edges whose endpoints are both simplicial once the edge is removed.
pub fn free_cut_edges(g: &Graph) -> Vec<Edge> {
    cut_edges(g)
        .into_iter()
        .filter(|&(a, b)| {
            let h = g.without_edge((a, b));
            h.is_clique(h.neighbors(a)) && h.is_clique(h.neighbors(b))
        })
        .collect()
}

/// Removes every free cut edge of `g`, all at once. With no free cut edges this is `g`.
pub fn reduced_graph(g: &Graph) -> Graph {
    g.delete_edges(&free_cut_edges(g))
}

/// Repeats [`reduced_graph`] until no free cut edge is left. Not used by any check;
/// kept to probe whether a single pass can leave new free cut edges behind.
pub fn reduced_graph_fixpoint(g: &Graph) -> Graph {
    let mut cur = g.clone();
    loop {
        let f = free_cut_edges(&cur);
        if f.is_empty() {
            return cur;
        }
        cur = cur.delete_edges(&f);
    }
}

/// For a non-edge `{v, w}`: `g` plus a clique on `N(v)` and a clique on `N(w)`.
pub fn ge_closure(g: &Graph, v: usize, w: usize) -> Result<Graph, GraphError> {
    for u in [v, w] {
        if u == 0 || u > g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: u,
                n: g.n(),
            });
        }
    }
    if v == w || g.has_edge(v, w) {
        return Err(GraphError::IsAnEdge(edge(v, w)));
    }
    let mut h = g.clone();
    h.complete_on(g.neighbors(v));
    h.complete_on(g.neighbors(w));
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    fn two_triangles_bridged() -> Graph {
        Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)]).unwrap()
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&path(3)), vec![VertexSet::range(3)]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![
                VertexSet::singleton(1),
                VertexSet::singleton(2),
                VertexSet::singleton(3)
            ]
        );
        let tt = Graph::from_edges(6, &[(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]).unwrap();
        assert_eq!(
            connected_components(&tt),
            vec![VertexSet::interval(1, 3), VertexSet::interval(4, 6)]
        );
    }

    #[test]
    fn cuts() {
        assert_eq!(cut_edges(&path(5)).len(), 4);
        let c4 = cycle(4).unwrap();
        assert!(cut_edges(&c4).is_empty());
        assert!(cut_points(&c4).is_empty());
        let g = two_triangles_bridged();
        assert_eq!(cut_edges(&g), vec![(3, 4)]);
        assert_eq!(cut_points(&g).to_vec(), vec![3, 4]);
    }

    #[test]
    fn free_cut_edges_and_reduction() {
        let g = two_triangles_bridged();
        assert_eq!(free_cut_edges(&g), vec![(3, 4)]);
        assert_eq!(
            reduced_graph(&g).edges(),
            vec![(1, 2), (1, 3), (2, 3), (4, 5), (4, 6), (5, 6)]
        );
        assert!(free_cut_edges(&complete(3)).is_empty());
        assert_eq!(free_cut_edges(&path(3)), vec![(1, 2), (2, 3)]);
        assert_eq!(reduced_graph(&path(3)), Graph::empty(3));
        let c4 = cycle(4).unwrap();
        assert_eq!(reduced_graph(&c4), c4);
    }

    #[test]
    fn ge_closure_examples() {
        let p3 = path(3);
        assert_eq!(ge_closure(&p3, 1, 3).unwrap(), p3);
        let claw = Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap();
        assert_eq!(ge_closure(&claw, 2, 3).unwrap(), claw);
        let p4 = path(4);
        assert_eq!(ge_closure(&p4, 1, 4).unwrap(), p4);
        let closed = ge_closure(&p4, 2, 4).unwrap();
        assert_eq!(closed.edges(), vec![(1, 2), (1, 3), (2, 3), (3, 4)]);
        assert!(matches!(
            ge_closure(&p4, 1, 2),
            Err(GraphError::IsAnEdge((1, 2)))
        ));
    }

    #[test]
    fn simplicial() {
        assert_eq!(simplicial_vertices(&complete(4)), VertexSet::range(4));
        assert_eq!(simplicial_vertices(&path(4)).to_vec(), vec![1, 4]);
        assert!(simplicial_vertices(&cycle(4).unwrap()).is_empty());
    }
}
