//! Chordality via maximum cardinality search, and the block-graph classes.

use crate::cliques::maximal_cliques;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximum cardinality search; returns vertices in visit order. Ties go to the
/// smallest label.
pub fn maximum_cardinality_search(g: &Graph) -> Vec<usize> {
    let mut visited = VertexSet::EMPTY;
    let mut order = Vec::with_capacity(g.n());
    for _ in 0..g.n() {
        let v = g
            .vertices()
            .difference(visited)
            .iter()
            .max_by_key(|&u| {
                (
                    g.neighbors(u).intersection(visited).len(),
                    std::cmp::Reverse(u),
                )
            })
            .expect("unvisited vertex remains");
        visited.insert(v);
        order.push(v);
    }
    order
}

/// True when `order` is a perfect elimination ordering: the neighbours of each
/// vertex that come later in `order` form a clique.
pub fn is_perfect_elimination_order(g: &Graph, order: &[usize]) -> bool {
    let mut later = g.vertices();
    for &v in order {
        later.remove(v);
        if !g.is_clique(g.neighbors(v).intersection(later)) {
            return false;
        }
    }
    true
}

/// Chordality with a perfect elimination ordering as witness.
pub fn chordal_witness(g: &Graph) -> Option<Vec<usize>> {
    let mut order = maximum_cardinality_search(g);
    order.reverse();
    is_perfect_elimination_order(g, &order).then_some(order)
}

pub fn is_chordal(g: &Graph) -> bool {
    chordal_witness(g).is_some()
}

/// Chordal with any two maximal cliques sharing at most one vertex.
pub fn is_block_graph(g: &Graph) -> bool {
    if !is_chordal(g) {
        return false;
    }
    let facets = maximal_cliques(g);
    let f = facets.facets();
    (0..f.len()).all(|i| (i + 1..f.len()).all(|j| f[i].intersection(f[j]).len() <= 1))
}

/// Chordal, and any three maximal cliques with a common vertex meet pairwise in the same set.
pub fn is_generalized_block_graph(g: &Graph) -> bool {
    if !is_chordal(g) {
        return false;
    }
    let facets = maximal_cliques(g);
    let f = facets.facets();
    for i in 0..f.len() {
        for j in i + 1..f.len() {
            let ij = f[i].intersection(f[j]);
            if ij.is_empty() {
                continue;
            }
            for k in j + 1..f.len() {
                if ij.intersection(f[k]).is_empty() {
                    continue;
                }
                if f[i].intersection(f[k]) != ij || f[j].intersection(f[k]) != ij {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    #[test]
    fn chordality() {
        assert!(!is_chordal(&cycle(4).unwrap()));
        assert!(!is_chordal(&cycle(5).unwrap()));
        assert!(is_chordal(&path(5)));
        assert!(is_chordal(&complete(5)));
        let mut k4e = complete(4);
        k4e.remove_edge(1, 2);
        let peo = chordal_witness(&k4e).unwrap();
        assert!(is_perfect_elimination_order(&k4e, &peo));
        let star = Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (1, 5)]).unwrap();
        assert!(is_chordal(&star));
    }

    #[test]
    fn block_classes() {
        let diamond = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        assert!(is_generalized_block_graph(&diamond));
        assert!(!is_block_graph(&diamond));
        for t in [
            path(5),
            Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap(),
        ] {
            assert!(is_block_graph(&t));
            assert!(is_generalized_block_graph(&t));
        }
        let fan3 = Graph::from_edges(5, &[(1, 2), (1, 5), (2, 5), (2, 3), (3, 5), (3, 4), (4, 5)])
            .unwrap();
        assert!(is_chordal(&fan3));
        assert!(!is_generalized_block_graph(&fan3));
        assert!(!is_generalized_block_graph(&cycle(4).unwrap()));
    }
}
