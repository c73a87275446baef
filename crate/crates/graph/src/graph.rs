use std::fmt;

use crate::vertex_set::{VertexSet, MAX_VERTICES};
use crate::GraphError;

/// An undirected edge `{i, j}` stored as `(min, max)`.
pub type Edge = (usize, usize);

/// Canonical `(min, max)` form of an edge.
pub fn edge(i: usize, j: usize) -> Edge {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

/// A finite simple graph on the vertices `1..=n`.
///
/// Adjacency is kept as one [`VertexSet`] per vertex, so edge iteration is
/// deterministic: pairs `(i, j)` with `i < j`, ordered by `i` then `j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        assert!(
            n <= MAX_VERTICES,
            "at most {MAX_VERTICES} vertices supported"
        );
        Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        }
    }

    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut g = Graph::empty(n);
        for &(i, j) in edges {
            g.add_edge(i, j)?;
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::range(self.n)
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        } else {
            Ok(())
        }
    }

    /// Adds `{i, j}`; adding an existing edge is a no-op.
    pub fn add_edge(&mut self, i: usize, j: usize) -> Result<(), GraphError> {
        self.check_vertex(i)?;
        self.check_vertex(j)?;
        if i == j {
            return Err(GraphError::Loop(i));
        }
        self.adj[i - 1].insert(j);
        self.adj[j - 1].insert(i);
        Ok(())
    }

    pub fn remove_edge(&mut self, i: usize, j: usize) {
        if (1..=self.n).contains(&i) && (1..=self.n).contains(&j) {
            self.adj[i - 1].remove(j);
            self.adj[j - 1].remove(i);
        }
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        (1..=self.n).contains(&i) && self.adj[i - 1].contains(j)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.edge_count());
        for i in 1..=self.n {
            for j in self.adj[i - 1].iter().filter(|&j| j > i) {
                out.push((i, j));
            }
        }
        out
    }

    /// True when `set` induces a complete subgraph.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(self.adj[v - 1]))
    }

    pub fn is_complete(&self) -> bool {
        self.is_clique(self.vertices())
    }

    /// Makes `set` a clique.
    pub fn complete_on(&mut self, set: VertexSet) {
        for v in set {
            self.adj[v - 1] = self.adj[v - 1].union(set.without(v));
        }
    }

    /// Induced subgraph on `keep`, relabeled `1..=|keep|` in increasing order.
    /// The returned map sends new labels (index `k` holds label `k + 1`) to old ones.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::empty(old.len());
        for (a, &u) in old.iter().enumerate() {
            for (b, &w) in old.iter().enumerate().skip(a + 1) {
                if self.has_edge(u, w) {
                    g.adj[a].insert(b + 1);
                    g.adj[b].insert(a + 1);
                }
            }
        }
        (g, old)
    }

    /// Same vertex set, keeping only the edges with both ends in `keep`.
    pub fn restrict(&self, keep: VertexSet) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in keep {
            g.adj[v - 1] = self.adj[v - 1].intersection(keep);
        }
        g
    }

    pub fn delete_edges(&self, edges: &[Edge]) -> Graph {
        let mut g = self.clone();
        for &(i, j) in edges {
            g.remove_edge(i, j);
        }
        g
    }

    pub fn without_edge(&self, e: Edge) -> Graph {
        self.delete_edges(&[e])
    }

    /// Vertex-disjoint union; `other` is shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n1 = self.n;
        let mut g = Graph::empty(n1 + other.n);
        g.adj[..n1].copy_from_slice(&self.adj);
        for v in 1..=other.n {
            g.adj[n1 + v - 1] = other.adj[v - 1].shifted(n1);
        }
        g
    }

    /// The join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        let n1 = self.n;
        let left = VertexSet::range(n1);
        let right = VertexSet::interval(n1 + 1, n1 + other.n);
        for v in left {
            g.adj[v - 1] = g.adj[v - 1].union(right);
        }
        for v in right {
            g.adj[v - 1] = g.adj[v - 1].union(left);
        }
        g
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (1..=self.n)
                .map(|v| all.difference(self.adj[v - 1]).without(v))
                .collect(),
        }
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v - 1]` (a permutation of `1..=n`).
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (i, j) in self.edges() {
            let (a, b) = (perm[i - 1], perm[j - 1]);
            g.adj[a - 1].insert(b);
            g.adj[b - 1].insert(a);
        }
        g
    }

    pub fn isolated_vertices(&self) -> VertexSet {
        (1..=self.n)
            .filter(|&v| self.adj[v - 1].is_empty())
            .collect()
    }

    pub fn is_forest(&self) -> bool {
        self.edge_count() + crate::connected_components(self).len() == self.n
    }

    /// `P_n` with its natural labeling, up to isomorphism: connected, `n - 1` edges,
    /// maximum degree at most 2.
    pub fn is_path(&self) -> bool {
        self.n >= 1
            && self.edge_count() + 1 == self.n
            && crate::is_connected(self)
            && (1..=self.n).all(|v| self.degree(v) <= 2)
    }

    /// `C_n` for `n >= 3`: connected and 2-regular.
    pub fn is_cycle(&self) -> bool {
        self.n >= 3 && crate::is_connected(self) && (1..=self.n).all(|v| self.degree(v) == 2)
    }

    /// The part sizes when the graph is complete multipartite (independent parts,
    /// all cross edges present), sorted ascending. `K_n` reports `n` parts of size 1.
    pub fn multipartite_parts(&self) -> Option<Vec<usize>> {
        if self.n == 0 {
            return None;
        }
        // non-adjacency must be an equivalence relation
        let comp = self.complement();
        let parts = crate::connected_components(&comp);
        for p in &parts {
            if !comp.is_clique(*p) {
                return None;
            }
        }
        let mut sizes: Vec<usize> = parts.iter().map(|p| p.len()).collect();
        sizes.sort_unstable();
        Some(sizes)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges())
    }
}

/// `P_n`: edges `{i, i+1}`.
pub fn path(n: usize) -> Graph {
    let edges: Vec<Edge> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).expect("path edges are valid")
}

/// `C_n`: the path plus `{1, n}`; requires `n >= 3`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(GraphError::InvalidArgument(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let mut g = path(n);
    g.add_edge(1, n)?;
    Ok(g)
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    g.complete_on(VertexSet::range(n));
    g
}

/// Complete multipartite graph; parts are consecutive label blocks in the given order.
pub fn complete_multipartite(sizes: &[usize]) -> Result<Graph, GraphError> {
    if sizes.contains(&0) {
        return Err(GraphError::InvalidArgument("empty part".into()));
    }
    sizes
        .iter()
        .map(|&s| Graph::empty(s))
        .reduce(|acc, g| acc.join(&g))
        .ok_or_else(|| GraphError::InvalidArgument("no parts".into()))
}

/// `K_1 * (P_{n_1} ⊔ ... ⊔ P_{n_t})`; the apex is vertex 1, the paths follow in order.
pub fn multifan(path_sizes: &[usize]) -> Result<Graph, GraphError> {
    if path_sizes.is_empty() || path_sizes.contains(&0) {
        return Err(GraphError::InvalidArgument(
            "multifan needs nonempty paths".into(),
        ));
    }
    let paths = path_sizes
        .iter()
        .map(|&s| path(s))
        .reduce(|acc, g| acc.disjoint_union(&g))
        .expect("nonempty");
    Ok(Graph::empty(1).join(&paths))
}

pub fn fan(n: usize) -> Result<Graph, GraphError> {
    multifan(&[n])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_label_deterministically() {
        assert_eq!(path(3).edges(), vec![(1, 2), (2, 3)]);
        assert_eq!(
            cycle(4).unwrap().edges(),
            vec![(1, 2), (1, 4), (2, 3), (3, 4)]
        );
        assert_eq!(complete(3).edge_count(), 3);
        let k22 = complete_multipartite(&[2, 2]).unwrap();
        assert_eq!(k22.edges(), vec![(1, 3), (1, 4), (2, 3), (2, 4)]);
        let f = multifan(&[3]).unwrap();
        assert_eq!(f.n(), 4);
        assert_eq!(f.edges(), vec![(1, 2), (1, 3), (1, 4), (2, 3), (3, 4)]);
        assert!(cycle(2).is_err());
        assert!(complete_multipartite(&[2, 0]).is_err());
    }

    #[test]
    fn rejects_loops_and_bad_vertices() {
        assert!(matches!(
            Graph::from_edges(3, &[(1, 1)]),
            Err(GraphError::Loop(1))
        ));
        assert!(Graph::from_edges(3, &[(1, 4)]).is_err());
        assert!(Graph::from_edges(3, &[(0, 1)]).is_err());
    }

    #[test]
    fn joins_and_unions() {
        let k1 = Graph::empty(1);
        assert_eq!(k1.join(&k1), complete(2));
        let two = Graph::empty(2);
        assert_eq!(two.join(&two), complete_multipartite(&[2, 2]).unwrap());
        let u = path(2).disjoint_union(&path(2));
        assert_eq!(u.edges(), vec![(1, 2), (3, 4)]);
    }

    #[test]
    fn induced_subgraph_of_complete_is_complete() {
        let (h, map) = complete(4).induced_subgraph([1, 2, 3].into_iter().collect());
        assert_eq!(h, complete(3));
        assert_eq!(map, vec![1, 2, 3]);
        let (h, map) = path(4).induced_subgraph([1, 3, 4].into_iter().collect());
        assert_eq!(h.edges(), vec![(2, 3)]);
        assert_eq!(map, vec![1, 3, 4]);
    }

    #[test]
    fn shape_predicates() {
        assert!(path(1).is_path());
        assert!(path(4).is_path());
        assert!(!cycle(4).unwrap().is_path());
        assert!(cycle(5).unwrap().is_cycle());
        assert!(path(4).is_forest());
        assert!(!complete(3).is_forest());
        assert_eq!(complete(3).multipartite_parts(), Some(vec![1, 1, 1]));
        assert_eq!(
            complete_multipartite(&[3, 1, 2])
                .unwrap()
                .multipartite_parts(),
            Some(vec![1, 2, 3])
        );
        assert_eq!(path(4).multipartite_parts(), None);
        // a relabeled path is still a path
        assert!(path(4).relabel(&[3, 1, 4, 2]).is_path());
    }
}
