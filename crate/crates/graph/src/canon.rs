//! Brute-force canonical labeling and isomorphism-class enumeration for small graphs.

use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::GraphError;

/// Largest order accepted by [`canonical_form`].
pub const MAX_CANONICAL_N: usize = 11;
/// Largest order accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATE_N: usize = 7;

/// The lexicographically smallest upper-triangle adjacency bitstring over all
/// relabelings, read in graph6 order (`(1,2), (1,3), (2,3), (1,4), ...`).
/// The first bit is the most significant bit of `bits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

impl CanonicalForm {
    /// Rebuilds the canonically labeled graph.
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let total = n * n.saturating_sub(1) / 2;
        let mut g = Graph::empty(n);
        let mut k = 0;
        for j in 2..=n {
            for i in 1..j {
                if self.bits >> (total - 1 - k) & 1 == 1 {
                    g.add_edge(i, j).expect("valid pair");
                }
                k += 1;
            }
        }
        g
    }
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    order: Vec<usize>,
    best: Option<(u64, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, placed: VertexSet, prefix: u64) {
        let k = self.order.len();
        if k == self.n {
            if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        for v in self.g.vertices().difference(placed) {
            // bits of column k + 1: adjacency of v to the vertices at positions 0..k
            let mut p = prefix;
            for &u in &self.order {
                p = (p << 1) | self.g.has_edge(u, v) as u64;
            }
            if let Some((best, _)) = &self.best {
                let done = (k + 1) * k / 2;
                let total = self.n * (self.n - 1) / 2;
                let best_prefix = best >> (total - done);
                if p > best_prefix {
                    continue;
                }
            }
            self.order.push(v);
            self.run(placed.with(v), p);
            self.order.pop();
        }
    }
}

/// Canonical form plus a canonical relabeling (`perm[v - 1]` is the new label of `v`).
pub fn canonical_form(g: &Graph) -> Result<(CanonicalForm, Vec<usize>), GraphError> {
    let n = g.n();
    if n > MAX_CANONICAL_N {
        return Err(GraphError::LimitExceeded {
            what: "canonical labeling",
            n,
            limit: MAX_CANONICAL_N,
        });
    }
    let mut s = Search {
        g,
        n,
        order: Vec::with_capacity(n),
        best: None,
    };
    s.run(VertexSet::EMPTY, 0);
    let (bits, order) = s.best.unwrap_or((0, vec![]));
    let mut perm = vec![0; n];
    for (pos, &v) in order.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    Ok((CanonicalForm { n: n as u8, bits }, perm))
}

pub fn canonical_graph(g: &Graph) -> Result<Graph, GraphError> {
    Ok(canonical_form(g)?.0.to_graph())
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool, GraphError> {
    Ok(a.n() == b.n()
        && a.edge_count() == b.edge_count()
        && canonical_form(a)?.0 == canonical_form(b)?.0)
}

/// One canonically labeled representative per isomorphism class on `n` vertices,
/// ordered by edge count and then by canonical bitstring.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > MAX_ENUMERATE_N {
        return Err(GraphError::LimitExceeded {
            what: "graph enumeration",
            n,
            limit: MAX_ENUMERATE_N,
        });
    }
    let mut classes: Vec<CanonicalForm> = vec![CanonicalForm { n: 0, bits: 0 }];
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for c in &classes {
            let base = c.to_graph();
            let mut grown = Graph::empty(m);
            for (i, j) in base.edges() {
                grown.add_edge(i, j)?;
            }
            for nb in 0u64..(1 << (m - 1)) {
                let mut h = grown.clone();
                for v in VertexSet::from_bits(nb) {
                    h.add_edge(v, m)?;
                }
                next.insert(canonical_form(&h)?.0);
            }
        }
        classes = next.into_iter().collect();
    }
    let mut graphs: Vec<(usize, CanonicalForm, Graph)> = classes
        .into_iter()
        .map(|c| {
            let g = c.to_graph();
            (g.edge_count(), c, g)
        })
        .collect();
    graphs.sort_by_key(|(e, c, _)| (*e, *c));
    Ok(graphs.into_iter().map(|(_, _, g)| g).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, path};

    // labeled brute force: all 2^(n choose 2) graphs, classes counted by trying every permutation
    fn class_count_oracle(n: usize) -> usize {
        let pairs: Vec<(usize, usize)> =
            (2..=n).flat_map(|j| (1..j).map(move |i| (i, j))).collect();
        let mut perms = vec![];
        permutations(&mut (1..=n).collect(), 0, &mut perms);
        let mut seen = std::collections::HashSet::new();
        let mut classes = 0;
        for mask in 0u64..(1 << pairs.len()) {
            if seen.contains(&mask) {
                continue;
            }
            classes += 1;
            for p in &perms {
                let mut m = 0u64;
                for (k, &(i, j)) in pairs.iter().enumerate() {
                    if mask >> k & 1 == 1 {
                        let (a, b) = (p[i - 1].min(p[j - 1]), p[i - 1].max(p[j - 1]));
                        let idx = pairs.iter().position(|&q| q == (a, b)).unwrap();
                        m |= 1 << idx;
                    }
                }
                seen.insert(m);
            }
        }
        classes
    }

    fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == v.len() {
            out.push(v.clone());
            return;
        }
        for i in k..v.len() {
            v.swap(k, i);
            permutations(v, k + 1, out);
            v.swap(k, i);
        }
    }

    #[test]
    fn class_counts_match_labeled_brute_force() {
        for n in 1..=5 {
            assert_eq!(
                enumerate_graphs(n).unwrap().len(),
                class_count_oracle(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (0..=6)
            .map(|n| enumerate_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
        assert!(enumerate_graphs(8).is_err());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = cycle(5).unwrap();
        let h = g.relabel(&[2, 4, 1, 5, 3]);
        assert_eq!(canonical_form(&g).unwrap().0, canonical_form(&h).unwrap().0);
        assert!(are_isomorphic(&path(4), &path(4).relabel(&[4, 2, 3, 1])).unwrap());
        assert!(!are_isomorphic(
            &path(4),
            &Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap()
        )
        .unwrap());
        let (cf, perm) = canonical_form(&h).unwrap();
        assert_eq!(h.relabel(&perm), cf.to_graph());
        assert_eq!(canonical_graph(&complete(3)).unwrap(), complete(3));
    }
}
