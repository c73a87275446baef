//! Clique complexes and leaf orders.

use std::collections::HashSet;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The facets (maximal cliques) of the clique complex of a graph.
///
/// Isolated vertices appear as singleton facets, so the facets cover every vertex
/// and `len()` is the clique count `c(G)` used throughout the checks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueComplex {
    facets: Vec<VertexSet>,
}

impl CliqueComplex {
    /// Builds a complex from an arbitrary facet list: sorts, dedups, drops non-maximal sets.
    pub fn from_facets(mut facets: Vec<VertexSet>) -> Self {
        facets.sort();
        facets.dedup();
        let keep: Vec<VertexSet> = facets
            .iter()
            .copied()
            .filter(|f| !facets.iter().any(|g| g != f && f.is_subset(*g)))
            .collect();
        CliqueComplex { facets: keep }
    }

    pub fn facets(&self) -> &[VertexSet] {
        &self.facets
    }

    pub fn len(&self) -> usize {
        self.facets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices lying in exactly one facet.
    pub fn free_vertices(&self) -> VertexSet {
        let mut once = VertexSet::EMPTY;
        let mut more = VertexSet::EMPTY;
        for &f in &self.facets {
            more = more.union(once.intersection(f));
            once = once.union(f);
        }
        once.difference(more)
    }
}

/// Maximal cliques via Bron–Kerbosch with Tomita pivoting.
pub fn maximal_cliques(g: &Graph) -> CliqueComplex {
    let mut out = Vec::new();
    bron_kerbosch(
        g,
        VertexSet::EMPTY,
        g.vertices(),
        VertexSet::EMPTY,
        &mut out,
    );
    out.sort();
    CliqueComplex { facets: out }
}

fn bron_kerbosch(g: &Graph, r: VertexSet, p: VertexSet, x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p
        .union(x)
        .iter()
        .max_by_key(|&u| (p.intersection(g.neighbors(u)).len(), std::cmp::Reverse(u)))
        .expect("p is nonempty");
    let (mut p, mut x) = (p, x);
    for v in p.difference(g.neighbors(pivot)) {
        let nv = g.neighbors(v);
        bron_kerbosch(g, r.with(v), p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// Number of maximal cliques.
pub fn clique_count(g: &Graph) -> usize {
    maximal_cliques(g).len()
}

/// Vertices contained in exactly one maximal clique.
pub fn free_vertices(g: &Graph) -> VertexSet {
    maximal_cliques(g).free_vertices()
}

/// A leaf order of a quasi-forest.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeafOrder {
    /// Facets `F_1, ..., F_r`.
    pub facets: Vec<VertexSet>,
    /// `branches[i]` is a branch of `facets[i]` inside `facets[..=i]`; `None` when `i = 0`.
    pub branches: Vec<Option<VertexSet>>,
}

/// Returns a branch of `leaf` among `facets` (which contains `leaf`), `Some(None)` if
/// `leaf` is the only facet, and `None` if `leaf` is not a leaf.
fn branch_of(leaf: VertexSet, facets: &[VertexSet]) -> Option<Option<VertexSet>> {
    let others: Vec<VertexSet> = facets.iter().copied().filter(|&f| f != leaf).collect();
    if others.is_empty() {
        return Some(None);
    }
    others
        .iter()
        .copied()
        .find(|&b| {
            let bi = b.intersection(leaf);
            others.iter().all(|h| h.intersection(leaf).is_subset(bi))
        })
        .map(Some)
}

/// All branches of `leaf` among `facets`.
pub fn branches(leaf: VertexSet, facets: &[VertexSet]) -> Vec<VertexSet> {
    let others: Vec<VertexSet> = facets.iter().copied().filter(|&f| f != leaf).collect();
    others
        .iter()
        .copied()
        .filter(|&b| {
            let bi = b.intersection(leaf);
            others.iter().all(|h| h.intersection(leaf).is_subset(bi))
        })
        .collect()
}

/// Finds a leaf order, or `None` when the complex is not a quasi-forest.
///
/// Facets are peeled from the back: the last facet must be a leaf of the whole
/// complex, and so on. Dead ends are memoised by the remaining facet subset.
pub fn leaf_order(complex: &CliqueComplex) -> Option<LeafOrder> {
    let facets = complex.facets();
    let r = facets.len();
    if r == 0 {
        return Some(LeafOrder {
            facets: vec![],
            branches: vec![],
        });
    }
    assert!(r <= 63, "leaf order search supports at most 63 facets");
    let mut dead = HashSet::new();
    let mut rev = Vec::new();
    if peel(facets, (1u64 << r) - 1, &mut rev, &mut dead) {
        rev.reverse();
        let order: Vec<VertexSet> = rev.iter().map(|&i| facets[i]).collect();
        let branches = (0..order.len())
            .map(|i| branch_of(order[i], &order[..=i]).expect("peeled facet is a leaf"))
            .collect();
        Some(LeafOrder {
            facets: order,
            branches,
        })
    } else {
        None
    }
}

fn peel(facets: &[VertexSet], mask: u64, rev: &mut Vec<usize>, dead: &mut HashSet<u64>) -> bool {
    if mask.count_ones() <= 1 {
        if mask != 0 {
            rev.push(mask.trailing_zeros() as usize);
        }
        return true;
    }
    if dead.contains(&mask) {
        return false;
    }
    let current: Vec<VertexSet> = (0..facets.len())
        .filter(|&i| mask >> i & 1 == 1)
        .map(|i| facets[i])
        .collect();
    for i in (0..facets.len()).rev().filter(|&i| mask >> i & 1 == 1) {
        if branch_of(facets[i], &current).is_some() {
            rev.push(i);
            if peel(facets, mask & !(1u64 << i), rev, dead) {
                return true;
            }
            rev.pop();
        }
    }
    dead.insert(mask);
    false
}
