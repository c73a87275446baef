//! The splittings `J_G = Q ∩ Q'` used for joins and generalized block graphs.

use bei_algebra::Ideal;
use bei_graph::{
    branches, clique_count, connected_components, is_connected, is_generalized_block_graph,
    join_all, leaf_order, maximal_cliques, Graph, SetCollection, VertexSet,
};

use crate::error::precondition;
use crate::evidence::Evidence;
use crate::ideals::{binomial_edge_ideal_in, complete_ideal_on, graph_ring, vertex_variables};
use crate::primes::{component_ideal, cut_sets, prime_component, CutSetFamily};
use crate::CoreError;

/// `C(H)` for each component `H` of `g`, in `g`'s labels shifted by `offset`.
fn component_families(g: &Graph, offset: usize) -> Result<Vec<SetCollection>, CoreError> {
    connected_components(g)
        .into_iter()
        .map(|comp| {
            let (h, map) = g.induced_subgraph(comp);
            let fam = cut_sets(&h)?;
            Ok(fam
                .sets()
                .iter()
                .map(|t| t.iter().map(|k| map[k - 1] + offset).collect())
                .collect())
        })
        .collect()
}

fn require_disconnected(g: &Graph, which: &str) -> Result<(), CoreError> {
    if connected_components(g).len() < 2 {
        return Err(precondition(format!(
            "{which} must have at least two components"
        )));
    }
    Ok(())
}

/// `C(G1 * G2)` from the components of two disconnected graphs:
/// `{∅} ∪ (⨀ C(G1i)) ∘ {V(G2)} ∪ (⨀ C(G2i)) ∘ {V(G1)}`.
/// Vertices of `G2` are shifted by `n1`, as in [`Graph::join`].
pub fn join_cutsets(g1: &Graph, g2: &Graph) -> Result<CutSetFamily, CoreError> {
    require_disconnected(g1, "G1")?;
    require_disconnected(g2, "G2")?;
    let (n1, n2) = (g1.n(), g2.n());
    let left = VertexSet::range(n1);
    let right = VertexSet::interval(n1 + 1, n1 + n2);
    let a = join_all(&component_families(g1, 0)?).join(&SetCollection::new(vec![right]));
    let b = join_all(&component_families(g2, n1)?).join(&SetCollection::new(vec![left]));
    Ok(CutSetFamily::new(a.union(&b)))
}

fn family_string(f: &CutSetFamily) -> String {
    f.sets()
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

/// [`join_cutsets`] against subset enumeration on the join.
pub fn join_cutsets_check(g1: &Graph, g2: &Graph) -> Result<Evidence, CoreError> {
    let formula = join_cutsets(g1, g2)?;
    let brute = cut_sets(&g1.join(g2))?;
    let mut ev = Evidence::new();
    ev.note(format!("vertices of G2 are shifted by {}", g1.n()));
    ev.fact(
        "join formula = enumerated C(G1 * G2)",
        family_string(&formula),
        family_string(&brute),
        formula == brute,
    );
    Ok(ev)
}

/// For disconnected `G1`, `G2` and `G = G1 * G2` on `[n] = L ⊔ R`:
/// `Q = (x_i, y_i : i ∈ L) + J_{G2}`, `Q' = J_{K_n} ∩ ((x_i, y_i : i ∈ R) + J_{G1})`,
/// `J_G = Q ∩ Q'` and `Q + Q' = (x_i, y_i : i ∈ L) + J_{K_R}`.
pub fn join_decomposition_check(g1: &Graph, g2: &Graph, p: u32) -> Result<Evidence, CoreError> {
    require_disconnected(g1, "G1")?;
    require_disconnected(g2, "G2")?;
    let g = g1.join(g2);
    let n = g.n();
    let ring = graph_ring(n, p)?;
    let left = VertexSet::range(g1.n());
    let right = VertexSet::interval(g1.n() + 1, n);
    let j = binomial_edge_ideal_in(&ring, &g)?;
    let q =
        vertex_variables(&ring, left)?.sum(&binomial_edge_ideal_in(&ring, &g.restrict(right))?)?;
    let side =
        vertex_variables(&ring, right)?.sum(&binomial_edge_ideal_in(&ring, &g.restrict(left))?)?;
    let q2 = complete_ideal_on(&ring, g.vertices())?.intersect(&side)?;
    let mut ev = Evidence::new();
    ev.equal("J_G = Q ∩ Q'", &j, &q.intersect(&q2)?)?;
    let sum = vertex_variables(&ring, left)?.sum(&complete_ideal_on(&ring, right)?)?;
    ev.equal(
        "Q + Q' = (x_i, y_i : i in G1) + J_{K on G2}",
        &q.sum(&q2)?,
        &sum,
    )?;
    Ok(ev)
}

/// `g` with one clique on the union of `sets`.
pub fn merge_leaf_cliques(g: &Graph, sets: &[VertexSet]) -> Graph {
    let mut h = g.clone();
    h.complete_on(sets.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b)));
    h
}

/// The split of a generalized block graph at its last leaf.
#[derive(Clone, Debug)]
pub struct BlockSplit {
    pub leaf: VertexSet,
    pub branches: Vec<VertexSet>,
    /// The common intersection of the leaf and its branches.
    pub shared: VertexSet,
    /// `G'`: the leaf and its branches merged into one clique.
    pub merged: Graph,
    /// Whether `Q'` equals `(x_i, y_i : i ∈ A) + J_{G on [n] \ A}` on the nose.
    pub q_prime_is_restriction: bool,
    pub evidence: Evidence,
}

fn intersect_all(ideals: &[Ideal], unit: Ideal) -> Result<Ideal, CoreError> {
    let mut it = ideals.iter();
    let Some(first) = it.next() else {
        return Ok(unit);
    };
    it.try_fold(first.clone(), |acc, q| Ok(acc.intersect(q)?))
}

/// For a connected generalized block graph with at least two maximal cliques:
/// with `A` shared by the last leaf and its branches, every `T ∈ C(G)` either
/// contains `A` or misses it, and splitting the primes that way gives
/// `Q = J_{G'}` and `J_G = Q ∩ Q'`. With `Q'' = (x_i, y_i : i ∈ A) + J_{G on [n] \ A}`
/// also `Q'' ⊆ Q'`, `J_G = Q ∩ Q''` and `Q + Q'' = (x_i, y_i : i ∈ A) + J_{G' on [n] \ A}`.
pub fn generalized_block_decomposition_check(g: &Graph, p: u32) -> Result<BlockSplit, CoreError> {
    if !is_connected(g) || !is_generalized_block_graph(g) || clique_count(g) < 2 {
        return Err(precondition(
            "needs a connected generalized block graph with at least two maximal cliques",
        ));
    }
    let complex = maximal_cliques(g);
    let order =
        leaf_order(&complex).ok_or_else(|| precondition("clique complex has no leaf order"))?;
    let leaf = *order.facets.last().expect("at least two facets");
    let brs = branches(leaf, &order.facets);
    let shared = brs.iter().fold(leaf, |a, &b| a.intersection(b));
    if brs.is_empty() || shared.is_empty() {
        return Err(precondition("leaf meets no branch"));
    }
    let mut evidence = Evidence::new();
    evidence.note(format!("leaf {leaf}, branches {brs:?}, A = {shared}"));
    let group: Vec<VertexSet> = std::iter::once(leaf).chain(brs.iter().copied()).collect();
    for (a, &f) in group.iter().enumerate() {
        for &h in &group[a + 1..] {
            evidence.fact(
                format!("{f} ∩ {h} = A"),
                f.intersection(h).to_string(),
                shared.to_string(),
                f.intersection(h) == shared,
            );
        }
    }
    let mut merged_sets = group.clone();
    merged_sets.sort();
    let merged = merge_leaf_cliques(g, &merged_sets);

    let ring = graph_ring(g.n(), p)?;
    let (mut missing, mut containing) = (Vec::new(), Vec::new());
    for &t in cut_sets(g)?.sets() {
        let disjoint = shared.is_disjoint(t);
        let inside = shared.is_subset(t);
        evidence.fact(
            format!("A ⊆ {t} or A ∩ {t} = ∅"),
            t.to_string(),
            shared.to_string(),
            disjoint != inside,
        );
        let prime = component_ideal(&ring, &prime_component(g, t)?)?;
        if disjoint {
            missing.push(prime);
        } else if inside {
            containing.push(prime);
        }
    }
    if shared.len() == 1 {
        evidence.note("|A| = 1: every T contains A or misses it");
    }
    let unit = Ideal::unit(&ring);
    let q = intersect_all(&missing, unit.clone())?;
    let q2 = intersect_all(&containing, unit)?;
    let vars = vertex_variables(&ring, shared)?;
    let rest = g.vertices().difference(shared);
    // Q'' = (x_i, y_i : i in A) + J_{G on [n] - A} lies inside Q' and can be
    // strictly smaller: on the tree 1-5, 2-5, 5-4, 4-3 with A = {4}, Q' = P_{4}
    // holds x2*y1 - x1*y2 but Q'' does not
    let q3 = vars.sum(&binomial_edge_ideal_in(&ring, &g.restrict(rest))?)?;
    let j = binomial_edge_ideal_in(&ring, g)?;
    evidence.equal("Q = J_{G'}", &q, &binomial_edge_ideal_in(&ring, &merged)?)?;
    evidence.contained("Q'' ⊆ Q'", &q3, &q2)?;
    evidence.equal("J_G = Q ∩ Q'", &j, &q.intersect(&q2)?)?;
    evidence.equal("J_G = Q ∩ Q''", &j, &q.intersect(&q3)?)?;
    evidence.equal(
        "Q + Q'' = (x_i, y_i : i in A) + J_{G' on [n] - A}",
        &q.sum(&q3)?,
        &vars.sum(&binomial_edge_ideal_in(&ring, &merged.restrict(rest))?)?,
    )?;
    let q_prime_is_restriction = q2.equals(&q3)?;
    if !q_prime_is_restriction {
        evidence.note(format!("Q' = {q2} is strictly larger than Q'' = {q3}"));
    }
    Ok(BlockSplit {
        leaf,
        branches: brs,
        shared,
        merged,
        q_prime_is_restriction,
        evidence,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use bei_graph::{complete, complete_multipartite, path};

    const P: u32 = 32003;

    fn strings(f: &CutSetFamily) -> Vec<String> {
        f.sets().iter().map(ToString::to_string).collect()
    }

    #[test]
    fn join_families() {
        let two = Graph::empty(2);
        assert_eq!(
            strings(&join_cutsets(&two, &two).unwrap()),
            ["{}", "{1,2}", "{3,4}"]
        );
        assert!(join_cutsets_check(&two, &two).unwrap().holds());
        let pp = path(2).disjoint_union(&path(2));
        assert!(join_cutsets_check(&two, &pp).unwrap().holds());
        assert!(join_cutsets(&path(3), &two).is_err());
        // all components complete: only the two sides survive
        let kk = complete(2).disjoint_union(&complete(3));
        assert_eq!(
            strings(&join_cutsets(&kk, &two).unwrap()),
            ["{}", "{1,2,3,4,5}", "{6,7}"]
        );
    }

    #[test]
    fn join_ideals() {
        let two = Graph::empty(2);
        assert!(join_decomposition_check(&two, &two, P).unwrap().holds());
        let pk = path(2).disjoint_union(&Graph::empty(1));
        assert!(join_decomposition_check(&pk, &two, P).unwrap().holds());
        assert!(join_decomposition_check(&two, &pk, P).unwrap().holds());
        assert_eq!(complete_multipartite(&[2, 2]).unwrap(), two.join(&two));
    }

    #[test]
    fn block_splits() {
        let diamond = Graph::from_edges(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]).unwrap();
        let star = complete_multipartite(&[1, 3]).unwrap();
        for g in [diamond, star, path(4)] {
            let s = generalized_block_decomposition_check(&g, P).unwrap();
            assert!(s.evidence.holds(), "{g:?}: {:?}", s.evidence);
        }
        // the tree 1-5, 2-5, 5-4, 4-3: Q' = P_{4} strictly contains (x4, y4) + J_{G - 4}
        let tree = Graph::from_edges(5, &[(1, 5), (2, 5), (3, 4), (4, 5)]).unwrap();
        let s = generalized_block_decomposition_check(&tree, P).unwrap();
        assert!(s.evidence.holds(), "{:?}", s.evidence);
        assert_eq!(s.shared.to_vec(), [4]);
        assert!(!s.q_prime_is_restriction);
        assert!(generalized_block_decomposition_check(&complete(3), P).is_err());
        assert!(generalized_block_decomposition_check(&bei_graph::cycle(4).unwrap(), P).is_err());
    }
}
