//! The minimal primes `P_T(G)` of `J_G` and the cut sets `T` indexing them.

use bei_algebra::{Ideal, Ring};
use bei_graph::{components_within, is_cut_point_within, Graph, SetCollection, VertexSet};

use crate::error::precondition;
use crate::evidence::Evidence;
use crate::ideals::{binomial_edge_ideal_in, complete_ideal_on, graph_ring, vertex_variables};
use crate::CoreError;

/// Largest graph order for which [`cut_sets`] enumerates subsets.
pub const MAX_CUT_SET_N: usize = 10;

/// `T` together with the components of `G` restricted to `[n] \ T`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PrimeComponent {
    pub n: usize,
    pub t: VertexSet,
    pub parts: Vec<VertexSet>,
}

impl PrimeComponent {
    /// `c(T)`.
    pub fn c(&self) -> usize {
        self.parts.len()
    }

    /// `n + |T| - c(T)`.
    pub fn expected_height(&self) -> i64 {
        (self.n + self.t.len()) as i64 - self.c() as i64
    }

    /// `n - |T| + c(T)`, the Krull dimension of `S / P_T`.
    pub fn expected_dim(&self) -> i64 {
        self.n as i64 - self.t.len() as i64 + self.c() as i64
    }
}

pub fn prime_component(g: &Graph, t: VertexSet) -> Result<PrimeComponent, CoreError> {
    if !t.is_subset(g.vertices()) {
        return Err(precondition(format!(
            "{t} is not a subset of 1..={}",
            g.n()
        )));
    }
    Ok(PrimeComponent {
        n: g.n(),
        t,
        parts: components_within(g, g.vertices().difference(t)),
    })
}

/// `P_T(G) = (x_i, y_i : i ∈ T) + Σ J_{K on part}`.
pub fn component_ideal(ring: &Ring, pc: &PrimeComponent) -> Result<Ideal, CoreError> {
    let mut gens = vertex_variables(ring, pc.t)?.generators().to_vec();
    for &part in &pc.parts {
        gens.extend_from_slice(complete_ideal_on(ring, part)?.generators());
    }
    Ok(Ideal::new(ring, gens)?)
}

/// The family `C(G)`: `∅` plus every `T` whose members are each a cut point of
/// `G` restricted to `([n] \ T) ∪ {i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CutSetFamily(SetCollection);

impl CutSetFamily {
    /// Adds `∅` if missing.
    pub fn new(sets: SetCollection) -> CutSetFamily {
        CutSetFamily(sets.union(&SetCollection::unit()))
    }

    pub fn sets(&self) -> &[VertexSet] {
        self.0.sets()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, t: VertexSet) -> bool {
        self.0.contains(t)
    }

    pub fn collection(&self) -> &SetCollection {
        &self.0
    }
}

pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    let rest = g.vertices().difference(t);
    t.iter().all(|i| is_cut_point_within(g, rest.with(i), i))
}

pub fn cut_sets(g: &Graph) -> Result<CutSetFamily, CoreError> {
    let n = g.n();
    if n > MAX_CUT_SET_N {
        return Err(CoreError::LimitExceeded {
            what: "cut set enumeration",
            n,
            limit: MAX_CUT_SET_N,
        });
    }
    let sets = (0u64..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&t| has_cut_point_property(g, t))
        .collect();
    Ok(CutSetFamily::new(sets))
}

/// `P_T(G)` for every `T ∈ C(G)`, in the order of [`CutSetFamily::sets`].
pub fn minimal_primes(g: &Graph, ring: &Ring) -> Result<Vec<(PrimeComponent, Ideal)>, CoreError> {
    cut_sets(g)?
        .sets()
        .iter()
        .map(|&t| {
            let pc = prime_component(g, t)?;
            let ideal = component_ideal(ring, &pc)?;
            Ok((pc, ideal))
        })
        .collect()
}

/// `J_G = ∩_{T ∈ C(G)} P_T(G)`, and no two of these primes are comparable.
pub fn minimal_primes_identity_check(g: &Graph, p: u32) -> Result<Evidence, CoreError> {
    let ring = graph_ring(g.n(), p)?;
    let j = binomial_edge_ideal_in(&ring, g)?;
    let primes = minimal_primes(g, &ring)?;
    let mut ev = Evidence::new();
    ev.note(format!(
        "C(G) = {{{}}}",
        primes
            .iter()
            .map(|(pc, _)| pc.t.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    ));
    let mut inter = primes[0].1.clone();
    for (_, q) in &primes[1..] {
        inter = inter.intersect(q)?;
    }
    ev.equal("J_G = intersection of P_T over C(G)", &j, &inter)?;
    for (a, (pa, qa)) in primes.iter().enumerate() {
        for (b, (pb, qb)) in primes.iter().enumerate() {
            if a != b {
                let inside = qb.contains_ideal(qa)?;
                ev.fact(
                    format!("P_{} not contained in P_{}", pa.t, pb.t),
                    pa.t.to_string(),
                    pb.t.to_string(),
                    !inside,
                );
            }
        }
    }
    Ok(ev)
}

/// `max { n - |T| + c(T) : T ⊆ [n] }`.
pub fn dim_formula(g: &Graph) -> Result<i64, CoreError> {
    let n = g.n();
    if n > MAX_CUT_SET_N {
        return Err(CoreError::LimitExceeded {
            what: "dimension formula",
            n,
            limit: MAX_CUT_SET_N,
        });
    }
    (0u64..1 << n)
        .map(|bits| prime_component(g, VertexSet::from_bits(bits)).map(|pc| pc.expected_dim()))
        .try_fold(0, |best, d| d.map(|d| best.max(d)))
}

/// Krull dimension of `S/J_G` against [`dim_formula`].
pub fn dim_formula_check(g: &Graph, p: u32) -> Result<Evidence, CoreError> {
    let ring = graph_ring(g.n(), p)?;
    let dim = binomial_edge_ideal_in(&ring, g)?.krull_dim()?;
    let formula = dim_formula(g)?;
    let mut ev = Evidence::new();
    ev.fact(
        "dim S/J_G = max n - |T| + c(T)",
        dim.to_string(),
        formula.to_string(),
        dim == formula,
    );
    Ok(ev)
}

/// `height P_T(G) = n + |T| - c(T)` for every `T ⊆ [n]`.
pub fn height_formula_check(g: &Graph, p: u32) -> Result<Evidence, CoreError> {
    let n = g.n();
    if n > MAX_CUT_SET_N {
        return Err(CoreError::LimitExceeded {
            what: "height formula",
            n,
            limit: MAX_CUT_SET_N,
        });
    }
    let ring = graph_ring(n, p)?;
    let mut ev = Evidence::new();
    for bits in 0u64..1 << n {
        let pc = prime_component(g, VertexSet::from_bits(bits))?;
        let h = component_ideal(&ring, &pc)?.height()?;
        ev.fact(
            format!("height P_{}", pc.t),
            h.to_string(),
            pc.expected_height().to_string(),
            h == pc.expected_height(),
        );
    }
    Ok(ev)
}

#[cfg(test)]
mod tests {
    use super::*;
    use bei_graph::{complete, complete_multipartite, cycle, path};

    const P: u32 = 32003;

    fn sets(g: &Graph) -> Vec<String> {
        cut_sets(g)
            .unwrap()
            .sets()
            .iter()
            .map(ToString::to_string)
            .collect()
    }

    #[test]
    fn small_families() {
        assert_eq!(sets(&complete(4)), ["{}"]);
        assert_eq!(sets(&path(3)), ["{}", "{2}"]);
        assert_eq!(
            sets(&complete_multipartite(&[2, 2]).unwrap()),
            ["{}", "{1,2}", "{3,4}"]
        );
        assert_eq!(sets(&path(4)), ["{}", "{2}", "{3}"]);
        assert!(cut_sets(&Graph::empty(11)).is_err());
    }

    #[test]
    fn components() {
        let r = graph_ring(3, P).unwrap();
        let pc = prime_component(&path(3), VertexSet::singleton(2)).unwrap();
        assert_eq!(pc.c(), 2);
        let q = component_ideal(&r, &pc).unwrap();
        assert!(q.equals(&Ideal::parse(&r, "x2, y2").unwrap()).unwrap());
        let whole = prime_component(&complete(3), VertexSet::EMPTY).unwrap();
        assert!(component_ideal(&r, &whole)
            .unwrap()
            .equals(&binomial_edge_ideal_in(&r, &complete(3)).unwrap())
            .unwrap());
        assert!(prime_component(&path(3), VertexSet::singleton(4)).is_err());
    }

    #[test]
    fn identities() {
        for g in [
            complete(3),
            path(3),
            cycle(4).unwrap(),
            complete_multipartite(&[1, 3]).unwrap(),
        ] {
            let ev = minimal_primes_identity_check(&g, P).unwrap();
            assert!(ev.holds(), "{g:?}: {ev:?}");
            assert!(dim_formula_check(&g, P).unwrap().holds());
            assert!(height_formula_check(&g, P).unwrap().holds());
        }
        assert_eq!(dim_formula(&complete(4)).unwrap(), 5);
        assert_eq!(dim_formula(&path(3)).unwrap(), 4);
        // T = ∅ already gives n + 1; the algebraic dimension agrees
        assert_eq!(dim_formula(&cycle(4).unwrap()).unwrap(), 5);
    }
}
