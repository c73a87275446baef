use std::collections::BTreeSet;

use bei_algebra::{is_groebner_basis, regularity_quotient, BettiTable, MonomialOrder};
use bei_graph::{
    clique_count, closed_labeling, components_within, connected_components, cut_edges,
    free_cut_edges, ge_closure, is_closed, is_generalized_block_graph, longest_induced_path_length,
    path, reduced_graph_fixpoint, simplicial_vertices, Edge, Graph, VertexSet,
    DEFAULT_CLOSED_LIMIT, DEFAULT_PATH_LIMIT,
};

use super::{Census, CensusConfig, CheckResult, Status, Suite};
use crate::colon::{colon_identity_check, simplicial_colon_check, EdgeColon};
use crate::decompose::{
    generalized_block_decomposition_check, join_cutsets_check, join_decomposition_check,
};
use crate::evidence::{Evidence, IdealComparison};
use crate::ideals::{edge_binomial, graph_ring, pair_ideal, pair_to_binomial};
use crate::primes::{
    dim_formula_check, height_formula_check, minimal_primes_identity_check, MAX_CUT_SET_N,
};
use crate::CoreError;

pub(crate) enum Outcome {
    Pass(String),
    Fail(String, Vec<IdealComparison>),
    Skip(String),
}

type Run = fn(&mut Census, &mut Subject) -> Result<Outcome, CoreError>;

/// One named check and the suites that include it.
pub struct CheckSpec {
    pub name: &'static str,
    pub suites: &'static [Suite],
    pub statement: &'static str,
    run: Run,
}

macro_rules! check {
    ($name:ident, [$($s:ident),*], $statement:expr) => {
        CheckSpec { name: stringify!($name), suites: &[$(Suite::$s),*], statement: $statement, run: $name }
    };
}

pub static CHECKS: &[CheckSpec] = &[
    check!(reg_le_n, [ConjA], "reg J_G <= n"),
    check!(reg_le_n_minus_1, [ConjA], "reg J_G <= n - 1 for connected G other than a path"),
    check!(
        reg_le_n_minus_1_structural,
        [ConjA],
        "reg J_G <= n - 1 for G not a path that is disconnected, has a simplicial vertex or a cut edge, is a join or a cycle"
    ),
    check!(reg_le_cliques_plus_1, [ConjB], "reg J_G <= c(G) + 1"),
    check!(closed_reg_le_cliques_plus_1, [ConjB], "reg J_G <= c(G) + 1 for closed G"),
    check!(generalized_block_reg_le_cliques_plus_1, [ConjB], "reg J_G <= c(G) + 1 for generalized block graphs"),
    check!(
        reduced_components_reg_le_cliques_plus_1,
        [ConjB, Reduced],
        "reg J_G <= c(G) + 1 when every component of R(G) is closed or a generalized block graph"
    ),
    check!(
        reduced_components_transfer_bound,
        [ConjB, Reduced],
        "the clique bound passes from the components of R(G) to connected G"
    ),
    check!(multifan_sharp_bound, [ConjB, Join], "reg J_G = c(G) + 1 for K_1 * (P_n1 ⊔ ... ⊔ P_nt), all n_i >= 2"),
    check!(closed_labeling_quadratic_basis, [ConjB], "closed labelings make the edge binomials a lex Groebner basis"),
    check!(
        generalized_block_ideal_decomposition,
        [ConjB],
        "J_G = Q ∩ Q' split at a leaf clique of a generalized block graph"
    ),
    check!(reg_sum_over_reduced_components, [Reduced], "reg J_G = Σ reg J_{R_i} over the components of R(G)"),
    check!(closed_reduced_reg_formula, [Reduced], "reg J_G = Σ l_i + q when R(G) is closed"),
    check!(cut_edge_betti_bounds, [Colon], "Betti numbers, pd and reg of J_G are bounded through any cut edge"),
    check!(
        free_cut_edge_betti_shift,
        [Colon, Reduced],
        "removing a free cut edge shifts the Betti table, pd and reg by exactly one step"
    ),
    check!(edge_colon_identity, [Colon], "J_{G-e} : f_e = J_{(G-e)_e} + I_G for every edge"),
    check!(edge_colon_reg_bound, [Colon], "reg J_G <= max(reg J_{G-e}, reg(J_{G-e} : f_e) + 1)"),
    check!(simplicial_edge_colon, [Colon], "colon ideals at a simplicial vertex have regularity <= n - 2"),
    check!(forest_first_syzygy_degrees, [Colon], "β_{1,j}(J_G) = 0 for j > n on forests with n >= 4"),
    check!(induced_subgraph_monotone, [Join], "β_{i,j}(J_H) <= β_{i,j}(J_G) for induced subgraphs H"),
    check!(join_reg_formula, [Join], "reg J_{G1*G2} = max(reg J_G1, reg J_G2, 3), or 2 for two complete graphs"),
    check!(join_reg_le_n_minus_1, [Join, ConjA], "reg J_G <= n - 1 for joins other than P_2 and P_3"),
    check!(join_cliques_bound_transfer, [Join, ConjB], "the clique bound passes from G1 and G2 to G1 * G2"),
    check!(multipartite_reg_three, [Join, ConjA], "reg J_G = 3 for non-complete complete multipartite G"),
    check!(join_cut_sets_formula, [Join], "C(G1 * G2) from the components of disconnected G1 and G2"),
    check!(join_ideal_decomposition, [Join], "J_{G1*G2} = Q ∩ Q' for disconnected G1 and G2"),
    check!(minimal_primes_intersection, [], "J_G is the intersection of the P_T(G), T ∈ C(G), none redundant"),
    check!(prime_heights_and_dimension, [], "height P_T = n + |T| - c(T) and dim S/J_G = max n - |T| + c(T)"),
    check!(pair_ideal_single_edge, [], "the pair ideal of an edge and G is J_G after renaming"),
    check!(betti_characteristic_independent, [], "the Betti table agrees in the second characteristic"),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|c| c.name).collect()
}

/// Per-graph data shared between checks.
pub(crate) struct Subject<'a> {
    g: &'a Graph,
    n: usize,
    connected: bool,
    ideal_n_max: usize,
    colons: Option<Vec<EdgeColon>>,
}

impl<'a> Subject<'a> {
    pub(crate) fn new(g: &'a Graph, config: &CensusConfig) -> Subject<'a> {
        Subject {
            g,
            n: g.n(),
            connected: connected_components(g).len() == 1,
            ideal_n_max: config.ideal_n_max,
            colons: None,
        }
    }

    fn ideal_gate(&self) -> Option<Outcome> {
        (self.n > self.ideal_n_max).then(|| {
            Outcome::Skip(format!(
                "ideal computations limited to n <= {}",
                self.ideal_n_max
            ))
        })
    }

    fn colons(&mut self, p: u32) -> Result<&[EdgeColon], CoreError> {
        if self.colons.is_none() {
            let all = self
                .g
                .edges()
                .into_iter()
                .map(|e| colon_identity_check(self.g, e, p))
                .collect::<Result<_, _>>()?;
            self.colons = Some(all);
        }
        Ok(self.colons.as_deref().expect("just filled"))
    }
}

pub(crate) fn run_check(
    spec: &CheckSpec,
    census: &mut Census,
    subject: &mut Subject,
) -> CheckResult {
    let (status, detail, evidence) = match (spec.run)(census, subject) {
        Ok(Outcome::Pass(d)) => (Status::Pass, d, vec![]),
        Ok(Outcome::Fail(d, ev)) => (Status::Fail, d, ev),
        Ok(Outcome::Skip(d)) => (Status::Skipped, d, vec![]),
        Err(e) if e.is_resource() => (Status::ResourceError, e.to_string(), vec![]),
        Err(e) => (Status::Fail, format!("error: {e}"), vec![]),
    };
    CheckResult {
        name: spec.name,
        status,
        detail,
        evidence,
    }
}

fn judge(holds: bool, detail: String) -> Outcome {
    if holds {
        Outcome::Pass(detail)
    } else {
        Outcome::Fail(detail, vec![])
    }
}

/// Pass when `failures` is empty.
fn all_of(failures: Vec<String>, pass: String) -> Outcome {
    if failures.is_empty() {
        Outcome::Pass(pass)
    } else {
        Outcome::Fail(failures.join("; "), vec![])
    }
}

fn from_evidence(ev: Evidence, pass: String) -> Outcome {
    match ev.first_failure() {
        None => Outcome::Pass(pass),
        Some(f) => {
            let detail = format!("{} fails", f.name);
            Outcome::Fail(
                detail,
                ev.comparisons.into_iter().filter(|c| !c.holds).collect(),
            )
        }
    }
}

fn skip(reason: &str) -> Result<Outcome, CoreError> {
    Ok(Outcome::Skip(reason.to_string()))
}

fn e_str((i, j): Edge) -> String {
    format!("{{{i},{j}}}")
}

/// Which structural cases apply: simplicial vertex, cut edge, join, cycle.
fn case_tags(g: &Graph) -> Vec<&'static str> {
    let mut tags = Vec::new();
    if !simplicial_vertices(g).is_empty() {
        tags.push("simplicial vertex");
    }
    if !cut_edges(g).is_empty() {
        tags.push("cut edge");
    }
    if !join_splits(g).is_empty() {
        tags.push("join");
    }
    if g.is_cycle() {
        tags.push("cycle");
    }
    tags
}

fn tag_string(tags: &[&str]) -> String {
    if tags.is_empty() {
        "none".into()
    } else {
        tags.join(", ")
    }
}

/// Ways to write `g = G[A] * G[B]`: `A` and `B` are unions of components of
/// the complement, `A` holding the component of vertex 1.
fn join_splits(g: &Graph) -> Vec<(VertexSet, VertexSet)> {
    if g.n() < 2 {
        return vec![];
    }
    let comps = connected_components(&g.complement());
    let k = comps.len();
    if k < 2 {
        return vec![];
    }
    (1u64..1 << k)
        .filter(|mask| mask & 1 == 1 && *mask != (1 << k) - 1)
        .map(|mask| {
            let a = (0..k)
                .filter(|&b| mask >> b & 1 == 1)
                .fold(VertexSet::EMPTY, |s, b| s.union(comps[b]));
            (a, g.vertices().difference(a))
        })
        .collect()
}

fn sides(g: &Graph, (a, b): (VertexSet, VertexSet)) -> (Graph, Graph) {
    (g.induced_subgraph(a).0, g.induced_subgraph(b).0)
}

/// Path orders when `g = K_1 * (P_n1 ⊔ ... ⊔ P_nt)`.
fn multifan_paths(g: &Graph) -> Option<Vec<usize>> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    (1..=n).filter(|&v| g.degree(v) == n - 1).find_map(|v| {
        let comps = components_within(g, g.vertices().without(v));
        let mut sizes = Vec::new();
        for c in comps {
            let (h, _) = g.induced_subgraph(c);
            if !h.is_path() {
                return None;
            }
            sizes.push(h.n());
        }
        sizes.sort_unstable();
        Some(sizes)
    })
}

struct Reduced {
    components: Vec<Graph>,
    free_cut_edges: usize,
    /// Vertices isolated in `R(G)` but not in `G`.
    stranded: usize,
    graph: Graph,
}

fn reduced(g: &Graph) -> Reduced {
    let fce = free_cut_edges(g);
    let r = g.delete_edges(&fce);
    let components = connected_components(&r)
        .into_iter()
        .map(|c| r.induced_subgraph(c).0)
        .collect();
    let stranded = r
        .isolated_vertices()
        .difference(g.isolated_vertices())
        .len();
    Reduced {
        components,
        free_cut_edges: fce.len(),
        stranded,
        graph: r,
    }
}

fn reg_le_n(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let r = c.engine.reg_ideal(s.g)?;
    Ok(judge(r <= s.n as i64, format!("reg {r}, n {}", s.n)))
}

fn reg_le_n_minus_1(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if !s.connected || s.g.is_path() {
        return skip("needs a connected graph that is not a path");
    }
    let r = c.engine.reg_ideal(s.g)?;
    let tags = case_tags(s.g);
    Ok(judge(
        r < s.n as i64,
        format!("reg {r}, n - 1 = {}; cases: {}", s.n - 1, tag_string(&tags)),
    ))
}

fn reg_le_n_minus_1_structural(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if s.n == 0 || s.g.is_path() {
        return skip("paths are excluded");
    }
    let mut tags = case_tags(s.g);
    if !s.connected {
        tags.insert(0, "disconnected");
    }
    if tags.is_empty() {
        return skip("no structural case applies");
    }
    let r = c.engine.reg_ideal(s.g)?;
    Ok(judge(
        r < s.n as i64,
        format!("reg {r}, n - 1 = {}; cases: {}", s.n - 1, tag_string(&tags)),
    ))
}

fn reg_le_cliques_plus_1(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let r = c.engine.reg_ideal(s.g)?;
    let k = clique_count(s.g);
    Ok(judge(
        r <= k as i64 + 1,
        format!("reg {r}, c(G) + 1 = {}", k + 1),
    ))
}

fn closed_reg_le_cliques_plus_1(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if !is_closed(s.g, DEFAULT_CLOSED_LIMIT)? {
        return skip("not closed");
    }
    reg_le_cliques_plus_1(c, s)
}

fn generalized_block_reg_le_cliques_plus_1(
    c: &mut Census,
    s: &mut Subject,
) -> Result<Outcome, CoreError> {
    if !is_generalized_block_graph(s.g) {
        return skip("not a generalized block graph");
    }
    reg_le_cliques_plus_1(c, s)
}

fn reduced_components_reg_le_cliques_plus_1(
    c: &mut Census,
    s: &mut Subject,
) -> Result<Outcome, CoreError> {
    let red = reduced(s.g);
    for h in &red.components {
        if !is_closed(h, DEFAULT_CLOSED_LIMIT)? && !is_generalized_block_graph(h) {
            return skip("some component of R(G) is neither closed nor a generalized block graph");
        }
    }
    let mut failures = Vec::new();
    for h in &red.components {
        let (r, k) = (c.engine.reg_ideal(h)?, clique_count(h));
        if r > k as i64 + 1 {
            failures.push(format!("component {:?}: reg {r} > c + 1 = {}", h, k + 1));
        }
    }
    let r = c.engine.reg_ideal(s.g)?;
    let k = clique_count(s.g);
    if r > k as i64 + 1 {
        failures.push(format!("reg {r} > c(G) + 1 = {}", k + 1));
    }
    Ok(all_of(
        failures,
        format!(
            "reg {r}, c(G) + 1 = {}; {} components",
            k + 1,
            red.components.len()
        ),
    ))
}

fn reduced_components_transfer_bound(
    c: &mut Census,
    s: &mut Subject,
) -> Result<Outcome, CoreError> {
    if !s.connected {
        return skip("needs a connected graph");
    }
    let red = reduced(s.g);
    let q = red.components.len();
    let f = red.free_cut_edges;
    let sum_c: usize = red.components.iter().map(clique_count).sum();
    let k = clique_count(s.g);
    let mut failures = Vec::new();
    // each free cut edge is a facet of G; the endpoints it strands become singleton facets of R(G)
    if k + red.stranded != sum_c + f {
        failures.push(format!(
            "c(G) {k} != Σ c(R_i) {sum_c} + {f} - {}",
            red.stranded
        ));
    }
    let mut all_bounded = true;
    for h in &red.components {
        all_bounded &= c.engine.reg_ideal(h)? <= clique_count(h) as i64 + 1;
    }
    let r = c.engine.reg_ideal(s.g)?;
    if all_bounded && r > k as i64 + 1 {
        failures.push(format!(
            "bound holds on every R_i but reg {r} > c(G) + 1 = {}",
            k + 1
        ));
    }
    let printed = k + 1 == sum_c + q;
    Ok(all_of(
        failures,
        format!(
            "c(G) {k} = Σ c(R_i) {sum_c} + {f} free cut edges - {} stranded vertices; c(G) = Σ c(R_i) + q - 1 {}",
            red.stranded,
            if printed { "also holds" } else { "does not hold" }
        ),
    ))
}

fn multifan_sharp_bound(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let Some(sizes) = multifan_paths(s.g) else {
        return skip("not a multifan");
    };
    if sizes.iter().any(|&k| k < 2) {
        return skip("multifan with a single-vertex path");
    }
    let r = c.engine.reg_ideal(s.g)?;
    let k = clique_count(s.g);
    Ok(judge(
        r == k as i64 + 1,
        format!("paths {sizes:?}: reg {r}, c(G) + 1 = {}", k + 1),
    ))
}

fn closed_labeling_quadratic_basis(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let Some(perm) = closed_labeling(s.g, DEFAULT_CLOSED_LIMIT)? else {
        return skip("not closed");
    };
    if s.g.edge_count() == 0 {
        return skip("no edges");
    }
    let h = s.g.relabel(&perm);
    let ring = c.engine.ring(s.n)?;
    let gens = h
        .edges()
        .into_iter()
        .map(|(i, j)| edge_binomial(&ring, i, j).map(|f| f.with_order(MonomialOrder::Lex)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(judge(
        is_groebner_basis(&gens)?,
        format!("labeling {perm:?}"),
    ))
}

fn generalized_block_ideal_decomposition(
    c: &mut Census,
    s: &mut Subject,
) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    if !s.connected || !is_generalized_block_graph(s.g) || clique_count(s.g) < 2 {
        return skip("needs a connected generalized block graph with at least two maximal cliques");
    }
    let split = generalized_block_decomposition_check(s.g, c.config.characteristic)?;
    let literal = if split.q_prime_is_restriction {
        "equals"
    } else {
        "strictly contains"
    };
    let pass = format!(
        "leaf {}, A = {}, Q' {literal} Q''",
        split.leaf, split.shared
    );
    Ok(from_evidence(split.evidence, pass))
}

fn reg_sum_over_reduced_components(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if !s.connected {
        return skip("needs a connected graph");
    }
    let red = reduced(s.g);
    let (q, f) = (red.components.len(), red.free_cut_edges);
    let mut failures = Vec::new();
    if q != f + 1 {
        failures.push(format!("{q} components but {f} free cut edges"));
    }
    let rq = c.engine.reg_quotient(s.g)?;
    let mut sum_q = 0;
    let mut sum_i = 0;
    for h in &red.components {
        sum_q += c.engine.reg_quotient(h)?;
        sum_i += c.engine.reg_ideal(h)?;
    }
    if rq != sum_q + f as i64 {
        failures.push(format!("reg S/J_G {rq} != Σ reg S/J_R_i {sum_q} + {f}"));
    }
    let degenerate = red.components.iter().any(|h| h.edge_count() == 0);
    let r = c.engine.reg_ideal(s.g)?;
    if !degenerate && r != sum_i {
        failures.push(format!("reg J_G {r} != Σ reg J_R_i {sum_i}"));
    }
    let note = if degenerate {
        "; some R_i has no edges, quotient form only"
    } else {
        ""
    };
    // observed only: the checks use the single-pass reduced graph
    let fix = if reduced_graph_fixpoint(s.g) == red.graph {
        ""
    } else {
        "; repeating the reduction changes R(G)"
    };
    Ok(all_of(
        failures,
        format!("reg {r}, q {q}, Σ reg J_R_i {sum_i}{note}{fix}"),
    ))
}

fn closed_reduced_reg_formula(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if !s.connected || s.g.edge_count() == 0 {
        return skip("needs a connected graph with an edge");
    }
    let red = reduced(s.g);
    if !is_closed(&red.graph, DEFAULT_CLOSED_LIMIT)? {
        return skip("R(G) is not closed");
    }
    let mut sum_l = 0;
    for h in &red.components {
        sum_l += longest_induced_path_length(h, DEFAULT_PATH_LIMIT)? as i64;
    }
    let q = red.components.len() as i64;
    let f = red.free_cut_edges as i64;
    let r = c.engine.reg_ideal(s.g)?;
    let printed = sum_l + f;
    Ok(judge(
        r == sum_l + q,
        format!(
            "reg {r}, Σ l_i + q = {}; Σ l_i + free cut edges = {printed} {}",
            sum_l + q,
            if printed == r { "agrees" } else { "disagrees" }
        ),
    ))
}

fn cut_edge_betti_bounds(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let bridges = cut_edges(s.g);
    if bridges.is_empty() {
        return skip("no cut edges");
    }
    let full = c.engine.betti(s.g)?;
    let bg = full.ideal_view();
    let mut failures = Vec::new();
    for &e in &bridges {
        let h = s.g.without_edge(e);
        let cl = ge_closure(&h, e.0, e.1)?;
        let (th, tc) = (c.engine.betti(&h)?, c.engine.betti(&cl)?);
        let (bh, bc) = (th.ideal_view(), tc.ideal_view());
        for ((i, j), v) in bg.iter().filter(|((i, _), _)| *i >= 1) {
            let bound = bh.get(i, j) + if j >= 2 { bc.get(i - 1, j - 2) } else { 0 };
            if v > bound {
                failures.push(format!("{}: β_{i},{j} = {v} > {bound}", e_str(e)));
            }
            if j == i + 2 && v > bh.get(i, j) {
                failures.push(format!(
                    "{}: linear strand β_{i},{j} = {v} > {}",
                    e_str(e),
                    bh.get(i, j)
                ));
            }
        }
        let pd = |t: &BettiTable| t.pd_quotient().expect("proper") as i64;
        let reg = |t: &BettiTable| t.reg_quotient().expect("proper");
        if pd(&full) > pd(&th).max(pd(&tc) + 1) {
            failures.push(format!("{}: pd S/J_G {} too large", e_str(e), pd(&full)));
        }
        if reg(&full) > reg(&th).max(reg(&tc) + 1) {
            failures.push(format!("{}: reg S/J_G {} too large", e_str(e), reg(&full)));
        }
    }
    Ok(all_of(failures, format!("{} cut edges", bridges.len())))
}

fn free_cut_edge_betti_shift(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let fce = free_cut_edges(s.g);
    if fce.is_empty() {
        return skip("no free cut edges");
    }
    let full = c.engine.betti(s.g)?;
    let bg = full.ideal_view();
    let mut failures = Vec::new();
    let mut ideal_forms = 0;
    for &e in &fce {
        let h = s.g.without_edge(e);
        let th = c.engine.betti(&h)?;
        let bh = th.ideal_view();
        let mut keys: BTreeSet<(usize, usize)> = bg.iter().map(|(k, _)| k).collect();
        keys.extend(bh.iter().flat_map(|((i, j), _)| [(i, j), (i + 1, j + 2)]));
        for (i, j) in keys.into_iter().filter(|k| k.0 >= 1) {
            let shifted = if j >= 2 { bh.get(i - 1, j - 2) } else { 0 };
            if bg.get(i, j) != bh.get(i, j) + shifted {
                failures.push(format!(
                    "{}: β_{i},{j} = {} != {} + {shifted}",
                    e_str(e),
                    bg.get(i, j),
                    bh.get(i, j)
                ));
            }
            if j == i + 2 && bg.get(i, j) != bh.get(i, j) {
                failures.push(format!("{}: linear strand differs at β_{i},{j}", e_str(e)));
            }
        }
        if full.pd_quotient() != th.pd_quotient().map(|p| p + 1) {
            failures.push(format!("{}: pd S/J_G is not pd S/J_(G-e) + 1", e_str(e)));
        }
        if full.reg_quotient() != th.reg_quotient().map(|r| r + 1) {
            failures.push(format!("{}: reg S/J_G is not reg S/J_(G-e) + 1", e_str(e)));
        }
        // with J_{G-e} = 0 the ideal forms clash with reg (0) = 0, so they need an edge left
        if h.edge_count() > 0 {
            ideal_forms += 1;
            if full.pd_ideal() != th.pd_ideal().map(|p| p + 1) {
                failures.push(format!("{}: pd J_G is not pd J_(G-e) + 1", e_str(e)));
            }
            if full.reg_ideal() != th.reg_ideal().map(|r| r + 1) {
                failures.push(format!("{}: reg J_G is not reg J_(G-e) + 1", e_str(e)));
            }
        }
    }
    Ok(all_of(
        failures,
        format!("{} free cut edges, ideal form on {ideal_forms}", fce.len()),
    ))
}

fn edge_colon_identity(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    if s.g.edge_count() == 0 {
        return skip("no edges");
    }
    let mut ev = Evidence::new();
    let colons = s.colons(c.config.characteristic)?;
    for col in colons {
        ev.extend(col.evidence.clone());
    }
    let cut = colons.iter().filter(|x| x.is_cut_edge).count();
    Ok(from_evidence(
        ev,
        format!("{} edges, {cut} cut edges", colons.len()),
    ))
}

fn edge_colon_reg_bound(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    if s.g.edge_count() == 0 {
        return skip("no edges");
    }
    let rq = c.engine.reg_quotient(s.g)?;
    let mut failures = Vec::new();
    let g = s.g;
    let colons = s.colons(c.config.characteristic)?.to_vec();
    for col in &colons {
        let rh = c.engine.reg_quotient(&g.without_edge(col.edge))?;
        let rc = regularity_quotient(&col.quotient)?
            .ok_or_else(|| CoreError::Precondition("unit colon ideal".into()))?;
        // quotient form, so that J_{G-e} = 0 needs no special case
        if rq > rh.max(rc + 1) {
            failures.push(format!(
                "{}: reg S/J_G {rq} > max({rh}, {})",
                e_str(col.edge),
                rc + 1
            ));
        }
    }
    Ok(all_of(
        failures,
        format!("reg S/J_G {rq} over {} edges", colons.len()),
    ))
}

fn simplicial_edge_colon(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    let mut ev = Evidence::new();
    let mut cases = 0;
    for v in simplicial_vertices(s.g) {
        if s.g.degree(v) < 2 {
            continue;
        }
        for w in s.g.neighbors(v) {
            cases += 1;
            ev.extend(simplicial_colon_check(s.g, v, (v, w), c.config.characteristic)?.evidence);
        }
    }
    if cases == 0 {
        return skip("no simplicial vertex of degree >= 2");
    }
    Ok(from_evidence(ev, format!("{cases} (vertex, edge) pairs")))
}

fn forest_first_syzygy_degrees(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if !s.g.is_forest() || s.n < 4 {
        return skip("needs a forest on at least 4 vertices");
    }
    let b = c.engine.ideal_betti(s.g)?;
    let bad: Vec<String> = b
        .iter()
        .filter(|((i, j), _)| *i == 1 && *j > s.n)
        .map(|((_, j), v)| format!("β_1,{j} = {v}"))
        .collect();
    let top = b
        .iter()
        .filter(|((i, _), _)| *i == 1)
        .map(|((_, j), _)| j)
        .max();
    Ok(all_of(
        bad,
        format!("largest first-syzygy degree {top:?}, n {}", s.n),
    ))
}

fn induced_subgraph_monotone(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if s.n > MAX_CUT_SET_N {
        return skip("subset enumeration limited to n <= 10");
    }
    let bg = c.engine.ideal_betti(s.g)?;
    let mut failures = Vec::new();
    for bits in 0..(1u64 << s.n) - 1 {
        let keep = VertexSet::from_bits(bits);
        let bh = c.engine.ideal_betti(&s.g.induced_subgraph(keep).0)?;
        if !bh.le_entrywise(&bg) {
            failures.push(format!("induced on {keep}"));
        }
    }
    Ok(all_of(
        failures,
        format!("{} proper induced subgraphs", (1u64 << s.n) - 1),
    ))
}

fn join_reg_formula(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let splits = join_splits(s.g);
    if splits.is_empty() {
        return skip("not a join");
    }
    let r = c.engine.reg_ideal(s.g)?;
    let mut failures = Vec::new();
    for &split in &splits {
        let (g1, g2) = sides(s.g, split);
        let expected = if g1.is_complete() && g2.is_complete() {
            2
        } else {
            c.engine
                .reg_ideal(&g1)?
                .max(c.engine.reg_ideal(&g2)?)
                .max(3)
        };
        if r != expected {
            failures.push(format!("{} * {}: reg {r} != {expected}", split.0, split.1));
        }
    }
    Ok(all_of(
        failures,
        format!("reg {r} over {} splittings", splits.len()),
    ))
}

fn join_reg_le_n_minus_1(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if join_splits(s.g).is_empty() {
        return skip("not a join");
    }
    if s.n <= 3 && s.g.is_path() {
        return skip("P_2 and P_3 are excluded");
    }
    let r = c.engine.reg_ideal(s.g)?;
    Ok(judge(
        r < s.n as i64,
        format!("reg {r}, n - 1 = {}", s.n - 1),
    ))
}

fn join_cliques_bound_transfer(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let splits = join_splits(s.g);
    if splits.is_empty() {
        return skip("not a join");
    }
    let r = c.engine.reg_ideal(s.g)?;
    let k = clique_count(s.g);
    let mut failures = Vec::new();
    for &split in &splits {
        let (g1, g2) = sides(s.g, split);
        let (k1, k2) = (clique_count(&g1), clique_count(&g2));
        if k != k1 * k2 {
            failures.push(format!(
                "{} * {}: c(G) {k} != {k1} * {k2}",
                split.0, split.1
            ));
        }
        let bounded =
            c.engine.reg_ideal(&g1)? <= k1 as i64 + 1 && c.engine.reg_ideal(&g2)? <= k2 as i64 + 1;
        if bounded && r > k as i64 + 1 {
            failures.push(format!(
                "{} * {}: sides bounded but reg {r} > {}",
                split.0,
                split.1,
                k + 1
            ));
        }
    }
    Ok(all_of(
        failures,
        format!("reg {r}, c(G) {k} over {} splittings", splits.len()),
    ))
}

fn multipartite_reg_three(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    match s.g.multipartite_parts() {
        Some(parts) if parts.len() >= 2 && !s.g.is_complete() => {
            let r = c.engine.reg_ideal(s.g)?;
            Ok(judge(r == 3, format!("parts {parts:?}: reg {r}")))
        }
        _ => skip("not a non-complete complete multipartite graph"),
    }
}

fn disconnected_splits(g: &Graph) -> Vec<(Graph, Graph)> {
    join_splits(g)
        .into_iter()
        .map(|split| sides(g, split))
        .filter(|(a, b)| connected_components(a).len() >= 2 && connected_components(b).len() >= 2)
        .collect()
}

fn join_cut_sets_formula(_: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let pairs = disconnected_splits(s.g);
    if pairs.is_empty() {
        return skip("not a join of two disconnected graphs");
    }
    let mut ev = Evidence::new();
    for (g1, g2) in &pairs {
        ev.extend(join_cutsets_check(g1, g2)?);
    }
    Ok(from_evidence(ev, format!("{} splittings", pairs.len())))
}

fn join_ideal_decomposition(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    let pairs = disconnected_splits(s.g);
    if pairs.is_empty() {
        return skip("not a join of two disconnected graphs");
    }
    let mut ev = Evidence::new();
    for (g1, g2) in &pairs {
        ev.extend(join_decomposition_check(g1, g2, c.config.characteristic)?);
        ev.extend(join_decomposition_check(g2, g1, c.config.characteristic)?);
    }
    Ok(from_evidence(
        ev,
        format!("{} splittings, both orders", pairs.len()),
    ))
}

fn minimal_primes_intersection(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    let ev = minimal_primes_identity_check(s.g, c.config.characteristic)?;
    let pass = ev.notes.join("; ");
    Ok(from_evidence(ev, pass))
}

fn prime_heights_and_dimension(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    let mut ev = height_formula_check(s.g, c.config.characteristic)?;
    let dim = dim_formula_check(s.g, c.config.characteristic)?;
    let pass = format!("dim S/J_G = {}", dim.comparisons[0].left);
    ev.extend(dim);
    Ok(from_evidence(ev, pass))
}

fn pair_ideal_single_edge(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    if let Some(o) = s.ideal_gate() {
        return Ok(o);
    }
    let p = c.config.characteristic;
    let renamed = pair_to_binomial(&pair_ideal(&path(2), s.g, p)?)?;
    let j = crate::ideals::binomial_edge_ideal_in(&graph_ring(s.n, p)?, s.g)?;
    let mut ev = Evidence::new();
    ev.equal("J_{P_2, G} = J_G", &renamed, &j)?;
    Ok(from_evidence(
        ev,
        format!("{} generators", renamed.generators().len()),
    ))
}

fn betti_characteristic_independent(c: &mut Census, s: &mut Subject) -> Result<Outcome, CoreError> {
    let Some(second) = c.second.as_mut() else {
        return skip("no second characteristic configured");
    };
    let q = second.characteristic();
    let other = second.betti(s.g)?;
    let base = c.engine.betti(s.g)?;
    Ok(judge(
        other == base,
        format!("GF({}) against GF({q})", c.config.characteristic),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use bei_graph::{complete, complete_multipartite, cycle, multifan};

    #[test]
    fn names_are_unique() {
        let names: BTreeSet<_> = check_names().into_iter().collect();
        assert_eq!(names.len(), CHECKS.len());
    }

    #[test]
    fn splittings() {
        assert!(join_splits(&cycle(5).unwrap()).is_empty());
        assert_eq!(
            join_splits(&complete_multipartite(&[1, 2, 2]).unwrap()).len(),
            3
        );
        assert_eq!(join_splits(&complete(3)).len(), 3);
        assert!(join_splits(&Graph::empty(1)).is_empty());
    }

    #[test]
    fn multifans() {
        assert_eq!(
            multifan_paths(&multifan(&[2, 3]).unwrap()),
            Some(vec![2, 3])
        );
        assert_eq!(multifan_paths(&complete(4)), None);
        assert_eq!(
            multifan_paths(&complete_multipartite(&[1, 3]).unwrap()),
            Some(vec![1, 1, 1])
        );
        assert_eq!(multifan_paths(&cycle(4).unwrap()), None);
    }

    #[test]
    fn reduced_graph_bookkeeping() {
        let red = reduced(&path(3));
        assert_eq!(
            (red.components.len(), red.free_cut_edges, red.stranded),
            (3, 2, 3)
        );
        let bridged = complete(3).disjoint_union(&complete(3));
        let mut g = bridged.clone();
        g.add_edge(3, 4).unwrap();
        let red = reduced(&g);
        assert_eq!(
            (red.components.len(), red.free_cut_edges, red.stranded),
            (2, 1, 0)
        );
    }
}
