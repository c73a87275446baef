use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::GraphError;

/// Default vertex cap for the exponential path searches.
pub const DEFAULT_PATH_LIMIT: usize = 12;

/// All simple paths from `i` to `j`, each listed as its vertex sequence.
///
/// Paths are produced by depth-first search visiting neighbours in increasing label
/// order, then sorted by length and lexicographically.
pub fn simple_paths(
    g: &Graph,
    i: usize,
    j: usize,
    limit: usize,
) -> Result<Vec<Vec<usize>>, GraphError> {
    if g.n() > limit {
        return Err(GraphError::LimitExceeded {
            what: "path enumeration",
            n: g.n(),
            limit,
        });
    }
    for v in [i, j] {
        if v == 0 || v > g.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
    }
    if i == j {
        return Err(GraphError::InvalidArgument(
            "path endpoints must differ".into(),
        ));
    }
    let mut out = Vec::new();
    let mut stack = vec![i];
    extend(g, j, VertexSet::singleton(i), &mut stack, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn extend(
    g: &Graph,
    target: usize,
    used: VertexSet,
    stack: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let last = *stack.last().expect("nonempty");
    for w in g.neighbors(last).difference(used) {
        stack.push(w);
        if w == target {
            out.push(stack.clone());
        } else {
            extend(g, target, used.with(w), stack, out);
        }
        stack.pop();
    }
}

/// Number of edges of a longest induced path (0 for an edgeless graph).
pub fn longest_induced_path_length(g: &Graph, limit: usize) -> Result<usize, GraphError> {
    if g.n() > limit {
        return Err(GraphError::LimitExceeded {
            what: "induced path search",
            n: g.n(),
            limit,
        });
    }
    let mut best = 0;
    for start in 1..=g.n() {
        grow_induced(g, start, VertexSet::singleton(start), 0, &mut best);
    }
    Ok(best)
}

// Extends an induced path at its current end `end`. A new vertex may only touch `end`
// among the vertices already on the path.
fn grow_induced(g: &Graph, end: usize, on_path: VertexSet, len: usize, best: &mut usize) {
    *best = (*best).max(len);
    let before = on_path.without(end);
    for w in g.neighbors(end).difference(on_path) {
        if g.neighbors(w).is_disjoint(before) {
            grow_induced(g, w, on_path.with(w), len + 1, best);
        }
    }
}
