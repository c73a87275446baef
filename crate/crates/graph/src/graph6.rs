//! graph6 encoding and the plain `"n; i j; i j"` edge-list format.
//!
//! graph6 reference: <https://users.cecs.anu.edu.au/~bdm/data/formats.txt>.
//! The encoder always emits the shortest size header; the decoder accepts an
//! optional `>>graph6<<` prefix and rejects nonzero padding bits so that
//! decode/encode round trips are byte-exact.

use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;
use crate::GraphError;

pub const GRAPH6_HEADER: &str = ">>graph6<<";

fn size_header(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    size_header(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 2..=n {
        for i in 1..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

fn parse_err(msg: impl Into<String>) -> GraphError {
    GraphError::Parse(msg.into())
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let s = text.trim_end_matches(['\n', '\r']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err("empty graph6 string"));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(format!("byte {b} outside graph6 range 63..=126")));
    }
    let vals: Vec<usize> = bytes.iter().map(|&b| (b - 63) as usize).collect();
    let (n, body) = if vals[0] != 63 {
        (vals[0], &vals[1..])
    } else if vals.len() >= 4 && vals[1] != 63 {
        ((vals[1] << 12) | (vals[2] << 6) | vals[3], &vals[4..])
    } else if vals.len() >= 8 {
        let n = vals[2..8].iter().fold(0usize, |acc, &v| (acc << 6) | v);
        (n, &vals[8..])
    } else {
        return Err(parse_err("truncated graph6 size header"));
    };
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    if body.len() != nbits.div_ceil(6) {
        return Err(parse_err(format!(
            "graph6 body has {} bytes, expected {} for n = {n}",
            body.len(),
            nbits.div_ceil(6)
        )));
    }
    let bit = |k: usize| (body[k / 6] >> (5 - k % 6)) & 1 == 1;
    for k in nbits..body.len() * 6 {
        if bit(k) {
            return Err(parse_err("nonzero graph6 padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 2..=n {
        for i in 1..j {
            if bit(k) {
                g.add_edge(i, j)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

/// Parses one graph per nonempty line. A leading `>>graph6<<` on any line is ignored.
pub fn read_graph6_lines(text: &str) -> Result<Vec<Graph>, GraphError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && *l != GRAPH6_HEADER)
        .map(from_graph6)
        .collect()
}

/// `"n; i j; i j"` with edges in canonical order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = g.n().to_string();
    for (i, j) in g.edges() {
        s.push_str(&format!("; {i} {j}"));
    }
    s
}

pub fn from_edge_list(text: &str) -> Result<Graph, GraphError> {
    let mut parts = text.trim().split(';').map(str::trim);
    let n: usize = parts
        .next()
        .filter(|p| !p.is_empty())
        .ok_or_else(|| parse_err("missing vertex count"))?
        .parse()
        .map_err(|e| parse_err(format!("bad vertex count: {e}")))?;
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    let mut g = Graph::empty(n);
    for p in parts.filter(|p| !p.is_empty()) {
        let ends: Vec<usize> = p
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|e| parse_err(format!("bad vertex {t:?}: {e}")))
            })
            .collect::<Result<_, _>>()?;
        match ends[..] {
            [i, j] => g.add_edge(i, j)?,
            _ => return Err(parse_err(format!("edge {p:?} must have two endpoints"))),
        }
    }
    Ok(g)
}
