//! Text formats: DIMACS `.col`, plain 0-based edge lists and DOT.
//!
//! Edge lists carry no vertex count, so the writer prefixes a
//! `# vertices N` comment that the reader honours; other readers see an
//! ordinary comment.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("invalid {what} `{tok}`")))
}

/// Reads DIMACS: `c` comments, one `p edge n m` line, `e u v` lines (1-based).
pub fn read_dimacs(text: &str) -> Result<Graph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if n.is_some() {
                    return Err(parse_err(line, "duplicate problem line"));
                }
                match tok.next() {
                    Some("edge") | Some("col") => {}
                    other => {
                        return Err(parse_err(
                            line,
                            format!("unsupported problem type {other:?}"),
                        ))
                    }
                }
                n = Some(parse_num(tok.next(), line, "vertex count")?);
                // declared edge count is advisory; generators disagree on orientation
                parse_num(tok.next(), line, "edge count")?;
            }
            Some("e") => {
                let nv = n.ok_or_else(|| parse_err(line, "edge before problem line"))?;
                let u = parse_num(tok.next(), line, "endpoint")?;
                let v = parse_num(tok.next(), line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > nv {
                        return Err(parse_err(line, format!("vertex {x} outside 1..={nv}")));
                    }
                }
                if u == v {
                    return Err(parse_err(line, format!("self-loop on {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            Some(other) => return Err(parse_err(line, format!("unknown line type `{other}`"))),
        }
    }
    let n = n.ok_or_else(|| parse_err(0, "missing problem line"))?;
    Graph::from_edges(n, edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

/// Reads `u v` pairs (0-based). Blank lines and `#` comments are skipped;
/// a `# vertices N` comment fixes the vertex count, otherwise it is one
/// more than the largest id seen.
pub fn read_edge_list(text: &str) -> Result<Graph> {
    let mut declared = None;
    let mut edges = Vec::new();
    let mut max_id = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.trim();
        if let Some(comment) = body.strip_prefix('#') {
            let mut tok = comment.split_whitespace();
            if tok.next() == Some("vertices") {
                declared = Some(parse_num(tok.next(), line, "vertex count")?);
            }
            continue;
        }
        if body.is_empty() {
            continue;
        }
        let mut tok = body.split_whitespace();
        let u = parse_num(tok.next(), line, "endpoint")?;
        let v = parse_num(tok.next(), line, "endpoint")?;
        if tok.next().is_some() {
            return Err(parse_err(line, "expected exactly two vertex ids"));
        }
        if u == v {
            return Err(parse_err(line, format!("self-loop on {u}")));
        }
        max_id = max_id.max(Some(u.max(v)));
        edges.push((u, v));
    }
    let inferred = max_id.map_or(0, |m| m + 1);
    let n = match declared {
        Some(d) if d < inferred => {
            return Err(parse_err(0, format!("vertex id {} exceeds declared count {d}", inferred - 1)))
        }
        Some(d) => d,
        None => inferred,
    };
    Graph::from_edges(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("# vertices {}\n", g.n());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Compact single-line form used inside sweep reports: `n:u-v,u-v,..`.
pub fn encode_inline(g: &Graph) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("{u}-{v}")).collect();
    format!("{}:{}", g.n(), edges.join(","))
}

pub fn decode_inline(s: &str) -> Result<Graph> {
    let (n, rest) = s
        .split_once(':')
        .ok_or_else(|| parse_err(1, "missing `n:` prefix"))?;
    let n = parse_num(Some(n), 1, "vertex count")?;
    let mut edges = Vec::new();
    for pair in rest.split(',').filter(|p| !p.is_empty()) {
        let (u, v) = pair
            .split_once('-')
            .ok_or_else(|| parse_err(1, format!("bad edge `{pair}`")))?;
        edges.push((parse_num(Some(u), 1, "endpoint")?, parse_num(Some(v), 1, "endpoint")?));
    }
    Graph::from_edges(n, edges)
}

/// Sniffs the format: DIMACS if the first significant line starts with
/// `p`, `e` or `c`, otherwise an edge list.
pub fn read_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first.and_then(|l| l.split_whitespace().next()) {
        Some("p") | Some("e") | Some("c") => read_dimacs(text),
        _ => read_edge_list(text),
    }
}

const PALETTE: [&str; 12] = [
    "#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
    "#fabebe", "#008080", "#e6beff", "#9a6324",
];

/// DOT output; `colours`, when given, holds one 1-based colour per vertex.
pub fn write_dot(g: &Graph, colours: Option<&[u32]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.n() {
        write!(out, "  {v} [label=\"{}\"", g.label(v)).unwrap();
        if let Some(c) = colours.and_then(|cs| cs.get(v)) {
            let fill = PALETTE[(*c as usize).saturating_sub(1) % PALETTE.len()];
            write!(out, ", colour={c}, style=filled, fillcolor=\"{fill}\"").unwrap();
        }
        out.push_str("];\n");
    }
    for &(u, v) in g.edges() {
        writeln!(out, "  {u} -- {v};").unwrap();
    }
    out.push_str("}\n");
    out
}
