//! Canonical labelling for small graphs by individualization and refinement.
//!
//! The canonical code is the largest upper-triangle adjacency code over all
//! vertex orders reachable by refining an equitable partition and
//! individualizing vertices of the first non-singleton cell. Twins in a cell
//! are interchangeable, so only one of them is individualized.

use crate::graph::Graph;

/// Largest `n` whose upper-triangle code fits in a `u64`.
pub const CANON_LIMIT: usize = 11;

type Cells = Vec<Vec<usize>>;

/// Splits cells by neighbour counts into every cell until stable. The
/// order of the new cells depends only on the counts, never on vertex ids.
fn refine(g: &Graph, mut cells: Cells) -> Cells {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = ci;
            }
        }
        let k = cells.len();
        let mut next: Cells = Vec::with_capacity(n);
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u8>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig = vec![0u8; k];
                    for u in g.neighbours(v).iter() {
                        sig[cell_of[u]] += 1;
                    }
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let mut start = 0;
            for i in 1..=keyed.len() {
                if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                    next.push(keyed[start..i].iter().map(|&(_, v)| v).collect());
                    start = i;
                }
            }
        }
        if next.len() == k {
            return next;
        }
        cells = next;
    }
}

fn code_of(g: &Graph, order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = code << 1 | g.adjacent(order[i], order[j]) as u64;
        }
    }
    code
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let mut a = g.neighbours(u).clone();
    let mut b = g.neighbours(v).clone();
    a.remove(v);
    b.remove(u);
    a == b
}

fn search(g: &Graph, cells: Cells, best: &mut Option<(u64, Vec<usize>)>) {
    let Some(target) = cells.iter().position(|c| c.len() > 1) else {
        let order: Vec<usize> = cells.into_iter().map(|c| c[0]).collect();
        let code = code_of(g, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    let cell = &cells[target];
    let mut tried: Vec<usize> = Vec::new();
    for &v in cell {
        if tried.iter().any(|&t| twins(g, t, v)) {
            continue;
        }
        tried.push(v);
        let mut next = cells[..target].to_vec();
        next.push(vec![v]);
        next.push(cell.iter().copied().filter(|&u| u != v).collect());
        next.extend_from_slice(&cells[target + 1..]);
        search(g, refine(g, next), best);
    }
}

/// Canonical code and a vertex order realizing it (`order[i]` gets label `i`).
/// Panics if `g.n() > CANON_LIMIT`.
pub fn canonical_form(g: &Graph) -> (u64, Vec<usize>) {
    assert!(g.n() <= CANON_LIMIT, "canonical form limited to n <= {CANON_LIMIT}");
    if g.n() == 0 {
        return (0, Vec::new());
    }
    let mut by_degree: Vec<usize> = (0..g.n()).collect();
    by_degree.sort_by_key(|&v| (g.degree(v), v));
    let mut cells: Cells = Vec::new();
    for v in by_degree {
        match cells.last_mut() {
            Some(c) if g.degree(c[0]) == g.degree(v) => c.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let mut best = None;
    search(g, refine(g, cells), &mut best);
    best.expect("at least one leaf")
}

/// Isomorphism class key: `(n, canonical code)`.
pub fn canonical_key(g: &Graph) -> (usize, u64) {
    (g.n(), canonical_form(g).0)
}

/// The canonical relabelling of `g`.
pub fn canonical_graph(g: &Graph) -> Graph {
    let (_, order) = canonical_form(g);
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (pos[u], pos[v]))).expect("relabelling is valid")
}
