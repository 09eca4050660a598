//! Optimal colourers for P3-free and P4-free graphs, also usable on an
//! induced block `[set]` of a larger graph.

use super::Colouring;
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::recognition::{find_induced, PatternId};

/// Local colours `1..` for `[set]`, which must be a disjoint union of cliques.
pub(crate) fn disjoint_cliques_within(g: &Graph, set: &VertexSet) -> Result<Vec<(usize, u32)>> {
    let mut out = Vec::with_capacity(set.len());
    for comp in g.components_within(set) {
        let vs = comp.to_vec();
        if !g.is_clique(&vs) {
            return Err(Error::Invariant(format!("component {vs:?} of a P3-free block is not a clique")));
        }
        out.extend(vs.into_iter().zip(1..));
    }
    Ok(out)
}

/// Components of the complement of `[set]`.
fn co_components(g: &Graph, set: &VertexSet) -> Vec<VertexSet> {
    let mut left = set.clone();
    let mut out = Vec::new();
    while let Some(start) = left.first() {
        let mut comp = VertexSet::new(set.capacity());
        let mut stack = vec![start];
        left.remove(start);
        comp.insert(start);
        while let Some(v) = stack.pop() {
            let next = left.difference(g.neighbours(v));
            for u in next.iter() {
                left.remove(u);
                comp.insert(u);
                stack.push(u);
            }
        }
        out.push(comp);
    }
    out
}

/// Local colours `1..` for `[set]`, which must be P4-free. Union nodes reuse
/// colours, join nodes stack the children's palettes.
pub(crate) fn cograph_within(g: &Graph, set: &VertexSet) -> Result<Vec<(usize, u32)>> {
    if set.len() <= 1 {
        return Ok(set.iter().map(|v| (v, 1)).collect());
    }
    let comps = g.components_within(set);
    if comps.len() > 1 {
        let mut out = Vec::with_capacity(set.len());
        for c in comps {
            out.extend(cograph_within(g, &c)?);
        }
        return Ok(out);
    }
    let co = co_components(g, set);
    if co.len() == 1 {
        return Err(Error::Invariant(format!(
            "block {:?} is connected with connected complement, so not P4-free",
            set.to_vec()
        )));
    }
    let mut out = Vec::with_capacity(set.len());
    let mut offset = 0;
    for c in co {
        let part = cograph_within(g, &c)?;
        let used = part.iter().map(|&(_, k)| k).max().unwrap_or(0);
        out.extend(part.into_iter().map(|(v, k)| (v, k + offset)));
        offset += used;
    }
    Ok(out)
}

fn to_colouring(n: usize, pairs: Vec<(usize, u32)>) -> Colouring {
    let mut assignment = vec![0; n];
    for (v, c) in pairs {
        assignment[v] = c;
    }
    Colouring::new(assignment)
}

fn require_free(h: &Graph, p: PatternId, expected: &'static str) -> Result<()> {
    match find_induced(h, p) {
        Some(witness) => Err(Error::Precondition { expected, witness }),
        None => Ok(()),
    }
}

/// Optimal colouring of a P3-free graph: each clique component on `1..=|K|`.
pub fn colour_disjoint_cliques(h: &Graph) -> Result<Colouring> {
    require_free(h, PatternId::P3, "P3-free")?;
    Ok(to_colouring(h.n(), disjoint_cliques_within(h, &h.vertex_set())?))
}

/// Optimal colouring of a cograph by cotree recursion.
pub fn colour_cograph(h: &Graph) -> Result<Colouring> {
    require_free(h, PatternId::P4, "P4-free")?;
    Ok(to_colouring(h.n(), cograph_within(h, &h.vertex_set())?))
}
