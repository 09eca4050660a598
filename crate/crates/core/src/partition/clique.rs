//! Exact maximum clique by branch and bound with greedy-colouring bounds.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Clique number of `[within]`.
pub fn clique_number_within(g: &Graph, within: &VertexSet) -> usize {
    let mut current = Vec::new();
    let mut best = Vec::new();
    expand(g, within.clone(), &mut current, &mut best);
    best.len()
}

pub fn clique_number(g: &Graph) -> usize {
    clique_number_within(g, &g.vertex_set())
}

/// A maximum clique in ascending vertex order; among all maximum cliques,
/// the lexicographically least one.
pub fn max_clique_exact(g: &Graph) -> Vec<usize> {
    max_clique_within(g, &g.vertex_set())
}

pub fn max_clique_within(g: &Graph, within: &VertexSet) -> Vec<usize> {
    let omega = clique_number_within(g, within);
    let mut clique = Vec::with_capacity(omega);
    let mut allowed = within.clone();
    while clique.len() < omega {
        let pick = allowed
            .iter()
            .find(|&v| {
                let mut rest = allowed.intersection(g.neighbours(v));
                for u in 0..=v {
                    rest.remove(u);
                }
                clique_number_within(g, &rest) + clique.len() + 1 >= omega
            })
            .expect("a completion exists while below omega");
        clique.push(pick);
        allowed.intersect_with(g.neighbours(pick));
        for u in 0..=pick {
            allowed.remove(u);
        }
    }
    clique
}

/// Greedy sequential colouring of `cand`; returns vertices in colour-class
/// order with the running colour count, used as an upper bound.
fn colour_sort(g: &Graph, cand: &VertexSet) -> (Vec<usize>, Vec<usize>) {
    let mut order = Vec::with_capacity(cand.len());
    let mut bounds = Vec::with_capacity(cand.len());
    let mut uncoloured = cand.clone();
    let mut colour = 0;
    while !uncoloured.is_empty() {
        colour += 1;
        let mut available = uncoloured.clone();
        while let Some(v) = available.first() {
            available.remove(v);
            available.difference_with(g.neighbours(v));
            uncoloured.remove(v);
            order.push(v);
            bounds.push(colour);
        }
    }
    (order, bounds)
}

fn expand(g: &Graph, mut cand: VertexSet, current: &mut Vec<usize>, best: &mut Vec<usize>) {
    let (order, bounds) = colour_sort(g, &cand);
    for idx in (0..order.len()).rev() {
        if current.len() + bounds[idx] <= best.len() {
            return;
        }
        let v = order[idx];
        current.push(v);
        let next = cand.intersection(g.neighbours(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand(g, next, current, best);
        }
        current.pop();
        cand.remove(v);
    }
}

/// All maximum cliques (ascending vertex order, lexicographically sorted),
/// stopping after `limit` of them.
pub fn maximum_cliques(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let omega = clique_number(g);
    let mut out = Vec::new();
    if omega == 0 {
        return out;
    }
    let mut current = Vec::with_capacity(omega);
    enumerate(g, g.vertex_set(), omega, &mut current, &mut out, limit);
    out
}

fn enumerate(
    g: &Graph,
    cand: VertexSet,
    omega: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
    limit: usize,
) {
    if current.len() == omega {
        out.push(current.clone());
        return;
    }
    for v in cand.iter() {
        if out.len() >= limit {
            return;
        }
        let mut next = cand.intersection(g.neighbours(v));
        for u in 0..=v {
            next.remove(u);
        }
        if current.len() + 1 + next.len() < omega {
            continue;
        }
        current.push(v);
        enumerate(g, next, omega, current, out, limit);
        current.pop();
    }
}
