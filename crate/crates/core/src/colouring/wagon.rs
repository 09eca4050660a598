//! Clique-anchored colouring for (P3+P2)-free and (P4+P2)-free graphs.
//!
//! `A` takes colours `1..=w`, every `I_a` takes the colour of `a`, and each
//! nonempty `C_ij` (in lexicographic order) is coloured optimally on a
//! fresh block of colours drawn from a counter starting at `w + 1`.

use serde::Serialize;

use super::blocks::{cograph_within, disjoint_cliques_within};
use super::{ensure_proper, Colouring};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{build_partition, max_clique_exact, WagonPartition};
use crate::recognition::{require_class, ClassId};

/// Fresh colours `first..first + size` spent on `C_ij`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairPalette {
    pub i: usize,
    pub j: usize,
    pub first: u32,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WagonColouring {
    pub colouring: Colouring,
    pub omega: usize,
    pub clique: Vec<usize>,
    pub palettes: Vec<PairPalette>,
    /// Total fresh colours, the sum of palette sizes.
    pub fresh_colours: usize,
}

type BlockColourer = fn(&Graph, &VertexSet) -> Result<Vec<(usize, u32)>>;

fn colour_from_partition(g: &Graph, p: &WagonPartition, block: BlockColourer) -> Result<WagonColouring> {
    let w = p.omega();
    let mut assignment = vec![0u32; g.n()];
    for (pos, &v) in p.clique.iter().enumerate() {
        assignment[v] = pos as u32 + 1;
    }
    let mut next = w as u32 + 1;
    let mut palettes = Vec::new();
    for (&(i, j), set) in &p.pairs {
        if set.is_empty() {
            continue;
        }
        let local = block(g, set)?;
        let size = local.iter().map(|&(_, c)| c).max().unwrap_or(0);
        for (v, c) in local {
            assignment[v] = next + c - 1;
        }
        palettes.push(PairPalette { i, j, first: next, size: size as usize });
        next += size;
    }
    for (pos, set) in p.missing.iter().enumerate() {
        if let Some((u, v)) = g.edge_within(set) {
            return Err(Error::Invariant(format!("I{} contains the edge ({u}, {v})", pos + 1)));
        }
        for v in set.iter() {
            assignment[v] = pos as u32 + 1;
        }
    }
    let colouring = Colouring::new(assignment);
    ensure_proper(g, &colouring, "clique-anchored colouring")?;
    Ok(WagonColouring {
        colouring,
        omega: w,
        clique: p.clique.clone(),
        fresh_colours: palettes.iter().map(|p| p.size).sum(),
        palettes,
    })
}

fn run(g: &Graph, class: ClassId, clique: Option<&[usize]>, block: BlockColourer) -> Result<WagonColouring> {
    require_class(g, class)?;
    if g.n() == 0 {
        return Ok(WagonColouring {
            colouring: Colouring::new(Vec::new()),
            omega: 0,
            clique: Vec::new(),
            palettes: Vec::new(),
            fresh_colours: 0,
        });
    }
    let a = match clique {
        Some(a) => a.to_vec(),
        None => max_clique_exact(g),
    };
    let p = build_partition(g, &a)?;
    colour_from_partition(g, &p, block)
}

pub(crate) fn p3p2_from_partition(g: &Graph, p: &WagonPartition) -> Result<WagonColouring> {
    colour_from_partition(g, p, disjoint_cliques_within)
}

pub(crate) fn p4p2_from_partition(g: &Graph, p: &WagonPartition) -> Result<WagonColouring> {
    colour_from_partition(g, p, cograph_within)
}

pub fn colour_p3p2(g: &Graph) -> Result<WagonColouring> {
    run(g, ClassId::P3P2Free, None, disjoint_cliques_within)
}

/// As [`colour_p3p2`], anchored at the given ordered maximum clique.
pub fn colour_p3p2_with_clique(g: &Graph, clique: &[usize]) -> Result<WagonColouring> {
    run(g, ClassId::P3P2Free, Some(clique), disjoint_cliques_within)
}

pub fn colour_p4p2(g: &Graph) -> Result<WagonColouring> {
    run(g, ClassId::P4P2Free, None, cograph_within)
}

pub fn colour_p4p2_with_clique(g: &Graph, clique: &[usize]) -> Result<WagonColouring> {
    run(g, ClassId::P4P2Free, Some(clique), cograph_within)
}
