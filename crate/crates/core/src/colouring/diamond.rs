//! Colouring (P3+P2, diamond)-free graphs from the clique-anchored partition.
//!
//! Bounds: `w + 2` at `w = 2`, `w + 3` at `w = 3`, `w + 1` at `w = 4`, and
//! `w` beyond, where the class is perfect and the exact oracle is used.

use super::blocks::disjoint_cliques_within;
use super::{chromatic_number_exact, ensure_proper, Branch, CaseTrace, Colouring};
use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{build_partition, clique, max_clique_exact, partition_unchecked, WagonPartition};
use crate::recognition::{require_class, ClassId};

/// Colours `[set]` (a disjoint union of cliques) from `palette`.
fn paint(g: &Graph, set: &VertexSet, palette: &[u32], name: &str, out: &mut [u32]) -> Result<()> {
    for (v, k) in disjoint_cliques_within(g, set)? {
        let Some(&c) = palette.get(k as usize - 1) else {
            return Err(Error::Invariant(format!(
                "[{name}] needs more than the {} colours {palette:?}",
                palette.len()
            )));
        };
        out[v] = c;
    }
    Ok(())
}

fn clique_colours(p: &WagonPartition, n: usize) -> Vec<u32> {
    let mut out = vec![0; n];
    for (pos, &v) in p.clique.iter().enumerate() {
        out[v] = pos as u32 + 1;
    }
    out
}

fn require_empty(p: &WagonPartition, w: usize) -> Result<()> {
    if let Some((pos, s)) = p.missing.iter().enumerate().find(|(_, s)| !s.is_empty()) {
        return Err(Error::Invariant(format!("I{} is nonempty at clique number {w}: {:?}", pos + 1, s.to_vec())));
    }
    if let Some((&(i, j), s)) = p.pairs.iter().find(|(&(_, j), s)| j >= 4 && !s.is_empty()) {
        return Err(Error::Invariant(format!("C{i},{j} is nonempty: {:?}", s.to_vec())));
    }
    Ok(())
}

fn trace(p: &WagonPartition, branch: Branch, swapped: bool, detail: String) -> CaseTrace {
    CaseTrace { omega: p.omega(), branch, clique: p.clique.clone(), swapped, detail }
}

fn omega_two(g: &Graph, p: &WagonPartition) -> Result<(Vec<u32>, CaseTrace)> {
    let mut col = clique_colours(p, g.n());
    for a in 1..=2 {
        for v in p.i(a).iter() {
            col[v] = a as u32;
        }
    }
    paint(g, p.c(1, 2), &[3, 4], "C12", &mut col)?;
    Ok((col, trace(p, Branch::OmegaTwo, false, String::new())))
}

fn omega_three(g: &Graph, p: &WagonPartition) -> Result<(Vec<u32>, CaseTrace)> {
    require_empty(p, 3)?;
    let mut col = clique_colours(p, g.n());
    // a triangle in [C12] forces C13 and C23 empty, leaving colour 4 free
    let (palette12, detail): (&[u32], _) = if clique::clique_number_within(g, p.c(1, 2)) >= 3 {
        (&[1, 2, 4], "[C12] contains a triangle; C12 takes 1, 2, 4".to_string())
    } else {
        (&[1, 2], String::new())
    };
    paint(g, p.c(1, 2), palette12, "C12", &mut col)?;
    paint(g, p.c(2, 3), &[3, 4], "C23", &mut col)?;
    paint(g, p.c(1, 3), &[5, 6], "C13", &mut col)?;
    Ok((col, trace(p, Branch::OmegaThree, false, detail)))
}

/// Distinct colours from `1..=4` for each clique component of `C_12`, each
/// avoiding the colour of its (at most one) neighbour in `A`.
fn match_components(g: &Graph, p: &WagonPartition, col: &mut [u32]) -> Result<()> {
    fn place(vs: &[usize], forbidden: &[u32], used: u32, pick: &mut Vec<u32>) -> bool {
        let k = pick.len();
        if k == vs.len() {
            return true;
        }
        for c in 1..=4u32 {
            if used >> c & 1 == 0 && forbidden[k] >> c & 1 == 0 {
                pick.push(c);
                if place(vs, forbidden, used | 1 << c, pick) {
                    return true;
                }
                pick.pop();
            }
        }
        false
    }
    for comp in g.components_within(p.c(1, 2)) {
        let vs = comp.to_vec();
        let forbidden: Vec<u32> = vs
            .iter()
            .map(|&v| (1..=4).filter(|&k| g.adjacent(v, p.vertex(k))).fold(0, |m, k| m | 1 << k))
            .collect();
        let mut pick = Vec::with_capacity(vs.len());
        if !place(&vs, &forbidden, 0, &mut pick) {
            return Err(Error::Invariant(format!("no 4-colour matching for component {vs:?} of [C12]")));
        }
        for (v, c) in vs.into_iter().zip(pick) {
            col[v] = c;
        }
    }
    Ok(())
}

fn omega_four(g: &Graph, p: &WagonPartition, swapped: bool) -> Result<(Vec<u32>, CaseTrace)> {
    require_empty(p, 4)?;
    let (c12, c13, c23) = (p.c(1, 2), p.c(1, 3), p.c(2, 3));
    if c23.is_empty() && !c13.is_empty() {
        // relabel 1 <-> 2: the old C13 becomes C23
        let mut a = p.clique.clone();
        a.swap(0, 1);
        return omega_four(g, &partition_unchecked(g, &a), !swapped);
    }
    let mut col = clique_colours(p, g.n());
    let cross = c23.iter().any(|v| !g.neighbours(v).is_disjoint(c13));
    let branch;
    let mut detail = format!("|C12|={} |C13|={} |C23|={}", c12.len(), c13.len(), c23.len());
    if cross {
        branch = Branch::CrossEdges;
        paint(g, c12, &[1, 2, 5], "C12", &mut col)?;
        paint(g, c13, &[3], "C13", &mut col)?;
        paint(g, c23, &[4], "C23", &mut col)?;
    } else if !c13.is_empty() {
        branch = Branch::BothIndependent;
        paint(g, c12, &[1, 2, 5], "C12", &mut col)?;
        paint(g, c13, &[3], "C13", &mut col)?;
        paint(g, c23, &[3], "C23", &mut col)?;
    } else if c23.is_empty() {
        branch = Branch::OnlyC12;
        match_components(g, p, &mut col)?;
    } else {
        let comps = g.components_within(c23);
        detail += &format!(" components([C23])={}", comps.len());
        let w23 = comps.iter().map(VertexSet::len).max().unwrap_or(0);
        if comps.len() == 1 && w23 == 1 {
            branch = Branch::SingletonComponent;
            paint(g, c23, &[3], "C23", &mut col)?;
            paint(g, c12, &[1, 2, 5], "C12", &mut col)?;
        } else if comps.len() == 1 {
            branch = Branch::SingleCliqueComponent;
            detail += &format!(" component=K{w23}");
            paint(g, c23, &[2, 3, 4], "C23", &mut col)?;
            paint(g, c12, &[1], "C12", &mut col)?;
        } else if w23 >= 3 {
            // an edge in [C23] forces C12 independent, freeing colour 2
            branch = Branch::ManyComponents;
            detail += " [C23] contains a triangle; C23 takes 2, 3, 4";
            paint(g, c23, &[2, 3, 4], "C23", &mut col)?;
            paint(g, c12, &[1], "C12", &mut col)?;
        } else {
            branch = Branch::ManyComponents;
            paint(g, c23, &[3, 4], "C23", &mut col)?;
            paint(g, c12, &[1, 2], "C12", &mut col)?;
        }
    }
    detail = format!("cross_edges={} {detail}", if cross { "yes" } else { "no" });
    Ok((col, trace(p, branch, swapped, detail)))
}

fn run(g: &Graph, given: Option<&[usize]>) -> Result<(Colouring, CaseTrace)> {
    require_class(g, ClassId::P3P2DiamondFree)?;
    let w = clique::clique_number(g);
    if w < 2 {
        return Err(Error::OmegaTooSmall { omega: w, min: 2 });
    }
    let a = match given {
        Some(a) => a.to_vec(),
        None => max_clique_exact(g),
    };
    from_partition(g, &build_partition(g, &a)?)
}

/// Colours from an already built partition; class membership is assumed.
pub(crate) fn from_partition(g: &Graph, p: &WagonPartition) -> Result<(Colouring, CaseTrace)> {
    let w = p.omega();
    if w < 2 {
        return Err(Error::OmegaTooSmall { omega: w, min: 2 });
    }
    let (assignment, trace) = match w {
        2 => omega_two(g, p)?,
        3 => omega_three(g, p)?,
        4 => omega_four(g, p, false)?,
        _ => {
            let col = chromatic_number_exact(g)?;
            let detail = format!("exact colouring with {} colours", col.colours_used);
            (col.assignment, trace(p, Branch::Perfect, false, detail))
        }
    };
    let colouring = Colouring::new(assignment);
    ensure_proper(g, &colouring, &format!("(P3+P2, diamond)-free colouring, {}", trace.branch))?;
    Ok((colouring, trace))
}

pub fn colour_p3p2_diamond(g: &Graph) -> Result<(Colouring, CaseTrace)> {
    run(g, None)
}

/// As [`colour_p3p2_diamond`], anchored at the given ordered maximum clique.
pub fn colour_p3p2_diamond_with_clique(g: &Graph, clique: &[usize]) -> Result<(Colouring, CaseTrace)> {
    run(g, Some(clique))
}
