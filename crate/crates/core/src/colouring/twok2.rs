//! Colouring (2K2, diamond)-free graphs: `w + 1` colours at `w = 2`,
//! exactly `w` colours for `w >= 3`.

use super::{ensure_proper, Branch, CaseTrace, Colouring};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::{build_partition, clique, max_clique_exact, WagonPartition};
use crate::recognition::{require_class, ClassId};

/// Proper 2-colouring if `g` is bipartite.
fn two_colouring(g: &Graph) -> Option<Vec<u32>> {
    let mut col = vec![0u32; g.n()];
    for s in 0..g.n() {
        if col[s] != 0 {
            continue;
        }
        col[s] = 1;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in g.neighbours(v).iter() {
                if col[u] == 0 {
                    col[u] = 3 - col[v];
                    stack.push(u);
                } else if col[u] == col[v] {
                    return None;
                }
            }
        }
    }
    Some(col)
}

fn trace(p: &WagonPartition, branch: Branch, detail: &str) -> CaseTrace {
    CaseTrace { omega: p.omega(), branch, clique: p.clique.clone(), swapped: false, detail: detail.into() }
}

fn run(g: &Graph, given: Option<&[usize]>) -> Result<(Colouring, CaseTrace)> {
    require_class(g, ClassId::TwoK2DiamondFree)?;
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
    let mut col = vec![0u32; g.n()];
    for (pos, &v) in p.clique.iter().enumerate() {
        col[v] = pos as u32 + 1;
    }
    let t;
    if w == 2 {
        if let Some(two) = two_colouring(g) {
            let colouring = Colouring::new(two);
            return Ok((colouring, trace(p, Branch::Bipartite, "bipartite")));
        }
        for a in 1..=2 {
            for v in p.i(a).iter() {
                col[v] = a as u32;
            }
        }
        for v in p.c(1, 2).iter() {
            col[v] = 3;
        }
        t = trace(p, Branch::OmegaTwo, "not bipartite");
    } else {
        if let Some(v) = p.missing.iter().find_map(|s| s.first()) {
            return Err(Error::Invariant(format!("vertex {v} lies in some I_a at clique number {w}")));
        }
        for (&(i, j), s) in &p.pairs {
            let c = match (i, j) {
                (1, 2) => 1,
                (1, 3) => 3,
                (2, 3) => 2,
                _ if s.is_empty() => continue,
                _ => return Err(Error::Invariant(format!("C{i},{j} is nonempty: {:?}", s.to_vec()))),
            };
            for v in s.iter() {
                col[v] = c;
            }
        }
        t = trace(p, Branch::Anchored, "");
    }
    let colouring = Colouring::new(col);
    ensure_proper(g, &colouring, &format!("(2K2, diamond)-free colouring, {}", t.branch))?;
    Ok((colouring, t))
}

pub fn colour_2k2_diamond(g: &Graph) -> Result<(Colouring, CaseTrace)> {
    run(g, None)
}

/// As [`colour_2k2_diamond`], anchored at the given ordered maximum clique.
pub fn colour_2k2_diamond_with_clique(g: &Graph, clique: &[usize]) -> Result<(Colouring, CaseTrace)> {
    run(g, Some(clique))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colouring::verify_colouring;
    use crate::graph::{fixtures::fig5_blowup, Fixture};

    #[test]
    fn c5_uses_three() {
        let (col, t) = colour_2k2_diamond(&Graph::cycle(5)).unwrap();
        assert_eq!(col.colours_used, 3);
        assert_eq!(t.branch, Branch::OmegaTwo);
    }

    #[test]
    fn c4_uses_two() {
        let (col, t) = colour_2k2_diamond(&Graph::cycle(4)).unwrap();
        assert_eq!(col.colours_used, 2);
        assert_eq!(t.branch, Branch::Bipartite);
    }

    #[test]
    fn fig5_and_blowups_use_three() {
        let g = Fixture::Fig5Base.build();
        let (col, t) = colour_2k2_diamond(&g).unwrap();
        assert_eq!((col.colours_used, t.branch), (3, Branch::Anchored));
        let b = fig5_blowup([3, 3, 3]).unwrap();
        let (col, _) = colour_2k2_diamond(&b).unwrap();
        assert_eq!(col.colours_used, 3);
        assert_eq!(verify_colouring(&b, &col).unwrap(), None);
    }

    #[test]
    fn complete_graphs() {
        for w in 2..=6 {
            let (col, _) = colour_2k2_diamond(&Graph::complete(w)).unwrap();
            assert_eq!(col.colours_used, w);
        }
    }
}
