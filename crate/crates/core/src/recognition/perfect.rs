//! Small-scale perfectness checks.
//!
//! Two independent routes: a sweep over every induced subgraph comparing
//! chromatic and clique numbers, and a search for odd holes and odd
//! antiholes. They must agree wherever both apply.

use serde::Serialize;

use super::{find_induced, PatternId, Witness};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub const SUBGRAPH_SWEEP_LIMIT: usize = 12;
pub const HOLE_SEARCH_LIMIT: usize = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PerfectMode {
    SubgraphSweep,
    HoleSearch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerfectVerdict {
    pub perfect: bool,
    pub witness: Option<Witness>,
}

pub fn is_perfect_small(g: &Graph, mode: PerfectMode) -> Result<PerfectVerdict> {
    match mode {
        PerfectMode::SubgraphSweep => {
            if g.n() > SUBGRAPH_SWEEP_LIMIT {
                return Err(Error::Capability {
                    operation: "subgraph-sweep perfectness",
                    limit: SUBGRAPH_SWEEP_LIMIT,
                    n: g.n(),
                });
            }
            subgraph_sweep(g)
        }
        PerfectMode::HoleSearch => {
            if g.n() > HOLE_SEARCH_LIMIT {
                return Err(Error::Capability {
                    operation: "hole-search perfectness",
                    limit: HOLE_SEARCH_LIMIT,
                    n: g.n(),
                });
            }
            Ok(hole_search(g))
        }
    }
}

/// Shortest odd hole or odd antihole; holes first at equal length.
fn hole_search(g: &Graph) -> PerfectVerdict {
    for k in (5..=g.n()).step_by(2) {
        let mut patterns = vec![PatternId::Hole(k)];
        if k > 5 {
            patterns.push(PatternId::Antihole(k));
        }
        for p in patterns {
            if let Some(w) = find_induced(g, p) {
                return PerfectVerdict {
                    perfect: false,
                    witness: Some(w),
                };
            }
        }
    }
    PerfectVerdict {
        perfect: true,
        witness: None,
    }
}

/// Computes chi and omega of every induced subgraph by dynamic programming
/// over vertex masks, then reports the smallest subset with chi > omega.
/// A smallest such subset is minimally imperfect, hence an odd hole or an
/// odd antihole, and is returned in cyclic order.
fn subgraph_sweep(g: &Graph) -> Result<PerfectVerdict> {
    let n = g.n();
    let size = 1usize << n;
    let nbr: Vec<usize> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0usize, |m, u| m | 1 << u))
        .collect();

    let mut independent = vec![true; size];
    let mut omega = vec![0u8; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        independent[mask] = independent[rest] && nbr[v] & rest == 0;
        omega[mask] = omega[rest].max(1 + omega[mask & nbr[v]]);
    }

    let mut chi = vec![0u8; size];
    for mask in 1..size {
        let v = mask.trailing_zeros() as usize;
        // colour class containing v: v plus an independent subset of its
        // non-neighbours inside mask
        let pool = mask & !nbr[v] & !(1 << v);
        let mut best = u8::MAX;
        let mut sub = pool;
        loop {
            if independent[sub] {
                best = best.min(1 + chi[mask & !(sub | 1 << v)]);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & pool;
        }
        chi[mask] = best;
    }

    let mut masks: Vec<usize> = (1..size).filter(|&m| chi[m] > omega[m]).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    match masks.first() {
        None => Ok(PerfectVerdict {
            perfect: true,
            witness: None,
        }),
        Some(&m) => {
            let vs: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            Ok(PerfectVerdict {
                perfect: false,
                witness: Some(cyclic_witness(g, &vs)?),
            })
        }
    }
}

fn cyclic_witness(g: &Graph, vs: &[usize]) -> Result<Witness> {
    let h = g.induced_subgraph(vs)?;
    let k = vs.len();
    let (cycle_graph, pattern) = if (0..k).all(|v| h.degree(v) == 2) {
        (h, PatternId::Hole(k))
    } else {
        (h.complement(), PatternId::Antihole(k))
    };
    if k < 5 || k.is_multiple_of(2) || (0..k).any(|v| cycle_graph.degree(v) != 2) {
        return Err(Error::Invariant(format!(
            "minimal imperfect subgraph on {vs:?} is neither an odd hole nor an odd antihole"
        )));
    }
    let mut order = vec![0usize];
    let mut prev = usize::MAX;
    let mut cur = 0;
    while order.len() < k {
        let next = cycle_graph
            .neighbours(cur)
            .iter()
            .find(|&x| x != prev && !order.contains(&x))
            .ok_or_else(|| Error::Invariant("cycle walk failed".into()))?;
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order[1] > order[k - 1] {
        order[1..].reverse();
    }
    let witness = Witness {
        pattern,
        vertices: order.into_iter().map(|i| vs[i]).collect(),
    };
    debug_assert!(witness.validates(g));
    Ok(witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Fixture;

    #[test]
    fn c5_is_imperfect_in_both_modes() {
        let g = Graph::cycle(5);
        for mode in [PerfectMode::SubgraphSweep, PerfectMode::HoleSearch] {
            let v = is_perfect_small(&g, mode).unwrap();
            assert!(!v.perfect);
            let w = v.witness.unwrap();
            assert_eq!(w.pattern, PatternId::Hole(5));
            assert_eq!(w.vertices, vec![0, 1, 2, 3, 4]);
        }
    }

    #[test]
    fn k4_is_perfect() {
        for mode in [PerfectMode::SubgraphSweep, PerfectMode::HoleSearch] {
            assert!(is_perfect_small(&Graph::complete(4), mode).unwrap().perfect);
        }
    }

    #[test]
    fn fig5_base_witness_is_outer_cycle() {
        let g = Fixture::Fig5Base.build();
        for mode in [PerfectMode::SubgraphSweep, PerfectMode::HoleSearch] {
            let v = is_perfect_small(&g, mode).unwrap();
            assert!(!v.perfect);
            assert_eq!(v.witness.unwrap().vertices, vec![0, 1, 2, 3, 4]);
        }
    }

    #[test]
    fn antihole_detected() {
        let g = Graph::cycle(7).complement();
        for mode in [PerfectMode::SubgraphSweep, PerfectMode::HoleSearch] {
            let v = is_perfect_small(&g, mode).unwrap();
            let w = v.witness.unwrap();
            assert_eq!(w.pattern, PatternId::Antihole(7));
            assert!(w.validates(&g));
        }
    }

    #[test]
    fn limits_are_enforced() {
        let big = Graph::empty(13);
        assert!(matches!(
            is_perfect_small(&big, PerfectMode::SubgraphSweep),
            Err(Error::Capability { limit: 12, .. })
        ));
        assert!(is_perfect_small(&big, PerfectMode::HoleSearch).unwrap().perfect);
        assert!(is_perfect_small(&Graph::empty(65), PerfectMode::HoleSearch).is_err());
    }
}
