//! Structural claims about the partition, checked as predicates.
//!
//! Numbering follows the colouring arguments they support:
//!
//! | #  | statement                                                        | hypothesis                          |
//! |----|------------------------------------------------------------------|-------------------------------------|
//! | 1  | each `[C_ij]` is P3-free                                         | graph is (P3+P2)-free               |
//! | 2  | each `I_a` is independent                                        | always                              |
//! | 3  | `w([C_ij]) <= w - (j - 2)`                                       | always                              |
//! | 4  | C5-free implies perfect                                          | diamond class, C5-free, n <= limit  |
//! | 5  | `C_ij` empty for `j >= 4`                                        | diamond class                       |
//! | 6  | `I_a` empty if `w >= 3`, independent if `w = 2`                  | diamond class, `w >= 2`             |
//! | 7  | `w([C_12]) <= w - 1`                                             | diamond, `w >= 3`, `C_13 u C_23 != {}` |
//! | 8  | no edges `C_13`-`(A - {2})` nor `C_23`-`(A - {1})`               | diamond class, `w >= 3`             |
//! | 9  | ends of a `C_23`-`C_13` edge are isolated in their own set       | diamond, `w = 4`, such an edge      |
//! | 10 | `C_23` and `C_13` independent                                    | as 9                                |
//! | 11 | a nonempty `C_23` forces `C_13` independent, and vice versa      | diamond, `w = 4`, no such edge, one nonempty |
//! | 12 | a `C_12` vertex sees at most one clique vertex                   | diamond class, `w >= 2`             |

use serde::Serialize;

use super::{clique, validate_partition, PartitionViolation, WagonPartition};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::recognition::{find_induced, is_perfect_small, ClassId, PatternId, PerfectMode, HOLE_SEARCH_LIMIT};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimReport {
    pub claim: u8,
    pub applicable: bool,
    pub holds: bool,
    /// Offending vertices; present iff applicable and not holding.
    pub witness: Option<Vec<usize>>,
    /// Why a claim was not checked, when that is not obvious.
    pub note: Option<String>,
}

impl ClaimReport {
    fn skip(claim: u8) -> Self {
        ClaimReport { claim, applicable: false, holds: true, witness: None, note: None }
    }

    fn skip_because(claim: u8, note: impl Into<String>) -> Self {
        ClaimReport { note: Some(note.into()), ..Self::skip(claim) }
    }

    fn result(claim: u8, witness: Option<Vec<usize>>) -> Self {
        ClaimReport { claim, applicable: true, holds: witness.is_none(), witness, note: None }
    }

    pub fn failed(&self) -> bool {
        self.applicable && !self.holds
    }
}

/// Partition structure check plus the twelve claim reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub structure: Option<PartitionViolation>,
    pub claims: Vec<ClaimReport>,
}

impl ClaimCheck {
    pub fn all_hold(&self) -> bool {
        self.structure.is_none() && self.claims.iter().all(|c| !c.failed())
    }

    pub fn failures(&self) -> impl Iterator<Item = &ClaimReport> {
        self.claims.iter().filter(|c| c.failed())
    }

    pub fn get(&self, claim: u8) -> &ClaimReport {
        &self.claims[claim as usize - 1]
    }
}

fn first_edge(g: &Graph, s: &VertexSet) -> Option<Vec<usize>> {
    g.edge_within(s).map(|(u, v)| vec![u, v])
}

fn edge_between(g: &Graph, s: &VertexSet, t: &VertexSet) -> Option<(usize, usize)> {
    s.iter().find_map(|u| g.neighbours(u).intersection(t).first().map(|v| (u, v)))
}

/// Induced copy of `p` inside `[s]`, mapped back to graph ids.
fn induced_in(g: &Graph, s: &VertexSet, p: PatternId) -> Option<Vec<usize>> {
    let ids = s.to_vec();
    let h = g.induced_subgraph(&ids).expect("set within range");
    find_induced(&h, p).map(|w| w.vertices.into_iter().map(|i| ids[i]).collect())
}

pub fn check_claims(g: &Graph, p: &WagonPartition, class: ClassId) -> ClaimCheck {
    let structure = validate_partition(g, p).err();
    let w = p.omega();
    let diamond = class.forbids_diamond();
    let p3p2 = class != ClassId::P4P2Free;

    let mut claims = Vec::with_capacity(12);

    // 1
    claims.push(if p3p2 {
        ClaimReport::result(1, p.pairs.values().find_map(|s| induced_in(g, s, PatternId::P3)))
    } else {
        ClaimReport::skip(1)
    });

    // 2
    claims.push(ClaimReport::result(2, p.missing.iter().find_map(|s| first_edge(g, s))));

    // 3
    claims.push(ClaimReport::result(
        3,
        p.pairs.iter().find_map(|(&(_, j), s)| {
            let q = clique::max_clique_within(g, s);
            (q.len() + j > w + 2).then_some(q)
        }),
    ));

    // 4
    claims.push(if !diamond {
        ClaimReport::skip(4)
    } else if g.n() > HOLE_SEARCH_LIMIT {
        ClaimReport::skip_because(4, format!("not checked: n = {} exceeds {HOLE_SEARCH_LIMIT}", g.n()))
    } else if find_induced(g, PatternId::C5).is_some() {
        ClaimReport::skip_because(4, "hypothesis fails: graph contains C5")
    } else {
        let verdict = is_perfect_small(g, PerfectMode::HoleSearch).expect("size checked");
        ClaimReport::result(4, verdict.witness.map(|w| w.vertices))
    });

    // 5
    claims.push(if diamond {
        ClaimReport::result(
            5,
            p.pairs
                .iter()
                .filter(|(&(_, j), _)| j >= 4)
                .find_map(|(_, s)| s.first().map(|v| vec![v])),
        )
    } else {
        ClaimReport::skip(5)
    });

    // 6
    claims.push(if diamond && w >= 3 {
        ClaimReport::result(6, p.missing.iter().find_map(|s| s.first().map(|v| vec![v])))
    } else if diamond && w == 2 {
        ClaimReport::result(6, p.missing.iter().find_map(|s| first_edge(g, s)))
    } else {
        ClaimReport::skip(6)
    });

    let (c12, c13, c23) = (p.c(1, 2), p.c(1, 3), p.c(2, 3));

    // 7
    claims.push(if diamond && w >= 3 && !(c13.is_empty() && c23.is_empty()) {
        let q = clique::max_clique_within(g, c12);
        ClaimReport::result(7, (q.len() + 1 > w).then_some(q))
    } else {
        ClaimReport::skip(7)
    });

    // 8
    claims.push(if diamond && w >= 3 {
        let offending = |set: &VertexSet, allowed_label: usize| {
            set.iter().find_map(|x| {
                (1..=w)
                    .filter(|&k| k != allowed_label)
                    .find(|&k| g.adjacent(x, p.vertex(k)))
                    .map(|k| vec![x, p.vertex(k)])
            })
        };
        ClaimReport::result(8, offending(c13, 2).or_else(|| offending(c23, 1)))
    } else {
        ClaimReport::skip(8)
    });

    let cross = if w >= 3 { edge_between(g, c23, c13) } else { None };

    // 9, 10
    if diamond && w == 4 && cross.is_some() {
        let mut witness = None;
        for a in c23.iter() {
            for b in g.neighbours(a).intersection(c13).iter() {
                let other = g
                    .neighbours(a)
                    .intersection(c23)
                    .first()
                    .or_else(|| g.neighbours(b).intersection(c13).first());
                if let Some(c) = other {
                    witness.get_or_insert(vec![a, b, c]);
                }
            }
        }
        claims.push(ClaimReport::result(9, witness));
        claims.push(ClaimReport::result(10, first_edge(g, c23).or_else(|| first_edge(g, c13))));
    } else {
        claims.push(ClaimReport::skip(9));
        claims.push(ClaimReport::skip(10));
    }

    // 11
    claims.push(if diamond && w == 4 && cross.is_none() && !(c13.is_empty() && c23.is_empty()) {
        let w13 = if c23.is_empty() { None } else { first_edge(g, c13) };
        let w23 = if c13.is_empty() { None } else { first_edge(g, c23) };
        ClaimReport::result(11, w13.or(w23))
    } else {
        ClaimReport::skip(11)
    });

    // 12
    claims.push(if diamond && w >= 2 {
        ClaimReport::result(
            12,
            c12.iter().find_map(|x| {
                let seen: Vec<usize> = p.clique.iter().copied().filter(|&a| g.adjacent(x, a)).collect();
                (seen.len() > 1).then(|| [vec![x], seen].concat())
            }),
        )
    } else {
        ClaimReport::skip(12)
    });

    ClaimCheck { structure, claims }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Fixture;
    use crate::partition::build_partition;

    #[test]
    fn k3_claim5_vacuous() {
        let g = Graph::complete(3);
        let p = build_partition(&g, &[0, 1, 2]).unwrap();
        let check = check_claims(&g, &p, ClassId::P3P2DiamondFree);
        assert!(check.all_hold());
        let c5 = check.get(5);
        assert!(c5.applicable && c5.holds);
    }

    #[test]
    fn mycielski_claims_hold() {
        let g = Fixture::MycielskiGrotzsch.build();
        for a in [[0, 1], [1, 0], [0, 6], [5, 10]] {
            let p = build_partition(&g, &a).unwrap();
            let check = check_claims(&g, &p, ClassId::P3P2DiamondFree);
            assert!(check.all_hold(), "{a:?}: {check:?}");
            // contains C5, so claim 4's hypothesis fails
            assert!(!check.get(4).applicable);
        }
    }

    #[test]
    fn claim1_fails_outside_the_class() {
        // clique {0,1}; path 2-3-4 misses both -> C12 holds a P3
        let g = Graph::from_edges(5, [(0, 1), (2, 3), (3, 4)]).unwrap();
        let p = build_partition(&g, &[0, 1]).unwrap();
        let check = check_claims(&g, &p, ClassId::P3P2Free);
        let c1 = check.get(1);
        assert!(c1.failed());
        assert_eq!(c1.witness.as_deref(), Some(&[2, 3, 4][..]));
    }

    #[test]
    fn corrupted_partition_reported() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)]).unwrap();
        let mut p = build_partition(&g, &[0, 1, 2]).unwrap();
        p.pairs.get_mut(&(1, 2)).unwrap().remove(3);
        p.pairs.get_mut(&(1, 3)).unwrap().insert(3);
        let check = check_claims(&g, &p, ClassId::P3P2DiamondFree);
        assert!(!check.all_hold());
        assert!(check.structure.is_some());
    }

    #[test]
    fn claim8_witness() {
        // K4 on 0..3 plus vertex 4 adjacent to 1 (label 2) and 3 (label 4):
        // 4 misses labels 1 and 3 -> C13, and sees label 4
        let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        edges.extend([(4, 1), (4, 3)]);
        let g = Graph::from_edges(5, edges).unwrap();
        let p = build_partition(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!(p.c(1, 3).to_vec(), vec![4]);
        let check = check_claims(&g, &p, ClassId::P3P2DiamondFree);
        assert_eq!(check.get(8).witness.as_deref(), Some(&[4, 3][..]));
    }
}
