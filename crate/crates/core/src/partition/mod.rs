//! Vertex partition anchored at an ordered maximum clique `A = (1, .., w)`.
//!
//! Pair sets `C_ij` are filled in lexicographic order of `(i, j)`: a vertex
//! lands in the first pair of clique vertices it misses both of. Every other
//! vertex outside `A` misses exactly one clique vertex `a` and goes to `I_a`.
//! Clique vertices are referred to by their 1-based position in `A`.

mod claims;
pub mod clique;

use std::collections::BTreeMap;
use std::fmt;
use std::fmt::Write as _;

use serde::Serialize;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use claims::{check_claims, ClaimCheck, ClaimReport};
pub use clique::{clique_number, clique_number_within, max_clique_exact, maximum_cliques};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WagonPartition {
    /// `A`; position `p` carries label `p + 1`.
    pub clique: Vec<usize>,
    /// `C_ij` keyed by 1-based labels `(i, j)`, `i < j`.
    pub pairs: BTreeMap<(usize, usize), VertexSet>,
    /// `I_a` indexed by `a - 1`.
    pub missing: Vec<VertexSet>,
    empty: VertexSet,
}

impl WagonPartition {
    pub fn omega(&self) -> usize {
        self.clique.len()
    }

    /// Graph vertex with label `label` (1-based).
    pub fn vertex(&self, label: usize) -> usize {
        self.clique[label - 1]
    }

    /// `C_ij`; empty when `(i, j)` is not a pair of clique labels.
    pub fn c(&self, i: usize, j: usize) -> &VertexSet {
        self.pairs.get(&(i, j)).unwrap_or(&self.empty)
    }

    /// `I_a` for label `a` (1-based).
    pub fn i(&self, a: usize) -> &VertexSet {
        &self.missing[a - 1]
    }

    fn capacity(&self) -> usize {
        self.empty.capacity()
    }

    /// Union of all pair sets.
    pub fn c_union(&self) -> VertexSet {
        let mut out = VertexSet::new(self.capacity());
        for s in self.pairs.values() {
            out.union_with(s);
        }
        out
    }

    /// Structured text: one line per nonempty set.
    pub fn to_text(&self, g: &Graph) -> String {
        let names = |s: &VertexSet| s.iter().map(|v| g.label(v)).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let a: Vec<String> = self.clique.iter().map(|&v| g.label(v)).collect();
        writeln!(out, "A: {}", a.join(" ")).unwrap();
        for (&(i, j), s) in &self.pairs {
            if !s.is_empty() {
                writeln!(out, "C{i},{j}: {}", names(s)).unwrap();
            }
        }
        for (p, s) in self.missing.iter().enumerate() {
            if !s.is_empty() {
                writeln!(out, "I{}: {}", p + 1, names(s)).unwrap();
            }
        }
        out
    }

    pub fn to_record(&self) -> PartitionRecord {
        PartitionRecord {
            clique: self.clique.clone(),
            pairs: self
                .pairs
                .iter()
                .filter(|(_, s)| !s.is_empty())
                .map(|(&(i, j), s)| PairRecord { i, j, vertices: s.to_vec() })
                .collect(),
            missing: self.missing.iter().map(VertexSet::to_vec).collect(),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PairRecord {
    pub i: usize,
    pub j: usize,
    pub vertices: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionRecord {
    pub clique: Vec<usize>,
    pub pairs: Vec<PairRecord>,
    pub missing: Vec<Vec<usize>>,
}

/// Builds the partition for the ordered clique `a`, which must be a
/// maximum clique of `g`.
pub fn build_partition(g: &Graph, a: &[usize]) -> Result<WagonPartition> {
    for &v in a {
        g.check_vertex(v)?;
    }
    if !g.is_clique(a) {
        return Err(Error::NotClique(a.to_vec()));
    }
    let omega = clique_number(g);
    if a.len() != omega {
        return Err(Error::NotMaximum { given: a.len(), omega });
    }
    Ok(partition_unchecked(g, a))
}

pub(crate) fn partition_unchecked(g: &Graph, a: &[usize]) -> WagonPartition {
    let n = g.n();
    let w = a.len();
    let mut rest = g.vertex_set();
    for &v in a {
        rest.remove(v);
    }
    let mut pairs = BTreeMap::new();
    for i in 1..=w {
        for j in i + 1..=w {
            let mut set = rest.clone();
            set.difference_with(g.neighbours(a[i - 1]));
            set.difference_with(g.neighbours(a[j - 1]));
            rest.difference_with(&set);
            pairs.insert((i, j), set);
        }
    }
    let mut missing = vec![VertexSet::new(n); w];
    for v in rest.iter() {
        let p = a
            .iter()
            .position(|&x| !g.adjacent(v, x))
            .expect("a vertex outside a maximum clique misses some clique vertex");
        missing[p].insert(v);
    }
    WagonPartition {
        clique: a.to_vec(),
        pairs,
        missing,
        empty: VertexSet::new(n),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ViolationKind {
    NotClique,
    NotMaximum,
    /// Vertex appears in more than one part (or twice in `A`).
    Overlap,
    /// Vertex appears in no part.
    Uncovered,
    /// `C_ij` member that does not miss `i` and `j` while seeing every
    /// `k < j`, `k != i`.
    Anchor { i: usize, j: usize },
    /// `I_a` member that is not adjacent to exactly `A - {a}`.
    Missing { a: usize },
}

/// A broken partition invariant, with the vertices that show it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PartitionViolation {
    pub kind: ViolationKind,
    pub witness: Vec<usize>,
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            ViolationKind::NotClique => write!(f, "A is not a clique: {:?}", self.witness),
            ViolationKind::NotMaximum => write!(f, "A is not a maximum clique"),
            ViolationKind::Overlap => write!(f, "vertex {:?} lies in two parts", self.witness),
            ViolationKind::Uncovered => write!(f, "vertex {:?} lies in no part", self.witness),
            ViolationKind::Anchor { i, j } => {
                write!(f, "C{i},{j} member breaks its anchor rule: {:?}", self.witness)
            }
            ViolationKind::Missing { a } => {
                write!(f, "I{a} member is not adjacent to exactly A - {{{a}}}: {:?}", self.witness)
            }
        }
    }
}

/// Checks that `p` is a genuine partition of `V(g)` with the anchor rules.
/// The witness for an anchor failure is `(v, clique vertex)` where the
/// adjacency is wrong.
pub fn validate_partition(g: &Graph, p: &WagonPartition) -> std::result::Result<(), PartitionViolation> {
    let n = g.n();
    let fail = |kind, witness| Err(PartitionViolation { kind, witness });
    if p.clique.iter().any(|&v| v >= n) || !g.is_clique(&p.clique) {
        return fail(ViolationKind::NotClique, p.clique.clone());
    }
    if p.clique.len() != clique_number(g) {
        return fail(ViolationKind::NotMaximum, p.clique.clone());
    }
    let mut seen = vec![0usize; n];
    for &v in &p.clique {
        seen[v] += 1;
    }
    for s in p.pairs.values().chain(&p.missing) {
        for v in s.iter() {
            seen[v] += 1;
        }
    }
    if let Some(v) = (0..n).find(|&v| seen[v] > 1) {
        return fail(ViolationKind::Overlap, vec![v]);
    }
    if let Some(v) = (0..n).find(|&v| seen[v] == 0) {
        return fail(ViolationKind::Uncovered, vec![v]);
    }
    let w = p.omega();
    for (&(i, j), s) in &p.pairs {
        for v in s.iter() {
            let bad = (1..=w).find(|&k| {
                let want_edge = k < j && k != i;
                let must_miss = k == i || k == j;
                let adj = g.adjacent(v, p.vertex(k));
                (want_edge && !adj) || (must_miss && adj)
            });
            if let Some(k) = bad {
                return fail(ViolationKind::Anchor { i, j }, vec![v, p.vertex(k)]);
            }
        }
    }
    for (pos, s) in p.missing.iter().enumerate() {
        for v in s.iter() {
            let bad = (1..=w).find(|&k| g.adjacent(v, p.vertex(k)) == (k == pos + 1));
            if let Some(k) = bad {
                return fail(ViolationKind::Missing { a: pos + 1 }, vec![v, p.vertex(k)]);
            }
        }
    }
    Ok(())
}
