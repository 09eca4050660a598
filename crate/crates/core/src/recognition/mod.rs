//! Induced-subgraph search for small fixed patterns and membership in the
//! hereditary classes defined by forbidding them.
//!
//! Every search scans vertex tuples in lexicographic order, so the witness
//! returned is the lexicographically least tuple realising the pattern under
//! its canonical vertex order (see [`PatternId::edges`]).

mod perfect;

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use perfect::{is_perfect_small, PerfectMode, PerfectVerdict, HOLE_SEARCH_LIMIT, SUBGRAPH_SWEEP_LIMIT};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternId {
    P2,
    P3,
    P4,
    TwoK2,
    P3uP2,
    P4uP2,
    Diamond,
    C5,
    /// Chordless cycle on `k >= 5` vertices.
    Hole(usize),
    /// Complement of a chordless cycle on `k >= 5` vertices.
    Antihole(usize),
}

impl PatternId {
    pub fn hole(k: usize) -> Result<PatternId> {
        if k < 5 {
            return Err(Error::Config(format!("hole length {k} < 5")));
        }
        Ok(PatternId::Hole(k))
    }

    pub fn antihole(k: usize) -> Result<PatternId> {
        if k < 5 {
            return Err(Error::Config(format!("antihole length {k} < 5")));
        }
        Ok(PatternId::Antihole(k))
    }

    pub fn order(self) -> usize {
        match self {
            PatternId::P2 => 2,
            PatternId::P3 => 3,
            PatternId::P4 | PatternId::TwoK2 | PatternId::Diamond => 4,
            PatternId::P3uP2 | PatternId::C5 => 5,
            PatternId::P4uP2 => 6,
            PatternId::Hole(k) | PatternId::Antihole(k) => k,
        }
    }

    /// Edges between tuple positions in the canonical vertex order:
    /// paths run `0-1-2..`, the extra `P2` of a union comes last, the
    /// diamond's missing edge is `{2, 3}`, and cycles run `0-1-..-(k-1)-0`.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let path = |k: usize| (1..k).map(|i| (i - 1, i)).collect::<Vec<_>>();
        let cycle = |k: usize| (0..k).map(|i| (i.min((i + 1) % k), i.max((i + 1) % k))).collect::<Vec<_>>();
        match self {
            PatternId::P2 => path(2),
            PatternId::P3 => path(3),
            PatternId::P4 => path(4),
            PatternId::TwoK2 => vec![(0, 1), (2, 3)],
            PatternId::P3uP2 => vec![(0, 1), (1, 2), (3, 4)],
            PatternId::P4uP2 => vec![(0, 1), (1, 2), (2, 3), (4, 5)],
            PatternId::Diamond => vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)],
            PatternId::C5 => cycle(5),
            PatternId::Hole(k) => cycle(k),
            PatternId::Antihole(k) => {
                let c = cycle(k);
                let mut out = Vec::new();
                for i in 0..k {
                    for j in i + 1..k {
                        if !c.contains(&(i, j)) {
                            out.push((i, j));
                        }
                    }
                }
                out
            }
        }
    }

    /// The pattern as a graph on its canonical positions.
    pub fn graph(self) -> Graph {
        Graph::from_edges(self.order(), self.edges()).expect("pattern edges are valid")
    }

    /// Rotations of a witness are witnesses too, so the least tuple starts
    /// at its least vertex.
    fn is_cyclic(self) -> bool {
        matches!(self, PatternId::C5 | PatternId::Hole(_) | PatternId::Antihole(_))
    }
}

impl fmt::Display for PatternId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PatternId::P2 => f.write_str("P2"),
            PatternId::P3 => f.write_str("P3"),
            PatternId::P4 => f.write_str("P4"),
            PatternId::TwoK2 => f.write_str("2K2"),
            PatternId::P3uP2 => f.write_str("P3+P2"),
            PatternId::P4uP2 => f.write_str("P4+P2"),
            PatternId::Diamond => f.write_str("diamond"),
            PatternId::C5 => f.write_str("C5"),
            PatternId::Hole(k) => write!(f, "hole C{k}"),
            PatternId::Antihole(k) => write!(f, "antihole co-C{k}"),
        }
    }
}

impl Serialize for PatternId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An ordered vertex tuple realising `pattern` as an induced subgraph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub pattern: PatternId,
    pub vertices: Vec<usize>,
}

impl Witness {
    /// True iff the tuple is distinct, in range, and induces exactly the
    /// pattern's edges.
    pub fn validates(&self, g: &Graph) -> bool {
        let k = self.pattern.order();
        if self.vertices.len() != k || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let distinct: std::collections::BTreeSet<_> = self.vertices.iter().collect();
        if distinct.len() != k {
            return false;
        }
        let p = self.pattern.graph();
        (0..k).all(|i| {
            (i + 1..k).all(|j| p.adjacent(i, j) == g.adjacent(self.vertices[i], self.vertices[j]))
        })
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} on {:?}", self.pattern, self.vertices)
    }
}

/// Lexicographically least induced copy of `p` in `g`, if any.
pub fn find_induced(g: &Graph, p: PatternId) -> Option<Witness> {
    let k = p.order();
    if k > g.n() {
        return None;
    }
    let pat = p.graph();
    // Per-position constraint lists: earlier positions and whether the
    // pattern wants an edge to them.
    let constraints: Vec<Vec<(usize, bool)>> = (0..k)
        .map(|pos| (0..pos).map(|prev| (prev, pat.adjacent(prev, pos))).collect())
        .collect();
    let mut tuple = Vec::with_capacity(k);
    let mut used = VertexSet::new(g.n());
    let all = g.vertex_set();
    if extend(g, &constraints, p.is_cyclic(), &all, &mut tuple, &mut used) {
        Some(Witness {
            pattern: p,
            vertices: tuple,
        })
    } else {
        None
    }
}

fn extend(
    g: &Graph,
    constraints: &[Vec<(usize, bool)>],
    cyclic: bool,
    all: &VertexSet,
    tuple: &mut Vec<usize>,
    used: &mut VertexSet,
) -> bool {
    let pos = tuple.len();
    if pos == constraints.len() {
        return true;
    }
    let mut cand = all.difference(used);
    for &(prev, edge) in &constraints[pos] {
        let nb = g.neighbours(tuple[prev]);
        if edge {
            cand.intersect_with(nb);
        } else {
            cand.difference_with(nb);
        }
        if cand.is_empty() {
            return false;
        }
    }
    for v in cand.iter() {
        if cyclic && pos > 0 && v < tuple[0] {
            continue;
        }
        tuple.push(v);
        used.insert(v);
        if extend(g, constraints, cyclic, all, tuple, used) {
            return true;
        }
        used.remove(v);
        tuple.pop();
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClassId {
    P3P2Free,
    P4P2Free,
    TwoK2Free,
    P3P2DiamondFree,
    TwoK2DiamondFree,
}

impl ClassId {
    pub const ALL: [ClassId; 5] = [
        ClassId::P3P2Free,
        ClassId::P4P2Free,
        ClassId::TwoK2Free,
        ClassId::P3P2DiamondFree,
        ClassId::TwoK2DiamondFree,
    ];

    pub fn forbidden(self) -> &'static [PatternId] {
        match self {
            ClassId::P3P2Free => &[PatternId::P3uP2],
            ClassId::P4P2Free => &[PatternId::P4uP2],
            ClassId::TwoK2Free => &[PatternId::TwoK2],
            ClassId::P3P2DiamondFree => &[PatternId::P3uP2, PatternId::Diamond],
            ClassId::TwoK2DiamondFree => &[PatternId::TwoK2, PatternId::Diamond],
        }
    }

    /// Short tag used on the command line.
    pub fn tag(self) -> &'static str {
        match self {
            ClassId::P3P2Free => "p3p2",
            ClassId::P4P2Free => "p4p2",
            ClassId::TwoK2Free => "2k2",
            ClassId::P3P2DiamondFree => "p3p2diamond",
            ClassId::TwoK2DiamondFree => "2k2diamond",
        }
    }

    pub fn forbids_diamond(self) -> bool {
        self.forbidden().contains(&PatternId::Diamond)
    }
}

impl fmt::Display for ClassId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = self.forbidden().iter().map(|p| p.to_string()).collect();
        write!(f, "({})-free", names.join(", "))
    }
}

impl FromStr for ClassId {
    type Err = Error;

    fn from_str(s: &str) -> Result<ClassId> {
        ClassId::ALL
            .into_iter()
            .find(|c| c.tag() == s)
            .ok_or_else(|| {
                let tags: Vec<&str> = ClassId::ALL.iter().map(|c| c.tag()).collect();
                Error::Config(format!("unknown class `{s}` (expected one of: {})", tags.join(", ")))
            })
    }
}

impl Serialize for ClassId {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassMembershipReport {
    pub class: ClassId,
    pub member: bool,
    pub witness: Option<Witness>,
}

pub fn check_class(g: &Graph, c: ClassId) -> ClassMembershipReport {
    let witness = c.forbidden().iter().find_map(|&p| find_induced(g, p));
    ClassMembershipReport {
        class: c,
        member: witness.is_none(),
        witness,
    }
}

/// `Ok(())` for members, otherwise the class error carrying the witness.
pub fn require_class(g: &Graph, c: ClassId) -> Result<()> {
    match check_class(g, c).witness {
        None => Ok(()),
        Some(witness) => Err(Error::NotInClass { class: c, witness }),
    }
}
