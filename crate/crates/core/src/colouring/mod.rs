//! Vertex colourings: the clique-anchored constructive colourers, optimal
//! colourers for the P3-free and P4-free blocks, and an exact oracle.

mod blocks;
mod bounds;
mod diamond;
mod exact;
mod twok2;
mod wagon;

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use blocks::{colour_cograph, colour_disjoint_cliques};
pub use bounds::{bound_for_class, fresh_palette_bound, pair_set_bound, Bound};
pub use diamond::{colour_p3p2_diamond, colour_p3p2_diamond_with_clique};
pub use exact::{chromatic_number_exact, EXACT_LIMIT};
pub use twok2::{colour_2k2_diamond, colour_2k2_diamond_with_clique};
pub(crate) use diamond::from_partition as p3p2_diamond_from_partition;
pub(crate) use twok2::from_partition as twok2_diamond_from_partition;
pub(crate) use wagon::{p3p2_from_partition, p4p2_from_partition};
pub use wagon::{colour_p3p2, colour_p3p2_with_clique, colour_p4p2, colour_p4p2_with_clique, PairPalette, WagonColouring};

/// Colour of vertex `v` is `assignment[v]`, 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Colouring {
    pub assignment: Vec<u32>,
    pub colours_used: usize,
}

impl Colouring {
    pub fn new(assignment: Vec<u32>) -> Self {
        let colours_used = assignment.iter().collect::<BTreeSet<_>>().len();
        Colouring { assignment, colours_used }
    }

    pub fn colour(&self, v: usize) -> u32 {
        self.assignment[v]
    }

    /// Lines "v colour" with 0-based vertices.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (v, c) in self.assignment.iter().enumerate() {
            writeln!(out, "{v} {c}").unwrap();
        }
        out
    }

    /// Reads the format written by [`Colouring::to_text`]; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Colouring> {
        let mut pairs = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse { line: idx + 1, message };
            let mut it = line.split_whitespace();
            let (Some(v), Some(c), None) = (it.next(), it.next(), it.next()) else {
                return Err(parse_err(format!("expected `vertex colour`, got `{line}`")));
            };
            let v: usize = v.parse().map_err(|_| parse_err(format!("bad vertex `{v}`")))?;
            let c: u32 = c.parse().map_err(|_| parse_err(format!("bad colour `{c}`")))?;
            pairs.push((idx + 1, v, c));
        }
        let n = pairs.iter().map(|&(_, v, _)| v + 1).max().unwrap_or(0);
        let mut assignment = vec![0u32; n];
        for (line, v, c) in pairs {
            if assignment[v] != 0 {
                return Err(Error::Parse { line, message: format!("vertex {v} coloured twice") });
            }
            if c == 0 {
                return Err(Error::ZeroColour(v));
            }
            assignment[v] = c;
        }
        if let Some(v) = assignment.iter().position(|&c| c == 0) {
            return Err(Error::Parse { line: 0, message: format!("vertex {v} has no colour") });
        }
        Ok(Colouring::new(assignment))
    }
}

/// `Ok(None)` for a proper colouring, otherwise the lexicographically least
/// monochromatic edge.
pub fn verify_colouring(g: &Graph, col: &Colouring) -> Result<Option<(usize, usize)>> {
    if col.assignment.len() != g.n() {
        return Err(Error::PartialColouring { given: col.assignment.len(), n: g.n() });
    }
    if let Some(v) = col.assignment.iter().position(|&c| c == 0) {
        return Err(Error::ZeroColour(v));
    }
    Ok(g.edges().iter().copied().filter(|&(u, v)| col.assignment[u] == col.assignment[v]).min())
}

/// Branch of a constructive colourer, recorded for coverage accounting.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    /// `w = 2`: `A`, `I_a` with their clique colour, `C_12` on two new colours.
    OmegaTwo,
    /// `w = 2` and the graph is bipartite: a 2-colouring.
    Bipartite,
    /// `w = 3`: pair sets on colours {1,2}, {3,4}, {5,6}.
    OmegaThree,
    /// `w = 4`, edges between `C_23` and `C_13`.
    CrossEdges,
    /// `w = 4`, no such edges, `C_13` and `C_23` both nonempty.
    BothIndependent,
    /// `w = 4`, `C_13` empty, `[C_23]` a single vertex.
    SingletonComponent,
    /// `w = 4`, `C_13` empty, `[C_23]` a single K2 or K3.
    SingleCliqueComponent,
    /// `w = 4`, `C_13` empty, `[C_23]` with two or more components.
    ManyComponents,
    /// `w = 4`, `C_13` and `C_23` both empty.
    OnlyC12,
    /// Perfect range: an optimal colouring from the exact oracle.
    Perfect,
    /// `w >= 3` for (2K2, diamond)-free graphs: each pair set on one clique colour.
    Anchored,
}

impl Branch {
    pub const OMEGA_FOUR: [Branch; 6] = [
        Branch::CrossEdges,
        Branch::BothIndependent,
        Branch::SingletonComponent,
        Branch::SingleCliqueComponent,
        Branch::ManyComponents,
        Branch::OnlyC12,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Branch::OmegaTwo => "omega_two",
            Branch::Bipartite => "bipartite",
            Branch::OmegaThree => "omega_three",
            Branch::CrossEdges => "cross_edges",
            Branch::BothIndependent => "both_independent",
            Branch::SingletonComponent => "singleton_component",
            Branch::SingleCliqueComponent => "single_clique_component",
            Branch::ManyComponents => "many_components",
            Branch::OnlyC12 => "only_c12",
            Branch::Perfect => "perfect",
            Branch::Anchored => "anchored",
        }
    }

    /// Most colours the branch may use.
    pub fn ceiling(self, omega: usize) -> usize {
        match self {
            Branch::OmegaTwo => 4,
            Branch::Bipartite => 2,
            Branch::OmegaThree => 6,
            Branch::CrossEdges | Branch::BothIndependent | Branch::SingletonComponent => 5,
            Branch::SingleCliqueComponent | Branch::ManyComponents | Branch::OnlyC12 => 4,
            Branch::Perfect | Branch::Anchored => omega,
        }
    }
}

impl std::fmt::Display for Branch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.tag())
    }
}

/// Which branch a constructive colourer took and the facts that decided it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseTrace {
    pub omega: usize,
    pub branch: Branch,
    /// The clique ordering actually used (after any relabelling).
    pub clique: Vec<usize>,
    /// Labels 1 and 2 were swapped so that `C_23` is the nonempty side.
    pub swapped: bool,
    pub detail: String,
}

impl std::fmt::Display for CaseTrace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "omega={} branch={}", self.omega, self.branch)?;
        if self.swapped {
            f.write_str(" swapped=1,2")?;
        }
        if !self.detail.is_empty() {
            write!(f, " ({})", self.detail)?;
        }
        Ok(())
    }
}

/// Fails with an invariant error unless `col` is proper on `g`.
pub(crate) fn ensure_proper(g: &Graph, col: &Colouring, context: &str) -> Result<()> {
    match verify_colouring(g, col)? {
        None => Ok(()),
        Some((u, v)) => Err(Error::Invariant(format!("{context}: edge ({u}, {v}) is monochromatic"))),
    }
}
