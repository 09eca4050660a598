//! Named example graphs.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Fixture {
    /// Mycielski construction over C5: 11 vertices, 20 edges, omega 2, chi 4.
    MycielskiGrotzsch,
    /// Triangle plus two rows of four vertices; omega 3, chi 4.
    Fig3W3X4,
    /// 5-cycle with a centre adjacent to three of its vertices.
    Fig5Base,
}

impl Fixture {
    pub const ALL: [Fixture; 3] = [
        Fixture::MycielskiGrotzsch,
        Fixture::Fig3W3X4,
        Fixture::Fig5Base,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Fixture::MycielskiGrotzsch => "mycielski_grotzsch",
            Fixture::Fig3W3X4 => "fig3_w3x4",
            Fixture::Fig5Base => "fig5_base",
        }
    }

    pub fn build(self) -> Graph {
        match self {
            Fixture::MycielskiGrotzsch => mycielski_grotzsch(),
            Fixture::Fig3W3X4 => fig3_w3x4(),
            Fixture::Fig5Base => fig5_base(),
        }
    }
}

impl fmt::Display for Fixture {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Fixture {
    type Err = Error;

    fn from_str(s: &str) -> Result<Fixture> {
        Fixture::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::UnknownFixture(s.to_string()))
    }
}

pub fn fixture(name: &str) -> Result<Graph> {
    Ok(name.parse::<Fixture>()?.build())
}

/// Outer cycle `v1..v5` (ids 0..4), shadows `u1..u5` (ids 5..9), apex `w` (10).
fn mycielski_grotzsch() -> Graph {
    let mut edges = Vec::with_capacity(20);
    for i in 0..5 {
        let next = (i + 1) % 5;
        let prev = (i + 4) % 5;
        edges.push((i, next));
        edges.push((5 + i, prev));
        edges.push((5 + i, next));
        edges.push((10, 5 + i));
    }
    let mut labels: Vec<String> = (1..=5).map(|i| format!("v{i}")).collect();
    labels.extend((1..=5).map(|i| format!("u{i}")));
    labels.push("w".into());
    Graph::from_edges(11, edges).unwrap().with_labels(labels)
}

/// Clique vertices 1, 2, 3 are ids 0..2; row `N1` is ids 3..6 and row `N2`
/// ids 7..10, positions left to right. Every `N1` vertex sees only clique
/// vertex 1 and every `N2` vertex only clique vertex 2.
fn fig3_w3x4() -> Graph {
    let top = |p: usize| 3 + p;
    let bottom = |p: usize| 7 + p;
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    for p in 0..4 {
        edges.push((0, top(p)));
        edges.push((1, bottom(p)));
        edges.push((top(p), bottom(p)));
    }
    for (a, b) in [(0, 1), (2, 3)] {
        edges.push((top(a), top(b)));
        edges.push((bottom(a), bottom(b)));
    }
    // diagonal segments as drawn between the rows
    for (a, b) in [(0, 2), (1, 3), (2, 1), (3, 0)] {
        edges.push((top(a), bottom(b)));
    }
    let mut labels: Vec<String> = (1..=3).map(|i| i.to_string()).collect();
    labels.extend((1..=4).map(|p| format!("N1.{p}")));
    labels.extend((1..=4).map(|p| format!("N2.{p}")));
    Graph::from_edges(11, edges).unwrap().with_labels(labels)
}

/// Outer cycle `BL, L, T, R, BR` (ids 0..4) and centre `c` (id 5) adjacent
/// to `BL`, `BR` and `T`. `L`, `T` and `R` are the vertices that get blown up.
fn fig5_base() -> Graph {
    let edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (5, 0), (5, 4), (5, 2)];
    let labels = ["BL", "L", "T", "R", "BR", "c"].map(String::from).to_vec();
    Graph::from_edges(6, edges).unwrap().with_labels(labels)
}

/// Ids of the fig5_base vertices that may be multiplied by independent sets.
pub const FIG5_BLOWUP_VERTICES: [usize; 3] = [1, 2, 3];

/// fig5_base with `L`, `T`, `R` multiplied by `k[0]`, `k[1]`, `k[2]`.
pub fn fig5_blowup(k: [usize; 3]) -> Result<Graph> {
    let mut g = fig5_base();
    for (v, mult) in FIG5_BLOWUP_VERTICES.into_iter().zip(k) {
        g = g.multiply_vertex(v, mult)?;
    }
    Ok(g)
}
