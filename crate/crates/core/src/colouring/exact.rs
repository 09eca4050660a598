//! Exact chromatic number by DSATUR branch and bound.
//!
//! A maximum clique is precoloured (giving the lower bound), a greedy DSATUR
//! pass gives the first upper bound, and the search branches on the most
//! saturated uncoloured vertex, trying only colours below the incumbent.

use super::Colouring;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::partition::max_clique_exact;

pub const EXACT_LIMIT: usize = 32;

struct Search<'a> {
    g: &'a Graph,
    colour: Vec<u32>,
    /// `counts[v][c]`: coloured neighbours of `v` with colour `c`.
    counts: Vec<Vec<u8>>,
    /// Bitmask of colours among the neighbours of `v`.
    sat: Vec<u64>,
    best: Vec<u32>,
    best_k: u32,
    lower: u32,
}

impl Search<'_> {
    fn assign(&mut self, v: usize, c: u32) {
        self.colour[v] = c;
        for u in self.g.neighbours(v).iter() {
            let slot = &mut self.counts[u][c as usize];
            *slot += 1;
            if *slot == 1 {
                self.sat[u] |= 1 << c;
            }
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.colour[v];
        self.colour[v] = 0;
        for u in self.g.neighbours(v).iter() {
            let slot = &mut self.counts[u][c as usize];
            *slot -= 1;
            if *slot == 0 {
                self.sat[u] &= !(1 << c);
            }
        }
    }

    /// Uncoloured vertex with most distinct neighbour colours; ties by
    /// uncoloured degree, then by id.
    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colour[v] == 0)
            .max_by_key(|&v| {
                let free_deg = self.g.neighbours(v).iter().filter(|&u| self.colour[u] == 0).count();
                (self.sat[v].count_ones(), free_deg, std::cmp::Reverse(v))
            })
    }

    fn run(&mut self, used: u32) {
        if self.best_k == self.lower {
            return;
        }
        let Some(v) = self.pick() else {
            if used < self.best_k {
                self.best_k = used;
                self.best = self.colour.clone();
            }
            return;
        };
        let top = (used + 1).min(self.best_k - 1);
        for c in 1..=top {
            if c >= self.best_k {
                return;
            }
            if self.sat[v] >> c & 1 == 1 {
                continue;
            }
            self.assign(v, c);
            self.run(used.max(c));
            self.unassign(v);
            if self.best_k == self.lower || self.best_k <= used {
                return;
            }
        }
    }
}

fn greedy_dsatur(s: &mut Search<'_>) -> Vec<u32> {
    let mut placed = Vec::new();
    while let Some(v) = s.pick() {
        let c = (1..).find(|&c| s.sat[v] >> c & 1 == 0).unwrap();
        s.assign(v, c);
        placed.push(v);
    }
    let out = s.colour.clone();
    for v in placed {
        s.unassign(v);
    }
    out
}

/// An optimal colouring; `colours_used` is the chromatic number.
pub fn chromatic_number_exact(g: &Graph) -> Result<Colouring> {
    let n = g.n();
    if n > EXACT_LIMIT {
        return Err(Error::Capability { operation: "exact chromatic number", limit: EXACT_LIMIT, n });
    }
    if n == 0 {
        return Ok(Colouring::new(Vec::new()));
    }
    let clique = max_clique_exact(g);
    let mut s = Search {
        g,
        colour: vec![0; n],
        counts: vec![vec![0; EXACT_LIMIT + 2]; n],
        sat: vec![0; n],
        best: Vec::new(),
        best_k: u32::MAX,
        lower: clique.len() as u32,
    };
    for (i, &v) in clique.iter().enumerate() {
        s.assign(v, i as u32 + 1);
    }
    s.best = greedy_dsatur(&mut s);
    s.best_k = *s.best.iter().max().unwrap();
    s.run(s.lower);
    Ok(Colouring::new(s.best))
}
