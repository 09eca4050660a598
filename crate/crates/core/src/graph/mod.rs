//! Simple undirected graphs on dense vertex ids `0..n`.
//!
//! A [`Graph`] is immutable once built. Adjacency is kept twice: as bitset
//! rows for the search routines and as a sorted edge list for I/O.

pub mod fixtures;
pub mod io;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub use fixtures::{fixture, Fixture};

#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    edges: Vec<(usize, usize)>,
    labels: Option<Vec<String>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge iterator. Duplicate edges (in either
    /// orientation) collapse; self-loops and out-of-range ids are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![VertexSet::new(n); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    /// Builds from symmetric, irreflexive adjacency rows.
    pub(crate) fn from_rows(adj: Vec<VertexSet>) -> Graph {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, row) in adj.iter().enumerate() {
            debug_assert!(!row.contains(u));
            for v in row.iter().filter(|&v| v > u) {
                debug_assert!(adj[v].contains(u));
                edges.push((u, v));
            }
        }
        Graph {
            n,
            adj,
            edges,
            labels: None,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    pub fn complete(n: usize) -> Graph {
        Self::empty(n).complement()
    }

    pub fn path(n: usize) -> Graph {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Graph {
        assert_eq!(labels.len(), self.n);
        self.labels = Some(labels);
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// The subgraph induced by `s`, relabelled `0..|s|` in ascending order of `s`.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<Graph> {
        let mut sorted = s.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        for &v in &sorted {
            self.check_vertex(v)?;
        }
        let k = sorted.len();
        let mut adj = vec![VertexSet::new(k); k];
        for (i, &u) in sorted.iter().enumerate() {
            for (j, &v) in sorted.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        let mut g = Self::from_rows(adj);
        if let Some(labels) = &self.labels {
            g.labels = Some(sorted.iter().map(|&v| labels[v].clone()).collect());
        }
        Ok(g)
    }

    pub fn induced_by_set(&self, s: &VertexSet) -> Graph {
        self.induced_subgraph(&s.to_vec()).expect("set within range")
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        let mut g = Self::from_rows(adj);
        g.labels = self.labels.clone();
        g
    }

    /// Replaces `v` by an independent set of `k` false twins. `v` keeps its
    /// id; the `k - 1` copies are appended as `n, n+1, ..`.
    pub fn multiply_vertex(&self, v: usize, k: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if k == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let n = self.n + k - 1;
        let mut edges: Vec<(usize, usize)> = self.edges.clone();
        for copy in self.n..n {
            edges.extend(self.adj[v].iter().map(|u| (u, copy)));
        }
        let mut g = Self::from_edges(n, edges)?;
        if let Some(labels) = &self.labels {
            let mut l = labels.clone();
            l.extend((1..k).map(|i| format!("{}'{}", labels[v], i)));
            g.labels = Some(l);
        }
        Ok(g)
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Self::from_edges(self.n + other.n, edges).expect("valid union")
    }

    /// Join: disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let mut edges: Vec<(usize, usize)> = self.disjoint_union(other).edges;
        for u in 0..self.n {
            for v in 0..other.n {
                edges.push((u, v + shift));
            }
        }
        Self::from_edges(self.n + other.n, edges).expect("valid join")
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter()
            .enumerate()
            .all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && self.adjacent(u, v)))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj[v].is_disjoint(set))
    }

    /// Least edge `(u, v)`, `u < v`, with both ends in `set`.
    pub fn edge_within(&self, set: &VertexSet) -> Option<(usize, usize)> {
        set.iter().find_map(|u| {
            self.adj[u]
                .intersection(set)
                .iter()
                .find(|&v| v > u)
                .map(|v| (u, v))
        })
    }

    /// Connected components of `[set]`, each as a vertex set, ordered by
    /// their least vertex.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(start) = remaining.first() {
            let mut comp = VertexSet::new(self.n);
            comp.insert(start);
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut next = VertexSet::new(self.n);
                for v in frontier.iter() {
                    next.union_with(&self.adj[v]);
                }
                next.intersect_with(set);
                next.difference_with(&comp);
                comp.union_with(&next);
                frontier = next;
            }
            remaining.difference_with(&comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertex_set())
    }
}
