//! Class-member instance generation: exhaustive enumeration up to
//! isomorphism, seeded random sampling, and structured seeds.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::canon::canonical_form;
use crate::error::{Error, Result};
use crate::graph::fixtures::fig5_blowup;
use crate::graph::{Fixture, Graph};
use crate::recognition::{check_class, ClassId};

/// Largest `n` for exhaustive enumeration.
pub const ENUMERATE_LIMIT: usize = 8;
/// Largest `n` for random sampling.
pub const SAMPLE_LIMIT: usize = 64;

const DENSITY_GRID: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const REJECTION_TRIES: usize = 40;
const GROWTH_TRIES: usize = 30;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    EnumerateAll,
    RandomSample,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Mode> {
        match s {
            "enumerate_all" | "enumerate" | "all" => Ok(Mode::EnumerateAll),
            "random_sample" | "random" | "sample" => Ok(Mode::RandomSample),
            _ => Err(Error::Config(format!("unknown mode `{s}` (expected enumerate_all or random_sample)"))),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::EnumerateAll => "enumerate_all",
            Mode::RandomSample => "random_sample",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepConfig {
    pub class: ClassId,
    pub n_min: usize,
    pub n_max: usize,
    pub mode: Mode,
    /// Random instances drawn in `RandomSample` mode, on top of the structured seeds.
    pub sample_count: usize,
    pub seed: u64,
    /// Include fixtures, blow-ups and clique seeds in `RandomSample` mode.
    pub structured_seeds: bool,
    /// Every ordering of every maximum clique is checked when `w` is at most this.
    pub all_orderings_max_omega: usize,
    /// Cap on maximum cliques considered per instance.
    pub max_cliques: usize,
    /// Corrupt the colouring of every `k`-th instance that has an edge.
    pub inject_every: Option<usize>,
}

impl SweepConfig {
    pub fn new(class: ClassId, n_min: usize, n_max: usize, mode: Mode) -> Self {
        SweepConfig {
            class,
            n_min,
            n_max,
            mode,
            sample_count: 200,
            seed: 0,
            structured_seeds: true,
            all_orderings_max_omega: 4,
            max_cliques: 64,
            inject_every: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_min > self.n_max {
            return Err(Error::Config(format!("n_min {} exceeds n_max {}", self.n_min, self.n_max)));
        }
        match self.mode {
            Mode::EnumerateAll if self.n_max > ENUMERATE_LIMIT => Err(Error::Capability {
                operation: "exhaustive enumeration",
                limit: ENUMERATE_LIMIT,
                n: self.n_max,
            }),
            Mode::RandomSample if self.n_max > SAMPLE_LIMIT => Err(Error::Capability {
                operation: "random sampling",
                limit: SAMPLE_LIMIT,
                n: self.n_max,
            }),
            Mode::RandomSample if self.n_min == 0 => Err(Error::Config("random sampling needs n_min >= 1".into())),
            _ if self.inject_every == Some(0) => Err(Error::Config("inject_every must be positive".into())),
            _ => Ok(()),
        }
    }
}

/// A generated graph and how it was obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Instance {
    pub source: String,
    #[serde(skip)]
    pub graph: Graph,
}

fn in_class(g: &Graph, class: ClassId) -> bool {
    check_class(g, class).member
}

fn relabel(g: &Graph, order: &[usize]) -> Graph {
    let mut pos = vec![0; g.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    Graph::from_edges(g.n(), g.edges().iter().map(|&(u, v)| (pos[u], pos[v]))).expect("valid relabelling")
}

/// `g` plus a new vertex `n` adjacent to the vertices in `mask`.
fn extend(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let new_edges = (0..n).filter(|&u| mask >> u & 1 == 1).map(|u| (u, n));
    Graph::from_edges(n + 1, g.edges().iter().copied().chain(new_edges)).expect("valid extension")
}

/// All class members on `n_min..=n_max` vertices, one per isomorphism class,
/// each in canonical labelling, ordered by `(n, canonical code)`.
///
/// Level `n` is built from level `n - 1`: every member on `n` vertices
/// restricts to a member on `n - 1` vertices (the classes are hereditary),
/// so adding one vertex with every possible neighbourhood reaches it.
pub fn enumerate_all(class: ClassId, n_min: usize, n_max: usize) -> Result<Vec<Graph>> {
    if n_max > ENUMERATE_LIMIT {
        return Err(Error::Capability { operation: "exhaustive enumeration", limit: ENUMERATE_LIMIT, n: n_max });
    }
    let mut level = vec![Graph::empty(0)];
    let mut out = Vec::new();
    if n_min == 0 {
        out.push(Graph::empty(0));
    }
    for n in 1..=n_max {
        let found: Vec<(u64, Graph)> = level
            .par_iter()
            .flat_map_iter(|g| (0..1u64 << g.n()).map(move |mask| extend(g, mask)))
            .filter(|h| in_class(h, class))
            .map(|h| {
                let (code, order) = canonical_form(&h);
                (code, relabel(&h, &order))
            })
            .collect();
        let unique: BTreeMap<u64, Graph> = found.into_iter().collect();
        level = unique.into_values().collect();
        if n >= n_min {
            out.extend(level.iter().cloned());
        }
    }
    Ok(out)
}

fn erdos_renyi(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, edges).expect("valid random graph")
}

/// Grows `start` to `n` vertices, adding a vertex with a random
/// neighbourhood (edge probability `p`) that keeps the graph in the class;
/// an isolated vertex is the fallback, which never creates a forbidden
/// pattern since none of them has an isolated vertex.
fn grow(rng: &mut ChaCha8Rng, start: Graph, n: usize, p: f64, class: ClassId) -> Graph {
    let mut g = start;
    while g.n() < n {
        let k = g.n();
        let next = (0..GROWTH_TRIES)
            .map(|_| extend(&g, (0..k).filter(|_| rng.gen_bool(p)).fold(0u64, |m, u| m | 1 << u)))
            .find(|h| in_class(h, class));
        g = next.unwrap_or_else(|| extend(&g, 0));
    }
    g
}

/// The `index`-th random instance; depends only on `(seed, index)`.
fn random_instance(cfg: &SweepConfig, index: usize) -> Instance {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index as u64);
    let n = rng.gen_range(cfg.n_min..=cfg.n_max);
    let p = DENSITY_GRID[index % DENSITY_GRID.len()];
    if index.is_multiple_of(2) {
        for attempt in 0..REJECTION_TRIES {
            let g = erdos_renyi(&mut rng, n, p);
            if in_class(&g, cfg.class) {
                return Instance { source: format!("er(n={n},p={p},try={attempt})"), graph: g };
            }
        }
        let g = grow(&mut rng, Graph::empty(0), n, p, cfg.class);
        return Instance { source: format!("grow(n={n},p={p})"), graph: g };
    }
    let omega = (2 + (index / 2) % 5).min(n);
    let g = grow(&mut rng, Graph::complete(omega), n, p, cfg.class);
    Instance { source: format!("grow(K{omega},n={n},p={p})"), graph: g }
}

/// `K_w` with `pendants[i]` pendant vertices hanging off clique vertex `i`.
fn clique_with_pendants(w: usize, pendants: &[usize]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..w).flat_map(|u| (u + 1..w).map(move |v| (u, v))).collect();
    let mut n = w;
    for (i, &k) in pendants.iter().enumerate() {
        for _ in 0..k {
            edges.push((i, n));
            n += 1;
        }
    }
    Graph::from_edges(n, edges).expect("valid pendant graph")
}

/// Fixtures, fig5 blow-ups and pendant cliques that belong to the class.
pub fn structured_seeds(class: ClassId, n_max: usize) -> Vec<Instance> {
    let mut out = Vec::new();
    for f in Fixture::ALL {
        out.push(Instance { source: format!("fixture:{f}"), graph: f.build() });
    }
    for a in 1..=4 {
        for b in 1..=4 {
            for c in 1..=4 {
                let g = fig5_blowup([a, b, c]).expect("positive multiplicities");
                out.push(Instance { source: format!("fig5_blowup({a},{b},{c})"), graph: g });
            }
        }
    }
    for w in 1..=7 {
        for pendants in [vec![], vec![1], vec![1, 1], vec![2, 1], vec![1, 1, 1], vec![3]] {
            if pendants.len() <= w {
                let g = clique_with_pendants(w, &pendants);
                out.push(Instance { source: format!("pendant_clique(K{w},{pendants:?})"), graph: g });
            }
        }
    }
    let mut seen = BTreeSet::new();
    out.retain(|i| {
        let g = &i.graph;
        g.n() <= n_max && in_class(g, class) && seen.insert((g.n(), g.edges().to_vec()))
    });
    out
}

/// Every instance the configuration describes, in a fixed order.
pub fn generate_class_instances(cfg: &SweepConfig) -> Result<Vec<Instance>> {
    cfg.validate()?;
    match cfg.mode {
        Mode::EnumerateAll => Ok(enumerate_all(cfg.class, cfg.n_min, cfg.n_max)?
            .into_iter()
            .enumerate()
            .map(|(i, graph)| Instance { source: format!("enumerate(n={},#{i})", graph.n()), graph })
            .collect()),
        Mode::RandomSample => {
            let mut out = if cfg.structured_seeds { structured_seeds(cfg.class, cfg.n_max) } else { Vec::new() };
            let random: Vec<Instance> = (0..cfg.sample_count).into_par_iter().map(|i| random_instance(cfg, i)).collect();
            out.extend(random);
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::recognition::{find_induced, PatternId};

    #[test]
    fn all_graphs_up_to_four_vertices() {
        // the forbidden pattern has five vertices
        let gs = enumerate_all(ClassId::P3P2Free, 1, 4).unwrap();
        assert_eq!(gs.len(), 1 + 2 + 4 + 11);
    }

    #[test]
    fn unrestricted_counts_match_known_graph_counts() {
        // P4+P2 has six vertices, so every graph on at most five is a member
        let gs = enumerate_all(ClassId::P4P2Free, 1, 5).unwrap();
        let by_n: Vec<usize> = (1..=5).map(|n| gs.iter().filter(|g| g.n() == n).count()).collect();
        assert_eq!(by_n, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn two_k2_diamond_free_on_five_contains_c5() {
        let gs = enumerate_all(ClassId::TwoK2DiamondFree, 5, 5).unwrap();
        assert!(gs.iter().any(|g| g.edge_count() == 5 && find_induced(g, PatternId::C5).is_some()));
    }

    #[test]
    fn limit_enforced() {
        assert!(matches!(enumerate_all(ClassId::P3P2Free, 1, 9), Err(Error::Capability { limit: 8, .. })));
        let cfg = SweepConfig::new(ClassId::P3P2Free, 1, 9, Mode::EnumerateAll);
        assert!(cfg.validate().is_err());
    }

    #[test]
    fn random_mode_is_deterministic_and_in_class() {
        let mut cfg = SweepConfig::new(ClassId::P3P2DiamondFree, 5, 12, Mode::RandomSample);
        cfg.sample_count = 40;
        cfg.seed = 11;
        let a = generate_class_instances(&cfg).unwrap();
        let b = generate_class_instances(&cfg).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|i| in_class(&i.graph, cfg.class)));
    }
}
