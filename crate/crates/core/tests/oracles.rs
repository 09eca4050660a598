//! Library results against brute-force oracles, plus structural invariants.

use std::collections::BTreeSet;

use itertools::Itertools;
use proptest::prelude::*;

use chromabound::colouring::{
    bound_for_class, chromatic_number_exact, colour_2k2_diamond, colour_cograph, colour_disjoint_cliques,
    colour_p3p2, colour_p3p2_diamond, colour_p4p2, verify_colouring,
};
use chromabound::graph::io::{decode_inline, encode_inline, read_graph, write_dimacs, write_edge_list};
use chromabound::harness::canon::canonical_key;
use chromabound::harness::enumerate_all;
use chromabound::partition::{build_partition, clique_number, maximum_cliques, validate_partition};
use chromabound::recognition::{check_class, find_induced, is_perfect_small, ClassId, PatternId, PerfectMode};
use chromabound::Graph;

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        (Just(n), proptest::collection::vec(0.0f64..1.0, pairs), 0.05f64..0.95)
    })
    .prop_map(|(n, xs, density)| from_bits(n, &xs.iter().map(|&x| x < density).collect::<Vec<_>>()))
}

fn from_bits(n: usize, bits: &[bool]) -> Graph {
    let pairs = (0..n).tuple_combinations::<(usize, usize)>();
    Graph::from_edges(n, pairs.zip(bits).filter(|(_, &b)| b).map(|(e, _)| e)).unwrap()
}

fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = n * (n - 1) / 2;
    (0u64..1 << pairs).map(move |mask| {
        let bits: Vec<bool> = (0..pairs).map(|b| mask >> b & 1 == 1).collect();
        from_bits(n, &bits)
    })
}

/// Tries every injective placement of the pattern.
fn brute_induced(g: &Graph, p: PatternId) -> bool {
    let h = p.graph();
    let k = h.n();
    k <= g.n()
        && (0..g.n()).permutations(k).any(|m| {
            (0..k).tuple_combinations().all(|(i, j)| h.adjacent(i, j) == g.adjacent(m[i], m[j]))
        })
}

fn brute_member(g: &Graph, class: ClassId) -> bool {
    class.forbidden().iter().all(|&p| !brute_induced(g, p))
}

fn brute_clique_number(g: &Graph) -> usize {
    (0..=g.n()).rev().find(|&k| (0..g.n()).combinations(k).any(|s| g.is_clique(&s))).unwrap()
}

fn brute_chi(g: &Graph) -> usize {
    let n = g.n();
    (1..=n.max(1))
        .find(|&k| {
            if n == 0 {
                return true;
            }
            (0..n).map(|_| 0..k).multi_cartesian_product().any(|c| g.edges().iter().all(|&(u, v)| c[u] != c[v]))
        })
        .unwrap_or(0)
}

/// Smallest adjacency bit string over all relabellings.
fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.n();
    (0..n)
        .permutations(n)
        .map(|p| (0..n).tuple_combinations().map(|(i, j)| g.adjacent(p[i], p[j])).collect::<Vec<bool>>())
        .min()
        .unwrap_or_default()
}

#[test]
fn enumeration_matches_brute_force_up_to_six() {
    for class in ClassId::ALL {
        for n in 1..=6 {
            let want: BTreeSet<Vec<bool>> =
                all_graphs(n).filter(|g| brute_member(g, class)).map(|g| brute_canonical(&g)).collect();
            let got = enumerate_all(class, n, n).unwrap();
            let keys: BTreeSet<Vec<bool>> = got.iter().map(brute_canonical).collect();
            assert_eq!(keys.len(), got.len(), "{class} n={n}: duplicates");
            assert_eq!(keys, want, "{class} n={n}");
        }
    }
}

#[test]
fn canonical_key_separates_all_graphs_on_six() {
    let mut by_brute = std::collections::BTreeMap::new();
    for g in all_graphs(6) {
        let b = brute_canonical(&g);
        let k = canonical_key(&g);
        assert_eq!(*by_brute.entry(b).or_insert(k), k);
    }
    let distinct: BTreeSet<_> = by_brute.values().collect();
    assert_eq!((by_brute.len(), distinct.len()), (156, 156));
}

#[test]
fn pattern_search_matches_brute_force_on_all_five_vertex_graphs() {
    let patterns = [PatternId::P3, PatternId::P4, PatternId::TwoK2, PatternId::P3uP2, PatternId::Diamond, PatternId::C5];
    for g in all_graphs(5) {
        for p in patterns {
            let found = find_induced(&g, p);
            assert_eq!(found.is_some(), brute_induced(&g, p), "{p} in {}", encode_inline(&g));
            if let Some(w) = found {
                assert!(w.validates(&g));
            }
        }
    }
}

#[test]
fn exact_chi_matches_brute_force_on_all_five_vertex_graphs() {
    for g in all_graphs(5) {
        assert_eq!(chromatic_number_exact(&g).unwrap().colours_used, brute_chi(&g));
    }
}

#[test]
fn cograph_and_clique_colourers_are_optimal_on_six() {
    for g in all_graphs(6) {
        if let Ok(col) = colour_cograph(&g) {
            assert_eq!(verify_colouring(&g, &col).unwrap(), None);
            assert_eq!(col.colours_used, brute_clique_number(&g), "{}", encode_inline(&g));
        } else {
            assert!(brute_induced(&g, PatternId::P4));
        }
        if let Ok(col) = colour_disjoint_cliques(&g) {
            assert_eq!(verify_colouring(&g, &col).unwrap(), None);
            assert_eq!(col.colours_used, brute_clique_number(&g));
        } else {
            assert!(brute_induced(&g, PatternId::P3));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn recognition_agrees_with_brute_force(g in graph_strategy(8)) {
        for class in ClassId::ALL {
            let report = check_class(&g, class);
            prop_assert_eq!(report.member, brute_member(&g, class));
            if let Some(w) = report.witness {
                prop_assert!(w.validates(&g));
                prop_assert!(class.forbidden().contains(&w.pattern));
            }
        }
    }

    #[test]
    fn exact_chi_matches_brute_force(g in graph_strategy(8)) {
        let col = chromatic_number_exact(&g).unwrap();
        prop_assert_eq!(verify_colouring(&g, &col).unwrap(), None);
        prop_assert_eq!(col.colours_used, brute_chi(&g));
        prop_assert_eq!(clique_number(&g), brute_clique_number(&g));
    }

    #[test]
    fn perfectness_modes_agree(g in graph_strategy(9)) {
        let hole = is_perfect_small(&g, PerfectMode::HoleSearch).unwrap();
        let sweep = is_perfect_small(&g, PerfectMode::SubgraphSweep).unwrap();
        prop_assert_eq!(hole.perfect, sweep.perfect);
        for w in [hole.witness, sweep.witness].into_iter().flatten() {
            prop_assert!(w.validates(&g));
        }
    }

    #[test]
    fn partition_is_valid_for_maximum_clique_orderings(g in graph_strategy(9)) {
        for a in maximum_cliques(&g, 4) {
            for order in a.iter().copied().permutations(a.len()).take(6) {
                let p = build_partition(&g, &order).unwrap();
                prop_assert!(validate_partition(&g, &p).is_ok());
            }
        }
    }

    #[test]
    fn classes_are_hereditary(g in graph_strategy(8), drop in 0usize..8) {
        let keep: Vec<usize> = (0..g.n()).filter(|&v| v != drop % g.n()).collect();
        let h = g.induced_subgraph(&keep).unwrap();
        for class in ClassId::ALL {
            if check_class(&g, class).member {
                prop_assert!(check_class(&h, class).member);
            }
        }
    }

    #[test]
    fn complement_is_an_involution(g in graph_strategy(10)) {
        let c = g.complement();
        prop_assert_eq!(c.edge_count() + g.edge_count(), g.n() * (g.n().saturating_sub(1)) / 2);
        prop_assert_eq!(c.complement(), g);
    }

    #[test]
    fn canonical_key_ignores_labels(g in graph_strategy(9), seed in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = Graph::from_edges(n, g.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        prop_assert_eq!(canonical_key(&g), canonical_key(&h));
    }

    #[test]
    fn formats_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(&read_graph(&write_dimacs(&g)).unwrap(), &g);
        prop_assert_eq!(&read_graph(&write_edge_list(&g)).unwrap(), &g);
        prop_assert_eq!(&decode_inline(&encode_inline(&g)).unwrap(), &g);
    }

    #[test]
    fn class_colourers_are_proper_and_bounded(g in graph_strategy(10)) {
        let omega = clique_number(&g);
        let chi = chromatic_number_exact(&g).unwrap().colours_used;
        let mut runs = Vec::new();
        if check_class(&g, ClassId::P3P2Free).member {
            runs.push((ClassId::P3P2Free, colour_p3p2(&g).unwrap().colouring));
        }
        if check_class(&g, ClassId::P4P2Free).member {
            runs.push((ClassId::P4P2Free, colour_p4p2(&g).unwrap().colouring));
        }
        if omega >= 2 && check_class(&g, ClassId::P3P2DiamondFree).member {
            runs.push((ClassId::P3P2DiamondFree, colour_p3p2_diamond(&g).unwrap().0));
        }
        if omega >= 2 && check_class(&g, ClassId::TwoK2DiamondFree).member {
            runs.push((ClassId::TwoK2DiamondFree, colour_2k2_diamond(&g).unwrap().0));
        }
        for (class, col) in runs {
            prop_assert_eq!(verify_colouring(&g, &col).unwrap(), None);
            prop_assert!(col.colours_used >= chi);
            prop_assert!(col.colours_used <= bound_for_class(class, omega).colours, "{} on {}", class, encode_inline(&g));
        }
    }

    #[test]
    fn multiplying_a_vertex_keeps_omega_and_chi(g in graph_strategy(7), v in 0usize..7, k in 1usize..4) {
        let v = v % g.n();
        let h = g.multiply_vertex(v, k).unwrap();
        prop_assert_eq!(h.n(), g.n() + k - 1);
        prop_assert_eq!(clique_number(&h), clique_number(&g));
        prop_assert_eq!(chromatic_number_exact(&h).unwrap().colours_used, chromatic_number_exact(&g).unwrap().colours_used);
    }
}
