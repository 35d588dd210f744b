mod common;

use common::arb_graph;
use pidecomp::graph::{induced_subgraph, power_graph, subdivide, subset_complement};
use pidecomp::graph::{generate, load_edge_list, FamilySpec};
use pidecomp::{Graph, VertexSubset};
use proptest::prelude::*;

fn arb_graph_and_subset(max_n: usize) -> impl Strategy<Value = (Graph, VertexSubset)> {
    arb_graph(max_n).prop_flat_map(|g| {
        let n = g.vertex_count();
        (Just(g), proptest::collection::vec(any::<bool>(), n))
            .prop_map(|(g, flags)| (g, VertexSubset::from_flags(flags)))
    })
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        let text = g.to_edge_list();
        prop_assert_eq!(load_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn powers_are_nested(g in arb_graph(10), p in 1usize..5) {
        let lo = power_graph(&g, p).unwrap();
        let hi = power_graph(&g, p + 1).unwrap();
        for (u, v) in lo.edges() {
            prop_assert!(hi.has_edge(u, v));
        }
        prop_assert_eq!(power_graph(&g, 1).unwrap(), g.clone());
    }

    #[test]
    fn power_edges_are_short_distances(g in arb_graph(10), p in 1usize..4) {
        let gp = power_graph(&g, p).unwrap();
        for u in 0..g.vertex_count() {
            let dist = g.distances_from(u);
            for v in 0..g.vertex_count() {
                let close = u != v && dist[v].is_some_and(|d| d <= p);
                prop_assert_eq!(gp.has_edge(u, v), close);
            }
        }
    }

    #[test]
    fn subdivision_counts(g in arb_graph(10), p in 0usize..4) {
        let s = subdivide(&g, p);
        let (n, m) = (g.vertex_count(), g.edge_count());
        prop_assert_eq!(s.vertex_count(), n + p * m);
        prop_assert_eq!(s.edge_count(), (p + 1) * m);
    }

    #[test]
    fn subset_complement_is_an_involution((g, mask) in arb_graph_and_subset(10)) {
        let once = subset_complement(&g, &mask);
        prop_assert_eq!(subset_complement(&once, &mask), g.clone());
        // Pairs with an endpoint outside the mask are untouched.
        for u in 0..g.vertex_count() {
            for v in 0..g.vertex_count() {
                if u != v && !(mask.contains(u) && mask.contains(v)) {
                    prop_assert_eq!(once.has_edge(u, v), g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn induced_subgraph_keeps_adjacency((g, keep) in arb_graph_and_subset(10)) {
        let (h, map) = induced_subgraph(&g, &keep);
        prop_assert_eq!(h.vertex_count(), keep.len());
        for a in 0..h.vertex_count() {
            for b in 0..h.vertex_count() {
                prop_assert_eq!(h.has_edge(a, b), g.has_edge(map[a], map[b]));
            }
        }
    }
}

#[test]
fn half_graph_edge_layout() {
    for n in 1..=12 {
        let g = generate(&FamilySpec::HalfGraph { n }).unwrap();
        let (a, b) = (0..n, n..2 * n);
        for u in a.clone() {
            for v in a.clone() {
                assert!(!g.has_edge(u, v));
            }
        }
        for u in b.clone() {
            for v in b.clone() {
                assert!(!g.has_edge(u, v));
            }
        }
        let cross = a
            .flat_map(|u| b.clone().map(move |v| (u, v)))
            .filter(|&(u, v)| g.has_edge(u, v))
            .count();
        assert_eq!(cross, n * (n + 1) / 2);
        assert_eq!(g.edge_count(), cross);
    }
}

#[test]
fn random_families_are_reproducible() {
    let spec = FamilySpec::RandomRegular { n: 20, d: 3, seed: 11 };
    let g = generate(&spec).unwrap();
    assert_eq!(g, generate(&spec).unwrap());
    assert!((0..20).all(|v| g.degree(v) == 3));
    let gnp = FamilySpec::Gnp { n: 15, p: 0.3, seed: 5 };
    assert_eq!(generate(&gnp).unwrap(), generate(&gnp).unwrap());
}
