mod common;

use std::sync::Arc;

use common::{arb_graph, arb_labeled, half_graph_brute, mis_brute, vc_brute};
use num_rational::BigRational;
use num_traits::ToPrimitive;
use pidecomp::baker::{
    baker_guarantee, baker_mis, bfs_layers, exact_mis, shift_pieces, DEFAULT_MIS_LIMIT,
};
use pidecomp::checkers::{compute_treedepth, contains_biclique_subgraph, make_checker};
use pidecomp::coloring::decompose_power_coloring;
use pidecomp::extremal::{densest_part_pair, kst_bound, KstQuery};
use pidecomp::graph::induced_subgraph;
use pidecomp::graph::{generate, FamilySpec};
use pidecomp::patterns::{half_graph_order, half_graph_pigeonhole, vc_dimension};
use pidecomp::witness::{validate_half_graph, validate_independent_set, validate_shatter};
use pidecomp::{Decomposition, VertexSubset};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn half_graph_order_matches_oracle(g in arb_graph(7)) {
        let r = half_graph_order(&g, 16);
        prop_assert!(r.exact);
        prop_assert_eq!(r.order, half_graph_brute(&g));
        prop_assert!(validate_half_graph(&g, &r.witness).is_ok());
    }

    #[test]
    fn half_graph_order_is_monotone(g in arb_graph(9), flags in proptest::collection::vec(any::<bool>(), 9)) {
        let keep = VertexSubset::from_flags(flags[..g.vertex_count()].to_vec());
        let (h, _) = induced_subgraph(&g, &keep);
        prop_assert!(half_graph_order(&h, 18).order <= half_graph_order(&g, 18).order);
    }

    #[test]
    fn vc_dimension_matches_oracle(g in arb_graph(8)) {
        let r = vc_dimension(&g, 8);
        prop_assert!(r.exact);
        prop_assert_eq!(r.dim, vc_brute(&g));
        prop_assert!(validate_shatter(&g, &r.witness).is_ok());
    }

    #[test]
    fn pigeonhole_meets_bucket_bound(m in 1usize..20, labels in proptest::collection::vec(0usize..4, 40)) {
        let g = Arc::new(generate(&FamilySpec::HalfGraph { n: m }).unwrap());
        let d = Decomposition::from_labels(Arc::clone(&g), &labels[..2 * m], 2).unwrap();
        let r = half_graph_pigeonhole(m, &d).unwrap();
        let nn = d.part_count() * d.part_count();
        prop_assert!(r.witness.order() >= m.div_ceil(nn));
        prop_assert!(validate_half_graph(&g, &r.witness).is_ok());
    }

    #[test]
    fn densest_pair_meets_floor_and_forces_bicliques((g, labels) in arb_labeled(12, 4)) {
        let g = Arc::new(g);
        let d = Decomposition::from_labels(Arc::clone(&g), &labels, 2).unwrap();
        let (i, j, count) = densest_part_pair(&g, &d).unwrap();
        let nn = d.part_count().max(1).pow(2);
        prop_assert!(i <= j);
        prop_assert!(count >= g.edge_count().div_ceil(nn));
        if g.vertex_count() == 0 {
            return Ok(());
        }
        let (union, _) = d.union_parts(&[i, j]).unwrap();
        prop_assert_eq!(union.edge_count(), count);
        // Brute-force maximum over all pairs.
        let best = (0..d.part_count())
            .flat_map(|a| (a..d.part_count()).map(move |b| (a, b)))
            .map(|(a, b)| d.union_parts(&[a, b]).unwrap().0.edge_count())
            .max()
            .unwrap();
        prop_assert_eq!(count, best);
        let bound = kst_bound(KstQuery::new(union.vertex_count() as u64, 2, 2).unwrap());
        if BigRational::from_integer(count.into()) > bound {
            prop_assert!(contains_biclique_subgraph(&union, 2, 2).is_some());
        }
    }

    #[test]
    fn kst_bound_dominates_random_c4_free_counts(g in arb_graph(12)) {
        prop_assume!(g.vertex_count() >= 1);
        if contains_biclique_subgraph(&g, 2, 2).is_none() {
            let b = kst_bound(KstQuery::new(g.vertex_count() as u64, 2, 2).unwrap());
            prop_assert!(BigRational::from_integer(g.edge_count().into()) <= b);
        }
    }

    #[test]
    fn exact_mis_matches_oracle(g in arb_graph(12)) {
        let r = exact_mis(&g, DEFAULT_MIS_LIMIT).unwrap();
        prop_assert!(validate_independent_set(&g, &r.set).is_ok());
        prop_assert_eq!(r.len(), mis_brute(&g));
    }

    #[test]
    fn baker_meets_its_guarantee(g in arb_graph(14), root in any::<prop::sample::Index>(), d in 2usize..5) {
        prop_assume!(g.vertex_count() > 0);
        let root = root.index(g.vertex_count());
        let layering = bfs_layers(&g, root).unwrap();
        prop_assert!(layering.is_valid_for(&g));
        let opt = exact_mis(&g, DEFAULT_MIS_LIMIT).unwrap().len();
        let r = baker_mis(&g, root, d, DEFAULT_MIS_LIMIT).unwrap();
        prop_assert!(validate_independent_set(&g, &r.set).is_ok());
        prop_assert!(r.len() >= baker_guarantee(opt, d));
    }

    #[test]
    fn power_coloring_unions_have_small_components(g in arb_graph(12), p in 1usize..4) {
        let r = decompose_power_coloring(Arc::new(g), p).unwrap();
        prop_assert!(r.bounds.colors <= r.bounds.greedy_bound.max(1));
        let limit = r.bounds.component_bound.to_usize().unwrap();
        let c = make_checker("components_le", &[limit]).unwrap();
        prop_assert!(r.decomposition.verify(&c).unwrap().passed());
    }
}

#[test]
fn half_graphs_have_their_own_order() {
    for n in 1..=6 {
        let g = generate(&FamilySpec::HalfGraph { n }).unwrap();
        let r = half_graph_order(&g, 2 * n);
        assert_eq!(r.order, n);
        assert!(r.exact);
    }
}

#[test]
fn grid_pieces_have_finite_treedepth() {
    for rows in 2..=6 {
        for cols in 2..=6 {
            let g = generate(&FamilySpec::Grid { rows, cols }).unwrap();
            let layering = bfs_layers(&g, 0).unwrap();
            for d in 2..=3 {
                for shift in 0..d {
                    for piece in shift_pieces(&g, &layering, d, shift) {
                        let keep = VertexSubset::from_indices(g.vertex_count(), piece).unwrap();
                        let (h, _) = induced_subgraph(&g, &keep);
                        let td = compute_treedepth(&h, 16).unwrap();
                        assert!(td.value >= 1);
                    }
                }
            }
        }
    }
}
