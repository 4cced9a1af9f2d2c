mod common;

use num_traits::Zero;
use proptest::prelude::*;
use rbvc_core::coloring::{build_aux, heuristic_coloring, rotate_duals_observed, Coloring};
use rbvc_core::graph::is_bipartite;
use rbvc_core::oracle::{brute_opt_vc, OracleBudget};
use rbvc_core::relax::sample_qw_with_dual;
use rbvc_core::{int, ratio};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn dsatur_is_proper(g in common::unit_graph(1, 14, 30)) {
        let c = heuristic_coloring(&g);
        prop_assert!(Coloring::new(&g, c.classes().to_vec()).is_ok());
        if is_bipartite(&g).bipartition().is_some() && g.num_edges() > 0 {
            prop_assert!(c.num_colors() <= 2);
        }
    }

    #[test]
    fn rotation_invariants(
        g in common::unit_graph(4, 10, 30),
        seed in any::<u64>(),
        colors in prop::collection::vec(0usize..6, 10),
    ) {
        prop_assume!(g.num_edges() > 0);
        let (w, y) = sample_qw_with_dual(&g, seed).unwrap();
        // the random colors when they happen to be proper, DSATUR otherwise
        let coloring = Coloring::from_colors(&w, &colors[..w.num_vertices()])
            .unwrap_or_else(|_| heuristic_coloring(&w));
        let Ok(aux) = build_aux(&w, &y, &coloring) else {
            return Ok(());
        };
        let k = aux.k();
        prop_assert_eq!(aux.k_graph.total_weight(), int(2));
        prop_assert!(aux.is_complementary());
        let heavy = aux.k_graph.weight(k - 2) + aux.k_graph.weight(k - 1);
        prop_assert!(heavy >= ratio(4, k as i64));
        for i in 1..k {
            prop_assert!(aux.k_graph.weight(i - 1) <= aux.k_graph.weight(i));
        }

        let mut ok = true;
        let r = rotate_duals_observed(&aux, |a| {
            ok &= a.is_complementary() && a.k_dual.total == int(1);
        });
        prop_assert!(ok);
        let inside = (k - 2) * (k - 3) / 2;
        prop_assert!(r.steps <= inside + 1);
        let heavy_dual = &r.aux.k_dual.values[r.aux.k_graph.edge_between(k - 2, k - 1).unwrap()];
        prop_assert!(r.alpha.is_zero() || heavy_dual.is_zero());
        prop_assert!(r.alpha <= int(1) - ratio(4, k as i64));

        let s = aux.bipartizing_set();
        prop_assert_eq!(w.weight_of(&s), aux.k_graph.weight_of(&aux.s_prime));
        let budget = OracleBudget::default();
        let (_, lhs) = brute_opt_vc(&w.remove_vertices(&s).graph, &budget).unwrap();
        let (_, rhs) = brute_opt_vc(&aux.k_graph.remove_vertices(&aux.s_prime).graph, &budget).unwrap();
        prop_assert!(lhs <= rhs);
    }
}
