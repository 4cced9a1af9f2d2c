mod common;

use num_traits::One;
use proptest::prelude::*;
use rbvc_core::bipartize::{
    bipartite_min_cover, edge_separate_covers, extend_to_bipartizing, layer_decomposition,
    marked_edges_of, round_and_bipartize,
};
use rbvc_core::graph::{boundary_and_inside, contract, is_bipartite};
use rbvc_core::oracle::{brute_opt_vc, OracleBudget};
use rbvc_core::relax::{sample_qw_with_dual, solve_lp, HalfIntegralSolution};
use rbvc_core::{int, Graph, Rational, VertexSet};

/// Bipartite base on `k..n` plus `k` pairwise non-adjacent apex vertices.
fn apex_instance(max_n: usize, max_m: usize) -> impl Strategy<Value = (Graph, VertexSet)> {
    (1usize..=2, 5..=max_n)
        .prop_flat_map(move |(k, n)| {
            (
                Just((k, n)),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec((k..n, k..n), 0..=max_m),
                prop::collection::vec((0..k, k..n), 1..=6),
            )
        })
        .prop_map(|((k, n), side, pairs, apex)| {
            let mut es: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|&(u, v)| side[u] != side[v])
                .collect();
            es.extend(apex);
            (Graph::unit(n, es).unwrap(), (0..k).collect())
        })
}

fn check_layers(g: &Graph, s: &VertexSet) -> Result<(), TestCaseError> {
    let c = contract(g, s).unwrap();
    let layers = layer_decomposition(&c).unwrap();
    let hub = c.contracted_vertex;
    let mut seen = VertexSet::new();
    for (i, l) in layers.layers.iter().enumerate() {
        let side = if i % 2 == 0 {
            &layers.bipartition.side_a
        } else {
            &layers.bipartition.side_b
        };
        prop_assert!(l.is_subset(side));
        for v in l {
            prop_assert!(seen.insert(*v));
        }
    }
    prop_assert_eq!(seen.len(), c.graph.num_vertices() - 1);
    let layer_of = |v: usize| layers.layer_of(v).unwrap();
    for &(u, v) in c.graph.edges() {
        if u != hub && v != hub {
            prop_assert_eq!(layer_of(u).abs_diff(layer_of(v)), 1);
        }
    }
    let n_a: VertexSet = c
        .graph
        .neighbors(hub)
        .iter()
        .map(|&(_, v)| v)
        .filter(|v| layers.bipartition.side_a.contains(v))
        .collect();
    prop_assert_eq!(&layers.sources, &n_a);
    if !layers.layers.is_empty() {
        prop_assert_eq!(&layers.layers[0], &n_a);
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn bipartite_cover_is_exact(
        n in 2usize..12,
        side in prop::collection::vec(any::<bool>(), 12),
        pairs in prop::collection::vec((0usize..12, 0usize..12), 0..20),
        ws in prop::collection::vec(common::weight(), 12),
    ) {
        let es = pairs
            .into_iter()
            .filter(|&(u, v)| u < n && v < n && side[u] != side[v])
            .collect();
        let g = Graph::new(ws[..n].to_vec(), es).unwrap();
        let bip = is_bipartite(&g).bipartition().unwrap();
        let cover = bipartite_min_cover(&g, &bip).unwrap();
        prop_assert!(g.is_cover(&cover));
        prop_assert_eq!(g.weight_of(&cover), solve_lp(&g).objective);
        prop_assert_eq!(g.weight_of(&cover), brute_opt_vc(&g, &OracleBudget::default()).unwrap().1);
    }

    #[test]
    fn rounding_inside_half_class_is_a_two_approximation(g in common::graph(1, 12, 18)) {
        let solved = solve_lp(&g);
        let half = HalfIntegralSolution::all_half(&g);
        let lp = if half.objective == solved.objective { half } else { solved };
        let keep: Vec<bool> = lp.values.iter().map(|&v| v == rbvc_core::relax::HalfValue::Half).collect();
        let sub = g.induced(&keep);
        let local = extend_to_bipartizing(&sub.graph, &VertexSet::new());
        let s = sub.lift(&local);
        let (cover, report) = round_and_bipartize(&g, &s).unwrap();
        prop_assert!(g.is_cover(&cover));
        let (_, opt) = brute_opt_vc(&g, &OracleBudget::default()).unwrap();
        prop_assert_eq!(&report.opt_value, &opt);
        prop_assert!(report.cover_weight >= opt);
        prop_assert!(report.cover_weight <= opt * int(2));
        prop_assert_eq!(
            report.cover_weight,
            report.one_weight + report.set_weight + report.remainder_weight
        );
    }

    #[test]
    fn greedy_repair_bipartizes(g in common::unit_graph(1, 12, 24)) {
        let s = extend_to_bipartizing(&g, &VertexSet::new());
        prop_assert!(is_bipartite(&g.remove_vertices(&s).graph).bipartition().is_some());
        prop_assert_eq!(extend_to_bipartizing(&g, &s), s);
    }

    #[test]
    fn near_bipartite_layers(g in common::near_bipartite(12, 18)) {
        check_layers(&g, &[0].into_iter().collect())?;
    }

    #[test]
    fn edge_separate_families((g, s) in apex_instance(12, 18), seed in any::<u64>()) {
        let (w, y) = sample_qw_with_dual(&g, seed).unwrap();
        check_layers(&w, &s)?;
        let c = contract(&w, &s).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        let Ok(fam) = edge_separate_covers(&w, &c, &layers) else {
            // bipartite contraction
            return Ok(());
        };
        prop_assert!(fam.pairwise_disjoint());
        let rest = w.remove_vertices(&s);
        let (boundary, inside) = boundary_and_inside(&w, &s);
        let outside: Vec<usize> = (0..w.num_edges())
            .filter(|e| !boundary.contains(e) && !inside.contains(e))
            .collect();
        for (cover, marked) in fam.covers.iter().zip(&fam.marked_edges) {
            let local: VertexSet = rest
                .parent_vertex
                .iter()
                .enumerate()
                .filter(|(_, p)| cover.contains(p))
                .map(|(i, _)| i)
                .collect();
            prop_assert!(rest.graph.is_cover(&local));
            prop_assert_eq!(marked, &marked_edges_of(&w, &s, cover));
            prop_assert_eq!(w.weight_of(cover), y.sum_over(&outside) + y.sum_over(marked));
        }
        let (_, report) = round_and_bipartize(&w, &s).unwrap();
        let k = Rational::from_integer(fam.len().into());
        prop_assert!(report.achieved.unwrap() <= Rational::one() + Rational::one() / k);
    }
}
