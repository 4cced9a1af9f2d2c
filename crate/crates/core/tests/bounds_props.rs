mod common;

use num_traits::{One, Zero};
use proptest::prelude::*;
use rbvc_core::bipartize::extend_to_bipartizing;
use rbvc_core::bipartize::OptMode;
use rbvc_core::bounds::{analyze, theoretical_bound, CaseTag};
use rbvc_core::graph::odd_girth;
use rbvc_core::relax::sample_qw_with_dual;
use rbvc_core::tightgen::lifted_dual_weight;
use rbvc_core::{int, ratio, Graph, Rational, VertexSet};

#[test]
fn c9_with_lifted_dual() {
    let g = Graph::cycle(9);
    let i: VertexSet = [0, 3].into_iter().collect();
    let t = lifted_dual_weight(&g, &i, None).unwrap();
    let r = analyze(&t.graph, &i, Some(&t.dual)).unwrap();
    assert_eq!(r.rho, Some(2));
    assert_eq!(r.case_tag, CaseTag::IndependentSet);
    assert_eq!(r.alpha, Some(int(0)));
    assert_eq!(r.bound, Some(ratio(3, 2)));
    assert_eq!(r.achieved, Some(ratio(3, 2)));
}

fn grid() -> Vec<Rational> {
    (0..=12).map(|i| ratio(i, 12)).collect()
}

#[test]
fn bound_endpoints_and_monotonicity() {
    for rho in 2u32..=9 {
        assert_eq!(
            theoretical_bound(Some(rho), &int(0)).unwrap(),
            int(1) + ratio(1, rho.into())
        );
        assert_eq!(theoretical_bound(Some(rho), &int(1)).unwrap(), int(2));
        let values: Vec<Rational> = grid()
            .iter()
            .map(|a| theoretical_bound(Some(rho), a).unwrap())
            .collect();
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
    }
    for a in grid() {
        let by_rho: Vec<Rational> = (2u32..=9)
            .map(|r| theoretical_bound(Some(r), &a).unwrap())
            .collect();
        assert!(by_rho.windows(2).all(|w| w[0] >= w[1]));
        // the bipartite case sits below every odd case
        assert!(theoretical_bound(None, &a).unwrap() <= by_rho[by_rho.len() - 1]);
    }
    assert_eq!(theoretical_bound(None, &int(0)).unwrap(), int(1));
    assert_eq!(theoretical_bound(None, &int(1)).unwrap(), int(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn achieved_within_bound(
        g in common::unit_graph(2, 11, 18),
        seed in any::<u64>(),
        extra in prop::collection::btree_set(0usize..11, 0..3),
    ) {
        prop_assume!(g.num_edges() > 0);
        let (w, y) = sample_qw_with_dual(&g, seed).unwrap();
        let start: VertexSet = extra.into_iter().filter(|&v| v < g.num_vertices()).collect();
        let s = extend_to_bipartizing(&w, &start);
        let r = analyze(&w, &s, Some(&y)).unwrap();
        prop_assert_eq!(r.opt_mode, OptMode::BruteExact);
        let alpha = r.alpha.clone().unwrap();
        prop_assert!(alpha >= Rational::zero() && alpha <= Rational::one());
        prop_assert_eq!(r.within_bound(), Some(true));
        match r.case_tag {
            CaseTag::SingleVertex => {
                prop_assert_eq!(s.len(), 1);
                prop_assert_eq!(
                    r.rho.map(|x| x as usize),
                    odd_girth(&w).map(|c| c.len().div_ceil(2))
                );
            }
            CaseTag::IndependentSet => {
                prop_assert!(alpha.is_zero());
                let rho = r.rho.unwrap();
                prop_assert_eq!(r.bound.clone().unwrap(), int(1) + ratio(1, rho.into()));
            }
            CaseTag::GeneralOdd | CaseTag::GeneralBipartite => {}
        }
    }
}
