//! Round and bipartize: take `V_1` and the bipartizing set `S`, then solve
//! the remaining bipartite part exactly. Also the layer decomposition of the
//! bipartite remainder around a contracted vertex and the family of
//! pairwise edge-separate covers built from it.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::flow::{common_denominator, scaled, FlowNetwork};
use crate::graph::{
    components, is_bipartite, odd_girth, Bipartiteness, Bipartition, ContractedGraph,
};
use crate::oracle::{self, OracleBudget};
use crate::relax::{nt_decompose, solve_lp, HalfIntegralSolution};
use crate::{EdgeId, Error, Graph, Rational, Result, VertexId, VertexSet};

/// Exact minimum-weight vertex cover of a bipartite graph, via min cut
/// (source to side A, side B to sink, infinite arcs along the edges).
pub fn bipartite_min_cover(g: &Graph, bip: &Bipartition) -> Result<VertexSet> {
    if !bip.is_valid_for(g) {
        return Err(Error::NotBipartite);
    }
    let n = g.num_vertices();
    let (source, sink) = (n, n + 1);
    let scale = common_denominator(g.weights());
    let infinite = g
        .weights()
        .iter()
        .fold(BigInt::one(), |acc, w| acc + scaled(w, &scale));
    let mut net = FlowNetwork::new(n + 2);
    for v in 0..n {
        let cap = scaled(g.weight(v), &scale);
        if bip.side_a.contains(&v) {
            net.add_arc(source, v, cap);
        } else {
            net.add_arc(v, sink, cap);
        }
    }
    for &(u, v) in g.edges() {
        let (a, b) = if bip.side_a.contains(&u) {
            (u, v)
        } else {
            (v, u)
        };
        net.add_arc(a, b, infinite.clone());
    }
    net.max_flow(source, sink);
    let reach = net.reachable(source);
    Ok((0..n)
        .filter(|&v| bip.side_a.contains(&v) != reach[v])
        .collect())
}

/// How the optimum in the ratio denominator was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OptMode {
    /// Exact optimum from the branch-and-bound oracle.
    BruteExact,
    /// LP optimum, a lower bound on the integral optimum.
    LpLowerBound,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RoundOptions {
    /// Largest vertex count for which the exact optimum is computed.
    pub brute_max: usize,
}

impl Default for RoundOptions {
    fn default() -> Self {
        Self {
            brute_max: OracleBudget::default().max_vertices_exact,
        }
    }
}

/// Weight accounting of one run of [`round_and_bipartize`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RoundReport {
    /// The half-integral optimum the rounding started from.
    pub lp: HalfIntegralSolution,
    pub one_class: VertexSet,
    /// `W`, the exact cover of `G_1/2 \ S`.
    pub remainder_cover: VertexSet,
    pub one_weight: Rational,
    pub set_weight: Rational,
    pub remainder_weight: Rational,
    pub cover_weight: Rational,
    pub opt_value: Rational,
    pub opt_mode: OptMode,
    /// `cover_weight / opt_value`; `None` when the optimum is zero but the
    /// cover is not.
    pub achieved: Option<Rational>,
}

pub fn round_and_bipartize(g: &Graph, set: &VertexSet) -> Result<(VertexSet, RoundReport)> {
    round_and_bipartize_with(g, set, &RoundOptions::default())
}

/// Algorithm: solve the LP, keep `V_1`, add `S`, and cover `G_1/2 \ S`
/// exactly.
///
/// When the all-half point is optimal it is used as the LP solution, so
/// that `G_1/2 = G` whenever the weights lie in the normalized weight
/// polytope; otherwise the double-cover optimum from [`solve_lp`] is used.
pub fn round_and_bipartize_with(
    g: &Graph,
    set: &VertexSet,
    opts: &RoundOptions,
) -> Result<(VertexSet, RoundReport)> {
    g.check_set(set)?;
    let solved = solve_lp(g);
    let all_half = HalfIntegralSolution::all_half(g);
    let lp = if all_half.objective == solved.objective {
        all_half
    } else {
        solved
    };
    let nt = nt_decompose(g, &lp)?;

    let keep: Vec<bool> = (0..g.num_vertices())
        .map(|v| nt.half.contains(&v) && !set.contains(&v))
        .collect();
    let rest = g.induced(&keep);
    let bip = is_bipartite(&rest.graph)
        .bipartition()
        .ok_or(Error::NotBipartizing)?;
    let remainder_cover = rest.lift(&bipartite_min_cover(&rest.graph, &bip)?);

    let cover: VertexSet = nt
        .one
        .iter()
        .chain(set)
        .chain(&remainder_cover)
        .copied()
        .collect();
    debug_assert!(g.is_cover(&cover));

    let (opt_value, opt_mode) = if g.num_vertices() <= opts.brute_max {
        let budget = OracleBudget {
            max_vertices_exact: opts.brute_max,
            ..OracleBudget::default()
        };
        (oracle::brute_opt_vc(g, &budget)?.1, OptMode::BruteExact)
    } else {
        (lp.objective.clone(), OptMode::LpLowerBound)
    };
    let cover_weight = g.weight_of(&cover);
    let achieved = if !opt_value.is_zero() {
        Some(&cover_weight / &opt_value)
    } else if cover_weight.is_zero() {
        Some(Rational::one())
    } else {
        None
    };
    let report = RoundReport {
        one_weight: g.weight_of(&nt.one),
        set_weight: g.weight_of(set),
        remainder_weight: g.weight_of(&remainder_cover),
        cover_weight,
        opt_value,
        opt_mode,
        achieved,
        one_class: nt.one,
        remainder_cover,
        lp,
    };
    Ok((cover, report))
}

/// Grows `set` until `G \ set` is bipartite, adding the smallest vertex of
/// each remaining witness odd cycle.
pub fn extend_to_bipartizing(g: &Graph, set: &VertexSet) -> VertexSet {
    let mut out = set.clone();
    loop {
        let rest = g.remove_vertices(&out);
        match is_bipartite(&rest.graph) {
            Bipartiteness::Bipartite(_) => return out,
            Bipartiteness::OddCycle(c) => {
                let v = c
                    .vertices
                    .iter()
                    .map(|&v| rest.parent_vertex[v])
                    .min()
                    .unwrap();
                out.insert(v);
            }
        }
    }
}

/// Side of the bipartition of `G / S` minus the merged vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    A,
    B,
}

/// BFS layers `L_0 .. L_l` of the bipartite remainder, measured from the
/// side-A neighbors of the merged vertex. Vertex ids are those of the
/// contracted graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub layers: Vec<VertexSet>,
    /// Index of the first of the two layers holding the components that do
    /// not touch the merged vertex.
    pub dummy_start: Option<usize>,
    /// `N_A(v^S) = L_0`.
    pub sources: VertexSet,
    pub bipartition: Bipartition,
}

impl LayerDecomposition {
    pub fn side_of(&self, layer: usize) -> Side {
        if layer.is_multiple_of(2) {
            Side::A
        } else {
            Side::B
        }
    }

    pub fn layer_sizes(&self) -> Vec<usize> {
        self.layers.iter().map(|l| l.len()).collect()
    }

    pub fn layer_of(&self, v: VertexId) -> Option<usize> {
        self.layers.iter().position(|l| l.contains(&v))
    }
}

pub fn layer_decomposition(contracted: &ContractedGraph) -> Result<LayerDecomposition> {
    let g = &contracted.graph;
    let hub = contracted.contracted_vertex;
    let rest = g.remove_vertices(&[hub].into_iter().collect());
    let bip = is_bipartite(&rest.graph)
        .bipartition()
        .ok_or(Error::NotBipartizing)?;

    // image of a contracted-graph vertex in `rest`
    let mut local = vec![usize::MAX; g.num_vertices()];
    for (i, &p) in rest.parent_vertex.iter().enumerate() {
        local[p] = i;
    }
    let touches: VertexSet = g.neighbors(hub).iter().map(|&(_, v)| local[v]).collect();

    let mut in_a = vec![false; rest.graph.num_vertices()];
    let mut dummy = vec![false; rest.graph.num_vertices()];
    for comp in components(&rest.graph) {
        let sees_a = comp
            .iter()
            .any(|v| touches.contains(v) && bip.side_a.contains(v));
        let sees_b = comp
            .iter()
            .any(|v| touches.contains(v) && bip.side_b.contains(v));
        let flip = sees_b && !sees_a;
        for &v in &comp {
            in_a[v] = bip.side_a.contains(&v) != flip;
            dummy[v] = !sees_a && !sees_b;
        }
    }

    let sources: VertexSet = touches.iter().copied().filter(|&v| in_a[v]).collect();
    let mut dist = vec![usize::MAX; rest.graph.num_vertices()];
    let mut queue: VecDeque<VertexId> = sources.iter().copied().collect();
    for &s in &sources {
        dist[s] = 0;
    }
    while let Some(u) = queue.pop_front() {
        for &(_, v) in rest.graph.neighbors(u) {
            if dist[v] == usize::MAX {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    let connected_layers = dist
        .iter()
        .filter(|&&d| d != usize::MAX)
        .max()
        .map_or(0, |&q| q + 1);
    let mut layers = vec![VertexSet::new(); connected_layers];
    for v in 0..rest.graph.num_vertices() {
        if dist[v] != usize::MAX {
            layers[dist[v]].insert(rest.parent_vertex[v]);
        }
    }
    let has_dummy = dummy.iter().any(|&d| d);
    let dummy_start = has_dummy.then_some(connected_layers);
    if has_dummy {
        // keep even layers on side A: the first dummy layer has parity q + 1
        let (first, second): (Vec<bool>, Vec<bool>) = if connected_layers % 2 == 0 {
            (vec![true], vec![false])
        } else {
            (vec![false], vec![true])
        };
        for want_a in [first[0], second[0]] {
            layers.push(
                (0..rest.graph.num_vertices())
                    .filter(|&v| dummy[v] && in_a[v] == want_a)
                    .map(|v| rest.parent_vertex[v])
                    .collect(),
            );
        }
    }

    let mut bipartition = Bipartition::default();
    for v in 0..rest.graph.num_vertices() {
        let p = rest.parent_vertex[v];
        if in_a[v] {
            bipartition.side_a.insert(p);
        } else {
            bipartition.side_b.insert(p);
        }
    }
    Ok(LayerDecomposition {
        layers,
        dummy_start,
        sources: rest.lift(&sources),
        bipartition,
    })
}

/// Which construction produced a cover.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverKind {
    SideA,
    SideB,
    /// Starts with `L_{2j-1} ∪ L_{2j}` and alternates outward.
    Layered(usize),
}

/// Feasible covers of `G \ S` with their surplus edge sets `E_U`, in parent
/// graph ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverFamily {
    pub kinds: Vec<CoverKind>,
    pub covers: Vec<VertexSet>,
    pub marked_edges: Vec<BTreeSet<EdgeId>>,
}

impl CoverFamily {
    pub fn len(&self) -> usize {
        self.covers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.covers.is_empty()
    }

    pub fn pairwise_disjoint(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.marked_edges.iter().flatten().all(|&e| seen.insert(e))
    }
}

/// `E_U`: edges of `G \ S` with both endpoints in `U`, plus edges from `U`
/// into `S`.
pub fn marked_edges_of(g: &Graph, set: &VertexSet, cover: &VertexSet) -> BTreeSet<EdgeId> {
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, (u, v))| {
            let (iu, iv) = (cover.contains(u), cover.contains(v));
            let (su, sv) = (set.contains(u), set.contains(v));
            (iu && iv) || (iu && sv) || (iv && su)
        })
        .map(|(e, _)| e)
        .collect()
}

/// The `rho` covers of `G \ S` (with `2 rho - 1` the odd girth of `G / S`):
/// both sides of the bipartition, and for each `j` in `1..=rho-2` the cover
/// `L_{2j-1} ∪ L_{2j} ∪ L_{2j+2} ∪ L_{2j+4} ∪ ... ∪ L_{2j-3} ∪ L_{2j-5} ∪ ...`.
pub fn edge_separate_covers(
    parent: &Graph,
    contracted: &ContractedGraph,
    layers: &LayerDecomposition,
) -> Result<CoverFamily> {
    let girth = odd_girth(&contracted.graph).ok_or(Error::BipartiteContraction)?;
    let rho = girth.len().div_ceil(2);
    let mut kinds = vec![CoverKind::SideA, CoverKind::SideB];
    let mut contracted_covers = vec![
        layers.bipartition.side_a.clone(),
        layers.bipartition.side_b.clone(),
    ];
    for j in 1..=rho.saturating_sub(2) {
        let cover: VertexSet = layers
            .layers
            .iter()
            .enumerate()
            .filter(|&(i, _)| {
                i == 2 * j - 1
                    || i == 2 * j
                    || (i > 2 * j && i % 2 == 0)
                    || (i < 2 * j - 1 && i % 2 == 1)
            })
            .flat_map(|(_, l)| l.iter().copied())
            .collect();
        kinds.push(CoverKind::Layered(j));
        contracted_covers.push(cover);
    }
    let covers: Vec<VertexSet> = contracted_covers
        .iter()
        .map(|c| contracted.lift(c))
        .collect();
    let marked_edges = covers
        .iter()
        .map(|c| marked_edges_of(parent, &contracted.set, c))
        .collect();
    Ok(CoverFamily {
        kinds,
        covers,
        marked_edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::contract;
    use crate::{int, ratio};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn c5_basic() -> Graph {
        Graph::cycle(5)
            .with_weights(vec![
                ratio(2, 3),
                ratio(1, 3),
                ratio(1, 3),
                ratio(1, 3),
                ratio(1, 3),
            ])
            .unwrap()
    }

    #[test]
    fn min_cover_single_edge() {
        let g = Graph::path(2)
            .with_weights(vec![ratio(1, 4), ratio(3, 4)])
            .unwrap();
        let bip = is_bipartite(&g).bipartition().unwrap();
        assert_eq!(bipartite_min_cover(&g, &bip).unwrap(), set(&[0]));
    }

    #[test]
    fn min_cover_p4_and_c4() {
        let p4 = Graph::path(4).with_weights(vec![ratio(1, 3); 4]).unwrap();
        let bip = is_bipartite(&p4).bipartition().unwrap();
        let c = bipartite_min_cover(&p4, &bip).unwrap();
        assert!(p4.is_cover(&c));
        assert_eq!(p4.weight_of(&c), ratio(2, 3));

        let c4 = Graph::cycle(4);
        let bip = is_bipartite(&c4).bipartition().unwrap();
        let c = bipartite_min_cover(&c4, &bip).unwrap();
        assert_eq!(c4.weight_of(&c), int(2));
        assert!(c == set(&[0, 2]) || c == set(&[1, 3]));
    }

    #[test]
    fn min_cover_rejects_bad_bipartition() {
        let g = Graph::path(3);
        let bad = Bipartition {
            side_a: set(&[0, 1]),
            side_b: set(&[2]),
        };
        assert_eq!(bipartite_min_cover(&g, &bad), Err(Error::NotBipartite));
    }

    #[test]
    fn rounding_tight_c5() {
        let (cover, report) = round_and_bipartize(&c5_basic(), &set(&[0])).unwrap();
        assert!(c5_basic().is_cover(&cover));
        assert_eq!(report.cover_weight, ratio(4, 3));
        assert_eq!(report.opt_value, int(1));
        assert_eq!(report.opt_mode, OptMode::BruteExact);
        assert_eq!(report.achieved, Some(ratio(4, 3)));
    }

    #[test]
    fn rounding_tight_triangle() {
        let g = Graph::cycle(3)
            .with_weights(vec![int(1), ratio(1, 2), ratio(1, 2)])
            .unwrap();
        let (_, report) = round_and_bipartize(&g, &set(&[0])).unwrap();
        assert_eq!(report.achieved, Some(ratio(3, 2)));
    }

    #[test]
    fn rounding_bipartite_is_exact() {
        let g = Graph::cycle(6);
        let (cover, report) = round_and_bipartize(&g, &VertexSet::new()).unwrap();
        assert_eq!(g.weight_of(&cover), int(3));
        assert_eq!(report.achieved, Some(int(1)));
    }

    #[test]
    fn rounding_rejects_non_bipartizing_set() {
        assert_eq!(
            round_and_bipartize(&Graph::cycle(5), &VertexSet::new()),
            Err(Error::NotBipartizing)
        );
    }

    #[test]
    fn rounding_uses_lp_lower_bound_above_threshold() {
        let opts = RoundOptions { brute_max: 3 };
        let (_, report) = round_and_bipartize_with(&c5_basic(), &set(&[0]), &opts).unwrap();
        assert_eq!(report.opt_mode, OptMode::LpLowerBound);
        assert_eq!(report.opt_value, int(1));
    }

    #[test]
    fn extend_cases() {
        let c5 = Graph::cycle(5);
        assert_eq!(extend_to_bipartizing(&c5, &VertexSet::new()).len(), 1);
        assert_eq!(extend_to_bipartizing(&c5, &set(&[2])), set(&[2]));
        let two = Graph::unit(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        let s = extend_to_bipartizing(&two, &VertexSet::new());
        assert_eq!(s.len(), 2);
        assert!(is_bipartite(&two.remove_vertices(&s).graph)
            .bipartition()
            .is_some());
    }

    #[test]
    fn layers_of_contracted_c5() {
        let g = Graph::cycle(5);
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        assert_eq!(layers.layer_sizes(), vec![1, 1, 1, 1]);
        assert_eq!(layers.dummy_start, None);
        // N_B of the merged vertex sits in L_3 = L_{2 rho - 3}, rho = 3
        let hub_b: Vec<usize> = c
            .graph
            .neighbors(c.contracted_vertex)
            .iter()
            .map(|&(_, v)| v)
            .filter(|v| layers.bipartition.side_b.contains(v))
            .collect();
        assert_eq!(hub_b.len(), 1);
        assert_eq!(layers.layer_of(hub_b[0]), Some(3));
    }

    #[test]
    fn dummy_component_goes_last() {
        // triangle 0-1-2 plus a disjoint 4-cycle 3-4-5-6
        let g = Graph::unit(
            7,
            vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)],
        )
        .unwrap();
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        assert_eq!(layers.dummy_start, Some(2));
        assert_eq!(layers.layer_sizes(), vec![1, 1, 2, 2]);
        for (i, l) in layers.layers.iter().enumerate() {
            let side = if layers.side_of(i) == Side::A {
                &layers.bipartition.side_a
            } else {
                &layers.bipartition.side_b
            };
            assert!(l.is_subset(side));
        }
    }

    #[test]
    fn star_contracted_at_leaves_has_one_layer() {
        let g = Graph::unit(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = contract(&g, &set(&[1, 2, 3])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        assert_eq!(layers.layers.len(), 1);
        assert_eq!(c.lift(&layers.layers[0]), set(&[0]));
    }

    #[test]
    fn one_sided_component_is_flipped() {
        // merged vertex 0 touches only vertex 2 of the path 1-2-3
        let g = Graph::unit(4, vec![(0, 2), (1, 2), (2, 3)]).unwrap();
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        assert_eq!(c.lift(&layers.sources), set(&[2]));
        assert_eq!(layers.layer_sizes(), vec![1, 2]);
    }

    #[test]
    fn covers_of_contracted_c5() {
        // path a-b-c-d = 1-2-3-4 after contracting 0
        let g = Graph::cycle(5);
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        let fam = edge_separate_covers(&g, &c, &layers).unwrap();
        assert_eq!(fam.covers, vec![set(&[1, 3]), set(&[2, 4]), set(&[2, 3])]);
        let marked: Vec<Vec<usize>> = fam
            .marked_edges
            .iter()
            .map(|m| m.iter().copied().collect())
            .collect();
        // edge 0 = (0,1), edge 4 = (4,0), edge 2 = (2,3)
        assert_eq!(marked, vec![vec![0], vec![4], vec![2]]);
        assert!(fam.pairwise_disjoint());
    }

    #[test]
    fn triangle_gives_two_covers() {
        let g = Graph::cycle(3);
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        let fam = edge_separate_covers(&g, &c, &layers).unwrap();
        assert_eq!(fam.kinds, vec![CoverKind::SideA, CoverKind::SideB]);
        assert!(fam.pairwise_disjoint());
    }

    #[test]
    fn covers_need_an_odd_contraction() {
        let g = Graph::cycle(4);
        let c = contract(&g, &set(&[0])).unwrap();
        let layers = layer_decomposition(&c).unwrap();
        assert_eq!(
            edge_separate_covers(&g, &c, &layers),
            Err(Error::BipartiteContraction)
        );
    }
}
