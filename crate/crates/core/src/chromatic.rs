//! Fractional chromatic number certificates.
//!
//! For a graph that becomes bipartite after deleting one vertex `v_p`, with
//! odd girth `2 rho - 1`, the value is `2 + 1/(rho - 1)`: a primal family
//! of `2 rho - 1` independent sets of weight `1/(rho - 1)` built from the
//! layers around `v_p`, and the dual `1/(rho - 1)` on a shortest odd cycle.
//! A 3-colorable graph gets an upper bound by contracting each class.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::bipartize::layer_decomposition;
use crate::coloring::Coloring;
use crate::graph::{contract, is_bipartite, odd_girth};
use crate::oracle::{max_weight_independent_set, OracleBudget};
use crate::{Error, Graph, Rational, Result, VertexId, VertexSet};

/// Largest graph whose dual is checked against every independent set.
pub const FULL_DUAL_CHECK_MAX: usize = 20;

/// Weighted independent sets; feasible when every vertex is covered with
/// total weight at least one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FractionalColoring {
    pub sets: Vec<VertexSet>,
    pub values: Vec<Rational>,
    pub objective: Rational,
}

impl FractionalColoring {
    pub fn new(sets: Vec<VertexSet>, values: Vec<Rational>) -> Self {
        let objective = values.iter().fold(Rational::zero(), |acc, v| acc + v);
        Self {
            sets,
            values,
            objective,
        }
    }

    /// Total weight of the sets containing each vertex.
    pub fn coverage(&self, g: &Graph) -> Vec<Rational> {
        let mut cover = vec![Rational::zero(); g.num_vertices()];
        for (set, value) in self.sets.iter().zip(&self.values) {
            for &v in set {
                cover[v] += value;
            }
        }
        cover
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.sets.len() == self.values.len()
            && self.values.iter().all(|v| !v.is_negative())
            && self
                .sets
                .iter()
                .all(|s| s.iter().all(|&v| v < g.num_vertices()) && g.is_independent(s))
            && self.coverage(g).iter().all(|c| *c >= Rational::one())
    }
}

/// Primal and dual solutions with equal objective.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FcnCertificate {
    pub primal: FractionalColoring,
    /// Vertex weights with `z(I) <= 1` on every independent set `I`.
    pub dual_z: Vec<Rational>,
    pub value: Rational,
}

impl FcnCertificate {
    /// Checks primal feasibility, dual feasibility, and that both objectives
    /// equal `value`.
    ///
    /// Dual feasibility only involves the support of `z`, so it is checked
    /// by a maximum weight independent set search on the induced support
    /// subgraph; that search is refused above [`FULL_DUAL_CHECK_MAX`]
    /// support vertices.
    pub fn verify(&self, g: &Graph) -> Result<bool> {
        if !self.primal.is_feasible(g)
            || self.primal.objective != self.value
            || self.dual_z.len() != g.num_vertices()
            || self.dual_z.iter().any(|z| z.is_negative())
        {
            return Ok(false);
        }
        let dual_total = self.dual_z.iter().fold(Rational::zero(), |acc, z| acc + z);
        if dual_total != self.value {
            return Ok(false);
        }
        let keep: Vec<bool> = self.dual_z.iter().map(|z| z.is_positive()).collect();
        let support = g.induced(&keep);
        let z: Vec<Rational> = support
            .parent_vertex
            .iter()
            .map(|&v| self.dual_z[v].clone())
            .collect();
        let budget = OracleBudget {
            max_vertices_exact: FULL_DUAL_CHECK_MAX,
            ..OracleBudget::default()
        };
        Ok(max_weight_independent_set(&support.graph, &z, &budget)? <= Rational::one())
    }
}

/// Certificate for `2 + 1/(rho - 1)` when `g` is non-bipartite and
/// `g \ vp` is bipartite.
///
/// With `~L_1 = {vp}` and `~L_{i+2} = L_i` for the layers around `vp`, the
/// set `U_k` takes the cyclic indices `k, k+3, k+5, ..., k+2rho-3` modulo
/// `2 rho - 1`. Layers past `L_{2rho-3}` are split by parity into `R_1`
/// (odd) and `R_2` (even); `I_k = U_k ∪ R_2` when `vp ∈ U_k`, else
/// `U_k ∪ R_1`.
pub fn fcn_single_vertex(g: &Graph, vp: VertexId) -> Result<FcnCertificate> {
    if vp >= g.num_vertices() {
        return Err(Error::UnknownVertex(vp));
    }
    let cycle = odd_girth(g).ok_or(Error::NotNearBipartite)?;
    let apex: VertexSet = [vp].into_iter().collect();
    let contracted = contract(g, &apex)?;
    let layers = layer_decomposition(&contracted).map_err(|_| Error::NotNearBipartite)?;
    let rho = cycle.len().div_ceil(2);
    let period = 2 * rho - 1;

    // cyclic layer index c in 1..=period, as parent vertex sets
    let cyclic = |c: usize| -> VertexSet {
        if c == 1 {
            apex.clone()
        } else {
            layers
                .layers
                .get(c - 2)
                .map_or_else(VertexSet::new, |l| contracted.lift(l))
        }
    };
    let trailing = |parity: usize| -> VertexSet {
        layers
            .layers
            .iter()
            .enumerate()
            .filter(|&(i, _)| i > period - 2 && i % 2 == parity)
            .flat_map(|(_, l)| contracted.lift(l))
            .collect()
    };
    let (r1, r2) = (trailing(1), trailing(0));

    let share = Rational::new(1.into(), (rho - 1).into());
    let mut sets = Vec::with_capacity(period);
    for k in 1..=period {
        let mut offsets = vec![0];
        offsets.extend((3..=period - 2).step_by(2));
        let indices: Vec<usize> = offsets.iter().map(|o| (k - 1 + o) % period + 1).collect();
        let mut set: VertexSet = indices.iter().flat_map(|&c| cyclic(c)).collect();
        if indices.contains(&1) {
            set.extend(&r2);
        } else {
            set.extend(&r1);
        }
        sets.push(set);
    }
    let primal = FractionalColoring::new(sets, vec![share.clone(); period]);

    let mut dual_z = vec![Rational::zero(); g.num_vertices()];
    for &v in &cycle.vertices {
        dual_z[v] = share.clone();
    }
    let value = Rational::from_integer(2.into()) + &share;
    debug_assert_eq!(primal.objective, value);
    Ok(FcnCertificate {
        primal,
        dual_z,
        value,
    })
}

/// Exact certificate for a bipartite graph: the two sides as the primal
/// and `z = 1` on both ends of one edge, value 2; an edgeless graph with
/// vertices gets value 1.
pub fn fcn_bipartite(g: &Graph) -> Result<FcnCertificate> {
    let bip = is_bipartite(g).bipartition().ok_or(Error::NotBipartite)?;
    let mut dual_z = vec![Rational::zero(); g.num_vertices()];
    let primal = match g.edges().first() {
        Some(&(u, v)) => {
            dual_z[u] = Rational::one();
            dual_z[v] = Rational::one();
            FractionalColoring::new(vec![bip.side_a, bip.side_b], vec![Rational::one(); 2])
        }
        None if g.num_vertices() > 0 => {
            dual_z[0] = Rational::one();
            FractionalColoring::new(vec![(0..g.num_vertices()).collect()], vec![Rational::one()])
        }
        None => FractionalColoring::new(Vec::new(), Vec::new()),
    };
    Ok(FcnCertificate {
        value: primal.objective.clone(),
        primal,
        dual_z,
    })
}

/// Result of contracting one color class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassBound {
    pub class: VertexSet,
    /// `None` when `G / V_i` is bipartite.
    pub rho: Option<usize>,
    pub value: Rational,
    pub primal: FractionalColoring,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeColorBound {
    /// `min_i` of the per-class values.
    pub bound: Rational,
    pub per_class: Vec<ClassBound>,
    /// Some contraction was bipartite, so `g` itself is bipartite and the
    /// bound is exactly 2.
    pub bipartite_contraction: bool,
}

impl ThreeColorBound {
    pub fn best(&self) -> &ClassBound {
        self.per_class
            .iter()
            .find(|c| c.value == self.bound)
            .expect("bound is attained")
    }
}

/// `chi_f(G) <= 2 + min_i 1/(rho_i - 1)`, where `2 rho_i - 1` is the odd
/// girth of `G / V_i`. Each family from [`fcn_single_vertex`] on `G / V_i`
/// is lifted by replacing the merged vertex with `V_i`.
pub fn fcn_upper_3colorable(g: &Graph, coloring: &Coloring) -> Result<ThreeColorBound> {
    let classes = coloring.nonempty_classes();
    if classes.len() != 3 {
        return Err(Error::InvalidColoring(
            "exactly three non-empty classes required",
        ));
    }
    let mut per_class = Vec::with_capacity(3);
    let mut bipartite_contraction = false;
    for class in classes {
        let contracted = contract(g, &class)?;
        let hub = contracted.contracted_vertex;
        let lift = |s: &VertexSet| -> VertexSet {
            let mut out = contracted.lift(s);
            if s.contains(&hub) {
                out.extend(&class);
            }
            out
        };
        let entry = match is_bipartite(&contracted.graph).bipartition() {
            Some(bip) => {
                bipartite_contraction = true;
                let sets = vec![lift(&bip.side_a), lift(&bip.side_b)];
                ClassBound {
                    class,
                    rho: None,
                    value: Rational::from_integer(2.into()),
                    primal: FractionalColoring::new(sets, vec![Rational::one(); 2]),
                }
            }
            None => {
                let cert = fcn_single_vertex(&contracted.graph, hub)?;
                let rho = odd_girth(&contracted.graph).map(|c| c.len().div_ceil(2));
                let sets = cert.primal.sets.iter().map(lift).collect();
                ClassBound {
                    class,
                    rho,
                    value: cert.value,
                    primal: FractionalColoring::new(sets, cert.primal.values),
                }
            }
        };
        debug_assert!(entry.primal.is_feasible(g));
        per_class.push(entry);
    }
    let bound = per_class
        .iter()
        .map(|c| c.value.clone())
        .min()
        .expect("three classes");
    Ok(ThreeColorBound {
        bound,
        per_class,
        bipartite_contraction,
    })
}

/// `2 - 2 / chi_f`.
pub fn integrality_gap(fcn: &Rational) -> Result<Rational> {
    let two = Rational::from_integer(2.into());
    if *fcn < two {
        return Err(Error::InvalidFcn);
    }
    Ok(&two - &two / fcn)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::heuristic_coloring;
    use crate::oracle::brute_fcn;
    use crate::{int, ratio};

    #[test]
    fn cycles() {
        for (n, value) in [
            (3, int(3)),
            (5, ratio(5, 2)),
            (7, ratio(7, 3)),
            (9, ratio(9, 4)),
        ] {
            let g = Graph::cycle(n);
            let cert = fcn_single_vertex(&g, 0).unwrap();
            assert_eq!(cert.value, value);
            assert_eq!(cert.primal.sets.len(), n);
            assert_eq!(cert.verify(&g), Ok(true));
        }
    }

    #[test]
    fn c5_sets_have_value_half() {
        let cert = fcn_single_vertex(&Graph::cycle(5), 2).unwrap();
        assert!(cert.primal.values.iter().all(|v| *v == ratio(1, 2)));
        assert!(cert.dual_z.iter().all(|z| *z == ratio(1, 2)));
    }

    #[test]
    fn near_bipartite_with_trailing_layers() {
        // C5 on 0..5 with a pendant path 2-5-6-7 and a disjoint edge 8-9
        let g = Graph::unit(
            10,
            vec![
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (4, 0),
                (2, 5),
                (5, 6),
                (6, 7),
                (8, 9),
                (0, 6),
            ],
        )
        .unwrap();
        let cert = fcn_single_vertex(&g, 0).unwrap();
        assert_eq!(cert.verify(&g), Ok(true));
        assert_eq!(cert.value, brute_fcn(&g, &OracleBudget::default()).unwrap());
    }

    #[test]
    fn preconditions() {
        assert_eq!(
            fcn_single_vertex(&Graph::cycle(6), 0),
            Err(Error::NotNearBipartite)
        );
        // two disjoint triangles: no single vertex bipartizes
        let g = Graph::unit(6, vec![(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_eq!(fcn_single_vertex(&g, 0), Err(Error::NotNearBipartite));
    }

    #[test]
    fn verify_rejects_bad_certificates() {
        let g = Graph::cycle(5);
        let mut cert = fcn_single_vertex(&g, 0).unwrap();
        cert.dual_z[0] = int(1);
        assert_eq!(cert.verify(&g), Ok(false));
        let mut cert = fcn_single_vertex(&g, 0).unwrap();
        cert.primal.sets[0].insert(1);
        assert_eq!(cert.verify(&g), Ok(false));
    }

    #[test]
    fn three_coloring_with_singleton_class_is_exact() {
        let g = Graph::cycle(5);
        let bound = fcn_upper_3colorable(&g, &heuristic_coloring(&g)).unwrap();
        assert_eq!(bound.bound, ratio(5, 2));
        assert!(!bound.bipartite_contraction);
        for c in &bound.per_class {
            assert!(c.primal.is_feasible(&g));
        }
    }

    #[test]
    fn three_coloring_c9() {
        let g = Graph::cycle(9);
        let classes = [vec![0, 3, 6], vec![1, 4, 7], vec![2, 5, 8]]
            .iter()
            .map(|c| c.iter().copied().collect())
            .collect();
        let col = Coloring::new(&g, classes).unwrap();
        let bound = fcn_upper_3colorable(&g, &col).unwrap();
        assert_eq!(bound.bound, int(3));
        assert!(bound.bound >= ratio(9, 4));
        assert!(bound.best().primal.is_feasible(&g));
    }

    #[test]
    fn three_coloring_rejects_two_classes() {
        let g = Graph::cycle(6);
        let col = Coloring::new(
            &g,
            vec![
                [0, 2, 4].into_iter().collect(),
                [1, 3, 5].into_iter().collect(),
                VertexSet::new(),
            ],
        )
        .unwrap();
        assert!(matches!(
            fcn_upper_3colorable(&g, &col),
            Err(Error::InvalidColoring(_))
        ));
    }

    #[test]
    fn bipartite_contraction_flag() {
        // path 0-1-2-3 colored with three classes
        let g = Graph::path(4);
        let col = Coloring::from_colors(&g, &[0, 1, 0, 2]).unwrap();
        let bound = fcn_upper_3colorable(&g, &col).unwrap();
        assert!(bound.bipartite_contraction);
        assert_eq!(bound.bound, int(2));
    }

    #[test]
    fn bipartite_certificates() {
        let g = Graph::cycle(6);
        let cert = fcn_bipartite(&g).unwrap();
        assert_eq!(cert.value, int(2));
        assert_eq!(cert.verify(&g), Ok(true));
        let empty = Graph::unit(3, vec![]).unwrap();
        assert_eq!(fcn_bipartite(&empty).unwrap().value, int(1));
        assert_eq!(fcn_bipartite(&Graph::cycle(5)), Err(Error::NotBipartite));
    }

    #[test]
    fn gap_values() {
        assert_eq!(integrality_gap(&ratio(5, 2)), Ok(ratio(6, 5)));
        assert_eq!(integrality_gap(&int(2)), Ok(int(1)));
        assert_eq!(integrality_gap(&int(3)), Ok(ratio(4, 3)));
        assert_eq!(integrality_gap(&ratio(3, 2)), Err(Error::InvalidFcn));
    }
}
