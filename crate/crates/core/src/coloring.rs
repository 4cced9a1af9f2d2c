//! Bipartizing sets from a proper coloring.
//!
//! With `k >= 4` colors the `k - 2` lightest classes form `S`. The classes
//! are collapsed onto a complete graph `K_k` carrying the class weights and
//! the dual mass between classes; rotating dual mass around 4-cycles through
//! the two heaviest classes then drives the mass inside `S` down to at most
//! `1 - 4/k`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::bounds::theoretical_bound;
use crate::graph::{contract, odd_girth};
use crate::relax::{normalize, recover_dual, DualSolution};
use crate::{Error, Graph, Rational, Result, VertexSet};

/// Partition of the vertices into independent color classes. Empty classes
/// are kept but do not count as colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<VertexSet>,
}

impl Coloring {
    pub fn new(g: &Graph, classes: Vec<VertexSet>) -> Result<Self> {
        let mut seen = vec![false; g.num_vertices()];
        for class in &classes {
            for &v in class {
                if v >= g.num_vertices() {
                    return Err(Error::UnknownVertex(v));
                }
                if seen[v] {
                    return Err(Error::InvalidColoring("vertex in two classes"));
                }
                seen[v] = true;
            }
            if !g.is_independent(class) {
                return Err(Error::InvalidColoring("class is not independent"));
            }
        }
        if seen.contains(&false) {
            return Err(Error::InvalidColoring("vertex without a class"));
        }
        Ok(Self { classes })
    }

    /// Classes from a color index per vertex.
    pub fn from_colors(g: &Graph, colors: &[usize]) -> Result<Self> {
        if colors.len() != g.num_vertices() {
            return Err(Error::InvalidColoring("one color per vertex required"));
        }
        let k = colors.iter().max().map_or(0, |&c| c + 1);
        let mut classes = vec![VertexSet::new(); k];
        for (v, &c) in colors.iter().enumerate() {
            classes[c].insert(v);
        }
        Self::new(g, classes)
    }

    pub fn classes(&self) -> &[VertexSet] {
        &self.classes
    }

    /// Number of non-empty classes.
    pub fn num_colors(&self) -> usize {
        self.classes.iter().filter(|c| !c.is_empty()).count()
    }

    pub fn nonempty_classes(&self) -> Vec<VertexSet> {
        self.classes
            .iter()
            .filter(|c| !c.is_empty())
            .cloned()
            .collect()
    }
}

/// DSATUR: repeatedly color the vertex with the most distinct neighbor
/// colors (ties by degree, then lowest index) with the smallest free color.
pub fn heuristic_coloring(g: &Graph) -> Coloring {
    let n = g.num_vertices();
    let mut color: Vec<Option<usize>> = vec![None; n];
    let mut neighbor_colors: Vec<VertexSet> = vec![VertexSet::new(); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v].is_none())
            .max_by(|&a, &b| {
                (neighbor_colors[a].len(), g.degree(a))
                    .cmp(&(neighbor_colors[b].len(), g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        let c = (0..).find(|c| !neighbor_colors[v].contains(c)).unwrap();
        color[v] = Some(c);
        for &(_, u) in g.neighbors(v) {
            neighbor_colors[u].insert(c);
        }
    }
    let colors: Vec<usize> = color.into_iter().map(Option::unwrap).collect();
    Coloring::from_colors(g, &colors).expect("greedy coloring is proper")
}

/// The complete graph on the color classes, sorted by weight (ties by
/// smallest vertex), with `y'(i, j) = y(E[V_i, V_j])`; `S'` is the first
/// `k - 2` classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxTuple {
    pub k_graph: Graph,
    pub k_dual: DualSolution,
    pub s_prime: VertexSet,
    pub classes: Vec<VertexSet>,
}

impl AuxTuple {
    pub fn k(&self) -> usize {
        self.classes.len()
    }

    /// `y'(E[S'])`.
    pub fn alpha(&self) -> Rational {
        let k = self.k();
        let mut total = Rational::zero();
        for i in 0..k - 2 {
            for j in i + 1..k - 2 {
                total += &self.k_dual.values[pair_edge(k, i, j)];
            }
        }
        total
    }

    /// Non-negative and tight at every class vertex.
    pub fn is_complementary(&self) -> bool {
        self.k_dual.is_tight(&self.k_graph)
    }

    /// Union of the classes in `S'`.
    pub fn bipartizing_set(&self) -> VertexSet {
        self.s_prime
            .iter()
            .flat_map(|&i| self.classes[i].iter().copied())
            .collect()
    }
}

// Index of edge (i, j), i < j, in `Graph::complete(k)`.
fn pair_edge(k: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < k);
    i * (2 * k - i - 1) / 2 + (j - i - 1)
}

pub fn build_aux(g: &Graph, dual: &DualSolution, coloring: &Coloring) -> Result<AuxTuple> {
    let mut classes = coloring.nonempty_classes();
    let k = classes.len();
    if k < 4 {
        return Err(Error::TooFewColors(k));
    }
    if !dual.total.is_one() {
        return Err(Error::UnnormalizedDual(alloc::format!("{}", dual.total)));
    }
    if !dual.is_tight(g) {
        return Err(Error::NotInQW);
    }
    classes.sort_by(|a, b| {
        g.weight_of(a)
            .cmp(&g.weight_of(b))
            .then(a.first().cmp(&b.first()))
    });
    let mut class_of = vec![0; g.num_vertices()];
    for (i, class) in classes.iter().enumerate() {
        for &v in class {
            class_of[v] = i;
        }
    }
    let k_graph =
        Graph::complete(k).with_weights(classes.iter().map(|c| g.weight_of(c)).collect())?;
    let mut values = vec![Rational::zero(); k_graph.num_edges()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (a, b) = (class_of[u], class_of[v]);
        let (i, j) = if a < b { (a, b) } else { (b, a) };
        values[pair_edge(k, i, j)] += &dual.values[e];
    }
    Ok(AuxTuple {
        k_graph,
        k_dual: DualSolution::new(values),
        s_prime: (0..k - 2).collect(),
        classes,
    })
}

/// Final state of [`rotate_duals`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rotation {
    pub aux: AuxTuple,
    pub alpha: Rational,
    pub steps: usize,
}

pub fn rotate_duals(aux: &AuxTuple) -> Rotation {
    rotate_duals_observed(aux, |_| {})
}

/// While the heavy pair `(k-2, k-1)` and some edge `(i, j)` inside `S'`
/// both carry dual mass, move `eps = min` of the two around the 4-cycle
/// `i j (k-2) (k-1)`. The lexicographically smallest `(i, j)` is taken
/// each time. `observe` sees every intermediate state.
pub fn rotate_duals_observed(aux: &AuxTuple, mut observe: impl FnMut(&AuxTuple)) -> Rotation {
    let k = aux.k();
    let mut aux = aux.clone();
    let heavy = pair_edge(k, k - 2, k - 1);
    let mut steps = 0;
    loop {
        let y = &aux.k_dual.values;
        if !y[heavy].is_positive() {
            break;
        }
        let inside = (0..k - 2)
            .flat_map(|i| (i + 1..k - 2).map(move |j| (i, j)))
            .find(|&(i, j)| y[pair_edge(k, i, j)].is_positive());
        let Some((i, j)) = inside else { break };
        let e = pair_edge(k, i, j);
        let eps = y[e].clone().min(y[heavy].clone());
        let mut values = aux.k_dual.values.clone();
        values[e] -= &eps;
        values[heavy] -= &eps;
        values[pair_edge(k, j, k - 2)] += &eps;
        values[pair_edge(k, i, k - 1)] += &eps;
        aux.k_dual = DualSolution::new(values);
        steps += 1;
        observe(&aux);
    }
    Rotation {
        alpha: aux.alpha(),
        aux,
        steps,
    }
}

/// Outcome of [`coloring_pipeline`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringReport {
    pub coloring: Coloring,
    /// Normalized tight dual the auxiliary instance was built from.
    pub dual: DualSolution,
    pub initial: AuxTuple,
    pub rotation: Rotation,
    pub set: VertexSet,
    pub alpha: Rational,
    /// `(1 + 1/2)(1 - alpha) + 2 alpha`, at most `2 - 2/k`.
    pub bound: Rational,
}

impl ColoringReport {
    pub fn k(&self) -> usize {
        self.initial.k()
    }
}

pub fn coloring_pipeline(g: &Graph, coloring: Option<Coloring>) -> Result<ColoringReport> {
    let normalized = normalize(g)?;
    let dual = recover_dual(&normalized).ok_or(Error::NotInQW)?;
    coloring_pipeline_with_dual(&normalized, &dual, coloring)
}

/// As [`coloring_pipeline`] for normalized weights with a given tight dual.
pub fn coloring_pipeline_with_dual(
    g: &Graph,
    dual: &DualSolution,
    coloring: Option<Coloring>,
) -> Result<ColoringReport> {
    let coloring = coloring.unwrap_or_else(|| heuristic_coloring(g));
    let initial = build_aux(g, dual, &coloring)?;
    let rotation = rotate_duals(&initial);
    let bound = theoretical_bound(Some(2), &rotation.alpha)?;
    Ok(ColoringReport {
        set: initial.bipartizing_set(),
        alpha: rotation.alpha.clone(),
        bound,
        coloring,
        dual: dual.clone(),
        initial,
        rotation,
    })
}

/// A bipartizing set read off a coloring: nothing for two colors, the class
/// whose contraction has the largest odd girth for three (lowest index on
/// ties), and the `k - 2` lightest classes otherwise.
pub fn choose_bipartizing_set(g: &Graph, coloring: &Coloring) -> VertexSet {
    let mut classes = coloring.nonempty_classes();
    match classes.len() {
        0..=2 => VertexSet::new(),
        3 => {
            let girth = |c: &VertexSet| {
                contract(g, c)
                    .ok()
                    .and_then(|cg| odd_girth(&cg.graph))
                    .map_or(usize::MAX, |cycle| cycle.len())
            };
            let mut best = 0;
            for i in 1..3 {
                if girth(&classes[i]) > girth(&classes[best]) {
                    best = i;
                }
            }
            classes.swap_remove(best)
        }
        k => {
            classes.sort_by(|a, b| {
                g.weight_of(a)
                    .cmp(&g.weight_of(b))
                    .then(a.first().cmp(&b.first()))
            });
            classes[..k - 2].iter().flatten().copied().collect()
        }
    }
}
