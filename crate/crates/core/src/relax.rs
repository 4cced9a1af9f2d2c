//! The vertex cover LP relaxation and its dual.
//!
//! [`solve_lp`] finds an optimal half-integral point by computing a minimum
//! weight vertex cover of the bipartite double cover (two copies `v'`, `v''`
//! of every vertex, arcs `u' - v''` and `v' - u''` for each edge) with a
//! max-flow, then averaging the two copies. [`recover_dual`] runs the same
//! network as a saturation problem: it succeeds exactly when some `y >= 0`
//! satisfies `y(delta(v)) = w_v` everywhere, i.e. when the all-half point is
//! optimal.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::flow::{common_denominator, scaled, FlowNetwork};
use crate::graph::Subgraph;
use crate::{EdgeId, Error, Graph, Rational, Result, VertexId, VertexSet};

/// A coordinate of a half-integral LP point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum HalfValue {
    Zero,
    Half,
    One,
}

impl HalfValue {
    pub fn to_rational(self) -> Rational {
        match self {
            HalfValue::Zero => Rational::zero(),
            HalfValue::Half => Rational::new(1.into(), 2.into()),
            HalfValue::One => Rational::one(),
        }
    }

    /// Twice the value, as an integer in `{0, 1, 2}`.
    pub fn doubled(self) -> u8 {
        self as u8
    }

    fn from_doubled(d: u8) -> Self {
        match d {
            0 => HalfValue::Zero,
            1 => HalfValue::Half,
            _ => HalfValue::One,
        }
    }
}

/// Point of `{0, 1/2, 1}^V` with its objective value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfIntegralSolution {
    pub values: Vec<HalfValue>,
    pub objective: Rational,
}

impl HalfIntegralSolution {
    pub fn new(g: &Graph, values: Vec<HalfValue>) -> Self {
        let objective = values
            .iter()
            .zip(g.weights())
            .fold(Rational::zero(), |acc, (x, w)| acc + w * x.to_rational());
        Self { values, objective }
    }

    /// The point with every coordinate equal to 1/2.
    pub fn all_half(g: &Graph) -> Self {
        Self::new(g, vec![HalfValue::Half; g.num_vertices()])
    }

    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.values.len() == g.num_vertices()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.values[u].doubled() + self.values[v].doubled() >= 2)
    }

    pub fn class(&self, value: HalfValue) -> VertexSet {
        (0..self.values.len())
            .filter(|&v| self.values[v] == value)
            .collect()
    }
}

/// Non-negative edge values for the dual packing LP.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualSolution {
    pub values: Vec<Rational>,
    pub total: Rational,
}

impl DualSolution {
    pub fn new(values: Vec<Rational>) -> Self {
        let total = values.iter().fold(Rational::zero(), |acc, y| acc + y);
        Self { values, total }
    }

    pub fn zero(g: &Graph) -> Self {
        Self::new(vec![Rational::zero(); g.num_edges()])
    }

    /// `y(delta(v))`.
    pub fn load(&self, g: &Graph, v: VertexId) -> Rational {
        g.neighbors(v)
            .iter()
            .fold(Rational::zero(), |acc, &(e, _)| acc + &self.values[e])
    }

    pub fn sum_over<'a>(&self, edges: impl IntoIterator<Item = &'a EdgeId>) -> Rational {
        edges
            .into_iter()
            .fold(Rational::zero(), |acc, &e| acc + &self.values[e])
    }

    /// `y >= 0` and `y(delta(v)) <= w_v` everywhere.
    pub fn is_feasible(&self, g: &Graph) -> bool {
        self.values.len() == g.num_edges()
            && self.values.iter().all(|y| !y.is_negative())
            && (0..g.num_vertices()).all(|v| &self.load(g, v) <= g.weight(v))
    }

    /// Feasible with `y(delta(v)) = w_v` at every vertex.
    pub fn is_tight(&self, g: &Graph) -> bool {
        self.values.len() == g.num_edges()
            && self.values.iter().all(|y| !y.is_negative())
            && (0..g.num_vertices()).all(|v| &self.load(g, v) == g.weight(v))
    }

    pub fn scaled(&self, factor: &Rational) -> Self {
        Self::new(self.values.iter().map(|y| y * factor).collect())
    }
}

/// `V_0`, `V_1/2`, `V_1` of a half-integral optimum, and `G_1/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NtDecomposition {
    pub zero: VertexSet,
    pub half: VertexSet,
    pub one: VertexSet,
    pub half_subgraph: Subgraph,
}

// Source, sink, then v' at 2 + v and v'' at 2 + n + v.
struct DoubleCover {
    net: FlowNetwork,
    scale: BigInt,
    edge_arcs: Vec<(usize, usize)>,
}

const SOURCE: usize = 0;
const SINK: usize = 1;

impl DoubleCover {
    fn build(g: &Graph) -> Self {
        let n = g.num_vertices();
        let scale = common_denominator(g.weights());
        let caps: Vec<BigInt> = g.weights().iter().map(|w| scaled(w, &scale)).collect();
        let infinite: BigInt = caps.iter().fold(BigInt::one(), |acc, c| acc + c);
        let mut net = FlowNetwork::new(2 + 2 * n);
        for (v, cap) in caps.iter().enumerate() {
            net.add_arc(SOURCE, 2 + v, cap.clone());
            net.add_arc(2 + n + v, SINK, cap.clone());
        }
        let edge_arcs = g
            .edges()
            .iter()
            .map(|&(u, v)| {
                let a = net.add_arc(2 + u, 2 + n + v, infinite.clone());
                let b = net.add_arc(2 + v, 2 + n + u, infinite.clone());
                (a, b)
            })
            .collect();
        Self {
            net,
            scale,
            edge_arcs,
        }
    }
}

/// Optimal half-integral solution of the vertex cover LP.
///
/// The cover is read from the source side of the final residual network:
/// `v'` is taken when unreachable, `v''` when reachable.
pub fn solve_lp(g: &Graph) -> HalfIntegralSolution {
    let n = g.num_vertices();
    let mut dc = DoubleCover::build(g);
    dc.net.max_flow(SOURCE, SINK);
    let reach = dc.net.reachable(SOURCE);
    let values = (0..n)
        .map(|v| {
            let first = u8::from(!reach[2 + v]);
            let second = u8::from(reach[2 + n + v]);
            HalfValue::from_doubled(first + second)
        })
        .collect();
    HalfIntegralSolution::new(g, values)
}

pub fn nt_decompose(g: &Graph, x: &HalfIntegralSolution) -> Result<NtDecomposition> {
    if !x.is_feasible(g) {
        return Err(Error::InvalidSolution);
    }
    let half = x.class(HalfValue::Half);
    let keep: Vec<bool> = x.values.iter().map(|&v| v == HalfValue::Half).collect();
    Ok(NtDecomposition {
        zero: x.class(HalfValue::Zero),
        one: x.class(HalfValue::One),
        half,
        half_subgraph: g.induced(&keep),
    })
}

/// Scales the weights so that `w(V) = 2`.
pub fn normalize(g: &Graph) -> Result<Graph> {
    let total = g.total_weight();
    if total.is_zero() {
        return Err(Error::DegenerateWeights);
    }
    let factor = Rational::from_integer(2.into()) / total;
    g.with_weights(g.weights().iter().map(|w| w * &factor).collect())
}

/// A dual with `y(delta(v)) = w_v` at every vertex, if one exists.
///
/// On a normalized graph the result has `y(E) = 1`.
pub fn recover_dual(g: &Graph) -> Option<DualSolution> {
    let mut dc = DoubleCover::build(g);
    let flow = dc.net.max_flow(SOURCE, SINK);
    let demand: BigInt = g
        .weights()
        .iter()
        .fold(BigInt::zero(), |acc, w| acc + scaled(w, &dc.scale));
    if flow != demand {
        return None;
    }
    let denom = Rational::from_integer(dc.scale.clone() * 2);
    let values = dc
        .edge_arcs
        .iter()
        .map(|&(a, b)| Rational::from_integer(dc.net.flow_on(a) + dc.net.flow_on(b)) / &denom)
        .collect();
    Some(DualSolution::new(values))
}

/// Random point of the normalized weight polytope, as a convex combination
/// of the edge indicators `1_u + 1_v`, together with the combination itself
/// (which is a tight dual for the returned weights).
pub fn sample_qw_with_dual(g: &Graph, seed: u64) -> Result<(Graph, DualSolution)> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // about a third of the edges get zero mass so faces of the polytope show up
    let mut raw: Vec<u32> = (0..g.num_edges())
        .map(|_| {
            if rng.gen_ratio(1, 3) {
                0
            } else {
                rng.gen_range(1..=12)
            }
        })
        .collect();
    if raw.iter().all(|&a| a == 0) {
        let e = rng.gen_range(0..raw.len());
        raw[e] = 1;
    }
    let sum: u32 = raw.iter().sum();
    let lambdas: Vec<Rational> = raw
        .iter()
        .map(|&a| Rational::new(a.into(), sum.into()))
        .collect();
    let dual = DualSolution::new(lambdas);
    let weights = (0..g.num_vertices()).map(|v| dual.load(g, v)).collect();
    Ok((g.with_weights(weights)?, dual))
}

pub fn sample_qw(g: &Graph, seed: u64) -> Result<Graph> {
    sample_qw_with_dual(g, seed).map(|(g, _)| g)
}

/// Weights `1_u + 1_v` for the edge `e`; an extreme point of the polytope.
pub fn edge_indicator(g: &Graph, e: EdgeId) -> Result<Graph> {
    if e >= g.num_edges() {
        return Err(Error::UnknownEdge(e));
    }
    let (u, v) = g.endpoints(e);
    let mut weights = vec![Rational::zero(); g.num_vertices()];
    weights[u] = Rational::one();
    weights[v] = Rational::one();
    g.with_weights(weights)
}
