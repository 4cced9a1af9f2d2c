//! Approximation-ratio bounds: `rho` from the odd girth `2 rho - 1` of the
//! contracted graph, `alpha` as the dual mass inside the bipartizing set,
//! and the resulting ratio bound, assembled into a [`RatioReport`].

use alloc::format;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::bipartize::{
    edge_separate_covers, layer_decomposition, round_and_bipartize_with, CoverFamily, OptMode,
    RoundOptions, RoundReport,
};
use crate::graph::{boundary_and_inside, contract, odd_girth};
use crate::relax::{normalize, recover_dual, DualSolution};
use crate::{Error, Graph, Rational, Result, VertexSet};

/// Which bound applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CaseTag {
    /// `|S| = 1`: bound `1 + 1/rho`.
    SingleVertex,
    /// `S` independent: bound `1 + 1/rho` on the contracted graph.
    IndependentSet,
    /// Arbitrary `S` with non-bipartite `G / S`.
    GeneralOdd,
    /// `G / S` bipartite, or `S` empty: bound `1 + alpha`.
    GeneralBipartite,
}

/// Dual and cover family backing a bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificates {
    /// Tight dual for the normalized weights, `y(E) = 1`.
    pub dual: DualSolution,
    pub covers: Option<CoverFamily>,
    pub layer_sizes: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioReport {
    /// The input with weights scaled to `w(V) = 2`.
    pub normalized: Graph,
    pub set: VertexSet,
    pub cover: VertexSet,
    pub rho: Option<u32>,
    /// `None` when the weights are outside the normalized weight polytope.
    pub alpha: Option<Rational>,
    pub case_tag: CaseTag,
    /// `None` when the weights are outside the normalized weight polytope.
    pub bound: Option<Rational>,
    pub achieved: Option<Rational>,
    pub opt_mode: OptMode,
    pub round: RoundReport,
    pub certificates: Option<Certificates>,
}

impl RatioReport {
    /// `achieved <= bound`, or `None` when either side is missing.
    pub fn within_bound(&self) -> Option<bool> {
        Some(self.achieved.as_ref()? <= self.bound.as_ref()?)
    }
}

/// `alpha = y(E[S])` for a dual with `y(E) = 1`.
pub fn compute_alpha(dual: &DualSolution, set: &VertexSet, g: &Graph) -> Result<Rational> {
    if !dual.total.is_one() {
        return Err(Error::UnnormalizedDual(format!("{}", dual.total)));
    }
    if dual.values.len() != g.num_edges() {
        return Err(Error::InvalidSolution);
    }
    g.check_set(set)?;
    let (_, inside) = boundary_and_inside(g, set);
    Ok(dual.sum_over(&inside))
}

/// `(1 + 1/rho)(1 - alpha) + 2 alpha`, or `1 + alpha` when there is no
/// `rho` (bipartite contraction).
pub fn theoretical_bound(rho: Option<u32>, alpha: &Rational) -> Result<Rational> {
    if *alpha < Rational::zero() || *alpha > Rational::one() {
        return Err(Error::InvalidAlpha);
    }
    match rho {
        None => Ok(Rational::one() + alpha),
        Some(r) if r < 2 => Err(Error::InvalidRho),
        Some(r) => {
            let base = Rational::one() + Rational::new(1.into(), r.into());
            Ok(base * (Rational::one() - alpha) + alpha * Rational::from_integer(2.into()))
        }
    }
}

pub fn analyze(g: &Graph, set: &VertexSet, dual: Option<&DualSolution>) -> Result<RatioReport> {
    analyze_with(g, set, dual, &RoundOptions::default())
}

/// Runs round-and-bipartize on the normalized instance and attaches `rho`,
/// `alpha`, the applicable bound and its certificates.
///
/// A supplied dual is taken for the original weights and rescaled along
/// with them; it must be tight. Without one, [`recover_dual`] is used.
pub fn analyze_with(
    g: &Graph,
    set: &VertexSet,
    dual: Option<&DualSolution>,
    opts: &RoundOptions,
) -> Result<RatioReport> {
    g.check_set(set)?;
    let normalized = normalize(g)?;
    let dual = match dual {
        Some(y) => {
            let factor = Rational::from_integer(2.into()) / g.total_weight();
            let y = y.scaled(&factor);
            if !y.is_tight(&normalized) {
                return Err(Error::DualNotTight);
            }
            Some(y)
        }
        None => recover_dual(&normalized),
    };
    let (cover, round) = round_and_bipartize_with(&normalized, set, opts)?;

    let contracted = if set.is_empty() {
        None
    } else {
        Some(contract(&normalized, set)?)
    };
    let rho = contracted
        .as_ref()
        .and_then(|c| odd_girth(&c.graph))
        .map(|c| c.len().div_ceil(2) as u32);
    let case_tag = match rho {
        None => CaseTag::GeneralBipartite,
        Some(_) if set.len() == 1 => CaseTag::SingleVertex,
        Some(_) if normalized.is_independent(set) => CaseTag::IndependentSet,
        Some(_) => CaseTag::GeneralOdd,
    };

    let (alpha, bound, certificates) = match dual {
        None => (None, None, None),
        Some(y) => {
            let alpha = compute_alpha(&y, set, &normalized)?;
            let bound = theoretical_bound(rho, &alpha)?;
            let (covers, layer_sizes) = match &contracted {
                Some(c) => {
                    let layers = layer_decomposition(c)?;
                    let covers = match rho {
                        Some(_) => Some(edge_separate_covers(&normalized, c, &layers)?),
                        None => None,
                    };
                    (covers, layers.layer_sizes())
                }
                None => (None, Vec::new()),
            };
            let certificates = Certificates {
                dual: y,
                covers,
                layer_sizes,
            };
            (Some(alpha), Some(bound), Some(certificates))
        }
    };

    Ok(RatioReport {
        set: set.clone(),
        cover,
        rho,
        alpha,
        case_tag,
        bound,
        achieved: round.achieved.clone(),
        opt_mode: round.opt_mode,
        round,
        certificates,
        normalized,
    })
}
