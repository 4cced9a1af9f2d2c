use crate::{EdgeId, VertexId};

/// Errors raised by the library operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("edge {0} is a self-loop on vertex {1}")]
    SelfLoop(EdgeId, VertexId),
    #[error("vertex {0} out of range")]
    UnknownVertex(VertexId),
    #[error("edge {0} out of range")]
    UnknownEdge(EdgeId),
    #[error("negative weight on vertex {0}")]
    NegativeWeight(VertexId),
    #[error("weight vector has length {got}, expected {expected}")]
    WeightCount { expected: usize, got: usize },
    #[error("invalid vertex set: {0}")]
    InvalidSet(&'static str),
    #[error("solution is infeasible or malformed")]
    InvalidSolution,
    #[error("all weights are zero")]
    DegenerateWeights,
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is not bipartite under the given bipartition")]
    NotBipartite,
    #[error("removing the set does not leave a bipartite graph")]
    NotBipartizing,
    #[error("contracted graph is bipartite, rho is undefined")]
    BipartiteContraction,
    #[error("dual total is {0}, expected 1")]
    UnnormalizedDual(alloc::string::String),
    #[error("dual is not feasible and tight for the weights")]
    DualNotTight,
    #[error("rho must be at least 2")]
    InvalidRho,
    #[error("alpha must lie in [0, 1]")]
    InvalidAlpha,
    #[error("invalid cycle: {0}")]
    InvalidCycle(&'static str),
    #[error("coefficients do not form a probability distribution")]
    InvalidCombination,
    #[error("set is not independent")]
    NotIndependent,
    #[error("invalid generator parameters: {0}")]
    InvalidParams(&'static str),
    #[error("graph has no odd cycle")]
    NoOddCycle,
    #[error("need at least 4 color classes, got {0}")]
    TooFewColors(usize),
    #[error("weights are not in the normalized weight polytope")]
    NotInQW,
    #[error("invalid coloring: {0}")]
    InvalidColoring(&'static str),
    #[error("graph is not one vertex away from bipartite with an odd cycle")]
    NotNearBipartite,
    #[error("fractional chromatic number must be at least 2")]
    InvalidFcn,
    #[error("instance has {got} vertices, budget allows {max}")]
    TooLarge { max: usize, got: usize },
}

pub type Result<T> = core::result::Result<T, Error>;
