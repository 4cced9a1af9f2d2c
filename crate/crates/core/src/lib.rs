//! Round-and-bipartize analysis for weighted vertex cover.
//!
//! Everything here works in exact rational arithmetic: half-integral LP
//! solving through the bipartite double cover, Nemhauser–Trotter
//! decomposition, dual recovery for the normalized weight polytope,
//! odd-girth and contraction machinery, the approximation-ratio bounds
//! parameterized by the odd girth of the contracted graph and the internal
//! dual mass `alpha`, generators for instances meeting those bounds with
//! equality, the coloring-based dual rotation, and fractional chromatic
//! number certificates.
//!
//! The crate is `no_std` and only needs `alloc`. File formats and the
//! command-line tool live in the `rbvc` crate.
#![no_std]

extern crate alloc;

pub mod bipartize;
pub mod bounds;
pub mod chromatic;
pub mod coloring;
mod error;
mod flow;
pub mod graph;
pub mod oracle;
pub mod relax;
pub mod tightgen;

pub use error::{Error, Result};
pub use graph::{EdgeId, Graph, VertexId, VertexSet};

/// Exact rational scalar used for weights, duals and bounds.
pub type Rational = num_rational::BigRational;

/// Builds `numer / denom` as a [`Rational`].
///
/// Panics if `denom` is zero.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(numer.into(), denom.into())
}

/// Builds the integer `n` as a [`Rational`].
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
