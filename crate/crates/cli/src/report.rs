//! JSON reports. Rationals are `"num/den"` strings, vertex and edge ids are
//! 1-based.

use serde::{Deserialize, Serialize};

use rbvc_core::{Rational, VertexSet};

use crate::error::{CliError, Result};
use crate::format::{fmt_rational, parse_rational};

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub pass: bool,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct NtClasses {
    pub zero: Vec<usize>,
    pub half: Vec<usize>,
    pub one: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CoverJson {
    pub kind: String,
    pub vertices: Vec<usize>,
    pub weight: String,
    pub marked_edges: Vec<usize>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct CertificatesJson {
    /// Tight dual for the normalized weights, one entry per edge.
    pub dual: Vec<String>,
    /// `y(E[S])` under `dual`.
    pub alpha_dual: String,
    pub layer_sizes: Vec<usize>,
    pub covers: Vec<CoverJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct RotationJson {
    /// Dual on the edges of the complete graph over the sorted classes.
    pub initial_dual: Vec<String>,
    pub rotated_dual: Vec<String>,
    pub steps: usize,
    pub alpha: String,
    pub bound: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ColoringJson {
    pub k: usize,
    /// Classes in the order used by the analysis.
    pub classes: Vec<Vec<usize>>,
    pub rotation: Option<RotationJson>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct AnalyzeReport {
    pub seed: Option<u64>,
    pub set_source: String,
    pub brute_max: usize,
    pub normalized_weights: Vec<String>,
    pub lp_value: String,
    pub lp_solution: Vec<String>,
    pub nt_classes: NtClasses,
    pub s: Vec<usize>,
    pub rho: Option<u32>,
    pub alpha: Option<String>,
    pub alpha_source: Option<String>,
    pub case_tag: String,
    pub bound: Option<String>,
    pub achieved: Option<String>,
    pub opt_mode: String,
    pub opt_value: String,
    pub cover: Vec<usize>,
    pub cover_weight: String,
    pub certificates: Option<CertificatesJson>,
    pub coloring: Option<ColoringJson>,
    pub checks: Vec<Check>,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct ClassJson {
    pub class: Vec<usize>,
    pub rho: Option<usize>,
    pub value: String,
}

#[derive(Serialize, Deserialize, Debug, Clone, PartialEq, Eq)]
pub struct FcnReport {
    pub method: String,
    pub apex: Option<usize>,
    /// `value` is the fractional chromatic number rather than an upper bound.
    pub exact: bool,
    pub value: String,
    pub integrality_gap: Option<String>,
    pub sets: Vec<Vec<usize>>,
    pub values: Vec<String>,
    pub dual_z: Option<Vec<String>>,
    pub per_class: Vec<ClassJson>,
    pub checks: Vec<Check>,
}

pub(crate) fn rat(r: &Rational) -> String {
    fmt_rational(r)
}

pub(crate) fn rats(rs: &[Rational]) -> Vec<String> {
    rs.iter().map(fmt_rational).collect()
}

pub(crate) fn unrat(s: &str) -> Result<Rational> {
    parse_rational(s).map_err(CliError::Usage)
}

pub(crate) fn unrats(ss: &[String]) -> Result<Vec<Rational>> {
    ss.iter().map(|s| unrat(s)).collect()
}

pub(crate) fn ids<'a>(set: impl IntoIterator<Item = &'a usize>) -> Vec<usize> {
    set.into_iter().map(|v| v + 1).collect()
}

/// 1-based ids back to a 0-based set; `None` on id 0 or out of range.
pub(crate) fn unids(ids: &[usize], n: usize) -> Option<VertexSet> {
    ids.iter()
        .map(|&i| (1..=n).contains(&i).then(|| i - 1))
        .collect()
}

/// Accumulates named checks.
#[derive(Default)]
pub(crate) struct Checks(pub Vec<Check>);

impl Checks {
    pub fn add(&mut self, name: &str, pass: bool) {
        self.0.push(Check {
            name: name.to_string(),
            pass,
        });
    }
}
