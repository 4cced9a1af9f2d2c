//! The `generate` command: instances whose ratio meets the bound.

use rbvc_core::tightgen::{
    basic_weight, convex_weight, gen_alpha_bipartite, gen_alpha_rho, lifted_dual_weight,
    shortest_odd_cycles, TightInstance, DEFAULT_CYCLE_LIMIT,
};
use rbvc_core::{Error, Graph, Rational, VertexId, VertexSet};

use crate::error::{CliError, Result};
use crate::format::{fmt_rational, Instance};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Basic,
    Convex,
    Lifted,
    AlphaRho,
    AlphaBip,
}

/// Parameters for every family; each family reads the ones it needs.
#[derive(Clone, Debug, Default)]
pub struct GenParams {
    /// Odd cycle length for `basic`.
    pub cycle: Option<usize>,
    /// 0-based apex for `basic`.
    pub apex: Option<VertexId>,
    /// Cycle length for `convex`, `lifted` and `alpha-bip`.
    pub len: Option<usize>,
    /// Number of cycles glued at the apex for `convex`.
    pub cycles: Option<usize>,
    pub lambdas: Option<Vec<Rational>>,
    /// 0-based independent set for `lifted`.
    pub set: Option<VertexSet>,
    pub alpha: Option<Rational>,
    pub rho: Option<u32>,
    pub limit_cycles: Option<usize>,
}

fn need<T: Clone>(v: &Option<T>, flag: &str) -> Result<T> {
    v.clone()
        .ok_or_else(|| CliError::Usage(format!("this family needs {flag}")))
}

/// `count` odd cycles of length `len` sharing vertex 0 and nothing else.
pub fn glued_cycles(count: usize, len: usize) -> Result<Graph> {
    if count == 0 || len < 3 || len.is_multiple_of(2) {
        return Err(Error::InvalidParams("need at least one odd cycle of length >= 3").into());
    }
    let mut edges = Vec::new();
    let mut next = 1;
    for _ in 0..count {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 0));
    }
    Ok(Graph::unit(next, edges)?)
}

pub fn generate(family: Family, p: &GenParams) -> Result<Instance> {
    let t: TightInstance = match family {
        Family::Basic => {
            let n = need(&p.cycle, "--cycle")?;
            if n < 3 || n.is_multiple_of(2) {
                return Err(Error::InvalidParams("cycle length must be odd and at least 3").into());
            }
            let vp = p.apex.unwrap_or(0);
            if vp >= n {
                return Err(Error::UnknownVertex(vp).into());
            }
            let cycle: Vec<VertexId> = (0..n).map(|i| (vp + i) % n).collect();
            basic_weight(&Graph::cycle(n), vp, &cycle)?
        }
        Family::Convex => {
            let len = need(&p.len, "--len")?;
            let count = p.cycles.unwrap_or(2);
            let g = glued_cycles(count, len)?;
            let limit = p.limit_cycles.unwrap_or(DEFAULT_CYCLE_LIMIT);
            let (cycles, _) = shortest_odd_cycles(&g, 0, limit)?;
            let lambdas = match &p.lambdas {
                Some(l) if l.len() == cycles.len() => l.clone(),
                Some(l) => {
                    return Err(CliError::Usage(format!(
                        "{} lambdas given for {} cycles",
                        l.len(),
                        cycles.len()
                    )))
                }
                None => vec![Rational::new(1.into(), cycles.len().into()); cycles.len()],
            };
            let combination: Vec<(Vec<VertexId>, Rational)> = cycles
                .into_iter()
                .map(|c| c.vertices)
                .zip(lambdas)
                .collect();
            convex_weight(&g, 0, &combination)?
        }
        Family::Lifted => {
            let len = need(&p.len, "--len")?;
            if len < 3 {
                return Err(Error::InvalidParams("cycle length must be at least 3").into());
            }
            let set = need(&p.set, "--set")?;
            lifted_dual_weight(&Graph::cycle(len), &set, None)?
        }
        Family::AlphaRho => gen_alpha_rho(&need(&p.alpha, "--alpha")?, need(&p.rho, "--rho")?)?,
        Family::AlphaBip => {
            gen_alpha_bipartite(&need(&p.alpha, "--alpha")?, need(&p.len, "--len")?)?
        }
    };
    let mut inst = Instance::new(t.graph);
    inst.comments.push(format!(
        "expected ratio {}",
        fmt_rational(&t.expected_ratio)
    ));
    inst.set = Some(t.set);
    inst.dual = Some(t.dual);
    Ok(inst)
}

/// Reads back the `expected ratio` comment written by [`generate`].
pub fn expected_ratio(inst: &Instance) -> Option<Rational> {
    inst.comments.iter().find_map(|c| {
        let r = c.strip_prefix("expected ratio ")?;
        crate::format::parse_rational(r).ok()
    })
}
