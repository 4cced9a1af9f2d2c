//! The `fcn` command: fractional chromatic number certificates.

use rbvc_core::chromatic::{
    fcn_bipartite, fcn_single_vertex, fcn_upper_3colorable, integrality_gap, FcnCertificate,
    FractionalColoring,
};
use rbvc_core::coloring::{heuristic_coloring, Coloring};
use rbvc_core::graph::{is_bipartite, odd_girth};
use rbvc_core::{Error, Graph, Rational, VertexId, VertexSet};

use crate::error::Result;
use crate::format::Instance;
use crate::report::{ids, rat, rats, unids, unrat, unrats, Check, Checks, ClassJson, FcnReport};

fn is_apex(g: &Graph, v: VertexId) -> bool {
    let rest = g.remove_vertices(&[v].into_iter().collect());
    is_bipartite(&rest.graph).bipartition().is_some()
}

fn exact_report(method: &str, apex: Option<VertexId>, cert: FcnCertificate) -> FcnReport {
    FcnReport {
        method: method.into(),
        apex: apex.map(|v| v + 1),
        exact: true,
        integrality_gap: integrality_gap(&cert.value).ok().as_ref().map(rat),
        value: rat(&cert.value),
        sets: cert.primal.sets.iter().map(ids).collect(),
        values: rats(&cert.primal.values),
        dual_z: Some(rats(&cert.dual_z)),
        per_class: Vec::new(),
        checks: Vec::new(),
    }
}

/// Picks the method: the given apex; a bipartite graph; the first vertex
/// whose removal leaves a bipartite graph; otherwise an upper bound from a
/// 3-coloring taken from the file or DSATUR.
pub fn run_fcn(inst: &Instance, apex: Option<VertexId>) -> Result<FcnReport> {
    let mut report = select(inst, apex)?;
    report.checks = verify_fcn(inst, &report)?;
    Ok(report)
}

fn select(inst: &Instance, apex: Option<VertexId>) -> Result<FcnReport> {
    let g = &inst.graph;
    if let Some(vp) = apex {
        let cert = fcn_single_vertex(g, vp)?;
        if !is_apex(g, vp) {
            return Err(Error::NotNearBipartite.into());
        }
        return Ok(exact_report("single-vertex", Some(vp), cert));
    }
    if is_bipartite(g).bipartition().is_some() {
        return Ok(exact_report("bipartite", None, fcn_bipartite(g)?));
    }
    if let Some(vp) = (0..g.num_vertices()).find(|&v| is_apex(g, v)) {
        return Ok(exact_report(
            "single-vertex",
            Some(vp),
            fcn_single_vertex(g, vp)?,
        ));
    }
    let coloring = match &inst.colors {
        Some(c) => Coloring::from_colors(g, c)?,
        None => heuristic_coloring(g),
    };
    if coloring.num_colors() != 3 {
        return Err(Error::NotNearBipartite.into());
    }
    let b = fcn_upper_3colorable(g, &coloring)?;
    let best = b.best();
    Ok(FcnReport {
        method: "three-coloring".into(),
        apex: None,
        exact: false,
        value: rat(&b.bound),
        integrality_gap: None,
        sets: best.primal.sets.iter().map(ids).collect(),
        values: rats(&best.primal.values),
        dual_z: None,
        per_class: b
            .per_class
            .iter()
            .map(|c| ClassJson {
                class: ids(&c.class),
                rho: c.rho,
                value: rat(&c.value),
            })
            .collect(),
        checks: Vec::new(),
    })
}

/// Re-checks an `fcn` report against the graph.
pub fn verify_fcn(inst: &Instance, report: &FcnReport) -> Result<Vec<Check>> {
    let g = &inst.graph;
    let n = g.num_vertices();
    let mut checks = Checks::default();
    let sets: Option<Vec<VertexSet>> = report.sets.iter().map(|s| unids(s, n)).collect();
    let Some(sets) = sets else {
        checks.add("set-ids", false);
        return Ok(checks.0);
    };
    let value = unrat(&report.value)?;
    let primal = FractionalColoring::new(sets, unrats(&report.values)?);
    checks.add("primal-feasible", primal.is_feasible(g));
    checks.add("primal-objective", primal.objective == value);

    match report.method.as_str() {
        "single-vertex" | "bipartite" => {
            let dual_z = match &report.dual_z {
                Some(z) => unrats(z)?,
                None => Vec::new(),
            };
            let cert = FcnCertificate {
                primal,
                dual_z,
                value: value.clone(),
            };
            checks.add("dual-feasible", report.exact && cert.verify(g) == Ok(true));
            if report.method == "single-vertex" {
                let apex_ok = report
                    .apex
                    .and_then(|a| a.checked_sub(1))
                    .is_some_and(|vp| vp < n && is_apex(g, vp));
                let expected = odd_girth(g).map(|c| {
                    let rho = c.len().div_ceil(2);
                    Rational::from_integer(2.into()) + Rational::new(1.into(), (rho - 1).into())
                });
                checks.add("apex", apex_ok);
                checks.add("value-formula", expected == Some(value.clone()));
            } else {
                checks.add("bipartite", is_bipartite(g).bipartition().is_some());
            }
            let gap = report.integrality_gap.as_deref().map(unrat).transpose()?;
            checks.add("integrality-gap", gap == integrality_gap(&value).ok());
        }
        "three-coloring" => {
            let values: Vec<Rational> = report
                .per_class
                .iter()
                .map(|c| unrat(&c.value))
                .collect::<Result<_>>()?;
            let min = values.iter().min().cloned();
            checks.add(
                "bound-is-minimum",
                values.len() == 3 && min == Some(value.clone()),
            );
            let per_class_ok = report.per_class.iter().zip(&values).all(|(c, v)| {
                let expected = match c.rho {
                    None => Rational::from_integer(2.into()),
                    Some(r) if r >= 2 => {
                        Rational::from_integer(2.into()) + Rational::new(1.into(), (r - 1).into())
                    }
                    Some(_) => return false,
                };
                &expected == v
            });
            checks.add("per-class-values", per_class_ok);
            checks.add("upper-bound-only", !report.exact && report.dual_z.is_none());
        }
        _ => checks.add("method", false),
    }
    Ok(checks.0)
}
