//! The `analyze` command: round-and-bipartize with its ratio bound, and an
//! independent re-check of a saved report.

use std::collections::BTreeSet;

use num_traits::{One, Zero};
use rbvc_core::bipartize::{
    extend_to_bipartizing, layer_decomposition, marked_edges_of, CoverKind, OptMode, RoundOptions,
};
use rbvc_core::bounds::{analyze_with, theoretical_bound, CaseTag};
use rbvc_core::coloring::{
    build_aux, choose_bipartizing_set, coloring_pipeline_with_dual, heuristic_coloring,
    rotate_duals, Coloring,
};
use rbvc_core::graph::{boundary_and_inside, contract, is_bipartite, odd_girth};
use rbvc_core::oracle::{brute_opt_vc, OracleBudget};
use rbvc_core::relax::{normalize, recover_dual, sample_qw_with_dual, solve_lp, DualSolution};
use rbvc_core::{Graph, Rational, VertexSet};

use crate::error::{CliError, Result};
use crate::format::Instance;
use crate::report::{
    ids, rat, rats, unids, unrat, unrats, AnalyzeReport, CertificatesJson, Check, Checks,
    ColoringJson, CoverJson, NtClasses, RotationJson,
};

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub auto_color: bool,
    pub greedy_bipartize: bool,
    /// Replace the weights with a random point of the weight polytope.
    pub seed: Option<u64>,
    pub brute_max: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        Self {
            auto_color: false,
            greedy_bipartize: false,
            seed: None,
            brute_max: RoundOptions::default().brute_max,
        }
    }
}

/// Normalized graph and the tight dual for it, if the weights admit one.
fn prepare(inst: &Instance, seed: Option<u64>) -> Result<(Graph, Option<DualSolution>)> {
    let (graph, dual) = match seed {
        Some(seed) => {
            let (g, y) = sample_qw_with_dual(&inst.graph, seed)?;
            (g, Some(y))
        }
        None => (inst.graph.clone(), inst.dual.clone()),
    };
    let normalized = normalize(&graph)?;
    let dual = match dual {
        Some(y) => {
            if y.values.len() != graph.num_edges() {
                return Err(rbvc_core::Error::InvalidSolution.into());
            }
            let y = y.scaled(&(Rational::from_integer(2.into()) / graph.total_weight()));
            if !y.is_tight(&normalized) {
                return Err(rbvc_core::Error::DualNotTight.into());
            }
            Some(y)
        }
        None => recover_dual(&normalized),
    };
    Ok((normalized, dual))
}

fn coloring_of(inst: &Instance, g: &Graph) -> Result<Coloring> {
    match &inst.colors {
        Some(c) => Ok(Coloring::from_colors(g, c)?),
        None => Ok(heuristic_coloring(g)),
    }
}

fn case_name(tag: CaseTag) -> &'static str {
    match tag {
        CaseTag::SingleVertex => "single-vertex",
        CaseTag::IndependentSet => "independent-set",
        CaseTag::GeneralOdd => "general-odd",
        CaseTag::GeneralBipartite => "general-bipartite",
    }
}

fn kind_name(kind: CoverKind) -> String {
    match kind {
        CoverKind::SideA => "side-a".into(),
        CoverKind::SideB => "side-b".into(),
        CoverKind::Layered(j) => format!("layered-{j}"),
    }
}

pub fn run_analyze(inst: &Instance, opts: &AnalyzeOptions) -> Result<AnalyzeReport> {
    if opts.auto_color && opts.greedy_bipartize {
        return Err(CliError::Usage(
            "--auto-color and --greedy-bipartize are exclusive".into(),
        ));
    }
    let (g, dual) = prepare(inst, opts.seed)?;
    let file_set = inst.set.clone().unwrap_or_default();

    let mut coloring_json = None;
    let mut rotated = None;
    let (set, set_source) = if opts.auto_color {
        let coloring = coloring_of(inst, &g)?;
        let k = coloring.num_colors();
        let pipeline = match &dual {
            Some(y) if k >= 4 => Some(coloring_pipeline_with_dual(&g, y, Some(coloring.clone()))?),
            _ => None,
        };
        match pipeline {
            Some(p) => {
                coloring_json = Some(ColoringJson {
                    k,
                    classes: p.initial.classes.iter().map(ids).collect(),
                    rotation: Some(RotationJson {
                        initial_dual: rats(&p.initial.k_dual.values),
                        rotated_dual: rats(&p.rotation.aux.k_dual.values),
                        steps: p.rotation.steps,
                        alpha: rat(&p.alpha),
                        bound: rat(&p.bound),
                    }),
                });
                rotated = Some((p.alpha.clone(), p.bound.clone()));
                (p.set, "coloring")
            }
            None => {
                coloring_json = Some(ColoringJson {
                    k,
                    classes: coloring.nonempty_classes().iter().map(ids).collect(),
                    rotation: None,
                });
                (choose_bipartizing_set(&g, &coloring), "coloring")
            }
        }
    } else if opts.greedy_bipartize {
        (extend_to_bipartizing(&g, &file_set), "greedy")
    } else {
        (file_set, "file")
    };

    let round_opts = RoundOptions {
        brute_max: opts.brute_max,
    };
    let r = analyze_with(&g, &set, dual.as_ref(), &round_opts)?;
    let lp = &r.round.lp;
    let class = |v: rbvc_core::relax::HalfValue| ids(&lp.class(v));
    use rbvc_core::relax::HalfValue as H;

    let (rho, alpha, bound, alpha_source) = match rotated {
        Some((a, b)) => (Some(2), Some(a), Some(b), Some("coloring-rotation")),
        None => (
            r.rho,
            r.alpha.clone(),
            r.bound.clone(),
            r.alpha.as_ref().map(|_| "dual"),
        ),
    };

    let certificates = r.certificates.as_ref().map(|c| CertificatesJson {
        dual: rats(&c.dual.values),
        alpha_dual: rat(r.alpha.as_ref().expect("alpha accompanies certificates")),
        layer_sizes: c.layer_sizes.clone(),
        covers: c
            .covers
            .iter()
            .flat_map(|f| {
                f.kinds
                    .iter()
                    .zip(&f.covers)
                    .zip(&f.marked_edges)
                    .map(|((k, u), m)| CoverJson {
                        kind: kind_name(*k),
                        vertices: ids(u),
                        weight: rat(&g.weight_of(u)),
                        marked_edges: ids(m),
                    })
            })
            .collect(),
    });

    let mut report = AnalyzeReport {
        seed: opts.seed,
        set_source: set_source.into(),
        brute_max: opts.brute_max,
        normalized_weights: rats(g.weights()),
        lp_value: rat(&lp.objective),
        lp_solution: lp.values.iter().map(|v| rat(&v.to_rational())).collect(),
        nt_classes: NtClasses {
            zero: class(H::Zero),
            half: class(H::Half),
            one: class(H::One),
        },
        s: ids(&set),
        rho,
        alpha: alpha.as_ref().map(rat),
        alpha_source: alpha_source.map(Into::into),
        case_tag: case_name(r.case_tag).into(),
        bound: bound.as_ref().map(rat),
        achieved: r.achieved.as_ref().map(rat),
        opt_mode: match r.opt_mode {
            OptMode::BruteExact => "brute-exact".into(),
            OptMode::LpLowerBound => "lp-lower-bound".into(),
        },
        opt_value: rat(&r.round.opt_value),
        cover: ids(&r.cover),
        cover_weight: rat(&r.round.cover_weight),
        certificates,
        coloring: coloring_json,
        checks: Vec::new(),
    };
    report.checks = verify_analyze(inst, &report)?;
    Ok(report)
}

/// Re-derives every number in `report` from `inst` and the certificates.
///
/// Errors only when the report cannot be read at all; a wrong value is a
/// failed check.
pub fn verify_analyze(inst: &Instance, report: &AnalyzeReport) -> Result<Vec<Check>> {
    let mut checks = Checks::default();
    let (g, _) = prepare(inst, report.seed)?;
    let n = g.num_vertices();
    let m = g.num_edges();

    let weights = unrats(&report.normalized_weights)?;
    checks.add("normalized-weights", weights == g.weights());

    // LP: feasibility, objective, optimality against the solver
    let x = unrats(&report.lp_solution)?;
    let half = Rational::new(1.into(), 2.into());
    let lp_value = unrat(&report.lp_value)?;
    let lp_ok = x.len() == n
        && x.iter().all(|v| v.is_zero() || *v == half || v.is_one())
        && g.edges()
            .iter()
            .all(|&(u, v)| &x[u] + &x[v] >= Rational::one())
        && g.weights()
            .iter()
            .zip(&x)
            .map(|(w, v)| w * v)
            .sum::<Rational>()
            == lp_value;
    checks.add("lp-feasible", lp_ok);
    checks.add("lp-optimal", solve_lp(&g).objective == lp_value);
    let nt_ok = lp_ok && {
        let by = |target: &Rational| -> Vec<usize> {
            (0..n).filter(|&v| &x[v] == target).map(|v| v + 1).collect()
        };
        report.nt_classes.zero == by(&Rational::zero())
            && report.nt_classes.half == by(&half)
            && report.nt_classes.one == by(&Rational::one())
    };
    checks.add("nt-classes", nt_ok);

    let Some(set) = unids(&report.s, n) else {
        checks.add("set-ids", false);
        return Ok(checks.0);
    };
    if report.set_source == "file" {
        checks.add(
            "set-matches-input",
            set == inst.set.clone().unwrap_or_default(),
        );
    }
    let half_rest: Vec<bool> = (0..n)
        .map(|v| x.get(v) == Some(&half) && !set.contains(&v))
        .collect();
    checks.add(
        "set-bipartizes-half-class",
        is_bipartite(&g.induced(&half_rest).graph)
            .bipartition()
            .is_some(),
    );

    let Some(cover) = unids(&report.cover, n) else {
        checks.add("cover-ids", false);
        return Ok(checks.0);
    };
    let cover_weight = unrat(&report.cover_weight)?;
    checks.add("cover-feasible", g.is_cover(&cover));
    checks.add("cover-weight", g.weight_of(&cover) == cover_weight);
    let one_class: VertexSet = (0..n)
        .filter(|&v| x.get(v).is_some_and(|v| v.is_one()))
        .collect();
    checks.add(
        "cover-contains-one-class-and-set",
        one_class.is_subset(&cover) && set.is_subset(&cover),
    );

    let opt_value = unrat(&report.opt_value)?;
    let opt_ok = match report.opt_mode.as_str() {
        "brute-exact" => {
            let budget = OracleBudget {
                max_vertices_exact: n.max(report.brute_max),
                ..OracleBudget::default()
            };
            brute_opt_vc(&g, &budget)?.1 == opt_value
        }
        "lp-lower-bound" => opt_value == lp_value,
        _ => false,
    };
    checks.add("opt-value", opt_ok);
    let achieved = report.achieved.as_deref().map(unrat).transpose()?;
    let expect_achieved = if !opt_value.is_zero() {
        Some(&cover_weight / &opt_value)
    } else if cover_weight.is_zero() {
        Some(Rational::one())
    } else {
        None
    };
    checks.add("achieved-ratio", achieved == expect_achieved);

    let rho_of_set = if set.is_empty() {
        None
    } else {
        contract(&g, &set)
            .ok()
            .and_then(|c| odd_girth(&c.graph))
            .map(|c| c.len().div_ceil(2) as u32)
    };

    match &report.certificates {
        None => {
            // without a dual the weights must be outside the polytope
            checks.add(
                "no-dual-exists",
                lp_value < Rational::one() && recover_dual(&g).is_none(),
            );
            checks.add(
                "no-bound-without-dual",
                report.alpha.is_none() && report.bound.is_none(),
            );
        }
        Some(cert) => {
            let y = DualSolution::new(unrats(&cert.dual)?);
            let dual_ok = y.values.len() == m && y.is_tight(&g) && y.total.is_one();
            checks.add("dual-tight", dual_ok);
            let (boundary, inside) = boundary_and_inside(&g, &set);
            let alpha_dual = unrat(&cert.alpha_dual)?;
            checks.add("alpha-dual", dual_ok && y.sum_over(&inside) == alpha_dual);

            let layer_sizes = if set.is_empty() {
                Some(Vec::new())
            } else {
                contract(&g, &set)
                    .ok()
                    .and_then(|c| layer_decomposition(&c).ok())
                    .map(|l| l.layer_sizes())
            };
            checks.add(
                "layer-sizes",
                layer_sizes.as_ref() == Some(&cert.layer_sizes),
            );

            let expected_covers = rho_of_set.map_or(0, |r| r as usize);
            checks.add("cover-family-size", cert.covers.len() == expected_covers);
            let boundary: BTreeSet<usize> = boundary.into_iter().collect();
            let inside_set: BTreeSet<usize> = inside.iter().copied().collect();
            let outside: Vec<usize> = (0..m)
                .filter(|e| !boundary.contains(e) && !inside_set.contains(e))
                .collect();
            let rest = g.remove_vertices(&set);
            let mut family_ok = true;
            let mut seen = BTreeSet::new();
            for c in &cert.covers {
                let Some(u) = unids(&c.vertices, n) else {
                    family_ok = false;
                    continue;
                };
                let local: VertexSet = rest
                    .parent_vertex
                    .iter()
                    .enumerate()
                    .filter(|(_, p)| u.contains(p))
                    .map(|(i, _)| i)
                    .collect();
                let marked: Option<BTreeSet<usize>> = c
                    .marked_edges
                    .iter()
                    .map(|&e| (1..=m).contains(&e).then(|| e - 1))
                    .collect();
                let Some(marked) = marked else {
                    family_ok = false;
                    continue;
                };
                family_ok &= u.is_disjoint(&set)
                    && rest.graph.is_cover(&local)
                    && marked == marked_edges_of(&g, &set, &u)
                    && unrat(&c.weight)? == g.weight_of(&u)
                    && g.weight_of(&u) == y.sum_over(&outside) + y.sum_over(&marked);
                family_ok &= marked.iter().all(|&e| seen.insert(e));
            }
            checks.add("edge-separate-covers", family_ok);
        }
    }

    match (&report.coloring, &report.certificates) {
        (Some(col), Some(cert)) if col.rotation.is_some() => {
            let rot = col.rotation.as_ref().expect("checked");
            let classes: Option<Vec<VertexSet>> = col.classes.iter().map(|c| unids(c, n)).collect();
            let coloring = classes.and_then(|c| Coloring::new(&g, c).ok());
            let replay = coloring.and_then(|c| {
                let y = DualSolution::new(unrats(&cert.dual).ok()?);
                let aux = build_aux(&g, &y, &c).ok()?;
                let r = rotate_duals(&aux);
                Some((aux, r))
            });
            let ok = match &replay {
                Some((aux, r)) => {
                    let alpha = unrat(&rot.alpha)?;
                    let bound = unrat(&rot.bound)?;
                    aux.k() == col.k
                        && aux.classes.iter().map(ids).collect::<Vec<_>>() == col.classes
                        && rats(&aux.k_dual.values) == rot.initial_dual
                        && rats(&r.aux.k_dual.values) == rot.rotated_dual
                        && r.steps == rot.steps
                        && r.alpha == alpha
                        && r.aux.is_complementary()
                        && theoretical_bound(Some(2), &alpha).ok() == Some(bound.clone())
                        && aux.bipartizing_set() == set
                        && report.alpha.as_deref().map(unrat).transpose()? == Some(alpha)
                        && report.bound.as_deref().map(unrat).transpose()? == Some(bound)
                        && report.rho == Some(2)
                }
                None => false,
            };
            checks.add("coloring-rotation", ok);
        }
        (Some(col), _) => {
            let classes: Option<Vec<VertexSet>> = col.classes.iter().map(|c| unids(c, n)).collect();
            let ok = classes
                .and_then(|c| Coloring::new(&g, c).ok())
                .is_some_and(|c| col.k == c.num_colors());
            checks.add("coloring-proper", ok);
        }
        (None, _) => {}
    }

    // the bound itself, unless the rotation supplied it
    if report.alpha_source.as_deref() == Some("dual") {
        let alpha = report.alpha.as_deref().map(unrat).transpose()?;
        let bound = report.bound.as_deref().map(unrat).transpose()?;
        let expected = report
            .certificates
            .as_ref()
            .and_then(|c| unrat(&c.alpha_dual).ok());
        checks.add("alpha", alpha.is_some() && alpha == expected);
        checks.add("rho", report.rho == rho_of_set);
        checks.add(
            "bound",
            alpha.is_some() && bound == alpha.and_then(|a| theoretical_bound(rho_of_set, &a).ok()),
        );
    }
    if let (Some(a), Some(b)) = (&report.achieved, &report.bound) {
        checks.add("achieved-within-bound", unrat(a)? <= unrat(b)?);
    }
    Ok(checks.0)
}
