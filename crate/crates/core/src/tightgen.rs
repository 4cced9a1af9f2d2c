//! Instances on which round-and-bipartize meets its bound with equality:
//! basic weight functions of shortest odd cycles and their convex
//! combinations, duals lifted from a contraction, and the two families that
//! interpolate in `alpha`.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::bounds::theoretical_bound;
use crate::graph::{contract, is_bipartite, odd_girth, parity_distances, OddCycle};
use crate::relax::DualSolution;
use crate::{Error, Graph, Rational, Result, VertexId, VertexSet};

/// Default cap for [`shortest_odd_cycles`].
pub const DEFAULT_CYCLE_LIMIT: usize = 64;

/// A weighted graph, a tight dual for it, the bipartizing set to round
/// with, and the ratio that rounding attains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TightInstance {
    pub graph: Graph,
    pub dual: DualSolution,
    pub set: VertexSet,
    pub expected_ratio: Rational,
}

// Checks that `cycle` is a shortest odd cycle through `vp` and that every
// odd cycle passes through `vp`; returns it rotated to start at `vp`.
fn apex_cycle(g: &Graph, vp: VertexId, cycle: &[VertexId]) -> Result<OddCycle> {
    let c = OddCycle::from_vertices(g, cycle)?;
    if c.len() % 2 == 0 {
        return Err(Error::InvalidCycle("even length"));
    }
    let c = c
        .rotated_to(vp)
        .ok_or(Error::InvalidCycle("apex not on the cycle"))?;
    let girth = odd_girth(g).map_or(usize::MAX, |s| s.len());
    if c.len() != girth {
        return Err(Error::InvalidCycle("not a shortest odd cycle"));
    }
    let rest = g.remove_vertices(&[vp].into_iter().collect());
    if is_bipartite(&rest.graph).bipartition().is_none() {
        return Err(Error::InvalidCycle("an odd cycle avoids the apex"));
    }
    Ok(c)
}

// Dual `1/rho` on the even-indexed edges of a cycle starting at the apex.
fn cycle_dual(g: &Graph, c: &OddCycle) -> DualSolution {
    let rho = c.len().div_ceil(2);
    let share = Rational::new(1.into(), rho.into());
    let mut values = vec![Rational::zero(); g.num_edges()];
    for (i, &e) in c.edges.iter().enumerate() {
        if i % 2 == 0 {
            values[e] += &share;
        }
    }
    DualSolution::new(values)
}

fn weights_from_dual(g: &Graph, y: &DualSolution) -> Result<Graph> {
    g.with_weights((0..g.num_vertices()).map(|v| y.load(g, v)).collect())
}

fn one_plus_inverse(rho: usize) -> Rational {
    Rational::one() + Rational::new(1.into(), rho.into())
}

/// Basic weight function of a shortest odd cycle `C` through `vp`: `2/rho`
/// on `vp`, `1/rho` on the rest of `C`, zero elsewhere.
pub fn basic_weight(g: &Graph, vp: VertexId, cycle: &[VertexId]) -> Result<TightInstance> {
    let c = apex_cycle(g, vp, cycle)?;
    let dual = cycle_dual(g, &c);
    Ok(TightInstance {
        graph: weights_from_dual(g, &dual)?,
        expected_ratio: one_plus_inverse(c.len().div_ceil(2)),
        set: [vp].into_iter().collect(),
        dual,
    })
}

/// Convex combination `sum lambda_C w^C` of basic weight functions.
pub fn convex_weight(
    g: &Graph,
    vp: VertexId,
    combination: &[(Vec<VertexId>, Rational)],
) -> Result<TightInstance> {
    if combination.is_empty()
        || combination.iter().any(|(_, l)| l.is_negative())
        || !combination
            .iter()
            .fold(Rational::zero(), |acc, (_, l)| acc + l)
            .is_one()
    {
        return Err(Error::InvalidCombination);
    }
    let mut values = vec![Rational::zero(); g.num_edges()];
    let mut rho = 0;
    for (cycle, lambda) in combination {
        let c = apex_cycle(g, vp, cycle)?;
        rho = c.len().div_ceil(2);
        for (e, y) in cycle_dual(g, &c).values.iter().enumerate() {
            values[e] += y * lambda;
        }
    }
    let dual = DualSolution::new(values);
    Ok(TightInstance {
        graph: weights_from_dual(g, &dual)?,
        expected_ratio: one_plus_inverse(rho),
        set: [vp].into_iter().collect(),
        dual,
    })
}

/// Weights `w(v) = y(delta(v))` for the basic dual of a shortest odd cycle
/// of `G / I` through the merged vertex, pulled back to `G`.
///
/// `cycle` is given in the vertex ids of the contracted graph (kept
/// vertices in increasing order, then the merged vertex). Without it the
/// first cycle from [`shortest_odd_cycles`] is used.
pub fn lifted_dual_weight(
    g: &Graph,
    independent: &VertexSet,
    cycle: Option<&[VertexId]>,
) -> Result<TightInstance> {
    g.check_set(independent)?;
    if independent.is_empty() {
        return Err(Error::InvalidSet("empty set"));
    }
    if !g.is_independent(independent) {
        return Err(Error::NotIndependent);
    }
    let contracted = contract(g, independent)?;
    let hub = contracted.contracted_vertex;
    if is_bipartite(&g.remove_vertices(independent).graph)
        .bipartition()
        .is_none()
    {
        return Err(Error::NotBipartizing);
    }
    let found;
    let cycle = match cycle {
        Some(c) => c,
        None => {
            let (cycles, _) = shortest_odd_cycles(&contracted.graph, hub, 1)?;
            found = cycles.into_iter().next().ok_or(Error::NoOddCycle)?.vertices;
            &found
        }
    };
    let c = apex_cycle(&contracted.graph, hub, cycle)?;
    let local = cycle_dual(&contracted.graph, &c);
    let mut values = vec![Rational::zero(); g.num_edges()];
    for (e, y) in local.values.into_iter().enumerate() {
        values[contracted.parent_edge_of[e]] = y;
    }
    let dual = DualSolution::new(values);
    Ok(TightInstance {
        graph: weights_from_dual(g, &dual)?,
        expected_ratio: one_plus_inverse(c.len().div_ceil(2)),
        set: independent.clone(),
        dual,
    })
}

fn check_alpha(alpha: &Rational) -> Result<()> {
    if alpha.is_negative() || *alpha > Rational::one() {
        Err(Error::InvalidParams("alpha must lie in [0, 1]"))
    } else {
        Ok(())
    }
}

/// Odd cycle of length `2 rho - 1` whose vertex `v^S` is replaced by a
/// triangle `s1 s2 s3` carrying dual `alpha` on `s1 s2`. Vertices are
/// `s1, s2, s3 = 0, 1, 2` followed by the path `u_1 .. u_{2 rho - 2}`, which
/// runs from `s1` to `s2`.
pub fn gen_alpha_rho(alpha: &Rational, rho: u32) -> Result<TightInstance> {
    check_alpha(alpha)?;
    if rho < 2 {
        return Err(Error::InvalidParams("rho must be at least 2"));
    }
    let path_len = 2 * rho as usize - 2;
    let n = 3 + path_len;
    let beta = (Rational::one() - alpha) / Rational::from_integer(rho.into());
    let mut edges = vec![(0, 1), (1, 2), (0, 2)];
    let mut values = vec![alpha.clone(), Rational::zero(), Rational::zero()];
    // cycle edges s1-u_1, u_1-u_2, ..., u_{2rho-2}-s2, alternating beta and 0
    let mut prev = 0;
    for i in 0..=path_len {
        let next = if i == path_len { 1 } else { 3 + i };
        edges.push((prev, next));
        values.push(if i % 2 == 0 {
            beta.clone()
        } else {
            Rational::zero()
        });
        prev = next;
    }
    let dual = DualSolution::new(values);
    let skeleton = Graph::unit(n, edges)?;
    Ok(TightInstance {
        graph: weights_from_dual(&skeleton, &dual)?,
        dual,
        set: [0, 1, 2].into_iter().collect(),
        expected_ratio: theoretical_bound(Some(rho), alpha)?,
    })
}

/// Odd cycle `c_0 .. c_{len-1}` with `S = {c_0, c_1}`, dual `alpha` on
/// `c_0 c_1`, zero on `c_{len-1} c_0`, and `1 - alpha` spread as
/// `beta, 0, beta, ..., beta` over the remaining edges.
pub fn gen_alpha_bipartite(alpha: &Rational, len: usize) -> Result<TightInstance> {
    check_alpha(alpha)?;
    if len < 5 || len.is_multiple_of(2) {
        return Err(Error::InvalidParams(
            "cycle length must be odd and at least 5",
        ));
    }
    let beta = (Rational::one() - alpha) / Rational::from_integer(((len - 1) / 2).into());
    let remainder: Vec<Rational> = (0..len - 2)
        .map(|i| {
            if i % 2 == 0 {
                beta.clone()
            } else {
                Rational::zero()
            }
        })
        .collect();
    gen_alpha_bipartite_with(alpha, len, &remainder)
}

/// As [`gen_alpha_bipartite`] with the duals on `c_1 c_2 .. c_{len-2}
/// c_{len-1}` given explicitly; they must be non-negative and sum to
/// `1 - alpha`.
pub fn gen_alpha_bipartite_with(
    alpha: &Rational,
    len: usize,
    remainder: &[Rational],
) -> Result<TightInstance> {
    check_alpha(alpha)?;
    if len < 5 || len.is_multiple_of(2) {
        return Err(Error::InvalidParams(
            "cycle length must be odd and at least 5",
        ));
    }
    if remainder.len() != len - 2
        || remainder.iter().any(|r| r.is_negative())
        || remainder.iter().fold(Rational::zero(), |acc, r| acc + r) != Rational::one() - alpha
    {
        return Err(Error::InvalidParams(
            "remainder must be a distribution of 1 - alpha",
        ));
    }
    let mut values = vec![alpha.clone()];
    values.extend(remainder.iter().cloned());
    values.push(Rational::zero());
    let dual = DualSolution::new(values);
    let skeleton = Graph::cycle(len);
    Ok(TightInstance {
        graph: weights_from_dual(&skeleton, &dual)?,
        dual,
        set: [0, 1].into_iter().collect(),
        expected_ratio: theoretical_bound(None, alpha)?,
    })
}

/// Up to `limit` shortest odd cycles of `g` that pass through `vp`, each
/// starting at `vp` with its second vertex smaller than its last, in
/// lexicographic order. The flag reports whether the limit cut the list
/// short.
pub fn shortest_odd_cycles(g: &Graph, vp: VertexId, limit: usize) -> Result<(Vec<OddCycle>, bool)> {
    if vp >= g.num_vertices() {
        return Err(Error::UnknownVertex(vp));
    }
    let girth = odd_girth(g).ok_or(Error::NoOddCycle)?.len();
    let dist = parity_distances(g, vp);
    let neighbors: Vec<Vec<VertexId>> = (0..g.num_vertices())
        .map(|u| {
            let mut ns: Vec<VertexId> = g.neighbors(u).iter().map(|&(_, v)| v).collect();
            ns.sort_unstable();
            ns.dedup();
            ns
        })
        .collect();

    let mut found = Vec::new();
    let mut truncated = false;
    let mut path = vec![vp];
    let mut on_path = vec![false; g.num_vertices()];
    on_path[vp] = true;
    // explicit DFS stack of next-neighbor positions
    let mut cursor = vec![0usize];
    while let Some(pos) = cursor.last_mut() {
        let u = *path.last().unwrap();
        let Some(&v) = neighbors[u].get(*pos) else {
            cursor.pop();
            on_path[path.pop().unwrap()] = false;
            continue;
        };
        *pos += 1;
        let steps = path.len();
        if steps == girth {
            if v == vp && path[1] < path[girth - 1] {
                if found.len() == limit {
                    truncated = true;
                    break;
                }
                found.push(OddCycle::from_vertices(g, &path)?);
            }
            continue;
        }
        if on_path[v] {
            continue;
        }
        // after stepping to v, `girth - steps` edges must lead back to vp
        let left = girth - steps;
        if dist[v][left % 2].is_none_or(|d| d > left) {
            continue;
        }
        path.push(v);
        on_path[v] = true;
        cursor.push(0);
    }
    Ok((found, truncated))
}
