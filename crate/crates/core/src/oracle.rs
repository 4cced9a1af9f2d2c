//! Brute-force ground truth.
//!
//! Nothing here calls into the algorithmic modules: the engines only read
//! the [`Graph`] data structure, so they can check those modules
//! independently. Every exponential routine checks its [`OracleBudget`]
//! before starting.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::{Error, Graph, Rational, Result, VertexId, VertexSet};

/// Vertex-count limits for the exponential engines.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_vertices_exact: usize,
    pub max_vertices_lp_enum: usize,
    pub max_vertices_fcn: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        Self {
            max_vertices_exact: 20,
            max_vertices_lp_enum: 12,
            max_vertices_fcn: 12,
        }
    }
}

fn check(max: usize, g: &Graph) -> Result<()> {
    if g.num_vertices() > max {
        Err(Error::TooLarge {
            max,
            got: g.num_vertices(),
        })
    } else {
        Ok(())
    }
}

/// Exact minimum-weight vertex cover by branch and bound on the lowest
/// uncovered edge: either its lower endpoint `u` joins the cover, or `u`
/// stays out and all of its neighbors join.
pub fn brute_opt_vc(g: &Graph, budget: &OracleBudget) -> Result<(VertexSet, Rational)> {
    check(budget.max_vertices_exact, g)?;
    let n = g.num_vertices();
    // greedy start: every vertex
    let mut best = (vec![true; n], g.total_weight());
    let mut state = vec![None; n];
    vc_branch(g, &mut state, Rational::zero(), &mut best);
    let cover = (0..n).filter(|&v| best.0[v]).collect();
    Ok((cover, best.1))
}

fn vc_branch(
    g: &Graph,
    state: &mut Vec<Option<bool>>,
    cost: Rational,
    best: &mut (Vec<bool>, Rational),
) {
    if cost >= best.1 {
        return;
    }
    let open = g
        .edges()
        .iter()
        .find(|&&(u, v)| state[u] != Some(true) && state[v] != Some(true));
    let Some(&(u, v)) = open else {
        best.0 = state.iter().map(|s| *s == Some(true)).collect();
        best.1 = cost;
        return;
    };
    let u = if state[u].is_none() { u } else { v };
    if state[u].is_some() {
        // both endpoints excluded; never produced by the branching below
        return;
    }
    state[u] = Some(true);
    vc_branch(g, state, &cost + g.weight(u), best);
    state[u] = Some(false);
    let mut added = Vec::new();
    let mut extra = Rational::zero();
    let mut blocked = false;
    for &(_, x) in g.neighbors(u) {
        match state[x] {
            Some(false) => blocked = true,
            None => {
                state[x] = Some(true);
                extra += g.weight(x);
                added.push(x);
            }
            Some(true) => {}
        }
    }
    if !blocked {
        vc_branch(g, state, cost + extra, best);
    }
    for x in added {
        state[x] = None;
    }
    state[u] = None;
}

/// Minimum of the LP objective over all feasible points of `{0, 1/2, 1}^V`,
/// by exhaustive backtracking (with cost pruning).
pub fn brute_lp(g: &Graph, budget: &OracleBudget) -> Result<Rational> {
    check(budget.max_vertices_lp_enum, g)?;
    let n = g.num_vertices();
    // doubled values; objective accumulated as sum w_v * d_v, halved at the end
    let mut best = g.total_weight() * Rational::from_integer(2.into());
    let mut assign = vec![0u8; n];
    lp_branch(g, 0, &mut assign, Rational::zero(), &mut best);
    Ok(best / Rational::from_integer(2.into()))
}

fn lp_branch(g: &Graph, v: VertexId, assign: &mut [u8], cost: Rational, best: &mut Rational) {
    if cost >= *best {
        return;
    }
    if v == g.num_vertices() {
        *best = cost;
        return;
    }
    // a value is admissible if every edge to an earlier vertex sums to >= 2
    let need = g
        .neighbors(v)
        .iter()
        .filter(|&&(_, u)| u < v)
        .map(|&(_, u)| 2 - assign[u].min(2))
        .max()
        .unwrap_or(0);
    for d in need..=2u8 {
        assign[v] = d;
        let step = g.weight(v) * Rational::from_integer(d.into());
        lp_branch(g, v + 1, assign, &cost + step, best);
    }
    assign[v] = 0;
}

/// Maximal independent sets, each sorted, in lexicographic discovery order.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.num_vertices();
    let mut adj = vec![vec![false; n]; n];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    mis_branch(&adj, 0, &mut current, &mut out);
    out
}

fn mis_branch(adj: &[Vec<bool>], v: usize, current: &mut Vec<usize>, out: &mut Vec<VertexSet>) {
    let n = adj.len();
    if v == n {
        // maximal: no outside vertex can be added
        let maximal = (0..n).all(|x| current.contains(&x) || current.iter().any(|&c| adj[x][c]));
        if maximal {
            out.push(current.iter().copied().collect());
        }
        return;
    }
    if current.iter().all(|&c| !adj[v][c]) {
        current.push(v);
        mis_branch(adj, v + 1, current, out);
        current.pop();
    }
    mis_branch(adj, v + 1, current, out);
}

/// Largest value of `sum_{v in I} z_v` over independent sets `I`.
pub fn max_weight_independent_set(
    g: &Graph,
    z: &[Rational],
    budget: &OracleBudget,
) -> Result<Rational> {
    check(budget.max_vertices_exact, g)?;
    let n = g.num_vertices();
    let mut blocked = vec![0u32; n];
    let mut best = Rational::zero();
    mwis_branch(g, z, 0, &mut blocked, Rational::zero(), &mut best);
    Ok(best)
}

fn mwis_branch(
    g: &Graph,
    z: &[Rational],
    v: usize,
    blocked: &mut [u32],
    value: Rational,
    best: &mut Rational,
) {
    if value > *best {
        *best = value.clone();
    }
    if v == g.num_vertices() {
        return;
    }
    let remaining = (v..g.num_vertices())
        .filter(|&x| blocked[x] == 0)
        .fold(Rational::zero(), |acc, x| acc + &z[x]);
    if &value + remaining <= *best {
        return;
    }
    if blocked[v] == 0 && z[v].is_positive() {
        for &(_, x) in g.neighbors(v) {
            blocked[x] += 1;
        }
        mwis_branch(g, z, v + 1, blocked, &value + &z[v], best);
        for &(_, x) in g.neighbors(v) {
            blocked[x] -= 1;
        }
    }
    mwis_branch(g, z, v + 1, blocked, value, best);
}

/// Exact fractional chromatic number: the packing LP
/// `max sum z_v  s.t.  sum_{v in I} z_v <= 1` over all maximal independent
/// sets, solved by a rational simplex.
pub fn brute_fcn(g: &Graph, budget: &OracleBudget) -> Result<Rational> {
    check(budget.max_vertices_fcn, g)?;
    if g.num_vertices() == 0 {
        return Ok(Rational::zero());
    }
    let sets = maximal_independent_sets(g);
    let rows: Vec<Vec<usize>> = sets.iter().map(|s| s.iter().copied().collect()).collect();
    Ok(simplex::max_packing(g.num_vertices(), &rows))
}

/// Length of the shortest odd cycle by enumerating every simple cycle.
pub fn brute_odd_girth(g: &Graph) -> Option<usize> {
    let mut best: Option<usize> = None;
    for_each_cycle(g, |cycle| {
        if cycle.len() % 2 == 1 && best.is_none_or(|b| cycle.len() < b) {
            best = Some(cycle.len());
        }
    });
    best
}

/// All simple cycles (as vertex sequences, length >= 3) through `v` with
/// the given length, each listed once up to direction.
pub fn brute_cycles_through(g: &Graph, v: VertexId, len: usize) -> Vec<Vec<VertexId>> {
    let mut out = Vec::new();
    for_each_cycle(g, |cycle| {
        if cycle.len() == len && cycle.contains(&v) {
            out.push(cycle.to_vec());
        }
    });
    out
}

// Each simple cycle is reported once: it starts at its smallest vertex and
// its second vertex is smaller than its last.
fn for_each_cycle(g: &Graph, mut f: impl FnMut(&[VertexId])) {
    let n = g.num_vertices();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for start in 0..n {
        on_path[start] = true;
        path.push(start);
        cycle_dfs(g, start, start, &mut on_path, &mut path, &mut f);
        path.pop();
        on_path[start] = false;
    }
}

fn cycle_dfs(
    g: &Graph,
    start: VertexId,
    u: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<VertexId>,
    f: &mut impl FnMut(&[VertexId]),
) {
    let mut tried = VertexSet::new();
    for &(_, v) in g.neighbors(u) {
        if !tried.insert(v) {
            continue;
        }
        if v == start && path.len() >= 3 && path[1] < path[path.len() - 1] {
            f(path);
        } else if v > start && !on_path[v] {
            on_path[v] = true;
            path.push(v);
            cycle_dfs(g, start, v, on_path, path, f);
            path.pop();
            on_path[v] = false;
        }
    }
}

mod simplex {
    //! Dense tableau simplex with Bland's rule for `max 1^T z` subject to
    //! `A z <= 1`, `z >= 0`, with `A` a 0/1 matrix given by row supports.
    //! The slack basis is feasible, so no phase 1 is needed.

    use super::*;

    pub(super) fn max_packing(vars: usize, rows: &[Vec<usize>]) -> Rational {
        let m = rows.len();
        let cols = vars + m;
        // tableau rows: coefficients then rhs
        let mut t: Vec<Vec<Rational>> = rows
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = vec![Rational::zero(); cols + 1];
                for &v in row {
                    r[v] = Rational::one();
                }
                r[vars + i] = Rational::one();
                r[cols] = Rational::one();
                r
            })
            .collect();
        // reduced costs of the maximization (c_j - z_j) and objective
        let mut cost: Vec<Rational> = (0..cols)
            .map(|j| {
                if j < vars {
                    Rational::one()
                } else {
                    Rational::zero()
                }
            })
            .collect();
        let mut objective = Rational::zero();
        let mut basis: Vec<usize> = (vars..cols).collect();

        loop {
            let Some(enter) = (0..cols).find(|&j| cost[j].is_positive()) else {
                return objective;
            };
            // ratio test, ties by smallest basic index (Bland)
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if t[i][enter].is_positive() {
                    let r = &t[i][cols] / &t[i][enter];
                    let better = match &leave {
                        None => true,
                        Some((li, lr)) => r < *lr || (r == *lr && basis[i] < basis[*li]),
                    };
                    if better {
                        leave = Some((i, r));
                    }
                }
            }
            let (row, _) = leave.expect("packing LP is bounded");
            let pivot = t[row][enter].clone();
            for x in t[row].iter_mut() {
                *x = &*x / &pivot;
            }
            let pivot_row = t[row].clone();
            for (i, r) in t.iter_mut().enumerate() {
                if i != row && !r[enter].is_zero() {
                    let factor = r[enter].clone();
                    for (x, p) in r.iter_mut().zip(&pivot_row) {
                        *x -= &factor * p;
                    }
                }
            }
            let factor = cost[enter].clone();
            for (c, p) in cost.iter_mut().zip(&pivot_row[..cols]) {
                *c -= &factor * p;
            }
            objective += &factor * &pivot_row[cols];
            basis[row] = enter;
        }
    }
}
