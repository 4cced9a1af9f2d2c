//! Dinic max-flow on arbitrary-precision integer capacities. Rational data
//! is scaled by the common denominator before it reaches this module.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::Rational;

pub(crate) struct FlowNetwork {
    out: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<BigInt>,
    capacity: Vec<BigInt>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        Self {
            out: vec![Vec::new(); nodes],
            to: Vec::new(),
            residual: Vec::new(),
            capacity: Vec::new(),
        }
    }

    /// Adds `u -> v`; the reverse residual arc is `id ^ 1`.
    pub fn add_arc(&mut self, u: usize, v: usize, cap: BigInt) -> usize {
        let id = self.to.len();
        self.to.push(v);
        self.residual.push(cap.clone());
        self.capacity.push(cap);
        self.out[u].push(id);
        self.to.push(u);
        self.residual.push(BigInt::zero());
        self.capacity.push(BigInt::zero());
        self.out[v].push(id + 1);
        id
    }

    pub fn flow_on(&self, arc: usize) -> BigInt {
        &self.capacity[arc] - &self.residual[arc]
    }

    pub fn max_flow(&mut self, source: usize, sink: usize) -> BigInt {
        let n = self.out.len();
        let mut total = BigInt::zero();
        loop {
            let mut level = vec![usize::MAX; n];
            level[source] = 0;
            let mut queue = VecDeque::from([source]);
            while let Some(u) = queue.pop_front() {
                for &a in &self.out[u] {
                    let v = self.to[a];
                    if level[v] == usize::MAX && self.residual[a].is_positive() {
                        level[v] = level[u] + 1;
                        queue.push_back(v);
                    }
                }
            }
            if level[sink] == usize::MAX {
                return total;
            }
            let mut next = vec![0usize; n];
            loop {
                let pushed = self.augment(source, sink, &level, &mut next);
                if pushed.is_zero() {
                    break;
                }
                total += pushed;
            }
        }
    }

    // One blocking-flow path found by iterative DFS along the level graph.
    fn augment(
        &mut self,
        source: usize,
        sink: usize,
        level: &[usize],
        next: &mut [usize],
    ) -> BigInt {
        let mut path: Vec<usize> = Vec::new();
        let mut u = source;
        loop {
            if u == sink {
                let bottleneck = path
                    .iter()
                    .map(|&a| &self.residual[a])
                    .min()
                    .cloned()
                    .unwrap_or_else(BigInt::zero);
                for &a in &path {
                    self.residual[a] -= &bottleneck;
                    self.residual[a ^ 1] += &bottleneck;
                }
                return bottleneck;
            }
            let mut advanced = false;
            while next[u] < self.out[u].len() {
                let a = self.out[u][next[u]];
                let v = self.to[a];
                if self.residual[a].is_positive() && level[v] == level[u] + 1 {
                    path.push(a);
                    u = v;
                    advanced = true;
                    break;
                }
                next[u] += 1;
            }
            if !advanced {
                if u == source {
                    return BigInt::zero();
                }
                // dead end: retreat and skip the arc that led here
                let a = path.pop().unwrap();
                u = self.to[a ^ 1];
                next[u] += 1;
            }
        }
    }

    /// Nodes reachable from `source` in the residual network.
    pub fn reachable(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            for &a in &self.out[u] {
                let v = self.to[a];
                if !seen[v] && self.residual[a].is_positive() {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}

/// Least common multiple of the denominators.
pub(crate) fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    values
        .into_iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()))
}

/// `r * scale`, which must be integral.
pub(crate) fn scaled(r: &Rational, scale: &BigInt) -> BigInt {
    let v = r * Rational::from_integer(scale.clone());
    debug_assert!(v.is_integer());
    v.to_integer()
}
