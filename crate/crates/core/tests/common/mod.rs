#![allow(dead_code)]

use proptest::prelude::*;
use rbvc_core::graph::is_bipartite;
use rbvc_core::{ratio, Graph, Rational};

/// Loop-free edge list on `n` vertices; parallel edges are allowed.
pub fn edges(n: usize, max_m: usize) -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((0..n, 0..n), 0..=max_m)
        .prop_map(|es| es.into_iter().filter(|(u, v)| u != v).collect())
}

pub fn weight() -> impl Strategy<Value = Rational> {
    (0i64..=6, 1i64..=4).prop_map(|(a, b)| ratio(a, b))
}

pub fn graph(min_n: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n).prop_flat_map(move |n| {
        (edges(n, max_m), prop::collection::vec(weight(), n))
            .prop_map(|(es, ws)| Graph::new(ws, es).unwrap())
    })
}

pub fn unit_graph(min_n: usize, max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (min_n..=max_n)
        .prop_flat_map(move |n| edges(n, max_m).prop_map(move |es| Graph::unit(n, es).unwrap()))
}

/// A bipartite graph on `1..n` (sides by parity of a random bit) plus an
/// apex `0` joined to random vertices, kept only when it has an odd cycle.
pub fn near_bipartite(max_n: usize, max_m: usize) -> impl Strategy<Value = Graph> {
    (4..=max_n)
        .prop_flat_map(move |n| {
            (
                Just(n),
                prop::collection::vec(any::<bool>(), n),
                prop::collection::vec((1..n, 1..n), 0..=max_m),
                prop::collection::vec(1..n, 1..=3),
            )
        })
        .prop_map(|(n, side, pairs, apex)| {
            let mut es: Vec<(usize, usize)> = pairs
                .into_iter()
                .filter(|&(u, v)| side[u] != side[v])
                .collect();
            es.extend(apex.into_iter().map(|v| (0, v)));
            Graph::unit(n, es).unwrap()
        })
        .prop_filter("needs an odd cycle", |g| {
            is_bipartite(g).bipartition().is_none()
        })
}
