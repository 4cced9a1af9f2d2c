//! Vertex-weighted undirected multigraphs and the structural primitives the
//! rest of the crate builds on: bipartiteness with odd-cycle witnesses, odd
//! girth through the bipartite double cover, contraction of a vertex set,
//! and the split of the edges around a set into crossing and internal ones.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use crate::{Error, Rational, Result};

/// Dense vertex index.
pub type VertexId = usize;
/// Dense edge index.
pub type EdgeId = usize;
/// Ordered vertex set; iteration order is the deterministic tie-break order.
pub type VertexSet = BTreeSet<VertexId>;

/// Vertex-weighted undirected multigraph. Parallel edges are allowed,
/// self-loops are not, and weights are non-negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    weights: Vec<Rational>,
    edges: Vec<(VertexId, VertexId)>,
    adjacency: Vec<Vec<(EdgeId, VertexId)>>,
}

impl Graph {
    pub fn new(weights: Vec<Rational>, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        let n = weights.len();
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(v));
        }
        let mut adjacency = vec![Vec::new(); n];
        for (e, &(u, v)) in edges.iter().enumerate() {
            if u >= n {
                return Err(Error::UnknownVertex(u));
            }
            if v >= n {
                return Err(Error::UnknownVertex(v));
            }
            if u == v {
                return Err(Error::SelfLoop(e, u));
            }
            adjacency[u].push((e, v));
            adjacency[v].push((e, u));
        }
        Ok(Self {
            weights,
            edges,
            adjacency,
        })
    }

    /// Graph on `n` vertices with unit weights.
    pub fn unit(n: usize, edges: Vec<(VertexId, VertexId)>) -> Result<Self> {
        Self::new(vec![Rational::one(); n], edges)
    }

    /// Unit-weight cycle `0 - 1 - ... - (n-1) - 0`; edge `i` joins `i` and `i + 1`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::unit(n, edges).expect("cycle is a simple graph")
    }

    /// Unit-weight path on `n` vertices.
    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Self::unit(n, edges).expect("path is a simple graph")
    }

    /// Unit-weight complete graph; edges in lexicographic order of `(i, j)`, `i < j`.
    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                edges.push((i, j));
            }
        }
        Self::unit(n, edges).expect("complete graph is simple")
    }

    /// Same topology with new weights.
    pub fn with_weights(&self, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != self.num_vertices() {
            return Err(Error::WeightCount {
                expected: self.num_vertices(),
                got: weights.len(),
            });
        }
        if let Some(v) = weights.iter().position(|w| w.is_negative()) {
            return Err(Error::NegativeWeight(v));
        }
        Ok(Self {
            weights,
            edges: self.edges.clone(),
            adjacency: self.adjacency.clone(),
        })
    }

    pub fn num_vertices(&self) -> usize {
        self.weights.len()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn weight(&self, v: VertexId) -> &Rational {
        &self.weights[v]
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e]
    }

    /// Incident `(edge, neighbor)` pairs in edge insertion order.
    pub fn neighbors(&self, v: VertexId) -> &[(EdgeId, VertexId)] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adjacency[v].len()
    }

    pub fn total_weight(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |acc, w| acc + w)
    }

    /// Sum of the weights of the listed vertices.
    pub fn weight_of<'a>(&self, vertices: impl IntoIterator<Item = &'a VertexId>) -> Rational {
        vertices
            .into_iter()
            .fold(Rational::zero(), |acc, &v| acc + &self.weights[v])
    }

    /// Lowest-indexed edge joining `u` and `v`.
    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        self.adjacency
            .get(u)?
            .iter()
            .filter(|&&(_, x)| x == v)
            .map(|&(e, _)| e)
            .min()
    }

    pub fn is_cover(&self, set: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| set.contains(u) || set.contains(v))
    }

    pub fn is_independent(&self, set: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|(u, v)| !(set.contains(u) && set.contains(v)))
    }

    pub fn check_set(&self, set: &VertexSet) -> Result<()> {
        match set.iter().next_back() {
            Some(&v) if v >= self.num_vertices() => Err(Error::UnknownVertex(v)),
            _ => Ok(()),
        }
    }

    /// Subgraph induced on the vertices with `keep[v] == true`.
    pub fn induced(&self, keep: &[bool]) -> Subgraph {
        let mut index = vec![usize::MAX; self.num_vertices()];
        let mut parent_vertex = Vec::new();
        let mut weights = Vec::new();
        for v in 0..self.num_vertices() {
            if keep[v] {
                index[v] = parent_vertex.len();
                parent_vertex.push(v);
                weights.push(self.weights[v].clone());
            }
        }
        let mut edges = Vec::new();
        let mut parent_edge = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if keep[u] && keep[v] {
                edges.push((index[u], index[v]));
                parent_edge.push(e);
            }
        }
        let graph = Graph::new(weights, edges).expect("induced subgraph of a valid graph");
        Subgraph {
            graph,
            parent_vertex,
            parent_edge,
        }
    }

    /// `G \ S`: the subgraph induced on the vertices outside `set`.
    pub fn remove_vertices(&self, set: &VertexSet) -> Subgraph {
        let keep: Vec<bool> = (0..self.num_vertices())
            .map(|v| !set.contains(&v))
            .collect();
        self.induced(&keep)
    }
}

/// An induced subgraph together with the maps back to its parent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    pub parent_vertex: Vec<VertexId>,
    pub parent_edge: Vec<EdgeId>,
}

impl Subgraph {
    pub fn lift<'a>(&self, vertices: impl IntoIterator<Item = &'a VertexId>) -> VertexSet {
        vertices
            .into_iter()
            .map(|&v| self.parent_vertex[v])
            .collect()
    }
}

/// Two-sided vertex partition with every edge crossing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Bipartition {
    pub side_a: VertexSet,
    pub side_b: VertexSet,
}

impl Bipartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.num_vertices();
        if self.side_a.len() + self.side_b.len() != n
            || self.side_a.iter().chain(&self.side_b).any(|&v| v >= n)
            || !self.side_a.is_disjoint(&self.side_b)
        {
            return false;
        }
        g.edges()
            .iter()
            .all(|(u, v)| self.side_a.contains(u) != self.side_a.contains(v))
    }
}

/// A closed walk without repeated vertices: `edges[i]` joins `vertices[i]`
/// and `vertices[(i + 1) % len]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OddCycle {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

impl OddCycle {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Resolves a vertex sequence to a cycle of `g`, choosing the lowest
    /// indexed edge between consecutive vertices.
    pub fn from_vertices(g: &Graph, vertices: &[VertexId]) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::InvalidCycle("fewer than three vertices"));
        }
        let distinct: VertexSet = vertices.iter().copied().collect();
        if distinct.len() != len {
            return Err(Error::InvalidCycle("repeated vertex"));
        }
        g.check_set(&distinct)?;
        let mut edges = Vec::with_capacity(len);
        for i in 0..len {
            let e = g
                .edge_between(vertices[i], vertices[(i + 1) % len])
                .ok_or(Error::InvalidCycle("consecutive vertices are not adjacent"))?;
            edges.push(e);
        }
        Ok(Self {
            vertices: vertices.to_vec(),
            edges,
        })
    }

    /// Same cycle, rotated so that it starts at `v`.
    pub fn rotated_to(&self, v: VertexId) -> Option<Self> {
        let pos = self.vertices.iter().position(|&x| x == v)?;
        let mut vertices = self.vertices.clone();
        let mut edges = self.edges.clone();
        vertices.rotate_left(pos);
        edges.rotate_left(pos);
        Some(Self { vertices, edges })
    }
}

/// Outcome of [`is_bipartite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Bipartition),
    /// The graph has an odd cycle; one witness is returned.
    OddCycle(OddCycle),
}

impl Bipartiteness {
    pub fn bipartition(self) -> Option<Bipartition> {
        match self {
            Bipartiteness::Bipartite(b) => Some(b),
            Bipartiteness::OddCycle(_) => None,
        }
    }
}

/// BFS 2-coloring. Components are explored from their lowest vertex, which
/// is placed on side A.
pub fn is_bipartite(g: &Graph) -> Bipartiteness {
    let n = g.num_vertices();
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut parent: Vec<Option<(VertexId, EdgeId)>> = vec![None; n];
    let mut depth = vec![0usize; n];
    for root in 0..n {
        if color[root].is_some() {
            continue;
        }
        color[root] = Some(false);
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(e, v) in g.neighbors(u) {
                match color[v] {
                    None => {
                        color[v] = Some(!color[u].unwrap());
                        parent[v] = Some((u, e));
                        depth[v] = depth[u] + 1;
                        queue.push_back(v);
                    }
                    Some(c) if c == color[u].unwrap() => {
                        return Bipartiteness::OddCycle(tree_cycle(u, v, e, &parent, &depth));
                    }
                    Some(_) => {}
                }
            }
        }
    }
    let mut bip = Bipartition::default();
    for v in 0..n {
        if color[v] == Some(false) {
            bip.side_a.insert(v);
        } else {
            bip.side_b.insert(v);
        }
    }
    Bipartiteness::Bipartite(bip)
}

// Cycle closed by the non-tree edge `e = (u, v)` in a BFS forest.
fn tree_cycle(
    u: VertexId,
    v: VertexId,
    e: EdgeId,
    parent: &[Option<(VertexId, EdgeId)>],
    depth: &[usize],
) -> OddCycle {
    let (mut a, mut b) = (u, v);
    let mut up_a = Vec::new(); // (vertex, edge to its parent)
    let mut up_b = Vec::new();
    while depth[a] > depth[b] {
        let (p, pe) = parent[a].unwrap();
        up_a.push((a, pe));
        a = p;
    }
    while depth[b] > depth[a] {
        let (p, pe) = parent[b].unwrap();
        up_b.push((b, pe));
        b = p;
    }
    while a != b {
        let (pa, ea) = parent[a].unwrap();
        let (pb, eb) = parent[b].unwrap();
        up_a.push((a, ea));
        up_b.push((b, eb));
        a = pa;
        b = pb;
    }
    let lca = a;
    // lca -> ... -> u, then e, then v -> ... -> lca
    let mut vertices = vec![lca];
    let mut edges = Vec::new();
    for &(x, ex) in up_a.iter().rev() {
        edges.push(ex);
        vertices.push(x);
    }
    edges.push(e);
    for &(x, ex) in &up_b {
        vertices.push(x);
        edges.push(ex);
    }
    OddCycle { vertices, edges }
}

/// Shortest odd cycle, found as the minimum over sources `s` of the BFS
/// distance from `(s, even)` to `(s, odd)` in the bipartite double cover.
/// Ties go to the smallest source; the returned cycle starts at that source.
pub fn odd_girth(g: &Graph) -> Option<OddCycle> {
    let mut best: Option<OddCycle> = None;
    for s in 0..g.num_vertices() {
        if let Some(walk) = shortest_odd_closed_walk(g, s) {
            if best.as_ref().is_none_or(|b| walk.len() < b.len()) {
                let done = walk.len() == 3;
                best = Some(walk);
                if done {
                    break;
                }
            }
        }
    }
    best
}

/// Double-cover BFS distances from `(s, 0)`; entry `[v][p]` is the length of
/// the shortest walk from `s` to `v` whose length has parity `p`.
pub fn parity_distances(g: &Graph, s: VertexId) -> Vec<[Option<usize>; 2]> {
    let mut dist = vec![[None, None]; g.num_vertices()];
    dist[s][0] = Some(0);
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        let d = dist[u][p].unwrap();
        for &(_, v) in g.neighbors(u) {
            if dist[v][1 - p].is_none() {
                dist[v][1 - p] = Some(d + 1);
                queue.push_back((v, 1 - p));
            }
        }
    }
    dist
}

fn shortest_odd_closed_walk(g: &Graph, s: VertexId) -> Option<OddCycle> {
    let n = g.num_vertices();
    let mut parent: Vec<[Option<(VertexId, EdgeId)>; 2]> = vec![[None, None]; n];
    let mut seen = vec![[false, false]; n];
    seen[s][0] = true;
    let mut queue = VecDeque::from([(s, 0usize)]);
    while let Some((u, p)) = queue.pop_front() {
        for &(e, v) in g.neighbors(u) {
            let q = 1 - p;
            if !seen[v][q] {
                seen[v][q] = true;
                parent[v][q] = Some((u, e));
                if v == s && q == 1 {
                    queue.clear();
                    break;
                }
                queue.push_back((v, q));
            }
        }
    }
    if !seen[s][1] {
        return None;
    }
    // walk back from (s, 1) to (s, 0)
    let mut rev_vertices = Vec::new();
    let mut rev_edges = Vec::new();
    let (mut v, mut p) = (s, 1usize);
    loop {
        let (u, e) = parent[v][p].unwrap();
        rev_edges.push(e);
        v = u;
        p = 1 - p;
        if v == s && p == 0 {
            break;
        }
        rev_vertices.push(v);
    }
    let mut vertices = vec![s];
    vertices.extend(rev_vertices.into_iter().rev());
    rev_edges.reverse();
    Some(OddCycle {
        vertices,
        edges: rev_edges,
    })
}

/// `G / S`: the set merged into one new vertex, appended last. Parallel
/// edges survive; edges inside the set are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractedGraph {
    pub graph: Graph,
    pub contracted_vertex: VertexId,
    pub set: VertexSet,
    /// Contracted edge index -> parent edge index.
    pub parent_edge_of: Vec<EdgeId>,
    /// Parent edges inside the set, `E[S]`.
    pub dropped_edges: Vec<EdgeId>,
    /// Contracted vertex index -> parent vertex, `None` for the merged vertex.
    pub parent_vertex_of: Vec<Option<VertexId>>,
    /// Parent vertex index -> contracted vertex index.
    pub image_of: Vec<VertexId>,
}

impl ContractedGraph {
    /// Parent vertices for contracted vertices other than the merged one.
    pub fn lift<'a>(&self, vertices: impl IntoIterator<Item = &'a VertexId>) -> VertexSet {
        vertices
            .into_iter()
            .filter_map(|&v| self.parent_vertex_of[v])
            .collect()
    }

    pub fn lift_edges<'a>(&self, edges: impl IntoIterator<Item = &'a EdgeId>) -> BTreeSet<EdgeId> {
        edges.into_iter().map(|&e| self.parent_edge_of[e]).collect()
    }
}

pub fn contract(g: &Graph, set: &VertexSet) -> Result<ContractedGraph> {
    if set.is_empty() {
        return Err(Error::InvalidSet("empty set"));
    }
    if let Some(&v) = set.iter().find(|&&v| v >= g.num_vertices()) {
        return Err(Error::UnknownVertex(v));
    }
    let n = g.num_vertices();
    let kept = n - set.len();
    let contracted_vertex = kept;
    let mut image_of = vec![contracted_vertex; n];
    let mut parent_vertex_of = Vec::with_capacity(kept + 1);
    let mut weights = Vec::with_capacity(kept + 1);
    for v in 0..n {
        if !set.contains(&v) {
            image_of[v] = parent_vertex_of.len();
            parent_vertex_of.push(Some(v));
            weights.push(g.weight(v).clone());
        }
    }
    parent_vertex_of.push(None);
    weights.push(g.weight_of(set));

    let mut edges = Vec::new();
    let mut parent_edge_of = Vec::new();
    let mut dropped_edges = Vec::new();
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        if set.contains(&u) && set.contains(&v) {
            dropped_edges.push(e);
        } else {
            edges.push((image_of[u], image_of[v]));
            parent_edge_of.push(e);
        }
    }
    Ok(ContractedGraph {
        graph: Graph::new(weights, edges)?,
        contracted_vertex,
        set: set.clone(),
        parent_edge_of,
        dropped_edges,
        parent_vertex_of,
        image_of,
    })
}

/// `(delta(S), E[S])`: edges with exactly one endpoint in the set, and edges
/// with both endpoints in it, each in edge order.
pub fn boundary_and_inside(g: &Graph, set: &VertexSet) -> (Vec<EdgeId>, Vec<EdgeId>) {
    let mut boundary = Vec::new();
    let mut inside = Vec::new();
    for (e, (u, v)) in g.edges().iter().enumerate() {
        match (set.contains(u), set.contains(v)) {
            (true, true) => inside.push(e),
            (true, false) | (false, true) => boundary.push(e),
            (false, false) => {}
        }
    }
    (boundary, inside)
}

/// Connected components, each sorted, ordered by smallest vertex.
pub fn components(g: &Graph) -> Vec<Vec<VertexId>> {
    let n = g.num_vertices();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &(_, v) in g.neighbors(u) {
                if !seen[v] {
                    seen[v] = true;
                    comp.push(v);
                    queue.push_back(v);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}
