//! Simple undirected graphs on dense vertex ids, plus the distance
//! machinery (truncated BFS, rings, girth) and the subdivision operator.

use alloc::collections::{BTreeMap, BTreeSet, VecDeque};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// Vertex identifier. Vertices of a graph on `n` vertices are `0..n`.
pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    SelfLoop(Vertex),
    DuplicateEdge(Vertex, Vertex),
    VertexOutOfRange { vertex: Vertex, n: usize },
    BadParameter(&'static str),
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::SelfLoop(v) => write!(f, "self-loop at vertex {v}"),
            GraphError::DuplicateEdge(u, v) => write!(f, "duplicate edge {{{u}, {v}}}"),
            GraphError::VertexOutOfRange { vertex, n } => {
                write!(f, "vertex {vertex} out of range for a graph on {n} vertices")
            }
            GraphError::BadParameter(msg) => write!(f, "bad parameter: {msg}"),
        }
    }
}

impl core::error::Error for GraphError {}

/// An immutable simple undirected graph.
///
/// Adjacency lists are sorted and symmetric; there are no loops and no
/// parallel edges. Every constructor enforces this.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    m: usize,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl Graph {
    /// The graph with `n` vertices and no edges.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n], m: 0 }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(a, b));
            }
        }
        Ok(Graph { adj, m })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().copied().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> core::ops::Range<Vertex> {
        0..self.n()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Maximum degree at most three.
    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn is_connected(&self) -> bool {
        self.n() == 0 || self.components().iter().all(|&c| c == 0)
    }

    /// Component index per vertex, numbered in order of smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n()];
        let mut next = 0;
        let mut queue = VecDeque::new();
        for s in self.vertices() {
            if comp[s] != usize::MAX {
                continue;
            }
            comp[s] = next;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                for &w in self.neighbors(u) {
                    if comp[w] == usize::MAX {
                        comp[w] = next;
                        queue.push_back(w);
                    }
                }
            }
            next += 1;
        }
        comp
    }

    /// The induced subgraph on `keep` (in the given order). Vertex `keep[i]`
    /// becomes vertex `i`.
    pub fn induced(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let mut adj = vec![Vec::new(); keep.len()];
        let mut m = 0;
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                if index[w] != usize::MAX {
                    adj[i].push(index[w]);
                    if index[w] > i {
                        m += 1;
                    }
                }
            }
            adj[i].sort_unstable();
        }
        Graph { adj, m }
    }

    /// Removes the given vertices. Returns the remaining graph and, for each
    /// new vertex, its id in `self`.
    pub fn without(&self, removed: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut gone = vec![false; self.n()];
        for &v in removed {
            gone[v] = true;
        }
        let keep: Vec<Vertex> = self.vertices().filter(|&v| !gone[v]).collect();
        (self.induced(&keep), keep)
    }

    /// Relabels by `perm`, where old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        let mut adj = vec![Vec::new(); self.n()];
        for v in self.vertices() {
            adj[perm[v]] = self.adj[v].iter().map(|&w| perm[w]).collect();
            adj[perm[v]].sort_unstable();
        }
        Graph { adj, m: self.m }
    }

    /// Checks the representation invariants. Constructors guarantee them;
    /// this exists for tests and for data built by hand.
    pub fn validate(&self) -> Result<(), GraphError> {
        let n = self.n();
        let mut twice_m = 0;
        for (u, list) in self.adj.iter().enumerate() {
            twice_m += list.len();
            for (i, &v) in list.iter().enumerate() {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop(u));
                }
                if i > 0 && list[i - 1] >= v {
                    return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
                }
                if self.adj[v].binary_search(&u).is_err() {
                    return Err(GraphError::BadParameter("asymmetric adjacency"));
                }
            }
        }
        if twice_m != 2 * self.m {
            return Err(GraphError::BadParameter("edge count mismatch"));
        }
        Ok(())
    }
}

/// Breadth-first distances from `source`, truncated at `radius`.
/// Entry `v` is `Some(d)` iff `dist(source, v) = d <= radius`.
pub fn bfs_within(g: &Graph, source: Vertex, radius: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[source] = Some(0);
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap_or(0);
        if du == radius {
            continue;
        }
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Truncated single-source distances: a vertex is present iff its distance
/// from `source` is at most `radius`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceTable {
    pub source: Vertex,
    pub radius: usize,
    pub dist: BTreeMap<Vertex, usize>,
}

impl DistanceTable {
    pub fn get(&self, v: Vertex) -> Option<usize> {
        self.dist.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.dist.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dist.is_empty()
    }
}

pub fn distances_within(g: &Graph, source: Vertex, radius: usize) -> DistanceTable {
    let dist = bfs_within(g, source, radius)
        .into_iter()
        .enumerate()
        .filter_map(|(v, d)| d.map(|d| (v, d)))
        .collect();
    DistanceTable { source, radius, dist }
}

/// The ball of radius `radius` around `source` as `(vertex, distance)` pairs
/// in breadth-first order, starting with `(source, 0)`. Cost is proportional
/// to the ball, not to the graph.
pub fn ball(g: &Graph, source: Vertex, radius: usize) -> Vec<(Vertex, usize)> {
    let mut seen = BTreeSet::from([source]);
    let mut out = vec![(source, 0)];
    let mut head = 0;
    while head < out.len() {
        let (u, du) = out[head];
        head += 1;
        if du == radius {
            continue;
        }
        for &w in g.neighbors(u) {
            if seen.insert(w) {
                out.push((w, du + 1));
            }
        }
    }
    out
}

/// Vertices at distance exactly `d` from `v`, ascending.
pub fn ring_at(g: &Graph, v: Vertex, d: usize) -> Vec<Vertex> {
    bfs_within(g, v, d)
        .into_iter()
        .enumerate()
        .filter_map(|(w, dw)| (dw == Some(d)).then_some(w))
        .collect()
}

/// All-pairs distances by repeated BFS; `None` for different components.
pub fn all_pairs_distances(g: &Graph) -> Vec<Vec<Option<usize>>> {
    g.vertices().map(|s| bfs_within(g, s, usize::MAX)).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Acyclic,
}

impl Girth {
    pub fn at_least(self, g: usize) -> bool {
        match self {
            Girth::Finite(len) => len >= g,
            Girth::Acyclic => true,
        }
    }
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(len) => write!(f, "{len}"),
            Girth::Acyclic => f.write_str("acyclic"),
        }
    }
}

/// Length of a shortest cycle.
///
/// One BFS per root; a non-tree edge `uw` seen from root `r` closes a walk of
/// length `d(u) + d(w) + 1`, and the minimum over all roots is the girth.
pub fn girth(g: &Graph) -> Girth {
    let n = g.n();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for root in g.vertices() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[root] = 0;
        queue.clear();
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] >= best {
                break;
            }
            for &w in g.neighbors(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Acyclic
    } else {
        Girth::Finite(best)
    }
}

/// `D(G)`: every edge `{u, v}` replaced by a path `u - x - v` through a fresh
/// vertex `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub graph: Graph,
    /// Original edge `(u, v)` with `u < v` to its subdivision vertex.
    pub edge_map: BTreeMap<(Vertex, Vertex), Vertex>,
}

impl Subdivision {
    /// Number of original vertices; they keep ids `0..original_n`.
    pub fn original_n(&self) -> usize {
        self.graph.n() - self.edge_map.len()
    }
}

/// Subdivision vertices get ids `n..n+m` in sorted edge order.
pub fn subdivide(g: &Graph) -> Subdivision {
    let n = g.n();
    let mut edges = Vec::with_capacity(2 * g.m());
    let mut edge_map = BTreeMap::new();
    for (i, (u, v)) in g.edges().enumerate() {
        let x = n + i;
        edge_map.insert((u, v), x);
        edges.push((u, x));
        edges.push((x, v));
    }
    let graph = Graph::from_edges(n + g.m(), edges).expect("subdivision of a simple graph is simple");
    Subdivision { graph, edge_map }
}
