//! Bipartite graphs `G = (A ∪ B, E)` with 1-based vertex indices on each side.
//!
//! Edges only ever join an A-vertex to a B-vertex; same-side edges cannot be
//! represented. Graph values are immutable once built.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Geometric;
use serde::{Deserialize, Serialize};

use crate::error::GraphError;

/// One side of the bipartition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    A,
    B,
}

impl Side {
    pub fn other(self) -> Side {
        match self {
            Side::A => Side::B,
            Side::B => Side::A,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::A => f.write_str("a"),
            Side::B => f.write_str("b"),
        }
    }
}

/// A vertex named by its side and its 1-based index on that side (`v_j` / `u_j`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Vertex {
    pub side: Side,
    pub index: u32,
}

impl Vertex {
    pub fn a(index: u32) -> Self {
        Vertex {
            side: Side::A,
            index,
        }
    }

    pub fn b(index: u32) -> Self {
        Vertex {
            side: Side::B,
            index,
        }
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.side, self.index)
    }
}

/// Simple finite bipartite graph.
///
/// Adjacency is stored per side as sorted 0-based neighbour lists; the public
/// API speaks 1-based indices throughout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    adj_a: Vec<Vec<u32>>,
    adj_b: Vec<Vec<u32>>,
    edge_count: usize,
}

impl BipartiteGraph {
    /// Builds a graph from 1-based `(a, b)` cross edges.
    pub fn from_edges<I>(a_count: usize, b_count: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (u32, u32)>,
    {
        if a_count == 0 || b_count == 0 {
            return Err(GraphError::EmptySide);
        }
        let mut adj_a = vec![Vec::new(); a_count];
        let mut adj_b = vec![Vec::new(); b_count];
        for (a, b) in edges {
            if a == 0 || a as usize > a_count {
                return Err(GraphError::IndexOutOfRange(Vertex::a(a)));
            }
            if b == 0 || b as usize > b_count {
                return Err(GraphError::IndexOutOfRange(Vertex::b(b)));
            }
            adj_a[a as usize - 1].push(b - 1);
            adj_b[b as usize - 1].push(a - 1);
        }
        let mut edge_count = 0;
        for (i, list) in adj_a.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(i as u32 + 1, w[0] + 1));
            }
            edge_count += list.len();
        }
        for list in adj_b.iter_mut() {
            list.sort_unstable();
        }
        Ok(BipartiteGraph {
            adj_a,
            adj_b,
            edge_count,
        })
    }

    /// `K_{a_count, b_count}`.
    pub fn complete(a_count: usize, b_count: usize) -> Result<Self, GraphError> {
        let edges = (1..=a_count as u32).flat_map(|a| (1..=b_count as u32).map(move |b| (a, b)));
        Self::from_edges(a_count, b_count, edges)
    }

    pub fn a_count(&self) -> usize {
        self.adj_a.len()
    }

    pub fn b_count(&self) -> usize {
        self.adj_b.len()
    }

    pub fn side_count(&self, side: Side) -> usize {
        match side {
            Side::A => self.a_count(),
            Side::B => self.b_count(),
        }
    }

    /// `n = n1 + n2`.
    pub fn vertex_count(&self) -> usize {
        self.a_count() + self.b_count()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// 0-based neighbour indices (on the other side) of the 0-based vertex `i` of `side`.
    pub(crate) fn raw_neighbors(&self, side: Side, i: usize) -> &[u32] {
        match side {
            Side::A => &self.adj_a[i],
            Side::B => &self.adj_b[i],
        }
    }

    /// `N(v)` as 1-based vertices.
    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        let other = v.side.other();
        self.raw_neighbors(v.side, v.index as usize - 1)
            .iter()
            .map(move |&w| Vertex {
                side: other,
                index: w + 1,
            })
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.raw_neighbors(v.side, v.index as usize - 1).len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v.index >= 1 && v.index as usize <= self.side_count(v.side)
    }

    /// Cross-edge test on 1-based indices.
    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.adj_a
            .get(a as usize - 1)
            .is_some_and(|l| l.binary_search(&(b - 1)).is_ok())
    }

    /// Adjacency between arbitrary vertices; same-side pairs are never adjacent.
    pub fn adjacent(&self, u: Vertex, v: Vertex) -> bool {
        match (u.side, v.side) {
            (Side::A, Side::B) => self.has_edge(u.index, v.index),
            (Side::B, Side::A) => self.has_edge(v.index, u.index),
            _ => false,
        }
    }

    /// Edges as 1-based `(a, b)` pairs, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj_a
            .iter()
            .enumerate()
            .flat_map(|(a, l)| l.iter().map(move |&b| (a as u32 + 1, b + 1)))
    }

    /// Cross pairs `(a, b)` that are not edges, sorted.
    pub fn cross_nonedges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        let n2 = self.b_count() as u32;
        (1..=self.a_count() as u32)
            .flat_map(move |a| (1..=n2).map(move |b| (a, b)))
            .filter(|&(a, b)| !self.has_edge(a, b))
    }

    pub fn cross_nonedge_count(&self) -> usize {
        self.a_count() * self.b_count() - self.edge_count
    }

    /// The same graph with the roles of A and B exchanged.
    pub fn swapped(&self) -> BipartiteGraph {
        BipartiteGraph {
            adj_a: self.adj_b.clone(),
            adj_b: self.adj_a.clone(),
            edge_count: self.edge_count,
        }
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        let degrees_a: Vec<usize> = self.adj_a.iter().map(Vec::len).collect();
        let degrees_b: Vec<usize> = self.adj_b.iter().map(Vec::len).collect();
        let delta_a = degrees_a.iter().copied().max().unwrap_or(0);
        let delta_b = degrees_b.iter().copied().max().unwrap_or(0);
        DegreeProfile {
            delta_a,
            delta_b,
            delta_prime: delta_a.min(delta_b),
            degrees_a,
            degrees_b,
        }
    }
}

/// Degree statistics: `Δ_A`, `Δ_B`, `Δ' = min(Δ_A, Δ_B)` and every `d(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub delta_a: usize,
    pub delta_b: usize,
    pub delta_prime: usize,
    degrees_a: Vec<usize>,
    degrees_b: Vec<usize>,
}

impl DegreeProfile {
    pub fn degree(&self, v: Vertex) -> usize {
        match v.side {
            Side::A => self.degrees_a[v.index as usize - 1],
            Side::B => self.degrees_b[v.index as usize - 1],
        }
    }

    pub fn max_degree(&self, side: Side) -> usize {
        match side {
            Side::A => self.delta_a,
            Side::B => self.delta_b,
        }
    }
}

/// A graph with `a_count <= b_count`, plus whether sides were exchanged to get there.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub graph: BipartiteGraph,
    pub swapped: bool,
}

/// Swaps sides when `n1 > n2`. Ties keep the original orientation.
pub fn normalize_sides(g: &BipartiteGraph) -> Normalized {
    if g.a_count() > g.b_count() {
        Normalized {
            graph: g.swapped(),
            swapped: true,
        }
    } else {
        Normalized {
            graph: g.clone(),
            swapped: false,
        }
    }
}

/// Random bipartite graph where each of the `n1 * n2` cross pairs is an edge
/// independently with probability `p`. Deterministic for a given seed.
pub fn gen_random_bipartite(
    n1: usize,
    n2: usize,
    p: f64,
    seed: u64,
) -> Result<BipartiteGraph, GraphError> {
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidProbability(p));
    }
    if n1 == 0 || n2 == 0 {
        return Err(GraphError::EmptySide);
    }
    if p == 0.0 {
        return BipartiteGraph::from_edges(n1, n2, std::iter::empty());
    }
    if p == 1.0 {
        return BipartiteGraph::complete(n1, n2);
    }

    // Skip ahead by geometric gaps instead of flipping a coin per pair.
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gaps = Geometric::new(p).expect("p in (0,1)");
    let total = (n1 as u64) * (n2 as u64);
    let mut edges = Vec::new();
    let mut pos: u64 = 0;
    loop {
        let skip: u64 = rng.sample(gaps);
        pos = match pos.checked_add(skip) {
            Some(x) if x < total => x,
            _ => break,
        };
        edges.push(((pos / n2 as u64) as u32 + 1, (pos % n2 as u64) as u32 + 1));
        pos += 1;
    }
    BipartiteGraph::from_edges(n1, n2, edges)
}
