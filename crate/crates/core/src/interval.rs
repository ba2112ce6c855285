//! Unit interval graphs given by an integer placement and a threshold, their
//! intersections, and the equivalent unit-cube coordinates.
//!
//! Vertices of `A ∪ B` are addressed globally as `0..n1` for A followed by
//! `n1..n1 + n2` for B. Placements are integers so every adjacency test is an
//! exact comparison; `|f(u) - f(v)| == c` counts as adjacent.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::RepError;
use crate::graph::{Side, Vertex};

/// General simple graph on `0..n`, stored as a dense bit matrix.
///
/// Unlike [`BipartiteGraph`](crate::graph::BipartiteGraph) this may contain
/// same-side edges; it is what a single unit interval graph induces.
#[derive(Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        SimpleGraph {
            n,
            words,
            bits: vec![0; n * words],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v && u < self.n && v < self.n, "bad edge ({u}, {v})");
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn edge_count(&self) -> usize {
        self.bits
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n)
                .filter(move |&v| self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    fn intersect_in_place(&mut self, other: &SimpleGraph) {
        for (x, y) in self.bits.iter_mut().zip(&other.bits) {
            *x &= *y;
        }
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SimpleGraph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Edge-set intersection of graphs on a common vertex set.
pub fn intersect_graphs<'a, I>(graphs: I) -> Result<SimpleGraph, RepError>
where
    I: IntoIterator<Item = &'a SimpleGraph>,
{
    let mut it = graphs.into_iter();
    let mut acc = it.next().ok_or(RepError::EmptyIntersection)?.clone();
    for g in it {
        if g.n != acc.n {
            return Err(RepError::VertexMismatch {
                left: acc.n,
                right: g.n,
            });
        }
        acc.intersect_in_place(g);
    }
    Ok(acc)
}

/// The threshold graph of `values`: `u ~ v` iff `|values[u] - values[v]| <= threshold`.
pub fn threshold_graph(values: &[i64], threshold: i64) -> SimpleGraph {
    let mut g = SimpleGraph::empty(values.len());
    // Sort once; each vertex is adjacent to a contiguous run after it.
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by_key(|&i| values[i]);
    for (pos, &u) in order.iter().enumerate() {
        for &v in &order[pos + 1..] {
            if values[v] - values[u] > threshold {
                break;
            }
            g.add_edge(u, v);
        }
    }
    g
}

/// One unit interval graph on `A ∪ B`: placement `f` and threshold `c`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnitIntervalRep {
    threshold: i64,
    a: Vec<i64>,
    b: Vec<i64>,
}

impl UnitIntervalRep {
    pub fn new(threshold: i64, a: Vec<i64>, b: Vec<i64>) -> Result<Self, RepError> {
        if threshold <= 0 {
            return Err(RepError::NonPositiveThreshold(threshold));
        }
        Ok(UnitIntervalRep { threshold, a, b })
    }

    pub fn threshold(&self) -> i64 {
        self.threshold
    }

    pub fn side_placement(&self, side: Side) -> &[i64] {
        match side {
            Side::A => &self.a,
            Side::B => &self.b,
        }
    }

    pub fn placement(&self, v: Vertex) -> i64 {
        self.side_placement(v.side)[v.index as usize - 1]
    }

    /// Placement by global index (A first, then B).
    #[inline]
    pub fn value(&self, global: usize) -> i64 {
        if global < self.a.len() {
            self.a[global]
        } else {
            self.b[global - self.a.len()]
        }
    }

    pub fn values(&self) -> Vec<i64> {
        self.a.iter().chain(&self.b).copied().collect()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        (self.value(u) - self.value(v)).abs() <= self.threshold
    }

    /// Checks the placement is total over a vertex set with the given side sizes.
    pub fn check_covers(&self, a_count: usize, b_count: usize) -> Result<(), RepError> {
        for (side, expected, found) in [
            (Side::A, a_count, self.a.len()),
            (Side::B, b_count, self.b.len()),
        ] {
            if expected != found {
                return Err(RepError::PlacementLength {
                    side,
                    expected,
                    found,
                });
            }
        }
        Ok(())
    }

    pub(crate) fn swap_sides(self) -> Self {
        UnitIntervalRep {
            threshold: self.threshold,
            a: self.b,
            b: self.a,
        }
    }
}

/// Induced graph of `rep` on a vertex set with `a_count + b_count` vertices.
pub fn induced_graph(
    rep: &UnitIntervalRep,
    a_count: usize,
    b_count: usize,
) -> Result<SimpleGraph, RepError> {
    rep.check_covers(a_count, b_count)?;
    Ok(threshold_graph(&rep.values(), rep.threshold))
}

/// Where a dimension came from. Informational only.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Provenance {
    RandUnit,
    /// Bit `i` (0-based, least significant first) of the A-side encoding.
    H1Bit(u32),
    /// Bit `i` of the B-side encoding.
    H2Bit(u32),
}

impl Provenance {
    pub(crate) fn swap_sides(self) -> Self {
        match self {
            Provenance::RandUnit => Provenance::RandUnit,
            Provenance::H1Bit(i) => Provenance::H2Bit(i),
            Provenance::H2Bit(i) => Provenance::H1Bit(i),
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::RandUnit => f.write_str("randunit"),
            Provenance::H1Bit(i) => write!(f, "h1-bit-{i}"),
            Provenance::H2Bit(i) => write!(f, "h2-bit-{i}"),
        }
    }
}

impl From<Provenance> for String {
    fn from(p: Provenance) -> String {
        p.to_string()
    }
}

impl TryFrom<String> for Provenance {
    type Error = String;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        if s == "randunit" {
            return Ok(Provenance::RandUnit);
        }
        let bit = |rest: &str| {
            rest.parse::<u32>()
                .map_err(|_| format!("bad provenance `{s}`"))
        };
        if let Some(rest) = s.strip_prefix("h1-bit-") {
            Ok(Provenance::H1Bit(bit(rest)?))
        } else if let Some(rest) = s.strip_prefix("h2-bit-") {
            Ok(Provenance::H2Bit(bit(rest)?))
        } else {
            Err(format!("bad provenance `{s}`"))
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Dimension {
    pub source: Provenance,
    #[serde(flatten)]
    pub rep: UnitIntervalRep,
}

/// An ordered list of unit interval graphs on `A ∪ B`; their intersection is
/// the represented graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubeRepresentation {
    a_count: usize,
    b_count: usize,
    dims: Vec<Dimension>,
}

impl CubeRepresentation {
    pub fn new(a_count: usize, b_count: usize, dims: Vec<Dimension>) -> Result<Self, RepError> {
        for d in &dims {
            d.rep.check_covers(a_count, b_count)?;
        }
        Ok(CubeRepresentation {
            a_count,
            b_count,
            dims,
        })
    }

    pub fn a_count(&self) -> usize {
        self.a_count
    }

    pub fn b_count(&self) -> usize {
        self.b_count
    }

    pub fn vertex_count(&self) -> usize {
        self.a_count + self.b_count
    }

    /// `k`, the number of dimensions.
    pub fn dimension(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[Dimension] {
        &self.dims
    }

    pub fn global_index(&self, v: Vertex) -> usize {
        match v.side {
            Side::A => v.index as usize - 1,
            Side::B => self.a_count + v.index as usize - 1,
        }
    }

    pub fn vertex_at(&self, global: usize) -> Vertex {
        if global < self.a_count {
            Vertex::a(global as u32 + 1)
        } else {
            Vertex::b((global - self.a_count) as u32 + 1)
        }
    }

    /// Adjacent in every dimension. With no dimensions every pair is adjacent.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.dims.iter().all(|d| d.rep.adjacent(u, v))
    }

    /// Keeps only the dimensions whose provenance satisfies `keep`.
    pub fn filtered(&self, keep: impl Fn(Provenance) -> bool) -> CubeRepresentation {
        CubeRepresentation {
            a_count: self.a_count,
            b_count: self.b_count,
            dims: self
                .dims
                .iter()
                .filter(|d| keep(d.source))
                .cloned()
                .collect(),
        }
    }

    /// Intersection of the induced graphs of all dimensions.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let n = self.vertex_count();
        let induced: Vec<SimpleGraph> = self
            .dims
            .iter()
            .map(|d| threshold_graph(&d.rep.values(), d.rep.threshold))
            .collect();
        intersect_graphs(&induced).unwrap_or_else(|_| SimpleGraph::complete(n))
    }

    pub(crate) fn swap_sides(self) -> Self {
        CubeRepresentation {
            a_count: self.b_count,
            b_count: self.a_count,
            dims: self
                .dims
                .into_iter()
                .map(|d| Dimension {
                    source: d.source.swap_sides(),
                    rep: d.rep.swap_sides(),
                })
                .collect(),
        }
    }

    /// Scales dimension `i` by `1 / c_i` so every vertex becomes a product of
    /// closed unit intervals `[f_i(v) / c_i, f_i(v) / c_i + 1]`.
    pub fn to_unit_cubes(&self) -> UnitCubes {
        let cube = |global: usize| -> Vec<UnitInterval> {
            self.dims
                .iter()
                .map(|d| {
                    UnitInterval::starting_at(Ratio::new(d.rep.value(global), d.rep.threshold))
                })
                .collect()
        };
        UnitCubes {
            a: (0..self.a_count).map(cube).collect(),
            b: (self.a_count..self.vertex_count()).map(cube).collect(),
        }
    }
}

/// Closed interval `[lo, lo + 1]` with rational endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UnitInterval {
    pub lo: Ratio<i64>,
    pub hi: Ratio<i64>,
}

impl UnitInterval {
    pub fn starting_at(lo: Ratio<i64>) -> Self {
        UnitInterval { lo, hi: lo + 1 }
    }

    pub fn intersects(&self, other: &UnitInterval) -> bool {
        self.lo.max(other.lo) <= self.hi.min(other.hi)
    }
}

/// Per-vertex unit cubes, one interval per dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCubes {
    pub a: Vec<Vec<UnitInterval>>,
    pub b: Vec<Vec<UnitInterval>>,
}

impl UnitCubes {
    fn cube(&self, global: usize) -> &[UnitInterval] {
        if global < self.a.len() {
            &self.a[global]
        } else {
            &self.b[global - self.a.len()]
        }
    }

    /// Intersection graph of the cubes: intervals must meet in every dimension.
    pub fn intersection_graph(&self) -> SimpleGraph {
        let n = self.a.len() + self.b.len();
        let mut g = SimpleGraph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if self
                    .cube(u)
                    .iter()
                    .zip(self.cube(v))
                    .all(|(x, y)| x.intersects(y))
                {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }
}
