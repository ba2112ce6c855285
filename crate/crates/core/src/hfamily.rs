//! Deterministic supergraph families that separate same-side pairs.
//!
//! For the separated side, rep `i` places `v_j` at 0 or 2 according to bit `i`
//! of `j - 1`; every vertex of the other side sits at 1; threshold 1. Cross
//! pairs are always at distance 1, so only same-side pairs with differing bits
//! are removed.

use crate::graph::{BipartiteGraph, Side};
use crate::interval::{
    intersect_graphs, threshold_graph, Dimension, Provenance, SimpleGraph, UnitIntervalRep,
};

/// Bits needed to give each of `n` vertices a distinct code: `⌈log₂ n⌉`, and
/// 0 for a single vertex.
pub fn bit_count(n: usize) -> u32 {
    if n <= 1 {
        0
    } else {
        usize::BITS - (n - 1).leading_zeros()
    }
}

/// `H1` (side A) or `H2` (side B) as an explicit list of unit interval reps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitEncodingFamily {
    side: Side,
    a_count: usize,
    b_count: usize,
    reps: Vec<UnitIntervalRep>,
}

impl BitEncodingFamily {
    pub fn side(&self) -> Side {
        self.side
    }

    pub fn bit_count(&self) -> u32 {
        self.reps.len() as u32
    }

    pub fn reps(&self) -> &[UnitIntervalRep] {
        &self.reps
    }

    pub fn into_dimensions(self) -> impl Iterator<Item = Dimension> {
        let side = self.side;
        self.reps
            .into_iter()
            .enumerate()
            .map(move |(i, rep)| Dimension {
                source: match side {
                    Side::A => Provenance::H1Bit(i as u32),
                    Side::B => Provenance::H2Bit(i as u32),
                },
                rep,
            })
    }
}

pub fn build_h_family(g: &BipartiteGraph, side: Side) -> BitEncodingFamily {
    let n = g.side_count(side);
    let bits = bit_count(n);
    let reps = (0..bits)
        .map(|i| {
            let coded: Vec<i64> = (0..n)
                .map(|j| if (j >> i) & 1 == 1 { 2 } else { 0 })
                .collect();
            let middle = vec![1; g.side_count(side.other())];
            let (a, b) = match side {
                Side::A => (coded, middle),
                Side::B => (middle, coded),
            };
            UnitIntervalRep::new(1, a, b).expect("threshold 1")
        })
        .collect();
    BitEncodingFamily {
        side,
        a_count: g.a_count(),
        b_count: g.b_count(),
        reps,
    }
}

/// Intersection of the family's induced graphs; complete when the family is empty.
pub fn intersection_of_family(fam: &BitEncodingFamily) -> SimpleGraph {
    let n = fam.a_count + fam.b_count;
    let induced: Vec<SimpleGraph> = fam
        .reps
        .iter()
        .map(|r| threshold_graph(&r.values(), 1))
        .collect();
    intersect_graphs(&induced).unwrap_or_else(|_| SimpleGraph::complete(n))
}
