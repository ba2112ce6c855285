//! Exact check that a cube representation's intersection graph equals `G`.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::RepError;
use crate::graph::{BipartiteGraph, Vertex};
use crate::interval::CubeRepresentation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ViolationKind {
    /// An edge of `G` that the representation loses.
    MissingEdge,
    /// A non-adjacent pair of `G` that the representation keeps.
    ExtraEdge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Violation {
    pub u: Vertex,
    pub v: Vertex,
    pub kind: ViolationKind,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            ViolationKind::MissingEdge => "missing-edge",
            ViolationKind::ExtraEdge => "extra-edge",
        };
        write!(f, "{kind} ({}, {})", self.u, self.v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Verification {
    /// Every violating pair, ordered by global vertex index.
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Compares every vertex pair of `A ∪ B`. `O(k n²)`, rows split across the
/// rayon pool; the result does not depend on scheduling.
pub fn verify(rep: &CubeRepresentation, g: &BipartiteGraph) -> Result<Verification, RepError> {
    if rep.a_count() != g.a_count() || rep.b_count() != g.b_count() {
        return Err(RepError::VertexMismatch {
            left: rep.vertex_count(),
            right: g.vertex_count(),
        });
    }
    let n = rep.vertex_count();
    let violations: Vec<Violation> = (0..n)
        .into_par_iter()
        .flat_map_iter(|u| {
            let vu = rep.vertex_at(u);
            (u + 1..n).filter_map(move |v| {
                let vv = rep.vertex_at(v);
                let kind = match (g.adjacent(vu, vv), rep.adjacent(u, v)) {
                    (true, false) => ViolationKind::MissingEdge,
                    (false, true) => ViolationKind::ExtraEdge,
                    _ => return None,
                };
                Some(Violation { u: vu, v: vv, kind })
            })
        })
        .collect();
    Ok(Verification { violations })
}
