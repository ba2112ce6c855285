//! Random unit interval supergraphs of a bipartite graph.
//!
//! Given a permutation `π` of one side S, every `v ∈ S` is placed at `π(v)` and
//! every `v` on the other side T at `n + min_{x ∈ N(v)} π(x)`, with threshold
//! `n = n1 + n2`. Every edge of `G` survives; a cross non-edge `(s, v)` survives
//! exactly when `π(s)` exceeds the minimum rank over `N(v)`.

use std::collections::{BTreeMap, BTreeSet};

use itertools::Itertools;
use num_rational::Ratio;
use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{PermutationError, SurvivalError};
use crate::graph::{BipartiteGraph, DegreeProfile, Side, Vertex};
use crate::interval::UnitIntervalRep;

/// Bijection from the vertices of one side onto `1..=size`.
///
/// `ranks()[i]` is `π(v_{i+1})`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Permutation {
    side: Side,
    ranks: Vec<u32>,
}

impl Permutation {
    pub fn from_ranks(side: Side, ranks: Vec<u32>) -> Result<Self, PermutationError> {
        let n = ranks.len();
        let mut seen = vec![false; n];
        for &r in &ranks {
            if r == 0 || r as usize > n || std::mem::replace(&mut seen[r as usize - 1], true) {
                return Err(PermutationError::NotBijection(n));
            }
        }
        Ok(Permutation { side, ranks })
    }

    pub fn identity(side: Side, size: usize) -> Self {
        Permutation {
            side,
            ranks: (1..=size as u32).collect(),
        }
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn len(&self) -> usize {
        self.ranks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ranks.is_empty()
    }

    pub fn ranks(&self) -> &[u32] {
        &self.ranks
    }

    /// `π(v)` for a 1-based index on the permuted side.
    pub fn rank(&self, index: u32) -> u32 {
        self.ranks[index as usize - 1]
    }

    /// The projection `π_X`: elements of `X` relabelled `1..=|X|` in `π` order.
    pub fn project(&self, subset: &BTreeSet<u32>) -> Result<BTreeMap<u32, u32>, PermutationError> {
        if subset.is_empty() {
            return Err(PermutationError::EmptySubset);
        }
        if let Some(&bad) = subset.iter().find(|&&x| x == 0 || x as usize > self.len()) {
            return Err(PermutationError::OutsideSide(Vertex {
                side: self.side,
                index: bad,
            }));
        }
        Ok(subset
            .iter()
            .copied()
            .sorted_by_key(|&x| self.rank(x))
            .zip(1..)
            .collect())
    }
}

/// Uniform random permutation of a side with `size` vertices (Fisher-Yates).
pub fn random_permutation<R: Rng + ?Sized>(side: Side, size: usize, rng: &mut R) -> Permutation {
    let mut ranks: Vec<u32> = (1..=size as u32).collect();
    ranks.shuffle(rng);
    Permutation { side, ranks }
}

/// Placement given to a vertex on the unpermuted side with no neighbours.
/// It lies more than `n` above every permuted-side placement, so the vertex is
/// cut off from the whole permuted side.
pub fn isolated_placement(n: usize) -> i64 {
    2 * n as i64 + 2
}

/// `U(π, S, T, G)` where `S` is the side `pi` permutes.
pub fn build_u(pi: &Permutation, g: &BipartiteGraph) -> UnitIntervalRep {
    let s = pi.side();
    assert_eq!(
        pi.len(),
        g.side_count(s),
        "permutation does not cover side {s}"
    );
    let n = g.vertex_count() as i64;
    let permuted: Vec<i64> = pi.ranks().iter().map(|&r| r as i64).collect();
    let other: Vec<i64> = (0..g.side_count(s.other()))
        .map(|i| {
            g.raw_neighbors(s.other(), i)
                .iter()
                .map(|&x| pi.ranks[x as usize] as i64)
                .min()
                .map_or(isolated_placement(g.vertex_count()), |t| n + t)
        })
        .collect();
    let (a, b) = match s {
        Side::A => (permuted, other),
        Side::B => (other, permuted),
    };
    UnitIntervalRep::new(n, a, b).expect("threshold n >= 2 is positive")
}

/// The side RANDUNIT permutes: A when `Δ_B <= Δ_A`, otherwise B.
pub fn randunit_side(profile: &DegreeProfile) -> Side {
    if profile.delta_b <= profile.delta_a {
        Side::A
    } else {
        Side::B
    }
}

/// One RANDUNIT invocation.
pub fn randunit<R: Rng + ?Sized>(g: &BipartiteGraph, rng: &mut R) -> UnitIntervalRep {
    randunit_with_side(g, randunit_side(&g.degree_profile()), rng)
}

/// RANDUNIT with the branch already decided, so repeated calls skip the
/// degree scan.
pub fn randunit_with_side<R: Rng + ?Sized>(
    g: &BipartiteGraph,
    side: Side,
    rng: &mut R,
) -> UnitIntervalRep {
    let pi = random_permutation(side, g.side_count(side), rng);
    build_u(&pi, g)
}

/// Splits a cross pair into (vertex on `permuted`, vertex on the other side).
fn orient(a: u32, b: u32, permuted: Side) -> (Vertex, Vertex) {
    match permuted {
        Side::A => (Vertex::a(a), Vertex::b(b)),
        Side::B => (Vertex::b(b), Vertex::a(a)),
    }
}

fn check_nonedge(g: &BipartiteGraph, a: u32, b: u32) -> Result<(), SurvivalError> {
    for v in [Vertex::a(a), Vertex::b(b)] {
        if !g.contains(v) {
            return Err(SurvivalError::IndexOutOfRange(v));
        }
    }
    if g.has_edge(a, b) {
        return Err(SurvivalError::IsEdge(a, b));
    }
    Ok(())
}

/// Exact probability that the cross non-edge `(a_a, b_b)` is still an edge of
/// `U(π, ·, ·, G)` for uniform `π` over `permuted`: `d/(d+1)` where `d` is the
/// degree of the endpoint on the unpermuted side (0 when it is isolated).
///
/// `permuted` must be the side RANDUNIT itself would choose.
pub fn nonedge_survival_exact(
    g: &BipartiteGraph,
    a: u32,
    b: u32,
    permuted: Side,
) -> Result<Ratio<u64>, SurvivalError> {
    check_nonedge(g, a, b)?;
    let actual = randunit_side(&g.degree_profile());
    if permuted != actual {
        return Err(SurvivalError::WrongBranch {
            requested: permuted,
            actual,
        });
    }
    Ok(survival_closed_form(g, a, b, permuted))
}

/// `d/(d+1)` for either choice of permuted side.
pub(crate) fn survival_closed_form(
    g: &BipartiteGraph,
    a: u32,
    b: u32,
    permuted: Side,
) -> Ratio<u64> {
    let (_, far) = orient(a, b, permuted);
    let d = g.degree(far) as u64;
    Ratio::new(d, d + 1)
}

/// Largest side enumerated exhaustively.
pub const ENUMERATION_LIMIT: usize = 8;

/// Survival probability of a cross non-edge by running [`build_u`] over every
/// permutation of `permuted`.
pub fn enumerate_survival(
    g: &BipartiteGraph,
    a: u32,
    b: u32,
    permuted: Side,
) -> Result<Ratio<u64>, SurvivalError> {
    check_nonedge(g, a, b)?;
    let size = g.side_count(permuted);
    if size > ENUMERATION_LIMIT {
        return Err(SurvivalError::TooLarge(size, ENUMERATION_LIMIT));
    }
    let (near, far) = orient(a, b, permuted);
    let (mut kept, mut total) = (0u64, 0u64);
    for ranks in (1..=size as u32).permutations(size) {
        let pi = Permutation {
            side: permuted,
            ranks,
        };
        let rep = build_u(&pi, g);
        if (rep.placement(near) - rep.placement(far)).abs() <= rep.threshold() {
            kept += 1;
        }
        total += 1;
    }
    Ok(Ratio::new(kept, total))
}
