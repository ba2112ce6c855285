//! Las Vegas construction of a cube representation.
//!
//! One attempt stacks `t` RANDUNIT dimensions (which remove cross non-edges)
//! on top of the H1 and H2 families (which remove same-side pairs) and checks
//! the result exactly. Failed attempts are retried with fresh derived seeds.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::BuildError;
use crate::graph::{normalize_sides, BipartiteGraph, Side};
use crate::hfamily::{bit_count, build_h_family};
use crate::interval::{CubeRepresentation, Dimension, Provenance};
use crate::randunit::{randunit_side, randunit_with_side};
use crate::verify::{verify, Violation};

/// Name of the generator behind every random permutation, recorded in reports.
pub const RNG_NAME: &str = "chacha8";

pub const DEFAULT_MAX_RETRIES: u32 = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BuildParams {
    /// Number of RANDUNIT dimensions; `None` uses [`default_t`].
    pub t_override: Option<usize>,
    pub master_seed: u64,
    pub max_retries: u32,
    /// Construct RANDUNIT dimensions and verify on the rayon pool.
    pub parallel: bool,
}

impl BuildParams {
    pub fn with_seed(master_seed: u64) -> Self {
        BuildParams {
            t_override: None,
            master_seed,
            max_retries: DEFAULT_MAX_RETRIES,
            parallel: true,
        }
    }

    pub fn t(mut self, t: usize) -> Self {
        self.t_override = Some(t);
        self
    }
}

/// `⌈3(Δ' + 1) ln n2⌉`, at least 1.
pub fn default_t(delta_prime: usize, n2: usize) -> usize {
    let t = (3.0 * (delta_prime as f64 + 1.0) * (n2 as f64).ln()).ceil();
    (t as usize).max(1)
}

/// `⌈ln n⌉` as an integer.
pub fn ceil_ln(n: usize) -> usize {
    (n as f64).ln().ceil().max(0.0) as usize
}

/// Seed for RANDUNIT dimension `dim` of attempt `attempt`.
pub fn derive_seed(master: u64, attempt: u64, dim: u64) -> u64 {
    let mut x = splitmix(master ^ 0x6375_6269_6369_7479);
    x = splitmix(x ^ attempt);
    splitmix(x ^ dim.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Wall time per phase, summed over attempts.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct PhaseTimings {
    pub construction: Duration,
    pub verification: Duration,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildReport {
    pub n1: usize,
    pub n2: usize,
    pub m: usize,
    pub swapped: bool,
    pub delta_prime: usize,
    /// Achieved dimension `t + bits_a + bits_b`.
    pub k: usize,
    pub t: usize,
    pub bits_a: u32,
    pub bits_b: u32,
    pub retries: u32,
    pub seed: u64,
    pub rng: String,
    /// `3(Δ' + 2)⌈ln n2⌉` with `n2` the larger side.
    pub nominal_bound: usize,
    /// `2(Δ' + 2)⌈ln n2⌉`, the existence bound.
    pub existence_bound: usize,
    /// Not serialized: the dump must be reproducible byte for byte.
    #[serde(skip)]
    pub timings: PhaseTimings,
}

#[derive(Debug, Clone)]
pub struct Build {
    pub representation: CubeRepresentation,
    pub report: BuildReport,
}

struct Attempt {
    rep: CubeRepresentation,
    violations: Vec<Violation>,
}

/// Context shared by every attempt on a normalized graph.
struct Plan<'g> {
    graph: &'g BipartiteGraph,
    side: Side,
    t: usize,
    parallel: bool,
}

impl Plan<'_> {
    fn construct(&self, master: u64, attempt: u64) -> CubeRepresentation {
        let g = self.graph;
        let dim = |i: usize| {
            let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(master, attempt, i as u64));
            Dimension {
                source: Provenance::RandUnit,
                rep: randunit_with_side(g, self.side, &mut rng),
            }
        };
        let mut dims: Vec<Dimension> = if self.parallel {
            (0..self.t).into_par_iter().map(dim).collect()
        } else {
            (0..self.t).map(dim).collect()
        };
        dims.extend(build_h_family(g, Side::A).into_dimensions());
        dims.extend(build_h_family(g, Side::B).into_dimensions());
        CubeRepresentation::new(g.a_count(), g.b_count(), dims).expect("placements cover the graph")
    }

    fn run(&self, master: u64, attempt: u64, timings: &mut PhaseTimings) -> Attempt {
        let start = Instant::now();
        let rep = self.construct(master, attempt);
        let built = Instant::now();
        let violations = if self.parallel {
            verify(&rep, self.graph)
                .expect("same vertex set")
                .violations
        } else {
            rayon::ThreadPoolBuilder::new()
                .num_threads(1)
                .build()
                .expect("single-thread pool")
                .install(|| verify(&rep, self.graph))
                .expect("same vertex set")
                .violations
        };
        timings.construction += built - start;
        timings.verification += built.elapsed();
        Attempt { rep, violations }
    }
}

fn plan<'g>(g: &'g BipartiteGraph, params: &BuildParams) -> Result<Plan<'g>, BuildError> {
    if params.max_retries == 0 {
        return Err(BuildError::NoAttempts);
    }
    let profile = g.degree_profile();
    let t = params
        .t_override
        .unwrap_or_else(|| default_t(profile.delta_prime, g.b_count()));
    if t == 0 && g.cross_nonedge_count() > 0 {
        return Err(BuildError::ZeroDimensions {
            nonedges: g.cross_nonedges().collect(),
        });
    }
    Ok(Plan {
        graph: g,
        side: randunit_side(&profile),
        t,
        parallel: params.parallel,
    })
}

/// Builds and verifies a representation, retrying with new seeds until one
/// passes or `max_retries` attempts are used up. Graphs with `n1 > n2` are
/// handled on the swapped graph and mapped back.
pub fn build_representation(g: &BipartiteGraph, params: &BuildParams) -> Result<Build, BuildError> {
    let normalized = normalize_sides(g);
    let ng = &normalized.graph;
    let plan = plan(ng, params).map_err(|e| match e {
        BuildError::ZeroDimensions { nonedges } if normalized.swapped => {
            let mut nonedges: Vec<(u32, u32)> = nonedges.into_iter().map(|(a, b)| (b, a)).collect();
            nonedges.sort_unstable();
            BuildError::ZeroDimensions { nonedges }
        }
        e => e,
    })?;
    let profile = ng.degree_profile();

    let mut timings = PhaseTimings::default();
    let mut last = Vec::new();
    for attempt in 0..params.max_retries {
        let Attempt { rep, violations } =
            plan.run(params.master_seed, attempt as u64, &mut timings);
        if !violations.is_empty() {
            last = violations;
            continue;
        }
        let (rep, bits_a, bits_b) = if normalized.swapped {
            (
                rep.swap_sides(),
                bit_count(ng.b_count()),
                bit_count(ng.a_count()),
            )
        } else {
            (rep, bit_count(ng.a_count()), bit_count(ng.b_count()))
        };
        let ln_n2 = ceil_ln(ng.b_count());
        let report = BuildReport {
            n1: g.a_count(),
            n2: g.b_count(),
            m: g.edge_count(),
            swapped: normalized.swapped,
            delta_prime: profile.delta_prime,
            k: rep.dimension(),
            t: plan.t,
            bits_a,
            bits_b,
            retries: attempt,
            seed: params.master_seed,
            rng: RNG_NAME.to_string(),
            nominal_bound: 3 * (profile.delta_prime + 2) * ln_n2,
            existence_bound: 2 * (profile.delta_prime + 2) * ln_n2,
            timings,
        };
        return Ok(Build {
            representation: rep,
            report,
        });
    }
    if normalized.swapped {
        for v in &mut last {
            v.u.side = v.u.side.other();
            v.v.side = v.v.side.other();
            if v.v < v.u {
                std::mem::swap(&mut v.u, &mut v.v);
            }
        }
        last.sort();
    }
    Err(BuildError::RetriesExhausted {
        attempts: params.max_retries,
        violations: last,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct FailureEstimate {
    pub failures: usize,
    pub trials: usize,
}

impl FailureEstimate {
    pub fn rate(&self) -> f64 {
        self.failures as f64 / self.trials as f64
    }
}

/// Runs `trials` independent single attempts (no retries) and counts how many
/// fail verification. Trial `i` uses the seeds of attempt `i`.
pub fn estimate_failure_rate(
    g: &BipartiteGraph,
    params: &BuildParams,
    trials: usize,
) -> Result<FailureEstimate, BuildError> {
    let normalized = normalize_sides(g);
    let plan = plan(&normalized.graph, params)?;
    let mut timings = PhaseTimings::default();
    let failures = (0..trials)
        .filter(|&i| {
            !plan
                .run(params.master_seed, i as u64, &mut timings)
                .violations
                .is_empty()
        })
        .count();
    Ok(FailureEstimate { failures, trials })
}
