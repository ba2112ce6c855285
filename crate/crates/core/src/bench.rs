//! Timing helpers for the construction phase.

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::builder::{build_representation, default_t, BuildParams};
use crate::error::BuildError;
use crate::graph::{gen_random_bipartite, BipartiteGraph};
use crate::randunit::{randunit_side, randunit_with_side};

/// Median wall time of one RANDUNIT invocation over `reps` runs (after one
/// warm-up run).
pub fn time_randunit(g: &BipartiteGraph, reps: usize, seed: u64) -> Duration {
    let side = randunit_side(&g.degree_profile());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    std::hint::black_box(randunit_with_side(g, side, &mut rng));
    let mut samples: Vec<Duration> = (0..reps.max(1))
        .map(|_| {
            let start = Instant::now();
            std::hint::black_box(randunit_with_side(g, side, &mut rng));
            start.elapsed()
        })
        .collect();
    samples.sort();
    samples[samples.len() / 2]
}

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub delta_prime: usize,
    pub t: usize,
    /// Median time of one RANDUNIT invocation, in microseconds.
    pub randunit_us: f64,
    /// `t` invocations at the median rate, in milliseconds.
    pub construction_ms: f64,
    /// Full verified build, when the graph is small enough to verify.
    pub build_construction_ms: Option<f64>,
    pub build_verification_ms: Option<f64>,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub n_min: usize,
    pub n_max: usize,
    /// Expected degree of every vertex.
    pub degree: f64,
    pub reps: usize,
    /// Largest `n` for which a full build (with verification) is timed.
    pub verify_max_n: usize,
    pub seed: u64,
}

impl Default for BenchConfig {
    fn default() -> Self {
        BenchConfig {
            n_min: 2000,
            n_max: 16000,
            degree: 4.0,
            reps: 15,
            verify_max_n: 1000,
            seed: 0,
        }
    }
}

/// Balanced random graph on `n` vertices with the given expected degree.
pub fn fixed_degree_graph(n: usize, degree: f64, seed: u64) -> BipartiteGraph {
    let half = (n / 2).max(1);
    let p = (degree / half as f64).min(1.0);
    gen_random_bipartite(half, n - half, p, seed).expect("valid parameters")
}

pub fn bench_graph(g: &BipartiteGraph, cfg: &BenchConfig) -> Result<BenchRow, BuildError> {
    let profile = g.degree_profile();
    let t = default_t(profile.delta_prime, g.a_count().max(g.b_count()));
    let per = time_randunit(g, cfg.reps, cfg.seed);
    let (bc, bv) = if g.vertex_count() <= cfg.verify_max_n {
        let b = build_representation(g, &BuildParams::with_seed(cfg.seed))?;
        (
            Some(b.report.timings.construction.as_secs_f64() * 1e3),
            Some(b.report.timings.verification.as_secs_f64() * 1e3),
        )
    } else {
        (None, None)
    };
    Ok(BenchRow {
        n: g.vertex_count(),
        m: g.edge_count(),
        delta_prime: profile.delta_prime,
        t,
        randunit_us: per.as_secs_f64() * 1e6,
        construction_ms: per.as_secs_f64() * 1e3 * t as f64,
        build_construction_ms: bc,
        build_verification_ms: bv,
    })
}

/// Doubles `n` from `n_min` up to `n_max`.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRow>, BuildError> {
    let mut rows = Vec::new();
    let mut n = cfg.n_min.max(2);
    while n <= cfg.n_max {
        let g = fixed_degree_graph(n, cfg.degree, cfg.seed ^ n as u64);
        rows.push(bench_graph(&g, cfg)?);
        n *= 2;
    }
    Ok(rows)
}
