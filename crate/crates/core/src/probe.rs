//! Monte Carlo survival rates of cross non-edges under RANDUNIT, next to the
//! exact `d/(d+1)` and the `Δ'/(Δ'+1)` ceiling.

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::builder::derive_seed;
use crate::graph::{BipartiteGraph, Side, Vertex};
use crate::randunit::{randunit_side, randunit_with_side, survival_closed_form};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NonEdgeProbe {
    pub a: u32,
    pub b: u32,
    pub survived: usize,
    pub frequency: f64,
    /// `d/(d+1)` for the endpoint on the unpermuted side, as `"num/den"`.
    #[serde(serialize_with = "ratio_text")]
    pub exact: Ratio<u64>,
}

fn ratio_text<S: serde::Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format!("{}/{}", r.numer(), r.denom()))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SurvivalTable {
    pub permuted: Side,
    pub delta_prime: usize,
    pub trials: usize,
    pub seed: u64,
    /// `Δ'/(Δ'+1)`.
    pub bound: f64,
    pub rows: Vec<NonEdgeProbe>,
}

impl SurvivalTable {
    /// `3 sqrt(p(1-p)/trials)` at `p = Δ'/(Δ'+1)`.
    pub fn margin(&self) -> f64 {
        three_sigma(self.bound, self.trials)
    }

    /// Rows whose frequency exceeds the bound plus the 3σ margin.
    pub fn exceeding(&self) -> impl Iterator<Item = &NonEdgeProbe> {
        let limit = self.bound + self.margin();
        self.rows.iter().filter(move |r| r.frequency > limit)
    }
}

pub fn three_sigma(p: f64, trials: usize) -> f64 {
    3.0 * (p * (1.0 - p) / trials as f64).sqrt()
}

/// Runs `trials` RANDUNIT invocations and counts, for every cross non-edge,
/// how often it is still an edge of the output.
pub fn survival_frequencies(g: &BipartiteGraph, trials: usize, seed: u64) -> SurvivalTable {
    let profile = g.degree_profile();
    let side = randunit_side(&profile);
    let pairs: Vec<(u32, u32)> = g.cross_nonedges().collect();
    let counts = (0..trials)
        .into_par_iter()
        .fold(
            || vec![0usize; pairs.len()],
            |mut acc, trial| {
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(seed, 0, trial as u64));
                let rep = randunit_with_side(g, side, &mut rng);
                for (c, &(a, b)) in acc.iter_mut().zip(&pairs) {
                    if (rep.placement(Vertex::a(a)) - rep.placement(Vertex::b(b))).abs()
                        <= rep.threshold()
                    {
                        *c += 1;
                    }
                }
                acc
            },
        )
        .reduce(
            || vec![0usize; pairs.len()],
            |mut x, y| {
                x.iter_mut().zip(y).for_each(|(p, q)| *p += q);
                x
            },
        );
    let rows = pairs
        .iter()
        .zip(counts)
        .map(|(&(a, b), survived)| NonEdgeProbe {
            a,
            b,
            survived,
            frequency: survived as f64 / trials as f64,
            exact: survival_closed_form(g, a, b, side),
        })
        .collect();
    let dp = profile.delta_prime as f64;
    SurvivalTable {
        permuted: side,
        delta_prime: profile.delta_prime,
        trials,
        seed,
        bound: dp / (dp + 1.0),
        rows,
    }
}
