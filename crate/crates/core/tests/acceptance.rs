//! Acceptance criteria. Each test prints one `[PASS]` / `[FAIL]` line; run with
//! `cargo test -p cubicity --test acceptance -- --nocapture` to see them.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use cubicity::bench::{fixed_degree_graph, time_randunit};
use cubicity::builder::{ceil_ln, default_t};
use cubicity::dump::write_dump;
use cubicity::hfamily::bit_count;
use cubicity::interval::threshold_graph;
use cubicity::probe::survival_frequencies;
use cubicity::randunit::{enumerate_survival, nonedge_survival_exact, randunit_side};
use cubicity::{
    build_h_family, build_representation, build_u, estimate_failure_rate, gen_random_bipartite,
    intersect_graphs, intersection_of_family, randunit, verify, BipartiteGraph, BuildParams,
    CubeRepresentation, Dimension, Permutation, Provenance, Side, SimpleGraph, UnitIntervalRep,
};

fn line(id: u32, name: &str, pass: bool, detail: impl AsRef<str>) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] AC{id} {name}: {}", detail.as_ref());
}

/// Independent of `verify`: intersect the induced graphs and compare with `g`
/// pair by pair.
fn oracle_represents(rep: &CubeRepresentation, g: &BipartiteGraph) -> bool {
    let n1 = g.a_count();
    let n = g.vertex_count();
    let induced: Vec<SimpleGraph> = rep
        .dims()
        .iter()
        .map(|d| threshold_graph(&d.rep.values(), d.rep.threshold()))
        .collect();
    let h = if induced.is_empty() {
        SimpleGraph::complete(n)
    } else {
        intersect_graphs(&induced).unwrap()
    };
    (0..n).all(|u| {
        (u + 1..n).all(|v| {
            let expected = u < n1 && v >= n1 && g.has_edge(u as u32 + 1, (v - n1) as u32 + 1);
            h.has_edge(u, v) == expected
        })
    })
}

/// The 200-graph corpus shared by AC1 and AC7.
fn corpus() -> Vec<BipartiteGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac1);
    let ps = [0.0, 0.1, 0.3, 0.5, 1.0];
    (0..200)
        .map(|i| {
            let n1 = rng.random_range(1..=15);
            let n2 = rng.random_range(n1..=30);
            gen_random_bipartite(n1, n2, ps[i % ps.len()], rng.random()).unwrap()
        })
        .collect()
}

#[test]
fn ac01_end_to_end_correctness() {
    let start = Instant::now();
    let graphs = corpus();
    let mut bad = Vec::new();
    for (i, g) in graphs.iter().enumerate() {
        match build_representation(g, &BuildParams::with_seed(i as u64)) {
            Ok(b) => {
                let v = verify(&b.representation, g).unwrap();
                if !v.passed() || !oracle_represents(&b.representation, g) {
                    bad.push(i);
                }
            }
            Err(_) => bad.push(i),
        }
    }
    let elapsed = start.elapsed();
    let pass = bad.is_empty() && elapsed < Duration::from_secs(10);
    line(
        1,
        "end-to-end correctness",
        pass,
        format!("200 graphs, {} failures, {:.2?}", bad.len(), elapsed),
    );
    assert!(bad.is_empty(), "failing graphs: {bad:?}");
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
}

/// All permutations of `1..=n` (Heap's algorithm, kept here so the test does
/// not share the library's enumeration).
fn all_permutations(n: usize) -> Vec<Vec<u32>> {
    fn heap(k: usize, a: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if k <= 1 {
            out.push(a.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, a, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            a.swap(j, k - 1);
        }
    }
    let mut a: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::new();
    heap(n, &mut a, &mut out);
    out
}

#[test]
fn ac02_supergraph_property_exhaustive() {
    let mut checked = 0usize;
    let mut violations = 0usize;
    for n1 in 1..=4usize {
        for n2 in 1..=3usize {
            let cells = n1 * n2;
            let perms_a = all_permutations(n1);
            let perms_b = all_permutations(n2);
            for mask in 0u32..(1 << cells) {
                let edges = (0..cells)
                    .filter(|c| mask >> c & 1 == 1)
                    .map(|c| ((c / n2) as u32 + 1, (c % n2) as u32 + 1));
                let g = BipartiteGraph::from_edges(n1, n2, edges).unwrap();
                let reps = perms_a
                    .iter()
                    .map(|r| build_u(&Permutation::from_ranks(Side::A, r.clone()).unwrap(), &g))
                    .chain(perms_b.iter().map(|r| {
                        build_u(&Permutation::from_ranks(Side::B, r.clone()).unwrap(), &g)
                    }))
                    .chain((0..2).map(|s| {
                        randunit(&g, &mut ChaCha8Rng::seed_from_u64(mask as u64 * 7 + s))
                    }));
                for rep in reps {
                    checked += 1;
                    let ok = g.edges().all(|(a, b)| {
                        (rep.placement(cubicity::Vertex::a(a))
                            - rep.placement(cubicity::Vertex::b(b)))
                        .abs()
                            <= rep.threshold()
                    });
                    if !ok {
                        violations += 1;
                    }
                }
            }
        }
    }
    line(
        2,
        "supergraph property",
        violations == 0,
        format!("{checked} (graph, permutation) cases, {violations} lost edges"),
    );
    assert_eq!(violations, 0);
}

#[test]
fn ac03_survival_exactness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac3);
    let mut pairs = 0usize;
    let mut mismatches = Vec::new();
    let mut graphs = 0;
    while graphs < 50 {
        let n1 = rng.random_range(1..=7);
        let n2 = rng.random_range(1..=7);
        let p = rng.random_range(0.1..0.9);
        let g = gen_random_bipartite(n1, n2, p, rng.random()).unwrap();
        let side = randunit_side(&g.degree_profile());
        graphs += 1;
        let perms = all_permutations(g.side_count(side));
        for (a, b) in g.cross_nonedges() {
            pairs += 1;
            let exact = nonedge_survival_exact(&g, a, b, side).unwrap();
            let enumerated = enumerate_survival(&g, a, b, side).unwrap();
            // Third route: survival iff the near endpoint is not first among
            // {near} ∪ N(far) under π (projection rank 1 kills it).
            let (near, far) = match side {
                Side::A => (cubicity::Vertex::a(a), cubicity::Vertex::b(b)),
                Side::B => (cubicity::Vertex::b(b), cubicity::Vertex::a(a)),
            };
            let mut x: BTreeSet<u32> = g.neighbors(far).map(|v| v.index).collect();
            x.insert(near.index);
            let kept = perms
                .iter()
                .filter(|r| {
                    let pi = Permutation::from_ranks(side, (*r).clone()).unwrap();
                    g.degree(far) > 0 && pi.project(&x).unwrap()[&near.index] != 1
                })
                .count();
            let projected = Ratio::new(kept as u64, perms.len() as u64);
            let d = g.degree(far) as u64;
            if exact != Ratio::new(d, d + 1) || enumerated != exact || projected != exact {
                mismatches.push((graphs, a, b));
            }
        }
    }
    line(
        3,
        "survival exactness",
        mismatches.is_empty(),
        format!(
            "{pairs} non-edges over 50 graphs, {} mismatches",
            mismatches.len()
        ),
    );
    assert!(mismatches.is_empty(), "{mismatches:?}");
}

#[test]
fn ac04_survival_bound_monte_carlo() {
    let trials = 10_000;
    let mut rng = ChaCha8Rng::seed_from_u64(0xac4);
    let mut rows = 0;
    let mut over = Vec::new();
    for i in 0..20 {
        let n1 = rng.random_range(2..=8);
        let n2 = rng.random_range(n1..=12);
        let g = gen_random_bipartite(n1, n2, rng.random_range(0.1..0.7), rng.random()).unwrap();
        let table = survival_frequencies(&g, trials, 1000 + i);
        let limit = table.bound + 3.0 * (table.bound * (1.0 - table.bound) / trials as f64).sqrt();
        for r in &table.rows {
            rows += 1;
            if r.frequency > limit {
                over.push((i, r.a, r.b, r.frequency, limit));
            }
        }
    }
    line(
        4,
        "survival bound",
        over.is_empty(),
        format!(
            "{rows} non-edges over 20 graphs x {trials} trials, {} above bound + 3 sigma",
            over.len()
        ),
    );
    assert!(over.is_empty(), "{over:?}");
}

#[test]
fn ac05_h_family_lemmas() {
    let mut bad = Vec::new();
    for n1 in 1..=16usize {
        for n2 in 1..=16usize {
            let g = gen_random_bipartite(n1, n2, 0.4, (n1 * 100 + n2) as u64).unwrap();
            let n = n1 + n2;
            for side in [Side::A, Side::B] {
                let h = intersection_of_family(&build_h_family(&g, side));
                let (lo, hi) = match side {
                    Side::A => (0, n1),
                    Side::B => (n1, n),
                };
                for u in 0..n {
                    for v in u + 1..n {
                        let same_separated = u >= lo && v < hi;
                        let cross = u < n1 && v >= n1;
                        let ok = if same_separated {
                            !h.has_edge(u, v)
                        } else {
                            h.has_edge(u, v)
                        };
                        let edge_kept = !cross
                            || !g.has_edge(u as u32 + 1, (v - n1) as u32 + 1)
                            || h.has_edge(u, v);
                        if !ok || !edge_kept {
                            bad.push((n1, n2, side, u, v));
                        }
                    }
                }
            }
        }
    }
    line(
        5,
        "H-family lemmas",
        bad.is_empty(),
        format!("n1, n2 in 1..=16, {} bad pairs", bad.len()),
    );
    assert!(bad.is_empty(), "{:?}", &bad[..bad.len().min(10)]);
}

#[test]
fn ac06_failure_probability() {
    let start = Instant::now();
    let g = gen_random_bipartite(10, 20, 0.3, 0xac6).unwrap();
    let est = estimate_failure_rate(&g, &BuildParams::with_seed(0xac6), 400).unwrap();
    let elapsed = start.elapsed();
    let limit = 1.0 / 20.0 + 0.04;
    let pass = est.rate() <= limit && elapsed < Duration::from_secs(30);
    line(
        6,
        "failure probability",
        pass,
        format!(
            "{}/{} = {:.4} (limit {limit:.2}), {elapsed:.2?}",
            est.failures,
            est.trials,
            est.rate()
        ),
    );
    assert!(est.rate() <= limit);
    assert!(elapsed < Duration::from_secs(30));
}

#[test]
fn ac07_dimension_accounting() {
    let mut bad = Vec::new();
    for (i, g) in corpus().iter().enumerate() {
        let b = build_representation(g, &BuildParams::with_seed(i as u64)).unwrap();
        let (n1, n2) = (g.a_count(), g.b_count());
        let bits = bit_count(n1) as usize + bit_count(n2) as usize;
        let dp = g.degree_profile().delta_prime;
        let t = default_t(dp, n2);
        let ceiling = 3 * (dp + 1) * ceil_ln(n2) + bits + 1;
        let r = &b.report;
        let ok = r.t == t
            && r.k == t + bits
            && b.representation.dimension() == r.k
            && r.k <= ceiling
            && r.nominal_bound == 3 * (dp + 2) * ceil_ln(n2);
        if !ok {
            bad.push((i, r.k, ceiling));
        }
    }
    // Explicit t as well.
    let g = gen_random_bipartite(5, 9, 0.5, 3).unwrap();
    let b = build_representation(&g, &BuildParams::with_seed(1).t(60)).unwrap();
    if b.report.k != 60 + 3 + 4 {
        bad.push((999, b.report.k, 67));
    }
    line(
        7,
        "dimension accounting",
        bad.is_empty(),
        format!("201 builds, {} mismatches", bad.len()),
    );
    assert!(bad.is_empty(), "{bad:?}");
}

#[test]
fn ac08_runtime_scaling() {
    let sizes = [2000usize, 4000, 8000, 16000];
    let reps = 41;
    let mut rows = Vec::new();
    for &n in &sizes {
        let g = fixed_degree_graph(n, 4.0, 0xac8 ^ n as u64);
        let dp = g.degree_profile().delta_prime;
        rows.push((n, g.edge_count(), dp, time_randunit(&g, reps, 8)));
    }
    let mut ok = true;
    let mut detail = Vec::new();
    for w in rows.windows(2) {
        let (n0, m0, _, t0) = w[0];
        let (n1, m1, _, t1) = w[1];
        let size_ratio = (n1 + m1) as f64 / (n0 + m0) as f64;
        let time_ratio = t1.as_secs_f64() / t0.as_secs_f64();
        let allowed = 2.5 * size_ratio / 2.0;
        ok &= time_ratio <= allowed;
        detail.push(format!(
            "{n0}->{n1}: x{time_ratio:.2} (allowed x{allowed:.2})"
        ));
    }
    let dps: Vec<usize> = rows.iter().map(|r| r.2).collect();
    line(
        8,
        "runtime scaling",
        ok,
        format!("{} ; delta' per size {dps:?}", detail.join(", ")),
    );
    assert!(ok, "{detail:?}");
}

#[test]
fn ac09_determinism() {
    let mut bad = 0;
    for seed in 0..10u64 {
        let g = gen_random_bipartite(6 + seed as usize, 12, 0.3, seed).unwrap();
        let base = BuildParams::with_seed(seed * 31);
        let serial = BuildParams {
            parallel: false,
            ..base.clone()
        };
        let b1 = build_representation(&g, &base).unwrap();
        let b2 = build_representation(&g, &base).unwrap();
        let b3 = build_representation(&g, &serial).unwrap();
        let d1 = write_dump(&b1.representation, Some(&b1.report));
        let d2 = write_dump(&b2.representation, Some(&b2.report));
        let d3 = write_dump(&b3.representation, Some(&b3.report));
        let r1 = serde_json::to_string(&b1.report).unwrap();
        let r3 = serde_json::to_string(&b3.report).unwrap();
        if d1 != d2 || d1 != d3 || r1 != r3 {
            bad += 1;
        }
    }
    line(
        9,
        "determinism",
        bad == 0,
        format!("10 graphs, parallel x2 + serial, {bad} differences"),
    );
    assert_eq!(bad, 0);
}

#[test]
fn ac10_cube_semantics_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xac10);
    let mut bad = 0;
    for i in 0..50u64 {
        let n1 = rng.random_range(1..=5);
        let n2 = rng.random_range(1..=5);
        // Half built representations, half arbitrary placements and thresholds.
        let rep = if i % 2 == 0 {
            let g = gen_random_bipartite(n1, n2, 0.4, i).unwrap();
            build_representation(&g, &BuildParams::with_seed(i))
                .unwrap()
                .representation
        } else {
            let k = rng.random_range(1..=4);
            let dims = (0..k)
                .map(|_| {
                    let c = rng.random_range(1..=6);
                    let a = (0..n1).map(|_| rng.random_range(-10..=10)).collect();
                    let b = (0..n2).map(|_| rng.random_range(-10..=10)).collect();
                    Dimension {
                        source: Provenance::RandUnit,
                        rep: UnitIntervalRep::new(c, a, b).unwrap(),
                    }
                })
                .collect();
            CubeRepresentation::new(n1, n2, dims).unwrap()
        };
        if rep.to_unit_cubes().intersection_graph() != rep.intersection_graph() {
            bad += 1;
        }
    }
    line(
        10,
        "cube semantics oracle",
        bad == 0,
        format!("50 instances, {bad} disagreements"),
    );
    assert_eq!(bad, 0);
}
