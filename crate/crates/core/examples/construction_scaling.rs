// Time of one randomized dimension as the graph doubles at fixed expected degree.
//
// cargo run --release --example construction_scaling

use cubicity::bench::{run_bench, BenchConfig};

fn main() {
    let cfg = BenchConfig {
        n_min: 1000,
        n_max: 8000,
        reps: 9,
        verify_max_n: 1000,
        ..BenchConfig::default()
    };
    let rows = run_bench(&cfg).expect("bench runs");
    println!(
        "{:>6} {:>7} {:>4} {:>5} {:>12} {:>14}",
        "n", "m", "D'", "t", "randunit_us", "construct_ms"
    );
    for r in &rows {
        println!(
            "{:>6} {:>7} {:>4} {:>5} {:>12.1} {:>14.3}",
            r.n, r.m, r.delta_prime, r.t, r.randunit_us, r.construction_ms
        );
    }
    for w in rows.windows(2) {
        println!(
            "{} -> {}: x{:.2}",
            w[0].n,
            w[1].n,
            w[1].randunit_us / w[0].randunit_us
        );
    }
}
