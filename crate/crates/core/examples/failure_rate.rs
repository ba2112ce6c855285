// Monte Carlo view of the randomized step: per-non-edge survival against
// d/(d+1) and the failure rate of single attempts as t grows.
//
// cargo run --release --example failure_rate

use cubicity::builder::default_t;
use cubicity::probe::survival_frequencies;
use cubicity::{estimate_failure_rate, gen_random_bipartite, BuildParams};

fn main() {
    let g = gen_random_bipartite(6, 8, 0.3, 5).unwrap();
    let table = survival_frequencies(&g, 5000, 9);
    println!(
        "delta' = {}, bound = {:.4}, 3 sigma = {:.4}",
        table.delta_prime,
        table.bound,
        table.margin()
    );
    for r in table.rows.iter().take(8) {
        println!(
            "  (a{}, b{}): {:.4} vs exact {}",
            r.a, r.b, r.frequency, r.exact
        );
    }
    assert_eq!(table.exceeding().count(), 0);

    let g = gen_random_bipartite(10, 20, 0.3, 6).unwrap();
    let dp = g.degree_profile().delta_prime;
    let t_default = default_t(dp, 20);
    println!("n2 = 20, delta' = {dp}, default t = {t_default}, target 1/n2 = 0.05");
    for t in [1, t_default / 4, t_default / 2, t_default] {
        let t = t.max(1);
        let est = estimate_failure_rate(&g, &BuildParams::with_seed(3).t(t), 100).unwrap();
        println!(
            "  t = {t:>3}: {}/{} attempts failed",
            est.failures, est.trials
        );
    }
}
