// Random instances, degree statistics and the graph file format.
//
// cargo run --example generate_and_parse

use cubicity::{gen_random_bipartite, normalize_sides, parse_graph, serialize_graph};

fn main() {
    let g = gen_random_bipartite(8, 5, 0.35, 42).expect("valid parameters");
    let profile = g.degree_profile();
    println!(
        "n1 = {}, n2 = {}, m = {}, delta_A = {}, delta_B = {}, delta' = {}",
        g.a_count(),
        g.b_count(),
        g.edge_count(),
        profile.delta_a,
        profile.delta_b,
        profile.delta_prime
    );

    // The larger side becomes B.
    let normalized = normalize_sides(&g);
    println!(
        "normalized: n1 = {}, n2 = {}, swapped = {}",
        normalized.graph.a_count(),
        normalized.graph.b_count(),
        normalized.swapped
    );

    let text = serialize_graph(&g);
    print!("{text}");
    let back = parse_graph(&text).expect("canonical output parses");
    assert_eq!(back, g);

    let bad = "p bipartite 2 2 2\ne 1 1\ne 1 1\n";
    match parse_graph(bad) {
        Ok(_) => unreachable!("duplicate edge accepted"),
        Err(e) => println!("rejected: {e}"),
    }
}
