// The deterministic families that separate every same-side pair.
//
// cargo run --example bit_encoding_families

use cubicity::{build_h_family, gen_random_bipartite, intersection_of_family, Side, Vertex};

fn main() {
    let g = gen_random_bipartite(5, 10, 0.3, 1).unwrap();
    for side in [Side::A, Side::B] {
        let fam = build_h_family(&g, side);
        println!(
            "side {side}: {} vertices, {} bits",
            g.side_count(side),
            fam.bit_count()
        );
        for j in 1..=g.side_count(side) as u32 {
            let v = Vertex { side, index: j };
            let code: Vec<i64> = fam.reps().iter().map(|r| r.placement(v)).collect();
            println!("  {v}: {code:?}");
        }
        let h = intersection_of_family(&fam);
        let n1 = g.a_count();
        let same_side = h
            .edges()
            .filter(|&(u, v)| match side {
                Side::A => v < n1,
                Side::B => u >= n1,
            })
            .count();
        println!(
            "  same-side edges left: {same_side}, total edges: {}",
            h.edge_count()
        );
        assert_eq!(same_side, 0);
    }
}
