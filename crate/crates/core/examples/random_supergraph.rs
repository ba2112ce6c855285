// Permutations, projections and the randomized unit interval supergraph,
// with exact survival probabilities of non-edges.
//
// cargo run --example random_supergraph

use std::collections::BTreeSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use cubicity::randunit::{enumerate_survival, nonedge_survival_exact, randunit_side};
use cubicity::{build_u, randunit, BipartiteGraph, Permutation, Side, Vertex};

fn main() {
    let pi = Permutation::from_ranks(Side::A, vec![3, 1, 2]).unwrap();
    let x: BTreeSet<u32> = [1, 3].into();
    println!(
        "projection of {:?} onto {x:?}: {:?}",
        pi.ranks(),
        pi.project(&x).unwrap()
    );

    // b1 is adjacent to a1 only; the non-edge (a2, b1) dies when a2 is ranked first.
    let g = BipartiteGraph::from_edges(2, 1, [(1, 1)]).unwrap();
    for ranks in [vec![1, 2], vec![2, 1]] {
        let rep = build_u(
            &Permutation::from_ranks(Side::A, ranks.clone()).unwrap(),
            &g,
        );
        let kept =
            (rep.placement(Vertex::a(2)) - rep.placement(Vertex::b(1))).abs() <= rep.threshold();
        println!(
            "pi = {ranks:?}: f(a2) = {}, f(b1) = {}, c = {} -> (a2, b1) {}",
            rep.placement(Vertex::a(2)),
            rep.placement(Vertex::b(1)),
            rep.threshold(),
            if kept { "kept" } else { "removed" }
        );
    }

    let g = BipartiteGraph::from_edges(5, 3, [(1, 1), (2, 1), (3, 1), (1, 2), (1, 3)]).unwrap();
    let side = randunit_side(&g.degree_profile());
    println!("randunit permutes side {side}");
    for (a, b) in g.cross_nonedges() {
        let exact = nonedge_survival_exact(&g, a, b, side).unwrap();
        let enumerated = enumerate_survival(&g, a, b, side).unwrap();
        assert_eq!(exact, enumerated);
        println!("  (a{a}, b{b}) survives with probability {exact}");
    }

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let rep = randunit(&g, &mut rng);
    assert!(g.edges().all(
        |(a, b)| (rep.placement(Vertex::a(a)) - rep.placement(Vertex::b(b))).abs()
            <= rep.threshold()
    ));
    println!(
        "one draw: a = {:?}, b = {:?}",
        rep.side_placement(Side::A),
        rep.side_placement(Side::B)
    );
}
