// Unit interval graphs from integer placements, their intersection, and the
// equivalent unit cubes.
//
// cargo run --example unit_interval_graphs

use cubicity::interval::threshold_graph;
use cubicity::{intersect_graphs, CubeRepresentation, Dimension, Provenance, UnitIntervalRep};

fn main() {
    // Placements 0, 2, 4 with threshold 2: a path x - y - z.
    let path = threshold_graph(&[0, 2, 4], 2);
    // Placements 0, 3, 3 with threshold 2: only y - z.
    let pair = threshold_graph(&[0, 3, 3], 2);
    let both = intersect_graphs([&path, &pair]).expect("same vertex set");
    println!("path {:?}", path.edges().collect::<Vec<_>>());
    println!("pair {:?}", pair.edges().collect::<Vec<_>>());
    println!("intersection {:?}", both.edges().collect::<Vec<_>>());

    // Two dimensions on A = {a1, a2}, B = {b1}.
    let dims = vec![
        Dimension {
            source: Provenance::RandUnit,
            rep: UnitIntervalRep::new(3, vec![1, 2], vec![4]).unwrap(),
        },
        Dimension {
            source: Provenance::H1Bit(0),
            rep: UnitIntervalRep::new(1, vec![0, 2], vec![1]).unwrap(),
        },
    ];
    let rep = CubeRepresentation::new(2, 1, dims).unwrap();
    let cubes = rep.to_unit_cubes();
    for (name, cube) in ["a1", "a2"]
        .iter()
        .zip(&cubes.a)
        .chain(["b1"].iter().zip(&cubes.b))
    {
        let axes: Vec<String> = cube
            .iter()
            .map(|iv| format!("[{}, {}]", iv.lo, iv.hi))
            .collect();
        println!("{name}: {}", axes.join(" x "));
    }
    assert_eq!(cubes.intersection_graph(), rep.intersection_graph());
    println!(
        "cube intersections {:?}",
        rep.intersection_graph().edges().collect::<Vec<_>>()
    );
}
