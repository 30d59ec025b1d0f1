//! The exact four-point delta: the maximal gap between the two largest
//! pairings over all vertex quadruples, halved. Trees give exactly 0.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{four_point_delta, SimplicialComplex};

fn main() {
    let star = SimplicialComplex::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
    let delta = four_point_delta(&star, 1).unwrap();
    println!("star graph: delta = {}", delta.delta());

    for spec in [
        GeneratorSpec::Cycle(4),
        GeneratorSpec::Cycle(5),
        GeneratorSpec::Cycle(6),
        GeneratorSpec::Cycle(8),
        GeneratorSpec::Octahedron,
        GeneratorSpec::Icosahedron,
        GeneratorSpec::HyperbolicDisk(3),
        GeneratorSpec::TriangularLatticeDisk(3),
    ] {
        let x = generate(&spec).unwrap();
        let delta = four_point_delta(&x, 4).unwrap();
        println!(
            "{spec}: delta = {} (witness quadruple {:?})",
            delta.delta(),
            delta.witness
        );
    }

    // Disconnected input is an error, not a number.
    let two = SimplicialComplex::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
    println!(
        "two components: {:?}",
        four_point_delta(&two, 1).unwrap_err()
    );
}
