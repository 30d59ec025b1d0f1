//! Geodesic interval layers and their diameters. Thin intervals (layer
//! diameter uniformly <= 2) are the geometric signature the verified
//! instances reproduce.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{interval_layers, max_interval_diameter};

fn main() {
    // On a path, every layer is a singleton.
    let path = generate(&GeneratorSpec::PathGraph(6)).unwrap();
    let layers = interval_layers(&path, 0, 5).unwrap();
    println!(
        "path(6), interval 0 -> 5: layer sizes {:?}",
        layers.iter().map(|l| l.vertices.len()).collect::<Vec<_>>()
    );

    // Hexagon antipodes: both middle layers split in two, at distance 2.
    let hexagon = generate(&GeneratorSpec::Cycle(6)).unwrap();
    println!("cycle(6), interval 0 -> 3:");
    for layer in interval_layers(&hexagon, 0, 3).unwrap() {
        println!(
            "  I_{} = {:?}, diameter {}",
            layer.k, layer.vertices, layer.diameter
        );
    }

    // Octahedron antipodes: the middle layer is the whole equator.
    let octa = generate(&GeneratorSpec::Octahedron).unwrap();
    let layers = interval_layers(&octa, 0, 1).unwrap();
    println!(
        "octahedron, interval 0 -> 1: I_1 = {:?}, diameter {}",
        layers[1].vertices, layers[1].diameter
    );

    // The worst layer over all endpoint pairs, with its witness.
    for spec in [
        GeneratorSpec::Octahedron,
        GeneratorSpec::Cycle(8),
        GeneratorSpec::HyperbolicDisk(3),
        GeneratorSpec::TriangularLatticeDisk(3),
    ] {
        let x = generate(&spec).unwrap();
        let thin = max_interval_diameter(&x, 4).unwrap();
        println!(
            "{spec}: max interval diameter {} (endpoints {:?}, layer {}, pair {:?})",
            thin.max_interval_diameter,
            thin.witness.endpoints,
            thin.witness.layer,
            thin.witness.pair
        );
    }
}
