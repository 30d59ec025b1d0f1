//! Full (induced) cycle enumeration: every cycle whose only adjacencies are
//! the consecutive ones, each reported once in canonical form.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{contained_in_one_ball, enumerate_full_cycles, is_wheel};

fn main() {
    // The octahedron has exactly three full cycles: its equatorial squares.
    let octa = generate(&GeneratorSpec::Octahedron).unwrap();
    println!("octahedron, full cycles of length 4..=8:");
    for cycle in enumerate_full_cycles(&octa, 4, 8).unwrap() {
        let ball = contained_in_one_ball(&octa, &cycle);
        println!(
            "  {:?}  in 1-ball of {:?}; wheel over 0: {}",
            cycle.vertices(),
            ball,
            is_wheel(&octa, 0, &cycle)
        );
    }

    // A filled triangle has no full cycles at all: the boundary of a
    // 2-simplex spans the simplex.
    let simplex = octoloc::SimplicialComplex::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
    println!(
        "flag 2-simplex: {} full cycles",
        enumerate_full_cycles(&simplex, 3, 8).unwrap().len()
    );

    // In the flat lattice disk, short full cycles are hexagon rims and the
    // octagons around interior edges; only the rims sit in a 1-ball.
    let disk = generate(&GeneratorSpec::TriangularLatticeDisk(2)).unwrap();
    let cycles = enumerate_full_cycles(&disk, 3, 8).unwrap();
    let escapees = cycles
        .iter()
        .filter(|c| contained_in_one_ball(&disk, c).is_none())
        .count();
    println!(
        "triangular_lattice_disk(2): {} full cycles of length <= 8, {} escape every 1-ball",
        cycles.len(),
        escapees
    );

    // The hyperbolic disk has no full cycle shorter than its vertex links.
    let hdisk = generate(&GeneratorSpec::HyperbolicDisk(2)).unwrap();
    let shortest = enumerate_full_cycles(&hdisk, 3, 8)
        .unwrap()
        .iter()
        .map(|c| c.len())
        .min();
    println!("hyperbolic_disk(2): shortest full cycle has length {shortest:?}");
}
