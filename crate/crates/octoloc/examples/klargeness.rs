//! k-largeness: no full cycles shorter than k, globally or in every link.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{is_k_large, is_locally_k_large};

fn main() {
    for spec in [
        GeneratorSpec::Octahedron,
        GeneratorSpec::Icosahedron,
        GeneratorSpec::HyperbolicDisk(2),
        GeneratorSpec::TriangularLatticeDisk(2),
    ] {
        let x = generate(&spec).unwrap();
        let largest_k = (4..=9)
            .take_while(|&k| is_k_large(&x, k).unwrap().is_k_large)
            .last();
        match largest_k {
            Some(k) => println!("{spec}: {k}-large but not {}-large", k + 1),
            None => println!("{spec}: not even 4-large"),
        }
        if let Some(witness) = is_k_large(&x, 9).unwrap().witness {
            println!("  shortest full cycle: {:?}", witness.vertices());
        }
        let local = is_locally_k_large(&x, 6).unwrap();
        print!("  locally 6-large: {}", local.is_locally_k_large);
        if let Some((v, cycle)) = local.witness {
            print!(
                "  (full {}-cycle {:?} in link of {v})",
                cycle.len(),
                cycle.vertices()
            );
        }
        println!();
    }
}
