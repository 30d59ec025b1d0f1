//! The SD' sphere conditions: for each radius i, every edge of the
//! (i+1)-sphere must see the i-ball through its link (T), and the
//! ball-neighbors of every (i+1)-sphere vertex must pairwise admit a common
//! ball-neighbor in its link (V).

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{check_sd_prime, check_sd_prime_all};

fn main() {
    // Cones satisfy SD' vacuously: beyond radius 1 the spheres are empty.
    let cone = generate(&GeneratorSpec::ConeOver(Box::new(
        GeneratorSpec::Octahedron,
    )))
    .unwrap();
    for n in [1, 3, 6] {
        println!(
            "cone over the octahedron, n = {n}: ok = {}",
            check_sd_prime(&cone, 0, n).unwrap().ok
        );
    }

    // The hexagon fails at radius 2: the antipode's two ball-neighbors have
    // no common neighbor in its link.
    let hexagon = generate(&GeneratorSpec::Cycle(6)).unwrap();
    println!("\nhexagon from base 0:");
    println!(
        "  n = 1: ok = {}",
        check_sd_prime(&hexagon, 0, 1).unwrap().ok
    );
    let report = check_sd_prime(&hexagon, 0, 2).unwrap();
    println!(
        "  n = 2: ok = {}, failures = {:?}",
        report.ok, report.failures
    );

    // Odd cycles fail the triangle condition instead: a sphere edge with an
    // empty link.
    let pentagon = generate(&GeneratorSpec::Cycle(5)).unwrap();
    let report = check_sd_prime(&pentagon, 0, 1).unwrap();
    println!("pentagon from base 0: failures = {:?}", report.failures);

    // Verified instances pass from every base vertex at every radius.
    for spec in [GeneratorSpec::Octahedron, GeneratorSpec::HyperbolicDisk(3)] {
        let x = generate(&spec).unwrap();
        let all_ok = check_sd_prime_all(&x, None).unwrap().iter().all(|r| r.ok);
        println!("{spec}: SD' from every base = {all_ok}");
    }
}
