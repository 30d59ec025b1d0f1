//! The staged universal-cover builder: frontier pairs, gluing classes, and
//! the per-stage invariant checks.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{build_cover, grow, init_cover, verify_covering};

fn main() {
    // Unwinding the hexagon: the cover of a circle is a line, truncated
    // here to radius 5: an 11-vertex path whose map wraps with period 6.
    let hexagon = generate(&GeneratorSpec::Cycle(6)).unwrap();
    let mut state = init_cover(&hexagon, 0).unwrap();
    println!("hexagon cover, stage by stage:");
    loop {
        println!(
            "  stage {}: {} vertices, frontier {:?}",
            state.stage(),
            state.ball().n_vertices(),
            state
                .frontier(&hexagon)
                .iter()
                .map(|p| (p.sphere_vertex, p.uncovered))
                .collect::<Vec<_>>()
        );
        if state.stage() == 5 {
            break;
        }
        // grow() verifies the layer, SD', and local-isomorphism invariants
        // on every stage and halts with a diagnostic if one fails.
        state = grow(state, &hexagon).unwrap();
    }
    println!("  covering map: {:?}", state.map());
    let report = verify_covering(&state, &hexagon);
    println!(
        "  covering check: ok = {}, interior vertices = {}",
        report.ok, report.interior_vertices
    );

    // A simply connected complex is its own cover: growth stabilizes as
    // soon as the frontier empties.
    let octa = generate(&GeneratorSpec::Octahedron).unwrap();
    let state = init_cover(&octa, 0).unwrap();
    println!(
        "\noctahedron: stage 1 has {} vertices",
        state.ball().n_vertices()
    );
    for class in state.frontier_classes(&octa) {
        println!(
            "  frontier class -> image {} glued from sphere vertices {:?}",
            class.uncovered, class.members
        );
    }
    let full = build_cover(&octa, 0, 4).unwrap();
    println!(
        "  radius-4 cover: {} vertices (the octahedron itself)",
        full.ball().n_vertices()
    );

    // The hyperbolic disk, deep and verified at every stage.
    let disk = generate(&GeneratorSpec::HyperbolicDisk(3)).unwrap();
    let state = build_cover(&disk, 0, 3).unwrap();
    println!(
        "\nhyperbolic_disk(3) cover at radius 3: {} vertices, {} class records",
        state.ball().n_vertices(),
        state.class_records().len()
    );
}
