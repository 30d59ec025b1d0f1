//! The full pipeline: decide 8-location, grow the universal cover, then
//! measure interval thinness and delta on the result.
//!
//! A complex passing the local condition gets a cover whose every stage is
//! certified; the measurements on the cover then reproduce the global
//! negative-curvature signature (interval layers of diameter at most 2).

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{build_cover, delta_report, is_m_located, LocationStatus, DEFAULT_HOMOTOPY_BUDGET};

fn pipeline(spec: &GeneratorSpec, radius: usize) {
    let x = generate(spec).unwrap();
    println!("{spec}:");
    let verdict = is_m_located(&x, 8, DEFAULT_HOMOTOPY_BUDGET).unwrap();
    println!("  8-location: {:?}", verdict.status);
    if verdict.status != LocationStatus::Located {
        if let Some(w) = verdict.witness {
            println!(
                "  witness: full trivial loop {:?} in no 1-ball",
                w.cycle.vertices()
            );
        }
        return;
    }
    let state = match build_cover(&x, 0, radius) {
        Ok(state) => state,
        Err(e) => {
            println!("  cover halted: {e}");
            return;
        }
    };
    println!(
        "  cover at radius {radius}: {} vertices, {} edges",
        state.ball().n_vertices(),
        state.ball().n_edges()
    );
    let measures = delta_report(state.ball(), 4).unwrap();
    println!(
        "  max interval diameter: {} (thin: {})",
        measures.max_interval_diameter,
        measures.max_interval_diameter <= 2
    );
    println!("  four-point delta: {}", measures.two_delta as f64 / 2.0);
}

fn main() {
    pipeline(&GeneratorSpec::Cycle(6), 5);
    pipeline(&GeneratorSpec::Octahedron, 3);
    pipeline(&GeneratorSpec::HyperbolicDisk(3), 3);
    pipeline(&GeneratorSpec::TriangularLatticeDisk(3), 3);
}
