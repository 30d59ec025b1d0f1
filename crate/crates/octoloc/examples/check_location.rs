//! m-location verdicts with machine-checkable witnesses.
//!
//! A complex is m-located when every full, homotopically trivial loop of
//! length at most m sits inside some 1-ball. The checker is three-valued:
//! NOT_LOCATED comes with a replayable counterexample (a full loop, a
//! filling script proving it trivial, and the fact that no 1-ball contains
//! it); loops the bounded homotopy search cannot classify are surfaced as
//! UNKNOWN rather than guessed.

use octoloc::generators::{generate, GeneratorSpec};
use octoloc::{contained_in_one_ball, is_m_located, LocationStatus, DEFAULT_HOMOTOPY_BUDGET};

fn main() {
    for spec in [
        GeneratorSpec::Octahedron,
        GeneratorSpec::Wheel(6),
        GeneratorSpec::Cycle(6),
        GeneratorSpec::HyperbolicDisk(2),
        GeneratorSpec::TriangularLatticeDisk(3),
        GeneratorSpec::Icosahedron,
    ] {
        let x = generate(&spec).unwrap();
        let verdict = is_m_located(&x, 8, DEFAULT_HOMOTOPY_BUDGET).unwrap();
        print!("{spec}: {:?}", verdict.status);
        match verdict.status {
            LocationStatus::NotLocated => {
                let witness = verdict.witness.unwrap();
                println!(
                    "\n  witness loop {:?} (length {})",
                    witness.cycle.vertices(),
                    witness.cycle.len()
                );
                println!(
                    "  full: {}; smallest containing 1-ball: {:?}",
                    witness.cycle.is_full(&x),
                    contained_in_one_ball(&x, &witness.cycle)
                );
                // The filling script replays to a point, proving the loop
                // trivial, so the verdict is sound end to end.
                witness.filling.replay(&x, &witness.cycle).unwrap();
                println!(
                    "  filling script with {} moves replays to a point",
                    witness.filling.moves.len()
                );
            }
            _ => println!(" ({} unclassified loops)", verdict.unknowns.len()),
        }
    }
}
