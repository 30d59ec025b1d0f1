//! Local combinatorial curvature conditions on finite flag simplicial
//! complexes, radius-truncated universal covers, and exact hyperbolicity
//! measurements on 1-skeletons.
//!
//! The library decides the local conditions (m-location for loops up to a
//! length bound, k-largeness and local k-largeness, and the SD' sphere
//! conditions), grows universal covers ball by ball while verifying the
//! construction invariants at every stage, and measures the global
//! consequences: interval-layer thinness and the exact four-point delta.
//!
//! Every capability has a runnable example:
//!
//! ```text
//! cargo run -p octoloc --example inspect_complex     # counts, flagness, metric
//! cargo run -p octoloc --example enumerate_cycles    # full (induced) cycles
//! cargo run -p octoloc --example check_location      # m-location verdicts + witnesses
//! cargo run -p octoloc --example klargeness          # k-large / locally k-large
//! cargo run -p octoloc --example sd_prime            # SD' triangle/vertex conditions
//! cargo run -p octoloc --example build_cover         # staged universal-cover builder
//! cargo run -p octoloc --example interval_thinness   # geodesic interval layers
//! cargo run -p octoloc --example four_point_delta    # exact Gromov delta
//! cargo run -p octoloc --example verify_hyperbolic   # the full pipeline
//! cargo run -p octoloc --example generate_corpus     # generators and fixtures
//! ```
//!
//! A thin `octoloc` binary exposes the same pipeline for batch use over
//! complex files; see the README for the commands and the exit-code
//! contract.

pub mod cli;
pub mod complex;
pub mod conditions;
pub mod cover;
pub mod generators;
pub mod homology;
pub mod hyperbolicity;
pub mod io;
pub mod loops;
pub(crate) mod parallel;
pub mod report;

pub use complex::{ComplexError, Simplex, SimplicialComplex, SubcomplexView};
pub use conditions::{
    check_sd_prime, check_sd_prime_all, is_k_large, is_locally_k_large, is_m_located,
    lemma_neighbor_sweep, ConditionError, KLargeVerdict, LocalKLargeVerdict, LocationStatus,
    LocationVerdict, LocationWitness, SdFailure, SdReport,
};
pub use cover::{
    build_cover, grow, init_cover, pentagon_check, verify_covering, ClassRecord, CoverError,
    CoverState, CoveringReport, CoveringViolation, FrontierClass, FrontierPair,
};
pub use generators::{corpus, generate, CorpusEntry, GeneratorError, GeneratorSpec, Profile};
pub use hyperbolicity::{
    delta_report, four_point_delta, interval_layers, max_interval_diameter, DeltaReport,
    FourPointDelta, HyperbolicityError, IntervalLayer, Thinness, ThinnessWitness,
};
pub use loops::{
    contained_in_one_ball, enumerate_full_cycles, is_wheel, null_homotopy_status, Cycle,
    FillingMove, FillingScript, HomologyWitness, HomotopyOptions, HomotopyVerdict, LoopError,
    DEFAULT_HOMOTOPY_BUDGET,
};
