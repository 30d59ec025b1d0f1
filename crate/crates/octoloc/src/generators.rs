//! Deterministic generator families and the fixture corpus.
//!
//! Canonical vertex numbering per family:
//!
//! * `point`: the one-vertex complex.
//! * `discrete(n)`: n isolated vertices.
//! * `path(n)`: vertices `0..n`, edges `i - (i+1)`.
//! * `cycle(n)`, n >= 4: vertices `0..n`, edges `i - (i+1 mod n)`.
//!   (`cycle(3)` is rejected: its flag completion is a 2-simplex, not a
//!   circle.)
//! * `wheel(n)`, n >= 4: hub `0`, rim `1..=n` as a cycle, hub adjacent to
//!   every rim vertex.
//! * `octahedron`: 6 vertices, antipodal pairs (0,1), (2,3), (4,5); all
//!   other pairs adjacent.
//! * `icosahedron`: 0 = north pole, 1..=5 upper ring, 6..=10 lower ring,
//!   11 = south pole.
//! * `triangular_lattice_disk(r)`: induced subcomplex of the triangular
//!   lattice on the axial-coordinate ball of radius r, vertices numbered by
//!   (hex distance, q, r) ascending, so the center is vertex 0.
//! * `hyperbolic_disk(r)`: combinatorial ball of radius r in the
//!   triangular tiling with seven triangles around every vertex, grown ring
//!   by ring: the center is 0, each ring is numbered consecutively in cyclic
//!   order, every vertex fans out to `7 - inner_degree - 2` new vertices and
//!   consecutive fans share a corner. Interior vertices end with degree 7;
//!   `hyperbolic_disk(1)` coincides with `wheel(7)` up to numbering.
//! * `cone_over(spec)`: the join of a point with the base; apex 0, base
//!   shifted by 1.
//! * `join(a, b)`: disjoint union (b shifted by |a|) plus all cross edges.
//! * `random_flag(n, p, seed)`: Erdős–Rényi flag complex. The PRNG is
//!   pinned for portability: ChaCha8 keyed with the little-endian seed in
//!   bytes 0..8 of the key (rest zero); one `next_u32` draw per vertex pair
//!   in lexicographic order; the edge is present iff `draw < floor(p * 2^32)`
//!   (p <= 0 never, p >= 1 always; the draw is still consumed).

use std::fmt;
use std::str::FromStr;

use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;

#[derive(Debug, Error, PartialEq)]
pub enum GeneratorError {
    #[error("{0} needs n >= {1}")]
    TooFewVertices(&'static str, usize),
    #[error("lattice disk radius must be >= 1")]
    BadRadius,
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
    #[error("cannot parse generator spec `{0}`")]
    BadSpec(String),
}

/// A deterministic recipe for a complex.
#[derive(Debug, Clone, PartialEq)]
pub enum GeneratorSpec {
    Point,
    Discrete(usize),
    PathGraph(usize),
    Cycle(usize),
    Wheel(usize),
    Octahedron,
    Icosahedron,
    TriangularLatticeDisk(usize),
    HyperbolicDisk(usize),
    ConeOver(Box<GeneratorSpec>),
    Join(Box<GeneratorSpec>, Box<GeneratorSpec>),
    RandomFlag { n: usize, p: f64, seed: u64 },
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Point => write!(f, "point"),
            Self::Discrete(n) => write!(f, "discrete({n})"),
            Self::PathGraph(n) => write!(f, "path({n})"),
            Self::Cycle(n) => write!(f, "cycle({n})"),
            Self::Wheel(n) => write!(f, "wheel({n})"),
            Self::Octahedron => write!(f, "octahedron"),
            Self::Icosahedron => write!(f, "icosahedron"),
            Self::TriangularLatticeDisk(r) => write!(f, "triangular_lattice_disk({r})"),
            Self::HyperbolicDisk(r) => write!(f, "hyperbolic_disk({r})"),
            Self::ConeOver(s) => write!(f, "cone_over({s})"),
            Self::Join(a, b) => write!(f, "join({a},{b})"),
            Self::RandomFlag { n, p, seed } => write!(f, "random_flag({n},{p},{seed})"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || GeneratorError::BadSpec(s.to_string());
        let (name, args) = match s.find('(') {
            None => (s, Vec::new()),
            Some(open) => {
                if !s.ends_with(')') {
                    return Err(bad());
                }
                let inner = &s[open + 1..s.len() - 1];
                (&s[..open], split_top_level(inner).ok_or_else(bad)?)
            }
        };
        let one_usize = |args: &[&str]| -> Result<usize, GeneratorError> {
            if args.len() != 1 {
                return Err(bad());
            }
            args[0].trim().parse().map_err(|_| bad())
        };
        match name.trim() {
            "point" if args.is_empty() => Ok(Self::Point),
            "discrete" => Ok(Self::Discrete(one_usize(&args)?)),
            "path" => Ok(Self::PathGraph(one_usize(&args)?)),
            "cycle" => Ok(Self::Cycle(one_usize(&args)?)),
            "wheel" => Ok(Self::Wheel(one_usize(&args)?)),
            "octahedron" if args.is_empty() => Ok(Self::Octahedron),
            "icosahedron" if args.is_empty() => Ok(Self::Icosahedron),
            "triangular_lattice_disk" => Ok(Self::TriangularLatticeDisk(one_usize(&args)?)),
            "hyperbolic_disk" => Ok(Self::HyperbolicDisk(one_usize(&args)?)),
            "cone_over" if args.len() == 1 => Ok(Self::ConeOver(Box::new(args[0].parse()?))),
            "join" if args.len() == 2 => Ok(Self::Join(
                Box::new(args[0].parse()?),
                Box::new(args[1].parse()?),
            )),
            "random_flag" if args.len() == 3 => {
                let n = args[0].trim().parse().map_err(|_| bad())?;
                let p = args[1].trim().parse().map_err(|_| bad())?;
                let seed = args[2].trim().parse().map_err(|_| bad())?;
                Ok(Self::RandomFlag { n, p, seed })
            }
            _ => Err(bad()),
        }
    }
}

/// Splits on commas at parenthesis depth zero.
fn split_top_level(s: &str) -> Option<Vec<&str>> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, c) in s.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth = depth.checked_sub(1)?,
            ',' if depth == 0 => {
                parts.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return None;
    }
    parts.push(&s[start..]);
    Some(parts)
}

/// Builds the named complex. Deterministic given the spec.
pub fn generate(spec: &GeneratorSpec) -> Result<SimplicialComplex, GeneratorError> {
    let built = match spec {
        GeneratorSpec::Point => SimplicialComplex::from_edges(1, &[]),
        GeneratorSpec::Discrete(n) => SimplicialComplex::from_edges(*n, &[]),
        GeneratorSpec::PathGraph(n) => {
            if *n < 1 {
                return Err(GeneratorError::TooFewVertices("path", 1));
            }
            let edges: Vec<(usize, usize)> = (1..*n).map(|i| (i - 1, i)).collect();
            SimplicialComplex::from_edges(*n, &edges)
        }
        GeneratorSpec::Cycle(n) => {
            if *n < 4 {
                return Err(GeneratorError::TooFewVertices("cycle", 4));
            }
            let edges: Vec<(usize, usize)> = (0..*n).map(|i| (i, (i + 1) % n)).collect();
            SimplicialComplex::from_edges(*n, &edges)
        }
        GeneratorSpec::Wheel(n) => {
            if *n < 4 {
                return Err(GeneratorError::TooFewVertices("wheel", 4));
            }
            let mut edges: Vec<(usize, usize)> = (1..=*n).map(|i| (0, i)).collect();
            for i in 1..=*n {
                edges.push((i, i % n + 1));
            }
            SimplicialComplex::from_edges(n + 1, &edges)
        }
        GeneratorSpec::Octahedron => {
            let mut edges = Vec::new();
            for u in 0..6usize {
                for v in (u + 1)..6 {
                    if !(u / 2 == v / 2) {
                        edges.push((u, v));
                    }
                }
            }
            SimplicialComplex::from_edges(6, &edges)
        }
        GeneratorSpec::Icosahedron => {
            let mut edges: Vec<(usize, usize)> = Vec::new();
            for i in 1..=5usize {
                edges.push((0, i));
                edges.push((11, i + 5));
                edges.push((i, i % 5 + 1)); // upper ring
                edges.push((i + 5, i % 5 + 6)); // lower ring
                edges.push((i, i + 5));
                edges.push((i, i % 5 + 6));
            }
            SimplicialComplex::from_edges(12, &edges)
        }
        GeneratorSpec::TriangularLatticeDisk(r) => return lattice_disk(*r),
        GeneratorSpec::HyperbolicDisk(r) => return hyperbolic_disk(*r),
        GeneratorSpec::ConeOver(base) => {
            return generate(&GeneratorSpec::Join(
                Box::new(GeneratorSpec::Point),
                base.clone(),
            ))
        }
        GeneratorSpec::Join(a, b) => {
            let left = generate(a)?;
            let right = generate(b)?;
            let shift = left.n_vertices();
            let mut edges: Vec<(usize, usize)> = left.edges().collect();
            edges.extend(right.edges().map(|(u, v)| (u + shift, v + shift)));
            for u in 0..shift {
                for v in 0..right.n_vertices() {
                    edges.push((u, v + shift));
                }
            }
            SimplicialComplex::from_edges(shift + right.n_vertices(), &edges)
        }
        GeneratorSpec::RandomFlag { n, p, seed } => {
            if !(0.0..=1.0).contains(p) || p.is_nan() {
                return Err(GeneratorError::BadProbability(*p));
            }
            let mut key = [0u8; 32];
            key[..8].copy_from_slice(&seed.to_le_bytes());
            let mut rng = ChaCha8Rng::from_seed(key);
            let threshold = (*p * 4294967296.0).floor() as u64;
            let mut edges = Vec::new();
            for u in 0..*n {
                for v in (u + 1)..*n {
                    let draw = rng.next_u32() as u64;
                    if draw < threshold {
                        edges.push((u, v));
                    }
                }
            }
            SimplicialComplex::from_edges(*n, &edges)
        }
    };
    // The constructions above only feed valid edges.
    Ok(built.expect("generator produced an invalid edge list"))
}

fn lattice_disk(radius: usize) -> Result<SimplicialComplex, GeneratorError> {
    if radius < 1 {
        return Err(GeneratorError::BadRadius);
    }
    let r = radius as i64;
    let hex_dist = |q: i64, s: i64| (q.abs() + s.abs() + (q + s).abs()) / 2;
    let mut coords: Vec<(i64, i64)> = Vec::new();
    for q in -r..=r {
        for s in -r..=r {
            if hex_dist(q, s) <= r {
                coords.push((q, s));
            }
        }
    }
    coords.sort_by_key(|&(q, s)| (hex_dist(q, s), q, s));
    let index_of = |q: i64, s: i64| coords.iter().position(|&c| c == (q, s));
    let offsets = [(1, 0), (-1, 0), (0, 1), (0, -1), (1, -1), (-1, 1)];
    let mut edges = Vec::new();
    for (i, &(q, s)) in coords.iter().enumerate() {
        for (dq, ds) in offsets {
            if let Some(j) = index_of(q + dq, s + ds) {
                if j > i {
                    edges.push((i, j));
                }
            }
        }
    }
    Ok(SimplicialComplex::from_edges(coords.len(), &edges).unwrap())
}

fn hyperbolic_disk(radius: usize) -> Result<SimplicialComplex, GeneratorError> {
    if radius < 1 {
        return Err(GeneratorError::BadRadius);
    }
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut inner_deg: Vec<usize> = vec![0];
    let mut ring: Vec<usize> = (1..=7).collect();
    let mut next_id = 8;
    for (idx, &v) in ring.iter().enumerate() {
        edges.push((0, v));
        edges.push((v, ring[(idx + 1) % ring.len()]));
        inner_deg.push(1);
    }
    for _ in 2..=radius {
        // Each ring vertex fans out to 7 - inner - 2 new vertices;
        // consecutive fans share their corner vertex.
        let fan_sizes: Vec<usize> = ring.iter().map(|&v| 7 - inner_deg[v] - 2).collect();
        let new_len: usize = fan_sizes.iter().map(|f| f - 1).sum();
        let new_ring: Vec<usize> = (next_id..next_id + new_len).collect();
        next_id += new_len;
        inner_deg.resize(next_id, 0);
        for i in 0..new_len {
            edges.push((new_ring[i], new_ring[(i + 1) % new_len]));
        }
        let mut start = 0usize;
        for (i, &v) in ring.iter().enumerate() {
            for k in 0..fan_sizes[i] {
                let u = new_ring[(start + k) % new_len];
                edges.push((v, u));
                inner_deg[u] += 1;
            }
            start += fan_sizes[i] - 1;
        }
        ring = new_ring;
    }
    Ok(SimplicialComplex::from_edges(next_id, &edges).unwrap())
}

/// Fixture corpus profiles.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Profile {
    Empty,
    Smoke,
    Full,
}

/// Frozen expectations for one corpus instance. Optional fields are
/// `None` when the fixture oracle could not soundly decide them (or, for
/// the metric fields, when the instance is disconnected).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExpectedProperties {
    pub n_vertices: usize,
    pub connected: bool,
    /// Known by construction where set (spheres, cones, disks, trees).
    pub simply_connected: Option<bool>,
    /// "located" / "not_located" where the oracle could decide.
    pub located8: Option<String>,
    /// Length of the shortest full cycle; `None` = there are none.
    pub shortest_full_cycle: Option<usize>,
    pub sd_prime_all_ok: bool,
    /// First SD' failure from base 0 in report order, when one exists.
    pub sd_first_failure: Option<SdFailureFixture>,
    /// Max interval-layer diameter over all endpoint pairs.
    pub max_interval_diameter: Option<usize>,
    /// Twice the four-point delta.
    pub two_delta: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SdFailureFixture {
    pub base: usize,
    pub kind: String,
    pub i: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, Deserialize)]
struct ManifestEntry {
    spec: String,
    profiles: Vec<String>,
    provenance: String,
    expect: ExpectedProperties,
}

#[derive(Debug, Clone, Deserialize)]
struct Manifest {
    schema: u32,
    entries: Vec<ManifestEntry>,
}

/// One corpus instance with frozen expectations.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub spec: GeneratorSpec,
    pub provenance: String,
    pub expect: ExpectedProperties,
}

const CORPUS_MANIFEST: &str = include_str!("../fixtures/corpus.json");

/// The fixed instance list for a profile, from the checked-in manifest.
pub fn corpus(profile: Profile) -> Vec<CorpusEntry> {
    let manifest: Manifest =
        serde_json::from_str(CORPUS_MANIFEST).expect("fixtures/corpus.json is well-formed");
    assert_eq!(manifest.schema, 1, "unexpected corpus manifest schema");
    let wanted = match profile {
        Profile::Empty => return Vec::new(),
        Profile::Smoke => "smoke",
        Profile::Full => "full",
    };
    manifest
        .entries
        .into_iter()
        .filter(|e| e.profiles.iter().any(|p| p == wanted))
        .map(|e| CorpusEntry {
            spec: e.spec.parse().expect("manifest spec parses"),
            provenance: e.provenance,
            expect: e.expect,
        })
        .collect()
}
