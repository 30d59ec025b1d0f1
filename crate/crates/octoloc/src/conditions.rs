//! Local curvature condition checkers: m-location, k-largeness, and the SD'
//! sphere conditions, with minimal machine-checkable witnesses.
//!
//! All checkers insist the input is flag: the conditions presuppose it, and
//! declared non-flag complexes are only ever inspected by
//! [`SimplicialComplex::is_flag`].
//!
//! * A complex is *m-located* when every full, homotopically trivial loop of
//!   length at most m lies in some 1-ball. Since null-homotopy is only
//!   semi-decided, the verdict is three-valued: a full trivial loop escaping
//!   every 1-ball refutes location (with a replayable witness); loops whose
//!   status stays UNKNOWN are surfaced instead of guessed, so LOCATED is a
//!   proof rather than a heuristic.
//! * A complex is *k-large* when it has no full cycles of length < k, and
//!   *locally k-large* when every vertex link is k-large.
//! * `SD'_n(O)` requires, for each i in 1..=n: (T) every edge of S_{i+1}(O)
//!   has a link vertex in B_i(O); (V) every two vertices u, w of
//!   `link(v) ∩ B_i(O)`, for v in S_{i+1}(O), admit a common neighbor t in
//!   that same set (t = u qualifies when u ~ w, so adjacent pairs pass).
//!   All failures are reported, sorted, not just the first.

use serde::Serialize;
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::loops::{
    contained_in_one_ball, enumerate_full_cycles, null_homotopy_status, Cycle, FillingScript,
    HomotopyVerdict,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConditionError {
    #[error("the checker requires a flag complex")]
    NotFlag,
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("length bound m must be at least 3, got {0}")]
    BadBound(usize),
}

fn require_flag(x: &SimplicialComplex) -> Result<(), ConditionError> {
    if x.is_flag() {
        Ok(())
    } else {
        Err(ConditionError::NotFlag)
    }
}

fn require_vertex(x: &SimplicialComplex, v: usize) -> Result<(), ConditionError> {
    if v < x.n_vertices() {
        Ok(())
    } else {
        Err(ConditionError::VertexOutOfRange {
            vertex: v,
            n: x.n_vertices(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LocationStatus {
    Located,
    NotLocated,
    Unknown,
}

/// A full, trivially-filling loop escaping every 1-ball.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocationWitness {
    pub cycle: Cycle,
    pub filling: FillingScript,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocationVerdict {
    pub status: LocationStatus,
    /// Present exactly for NOT_LOCATED.
    pub witness: Option<LocationWitness>,
    /// Full loops escaping all 1-balls whose homotopy status stayed UNKNOWN.
    pub unknowns: Vec<Cycle>,
}

/// Decides m-location with the given homotopy move budget.
///
/// Full cycles of length 3..=m are scanned in (length, canonical form)
/// order; the witness, if any, is the least one.
pub fn is_m_located(
    x: &SimplicialComplex,
    m: usize,
    budget: usize,
) -> Result<LocationVerdict, ConditionError> {
    require_flag(x)?;
    if m < 3 {
        return Err(ConditionError::BadBound(m));
    }
    let mut cycles = enumerate_full_cycles(x, 3, m).expect("3 <= m");
    cycles.sort_by_key(|c| (c.len(), c.vertices().to_vec()));
    let mut unknowns = Vec::new();
    for cycle in cycles {
        if contained_in_one_ball(x, &cycle).is_some() {
            continue;
        }
        match null_homotopy_status(x, &cycle, budget) {
            HomotopyVerdict::Trivial(filling) => {
                return Ok(LocationVerdict {
                    status: LocationStatus::NotLocated,
                    witness: Some(LocationWitness { cycle, filling }),
                    unknowns: Vec::new(),
                });
            }
            HomotopyVerdict::Nontrivial(_) => {}
            HomotopyVerdict::Unknown { .. } => unknowns.push(cycle),
        }
    }
    if unknowns.is_empty() {
        Ok(LocationVerdict {
            status: LocationStatus::Located,
            witness: None,
            unknowns,
        })
    } else {
        Ok(LocationVerdict {
            status: LocationStatus::Unknown,
            witness: None,
            unknowns,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KLargeVerdict {
    pub is_k_large: bool,
    /// A least full cycle of length < k, when one exists.
    pub witness: Option<Cycle>,
}

/// k-large: no full cycles of length < k.
pub fn is_k_large(x: &SimplicialComplex, k: usize) -> Result<KLargeVerdict, ConditionError> {
    require_flag(x)?;
    if k <= 3 {
        return Ok(KLargeVerdict {
            is_k_large: true,
            witness: None,
        });
    }
    let mut cycles = enumerate_full_cycles(x, 3, k - 1).expect("range checked");
    cycles.sort_by_key(|c| (c.len(), c.vertices().to_vec()));
    Ok(KLargeVerdict {
        is_k_large: cycles.is_empty(),
        witness: cycles.into_iter().next(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalKLargeVerdict {
    pub is_locally_k_large: bool,
    /// Offending link vertex and a short full cycle inside its link, in the
    /// labels of the ambient complex.
    pub witness: Option<(usize, Cycle)>,
}

/// Locally k-large: every vertex link is k-large.
pub fn is_locally_k_large(
    x: &SimplicialComplex,
    k: usize,
) -> Result<LocalKLargeVerdict, ConditionError> {
    require_flag(x)?;
    for v in x.vertices() {
        let (link, map) = x.link_vertex(v).expect("vertex in range").to_complex();
        let verdict = is_k_large(&link, k).expect("links of flag complexes are flag");
        if let Some(cycle) = verdict.witness {
            let in_parent: Vec<usize> = cycle.vertices().iter().map(|&u| map[u]).collect();
            let cycle = Cycle::new(x, &in_parent).expect("link cycles embed");
            return Ok(LocalKLargeVerdict {
                is_locally_k_large: false,
                witness: Some((v, cycle)),
            });
        }
    }
    Ok(LocalKLargeVerdict {
        is_locally_k_large: true,
        witness: None,
    })
}

/// One SD' failure. `i` is the radius being tested (conditions live on
/// S_{i+1} against B_i).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum SdFailure {
    /// Edge `(u, v)` of S_{i+1}(O) whose link misses B_i(O).
    #[serde(rename = "T")]
    Triangle { i: usize, u: usize, v: usize },
    /// Vertex `v` of S_{i+1}(O) with `u, w` in link(v) ∩ B_i(O) admitting no
    /// common neighbor there.
    #[serde(rename = "V")]
    Vertex {
        i: usize,
        v: usize,
        u: usize,
        w: usize,
    },
}

impl SdFailure {
    pub fn radius(&self) -> usize {
        match self {
            SdFailure::Triangle { i, .. } | SdFailure::Vertex { i, .. } => *i,
        }
    }

    /// Sort key: radius first, then kind (T before V), then the witness.
    fn sort_key(&self) -> (usize, u8, [usize; 3]) {
        match *self {
            SdFailure::Triangle { i, u, v } => (i, 0, [u, v, 0]),
            SdFailure::Vertex { i, v, u, w } => (i, 1, [v, u, w]),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SdReport {
    pub base: usize,
    pub radius_checked: usize,
    pub ok: bool,
    /// All failures, sorted by (radius, kind, witness).
    pub failures: Vec<SdFailure>,
}

/// Checks SD'_n(O): conditions (T) and (V) for every i in 1..=n.
pub fn check_sd_prime(
    x: &SimplicialComplex,
    base: usize,
    n: usize,
) -> Result<SdReport, ConditionError> {
    require_flag(x)?;
    require_vertex(x, base)?;
    let dist = x.bfs_distances(base);
    let mut failures = Vec::new();
    for i in 1..=n {
        let sphere: Vec<usize> = x.vertices().filter(|&v| dist[v] == Some(i + 1)).collect();
        // (T): every edge of the sphere sees the ball through its link.
        for (a_idx, &a) in sphere.iter().enumerate() {
            for &b in &sphere[a_idx + 1..] {
                if !x.adjacent(a, b) {
                    continue;
                }
                let seen = x
                    .neighbors(a)
                    .iter()
                    .any(|&t| x.adjacent(t, b) && matches!(dist[t], Some(d) if d <= i));
                if !seen {
                    failures.push(SdFailure::Triangle { i, u: a, v: b });
                }
            }
        }
        // (V): ball-neighbors of a sphere vertex pairwise admit a common
        // ball-neighbor in its link. For u ~ w, t = u qualifies.
        for &v in &sphere {
            let in_ball: Vec<usize> = x
                .neighbors(v)
                .iter()
                .copied()
                .filter(|&t| matches!(dist[t], Some(d) if d <= i))
                .collect();
            for (u_idx, &u) in in_ball.iter().enumerate() {
                for &w in &in_ball[u_idx + 1..] {
                    if x.adjacent(u, w) {
                        continue;
                    }
                    let witness = in_ball
                        .iter()
                        .any(|&t| x.adjacent(t, u) && x.adjacent(t, w));
                    if !witness {
                        failures.push(SdFailure::Vertex { i, v, u, w });
                    }
                }
            }
        }
    }
    failures.sort_by_key(SdFailure::sort_key);
    Ok(SdReport {
        base,
        radius_checked: n,
        ok: failures.is_empty(),
        failures,
    })
}

/// SD' from every base vertex; `n` defaults to the base's eccentricity
/// (larger radii are vacuously identical). Reports are indexed by base.
pub fn check_sd_prime_all(
    x: &SimplicialComplex,
    n: Option<usize>,
) -> Result<Vec<SdReport>, ConditionError> {
    require_flag(x)?;
    x.vertices()
        .map(|base| check_sd_prime(x, base, n.unwrap_or_else(|| x.eccentricity(base))))
        .collect()
}

/// Exhaustive sweep of a local consequence of 8-location plus SD': for every
/// base O and radius n, every `v` in S_{n+1}(O) with ball-neighbors `y, z`
/// at distance 2, every (V)-style vertex `w` in the ball adjacent to `y, v,
/// z`, and every pair of (T)-style vertices `u1` (adjacent to y and w, not
/// to z) and `u2` (adjacent to w and z, not to y) in B_{n-1}(O), the pair
/// satisfies `d(u1, u2) <= 1`, possibly with `u1 = u2`.
///
/// Returns the checked configurations; panics on the first violation. Only
/// meaningful on complexes that are 8-located and satisfy SD' everywhere.
pub fn lemma_neighbor_sweep(x: &SimplicialComplex) -> usize {
    let mut checked = 0;
    for base in x.vertices() {
        let dist = x.bfs_distances(base);
        let ecc = x.eccentricity(base);
        for n in 1..ecc.max(1) {
            let sphere: Vec<usize> = x.vertices().filter(|&v| dist[v] == Some(n + 1)).collect();
            for &v in &sphere {
                let in_ball: Vec<usize> = x
                    .neighbors(v)
                    .iter()
                    .copied()
                    .filter(|&t| matches!(dist[t], Some(d) if d <= n))
                    .collect();
                for &y in &in_ball {
                    for &z in &in_ball {
                        if y == z || x.distance(y, z) != Some(2) {
                            continue;
                        }
                        for &w in &in_ball {
                            if !(x.adjacent(w, y) && x.adjacent(w, z)) {
                                continue;
                            }
                            let deep = |t: usize| matches!(dist[t], Some(d) if d < n);
                            let u1s: Vec<usize> = x
                                .neighbors(y)
                                .iter()
                                .copied()
                                .filter(|&t| deep(t) && x.adjacent(t, w) && !x.adjacent(t, z))
                                .collect();
                            let u2s: Vec<usize> = x
                                .neighbors(z)
                                .iter()
                                .copied()
                                .filter(|&t| deep(t) && x.adjacent(t, w) && !x.adjacent(t, y))
                                .collect();
                            for &u1 in &u1s {
                                for &u2 in &u2s {
                                    checked += 1;
                                    assert!(
                                        matches!(x.distance(u1, u2), Some(d) if d <= 1),
                                        "sweep violation: u1={u1} u2={u2} at v={v} \
                                         y={y} z={z} w={w} base={base} n={n}"
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    checked
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::generate;
    use crate::loops::DEFAULT_HOMOTOPY_BUDGET;

    fn gen(s: &str) -> SimplicialComplex {
        generate(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn checkers_reject_non_flag_input() {
        let hollow = SimplicialComplex::with_declared_simplices(
            3,
            &[(0, 1), (1, 2), (0, 2)],
            vec![vec![0, 1], vec![1, 2], vec![0, 2]],
        )
        .unwrap();
        assert_eq!(
            is_m_located(&hollow, 8, 10).unwrap_err(),
            ConditionError::NotFlag
        );
        assert_eq!(is_k_large(&hollow, 5).unwrap_err(), ConditionError::NotFlag);
        assert_eq!(
            check_sd_prime(&hollow, 0, 1).unwrap_err(),
            ConditionError::NotFlag
        );
    }

    #[test]
    fn octahedron_and_wheel_are_located() {
        for name in ["octahedron", "wheel(6)"] {
            let x = gen(name);
            let verdict = is_m_located(&x, 8, DEFAULT_HOMOTOPY_BUDGET).unwrap();
            assert_eq!(verdict.status, LocationStatus::Located, "{name}");
            assert!(verdict.unknowns.is_empty());
        }
    }

    #[test]
    fn lattice_disk_is_not_located_with_replayable_witness() {
        let x = gen("triangular_lattice_disk(2)");
        let verdict = is_m_located(&x, 8, DEFAULT_HOMOTOPY_BUDGET).unwrap();
        assert_eq!(verdict.status, LocationStatus::NotLocated);
        let witness = verdict.witness.unwrap();
        assert!(witness.cycle.is_full(&x));
        assert_eq!(contained_in_one_ball(&x, &witness.cycle), None);
        witness.filling.replay(&x, &witness.cycle).unwrap();
    }

    #[test]
    fn location_is_monotone_in_m() {
        for name in [
            "octahedron",
            "wheel(5)",
            "cycle(6)",
            "cycle(8)",
            "triangular_lattice_disk(2)",
        ] {
            let x = gen(name);
            let mut located_above = true;
            for m in (4..=8).rev() {
                let v = is_m_located(&x, m, DEFAULT_HOMOTOPY_BUDGET).unwrap();
                if v.status != LocationStatus::Located {
                    located_above = false;
                }
                if located_above {
                    assert_eq!(
                        v.status,
                        LocationStatus::Located,
                        "{name} located at larger m but not at {m}"
                    );
                }
            }
        }
    }

    #[test]
    fn klargeness_verdicts() {
        let octa = gen("octahedron");
        let v = is_k_large(&octa, 5).unwrap();
        assert!(!v.is_k_large);
        let witness = v.witness.unwrap();
        assert_eq!(witness.len(), 4);
        assert!(witness.is_full(&octa));
        assert!(is_k_large(&octa, 4).unwrap().is_k_large);

        let simplex = SimplicialComplex::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        for k in 3..10 {
            assert!(is_k_large(&simplex, k).unwrap().is_k_large);
        }

        // Icosahedron: links are full 5-cycles, so full 5-cycles exist and
        // 6-largeness fails, while no full 3- or 4-cycles exist at all.
        let ico = gen("icosahedron");
        assert!(is_k_large(&ico, 5).unwrap().is_k_large);
        assert!(!is_k_large(&ico, 6).unwrap().is_k_large);
        let local = is_locally_k_large(&ico, 5).unwrap();
        assert!(local.is_locally_k_large);
        let local6 = is_locally_k_large(&ico, 6).unwrap();
        assert!(!local6.is_locally_k_large);
        let (v, cycle) = local6.witness.unwrap();
        assert_eq!(cycle.len(), 5);
        assert!(cycle.vertices().iter().all(|&u| ico.adjacent(u, v)));
    }

    #[test]
    fn sd_on_cones_is_vacuous() {
        for base in ["octahedron", "cycle(6)", "join(path(2),discrete(2))"] {
            let cone = gen(&format!("cone_over({base})"));
            for n in 1..=5 {
                assert!(check_sd_prime(&cone, 0, n).unwrap().ok, "cone over {base}");
            }
            assert!(check_sd_prime_all(&cone, None)
                .unwrap()
                .iter()
                .all(|r| r.ok));
        }
    }

    #[test]
    fn sd_on_the_octahedron_holds() {
        let x = gen("octahedron");
        for r in check_sd_prime_all(&x, None).unwrap() {
            assert!(r.ok, "base {}", r.base);
        }
        assert!(check_sd_prime(&x, 0, 1).unwrap().ok);
    }

    #[test]
    fn sd_failures_on_cycles() {
        // Hexagon: radius 1 is vacuous; the failure sits at i = 2, at the
        // antipode v with u, w its two ball-neighbors.
        let hexagon = gen("cycle(6)");
        assert!(check_sd_prime(&hexagon, 0, 1).unwrap().ok);
        let report = check_sd_prime(&hexagon, 0, 2).unwrap();
        assert_eq!(
            report.failures,
            vec![SdFailure::Vertex {
                i: 2,
                v: 3,
                u: 2,
                w: 4
            }]
        );
        // Square: the antipode is already in S_2, failure at i = 1.
        let square = gen("cycle(4)");
        let report = check_sd_prime(&square, 0, 1).unwrap();
        assert_eq!(
            report.failures,
            vec![SdFailure::Vertex {
                i: 1,
                v: 2,
                u: 1,
                w: 3
            }]
        );
        // Pentagon: an edge of S_2 has an empty link, failing (T) at i = 1.
        let pentagon = gen("cycle(5)");
        let report = check_sd_prime(&pentagon, 0, 1).unwrap();
        assert_eq!(
            report.failures,
            vec![SdFailure::Triangle { i: 1, u: 2, v: 3 }]
        );
    }

    #[test]
    fn sd_stabilizes_beyond_the_eccentricity() {
        let x = gen("wheel(5)");
        for base in x.vertices() {
            let ecc = x.eccentricity(base);
            let at_ecc = check_sd_prime(&x, base, ecc).unwrap();
            let beyond = check_sd_prime(&x, base, ecc + 3).unwrap();
            assert_eq!(at_ecc.failures, beyond.failures);
            assert_eq!(at_ecc.ok, beyond.ok);
        }
    }

    #[test]
    fn sd_vacuity_when_the_next_sphere_is_empty() {
        // Whenever S_{n+1}(O) is empty the conditions are vacuous, so cones
        // pass at every radius.
        let cone = gen("cone_over(octahedron)");
        let ecc = cone.eccentricity(0);
        assert_eq!(ecc, 1);
        assert!(check_sd_prime(&cone, 0, ecc + 5).unwrap().ok);
    }

    #[test]
    fn neighbor_sweep_on_verified_instances() {
        for name in [
            "octahedron",
            "wheel(6)",
            "wheel(8)",
            "cone_over(octahedron)",
        ] {
            let x = gen(name);
            assert_eq!(
                is_m_located(&x, 8, DEFAULT_HOMOTOPY_BUDGET).unwrap().status,
                LocationStatus::Located
            );
            assert!(check_sd_prime_all(&x, None).unwrap().iter().all(|r| r.ok));
            crate::conditions::lemma_neighbor_sweep(&x);
        }
    }

    #[test]
    fn sd_failures_serialize() {
        let f = SdFailure::Vertex {
            i: 2,
            v: 3,
            u: 2,
            w: 4,
        };
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["kind"], "V");
        assert_eq!(json["i"], 2);
    }
}
