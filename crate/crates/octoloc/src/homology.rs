//! Integer first homology of the 2-skeleton, small and exact.
//!
//! Used by the loop checker: a loop whose class in H_1(X; Z) is nonzero can
//! never be null-homotopic, and the certificate is a linear functional on
//! 1-chains that kills every triangle boundary but pairs nontrivially with
//! the loop. Torsion classes get the same certificate mod an invariant
//! factor. Everything runs on the connected component of the loop, over
//! checked 128-bit integers; dimensions here are tiny.

use std::collections::BTreeMap;

use crate::complex::SimplicialComplex;
use crate::loops::{Cycle, HomologyWitness};

/// Signals (practically unreachable) integer overflow during elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

type Matrix = Vec<Vec<i128>>;

fn checked_add(a: i128, b: i128) -> Result<i128, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

fn checked_mul(a: i128, b: i128) -> Result<i128, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

/// Smith normal form. Returns the diagonal (invariant factors, each dividing
/// the next) and the unimodular row transform `u` with `u * a * v = d`.
/// Column operations are not tracked.
pub(crate) struct Snf {
    pub diag: Vec<i128>,
    pub u: Matrix,
}

#[allow(clippy::needless_range_loop)] // row ops update two matrices in lockstep
pub(crate) fn smith_normal_form(mut a: Matrix) -> Result<Snf, Overflow> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut u: Matrix = (0..rows)
        .map(|i| (0..rows).map(|j| i128::from(i == j)).collect())
        .collect();

    let mut k = 0;
    while k < rows.min(cols) {
        // Pivot: smallest nonzero magnitude in the trailing block.
        let mut pivot: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if a[i][j] != 0 && pivot.is_none_or(|(pi, pj)| a[i][j].abs() < a[pi][pj].abs()) {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        a.swap(k, pi);
        u.swap(k, pi);
        for row in a.iter_mut() {
            row.swap(k, pj);
        }

        let mut clean = true;
        // Clear the pivot column with recorded row ops.
        for i in k + 1..rows {
            if a[i][k] != 0 {
                let q = a[i][k].div_euclid(a[k][k]);
                if q != 0 {
                    for j in 0..cols {
                        a[i][j] = checked_add(a[i][j], -checked_mul(q, a[k][j])?)?;
                    }
                    for j in 0..rows {
                        u[i][j] = checked_add(u[i][j], -checked_mul(q, u[k][j])?)?;
                    }
                }
                if a[i][k] != 0 {
                    clean = false;
                }
            }
        }
        // Clear the pivot row with untracked column ops.
        for j in k + 1..cols {
            if a[k][j] != 0 {
                let q = a[k][j].div_euclid(a[k][k]);
                if q != 0 {
                    for i in 0..rows {
                        a[i][j] = checked_add(a[i][j], -checked_mul(q, a[i][k])?)?;
                    }
                }
                if a[k][j] != 0 {
                    clean = false;
                }
            }
        }
        if !clean {
            continue; // remainders left; re-pivot on a smaller entry
        }
        // Divisibility: fold in any entry the pivot does not divide.
        let mut fixed = None;
        'scan: for i in k + 1..rows {
            for j in k + 1..cols {
                if a[i][j] % a[k][k] != 0 {
                    fixed = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = fixed {
            for j in 0..cols {
                a[k][j] = checked_add(a[k][j], a[i][j])?;
            }
            for j in 0..rows {
                u[k][j] = checked_add(u[k][j], u[i][j])?;
            }
            continue;
        }
        if a[k][k] < 0 {
            for j in 0..cols {
                a[k][j] = -a[k][j];
            }
            for j in 0..rows {
                u[k][j] = -u[k][j];
            }
        }
        k += 1;
    }

    let diag = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    Ok(Snf { diag, u })
}

/// Chain data for the connected component containing `seed`.
struct ComponentChains {
    /// Sorted component edges, each `(u, v)` with `u < v`.
    edges: Vec<(usize, usize)>,
    edge_index: BTreeMap<(usize, usize), usize>,
    /// Component triangles as ascending triples.
    triangles: Vec<[usize; 3]>,
}

fn component_chains(x: &SimplicialComplex, seed: usize) -> ComponentChains {
    let dist = x.bfs_distances(seed);
    let in_comp = |v: usize| dist[v].is_some();
    let edges: Vec<(usize, usize)> = x.edges().filter(|&(u, _)| in_comp(u)).collect();
    let edge_index = edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let triangles = x
        .triangles()
        .into_iter()
        .filter(|t| in_comp(t[0]))
        .collect();
    ComponentChains {
        edges,
        edge_index,
        triangles,
    }
}

fn boundary_matrix(chains: &ComponentChains) -> Matrix {
    let mut d2 = vec![vec![0i128; chains.triangles.len()]; chains.edges.len()];
    for (col, t) in chains.triangles.iter().enumerate() {
        let [a, b, c] = *t;
        d2[chains.edge_index[&(b, c)]][col] += 1;
        d2[chains.edge_index[&(a, c)]][col] -= 1;
        d2[chains.edge_index[&(a, b)]][col] += 1;
    }
    d2
}

fn cycle_chain(chains: &ComponentChains, cycle: &Cycle) -> Vec<i128> {
    let mut chain = vec![0i128; chains.edges.len()];
    let verts = cycle.vertices();
    for i in 0..verts.len() {
        let a = verts[i];
        let b = verts[(i + 1) % verts.len()];
        if a < b {
            chain[chains.edge_index[&(a, b)]] += 1;
        } else {
            chain[chains.edge_index[&(b, a)]] -= 1;
        }
    }
    chain
}

/// `Some(witness)` when the loop's class in H_1(component; Z) is nonzero,
/// `None` when the loop bounds (is a 2-boundary).
pub(crate) fn loop_class_witness(
    x: &SimplicialComplex,
    cycle: &Cycle,
) -> Result<Option<HomologyWitness>, Overflow> {
    let chains = component_chains(x, cycle.vertices()[0]);
    let d2 = boundary_matrix(&chains);
    let snf = smith_normal_form(d2)?;
    let gamma = cycle_chain(&chains, cycle);

    // c = U * gamma in SNF coordinates; gamma is a boundary iff every
    // coordinate reduces to zero against the matching invariant factor.
    let mut offending: Option<(usize, i128, i128)> = None; // (row, modulus, value)
    for (k, row) in snf.u.iter().enumerate() {
        let mut c = 0i128;
        for (j, &g) in gamma.iter().enumerate() {
            c = checked_add(c, checked_mul(row[j], g)?)?;
        }
        let d = snf.diag.get(k).copied().unwrap_or(0);
        let bad = if d == 0 { c != 0 } else { c.rem_euclid(d) != 0 };
        if bad {
            offending = Some((k, d, c));
            break;
        }
    }
    let Some((k, modulus, value)) = offending else {
        return Ok(None);
    };

    let to_i64 = |v: i128| -> Result<i64, Overflow> { i64::try_from(v).map_err(|_| Overflow) };
    let reduce = |v: i128| -> i128 {
        if modulus == 0 {
            v
        } else {
            v.rem_euclid(modulus)
        }
    };
    let mut functional = Vec::new();
    for (j, &edge) in chains.edges.iter().enumerate() {
        let coeff = reduce(snf.u[k][j]);
        if coeff != 0 {
            functional.push((edge, to_i64(coeff)?));
        }
    }
    Ok(Some(HomologyWitness {
        modulus: to_i64(modulus)?,
        functional,
        pairing: to_i64(reduce(value))?,
    }))
}

/// Rank of H_1(X; Q) over the whole complex:
/// `|E| - |V| + #components - rank(d2)`.
pub fn first_betti_number(x: &SimplicialComplex) -> usize {
    let mut components = 0usize;
    let mut seen = vec![false; x.n_vertices()];
    for v in x.vertices() {
        if !seen[v] {
            components += 1;
            for (u, d) in x.bfs_distances(v).into_iter().enumerate() {
                if d.is_some() {
                    seen[u] = true;
                }
            }
        }
    }
    let mut rank_d2 = 0usize;
    let edges: Vec<(usize, usize)> = x.edges().collect();
    let edge_index: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let triangles = x.triangles();
    let mut d2 = vec![vec![0i128; triangles.len()]; edges.len()];
    for (col, t) in triangles.iter().enumerate() {
        let [a, b, c] = *t;
        d2[edge_index[&(b, c)]][col] += 1;
        d2[edge_index[&(a, c)]][col] -= 1;
        d2[edge_index[&(a, b)]][col] += 1;
    }
    if !d2.is_empty() {
        let snf = smith_normal_form(d2).expect("desk-scale boundary matrix");
        rank_d2 = snf.diag.iter().filter(|&&d| d != 0).count();
    }
    edges.len() + components - x.n_vertices() - rank_d2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{generate, GeneratorSpec};

    fn snf_diag(a: Matrix) -> Vec<i128> {
        smith_normal_form(a).unwrap().diag
    }

    #[test]
    fn snf_known_matrix() {
        let a = vec![vec![2, 4, 4], vec![-6, 6, 12], vec![10, 4, 16]];
        assert_eq!(snf_diag(a), vec![2, 2, 156]);
    }

    #[test]
    fn snf_zero_and_identity() {
        assert_eq!(snf_diag(vec![vec![0, 0], vec![0, 0]]), vec![0, 0]);
        assert_eq!(snf_diag(vec![vec![1, 0], vec![0, 1]]), vec![1, 1]);
    }

    #[test]
    fn snf_u_is_recorded_transform() {
        let a: Matrix = vec![vec![6, 4], vec![2, 8]];
        let snf = smith_normal_form(a).unwrap();
        // u must be unimodular: determinant +-1 for the 2x2 case.
        let det = snf.u[0][0] * snf.u[1][1] - snf.u[0][1] * snf.u[1][0];
        assert_eq!(det.abs(), 1);
        assert_eq!(snf.diag, vec![2, 20]);
    }

    #[test]
    fn betti_numbers() {
        let circle = generate(&GeneratorSpec::Cycle(6)).unwrap();
        assert_eq!(first_betti_number(&circle), 1);
        let disk = generate(&GeneratorSpec::TriangularLatticeDisk(2)).unwrap();
        assert_eq!(first_betti_number(&disk), 0);
        let octa = generate(&GeneratorSpec::Octahedron).unwrap();
        assert_eq!(first_betti_number(&octa), 0);
        let two: GeneratorSpec = "join(path(2),discrete(2))".parse().unwrap();
        assert_eq!(first_betti_number(&generate(&two).unwrap()), 0);
    }

    #[test]
    fn circle_class_is_nonzero_and_disk_class_bounds() {
        let circle = generate(&GeneratorSpec::Cycle(6)).unwrap();
        let gamma = Cycle::new(&circle, &[0, 1, 2, 3, 4, 5]).unwrap();
        let w = loop_class_witness(&circle, &gamma).unwrap().unwrap();
        assert!(w.verify(&circle, &gamma));

        let wheel = generate(&GeneratorSpec::Wheel(6)).unwrap();
        let rim = Cycle::new(&wheel, &[1, 2, 3, 4, 5, 6]).unwrap();
        assert!(loop_class_witness(&wheel, &rim).unwrap().is_none());
    }
}
