//! Cycles, full-cycle enumeration, and a certified null-homotopy
//! semi-decision.
//!
//! A cycle is a subcomplex isomorphic to a triangulated circle: at least
//! three distinct vertices, cyclically consecutive ones adjacent. It is
//! *full* when it is an induced subcomplex: no chords, and (for length 3)
//! the triangle itself is not a simplex, so a 3-cycle is never full in a
//! flag complex. Cycles are kept in canonical form: the lexicographically
//! least vertex sequence over all rotations and both orientations.
//!
//! Null-homotopy is undecidable in general, so [`null_homotopy_status`]
//! returns a three-valued verdict with a replayable certificate either way:
//!
//! * `Trivial` carries a filling script of elementary moves (shortcut an edge
//!   across a triangle, delete or insert a backtrack, insert a vertex across
//!   a triangle) that demonstrably contract the loop to a point;
//! * `Nontrivial` carries an integer homology functional (possibly modular,
//!   for torsion classes) vanishing on all triangle boundaries but not on
//!   the loop;
//! * `Unknown` means the bounded search exhausted its move budget.
//!
//! The search runs over closed walks modulo rotation and reflection,
//! best-first by walk length with deterministic FIFO tie-breaking, capped at
//! the starting length plus a slack. Found scripts replay deterministically.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::SimplicialComplex;
use crate::homology;

/// Default move budget for the filling search.
pub const DEFAULT_HOMOTOPY_BUDGET: usize = 10_000;

/// Default cap on walk growth: length may exceed the start by this much.
pub const DEFAULT_LENGTH_SLACK: usize = 4;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopError {
    #[error("a cycle needs at least 3 vertices, got {0}")]
    TooShort(usize),
    #[error("vertex {0} repeats in the cycle")]
    RepeatedVertex(usize),
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("consecutive cycle vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("cycle length range {min}..={max} is invalid (need 3 <= min <= max)")]
    InvalidRange { min: usize, max: usize },
}

/// A cycle in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cycle {
    vertices: Vec<usize>,
}

impl Cycle {
    /// Validates the cyclic sequence against the complex and canonicalizes.
    pub fn new(x: &SimplicialComplex, seq: &[usize]) -> Result<Self, LoopError> {
        if seq.len() < 3 {
            return Err(LoopError::TooShort(seq.len()));
        }
        let mut seen = HashSet::new();
        for &v in seq {
            if v >= x.n_vertices() {
                return Err(LoopError::VertexOutOfRange {
                    vertex: v,
                    n: x.n_vertices(),
                });
            }
            if !seen.insert(v) {
                return Err(LoopError::RepeatedVertex(v));
            }
        }
        for i in 0..seq.len() {
            let a = seq[i];
            let b = seq[(i + 1) % seq.len()];
            if !x.adjacent(a, b) {
                return Err(LoopError::NotAdjacent(a, b));
            }
        }
        Ok(Self {
            vertices: canonical_cyclic(seq),
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// Number of edges (= number of vertices).
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    /// Never true; cycles have at least three vertices.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    /// Whether the cycle is full (induced): the only adjacencies among its
    /// vertices are the cyclically consecutive ones, and a 3-cycle must not
    /// span a simplex.
    pub fn is_full(&self, x: &SimplicialComplex) -> bool {
        let n = self.vertices.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let consecutive = j == i + 1 || (i == 0 && j == n - 1);
                if !consecutive && x.adjacent(self.vertices[i], self.vertices[j]) {
                    return false;
                }
            }
        }
        !(n == 3 && x.is_simplex(&self.vertices))
    }
}

/// Least rotation/reflection of a cyclic sequence.
fn canonical_cyclic(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    if n <= 1 {
        return seq.to_vec();
    }
    let mut best: Option<Vec<usize>> = None;
    let mut reversed: Vec<usize> = seq.to_vec();
    reversed.reverse();
    for dir in [seq, reversed.as_slice()] {
        for start in 0..n {
            let candidate: Vec<usize> = (0..n).map(|i| dir[(start + i) % n]).collect();
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate);
            }
        }
    }
    best.unwrap()
}

/// All full cycles with length in `min_len..=max_len`, each exactly once, in
/// deterministic order (by least vertex, then lexicographic path order).
///
/// The walker grows induced paths: a path may only be extended by a vertex
/// adjacent to its tip and to nothing else on it; a vertex adjacent to the
/// start closes a cycle and is never an interior vertex (it would be a
/// chord). Cycles are produced directly in canonical form by anchoring at
/// their least vertex and forcing the orientation.
pub fn enumerate_full_cycles(
    x: &SimplicialComplex,
    min_len: usize,
    max_len: usize,
) -> Result<Vec<Cycle>, LoopError> {
    if min_len < 3 || min_len > max_len {
        return Err(LoopError::InvalidRange {
            min: min_len,
            max: max_len,
        });
    }
    let mut out = Vec::new();
    let mut path: Vec<usize> = Vec::new();
    let mut on_path = vec![false; x.n_vertices()];
    for start in x.vertices() {
        path.push(start);
        on_path[start] = true;
        extend(
            x,
            start,
            &mut path,
            &mut on_path,
            min_len,
            max_len,
            &mut out,
        );
        on_path[start] = false;
        path.pop();
    }
    Ok(out)
}

fn extend(
    x: &SimplicialComplex,
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    min_len: usize,
    max_len: usize,
    out: &mut Vec<Cycle>,
) {
    let tip = *path.last().unwrap();
    for &next in x.neighbors(tip) {
        if next <= start || on_path[next] {
            continue;
        }
        // Induced condition: among earlier path vertices, `next` may touch
        // only the tip (and possibly the start, which closes).
        if path.len() >= 2 && path[1..path.len() - 1].iter().any(|&p| x.adjacent(p, next)) {
            continue;
        }
        if path.len() >= 2 && x.adjacent(next, start) {
            let len = path.len() + 1;
            // Orientation canon: second vertex smaller than the closing one.
            if len >= min_len.max(3)
                && len <= max_len
                && path[1] < next
                && (len > 3 || !x.is_simplex(&[start, path[1], next]))
            {
                let mut verts = path.clone();
                verts.push(next);
                out.push(Cycle { vertices: verts });
            }
            // `next ~ start` would be a chord on any longer cycle.
            continue;
        }
        if path.len() + 1 >= max_len {
            continue; // closing would exceed max_len
        }
        path.push(next);
        on_path[next] = true;
        extend(x, start, path, on_path, min_len, max_len, out);
        on_path[next] = false;
        path.pop();
    }
}

/// Least vertex `c` with every cycle vertex in `B_1(c)` (equal to `c` or
/// adjacent to it); the center may lie on the loop.
pub fn contained_in_one_ball(x: &SimplicialComplex, cycle: &Cycle) -> Option<usize> {
    x.vertices()
        .find(|&c| cycle.vertices().iter().all(|&v| x.adjacent_or_equal(c, v)))
}

/// Whether `(hub; cycle)` is a wheel: the cycle is full, the hub is off the
/// cycle and adjacent to all of it.
pub fn is_wheel(x: &SimplicialComplex, hub: usize, cycle: &Cycle) -> bool {
    hub < x.n_vertices()
        && !cycle.contains(hub)
        && cycle.vertices().iter().all(|&v| x.adjacent(hub, v))
        && cycle.is_full(x)
}

/// One elementary homotopy move on a closed walk. Indices refer to the
/// canonical form of the walk the move is applied to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "snake_case")]
pub enum FillingMove {
    /// Remove vertex `at`: its neighbors on the walk are adjacent and the
    /// three of them span a triangle.
    Shortcut { at: usize },
    /// Remove the spur at `at`: the walk visits `p, w, p`; drops `w` and one
    /// `p`.
    RemoveBacktrack { at: usize },
    /// Insert `vertex` between positions `after` and `after+1` across a
    /// triangle.
    InsertAcrossTriangle { after: usize, vertex: usize },
    /// Insert the spur `vertex` after position `after`.
    InsertBacktrack { after: usize, vertex: usize },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReplayError {
    #[error("move {index} ({mv:?}) does not apply: {reason}")]
    BadMove {
        index: usize,
        mv: FillingMove,
        reason: String,
    },
    #[error("script ended on a walk of length {0}, not a point")]
    NotContracted(usize),
}

/// A replayable contraction of a loop to a point.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingScript {
    pub moves: Vec<FillingMove>,
}

impl FillingScript {
    /// Applies every move starting from the canonical form of `cycle` and
    /// checks the walk contracts to a single vertex.
    pub fn replay(&self, x: &SimplicialComplex, cycle: &Cycle) -> Result<(), ReplayError> {
        let mut walk = cycle.vertices().to_vec();
        for (index, mv) in self.moves.iter().enumerate() {
            walk = apply_move(x, &walk, mv).map_err(|reason| ReplayError::BadMove {
                index,
                mv: mv.clone(),
                reason,
            })?;
            walk = canonical_cyclic(&walk);
        }
        if walk.len() <= 1 {
            Ok(())
        } else {
            Err(ReplayError::NotContracted(walk.len()))
        }
    }
}

fn apply_move(
    x: &SimplicialComplex,
    walk: &[usize],
    mv: &FillingMove,
) -> Result<Vec<usize>, String> {
    let n = walk.len();
    let at_ok = |i: usize| i < n;
    match *mv {
        FillingMove::Shortcut { at } => {
            if n < 3 || !at_ok(at) {
                return Err(format!("no position {at} on a walk of length {n}"));
            }
            let p = walk[(at + n - 1) % n];
            let q = walk[(at + 1) % n];
            let c = walk[at];
            if p == q {
                return Err("endpoints coincide; that is a backtrack".into());
            }
            if !x.adjacent(p, q) || !x.is_simplex(&[p, c, q]) {
                return Err(format!("{{{p}, {c}, {q}}} is not a triangle"));
            }
            let mut next = walk.to_vec();
            next.remove(at);
            Ok(next)
        }
        FillingMove::RemoveBacktrack { at } => {
            if n < 2 || !at_ok(at) {
                return Err(format!("no position {at} on a walk of length {n}"));
            }
            let p = walk[(at + n - 1) % n];
            let q_idx = (at + 1) % n;
            if walk[q_idx] != p {
                return Err(format!("vertices around position {at} differ"));
            }
            if n == 2 {
                return Ok(vec![p]);
            }
            let mut next = Vec::with_capacity(n - 2);
            for (i, &v) in walk.iter().enumerate() {
                if i != at && i != q_idx {
                    next.push(v);
                }
            }
            Ok(next)
        }
        FillingMove::InsertAcrossTriangle { after, vertex } => {
            if n < 2 || !at_ok(after) {
                return Err(format!("no position {after} on a walk of length {n}"));
            }
            let a = walk[after];
            let b = walk[(after + 1) % n];
            if vertex == a || vertex == b {
                return Err("inserted vertex coincides with an endpoint".into());
            }
            if !x.is_simplex(&[a, vertex, b]) {
                return Err(format!("{{{a}, {vertex}, {b}}} is not a triangle"));
            }
            let mut next = walk.to_vec();
            next.insert(after + 1, vertex);
            Ok(next)
        }
        FillingMove::InsertBacktrack { after, vertex } => {
            if n == 0 || !at_ok(after) {
                return Err(format!("no position {after} on a walk of length {n}"));
            }
            let a = walk[after];
            if !x.adjacent(a, vertex) {
                return Err(format!("{a} and {vertex} are not adjacent"));
            }
            let mut next = walk.to_vec();
            if n == 1 {
                next.push(vertex);
            } else {
                next.insert(after + 1, vertex);
                next.insert(after + 2, a);
            }
            Ok(next)
        }
    }
}

/// Certificate that a loop's integer homology class is nonzero: a functional
/// on 1-chains (modulo `modulus` when nonzero) vanishing on every triangle
/// boundary but pairing to `pairing != 0` with the loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyWitness {
    /// 0 means an integer functional; d > 0 means the functional lives mod d.
    pub modulus: i64,
    /// Sparse coefficients on edges `(u, v)`, u < v.
    pub functional: Vec<((usize, usize), i64)>,
    pub pairing: i64,
}

impl HomologyWitness {
    fn eval(&self, chain: impl Iterator<Item = ((usize, usize), i64)>) -> i64 {
        let mut total: i64 = 0;
        for (edge, coeff) in chain {
            if let Some(&(_, f)) = self.functional.iter().find(|&&(e, _)| e == edge) {
                total += f * coeff;
            }
        }
        if self.modulus != 0 {
            total = total.rem_euclid(self.modulus);
        }
        total
    }

    /// Replays the certificate: the functional kills every triangle boundary
    /// and pairs nontrivially with the loop.
    pub fn verify(&self, x: &SimplicialComplex, cycle: &Cycle) -> bool {
        for [a, b, c] in x.triangles() {
            // boundary of <a, b, c> = (b,c) - (a,c) + (a,b), a < b < c
            let total = self.eval([((b, c), 1i64), ((a, c), -1i64), ((a, b), 1i64)].into_iter());
            if total != 0 {
                return false;
            }
        }
        let verts = cycle.vertices();
        let chain = (0..verts.len()).map(|i| {
            let a = verts[i];
            let b = verts[(i + 1) % verts.len()];
            if a < b {
                ((a, b), 1i64)
            } else {
                ((b, a), -1i64)
            }
        });
        let pairing = self.eval(chain);
        pairing == self.pairing && pairing != 0
    }
}

/// Outcome of the null-homotopy semi-decision.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyVerdict {
    Trivial(FillingScript),
    Nontrivial(HomologyWitness),
    Unknown { moves_spent: usize },
}

impl HomotopyVerdict {
    pub fn is_trivial(&self) -> bool {
        matches!(self, Self::Trivial(_))
    }
    pub fn is_nontrivial(&self) -> bool {
        matches!(self, Self::Nontrivial(_))
    }
    pub fn is_unknown(&self) -> bool {
        matches!(self, Self::Unknown { .. })
    }
}

/// Knobs for the filling search.
#[derive(Debug, Clone, Copy)]
pub struct HomotopyOptions {
    /// Maximum number of applied moves before giving up.
    pub budget: usize,
    /// Walks may grow to `start_length + length_slack`.
    pub length_slack: usize,
}

impl Default for HomotopyOptions {
    fn default() -> Self {
        Self {
            budget: DEFAULT_HOMOTOPY_BUDGET,
            length_slack: DEFAULT_LENGTH_SLACK,
        }
    }
}

/// Decides null-homotopy of `cycle` as far as the budget allows.
///
/// The homology class is tested first (exact, budget-independent); a nonzero
/// class is `Nontrivial` with a functional certificate. Otherwise a bounded
/// best-first search over elementary moves looks for a contraction; success
/// is `Trivial` with the move script, exhaustion is `Unknown`. The verdict
/// is deterministic, and `Trivial` is monotone in the budget.
pub fn null_homotopy_status(
    x: &SimplicialComplex,
    cycle: &Cycle,
    budget: usize,
) -> HomotopyVerdict {
    null_homotopy_status_with(
        x,
        cycle,
        HomotopyOptions {
            budget,
            ..HomotopyOptions::default()
        },
    )
}

pub fn null_homotopy_status_with(
    x: &SimplicialComplex,
    cycle: &Cycle,
    options: HomotopyOptions,
) -> HomotopyVerdict {
    match homology::loop_class_witness(x, cycle) {
        Ok(Some(witness)) => return HomotopyVerdict::Nontrivial(witness),
        Ok(None) => {}
        Err(homology::Overflow) => {} // cannot certify; fall through to search
    }
    filling_search(x, cycle, options)
}

struct SearchNode {
    walk: Vec<usize>,
    parent: usize,
    mv: Option<FillingMove>,
}

fn filling_search(
    x: &SimplicialComplex,
    cycle: &Cycle,
    options: HomotopyOptions,
) -> HomotopyVerdict {
    let max_len = cycle.len() + options.length_slack;
    let mut arena: Vec<SearchNode> = vec![SearchNode {
        walk: cycle.vertices().to_vec(),
        parent: usize::MAX,
        mv: None,
    }];
    let mut seen: HashSet<Vec<usize>> = HashSet::from([arena[0].walk.clone()]);
    // Best-first by walk length; FIFO among equal lengths via the push
    // counter. Shorter walks are always preferred, so the search descends
    // whenever a reduction exists and otherwise fans out breadth-first.
    let mut queue: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();
    queue.push(Reverse((cycle.len(), 0)));
    let mut moves_spent = 0usize;

    while let Some(Reverse((_, idx))) = queue.pop() {
        let walk = arena[idx].walk.clone();
        for (mv, next) in successors(x, &walk, max_len) {
            moves_spent += 1;
            let canon = canonical_cyclic(&next);
            let fresh = seen.insert(canon.clone());
            if fresh {
                arena.push(SearchNode {
                    walk: canon.clone(),
                    parent: idx,
                    mv: Some(mv),
                });
                if canon.len() <= 1 {
                    return HomotopyVerdict::Trivial(reconstruct(&arena));
                }
                queue.push(Reverse((canon.len(), arena.len() - 1)));
            }
            if moves_spent >= options.budget {
                return HomotopyVerdict::Unknown { moves_spent };
            }
        }
    }
    // Move graph exhausted under the length cap without reaching a point.
    HomotopyVerdict::Unknown { moves_spent }
}

/// Legal moves from a canonical walk, in a fixed order: shortcuts, backtrack
/// removals, triangle insertions, backtrack insertions.
fn successors(
    x: &SimplicialComplex,
    walk: &[usize],
    max_len: usize,
) -> Vec<(FillingMove, Vec<usize>)> {
    let n = walk.len();
    let mut out = Vec::new();
    let mut push = |mv: FillingMove| {
        if let Ok(next) = apply_move(x, walk, &mv) {
            out.push((mv, next));
        }
    };
    if n >= 3 {
        for at in 0..n {
            push(FillingMove::Shortcut { at });
        }
    }
    if n >= 2 {
        for at in 0..n {
            push(FillingMove::RemoveBacktrack { at });
        }
    }
    if n >= 2 && n < max_len {
        for after in 0..n {
            let a = walk[after];
            let b = walk[(after + 1) % n];
            for &v in x.neighbors(a) {
                if v != b && x.adjacent(v, b) {
                    push(FillingMove::InsertAcrossTriangle { after, vertex: v });
                }
            }
        }
    }
    if n >= 1 && n + 2 <= max_len {
        for (after, &a) in walk.iter().enumerate() {
            for &v in x.neighbors(a) {
                push(FillingMove::InsertBacktrack { after, vertex: v });
            }
        }
    }
    out
}

fn reconstruct(arena: &[SearchNode]) -> FillingScript {
    let mut moves = Vec::new();
    let mut idx = arena.len() - 1;
    while let Some(mv) = &arena[idx].mv {
        moves.push(mv.clone());
        idx = arena[idx].parent;
    }
    moves.reverse();
    FillingScript { moves }
}
