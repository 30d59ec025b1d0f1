//! Finite flag simplicial complexes, stored as graphs.
//!
//! A flag complex is determined by its 1-skeleton: every set of pairwise
//! adjacent vertices spans a simplex. We therefore keep a complex as a
//! symmetric, irreflexive adjacency relation on the dense vertex range
//! `0..n`, plus an optional explicit list of maximal simplices for the
//! non-flag case (only [`SimplicialComplex::is_flag`] tolerates those;
//! the condition checkers reject them). Simplices are materialized on
//! demand by clique enumeration, and only up to a requested dimension.
//!
//! Conventions used throughout the crate:
//!
//! * vertices are `usize` ids, `0..n` with no gaps;
//! * `d(u, v)` is the hop metric of the 1-skeleton; unreachable is a value
//!   ([`SimplicialComplex::distance`] returns `None`), never an error;
//! * the span `<A>` of a vertex set is the induced (= full) subcomplex on A;
//! * the link of a simplex s is the induced subcomplex on the vertices
//!   adjacent to all of s and disjoint from it;
//! * balls and spheres `B_i(v)`, `S_i(v)` are induced subcomplexes on the
//!   vertices at distance `<= i` (resp. `= i`);
//! * `u ~ u` is taken to hold (a vertex spans a simplex with itself), which
//!   matters to the condition checkers; plain [`SimplicialComplex::adjacent`]
//!   is irreflexive and [`SimplicialComplex::adjacent_or_equal`] is the
//!   reflexive variant.

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

/// Errors from complex construction and structural queries.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex {vertex} out of range for a complex on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop edge at vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("simplex must have at least one vertex")]
    EmptySimplex,
    #[error("duplicate vertex {vertex} in simplex")]
    DuplicateVertex { vertex: usize },
    #[error("declared simplex {simplex:?} misses edge ({u}, {v})")]
    MissingEdge {
        simplex: Vec<usize>,
        u: usize,
        v: usize,
    },
    #[error("{vertices:?} is not a simplex of the complex")]
    NotASimplex { vertices: Vec<usize> },
}

/// A simplex, held as a strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex {
    vertices: Vec<usize>,
}

impl Simplex {
    /// Builds a simplex from the given vertices, sorting them. Fails on an
    /// empty or repeating vertex list.
    pub fn new(mut vertices: Vec<usize>) -> Result<Self, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptySimplex);
        }
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(ComplexError::DuplicateVertex { vertex: w[0] });
            }
        }
        Ok(Self { vertices })
    }

    pub fn vertex(v: usize) -> Self {
        Self { vertices: vec![v] }
    }

    pub fn edge(u: usize, v: usize) -> Result<Self, ComplexError> {
        Self::new(vec![u, v])
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    /// `|vertices| - 1`.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }
}

/// A finite simplicial complex with a dense vertex range `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex {
    n: usize,
    /// Sorted neighbor lists.
    adj: Vec<Vec<usize>>,
    /// Row-major adjacency matrix, `n * n` entries.
    matrix: Vec<bool>,
    /// Explicit maximal simplices; `None` means flag completion of the graph.
    declared: Option<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// The flag complex on the given graph. Duplicate edges are deduplicated;
    /// out-of-range endpoints and self-loops are errors.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, ComplexError> {
        let mut matrix = vec![false; n * n];
        for &(u, v) in edges {
            if u >= n {
                return Err(ComplexError::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(ComplexError::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(ComplexError::SelfLoop { vertex: u });
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
        }
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| matrix[u * n + v]).collect())
            .collect();
        Ok(Self {
            n,
            adj,
            matrix,
            declared: None,
        })
    }

    /// A complex with explicitly declared maximal simplices. Every pair of
    /// vertices inside a declared simplex must already be an edge. The list
    /// is normalized: sorted, deduplicated, dominated entries dropped.
    pub fn with_declared_simplices(
        n: usize,
        edges: &[(usize, usize)],
        simplices: Vec<Vec<usize>>,
    ) -> Result<Self, ComplexError> {
        let mut base = Self::from_edges(n, edges)?;
        let mut normalized: Vec<Vec<usize>> = Vec::new();
        for s in simplices {
            let s = Simplex::new(s)?.vertices.to_vec();
            for &v in &s {
                if v >= n {
                    return Err(ComplexError::VertexOutOfRange { vertex: v, n });
                }
            }
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    if !base.adjacent(s[i], s[j]) {
                        return Err(ComplexError::MissingEdge {
                            simplex: s.clone(),
                            u: s[i],
                            v: s[j],
                        });
                    }
                }
            }
            normalized.push(s);
        }
        normalized.sort();
        normalized.dedup();
        let dominated: Vec<bool> = normalized
            .iter()
            .map(|s| {
                normalized
                    .iter()
                    .any(|t| t.len() > s.len() && s.iter().all(|v| t.binary_search(v).is_ok()))
            })
            .collect();
        let normalized: Vec<Vec<usize>> = normalized
            .into_iter()
            .zip(dominated)
            .filter_map(|(s, dom)| (!dom).then_some(s))
            .collect();
        base.declared = Some(normalized);
        Ok(base)
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Irreflexive edge relation.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.matrix[u * self.n + v]
    }

    /// `u == v` or `u ~ v`; the span `<u, v>` is a simplex.
    pub fn adjacent_or_equal(&self, u: usize, v: usize) -> bool {
        u == v || self.matrix[u * self.n + v]
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Edges in lexicographic order, each once with `u < v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn n_edges(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn declared_simplices(&self) -> Option<&[Vec<usize>]> {
        self.declared.as_deref()
    }

    fn check_vertex(&self, v: usize) -> Result<(), ComplexError> {
        if v < self.n {
            Ok(())
        } else {
            Err(ComplexError::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Whether every clique of the 1-skeleton spans a simplex. Always true
    /// without declared simplices; otherwise every maximal clique must be
    /// contained in some declared simplex.
    pub fn is_flag(&self) -> bool {
        let Some(declared) = &self.declared else {
            return true;
        };
        let mut flag = true;
        self.maximal_cliques(&mut |clique| {
            if !declared
                .iter()
                .any(|s| clique.iter().all(|v| s.binary_search(v).is_ok()))
            {
                flag = false;
            }
            flag
        });
        flag
    }

    /// Bron–Kerbosch with pivoting; `visit` returns false to stop early.
    fn maximal_cliques(&self, visit: &mut impl FnMut(&[usize]) -> bool) {
        fn go(
            x: &SimplicialComplex,
            r: &mut Vec<usize>,
            mut p: BTreeSet<usize>,
            mut excl: BTreeSet<usize>,
            visit: &mut impl FnMut(&[usize]) -> bool,
        ) -> bool {
            if p.is_empty() && excl.is_empty() {
                return visit(r);
            }
            let pivot = p
                .iter()
                .chain(excl.iter())
                .copied()
                .max_by_key(|&u| p.iter().filter(|&&v| x.adjacent(u, v)).count())
                .unwrap();
            let candidates: Vec<usize> = p
                .iter()
                .copied()
                .filter(|&v| !x.adjacent(pivot, v))
                .collect();
            for v in candidates {
                let pn: BTreeSet<usize> = p.iter().copied().filter(|&u| x.adjacent(u, v)).collect();
                let xn: BTreeSet<usize> =
                    excl.iter().copied().filter(|&u| x.adjacent(u, v)).collect();
                r.push(v);
                let keep_going = go(x, r, pn, xn, visit);
                r.pop();
                if !keep_going {
                    return false;
                }
                p.remove(&v);
                excl.insert(v);
            }
            true
        }
        let p: BTreeSet<usize> = (0..self.n).collect();
        go(self, &mut Vec::new(), p, BTreeSet::new(), visit);
    }

    /// Whether the given vertices span a simplex: a clique of the graph, and
    /// contained in a declared simplex when simplices are explicit.
    pub fn is_simplex(&self, vertices: &[usize]) -> bool {
        if vertices.is_empty() || vertices.iter().any(|&v| v >= self.n) {
            return false;
        }
        let mut sorted = vertices.to_vec();
        sorted.sort_unstable();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return false;
        }
        for i in 0..sorted.len() {
            for j in i + 1..sorted.len() {
                if !self.adjacent(sorted[i], sorted[j]) {
                    return false;
                }
            }
        }
        match &self.declared {
            None => true,
            Some(declared) => declared
                .iter()
                .any(|s| sorted.iter().all(|v| s.binary_search(v).is_ok())),
        }
    }

    /// All simplices of dimension `<= max_dim`, in lexicographic order.
    pub fn simplices_up_to_dim(&self, max_dim: usize) -> Vec<Simplex> {
        match &self.declared {
            None => {
                // Ordered clique extension: every clique is listed once with
                // its vertices increasing.
                let mut out = Vec::new();
                let mut stack: Vec<Vec<usize>> = (0..self.n).map(|v| vec![v]).collect();
                stack.reverse();
                while let Some(clique) = stack.pop() {
                    if clique.len() <= max_dim {
                        let last = *clique.last().unwrap();
                        for &v in self.adj[last].iter().rev() {
                            if v > last && clique.iter().all(|&u| self.adjacent(u, v)) {
                                let mut next = clique.clone();
                                next.push(v);
                                stack.push(next);
                            }
                        }
                    }
                    out.push(Simplex { vertices: clique });
                }
                out.sort();
                out
            }
            Some(declared) => {
                let mut set: BTreeSet<Vec<usize>> = BTreeSet::new();
                for s in declared {
                    subsets_up_to(s, max_dim + 1, &mut set);
                }
                set.into_iter()
                    .map(|vertices| Simplex { vertices })
                    .collect()
            }
        }
    }

    /// All triangles (2-simplices), each as an ascending triple.
    pub fn triangles(&self) -> Vec<[usize; 3]> {
        match &self.declared {
            None => {
                let mut out = Vec::new();
                for (u, v) in self.edges_vec() {
                    for &w in &self.adj[v] {
                        if w > v && self.adjacent(u, w) {
                            out.push([u, v, w]);
                        }
                    }
                }
                out
            }
            Some(declared) => {
                let mut set = BTreeSet::new();
                for s in declared {
                    for i in 0..s.len() {
                        for j in i + 1..s.len() {
                            for k in j + 1..s.len() {
                                set.insert([s[i], s[j], s[k]]);
                            }
                        }
                    }
                }
                set.into_iter().collect()
            }
        }
    }

    fn edges_vec(&self) -> Vec<(usize, usize)> {
        self.edges().collect()
    }

    /// Induced subcomplex on `a` (the span `<a>`), the smallest full
    /// subcomplex containing it.
    pub fn span(&self, a: &[usize]) -> Result<SubcomplexView<'_>, ComplexError> {
        let mut vertices = a.to_vec();
        vertices.sort_unstable();
        vertices.dedup();
        for &v in &vertices {
            self.check_vertex(v)?;
        }
        Ok(SubcomplexView {
            parent: self,
            vertices,
        })
    }

    /// Link of a vertex: the induced subcomplex on its neighbors.
    pub fn link_vertex(&self, v: usize) -> Result<SubcomplexView<'_>, ComplexError> {
        self.check_vertex(v)?;
        Ok(SubcomplexView {
            parent: self,
            vertices: self.adj[v].clone(),
        })
    }

    /// Link of a simplex: the induced subcomplex on the vertices disjoint
    /// from it and adjacent to all of it. Errors when `s` is not a simplex.
    pub fn link(&self, s: &Simplex) -> Result<SubcomplexView<'_>, ComplexError> {
        if !self.is_simplex(s.vertices()) {
            return Err(ComplexError::NotASimplex {
                vertices: s.vertices().to_vec(),
            });
        }
        let vertices = (0..self.n)
            .filter(|&v| {
                !s.vertices().contains(&v) && s.vertices().iter().all(|&u| self.adjacent(u, v))
            })
            .collect();
        Ok(SubcomplexView {
            parent: self,
            vertices,
        })
    }

    /// BFS distances from `start`; `None` marks unreachable vertices.
    pub fn bfs_distances(&self, start: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[start] = Some(0);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    pub fn distance(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return Some(0);
        }
        self.bfs_distances(u)[v]
    }

    /// Full distance table by repeated BFS, O(V * E).
    pub fn all_pairs_distances(&self) -> Vec<Vec<Option<usize>>> {
        (0..self.n).map(|v| self.bfs_distances(v)).collect()
    }

    /// Largest finite distance from `v` (0 for an isolated vertex).
    pub fn eccentricity(&self, v: usize) -> usize {
        self.bfs_distances(v)
            .iter()
            .flatten()
            .copied()
            .max()
            .unwrap_or(0)
    }

    /// `None` when the complex is disconnected.
    pub fn diameter(&self) -> Option<usize> {
        let mut best = 0;
        for v in 0..self.n {
            let dist = self.bfs_distances(v);
            if dist.iter().any(Option::is_none) {
                return None;
            }
            best = best.max(dist.iter().flatten().copied().max().unwrap_or(0));
        }
        Some(best)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.bfs_distances(0).iter().all(Option::is_some)
    }

    /// Ball `B_i(v)`: induced subcomplex on vertices at distance `<= i`.
    pub fn ball(&self, v: usize, radius: usize) -> Result<SubcomplexView<'_>, ComplexError> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        Ok(SubcomplexView {
            parent: self,
            vertices: (0..self.n)
                .filter(|&u| matches!(dist[u], Some(d) if d <= radius))
                .collect(),
        })
    }

    /// Sphere `S_i(v)`: induced subcomplex on vertices at distance exactly `i`.
    pub fn sphere(&self, v: usize, radius: usize) -> Result<SubcomplexView<'_>, ComplexError> {
        self.check_vertex(v)?;
        let dist = self.bfs_distances(v);
        Ok(SubcomplexView {
            parent: self,
            vertices: (0..self.n).filter(|&u| dist[u] == Some(radius)).collect(),
        })
    }
}

fn subsets_up_to(s: &[usize], max_size: usize, out: &mut BTreeSet<Vec<usize>>) {
    fn go(
        s: &[usize],
        start: usize,
        cur: &mut Vec<usize>,
        max: usize,
        out: &mut BTreeSet<Vec<usize>>,
    ) {
        if !cur.is_empty() {
            out.insert(cur.clone());
        }
        if cur.len() == max {
            return;
        }
        for i in start..s.len() {
            cur.push(s[i]);
            go(s, i + 1, cur, max, out);
            cur.pop();
        }
    }
    go(s, 0, &mut Vec::new(), max_size, out);
}

/// An induced (hence full) subcomplex of a parent complex, as a vertex set.
/// Vertex labels are the parent's.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubcomplexView<'a> {
    parent: &'a SimplicialComplex,
    vertices: Vec<usize>,
}

impl<'a> SubcomplexView<'a> {
    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    pub fn parent(&self) -> &'a SimplicialComplex {
        self.parent
    }

    /// Induced edges, in parent labels, lexicographic.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &u) in self.vertices.iter().enumerate() {
            for &v in &self.vertices[i + 1..] {
                if self.parent.adjacent(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Materializes the induced subcomplex with dense relabeling; returns the
    /// new complex and the map from new ids to parent ids.
    pub fn to_complex(&self) -> (SimplicialComplex, Vec<usize>) {
        let map = self.vertices.clone();
        let index_of = |v: usize| map.binary_search(&v).unwrap();
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (index_of(u), index_of(v)))
            .collect();
        let complex = match self.parent.declared.as_ref() {
            None => SimplicialComplex::from_edges(map.len(), &edges).unwrap(),
            Some(declared) => {
                // Simplices of the induced subcomplex: intersections of the
                // declared maximal simplices with the vertex set.
                let restricted: Vec<Vec<usize>> = declared
                    .iter()
                    .map(|s| {
                        s.iter()
                            .copied()
                            .filter(|&v| self.contains(v))
                            .map(index_of)
                            .collect::<Vec<usize>>()
                    })
                    .filter(|s| !s.is_empty())
                    .collect();
                SimplicialComplex::with_declared_simplices(map.len(), &edges, restricted).unwrap()
            }
        };
        (complex, map)
    }
}
