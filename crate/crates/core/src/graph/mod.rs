//! Finite simple graphs on at most 64 vertices, stored as adjacency bit rows.
//!
//! Vertices are 0-based internally. Everything that reads or prints vertex
//! names (edge lists, reports, [`VertexSet`]'s `Display`) is 1-based so that
//! vertex `v` prints as `x_{v+1}`.

pub mod chordal;
pub mod connectivity;
pub mod covers;
mod io;

use std::fmt;
use std::ops::{BitAnd, BitOr, Not, Sub};

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

pub use connectivity::ConnectivityResult;
pub use io::{parse_edge_list, parse_graph, parse_graph6, GraphFormat};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertices, bit `v` standing for vertex `v`. Serializes as the
/// sorted list of 1-based labels.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter().map(|v| v + 1))
    }
}

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest element.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    /// 1-based sorted vertex labels.
    pub fn to_labels(self) -> Vec<usize> {
        self.iter().map(|v| v + 1).collect()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 | rhs.0)
    }
}

impl BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & rhs.0)
    }
}

impl Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: VertexSet) -> VertexSet {
        VertexSet(self.0 & !rhs.0)
    }
}

impl Not for VertexSet {
    type Output = VertexSet;
    fn not(self) -> VertexSet {
        VertexSet(!self.0)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}", v + 1)?;
        }
        f.write_str("}")
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite simple graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::guard("vertex count", n, MAX_VERTICES));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        let all = VertexSet::full(n);
        for v in 0..n {
            g.adj[v] = all.without(v);
        }
        Ok(g)
    }

    /// Builds a graph from 0-based edges; duplicates collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::Invalid(format!(
                "edge ({}, {}) out of range for {} vertices",
                u + 1,
                v + 1,
                self.n
            )));
        }
        if u == v {
            return Err(Error::Invalid(format!("loop at vertex {}", u + 1)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    pub fn num_vertices(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for u in 0..self.n {
            for v in self.adj[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// Closed neighborhood `N[v] = N(v) ∪ {v}`.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn is_complete(&self) -> bool {
        self.num_edges() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph {
            n: self.n,
            adj: (0..self.n).map(|v| (all - self.adj[v]).without(v)).collect(),
        }
    }

    /// Induced subgraph on `keep`, re-indexed to `0..|keep|` in increasing
    /// order. The returned map sends new indices to original vertices.
    pub fn induced_subgraph(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let keep = keep & self.vertices();
        let map: Vec<usize> = keep.iter().collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            pos[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| (self.adj[v] & keep).iter().map(|u| pos[u]).collect())
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// `G - W`: the induced subgraph on the remaining vertices.
    pub fn delete(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices() - w)
    }

    /// Whether the induced subgraph on `within` is connected. The empty
    /// set counts as connected.
    pub fn is_connected_within(&self, within: VertexSet) -> bool {
        let Some(start) = within.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next | self.adj[v];
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen == within
    }

    pub fn is_connected(&self) -> bool {
        self.is_connected_within(self.vertices())
    }

    /// Connected components of the induced subgraph on `within`.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(start) = rest.first() {
            let mut seen = VertexSet::singleton(start);
            let mut frontier = seen;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier {
                    next = next | self.adj[v];
                }
                frontier = (next & within) - seen;
                seen = seen | frontier;
            }
            out.push(seen);
            rest = rest - seen;
        }
        out
    }

    /// Whether `set` is a clique.
    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| (set.without(v)).is_subset(self.adj[v]))
    }

    /// Vertex connectivity via unit-capacity max flow over non-adjacent pairs.
    pub fn vertex_connectivity(&self) -> Result<ConnectivityResult> {
        connectivity::vertex_connectivity(self)
    }

    /// Vertex connectivity by scanning separators in increasing size; `n ≤ 16`.
    pub fn vertex_connectivity_bruteforce(&self) -> Result<ConnectivityResult> {
        connectivity::vertex_connectivity_bruteforce(self)
    }

    /// A perfect elimination ordering if the graph is chordal.
    pub fn perfect_elimination_ordering(&self) -> Option<Vec<usize>> {
        chordal::perfect_elimination_ordering(self)
    }

    pub fn is_chordal(&self) -> bool {
        self.perfect_elimination_ordering().is_some()
    }

    /// All inclusion-minimal vertex covers, sorted by size then lexicographically.
    pub fn minimal_vertex_covers(&self) -> Result<Vec<VertexSet>> {
        covers::minimal_vertex_covers(self)
    }

    /// Edge list text: `n` on the first line, then one 1-based `u v` per line.
    pub fn to_edge_list(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for (u, v) in self.edges() {
            s.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        s
    }

    /// Compact single-line description, e.g. `n=4 E=[1-2,2-3]`.
    pub fn summary(&self) -> String {
        let edges: Vec<String> = self
            .edges()
            .iter()
            .map(|(u, v)| format!("{}-{}", u + 1, v + 1))
            .collect();
        format!("n={} E=[{}]", self.n, edges.join(","))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.summary())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    fn set(labels: &[usize]) -> VertexSet {
        labels.iter().map(|&l| l - 1).collect()
    }

    #[test]
    fn complement_of_c6_has_nine_edges() {
        let c = cycle(6).complement();
        let expected: Vec<(usize, usize)> = [(1, 3), (1, 4), (1, 5), (2, 4), (2, 5), (2, 6), (3, 5), (3, 6), (4, 6)]
            .iter()
            .map(|&(u, v)| (u - 1, v - 1))
            .collect();
        assert_eq!(c.edges(), expected);
    }

    #[test]
    fn complement_of_k4_is_edgeless() {
        assert_eq!(Graph::complete(4).unwrap().complement(), Graph::empty(4).unwrap());
    }

    #[test]
    fn c5_is_self_complementary() {
        // complement of the pentagon 1-2-3-4-5 is the pentagram 1-3-5-2-4
        let c = cycle(5).complement();
        let pentagram = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(c, pentagram);
        assert_eq!(c.num_edges(), 5);
        assert!(c.is_connected());
        assert!((0..5).all(|v| c.degree(v) == 2));
    }

    #[test]
    fn induced_path_in_c6() {
        let (p, map) = cycle(6).induced_subgraph(set(&[1, 2, 3]));
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p.edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn induced_on_full_set_is_identity() {
        let g = cycle(7);
        let (h, map) = g.induced_subgraph(g.vertices());
        assert_eq!(h, g);
        assert_eq!(map, (0..7).collect::<Vec<_>>());
    }

    #[test]
    fn induced_on_empty_set() {
        let (h, map) = cycle(4).induced_subgraph(VertexSet::EMPTY);
        assert_eq!(h.num_vertices(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn neighborhoods() {
        let c6 = cycle(6);
        assert_eq!(c6.neighbors(0), set(&[2, 6]));
        assert_eq!(c6.closed_neighborhood(0), set(&[1, 2, 6]));
        let g = Graph::empty(3).unwrap();
        assert_eq!(g.neighbors(1), VertexSet::EMPTY);
        assert_eq!(g.closed_neighborhood(1), set(&[2]));
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(k4.closed_neighborhood(0), k4.vertices());
    }

    #[test]
    fn add_edge_rejects_loops_and_range() {
        let mut g = Graph::empty(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(Graph::empty(65).is_err());
    }

    #[test]
    fn components() {
        let g = Graph::from_edges(5, &[(0, 1), (3, 4)]).unwrap();
        let comps = g.components_within(g.vertices());
        assert_eq!(comps, vec![set(&[1, 2]), set(&[3]), set(&[4, 5])]);
        assert!(!g.is_connected());
        assert!(g.is_connected_within(set(&[1, 2])));
    }

    #[test]
    fn vertex_set_display_is_one_based() {
        assert_eq!(set(&[1, 3, 5]).to_string(), "{1,3,5}");
        assert_eq!(VertexSet::EMPTY.to_string(), "{}");
    }
}
