//! Immutable simple undirected graphs over dense vertex ids `0..n`.

mod connectivity;
mod io;
mod profile;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

pub use io::GraphFile;
pub use profile::{CommonNeighborStats, StructuralProfile};

/// An unordered vertex pair stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: usize,
    v: usize,
}

impl Edge {
    /// Normalizes orientation. Returns `None` for a loop.
    pub fn new(a: usize, b: usize) -> Option<Edge> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    #[inline]
    pub fn u(self) -> usize {
        self.u
    }

    #[inline]
    pub fn v(self) -> usize {
        self.v
    }

    pub fn endpoints(self) -> (usize, usize) {
        (self.u, self.v)
    }

    pub fn is_incident(self, w: usize) -> bool {
        self.u == w || self.v == w
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(serializer)
    }
}

/// A set of edges of some host graph (faulty links).
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct EdgeSet(BTreeSet<Edge>);

impl EdgeSet {
    pub fn new() -> Self {
        EdgeSet::default()
    }

    /// Collects `pairs` as edges of `graph`, rejecting loops, non-edges and
    /// repeats (in either orientation).
    pub fn from_pairs<I>(graph: &Graph, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut set = BTreeSet::new();
        for (a, b) in pairs {
            graph.check_vertex(a)?;
            graph.check_vertex(b)?;
            let edge = Edge::new(a, b).ok_or(Error::SelfLoop { vertex: a })?;
            if !graph.has_edge(a, b) {
                return Err(Error::NotAnEdge { u: edge.u, v: edge.v });
            }
            if !set.insert(edge) {
                return Err(Error::DuplicateEdge { u: edge.u, v: edge.v });
            }
        }
        Ok(EdgeSet(set))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.0.contains(&edge)
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.iter().copied()
    }

    pub fn to_pairs(&self) -> Vec<[usize; 2]> {
        self.iter().map(|e| [e.u, e.v]).collect()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet(iter.into_iter().collect())
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<VertexSet>,
    edge_count: usize,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Builds a simple graph. Loops, repeated edges (in either orientation)
    /// and out-of-range ids are errors.
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![VertexSet::empty(vertex_count); vertex_count];
        let mut edge_count = 0;
        for (a, b) in edges {
            for x in [a, b] {
                if x >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: x, vertex_count });
                }
            }
            let edge = Edge::new(a, b).ok_or(Error::SelfLoop { vertex: a })?;
            if !adjacency[a].insert(b) {
                return Err(Error::DuplicateEdge { u: edge.u, v: edge.v });
            }
            adjacency[b].insert(a);
            edge_count += 1;
        }
        Ok(Graph { adjacency, edge_count, labels: None })
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph> {
        if labels.len() != self.vertex_count() {
            return Err(Error::LabelCount {
                expected: self.vertex_count(),
                found: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.vertex_count() {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.vertex_count() })
        }
    }

    pub(crate) fn check_set(&self, set: &VertexSet) -> Result<()> {
        if set.universe() == self.vertex_count() {
            Ok(())
        } else {
            Err(Error::invalid(format!(
                "vertex set over {} vertices used with a graph on {}",
                set.universe(),
                self.vertex_count()
            )))
        }
    }

    /// Adjacency of `v`. Panics if `v` is out of range; see
    /// [`Graph::neighborhood`] for the checked form.
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adjacency[v]
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adjacency[v].clone())
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.vertex_count() && self.adjacency[u].contains(v)
    }

    /// All edges in ascending `(u, v)` order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, adj)| adj.iter().filter(move |&v| v > u).map(move |v| Edge { u, v }))
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.vertex_count()
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::empty(self.vertex_count())
    }

    pub fn vertex_set<I: IntoIterator<Item = usize>>(&self, vertices: I) -> Result<VertexSet> {
        VertexSet::from_vertices(self.vertex_count(), vertices)
    }

    /// `N_G(A)`: every neighbor of a member of `a` that is not itself in `a`.
    pub fn external_neighborhood(&self, a: &VertexSet) -> Result<VertexSet> {
        self.check_set(a)?;
        Ok(self.external_neighborhood_unchecked(a))
    }

    pub(crate) fn external_neighborhood_unchecked(&self, a: &VertexSet) -> VertexSet {
        let mut out = self.empty_set();
        for v in a {
            out.union_with(&self.adjacency[v]);
        }
        out.difference_with(a);
        out
    }

    /// `G - F_e`: same vertices, the listed edges removed.
    pub fn delete_edges(&self, faulty: &EdgeSet) -> Result<Graph> {
        for e in faulty.iter() {
            if !self.has_edge(e.u, e.v) {
                return Err(Error::NotAnEdge { u: e.u, v: e.v });
            }
        }
        Ok(self.without_edges(faulty.iter()))
    }

    /// Removes edges already known to be present.
    pub(crate) fn without_edges(&self, edges: impl IntoIterator<Item = Edge>) -> Graph {
        let mut g = self.clone();
        for e in edges {
            if g.adjacency[e.u].remove(e.v) {
                g.adjacency[e.v].remove(e.u);
                g.edge_count -= 1;
            }
        }
        g
    }

    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Common degree `k` if the graph is `k`-regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let min = self.min_degree();
        (min == self.max_degree()).then_some(min)
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        n == 0 || self.min_degree() == n - 1
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertex_count", &self.vertex_count())
            .field("edges", &self.edges().map(Edge::endpoints).collect::<Vec<_>>())
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap()
    }

    #[test]
    fn builds_the_four_cycle() {
        let g = c4();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        let edges: Vec<_> = g.edges().map(Edge::endpoints).collect();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(g.neighborhood(0).unwrap().to_vec(), vec![1, 3]);
    }

    #[test]
    fn single_isolated_vertex() {
        let g = Graph::new(1, []).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert!(g.neighborhood(0).unwrap().is_empty());
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Graph::new(2, [(0, 0)]), Err(Error::SelfLoop { vertex: 0 })));
        assert!(matches!(
            Graph::new(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { u: 0, v: 1 })
        ));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, vertex_count: 3 })
        ));
        assert!(matches!(c4().neighborhood(4), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn external_neighborhood_of_c4() {
        let g = c4();
        let a = g.vertex_set([0, 1]).unwrap();
        assert_eq!(g.external_neighborhood(&a).unwrap().to_vec(), vec![2, 3]);
        assert!(g.external_neighborhood(&g.empty_set()).unwrap().is_empty());
        let wrong = VertexSet::empty(5);
        assert!(g.external_neighborhood(&wrong).is_err());
    }

    #[test]
    fn deleting_an_edge_leaves_a_path() {
        let g = c4();
        let fe = EdgeSet::from_pairs(&g, [(1, 0)]).unwrap();
        let p = g.delete_edges(&fe).unwrap();
        assert_eq!(p.edge_count(), 3);
        assert!(!p.has_edge(0, 1));
        assert_eq!(p.degree(0), 1);
        assert_eq!(p.degree(1), 1);
        assert_eq!(g.delete_edges(&EdgeSet::new()).unwrap(), g);
    }

    #[test]
    fn edge_set_validation() {
        let g = c4();
        assert!(matches!(EdgeSet::from_pairs(&g, [(0, 2)]), Err(Error::NotAnEdge { u: 0, v: 2 })));
        assert!(matches!(
            EdgeSet::from_pairs(&g, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
    }
}
