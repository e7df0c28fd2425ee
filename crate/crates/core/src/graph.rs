//! Simple undirected graphs and the cut/component primitives used by the
//! matroids and the certificate checks.

use crate::dsu::DisjointSet;
use crate::sets::{EdgeSet, VertexSet};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {edge}: vertex {vertex} out of range for n={n}")]
    VertexOutOfRange {
        edge: usize,
        vertex: usize,
        n: usize,
    },
    #[error("edge {edge}: self-loop at vertex {vertex}")]
    SelfLoop { edge: usize, vertex: usize },
    #[error("edge {edge}: duplicates edge {first} ({u}, {v})")]
    ParallelEdge {
        edge: usize,
        first: usize,
        u: usize,
        v: usize,
    },
}

/// A simple undirected graph on vertices `0..n` with stably indexed edges.
///
/// Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges and out-of-range endpoints.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut seen = std::collections::HashMap::with_capacity(edges.len());
        for (e, &(u, v)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange {
                        edge: e,
                        vertex: x,
                        n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { edge: e, vertex: u });
            }
            let key = (u.min(v), u.max(v));
            if let Some(&first) = seen.get(&key) {
                return Err(GraphError::ParallelEdge {
                    edge: e,
                    first,
                    u: key.0,
                    v: key.1,
                });
            }
            seen.insert(key, e);
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        Ok(Self {
            n,
            edges: edges.to_vec(),
            adj,
        })
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// `(neighbor, edge index)` pairs incident to `v`.
    pub fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn empty_edge_set(&self) -> EdgeSet {
        EdgeSet::new(self.edge_count())
    }

    pub fn empty_vertex_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    /// Edges with exactly one endpoint in `s`.
    pub fn edge_cut(&self, s: &VertexSet) -> EdgeSet {
        let mut cut = self.empty_edge_set();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if s.contains(u) != s.contains(v) {
                cut.insert(e);
            }
        }
        cut
    }

    /// Vertices outside `s` adjacent to some vertex of `s`.
    pub fn neighbors(&self, s: &VertexSet) -> VertexSet {
        let mut out = self.empty_vertex_set();
        for v in s.iter() {
            for &(w, _) in &self.adj[v] {
                if !s.contains(w) {
                    out.insert(w);
                }
            }
        }
        out
    }

    /// Number of components of the spanning subgraph `(V, x)`, isolated vertices included.
    pub fn component_count_spanning(&self, x: &EdgeSet) -> usize {
        let mut dsu = DisjointSet::new(self.n);
        for e in x.iter() {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        dsu.count()
    }

    /// Number of components of `G - s`; zero when `s` is every vertex.
    pub fn component_count_after_removal(&self, s: &VertexSet) -> usize {
        let mut dsu = DisjointSet::new(self.n);
        for &(u, v) in &self.edges {
            if !s.contains(u) && !s.contains(v) {
                dsu.union(u, v);
            }
        }
        dsu.count() - s.len()
    }

    /// Edges with neither endpoint in `s`, i.e. the edge set of `G - s`.
    pub fn edges_avoiding(&self, s: &VertexSet) -> EdgeSet {
        let mut out = self.empty_edge_set();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if !s.contains(u) && !s.contains(v) {
                out.insert(e);
            }
        }
        out
    }

    /// True iff no edge has both endpoints in `u`.
    pub fn is_stable(&self, u: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| !(u.contains(a) && u.contains(b)))
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.component_count_spanning(&EdgeSet::full(self.edge_count())) == 1
    }

    /// True iff `x` has `n - 1` edges and connects every vertex.
    pub fn is_spanning_tree(&self, x: &EdgeSet) -> bool {
        self.n >= 1 && x.len() == self.n - 1 && self.component_count_spanning(x) == 1
    }

    /// Number of edges of `x` incident to `v`.
    pub fn degree_in(&self, x: &EdgeSet, v: usize) -> usize {
        self.adj[v].iter().filter(|&&(_, e)| x.contains(e)).count()
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::Graph;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).unwrap()
    }

    pub fn triangle() -> Graph {
        Graph::new(3, &[(0, 1), (0, 2), (1, 2)]).unwrap()
    }

    /// Center 0, leaves 1..=k.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::new(k + 1, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::new(n, &edges).unwrap()
    }

    /// Apex 0 joined to vertex 1 of triangle {1,2,3} and vertex 4 of triangle {4,5,6}.
    pub fn two_triangles_apex() -> Graph {
        Graph::new(
            7,
            &[
                (1, 2),
                (2, 3),
                (1, 3),
                (4, 5),
                (5, 6),
                (4, 6),
                (0, 1),
                (0, 4),
            ],
        )
        .unwrap()
    }

    /// u=0, v=1 both adjacent to w1=2, w2=3; w3=4 pendant on w1.
    pub fn double_neighbor() -> Graph {
        Graph::new(5, &[(0, 2), (0, 3), (1, 2), (1, 3), (2, 4)]).unwrap()
    }
}
