//! Simple undirected graphs with dense vertex and edge ids.

use std::collections::HashMap;

use crate::error::GraphError;

/// Vertex id, dense in `0..vertex_count`.
pub type Vertex = usize;
/// Edge id, dense in `0..edge_count`.
pub type EdgeId = usize;

/// Role of an edge inside a Halin graph. Plain graphs use [`EdgeKind::Plain`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Plain,
    Tree,
    Cycle,
}

/// A simple undirected graph. Edges keep their insertion order as ids.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    edges: Vec<(Vertex, Vertex)>,
    kinds: Vec<EdgeKind>,
    adj: Vec<Vec<(Vertex, EdgeId)>>,
    lookup: HashMap<(Vertex, Vertex), EdgeId>,
}

#[inline]
fn key(u: Vertex, v: Vertex) -> (Vertex, Vertex) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

impl Graph {
    pub fn new(vertex_count: usize) -> Self {
        Graph {
            edges: Vec::new(),
            kinds: Vec::new(),
            adj: vec![Vec::new(); vertex_count],
            lookup: HashMap::new(),
        }
    }

    /// Builds a graph from an edge list; fails on loops, duplicates or
    /// out-of-range endpoints.
    pub fn from_edges(vertex_count: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(vertex_count);
        for &(u, v) in edges {
            g.add_edge(u, v, EdgeKind::Plain)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: Vertex, v: Vertex, kind: EdgeKind) -> Result<EdgeId, GraphError> {
        let n = self.adj.len();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange { vertex: u.max(v), count: n });
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.lookup.contains_key(&key(u, v)) {
            return Err(GraphError::DuplicateEdge(u, v));
        }
        let id = self.edges.len();
        self.edges.push((u, v));
        self.kinds.push(kind);
        self.adj[u].push((v, id));
        self.adj[v].push((u, id));
        self.lookup.insert(key(u, v), id);
        Ok(id)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> (Vertex, Vertex) {
        self.edges[e]
    }

    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn kind(&self, e: EdgeId) -> EdgeKind {
        self.kinds[e]
    }

    /// `(neighbor, edge)` pairs incident to `v`, in insertion order.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, EdgeId)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn edge_between(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        self.lookup.get(&key(u, v)).copied()
    }

    /// The endpoint of `e` that is not `v`.
    pub fn other(&self, e: EdgeId, v: Vertex) -> Vertex {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    /// Edges sharing an endpoint with `e` (excluding `e`).
    pub fn adjacent_edges(&self, e: EdgeId) -> impl Iterator<Item = EdgeId> + '_ {
        let (u, v) = self.edges[e];
        self.adj[u]
            .iter()
            .chain(self.adj[v].iter())
            .map(|&(_, f)| f)
            .filter(move |&f| f != e)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(1, 0))
        ));
        assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(g.edge_between(3, 2), Some(2));
        assert_eq!(g.other(3, 0), 3);
        let mut adj: Vec<_> = g.adjacent_edges(0).collect();
        adj.sort();
        assert_eq!(adj, vec![1, 3]);
        assert_eq!(g.max_degree(), 2);
    }
}
