//! Rooted plane trees: a rooted tree plus a fixed clockwise order of the
//! children at every vertex.

use crate::error::TreeError;
use crate::graph::Vertex;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PlaneTree {
    root: Vertex,
    children: Vec<Vec<Vertex>>,
    parent: Vec<Option<Vertex>>,
}

impl PlaneTree {
    /// Builds a tree from per-vertex ordered child lists. Vertices are
    /// `0..children.len()`; every vertex except `root` must be the child of
    /// exactly one vertex and reachable from `root`.
    pub fn new(root: Vertex, children: Vec<Vec<Vertex>>) -> Result<Self, TreeError> {
        let n = children.len();
        if root >= n {
            return Err(TreeError::VertexOutOfRange(root));
        }
        let mut parent = vec![None; n];
        for (v, kids) in children.iter().enumerate() {
            for &c in kids {
                if c >= n {
                    return Err(TreeError::VertexOutOfRange(c));
                }
                if c == root {
                    return Err(TreeError::RootHasParent(root));
                }
                if parent[c].is_some() {
                    return Err(TreeError::MultipleParents(c));
                }
                parent[c] = Some(v);
            }
        }
        let tree = PlaneTree { root, children, parent };
        let mut seen = vec![false; n];
        for v in tree.preorder() {
            seen[v] = true;
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(TreeError::Disconnected(v));
        }
        Ok(tree)
    }

    /// Builds a tree from a rotation system: `rotation[v]` lists the
    /// neighbors of `v` in clockwise order. Children of a non-root vertex are
    /// read clockwise starting just after its parent.
    pub fn from_rotation(root: Vertex, rotation: &[Vec<Vertex>]) -> Result<Self, TreeError> {
        let n = rotation.len();
        if root >= n {
            return Err(TreeError::VertexOutOfRange(root));
        }
        for (v, nbrs) in rotation.iter().enumerate() {
            for &w in nbrs {
                if w >= n {
                    return Err(TreeError::VertexOutOfRange(w));
                }
                if !rotation[w].contains(&v) {
                    return Err(TreeError::AsymmetricRotation(v, w));
                }
            }
        }
        let mut children = vec![Vec::new(); n];
        let mut visited = vec![false; n];
        visited[root] = true;
        children[root] = rotation[root].clone();
        let mut stack: Vec<Vertex> = rotation[root].iter().rev().copied().collect();
        let mut parent_of = vec![root; n];
        for &c in &rotation[root] {
            parent_of[c] = root;
        }
        while let Some(v) = stack.pop() {
            if visited[v] {
                return Err(TreeError::MultipleParents(v));
            }
            visited[v] = true;
            let p = parent_of[v];
            let nbrs = &rotation[v];
            let at = nbrs.iter().position(|&w| w == p).ok_or(TreeError::AsymmetricRotation(p, v))?;
            let kids: Vec<Vertex> = (1..nbrs.len()).map(|i| nbrs[(at + i) % nbrs.len()]).collect();
            for &c in kids.iter().rev() {
                parent_of[c] = v;
                stack.push(c);
            }
            children[v] = kids;
        }
        PlaneTree::new(root, children)
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn vertex_count(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.children[v].len() + usize::from(self.parent[v].is_some())
    }

    pub fn max_degree(&self) -> usize {
        (0..self.vertex_count()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.degree(v) == 1
    }

    /// Clockwise neighbor order at `v`: parent first, then children.
    pub fn rotation_at(&self, v: Vertex) -> Vec<Vertex> {
        self.parent[v].into_iter().chain(self.children[v].iter().copied()).collect()
    }

    pub fn rotation(&self) -> Vec<Vec<Vertex>> {
        (0..self.vertex_count()).map(|v| self.rotation_at(v)).collect()
    }

    /// Depth-first preorder, children visited in plane order.
    pub fn preorder(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.vertex_count());
        let mut stack = vec![self.root];
        while let Some(v) = stack.pop() {
            order.push(v);
            stack.extend(self.children[v].iter().rev());
        }
        order
    }

    /// Leaves in plane DFS order (the clockwise boundary order).
    pub fn leaves(&self) -> Vec<Vertex> {
        self.preorder().into_iter().filter(|&v| self.is_leaf(v)).collect()
    }

    pub fn internal_vertices(&self) -> Vec<Vertex> {
        self.preorder().into_iter().filter(|&v| !self.is_leaf(v)).collect()
    }

    /// Relabels vertices by preorder position. Returns the relabelled tree and
    /// the old-to-new id map.
    pub fn relabel_preorder(&self) -> (PlaneTree, Vec<Vertex>) {
        let order = self.preorder();
        let mut new_id = vec![0; order.len()];
        for (i, &v) in order.iter().enumerate() {
            new_id[v] = i;
        }
        let mut children = vec![Vec::new(); order.len()];
        for &v in &order {
            children[new_id[v]] = self.children[v].iter().map(|&c| new_id[c]).collect();
        }
        let tree = PlaneTree::new(0, children).expect("relabelling preserves tree structure");
        (tree, new_id)
    }

    /// Same embedding, rooted at `root`.
    pub fn reroot(&self, root: Vertex) -> Result<PlaneTree, TreeError> {
        PlaneTree::from_rotation(root, &self.rotation())
    }

    /// Mirror image: every child order reversed.
    pub fn mirrored(&self) -> PlaneTree {
        let children = self
            .children
            .iter()
            .map(|c| c.iter().rev().copied().collect())
            .collect();
        PlaneTree { root: self.root, children, parent: self.parent.clone() }
    }
}
