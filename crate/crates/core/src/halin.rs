//! Halin graphs `G = T ∪ C` derived from a plane tree, and the statistics the
//! coloring algorithms read off them.

use std::collections::{BTreeSet, VecDeque};

use crate::error::HalinError;
use crate::graph::{EdgeId, EdgeKind, Graph, Vertex};
use crate::tree::PlaneTree;

/// A Halin graph. The adjoint cycle is never stored independently: it is the
/// clockwise leaf order of the plane tree.
///
/// Edge ids: tree edges first, numbered by the preorder position of their
/// child endpoint, then cycle edges `(L0,L1), (L1,L2), ..., (Ln-1,L0)` over
/// the leaves `L0..Ln-1` in plane order.
#[derive(Clone, Debug)]
pub struct HalinGraph {
    tree: PlaneTree,
    graph: Graph,
    leaves: Vec<Vertex>,
    cycle_edges: Vec<EdgeId>,
    parent_edge: Vec<Option<EdgeId>>,
    leaf_pos: Vec<Option<usize>>,
}

/// Partition of the cycle edges into `C_s` (both leaves share their tree
/// neighbor) and `C_d` (the rest).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleEdgeClass {
    pub same_parent: BTreeSet<EdgeId>,
    pub different_parent: BTreeSet<EdgeId>,
}

impl CycleEdgeClass {
    pub fn is_same_parent(&self, e: EdgeId) -> bool {
        self.same_parent.contains(&e)
    }

    pub fn is_different_parent(&self, e: EdgeId) -> bool {
        self.different_parent.contains(&e)
    }
}

/// Builds the Halin graph of `tree`. Rejects trees with fewer than three
/// leaves or an internal vertex of degree two.
pub fn build_halin(tree: PlaneTree) -> Result<HalinGraph, HalinError> {
    HalinGraph::new(tree)
}

impl HalinGraph {
    pub fn new(tree: PlaneTree) -> Result<Self, HalinError> {
        let n = tree.vertex_count();
        if tree.is_leaf(tree.root()) || tree.degree(tree.root()) < 3 {
            return Err(HalinError::NotAHalinTree {
                vertex: tree.root(),
                reason: "root must be an internal vertex of degree at least 3",
            });
        }
        for v in 0..n {
            if tree.degree(v) == 2 {
                return Err(HalinError::NotAHalinTree { vertex: v, reason: "internal vertex of degree 2" });
            }
        }
        let leaves = tree.leaves();
        if leaves.len() < 3 {
            return Err(HalinError::NotAHalinTree { vertex: tree.root(), reason: "fewer than 3 leaves" });
        }

        let mut graph = Graph::new(n);
        let mut parent_edge = vec![None; n];
        for v in tree.preorder() {
            if let Some(p) = tree.parent(v) {
                let e = graph.add_edge(p, v, EdgeKind::Tree).expect("tree edges are distinct");
                parent_edge[v] = Some(e);
            }
        }
        let mut cycle_edges = Vec::with_capacity(leaves.len());
        let mut leaf_pos = vec![None; n];
        for (i, &l) in leaves.iter().enumerate() {
            leaf_pos[l] = Some(i);
            let next = leaves[(i + 1) % leaves.len()];
            let e = graph.add_edge(l, next, EdgeKind::Cycle).expect("cycle edges are distinct");
            cycle_edges.push(e);
        }
        Ok(HalinGraph { tree, graph, leaves, cycle_edges, parent_edge, leaf_pos })
    }

    pub fn tree(&self) -> &PlaneTree {
        &self.tree
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_tree(self) -> PlaneTree {
        self.tree
    }

    /// Leaves in cycle order.
    pub fn cycle_vertices(&self) -> &[Vertex] {
        &self.leaves
    }

    /// Cycle edges in cycle order; edge `i` joins leaf `i` and leaf `i+1`.
    pub fn cycle_edges(&self) -> &[EdgeId] {
        &self.cycle_edges
    }

    pub fn cycle_len(&self) -> usize {
        self.cycle_edges.len()
    }

    pub fn tree_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        (0..self.graph.edge_count()).filter(|&e| self.graph.kind(e) == EdgeKind::Tree)
    }

    pub fn is_cycle_edge(&self, e: EdgeId) -> bool {
        self.graph.kind(e) == EdgeKind::Cycle
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn max_degree(&self) -> usize {
        self.graph.max_degree()
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.tree.is_leaf(v)
    }

    /// Tree edge joining `v` to its parent.
    pub fn parent_edge(&self, v: Vertex) -> Option<EdgeId> {
        self.parent_edge[v]
    }

    /// The unique tree neighbor of a leaf.
    pub fn leaf_neighbor(&self, leaf: Vertex) -> Vertex {
        let (_, e) = self.tree_incident(leaf).next().expect("leaf has a tree edge");
        self.graph.other(e, leaf)
    }

    /// Tree edges at `v` as `(neighbor, edge)`.
    pub fn tree_incident(&self, v: Vertex) -> impl Iterator<Item = (Vertex, EdgeId)> + '_ {
        self.graph
            .incident(v)
            .iter()
            .copied()
            .filter(|&(_, e)| self.graph.kind(e) == EdgeKind::Tree)
    }

    /// Position of a leaf in the cycle.
    pub fn cycle_position(&self, leaf: Vertex) -> Option<usize> {
        self.leaf_pos[leaf]
    }

    /// The two cycle neighbors of a leaf: `(previous, next)`.
    pub fn cycle_neighbors(&self, leaf: Vertex) -> (Vertex, Vertex) {
        let i = self.leaf_pos[leaf].expect("not a leaf");
        let n = self.leaves.len();
        (self.leaves[(i + n - 1) % n], self.leaves[(i + 1) % n])
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.graph.vertex_count()).all(|v| self.graph.degree(v) == 3)
    }
}

pub fn classify_cycle_edges(g: &HalinGraph) -> CycleEdgeClass {
    let mut same_parent = BTreeSet::new();
    let mut different_parent = BTreeSet::new();
    for &e in g.cycle_edges() {
        let (a, b) = g.graph().endpoints(e);
        if g.leaf_neighbor(a) == g.leaf_neighbor(b) {
            same_parent.insert(e);
        } else {
            different_parent.insert(e);
        }
    }
    CycleEdgeClass { same_parent, different_parent }
}

/// Leaf neighbors of the internal vertex `v` incident to at least one `C_d`
/// edge.
pub fn ln_d(g: &HalinGraph, class: &CycleEdgeClass, v: Vertex) -> Result<BTreeSet<Vertex>, HalinError> {
    if v >= g.graph().vertex_count() || g.is_leaf(v) {
        return Err(HalinError::NotInternalVertex(v));
    }
    Ok(g.tree_incident(v)
        .map(|(w, _)| w)
        .filter(|&w| g.is_leaf(w))
        .filter(|&w| {
            g.graph()
                .incident(w)
                .iter()
                .any(|&(_, e)| class.is_different_parent(e))
        })
        .collect())
}

/// Height of the subtree hanging from `v` when entered from `from`.
fn height_away(g: &HalinGraph, v: Vertex, from: Vertex) -> usize {
    let mut best = 0;
    let mut queue = VecDeque::from([(v, from, 0usize)]);
    while let Some((x, prev, d)) = queue.pop_front() {
        best = best.max(d);
        for (y, _) in g.tree_incident(x) {
            if y != prev {
                queue.push_back((y, x, d + 1));
            }
        }
    }
    best
}

/// A longest path in the characteristic tree, as a vertex sequence. Among all
/// longest paths the lexicographically smallest vertex sequence is returned.
pub fn longest_tree_path(g: &HalinGraph) -> Vec<Vertex> {
    let n = g.graph().vertex_count();
    let ecc: Vec<usize> = (0..n).map(|v| height_away(g, v, usize::MAX)).collect();
    let diameter = *ecc.iter().max().expect("non-empty tree");
    let start = (0..n).find(|&v| ecc[v] == diameter).expect("some vertex attains the diameter");
    let mut path = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while path.len() <= diameter {
        let remaining = diameter + 1 - path.len();
        let mut options: Vec<Vertex> = g
            .tree_incident(cur)
            .map(|(w, _)| w)
            .filter(|&w| w != prev && height_away(g, w, cur) + 1 >= remaining)
            .collect();
        options.sort_unstable();
        let next = options[0];
        prev = cur;
        cur = next;
        path.push(next);
    }
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    fn star(k: usize) -> PlaneTree {
        let mut children = vec![(1..=k).collect::<Vec<_>>()];
        children.extend((0..k).map(|_| Vec::new()));
        PlaneTree::new(0, children).unwrap()
    }

    /// u=0 with leaves a=1, b=2 and internal v=3 carrying leaves c=4, d=5.
    fn ell_three() -> PlaneTree {
        PlaneTree::new(0, vec![vec![1, 2, 3], vec![], vec![], vec![4, 5], vec![], vec![]]).unwrap()
    }

    #[test]
    fn star_three_is_k4() {
        let g = build_halin(star(3)).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.is_cubic());
        for u in 0..4 {
            for v in (u + 1)..4 {
                assert!(g.graph().edge_between(u, v).is_some());
            }
        }
    }

    #[test]
    fn star_is_wheel_with_same_parent_rim() {
        let g = build_halin(star(5)).unwrap();
        assert_eq!(g.cycle_len(), 5);
        assert_eq!(g.max_degree(), 5);
        let class = classify_cycle_edges(&g);
        assert_eq!(class.same_parent.len(), 5);
        assert!(class.different_parent.is_empty());
        assert!(ln_d(&g, &class, 0).unwrap().is_empty());
    }

    #[test]
    fn ell_three_cycle_and_classes() {
        let g = build_halin(ell_three()).unwrap();
        // plane DFS order: a, b, then the leaves of v
        assert_eq!(g.cycle_vertices(), &[1, 2, 4, 5]);
        assert!(g.is_cubic());
        let class = classify_cycle_edges(&g);
        let ab = g.graph().edge_between(1, 2).unwrap();
        let cd = g.graph().edge_between(4, 5).unwrap();
        assert_eq!(class.same_parent, BTreeSet::from([ab, cd]));
        let bc = g.graph().edge_between(2, 4).unwrap();
        let da = g.graph().edge_between(5, 1).unwrap();
        assert_eq!(class.different_parent, BTreeSet::from([bc, da]));
        assert_eq!(longest_tree_path(&g).len() - 1, 3);
    }

    #[test]
    fn rejects_degree_two_and_small_trees() {
        let path = PlaneTree::new(0, vec![vec![1, 2, 3], vec![4], vec![], vec![], vec![]]).unwrap();
        assert_eq!(
            build_halin(path).unwrap_err(),
            HalinError::NotAHalinTree { vertex: 1, reason: "internal vertex of degree 2" }
        );
        assert!(matches!(build_halin(star(2)), Err(HalinError::NotAHalinTree { vertex: 0, .. })));
    }

    #[test]
    fn ln_d_rejects_leaves() {
        let g = build_halin(star(4)).unwrap();
        let class = classify_cycle_edges(&g);
        assert_eq!(ln_d(&g, &class, 2), Err(HalinError::NotInternalVertex(2)));
    }

    #[test]
    fn longest_path_is_lexicographic() {
        let g = build_halin(star(3)).unwrap();
        assert_eq!(longest_tree_path(&g), vec![1, 0, 2]);
        // caterpillar: 0 -> [1, 2, 3]; 3 -> [4, 5]; 5 -> [6, 7]
        let t = PlaneTree::new(
            0,
            vec![vec![1, 2, 3], vec![], vec![], vec![4, 5], vec![], vec![6, 7], vec![], vec![]],
        )
        .unwrap();
        let g = build_halin(t).unwrap();
        assert_eq!(longest_tree_path(&g), vec![1, 0, 3, 5, 6]);
    }
}
