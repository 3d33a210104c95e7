//! Reference implementations used as test oracles. Each one is written
//! independently of the library code it checks and favors obviousness over
//! speed.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use halin_star::{Color, EdgeColoring, Graph, HalinGraph, PlaneTree, Vertex};

/// Every 4-edge subset forming a path on five vertices or a cycle on four,
/// found by brute force over all subsets.
pub fn naive_four_structures(g: &Graph) -> Vec<[usize; 4]> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            for c in b + 1..m {
                for d in c + 1..m {
                    let set = [a, b, c, d];
                    if is_path_or_cycle(g, &set) {
                        out.push(set);
                    }
                }
            }
        }
    }
    out
}

fn is_path_or_cycle(g: &Graph, set: &[usize; 4]) -> bool {
    let mut deg: BTreeMap<Vertex, usize> = BTreeMap::new();
    for &e in set {
        let (x, y) = g.endpoints(e);
        *deg.entry(x).or_default() += 1;
        *deg.entry(y).or_default() += 1;
    }
    // union-find over the subset's vertices
    let verts: Vec<Vertex> = deg.keys().copied().collect();
    let mut parent: BTreeMap<Vertex, Vertex> = verts.iter().map(|&v| (v, v)).collect();
    fn find(p: &mut BTreeMap<Vertex, Vertex>, v: Vertex) -> Vertex {
        let mut r = v;
        while p[&r] != r {
            r = p[&r];
        }
        r
    }
    for &e in set {
        let (x, y) = g.endpoints(e);
        let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
        parent.insert(rx, ry);
    }
    let root = find(&mut parent, verts[0]);
    if !verts.iter().all(|&v| find(&mut parent, v) == root) {
        return false;
    }
    let degs: Vec<usize> = deg.values().copied().collect();
    match verts.len() {
        5 => degs.iter().filter(|&&d| d == 1).count() == 2 && degs.iter().filter(|&&d| d == 2).count() == 3,
        4 => degs.iter().all(|&d| d == 2),
        _ => false,
    }
}

fn adjacent_pairs(g: &Graph) -> Vec<(usize, usize)> {
    let m = g.edge_count();
    let mut out = Vec::new();
    for a in 0..m {
        for b in a + 1..m {
            let (x, y) = g.endpoints(a);
            let (u, v) = g.endpoints(b);
            if x == u || x == v || y == u || y == v {
                out.push((a, b));
            }
        }
    }
    out
}

/// Checks a (possibly partial) coloring against precomputed structures.
pub struct NaiveChecker {
    pairs: Vec<(usize, usize)>,
    structures: Vec<[usize; 4]>,
}

impl NaiveChecker {
    pub fn new(g: &Graph) -> Self {
        NaiveChecker { pairs: adjacent_pairs(g), structures: naive_four_structures(g) }
    }

    pub fn proper(&self, colors: &[Option<Color>]) -> bool {
        self.pairs.iter().all(|&(a, b)| colors[a].is_none() || colors[a] != colors[b])
    }

    /// Fully colored structures with exactly two colors.
    pub fn bicolored_count(&self, colors: &[Option<Color>]) -> usize {
        self.structures
            .iter()
            .filter(|s| {
                let cs: Option<BTreeSet<Color>> = s.iter().map(|&e| colors[e]).collect();
                cs.is_some_and(|cs| cs.len() == 2)
            })
            .count()
    }

    pub fn is_star(&self, colors: &[Option<Color>]) -> bool {
        self.proper(colors) && self.bicolored_count(colors) == 0
    }
}

pub fn naive_is_star(g: &Graph, coloring: &EdgeColoring) -> bool {
    NaiveChecker::new(g).is_star(coloring.assignment())
}

/// Star chromatic index by visiting every set partition of the edges
/// (restricted growth strings) and keeping the smallest valid block count.
pub fn naive_star_chromatic_index(g: &Graph) -> Color {
    let m = g.edge_count();
    let checker = NaiveChecker::new(g);
    let mut colors: Vec<Option<Color>> = vec![None; m];
    let mut best = m as Color;

    fn visit(i: usize, used: Color, colors: &mut Vec<Option<Color>>, checker: &NaiveChecker, best: &mut Color) {
        if i == colors.len() {
            if used < *best && checker.is_star(colors) {
                *best = used;
            }
            return;
        }
        for c in 1..=used + 1 {
            colors[i] = Some(c);
            visit(i + 1, used.max(c), colors, checker, best);
        }
        colors[i] = None;
    }

    visit(0, 0, &mut colors, &checker, &mut best);
    best
}

/// Canonical form of a plane tree up to re-rooting, rotation and reflection:
/// the smallest up/down step sequence of the boundary walk around the
/// embedding, over every starting dart and both orientations.
pub fn oracle_canonical(tree: &PlaneTree) -> Vec<u8> {
    let rotation = tree.rotation();
    let n = rotation.len();
    let darts: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| rotation[u].iter().map(move |&v| (u, v))).collect();
    let mut best: Option<Vec<u8>> = None;
    for &start in &darts {
        for reflect in [false, true] {
            let mut seq = Vec::with_capacity(2 * (n - 1));
            let mut depth: BTreeMap<Vertex, usize> = BTreeMap::from([(start.0, 0)]);
            let (mut u, mut v) = start;
            for _ in 0..2 * (n - 1) {
                let down = !depth.contains_key(&v);
                if down {
                    depth.insert(v, depth[&u] + 1);
                }
                seq.push(if down { 1 } else { 0 });
                let around = &rotation[v];
                let k = around.len();
                let at = around.iter().position(|&w| w == u).unwrap();
                let next = if reflect { around[(at + k - 1) % k] } else { around[(at + 1) % k] };
                u = v;
                v = next;
            }
            if best.as_ref().is_none_or(|b| seq < *b) {
                best = Some(seq);
            }
        }
    }
    best.unwrap_or_default()
}

/// A full binary plane tree as nested child lists.
#[derive(Clone, Debug)]
pub enum Bin {
    Leaf,
    Node(Box<Bin>, Box<Bin>),
}

pub fn full_binary_trees(leaves: usize) -> Vec<Bin> {
    if leaves == 1 {
        return vec![Bin::Leaf];
    }
    let mut out = Vec::new();
    for left in 1..leaves {
        for l in full_binary_trees(left) {
            for r in full_binary_trees(leaves - left) {
                out.push(Bin::Node(Box::new(l.clone()), Box::new(r.clone())));
            }
        }
    }
    out
}

/// The plane cubic tree obtained by hanging `bin` below one extra leaf.
pub fn cubic_from_binary(bin: &Bin) -> PlaneTree {
    fn build(b: &Bin, children: &mut Vec<Vec<Vertex>>) -> Vertex {
        let v = children.len();
        children.push(Vec::new());
        if let Bin::Node(l, r) = b {
            let a = build(l, children);
            let c = build(r, children);
            children[v] = vec![a, c];
        }
        v
    }
    let mut children = vec![Vec::new()];
    let top = build(bin, &mut children);
    children[0] = vec![top];
    // re-root at the internal vertex so the root is not a leaf
    PlaneTree::new(0, children).unwrap().reroot(top).unwrap()
}

/// Number of pairwise non-isomorphic plane cubic trees with exactly
/// `leaves` leaves.
pub fn cubic_tree_count(leaves: usize) -> usize {
    if leaves < 3 {
        return 0;
    }
    full_binary_trees(leaves - 1)
        .iter()
        .map(|b| oracle_canonical(&cubic_from_binary(b)))
        .collect::<BTreeSet<_>>()
        .len()
}

/// Tree diameter (in edges) by two breadth-first searches.
pub fn double_bfs_diameter(g: &HalinGraph) -> usize {
    let far = |s: Vertex| {
        let n = g.graph().vertex_count();
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        let mut last = s;
        while let Some(x) = queue.pop_front() {
            last = if dist[x] > dist[last] { x } else { last };
            for (y, _) in g.tree_incident(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        (last, dist[last])
    };
    let (a, _) = far(0);
    far(a).1
}

/// Leaves next to `v` that have a cycle neighbor hanging from another vertex.
pub fn naive_ln_d(g: &HalinGraph, v: Vertex) -> usize {
    g.tree_incident(v)
        .map(|(w, _)| w)
        .filter(|&w| g.is_leaf(w))
        .filter(|&w| {
            let (p, n) = g.cycle_neighbors(w);
            g.leaf_neighbor(p) != v || g.leaf_neighbor(n) != v
        })
        .count()
}

/// Every plane tree with internal degrees in `3..=max_degree` whose Halin
/// graph has at most `max_edges` edges, one per isomorphism class. Grown by
/// turning leaves into internal vertices, deduplicated with
/// [`oracle_canonical`].
pub fn small_halin_trees(max_degree: usize, max_edges: usize) -> Vec<PlaneTree> {
    let halin_edges = |t: &PlaneTree| t.vertex_count() - 1 + t.leaves().len();
    let mut seen = BTreeSet::new();
    let mut frontier = Vec::new();
    for d in 3..=max_degree {
        let star = PlaneTree::new(0, vec![(1..=d).collect()].into_iter().chain((0..d).map(|_| Vec::new())).collect())
            .unwrap();
        if halin_edges(&star) <= max_edges && seen.insert(oracle_canonical(&star)) {
            frontier.push(star);
        }
    }
    let mut all = frontier.clone();
    while let Some(t) = frontier.pop() {
        for leaf in t.leaves() {
            for d in 3..=max_degree {
                let mut children: Vec<Vec<Vertex>> = (0..t.vertex_count()).map(|v| t.children(v).to_vec()).collect();
                let first = children.len();
                children[leaf] = (first..first + d - 1).collect();
                children.extend((0..d - 1).map(|_| Vec::new()));
                let grown = PlaneTree::new(t.root(), children).unwrap();
                if halin_edges(&grown) <= max_edges && seen.insert(oracle_canonical(&grown)) {
                    frontier.push(grown.clone());
                    all.push(grown);
                }
            }
        }
    }
    all
}
