//! Seeded generation of Halin instance families.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Vertex;
use crate::tree::PlaneTree;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Wheel,
    CubicRandom,
    BoundedDeltaRandom,
    Figure1Neighborhood,
    Figure2a,
    Figure2b,
    EllThreeCubic,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Wheel,
        Family::CubicRandom,
        Family::BoundedDeltaRandom,
        Family::Figure1Neighborhood,
        Family::Figure2a,
        Family::Figure2b,
        Family::EllThreeCubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Wheel => "wheel",
            Family::CubicRandom => "cubicRandom",
            Family::BoundedDeltaRandom => "boundedDeltaRandom",
            Family::Figure1Neighborhood => "figure1Neighborhood",
            Family::Figure2a => "figure2a",
            Family::Figure2b => "figure2b",
            Family::EllThreeCubic => "ellThreeCubic",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| GenError::InvalidSpec(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),
}

/// Parameters for [`generate`].
///
/// * `wheel`: `n` spokes (≥ 3).
/// * `cubicRandom`: `n` internal vertices (≥ 1).
/// * `boundedDeltaRandom`: at most `n` vertices, maximum degree exactly `delta` (≥ 4).
/// * `figure1Neighborhood`: `n` selects the reduction case, 1 or 2.
/// * the remaining families are fixed shapes.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GenSpec {
    pub family: Family,
    pub n: usize,
    pub delta: usize,
    pub seed: u64,
}

impl GenSpec {
    pub fn new(family: Family, n: usize, delta: usize, seed: u64) -> Self {
        GenSpec { family, n, delta, seed }
    }
}

fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidSpec(msg.into())
}

/// Child-list builder; vertex 0 is the root.
struct Grower {
    children: Vec<Vec<Vertex>>,
}

impl Grower {
    fn star(k: usize) -> Self {
        let mut children = vec![(1..=k).collect::<Vec<_>>()];
        children.extend((0..k).map(|_| Vec::new()));
        Grower { children }
    }

    fn expand(&mut self, leaf: Vertex, new_children: usize) {
        let first = self.children.len();
        self.children[leaf] = (first..first + new_children).collect();
        self.children.extend((0..new_children).map(|_| Vec::new()));
    }

    fn leaves(&self) -> Vec<Vertex> {
        (0..self.children.len()).filter(|&v| v != 0 && self.children[v].is_empty()).collect()
    }

    fn finish(self, rng: Option<&mut ChaCha8Rng>) -> PlaneTree {
        let tree = PlaneTree::new(0, self.children).expect("growth keeps a tree");
        let tree = match rng {
            Some(rng) => {
                let internal = tree.internal_vertices();
                let root = internal[rng.gen_range(0..internal.len())];
                tree.reroot(root).expect("internal vertex")
            }
            None => tree,
        };
        tree.relabel_preorder().0
    }
}

fn from_children(children: Vec<Vec<Vertex>>) -> PlaneTree {
    PlaneTree::new(0, children).expect("fixed shape").relabel_preorder().0
}

pub fn generate(spec: &GenSpec) -> Result<PlaneTree, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    match spec.family {
        Family::Wheel => {
            if spec.n < 3 {
                return Err(invalid("wheel needs n >= 3 spokes"));
            }
            Ok(Grower::star(spec.n).finish(None))
        }
        Family::CubicRandom => {
            if spec.n < 1 {
                return Err(invalid("cubicRandom needs at least one internal vertex"));
            }
            let mut g = Grower::star(3);
            for _ in 1..spec.n {
                let leaves = g.leaves();
                let leaf = leaves[rng.gen_range(0..leaves.len())];
                g.expand(leaf, 2);
            }
            Ok(g.finish(Some(&mut rng)))
        }
        Family::BoundedDeltaRandom => {
            let delta = spec.delta;
            if delta < 4 {
                return Err(invalid("boundedDeltaRandom needs delta >= 4"));
            }
            if spec.n < delta + 1 {
                return Err(invalid(format!("boundedDeltaRandom with delta {delta} needs n >= {}", delta + 1)));
            }
            let mut g = Grower::star(delta);
            loop {
                let budget = spec.n - g.children.len();
                if budget < 2 {
                    break;
                }
                let degree = rng.gen_range(3..=delta.min(budget + 1));
                let leaves = g.leaves();
                let leaf = leaves[rng.gen_range(0..leaves.len())];
                g.expand(leaf, degree - 1);
                // stop early now and then so sizes vary below the cap
                if rng.gen_ratio(1, 8) {
                    break;
                }
            }
            Ok(g.finish(Some(&mut rng)))
        }
        Family::Figure1Neighborhood => match spec.n {
            // u=0: v=1 (leaves 2, 3), leaf y1=4, w=5 (leaves 6, 7)
            1 => Ok(from_children(vec![
                vec![1, 4, 5],
                vec![2, 3],
                vec![],
                vec![],
                vec![],
                vec![6, 7],
                vec![],
                vec![],
            ])),
            // u=0: v=1 (leaves 2, 3), y3=4 (leaves y1=5, y2=6), w=7 (leaves 8, 9)
            2 => Ok(from_children(vec![
                vec![1, 4, 7],
                vec![2, 3],
                vec![],
                vec![],
                vec![5, 6],
                vec![],
                vec![],
                vec![8, 9],
                vec![],
                vec![],
            ])),
            _ => Err(invalid("figure1Neighborhood takes n = 1 (leaf y1) or n = 2 (internal y3)")),
        },
        // hub v of degree 5: leaf, (internal, 2 leaves), leaf, leaf, (internal, 2 leaves)
        Family::Figure2a => Ok(from_children(vec![
            vec![1, 2, 5, 6, 7],
            vec![],
            vec![3, 4],
            vec![],
            vec![],
            vec![],
            vec![],
            vec![8, 9],
            vec![],
            vec![],
        ])),
        // hub v of degree 6: two leaf pairs separated by internal vertices
        Family::Figure2b => Ok(from_children(vec![
            vec![1, 2, 5, 6, 7, 10],
            vec![],
            vec![3, 4],
            vec![],
            vec![],
            vec![],
            vec![],
            vec![8, 9],
            vec![],
            vec![],
            vec![],
        ])),
        Family::EllThreeCubic => {
            Ok(from_children(vec![vec![1, 2, 3], vec![], vec![], vec![4, 5], vec![], vec![]]))
        }
    }
}

fn encode_from(rotation: &[Vec<Vertex>], v: Vertex, parent: Vertex, out: &mut String) {
    out.push('(');
    let nbrs = &rotation[v];
    let at = nbrs.iter().position(|&w| w == parent).expect("parent is a neighbor");
    for i in 1..nbrs.len() {
        encode_from(rotation, nbrs[(at + i) % nbrs.len()], v, out);
    }
    out.push(')');
}

/// Canonical code of the unrooted plane tree up to rotation, re-rooting and
/// reflection: the smallest parenthesis encoding over every root and every
/// starting neighbor, for the tree and its mirror image.
pub fn canonical_code(tree: &PlaneTree) -> String {
    let mut best: Option<String> = None;
    for t in [tree.clone(), tree.mirrored()] {
        let rotation = t.rotation();
        for r in 0..t.vertex_count() {
            let nbrs = &rotation[r];
            for start in 0..nbrs.len() {
                let mut s = String::from("(");
                for i in 0..nbrs.len() {
                    encode_from(&rotation, nbrs[(start + i) % nbrs.len()], r, &mut s);
                }
                s.push(')');
                if best.as_ref().is_none_or(|b| s < *b) {
                    best = Some(s);
                }
            }
        }
    }
    best.unwrap_or_default()
}

/// Rebuilds a tree from a canonical code.
pub fn tree_from_code(code: &str) -> PlaneTree {
    let mut children: Vec<Vec<Vertex>> = Vec::new();
    let mut stack: Vec<Vertex> = Vec::new();
    for ch in code.chars() {
        match ch {
            '(' => {
                let v = children.len();
                children.push(Vec::new());
                if let Some(&p) = stack.last() {
                    children[p].push(v);
                }
                stack.push(v);
            }
            ')' => {
                stack.pop();
            }
            _ => {}
        }
    }
    PlaneTree::new(0, children).expect("well-formed code").relabel_preorder().0
}

/// Every plane cubic tree (internal degrees exactly 3) with at most
/// `max_leaves` leaves, once per isomorphism class of the embedding, ordered
/// by leaf count and then canonical code. Rooted at the first internal
/// vertex of the canonical code.
pub fn enumerate_small_cubic_halin(max_leaves: usize) -> Vec<PlaneTree> {
    assert!(max_leaves <= 12, "exhaustive enumeration is limited to 12 leaves");
    if max_leaves < 3 {
        return Vec::new();
    }
    let mut level: BTreeSet<String> = BTreeSet::from([canonical_code(&Grower::star(3).finish(None))]);
    let mut out: Vec<PlaneTree> = level.iter().map(|c| rooted_internal(c)).collect();
    for _ in 4..=max_leaves {
        let mut next = BTreeSet::new();
        for code in &level {
            let tree = tree_from_code(code);
            for leaf in tree.leaves() {
                let mut children: Vec<Vec<Vertex>> =
                    (0..tree.vertex_count()).map(|v| tree.children(v).to_vec()).collect();
                let first = children.len();
                children[leaf].extend([first, first + 1]);
                children.extend([Vec::new(), Vec::new()]);
                let grown = PlaneTree::new(tree.root(), children).expect("expansion keeps a tree");
                next.insert(canonical_code(&grown));
            }
        }
        out.extend(next.iter().map(|c| rooted_internal(c)));
        level = next;
    }
    out
}

/// The code's tree, rerooted at an internal vertex when the code starts at a
/// leaf.
fn rooted_internal(code: &str) -> PlaneTree {
    let tree = tree_from_code(code);
    if !tree.is_leaf(tree.root()) {
        return tree;
    }
    let root = tree.internal_vertices()[0];
    tree.reroot(root).expect("internal vertex").relabel_preorder().0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::halin::{build_halin, classify_cycle_edges, ln_d, longest_tree_path};

    #[test]
    fn wheel_three_is_k4_tree() {
        let t = generate(&GenSpec::new(Family::Wheel, 3, 0, 0)).unwrap();
        assert_eq!(t.vertex_count(), 4);
        assert_eq!(t.children(0), &[1, 2, 3]);
    }

    #[test]
    fn ell_three_shape() {
        let t = generate(&GenSpec::new(Family::EllThreeCubic, 0, 0, 0)).unwrap();
        assert_eq!(t.internal_vertices().len(), 2);
        assert_eq!(t.leaves().len(), 4);
        let g = build_halin(t).unwrap();
        assert!(g.is_cubic());
        assert_eq!(longest_tree_path(&g).len() - 1, 3);
    }

    #[test]
    fn figure2_hubs_reach_the_ln_d_maximum() {
        for (family, delta, cd) in [(Family::Figure2a, 5, 4), (Family::Figure2b, 6, 4)] {
            let g = build_halin(generate(&GenSpec::new(family, 0, 0, 0)).unwrap()).unwrap();
            assert_eq!(g.max_degree(), delta);
            let class = classify_cycle_edges(&g);
            assert_eq!(class.different_parent.len(), cd);
            let hub = (0..g.graph().vertex_count()).find(|&v| g.graph().degree(v) == delta).unwrap();
            assert_eq!(ln_d(&g, &class, hub).unwrap().len(), delta / 2 + 1);
        }
    }

    #[test]
    fn random_families_are_deterministic_and_in_class() {
        for seed in 0..20 {
            let spec = GenSpec::new(Family::CubicRandom, 9, 0, seed);
            let t = generate(&spec).unwrap();
            assert_eq!(t, generate(&spec).unwrap());
            assert_eq!(t.vertex_count(), 20);
            assert!(build_halin(t).unwrap().is_cubic());

            for delta in 4..=8 {
                let spec = GenSpec::new(Family::BoundedDeltaRandom, 30, delta, seed);
                let t = generate(&spec).unwrap();
                assert!(t.vertex_count() <= 30);
                let g = build_halin(t).unwrap();
                assert_eq!(g.max_degree(), delta);
            }
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&GenSpec::new(Family::Wheel, 2, 0, 0)).is_err());
        assert!(generate(&GenSpec::new(Family::CubicRandom, 0, 0, 0)).is_err());
        assert!(generate(&GenSpec::new(Family::BoundedDeltaRandom, 30, 3, 0)).is_err());
        assert!(generate(&GenSpec::new(Family::BoundedDeltaRandom, 4, 4, 0)).is_err());
        assert!(generate(&GenSpec::new(Family::Figure1Neighborhood, 3, 0, 0)).is_err());
        assert!("nope".parse::<Family>().is_err());
        assert_eq!("wheel".parse::<Family>().unwrap(), Family::Wheel);
    }

    #[test]
    fn small_enumeration() {
        let trees = enumerate_small_cubic_halin(4);
        assert_eq!(trees.len(), 2);
        assert_eq!(trees[0].leaves().len(), 3);
        assert_eq!(trees[1].leaves().len(), 4);
        for t in enumerate_small_cubic_halin(8) {
            let g = build_halin(t).unwrap();
            assert!(g.is_cubic());
        }
    }

    #[test]
    fn canonical_code_ignores_root_and_mirror() {
        let t = generate(&GenSpec::new(Family::CubicRandom, 6, 0, 11)).unwrap();
        let code = canonical_code(&t);
        for r in t.internal_vertices() {
            assert_eq!(canonical_code(&t.reroot(r).unwrap()), code);
        }
        assert_eq!(canonical_code(&t.mirrored()), code);
    }
}
