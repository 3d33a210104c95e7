//! Inductive 6-coloring of cubic Halin graphs.
//!
//! Take a longest tree path `u0 u1 u2 u3 ...` and name `v = u1`, `u = u2`,
//! `w = u3`. The leaves `v1, v2` of `v` are consecutive on the cycle; `x1` and
//! `y1` are their outer cycle neighbors, `y1` lying in the branch of `u` that
//! avoids `v` and `w`. Removing `v`'s branch and `u`'s third branch turns `u`
//! into a leaf between `x1` and `z`, giving a smaller cubic Halin graph. A
//! coloring of that graph, normalized so that `ux1 = 1`, `uz = 2`, `uw = 3`,
//! is extended back by fixed assignments plus a few constrained choices.
//! Induction bottoms out at `K4` (5 colors) and the 6-vertex prism (6 colors).

use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, ColorPermutation, EdgeColoring};
use crate::error::VerifyError;
use crate::finding::Finding;
use crate::graph::{EdgeId, Vertex};
use crate::halin::{longest_tree_path, HalinGraph};
use crate::tree::PlaneTree;
use crate::verify::{find_violation, violates_at, StarViolation};

pub const CUBIC_PALETTE: Color = 6;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CubicError {
    #[error("graph is not cubic (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: Vertex, degree: usize },
    #[error("base case expects longest path length {expected}, graph has {found}")]
    WrongBaseShape { expected: usize, found: usize },
    #[error("cannot locate reduction roles: {0}")]
    RoleExtractionFailed(String),
    #[error("extension failed to find a star coloring ({case}, cycle length {cycle_len})")]
    FallbackExhausted { cycle_len: usize, case: &'static str },
    #[error("construction produced an invalid coloring: {0}")]
    InternalInvariantBroken(StarViolation),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReductionCase {
    /// `u`'s third neighbor is the leaf `y1` itself (`u = y3`).
    Case1UEqualsY3,
    /// `u`'s third neighbor `y3` is internal with leaves `y1, y2`.
    Case2UNotY3,
}

impl ReductionCase {
    pub fn label(self) -> &'static str {
        match self {
            ReductionCase::Case1UEqualsY3 => "Case1",
            ReductionCase::Case2UNotY3 => "Case2",
        }
    }
}

/// Named vertices around the reduced end of the longest path.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Roles {
    pub v: Vertex,
    pub u: Vertex,
    pub w: Vertex,
    pub v1: Vertex,
    pub v2: Vertex,
    pub x1: Vertex,
    pub x2: Vertex,
    pub x3: Vertex,
    pub y1: Vertex,
    /// Cycle neighbor of `y1` away from `v2` (equals `z` in case 1).
    pub y2: Vertex,
    /// Tree neighbor of `y1` (equals `u` in case 1).
    pub y3: Vertex,
    pub z: Vertex,
}

/// One reduction step `G -> G'`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionFrame {
    pub roles: Roles,
    pub case: ReductionCase,
    /// `v2` precedes `v1` in cycle order, i.e. the roles were mirrored.
    pub mirrored: bool,
    pub removed_vertices: Vec<Vertex>,
    /// Edges of `G` absent from `G'`, as vertex pairs of `G`.
    pub removed_edges: Vec<(Vertex, Vertex)>,
    /// Edges of `G'` absent from `G`, as vertex pairs of `G`.
    pub added_edges: Vec<(Vertex, Vertex)>,
    /// Vertex of `G'` for every surviving vertex of `G`.
    pub vertex_map: Vec<Option<Vertex>>,
    pub cycle_len: usize,
    pub reduced_cycle_len: usize,
}

impl fmt::Display for ReductionFrame {
    /// One JSON-like line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.roles;
        write!(
            f,
            "{{\"case\":\"{}\",\"mirrored\":{},\"cycle\":{},\"reduced_cycle\":{},\
             \"v\":{},\"u\":{},\"w\":{},\"v1\":{},\"v2\":{},\"x1\":{},\"x2\":{},\"x3\":{},\
             \"y1\":{},\"y2\":{},\"y3\":{},\"z\":{},\"removed\":{:?}}}",
            self.case.label(),
            self.mirrored,
            self.cycle_len,
            self.reduced_cycle_len,
            r.v,
            r.u,
            r.w,
            r.v1,
            r.v2,
            r.x1,
            r.x2,
            r.x3,
            r.y1,
            r.y2,
            r.y3,
            r.z,
            self.removed_vertices
        )
    }
}

/// Output of [`color_cubic`].
#[derive(Clone, Debug)]
pub struct CubicOutcome {
    pub coloring: EdgeColoring,
    pub frames: Vec<ReductionFrame>,
    pub findings: Vec<Finding>,
}

fn check_cubic(g: &HalinGraph) -> Result<(), CubicError> {
    let graph = g.graph();
    match (0..graph.vertex_count()).find(|&v| graph.degree(v) != 3) {
        Some(v) => Err(CubicError::NotCubic { vertex: v, degree: graph.degree(v) }),
        None => Ok(()),
    }
}

fn edge(g: &HalinGraph, a: Vertex, b: Vertex) -> EdgeId {
    g.graph().edge_between(a, b).expect("edge named by a role table exists")
}

fn other_cycle_neighbor(g: &HalinGraph, leaf: Vertex, not: Vertex) -> Vertex {
    let (p, n) = g.cycle_neighbors(leaf);
    if p == not {
        n
    } else {
        p
    }
}

/// Hand-built colorings of the two base shapes: `K4` with 5 colors and the
/// prism (longest path 3) with 6 colors.
pub fn base_case(g: &HalinGraph, ell: usize) -> Result<EdgeColoring, CubicError> {
    check_cubic(g)?;
    let found = longest_tree_path(g).len() - 1;
    if found != ell || !(ell == 2 || ell == 3) {
        return Err(CubicError::WrongBaseShape { expected: ell, found });
    }
    let mut c = EdgeColoring::empty(g.edge_count(), CUBIC_PALETTE);
    let leaves = g.cycle_vertices();
    if ell == 2 {
        let hub = g.leaf_neighbor(leaves[0]);
        let (l0, l1, l2) = (leaves[0], leaves[1], leaves[2]);
        // hub-l0 and l1-l2 form the only repeated color class
        for (a, b, col) in [(hub, l0, 1), (hub, l1, 2), (hub, l2, 3), (l0, l1, 4), (l1, l2, 1), (l2, l0, 5)] {
            c.set(edge(g, a, b), col);
        }
    } else {
        let a1 = *leaves
            .iter()
            .find(|&&l| {
                let (_, next) = g.cycle_neighbors(l);
                g.leaf_neighbor(l) == g.leaf_neighbor(next)
            })
            .expect("prism has a same-parent cycle edge");
        let a2 = g.cycle_neighbors(a1).1;
        let b1 = g.cycle_neighbors(a2).1;
        let b2 = g.cycle_neighbors(b1).1;
        let (a, b) = (g.leaf_neighbor(a1), g.leaf_neighbor(b1));
        for (p, q, col) in [
            (a, a1, 1),
            (a, a2, 2),
            (a, b, 3),
            (b, b1, 1),
            (b, b2, 2),
            (a1, a2, 4),
            (a2, b1, 5),
            (b1, b2, 4),
            (b2, a1, 6),
        ] {
            c.set(edge(g, p, q), col);
        }
    }
    if let Some(v) = find_violation(g.graph(), &c)? {
        return Err(CubicError::InternalInvariantBroken(v));
    }
    Ok(c)
}

fn locate_roles(g: &HalinGraph, path: &[Vertex]) -> Result<(Roles, ReductionCase, bool), CubicError> {
    let fail = |msg: String| Err(CubicError::RoleExtractionFailed(msg));
    if path.len() < 5 {
        return fail(format!("path of length {} is shorter than 4", path.len().saturating_sub(1)));
    }
    let (v, u, w) = (path[1], path[2], path[3]);
    let v_leaves: Vec<Vertex> = g.tree_incident(v).map(|(x, _)| x).filter(|&x| x != u).collect();
    if v_leaves.len() != 2 || !v_leaves.iter().all(|&x| g.is_leaf(x)) {
        return fail(format!("neighbors of v={v} other than u={u} are not two leaves"));
    }
    let Some(q) = g.tree_incident(u).map(|(x, _)| x).find(|&x| x != v && x != w) else {
        return fail(format!("u={u} has no third neighbor"));
    };
    let in_q_branch = |x: Vertex| x == q || (g.is_leaf(x) && g.leaf_neighbor(x) == q);
    let mut found = None;
    for (i, &l) in v_leaves.iter().enumerate() {
        let sibling = v_leaves[1 - i];
        let (prev, next) = g.cycle_neighbors(l);
        if prev != sibling && next != sibling {
            return fail(format!("leaves of v={v} are not consecutive on the cycle"));
        }
        let outer = other_cycle_neighbor(g, l, sibling);
        if in_q_branch(outer) {
            found = Some((sibling, l, outer));
        }
    }
    let Some((v1, v2, y1)) = found else {
        return fail(format!("no leaf of v={v} borders the branch of u={u} through {q}"));
    };
    let x1 = other_cycle_neighbor(g, v1, v2);
    let x2 = other_cycle_neighbor(g, x1, v1);
    let x3 = g.leaf_neighbor(x1);
    let mirrored = g.cycle_neighbors(v1).1 != v2;
    if q == y1 {
        let z = other_cycle_neighbor(g, y1, v2);
        let roles = Roles { v, u, w, v1, v2, x1, x2, x3, y1, y2: z, y3: u, z };
        return Ok((roles, ReductionCase::Case1UEqualsY3, mirrored));
    }
    let y3 = q;
    let Some(y2) = g.tree_incident(y3).map(|(x, _)| x).find(|&x| x != u && x != y1) else {
        return fail(format!("y3={y3} has no second leaf"));
    };
    if !g.is_leaf(y2) || other_cycle_neighbor(g, y1, v2) != y2 {
        return fail(format!("y3={y3} does not carry two consecutive leaves"));
    }
    let z = other_cycle_neighbor(g, y2, y1);
    let roles = Roles { v, u, w, v1, v2, x1, x2, x3, y1, y2, y3, z };
    Ok((roles, ReductionCase::Case2UNotY3, mirrored))
}

/// Builds `G'` from `G` for the longest path `path` (`path[1] = v`,
/// `path[2] = u`, `path[3] = w`).
pub fn reduce(g: &HalinGraph, path: &[Vertex]) -> Result<(HalinGraph, ReductionFrame), CubicError> {
    check_cubic(g)?;
    let (roles, case, mirrored) = locate_roles(g, path)?;
    let Roles { v, u, w, v1, v2, x1, y1, y2, y3, z, .. } = roles;
    let removed_vertices = match case {
        ReductionCase::Case1UEqualsY3 => vec![v, v1, v2, y1],
        ReductionCase::Case2UNotY3 => vec![v, v1, v2, y1, y2, y3],
    };
    let n = g.graph().vertex_count();
    let mut gone = vec![false; n];
    for &x in &removed_vertices {
        gone[x] = true;
    }
    let removed_edges: Vec<(Vertex, Vertex)> =
        g.graph().edges().iter().copied().filter(|&(a, b)| gone[a] || gone[b]).collect();

    let mut compact = vec![None; n];
    let mut next = 0;
    for x in 0..n {
        if !gone[x] {
            compact[x] = Some(next);
            next += 1;
        }
    }
    let rotation: Vec<Vec<Vertex>> = (0..n)
        .filter(|&x| !gone[x])
        .map(|x| g.tree().rotation_at(x).into_iter().filter_map(|y| compact[y]).collect())
        .collect();
    let root = compact[w].expect("w survives");
    let tree = PlaneTree::from_rotation(root, &rotation)
        .map_err(|e| CubicError::RoleExtractionFailed(format!("reduced tree invalid: {e}")))?;
    let (tree, relabel) = tree.relabel_preorder();
    let vertex_map: Vec<Option<Vertex>> = compact.iter().map(|c| c.map(|c| relabel[c])).collect();
    let reduced = HalinGraph::new(tree)
        .map_err(|e| CubicError::RoleExtractionFailed(format!("reduced graph is not Halin: {e}")))?;

    let (ur, x1r, zr) = (vertex_map[u].unwrap(), vertex_map[x1].unwrap(), vertex_map[z].unwrap());
    let (p, q) = reduced.cycle_neighbors(ur);
    if !((p == x1r && q == zr) || (p == zr && q == x1r)) {
        return Err(CubicError::RoleExtractionFailed(format!(
            "u={u} does not sit between x1={x1} and z={z} in the reduced cycle"
        )));
    }
    let frame = ReductionFrame {
        roles,
        case,
        mirrored,
        removed_vertices,
        removed_edges,
        added_edges: vec![(u, x1), (u, z)],
        vertex_map,
        cycle_len: g.cycle_len(),
        reduced_cycle_len: reduced.cycle_len(),
    };
    Ok((reduced, frame))
}

/// A constrained pick: a color for `edge` outside `excluded` and outside the
/// colors already picked for the slots in `after`.
struct Slot {
    name: &'static str,
    edge: EdgeId,
    excluded: Vec<Color>,
    after: Vec<usize>,
}

fn allowed(slot: &Slot, picks: &[Color]) -> Vec<Color> {
    (1..=CUBIC_PALETTE)
        .filter(|c| !slot.excluded.contains(c) && slot.after.iter().all(|&i| picks[i] != *c))
        .collect()
}

/// Colors on the edges at `x` other than `skip`, read from `coloring`.
fn colors_at(g: &HalinGraph, coloring: &EdgeColoring, x: Vertex, skip: &[Vertex]) -> Vec<Color> {
    g.graph()
        .incident(x)
        .iter()
        .filter(|(y, _)| !skip.contains(y))
        .filter_map(|&(_, e)| coloring.get(e))
        .collect()
}

fn search_slots(g: &HalinGraph, coloring: &mut EdgeColoring, slots: &[Slot], picks: &mut Vec<Color>) -> bool {
    let i = picks.len();
    if i == slots.len() {
        return true;
    }
    for c in allowed(&slots[i], picks) {
        coloring.set(slots[i].edge, c);
        picks.push(c);
        if !violates_at(g.graph(), coloring, slots[i].edge) && search_slots(g, coloring, slots, picks) {
            return true;
        }
        picks.pop();
    }
    coloring.clear(slots[i].edge);
    false
}

fn search_free(g: &HalinGraph, coloring: &mut EdgeColoring, edges: &[EdgeId]) -> bool {
    let Some((&e, rest)) = edges.split_first() else {
        return true;
    };
    for c in 1..=CUBIC_PALETTE {
        coloring.set(e, c);
        if !violates_at(g.graph(), coloring, e) && search_free(g, coloring, rest) {
            return true;
        }
    }
    coloring.clear(e);
    false
}

/// Lifts a star coloring of `G'` (the graph `frame` reduced `g` to) back to
/// `g`.
pub fn extend(
    g: &HalinGraph,
    reduced: &HalinGraph,
    reduced_coloring: &EdgeColoring,
    frame: &ReductionFrame,
    findings: &mut Vec<Finding>,
) -> Result<EdgeColoring, CubicError> {
    let Roles { v, u, w, v1, v2, x1, y1, y2, y3, z, .. } = frame.roles;
    let map = |x: Vertex| frame.vertex_map[x].expect("role survives the reduction");
    let reduced_edge = |a: Vertex, b: Vertex| reduced.graph().edge_between(map(a), map(b)).expect("edge of G'");
    let color_of = |e: EdgeId| reduced_coloring.get(e).expect("G' coloring is total");
    let perm = ColorPermutation::sending(
        CUBIC_PALETTE,
        &[
            (color_of(reduced_edge(u, x1)), 1),
            (color_of(reduced_edge(u, z)), 2),
            (color_of(reduced_edge(u, w)), 3),
        ],
    )
    .expect("edges at u carry distinct colors");
    let normalized = perm.apply_to(reduced_coloring);

    let mut coloring = EdgeColoring::empty(g.edge_count(), CUBIC_PALETTE);
    for (e, &(a, b)) in g.graph().edges().iter().enumerate() {
        if let (Some(ra), Some(rb)) = (frame.vertex_map[a], frame.vertex_map[b]) {
            if let Some(re) = reduced.graph().edge_between(ra, rb) {
                coloring.set(e, normalized.get(re).expect("G' coloring is total"));
            }
        }
    }
    let r = colors_at(g, &coloring, w, &[u]);
    let s = colors_at(g, &coloring, x1, &[v1]);
    let t = colors_at(g, &coloring, z, &[y1, y2]);
    let e = |a, b| edge(g, a, b);
    let with = |base: &[Color], extra: &[Color]| base.iter().chain(extra).copied().collect::<Vec<_>>();

    let (fixed, slots): (Vec<(EdgeId, Color)>, Vec<Slot>) = match frame.case {
        ReductionCase::Case1UEqualsY3 => (
            vec![(e(v1, x1), 1), (e(v1, v2), 3), (e(v, v1), 2), (e(u, y1), 1), (e(y1, z), 2)],
            vec![
                Slot { name: "a", edge: e(u, v), excluded: with(&[1, 2, 3], &r), after: vec![] },
                Slot { name: "b", edge: e(v2, y1), excluded: with(&[1, 2, 3], &t), after: vec![] },
                Slot { name: "c", edge: e(v, v2), excluded: vec![1, 2, 3], after: vec![0, 1] },
            ],
        ),
        ReductionCase::Case2UNotY3 => (
            vec![
                (e(u, y3), 1),
                (e(u, v), 2),
                (e(v1, x1), 1),
                (e(y1, y2), 3),
                (e(y2, z), 2),
                (e(v1, v2), 3),
            ],
            vec![
                Slot { name: "a", edge: e(y2, y3), excluded: with(&[1, 2, 3], &t), after: vec![] },
                Slot { name: "b", edge: e(v, v1), excluded: with(&[1, 2, 3], &s), after: vec![] },
                Slot { name: "c", edge: e(v2, y1), excluded: vec![1, 2, 3], after: vec![0, 1] },
                Slot { name: "d", edge: e(v, v2), excluded: vec![1, 2, 3], after: vec![1, 2] },
                Slot { name: "e", edge: e(y3, y1), excluded: vec![1, 2, 3], after: vec![0, 2] },
            ],
        ),
    };
    for &(edge, c) in &fixed {
        coloring.set(edge, c);
    }
    let case = frame.case.label();
    let cycle_len = frame.cycle_len;

    let mut picks = Vec::with_capacity(slots.len());
    let mut empty = None;
    for slot in &slots {
        match allowed(slot, &picks).first() {
            Some(&c) => picks.push(c),
            None => {
                empty = Some(slot.name);
                break;
            }
        }
    }
    if let Some(slot) = empty {
        findings.push(Finding::CubicEmptyChoice { cycle_len, case, slot });
    } else {
        for (slot, &c) in slots.iter().zip(&picks) {
            coloring.set(slot.edge, c);
        }
        if find_violation(g.graph(), &coloring)?.is_none() {
            return Ok(coloring);
        }
    }

    for slot in &slots {
        coloring.clear(slot.edge);
    }
    let fixed_ok = fixed.iter().all(|&(edge, _)| !violates_at(g.graph(), &coloring, edge));
    if fixed_ok && search_slots(g, &mut coloring, &slots, &mut Vec::new()) {
        findings.push(Finding::CubicRechoice { cycle_len, case });
        return verified(g, coloring);
    }

    let removed: Vec<EdgeId> = frame.removed_edges.iter().map(|&(a, b)| e(a, b)).collect();
    for &edge in &removed {
        coloring.clear(edge);
    }
    if search_free(g, &mut coloring, &removed) {
        findings.push(Finding::CubicResearch { cycle_len, case });
        return verified(g, coloring);
    }
    Err(CubicError::FallbackExhausted { cycle_len, case })
}

fn verified(g: &HalinGraph, coloring: EdgeColoring) -> Result<EdgeColoring, CubicError> {
    match find_violation(g.graph(), &coloring)? {
        Some(v) => Err(CubicError::InternalInvariantBroken(v)),
        None if !coloring.is_total() => unreachable!("search assigns every removed edge"),
        None => Ok(coloring),
    }
}

/// Star edge coloring of a cubic Halin graph with at most 6 colors (at most 5
/// for `K4`).
pub fn color_cubic(g: &HalinGraph) -> Result<CubicOutcome, CubicError> {
    check_cubic(g)?;
    let mut findings = Vec::new();
    let mut chain: Vec<(HalinGraph, ReductionFrame)> = Vec::new();
    let mut current = g.clone();
    let mut coloring = loop {
        let path = longest_tree_path(&current);
        let ell = path.len() - 1;
        if ell <= 3 {
            break base_case(&current, ell)?;
        }
        let (reduced, frame) = reduce(&current, &path)?;
        debug_assert!(reduced.cycle_len() < current.cycle_len());
        chain.push((current, frame));
        current = reduced;
    };
    let mut frames = Vec::with_capacity(chain.len());
    while let Some((larger, frame)) = chain.pop() {
        coloring = extend(&larger, &current, &coloring, &frame, &mut findings)?;
        current = larger;
        frames.push(frame);
    }
    frames.reverse();
    if let Some(v) = find_violation(g.graph(), &coloring)? {
        return Err(CubicError::InternalInvariantBroken(v));
    }
    Ok(CubicOutcome { coloring, frames, findings })
}
