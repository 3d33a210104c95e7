//! Star edge coloring verification.
//!
//! A coloring is a star edge coloring when it is proper and no path or cycle
//! with four edges carries only two colors. Unassigned edges never take part
//! in a violation, so partial colorings can be checked mid-construction.

use std::fmt;

use crate::coloring::{Color, EdgeColoring};
use crate::error::VerifyError;
use crate::graph::{EdgeId, Graph, Vertex};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    AdjacentSameColor,
    BicoloredP4path,
    BicoloredC4cycle,
}

impl fmt::Display for ViolationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ViolationKind::AdjacentSameColor => "AdjacentSameColor",
            ViolationKind::BicoloredP4path => "BicoloredP4path",
            ViolationKind::BicoloredC4cycle => "BicoloredC4cycle",
        })
    }
}

/// Witness that a coloring is not a star edge coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarViolation {
    pub kind: ViolationKind,
    /// Two edges for adjacency, four (in path/cycle order) otherwise.
    pub edges: Vec<EdgeId>,
    pub colors: Vec<Color>,
}

fn join<T: fmt::Display>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for StarViolation {
    /// `VIOLATION <kind> <edge-ids> <colors>`, lists comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "VIOLATION {} {} {}", self.kind, join(&self.edges), join(&self.colors))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FourShape {
    Path,
    Cycle,
}

/// A path with four edges or a cycle with four edges. `edges` lists the
/// edges in traversal order, oriented (and for cycles rotated) to the
/// lexicographically smallest representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FourWalk {
    pub edges: [EdgeId; 4],
    pub shape: FourShape,
}

fn canonical_path(edges: [EdgeId; 4]) -> [EdgeId; 4] {
    let rev = [edges[3], edges[2], edges[1], edges[0]];
    edges.min(rev)
}

fn canonical_cycle(edges: [EdgeId; 4]) -> [EdgeId; 4] {
    let mut best = edges;
    for r in 0..4 {
        let fwd = [edges[r], edges[(r + 1) % 4], edges[(r + 2) % 4], edges[(r + 3) % 4]];
        let bwd = [edges[r], edges[(r + 3) % 4], edges[(r + 2) % 4], edges[(r + 1) % 4]];
        best = best.min(fwd).min(bwd);
    }
    best
}

/// Every path with four edges (once, up to reversal) and every cycle with
/// four edges (once, up to rotation and reflection), sorted by edge tuple.
pub fn enumerate_4paths(g: &Graph) -> Vec<FourWalk> {
    let mut out = Vec::new();
    let mut verts = [0usize; 5];
    let mut edges = [0usize; 4];

    fn extend(
        g: &Graph,
        depth: usize,
        verts: &mut [Vertex; 5],
        edges: &mut [EdgeId; 4],
        out: &mut Vec<FourWalk>,
    ) {
        let cur = verts[depth];
        for &(w, e) in g.incident(cur) {
            if depth == 3 && w == verts[0] {
                edges[3] = e;
                if canonical_cycle(*edges) == *edges {
                    out.push(FourWalk { edges: *edges, shape: FourShape::Cycle });
                }
                continue;
            }
            if verts[..=depth].contains(&w) {
                continue;
            }
            verts[depth + 1] = w;
            edges[depth] = e;
            if depth == 3 {
                if canonical_path(*edges) == *edges {
                    out.push(FourWalk { edges: *edges, shape: FourShape::Path });
                }
            } else {
                extend(g, depth + 1, verts, edges, out);
            }
        }
    }

    for v in 0..g.vertex_count() {
        verts[0] = v;
        extend(g, 0, &mut verts, &mut edges, &mut out);
    }
    out.sort();
    out
}

fn check_palette(coloring: &EdgeColoring, g: &Graph) -> Result<(), VerifyError> {
    if coloring.len() != g.edge_count() {
        return Err(VerifyError::LengthMismatch { got: coloring.len(), expected: g.edge_count() });
    }
    for (e, c) in coloring.assignment().iter().enumerate() {
        if let Some(c) = *c {
            if c == 0 || c > coloring.palette() {
                return Err(VerifyError::ColorOutOfRange { edge: e, color: c, palette: coloring.palette() });
            }
        }
    }
    Ok(())
}

fn bicolored(coloring: &EdgeColoring, walk: &FourWalk) -> Option<StarViolation> {
    let c: Vec<Color> = walk.edges.iter().map(|&e| coloring.get(e)).collect::<Option<_>>()?;
    if c[0] == c[2] && c[1] == c[3] && c[0] != c[1] {
        let kind = match walk.shape {
            FourShape::Path => ViolationKind::BicoloredP4path,
            FourShape::Cycle => ViolationKind::BicoloredC4cycle,
        };
        let mut colors = vec![c[0], c[1]];
        colors.sort_unstable();
        Some(StarViolation { kind, edges: walk.edges.to_vec(), colors })
    } else {
        None
    }
}

fn adjacency_violations<'a>(g: &'a Graph, coloring: &'a EdgeColoring) -> impl Iterator<Item = StarViolation> + 'a {
    (0..g.edge_count()).flat_map(move |e| {
        let mut later: Vec<EdgeId> = g.adjacent_edges(e).filter(|&f| f > e).collect();
        later.sort_unstable();
        later.dedup();
        later.into_iter().filter_map(move |f| match (coloring.get(e), coloring.get(f)) {
            (Some(a), Some(b)) if a == b => Some(StarViolation {
                kind: ViolationKind::AdjacentSameColor,
                edges: vec![e, f],
                colors: vec![a],
            }),
            _ => None,
        })
    })
}

/// First violation in scan order: adjacent pairs by increasing `(e, f)`,
/// then four-edge paths and cycles by increasing edge tuple.
pub fn find_violation(g: &Graph, coloring: &EdgeColoring) -> Result<Option<StarViolation>, VerifyError> {
    check_palette(coloring, g)?;
    if let Some(v) = adjacency_violations(g, coloring).next() {
        return Ok(Some(v));
    }
    Ok(enumerate_4paths(g).iter().find_map(|w| bicolored(coloring, w)))
}

/// Every violation, in the same order `find_violation` scans.
pub fn find_all_violations(g: &Graph, coloring: &EdgeColoring) -> Result<Vec<StarViolation>, VerifyError> {
    check_palette(coloring, g)?;
    let mut all: Vec<StarViolation> = adjacency_violations(g, coloring).collect();
    all.extend(enumerate_4paths(g).iter().filter_map(|w| bicolored(coloring, w)));
    Ok(all)
}

/// Total and violation-free.
pub fn is_star_coloring(g: &Graph, coloring: &EdgeColoring) -> bool {
    coloring.is_total() && matches!(find_violation(g, coloring), Ok(None))
}

/// Walks from `start` alternating colors `first, second, first, ...` for up
/// to `steps` edges without reusing an edge.
fn alternating_chain(
    g: &Graph,
    coloring: &EdgeColoring,
    start: Vertex,
    first: Color,
    second: Color,
    steps: usize,
) -> Vec<(Vertex, EdgeId)> {
    let mut chain = Vec::with_capacity(steps);
    let mut cur = start;
    let mut want = first;
    while chain.len() < steps {
        let step = g
            .incident(cur)
            .iter()
            .find(|&&(_, e)| coloring.get(e) == Some(want) && chain.iter().all(|&(_, f)| f != e));
        match step {
            Some(&(w, e)) => {
                chain.push((w, e));
                cur = w;
                want = if want == first { second } else { first };
            }
            None => break,
        }
    }
    chain
}

/// Whether edge `e` (which must be colored) takes part in an adjacency
/// conflict or a bicolored four-edge path or cycle. Only structures through
/// `e` are examined, so this is the incremental form of [`find_violation`]
/// for search procedures that color one edge at a time. The colored edges
/// other than `e` must already form a proper coloring.
pub fn violates_at(g: &Graph, coloring: &EdgeColoring, e: EdgeId) -> bool {
    let Some(c) = coloring.get(e) else {
        return false;
    };
    let (x, y) = g.endpoints(e);
    let mut partners: Vec<Color> = Vec::with_capacity(g.degree(x) + g.degree(y));
    for f in g.adjacent_edges(e) {
        if let Some(d) = coloring.get(f) {
            if d == c {
                return true;
            }
            partners.push(d);
        }
    }
    partners.sort_unstable();
    partners.dedup();
    for d in partners {
        // Proper so far: at most one `d` edge at each endpoint, so the two
        // alternating chains are unique.
        let left = alternating_chain(g, coloring, x, d, c, 3);
        let right = alternating_chain(g, coloring, y, d, c, 3);
        for i in 0..=3usize {
            let j = 3 - i;
            if left.len() < i || right.len() < j {
                continue;
            }
            let mut verts: Vec<Vertex> = left[..i].iter().rev().map(|&(v, _)| v).collect();
            verts.push(x);
            verts.push(y);
            verts.extend(right[..j].iter().map(|&(v, _)| v));
            let first = verts[0];
            let last = verts[verts.len() - 1];
            let mut inner = verts.clone();
            if first == last {
                inner.pop();
            }
            inner.sort_unstable();
            inner.dedup();
            let distinct = inner.len() == if first == last { 4 } else { 5 };
            if distinct {
                return true;
            }
        }
    }
    false
}
