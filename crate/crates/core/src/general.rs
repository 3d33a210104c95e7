//! Star edge coloring of Halin graphs with `Δ ≥ 4` in `⌊3Δ/2⌋ + 2` colors.
//!
//! Three phases over one coloring:
//!
//! 1. A periodic pattern paints part of the cycle with the two reserved colors
//!    `a = ⌊3Δ/2⌋ + 1` and `b = ⌊3Δ/2⌋ + 2`, leaving every third or fourth
//!    edge (`⋆`) open.
//! 2. The tree is colored level by level from a maximum-degree root with
//!    colors `1..=⌊3Δ/2⌋`, giving priority to children whose leaves still have
//!    open `C_d` edges.
//! 3. Each open cycle edge gets a color outside a small forbidden set read off
//!    the tree coloring.
//!
//! `Δ = 3` is delegated to [`crate::cubic`].

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::cubic::{color_cubic, CubicError, ReductionFrame};
use crate::error::VerifyError;
use crate::exact::{is_star_colorable, ExactError, SearchConfig};
use crate::finding::Finding;
use crate::graph::{EdgeId, Graph, Vertex};
use crate::halin::{classify_cycle_edges, ln_d, CycleEdgeClass, HalinGraph};
use crate::verify::{find_violation, violates_at, StarViolation};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GeneralError {
    #[error("cycle of length {n} is shorter than the pattern prefix {k}")]
    CycleTooShortForPattern { n: usize, k: usize },
    #[error("maximum degree {0} is below 4")]
    DegreeTooSmall(usize),
    #[error("no color available for the edges below vertex {vertex}")]
    TreeColoringFailed { vertex: Vertex },
    #[error("no color available for cycle edge {edge}")]
    CompletionFailed { edge: EdgeId },
    #[error("construction produced an invalid coloring: {0}")]
    InternalInvariantBroken(StarViolation),
    #[error(transparent)]
    Cubic(#[from] CubicError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

/// `⌊3Δ/2⌋`, the tree palette size.
pub fn tree_palette(delta: usize) -> Color {
    (3 * delta / 2) as Color
}

/// `⌊3Δ/2⌋ + 2`.
pub fn halin_bound(delta: usize) -> Color {
    tree_palette(delta) + 2
}

/// Lower bound on the allowed colors at a `C_d` completion:
/// `⌊3Δ/2⌋ − 2⌈Δ/2⌉`.
pub fn margin_bound(delta: usize) -> usize {
    3 * delta / 2 - 2 * delta.div_ceil(2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PatternToken {
    A,
    B,
    Star,
}

impl fmt::Display for PatternToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PatternToken::A => "a",
            PatternToken::B => "b",
            PatternToken::Star => "*",
        })
    }
}

/// Partial coloring of the cycle `e1 .. en` with the reserved colors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternPlan {
    pub n: usize,
    /// Length of the `(a,b,a,⋆)` prefix: `(n mod 3) · 4`.
    pub k: usize,
    pub start_edge: EdgeId,
    /// Cycle edges in traversal order from `start_edge`.
    pub edges: Vec<EdgeId>,
    pub tokens: Vec<PatternToken>,
}

impl PatternPlan {
    pub fn prefix(&self) -> &[PatternToken] {
        &self.tokens[..self.k]
    }

    pub fn suffix(&self) -> &[PatternToken] {
        &self.tokens[self.k..]
    }

    /// Open edges in traversal order.
    pub fn star_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges.iter().zip(&self.tokens).filter(|(_, &t)| t == PatternToken::Star).map(|(&e, _)| e)
    }

    /// Writes `a` and `b` onto `coloring`.
    pub fn apply(&self, coloring: &mut EdgeColoring, a: Color, b: Color) {
        for (&e, t) in self.edges.iter().zip(&self.tokens) {
            match t {
                PatternToken::A => coloring.set(e, a),
                PatternToken::B => coloring.set(e, b),
                PatternToken::Star => {}
            }
        }
    }

    pub fn token_string(&self) -> String {
        self.tokens.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
    }
}

/// Cycle edges starting at the edge with the smallest `(min, max)` endpoint
/// pair, walked from its smaller endpoint to its larger one.
fn cycle_walk(g: &HalinGraph) -> Vec<EdgeId> {
    let cycle = g.cycle_edges();
    let key = |e: EdgeId| {
        let (x, y) = g.graph().endpoints(e);
        (x.min(y), x.max(y))
    };
    let i = (0..cycle.len()).min_by_key(|&i| key(cycle[i])).expect("cycle is non-empty");
    let n = cycle.len();
    let (low, _) = key(cycle[i]);
    // cycle edge i joins leaf i to leaf i + 1
    if g.cycle_vertices()[i] == low {
        (0..n).map(|j| cycle[(i + j) % n]).collect()
    } else {
        (0..n).map(|j| cycle[(i + n - j) % n]).collect()
    }
}

pub fn plan_cycle_patterns(g: &HalinGraph) -> Result<PatternPlan, GeneralError> {
    let n = g.cycle_len();
    let k = (n % 3) * 4;
    if n < k {
        return Err(GeneralError::CycleTooShortForPattern { n, k });
    }
    use PatternToken::{Star, A, B};
    let tokens: Vec<PatternToken> =
        (0..n).map(|i| if i < k { [A, B, A, Star][i % 4] } else { [A, B, Star][(i - k) % 3] }).collect();
    let edges = cycle_walk(g);
    Ok(PatternPlan { n, k, start_edge: edges[0], edges, tokens })
}

/// Per-vertex count of uncolored `C_d` edges; zero on internal vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCdTable {
    counts: Vec<u8>,
}

impl UCdTable {
    pub fn compute(g: &HalinGraph, class: &CycleEdgeClass, coloring: &EdgeColoring) -> Self {
        let counts = (0..g.graph().vertex_count())
            .map(|v| {
                g.graph()
                    .incident(v)
                    .iter()
                    .filter(|&&(_, e)| class.is_different_parent(e) && coloring.get(e).is_none())
                    .count() as u8
            })
            .collect();
        UCdTable { counts }
    }

    pub fn get(&self, v: Vertex) -> u8 {
        self.counts[v]
    }
}

/// Colors excluded for an open `C_d` edge by the tree coloring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForbiddenSet {
    /// `uu0`, `vv0`, and every `u0 ui` (resp. `v0 vi`) where `ui` already
    /// carries the color of `uu0` (resp. `vv0`).
    pub edges: Vec<EdgeId>,
    pub colors: Vec<Color>,
}

impl ForbiddenSet {
    pub fn for_edge(g: &HalinGraph, coloring: &EdgeColoring, e: EdgeId) -> Self {
        let graph = g.graph();
        let (u, v) = graph.endpoints(e);
        let mut edges = Vec::new();
        for leaf in [u, v] {
            let hub = g.leaf_neighbor(leaf);
            let spoke = graph.edge_between(leaf, hub).expect("leaf edge");
            edges.push(spoke);
            let Some(c) = coloring.get(spoke) else { continue };
            for (w, f) in g.tree_incident(hub) {
                if w != leaf && graph.incident(w).iter().any(|&(_, h)| coloring.get(h) == Some(c)) {
                    edges.push(f);
                }
            }
        }
        let mut colors: Vec<Color> = edges.iter().filter_map(|&f| coloring.get(f)).collect();
        colors.sort_unstable();
        colors.dedup();
        ForbiddenSet { edges, colors }
    }

    /// `𝒞 ∖ 𝒞′` in increasing order.
    pub fn allowed(&self, palette: Color) -> Vec<Color> {
        (1..=palette).filter(|c| !self.colors.contains(c)).collect()
    }
}

/// Allowed-color count at one `C_d` completion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Margin {
    pub edge: EdgeId,
    pub allowed: usize,
    pub required: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Cubic,
    ThreePhase,
    /// Cycle too short for the pattern; the cycle was colored by search.
    SmallCycle,
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Route::Cubic => "cubic",
            Route::ThreePhase => "three-phase",
            Route::SmallCycle => "small-cycle",
        })
    }
}

#[derive(Clone, Debug)]
pub struct HalinOutcome {
    pub coloring: EdgeColoring,
    pub bound: Color,
    pub route: Route,
    pub plan: Option<PatternPlan>,
    /// The tree phase's output: tree edges only, cycle edges unassigned.
    pub tree_coloring: Option<EdgeColoring>,
    pub margins: Vec<Margin>,
    pub frames: Vec<ReductionFrame>,
    pub findings: Vec<Finding>,
}

impl HalinOutcome {
    pub fn fallback_count(&self) -> usize {
        self.findings.iter().filter(|f| f.is_fallback()).count()
    }
}

/// Tree vertices grouped by distance from `root`, each level sorted by id,
/// together with the parent of every vertex.
fn levels(g: &HalinGraph, root: Vertex) -> (Vec<Vec<Vertex>>, Vec<Option<Vertex>>) {
    let n = g.graph().vertex_count();
    let mut parent = vec![None; n];
    let mut depth = vec![usize::MAX; n];
    depth[root] = 0;
    let mut queue = VecDeque::from([root]);
    let mut levels: Vec<Vec<Vertex>> = Vec::new();
    while let Some(x) = queue.pop_front() {
        if levels.len() <= depth[x] {
            levels.push(Vec::new());
        }
        levels[depth[x]].push(x);
        for (y, _) in g.tree_incident(x) {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                parent[y] = Some(x);
                queue.push_back(y);
            }
        }
    }
    for level in &mut levels {
        level.sort_unstable();
    }
    (levels, parent)
}

fn colors_at(graph: &Graph, coloring: &EdgeColoring, x: Vertex) -> Vec<Color> {
    graph.incident(x).iter().filter_map(|&(_, e)| coloring.get(e)).collect()
}

/// Tree colors on the spokes across the open `C_d` edges at `leaf`. Giving a
/// spoke one of these colors would turn the hub path through the open edge
/// into `c, ⋆, c`.
fn partner_spoke_colors(g: &HalinGraph, class: &CycleEdgeClass, coloring: &EdgeColoring, leaf: Vertex) -> Vec<Color> {
    if !g.is_leaf(leaf) {
        return Vec::new();
    }
    let graph = g.graph();
    graph
        .incident(leaf)
        .iter()
        .filter(|&&(_, e)| class.is_different_parent(e) && coloring.get(e).is_none())
        .filter_map(|&(other, _)| coloring.get(graph.edge_between(other, g.leaf_neighbor(other))?))
        .collect()
}

/// Re-searches the child edges of `v` when the greedy rule got stuck: first
/// alone, then together with the child edges of the siblings of `v` colored
/// before it.
fn repair_children(
    g: &HalinGraph,
    coloring: &mut EdgeColoring,
    v0: Vertex,
    v: Vertex,
    children: &[(Vertex, EdgeId)],
    palette: Color,
    findings: &mut Vec<Finding>,
) -> bool {
    let own: Vec<EdgeId> = children.iter().map(|&(_, e)| e).collect();
    let mut family: Vec<EdgeId> = g
        .tree_incident(v0)
        .map(|(s, _)| s)
        .filter(|&s| s < v && !g.is_leaf(s) && g.tree_incident(s).all(|(_, f)| coloring.get(f).is_some()))
        .flat_map(|s| g.tree_incident(s).filter(move |&(w, _)| w != v0).map(|(_, f)| f))
        .collect();
    family.extend(&own);
    for region in [own, family] {
        let start: Vec<Option<Color>> = region.iter().map(|&f| coloring.get(f)).collect();
        for &f in &region {
            coloring.clear(f);
        }
        let mut budget = REPAIR_NODE_LIMIT;
        if recolor_search(g.graph(), coloring, &region, &start, palette, &mut budget) {
            findings.push(Finding::TreeBacktrack { vertex: v, edges: region.len() });
            return true;
        }
        for (&f, &s) in region.iter().zip(&start) {
            match s {
                Some(c) => coloring.set(f, c),
                None => coloring.clear(f),
            }
        }
    }
    false
}

/// Level-order star coloring of the characteristic tree with `⌊3Δ/2⌋`
/// colors. `coloring` may already hold cycle colors outside that palette;
/// they only influence the child order through `UC_d`.
pub fn color_tree(
    g: &HalinGraph,
    class: &CycleEdgeClass,
    coloring: &mut EdgeColoring,
    findings: &mut Vec<Finding>,
) -> Result<(), GeneralError> {
    let graph = g.graph();
    let delta = g.max_degree();
    let palette = tree_palette(delta);
    let uc = UCdTable::compute(g, class, coloring);
    let root = (0..graph.vertex_count())
        .find(|&v| !g.is_leaf(v) && graph.degree(v) == delta)
        .expect("some internal vertex has maximum degree");
    let (levels, parent) = levels(g, root);

    for (i, (_, e)) in g.tree_incident(root).enumerate() {
        coloring.set(e, i as Color + 1);
    }
    for level in levels.iter().skip(1) {
        for &v in level {
            let v0 = parent[v].expect("non-root vertex has a parent");
            let mut children: Vec<(Vertex, EdgeId)> =
                g.tree_incident(v).filter(|&(w, _)| w != v0).collect();
            if children.is_empty() {
                continue;
            }
            children.sort_by_key(|&(w, _)| (std::cmp::Reverse(uc.get(w)), w));
            let m = (graph.degree(v) - 1).min(delta / 2);
            let at_parent = colors_at(graph, coloring, v0);
            let fresh: Vec<Color> = (1..=palette).filter(|c| !at_parent.contains(c)).collect();
            let mut stuck = false;
            for (i, &(w, e)) in children.iter().enumerate() {
                let mut pool: Vec<Color> = if i < m { fresh.clone() } else { (1..=palette).collect() };
                let partners = partner_spoke_colors(g, class, coloring, w);
                pool.sort_by_key(|c| partners.contains(c));
                let mut chosen = false;
                for c in pool {
                    coloring.set(e, c);
                    if !violates_at(graph, coloring, e) {
                        chosen = true;
                        break;
                    }
                }
                if !chosen {
                    coloring.clear(e);
                    stuck = true;
                    break;
                }
            }
            if stuck && !repair_children(g, coloring, v0, v, &children, palette, findings) {
                return Err(GeneralError::TreeColoringFailed { vertex: v });
            }
        }
    }
    Ok(())
}

/// Checks the claim that a vertex with `|LN_d(v)| = ⌊Δ/2⌋ + 1` keeps at most
/// `⌊Δ/2⌋` such leaves with open `C_d` edges once the pattern is in place.
pub fn check_uncolored_leaf_claim(
    g: &HalinGraph,
    class: &CycleEdgeClass,
    coloring: &EdgeColoring,
) -> Vec<Finding> {
    let half = g.max_degree() / 2;
    let uc = UCdTable::compute(g, class, coloring);
    (0..g.graph().vertex_count())
        .filter(|&v| !g.is_leaf(v))
        .filter_map(|v| {
            let lnd = ln_d(g, class, v).expect("internal vertex");
            let open = lnd.iter().filter(|&&w| uc.get(w) > 0).count();
            (lnd.len() == half + 1 && open > half).then_some(Finding::UncoloredLeafClaim { vertex: v, leaves: open })
        })
        .collect()
}

/// Candidate colors for an open cycle edge, greedy choice first.
fn completion_candidates(g: &HalinGraph, class: &CycleEdgeClass, coloring: &EdgeColoring, e: EdgeId, palette: Color) -> Vec<Color> {
    let graph = g.graph();
    if class.is_same_parent(e) {
        let (u, _) = graph.endpoints(e);
        let at_hub = colors_at(graph, coloring, g.leaf_neighbor(u));
        (1..=palette).filter(|c| !at_hub.contains(c)).collect()
    } else {
        ForbiddenSet::for_edge(g, coloring, e).allowed(palette)
    }
}

/// Search budget for one local repair.
const REPAIR_NODE_LIMIT: u64 = 200_000;

/// Recolors `edges` from `1..=palette`, trying each edge's current color
/// first. Gives up after `budget` assignments.
fn recolor_search(graph: &Graph, coloring: &mut EdgeColoring, edges: &[EdgeId], start: &[Option<Color>], palette: Color, budget: &mut u64) -> bool {
    let Some((&e, rest)) = edges.split_first() else {
        return true;
    };
    let current = start[0];
    let order = current.into_iter().chain((1..=palette).filter(|&c| Some(c) != current));
    for c in order {
        if *budget == 0 {
            break;
        }
        *budget -= 1;
        coloring.set(e, c);
        if !violates_at(graph, coloring, e) && recolor_search(graph, coloring, rest, &start[1..], palette, budget) {
            return true;
        }
    }
    coloring.clear(e);
    false
}

/// Tree and open cycle edges within `radius` tree steps of the hubs of `e`,
/// tree edges first.
fn repair_region(g: &HalinGraph, e: EdgeId, open: &[EdgeId], radius: usize) -> Vec<EdgeId> {
    let graph = g.graph();
    let (u, v) = graph.endpoints(e);
    let mut near = vec![g.leaf_neighbor(u), g.leaf_neighbor(v)];
    let mut frontier = near.clone();
    for _ in 1..radius {
        let next: Vec<Vertex> = frontier
            .iter()
            .flat_map(|&x| g.tree_incident(x).map(|(y, _)| y))
            .filter(|&y| !g.is_leaf(y) && !near.contains(&y))
            .collect();
        near.extend(&next);
        frontier = next;
    }
    let mut tree: Vec<EdgeId> = near.iter().flat_map(|&x| g.tree_incident(x).map(|(_, f)| f)).collect();
    tree.sort_unstable();
    tree.dedup();
    let leaves: Vec<Vertex> = tree
        .iter()
        .flat_map(|&f| {
            let (x, y) = graph.endpoints(f);
            [x, y]
        })
        .filter(|&x| g.is_leaf(x))
        .collect();
    let mut cycle: Vec<EdgeId> = open
        .iter()
        .copied()
        .filter(|&f| {
            let (x, y) = graph.endpoints(f);
            f == e || leaves.contains(&x) || leaves.contains(&y)
        })
        .collect();
    cycle.sort_unstable();
    cycle.dedup();
    tree.extend(cycle);
    tree
}

/// Colors the open cycle edges in traversal order. Each edge takes the
/// smallest color of its rule (same-parent or forbidden-set) that the
/// verifier accepts locally, then any other color of `𝒞`. When nothing in
/// `𝒞` fits, the tree edges around the edge's hubs are recolored together
/// with the nearby open edges.
pub fn complete_cycle(
    g: &HalinGraph,
    class: &CycleEdgeClass,
    plan: &PatternPlan,
    coloring: &mut EdgeColoring,
    margins: &mut Vec<Margin>,
    findings: &mut Vec<Finding>,
) -> Result<(), GeneralError> {
    let graph = g.graph();
    let delta = g.max_degree();
    let palette = tree_palette(delta);
    let required = margin_bound(delta);
    let open: Vec<EdgeId> = plan.star_edges().collect();
    for &e in &open {
        if class.is_different_parent(e) {
            let allowed = ForbiddenSet::for_edge(g, coloring, e).allowed(palette).len();
            margins.push(Margin { edge: e, allowed, required });
            if allowed < required || allowed == 0 {
                findings.push(Finding::MarginShortfall { edge: e, allowed, required });
            }
        }
    }
    for &e in &open {
        let rule = completion_candidates(g, class, coloring, e, palette);
        let fits = |coloring: &mut EdgeColoring, c: Color| {
            coloring.set(e, c);
            let ok = !violates_at(graph, coloring, e);
            if !ok {
                coloring.clear(e);
            }
            ok
        };
        if rule.iter().any(|&c| fits(coloring, c)) {
            continue;
        }
        if (1..=palette).filter(|c| !rule.contains(c)).any(|c| fits(coloring, c)) {
            findings.push(Finding::CompletionOutsideAllowed { edge: e });
            continue;
        }
        let mut repaired = false;
        for radius in 1..=2 {
            let region = repair_region(g, e, &open, radius);
            let start: Vec<Option<Color>> = region.iter().map(|&f| coloring.get(f)).collect();
            for &f in &region {
                coloring.clear(f);
            }
            let mut budget = REPAIR_NODE_LIMIT;
            if recolor_search(graph, coloring, &region, &start, palette, &mut budget) {
                let recolored = region.iter().zip(&start).filter(|&(&f, &s)| s.is_some() && coloring.get(f) != s).count();
                findings.push(Finding::CompletionRepair { edge: e, radius, recolored });
                repaired = true;
                break;
            }
            for (&f, &s) in region.iter().zip(&start) {
                match s {
                    Some(c) => coloring.set(f, c),
                    None => coloring.clear(f),
                }
            }
        }
        if !repaired {
            return Err(GeneralError::CompletionFailed { edge: e });
        }
    }
    Ok(())
}

fn cycle_by_search(g: &HalinGraph, coloring: &mut EdgeColoring, edges: &[EdgeId], palette: Color) -> bool {
    let Some((&e, rest)) = edges.split_first() else {
        return true;
    };
    for c in 1..=palette {
        coloring.set(e, c);
        if !violates_at(g.graph(), coloring, e) && cycle_by_search(g, coloring, rest, palette) {
            return true;
        }
    }
    coloring.clear(e);
    false
}

/// Star edge coloring with at most `⌊3Δ/2⌋ + 2` colors (6 when `Δ = 3`).
pub fn color_halin(g: &HalinGraph) -> Result<HalinOutcome, GeneralError> {
    let delta = g.max_degree();
    let bound = halin_bound(delta);
    if delta == 3 {
        let out = color_cubic(g)?;
        let mut coloring = out.coloring;
        coloring.set_palette(bound);
        return Ok(HalinOutcome {
            coloring,
            bound,
            route: Route::Cubic,
            plan: None,
            tree_coloring: None,
            margins: Vec::new(),
            frames: out.frames,
            findings: out.findings,
        });
    }
    if delta < 3 {
        return Err(GeneralError::DegreeTooSmall(delta));
    }
    let palette = tree_palette(delta);
    let class = classify_cycle_edges(g);
    let mut findings = Vec::new();
    let mut coloring = EdgeColoring::empty(g.edge_count(), bound);

    let plan = match plan_cycle_patterns(g) {
        Ok(plan) => plan,
        Err(GeneralError::CycleTooShortForPattern { n, .. }) => {
            findings.push(Finding::SmallCycleExact { cycle_len: n });
            color_tree(g, &class, &mut coloring, &mut findings)?;
            let tree_coloring = coloring.clone();
            if !cycle_by_search(g, &mut coloring, g.cycle_edges(), bound) {
                let cfg = SearchConfig { max_colors: bound, ..SearchConfig::default() };
                coloring = is_star_colorable(g.graph(), bound, &cfg)?
                    .ok_or(ExactError::AboveMaxColors { max_colors: bound })?;
                coloring.set_palette(bound);
            }
            return finish(g, coloring, bound, Route::SmallCycle, None, Some(tree_coloring), Vec::new(), findings);
        }
        Err(e) => return Err(e),
    };
    plan.apply(&mut coloring, palette + 1, palette + 2);
    findings.extend(check_uncolored_leaf_claim(g, &class, &coloring));
    color_tree(g, &class, &mut coloring, &mut findings)?;
    let mut tree_coloring = coloring.clone();
    for &e in g.cycle_edges() {
        tree_coloring.clear(e);
    }
    let mut margins = Vec::new();
    complete_cycle(g, &class, &plan, &mut coloring, &mut margins, &mut findings)?;
    finish(g, coloring, bound, Route::ThreePhase, Some(plan), Some(tree_coloring), margins, findings)
}

#[allow(clippy::too_many_arguments)]
fn finish(
    g: &HalinGraph,
    coloring: EdgeColoring,
    bound: Color,
    route: Route,
    plan: Option<PatternPlan>,
    tree_coloring: Option<EdgeColoring>,
    margins: Vec<Margin>,
    findings: Vec<Finding>,
) -> Result<HalinOutcome, GeneralError> {
    if let Some(v) = find_violation(g.graph(), &coloring)? {
        return Err(GeneralError::InternalInvariantBroken(v));
    }
    Ok(HalinOutcome { coloring, bound, route, plan, tree_coloring, margins, frames: Vec::new(), findings })
}

/// The characteristic tree as a graph of its own, with the tree part of
/// `coloring`. Tree edges keep their ids.
pub fn tree_restriction(g: &HalinGraph, coloring: &EdgeColoring) -> (Graph, EdgeColoring) {
    let tree_edges: Vec<EdgeId> = g.tree_edges().collect();
    let pairs: Vec<(Vertex, Vertex)> = tree_edges.iter().map(|&e| g.graph().endpoints(e)).collect();
    let graph = Graph::from_edges(g.graph().vertex_count(), &pairs).expect("tree edges are simple");
    let colors = tree_edges.iter().map(|&e| coloring.get(e)).collect();
    (graph, EdgeColoring::from_assignment(colors, coloring.palette()))
}
