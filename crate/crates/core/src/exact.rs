//! Exact star chromatic index by backtracking.
//!
//! Edges are colored one at a time; a partial assignment is abandoned as soon
//! as the newly colored edge sits in a conflict. Color classes are
//! interchangeable, so the search only ever opens the next unused color
//! (which also forces the first edge to color 1).

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::graph::{EdgeId, EdgeKind, Graph};
use crate::verify::violates_at;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum EdgeOrder {
    /// Largest `deg(u) + deg(v)` first.
    #[default]
    DegreeDescending,
    /// Cycle edges of a Halin graph first, then the rest by id.
    CycleFirst,
    /// Edge id order.
    Input,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    pub max_colors: Color,
    pub edge_order: EdgeOrder,
    /// Search nodes allowed across one call, counted per tentative assignment.
    pub node_limit: u64,
    /// Shuffles ties in the edge order.
    pub seed: Option<u64>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { max_colors: 16, edge_order: EdgeOrder::default(), node_limit: 200_000_000, seed: None }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("node limit reached after {nodes} nodes")]
    NodeLimitReached { nodes: u64 },
    #[error("invalid search config: {0}")]
    InvalidConfig(&'static str),
    #[error("graph has no edges")]
    NoEdges,
    #[error("no star coloring with at most {max_colors} colors")]
    AboveMaxColors { max_colors: Color },
}

/// Result of an ascending search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactIndex {
    pub chi: Color,
    pub coloring: EdgeColoring,
    pub nodes: u64,
}

pub fn edge_order(g: &Graph, cfg: &SearchConfig) -> Vec<EdgeId> {
    let mut order: Vec<EdgeId> = (0..g.edge_count()).collect();
    if let Some(seed) = cfg.seed {
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    }
    match cfg.edge_order {
        EdgeOrder::Input => {}
        EdgeOrder::DegreeDescending => order.sort_by_key(|&e| {
            let (u, v) = g.endpoints(e);
            std::cmp::Reverse(g.degree(u) + g.degree(v))
        }),
        EdgeOrder::CycleFirst => order.sort_by_key(|&e| g.kind(e) != EdgeKind::Cycle),
    }
    order
}

/// Backtracking state shared by the probes of one search.
pub struct ExactSearch<'g> {
    g: &'g Graph,
    cfg: SearchConfig,
    order: Vec<EdgeId>,
    nodes: u64,
}

impl<'g> ExactSearch<'g> {
    pub fn new(g: &'g Graph, cfg: SearchConfig) -> Result<Self, ExactError> {
        if cfg.max_colors < 1 {
            return Err(ExactError::InvalidConfig("max_colors must be at least 1"));
        }
        if cfg.node_limit < 1 {
            return Err(ExactError::InvalidConfig("node_limit must be at least 1"));
        }
        let order = edge_order(g, &cfg);
        Ok(ExactSearch { g, cfg, order, nodes: 0 })
    }

    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// A star coloring with at most `k` colors, `None` if none exists.
    pub fn colorable(&mut self, k: Color) -> Result<Option<EdgeColoring>, ExactError> {
        let mut coloring = EdgeColoring::empty(self.g.edge_count(), k.max(1));
        if self.g.edge_count() == 0 {
            return Ok(Some(coloring));
        }
        if k == 0 {
            return Ok(None);
        }
        if self.extend(&mut coloring, 0, 0, k)? {
            Ok(Some(coloring))
        } else {
            Ok(None)
        }
    }

    fn extend(&mut self, coloring: &mut EdgeColoring, depth: usize, used: Color, k: Color) -> Result<bool, ExactError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        for c in 1..=k.min(used + 1) {
            self.nodes += 1;
            if self.nodes > self.cfg.node_limit {
                return Err(ExactError::NodeLimitReached { nodes: self.nodes - 1 });
            }
            coloring.set(e, c);
            if !violates_at(self.g, coloring, e) && self.extend(coloring, depth + 1, used.max(c), k)? {
                return Ok(true);
            }
        }
        coloring.clear(e);
        Ok(false)
    }

    /// Smallest `k` admitting a star coloring, searching upward from `Δ`.
    pub fn chromatic_index(&mut self) -> Result<ExactIndex, ExactError> {
        if self.g.edge_count() == 0 {
            return Err(ExactError::NoEdges);
        }
        let lower = self.g.max_degree() as Color;
        for k in lower..=self.cfg.max_colors {
            if let Some(coloring) = self.colorable(k)? {
                return Ok(ExactIndex { chi: k, coloring, nodes: self.nodes });
            }
        }
        Err(ExactError::AboveMaxColors { max_colors: self.cfg.max_colors })
    }
}

pub fn is_star_colorable(g: &Graph, k: Color, cfg: &SearchConfig) -> Result<Option<EdgeColoring>, ExactError> {
    ExactSearch::new(g, cfg.clone())?.colorable(k)
}

pub fn star_chromatic_index(g: &Graph, cfg: &SearchConfig) -> Result<ExactIndex, ExactError> {
    ExactSearch::new(g, cfg.clone())?.chromatic_index()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::is_star_coloring;

    fn k4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn k4_needs_five() {
        let cfg = SearchConfig::default();
        assert_eq!(is_star_colorable(&k4(), 4, &cfg).unwrap(), None);
        let c = is_star_colorable(&k4(), 5, &cfg).unwrap().unwrap();
        assert!(is_star_coloring(&k4(), &c));
        assert_eq!(star_chromatic_index(&k4(), &cfg).unwrap().chi, 5);
    }

    #[test]
    fn path_and_star() {
        let cfg = SearchConfig::default();
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(is_star_colorable(&p5, 2, &cfg).unwrap(), None);
        assert!(is_star_colorable(&p5, 3, &cfg).unwrap().is_some());
        let star = Graph::from_edges(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]).unwrap();
        assert!(is_star_colorable(&star, 5, &cfg).unwrap().is_some());
        assert_eq!(is_star_colorable(&star, 4, &cfg).unwrap(), None);
    }

    #[test]
    fn node_limit_is_not_a_verdict() {
        let cfg = SearchConfig { node_limit: 10, ..SearchConfig::default() };
        assert!(matches!(
            star_chromatic_index(&k4(), &cfg),
            Err(ExactError::NodeLimitReached { nodes: 10 })
        ));
        let bad = SearchConfig { max_colors: 0, ..SearchConfig::default() };
        assert!(matches!(is_star_colorable(&k4(), 3, &bad), Err(ExactError::InvalidConfig(_))));
    }

    #[test]
    fn every_order_agrees() {
        for edge_order in [EdgeOrder::DegreeDescending, EdgeOrder::CycleFirst, EdgeOrder::Input] {
            for seed in [None, Some(3)] {
                let cfg = SearchConfig { edge_order, seed, ..SearchConfig::default() };
                assert_eq!(star_chromatic_index(&k4(), &cfg).unwrap().chi, 5);
            }
        }
    }
}
