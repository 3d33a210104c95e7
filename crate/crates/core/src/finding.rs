//! Events worth surfacing from a coloring run: fallbacks that rescued a
//! construction step, and checked claims that did not hold.

use std::fmt;

use crate::graph::{EdgeId, Vertex};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Finding {
    /// The cubic extension with smallest-index choices produced a violation;
    /// another admissible choice tuple was used.
    CubicRechoice { cycle_len: usize, case: &'static str },
    /// No admissible choice tuple worked; the removed edges were recolored by
    /// search.
    CubicResearch { cycle_len: usize, case: &'static str },
    /// A choice set of the cubic extension was empty.
    CubicEmptyChoice { cycle_len: usize, case: &'static str, slot: &'static str },
    /// Cycle too short for the pattern tiling; the whole graph was colored by
    /// exact search.
    SmallCycleExact { cycle_len: usize },
    /// The greedy tree rule got stuck at `vertex`; `edges` child edges around
    /// it were re-searched.
    TreeBacktrack { vertex: Vertex, edges: usize },
    /// No color of the completion rule fit `edge`; another tree-palette color
    /// was used.
    CompletionOutsideAllowed { edge: EdgeId },
    /// No tree-palette color fit `edge`; the tree edges within `radius` of its
    /// hubs were recolored, `recolored` of them changing color.
    CompletionRepair { edge: EdgeId, radius: usize, recolored: usize },
    /// Allowed-color count at a `C_d` completion fell below the counting bound.
    MarginShortfall { edge: EdgeId, allowed: usize, required: usize },
    /// A hub with the maximum `LN_d` size still has more than `⌊Δ/2⌋` leaves
    /// with uncolored `C_d` edges after patterning.
    UncoloredLeafClaim { vertex: Vertex, leaves: usize },
}

impl Finding {
    /// Fallbacks change the construction; the other findings are observations.
    pub fn is_fallback(&self) -> bool {
        matches!(
            self,
            Finding::CubicRechoice { .. }
                | Finding::CubicResearch { .. }
                | Finding::SmallCycleExact { .. }
                | Finding::TreeBacktrack { .. }
                | Finding::CompletionOutsideAllowed { .. }
                | Finding::CompletionRepair { .. }
        )
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Finding::CubicRechoice { cycle_len, case } => {
                write!(f, "FINDING cubic-rechoice cycle_len={cycle_len} case={case}")
            }
            Finding::CubicResearch { cycle_len, case } => {
                write!(f, "FINDING cubic-research cycle_len={cycle_len} case={case}")
            }
            Finding::CubicEmptyChoice { cycle_len, case, slot } => {
                write!(f, "FINDING cubic-empty-choice cycle_len={cycle_len} case={case} slot={slot}")
            }
            Finding::SmallCycleExact { cycle_len } => write!(f, "FINDING small-cycle-exact cycle_len={cycle_len}"),
            Finding::TreeBacktrack { vertex, edges } => write!(f, "FINDING tree-backtrack vertex={vertex} edges={edges}"),
            Finding::CompletionOutsideAllowed { edge } => write!(f, "FINDING completion-outside-allowed edge={edge}"),
            Finding::CompletionRepair { edge, radius, recolored } => {
                write!(f, "FINDING completion-repair edge={edge} radius={radius} recolored={recolored}")
            }
            Finding::MarginShortfall { edge, allowed, required } => {
                write!(f, "FINDING margin-shortfall edge={edge} allowed={allowed} required={required}")
            }
            Finding::UncoloredLeafClaim { vertex, leaves } => {
                write!(f, "FINDING uncolored-leaf-claim vertex={vertex} leaves={leaves}")
            }
        }
    }
}
