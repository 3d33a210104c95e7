//! Star edge colorings of Halin graphs.
//!
//! A Halin graph is a plane tree without degree-2 vertices whose leaves are
//! joined by a cycle along the outer face. This crate builds such graphs from
//! plane trees, colors them with two constructive procedures (an inductive
//! 6-coloring for cubic graphs and a three-phase coloring within
//! `⌊3Δ/2⌋ + 2` colors for `Δ ≥ 4`), checks star validity, and computes exact
//! star chromatic indices of small graphs by backtracking.

pub mod coloring;
pub mod cubic;
pub mod error;
pub mod exact;
pub mod finding;
pub mod format;
pub mod gen;
pub mod general;
pub mod graph;
pub mod halin;
pub mod report;
pub mod tree;
pub mod verify;

pub use coloring::{Color, ColorPermutation, EdgeColoring};
pub use cubic::{color_cubic, CubicError, CubicOutcome};
pub use error::{FormatError, GraphError, HalinError, TreeError, VerifyError};
pub use finding::Finding;
pub use general::{color_halin, GeneralError, HalinOutcome, Route};
pub use graph::{EdgeId, EdgeKind, Graph, Vertex};
pub use halin::{build_halin, classify_cycle_edges, ln_d, longest_tree_path, CycleEdgeClass, HalinGraph};
pub use report::{run_sweep, sweep_grid, SweepReport, SweepRow};
pub use tree::PlaneTree;
pub use verify::{find_violation, is_star_coloring, StarViolation, ViolationKind};
