//! Bound sweeps over generated instances and their CSV reports.

use std::io::Write;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::Color;
use crate::exact::{star_chromatic_index, SearchConfig};
use crate::gen::{generate, Family, GenError, GenSpec};
use crate::general::color_halin;
use crate::halin::build_halin;
use crate::verify::is_star_coloring;

/// First line of every report; bump when the columns change.
pub const REPORT_VERSION_LINE: &str = "# sweep-report v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub id: usize,
    pub family: String,
    pub seed: u64,
    pub vertices: usize,
    pub cycle_len: usize,
    pub delta: usize,
    /// `cubic`, `three-phase`, `small-cycle`, or `error`.
    pub route: String,
    pub colors: usize,
    pub bound: Color,
    /// The verifier's verdict on the returned coloring.
    pub valid: bool,
    pub fallbacks: usize,
    pub exact: Option<Color>,
    pub runtime_us: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SweepReport {
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn write_csv<W: Write>(&self, mut out: W) -> Result<(), csv::Error> {
        writeln!(out, "{REPORT_VERSION_LINE}")?;
        let mut writer = csv::Writer::from_writer(out);
        for row in &self.rows {
            writer.serialize(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }

    /// Reads a report written by [`SweepReport::write_csv`].
    pub fn from_csv(text: &str) -> Result<Self, csv::Error> {
        let body = text.strip_prefix(REPORT_VERSION_LINE).unwrap_or(text).trim_start_matches(['\r', '\n']);
        let mut reader = csv::Reader::from_reader(body.as_bytes());
        let rows = reader.deserialize().collect::<Result<Vec<SweepRow>, _>>()?;
        Ok(SweepReport { rows })
    }

    pub fn all_valid(&self) -> bool {
        self.rows.iter().all(|r| r.valid && r.colors as Color <= r.bound)
    }

    pub fn total_fallbacks(&self) -> usize {
        self.rows.iter().map(|r| r.fallbacks).sum()
    }
}

/// `count` bounded-degree instances per `Δ` in `deltas`, at most
/// `max_vertices` vertices each, with per-instance seeds drawn from `seed`.
pub fn sweep_grid(deltas: impl IntoIterator<Item = usize>, count: usize, max_vertices: usize, seed: u64) -> Vec<GenSpec> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut specs = Vec::new();
    for delta in deltas {
        for _ in 0..count {
            specs.push(GenSpec::new(Family::BoundedDeltaRandom, max_vertices, delta, rng.gen()));
        }
    }
    specs
}

/// Generates, colors and verifies every spec in parallel. Rows come back in
/// spec order. The exact index is computed for instances with at most
/// `exact_edge_limit` edges.
pub fn run_sweep(specs: &[GenSpec], exact_edge_limit: Option<usize>) -> Result<SweepReport, GenError> {
    let rows = specs
        .par_iter()
        .enumerate()
        .map(|(id, spec)| sweep_row(id, spec, exact_edge_limit))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SweepReport { rows })
}

fn sweep_row(id: usize, spec: &GenSpec, exact_edge_limit: Option<usize>) -> Result<SweepRow, GenError> {
    let tree = generate(spec)?;
    let g = build_halin(tree).map_err(|e| GenError::InvalidSpec(format!("generated tree is not Halin: {e}")))?;
    let delta = g.max_degree();
    let started = Instant::now();
    let outcome = color_halin(&g);
    let runtime_us = started.elapsed().as_micros() as u64;
    let exact = exact_edge_limit
        .filter(|&limit| g.edge_count() <= limit)
        .and_then(|_| star_chromatic_index(g.graph(), &SearchConfig::default()).ok())
        .map(|x| x.chi);
    let mut row = SweepRow {
        id,
        family: spec.family.name().to_string(),
        seed: spec.seed,
        vertices: g.graph().vertex_count(),
        cycle_len: g.cycle_len(),
        delta,
        route: "error".to_string(),
        colors: 0,
        bound: crate::general::halin_bound(delta),
        valid: false,
        fallbacks: 0,
        exact,
        runtime_us,
    };
    if let Ok(out) = outcome {
        row.route = out.route.to_string();
        row.colors = out.coloring.colors_used();
        row.valid = is_star_coloring(g.graph(), &out.coloring);
        row.fallbacks = out.fallback_count();
    }
    Ok(row)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_deterministic() {
        let a = sweep_grid(4..=5, 3, 20, 7);
        assert_eq!(a, sweep_grid(4..=5, 3, 20, 7));
        assert_eq!(a.len(), 6);
        assert_ne!(a, sweep_grid(4..=5, 3, 20, 8));
    }

    #[test]
    fn report_round_trip() {
        let report = run_sweep(&sweep_grid(4..=6, 4, 16, 1), Some(12)).unwrap();
        assert_eq!(report.rows.iter().map(|r| r.id).collect::<Vec<_>>(), (0..12).collect::<Vec<_>>());
        assert!(report.all_valid());
        let csv = report.to_csv();
        assert!(csv.starts_with("# sweep-report v1\nid,family,seed,vertices,cycle_len,delta,route,colors,bound,"));
        assert_eq!(SweepReport::from_csv(&csv).unwrap(), report);
    }
}
