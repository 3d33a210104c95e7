use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};

use halin_star::cubic::CubicError;
use halin_star::exact::{ExactError, ExactSearch, SearchConfig};
use halin_star::format::{parse_coloring, parse_halin, write_coloring, write_dot, write_tree};
use halin_star::gen::{generate, Family, GenSpec};
use halin_star::general::{halin_bound, GeneralError};
use halin_star::verify::find_all_violations;
use halin_star::{color_cubic, color_halin, find_violation, run_sweep, sweep_grid, Color, EdgeColoring, HalinGraph};

const EXIT_USAGE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_EXHAUSTED: u8 = 3;

/// Largest instance generated by `bench`.
const BENCH_MAX_VERTICES: usize = 40;

#[derive(Parser)]
#[command(name = "halin-star", version, about = "Star edge colorings of Halin graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a generated graph file to standard output.
    Gen {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        delta: usize,
        #[arg(long)]
        seed: u64,
    },
    /// Color a graph file (`-` or nothing reads standard input).
    Color {
        graph: Option<PathBuf>,
        /// Use the inductive 6-coloring for cubic graphs.
        #[arg(long)]
        cubic: bool,
        /// Print every reduction frame to standard error.
        #[arg(long)]
        trace: bool,
    },
    /// Check a coloring; exit 2 with a witness line if it is not a star coloring.
    Verify {
        graph: PathBuf,
        coloring: PathBuf,
        /// Report every violation instead of the first.
        #[arg(long)]
        all: bool,
    },
    /// Star chromatic index by backtracking.
    Exact {
        graph: PathBuf,
        #[arg(long)]
        max_colors: Option<Color>,
        #[arg(long)]
        node_limit: Option<u64>,
    },
    /// Color a seeded grid of bounded-degree instances and write a CSV report.
    Bench {
        /// Degrees as `D`, `A..B` or `A..=B` (both ends included).
        #[arg(long, value_parser = parse_degrees)]
        delta: RangeInclusive<usize>,
        /// Instances per degree.
        #[arg(long)]
        count: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Graphviz rendering, edge colors taken from an optional coloring file.
    ExportDot {
        graph: PathBuf,
        #[arg(long)]
        coloring: Option<PathBuf>,
    },
}

fn parse_degrees(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = || format!("expected `D`, `A..B` or `A..=B`, found `{s}`");
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (lo, hi.trim_start_matches('=')),
        None => (s, s),
    };
    let lo: usize = lo.trim().parse().map_err(|_| bad())?;
    let hi: usize = hi.trim().parse().map_err(|_| bad())?;
    if lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        Some(p) if p != Path::new("-") => fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
        _ => {
            let mut text = String::new();
            io::stdin().read_to_string(&mut text).context("reading standard input")?;
            Ok(text)
        }
    }
}

fn load_graph(path: Option<&Path>) -> Result<HalinGraph> {
    let text = read_input(path)?;
    parse_halin(&text).context("parsing graph file")
}

fn load_coloring(g: &HalinGraph, path: &Path) -> Result<EdgeColoring> {
    let text = read_input(Some(path))?;
    parse_coloring(g.graph(), &text).context("parsing coloring file")
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            // clap uses 2 for usage errors, which is reserved for invalid colorings here
            return ExitCode::from(if err.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Gen { family, n, delta, seed } => {
            let tree = generate(&GenSpec::new(family, n, delta, seed))?;
            print!("{}", write_tree(&tree));
            Ok(0)
        }
        Command::Color { graph, cubic, trace } => color(graph.as_deref(), cubic, trace),
        Command::Verify { graph, coloring, all } => {
            let g = load_graph(Some(&graph))?;
            let coloring = load_coloring(&g, &coloring)?;
            let witnesses = if all {
                find_all_violations(g.graph(), &coloring)?
            } else {
                find_violation(g.graph(), &coloring)?.into_iter().collect()
            };
            for w in &witnesses {
                eprintln!("{w}");
            }
            Ok(if witnesses.is_empty() { 0 } else { EXIT_INVALID })
        }
        Command::Exact { graph, max_colors, node_limit } => {
            let g = load_graph(Some(&graph))?;
            let mut cfg = SearchConfig::default();
            if let Some(k) = max_colors {
                cfg.max_colors = k;
            }
            if let Some(limit) = node_limit {
                cfg.node_limit = limit;
            }
            let mut search = ExactSearch::new(g.graph(), cfg)?;
            match search.chromatic_index() {
                Ok(found) => println!("EXACT chi_s={} nodes={}", found.chi, found.nodes),
                Err(ExactError::NodeLimitReached { .. } | ExactError::AboveMaxColors { .. }) => {
                    println!("EXACT chi_s=unknown nodes={}", search.nodes())
                }
                Err(e) => return Err(e.into()),
            }
            Ok(0)
        }
        Command::Bench { delta, count, seed, out } => {
            let report = run_sweep(&sweep_grid(delta, count, BENCH_MAX_VERTICES, seed), None)?;
            match out {
                Some(path) => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    report.write_csv(io::BufWriter::new(file))?;
                }
                None => report.write_csv(io::stdout().lock())?,
            }
            let valid = report.rows.iter().filter(|r| r.valid && r.colors as Color <= r.bound).count();
            eprintln!("BENCH rows={} valid={} fallbacks={}", report.rows.len(), valid, report.total_fallbacks());
            Ok(if report.all_valid() { 0 } else { EXIT_INVALID })
        }
        Command::ExportDot { graph, coloring } => {
            let g = load_graph(Some(&graph))?;
            let coloring = coloring.map(|p| load_coloring(&g, &p)).transpose()?;
            print!("{}", write_dot(&g, coloring.as_ref()));
            Ok(0)
        }
    }
}

fn color(path: Option<&Path>, cubic: bool, trace: bool) -> Result<u8> {
    let g = load_graph(path)?;
    let delta = g.max_degree();
    let result = if cubic {
        color_cubic(&g).map(|o| (o.coloring, o.frames, o.findings)).map_err(GeneralError::from)
    } else {
        color_halin(&g).map(|o| (o.coloring, o.frames, o.findings))
    };
    let (coloring, frames, findings) = match result {
        Ok(parts) => parts,
        Err(e) => {
            eprintln!("error: {e}");
            return Ok(exit_for(&e));
        }
    };
    if trace {
        for frame in &frames {
            eprintln!("{frame}");
        }
    }
    for finding in &findings {
        eprintln!("{finding}");
    }
    let witness = find_violation(g.graph(), &coloring)?;
    let valid = witness.is_none() && coloring.is_total();
    let mut stdout = io::stdout().lock();
    stdout.write_all(write_coloring(g.graph(), &coloring).as_bytes())?;
    stdout.flush()?;
    let fallbacks = findings.iter().filter(|f| f.is_fallback()).count();
    eprintln!(
        "RESULT colors={} bound={} valid={} fallbacks={}",
        coloring.colors_used(),
        if cubic { 6 } else { halin_bound(delta) },
        valid,
        fallbacks
    );
    if let Some(w) = witness {
        eprintln!("{w}");
    }
    Ok(if valid { 0 } else { EXIT_INVALID })
}

fn exit_for(err: &GeneralError) -> u8 {
    match err {
        GeneralError::TreeColoringFailed { .. }
        | GeneralError::CompletionFailed { .. }
        | GeneralError::Cubic(CubicError::FallbackExhausted { .. }) => EXIT_EXHAUSTED,
        GeneralError::InternalInvariantBroken(_) | GeneralError::Cubic(CubicError::InternalInvariantBroken(_)) => {
            EXIT_INVALID
        }
        _ => EXIT_USAGE,
    }
}
