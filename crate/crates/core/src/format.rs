//! Text formats.
//!
//! Graph files:
//!
//! ```text
//! HALIN 1
//! T <vertex> <child1> <child2> ...
//! ```
//!
//! one `T` line per internal vertex, children in clockwise order, the root on
//! the first `T` line. The adjoint cycle is derived, never written.
//!
//! Coloring files:
//!
//! ```text
//! COLORING <paletteSize>
//! <u> <v> <color|*>
//! ```
//!
//! one line per edge. Lines starting with `#` are comments in both formats.

use std::collections::HashMap;
use std::fmt::Write as _;

use crate::coloring::{Color, EdgeColoring};
use crate::error::FormatError;
use crate::graph::{Graph, Vertex};
use crate::halin::HalinGraph;
use crate::tree::PlaneTree;

pub const GRAPH_HEADER: &str = "HALIN 1";
pub const COLORING_HEADER: &str = "COLORING";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize) -> Result<T, FormatError> {
    tok.parse().map_err(|_| FormatError::syntax(line, format!("expected a number, found `{tok}`")))
}

pub fn parse_tree(text: &str) -> Result<PlaneTree, FormatError> {
    let mut lines = content_lines(text);
    match lines.next() {
        Some((_, GRAPH_HEADER)) => {}
        _ => return Err(FormatError::MissingHeader(GRAPH_HEADER)),
    }
    let mut root = None;
    let mut rows: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
    let mut max_id = 0;
    for (ln, line) in lines {
        let mut toks = line.split_whitespace();
        if toks.next() != Some("T") {
            return Err(FormatError::syntax(ln, "expected `T <vertex> <children...>`"));
        }
        let v: Vertex = parse_num(toks.next().ok_or_else(|| FormatError::syntax(ln, "missing vertex"))?, ln)?;
        let kids = toks.map(|t| parse_num(t, ln)).collect::<Result<Vec<Vertex>, _>>()?;
        if kids.is_empty() {
            return Err(FormatError::syntax(ln, format!("vertex {v} has no children")));
        }
        max_id = kids.iter().copied().chain([v, max_id]).max().unwrap_or(0);
        if rows.insert(v, kids).is_some() {
            return Err(FormatError::syntax(ln, format!("vertex {v} listed twice")));
        }
        root.get_or_insert(v);
    }
    let root = root.ok_or_else(|| FormatError::syntax(1, "no `T` lines"))?;
    let mut children = vec![Vec::new(); max_id + 1];
    for (v, kids) in rows {
        children[v] = kids;
    }
    Ok(PlaneTree::new(root, children)?)
}

pub fn parse_halin(text: &str) -> Result<HalinGraph, FormatError> {
    Ok(HalinGraph::new(parse_tree(text)?)?)
}

/// Internal vertices in preorder, one `T` line each.
pub fn write_tree(tree: &PlaneTree) -> String {
    let mut out = String::from(GRAPH_HEADER);
    out.push('\n');
    for v in tree.internal_vertices() {
        write!(out, "T {v}").unwrap();
        for c in tree.children(v) {
            write!(out, " {c}").unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn write_coloring(g: &Graph, coloring: &EdgeColoring) -> String {
    let mut out = format!("{COLORING_HEADER} {}\n", coloring.palette());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match coloring.get(e) {
            Some(c) => writeln!(out, "{u} {v} {c}").unwrap(),
            None => writeln!(out, "{u} {v} *").unwrap(),
        }
    }
    out
}

/// Edges absent from the file stay unassigned.
pub fn parse_coloring(g: &Graph, text: &str) -> Result<EdgeColoring, FormatError> {
    let mut lines = content_lines(text);
    let palette: Color = match lines.next() {
        Some((ln, line)) => {
            let mut toks = line.split_whitespace();
            if toks.next() != Some(COLORING_HEADER) {
                return Err(FormatError::MissingHeader(COLORING_HEADER));
            }
            let tok = toks.next().ok_or_else(|| FormatError::syntax(ln, "missing palette size"))?;
            parse_num(tok, ln)?
        }
        None => return Err(FormatError::MissingHeader(COLORING_HEADER)),
    };
    let mut coloring = EdgeColoring::empty(g.edge_count(), palette);
    let mut seen = vec![false; g.edge_count()];
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        let [u, v, c] = toks[..] else {
            return Err(FormatError::syntax(ln, "expected `<u> <v> <color|*>`"));
        };
        let (u, v): (Vertex, Vertex) = (parse_num(u, ln)?, parse_num(v, ln)?);
        let e = (u < g.vertex_count() && v < g.vertex_count())
            .then(|| g.edge_between(u, v))
            .flatten()
            .ok_or_else(|| FormatError::syntax(ln, format!("no edge {u}-{v} in graph")))?;
        if std::mem::replace(&mut seen[e], true) {
            return Err(FormatError::syntax(ln, format!("edge {u}-{v} listed twice")));
        }
        if c != "*" {
            coloring.set(e, parse_num(c, ln)?);
        }
    }
    Ok(coloring)
}

/// Graphviz rendering; colored edges are labelled with their color index.
pub fn write_dot(g: &HalinGraph, coloring: Option<&EdgeColoring>) -> String {
    const PALETTE: [&str; 12] = [
        "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#a65628", "#f781bf", "#999999", "#66c2a5",
        "#fc8d62", "#8da0cb", "#e78ac3",
    ];
    let mut out = String::from("graph halin {\n  node [shape=circle];\n");
    for v in 0..g.graph().vertex_count() {
        let shape = if g.is_leaf(v) { "circle" } else { "doublecircle" };
        writeln!(out, "  {v} [shape={shape}];").unwrap();
    }
    for (e, &(u, v)) in g.graph().edges().iter().enumerate() {
        let style = if g.is_cycle_edge(e) { "dashed" } else { "solid" };
        match coloring.and_then(|c| c.get(e)) {
            Some(c) => {
                let hue = PALETTE[(c as usize - 1) % PALETTE.len()];
                writeln!(out, "  {u} -- {v} [style={style}, color=\"{hue}\", label=\"{c}\"];").unwrap();
            }
            None => writeln!(out, "  {u} -- {v} [style={style}];").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}
