//! Graph file formats.
//!
//! Edge-list text: a header line `n m`, then `m` lines `i j` with 1-based
//! whitespace-separated endpoints. Lines starting with `#` are comments;
//! blank lines are skipped. JSON: `{"n": int, "edges": [[i,j], ...]}`.

use std::path::Path;

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph};

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_error(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the edge-list text format. With `dedupe` set, repeated pairs are
/// collapsed instead of rejected.
pub fn parse_edge_list(text: &str, dedupe: bool) -> Result<SimpleGraph, IoError> {
    let mut content = text
        .lines()
        .enumerate()
        .map(|(i, line)| (i + 1, line.trim()))
        .filter(|(_, line)| !line.is_empty() && !line.starts_with('#'));

    let (header_line, header) = content
        .next()
        .ok_or_else(|| parse_error(0, "missing `n m` header line"))?;
    let mut fields = header.split_whitespace();
    let n: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_error(header_line, "header must be `n m`"))?;
    let m: usize = fields
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| parse_error(header_line, "header must be `n m`"))?;
    if fields.next().is_some() {
        return Err(parse_error(header_line, "header must be exactly `n m`"));
    }

    let mut pairs = Vec::with_capacity(m);
    for (line_no, line) in content {
        let mut fields = line.split_whitespace();
        let i: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_error(line_no, "edge line must be `i j`"))?;
        let j: usize = fields
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| parse_error(line_no, "edge line must be `i j`"))?;
        if fields.next().is_some() {
            return Err(parse_error(line_no, "edge line must be exactly `i j`"));
        }
        pairs.push((i, j));
    }
    if pairs.len() != m {
        return Err(parse_error(
            header_line,
            format!("header announces {m} edges but {} follow", pairs.len()),
        ));
    }
    let g = if dedupe {
        SimpleGraph::new_dedupe(n, &pairs)?
    } else {
        SimpleGraph::new(n, &pairs)?
    };
    Ok(g)
}

/// Serializes to the edge-list text format, edges in sorted order.
pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for edge in g.edges() {
        let (i, j) = edge.endpoints();
        out.push_str(&format!("{i} {j}\n"));
    }
    out
}

/// Parses the JSON graph schema, with the same `dedupe` semantics as the
/// text parser.
pub fn parse_graph_json(text: &str, dedupe: bool) -> Result<SimpleGraph, IoError> {
    #[derive(serde::Deserialize)]
    struct Raw {
        n: usize,
        edges: Vec<(usize, usize)>,
    }
    let raw: Raw = serde_json::from_str(text)?;
    let g = if dedupe {
        SimpleGraph::new_dedupe(raw.n, &raw.edges)?
    } else {
        SimpleGraph::new(raw.n, &raw.edges)?
    };
    Ok(g)
}

pub fn write_graph_json(g: &SimpleGraph) -> String {
    let mut out = serde_json::to_string_pretty(g).expect("graph serialization is infallible");
    out.push('\n');
    out
}

fn is_json_path(path: &Path) -> bool {
    path.extension().is_some_and(|ext| ext == "json")
}

/// Reads a graph file, choosing the format by extension (`.json` versus
/// edge-list text for anything else).
pub fn read_graph_file(path: &Path, dedupe: bool) -> Result<SimpleGraph, IoError> {
    let text = std::fs::read_to_string(path)?;
    if is_json_path(path) {
        parse_graph_json(&text, dedupe)
    } else {
        parse_edge_list(&text, dedupe)
    }
}

/// Writes a graph file, choosing the format by extension.
pub fn write_graph_file(path: &Path, g: &SimpleGraph) -> Result<(), IoError> {
    let payload = if is_json_path(path) {
        write_graph_json(g)
    } else {
        write_edge_list(g)
    };
    std::fs::write(path, payload)?;
    Ok(())
}
