//! Edge-list text format.
//!
//! ```text
//! N=4
//! 0 1
//! 0 3
//! 1 2
//! ```
//!
//! The writer emits `u < v` pairs in lexicographic order. The reader accepts
//! pairs in any order or orientation, skips blank lines and `#` comments,
//! and deduplicates.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{LabError, Result};

pub fn to_edge_list(graph: &Graph) -> String {
    let mut out = String::with_capacity(16 + graph.edge_count() * 10);
    let _ = writeln!(out, "N={}", graph.vertex_count());
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(LabError::Parse {
        line: 1,
        message: "missing `N=<int>` header".into(),
    })?;
    let n: usize = header
        .strip_prefix("N=")
        .and_then(|s| s.trim().parse().ok())
        .ok_or_else(|| LabError::Parse {
            line: header_line,
            message: format!("expected `N=<int>`, found `{header}`"),
        })?;

    let mut edges = Vec::new();
    for (line, text) in lines {
        let mut fields = text.split_whitespace().map(str::parse::<usize>);
        match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => {
                return Err(LabError::Parse {
                    line,
                    message: format!("expected `u v`, found `{text}`"),
                })
            }
        }
    }
    Graph::from_edges(n, edges)
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

pub fn write_edge_list(path: impl AsRef<Path>, graph: &Graph) -> Result<()> {
    std::fs::write(path, to_edge_list(graph))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn writes_sorted_pairs() {
        let g = Graph::from_edges(4, [(3, 0), (1, 2), (0, 1)]).unwrap();
        assert_eq!(to_edge_list(&g), "N=4\n0 1\n0 3\n1 2\n");
        assert_eq!(to_edge_list(&Graph::empty(3)), "N=3\n");
    }

    #[test]
    fn reads_lenient_input() {
        let g = parse_edge_list("# comment\nN=5\n\n4 2\n2 4\n0 1  \n").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(2, 4));
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(parse_edge_list(""), Err(LabError::Parse { .. })));
        assert!(matches!(parse_edge_list("4\n0 1\n"), Err(LabError::Parse { line: 1, .. })));
        assert!(matches!(parse_edge_list("N=3\n0 1 2\n"), Err(LabError::Parse { line: 2, .. })));
        assert!(matches!(parse_edge_list("N=3\n0 x\n"), Err(LabError::Parse { .. })));
        assert!(matches!(parse_edge_list("N=3\n0 3\n"), Err(LabError::VertexOutOfRange { .. })));
        assert!(matches!(parse_edge_list("N=3\n1 1\n"), Err(LabError::LoopEdge(1))));
    }
}
