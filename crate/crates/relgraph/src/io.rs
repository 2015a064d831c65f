//! Graph text formats.
//!
//! Primary format is a minimal edge list: a header line `n m`, then `m`
//! lines `u v` with `0 ≤ u < v < n`. DIMACS coloring files (`p edge n m`
//! header, 1-indexed `e u v` lines, `c` comments) are accepted on read.

use std::fmt;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("malformed header")]
    BadHeader,
    #[error("malformed edge line")]
    BadEdge,
    #[error("vertex {v} out of range for {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("header declared {expected} edges, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("empty input")]
    Empty,
}

/// A parse failure, carrying the 1-based line number it occurred on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.kind)
    }
}

impl std::error::Error for ParseError {}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

/// Parses a graph from edge-list text, or DIMACS if the first meaningful
/// line starts with `c` or `p`.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| err(1, ParseErrorKind::Empty))?;
    if first.starts_with('c') || first.starts_with('p') {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line_no, header) = lines.next().ok_or_else(|| err(1, ParseErrorKind::Empty))?;
    let mut it = header.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader))?;
    if it.next().is_some() {
        return Err(err(line_no, ParseErrorKind::BadHeader));
    }
    let mut g = Graph::new(n);
    let mut found = 0usize;
    for (line_no, line) in lines {
        let mut it = line.split_whitespace();
        let (u, v) = match (
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next().and_then(|t| t.parse::<usize>().ok()),
            it.next(),
        ) {
            (Some(u), Some(v), None) => (u, v),
            _ => return Err(err(line_no, ParseErrorKind::BadEdge)),
        };
        add_parsed_edge(&mut g, u, v, line_no)?;
        found += 1;
    }
    if found != m {
        return Err(err(
            1,
            ParseErrorKind::EdgeCountMismatch {
                expected: m,
                found,
            },
        ));
    }
    Ok(g)
}

fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut g: Option<Graph> = None;
    let mut expected = 0usize;
    let mut found = 0usize;
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let mut it = line.split_whitespace();
        match it.next() {
            Some("p") => {
                if g.is_some() {
                    return Err(err(line_no, ParseErrorKind::BadHeader));
                }
                let format = it.next();
                if format != Some("edge") && format != Some("col") {
                    return Err(err(line_no, ParseErrorKind::BadHeader));
                }
                let n: usize = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader))?;
                expected = it
                    .next()
                    .and_then(|t| t.parse().ok())
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader))?;
                g = Some(Graph::new(n));
            }
            Some("e") => {
                let g = g
                    .as_mut()
                    .ok_or_else(|| err(line_no, ParseErrorKind::BadHeader))?;
                let (u, v) = match (
                    it.next().and_then(|t| t.parse::<usize>().ok()),
                    it.next().and_then(|t| t.parse::<usize>().ok()),
                ) {
                    (Some(u), Some(v)) => (u, v),
                    _ => return Err(err(line_no, ParseErrorKind::BadEdge)),
                };
                // 1-indexed in DIMACS.
                if u == 0 || v == 0 {
                    return Err(err(line_no, ParseErrorKind::VertexOutOfRange { v: 0, n: g.n() }));
                }
                add_parsed_edge(g, u - 1, v - 1, line_no)?;
                found += 1;
            }
            _ => return Err(err(line_no, ParseErrorKind::BadEdge)),
        }
    }
    let g = g.ok_or_else(|| err(1, ParseErrorKind::Empty))?;
    if found != expected {
        return Err(err(
            1,
            ParseErrorKind::EdgeCountMismatch {
                expected,
                found,
            },
        ));
    }
    Ok(g)
}

fn add_parsed_edge(g: &mut Graph, u: usize, v: usize, line_no: usize) -> Result<(), ParseError> {
    if u == v {
        return Err(err(line_no, ParseErrorKind::SelfLoop(u)));
    }
    for w in [u, v] {
        if w >= g.n() {
            return Err(err(line_no, ParseErrorKind::VertexOutOfRange { v: w, n: g.n() }));
        }
    }
    if g.has_edge(u, v) {
        return Err(err(line_no, ParseErrorKind::DuplicateEdge(u.min(v), u.max(v))));
    }
    g.add_edge(u, v).expect("edge checked above");
    Ok(())
}

/// Writes the edge-list form: header `n m`, then sorted `u v` lines, LF-terminated.
pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_path_on_three_vertices() {
        let g = parse_graph("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::path(3));
    }

    #[test]
    fn rejects_self_loop_with_line_number() {
        let e = parse_graph("2 1\n0 0\n").unwrap_err();
        assert_eq!(e.line, 2);
        assert_eq!(e.kind, ParseErrorKind::SelfLoop(0));
    }

    #[test]
    fn rejects_duplicates_and_range() {
        let e = parse_graph("3 2\n0 1\n1 0\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::DuplicateEdge(0, 1));
        let e = parse_graph("3 1\n0 3\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::VertexOutOfRange { v: 3, n: 3 });
        let e = parse_graph("3 2\n0 1\n").unwrap_err();
        assert_eq!(
            e.kind,
            ParseErrorKind::EdgeCountMismatch {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn parses_dimacs() {
        let text = "c a comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
        let g = parse_graph(text).unwrap();
        assert_eq!(g, Graph::path(4));
    }

    #[test]
    fn write_then_parse_is_identity() {
        let g = Graph::cycle(7);
        assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
        let empty = Graph::new(0);
        assert_eq!(parse_graph(&write_graph(&empty)).unwrap(), empty);
    }
}
