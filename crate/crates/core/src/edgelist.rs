//! Plain-text edge lists.
//!
//! ```text
//! # comment lines start with '#'
//! <n> <m> [bipartite <a>]
//! <u> <v>        (exactly m lines, 0 <= u, v < n, u != v)
//! ```

use std::fmt::Write as _;

use crate::error::ParseError;
use crate::graph::{BipartiteLayout, Graph};

/// A parsed document: the graph and, when the header declares one, its
/// bipartite layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeListDocument {
    pub graph: Graph,
    pub layout: Option<BipartiteLayout>,
}

pub fn parse(text: &str) -> Result<EdgeListDocument, ParseError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(ParseError::MissingHeader)?;
    let (n, m, a) = parse_header(header_line, header)?;
    if n == 0 {
        return Err(ParseError::EmptyGraph);
    }
    let layout = match a {
        Some(a) => Some(BipartiteLayout::new(a, n).map_err(|_| ParseError::LayoutSize { a, n })?),
        None => None,
    };

    let mut graph = Graph::empty(n).map_err(|_| ParseError::EmptyGraph)?;
    let mut found = 0;
    for (line, text) in lines {
        found += 1;
        if found > m {
            continue;
        }
        let mut fields = text.split_whitespace();
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(u), Some(v), None) => (
                u.parse::<usize>()
                    .map_err(|_| ParseError::MalformedEdge { line })?,
                v.parse::<usize>()
                    .map_err(|_| ParseError::MalformedEdge { line })?,
            ),
            _ => return Err(ParseError::MalformedEdge { line }),
        };
        for vertex in [u, v] {
            if vertex >= n {
                return Err(ParseError::VertexOutOfRange { line, vertex, n });
            }
        }
        if u == v {
            return Err(ParseError::SelfLoop { line, vertex: u });
        }
        if let Some(layout) = layout {
            if layout.in_a(u) == layout.in_a(v) {
                return Err(ParseError::CrossingViolation {
                    line,
                    u,
                    v,
                    a: layout.a(),
                });
            }
        }
        if !graph.insert_edge(u, v) {
            return Err(ParseError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
    }
    if found != m {
        return Err(ParseError::EdgeCount { expected: m, found });
    }
    Ok(EdgeListDocument { graph, layout })
}

fn parse_header(line: usize, header: &str) -> Result<(usize, usize, Option<usize>), ParseError> {
    let bad = || ParseError::MalformedHeader { line };
    let fields: Vec<&str> = header.split_whitespace().collect();
    let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
    match fields.as_slice() {
        [n, m] => Ok((num(n)?, num(m)?, None)),
        [n, m, "bipartite", a] => Ok((num(n)?, num(m)?, Some(num(a)?))),
        _ => Err(bad()),
    }
}

/// Serializes `graph` with edges in lexicographic order.
pub fn write(graph: &Graph, layout: Option<&BipartiteLayout>) -> String {
    let mut out = String::new();
    match layout {
        Some(l) => writeln!(out, "{} {} bipartite {}", graph.n(), graph.m(), l.a()),
        None => writeln!(out, "{} {}", graph.n(), graph.m()),
    }
    .expect("writing to a String cannot fail");
    for (u, v) in graph.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_star() {
        let doc = parse("4 3\n0 1\n0 2\n0 3").unwrap();
        assert_eq!(doc.graph.degrees(), &[3, 1, 1, 1]);
        assert!(doc.layout.is_none());
    }

    #[test]
    fn parses_empty_graph_and_comments() {
        let doc = parse("# nothing here\n\n2 0\n").unwrap();
        assert_eq!((doc.graph.n(), doc.graph.m()), (2, 0));
    }

    #[test]
    fn parses_bipartite_header() {
        let doc = parse("5 2 bipartite 2\n0 2\n4 1\n").unwrap();
        assert_eq!(doc.layout.unwrap().a(), 2);
        assert!(doc.graph.has_edge(1, 4));
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(
            parse("3 2\n0 1\n0 1"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            parse("3 2\n0 1\n1 0"),
            Err(ParseError::DuplicateEdge {
                line: 3,
                u: 0,
                v: 1
            })
        );
        assert_eq!(parse("3 x"), Err(ParseError::MalformedHeader { line: 1 }));
        assert_eq!(
            parse("3 1 tripartite 1\n0 1"),
            Err(ParseError::MalformedHeader { line: 1 })
        );
        assert_eq!(parse("# only\n"), Err(ParseError::MissingHeader));
        assert_eq!(
            parse("3 1\n0 3"),
            Err(ParseError::VertexOutOfRange {
                line: 2,
                vertex: 3,
                n: 3
            })
        );
        assert_eq!(
            parse("3 1\n2 2"),
            Err(ParseError::SelfLoop { line: 2, vertex: 2 })
        );
        assert_eq!(
            parse("4 1 bipartite 2\n0 1"),
            Err(ParseError::CrossingViolation {
                line: 2,
                u: 0,
                v: 1,
                a: 2
            })
        );
        assert_eq!(
            parse("3 2\n0 1"),
            Err(ParseError::EdgeCount {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse("3 1\n0 1\n1 2"),
            Err(ParseError::EdgeCount {
                expected: 1,
                found: 2
            })
        );
        assert_eq!(
            parse("3 1\n0 1 2"),
            Err(ParseError::MalformedEdge { line: 2 })
        );
        assert_eq!(parse("0 0"), Err(ParseError::EmptyGraph));
        assert_eq!(
            parse("3 0 bipartite 3"),
            Err(ParseError::LayoutSize { a: 3, n: 3 })
        );
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(write(&g, None), "4 3\n0 1\n0 3\n2 3\n");
        let doc = parse(&write(&g, None)).unwrap();
        assert_eq!(doc.graph, g);
    }
}
