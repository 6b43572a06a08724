//! DIMACS `p edge` reader and writer.
//!
//! Accepted input: `c` comment lines, blank lines, exactly one `p edge <n> <m>`
//! (or `p col`) line, and `e <u> <v>` lines with 1-based endpoints. Repeated
//! edges are tolerated; self-loops are not.

use std::fmt::Write as _;

use crate::bitset::BitSet;
use crate::error::{DimacsError, DimacsErrorKind};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DimacsWarning {
    /// The `p` line declared `declared` edges but `distinct` distinct edges were read.
    EdgeCountMismatch { declared: usize, distinct: usize },
}

impl std::fmt::Display for DimacsWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimacsWarning::EdgeCountMismatch { declared, distinct } => write!(
                f,
                "problem line declares {declared} edges but {distinct} distinct edges were read"
            ),
        }
    }
}

#[derive(Clone, Debug)]
pub struct ParsedDimacs {
    pub graph: Graph,
    pub warnings: Vec<DimacsWarning>,
}

fn err(line: usize, kind: DimacsErrorKind) -> DimacsError {
    DimacsError { line, kind }
}

fn parse_count(token: Option<&str>, line: usize, what: &str) -> Result<usize, DimacsError> {
    let token = token.ok_or_else(|| err(line, DimacsErrorKind::Malformed(format!("missing {what}"))))?;
    token
        .parse()
        .map_err(|_| err(line, DimacsErrorKind::Malformed(format!("bad {what} `{token}`"))))
}

pub fn parse_dimacs(input: &[u8]) -> Result<ParsedDimacs, DimacsError> {
    if !input.is_ascii() {
        return Err(err(0, DimacsErrorKind::NotAscii));
    }
    let text = std::str::from_utf8(input).expect("ASCII is valid UTF-8");

    let mut header: Option<(usize, usize)> = None;
    let mut rows: Vec<BitSet> = Vec::new();

    for (index, raw) in text.lines().enumerate() {
        let line_no = index + 1;
        let mut tokens = raw.split_whitespace();
        let Some(tag) = tokens.next() else { continue };
        match tag {
            "c" => continue,
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, DimacsErrorKind::DuplicateProblemLine));
                }
                match tokens.next() {
                    Some("edge" | "col") => {}
                    Some(other) => {
                        return Err(err(
                            line_no,
                            DimacsErrorKind::Malformed(format!("unsupported problem format `{other}`")),
                        ))
                    }
                    None => {
                        return Err(err(
                            line_no,
                            DimacsErrorKind::Malformed("missing problem format".into()),
                        ))
                    }
                }
                let n = parse_count(tokens.next(), line_no, "vertex count")?;
                let m = parse_count(tokens.next(), line_no, "edge count")?;
                if let Some(extra) = tokens.next() {
                    return Err(err(
                        line_no,
                        DimacsErrorKind::Malformed(format!("trailing token `{extra}`")),
                    ));
                }
                header = Some((n, m));
                rows = vec![BitSet::new(n); n];
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(err(line_no, DimacsErrorKind::EdgeBeforeProblemLine));
                };
                let u = parse_count(tokens.next(), line_no, "endpoint")?;
                let v = parse_count(tokens.next(), line_no, "endpoint")?;
                if let Some(extra) = tokens.next() {
                    return Err(err(
                        line_no,
                        DimacsErrorKind::Malformed(format!("trailing token `{extra}`")),
                    ));
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line_no, DimacsErrorKind::EndpointOutOfRange { endpoint: w, n }));
                    }
                }
                if u == v {
                    return Err(err(line_no, DimacsErrorKind::SelfLoop(u)));
                }
                rows[u - 1].insert(v - 1);
                rows[v - 1].insert(u - 1);
            }
            other => {
                return Err(err(
                    line_no,
                    DimacsErrorKind::Malformed(format!("unknown line type `{other}`")),
                ));
            }
        }
    }

    let (n, declared) = header.ok_or_else(|| err(0, DimacsErrorKind::MissingProblemLine))?;
    let edges: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
        .collect();
    let graph = Graph::from_edges(n, &edges)
        .and_then(|g| g.with_labels((1..=n).collect()))
        .expect("edges were range-checked while parsing");

    let mut warnings = Vec::new();
    if declared != edges.len() {
        warnings.push(DimacsWarning::EdgeCountMismatch {
            declared,
            distinct: edges.len(),
        });
    }
    Ok(ParsedDimacs { graph, warnings })
}

/// Canonical text: the `p edge n m` line then one `e u v` line per edge with
/// `u < v`, lexicographic, 1-based, newline-separated, no trailing newline.
/// Internal indices are written, not labels.
pub fn to_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        write!(out, "\ne {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::random_graph;

    #[test]
    fn smallest_nonempty_graph() {
        let parsed = parse_dimacs(b"p edge 2 1\ne 1 2").unwrap();
        assert_eq!(parsed.graph, Graph::from_edges(2, &[(0, 1)]).unwrap());
        assert!(parsed.warnings.is_empty());
        assert_eq!(to_dimacs(&parsed.graph), "p edge 2 1\ne 1 2");
    }

    #[test]
    fn duplicate_edges_are_idempotent_and_warned() {
        let parsed = parse_dimacs(b"p edge 3 3\ne 1 2\ne 1 2\ne 2 3").unwrap();
        assert_eq!(parsed.graph.edge_count(), 2);
        assert_eq!(
            parsed.warnings,
            vec![DimacsWarning::EdgeCountMismatch {
                declared: 3,
                distinct: 2
            }]
        );
    }

    #[test]
    fn empty_graph_text() {
        assert_eq!(to_dimacs(&Graph::empty(3)), "p edge 3 0");
        assert_eq!(parse_dimacs(b"p edge 3 0").unwrap().graph, Graph::empty(3));
    }

    #[test]
    fn figure_one_round_trip() {
        let text = format!("c figure one\n{}\n", to_dimacs(&fixtures::figure1()));
        let parsed = parse_dimacs(text.as_bytes()).unwrap();
        assert_eq!(parsed.graph, fixtures::figure1());
        assert!(parsed.warnings.is_empty());
        assert_eq!(parsed.graph.label(0), 1);
    }

    #[test]
    fn random_round_trip_is_exact() {
        let g = random_graph(20, 0.5, 1).unwrap();
        let text = to_dimacs(&g);
        let back = parse_dimacs(text.as_bytes()).unwrap().graph;
        assert_eq!(back, g);
        assert_eq!(to_dimacs(&back), text);
    }

    #[test]
    fn accepts_col_and_comments_and_blank_lines() {
        let parsed = parse_dimacs(b"c hello\n\np col 3 1\nc mid\ne 3 1\n").unwrap();
        assert!(parsed.graph.has_edge(0, 2));
    }

    #[test]
    fn errors_name_the_line() {
        let cases: [(&[u8], usize, DimacsErrorKind); 8] = [
            (b"c only\ne 1 2", 2, DimacsErrorKind::EdgeBeforeProblemLine),
            (b"c nothing here", 0, DimacsErrorKind::MissingProblemLine),
            (
                b"p edge 3 1\ne 1 4",
                2,
                DimacsErrorKind::EndpointOutOfRange { endpoint: 4, n: 3 },
            ),
            (
                b"p edge 3 1\ne 0 1",
                2,
                DimacsErrorKind::EndpointOutOfRange { endpoint: 0, n: 3 },
            ),
            (b"p edge 3 1\n\ne 2 2", 3, DimacsErrorKind::SelfLoop(2)),
            (b"p edge 3 1\np edge 3 1", 2, DimacsErrorKind::DuplicateProblemLine),
            (
                b"p edge 3 x",
                1,
                DimacsErrorKind::Malformed("bad edge count `x`".into()),
            ),
            (
                b"p edge 3 1\ne 1",
                2,
                DimacsErrorKind::Malformed("missing endpoint".into()),
            ),
        ];
        for (input, line, kind) in cases {
            assert_eq!(parse_dimacs(input).unwrap_err(), DimacsError { line, kind });
        }
        assert_eq!(
            parse_dimacs("p edge 2 1\ne 1 2 é".as_bytes()).unwrap_err().kind,
            DimacsErrorKind::NotAscii
        );
        assert!(matches!(
            parse_dimacs(b"p edge 2 1\nx 1 2").unwrap_err().kind,
            DimacsErrorKind::Malformed(_)
        ));
    }
}
