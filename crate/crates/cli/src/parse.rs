//! Edge-list and DIMACS graph readers.
//!
//! Edge lists hold one edge per line as two whitespace-separated labels;
//! `#` starts a comment and blank lines are skipped. Vertices are indexed in
//! order of first appearance. A file is read as DIMACS when it has a
//! `p edge <n> <m>` line; vertices are then `1..=n` and edges are `e u v`.

use cover_ideals::Graph;

use crate::error::CliError;

fn malformed(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_graph(text: &str) -> Result<Graph, CliError> {
    let is_dimacs = text
        .lines()
        .any(|l| l.split_whitespace().next() == Some("p"));
    if is_dimacs {
        parse_dimacs(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, CliError> {
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.as_slice() {
            [] => {}
            [a, b] if a == b => return Err(malformed(k + 1, format!("self-loop at `{a}`"))),
            [a, b] => edges.push((a.to_string(), b.to_string())),
            _ => {
                return Err(malformed(
                    k + 1,
                    format!("expected two vertex labels, found {} tokens", tokens.len()),
                ))
            }
        }
    }
    Ok(Graph::from_labeled_edges(&edges)?)
}

pub fn parse_dimacs(text: &str) -> Result<Graph, CliError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        let number = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| malformed(k + 1, format!("`{s}` is not a vertex number")))
        };
        match tokens.as_slice() {
            [] | ["c", ..] => {}
            ["p", _, count, _] => {
                if n.is_some() {
                    return Err(malformed(k + 1, "second problem line"));
                }
                n = Some(number(count)?);
            }
            ["e", u, v] => {
                let Some(n) = n else {
                    return Err(malformed(k + 1, "edge before problem line"));
                };
                let (u, v) = (number(u)?, number(v)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(malformed(k + 1, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(malformed(k + 1, format!("self-loop at {u}")));
                }
                edges.push((u - 1, v - 1));
            }
            _ => return Err(malformed(k + 1, format!("unrecognised line `{}`", raw.trim()))),
        }
    }
    let n = n.ok_or_else(|| malformed(0, "missing problem line"))?;
    let labels = (1..=n).map(|v| v.to_string()).collect();
    Ok(Graph::from_edges(n, edges)?.with_labels(labels)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let g = parse_graph("a b\na c\nb c").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.label(2), "c");
    }

    #[test]
    fn comments_blank_lines_and_duplicates() {
        let g = parse_graph("# header\n\nx y  # trailing\ny x\n  y z\n").unwrap();
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.label(0), "x");
    }

    #[test]
    fn edge_list_errors() {
        match parse_graph("a b\na a\n") {
            Err(CliError::Parse { line: 2, message }) => assert!(message.contains("self-loop")),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(parse_graph("a b c\n"), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(parse_graph("a b\nlonely\n"), Err(CliError::Parse { line: 2, .. })));
    }

    #[test]
    fn vertex_cap() {
        let text: String = (0..70).map(|i| format!("v{i} v{}\n", i + 1)).collect();
        assert!(matches!(parse_graph(&text), Err(CliError::Graph(_))));
    }

    #[test]
    fn dimacs() {
        let g = parse_graph("c four-cycle\np edge 5 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n").unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.label(4), "5");
        assert!(g.has_edge(0, 3));
        assert!(matches!(
            parse_graph("p edge 2 1\ne 1 3\n"),
            Err(CliError::Parse { line: 2, .. })
        ));
        assert!(matches!(parse_graph("p edge 2 1\ne 2 2\n"), Err(CliError::Parse { .. })));
        assert!(matches!(parse_graph("p edge 2 1\nq 1 2\n"), Err(CliError::Parse { .. })));
    }
}
