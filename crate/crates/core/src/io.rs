//! Plain-text edge lists: a header line `n m` followed by `m` lines `u v`
//! (0-indexed, whitespace separated). Blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_pair(line: &str, lineno: usize) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace();
    let mut field = |what: &str| -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::Parse { line: lineno, msg: format!("missing {what}") })?;
        tok.parse().map_err(|_| Error::Parse { line: lineno, msg: format!("bad {what} {tok:?}") })
    };
    let a = field("first field")?;
    let b = field("second field")?;
    if it.next().is_some() {
        return Err(Error::Parse { line: lineno, msg: "trailing fields".into() });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or(Error::Parse { line: 1, msg: "missing header".into() })?;
    let (n, m) = parse_pair(header, hl)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        if edges.len() == m {
            return Err(Error::Parse { line: lineno, msg: format!("more than {m} edges") });
        }
        edges.push(parse_pair(line, lineno)?);
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: text.lines().count(),
            msg: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_p4() {
        let g = parse_edge_list("4 3\n0 1\n1 2\n\n2 3\n").unwrap();
        assert_eq!(g, crate::graph::path(4));
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n1 2\n2 3\n");
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(Error::Parse { .. })));
        assert!(matches!(parse_edge_list("3 1\n0 1\n1 2\n"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(Error::Parse { line: 2, .. })));
        assert_eq!(parse_edge_list("3 1\n0 0\n"), Err(Error::SelfLoop(0)));
    }
}
