//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.
//! Blank lines and lines starting with `#` are skipped.

use std::fmt::Write;

use crate::error::{Error, Result};

use super::Graph;

pub fn parse(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hline, header) = lines.next().ok_or_else(|| Error::EdgeList("missing `n m` header".into()))?;
    let [n, m] = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (lineno, line) in lines {
        let [u, v] = parse_pair(lineno, line)?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::EdgeList(format!("header announces {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(lineno: usize, line: &str) -> Result<[usize; 2]> {
    let bad = || Error::EdgeList(format!("line {lineno}: expected two non-negative integers, got {line:?}"));
    let mut it = line.split_whitespace().map(|t| t.parse::<usize>());
    match (it.next(), it.next(), it.next()) {
        (Some(Ok(a)), Some(Ok(b)), None) => Ok([a, b]),
        _ => Err(bad()),
    }
}

pub fn write(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::cycle(5).unwrap();
        let text = write(&g);
        assert!(text.starts_with("5 5\n"));
        assert_eq!(parse(&text).unwrap(), g);
    }

    #[test]
    fn errors() {
        assert!(matches!(parse(""), Err(Error::EdgeList(_))));
        assert!(matches!(parse("3 1\n0 x\n"), Err(Error::EdgeList(_))));
        assert!(matches!(parse("3 2\n0 1\n"), Err(Error::EdgeList(_))));
        assert!(matches!(parse("3 1\n0 3\n"), Err(Error::VertexOutOfRange { vertex: 3, n: 3 })));
        assert_eq!(parse("# comment\n2 1\n\n0 1\n").unwrap().edge_count(), 1);
    }
}
