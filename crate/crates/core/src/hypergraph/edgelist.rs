//! Plain-text edge lists.
//!
//! ```text
//! # comment lines are ignored
//! r n m
//! a_1 a_2 ... a_r        (m lines, 1-based, strictly increasing)
//! ```
//!
//! The file must end with a newline. Edges are canonicalized to colex order
//! on load.

use std::fmt::Write as _;

use super::Hypergraph;
use crate::error::{Error, Result};

fn parse_err<T>(line: usize, msg: impl Into<String>) -> Result<T> {
    Err(Error::Parse { line, msg: msg.into() })
}

fn parse_ints(line_no: usize, line: &str) -> Result<Vec<usize>> {
    line.split(' ')
        .map(|tok| {
            tok.parse::<usize>()
                .or_else(|_| parse_err(line_no, format!("`{tok}` is not a nonnegative integer")))
        })
        .collect()
}

pub fn parse(text: &str) -> Result<Hypergraph> {
    if !text.ends_with('\n') {
        return parse_err(text.lines().count().max(1), "missing trailing newline");
    }
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.starts_with('#'));
    let (hl, header) = match lines.next() {
        Some(h) => h,
        None => return parse_err(1, "missing `r n m` header"),
    };
    let head = parse_ints(hl, header)?;
    let [r, n, m] = head[..] else {
        return parse_err(hl, format!("header must be `r n m`, got `{header}`"));
    };
    let mut edges = Vec::with_capacity(m);
    for (k, line) in lines {
        if edges.len() == m {
            return parse_err(k, format!("more than the declared {m} edges"));
        }
        let e = parse_ints(k, line)?;
        if e.len() != r {
            return parse_err(k, format!("expected {r} vertices, got {}", e.len()));
        }
        edges.push(e);
    }
    if edges.len() != m {
        return parse_err(
            text.lines().count(),
            format!("declared {m} edges, found {}", edges.len()),
        );
    }
    Hypergraph::new(r, n, edges).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

pub fn write(g: &Hypergraph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {} {}", g.r(), g.n(), g.m()).unwrap();
    for e in g.edges() {
        let parts: Vec<String> = e.iter().map(usize::to_string).collect();
        writeln!(out, "{}", parts.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_and_canonicalizes() {
        let g = parse("# K4 minus one\n3 4 3\n2 3 4\n1 2 3\n1 2 4\n").unwrap();
        assert_eq!(g.edges(), vec![vec![1, 2, 3], vec![1, 2, 4], vec![2, 3, 4]]);
        assert_eq!(write(&g), "3 4 3\n1 2 3\n1 2 4\n2 3 4\n");
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse("3 4 1\n1 2 3").is_err());
        assert!(parse("3 4 2\n1 2 3\n").is_err());
        assert!(parse("3 4 1\n1 2 3\n1 2 4\n").is_err());
        assert!(parse("3 4 1\n1 2\n").is_err());
        assert!(parse("3 4 1\n1 2 x\n").is_err());
        assert!(parse("3 4 1\n3 2 1\n").is_err());
        assert!(parse("3 4 1\n1  2 3\n").is_err());
        assert!(parse("3 4\n").is_err());
        assert!(parse("").is_err());
    }

    proptest! {
        #[test]
        fn write_parse_round_trip(n in 3usize..8, picks in proptest::collection::vec(any::<bool>(), 56)) {
            let edges: Vec<Vec<usize>> = super::super::r_subsets(n, 3)
                .into_iter()
                .zip(picks)
                .filter(|(_, p)| *p)
                .map(|(e, _)| e)
                .collect();
            let g = Hypergraph::new(3, n, edges).unwrap();
            prop_assert_eq!(parse(&write(&g)).unwrap(), g);
        }
    }
}
