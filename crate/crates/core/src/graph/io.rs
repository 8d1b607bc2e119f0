use std::fmt::Write as _;

use super::Multigraph;
use crate::error::{Error, Result};

/// Significant lines of a text document: `#` comments and blank lines are
/// dropped, and each surviving line keeps its 1-based line number.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub(crate) fn parse_usize(line: usize, token: &str) -> Result<usize> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("expected a non-negative integer, found `{token}`"),
    })
}

/// Parses the edge-list format: a header `n m` followed by exactly `m` lines
/// `u v`. Repeated lines become parallel edges.
pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut g = Multigraph::new(n)?;
    let mut seen = 0usize;
    for (line, body) in lines {
        if seen == m {
            return Err(Error::Parse {
                line,
                message: format!("header declares {m} edges but more follow"),
            });
        }
        let (u, v) = parse_pair(line, body)?;
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop { line, vertex: u });
        }
        g.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Parse {
            line: text.lines().count().max(1),
            message: format!("header declares {m} edges, found {seen}"),
        });
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<(usize, usize)> {
    let mut tokens = body.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => Ok((parse_usize(line, a)?, parse_usize(line, b)?)),
        _ => Err(Error::Parse {
            line,
            message: format!("expected two integers, found `{body}`"),
        }),
    }
}

/// Serialises a graph in the edge-list format, one line per parallel edge,
/// pairs in lexicographic order.
pub fn write_edge_list(g: &Multigraph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v, m) in g.edges() {
        for _ in 0..m {
            let _ = writeln!(out, "{u} {v}");
        }
    }
    out
}
