//! Text formats.
//!
//! Edge lists: optional `#` comment lines, a header `n m`, then `m` lines
//! `u v` with 0-based ids. Vertex lists (modulators) are whitespace
//! separated ids, again with `#` comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let mut next = |what: &str| -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| parse_error(line, format!("missing {what}")))?;
        field
            .parse()
            .map_err(|_| parse_error(line, format!("bad {what} `{field}`")))
    };
    let pair = (next("first field")?, next("second field")?);
    if fields.next().is_some() {
        return Err(parse_error(line, "expected exactly two fields"));
    }
    Ok(pair)
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(0, "missing `n m` header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(parse_error(line, format!("more than {m} edges")));
        }
        edges.push(parse_pair(line, body)?);
    }
    if edges.len() != m {
        return Err(parse_error(
            0,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edge_list(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.m() + 1));
    writeln!(out, "{} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    let mut ids = Vec::new();
    for (line, body) in content_lines(text) {
        for field in body.split_whitespace() {
            ids.push(
                field
                    .parse()
                    .map_err(|_| parse_error(line, format!("bad vertex id `{field}`")))?,
            );
        }
    }
    Ok(ids)
}

pub fn write_vertex_list(ids: &[usize]) -> String {
    let mut out = String::new();
    for v in ids {
        writeln!(out, "{v}").unwrap();
    }
    out
}
