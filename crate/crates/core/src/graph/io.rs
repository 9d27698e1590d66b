//! Edge-list text format.
//!
//! ```text
//! n m
//! u v      (m lines, 0 <= u < v < n, lexicographic order)
//! ```
//!
//! The writer emits exactly this, newline-terminated. The reader also accepts
//! edges in any order or orientation and a missing final newline, but rejects
//! loops, duplicates, out-of-range vertices and a wrong edge count.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn two_numbers(line_no: usize, line: &str) -> Result<(usize, usize)> {
    let mut fields = line.split(' ');
    let mut next = || -> Result<usize> {
        let field = fields
            .next()
            .ok_or_else(|| parse_err(line_no, "expected two integers"))?;
        field
            .parse::<usize>()
            .map_err(|_| parse_err(line_no, format!("not a nonnegative integer: {field:?}")))
    };
    let a = next()?;
    let b = next()?;
    if fields.next().is_some() {
        return Err(parse_err(line_no, "expected exactly two integers"));
    }
    Ok((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| parse_err(1, "missing header"))?;
    let (n, m) = two_numbers(1, header.trim_end_matches('\r'))?;
    if n > i32::MAX as usize {
        return Err(parse_err(1, format!("vertex count {n} too large")));
    }
    let mut g = Graph::empty(n);
    let mut last_line = 1;
    for (line_no, raw) in lines {
        let line = raw.trim_end_matches('\r');
        if line.is_empty() {
            last_line = line_no;
            continue;
        }
        if g.edge_count() == m {
            return Err(parse_err(line_no, format!("more than {m} edges")));
        }
        let (u, v) = two_numbers(line_no, line)?;
        if u >= n || v >= n {
            return Err(parse_err(
                line_no,
                format!("vertex index out of range for n={n}"),
            ));
        }
        if u == v {
            return Err(parse_err(line_no, format!("loop at vertex {u}")));
        }
        if !g.add_edge(u, v) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        last_line = line_no;
    }
    if g.edge_count() != m {
        return Err(parse_err(
            last_line,
            format!("header declares {m} edges, found {}", g.edge_count()),
        ));
    }
    Ok(g)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = String::with_capacity(8 * (g.edge_count() + 1));
    let _ = writeln!(out, "{} {}", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}
