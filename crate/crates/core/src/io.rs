//! Plain-text edge lists.
//!
//! ```text
//! # optional comments
//! n 4
//! 0 1
//! 1 2
//! ```
//!
//! The `n` header is optional; without it the order is one more than the largest
//! vertex id. Vertices are 0-indexed unless the caller asks for a 1-indexed shift.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EdgeListOptions {
    /// Vertex ids in the text start at 1.
    pub one_indexed: bool,
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    parse_edge_list_with(text, EdgeListOptions::default())
}

pub fn parse_edge_list_with(text: &str, opts: EdgeListOptions) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();
    let mut seen_body = false;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let err = |msg: String| Error::Parse { line, msg };
        if fields[0] == "n" {
            if seen_body || declared.is_some() {
                return Err(err(
                    "header must come before any edge and appear once".into()
                ));
            }
            if fields.len() != 2 {
                return Err(err(format!("malformed header '{trimmed}'")));
            }
            let n = fields[1]
                .parse::<usize>()
                .map_err(|_| err(format!("bad vertex count '{}'", fields[1])))?;
            declared = Some(n);
            continue;
        }
        if fields.len() != 2 {
            return Err(err(format!("expected 'u v', got '{trimmed}'")));
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            let id = field
                .parse::<usize>()
                .map_err(|_| err(format!("bad vertex id '{field}'")))?;
            *slot = if opts.one_indexed {
                id.checked_sub(1)
                    .ok_or_else(|| err("vertex 0 in a 1-indexed file".into()))?
            } else {
                id
            };
        }
        seen_body = true;
        edges.push((line, ends[0], ends[1]));
    }

    let n = match declared {
        Some(n) => n,
        None => edges
            .iter()
            .map(|&(_, u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let mut b = GraphBuilder::new(n);
    for (line, u, v) in edges {
        let shown = |x: usize| x + usize::from(opts.one_indexed);
        let msg = if u == v {
            Some(format!("self-loop at vertex {}", shown(u)))
        } else if u >= n || v >= n {
            Some(format!(
                "vertex {} out of range for n = {n}",
                shown(u.max(v))
            ))
        } else if b.has_edge(u, v) {
            Some(format!("duplicate edge {} {}", shown(u), shown(v)))
        } else {
            None
        };
        if let Some(msg) = msg {
            return Err(Error::Parse { line, msg });
        }
        b.add_edge(u, v)?;
    }
    Ok(b.build())
}

/// Writes `g` with an `n` header so isolated trailing vertices survive a round trip.
pub fn write_edge_list(g: &Graph) -> String {
    write_edge_list_with(g, EdgeListOptions::default())
}

pub fn write_edge_list_with(g: &Graph, opts: EdgeListOptions) -> String {
    let shift = usize::from(opts.one_indexed);
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(out, "{} {}", u + shift, v + shift).expect("writing to a String");
    }
    out
}
