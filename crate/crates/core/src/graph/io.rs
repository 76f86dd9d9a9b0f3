//! Plain-text edge lists.
//!
//! ```text
//! # anything after '#' is ignored
//! n 5
//! 0 1 0.12
//! 1 2 0.27
//! ```
//!
//! The header `n <count>` comes first; each following line is `u v w`.

use std::collections::HashSet;
use std::fmt::Write as _;

use super::WeightedGraph;
use crate::error::{Error, Result};
use crate::scalar::Real;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_edge_list<W: Real>(text: &str) -> Result<WeightedGraph<W>> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match n {
            None => {
                if fields.len() != 2 || fields[0] != "n" {
                    return Err(parse_error(line_no, "expected header `n <vertex count>`"));
                }
                let count: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad vertex count {:?}", fields[1])))?;
                if count == 0 {
                    return Err(parse_error(line_no, "vertex count must be positive"));
                }
                n = Some(count);
            }
            Some(count) => {
                if fields.len() != 3 {
                    return Err(parse_error(
                        line_no,
                        format!("expected `u v w`, found {} fields", fields.len()),
                    ));
                }
                let u: usize = fields[0]
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad vertex id {:?}", fields[0])))?;
                let v: usize = fields[1]
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad vertex id {:?}", fields[1])))?;
                let w: W = fields[2]
                    .parse()
                    .map_err(|_| parse_error(line_no, format!("bad weight {:?}", fields[2])))?;
                if u >= count || v >= count {
                    return Err(parse_error(
                        line_no,
                        format!("vertex id out of range 0..{count}"),
                    ));
                }
                if u == v {
                    return Err(parse_error(line_no, format!("loop at vertex {u}")));
                }
                if !w.is_finite() {
                    return Err(parse_error(line_no, "weight must be finite"));
                }
                if !seen.insert((u.min(v), u.max(v))) {
                    return Err(parse_error(line_no, format!("duplicate edge ({u}, {v})")));
                }
                edges.push((u, v, w));
            }
        }
    }
    let n = n.ok_or_else(|| parse_error(1, "missing header `n <vertex count>`"))?;
    WeightedGraph::new(n, edges)
}

pub fn format_edge_list<W: Real>(g: &WeightedGraph<W>) -> String {
    let mut out = format!("n {}\n", g.n());
    for e in g.edges() {
        let _ = writeln!(out, "{} {} {}", e.edge.u(), e.edge.v(), e.weight);
    }
    out
}
