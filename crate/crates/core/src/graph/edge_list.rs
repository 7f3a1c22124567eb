//! Plain-text edge lists: the first non-comment line holds `n`, every later
//! non-comment line holds one edge `u v` (0-indexed). Lines starting with `#`
//! and blank lines are ignored; duplicate and reversed edges collapse.

use std::fmt::Write as _;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse(text: &str) -> Result<Graph> {
    let mut order: Option<usize> = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = i + 1;
        let parse_id = |tok: &str| {
            tok.parse::<usize>().map_err(|e| Error::Parse {
                line: line_no,
                msg: format!("bad integer {tok:?}: {e}"),
            })
        };
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match (order, tokens.as_slice()) {
            (None, [n]) => order = Some(parse_id(n)?),
            (None, _) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected the vertex count on its own line".into(),
                })
            }
            (Some(_), [u, v]) => edges.push((parse_id(u)?, parse_id(v)?)),
            (Some(_), _) => {
                return Err(Error::Parse {
                    line: line_no,
                    msg: "expected an edge `u v`".into(),
                })
            }
        }
    }
    let n = order.ok_or(Error::Parse {
        line: 0,
        msg: "missing vertex count".into(),
    })?;
    Graph::new(n, &edges)
}

/// Writes `n` followed by one `u v` line per edge (`u < v`, ascending).
pub fn write(g: &Graph) -> String {
    let mut out = format!("{}\n", g.order());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
