//! Line-oriented graph documents.
//!
//! ```text
//! c optional comment lines
//! p <n> <m>
//! e <u> <v> [label]
//! ```
//!
//! Vertex ids are 1-based. Either every edge line carries a label or none does.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{EdgeLabeling, Graph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphDocument {
    Unlabeled(Graph),
    Labeled(EdgeLabeling),
}

impl GraphDocument {
    pub fn graph(&self) -> &Graph {
        match self {
            GraphDocument::Unlabeled(g) => g,
            GraphDocument::Labeled(l) => l.graph(),
        }
    }

    pub fn labeling(&self) -> Option<&EdgeLabeling> {
        match self {
            GraphDocument::Unlabeled(_) => None,
            GraphDocument::Labeled(l) => Some(l),
        }
    }

    /// Canonical text: header, then edges sorted with `u < v`.
    pub fn emit(&self) -> String {
        match self {
            GraphDocument::Unlabeled(g) => emit_graph(g),
            GraphDocument::Labeled(l) => emit_labeling(l),
        }
    }
}

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn number<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse().map_err(|_| {
        err(
            line,
            format!("{what} `{tok}` is not a non-negative integer"),
        )
    })
}

pub fn parse_graph(text: &str) -> Result<GraphDocument> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    let mut labeled: Option<bool> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let toks: Vec<&str> = raw.split_whitespace().collect();
        match toks.first().copied() {
            None | Some("c") => continue,
            Some("p") => {
                if header.is_some() {
                    return Err(err(line, "second header line"));
                }
                let [_, n, m] = toks[..] else {
                    return Err(err(line, "header must be `p <n> <m>`"));
                };
                header = Some((
                    number(n, line, "vertex count")?,
                    number(m, line, "edge count")?,
                    line,
                ));
            }
            Some("e") => {
                let Some((n, _, _)) = header else {
                    return Err(err(line, "edge line before the `p` header"));
                };
                let (u, v, label) = match toks[..] {
                    [_, u, v] => (u, v, None),
                    [_, u, v, l] => (u, v, Some(l)),
                    _ => return Err(err(line, "edge line must be `e <u> <v> [label]`")),
                };
                let vertex = |tok: &str| -> Result<usize> {
                    let x: usize = number(tok, line, "vertex")?;
                    if x == 0 || x > n {
                        return Err(err(line, format!("vertex {x} outside 1..={n}")));
                    }
                    Ok(x - 1)
                };
                let (u, v) = (vertex(u)?, vertex(v)?);
                if u == v {
                    return Err(err(line, format!("loop at vertex {}", u + 1)));
                }
                let key = (u.min(v), u.max(v));
                if edges.contains(&key) {
                    return Err(err(
                        line,
                        format!("duplicate edge {} {}", key.0 + 1, key.1 + 1),
                    ));
                }
                match (labeled, label.is_some()) {
                    (Some(a), b) if a != b => {
                        return Err(err(line, "either every edge carries a label or none does"));
                    }
                    _ => labeled = Some(label.is_some()),
                }
                if let Some(l) = label {
                    let l: u32 = number(l, line, "label")?;
                    if l == 0 {
                        return Err(err(line, "labels must be positive"));
                    }
                    labels.push(l);
                }
                edges.push(key);
            }
            Some(other) => return Err(err(line, format!("unknown line type `{other}`"))),
        }
    }

    let Some((n, m, header_line)) = header else {
        return Err(err(
            text.lines().count().max(1),
            "missing `p <n> <m>` header",
        ));
    };
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    if n == 0 {
        return Err(err(header_line, "graph must have at least one vertex"));
    }
    // Graph::new sorts edges, so labels are matched by edge afterwards.
    let g = Graph::new(n, edges.iter().copied())?;
    if labeled == Some(true) {
        let mut sorted = vec![0; m];
        for (&(u, v), &l) in edges.iter().zip(&labels) {
            sorted[g.edge_index(u, v).expect("edge was just inserted")] = l;
        }
        Ok(GraphDocument::Labeled(EdgeLabeling::new(g, sorted)?))
    } else {
        Ok(GraphDocument::Unlabeled(g))
    }
}

pub fn emit_graph(g: &Graph) -> String {
    let mut out = format!("p {} {}\n", g.order(), g.size());
    for &(u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

pub fn emit_labeling(l: &EdgeLabeling) -> String {
    let g = l.graph();
    let mut out = format!("p {} {}\n", g.order(), g.size());
    for (u, v, w) in l.iter() {
        writeln!(out, "e {} {} {}", u + 1, v + 1, w).unwrap();
    }
    out
}
