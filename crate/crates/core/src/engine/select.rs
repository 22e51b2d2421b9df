//! Choosing the cross edges a construction relies on.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_connected, CliqueCover, CrossEdge, Graph, Vertex};

/// How the chosen cross edges meet the cover parts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CrossPattern {
    None,
    OneEdge,
    /// Both chosen edges enter the middle part at one vertex.
    TwoEdgesSameVertex,
    /// The chosen edges enter the middle part at different vertices.
    TwoEdgesDiffVertices,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossSelection {
    pub chosen: Vec<CrossEdge>,
    pub pattern: CrossPattern,
    /// Part incident to both chosen edges of a three-part cover.
    pub middle: Option<usize>,
    /// Cross edges not chosen; constructions label them 1.
    pub surplus: Vec<CrossEdge>,
}

impl CrossSelection {
    /// Number of chosen edges at vertex `v`.
    pub fn in_degree(&self, v: Vertex) -> usize {
        self.chosen.iter().filter(|e| e.u == v || e.v == v).count()
    }
}

/// Picks one cross edge for two parts, two edges forming a spanning tree of
/// the parts for three. Among the part pairs joined by some edge, the first
/// two in the order (0,1), (0,2), (1,2) are used, each with its smallest edge.
pub fn select_cross_edges(g: &Graph, cover: &CliqueCover) -> Result<CrossSelection> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let cross = cover.cross_edges();
    let chosen: Vec<CrossEdge> = match cover.len() {
        1 => Vec::new(),
        2 => cross.first().copied().into_iter().collect(),
        3 => [(0, 1), (0, 2), (1, 2)]
            .into_iter()
            .filter_map(|(a, b)| {
                cross
                    .iter()
                    .find(|e| (e.part_a, e.part_b) == (a, b))
                    .copied()
            })
            .take(2)
            .collect(),
        k => {
            return Err(Error::CoverParts {
                expected: "1, 2 or 3".into(),
                got: k,
            })
        }
    };
    let (pattern, middle) = match chosen.as_slice() {
        [] => (CrossPattern::None, None),
        [_] => (CrossPattern::OneEdge, None),
        [e, f] => {
            let middle = [e.part_a, e.part_b]
                .into_iter()
                .find(|&p| p == f.part_a || p == f.part_b)
                .expect("two distinct part pairs out of three share a part");
            let at = |x: &CrossEdge| if x.part_a == middle { x.u } else { x.v };
            let pattern = if at(e) == at(f) {
                CrossPattern::TwoEdgesSameVertex
            } else {
                CrossPattern::TwoEdgesDiffVertices
            };
            (pattern, Some(middle))
        }
        _ => unreachable!("at most two edges are chosen"),
    };
    let surplus = cross
        .iter()
        .filter(|e| !chosen.contains(e))
        .copied()
        .collect();
    Ok(CrossSelection {
        chosen,
        pattern,
        middle,
        surplus,
    })
}
