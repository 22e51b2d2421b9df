use super::{Graph, Vertex};
use crate::error::{Error, Result};

/// An edge between two different cover parts, `part_a < part_b`, with `u` in
/// `part_a` and `v` in `part_b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossEdge {
    pub part_a: usize,
    pub part_b: usize,
    pub u: Vertex,
    pub v: Vertex,
}

/// A partition of the vertex set into cliques.
///
/// Parts are sorted internally and ordered by size, ties broken by the
/// smallest vertex they contain.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueCover {
    parts: Vec<Vec<Vertex>>,
    cross_edges: Vec<CrossEdge>,
}

impl CliqueCover {
    /// Canonicalizes `parts` and checks that they partition `g` into cliques.
    pub fn new(g: &Graph, mut parts: Vec<Vec<Vertex>>) -> Result<Self> {
        let mut owner = vec![usize::MAX; g.order()];
        for part in &mut parts {
            if part.is_empty() {
                return Err(Error::InvalidCover("empty part".into()));
            }
            part.sort_unstable();
        }
        parts.sort_by_key(|p| (p.len(), p[0]));
        for (i, part) in parts.iter().enumerate() {
            for &v in part {
                if v >= g.order() {
                    return Err(Error::VertexOutOfRange {
                        vertex: v,
                        order: g.order(),
                    });
                }
                if owner[v] != usize::MAX {
                    return Err(Error::InvalidCover(format!("vertex {v} in two parts")));
                }
                owner[v] = i;
            }
            for (a, &u) in part.iter().enumerate() {
                if let Some(&v) = part[a + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                    return Err(Error::InvalidCover(format!(
                        "part {i} is not a clique: {u} and {v} are not adjacent"
                    )));
                }
            }
        }
        if let Some(v) = owner.iter().position(|&o| o == usize::MAX) {
            return Err(Error::InvalidCover(format!("vertex {v} not covered")));
        }
        let mut cross_edges: Vec<CrossEdge> = g
            .edges()
            .iter()
            .filter(|&&(u, v)| owner[u] != owner[v])
            .map(|&(u, v)| {
                let (u, v) = if owner[u] < owner[v] { (u, v) } else { (v, u) };
                CrossEdge {
                    part_a: owner[u],
                    part_b: owner[v],
                    u,
                    v,
                }
            })
            .collect();
        cross_edges.sort_unstable();
        Ok(Self { parts, cross_edges })
    }

    pub fn parts(&self) -> &[Vec<Vertex>] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(Vec::len).collect()
    }

    pub fn cross_edges(&self) -> &[CrossEdge] {
        &self.cross_edges
    }

    /// Part index of every vertex.
    pub fn owners(&self, order: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; order];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                owner[v] = i;
            }
        }
        owner
    }
}

/// Dense bitset over vertices.
#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    fn intersects(&self, other: &Bits) -> bool {
        self.0.iter().zip(&other.0).any(|(a, b)| a & b != 0)
    }
}

/// Minimum clique cover, if its size is at most `k_max`.
///
/// Runs an exact k-colouring search on the complement for k = 1, 2, ...;
/// colour classes of the complement are cliques of `g`.
pub fn clique_cover(g: &Graph, k_max: usize) -> Option<CliqueCover> {
    let n = g.order();
    if n == 0 {
        return None;
    }
    let mut co_adj = vec![Bits::new(n); n];
    let mut co_deg = vec![0usize; n];
    for u in 0..n {
        for v in 0..n {
            if u != v && !g.has_edge(u, v) {
                co_adj[u].set(v);
                co_deg[u] += 1;
            }
        }
    }
    let mut order: Vec<Vertex> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(co_deg[v]), v));

    for k in 1..=k_max.min(n) {
        let mut colouring = Colouring {
            co_adj: &co_adj,
            order: &order,
            classes: vec![Bits::new(n); k],
            colour: vec![usize::MAX; n],
        };
        if colouring.extend(0, 0) {
            let mut parts = vec![Vec::new(); k];
            for v in 0..n {
                parts[colouring.colour[v]].push(v);
            }
            return Some(
                CliqueCover::new(g, parts).expect("colour classes of the complement are cliques"),
            );
        }
    }
    None
}

struct Colouring<'a> {
    co_adj: &'a [Bits],
    order: &'a [Vertex],
    classes: Vec<Bits>,
    colour: Vec<usize>,
}

impl Colouring<'_> {
    fn extend(&mut self, idx: usize, used: usize) -> bool {
        let Some(&v) = self.order.get(idx) else {
            return used == self.classes.len();
        };
        let k = self.classes.len();
        // Remaining vertices must still be able to open every unused colour.
        if k - used > self.order.len() - idx {
            return false;
        }
        // A fresh colour is interchangeable with any other fresh colour.
        for c in 0..(used + 1).min(k) {
            if self.co_adj[v].intersects(&self.classes[c]) {
                continue;
            }
            self.classes[c].set(v);
            self.colour[v] = c;
            if self.extend(idx + 1, used.max(c + 1)) {
                return true;
            }
            self.classes[c].clear(v);
        }
        self.colour[v] = usize::MAX;
        false
    }
}
