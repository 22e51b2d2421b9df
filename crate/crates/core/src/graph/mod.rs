//! Simple undirected graphs, edge labelings and their weighted adjacency
//! matrices.
//!
//! Vertices are `0..n`. Edges are stored canonically as `(u, v)` with
//! `u < v`, sorted lexicographically, so every edge has a stable index that
//! labelings and the solvers key on.

mod clique;
mod matrix;

pub use clique::{clique_cover, CliqueCover, CrossEdge};
pub use matrix::{labeled_graph_to_matrix, matrix_to_labeled_graph, WeightedAdjacencyMatrix};

use crate::error::{Error, Result};

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<Vertex>>,
}

impl Graph {
    /// Builds a graph from an arbitrary edge list. Endpoint order within an
    /// edge does not matter; loops and repeated edges are rejected.
    pub fn new(order: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= order {
                    return Err(Error::VertexOutOfRange { vertex: w, order });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &canon {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Ok(Self {
            order,
            edges: canon,
            adj,
        })
    }

    pub fn empty(order: usize) -> Self {
        Self {
            order,
            edges: Vec::new(),
            adj: vec![Vec::new(); order],
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.order && v < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    /// Index of `{u, v}` in [`Graph::edges`].
    pub fn edge_index(&self, u: Vertex, v: Vertex) -> Option<usize> {
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Indices of the edges incident to `v`.
    pub fn incident_edges(&self, v: Vertex) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().map(move |&w| {
            self.edge_index(v, w)
                .expect("adjacency and edge list agree")
        })
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.order];
        let mut out = Vec::new();
        for start in 0..self.order {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                i += 1;
                for &w in &self.adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut pos = vec![usize::MAX; self.order];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| pos[u] != usize::MAX && pos[v] != usize::MAX)
            .map(|&(u, v)| (pos[u], pos[v]));
        Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph")
    }

    /// The graph with vertices renamed by `perm` (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[Vertex]) -> Result<Graph> {
        check_permutation(perm, self.order)?;
        Graph::new(
            self.order,
            self.edges.iter().map(|&(u, v)| (perm[u], perm[v])),
        )
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.order * self.order.saturating_sub(1) / 2
    }
}

fn check_permutation(perm: &[Vertex], order: usize) -> Result<()> {
    if perm.len() != order {
        return Err(Error::Internal(format!(
            "permutation of length {} for {} vertices",
            perm.len(),
            order
        )));
    }
    let mut seen = vec![false; order];
    for &p in perm {
        if p >= order || std::mem::replace(&mut seen[p], true) {
            return Err(Error::Internal("not a permutation".into()));
        }
    }
    Ok(())
}

/// K_n.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::EmptyGraph);
    }
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Graph::new(n, edges)
}

/// `g1 + g2`: the vertices of `g2` follow those of `g1`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let off = g1.order;
    let edges = g1
        .edges
        .iter()
        .copied()
        .chain(g2.edges.iter().map(|&(u, v)| (u + off, v + off)));
    Graph::new(g1.order + g2.order, edges).expect("union of valid graphs")
}

/// `g` with the extra edge `{u, v}`.
pub fn add_cross_edge(g: &Graph, u: Vertex, v: Vertex) -> Result<Graph> {
    if u == v {
        return Err(Error::Loop(u));
    }
    if g.has_edge(u, v) {
        return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
    }
    Graph::new(g.order, g.edges.iter().copied().chain([(u, v)]))
}

pub fn is_connected(g: &Graph) -> bool {
    g.order > 0 && g.components().len() == 1
}

/// True if some vertex has degree 0 or some component is a single edge.
pub fn has_isolated_vertex_or_edge(g: &Graph) -> bool {
    find_isolated(g).is_some()
}

pub(crate) fn find_isolated(g: &Graph) -> Option<Error> {
    if let Some(v) = (0..g.order).find(|&v| g.degree(v) == 0) {
        return Some(Error::IsolatedVertex(v));
    }
    g.edges
        .iter()
        .find(|&&(u, v)| g.degree(u) == 1 && g.degree(v) == 1)
        .map(|&(u, v)| Error::IsolatedEdge(u, v))
}

/// A total map from edges to positive labels, aligned with [`Graph::edges`].
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EdgeLabeling {
    graph: Graph,
    labels: Vec<u32>,
}

impl EdgeLabeling {
    pub fn new(graph: Graph, labels: Vec<u32>) -> Result<Self> {
        if labels.len() != graph.size() {
            return Err(Error::LabelCount {
                expected: graph.size(),
                got: labels.len(),
            });
        }
        if let Some(i) = labels.iter().position(|&l| l == 0) {
            let (u, v) = graph.edges[i];
            return Err(Error::ZeroLabel(u, v));
        }
        Ok(Self { graph, labels })
    }

    /// Labels every edge with the same value.
    pub fn constant(graph: Graph, label: u32) -> Result<Self> {
        let labels = vec![label; graph.size()];
        Self::new(graph, labels)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn labels(&self) -> &[u32] {
        &self.labels
    }

    pub fn label(&self, u: Vertex, v: Vertex) -> Option<u32> {
        self.graph.edge_index(u, v).map(|i| self.labels[i])
    }

    /// Largest label used; 1 for an edgeless graph.
    pub fn strength(&self) -> u32 {
        self.labels.iter().copied().max().unwrap_or(1)
    }

    /// `(u, v, label)` triples in edge order.
    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        self.graph
            .edges
            .iter()
            .zip(&self.labels)
            .map(|(&(u, v), &l)| (u, v, l))
    }

    /// Extends the labeling to a supergraph on the same vertex set, giving
    /// every new edge label 1.
    pub fn extend_with_ones(&self, supergraph: &Graph) -> Result<Self> {
        if supergraph.order() != self.graph.order() {
            return Err(Error::Internal("supergraph has a different order".into()));
        }
        let mut labels = vec![1; supergraph.size()];
        for (u, v, l) in self.iter() {
            let i = supergraph.edge_index(u, v).ok_or_else(|| {
                Error::Internal(format!("edge {{{u}, {v}}} missing from supergraph"))
            })?;
            labels[i] = l;
        }
        Self::new(supergraph.clone(), labels)
    }

    pub fn permuted(&self, perm: &[Vertex]) -> Result<Self> {
        let graph = self.graph.permuted(perm)?;
        let mut labels = vec![0; graph.size()];
        for (u, v, l) in self.iter() {
            labels[graph.edge_index(perm[u], perm[v]).expect("permuted edge")] = l;
        }
        Self::new(graph, labels)
    }
}
