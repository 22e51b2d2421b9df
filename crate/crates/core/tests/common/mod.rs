//! Shared test helpers: independent oracles and random instance generators.
#![allow(dead_code)]

use std::collections::HashMap;

use pistr::graph::{Graph, Vertex, WeightedAdjacencyMatrix};
use rand::seq::SliceRandom;
use rand::Rng;

/// Entry `(i, j)` of `M_n(x, y, z)`, 1-based, computed from the definition
/// without the library: `x` on and above the anti-diagonal, `z` at the pivot
/// pair `(ceil(n/2)+1, n)`, `y` elsewhere.
pub fn oracle_m_entry(n: usize, x: u32, y: u32, z: u32, i: usize, j: usize) -> u32 {
    if i == j {
        return 0;
    }
    let (a, b) = (i.min(j), i.max(j));
    let k = n.div_ceil(2) + 1;
    if a + b <= n + 1 {
        x
    } else if a == k && b == n {
        z
    } else {
        y
    }
}

pub fn oracle_m(n: usize, x: u32, y: u32, z: u32) -> Vec<Vec<u32>> {
    (1..=n)
        .map(|i| (1..=n).map(|j| oracle_m_entry(n, x, y, z, i, j)).collect())
        .collect()
}

pub fn oracle_direct_sum(blocks: &[Vec<Vec<u32>>]) -> Vec<Vec<u32>> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    let mut out = vec![vec![0; n]; n];
    let mut off = 0;
    for b in blocks {
        for (i, row) in b.iter().enumerate() {
            for (j, &w) in row.iter().enumerate() {
                out[off + i][off + j] = w;
            }
        }
        off += b.len();
    }
    out
}

/// Row products as plain integers. `None` if some row has no nonzero entry.
pub fn oracle_row_products(rows: &[Vec<u32>]) -> Option<Vec<u128>> {
    rows.iter()
        .map(|r| {
            let nz: Vec<u128> = r
                .iter()
                .filter(|&&w| w != 0)
                .map(|&w| u128::from(w))
                .collect();
            (!nz.is_empty()).then(|| nz.iter().product())
        })
        .collect()
}

/// Smallest colliding pair of row products, by brute force over all pairs.
pub fn oracle_witness(products: &[u128]) -> Option<(usize, usize)> {
    for u in 0..products.len() {
        for v in u + 1..products.len() {
            if products[u] == products[v] {
                return Some((u, v));
            }
        }
    }
    None
}

pub fn oracle_irregular(rows: &[Vec<u32>]) -> Option<bool> {
    oracle_row_products(rows).map(|p| oracle_witness(&p).is_none())
}

/// Product degrees of an edge-labeled graph given as `(u, v, label)` triples.
pub fn oracle_graph_products(order: usize, edges: &[(usize, usize, u32)]) -> Vec<u128> {
    let mut p = vec![1u128; order];
    for &(u, v, w) in edges {
        p[u] *= u128::from(w);
        p[v] *= u128::from(w);
    }
    p
}

pub fn rows_of(m: &WeightedAdjacencyMatrix) -> Vec<Vec<u32>> {
    m.to_rows()
}

/// Union of cliques of the given sizes with shuffled vertex ids, joined into a
/// connected graph by a random spanning tree over the parts, plus every other
/// cross pair independently with probability `p_extra`.
pub fn planted_cliques<R: Rng>(
    rng: &mut R,
    sizes: &[usize],
    p_extra: f64,
) -> (Graph, Vec<Vec<Vertex>>) {
    let n: usize = sizes.iter().sum();
    let mut ids: Vec<Vertex> = (0..n).collect();
    ids.shuffle(rng);
    let mut parts = Vec::new();
    let mut off = 0;
    for &s in sizes {
        parts.push(ids[off..off + s].to_vec());
        off += s;
    }
    let mut edges = Vec::new();
    for part in &parts {
        for (a, &u) in part.iter().enumerate() {
            for &v in &part[a + 1..] {
                edges.push((u, v));
            }
        }
    }
    let mut tree = Vec::new();
    for p in 1..parts.len() {
        let q = rng.gen_range(0..p);
        let u = *parts[p].choose(rng).unwrap();
        let v = *parts[q].choose(rng).unwrap();
        tree.push((u.min(v), u.max(v)));
    }
    for p in 0..parts.len() {
        for q in p + 1..parts.len() {
            for &u in &parts[p] {
                for &v in &parts[q] {
                    let e = (u.min(v), u.max(v));
                    if tree.contains(&e) || rng.gen_bool(p_extra) {
                        edges.push(e);
                    }
                }
            }
        }
    }
    (Graph::new(n, edges).unwrap(), parts)
}

/// Connected graph on `n >= 3` vertices: a random tree plus extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    let mut tries = 0;
    while edges.len() < n - 1 + extra && tries < 100 {
        tries += 1;
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::new(n, edges).unwrap()
}

/// Disjoint union of connected components, each on at least 3 vertices,
/// with at most `max_edges` edges in total.
pub fn random_disconnected<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    loop {
        let k = rng.gen_range(2..=3);
        let mut edges = Vec::new();
        let mut off = 0;
        for _ in 0..k {
            let n = rng.gen_range(3..=5);
            let extra = rng.gen_range(0..=3);
            let c = random_connected(rng, n, extra);
            edges.extend(c.edges().iter().map(|&(u, v)| (u + off, v + off)));
            off += n;
        }
        if edges.len() <= max_edges {
            return Graph::new(off, edges).unwrap();
        }
    }
}

/// Random symmetric matrix with zero diagonal and entries in `0..=max_label`.
pub fn random_matrix<R: Rng>(rng: &mut R, order: usize, max_label: u32) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; order]; order];
    for i in 0..order {
        for j in i + 1..order {
            let w = i64::from(rng.gen_range(0..=max_label));
            m[i][j] = w;
            m[j][i] = w;
        }
    }
    m
}

/// Counts of each value in a row, for census checks.
pub fn value_counts(row: &[u32]) -> HashMap<u32, usize> {
    let mut c = HashMap::new();
    for &w in row {
        *c.entry(w).or_default() += 1;
    }
    c
}
