//! Product degrees and product-irregularity checks.
//!
//! A product degree is kept factored as a prime-exponent vector. With
//! labels in `{1, 2, 3}` it is the exponent pair `(a, b)` of `2^a * 3^b`.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{find_isolated, EdgeLabeling, Vertex, WeightedAdjacencyMatrix};

/// Exact product of labels, stored as `(prime, exponent)` pairs sorted by
/// prime with positive exponents. The empty vector is the product 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProductDegree(Vec<(u32, u32)>);

impl ProductDegree {
    pub fn one() -> Self {
        Self::default()
    }

    pub fn of_label(label: u32) -> Self {
        let mut d = Self::one();
        d.mul_label(label);
        d
    }

    pub fn mul_label(&mut self, label: u32) {
        for (p, e) in factorize(label) {
            match self.0.binary_search_by_key(&p, |&(q, _)| q) {
                Ok(i) => self.0[i].1 += e,
                Err(i) => self.0.insert(i, (p, e)),
            }
        }
    }

    pub fn exponent(&self, prime: u32) -> u32 {
        self.0
            .iter()
            .find(|&&(p, _)| p == prime)
            .map_or(0, |&(_, e)| e)
    }

    pub fn factors(&self) -> &[(u32, u32)] {
        &self.0
    }

    /// `(a, b)` with the degree equal to `2^a * 3^b`, if no other prime occurs.
    pub fn pair(&self) -> Option<(u32, u32)> {
        self.0
            .iter()
            .all(|&(p, _)| p == 2 || p == 3)
            .then(|| (self.exponent(2), self.exponent(3)))
    }

    /// The product as an integer, if it fits.
    pub fn value(&self) -> Option<u128> {
        self.0.iter().try_fold(1u128, |acc, &(p, e)| {
            u128::from(p)
                .checked_pow(e)
                .and_then(|x| acc.checked_mul(x))
        })
    }
}

impl fmt::Display for ProductDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some((a, b)) = self.pair() {
            return write!(f, "({a},{b})");
        }
        let parts: Vec<String> = self.0.iter().map(|(p, e)| format!("{p}^{e}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

pub(crate) fn factorize(mut x: u32) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= x {
        let mut e = 0;
        while x.is_multiple_of(p) {
            x /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if x > 1 {
        out.push((x, 1));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IrregularityReport {
    pub ok: bool,
    /// Lexicographically smallest pair `(u, v)`, `u < v`, with equal degrees.
    pub witness: Option<(Vertex, Vertex)>,
    pub degrees: Vec<ProductDegree>,
}

impl IrregularityReport {
    pub fn from_degrees(degrees: Vec<ProductDegree>) -> Self {
        let witness = smallest_collision(&degrees);
        Self {
            ok: witness.is_none(),
            witness,
            degrees,
        }
    }
}

fn smallest_collision<T: Eq + std::hash::Hash>(degrees: &[T]) -> Option<(usize, usize)> {
    let mut first: HashMap<&T, usize> = HashMap::with_capacity(degrees.len());
    let mut best: Option<(usize, usize)> = None;
    for (v, d) in degrees.iter().enumerate() {
        match first.get(d) {
            // The first repeat of a class pairs with the class's first
            // member; later repeats only produce larger pairs.
            Some(&u) => {
                if best.is_none_or(|(bu, _)| u < bu) {
                    best = Some((u, v));
                }
            }
            None => {
                first.insert(d, v);
            }
        }
    }
    best
}

pub fn product_degree(labeling: &EdgeLabeling, v: Vertex) -> Result<ProductDegree> {
    let g = labeling.graph();
    if v >= g.order() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            order: g.order(),
        });
    }
    if g.degree(v) == 0 {
        return Err(Error::IsolatedVertex(v));
    }
    let mut d = ProductDegree::one();
    for e in g.incident_edges(v) {
        d.mul_label(labeling.labels()[e]);
    }
    Ok(d)
}

pub fn product_degrees(labeling: &EdgeLabeling) -> Result<Vec<ProductDegree>> {
    (0..labeling.graph().order())
        .map(|v| product_degree(labeling, v))
        .collect()
}

/// Checks that all product degrees are distinct. Isolated vertices are a
/// precondition violation; isolated edges are allowed and always collide.
pub fn is_product_irregular(labeling: &EdgeLabeling) -> Result<IrregularityReport> {
    if let Some(Error::IsolatedVertex(v)) = find_isolated(labeling.graph()) {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(IrregularityReport::from_degrees(product_degrees(labeling)?))
}

/// Row-wise check of a weighted adjacency matrix: the degree of row `i` is
/// the product of its nonzero entries.
pub fn check_matrix(m: &WeightedAdjacencyMatrix) -> Result<IrregularityReport> {
    m.validate()?;
    let mut degrees = Vec::with_capacity(m.order());
    for (i, row) in m.rows().enumerate() {
        let mut d = ProductDegree::one();
        let mut any = false;
        for &x in row.iter().filter(|&&x| x != 0) {
            d.mul_label(x);
            any = true;
        }
        if !any {
            return Err(Error::IsolatedVertex(i));
        }
        degrees.push(d);
    }
    Ok(IrregularityReport::from_degrees(degrees))
}
