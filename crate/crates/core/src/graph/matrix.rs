use std::fmt;

use super::{EdgeLabeling, Graph};
use crate::error::{Error, Result};

/// Symmetric non-negative integer matrix with zero diagonal. Entry `(i, j)`
/// is the label of edge `{i, j}`, or 0 when the vertices are not adjacent.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedAdjacencyMatrix {
    order: usize,
    entries: Vec<u32>,
}

impl WeightedAdjacencyMatrix {
    pub fn zeros(order: usize) -> Self {
        Self {
            order,
            entries: vec![0; order * order],
        }
    }

    /// Validates and builds a matrix from signed rows.
    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        let order = rows.len();
        let mut m = Self::zeros(order);
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != order {
                return Err(Error::NotSquare);
            }
            for (j, &x) in row.iter().enumerate() {
                if x < 0 {
                    return Err(Error::NegativeEntry(i, j));
                }
                m.entries[i * order + j] =
                    u32::try_from(x).map_err(|_| Error::EntryTooLarge(i, j))?;
            }
        }
        m.validate()?;
        Ok(m)
    }

    /// Builds a matrix from golden data that is known to be valid.
    pub(crate) fn from_static(rows: &[&[u8]]) -> Self {
        let order = rows.len();
        let entries = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), order);
                r.iter().map(|&x| u32::from(x))
            })
            .collect();
        let m = Self { order, entries };
        m.validate().expect("golden matrix is valid");
        m
    }

    pub fn validate(&self) -> Result<()> {
        for i in 0..self.order {
            if self.get(i, i) != 0 {
                return Err(Error::NonzeroDiagonal(i));
            }
            for j in i + 1..self.order {
                if self.get(i, j) != self.get(j, i) {
                    return Err(Error::Asymmetric(i, j));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.order + j]
    }

    /// Sets `(i, j)` and `(j, i)`.
    pub fn set_symmetric(&mut self, i: usize, j: usize, value: u32) {
        assert_ne!(i, j, "diagonal entries stay zero");
        self.entries[i * self.order + j] = value;
        self.entries[j * self.order + i] = value;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.entries[i * self.order..(i + 1) * self.order]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[u32]> {
        self.entries.chunks(self.order.max(1)).take(self.order)
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.rows().map(<[u32]>::to_vec).collect()
    }

    /// The matrix with row and column `v` removed.
    pub fn without_vertex(&self, v: usize) -> Result<Self> {
        if v >= self.order {
            return Err(Error::RowOutOfRange {
                row: v,
                order: self.order,
            });
        }
        let keep: Vec<usize> = (0..self.order).filter(|&i| i != v).collect();
        Ok(self.submatrix(&keep))
    }

    /// Principal submatrix on `indices`, in that order.
    pub fn submatrix(&self, indices: &[usize]) -> Self {
        let mut m = Self::zeros(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                m.entries[a * indices.len() + b] = self.get(i, j);
            }
        }
        m
    }
}

impl fmt::Display for WeightedAdjacencyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Edges at the positive entries, labeled by the entry values.
pub fn matrix_to_labeled_graph(m: &WeightedAdjacencyMatrix) -> Result<EdgeLabeling> {
    m.validate()?;
    let n = m.order();
    let mut edges = Vec::new();
    let mut labels = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let w = m.get(i, j);
            if w > 0 {
                edges.push((i, j));
                labels.push(w);
            }
        }
    }
    // Row-major upper-triangle order is already the canonical edge order.
    EdgeLabeling::new(Graph::new(n, edges)?, labels)
}

pub fn labeled_graph_to_matrix(labeling: &EdgeLabeling) -> WeightedAdjacencyMatrix {
    let mut m = WeightedAdjacencyMatrix::zeros(labeling.graph().order());
    for (u, v, l) in labeling.iter() {
        m.set_symmetric(u, v, l);
    }
    m
}
