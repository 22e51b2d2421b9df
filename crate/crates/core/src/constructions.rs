//! Labeled matrix constructions.
//!
//! Row and column indices in this module's formulas are 1-based, as in the
//! usual statement of the `M_n(x, y, z)` family; conversion to the 0-based
//! matrix storage happens at the point of writing an entry.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::WeightedAdjacencyMatrix;

/// Pivot row `k = ceil(n/2) + 1` of `M_n`.
pub fn pivot(n: usize) -> usize {
    n.div_ceil(2) + 1
}

/// `M_n(x, y, z)`: 0 on the diagonal, `x` when `j <= n - i + 1`, `z` at
/// `(k, n)` and `(n, k)`, `y` elsewhere.
pub fn m_matrix(n: usize, x: u32, y: u32, z: u32) -> Result<WeightedAdjacencyMatrix> {
    if n < 4 {
        return Err(Error::OrderTooSmall(n));
    }
    let k = pivot(n);
    let mut m = WeightedAdjacencyMatrix::zeros(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let value = if j <= n - i + 1 {
                x
            } else if (i, j) == (k, n) {
                z
            } else {
                y
            };
            m.set_symmetric(i - 1, j - 1, value);
        }
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    A,
    B,
    C,
}

impl Family {
    /// `(x, y, z)` for `A_n = M_n(1,2,3)`, `B_n = M_n(2,3,1)`, `C_n = M_n(3,1,2)`.
    pub fn triple(self) -> (u32, u32, u32) {
        match self {
            Family::A => (1, 2, 3),
            Family::B => (2, 3, 1),
            Family::C => (3, 1, 2),
        }
    }

    /// `(x, y)` of the tilde variant `M_n(x, y, y)`.
    pub fn tilde_pair(self) -> (u32, u32) {
        match self {
            Family::A => (1, 2),
            Family::B => (2, 3),
            Family::C => (3, 1),
        }
    }
}

pub fn named_family(n: usize, which: Family) -> Result<WeightedAdjacencyMatrix> {
    let (x, y, z) = which.triple();
    m_matrix(n, x, y, z)
}

pub fn tilde_matrix(n: usize, which: Family) -> Result<WeightedAdjacencyMatrix> {
    let (x, y) = which.tilde_pair();
    m_matrix(n, x, y, y)
}

/// Small matrices stored verbatim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FixedMatrix {
    T,
    T5,
    T5Tilde,
    T6,
    T6Tilde,
    P6,
    K44Edge8x8,
    M666Block1,
    M666Block2,
    M666Block3,
    T5TildeMod456,
    T6Mod567,
}

impl FixedMatrix {
    pub const ALL: [FixedMatrix; 12] = [
        FixedMatrix::T,
        FixedMatrix::T5,
        FixedMatrix::T5Tilde,
        FixedMatrix::T6,
        FixedMatrix::T6Tilde,
        FixedMatrix::P6,
        FixedMatrix::K44Edge8x8,
        FixedMatrix::M666Block1,
        FixedMatrix::M666Block2,
        FixedMatrix::M666Block3,
        FixedMatrix::T5TildeMod456,
        FixedMatrix::T6Mod567,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixedMatrix::T => "T",
            FixedMatrix::T5 => "T5",
            FixedMatrix::T5Tilde => "T5_TILDE",
            FixedMatrix::T6 => "T6",
            FixedMatrix::T6Tilde => "T6_TILDE",
            FixedMatrix::P6 => "P6",
            FixedMatrix::K44Edge8x8 => "K44_EDGE_8x8",
            FixedMatrix::M666Block1 => "M666_BLOCK1",
            FixedMatrix::M666Block2 => "M666_BLOCK2",
            FixedMatrix::M666Block3 => "M666_BLOCK3",
            FixedMatrix::T5TildeMod456 => "T5_TILDE_MOD_456",
            FixedMatrix::T6Mod567 => "T6_MOD_567",
        }
    }

    pub fn rows(self) -> &'static [&'static [u8]] {
        match self {
            FixedMatrix::T => golden::T,
            FixedMatrix::T5 => golden::T5,
            FixedMatrix::T5Tilde => golden::T5_TILDE,
            FixedMatrix::T6 => golden::T6,
            FixedMatrix::T6Tilde => golden::T6_TILDE,
            FixedMatrix::P6 => golden::P6,
            FixedMatrix::K44Edge8x8 => golden::K44_EDGE_8X8,
            FixedMatrix::M666Block1 => golden::M666_BLOCK1,
            FixedMatrix::M666Block2 => golden::M666_BLOCK2,
            FixedMatrix::M666Block3 => golden::M666_BLOCK3,
            FixedMatrix::T5TildeMod456 => golden::T5_TILDE_MOD_456,
            FixedMatrix::T6Mod567 => golden::T6_MOD_567,
        }
    }

    pub fn matrix(self) -> WeightedAdjacencyMatrix {
        WeightedAdjacencyMatrix::from_static(self.rows())
    }
}

impl fmt::Display for FixedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixedMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FixedMatrix::ALL
            .into_iter()
            .find(|m| m.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownMatrix(s.to_string()))
    }
}

pub fn fixed_matrix(name: &str) -> Result<WeightedAdjacencyMatrix> {
    Ok(name.parse::<FixedMatrix>()?.matrix())
}

mod golden {
    pub const T: &[&[u8]] = &[&[0, 1, 2], &[1, 0, 3], &[2, 3, 0]];

    pub const T5: &[&[u8]] = &[
        &[0, 3, 1, 1, 1],
        &[3, 0, 1, 3, 2],
        &[1, 1, 0, 1, 1],
        &[1, 3, 1, 0, 2],
        &[1, 2, 1, 2, 0],
    ];

    pub const T5_TILDE: &[&[u8]] = &[
        &[0, 2, 2, 2, 1],
        &[2, 0, 3, 3, 3],
        &[2, 3, 0, 2, 3],
        &[2, 3, 2, 0, 1],
        &[1, 3, 3, 1, 0],
    ];

    pub const T6: &[&[u8]] = &[
        &[0, 1, 2, 3, 1, 3],
        &[1, 0, 1, 3, 1, 1],
        &[2, 1, 0, 1, 2, 2],
        &[3, 3, 1, 0, 1, 1],
        &[1, 1, 2, 1, 0, 1],
        &[3, 1, 2, 1, 1, 0],
    ];

    pub const T6_TILDE: &[&[u8]] = &[
        &[0, 2, 3, 3, 3, 3],
        &[2, 0, 2, 3, 3, 2],
        &[3, 2, 0, 2, 1, 2],
        &[3, 3, 2, 0, 3, 1],
        &[3, 3, 1, 3, 0, 3],
        &[3, 2, 2, 1, 3, 0],
    ];

    pub const P6: &[&[u8]] = &[
        &[0, 2, 2, 2, 2, 1],
        &[2, 0, 2, 2, 2, 3],
        &[2, 2, 0, 2, 3, 3],
        &[2, 2, 2, 0, 3, 1],
        &[2, 2, 3, 3, 0, 3],
        &[1, 3, 3, 1, 3, 0],
    ];

    pub const K44_EDGE_8X8: &[&[u8]] = &[
        &[0, 1, 1, 1, 0, 0, 0, 0],
        &[1, 0, 1, 2, 0, 0, 0, 0],
        &[1, 1, 0, 3, 0, 0, 0, 0],
        &[1, 2, 3, 0, 3, 0, 0, 0],
        &[0, 0, 0, 3, 0, 2, 2, 2],
        &[0, 0, 0, 0, 2, 0, 2, 3],
        &[0, 0, 0, 0, 2, 2, 0, 1],
        &[0, 0, 0, 0, 2, 3, 1, 0],
    ];

    pub const M666_BLOCK1: &[&[u8]] = &[
        &[0, 1, 1, 1, 1, 1],
        &[1, 0, 3, 1, 1, 2],
        &[1, 3, 0, 1, 2, 2],
        &[1, 1, 1, 0, 2, 2],
        &[1, 1, 2, 2, 0, 2],
        &[1, 2, 2, 2, 2, 0],
    ];

    pub const M666_BLOCK2: &[&[u8]] = &[
        &[0, 2, 2, 2, 2, 2],
        &[2, 0, 1, 2, 2, 3],
        &[2, 1, 0, 2, 3, 3],
        &[2, 2, 2, 0, 3, 3],
        &[2, 2, 3, 3, 0, 3],
        &[2, 3, 3, 3, 3, 0],
    ];

    pub const M666_BLOCK3: &[&[u8]] = &[
        &[0, 3, 3, 3, 3, 3],
        &[3, 0, 2, 3, 3, 1],
        &[3, 2, 0, 3, 1, 1],
        &[3, 3, 3, 0, 1, 1],
        &[3, 3, 1, 1, 0, 1],
        &[3, 1, 1, 1, 1, 0],
    ];

    pub const T5_TILDE_MOD_456: &[&[u8]] = &[
        &[0, 2, 2, 2, 1],
        &[2, 0, 3, 1, 3],
        &[2, 3, 0, 2, 3],
        &[2, 1, 2, 0, 1],
        &[1, 3, 3, 1, 0],
    ];

    pub const T6_MOD_567: &[&[u8]] = &[
        &[0, 2, 2, 2, 1, 1],
        &[2, 0, 3, 3, 3, 1],
        &[2, 3, 0, 2, 3, 1],
        &[2, 3, 2, 0, 1, 2],
        &[1, 3, 3, 1, 0, 1],
        &[1, 1, 1, 2, 1, 0],
    ];
}

/// The `(n+2) x (n+2)` matrix for `K_2 + K_n + edge`: a `K_2` labeled 1 on
/// rows 1-2, `B_n` on rows 3..n+2, and the cross entry `(1, 3) = 3`.
pub fn l_matrix(n: usize) -> Result<WeightedAdjacencyMatrix> {
    let k2 = WeightedAdjacencyMatrix::from_static(&[&[0, 1], &[1, 0]]);
    let mut m = direct_sum(&[k2, named_family(n, Family::B)?])?;
    m.set_symmetric(0, 2, 3);
    Ok(m)
}

/// [`l_matrix`] with row and column 2 deleted, for `K_1 + K_n + edge`.
pub fn l_matrix_k1(n: usize) -> Result<WeightedAdjacencyMatrix> {
    l_matrix(n)?.without_vertex(1)
}

/// Block-diagonal matrix.
pub fn direct_sum(ms: &[WeightedAdjacencyMatrix]) -> Result<WeightedAdjacencyMatrix> {
    if ms.is_empty() {
        return Err(Error::EmptyDirectSum);
    }
    let order = ms.iter().map(WeightedAdjacencyMatrix::order).sum();
    let mut out = WeightedAdjacencyMatrix::zeros(order);
    let mut off = 0;
    for m in ms {
        for i in 0..m.order() {
            for j in i + 1..m.order() {
                out.set_symmetric(off + i, off + j, m.get(i, j));
            }
        }
        off += m.order();
    }
    Ok(out)
}

/// Which two blocks an injection joins.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockPair {
    P12,
    P13,
    P23,
}

impl BlockPair {
    /// 0-based block indices.
    pub fn blocks(self) -> (usize, usize) {
        match self {
            BlockPair::P12 => (0, 1),
            BlockPair::P13 => (0, 2),
            BlockPair::P23 => (1, 2),
        }
    }

    pub fn from_blocks(a: usize, b: usize) -> Option<Self> {
        match (a.min(b), a.max(b)) {
            (0, 1) => Some(BlockPair::P12),
            (0, 2) => Some(BlockPair::P13),
            (1, 2) => Some(BlockPair::P23),
            _ => None,
        }
    }
}

impl fmt::Display for BlockPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.blocks();
        write!(f, "T{}{}", a + 1, b + 1)
    }
}

/// A single cross edge of weight `w` between row `i` of the first block of
/// `pair` and row `j` of the second (1-based rows).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct InjectionSpec {
    pub pair: BlockPair,
    pub i: usize,
    pub j: usize,
    pub w: u32,
}

impl InjectionSpec {
    pub const fn new(pair: BlockPair, i: usize, j: usize, w: u32) -> Self {
        Self { pair, i, j, w }
    }

    /// 0-based global coordinates inside a direct sum with `block_orders`.
    pub fn coordinates(&self, block_orders: &[usize]) -> Result<(usize, usize)> {
        let (a, b) = self.pair.blocks();
        if b >= block_orders.len() {
            return Err(Error::InvalidInjection(format!(
                "{} needs at least {} blocks",
                self.pair,
                b + 1
            )));
        }
        if self.w == 0 {
            return Err(Error::InvalidInjection("weight must be positive".into()));
        }
        for (row, order) in [(self.i, block_orders[a]), (self.j, block_orders[b])] {
            if row == 0 || row > order {
                return Err(Error::RowOutOfRange { row, order });
            }
        }
        let offset = |k: usize| block_orders[..k].iter().sum::<usize>();
        Ok((offset(a) + self.i - 1, offset(b) + self.j - 1))
    }
}

impl fmt::Display for InjectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({}, {}, {})", self.pair, self.i, self.j, self.w)
    }
}

/// Adds the injection matrices to `m`, whose blocks have `block_orders`.
/// Every target entry must currently be zero.
pub fn apply_injections(
    m: &WeightedAdjacencyMatrix,
    block_orders: &[usize],
    specs: &[InjectionSpec],
) -> Result<WeightedAdjacencyMatrix> {
    if block_orders.iter().sum::<usize>() != m.order() {
        return Err(Error::BlockOrders {
            orders: block_orders.to_vec(),
            order: m.order(),
        });
    }
    let mut out = m.clone();
    for spec in specs {
        let (u, v) = spec.coordinates(block_orders)?;
        if out.get(u, v) != 0 {
            return Err(Error::InjectionOverwrite(u, v));
        }
        out.set_symmetric(u, v, spec.w);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowType {
    /// The pivot row `k`.
    Pivot,
    /// Rows other than `k` and `n`.
    Plain,
    /// The last row.
    Last,
}

/// Counts of `x`, `y` and `z` in one row of `M_n(x, y, z)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowProfile {
    pub row_type: RowType,
    pub x_count: usize,
    pub y_count: usize,
    pub z_count: usize,
}

/// Closed-form census of row `i` (1-based) of `M_n`.
pub fn row_profile(n: usize, i: usize) -> Result<RowProfile> {
    if n < 4 {
        return Err(Error::OrderTooSmall(n));
    }
    if i == 0 || i > n {
        return Err(Error::RowOutOfRange { row: i, order: n });
    }
    let k = pivot(n);
    let (row_type, x_count, y_count, z_count) = if i == n {
        (RowType::Last, 1, n - 3, 1)
    } else if i == k {
        (RowType::Pivot, (n - 1).div_ceil(2), n.div_ceil(2) - 2, 1)
    } else if i < k {
        (RowType::Plain, n - i, i - 1, 0)
    } else {
        (RowType::Plain, n - i + 1, i - 2, 0)
    };
    Ok(RowProfile {
        row_type,
        x_count,
        y_count,
        z_count,
    })
}
