//! Case tables: which labeled matrix serves which cover shape.

use crate::constructions::{
    apply_injections, direct_sum, l_matrix, l_matrix_k1, named_family, tilde_matrix, BlockPair,
    Family, FixedMatrix, InjectionSpec,
};
use crate::error::Result;
use crate::graph::WeightedAdjacencyMatrix;

use super::select::CrossPattern;

/// A labeled matrix whose diagonal blocks are played by cover parts.
/// Off-block nonzero entries are the cross edges the plan requires.
#[derive(Clone, Debug)]
pub(crate) struct Plan {
    pub id: String,
    pub matrix: WeightedAdjacencyMatrix,
    pub block_orders: Vec<usize>,
    /// Cover part playing each block.
    pub roles: Vec<usize>,
    /// Labeling found by search rather than by a proved construction.
    pub searched: bool,
}

enum Block {
    Named(Family, usize),
    Tilde(Family, usize),
    Fixed(FixedMatrix),
    /// `M666_BLOCK1` without its first row and column.
    M666Block1Minor,
}

impl Block {
    fn matrix(&self) -> Result<WeightedAdjacencyMatrix> {
        match *self {
            Block::Named(f, n) => named_family(n, f),
            Block::Tilde(f, n) => tilde_matrix(n, f),
            Block::Fixed(m) => Ok(m.matrix()),
            Block::M666Block1Minor => FixedMatrix::M666Block1.matrix().without_vertex(0),
        }
    }

    fn name(&self) -> String {
        let family = |f: Family| match f {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
        };
        match *self {
            Block::Named(f, n) => format!("{}{n}", family(f)),
            Block::Tilde(f, n) => format!("{}{n}_TILDE", family(f)),
            Block::Fixed(m) => m.name().to_string(),
            Block::M666Block1Minor => "M666_BLOCK1[2..6]".to_string(),
        }
    }
}

/// Gives each block the first unused part of the same size; `pinned` fixes
/// one block's part beforehand.
fn assign_roles(
    part_sizes: &[usize],
    block_orders: &[usize],
    pinned: Option<(usize, usize)>,
) -> Vec<usize> {
    let mut used = vec![false; part_sizes.len()];
    let mut roles = vec![usize::MAX; block_orders.len()];
    if let Some((block, part)) = pinned {
        roles[block] = part;
        used[part] = true;
    }
    for (b, &n) in block_orders.iter().enumerate() {
        if roles[b] != usize::MAX {
            continue;
        }
        let p = (0..part_sizes.len())
            .find(|&p| !used[p] && part_sizes[p] == n)
            .expect("block orders are a permutation of the part sizes");
        roles[b] = p;
        used[p] = true;
    }
    roles
}

fn plan(
    part_sizes: &[usize],
    blocks: &[Block],
    injections: &[InjectionSpec],
    pinned: Option<(usize, usize)>,
) -> Result<Plan> {
    let matrices = blocks
        .iter()
        .map(Block::matrix)
        .collect::<Result<Vec<_>>>()?;
    let block_orders: Vec<usize> = matrices
        .iter()
        .map(WeightedAdjacencyMatrix::order)
        .collect();
    let mut matrix = direct_sum(&matrices)?;
    let mut id = blocks
        .iter()
        .map(Block::name)
        .collect::<Vec<_>>()
        .join(" + ");
    if !injections.is_empty() {
        matrix = apply_injections(&matrix, &block_orders, injections)?;
        let specs: Vec<String> = injections.iter().map(ToString::to_string).collect();
        id = format!("{id} ; {}", specs.join(" "));
    }
    Ok(Plan {
        id,
        roles: assign_roles(part_sizes, &block_orders, pinned),
        matrix,
        block_orders,
        searched: false,
    })
}

/// A labeling of `K_3 + K_4 + edge` with strength 3 found by exhaustive
/// search: the triangle on rows 1-3, the `K_4` on rows 4-7, the cross edge at
/// `(1, 4)`. Degrees 4, 1, 2, 8, 3, 6, 18.
const K3_K4_EDGE: &[&[u8]] = &[
    &[0, 1, 2, 2, 0, 0, 0],
    &[1, 0, 1, 0, 0, 0, 0],
    &[2, 1, 0, 0, 0, 0, 0],
    &[2, 0, 0, 0, 1, 2, 2],
    &[0, 0, 0, 1, 0, 1, 3],
    &[0, 0, 0, 2, 1, 0, 3],
    &[0, 0, 0, 2, 3, 3, 0],
];

pub(crate) fn k3_k4_edge_matrix() -> WeightedAdjacencyMatrix {
    WeightedAdjacencyMatrix::from_static(K3_K4_EDGE)
}

pub(crate) fn one_part_plan(n: usize) -> Result<Option<Plan>> {
    use Family::*;
    let sizes = [n];
    Ok(match n {
        3 => Some(plan(&sizes, &[Block::Fixed(FixedMatrix::T)], &[], None)?),
        n if n >= 4 => Some(plan(&sizes, &[Block::Named(A, n)], &[], None)?),
        _ => None,
    })
}

/// Plan for a two-part cover with the given part sizes, if a construction or
/// cached labeling covers the shape.
pub(crate) fn two_part_plan(part_sizes: [usize; 2]) -> Result<Option<Plan>> {
    use Block::*;
    use Family::*;
    let (n, m) = (
        part_sizes[0].min(part_sizes[1]),
        part_sizes[0].max(part_sizes[1]),
    );
    let p = |blocks: &[Block]| plan(&part_sizes, blocks, &[], None).map(Some);
    match (n, m) {
        (4, 4) => {
            let m = FixedMatrix::K44Edge8x8;
            Ok(Some(split_matrix(
                m.name().into(),
                m.matrix(),
                &[4, 4],
                &part_sizes,
            )))
        }
        (5, 5) => p(&[Fixed(FixedMatrix::T5), Fixed(FixedMatrix::T5Tilde)]),
        (6, 6) => p(&[Fixed(FixedMatrix::T6), Fixed(FixedMatrix::T6Tilde)]),
        (n, m) if n >= 4 => p(&[Named(A, n), Named(B, m)]),
        (3, m) if m >= 5 => p(&[Fixed(FixedMatrix::T), Named(B, m)]),
        (2, m) if m >= 4 => Ok(Some(split_matrix(
            format!("L({m})"),
            l_matrix(m)?,
            &[2, m],
            &part_sizes,
        ))),
        (1, m) if m >= 4 => Ok(Some(split_matrix(
            format!("L'({m})"),
            l_matrix_k1(m)?,
            &[1, m],
            &part_sizes,
        ))),
        (3, 4) => {
            let mut pl = split_matrix(
                "K3_K4_EDGE_SEARCHED".into(),
                k3_k4_edge_matrix(),
                &[3, 4],
                &part_sizes,
            );
            pl.searched = true;
            Ok(Some(pl))
        }
        _ => Ok(None),
    }
}

/// A plan over a matrix given whole, read as diagonal blocks of `orders`.
fn split_matrix(
    id: String,
    matrix: WeightedAdjacencyMatrix,
    orders: &[usize],
    part_sizes: &[usize],
) -> Plan {
    Plan {
        id,
        matrix,
        roles: assign_roles(part_sizes, orders, None),
        block_orders: orders.to_vec(),
        searched: false,
    }
}

/// Plan for a three-part cover. `middle` is the part meeting both chosen
/// cross edges; it only matters for the shapes that need injected edges.
pub(crate) fn three_part_plan(
    part_sizes: [usize; 3],
    middle: usize,
    pattern: CrossPattern,
) -> Result<Option<Plan>> {
    use Block::*;
    use Family::*;
    let mut sorted = part_sizes;
    sorted.sort_unstable();
    let [a, b, c] = sorted;
    let p = |blocks: &[Block]| plan(&part_sizes, blocks, &[], None).map(Some);
    match (a, b, c) {
        (a, b, c) if a >= 7 => p(&[Named(A, a), Named(B, c), Named(C, b)]),
        (4..=6, b, c) if b >= 7 => p(&[Named(A, b), Named(B, c), Named(C, a)]),
        (6, 6, 7) => p(&[
            Fixed(FixedMatrix::M666Block1),
            Fixed(FixedMatrix::M666Block3),
            Named(B, 7),
        ]),
        (6, 6, c) if c >= 8 => p(&[
            Fixed(FixedMatrix::T6),
            Fixed(FixedMatrix::T6Tilde),
            Named(B, c),
        ]),
        (5, 6, c) if c >= 7 => p(&[
            Fixed(FixedMatrix::T6Mod567),
            Fixed(FixedMatrix::T5),
            Named(B, c),
        ]),
        (5, 5, 6) => p(&[
            Fixed(FixedMatrix::T5),
            Fixed(FixedMatrix::T5Tilde),
            Fixed(FixedMatrix::P6),
        ]),
        (5, 5, c) if c >= 7 => p(&[
            Fixed(FixedMatrix::T5),
            Fixed(FixedMatrix::T5Tilde),
            Named(B, c),
        ]),
        (4, 5, 6) => p(&[Named(A, 4), Fixed(FixedMatrix::T5TildeMod456), Named(B, 6)]),
        (4, 5, c) if c >= 7 => p(&[Named(A, 4), Named(B, c), Fixed(FixedMatrix::T5Tilde)]),
        (4, 6, 7) => p(&[Named(C, 4), Fixed(FixedMatrix::T6Tilde), Named(A, 7)]),
        (4, 6, c) if c >= 8 => p(&[Named(A, 4), Named(B, 6), Named(B, c)]),
        (6, 6, 6) => p(&[
            Fixed(FixedMatrix::M666Block1),
            Fixed(FixedMatrix::M666Block2),
            Fixed(FixedMatrix::M666Block3),
        ]),
        (5, 6, 6) => p(&[
            M666Block1Minor,
            Fixed(FixedMatrix::M666Block2),
            Fixed(FixedMatrix::M666Block3),
        ]),
        (4..=5, 4..=5, 4..=5) => injection_plan(part_sizes, middle, pattern).map(Some),
        _ => Ok(None),
    }
}

/// The four shapes with all parts of size 4 or 5. Each case fixes which
/// tilde block the middle part plays and the two injected cross edges.
fn injection_plan(part_sizes: [usize; 3], middle: usize, pattern: CrossPattern) -> Result<Plan> {
    use BlockPair::*;
    use Family::*;
    let same = pattern == CrossPattern::TwoEdgesSameVertex;
    let inj = InjectionSpec::new;
    let mut sorted = part_sizes;
    sorted.sort_unstable();
    let mid = part_sizes[middle];
    let t = Block::Tilde;
    // (blocks, middle block, injections)
    let (blocks, middle_block, specs) = match (sorted, mid) {
        ([5, 5, 5], _) => (
            [t(A, 5), t(B, 5), t(C, 5)],
            1,
            if same {
                [inj(P12, 3, 3, 3), inj(P23, 3, 3, 2)]
            } else {
                [inj(P12, 3, 3, 3), inj(P23, 1, 3, 2)]
            },
        ),
        ([4, 5, 5], 5) => (
            [t(A, 4), t(B, 5), t(C, 5)],
            1,
            if same {
                [inj(P12, 2, 3, 3), inj(P23, 3, 3, 2)]
            } else {
                [inj(P12, 3, 3, 3), inj(P23, 1, 3, 2)]
            },
        ),
        ([4, 5, 5], _) => (
            [t(A, 4), t(B, 5), t(C, 5)],
            0,
            if same {
                [inj(P12, 2, 3, 2), inj(P13, 2, 3, 2)]
            } else {
                [inj(P12, 2, 3, 2), inj(P13, 4, 3, 2)]
            },
        ),
        ([4, 4, 5], 5) if same => (
            [t(A, 4), t(B, 5), t(C, 4)],
            1,
            [inj(P12, 2, 3, 3), inj(P23, 3, 2, 2)],
        ),
        // The weight of the second injection is 2: with 3, rows 1 and 2 of
        // the C block both end at degree (0,4).
        ([4, 4, 5], 5) => (
            [t(A, 4), t(B, 4), t(C, 5)],
            2,
            [inj(P13, 2, 3, 3), inj(P23, 2, 2, 2)],
        ),
        ([4, 4, 5], _) | ([4, 4, 4], _) => (
            [t(A, 4), t(B, sorted[2]), t(C, 4)],
            2,
            if same {
                [inj(P13, 2, 2, 3), inj(P23, 3, 2, 3)]
            } else {
                [inj(P13, 2, 2, 3), inj(P23, 3, 1, 3)]
            },
        ),
        _ => unreachable!("sizes are within 4..=5"),
    };
    plan(&part_sizes, &blocks, &specs, Some((middle_block, middle)))
}
