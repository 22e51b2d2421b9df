//! Strength-3 labelings of graphs covered by at most three cliques.
//!
//! The engine computes a minimum clique cover, chooses the cross edges a
//! construction needs, and maps every cover part onto a diagonal block of a
//! labeled matrix by permuting vertices inside the part. Edges the matrix
//! does not use are labeled 1, which leaves every product degree unchanged.
//! Shapes without a construction go to a bounded search.

mod dispatch;
mod fallback;
mod select;

pub use select::{select_cross_edges, CrossPattern, CrossSelection};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{
    clique_cover, find_isolated, is_connected, CliqueCover, EdgeLabeling, Graph, Vertex,
};
use crate::solver::{SolverConfig, DEFAULT_BUDGET};
use crate::verifier::is_product_irregular;
use dispatch::Plan;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Source {
    #[serde(rename = "theorem")]
    Theorem,
    #[serde(rename = "search-fallback")]
    SearchFallback,
}

impl std::fmt::Display for Source {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Source::Theorem => "theorem",
            Source::SearchFallback => "search-fallback",
        })
    }
}

/// Chosen cross edge as reported in traces.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TracedEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub label: u32,
}

/// What the engine did for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DispatchCase {
    /// Part sizes, ascending.
    pub cover_sizes: Vec<usize>,
    pub pattern: CrossPattern,
    pub construction_id: String,
    /// Cover part (in canonical cover order) playing each matrix block.
    pub roles: Vec<usize>,
    /// Graph vertex at each row of each block.
    pub vertex_maps: Vec<Vec<Vertex>>,
    /// Edges picked to carry the plan's off-block entries. A plan without
    /// such entries labels them 1.
    pub cross_edges: Vec<TracedEdge>,
    /// Edges between parts where the plan matrix is 0, all labeled 1.
    pub surplus_edges: usize,
    pub nodes_explored: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConstructionOutcome {
    pub labeling: EdgeLabeling,
    pub strength: u32,
    pub source: Source,
    pub case_trace: DispatchCase,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Node budget of each exact search the fallback runs.
    pub budget: u64,
    /// Seed of the randomized restarts.
    pub seed: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            seed: 0,
        }
    }
}

impl EngineConfig {
    pub fn from_env() -> Self {
        Self {
            budget: SolverConfig::from_env().budget,
            ..Self::default()
        }
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if let Some(e) = find_isolated(g) {
        return Err(e);
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Labels a connected graph with clique cover number at most 3.
pub fn construct_labeling(g: &Graph) -> Result<ConstructionOutcome> {
    construct_labeling_with(g, EngineConfig::default())
}

pub fn construct_labeling_with(g: &Graph, config: EngineConfig) -> Result<ConstructionOutcome> {
    check_input(g)?;
    let cover = clique_cover(g, 3).ok_or(Error::Unsupported)?;
    match cover.len() {
        1 => label_one_clique(g, &cover, config),
        2 => label_two_cliques_with(g, &cover, config),
        _ => label_three_cliques_with(g, &cover, config),
    }
}

fn label_one_clique(
    g: &Graph,
    cover: &CliqueCover,
    config: EngineConfig,
) -> Result<ConstructionOutcome> {
    let selection = select_cross_edges(g, cover)?;
    match dispatch::one_part_plan(g.order())? {
        Some(plan) => realise(g, cover, &selection, &plan),
        None => fallback::whole_graph(g, cover, &selection, config),
    }
}

pub fn label_two_cliques(g: &Graph, cover: &CliqueCover) -> Result<ConstructionOutcome> {
    label_two_cliques_with(g, cover, EngineConfig::default())
}

pub fn label_two_cliques_with(
    g: &Graph,
    cover: &CliqueCover,
    config: EngineConfig,
) -> Result<ConstructionOutcome> {
    expect_parts(g, cover, 2)?;
    let selection = select_cross_edges(g, cover)?;
    let sizes = cover.sizes();
    match dispatch::two_part_plan([sizes[0], sizes[1]])? {
        Some(plan) => realise(g, cover, &selection, &plan),
        None => fallback::whole_graph(g, cover, &selection, config),
    }
}

pub fn label_three_cliques(g: &Graph, cover: &CliqueCover) -> Result<ConstructionOutcome> {
    label_three_cliques_with(g, cover, EngineConfig::default())
}

pub fn label_three_cliques_with(
    g: &Graph,
    cover: &CliqueCover,
    config: EngineConfig,
) -> Result<ConstructionOutcome> {
    expect_parts(g, cover, 3)?;
    let selection = select_cross_edges(g, cover)?;
    let sizes = cover.sizes();
    let middle = selection
        .middle
        .expect("three connected parts have a middle");
    match dispatch::three_part_plan([sizes[0], sizes[1], sizes[2]], middle, selection.pattern)? {
        Some(plan) => realise(g, cover, &selection, &plan),
        None => fallback::structured(g, cover, &selection, config),
    }
}

fn expect_parts(g: &Graph, cover: &CliqueCover, k: usize) -> Result<()> {
    check_input(g)?;
    if cover.len() != k {
        return Err(Error::CoverParts {
            expected: k.to_string(),
            got: cover.len(),
        });
    }
    // Re-validate against this graph; a cover built for another graph is
    // rejected here.
    CliqueCover::new(g, cover.parts().to_vec())?;
    Ok(())
}

/// Row of the full matrix assigned to every vertex.
fn align(
    g: &Graph,
    cover: &CliqueCover,
    selection: &CrossSelection,
    plan: &Plan,
) -> Result<Vec<usize>> {
    let mut offsets = Vec::with_capacity(plan.block_orders.len());
    let mut block_of_row = Vec::with_capacity(plan.matrix.order());
    let mut off = 0;
    for (b, &n) in plan.block_orders.iter().enumerate() {
        offsets.push(off);
        block_of_row.extend(std::iter::repeat_n(b, n));
        off += n;
    }
    let owner = cover.owners(g.order());
    let mut block_of_part = vec![usize::MAX; cover.len()];
    for (b, &p) in plan.roles.iter().enumerate() {
        block_of_part[p] = b;
    }

    let mut vertex_at = vec![usize::MAX; plan.matrix.order()];
    let mut row_of = vec![usize::MAX; g.order()];
    let mut pin = |v: Vertex, r: usize| -> Result<()> {
        match (row_of[v], vertex_at[r]) {
            (usize::MAX, usize::MAX) => {
                row_of[v] = r;
                vertex_at[r] = v;
                Ok(())
            }
            (rv, vr) if rv == r && vr == v => Ok(()),
            _ => Err(Error::Internal(format!(
                "{}: cannot place vertex {v} at row {}",
                plan.id,
                r + 1
            ))),
        }
    };

    let mut used = vec![false; selection.chosen.len()];
    let n = plan.matrix.order();
    for r1 in 0..n {
        for r2 in r1 + 1..n {
            let (b1, b2) = (block_of_row[r1], block_of_row[r2]);
            if b1 == b2 || plan.matrix.get(r1, r2) == 0 {
                continue;
            }
            let (p1, p2) = (plan.roles[b1], plan.roles[b2]);
            let k = (0..selection.chosen.len())
                .find(|&k| {
                    let e = selection.chosen[k];
                    !used[k]
                        && ((e.part_a, e.part_b) == (p1, p2) || (e.part_a, e.part_b) == (p2, p1))
                })
                .ok_or_else(|| {
                    Error::Internal(format!(
                        "{}: no chosen cross edge for rows {} and {}",
                        plan.id,
                        r1 + 1,
                        r2 + 1
                    ))
                })?;
            used[k] = true;
            let e = selection.chosen[k];
            let (x, y) = if owner[e.u] == p1 {
                (e.u, e.v)
            } else {
                (e.v, e.u)
            };
            pin(x, r1)?;
            pin(y, r2)?;
        }
    }

    for (p, part) in cover.parts().iter().enumerate() {
        let b = block_of_part[p];
        let unplaced: Vec<Vertex> = part
            .iter()
            .copied()
            .filter(|&v| row_of[v] == usize::MAX)
            .collect();
        let mut free = unplaced.into_iter();
        for r in offsets[b]..offsets[b] + plan.block_orders[b] {
            if vertex_at[r] == usize::MAX {
                let v = free.next().expect("part size equals block order");
                row_of[v] = r;
                vertex_at[r] = v;
            }
        }
    }
    Ok(row_of)
}

/// Labels `g` from `plan` and verifies the result.
fn realise(
    g: &Graph,
    cover: &CliqueCover,
    selection: &CrossSelection,
    plan: &Plan,
) -> Result<ConstructionOutcome> {
    let row_of = align(g, cover, selection, plan)?;
    let labels: Vec<u32> = g
        .edges()
        .iter()
        .map(|&(u, v)| match plan.matrix.get(row_of[u], row_of[v]) {
            0 => 1,
            w => w,
        })
        .collect();
    let labeling = EdgeLabeling::new(g.clone(), labels)?;
    let report = is_product_irregular(&labeling)?;
    if let Some((u, v)) = report.witness {
        return Err(Error::ConstructionFailed {
            case: plan.id.clone(),
            u,
            v,
        });
    }

    let mut vertex_maps: Vec<Vec<Vertex>> = plan.block_orders.iter().map(|&n| vec![0; n]).collect();
    let mut offsets = vec![0];
    for &n in &plan.block_orders {
        offsets.push(offsets.last().unwrap() + n);
    }
    for (v, &r) in row_of.iter().enumerate() {
        let b = offsets.partition_point(|&o| o <= r) - 1;
        vertex_maps[b][r - offsets[b]] = v;
    }
    let mut notes = Vec::new();
    if plan.searched {
        notes.push("labeling found by exhaustive search and stored with the engine".to_string());
    }
    let case_trace = DispatchCase {
        cover_sizes: sorted_sizes(cover),
        pattern: selection.pattern,
        construction_id: plan.id.clone(),
        roles: plan.roles.clone(),
        vertex_maps,
        cross_edges: traced(&labeling, selection),
        surplus_edges: surplus_count(g, cover, &plan.matrix, &row_of),
        nodes_explored: 0,
        notes,
    };
    Ok(ConstructionOutcome {
        strength: labeling.strength(),
        labeling,
        source: if plan.searched {
            Source::SearchFallback
        } else {
            Source::Theorem
        },
        case_trace,
    })
}

fn sorted_sizes(cover: &CliqueCover) -> Vec<usize> {
    let mut s = cover.sizes();
    s.sort_unstable();
    s
}

fn traced(labeling: &EdgeLabeling, selection: &CrossSelection) -> Vec<TracedEdge> {
    selection
        .chosen
        .iter()
        .map(|e| TracedEdge {
            u: e.u,
            v: e.v,
            label: labeling
                .label(e.u, e.v)
                .expect("chosen edges belong to the graph"),
        })
        .collect()
}

fn surplus_count(
    g: &Graph,
    cover: &CliqueCover,
    matrix: &crate::graph::WeightedAdjacencyMatrix,
    row_of: &[usize],
) -> usize {
    let owner = cover.owners(g.order());
    g.edges()
        .iter()
        .filter(|&&(u, v)| owner[u] != owner[v] && matrix.get(row_of[u], row_of[v]) == 0)
        .count()
}
