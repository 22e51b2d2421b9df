//! Bounded search for cover shapes without a construction.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{
    sorted_sizes, traced, ConstructionOutcome, CrossSelection, DispatchCase, EngineConfig, Source,
};
use crate::constructions::{named_family, Family};
use crate::error::{Error, Result};
use crate::graph::{CliqueCover, EdgeLabeling, Graph};
use crate::solver::{ps_exact, search_completion, PsValue, SolverConfig, MAX_STRENGTH};
use crate::verifier::is_product_irregular;

/// Free-edge count up to which the search is exhaustive.
pub(crate) const EXHAUSTIVE_LIMIT: usize = 16;
/// Node budget of each randomized restart.
pub(crate) const RESTART_BUDGET: u64 = 10_000_000;
pub(crate) const RESTARTS: usize = 16;
/// Largest strength the structured search tries.
pub(crate) const MAX_FALLBACK_STRENGTH: u32 = 6;

/// Trace fields that depend on how the labeling was found.
struct Found {
    id: String,
    roles: Vec<usize>,
    vertex_maps: Vec<Vec<usize>>,
    nodes: u64,
    note: String,
}

fn outcome(
    labeling: EdgeLabeling,
    cover: &CliqueCover,
    selection: &CrossSelection,
    found: Found,
) -> Result<ConstructionOutcome> {
    let report = is_product_irregular(&labeling)?;
    if let Some((u, v)) = report.witness {
        return Err(Error::Internal(format!(
            "search returned a colliding labeling at {u}, {v}"
        )));
    }
    let case_trace = DispatchCase {
        cover_sizes: sorted_sizes(cover),
        pattern: selection.pattern,
        construction_id: found.id,
        roles: found.roles,
        vertex_maps: found.vertex_maps,
        cross_edges: traced(&labeling, selection),
        surplus_edges: selection.surplus.len(),
        nodes_explored: found.nodes,
        notes: vec![found.note],
    };
    Ok(ConstructionOutcome {
        strength: labeling.strength(),
        labeling,
        source: Source::SearchFallback,
        case_trace,
    })
}

/// Exact `ps` of the whole graph; meant for graphs of a few vertices.
pub(crate) fn whole_graph(
    g: &Graph,
    cover: &CliqueCover,
    selection: &CrossSelection,
    config: EngineConfig,
) -> Result<ConstructionOutcome> {
    let r = ps_exact(g, MAX_STRENGTH, SolverConfig::with_budget(config.budget))?;
    match (r.value, r.certificate) {
        (PsValue::Exact(s), Some(labeling)) => outcome(
            labeling,
            cover,
            selection,
            Found {
                id: "SEARCH whole graph".into(),
                roles: Vec::new(),
                vertex_maps: Vec::new(),
                nodes: r.nodes_explored,
                note: format!("exact search: ps = {s}"),
            },
        ),
        _ => Err(Error::FallbackFailed(MAX_STRENGTH)),
    }
}

/// Fixes the largest part to `B_c` and every surplus edge to 1, then searches
/// the labels of the remaining parts and of the chosen cross edges.
pub(crate) fn structured(
    g: &Graph,
    cover: &CliqueCover,
    selection: &CrossSelection,
    config: EngineConfig,
) -> Result<ConstructionOutcome> {
    let sizes = cover.sizes();
    let big = (0..sizes.len())
        .max_by_key(|&p| (sizes[p], std::cmp::Reverse(p)))
        .expect("nonempty cover");
    let c = sizes[big];
    if c < 4 {
        return whole_graph(g, cover, selection, config);
    }
    let block = named_family(c, Family::B)?;
    let part = &cover.parts()[big];
    let mut row = vec![usize::MAX; g.order()];
    for (i, &v) in part.iter().enumerate() {
        row[v] = i;
    }
    let owner = cover.owners(g.order());
    let mut fixed = Vec::with_capacity(g.size());
    for &(u, v) in g.edges() {
        let chosen = selection
            .chosen
            .iter()
            .any(|e| (e.u.min(e.v), e.u.max(e.v)) == (u, v));
        fixed.push(if owner[u] == big && owner[v] == big {
            Some(block.get(row[u], row[v]))
        } else if owner[u] != owner[v] && !chosen {
            Some(1)
        } else {
            None
        });
    }
    let free = fixed.iter().filter(|f| f.is_none()).count();
    let id = format!("SEARCH with B{c} fixed");
    let roles = vec![big];
    let maps = vec![part.clone()];
    let mut nodes = 0u64;

    if free <= EXHAUSTIVE_LIMIT {
        for s in 3..=MAX_FALLBACK_STRENGTH {
            let (found, used) =
                search_completion::<ChaCha8Rng>(g, fixed.clone(), s, config.budget, None)?;
            nodes += used;
            if let Some(labeling) = found {
                let note =
                    format!("exhaustive over {free} free edges; strengths below {s} exhausted");
                let found = Found {
                    id,
                    roles,
                    vertex_maps: maps,
                    nodes,
                    note,
                };
                return outcome(labeling, cover, selection, found);
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
        for s in 3..=MAX_FALLBACK_STRENGTH {
            for attempt in 0..RESTARTS {
                match search_completion(g, fixed.clone(), s, RESTART_BUDGET, Some(&mut rng)) {
                    Ok((Some(labeling), used)) => {
                        nodes += used;
                        let note = format!(
                            "randomized restart {attempt} at strength {s} over {free} free edges, seed {}",
                            config.seed
                        );
                        let found = Found {
                            id,
                            roles,
                            vertex_maps: maps,
                            nodes,
                            note,
                        };
                        return outcome(labeling, cover, selection, found);
                    }
                    Ok((None, used)) => {
                        // The whole space at this strength is empty.
                        nodes += used;
                        break;
                    }
                    Err(Error::BudgetExhausted { .. }) => nodes += RESTART_BUDGET,
                    Err(e) => return Err(e),
                }
            }
        }
    }
    Err(Error::FallbackFailed(MAX_FALLBACK_STRENGTH))
}
