//! Exact product irregularity strength by pruned backtracking.

mod k4;
pub(crate) mod search;
mod signatures;

pub use k4::{k4_characterization, verify_k4_characterization, K4Characterization};
pub use search::MAX_STRENGTH;
pub use signatures::{component_signatures, ps_exact_disconnected, ComponentSignature};

use std::ops::ControlFlow;

use rand::rngs::StdRng;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{find_isolated, EdgeLabeling, Graph};
use search::{LabelOrder, Outcome, SearchSpace};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

/// Environment variable that overrides [`DEFAULT_BUDGET`].
pub const BUDGET_ENV: &str = "PISTR_BUDGET";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of DFS nodes over the whole call.
    pub budget: u64,
    /// Reject partial labelings as soon as two completed vertices collide.
    pub prune: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            budget: DEFAULT_BUDGET,
            prune: true,
        }
    }
}

impl SolverConfig {
    /// Default configuration with the budget taken from `PISTR_BUDGET` when set.
    pub fn from_env() -> Self {
        let budget = std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_BUDGET);
        Self {
            budget,
            ..Self::default()
        }
    }

    pub fn with_budget(budget: u64) -> Self {
        Self {
            budget,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PsValue {
    Exact(u32),
    /// No product-irregular labeling with labels up to the bound.
    GreaterThan(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsResult {
    pub value: PsValue,
    pub certificate: Option<EdgeLabeling>,
    pub nodes_explored: u64,
}

impl PsResult {
    pub fn exact(&self) -> Option<u32> {
        match self.value {
            PsValue::Exact(s) => Some(s),
            PsValue::GreaterThan(_) => None,
        }
    }
}

fn check_preconditions(g: &Graph) -> Result<()> {
    match find_isolated(g) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Smallest `s <= s_max` admitting a product-irregular labeling of `g`.
///
/// Strengths are tried from 1 upwards, so a reported value `s` also certifies
/// that the search at `s - 1` was exhausted.
pub fn ps_exact(g: &Graph, s_max: u32, config: SolverConfig) -> Result<PsResult> {
    check_preconditions(g)?;
    let space = SearchSpace::new(g, vec![None; g.size()]);
    let mut nodes = 0u64;
    for s in 1..=s_max {
        let remaining = config.budget - nodes;
        let mut found = None;
        let (outcome, used) = space
            .run::<StdRng>(
                s,
                config.prune,
                remaining,
                LabelOrder::Ascending,
                &mut |labels, _| {
                    found = Some(labels.to_vec());
                    ControlFlow::Break(())
                },
            )
            .map_err(|e| budget_error(e, config.budget))?;
        nodes += used;
        if let (Outcome::Stopped, Some(labels)) = (outcome, found) {
            return Ok(PsResult {
                value: PsValue::Exact(s),
                certificate: Some(EdgeLabeling::new(g.clone(), labels)?),
                nodes_explored: nodes,
            });
        }
    }
    Ok(PsResult {
        value: PsValue::GreaterThan(s_max),
        certificate: None,
        nodes_explored: nodes,
    })
}

fn budget_error(e: Error, total: u64) -> Error {
    match e {
        Error::BudgetExhausted { .. } => Error::BudgetExhausted { budget: total },
        other => other,
    }
}

/// Completes a partial labeling: edges with `Some(label)` in `fixed` keep
/// their label, the others are searched with labels `1..=strength`.
///
/// With `rng` the label order is shuffled at every node.
pub fn search_completion<R: Rng>(
    g: &Graph,
    fixed: Vec<Option<u32>>,
    strength: u32,
    budget: u64,
    rng: Option<&mut R>,
) -> Result<(Option<EdgeLabeling>, u64)> {
    if fixed.len() != g.size() {
        return Err(Error::LabelCount {
            expected: g.size(),
            got: fixed.len(),
        });
    }
    let space = SearchSpace::new(g, fixed);
    let order = match rng {
        Some(r) => LabelOrder::Shuffled(r),
        None => LabelOrder::Ascending,
    };
    let mut found = None;
    let (_, nodes) = space.run(strength, true, budget, order, &mut |labels, _| {
        found = Some(labels.to_vec());
        ControlFlow::Break(())
    })?;
    let labeling = found.map(|l| EdgeLabeling::new(g.clone(), l)).transpose()?;
    Ok((labeling, nodes))
}
