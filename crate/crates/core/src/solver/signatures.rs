//! Component signatures: the distinct degree sets a connected component can
//! realise on its own, combined across components by a disjointness search.

use std::collections::{BTreeMap, HashMap};
use std::ops::ControlFlow;

use rand::rngs::StdRng;

use super::search::{unpack, LabelOrder, Packed, SearchSpace};
use super::{PsResult, PsValue, SolverConfig};
use crate::error::{Error, Result};
use crate::graph::{find_isolated, EdgeLabeling, Graph, Vertex};
use crate::verifier::ProductDegree;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSignature {
    /// Sorted, pairwise distinct.
    pub degrees: Vec<ProductDegree>,
    pub representative: EdgeLabeling,
}

struct RawSignature {
    degrees: Vec<Packed>,
    labels: Vec<u32>,
}

/// Distinct sorted degree sets over all labelings of `component` with labels
/// `<= s` whose degrees are pairwise distinct, each with one labeling.
fn raw_signatures(component: &Graph, s: u32, budget: u64) -> Result<(Vec<RawSignature>, u64)> {
    let space = SearchSpace::new(component, vec![None; component.size()]);
    let mut seen: BTreeMap<Vec<Packed>, Vec<u32>> = BTreeMap::new();
    let (_, nodes) = space.run::<StdRng>(
        s,
        true,
        budget,
        LabelOrder::Ascending,
        &mut |labels, degrees| {
            let mut key = degrees.to_vec();
            key.sort_unstable();
            seen.entry(key).or_insert_with(|| labels.to_vec());
            ControlFlow::Continue(())
        },
    )?;
    let sigs = seen
        .into_iter()
        .map(|(degrees, labels)| RawSignature { degrees, labels })
        .collect();
    Ok((sigs, nodes))
}

pub fn component_signatures(
    component: &Graph,
    s: u32,
    config: SolverConfig,
) -> Result<Vec<ComponentSignature>> {
    if component.order() > 1 && component.components().len() > 1 {
        return Err(Error::Disconnected);
    }
    let (raw, _) = raw_signatures(component, s, config.budget)?;
    raw.into_iter()
        .map(|r| {
            let mut degrees: Vec<ProductDegree> = r.degrees.iter().map(|&p| unpack(p)).collect();
            degrees.sort();
            Ok(ComponentSignature {
                degrees,
                representative: EdgeLabeling::new(component.clone(), r.labels)?,
            })
        })
        .collect()
}

struct Part {
    graph: Graph,
    vertices: Vec<Vertex>,
    /// Index into the signature cache, shared by identical components.
    class: usize,
}

/// `ps` of a possibly disconnected graph through per-component signatures.
///
/// Agrees with [`super::ps_exact`]; the budget covers both the signature
/// enumeration and the combination search.
pub fn ps_exact_disconnected(g: &Graph, s_max: u32, config: SolverConfig) -> Result<PsResult> {
    if let Some(e) = find_isolated(g) {
        return Err(e);
    }
    let mut classes: Vec<Graph> = Vec::new();
    let mut parts: Vec<Part> = Vec::new();
    for vertices in g.components() {
        let graph = g.induced(&vertices);
        let class = match classes.iter().position(|c| *c == graph) {
            Some(i) => i,
            None => {
                classes.push(graph.clone());
                classes.len() - 1
            }
        };
        parts.push(Part {
            graph,
            vertices,
            class,
        });
    }

    let mut nodes = 0u64;
    let exhausted = |_| Error::BudgetExhausted {
        budget: config.budget,
    };
    for s in 1..=s_max {
        let mut cache = Vec::with_capacity(classes.len());
        for c in &classes {
            let (sigs, used) = raw_signatures(c, s, config.budget - nodes).map_err(exhausted)?;
            nodes += used;
            cache.push(sigs);
        }
        if cache.iter().any(Vec::is_empty) {
            continue;
        }

        let mut universe: HashMap<Packed, usize> = HashMap::new();
        for sig in cache.iter().flatten() {
            for &d in &sig.degrees {
                let next = universe.len();
                universe.entry(d).or_insert(next);
            }
        }
        let words = universe.len().div_ceil(64);
        let masks: Vec<Vec<Vec<u64>>> = cache
            .iter()
            .map(|sigs| {
                sigs.iter()
                    .map(|sig| {
                        let mut m = vec![0u64; words];
                        for d in &sig.degrees {
                            let i = universe[d];
                            m[i / 64] |= 1 << (i % 64);
                        }
                        m
                    })
                    .collect()
            })
            .collect();

        // Smallest signature sets first; identical components end up adjacent.
        let mut order: Vec<usize> = (0..parts.len()).collect();
        order.sort_by_key(|&p| (cache[parts[p].class].len(), parts[p].class, p));
        let mut combine = Combine {
            classes: order.iter().map(|&p| parts[p].class).collect(),
            masks: &masks,
            used: vec![0; words],
            chosen: Vec::with_capacity(parts.len()),
            nodes: 0,
            budget: config.budget - nodes,
        };
        let found = combine.extend(0).ok_or(Error::BudgetExhausted {
            budget: config.budget,
        })?;
        nodes += combine.nodes;
        if found {
            let mut choice = vec![0; parts.len()];
            for (slot, &p) in order.iter().enumerate() {
                choice[p] = combine.chosen[slot];
            }
            let certificate = assemble(g, &parts, |p| &cache[parts[p].class][choice[p]].labels)?;
            return Ok(PsResult {
                value: PsValue::Exact(s),
                certificate: Some(certificate),
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

fn assemble<'a>(
    g: &Graph,
    parts: &[Part],
    labels_of: impl Fn(usize) -> &'a Vec<u32>,
) -> Result<EdgeLabeling> {
    let mut place = vec![(0, 0); g.order()];
    for (p, part) in parts.iter().enumerate() {
        for (local, &v) in part.vertices.iter().enumerate() {
            place[v] = (p, local);
        }
    }
    let labels = g
        .edges()
        .iter()
        .map(|&(u, v)| {
            let (p, lu) = place[u];
            let (_, lv) = place[v];
            let e = parts[p]
                .graph
                .edge_index(lu, lv)
                .ok_or_else(|| Error::Internal("component edge missing".into()))?;
            Ok(labels_of(p)[e])
        })
        .collect::<Result<Vec<_>>>()?;
    EdgeLabeling::new(g.clone(), labels)
}

struct Combine<'m> {
    classes: Vec<usize>,
    masks: &'m [Vec<Vec<u64>>],
    used: Vec<u64>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Combine<'_> {
    /// `Some(found)`, or `None` when the budget runs out.
    fn extend(&mut self, slot: usize) -> Option<bool> {
        if slot == self.classes.len() {
            return Some(true);
        }
        let class = self.classes[slot];
        // Swapping the signatures of two identical components changes
        // nothing, so their indices are taken in increasing order.
        let start = match slot {
            0 => 0,
            _ if self.classes[slot - 1] == class => self.chosen[slot - 1] + 1,
            _ => 0,
        };
        for (i, mask) in self.masks[class].iter().enumerate().skip(start) {
            self.nodes += 1;
            if self.nodes > self.budget {
                return None;
            }
            if self.used.iter().zip(mask).any(|(a, b)| a & b != 0) {
                continue;
            }
            for (a, b) in self.used.iter_mut().zip(mask) {
                *a |= b;
            }
            self.chosen.push(i);
            if self.extend(slot + 1)? {
                return Some(true);
            }
            self.chosen.pop();
            for (a, b) in self.used.iter_mut().zip(mask) {
                *a &= !b;
            }
        }
        Some(false)
    }
}
