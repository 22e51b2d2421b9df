//! Depth-first search over edge labelings with collision pruning.
//!
//! Degrees are packed prime-exponent vectors: each prime up to the strength
//! owns a 16-bit field of a `u128`, so multiplying by a label is a single
//! addition and equal degrees are equal integers.

use std::collections::HashSet;
use std::ops::ControlFlow;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::verifier::{factorize, ProductDegree};

const PRIMES: [u32; 8] = [2, 3, 5, 7, 11, 13, 17, 19];
const FIELD_BITS: u32 = 16;
pub const MAX_STRENGTH: u32 = 22;

pub(crate) type Packed = u128;

/// Called with the labels and packed degrees of each irregular labeling.
pub(crate) type Visitor<'v> = dyn FnMut(&[u32], &[Packed]) -> ControlFlow<()> + 'v;

/// Packed exponent increment of each label `1..=s`.
#[derive(Clone, Debug)]
pub(crate) struct LabelTable {
    addends: Vec<Packed>,
}

impl LabelTable {
    pub fn new(strength: u32) -> Result<Self> {
        if strength > MAX_STRENGTH {
            return Err(Error::StrengthTooLarge(strength));
        }
        let mut addends = vec![0; strength as usize + 1];
        for (label, slot) in addends.iter_mut().enumerate().skip(1) {
            for (p, e) in factorize(label as u32) {
                let idx = PRIMES
                    .iter()
                    .position(|&q| q == p)
                    .expect("label primes are tabulated");
                *slot += Packed::from(e) << (FIELD_BITS * idx as u32);
            }
        }
        Ok(Self { addends })
    }

    pub fn addend(&self, label: u32) -> Packed {
        self.addends[label as usize]
    }
}

pub(crate) fn unpack(p: Packed) -> ProductDegree {
    let mut d = ProductDegree::one();
    for (idx, &prime) in PRIMES.iter().enumerate() {
        let e = (p >> (FIELD_BITS * idx as u32)) & 0xFFFF;
        for _ in 0..e {
            d.mul_label(prime);
        }
    }
    d
}

/// Order in which labels are tried at each node.
pub(crate) enum LabelOrder<'r, R: Rng> {
    Ascending,
    Shuffled(&'r mut R),
}

pub(crate) enum Outcome {
    /// The visitor asked to stop.
    Stopped,
    /// The whole space was enumerated.
    Exhausted,
}

/// A labeling problem on `graph`: some edges carry fixed labels, the rest
/// are searched in `order`.
pub(crate) struct SearchSpace<'g> {
    graph: &'g Graph,
    order: Vec<usize>,
    fixed: Vec<Option<u32>>,
    /// Vertices whose last free edge sits at each position of `order`.
    completes_at: Vec<Vec<Vertex>>,
    /// Vertices with no free edge at all.
    complete_from_start: Vec<Vertex>,
}

impl<'g> SearchSpace<'g> {
    /// Free edges are grouped by vertex, visiting vertices by descending
    /// degree, so each vertex completes as early as possible.
    pub fn new(graph: &'g Graph, fixed: Vec<Option<u32>>) -> Self {
        assert_eq!(fixed.len(), graph.size());
        let mut vertices: Vec<Vertex> = (0..graph.order()).collect();
        vertices.sort_by_key(|&v| (std::cmp::Reverse(graph.degree(v)), v));
        let mut taken = vec![false; graph.size()];
        let mut order = Vec::new();
        for &v in &vertices {
            for e in graph.incident_edges(v) {
                if fixed[e].is_none() && !taken[e] {
                    taken[e] = true;
                    order.push(e);
                }
            }
        }
        Self::with_order(graph, fixed, order)
    }

    pub fn with_order(graph: &'g Graph, fixed: Vec<Option<u32>>, order: Vec<usize>) -> Self {
        let mut last = vec![None; graph.order()];
        for (pos, &e) in order.iter().enumerate() {
            let (u, v) = graph.edges()[e];
            last[u] = Some(pos);
            last[v] = Some(pos);
        }
        let mut completes_at = vec![Vec::new(); order.len()];
        let mut complete_from_start = Vec::new();
        for (v, l) in last.into_iter().enumerate() {
            match l {
                Some(pos) => completes_at[pos].push(v),
                None => complete_from_start.push(v),
            }
        }
        Self {
            graph,
            order,
            fixed,
            completes_at,
            complete_from_start,
        }
    }

    /// Runs the search at `strength`, calling `visit` with the full label
    /// vector of each product-irregular labeling found.
    pub fn run<R: Rng>(
        &self,
        strength: u32,
        prune: bool,
        budget: u64,
        label_order: LabelOrder<'_, R>,
        visit: &mut Visitor<'_>,
    ) -> Result<(Outcome, u64)> {
        let table = LabelTable::new(strength)?;
        let mut labels = vec![0u32; self.graph.size()];
        let mut degrees = vec![0 as Packed; self.graph.order()];
        for (e, f) in self.fixed.iter().enumerate() {
            if let Some(l) = *f {
                if l > strength {
                    return Ok((Outcome::Exhausted, 0));
                }
                labels[e] = l;
                let (u, v) = self.graph.edges()[e];
                degrees[u] += table.addend(l);
                degrees[v] += table.addend(l);
            }
        }
        let mut completed = HashSet::new();
        if prune {
            for &v in &self.complete_from_start {
                if !completed.insert(degrees[v]) {
                    return Ok((Outcome::Exhausted, 0));
                }
            }
        }
        let mut dfs = Dfs {
            space: self,
            table,
            prune,
            budget,
            nodes: 0,
            labels,
            degrees,
            completed,
            label_order,
            strength,
            visit,
        };
        let flow = dfs.descend(0);
        let nodes = dfs.nodes;
        match flow {
            Step::Continue => Ok((Outcome::Exhausted, nodes)),
            Step::Stop => Ok((Outcome::Stopped, nodes)),
            Step::Budget => Err(Error::BudgetExhausted { budget }),
        }
    }
}

enum Step {
    Continue,
    Stop,
    Budget,
}

struct Dfs<'s, 'g, 'r, 'v, R: Rng> {
    space: &'s SearchSpace<'g>,
    table: LabelTable,
    prune: bool,
    budget: u64,
    nodes: u64,
    labels: Vec<u32>,
    degrees: Vec<Packed>,
    completed: HashSet<Packed>,
    label_order: LabelOrder<'r, R>,
    strength: u32,
    visit: &'v mut Visitor<'v>,
}

impl<R: Rng> Dfs<'_, '_, '_, '_, R> {
    fn descend(&mut self, pos: usize) -> Step {
        if pos == self.space.order.len() {
            if !self.prune {
                let mut seen = HashSet::with_capacity(self.degrees.len());
                if !self.degrees.iter().all(|d| seen.insert(*d)) {
                    return Step::Continue;
                }
            }
            return match (self.visit)(&self.labels, &self.degrees) {
                ControlFlow::Continue(()) => Step::Continue,
                ControlFlow::Break(()) => Step::Stop,
            };
        }
        let e = self.space.order[pos];
        let (u, v) = self.space.graph.edges()[e];
        let mut buf = [0u32; MAX_STRENGTH as usize];
        let choices = &mut buf[..self.strength as usize];
        for (i, c) in choices.iter_mut().enumerate() {
            *c = i as u32 + 1;
        }
        if let LabelOrder::Shuffled(rng) = &mut self.label_order {
            choices.shuffle(*rng);
        }
        for &label in choices.iter() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Step::Budget;
            }
            let add = self.table.addend(label);
            self.labels[e] = label;
            self.degrees[u] += add;
            self.degrees[v] += add;

            let mut inserted = 0;
            let mut clash = false;
            if self.prune {
                for &w in &self.space.completes_at[pos] {
                    if self.completed.insert(self.degrees[w]) {
                        inserted += 1;
                    } else {
                        clash = true;
                        break;
                    }
                }
            }
            let step = if clash {
                Step::Continue
            } else {
                self.descend(pos + 1)
            };
            for &w in &self.space.completes_at[pos][..inserted] {
                self.completed.remove(&self.degrees[w]);
            }
            self.degrees[u] -= add;
            self.degrees[v] -= add;
            self.labels[e] = 0;
            match step {
                Step::Continue => {}
                other => return other,
            }
        }
        Step::Continue
    }
}
