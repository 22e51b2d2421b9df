//! JSON reports. Vertex ids are 1-based, as in graph documents.

use serde::Serialize;

use crate::engine::{ConstructionOutcome, CrossPattern, Source};
use crate::graph::{CliqueCover, EdgeLabeling};
use crate::io::emit_labeling;
use crate::solver::{PsResult, PsValue};
use crate::verifier::{IrregularityReport, ProductDegree};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct DegreeEntry {
    pub vertex: usize,
    /// `2^a * 3^b` as `[a, b]` when no other prime occurs.
    pub pair: Option<[u32; 2]>,
    /// `[prime, exponent]` pairs.
    pub factors: Vec<[u32; 2]>,
    /// Decimal value, kept as a string since it may exceed 64 bits.
    pub value: Option<String>,
}

fn degree_entries(degrees: &[ProductDegree]) -> Vec<DegreeEntry> {
    degrees
        .iter()
        .enumerate()
        .map(|(v, d)| DegreeEntry {
            vertex: v + 1,
            pair: d.pair().map(|(a, b)| [a, b]),
            factors: d.factors().iter().map(|&(p, e)| [p, e]).collect(),
            value: d.value().map(|x| x.to_string()),
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct LabeledEdge {
    pub u: usize,
    pub v: usize,
    pub label: u32,
}

fn labeled_edges(l: &EdgeLabeling) -> Vec<LabeledEdge> {
    l.iter()
        .map(|(u, v, label)| LabeledEdge {
            u: u + 1,
            v: v + 1,
            label,
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub schema: u32,
    pub ok: bool,
    pub witness: Option<[usize; 2]>,
    pub strength: u32,
    pub degrees: Vec<DegreeEntry>,
}

impl VerifyReport {
    pub fn new(labeling: &EdgeLabeling, r: &IrregularityReport) -> Self {
        Self {
            schema: SCHEMA,
            ok: r.ok,
            witness: r.witness.map(|(u, v)| [u + 1, v + 1]),
            strength: labeling.strength(),
            degrees: degree_entries(&r.degrees),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PsReport {
    pub schema: u32,
    pub method: &'static str,
    /// Exact value, when found.
    pub ps: Option<u32>,
    /// Set when no labeling exists with labels up to this bound.
    pub greater_than: Option<u32>,
    pub nodes_explored: u64,
    pub certificate: Option<Vec<LabeledEdge>>,
}

impl PsReport {
    pub fn new(method: &'static str, r: &PsResult) -> Self {
        let (ps, greater_than) = match r.value {
            PsValue::Exact(s) => (Some(s), None),
            PsValue::GreaterThan(s) => (None, Some(s)),
        };
        Self {
            schema: SCHEMA,
            method,
            ps,
            greater_than,
            nodes_explored: r.nodes_explored,
            certificate: r.certificate.as_ref().map(labeled_edges),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossEdgeEntry {
    pub parts: [usize; 2],
    pub u: usize,
    pub v: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CoverReport {
    pub schema: u32,
    pub found: bool,
    pub k_max: usize,
    pub size: Option<usize>,
    pub parts: Vec<Vec<usize>>,
    pub cross_edges: Vec<CrossEdgeEntry>,
}

impl CoverReport {
    pub fn new(k_max: usize, cover: Option<&CliqueCover>) -> Self {
        let parts = cover.map_or_else(Vec::new, |c| {
            c.parts()
                .iter()
                .map(|p| p.iter().map(|v| v + 1).collect())
                .collect()
        });
        let cross_edges = cover.map_or_else(Vec::new, |c| {
            c.cross_edges()
                .iter()
                .map(|e| CrossEdgeEntry {
                    parts: [e.part_a + 1, e.part_b + 1],
                    u: e.u + 1,
                    v: e.v + 1,
                })
                .collect()
        });
        Self {
            schema: SCHEMA,
            found: cover.is_some(),
            k_max,
            size: cover.map(CliqueCover::len),
            parts,
            cross_edges,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CaseTrace {
    pub cover_sizes: Vec<usize>,
    pub pattern: CrossPattern,
    pub construction_id: String,
    /// Cover part (1-based) playing each block.
    pub roles: Vec<usize>,
    pub vertex_maps: Vec<Vec<usize>>,
    pub cross_edges: Vec<LabeledEdge>,
    pub surplus_edges: usize,
    pub nodes_explored: u64,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstructReport {
    pub schema: u32,
    pub strength: u32,
    pub source: Source,
    pub case_trace: CaseTrace,
    pub degrees: Vec<DegreeEntry>,
    pub document: String,
}

impl ConstructReport {
    pub fn new(out: &ConstructionOutcome, degrees: &[ProductDegree]) -> Self {
        let t = &out.case_trace;
        Self {
            schema: SCHEMA,
            strength: out.strength,
            source: out.source,
            case_trace: CaseTrace {
                cover_sizes: t.cover_sizes.clone(),
                pattern: t.pattern,
                construction_id: t.construction_id.clone(),
                roles: t.roles.iter().map(|p| p + 1).collect(),
                vertex_maps: t
                    .vertex_maps
                    .iter()
                    .map(|m| m.iter().map(|v| v + 1).collect())
                    .collect(),
                cross_edges: t
                    .cross_edges
                    .iter()
                    .map(|e| LabeledEdge {
                        u: e.u + 1,
                        v: e.v + 1,
                        label: e.label,
                    })
                    .collect(),
                surplus_edges: t.surplus_edges,
                nodes_explored: t.nodes_explored,
                notes: t.notes.clone(),
            },
            degrees: degree_entries(degrees),
            document: emit_labeling(&out.labeling),
        }
    }
}
