//! Incidence strength, pair classification and the structural predicates
//! built on them.
//!
//! `ICONN(s, t)` is a bottleneck (widest) path problem over the node set
//! `V ∪ E`, where every stored pair `(v, e)` links `v` and `e` with capacity
//! `η(v, e)`. A max-min optimum is never improved by revisiting a node, so the
//! widest path value over walks equals the value over simple incidence paths.

mod cycles;

use std::fmt;

use serde::Serialize;

pub use cycles::{
    enumerate_cycles, enumerate_cycles_with_limit, is_fc, is_fic, is_wfic, sfig_via_cycles,
    sfig_via_cycles_with_limit, CycleWitness, DEFAULT_CYCLE_LIMIT,
};

use crate::error::{FigError, Result};
use crate::graph::{EdgeKey, FuzzyIncidenceGraph, PairKey, VertexId};
use crate::index::IncidenceIndex;
use crate::weight::UnitWeight;

/// A node of the vertex-edge incidence structure.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum IncidenceNode {
    Vertex(VertexId),
    Edge(EdgeKey),
}

impl fmt::Display for IncidenceNode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IncidenceNode::Vertex(v) => write!(f, "vertex {v}"),
            IncidenceNode::Edge(e) => write!(f, "edge {e}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum PairClass {
    Alpha,
    Beta,
    Delta,
}

impl PairClass {
    pub fn is_strong(self) -> bool {
        self != PairClass::Delta
    }

    fn of(eta: UnitWeight, eta_prime_inf: UnitWeight) -> Self {
        match eta.cmp(&eta_prime_inf) {
            std::cmp::Ordering::Greater => PairClass::Alpha,
            std::cmp::Ordering::Equal => PairClass::Beta,
            std::cmp::Ordering::Less => PairClass::Delta,
        }
    }
}

impl fmt::Display for PairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairClass::Alpha => "alpha",
            PairClass::Beta => "beta",
            PairClass::Delta => "delta",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PairClassification {
    pub pair: PairKey,
    pub eta: UnitWeight,
    pub eta_prime_inf: UnitWeight,
    pub class: PairClass,
}

fn node_index(index: &IncidenceIndex<'_>, node: &IncidenceNode) -> Result<usize> {
    match node {
        IncidenceNode::Vertex(v) => index.vertex_node(v.as_str()),
        IncidenceNode::Edge(e) => index.edge_node(e),
    }
    .ok_or_else(|| FigError::UnknownElement(node.to_string()))
}

/// Greatest incidence strength over paths from `source` to `target`; zero
/// when no path exists.
pub fn iconn(
    g: &FuzzyIncidenceGraph,
    source: &IncidenceNode,
    target: &IncidenceNode,
) -> Result<UnitWeight> {
    let index = IncidenceIndex::new(g);
    let s = node_index(&index, source)?;
    let t = node_index(&index, target)?;
    if s == t {
        return Err(FigError::UnknownElement(format!(
            "{source}: source and target coincide"
        )));
    }
    Ok(index.widest(s, t, None))
}

/// `ICONN` from `p.vertex` to `p.edge` in the graph with `p` deleted.
pub fn eta_prime_inf(g: &FuzzyIncidenceGraph, p: &PairKey) -> Result<UnitWeight> {
    let index = IncidenceIndex::new(g);
    let i = index
        .pair_index(p)
        .ok_or_else(|| FigError::UnknownElement(format!("pair {p}")))?;
    Ok(index.strength_without(i))
}

pub fn classify_pair(g: &FuzzyIncidenceGraph, p: &PairKey) -> Result<PairClassification> {
    let eta = g
        .pair_weight(p)
        .ok_or_else(|| FigError::UnknownElement(format!("pair {p}")))?;
    let eta_prime_inf = eta_prime_inf(g, p)?;
    Ok(PairClassification {
        pair: p.clone(),
        eta,
        eta_prime_inf,
        class: PairClass::of(eta, eta_prime_inf),
    })
}

/// Every stored pair, in canonical `(edge, vertex)` order.
pub fn classify_all(g: &FuzzyIncidenceGraph) -> Vec<PairClassification> {
    let index = IncidenceIndex::new(g);
    index
        .pair_keys
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            let eta = UnitWeight::from_millionths(index.pairs[i].weight).expect("unit");
            let eta_prime_inf = index.strength_without(i);
            PairClassification {
                pair: p.clone(),
                eta,
                eta_prime_inf,
                class: PairClass::of(eta, eta_prime_inf),
            }
        })
        .collect()
}

/// True when no pair is a δ-pair.
pub fn is_sfig(g: &FuzzyIncidenceGraph) -> bool {
    let index = IncidenceIndex::new(g);
    (0..index.pairs.len()).all(|i| {
        let eta = index.pairs[i].weight;
        eta >= index.strength_without(i).millionths()
    })
}

/// `η(x, xy) = ε(x) ∧ ρ(xy)`.
pub fn is_effective_pair(g: &FuzzyIncidenceGraph, p: &PairKey) -> Result<bool> {
    let eta = g
        .pair_weight(p)
        .ok_or_else(|| FigError::UnknownElement(format!("pair {p}")))?;
    Ok(eta == effective_cap(g, p))
}

fn effective_cap(g: &FuzzyIncidenceGraph, p: &PairKey) -> UnitWeight {
    let eps = g.vertex_weight(p.vertex().as_str()).expect("stored vertex");
    let rho = g.edge_weight(p.edge()).expect("stored edge");
    eps.meet(rho)
}

pub fn has_all_effective_pairs(g: &FuzzyIncidenceGraph) -> bool {
    g.pairs().all(|(p, eta)| eta == effective_cap(g, p))
}

/// Complete FIG: every vertex pair carries an edge at `ε ∧ ε`, and all `2|E|`
/// pairs are stored and effective.
pub fn is_cfig(g: &FuzzyIncidenceGraph) -> bool {
    let vertices: Vec<(&VertexId, UnitWeight)> = g.vertices().collect();
    let n = vertices.len();
    if g.edge_count() != n * n.saturating_sub(1) / 2 || g.pair_count() != 2 * g.edge_count() {
        return false;
    }
    for (i, &(u, eu)) in vertices.iter().enumerate() {
        for &(v, ev) in &vertices[i + 1..] {
            let e = EdgeKey::new(u.clone(), v.clone()).expect("distinct");
            if g.edge_weight(&e) != Some(eu.meet(ev)) {
                return false;
            }
        }
    }
    has_all_effective_pairs(g)
}
