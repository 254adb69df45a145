//! The fuzzy incidence graph data model.
//!
//! A graph stores only its support: vertices, edges and incidence pairs with a
//! strictly positive membership value. Pairs are always endpoint pairs
//! `(x, xy)`. Values are immutable once built; use [`FigBuilder`] to assemble
//! a graph and check the membership inequalities.

use std::borrow::Borrow;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::Serialize;

use crate::error::{FigError, Result};
use crate::weight::UnitWeight;

/// Vertex name: a non-empty token without whitespace or `#`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if Self::is_valid_name(&name) {
            Ok(VertexId(name))
        } else {
            Err(FigError::InvalidVertexName(name))
        }
    }

    pub fn is_valid_name(name: &str) -> bool {
        !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || c == '#')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An unordered pair of distinct vertices. The smaller name is stored first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeKey {
    lo: VertexId,
    hi: VertexId,
}

impl EdgeKey {
    /// Returns `None` for a loop.
    pub fn new(u: VertexId, v: VertexId) -> Option<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Some(EdgeKey { lo: u, hi: v }),
            std::cmp::Ordering::Greater => Some(EdgeKey { lo: v, hi: u }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.lo, &self.hi)
    }

    pub fn has_endpoint(&self, v: &str) -> bool {
        self.lo.as_str() == v || self.hi.as_str() == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: &str) -> Option<&VertexId> {
        if self.lo.as_str() == v {
            Some(&self.hi)
        } else if self.hi.as_str() == v {
            Some(&self.lo)
        } else {
            None
        }
    }
}

impl fmt::Display for EdgeKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}~{}", self.lo, self.hi)
    }
}

/// An incidence pair `(vertex, edge)` where `vertex` is an endpoint of `edge`.
/// Ordered by edge first, then vertex.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PairKey {
    edge: EdgeKey,
    vertex: VertexId,
}

impl PairKey {
    /// Returns `None` unless `vertex` is an endpoint of `edge`.
    pub fn new(vertex: VertexId, edge: EdgeKey) -> Option<Self> {
        edge.has_endpoint(vertex.as_str())
            .then_some(PairKey { edge, vertex })
    }

    pub fn vertex(&self) -> &VertexId {
        &self.vertex
    }

    pub fn edge(&self) -> &EdgeKey {
        &self.edge
    }

    /// The pair on the same edge at the other endpoint.
    pub fn partner(&self) -> PairKey {
        let other = self.edge.other(self.vertex.as_str()).expect("endpoint pair");
        PairKey {
            edge: self.edge.clone(),
            vertex: other.clone(),
        }
    }
}

impl fmt::Display for PairKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.vertex, self.edge)
    }
}

/// One broken FIG requirement, with the offending key.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Violation {
    UnknownVertex { edge: (VertexId, VertexId), vertex: VertexId },
    UnknownEdge { pair_vertex: VertexId, edge: (VertexId, VertexId) },
    LoopEdge { vertex: VertexId },
    NonEndpointPair { pair_vertex: VertexId, edge: (VertexId, VertexId) },
    EdgeExceedsEndpoints { edge: EdgeKey, rho: UnitWeight, cap: UnitWeight },
    PairExceedsCap { pair: PairKey, eta: UnitWeight, cap: UnitWeight },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnknownVertex { edge, vertex } => {
                write!(f, "edge {}~{} references undeclared vertex {vertex}", edge.0, edge.1)
            }
            Violation::UnknownEdge { pair_vertex, edge } => write!(
                f,
                "pair ({pair_vertex}, {}~{}) references undeclared edge",
                edge.0, edge.1
            ),
            Violation::LoopEdge { vertex } => write!(f, "loop edge at {vertex}"),
            Violation::NonEndpointPair { pair_vertex, edge } => write!(
                f,
                "pair ({pair_vertex}, {}~{}): vertex is not an endpoint of the edge",
                edge.0, edge.1
            ),
            Violation::EdgeExceedsEndpoints { edge, rho, cap } => {
                let (u, v) = edge.endpoints();
                write!(f, "edge {edge}: rho = {rho} exceeds eps({u}) ∧ eps({v}) = {cap}")
            }
            Violation::PairExceedsCap { pair, eta, cap } => {
                write!(f, "pair {pair}: eta = {eta} exceeds eps ∧ rho = {cap}")
            }
        }
    }
}

/// All violations found in a graph; empty when the input is a FIG.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

/// Accumulates raw records and checks them. Zero-valued records are dropped on
/// insertion, since only the support of each map is stored.
#[derive(Clone, Debug, Default)]
pub struct FigBuilder {
    vertices: BTreeMap<VertexId, UnitWeight>,
    edges: BTreeMap<(VertexId, VertexId), UnitWeight>,
    pairs: BTreeMap<(VertexId, (VertexId, VertexId)), UnitWeight>,
}

fn sorted(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u, v)
    } else {
        (v, u)
    }
}

impl FigBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str, weight: UnitWeight) -> Result<&mut Self> {
        let id = VertexId::new(name)?;
        if weight.is_zero() {
            self.vertices.remove(&id);
        } else {
            self.vertices.insert(id, weight);
        }
        Ok(self)
    }

    pub fn edge(&mut self, u: &str, v: &str, weight: UnitWeight) -> Result<&mut Self> {
        let key = sorted(VertexId::new(u)?, VertexId::new(v)?);
        if weight.is_zero() {
            self.edges.remove(&key);
        } else {
            self.edges.insert(key, weight);
        }
        Ok(self)
    }

    /// Records the pair `(x, uv)`.
    pub fn pair(&mut self, x: &str, u: &str, v: &str, weight: UnitWeight) -> Result<&mut Self> {
        let key = (
            VertexId::new(x)?,
            sorted(VertexId::new(u)?, VertexId::new(v)?),
        );
        if weight.is_zero() {
            self.pairs.remove(&key);
        } else {
            self.pairs.insert(key, weight);
        }
        Ok(self)
    }

    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        for ((u, v), &rho) in &self.edges {
            if u == v {
                violations.push(Violation::LoopEdge { vertex: u.clone() });
                continue;
            }
            let mut cap = UnitWeight::ONE;
            let mut known = true;
            for end in [u, v] {
                match self.vertices.get(end) {
                    Some(&eps) => cap = cap.meet(eps),
                    None => {
                        known = false;
                        violations.push(Violation::UnknownVertex {
                            edge: (u.clone(), v.clone()),
                            vertex: end.clone(),
                        });
                    }
                }
            }
            if known && rho > cap {
                violations.push(Violation::EdgeExceedsEndpoints {
                    edge: EdgeKey::new(u.clone(), v.clone()).expect("not a loop"),
                    rho,
                    cap,
                });
            }
        }
        for ((x, (u, v)), &eta) in &self.pairs {
            let Some(&rho) = self.edges.get(&(u.clone(), v.clone())) else {
                violations.push(Violation::UnknownEdge {
                    pair_vertex: x.clone(),
                    edge: (u.clone(), v.clone()),
                });
                continue;
            };
            if u == v {
                // already reported as a loop
                continue;
            }
            if x != u && x != v {
                violations.push(Violation::NonEndpointPair {
                    pair_vertex: x.clone(),
                    edge: (u.clone(), v.clone()),
                });
                continue;
            }
            let Some(&eps) = self.vertices.get(x) else {
                // the edge check already reported the missing endpoint
                continue;
            };
            let cap = eps.meet(rho);
            if eta > cap {
                let edge = EdgeKey::new(u.clone(), v.clone()).expect("not a loop");
                violations.push(Violation::PairExceedsCap {
                    pair: PairKey::new(x.clone(), edge).expect("endpoint"),
                    eta,
                    cap,
                });
            }
        }
        ValidationReport { violations }
    }

    pub fn build(self) -> Result<FuzzyIncidenceGraph> {
        let report = self.validate();
        if !report.is_empty() {
            return Err(FigError::Invalid(report));
        }
        Ok(self.into_graph())
    }

    fn into_graph(self) -> FuzzyIncidenceGraph {
        let edges = self
            .edges
            .into_iter()
            .map(|((u, v), w)| (EdgeKey::new(u, v).expect("validated"), w))
            .collect();
        let pairs = self
            .pairs
            .into_iter()
            .map(|((x, (u, v)), w)| {
                let edge = EdgeKey::new(u, v).expect("validated");
                (PairKey::new(x, edge).expect("validated"), w)
            })
            .collect();
        FuzzyIncidenceGraph {
            vertices: self.vertices,
            edges,
            pairs,
        }
    }
}

/// Fuzzy incidence graph `(ε, ρ, η)` restricted to its support.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FuzzyIncidenceGraph {
    vertices: BTreeMap<VertexId, UnitWeight>,
    edges: BTreeMap<EdgeKey, UnitWeight>,
    pairs: BTreeMap<PairKey, UnitWeight>,
}

/// The underlying fuzzy graph `(ε, ρ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingFuzzyGraph {
    pub vertices: BTreeMap<VertexId, UnitWeight>,
    pub edges: BTreeMap<EdgeKey, UnitWeight>,
}

/// The crisp underlying graph `(ε*, ρ*)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnderlyingGraph {
    pub vertices: BTreeSet<VertexId>,
    pub edges: BTreeSet<EdgeKey>,
}

impl FuzzyIncidenceGraph {
    pub fn builder() -> FigBuilder {
        FigBuilder::new()
    }

    /// Assembles a graph from maps that are FIG by construction (products,
    /// generators). Zero entries are dropped; the inequalities are not checked.
    pub(crate) fn from_parts_unchecked(
        vertices: BTreeMap<VertexId, UnitWeight>,
        edges: BTreeMap<EdgeKey, UnitWeight>,
        pairs: BTreeMap<PairKey, UnitWeight>,
    ) -> Self {
        FuzzyIncidenceGraph {
            vertices: vertices.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
            edges: edges.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
            pairs: pairs.into_iter().filter(|(_, w)| !w.is_zero()).collect(),
        }
    }

    pub fn vertex_weight(&self, v: &str) -> Option<UnitWeight> {
        self.vertices.get(v).copied()
    }

    pub fn edge_weight(&self, e: &EdgeKey) -> Option<UnitWeight> {
        self.edges.get(e).copied()
    }

    pub fn pair_weight(&self, p: &PairKey) -> Option<UnitWeight> {
        self.pairs.get(p).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, UnitWeight)> + '_ {
        self.vertices.iter().map(|(k, &w)| (k, w))
    }

    pub fn edges(&self) -> impl Iterator<Item = (&EdgeKey, UnitWeight)> + '_ {
        self.edges.iter().map(|(k, &w)| (k, w))
    }

    pub fn pairs(&self) -> impl Iterator<Item = (&PairKey, UnitWeight)> + '_ {
        self.pairs.iter().map(|(k, &w)| (k, w))
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    pub fn contains_vertex(&self, v: &str) -> bool {
        self.vertices.contains_key(v)
    }

    /// Stored pairs whose vertex is `v`.
    pub fn pairs_at<'a>(&'a self, v: &'a str) -> impl Iterator<Item = (&'a PairKey, UnitWeight)> + 'a {
        self.pairs
            .iter()
            .filter(move |(p, _)| p.vertex().as_str() == v)
            .map(|(k, &w)| (k, w))
    }

    /// Both pairs of `e`, when both are stored.
    pub fn pair_weights_of_edge(&self, e: &EdgeKey) -> Option<(UnitWeight, UnitWeight)> {
        let (u, v) = e.endpoints();
        let pu = self.pairs.get(&PairKey::new(u.clone(), e.clone())?)?;
        let pv = self.pairs.get(&PairKey::new(v.clone(), e.clone())?)?;
        Some((*pu, *pv))
    }

    /// Re-checks the FIG inequalities on a built graph.
    pub fn validate(&self) -> ValidationReport {
        let mut b = FigBuilder::new();
        b.vertices = self.vertices.clone();
        b.edges = self
            .edges
            .iter()
            .map(|(e, &w)| {
                let (u, v) = e.endpoints();
                ((u.clone(), v.clone()), w)
            })
            .collect();
        b.pairs = self
            .pairs
            .iter()
            .map(|(p, &w)| {
                let (u, v) = p.edge().endpoints();
                ((p.vertex().clone(), (u.clone(), v.clone())), w)
            })
            .collect();
        b.validate()
    }

    /// Edges whose two incidence pairs are both stored.
    pub fn edge_view(&self) -> BTreeSet<EdgeKey> {
        self.edges
            .keys()
            .filter(|e| self.pair_weights_of_edge(e).is_some())
            .cloned()
            .collect()
    }

    pub fn underlying_fuzzy_graph(&self) -> UnderlyingFuzzyGraph {
        UnderlyingFuzzyGraph {
            vertices: self.vertices.clone(),
            edges: self.edges.clone(),
        }
    }

    pub fn underlying_graph(&self) -> UnderlyingGraph {
        UnderlyingGraph {
            vertices: self.vertices.keys().cloned().collect(),
            edges: self.edges.keys().cloned().collect(),
        }
    }

    /// Connected components over [`edge_view`](Self::edge_view) adjacency,
    /// each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut adjacency: BTreeMap<&VertexId, Vec<&VertexId>> =
            self.vertices.keys().map(|v| (v, Vec::new())).collect();
        let view = self.edge_view();
        for e in &view {
            let (u, v) = e.endpoints();
            adjacency.get_mut(u).expect("endpoint").push(v);
            adjacency.get_mut(v).expect("endpoint").push(u);
        }
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices.keys() {
            if !seen.insert(start) {
                continue;
            }
            let mut component = BTreeSet::new();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                component.insert(v.clone());
                for &n in &adjacency[v] {
                    if seen.insert(n) {
                        stack.push(n);
                    }
                }
            }
            out.push(component);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}
