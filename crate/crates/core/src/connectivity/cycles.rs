//! Simple cycles of the incidence structure and the cycle predicates.
//!
//! A cycle here is a simple vertex cycle `v1 … vk v1` (`k ≥ 3`) whose `k`
//! edges each have both incidence pairs stored.

use serde::Serialize;

use crate::error::{FigError, Result};
use crate::graph::{EdgeKey, FuzzyIncidenceGraph, PairKey, VertexId};
use crate::weight::UnitWeight;

pub const DEFAULT_CYCLE_LIMIT: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    /// Canonical rotation: smallest vertex first, then the smaller neighbour.
    pub vertices: Vec<VertexId>,
    pub edges: Vec<(EdgeKey, UnitWeight)>,
    /// `2k` pairs, two per edge in traversal order.
    pub pairs: Vec<(PairKey, UnitWeight)>,
    pub min_pair_weight: UnitWeight,
    pub min_multiplicity: usize,
    pub min_edge_weight: UnitWeight,
    pub min_edge_multiplicity: usize,
}

impl CycleWitness {
    fn from_vertices(g: &FuzzyIncidenceGraph, vertices: Vec<VertexId>) -> Self {
        let k = vertices.len();
        let mut edges = Vec::with_capacity(k);
        let mut pairs = Vec::with_capacity(2 * k);
        for i in 0..k {
            let a = &vertices[i];
            let b = &vertices[(i + 1) % k];
            let e = EdgeKey::new(a.clone(), b.clone()).expect("distinct");
            edges.push((e.clone(), g.edge_weight(&e).expect("cycle edge")));
            for end in [a, b] {
                let p = PairKey::new(end.clone(), e.clone()).expect("endpoint");
                let w = g.pair_weight(&p).expect("cycle pair");
                pairs.push((p, w));
            }
        }
        let (min_pair_weight, min_multiplicity) = minimum(pairs.iter().map(|(_, w)| *w));
        let (min_edge_weight, min_edge_multiplicity) = minimum(edges.iter().map(|(_, w)| *w));
        CycleWitness {
            vertices,
            edges,
            pairs,
            min_pair_weight,
            min_multiplicity,
            min_edge_weight,
            min_edge_multiplicity,
        }
    }

    /// The cycle has no unique weakest pair.
    pub fn is_weak_incidence_cycle(&self) -> bool {
        self.min_multiplicity >= 2
    }
}

fn minimum(weights: impl Iterator<Item = UnitWeight>) -> (UnitWeight, usize) {
    weights.fold((UnitWeight::ONE, 0), |(m, c), w| match w.cmp(&m) {
        std::cmp::Ordering::Less => (w, 1),
        std::cmp::Ordering::Equal => (m, c + 1),
        std::cmp::Ordering::Greater => (m, c),
    })
}

pub fn enumerate_cycles(g: &FuzzyIncidenceGraph) -> Result<Vec<CycleWitness>> {
    enumerate_cycles_with_limit(g, DEFAULT_CYCLE_LIMIT)
}

/// Every cycle exactly once, ordered by canonical vertex sequence.
pub fn enumerate_cycles_with_limit(
    g: &FuzzyIncidenceGraph,
    limit: usize,
) -> Result<Vec<CycleWitness>> {
    if g.vertex_count() > limit {
        return Err(FigError::LimitExceeded {
            what: "cycle enumeration",
            limit,
            actual: g.vertex_count(),
        });
    }
    let names: Vec<&VertexId> = g.vertices().map(|(v, _)| v).collect();
    let position = |v: &VertexId| names.binary_search(&v).expect("stored vertex");
    let mut adjacency = vec![Vec::new(); names.len()];
    for e in g.edge_view() {
        let (u, v) = e.endpoints();
        let (iu, iv) = (position(u), position(v));
        adjacency[iu].push(iv);
        adjacency[iv].push(iu);
    }
    for list in &mut adjacency {
        list.sort_unstable();
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut on_path = vec![false; names.len()];
    for start in 0..names.len() {
        let mut path = vec![start];
        on_path[start] = true;
        extend(start, &adjacency, &mut path, &mut on_path, &mut found);
        on_path[start] = false;
    }
    found.sort();
    Ok(found
        .into_iter()
        .map(|c| CycleWitness::from_vertices(g, c.into_iter().map(|i| names[i].clone()).collect()))
        .collect())
}

/// Depth-first extension restricted to vertices above `start`, so each cycle
/// is rooted at its smallest vertex; the reflection is dropped by requiring
/// the second vertex to be smaller than the last.
fn extend(
    start: usize,
    adjacency: &[Vec<usize>],
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().expect("non-empty");
    for &next in &adjacency[last] {
        if next == start {
            if path.len() >= 3 && path[1] < last {
                found.push(path.clone());
            }
            continue;
        }
        if next < start || on_path[next] {
            continue;
        }
        on_path[next] = true;
        path.push(next);
        extend(start, adjacency, path, on_path, found);
        path.pop();
        on_path[next] = false;
    }
}

/// The whole support `(ε*, ρ*, η*)` forms one cycle, returned as a witness.
fn as_single_cycle(g: &FuzzyIncidenceGraph) -> Option<CycleWitness> {
    let n = g.vertex_count();
    if n < 3 || g.edge_count() != n || g.pair_count() != 2 * n {
        return None;
    }
    if g.edge_view().len() != n || !g.is_connected() {
        return None;
    }
    let mut degree = std::collections::BTreeMap::new();
    for (e, _) in g.edges() {
        let (u, v) = e.endpoints();
        *degree.entry(u).or_insert(0) += 1;
        *degree.entry(v).or_insert(0) += 1;
    }
    if degree.len() != n || degree.values().any(|&d| d != 2) {
        return None;
    }
    let mut cycles = enumerate_cycles_with_limit(g, n).ok()?;
    (cycles.len() == 1).then(|| cycles.pop().expect("one cycle"))
}

/// Weak fuzzy incidence cycle: a cycle without a unique weakest pair.
pub fn is_wfic(g: &FuzzyIncidenceGraph) -> bool {
    as_single_cycle(g).is_some_and(|c| c.min_multiplicity >= 2)
}

/// Fuzzy cycle: a cycle without a unique weakest edge.
pub fn is_fc(g: &FuzzyIncidenceGraph) -> bool {
    as_single_cycle(g).is_some_and(|c| c.min_edge_multiplicity >= 2)
}

/// Fuzzy incidence cycle: a fuzzy cycle without a unique weakest pair.
pub fn is_fic(g: &FuzzyIncidenceGraph) -> bool {
    as_single_cycle(g).is_some_and(|c| c.min_edge_multiplicity >= 2 && c.min_multiplicity >= 2)
}

/// Strongness decided by cycles alone: every cycle is weak.
pub fn sfig_via_cycles(g: &FuzzyIncidenceGraph) -> Result<bool> {
    sfig_via_cycles_with_limit(g, DEFAULT_CYCLE_LIMIT)
}

pub fn sfig_via_cycles_with_limit(g: &FuzzyIncidenceGraph, limit: usize) -> Result<bool> {
    Ok(enumerate_cycles_with_limit(g, limit)?
        .iter()
        .all(CycleWitness::is_weak_incidence_cycle))
}
