//! Join, Cartesian product, tensor product and composition of fuzzy incidence
//! graphs, plus the weight predicates used as sufficient conditions.
//!
//! Product vertices are named `left|right`, so factor names must not contain
//! `|` themselves.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{FigError, Result};
use crate::graph::{EdgeKey, FuzzyIncidenceGraph, PairKey, VertexId};
use crate::weight::UnitWeight;

pub const PRODUCT_SEPARATOR: char = '|';

/// A vertex `(left, right)` of a product graph.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProductVertexId {
    pub left: VertexId,
    pub right: VertexId,
}

impl ProductVertexId {
    pub fn new(left: VertexId, right: VertexId) -> Result<Self> {
        for part in [&left, &right] {
            if part.as_str().contains(PRODUCT_SEPARATOR) {
                return Err(FigError::InvalidVertexName(format!(
                    "{part} (product factors may not contain '{PRODUCT_SEPARATOR}')"
                )));
            }
        }
        Ok(ProductVertexId { left, right })
    }

    /// Splits a rendered `left|right` name.
    pub fn parse(name: &str) -> Option<Self> {
        let (l, r) = name.split_once(PRODUCT_SEPARATOR)?;
        if r.contains(PRODUCT_SEPARATOR) {
            return None;
        }
        Some(ProductVertexId {
            left: VertexId::new(l).ok()?,
            right: VertexId::new(r).ok()?,
        })
    }

    pub fn to_vertex_id(&self) -> VertexId {
        VertexId::new(self.to_string()).expect("both parts are valid tokens")
    }
}

impl fmt::Display for ProductVertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{PRODUCT_SEPARATOR}{}", self.left, self.right)
    }
}

/// Accumulates product records keyed by factor coordinates.
struct ProductParts<'a> {
    g1: &'a FuzzyIncidenceGraph,
    g2: &'a FuzzyIncidenceGraph,
    vertices: BTreeMap<VertexId, UnitWeight>,
    edges: BTreeMap<EdgeKey, UnitWeight>,
    pairs: BTreeMap<PairKey, UnitWeight>,
}

type Coord<'a> = (&'a VertexId, &'a VertexId);

fn name((a, b): Coord<'_>) -> VertexId {
    ProductVertexId { left: a.clone(), right: b.clone() }.to_vertex_id()
}

impl<'a> ProductParts<'a> {
    fn new(g1: &'a FuzzyIncidenceGraph, g2: &'a FuzzyIncidenceGraph) -> Result<Self> {
        for g in [g1, g2] {
            for (v, _) in g.vertices() {
                if v.as_str().contains(PRODUCT_SEPARATOR) {
                    return Err(ProductVertexId::new(v.clone(), v.clone()).unwrap_err());
                }
            }
        }
        let mut vertices = BTreeMap::new();
        for (a, ea) in g1.vertices() {
            for (b, eb) in g2.vertices() {
                vertices.insert(name((a, b)), ea.meet(eb));
            }
        }
        Ok(ProductParts { g1, g2, vertices, edges: BTreeMap::new(), pairs: BTreeMap::new() })
    }

    fn edge(&mut self, from: Coord<'_>, to: Coord<'_>, rho: UnitWeight) -> EdgeKey {
        let key = EdgeKey::new(name(from), name(to)).expect("product edge joins distinct vertices");
        self.edges.insert(key.clone(), rho);
        key
    }

    fn pair(&mut self, at: Coord<'_>, edge: &EdgeKey, eta: UnitWeight) {
        let key = PairKey::new(name(at), edge.clone()).expect("endpoint");
        self.pairs.insert(key, eta);
    }

    fn eps2(&self, b: &VertexId) -> UnitWeight {
        self.g2.vertex_weight(b.as_str()).expect("factor vertex")
    }

    /// Copies every edge of the second factor along each first coordinate `a`,
    /// capping by `ε₁(a)`. Shared by the Cartesian product and composition.
    fn copy_second_factor_edges(&mut self) {
        let (g1, g2) = (self.g1, self.g2);
        for (a, ea) in g1.vertices() {
            for (e, rho) in g2.edges() {
                let (b1, b2) = e.endpoints();
                let key = self.edge((a, b1), (a, b2), ea.meet(rho));
                if let Some((h1, h2)) = g2.pair_weights_of_edge(e) {
                    self.pair((a, b1), &key, ea.meet(h1));
                    self.pair((a, b2), &key, ea.meet(h2));
                }
            }
        }
    }

    fn copy_first_factor_edges(&mut self) {
        let (g1, g2) = (self.g1, self.g2);
        for (b, eb) in g2.vertices() {
            for (e, rho) in g1.edges() {
                let (a1, a2) = e.endpoints();
                let key = self.edge((a1, b), (a2, b), eb.meet(rho));
                if let Some((h1, h2)) = g1.pair_weights_of_edge(e) {
                    self.pair((a1, b), &key, eb.meet(h1));
                    self.pair((a2, b), &key, eb.meet(h2));
                }
            }
        }
    }

    fn finish(self) -> FuzzyIncidenceGraph {
        FuzzyIncidenceGraph::from_parts_unchecked(self.vertices, self.edges, self.pairs)
    }
}

/// Disjoint union plus every cross edge `ab` (`a ∈ V₁`, `b ∈ V₂`).
///
/// The cross pair `(a, ab)` weighs `ε₁(a) ∧ ε₂(b) ∧ m₁(a)`, where `m₁(a)` is the
/// least pair weight at `a` in its own graph, and is left out when `a` has no
/// pairs. The pair `(b, ab)` is symmetric.
pub fn join(g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> Result<FuzzyIncidenceGraph> {
    if let Some((v, _)) = g1.vertices().find(|(v, _)| g2.contains_vertex(v.as_str())) {
        return Err(FigError::VertexNameClash(v.clone()));
    }
    let mut vertices = BTreeMap::new();
    let mut edges = BTreeMap::new();
    let mut pairs = BTreeMap::new();
    for g in [g1, g2] {
        vertices.extend(g.vertices().map(|(v, w)| (v.clone(), w)));
        edges.extend(g.edges().map(|(e, w)| (e.clone(), w)));
        pairs.extend(g.pairs().map(|(p, w)| (p.clone(), w)));
    }
    let least_pair = |g: &FuzzyIncidenceGraph, v: &VertexId| {
        g.pairs_at(v.as_str())
            .map(|(_, w)| w)
            .min()
            .unwrap_or(UnitWeight::ONE)
    };
    for (a, ea) in g1.vertices() {
        let ma = least_pair(g1, a);
        for (b, eb) in g2.vertices() {
            let mb = least_pair(g2, b);
            let cap = ea.meet(eb);
            let e = EdgeKey::new(a.clone(), b.clone()).expect("disjoint names");
            edges.insert(e.clone(), cap);
            pairs.insert(PairKey::new(a.clone(), e.clone()).expect("endpoint"), cap.meet(ma));
            pairs.insert(PairKey::new(b.clone(), e).expect("endpoint"), cap.meet(mb));
        }
    }
    Ok(FuzzyIncidenceGraph::from_parts_unchecked(vertices, edges, pairs))
}

/// Cartesian product: each factor's edges copied along every vertex of the
/// other factor.
pub fn cartesian(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
) -> Result<FuzzyIncidenceGraph> {
    let mut parts = ProductParts::new(g1, g2)?;
    parts.copy_second_factor_edges();
    parts.copy_first_factor_edges();
    Ok(parts.finish())
}

/// Tensor product: for edges `a₁a₂` and `b₁b₂`, both cross edges
/// `(a₁,b₁)(a₂,b₂)` and `(a₁,b₂)(a₂,b₁)` at `ρ₁ ∧ ρ₂`. Pairs are present only
/// when all four factor pairs are.
pub fn tensor(g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> Result<FuzzyIncidenceGraph> {
    let mut parts = ProductParts::new(g1, g2)?;
    for (e1, r1) in g1.edges() {
        let (a1, a2) = e1.endpoints();
        let pairs1 = g1.pair_weights_of_edge(e1);
        for (e2, r2) in g2.edges() {
            let (b1, b2) = e2.endpoints();
            let pairs2 = g2.pair_weights_of_edge(e2);
            let rho = r1.meet(r2);
            let straight = parts.edge((a1, b1), (a2, b2), rho);
            let crossed = parts.edge((a1, b2), (a2, b1), rho);
            if let (Some((ha1, ha2)), Some((hb1, hb2))) = (pairs1, pairs2) {
                parts.pair((a1, b1), &straight, ha1.meet(hb1));
                parts.pair((a2, b2), &straight, ha2.meet(hb2));
                parts.pair((a1, b2), &crossed, ha1.meet(hb2));
                parts.pair((a2, b1), &crossed, ha2.meet(hb1));
            }
        }
    }
    Ok(parts.finish())
}

/// Composition `g1[g2]`: copies of `g2` on every first coordinate, and for each
/// edge `a₁a₂` of `g1` an edge between every `(a₁, b₁)` and `(a₂, b₂)`.
pub fn compose(g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> Result<FuzzyIncidenceGraph> {
    let mut parts = ProductParts::new(g1, g2)?;
    parts.copy_second_factor_edges();
    let right: Vec<&VertexId> = g2.vertices().map(|(b, _)| b).collect();
    for (e, rho) in g1.edges() {
        let (a1, a2) = e.endpoints();
        let factor_pairs = g1.pair_weights_of_edge(e);
        for &b1 in &right {
            for &b2 in &right {
                let eps = parts.eps2(b1).meet(parts.eps2(b2));
                let key = parts.edge((a1, b1), (a2, b2), rho.meet(eps));
                if let Some((h1, h2)) = factor_pairs {
                    parts.pair((a1, b1), &key, h1.meet(eps));
                    parts.pair((a2, b2), &key, h2.meet(eps));
                }
            }
        }
    }
    Ok(parts.finish())
}

/// Every vertex sees a single pair weight (vacuous for 0 or 1 pairs).
pub fn has_uniform_pair_weights_per_vertex(g: &FuzzyIncidenceGraph) -> bool {
    g.vertices().all(|(v, _)| {
        let mut weights = g.pairs_at(v.as_str()).map(|(_, w)| w);
        match weights.next() {
            Some(first) => weights.all(|w| w == first),
            None => true,
        }
    })
}

/// The heaviest pair of `g1` weighs at most the lightest pair of `g2`. True
/// when either graph has no pairs.
pub fn max_pair_leq_min_pair(g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> bool {
    match (g1.pairs().map(|(_, w)| w).max(), g2.pairs().map(|(_, w)| w).min()) {
        (Some(max1), Some(min2)) => max1 <= min2,
        _ => true,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::{has_all_effective_pairs, is_cfig, is_sfig};
    use crate::graph::tests::{five_cycle, w};
    use crate::graph::FigBuilder;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    fn edge(u: &str, v: &str) -> EdgeKey {
        EdgeKey::new(vid(u), vid(v)).unwrap()
    }

    fn pair(x: &str, u: &str, v: &str) -> PairKey {
        PairKey::new(vid(x), edge(u, v)).unwrap()
    }

    fn single(name: &str, eps: &str) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        b.vertex(name, w(eps)).unwrap();
        b.build().unwrap()
    }

    /// `u(1)-v(1)` with ρ and both pairs equal to `weight`.
    fn k2(u: &str, v: &str, weight: &str) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        b.vertex(u, UnitWeight::ONE).unwrap();
        b.vertex(v, UnitWeight::ONE).unwrap();
        b.edge(u, v, w(weight)).unwrap();
        b.pair(u, u, v, w(weight)).unwrap();
        b.pair(v, u, v, w(weight)).unwrap();
        b.build().unwrap()
    }

    #[test]
    fn product_names_round_trip() {
        let p = ProductVertexId::new(vid("a"), vid("b")).unwrap();
        assert_eq!(p.to_string(), "a|b");
        assert_eq!(ProductVertexId::parse("a|b"), Some(p));
        assert_eq!(ProductVertexId::parse("a|b|c"), None);
        assert!(ProductVertexId::new(vid("a|b"), vid("c")).is_err());
        assert!(cartesian(&single("a|b", "1"), &single("c", "1")).is_err());
    }

    #[test]
    fn join_of_two_points() {
        let g = join(&single("a", "0.7"), &single("b", "0.4")).unwrap();
        assert_eq!(g.edge_weight(&edge("a", "b")), Some(w("0.4")));
        assert_eq!(g.pair_weight(&pair("a", "a", "b")), Some(w("0.4")));
        assert_eq!(g.pair_weight(&pair("b", "a", "b")), Some(w("0.4")));
        assert!(g.validate().is_empty());
    }

    #[test]
    fn join_cross_pair_uses_least_own_pair() {
        let mut b = FigBuilder::new();
        b.vertex("x", UnitWeight::ONE).unwrap();
        b.vertex("y", UnitWeight::ONE).unwrap();
        b.edge("x", "y", w("0.5")).unwrap();
        b.pair("x", "x", "y", w("0.5")).unwrap();
        b.pair("y", "x", "y", w("0.05")).unwrap();
        let g1 = b.build().unwrap();
        let g = join(&g1, &single("z", "1")).unwrap();
        assert_eq!(g.pair_weight(&pair("y", "y", "z")), Some(w("0.05")));
        assert_eq!(g.pair_weight(&pair("x", "x", "z")), Some(w("0.5")));
        assert_eq!(g.pair_weight(&pair("z", "y", "z")), Some(UnitWeight::ONE));
        assert_eq!(g.edge_count(), 1 + 2);
    }

    #[test]
    fn join_counts_and_clash() {
        let g1 = five_cycle();
        let g2 = k2("p", "q", "0.4");
        let g = join(&g1, &g2).unwrap();
        assert_eq!(g.vertex_count(), 7);
        assert_eq!(g.edge_count(), 5 + 1 + 5 * 2);
        assert!(g.validate().is_empty());
        assert_eq!(join(&g1, &five_cycle()), Err(FigError::VertexNameClash(vid("u"))));
    }

    #[test]
    fn cartesian_of_two_k2_is_a_four_cycle() {
        let g = cartesian(&k2("a", "b", "0.6"), &k2("u", "v", "0.4")).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.pair_count(), 8);
        assert_eq!(g.edge_weight(&edge("a|u", "b|u")), Some(w("0.6")));
        assert_eq!(g.edge_weight(&edge("a|v", "b|v")), Some(w("0.6")));
        assert_eq!(g.edge_weight(&edge("a|u", "a|v")), Some(w("0.4")));
        assert_eq!(g.pair_weight(&pair("b|v", "b|u", "b|v")), Some(w("0.4")));
        assert_eq!(g.pair_weight(&pair("a|u", "a|u", "b|u")), Some(w("0.6")));
        assert!(g.validate().is_empty());
        assert!(!is_cfig(&g));
        assert!(has_all_effective_pairs(&g));
    }

    #[test]
    fn cartesian_with_a_point_caps_vertices() {
        let g = cartesian(&five_cycle(), &single("p", "0.25")).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert!(g.vertices().all(|(_, e)| e == w("0.25")));
        assert_eq!(g.edge_weight(&edge("y|p", "u|p")), Some(w("0.25")));
        assert_eq!(g.pair_weight(&pair("u|p", "u|p", "v|p")), Some(w("0.1")));
        assert_eq!(g.pair_count(), 10);
    }

    #[test]
    fn cartesian_requires_both_factor_pairs() {
        let mut b = FigBuilder::new();
        b.vertex("a", UnitWeight::ONE).unwrap();
        b.vertex("b", UnitWeight::ONE).unwrap();
        b.edge("a", "b", w("0.5")).unwrap();
        b.pair("a", "a", "b", w("0.5")).unwrap();
        let g = cartesian(&b.build().unwrap(), &single("p", "1")).unwrap();
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.pair_count(), 0);
    }

    #[test]
    fn tensor_of_two_k2_is_two_disjoint_edges() {
        let g = tensor(&k2("a", "b", "0.5"), &k2("u", "v", "0.3")).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 2);
        for e in [edge("a|u", "b|v"), edge("a|v", "b|u")] {
            assert_eq!(g.edge_weight(&e), Some(w("0.3")));
            assert_eq!(g.pair_weights_of_edge(&e), Some((w("0.3"), w("0.3"))));
        }
        assert_eq!(g.components().len(), 2);
        assert!(g.validate().is_empty());
    }

    #[test]
    fn tensor_with_edgeless_factor_has_no_edges() {
        let g = tensor(&five_cycle(), &single("p", "1")).unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn composition_with_two_points() {
        let mut b = FigBuilder::new();
        b.vertex("u", UnitWeight::ONE).unwrap();
        b.vertex("v", UnitWeight::ONE).unwrap();
        let g = compose(&k2("a", "b", "0.5"), &b.build().unwrap()).unwrap();
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 4);
        for e in [edge("a|u", "b|u"), edge("a|v", "b|v"), edge("a|u", "b|v"), edge("a|v", "b|u")] {
            assert_eq!(g.edge_weight(&e), Some(w("0.5")));
            assert_eq!(g.pair_weights_of_edge(&e), Some((w("0.5"), w("0.5"))));
        }
        assert!(g.validate().is_empty());
    }

    #[test]
    fn composition_of_complete_graphs_is_complete() {
        let g = compose(&k2("a", "b", "1"), &k2("u", "v", "1")).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(is_cfig(&g));
        let g = compose(&five_cycle(), &single("p", "0.5")).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert_eq!(g.pair_weight(&pair("y|p", "y|p", "u|p")), Some(w("0.5")));
        assert_eq!(g.pair_weight(&pair("u|p", "u|p", "v|p")), Some(w("0.1")));
    }

    #[test]
    fn uniform_pairs_predicate() {
        assert!(!has_uniform_pair_weights_per_vertex(&five_cycle()));
        assert!(has_uniform_pair_weights_per_vertex(&single("a", "1")));
        let mut b = FigBuilder::new();
        b.vertex("c", UnitWeight::ONE).unwrap();
        for leaf in ["l1", "l2", "l3"] {
            b.vertex(leaf, UnitWeight::ONE).unwrap();
            b.edge("c", leaf, w("0.5")).unwrap();
            b.pair("c", "c", leaf, w("0.2")).unwrap();
            b.pair(leaf, "c", leaf, w("0.2")).unwrap();
        }
        let star = b.build().unwrap();
        assert!(has_uniform_pair_weights_per_vertex(&star));
        assert!(is_sfig(&star));
    }

    #[test]
    fn pair_dominance_predicate() {
        let graph_with = |weights: &[&str]| {
            let mut b = FigBuilder::new();
            for (i, weight) in weights.iter().enumerate() {
                let (u, v) = (format!("s{i}"), format!("t{i}"));
                b.vertex(&u, UnitWeight::ONE).unwrap();
                b.vertex(&v, UnitWeight::ONE).unwrap();
                b.edge(&u, &v, UnitWeight::ONE).unwrap();
                b.pair(&u, &u, &v, w(weight)).unwrap();
            }
            b.build().unwrap()
        };
        assert!(max_pair_leq_min_pair(&graph_with(&["0.2", "0.3"]), &graph_with(&["0.3", "0.9"])));
        assert!(!max_pair_leq_min_pair(&graph_with(&["0.4"]), &graph_with(&["0.3"])));
        assert!(max_pair_leq_min_pair(&single("a", "1"), &graph_with(&["0.3"])));
    }
}
