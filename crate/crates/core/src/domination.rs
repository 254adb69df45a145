//! Strong incidence domination.
//!
//! `y` is a strong incidence neighbour of `x` when the edge `xy` has both
//! pairs stored and neither is a δ-pair. A vertex weighs the least pair weight
//! `η(x, xy)` over its strong neighbours `y`, or zero when it has none; a set
//! weighs the sum of its members.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::connectivity::{classify_all, is_cfig, is_sfig, PairClass};
use crate::error::{FigError, Result};
use crate::graph::{FuzzyIncidenceGraph, PairKey, VertexId};
use crate::operations::{cartesian, compose, join, tensor, ProductVertexId};
use crate::weight::{UnitWeight, WeightSum};

pub const DEFAULT_EXACT_CAP: usize = 16;
/// Subsets are tracked as `u64` masks; larger caps would not finish anyway.
pub const MAX_EXACT_CAP: usize = 40;

pub type StrongNeighborhoodMap = BTreeMap<VertexId, BTreeSet<VertexId>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DominationSolution {
    pub set: BTreeSet<VertexId>,
    pub per_vertex_weight: BTreeMap<VertexId, UnitWeight>,
    pub total_weight: WeightSum,
    pub valid: bool,
}

/// A minimum-weight dominating set together with the least size of any
/// dominating set (which need not be the size of the minimum-weight one).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExactDomination {
    pub solution: DominationSolution,
    pub min_cardinality: usize,
}

/// Strong neighbourhoods and vertex weights of one graph, computed once.
#[derive(Clone, Debug)]
pub struct StrongIncidence {
    neighborhoods: StrongNeighborhoodMap,
    weights: BTreeMap<VertexId, UnitWeight>,
}

impl StrongIncidence {
    pub fn new(g: &FuzzyIncidenceGraph) -> Self {
        let strong: BTreeSet<PairKey> = classify_all(g)
            .into_iter()
            .filter(|c| c.class.is_strong())
            .map(|c| c.pair)
            .collect();
        let mut neighborhoods: StrongNeighborhoodMap =
            g.vertices().map(|(v, _)| (v.clone(), BTreeSet::new())).collect();
        let mut weights: BTreeMap<VertexId, UnitWeight> =
            g.vertices().map(|(v, _)| (v.clone(), UnitWeight::ZERO)).collect();
        let mut least: BTreeMap<VertexId, UnitWeight> = BTreeMap::new();
        for e in g.edge_view() {
            let (u, v) = e.endpoints();
            let pu = PairKey::new(u.clone(), e.clone()).expect("endpoint");
            let pv = pu.partner();
            if !(strong.contains(&pu) && strong.contains(&pv)) {
                continue;
            }
            neighborhoods.get_mut(u).expect("vertex").insert(v.clone());
            neighborhoods.get_mut(v).expect("vertex").insert(u.clone());
            for p in [&pu, &pv] {
                let eta = g.pair_weight(p).expect("stored");
                let slot = least.entry(p.vertex().clone()).or_insert(eta);
                *slot = slot.meet(eta);
            }
        }
        weights.extend(least);
        StrongIncidence { neighborhoods, weights }
    }

    pub fn neighborhoods(&self) -> &StrongNeighborhoodMap {
        &self.neighborhoods
    }

    pub fn weight(&self, v: &str) -> Option<UnitWeight> {
        self.weights.get(v).copied()
    }

    pub fn weights(&self) -> &BTreeMap<VertexId, UnitWeight> {
        &self.weights
    }

    fn check_members<'s>(&self, d: impl IntoIterator<Item = &'s VertexId>) -> Result<()> {
        for v in d {
            if !self.weights.contains_key(v) {
                return Err(FigError::UnknownElement(format!("vertex {v}")));
            }
        }
        Ok(())
    }

    pub fn is_sids(&self, d: &BTreeSet<VertexId>) -> Result<bool> {
        self.check_members(d)?;
        Ok(self.neighborhoods.iter().all(|(x, nbrs)| {
            d.contains(x) || nbrs.iter().any(|y| d.contains(y))
        }))
    }

    pub fn solution(&self, d: &BTreeSet<VertexId>) -> Result<DominationSolution> {
        let valid = self.is_sids(d)?;
        let per_vertex_weight: BTreeMap<VertexId, UnitWeight> =
            d.iter().map(|v| (v.clone(), self.weights[v])).collect();
        let total_weight = per_vertex_weight.values().copied().sum();
        Ok(DominationSolution { set: d.clone(), per_vertex_weight, total_weight, valid })
    }

    fn dense(&self) -> Dense {
        let names: Vec<&VertexId> = self.weights.keys().collect();
        let bit = |v: &VertexId| 1u64 << names.binary_search(&v).expect("vertex");
        let closed = names
            .iter()
            .map(|v| self.neighborhoods[*v].iter().fold(bit(v), |m, y| m | bit(y)))
            .collect();
        let weights = names.iter().map(|v| self.weights[*v].millionths() as u64).collect();
        Dense { closed, weights }
    }

    fn set_of(&self, mask: u64) -> BTreeSet<VertexId> {
        self.weights
            .keys()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, v)| v.clone())
            .collect()
    }
}

/// Closed neighbourhood bitmasks and vertex weights in name order.
struct Dense {
    closed: Vec<u64>,
    weights: Vec<u64>,
}

impl Dense {
    fn covers_all(&self, mask: u64, all: u64) -> bool {
        let mut covered = 0;
        let mut rest = mask;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            covered |= self.closed[i];
            rest &= rest - 1;
        }
        covered == all
    }

    fn weight(&self, mask: u64) -> u64 {
        let mut total = 0;
        let mut rest = mask;
        while rest != 0 {
            total += self.weights[rest.trailing_zeros() as usize];
            rest &= rest - 1;
        }
        total
    }
}

pub fn strong_neighborhoods(g: &FuzzyIncidenceGraph) -> StrongNeighborhoodMap {
    StrongIncidence::new(g).neighborhoods
}

pub fn is_sids(g: &FuzzyIncidenceGraph, d: &BTreeSet<VertexId>) -> Result<bool> {
    StrongIncidence::new(g).is_sids(d)
}

pub fn sids_weight(g: &FuzzyIncidenceGraph, d: &BTreeSet<VertexId>) -> Result<DominationSolution> {
    StrongIncidence::new(g).solution(d)
}

pub fn gamma_exact(g: &FuzzyIncidenceGraph) -> Result<ExactDomination> {
    gamma_exact_with_cap(g, DEFAULT_EXACT_CAP)
}

pub fn gamma_exact_with_cap(g: &FuzzyIncidenceGraph, cap: usize) -> Result<ExactDomination> {
    let cap = cap.min(MAX_EXACT_CAP);
    if g.vertex_count() > cap {
        return Err(FigError::LimitExceeded {
            what: "exact domination",
            limit: cap,
            actual: g.vertex_count(),
        });
    }
    exact_over(&StrongIncidence::new(g))
}

/// Subset enumeration with isolated vertices fixed in. Ties on weight go to the
/// smaller set, then to the lexicographically smaller sorted name list.
fn exact_over(si: &StrongIncidence) -> Result<ExactDomination> {
    let dense = si.dense();
    let n = dense.closed.len();
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let forced = (0..n)
        .filter(|&i| dense.closed[i] == 1 << i)
        .fold(0u64, |m, i| m | 1 << i);
    let free: Vec<usize> = (0..n).filter(|&i| forced >> i & 1 == 0).collect();

    let mut best: Option<(u64, u32, u64)> = None;
    let mut min_cardinality = u32::MAX;
    for sub in 0..1u64 << free.len() {
        let mut mask = forced;
        for (j, &i) in free.iter().enumerate() {
            if sub >> j & 1 == 1 {
                mask |= 1 << i;
            }
        }
        if !dense.covers_all(mask, all) {
            continue;
        }
        let size = mask.count_ones();
        min_cardinality = min_cardinality.min(size);
        let weight = dense.weight(mask);
        let better = match best {
            None => true,
            Some((bw, bs, bm)) => {
                (weight, size) < (bw, bs) || ((weight, size) == (bw, bs) && lex_smaller(mask, bm))
            }
        };
        if better {
            best = Some((weight, size, mask));
        }
    }
    let (_, _, mask) = best.expect("the whole vertex set always dominates");
    Ok(ExactDomination {
        solution: si.solution(&si.set_of(mask))?,
        min_cardinality: min_cardinality as usize,
    })
}

/// For equal-size sets: the one holding the smallest differing vertex sorts first.
fn lex_smaller(a: u64, b: u64) -> bool {
    let diff = a ^ b;
    diff != 0 && a & (diff & diff.wrapping_neg()) != 0
}

/// Greedy cover: isolated vertices first, then repeatedly the vertex with the
/// least weight per newly dominated vertex (`w / (1 + new)`), lowest name on ties.
pub fn gamma_greedy(g: &FuzzyIncidenceGraph) -> DominationSolution {
    let si = StrongIncidence::new(g);
    let names: Vec<&VertexId> = si.weights.keys().collect();
    let mut chosen: BTreeSet<VertexId> = BTreeSet::new();
    let mut uncovered: BTreeSet<&VertexId> = names.iter().copied().collect();
    for (v, nbrs) in &si.neighborhoods {
        if nbrs.is_empty() {
            chosen.insert(v.clone());
            uncovered.remove(v);
        }
    }
    while !uncovered.is_empty() {
        let mut pick: Option<(&VertexId, u64, u64)> = None;
        for &v in &names {
            if chosen.contains(v) {
                continue;
            }
            let gain = std::iter::once(v)
                .chain(&si.neighborhoods[v])
                .filter(|y| uncovered.contains(y))
                .count() as u64;
            if gain == 0 {
                continue;
            }
            let w = si.weights[v].millionths() as u64;
            let better = match pick {
                None => true,
                Some((_, bw, bg)) => w * (1 + bg) < bw * (1 + gain),
            };
            if better {
                pick = Some((v, w, gain));
            }
        }
        let (v, _, _) = pick.expect("an uncovered vertex can always cover itself");
        uncovered.remove(v);
        for y in &si.neighborhoods[v] {
            uncovered.remove(y);
        }
        chosen.insert(v.clone());
    }
    si.solution(&chosen).expect("members come from the graph")
}

/// Candidate dominating sets prescribed by a product bound, each checked in
/// the product, and the least candidate weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProductBound {
    pub candidates: Vec<DominationSolution>,
    pub bound: WeightSum,
}

impl ProductBound {
    pub fn all_valid(&self) -> bool {
        self.candidates.iter().all(|c| c.valid)
    }
}

fn require(condition: bool, hypothesis: &str) -> Result<()> {
    if condition {
        Ok(())
    } else {
        Err(FigError::HypothesisViolated(hypothesis.to_string()))
    }
}

/// `min{W(D₁), W(D₂), min W({a, b})}` with every weight taken in the join.
pub fn bound_join(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    d1: &BTreeSet<VertexId>,
    d2: &BTreeSet<VertexId>,
) -> Result<WeightSum> {
    let joined = join(g1, g2)?;
    if !is_sfig(&joined) {
        return Err(FigError::NotStrong);
    }
    let si = StrongIncidence::new(&joined);
    let mut bound = si.solution(d1)?.total_weight.min(si.solution(d2)?.total_weight);
    for (a, _) in g1.vertices() {
        for (b, _) in g2.vertices() {
            let pair_weight = WeightSum::from(si.weights[a]) + si.weights[b];
            bound = bound.min(pair_weight);
        }
    }
    Ok(bound)
}

/// Minimum dominating sets of each factor on its own, but with every vertex
/// weighed as it is in the join. A factor vertex usually gets lighter in the
/// join, because its cross pairs count toward its least strong pair.
pub fn join_side_dominators(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    cap: usize,
) -> Result<(ExactDomination, ExactDomination)> {
    let joined = StrongIncidence::new(&join(g1, g2)?);
    let side = |g: &FuzzyIncidenceGraph| {
        let cap = cap.min(MAX_EXACT_CAP);
        if g.vertex_count() > cap {
            return Err(FigError::LimitExceeded {
                what: "exact domination",
                limit: cap,
                actual: g.vertex_count(),
            });
        }
        let mut si = StrongIncidence::new(g);
        for (v, w) in si.weights.iter_mut() {
            *w = joined.weights[v];
        }
        exact_over(&si)
    };
    Ok((side(g1)?, side(g2)?))
}

fn product_set<'a>(
    left: impl IntoIterator<Item = &'a VertexId>,
    right: impl IntoIterator<Item = &'a VertexId> + Clone,
) -> BTreeSet<VertexId> {
    let mut out = BTreeSet::new();
    for a in left {
        for b in right.clone() {
            out.insert(ProductVertexId { left: a.clone(), right: b.clone() }.to_vertex_id());
        }
    }
    out
}

fn side_candidates(
    product: &FuzzyIncidenceGraph,
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    d1: &BTreeSet<VertexId>,
    d2: &BTreeSet<VertexId>,
) -> Result<ProductBound> {
    let v1: Vec<&VertexId> = g1.vertices().map(|(v, _)| v).collect();
    let v2: Vec<&VertexId> = g2.vertices().map(|(v, _)| v).collect();
    let si = StrongIncidence::new(product);
    let candidates = vec![
        si.solution(&product_set(d1, v2.iter().copied()))?,
        si.solution(&product_set(v1.iter().copied(), d2))?,
    ];
    let bound = candidates.iter().map(|c| c.total_weight).min().expect("two candidates");
    Ok(ProductBound { candidates, bound })
}

/// Candidates `D₁ × V₂` and `V₁ × D₂` in the Cartesian product of two strong graphs.
pub fn bound_cartesian(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    d1: &BTreeSet<VertexId>,
    d2: &BTreeSet<VertexId>,
) -> Result<ProductBound> {
    require(is_sfig(g1), "first factor is strong")?;
    require(is_sfig(g2), "second factor is strong")?;
    side_candidates(&cartesian(g1, g2)?, g1, g2, d1, d2)
}

fn has_isolated_vertex(g: &FuzzyIncidenceGraph) -> bool {
    strong_neighborhoods(g).values().any(BTreeSet::is_empty)
}

/// Candidates `D₁ × V₂` and `V₁ × D₂` in the tensor product of two strong
/// graphs without isolated vertices.
pub fn bound_tensor(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    d1: &BTreeSet<VertexId>,
    d2: &BTreeSet<VertexId>,
) -> Result<ProductBound> {
    require(is_sfig(g1), "first factor is strong")?;
    require(is_sfig(g2), "second factor is strong")?;
    require(!has_isolated_vertex(g1), "first factor has no isolated vertex")?;
    require(!has_isolated_vertex(g2), "second factor has no isolated vertex")?;
    side_candidates(&tensor(g1, g2)?, g1, g2, d1, d2)
}

/// Candidate `D₁ × D₂` in a strong composition.
pub fn bound_composition(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    d1: &BTreeSet<VertexId>,
    d2: &BTreeSet<VertexId>,
) -> Result<ProductBound> {
    let product = compose(g1, g2)?;
    require(is_sfig(&product), "composition is strong")?;
    let candidate = sids_weight(&product, &product_set(d1, d2))?;
    Ok(ProductBound { bound: candidate.total_weight, candidates: vec![candidate] })
}

/// Closed form for the Cartesian product of two complete graphs on `m` and
/// `n` vertices against the exact solver.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompleteProductCheck {
    pub expected_gamma: WeightSum,
    pub expected_cardinality: usize,
    pub actual_gamma: WeightSum,
    pub actual_cardinality: usize,
}

impl CompleteProductCheck {
    pub fn holds(&self) -> bool {
        self.expected_gamma == self.actual_gamma
            && self.expected_cardinality == self.actual_cardinality
    }
}

pub fn prop27_check(g1: &FuzzyIncidenceGraph, g2: &FuzzyIncidenceGraph) -> Result<CompleteProductCheck> {
    prop27_check_with_cap(g1, g2, DEFAULT_EXACT_CAP)
}

pub fn prop27_check_with_cap(
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
    cap: usize,
) -> Result<CompleteProductCheck> {
    if !is_cfig(g1) || !is_cfig(g2) {
        return Err(FigError::NotComplete);
    }
    let rows = g1.vertex_count().min(g2.vertex_count());
    let least = g1
        .vertices()
        .chain(g2.vertices())
        .map(|(_, w)| w)
        .min()
        .expect("graphs are non-empty");
    let exact = gamma_exact_with_cap(&cartesian(g1, g2)?, cap)?;
    Ok(CompleteProductCheck {
        expected_gamma: WeightSum::times(least, rows),
        expected_cardinality: rows,
        actual_gamma: exact.solution.total_weight,
        actual_cardinality: exact.min_cardinality,
    })
}

/// Pairs of a graph by class, for reporting.
pub fn delta_pairs(g: &FuzzyIncidenceGraph) -> Vec<PairKey> {
    classify_all(g)
        .into_iter()
        .filter(|c| c.class == PairClass::Delta)
        .map(|c| c.pair)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::{five_cycle, w};
    use crate::graph::FigBuilder;

    fn set(names: &[&str]) -> BTreeSet<VertexId> {
        names.iter().map(|n| VertexId::new(*n).unwrap()).collect()
    }

    fn complete(names: &[&str], weight: &str) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        for v in names {
            b.vertex(v, w(weight)).unwrap();
        }
        for (i, u) in names.iter().enumerate() {
            for v in &names[i + 1..] {
                b.edge(u, v, w(weight)).unwrap();
                b.pair(u, u, v, w(weight)).unwrap();
                b.pair(v, u, v, w(weight)).unwrap();
            }
        }
        b.build().unwrap()
    }

    #[test]
    fn five_cycle_neighbourhoods_follow_the_cycle() {
        let n = strong_neighborhoods(&five_cycle());
        assert_eq!(n[&VertexId::new("x").unwrap()], set(&["y", "w"]));
        assert_eq!(n[&VertexId::new("u").unwrap()], set(&["y", "v"]));
        for (x, ys) in &n {
            for y in ys {
                assert!(n[y].contains(x));
            }
            assert!(!ys.contains(x));
        }
    }

    #[test]
    fn delta_side_removes_the_edge() {
        let mut b = FigBuilder::new();
        for v in ["a", "b", "c"] {
            b.vertex(v, UnitWeight::ONE).unwrap();
        }
        for (u, v) in [("a", "b"), ("b", "c"), ("a", "c")] {
            b.edge(u, v, w("0.5")).unwrap();
            b.pair(u, u, v, w("0.5")).unwrap();
            b.pair(v, u, v, w("0.5")).unwrap();
        }
        b.pair("a", "a", "b", w("0.2")).unwrap();
        let g = b.build().unwrap();
        assert_eq!(delta_pairs(&g).len(), 1);
        let n = strong_neighborhoods(&g);
        assert_eq!(n[&VertexId::new("a").unwrap()], set(&["c"]));
        assert_eq!(n[&VertexId::new("b").unwrap()], set(&["c"]));
    }

    #[test]
    fn five_cycle_sets() {
        let g = five_cycle();
        assert!(is_sids(&g, &set(&["u", "w"])).unwrap());
        assert!(!is_sids(&g, &set(&["u", "v"])).unwrap());
        assert!(is_sids(&g, &set(&["x", "y", "u", "v", "w"])).unwrap());
        assert!(is_sids(&g, &set(&["q"])).is_err());
        let s = sids_weight(&g, &set(&["u", "w"])).unwrap();
        assert_eq!(s.total_weight.to_string(), "0.3");
        assert_eq!(s.per_vertex_weight[&VertexId::new("u").unwrap()], w("0.1"));
        assert_eq!(s.per_vertex_weight[&VertexId::new("w").unwrap()], w("0.2"));
        assert_eq!(sids_weight(&g, &set(&["x", "u"])).unwrap().total_weight.to_string(), "0.4");
        let empty = sids_weight(&g, &BTreeSet::new()).unwrap();
        assert_eq!(empty.total_weight, WeightSum::ZERO);
        assert!(!empty.valid);
    }

    #[test]
    fn five_cycle_exact() {
        let exact = gamma_exact(&five_cycle()).unwrap();
        assert_eq!(exact.solution.set, set(&["u", "w"]));
        assert_eq!(exact.solution.total_weight.to_string(), "0.3");
        assert!(exact.solution.valid);
        assert_eq!(exact.min_cardinality, 2);
    }

    #[test]
    fn five_cycle_greedy_trace() {
        let greedy = gamma_greedy(&five_cycle());
        assert_eq!(greedy.set, set(&["u", "v", "w"]));
        assert_eq!(greedy.total_weight.to_string(), "0.4");
        assert!(greedy.valid);
    }

    #[test]
    fn isolated_vertices_weigh_nothing() {
        let mut b = FigBuilder::new();
        b.vertex("x", UnitWeight::ONE).unwrap();
        let g = b.build().unwrap();
        let exact = gamma_exact(&g).unwrap();
        assert_eq!(exact.solution.set, set(&["x"]));
        assert_eq!(exact.solution.total_weight, WeightSum::ZERO);
        let mut b = FigBuilder::new();
        for v in ["p", "q", "r"] {
            b.vertex(v, w("0.5")).unwrap();
        }
        assert_eq!(gamma_greedy(&b.build().unwrap()).set, set(&["p", "q", "r"]));
    }

    #[test]
    fn complete_triangle() {
        let exact = gamma_exact(&complete(&["a", "b", "c"], "1")).unwrap();
        assert_eq!(exact.solution.total_weight.to_string(), "1");
        assert_eq!(exact.solution.set, set(&["a"]));
        assert_eq!(exact.min_cardinality, 1);
    }

    #[test]
    fn exact_cap_is_enforced() {
        let names: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let g = complete(&refs, "1");
        assert!(matches!(
            gamma_exact_with_cap(&g, 4),
            Err(FigError::LimitExceeded { limit: 4, actual: 5, .. })
        ));
    }

    #[test]
    fn lexicographic_tie_break() {
        assert!(lex_smaller(0b011, 0b101));
        assert!(!lex_smaller(0b101, 0b011));
        assert!(!lex_smaller(0b1, 0b1));
    }

    #[test]
    fn join_of_two_points_bound() {
        let mut b = FigBuilder::new();
        b.vertex("a", UnitWeight::ONE).unwrap();
        let g1 = b.build().unwrap();
        let mut b = FigBuilder::new();
        b.vertex("b", UnitWeight::ONE).unwrap();
        let g2 = b.build().unwrap();
        let bound = bound_join(&g1, &g2, &set(&["a"]), &set(&["b"])).unwrap();
        let exact = gamma_exact(&join(&g1, &g2).unwrap()).unwrap();
        assert_eq!(bound, exact.solution.total_weight);
        assert_eq!(bound.to_string(), "1");
    }

    #[test]
    fn join_sides_are_weighed_in_the_join() {
        let mut b = FigBuilder::new();
        b.vertex("p0", w("0.05")).unwrap();
        b.vertex("p1", w("0.05")).unwrap();
        let points = b.build().unwrap();
        let mut b = FigBuilder::new();
        for (v, x) in [("q0", "0.8"), ("q1", "0.6"), ("q2", "0.8")] {
            b.vertex(v, w(x)).unwrap();
        }
        for leaf in ["q0", "q1"] {
            b.edge(leaf, "q2", w("0.6")).unwrap();
            b.pair(leaf, leaf, "q2", w("0.2")).unwrap();
            b.pair("q2", leaf, "q2", w("0.6")).unwrap();
        }
        let star = b.build().unwrap();

        // On its own the star prefers its two leaves; in the join every star
        // vertex weighs 0.05 and the centre alone is cheaper.
        assert_eq!(gamma_exact(&star).unwrap().solution.set, set(&["q0", "q1"]));
        let (d1, d2) = join_side_dominators(&points, &star, DEFAULT_EXACT_CAP).unwrap();
        assert_eq!(d2.solution.set, set(&["q2"]));
        assert_eq!(d2.solution.total_weight.to_string(), "0.05");

        assert_eq!(d1.solution.set, set(&["p0", "p1"]));
        let exact = gamma_exact(&join(&points, &star).unwrap()).unwrap();
        assert_eq!(exact.solution.total_weight.to_string(), "0.05");
        let own = gamma_exact(&star).unwrap().solution.set;
        let stale = bound_join(&points, &star, &d1.solution.set, &own).unwrap();
        assert_eq!(stale.to_string(), "0.1");
        let bound = bound_join(&points, &star, &d1.solution.set, &d2.solution.set).unwrap();
        assert_eq!(bound, exact.solution.total_weight);
    }

    #[test]
    fn cartesian_bound_on_small_graphs() {
        let g1 = complete(&["a", "b"], "0.6");
        let g2 = complete(&["u", "v", "t"], "0.4");
        let d1 = gamma_exact(&g1).unwrap().solution.set;
        let d2 = gamma_exact(&g2).unwrap().solution.set;
        let bound = bound_cartesian(&g1, &g2, &d1, &d2).unwrap();
        assert!(bound.all_valid());
        let exact = gamma_exact(&cartesian(&g1, &g2).unwrap()).unwrap();
        assert!(bound.bound >= exact.solution.total_weight);
    }

    #[test]
    fn tensor_bound_rejects_isolated_vertices() {
        let g1 = complete(&["a", "b"], "1");
        let mut b = FigBuilder::new();
        b.vertex("u", UnitWeight::ONE).unwrap();
        let g2 = b.build().unwrap();
        assert!(matches!(
            bound_tensor(&g1, &g2, &set(&["a"]), &set(&["u"])),
            Err(FigError::HypothesisViolated(_))
        ));
    }

    #[test]
    fn complete_products() {
        let g1 = complete(&["a", "b"], "0.2");
        let g2 = complete(&["u", "v", "t"], "0.7");
        let check = prop27_check(&g1, &g2).unwrap();
        assert_eq!(check.expected_gamma.to_string(), "0.4");
        assert_eq!(check.expected_cardinality, 2);
        assert!(check.holds(), "{check:?}");
        let unit = prop27_check(&complete(&["a", "b"], "1"), &complete(&["u", "v"], "1")).unwrap();
        assert_eq!(unit.expected_gamma.to_string(), "2");
        assert!(unit.holds(), "{unit:?}");
        assert_eq!(prop27_check(&five_cycle(), &g1), Err(FigError::NotComplete));
    }
}
