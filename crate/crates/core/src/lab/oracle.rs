//! Brute-force reference implementations, written without the search index
//! or bitmask solver so they can check those.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use crate::connectivity::IncidenceNode;
use crate::domination::{strong_neighborhoods, DominationSolution};
use crate::error::{FigError, Result};
use crate::graph::{FuzzyIncidenceGraph, VertexId};
use crate::weight::{UnitWeight, WeightSum};

pub const ORACLE_PATH_LIMIT: usize = 7;
pub const ORACLE_DOMINATION_LIMIT: usize = 10;

fn check_limit(g: &FuzzyIncidenceGraph, limit: usize, what: &'static str) -> Result<()> {
    if g.vertex_count() > limit {
        return Err(FigError::LimitExceeded { what, limit, actual: g.vertex_count() });
    }
    Ok(())
}

/// Maximum over every simple incidence path of its weakest pair, by listing
/// the paths one by one.
pub fn oracle_iconn(
    g: &FuzzyIncidenceGraph,
    source: &IncidenceNode,
    target: &IncidenceNode,
) -> Result<UnitWeight> {
    check_limit(g, ORACLE_PATH_LIMIT, "path oracle")?;
    let known = |node: &IncidenceNode| match node {
        IncidenceNode::Vertex(v) => g.contains_vertex(v.as_str()),
        IncidenceNode::Edge(e) => g.edge_weight(e).is_some(),
    };
    for node in [source, target] {
        if !known(node) {
            return Err(FigError::UnknownElement(node.to_string()));
        }
    }
    let mut adjacent: HashMap<IncidenceNode, Vec<(IncidenceNode, UnitWeight)>> = HashMap::new();
    for (p, eta) in g.pairs() {
        let v = IncidenceNode::Vertex(p.vertex().clone());
        let e = IncidenceNode::Edge(p.edge().clone());
        adjacent.entry(v.clone()).or_default().push((e.clone(), eta));
        adjacent.entry(e).or_default().push((v, eta));
    }
    let mut best = UnitWeight::ZERO;
    let mut visited = HashSet::from([source.clone()]);
    walk(&adjacent, source, target, UnitWeight::ONE, &mut visited, &mut best);
    Ok(best)
}

fn walk(
    adjacent: &HashMap<IncidenceNode, Vec<(IncidenceNode, UnitWeight)>>,
    at: &IncidenceNode,
    target: &IncidenceNode,
    strength: UnitWeight,
    visited: &mut HashSet<IncidenceNode>,
    best: &mut UnitWeight,
) {
    let Some(next) = adjacent.get(at) else {
        return;
    };
    for (node, eta) in next {
        if visited.contains(node) {
            continue;
        }
        let s = strength.meet(*eta);
        if node == target {
            *best = (*best).join(s);
            continue;
        }
        visited.insert(node.clone());
        walk(adjacent, node, target, s, visited, best);
        visited.remove(node);
    }
}

/// Minimum-weight dominating set by listing every subset, with the same
/// tie-break as the main solver: weight, then size, then sorted names.
pub fn oracle_gamma(g: &FuzzyIncidenceGraph) -> Result<DominationSolution> {
    check_limit(g, ORACLE_DOMINATION_LIMIT, "domination oracle")?;
    let neighbours = strong_neighborhoods(g);
    let mut weight: HashMap<&VertexId, UnitWeight> = HashMap::new();
    for (x, ys) in &neighbours {
        let least = g
            .pairs_at(x.as_str())
            .filter(|(p, _)| ys.contains(p.edge().other(x.as_str()).expect("endpoint")))
            .map(|(_, w)| w)
            .min()
            .unwrap_or(UnitWeight::ZERO);
        weight.insert(x, least);
    }
    let names: Vec<&VertexId> = neighbours.keys().collect();
    let mut best: Option<(WeightSum, Vec<&VertexId>)> = None;
    for code in 0..1u32 << names.len() {
        let chosen: Vec<&VertexId> = names
            .iter()
            .enumerate()
            .filter(|(i, _)| code & (1 << i) != 0)
            .map(|(_, v)| *v)
            .collect();
        let members: HashSet<&VertexId> = chosen.iter().copied().collect();
        let dominated = names.iter().all(|x| {
            members.contains(x) || neighbours[*x].iter().any(|y| members.contains(y))
        });
        if !dominated {
            continue;
        }
        let total: WeightSum = chosen.iter().map(|v| weight[v]).sum();
        let better = match &best {
            None => true,
            Some((w, set)) => (total, chosen.len(), &chosen) < (*w, set.len(), set),
        };
        if better {
            best = Some((total, chosen));
        }
    }
    let (total_weight, chosen) = best.expect("the full vertex set dominates");
    Ok(DominationSolution {
        set: chosen.iter().map(|v| (*v).clone()).collect::<BTreeSet<_>>(),
        per_vertex_weight: chosen.iter().map(|v| ((*v).clone(), weight[v])).collect::<BTreeMap<_, _>>(),
        total_weight,
        valid: true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::iconn;
    use crate::domination::gamma_exact;
    use crate::graph::tests::five_cycle;
    use crate::graph::EdgeKey;

    fn vid(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    #[test]
    fn five_cycle_path_oracle() {
        let g = five_cycle();
        let x = IncidenceNode::Vertex(vid("x"));
        let uv = IncidenceNode::Edge(EdgeKey::new(vid("u"), vid("v")).unwrap());
        let s = oracle_iconn(&g, &x, &uv).unwrap();
        assert_eq!(s.to_string(), "0.1");
        assert_eq!(s, iconn(&g, &x, &uv).unwrap());
    }

    #[test]
    fn five_cycle_domination_oracle() {
        let g = five_cycle();
        let o = oracle_gamma(&g).unwrap();
        assert_eq!(o.total_weight.to_string(), "0.3");
        assert_eq!(o, gamma_exact(&g).unwrap().solution);
    }
}
