//! Dense integer view of a graph for the search-heavy algorithms.
//!
//! Node ids `0..n` are vertices in name order, `n..n + m` are edges in key
//! order. Every stored pair becomes one undirected link between its vertex
//! node and its edge node, with capacity `η`.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use crate::graph::{EdgeKey, FuzzyIncidenceGraph, PairKey, VertexId};
use crate::weight::UnitWeight;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Link {
    pub node: usize,
    pub weight: u32,
    pub pair: usize,
}

#[derive(Clone, Debug)]
pub(crate) struct IndexedPair {
    pub vertex: usize,
    pub edge: usize,
    pub weight: u32,
}

pub(crate) struct IncidenceIndex<'g> {
    pub vertices: Vec<&'g VertexId>,
    pub edges: Vec<&'g EdgeKey>,
    pub pair_keys: Vec<&'g PairKey>,
    pub pairs: Vec<IndexedPair>,
    pub links: Vec<Vec<Link>>,
}

#[derive(PartialEq, Eq)]
struct Frontier {
    width: u32,
    node: usize,
}

impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        // widest first; lower node id breaks ties
        self.width
            .cmp(&other.width)
            .then_with(|| other.node.cmp(&self.node))
    }
}

impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<'g> IncidenceIndex<'g> {
    pub fn new(g: &'g FuzzyIncidenceGraph) -> Self {
        let vertices: Vec<&VertexId> = g.vertices().map(|(v, _)| v).collect();
        let edges: Vec<&EdgeKey> = g.edges().map(|(e, _)| e).collect();
        let n = vertices.len();
        let mut links = vec![Vec::new(); n + edges.len()];
        let mut pairs = Vec::with_capacity(g.pair_count());
        let mut pair_keys = Vec::with_capacity(g.pair_count());
        for (p, w) in g.pairs() {
            let vertex = vertices
                .binary_search(&p.vertex())
                .expect("pair vertex is stored");
            let edge = n + edges.binary_search(&p.edge()).expect("pair edge is stored");
            let id = pairs.len();
            let weight = w.millionths();
            links[vertex].push(Link { node: edge, weight, pair: id });
            links[edge].push(Link { node: vertex, weight, pair: id });
            pairs.push(IndexedPair { vertex, edge, weight });
            pair_keys.push(p);
        }
        IncidenceIndex { vertices, edges, pair_keys, pairs, links }
    }

    pub fn vertex_node(&self, v: &str) -> Option<usize> {
        self.vertices.binary_search_by(|x| x.as_str().cmp(v)).ok()
    }

    pub fn edge_node(&self, e: &EdgeKey) -> Option<usize> {
        self.edges
            .binary_search(&e)
            .ok()
            .map(|i| self.vertices.len() + i)
    }

    pub fn pair_index(&self, p: &PairKey) -> Option<usize> {
        self.pair_keys.binary_search(&p).ok()
    }

    /// Greatest bottleneck capacity from `source` to `target`, ignoring the
    /// link of `skip`. Zero when unreachable.
    pub fn widest(&self, source: usize, target: usize, skip: Option<usize>) -> UnitWeight {
        debug_assert_ne!(source, target);
        let mut best = vec![0u32; self.links.len()];
        let mut done = vec![false; self.links.len()];
        best[source] = u32::MAX;
        let mut heap = BinaryHeap::new();
        heap.push(Frontier { width: u32::MAX, node: source });
        while let Some(Frontier { width, node }) = heap.pop() {
            if done[node] {
                continue;
            }
            done[node] = true;
            if node == target {
                return UnitWeight::from_millionths(width).expect("pair weight");
            }
            for link in &self.links[node] {
                if Some(link.pair) == skip || done[link.node] {
                    continue;
                }
                let w = width.min(link.weight);
                if w > best[link.node] {
                    best[link.node] = w;
                    heap.push(Frontier { width: w, node: link.node });
                }
            }
        }
        UnitWeight::ZERO
    }

    /// `η′∞` of the pair with index `pair`.
    pub fn strength_without(&self, pair: usize) -> UnitWeight {
        let p = &self.pairs[pair];
        self.widest(p.vertex, p.edge, Some(pair))
    }
}
