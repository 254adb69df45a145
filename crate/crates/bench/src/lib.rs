//! Shared fixtures for the benchmarks.

use fig_core::lab::{generate, GenKind, GenSpec};
use fig_core::FuzzyIncidenceGraph;

/// A reproducible graph of the given class; panics if generation fails, which
/// for these sizes only happens if the generator itself is broken.
pub fn fixture(kind: GenKind, n: usize, density: f64, seed: u64) -> FuzzyIncidenceGraph {
    let mut spec = GenSpec::new(kind, n, seed);
    spec.edge_density = density;
    generate(&spec).expect("benchmark fixture")
}

/// Two strong factors with disjoint names, for the product benchmarks.
pub fn factor_pair(n: usize, seed: u64) -> (FuzzyIncidenceGraph, FuzzyIncidenceGraph) {
    let mut left = GenSpec::new(GenKind::Sfig, n, seed);
    left.prefix = "p".into();
    let mut right = GenSpec::new(GenKind::Sfig, n, seed + 1);
    right.prefix = "q".into();
    (generate(&left).expect("left factor"), generate(&right).expect("right factor"))
}
