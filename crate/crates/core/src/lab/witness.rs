//! Fixed small counterexamples, kept as data so they can be printed and
//! re-checked.

use crate::graph::{FigBuilder, FuzzyIncidenceGraph};
use crate::weight::UnitWeight;

fn build(vertices: &[(&str, &str)], edges: &[(&str, &str, &str)], pairs: &[(&str, &str, &str, &str)]) -> FuzzyIncidenceGraph {
    let w = |s: &str| s.parse::<UnitWeight>().expect("literal weight");
    let mut b = FigBuilder::new();
    for &(v, x) in vertices {
        b.vertex(v, w(x)).expect("valid name");
    }
    for &(u, v, x) in edges {
        b.edge(u, v, w(x)).expect("valid names");
    }
    for &(x, u, v, y) in pairs {
        b.pair(x, u, v, w(y)).expect("valid names");
    }
    b.build().expect("witness respects its caps")
}

/// Two strong graphs whose join has a δ-pair. The path `x-y-u` is a tree, so
/// every pair is strong, but `y` is barely attached to `xy`; the join routes
/// around that pair through `z`, whose cross pairs all weigh 1.
pub fn witness_join_not_strong() -> (FuzzyIncidenceGraph, FuzzyIncidenceGraph) {
    let path = build(
        &[("x", "1"), ("y", "1"), ("u", "1")],
        &[("x", "y", "0.5"), ("y", "u", "0.5")],
        &[
            ("x", "x", "y", "0.5"),
            ("y", "x", "y", "0.05"),
            ("y", "y", "u", "0.5"),
            ("u", "y", "u", "0.5"),
        ],
    );
    (path, build(&[("z", "1")], &[], &[]))
}

/// Two strong single edges whose composition has a δ-pair. In the product the
/// light pair `(a|u, a|u~a|v)` has a heavier detour through the `b` copies.
pub fn witness_composition_not_strong() -> (FuzzyIncidenceGraph, FuzzyIncidenceGraph) {
    let outer = build(
        &[("a", "0.8"), ("b", "0.8")],
        &[("a", "b", "0.6")],
        &[("a", "a", "b", "0.4"), ("b", "a", "b", "0.4")],
    );
    let inner = build(
        &[("u", "0.6"), ("v", "1")],
        &[("u", "v", "0.4")],
        &[("u", "u", "v", "0.2"), ("v", "u", "v", "0.4")],
    );
    (outer, inner)
}
