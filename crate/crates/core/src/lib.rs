//! Fuzzy incidence graphs: exact-weight data model, max-min incidence
//! connectivity, the four graph operations, strong incidence domination and
//! a seeded harness that checks the known results on random instances.

pub mod connectivity;
pub mod domination;
pub mod error;
pub mod graph;
pub mod operations;
mod index;
pub mod io;
pub mod lab;
pub mod weight;

pub use error::{FigError, Result};
pub use graph::{
    EdgeKey, FigBuilder, FuzzyIncidenceGraph, PairKey, ValidationReport, VertexId, Violation,
};
pub use weight::{UnitWeight, WeightParseError, WeightSum};
