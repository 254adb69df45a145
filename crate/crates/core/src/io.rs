//! Line-oriented text format.
//!
//! ```text
//! # comment
//! vertex x 1
//! vertex y 0.5
//! edge x y 0.5
//! pair x x y 0.25
//! ```
//!
//! Names must be declared before use. Weights are decimals in `(0, 1]` with at
//! most six fractional digits; zero is rejected because only the support is
//! written down.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{EdgeKey, FigBuilder, FuzzyIncidenceGraph, VertexId};
use crate::weight::{UnitWeight, WeightParseError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("line {line}: syntax error: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: unknown reference to {name}")]
    UnknownReference { line: usize, name: String },
    #[error("line {line}: duplicate declaration of {what}")]
    DuplicateDeclaration { line: usize, what: String },
    #[error("line {line}: weight {literal} is outside (0, 1]")]
    WeightOutOfRange { line: usize, literal: String },
    #[error("line {line}: {message}")]
    InvariantViolation { line: usize, message: String },
}

impl ParseError {
    pub fn line(&self) -> usize {
        match self {
            ParseError::Syntax { line, .. }
            | ParseError::UnknownReference { line, .. }
            | ParseError::DuplicateDeclaration { line, .. }
            | ParseError::WeightOutOfRange { line, .. }
            | ParseError::InvariantViolation { line, .. } => *line,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Strict,
    Lenient,
}

/// Declared names and weights, for reference and inequality checks.
#[derive(Default)]
struct Declared {
    vertices: BTreeMap<String, UnitWeight>,
    edges: BTreeMap<(String, String), UnitWeight>,
    pairs: BTreeSet<(String, (String, String))>,
}

fn ordered(u: &str, v: &str) -> (String, String) {
    if u <= v {
        (u.to_string(), v.to_string())
    } else {
        (v.to_string(), u.to_string())
    }
}

fn weight(line: usize, literal: &str) -> Result<UnitWeight, ParseError> {
    match literal.parse::<UnitWeight>() {
        Ok(w) if w.is_zero() => Err(ParseError::WeightOutOfRange { line, literal: literal.into() }),
        Ok(w) => Ok(w),
        Err(WeightParseError::OutOfRange(_)) => {
            Err(ParseError::WeightOutOfRange { line, literal: literal.into() })
        }
        Err(e) => Err(ParseError::Syntax { line, message: format!("{literal:?}: {e}") }),
    }
}

fn name(line: usize, token: &str) -> Result<&str, ParseError> {
    if VertexId::is_valid_name(token) {
        Ok(token)
    } else {
        Err(ParseError::Syntax { line, message: format!("invalid name {token:?}") })
    }
}

impl Declared {
    fn vertex(&self, line: usize, v: &str) -> Result<UnitWeight, ParseError> {
        self.vertices
            .get(v)
            .copied()
            .ok_or_else(|| ParseError::UnknownReference { line, name: format!("vertex {v}") })
    }
}

fn read(text: &str, mode: Mode) -> Result<FigBuilder, ParseError> {
    let mut builder = FigBuilder::new();
    let mut seen = Declared::default();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&kind, args)) = tokens.split_first() else {
            continue;
        };
        let arity = |n: usize| {
            if args.len() == n {
                Ok(())
            } else {
                Err(ParseError::Syntax {
                    line,
                    message: format!("`{kind}` takes {n} fields, found {}", args.len()),
                })
            }
        };
        match kind {
            "vertex" => {
                arity(2)?;
                let v = name(line, args[0])?;
                let w = weight(line, args[1])?;
                if seen.vertices.insert(v.to_string(), w).is_some() {
                    return Err(ParseError::DuplicateDeclaration { line, what: format!("vertex {v}") });
                }
                builder.vertex(v, w).expect("valid name");
            }
            "edge" => {
                arity(3)?;
                let (u, v) = (name(line, args[0])?, name(line, args[1])?);
                let w = weight(line, args[2])?;
                let (eu, ev) = (seen.vertex(line, u)?, seen.vertex(line, v)?);
                if mode == Mode::Strict {
                    if u == v {
                        return Err(ParseError::InvariantViolation {
                            line,
                            message: format!("loop at {u}"),
                        });
                    }
                    let cap = eu.meet(ev);
                    if w > cap {
                        return Err(ParseError::InvariantViolation {
                            line,
                            message: format!("edge {u}~{v} weighs {w}, above its endpoint cap {cap}"),
                        });
                    }
                }
                if seen.edges.insert(ordered(u, v), w).is_some() {
                    return Err(ParseError::DuplicateDeclaration { line, what: format!("edge {u} {v}") });
                }
                builder.edge(u, v, w).expect("valid names");
            }
            "pair" => {
                arity(4)?;
                let (x, u, v) = (name(line, args[0])?, name(line, args[1])?, name(line, args[2])?);
                let w = weight(line, args[3])?;
                let ex = seen.vertex(line, x)?;
                let key = ordered(u, v);
                let Some(&rho) = seen.edges.get(&key) else {
                    return Err(ParseError::UnknownReference { line, name: format!("edge {u} {v}") });
                };
                if mode == Mode::Strict {
                    if x != u && x != v {
                        return Err(ParseError::InvariantViolation {
                            line,
                            message: format!("{x} is not an endpoint of {u}~{v}"),
                        });
                    }
                    let cap = ex.meet(rho);
                    if w > cap {
                        return Err(ParseError::InvariantViolation {
                            line,
                            message: format!("pair ({x}, {u}~{v}) weighs {w}, above its cap {cap}"),
                        });
                    }
                }
                if !seen.pairs.insert((x.to_string(), key)) {
                    return Err(ParseError::DuplicateDeclaration {
                        line,
                        what: format!("pair {x} {u} {v}"),
                    });
                }
                builder.pair(x, u, v, w).expect("valid names");
            }
            other => {
                return Err(ParseError::Syntax { line, message: format!("unknown record `{other}`") })
            }
        }
    }
    Ok(builder)
}

/// Parses a document into a graph, rejecting any record that breaks the
/// membership inequalities.
pub fn parse(text: &str) -> Result<FuzzyIncidenceGraph, ParseError> {
    let builder = read(text, Mode::Strict)?;
    Ok(builder
        .build()
        .expect("every inequality was checked record by record"))
}

/// Parses the records without checking the membership inequalities, loops or
/// endpoint membership, so the caller can report every violation at once.
pub fn parse_lenient(text: &str) -> Result<FigBuilder, ParseError> {
    read(text, Mode::Lenient)
}

/// Canonical text: vertices by name, edges by endpoint pair, pairs by edge then
/// vertex, weights in shortest exact decimal form.
pub fn serialize(g: &FuzzyIncidenceGraph) -> String {
    let mut out = String::new();
    for (v, w) in g.vertices() {
        writeln!(out, "vertex {v} {w}").expect("writing to a String");
    }
    for (e, w) in g.edges() {
        let (u, v) = e.endpoints();
        writeln!(out, "edge {u} {v} {w}").expect("writing to a String");
    }
    for (p, w) in g.pairs() {
        let (u, v) = p.edge().endpoints();
        writeln!(out, "pair {} {u} {v} {w}", p.vertex()).expect("writing to a String");
    }
    out
}

/// Renders an edge the way the format spells it.
pub fn edge_tokens(e: &EdgeKey) -> String {
    let (u, v) = e.endpoints();
    format!("{u} {v}")
}
