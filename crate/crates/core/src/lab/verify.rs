//! Seeded checking of the known results on random instances.
//!
//! Every trial draws its instances from the hypothesis class of the result
//! under test, skips them if the hypothesis still fails, and otherwise checks
//! the conclusion. Trial `t` uses stream `t` of a ChaCha generator keyed by the
//! seed and the result id, so reports do not depend on scheduling.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::connectivity::{
    classify_all, classify_pair, has_all_effective_pairs, is_cfig, is_effective_pair, is_sfig,
    sfig_via_cycles_with_limit, PairClass, DEFAULT_CYCLE_LIMIT,
};
use crate::domination::{
    bound_cartesian, bound_composition, bound_join, bound_tensor, gamma_exact_with_cap,
    join_side_dominators, prop27_check_with_cap, strong_neighborhoods, ExactDomination, DEFAULT_EXACT_CAP,
};
use crate::error::{FigError, Result};
use crate::graph::{EdgeKey, FuzzyIncidenceGraph, PairKey, VertexId};
use crate::io::serialize;
use crate::lab::generate::{default_grid, generate_with_rng, GenKind, GenSpec};
use crate::operations::{
    cartesian, compose, has_uniform_pair_weights_per_vertex, join, max_pair_leq_min_pair, tensor,
    ProductVertexId,
};
use crate::weight::UnitWeight;

pub const THEOREM_IDS: [&str; 23] = [
    "T4", "P8", "P9", "T10", "R11", "T13", "C14", "C15", "T19", "R20", "P21", "T22", "P23/C24",
    "P25/C26", "P27", "T28", "T30", "R31", "T33", "T34", "T38", "T39/C40", "P41",
];

/// Canonical id for `id`, matching case-insensitively and accepting either half
/// of a combined id such as `P23/C24`.
pub fn resolve_theorem(id: &str) -> Result<&'static str> {
    let wanted = id.trim().to_ascii_uppercase();
    THEOREM_IDS
        .into_iter()
        .find(|canon| *canon == wanted || canon.split('/').any(|part| part == wanted))
        .ok_or_else(|| FigError::UnknownTheorem(id.to_string()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyConfig {
    pub trials: usize,
    pub seed: u64,
    /// Overrides the per-result vertex bound (per factor for two-graph results).
    pub max_vertices: Option<usize>,
    pub exact_cap: usize,
}

impl VerifyConfig {
    pub fn new(trials: usize, seed: u64) -> Self {
        VerifyConfig { trials, seed, max_vertices: None, exact_cap: DEFAULT_EXACT_CAP }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessDocument {
    pub role: String,
    pub document: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremViolation {
    pub trial: usize,
    pub detail: String,
    pub instances: Vec<WitnessDocument>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReportStatus {
    Pass,
    Fail,
    /// No trial satisfied the hypothesis.
    Vacuous,
}

impl fmt::Display for ReportStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ReportStatus::Pass => "pass",
            ReportStatus::Fail => "fail",
            ReportStatus::Vacuous => "vacuous",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoremReport {
    pub id: String,
    pub trials: usize,
    pub hypothesis_held: usize,
    /// Bound results only: trials where the bound was not attained.
    pub strict_inequalities: usize,
    pub violations: Vec<TheoremViolation>,
    pub status: ReportStatus,
    /// Wall-clock time; left out of serialized reports so they stay reproducible.
    #[serde(skip)]
    pub elapsed: Duration,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.status == ReportStatus::Pass
    }

    pub fn summary_line(&self) -> String {
        format!(
            "{} trials={} held={} violations={} strict={} {}",
            self.id,
            self.trials,
            self.hypothesis_held,
            self.violations.len(),
            self.strict_inequalities,
            self.status
        )
    }
}

enum Outcome {
    Skipped,
    Held { strict: bool },
    Violated { detail: String, instances: Vec<(&'static str, FuzzyIncidenceGraph)> },
}

fn held() -> Outcome {
    Outcome::Held { strict: false }
}

fn violated(detail: impl Into<String>, instances: &[(&'static str, &FuzzyIncidenceGraph)]) -> Outcome {
    Outcome::Violated {
        detail: detail.into(),
        instances: instances.iter().map(|(r, g)| (*r, (*g).clone())).collect(),
    }
}

/// FNV-1a, so every result gets its own family of streams from one seed.
fn salt(id: &str) -> u64 {
    id.bytes()
        .fold(0xcbf2_9ce4_8422_2325, |h, b| (h ^ b as u64).wrapping_mul(0x0100_0000_01b3))
}

pub fn verify(id: &str, config: &VerifyConfig) -> Result<TheoremReport> {
    let id = resolve_theorem(id)?;
    if config.trials == 0 {
        return Err(FigError::InvalidSpec("at least one trial is required".into()));
    }
    let start = Instant::now();
    let key = config.seed ^ salt(id);
    let outcomes: Vec<Outcome> = (0..config.trials)
        .into_par_iter()
        .map(|trial| {
            let mut rng = ChaCha8Rng::seed_from_u64(key);
            rng.set_stream(trial as u64);
            Trial { rng, config }.run(id)
        })
        .collect::<Result<_>>()?;

    let mut hypothesis_held = 0;
    let mut strict_inequalities = 0;
    let mut violations = Vec::new();
    for (trial, outcome) in outcomes.into_iter().enumerate() {
        match outcome {
            Outcome::Skipped => {}
            Outcome::Held { strict } => {
                hypothesis_held += 1;
                strict_inequalities += usize::from(strict);
            }
            Outcome::Violated { detail, instances } => {
                hypothesis_held += 1;
                violations.push(TheoremViolation {
                    trial,
                    detail,
                    instances: instances
                        .into_iter()
                        .map(|(role, g)| WitnessDocument { role: role.into(), document: serialize(&g) })
                        .collect(),
                });
            }
        }
    }
    let status = if !violations.is_empty() {
        ReportStatus::Fail
    } else if hypothesis_held == 0 {
        ReportStatus::Vacuous
    } else {
        ReportStatus::Pass
    };
    Ok(TheoremReport {
        id: id.to_string(),
        trials: config.trials,
        hypothesis_held,
        strict_inequalities,
        violations,
        status,
        elapsed: start.elapsed(),
    })
}

pub fn verify_all(config: &VerifyConfig) -> Result<Vec<TheoremReport>> {
    THEOREM_IDS.iter().map(|id| verify(id, config)).collect()
}

fn coarse_grid() -> Vec<UnitWeight> {
    (1..=5)
        .map(|k| UnitWeight::from_millionths(k * 200_000).expect("within range"))
        .collect()
}

struct Trial<'c> {
    rng: ChaCha8Rng,
    config: &'c VerifyConfig,
}

impl Trial<'_> {
    fn bound(&self, default: usize) -> usize {
        self.config.max_vertices.unwrap_or(default).max(1)
    }

    fn size(&mut self, lo: usize, default_hi: usize) -> usize {
        let hi = self.bound(default_hi).max(lo);
        self.rng.gen_range(lo..=hi)
    }

    /// Half the trials use a five-value grid, where ties are frequent.
    fn grid(&mut self) -> Vec<UnitWeight> {
        if self.rng.gen_bool(0.5) {
            coarse_grid()
        } else {
            default_grid()
        }
    }

    fn graph(&mut self, kind: GenKind, n: usize, prefix: &str) -> Result<FuzzyIncidenceGraph> {
        let density = self.rng.gen_range(0.2..=0.9);
        let grid = self.grid();
        self.graph_on(kind, n, prefix, density, grid)
    }

    fn graph_on(
        &mut self,
        kind: GenKind,
        n: usize,
        prefix: &str,
        edge_density: f64,
        weight_grid: Vec<UnitWeight>,
    ) -> Result<FuzzyIncidenceGraph> {
        let spec = GenSpec { kind, n, edge_density, weight_grid, seed: 0, prefix: prefix.into() };
        generate_with_rng(&spec, &mut self.rng)
    }

    /// Two graphs with disjoint names, `p0…` and `q0…`.
    fn two(&mut self, kind: GenKind, lo: usize, hi: usize) -> Result<(FuzzyIncidenceGraph, FuzzyIncidenceGraph)> {
        let (n1, n2) = (self.size(lo, hi), self.size(lo, hi));
        Ok((self.graph(kind, n1, "p")?, self.graph(kind, n2, "q")?))
    }

    fn exact(&self, g: &FuzzyIncidenceGraph) -> Result<Option<ExactDomination>> {
        match gamma_exact_with_cap(g, self.config.exact_cap) {
            Ok(x) => Ok(Some(x)),
            Err(FigError::LimitExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    fn run(mut self, id: &str) -> Result<Outcome> {
        match id {
            "T4" => self.cycles_characterise_strength(),
            "P8" => self.join_inherits_weak_pairs(),
            "P9" => self.uniform_pairs_are_strong(),
            "T10" => self.uniform_join_is_strong(),
            "R11" => self.strong_join_without_uniformity(),
            "T13" => self.join_domination_weight(false),
            "C14" => self.join_domination_size(),
            "C15" => self.join_domination_weight(true),
            "T19" => self.product_stays_strong(cartesian),
            "R20" => self.cartesian_never_complete(),
            "P21" => self.product_stays_effective(cartesian),
            "T22" => self.effective_pairs_are_strong(),
            "P23/C24" => self.heavy_factor_edges(),
            "P25/C26" => self.effective_factor_edges(),
            "P27" => self.complete_cartesian_domination(),
            "T28" => self.side_bound(false),
            "T30" => self.product_stays_effective(tensor),
            "R31" => self.tensor_of_complete(),
            "T33" => self.product_stays_strong(tensor),
            "T34" => self.side_bound(true),
            "T38" => self.dominated_composition_is_strong(),
            "T39/C40" => self.composition_bound(),
            "P41" => self.complete_composition(),
            other => Err(FigError::UnknownTheorem(other.to_string())),
        }
    }

    fn cycles_characterise_strength(&mut self) -> Result<Outcome> {
        let n = self.size(1, 8).min(DEFAULT_CYCLE_LIMIT);
        let g = self.graph(GenKind::Random, n, "v")?;
        let by_pairs = is_sfig(&g);
        let by_cycles = sfig_via_cycles_with_limit(&g, DEFAULT_CYCLE_LIMIT)?;
        Ok(if by_pairs == by_cycles {
            held()
        } else {
            violated(format!("pair classes say {by_pairs}, cycles say {by_cycles}"), &[("graph", &g)])
        })
    }

    /// Dense factors, since a δ-pair needs a cycle.
    fn join_inherits_weak_pairs(&mut self) -> Result<Outcome> {
        let (n1, n2) = (self.size(1, 5), self.size(1, 5));
        let (d1, d2) = (self.rng.gen_range(0.6..=1.0), self.rng.gen_range(0.6..=1.0));
        let (grid1, grid2) = (self.grid(), self.grid());
        let g1 = self.graph_on(GenKind::Random, n1, "p", d1, grid1)?;
        let g2 = self.graph_on(GenKind::Random, n2, "q", d2, grid2)?;
        if is_sfig(&g1) && is_sfig(&g2) {
            return Ok(Outcome::Skipped);
        }
        let j = join(&g1, &g2)?;
        Ok(if is_sfig(&j) {
            violated("a factor has a δ-pair but the join has none", &[("g1", &g1), ("g2", &g2)])
        } else {
            held()
        })
    }

    fn uniform_pairs_are_strong(&mut self) -> Result<Outcome> {
        let n = self.size(1, 8);
        let g = self.graph(GenKind::UniformPairs, n, "v")?;
        if !has_uniform_pair_weights_per_vertex(&g) {
            return Ok(Outcome::Skipped);
        }
        Ok(if is_sfig(&g) { held() } else { violated("δ-pair present", &[("graph", &g)]) })
    }

    fn uniform_join_is_strong(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::UniformPairs, 1, 5)?;
        if !(has_uniform_pair_weights_per_vertex(&g1) && has_uniform_pair_weights_per_vertex(&g2)) {
            return Ok(Outcome::Skipped);
        }
        let j = join(&g1, &g2)?;
        Ok(if is_sfig(&j) {
            held()
        } else {
            violated("join has a δ-pair", &[("g1", &g1), ("g2", &g2)])
        })
    }

    /// Counts strong joins whose factors are not pair-uniform; finding none is
    /// reported as a vacuous run.
    fn strong_join_without_uniformity(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Sfig, 1, 4)?;
        let uniform =
            has_uniform_pair_weights_per_vertex(&g1) && has_uniform_pair_weights_per_vertex(&g2);
        Ok(if !uniform && is_sfig(&join(&g1, &g2)?) { held() } else { Outcome::Skipped })
    }

    /// Factors for the join domination results: pair-uniform ones, whose join
    /// is always strong, or arbitrary strong ones.
    fn join_factors(&mut self, uniform_only: bool) -> Result<(FuzzyIncidenceGraph, FuzzyIncidenceGraph)> {
        let kind = if uniform_only || self.rng.gen_bool(0.5) {
            GenKind::UniformPairs
        } else {
            GenKind::Sfig
        };
        let cap = self.config.exact_cap / 2;
        let (n1, n2) = (self.size(1, 6).min(cap), self.size(1, 6).min(cap));
        Ok((self.graph(kind, n1.max(1), "p")?, self.graph(kind, n2.max(1), "q")?))
    }

    fn join_domination_weight(&mut self, uniform_only: bool) -> Result<Outcome> {
        let (g1, g2) = self.join_factors(uniform_only)?;
        if uniform_only
            && !(has_uniform_pair_weights_per_vertex(&g1) && has_uniform_pair_weights_per_vertex(&g2))
        {
            return Ok(Outcome::Skipped);
        }
        let j = join(&g1, &g2)?;
        if !is_sfig(&j) {
            return Ok(Outcome::Skipped);
        }
        let Some(x) = self.exact(&j)? else {
            return Ok(Outcome::Skipped);
        };
        let (x1, x2) = join_side_dominators(&g1, &g2, self.config.exact_cap)?;
        let bound = bound_join(&g1, &g2, &x1.solution.set, &x2.solution.set)?;
        let gamma = x.solution.total_weight;
        Ok(if bound == gamma {
            held()
        } else {
            violated(format!("exact {gamma}, formula {bound}"), &[("g1", &g1), ("g2", &g2)])
        })
    }

    fn join_domination_size(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.join_factors(false)?;
        let j = join(&g1, &g2)?;
        if !is_sfig(&j) {
            return Ok(Outcome::Skipped);
        }
        let (Some(x), Some(x1), Some(x2)) = (self.exact(&j)?, self.exact(&g1)?, self.exact(&g2)?) else {
            return Ok(Outcome::Skipped);
        };
        let expected = x1.min_cardinality.min(x2.min_cardinality).min(2);
        Ok(if x.min_cardinality == expected {
            held()
        } else {
            violated(
                format!("least dominating size {} but formula gives {expected}", x.min_cardinality),
                &[("g1", &g1), ("g2", &g2)],
            )
        })
    }

    fn product_stays_strong(
        &mut self,
        product: fn(&FuzzyIncidenceGraph, &FuzzyIncidenceGraph) -> Result<FuzzyIncidenceGraph>,
    ) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Sfig, 1, 4)?;
        let g = product(&g1, &g2)?;
        Ok(if is_sfig(&g) {
            held()
        } else {
            violated("product has a δ-pair", &[("g1", &g1), ("g2", &g2)])
        })
    }

    fn product_stays_effective(
        &mut self,
        product: fn(&FuzzyIncidenceGraph, &FuzzyIncidenceGraph) -> Result<FuzzyIncidenceGraph>,
    ) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Effective, 1, 4)?;
        let g = product(&g1, &g2)?;
        Ok(if has_all_effective_pairs(&g) {
            held()
        } else {
            violated("product has a pair below capacity", &[("g1", &g1), ("g2", &g2)])
        })
    }

    fn cartesian_never_complete(&mut self) -> Result<Outcome> {
        let kind = if self.rng.gen_bool(0.5) { GenKind::Complete } else { GenKind::Random };
        let (g1, g2) = self.two(kind, 2, 4)?;
        Ok(if is_cfig(&cartesian(&g1, &g2)?) {
            violated("product is complete", &[("g1", &g1), ("g2", &g2)])
        } else {
            held()
        })
    }

    fn tensor_of_complete(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Complete, 2, 4)?;
        Ok(if is_cfig(&tensor(&g1, &g2)?) {
            violated("tensor product is complete", &[("g1", &g1), ("g2", &g2)])
        } else {
            held()
        })
    }

    fn effective_pairs_are_strong(&mut self) -> Result<Outcome> {
        let n = self.size(1, 8);
        let g = self.graph(GenKind::Random, n, "v")?;
        let mut any = false;
        for c in classify_all(&g) {
            if !is_effective_pair(&g, &c.pair)? {
                continue;
            }
            any = true;
            if c.class == PairClass::Delta {
                return Ok(violated(format!("effective pair {} is a δ-pair", c.pair), &[("graph", &g)]));
            }
        }
        Ok(if any { held() } else { Outcome::Skipped })
    }

    /// Checks the two Cartesian product pairs on `(a₁,v)(a₂,v)` for every
    /// factor edge `a₁a₂` and vertex `v` selected by `select`.
    fn product_pairs_on_copies(
        &mut self,
        select: impl Fn(&FuzzyIncidenceGraph, &EdgeKey, UnitWeight) -> Result<bool>,
    ) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Random, 1, 4)?;
        let product = cartesian(&g1, &g2)?;
        let mut any = false;
        for (e, _) in g1.edges() {
            if g1.pair_weights_of_edge(e).is_none() {
                continue;
            }
            for (v, eps_v) in g2.vertices() {
                if !select(&g1, e, eps_v)? {
                    continue;
                }
                any = true;
                let (a1, a2) = e.endpoints();
                let at = |a: &VertexId| {
                    ProductVertexId { left: a.clone(), right: v.clone() }.to_vertex_id()
                };
                let copy = EdgeKey::new(at(a1), at(a2)).expect("distinct");
                for end in [at(a1), at(a2)] {
                    let p = PairKey::new(end, copy.clone()).expect("endpoint");
                    if product.pair_weight(&p).is_none() {
                        return Ok(violated(format!("pair {p} missing"), &[("g1", &g1), ("g2", &g2)]));
                    }
                    if !is_effective_pair(&product, &p)? {
                        return Ok(violated(format!("pair {p} is not effective"), &[("g1", &g1), ("g2", &g2)]));
                    }
                    if !classify_pair(&product, &p)?.class.is_strong() {
                        return Ok(violated(format!("pair {p} is a δ-pair"), &[("g1", &g1), ("g2", &g2)]));
                    }
                }
            }
        }
        Ok(if any { held() } else { Outcome::Skipped })
    }

    fn heavy_factor_edges(&mut self) -> Result<Outcome> {
        self.product_pairs_on_copies(|g1, e, eps_v| {
            let (h1, h2) = g1.pair_weights_of_edge(e).expect("both pairs");
            Ok(h1 >= eps_v && h2 >= eps_v)
        })
    }

    fn effective_factor_edges(&mut self) -> Result<Outcome> {
        self.product_pairs_on_copies(|g1, e, _| {
            let (a1, a2) = e.endpoints();
            for a in [a1, a2] {
                let p = PairKey::new(a.clone(), e.clone()).expect("endpoint");
                if !is_effective_pair(g1, &p)? {
                    return Ok(false);
                }
            }
            Ok(true)
        })
    }

    /// Factor sizes with `m + n ≥ 3`: on two single vertices the product is
    /// one isolated vertex, which weighs zero.
    fn complete_cartesian_domination(&mut self) -> Result<Outcome> {
        let m = self.size(1, 4);
        let lo = if m == 1 { 2 } else { 1 };
        let n = self.size(lo, 4);
        let (g1, g2) = (self.graph(GenKind::Complete, m, "p")?, self.graph(GenKind::Complete, n, "q")?);
        if m * n > self.config.exact_cap {
            return Ok(Outcome::Skipped);
        }
        let check = prop27_check_with_cap(&g1, &g2, self.config.exact_cap)?;
        Ok(if check.holds() {
            held()
        } else {
            violated(
                format!(
                    "expected weight {} and size {}, found {} and {}",
                    check.expected_gamma,
                    check.expected_cardinality,
                    check.actual_gamma,
                    check.actual_cardinality
                ),
                &[("g1", &g1), ("g2", &g2)],
            )
        })
    }

    fn side_bound(&mut self, tensor_product: bool) -> Result<Outcome> {
        let (g1, g2) = if tensor_product {
            let (n1, n2) = (self.size(2, 4), self.size(2, 4));
            let (d1, d2) = (self.rng.gen_range(0.6..=1.0), self.rng.gen_range(0.6..=1.0));
            let (grid1, grid2) = (self.grid(), self.grid());
            (
                self.graph_on(GenKind::Sfig, n1, "p", d1, grid1)?,
                self.graph_on(GenKind::Sfig, n2, "q", d2, grid2)?,
            )
        } else {
            self.two(GenKind::Sfig, 1, 4)?
        };
        if tensor_product && has_isolated_vertex(&g1) | has_isolated_vertex(&g2) {
            return Ok(Outcome::Skipped);
        }
        let (Some(x1), Some(x2)) = (self.exact(&g1)?, self.exact(&g2)?) else {
            return Ok(Outcome::Skipped);
        };
        let (d1, d2) = (&x1.solution.set, &x2.solution.set);
        let (bound, product) = if tensor_product {
            (bound_tensor(&g1, &g2, d1, d2)?, tensor(&g1, &g2)?)
        } else {
            (bound_cartesian(&g1, &g2, d1, d2)?, cartesian(&g1, &g2)?)
        };
        let Some(x) = self.exact(&product)? else {
            return Ok(Outcome::Skipped);
        };
        check_bound(bound.all_valid(), bound.bound, x, &g1, &g2)
    }

    /// Strong factors whose pair weights are separated by a grid threshold.
    fn separated_factors(&mut self) -> Result<(FuzzyIncidenceGraph, FuzzyIncidenceGraph)> {
        let grid = self.grid();
        let t = grid[self.rng.gen_range(0..grid.len())];
        let low: Vec<UnitWeight> = grid.iter().copied().filter(|&w| w <= t).collect();
        let high: Vec<UnitWeight> = grid.iter().copied().filter(|&w| w >= t).collect();
        let (n1, n2) = (self.size(1, 4), self.size(1, 4));
        let (d1, d2) = (self.rng.gen_range(0.2..=0.9), self.rng.gen_range(0.2..=0.9));
        Ok((
            self.graph_on(GenKind::Sfig, n1, "p", d1, low)?,
            self.graph_on(GenKind::Sfig, n2, "q", d2, high)?,
        ))
    }

    fn dominated_composition_is_strong(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.separated_factors()?;
        if !(is_sfig(&g1) && is_sfig(&g2) && max_pair_leq_min_pair(&g1, &g2)) {
            return Ok(Outcome::Skipped);
        }
        let g = compose(&g1, &g2)?;
        Ok(if is_sfig(&g) {
            held()
        } else {
            violated("composition has a δ-pair", &[("g1", &g1), ("g2", &g2)])
        })
    }

    fn composition_bound(&mut self) -> Result<Outcome> {
        let (g1, g2) = if self.rng.gen_bool(0.5) {
            self.separated_factors()?
        } else {
            self.two(GenKind::Sfig, 1, 4)?
        };
        let product = compose(&g1, &g2)?;
        if !is_sfig(&product) {
            return Ok(Outcome::Skipped);
        }
        let (Some(x1), Some(x2), Some(x)) = (self.exact(&g1)?, self.exact(&g2)?, self.exact(&product)?) else {
            return Ok(Outcome::Skipped);
        };
        let bound = bound_composition(&g1, &g2, &x1.solution.set, &x2.solution.set)?;
        check_bound(bound.all_valid(), bound.bound, x, &g1, &g2)
    }

    fn complete_composition(&mut self) -> Result<Outcome> {
        let (g1, g2) = self.two(GenKind::Complete, 1, 4)?;
        Ok(if is_cfig(&compose(&g1, &g2)?) {
            held()
        } else {
            violated("composition is not complete", &[("g1", &g1), ("g2", &g2)])
        })
    }
}

fn has_isolated_vertex(g: &FuzzyIncidenceGraph) -> bool {
    strong_neighborhoods(g).values().any(BTreeSet::is_empty)
}

fn check_bound(
    candidates_valid: bool,
    bound: crate::weight::WeightSum,
    exact: ExactDomination,
    g1: &FuzzyIncidenceGraph,
    g2: &FuzzyIncidenceGraph,
) -> Result<Outcome> {
    let gamma = exact.solution.total_weight;
    Ok(if !candidates_valid {
        violated("a candidate set does not dominate", &[("g1", g1), ("g2", g2)])
    } else if bound < gamma {
        violated(format!("bound {bound} is below the exact value {gamma}"), &[("g1", g1), ("g2", g2)])
    } else {
        Outcome::Held { strict: bound > gamma }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_resolve() {
        assert_eq!(resolve_theorem("t19").unwrap(), "T19");
        assert_eq!(resolve_theorem("C24").unwrap(), "P23/C24");
        assert_eq!(resolve_theorem("P23/C24").unwrap(), "P23/C24");
        assert!(matches!(resolve_theorem("T99"), Err(FigError::UnknownTheorem(_))));
    }

    #[test]
    fn reports_are_reproducible() {
        let config = VerifyConfig::new(20, 3);
        let a = verify("T19", &config).unwrap();
        let b = verify("T19", &config).unwrap();
        assert_eq!(a.summary_line(), b.summary_line());
        assert_eq!(a.violations, b.violations);
        assert!(a.passed(), "{}", a.summary_line());
    }

    #[test]
    fn zero_trials_is_an_error() {
        assert!(verify("T4", &VerifyConfig::new(0, 1)).is_err());
    }
}
