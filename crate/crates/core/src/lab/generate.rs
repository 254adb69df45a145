//! Seeded random instances for each hypothesis class.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::connectivity::is_sfig;
use crate::error::{FigError, Result};
use crate::graph::{FigBuilder, FuzzyIncidenceGraph};
use crate::weight::UnitWeight;

pub const SFIG_ATTEMPT_CAP: usize = 10_000;

/// Probability that an edge keeps each of its pairs in the sparse classes.
const PAIR_PRESENCE: f64 = 0.85;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GenKind {
    /// Any graph; pairs may be missing or below their cap.
    Random,
    /// One pair weight per vertex.
    UniformPairs,
    /// Complete, with every edge and pair at full capacity.
    Complete,
    /// Every stored pair at full capacity.
    Effective,
    /// Random graphs filtered to those without δ-pairs.
    Sfig,
}

impl GenKind {
    pub const ALL: [GenKind; 5] = [
        GenKind::Random,
        GenKind::UniformPairs,
        GenKind::Complete,
        GenKind::Effective,
        GenKind::Sfig,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenKind::Random => "random",
            GenKind::UniformPairs => "uniform_pairs",
            GenKind::Complete => "complete",
            GenKind::Effective => "effective",
            GenKind::Sfig => "sfig",
        }
    }
}

impl fmt::Display for GenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenKind {
    type Err = FigError;

    fn from_str(s: &str) -> Result<Self> {
        let wanted = s.replace('-', "_");
        GenKind::ALL
            .into_iter()
            .find(|k| k.name() == wanted)
            .ok_or_else(|| FigError::InvalidSpec(format!("unknown kind {s:?}")))
    }
}

/// Multiples of 0.05 in `(0, 1]`.
pub fn default_grid() -> Vec<UnitWeight> {
    (1..=20)
        .map(|k| UnitWeight::from_millionths(k * 50_000).expect("within range"))
        .collect()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenSpec {
    pub kind: GenKind,
    pub n: usize,
    pub edge_density: f64,
    pub weight_grid: Vec<UnitWeight>,
    pub seed: u64,
    /// Vertex names are `prefix0`, `prefix1`, …
    pub prefix: String,
}

impl GenSpec {
    pub fn new(kind: GenKind, n: usize, seed: u64) -> Self {
        GenSpec {
            kind,
            n,
            edge_density: 0.5,
            weight_grid: default_grid(),
            seed,
            prefix: "v".to_string(),
        }
    }
}

pub fn generate(spec: &GenSpec) -> Result<FuzzyIncidenceGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    generate_with_rng(spec, &mut rng)
}

/// Generation driven by a caller-owned stream; `spec.seed` is ignored.
pub fn generate_with_rng<R: Rng>(spec: &GenSpec, rng: &mut R) -> Result<FuzzyIncidenceGraph> {
    let sampler = Sampler::new(spec)?;
    match spec.kind {
        GenKind::Random => Ok(sampler.random(rng, false)),
        GenKind::Effective => Ok(sampler.random(rng, true)),
        GenKind::UniformPairs => Ok(sampler.uniform_pairs(rng)),
        GenKind::Complete => Ok(sampler.complete(rng)),
        GenKind::Sfig => {
            for _ in 0..SFIG_ATTEMPT_CAP {
                let g = sampler.random(rng, false);
                if is_sfig(&g) {
                    return Ok(g);
                }
            }
            Err(FigError::GenerationExhausted { attempts: SFIG_ATTEMPT_CAP })
        }
    }
}

struct Sampler {
    names: Vec<String>,
    density: f64,
    grid: Vec<UnitWeight>,
}

impl Sampler {
    fn new(spec: &GenSpec) -> Result<Self> {
        if spec.n == 0 {
            return Err(FigError::InvalidSpec("at least one vertex is required".into()));
        }
        if !(0.0..=1.0).contains(&spec.edge_density) {
            return Err(FigError::InvalidSpec(format!(
                "edge density {} is outside [0, 1]",
                spec.edge_density
            )));
        }
        let mut grid: Vec<UnitWeight> =
            spec.weight_grid.iter().copied().filter(|w| !w.is_zero()).collect();
        grid.sort();
        grid.dedup();
        if grid.is_empty() {
            return Err(FigError::InvalidSpec("the weight grid has no positive value".into()));
        }
        let names = (0..spec.n).map(|i| format!("{}{i}", spec.prefix)).collect();
        Ok(Sampler { names, density: spec.edge_density, grid })
    }

    /// A grid value no greater than `cap`; `cap` itself is always on the grid
    /// here because every cap is a meet of grid values.
    fn at_most<R: Rng>(&self, rng: &mut R, cap: UnitWeight) -> UnitWeight {
        let upto = self.grid.partition_point(|&w| w <= cap);
        *self.grid[..upto.max(1)].choose(rng).expect("non-empty grid")
    }

    /// Like [`Self::at_most`], but lands on `cap` a third of the time so that
    /// ties, and with them β-pairs and weak cycles, show up regularly.
    fn tie_prone<R: Rng>(&self, rng: &mut R, cap: UnitWeight) -> UnitWeight {
        if rng.gen_ratio(1, 3) {
            cap
        } else {
            self.at_most(rng, cap)
        }
    }

    fn vertex_weights<R: Rng>(&self, rng: &mut R, b: &mut FigBuilder) -> Vec<UnitWeight> {
        self.names
            .iter()
            .map(|v| {
                let w = *self.grid.choose(rng).expect("non-empty grid");
                b.vertex(v, w).expect("generated names are valid");
                w
            })
            .collect()
    }

    fn random<R: Rng>(&self, rng: &mut R, effective: bool) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        let eps = self.vertex_weights(rng, &mut b);
        for i in 0..self.names.len() {
            for j in i + 1..self.names.len() {
                if !rng.gen_bool(self.density) {
                    continue;
                }
                let (u, v) = (&self.names[i], &self.names[j]);
                let rho = self.tie_prone(rng, eps[i].meet(eps[j]));
                b.edge(u, v, rho).expect("valid");
                for (x, ex) in [(u, eps[i]), (v, eps[j])] {
                    if !rng.gen_bool(PAIR_PRESENCE) {
                        continue;
                    }
                    let cap = ex.meet(rho);
                    let eta = if effective { cap } else { self.tie_prone(rng, cap) };
                    b.pair(x, u, v, eta).expect("valid");
                }
            }
        }
        b.build().expect("weights respect their caps")
    }

    fn uniform_pairs<R: Rng>(&self, rng: &mut R) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        let eps = self.vertex_weights(rng, &mut b);
        let own: Vec<UnitWeight> = eps.iter().map(|&e| self.at_most(rng, e)).collect();
        for i in 0..self.names.len() {
            for j in i + 1..self.names.len() {
                let (lo, hi) = (own[i].join(own[j]), eps[i].meet(eps[j]));
                if lo > hi || !rng.gen_bool(self.density) {
                    continue;
                }
                let choices: Vec<UnitWeight> =
                    self.grid.iter().copied().filter(|w| (lo..=hi).contains(w)).collect();
                let rho = *choices.choose(rng).expect("lo and hi are grid values");
                let (u, v) = (&self.names[i], &self.names[j]);
                b.edge(u, v, rho).expect("valid");
                b.pair(u, u, v, own[i]).expect("valid");
                b.pair(v, u, v, own[j]).expect("valid");
            }
        }
        b.build().expect("weights respect their caps")
    }

    fn complete<R: Rng>(&self, rng: &mut R) -> FuzzyIncidenceGraph {
        let mut b = FigBuilder::new();
        let eps = self.vertex_weights(rng, &mut b);
        for i in 0..self.names.len() {
            for j in i + 1..self.names.len() {
                let (u, v) = (&self.names[i], &self.names[j]);
                let rho = eps[i].meet(eps[j]);
                b.edge(u, v, rho).expect("valid");
                b.pair(u, u, v, rho).expect("valid");
                b.pair(v, u, v, rho).expect("valid");
            }
        }
        b.build().expect("weights respect their caps")
    }
}
