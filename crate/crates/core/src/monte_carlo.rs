// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! Seeded Monte Carlo estimates of hitting and return times.
//!
//! Walk `i` of a run with master seed `s` draws from its own generator,
//! `ChaCha8Rng::seed_from_u64(s)` switched to stream `i` with
//! `set_stream(i)`. The key expansion of `seed_from_u64` is the PCG32-based
//! one documented by `rand_core`. Because every walk owns its stream, walks can
//! run in any order or in parallel without changing the multiset of walk
//! lengths, and the aggregate is formed from integer sums only.
//!
//! Each step picks one of the `deg(v)` neighbors with a rejection-sampled
//! uniform integer, so there is no modulo bias.

use rand::distr::{Distribution, Uniform};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

pub const DEFAULT_MAX_STEPS: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("vertex {start} cannot reach vertex {target}")]
    Unreachable { start: usize, target: usize },
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("all {trials} walks hit the step cap of {max_steps}")]
    AllTruncated { trials: u64, max_steps: u64 },
    #[error("trials and max_steps must both be at least 1")]
    InvalidConfig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WalkConfig {
    pub seed: u64,
    pub trials: u64,
    pub max_steps: u64,
}

impl WalkConfig {
    pub fn new(seed: u64, trials: u64) -> Self {
        Self {
            seed,
            trials,
            max_steps: DEFAULT_MAX_STEPS,
        }
    }

    fn validate(&self) -> Result<(), WalkError> {
        if self.trials == 0 || self.max_steps == 0 {
            return Err(WalkError::InvalidConfig);
        }
        Ok(())
    }

    /// The generator for walk number `walk`.
    pub fn walk_rng(&self, walk: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(walk);
        rng
    }
}

impl Default for WalkConfig {
    fn default() -> Self {
        Self::new(0, 100_000)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WalkEstimate {
    /// Mean over the walks that finished.
    pub mean: f64,
    /// Sample standard deviation over `√trials_completed`.
    pub std_error: f64,
    pub trials_completed: u64,
    /// Walks that reached `max_steps` first.
    pub truncated: u64,
}

impl WalkEstimate {
    pub fn is_valid(&self) -> bool {
        self.truncated == 0
    }

    /// `|mean − expected| / std_error`; infinite when the standard error is
    /// zero and the mean is off.
    pub fn z_score(&self, expected: f64) -> f64 {
        let diff = (self.mean - expected).abs();
        if diff == 0.0 {
            0.0
        } else {
            diff / self.std_error
        }
    }
}

/// Uniform neighbor choice for every vertex of a graph.
pub struct Stepper<'g> {
    graph: &'g Graph,
    choices: Vec<Option<Uniform<u32>>>,
}

impl<'g> Stepper<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let choices = (0..graph.n())
            .map(|v| {
                let degree = u32::try_from(graph.degree(v)).expect("degree fits in u32");
                Uniform::new(0, degree).ok()
            })
            .collect();
        Self { graph, choices }
    }

    /// A uniformly random neighbor of `v`, or `None` if `v` is isolated.
    pub fn step<R: rand::Rng + ?Sized>(&self, v: usize, rng: &mut R) -> Option<usize> {
        let choice = self.choices[v].as_ref()?;
        Some(self.graph.neighbors(v)[choice.sample(rng) as usize])
    }
}

#[derive(Default)]
struct Tally {
    completed: u64,
    truncated: u64,
    sum: u128,
    sum_sq: u128,
}

impl Tally {
    fn record(length: Option<u64>) -> Self {
        match length {
            Some(steps) => Self {
                completed: 1,
                truncated: 0,
                sum: steps as u128,
                sum_sq: (steps as u128) * (steps as u128),
            },
            None => Self {
                truncated: 1,
                ..Self::default()
            },
        }
    }

    fn merge(self, other: Self) -> Self {
        Self {
            completed: self.completed + other.completed,
            truncated: self.truncated + other.truncated,
            sum: self.sum + other.sum,
            sum_sq: self.sum_sq + other.sum_sq,
        }
    }

    fn estimate(&self, cfg: &WalkConfig) -> Result<WalkEstimate, WalkError> {
        if self.completed == 0 {
            return Err(WalkError::AllTruncated {
                trials: cfg.trials,
                max_steps: cfg.max_steps,
            });
        }
        let c = self.completed as u128;
        let mean = self.sum as f64 / c as f64;
        let std_error = if c > 1 {
            // c·Σx² − (Σx)² is exact in integers and never negative
            let spread = c * self.sum_sq - self.sum * self.sum;
            let variance = spread as f64 / (c * (c - 1)) as f64;
            (variance / c as f64).sqrt()
        } else {
            0.0
        };
        Ok(WalkEstimate {
            mean,
            std_error,
            trials_completed: self.completed,
            truncated: self.truncated,
        })
    }
}

fn run_walks<F>(cfg: &WalkConfig, walk: F) -> Result<WalkEstimate, WalkError>
where
    F: Fn(&mut ChaCha8Rng) -> Option<u64> + Sync,
{
    cfg.validate()?;
    (0..cfg.trials)
        .into_par_iter()
        .map(|i| Tally::record(walk(&mut cfg.walk_rng(i))))
        .reduce(Tally::default, Tally::merge)
        .estimate(cfg)
}

/// Walks from `from` until `target` is reached; `None` if the cap is hit.
fn walk_until(
    stepper: &Stepper<'_>,
    from: usize,
    target: usize,
    already: u64,
    max_steps: u64,
    rng: &mut ChaCha8Rng,
) -> Option<u64> {
    let mut current = from;
    let mut steps = already;
    while current != target {
        if steps >= max_steps {
            return None;
        }
        current = stepper.step(current, rng)?;
        steps += 1;
    }
    Some(steps)
}

/// Mean first hitting step count from `source` to `target` over
/// `cfg.trials` independent walks.
pub fn simulate_hitting_time(
    g: &Graph,
    source: usize,
    target: usize,
    cfg: &WalkConfig,
) -> Result<WalkEstimate, WalkError> {
    g.check_vertex(source)?;
    g.check_vertex(target)?;
    if g.bfs_distances(target)?[source].is_none() {
        return Err(WalkError::Unreachable {
            start: source,
            target,
        });
    }
    let stepper = Stepper::new(g);
    run_walks(cfg, |rng| {
        walk_until(&stepper, source, target, 0, cfg.max_steps, rng)
    })
}

/// Mean number of steps until a walk started at `v` first comes back.
pub fn simulate_return_time(
    g: &Graph,
    v: usize,
    cfg: &WalkConfig,
) -> Result<WalkEstimate, WalkError> {
    g.check_vertex(v)?;
    if g.degree(v) == 0 {
        return Err(WalkError::IsolatedVertex(v));
    }
    let stepper = Stepper::new(g);
    run_walks(cfg, |rng| {
        let first = stepper.step(v, rng)?;
        walk_until(&stepper, first, v, 1, cfg.max_steps, rng)
    })
}
