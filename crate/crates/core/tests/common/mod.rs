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

//! Shared helpers for the integration tests: seeded random graphs and an
//! independent hitting-time oracle.

#![allow(dead_code)]

use hitwalk::{BigRational, Graph};
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree(n: usize, rng: &mut impl Rng) -> Graph {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let edges: Vec<(usize, usize)> = (1..n)
        .map(|i| (labels[rng.random_range(0..i)], labels[i]))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Connected graph: a random tree plus each remaining pair with probability `p`.
pub fn random_connected(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<(usize, usize)> = tree.edges().collect();
    for u in 0..n {
        for v in u + 1..n {
            if !tree.has_edge(u, v) && rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Hitting times into `target` by Gauss-Jordan elimination on `(I − Q)h = 1`,
/// where `Q` is the transition matrix restricted to the non-target vertices
/// of the target's component. Vertices are kept in natural order and
/// unreachable ones come back as `None`.
pub fn oracle_hitting_times(g: &Graph, target: usize) -> Vec<Option<BigRational>> {
    let reach = g.component_of(target).unwrap();
    let unknowns: Vec<usize> = reach.iter().copied().filter(|&v| v != target).collect();
    let pos = |v: usize| unknowns.iter().position(|&u| u == v);
    let size = unknowns.len();
    let mut m = vec![vec![BigRational::zero(); size + 1]; size];
    for (r, &v) in unknowns.iter().enumerate() {
        let p = BigRational::new(1.into(), (g.degree(v) as i64).into());
        m[r][r] = BigRational::one();
        for &k in g.neighbors(v) {
            if let Some(c) = pos(k) {
                m[r][c] -= &p;
            }
        }
        m[r][size] = BigRational::one();
    }
    for c in 0..size {
        let p = (c..size).find(|&r| !m[r][c].is_zero()).expect("nonsingular");
        m.swap(c, p);
        let pivot = m[c][c].clone();
        for x in m[c].iter_mut() {
            *x /= &pivot;
        }
        for r in 0..size {
            if r != c && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                for j in 0..=size {
                    let t = &f * &m[c][j];
                    m[r][j] -= t;
                }
            }
        }
    }
    (0..g.n())
        .map(|v| {
            if v == target {
                Some(BigRational::zero())
            } else {
                pos(v).map(|r| m[r][size].clone())
            }
        })
        .collect()
}

/// Float hitting times by fixed-point iteration of the first-step equations.
pub fn value_iteration(g: &Graph, target: usize, sweeps: usize) -> Vec<f64> {
    let mut h = vec![0.0; g.n()];
    for _ in 0..sweeps {
        for v in 0..g.n() {
            if v != target && g.degree(v) > 0 {
                let mean: f64 =
                    g.neighbors(v).iter().map(|&k| h[k]).sum::<f64>() / g.degree(v) as f64;
                h[v] = 1.0 + mean;
            }
        }
    }
    h
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

pub fn exact_column(g: &Graph, target: usize) -> Vec<Option<BigRational>> {
    hitwalk::solver::hitting_times_to::<BigRational>(g, target)
        .unwrap()
        .values
        .into_iter()
        .map(|h| h.finite().cloned())
        .collect()
}
