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

//! Hitting times from the absorbing linear system.
//!
//! For a fixed target `j` the hitting times satisfy `h_j = 0` and, for every
//! other vertex `i` in the component of `j`,
//!
//! ```text
//! h_i = 1 + (1 / deg(i)) · Σ_{k ∈ Γ(i)} h_k
//! ```
//!
//! which has a unique solution. We solve the equivalent integer-coefficient
//! form `deg(i)·h_i − Σ_{k ∈ Γ(i), k ≠ j} h_k = deg(i)` (the reduced graph
//! Laplacian) by dense Gaussian elimination. Unknowns are eliminated in order
//! of decreasing distance from the target, which produces no fill-in at all on
//! trees. Vertices outside the target's component are reported as
//! [`HittingTime::Unreachable`].

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("elimination order must be a permutation of the non-target vertices in the target's component")]
    BadOrder,
    /// Only reachable through floating point breakdown; the reduced system of
    /// a connected component is always nonsingular.
    #[error("internal error: reduced system is numerically singular at column {0}")]
    Singular(usize),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(usize),
    #[error("graph is not connected")]
    Disconnected,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Backend {
    Exact,
    Float,
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Backend::Exact => "exact",
            Backend::Float => "float",
        })
    }
}

/// Number types the elimination can run over.
pub trait Scalar: Clone + PartialEq + fmt::Debug + Send + Sync {
    const BACKEND: Backend;

    fn from_count(n: usize) -> Self;
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn sub_assign(&mut self, other: &Self);
    /// Whether `self` should replace `current` as the pivot.
    fn better_pivot(&self, current: &Self) -> bool;
    /// `self -= factor * value`
    fn sub_mul_assign(&mut self, factor: &Self, value: &Self);
    fn div_by(&self, divisor: &Self) -> Self;
}

impl Scalar for BigRational {
    const BACKEND: Backend = Backend::Exact;

    fn from_count(n: usize) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn zero() -> Self {
        Zero::zero()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }

    // Any nonzero pivot is exact; keep the natural order.
    fn better_pivot(&self, current: &Self) -> bool {
        Zero::is_zero(current) && !Zero::is_zero(self)
    }

    fn sub_mul_assign(&mut self, factor: &Self, value: &Self) {
        *self -= factor * value;
    }

    fn div_by(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

impl Scalar for f64 {
    const BACKEND: Backend = Backend::Float;

    fn from_count(n: usize) -> Self {
        n as f64
    }

    fn zero() -> Self {
        0.0
    }

    fn is_zero(&self) -> bool {
        *self == 0.0
    }

    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }

    fn sub_assign(&mut self, other: &Self) {
        *self -= other;
    }

    fn better_pivot(&self, current: &Self) -> bool {
        self.abs() > current.abs()
    }

    fn sub_mul_assign(&mut self, factor: &Self, value: &Self) {
        *self -= factor * value;
    }

    fn div_by(&self, divisor: &Self) -> Self {
        self / divisor
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HittingTime<T> {
    Finite(T),
    Unreachable,
}

impl<T> HittingTime<T> {
    pub fn finite(&self) -> Option<&T> {
        match self {
            HittingTime::Finite(value) => Some(value),
            HittingTime::Unreachable => None,
        }
    }

    pub fn is_unreachable(&self) -> bool {
        matches!(self, HittingTime::Unreachable)
    }
}

/// All hitting times into one target vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HittingVector<T> {
    pub target: usize,
    pub values: Vec<HittingTime<T>>,
}

impl<T: Scalar> HittingVector<T> {
    pub fn backend(&self) -> Backend {
        T::BACKEND
    }

    pub fn get(&self, source: usize) -> &HittingTime<T> {
        &self.values[source]
    }
}

/// Default elimination order: farthest from the target first.
fn default_order(dist: &[Option<usize>], target: usize) -> Vec<usize> {
    let mut order: Vec<usize> = (0..dist.len())
        .filter(|&v| v != target && dist[v].is_some())
        .collect();
    order.sort_by(|&a, &b| dist[b].cmp(&dist[a]).then(b.cmp(&a)));
    order
}

/// Solves for the hitting times into `target`.
pub fn hitting_times_to<T: Scalar>(
    g: &Graph,
    target: usize,
) -> Result<HittingVector<T>, SolveError> {
    let dist = g.bfs_distances(target)?;
    let order = default_order(&dist, target);
    solve(g, target, &dist, &order)
}

/// Like [`hitting_times_to`], eliminating the unknowns in the given order.
///
/// `order` must list every vertex of the target's component except the
/// target itself, each exactly once.
pub fn hitting_times_to_with_order<T: Scalar>(
    g: &Graph,
    target: usize,
    order: &[usize],
) -> Result<HittingVector<T>, SolveError> {
    let dist = g.bfs_distances(target)?;
    let mut seen = vec![false; g.n()];
    for &v in order {
        if v >= g.n() || v == target || dist[v].is_none() || seen[v] {
            return Err(SolveError::BadOrder);
        }
        seen[v] = true;
    }
    let expected = dist.iter().filter(|d| d.is_some()).count() - 1;
    if order.len() != expected {
        return Err(SolveError::BadOrder);
    }
    solve(g, target, &dist, order)
}

fn solve<T: Scalar>(
    g: &Graph,
    target: usize,
    dist: &[Option<usize>],
    order: &[usize],
) -> Result<HittingVector<T>, SolveError> {
    let size = order.len();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in order.iter().enumerate() {
        index[v] = i;
    }

    let minus_one = {
        let mut x = T::zero();
        x.sub_assign(&T::from_count(1));
        x
    };
    let mut a = vec![vec![T::zero(); size]; size];
    let mut b = Vec::with_capacity(size);
    for (i, &v) in order.iter().enumerate() {
        let degree = T::from_count(g.degree(v));
        a[i][i] = degree.clone();
        b.push(degree);
        for &k in g.neighbors(v) {
            if k != target {
                a[i][index[k]] = minus_one.clone();
            }
        }
    }

    for col in 0..size {
        let mut pivot = col;
        for row in col + 1..size {
            if a[row][col].better_pivot(&a[pivot][col]) {
                pivot = row;
            }
        }
        if a[pivot][col].is_zero() {
            return Err(SolveError::Singular(col));
        }
        a.swap(col, pivot);
        b.swap(col, pivot);

        // Scale the pivot row so the pivot is one.
        let p = a[col][col].clone();
        let nonzero: Vec<usize> = (col + 1..size).filter(|&j| !a[col][j].is_zero()).collect();
        for &j in &nonzero {
            a[col][j] = a[col][j].div_by(&p);
        }
        b[col] = b[col].div_by(&p);
        a[col][col] = T::from_count(1);

        let (upper, lower) = a.split_at_mut(col + 1);
        let pivot_row = &upper[col];
        let (b_upper, b_lower) = b.split_at_mut(col + 1);
        for (row, rhs) in lower.iter_mut().zip(b_lower.iter_mut()) {
            if row[col].is_zero() {
                continue;
            }
            let factor = std::mem::replace(&mut row[col], T::zero());
            for &j in &nonzero {
                row[j].sub_mul_assign(&factor, &pivot_row[j]);
            }
            rhs.sub_mul_assign(&factor, &b_upper[col]);
        }
    }

    let mut x = vec![T::zero(); size];
    for col in (0..size).rev() {
        let mut value = b[col].clone();
        for j in col + 1..size {
            if !a[col][j].is_zero() {
                value.sub_mul_assign(&a[col][j], &x[j]);
            }
        }
        x[col] = value;
    }

    let values = (0..g.n())
        .map(|v| {
            if v == target {
                HittingTime::Finite(T::zero())
            } else if dist[v].is_none() {
                HittingTime::Unreachable
            } else {
                HittingTime::Finite(x[index[v]].clone())
            }
        })
        .collect();
    Ok(HittingVector { target, values })
}

pub fn hitting_time<T: Scalar>(
    g: &Graph,
    source: usize,
    target: usize,
) -> Result<HittingTime<T>, SolveError> {
    g.check_vertex(source)?;
    let mut hv = hitting_times_to::<T>(g, target)?;
    Ok(hv.values.swap_remove(source))
}

/// One hitting vector per target, indexed by target. Solves run in parallel.
pub fn all_pairs<T: Scalar>(g: &Graph) -> Result<Vec<HittingVector<T>>, SolveError> {
    (0..g.n())
        .into_par_iter()
        .map(|target| hitting_times_to::<T>(g, target))
        .collect()
}

/// Per-vertex residual `h_i − 1 − (1/deg(i)) Σ_{k ∈ Γ(i)} h_k` of the system,
/// zero at the target and at unreachable vertices.
pub fn residuals<T: Scalar>(g: &Graph, hv: &HittingVector<T>) -> Vec<T> {
    (0..g.n())
        .map(|i| match &hv.values[i] {
            HittingTime::Finite(h) if i != hv.target => {
                let mut sum = T::zero();
                for &k in g.neighbors(i) {
                    if let HittingTime::Finite(hk) = &hv.values[k] {
                        sum.add_assign(hk);
                    }
                }
                let mut r = h.clone();
                r.sub_assign(&T::from_count(1));
                r.sub_assign(&sum.div_by(&T::from_count(g.degree(i))));
                r
            }
            _ => T::zero(),
        })
        .collect()
}

/// Expected first return time to `v`, `2m / deg(v)`.
pub fn expected_return_time(g: &Graph, v: usize) -> Result<BigRational, SolveError> {
    g.check_vertex(v)?;
    if g.degree(v) == 0 {
        return Err(SolveError::IsolatedVertex(v));
    }
    if !g.is_connected() {
        return Err(SolveError::Disconnected);
    }
    Ok(BigRational::new(
        BigInt::from(2 * g.m()),
        BigInt::from(g.degree(v)),
    ))
}

/// First-step route to the return time: `1 + (1/deg(v)) Σ_{k ∈ Γ(v)} h_{k→v}`.
pub fn return_time_via_neighbors<T: Scalar>(g: &Graph, v: usize) -> Result<T, SolveError> {
    g.check_vertex(v)?;
    if g.degree(v) == 0 {
        return Err(SolveError::IsolatedVertex(v));
    }
    let hv = hitting_times_to::<T>(g, v)?;
    let mut sum = T::zero();
    for &k in g.neighbors(v) {
        let hk = hv.values[k]
            .finite()
            .expect("neighbors share the target's component");
        sum.add_assign(hk);
    }
    let mut total = sum.div_by(&T::from_count(g.degree(v)));
    total.add_assign(&T::from_count(1));
    Ok(total)
}

/// Renders an exact value as `p/q`, or a bare integer when `q = 1`.
pub fn render_rational(value: &BigRational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// Renders a float with 17 significant digits.
pub fn render_float(value: f64) -> String {
    format!("{value:.16e}")
}

pub(crate) fn ratio_to_f64(value: &BigRational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}
