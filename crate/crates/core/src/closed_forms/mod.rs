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

//! Closed-form hitting times for symmetric and structured families.
//!
//! All results are exact. Endpoints are named through the canonical labelings
//! documented in [`crate::family`].

mod dary;
mod tadpole;

pub use dary::{
    dary_ancestor_to_leaf_ht, dary_depth, dary_f, dary_g, dary_ht, dary_lca, dary_parent,
    dary_to_root_ht,
};
pub use tadpole::{tadpole_end_ht, tadpole_ht_to_end};

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormulaError {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("input graph is not a tree")]
    NotATree,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn invalid(reason: impl Into<String>) -> FormulaError {
    FormulaError::InvalidParameters(reason.into())
}

/// `2e/k − 1`: the hitting time into a vertex of degree `k` from any of its
/// neighbors, when all of those neighbors are equivalent under automorphisms
/// of a connected graph with `e` edges.
///
/// The symmetry hypothesis is not checked.
pub fn symmetric_neighbor_ht(e: u64, k: u64) -> Result<BigRational, FormulaError> {
    if e < 1 || k < 1 {
        return Err(invalid("need e >= 1 and k >= 1"));
    }
    Ok(BigRational::new(BigInt::from(2 * e), BigInt::from(k)) - BigRational::from_integer(1.into()))
}

/// Hitting time from a neighbor of the grid corner (e.g. vertex `1`) into
/// the corner `0`: `2(m−1)m^{d−1} − 1`.
pub fn grid_corner_ht(d: u32, m: u64) -> Result<BigInt, FormulaError> {
    if d < 1 || m < 2 {
        return Err(invalid("grid needs d >= 1 and m >= 2"));
    }
    Ok(2 * BigInt::from(m - 1) * BigInt::from(m).pow(d - 1) - 1)
}

/// `2^d − 1`, between any two adjacent vertices of the `d`-cube.
pub fn hypercube_neighbor_ht(d: u32) -> Result<BigInt, FormulaError> {
    if d < 1 {
        return Err(invalid("hypercube needs d >= 1"));
    }
    Ok((BigInt::from(1) << d) - 1)
}

/// Hitting time from `v` to its neighbor `u` in a tree: `2n − 1`, where `n`
/// is the number of vertices left on `v`'s side once the edge `uv` is cut.
pub fn tree_neighbor_ht(tree: &Graph, v: usize, u: usize) -> Result<BigInt, FormulaError> {
    tree.check_vertex(v)?;
    tree.check_vertex(u)?;
    if !tree.is_tree() {
        return Err(FormulaError::NotATree);
    }
    if !tree.has_edge(v, u) {
        return Err(FormulaError::NotAdjacent(v, u));
    }
    let mut side = 0usize;
    let mut stack = vec![(v, u)];
    while let Some((x, from)) = stack.pop() {
        side += 1;
        stack.extend(tree.neighbors(x).iter().filter(|&&y| y != from).map(|&y| (y, x)));
    }
    Ok(BigInt::from(2 * side - 1))
}
