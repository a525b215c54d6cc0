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

//! Hitting times of simple random walks on finite undirected graphs.
//!
//! * [`graph`], [`family`], [`format`]: graphs, canonical family generators
//!   and the edge list file format.
//! * [`solver`]: hitting times from the absorbing linear system, exact over
//!   big rationals or in double precision.
//! * [`closed_forms`]: closed-form hitting times for grids, hypercubes, trees,
//!   tadpoles and complete `d`-ary trees.
//! * [`monte_carlo`]: a seeded, parallel random walk simulator.
//! * [`cli`]: the `hitwalk` command line.

pub mod cli;
pub mod closed_forms;
pub mod family;
pub mod format;
pub mod graph;
pub mod monte_carlo;
pub mod solver;

pub use family::FamilySpec;
pub use graph::{Graph, GraphError};
pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use solver::{Backend, HittingTime, HittingVector};
