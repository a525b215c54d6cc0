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

//! Parametric graph families and their canonical vertex labelings.
//!
//! Every generator fixes a labeling so that closed-form results can name
//! their endpoints by id:
//!
//! * `Path`: ids `0..n` along the path. `Cycle`: ids in cyclic order.
//! * `Star`: the center is `0`, leaves are `1..=leaves`.
//! * `Grid`: coordinates `(c_0, ..., c_{d-1})` map to `Σ c_i · m^i`, so the
//!   corner is `0` and its neighbors are `m^i`.
//! * `Hypercube`: ids are bitmasks; two vertices are adjacent iff they differ
//!   in exactly one bit.
//! * `CompleteDaryTree`: level order, root `0`, children of `v` are
//!   `v·d + 1 ..= v·d + d`.
//! * `Tadpole`: cycle ids `0..k` in cyclic order with the junction at `0`,
//!   tail ids `k..k+l` by increasing distance from the cycle. The far end of
//!   the tail is `k + l - 1`.
//! * `TreeFromParents`: vertex `i` is joined to `parents[i]`; vertex `0` is the
//!   root and carries no parent.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid {family} parameters: {reason}")]
    InvalidParameters { family: &'static str, reason: String },
    #[error("{family} is too large to index with machine integers")]
    TooLarge { family: &'static str },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    /// `d`-dimensional grid with side length `m`.
    Grid { d: u32, m: usize },
    Hypercube { d: u32 },
    Star { leaves: usize },
    /// `h` is the edge distance from the root to every leaf.
    CompleteDaryTree { d: usize, h: u32 },
    /// `k` cycle vertices and `l` tail vertices, the junction not included.
    Tadpole { k: usize, l: usize },
    /// `parents[0]` must be `None`; every other entry names its parent.
    TreeFromParents { parents: Vec<Option<usize>> },
}

fn invalid(family: &'static str, reason: impl Into<String>) -> FamilyError {
    FamilyError::InvalidParameters {
        family,
        reason: reason.into(),
    }
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Path { .. } => "path",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Grid { .. } => "grid",
            FamilySpec::Hypercube { .. } => "hypercube",
            FamilySpec::Star { .. } => "star",
            FamilySpec::CompleteDaryTree { .. } => "dary",
            FamilySpec::Tadpole { .. } => "tadpole",
            FamilySpec::TreeFromParents { .. } => "tree",
        }
    }

    /// Checks the parameter bounds and returns the vertex count.
    pub fn vertex_count(&self) -> Result<usize, FamilyError> {
        let family = self.name();
        let too_large = || FamilyError::TooLarge { family };
        match *self {
            FamilySpec::Path { n } if n < 1 => Err(invalid(family, "n must be at least 1")),
            FamilySpec::Path { n } => Ok(n),
            FamilySpec::Cycle { n } if n < 3 => Err(invalid(family, "n must be at least 3")),
            FamilySpec::Cycle { n } => Ok(n),
            FamilySpec::Grid { d, m } => {
                if d < 1 || m < 2 {
                    return Err(invalid(family, "need d >= 1 and m >= 2"));
                }
                m.checked_pow(d).ok_or_else(too_large)
            }
            FamilySpec::Hypercube { d } => {
                if d < 1 {
                    return Err(invalid(family, "d must be at least 1"));
                }
                1usize.checked_shl(d).filter(|&n| n > 0).ok_or_else(too_large)
            }
            FamilySpec::Star { leaves } if leaves < 1 => {
                Err(invalid(family, "need at least one leaf"))
            }
            FamilySpec::Star { leaves } => leaves.checked_add(1).ok_or_else(too_large),
            FamilySpec::CompleteDaryTree { d, h } => {
                if d < 2 {
                    return Err(invalid(family, "arity d must be at least 2"));
                }
                // 1 + d + ... + d^h
                let mut total = 0usize;
                let mut level = 1usize;
                for depth in 0..=h {
                    total = total.checked_add(level).ok_or_else(too_large)?;
                    if depth < h {
                        level = level.checked_mul(d).ok_or_else(too_large)?;
                    }
                }
                Ok(total)
            }
            FamilySpec::Tadpole { k, l } => {
                if k < 3 || l < 1 {
                    return Err(invalid(family, "need k >= 3 and l >= 1"));
                }
                k.checked_add(l).ok_or_else(too_large)
            }
            FamilySpec::TreeFromParents { ref parents } => {
                if parents.is_empty() {
                    return Err(invalid(family, "a tree needs at least one vertex"));
                }
                if parents[0].is_some() {
                    return Err(invalid(family, "vertex 0 is the root and has no parent"));
                }
                if let Some(i) = parents.iter().skip(1).position(Option::is_none) {
                    return Err(invalid(family, format!("vertex {} has no parent", i + 1)));
                }
                Ok(parents.len())
            }
        }
    }

    /// Builds the graph under the canonical labeling.
    pub fn generate(&self) -> Result<Graph, FamilyError> {
        let n = self.vertex_count()?;
        let edges: Vec<(usize, usize)> = match *self {
            FamilySpec::Path { .. } => (1..n).map(|v| (v - 1, v)).collect(),
            FamilySpec::Cycle { .. } => (0..n).map(|v| (v, (v + 1) % n)).collect(),
            FamilySpec::Grid { d, m } => {
                let mut edges = Vec::new();
                for v in 0..n {
                    let mut stride = 1;
                    for _ in 0..d {
                        if (v / stride) % m + 1 < m {
                            edges.push((v, v + stride));
                        }
                        stride *= m;
                    }
                }
                edges
            }
            FamilySpec::Hypercube { d } => (0..n)
                .flat_map(|v| (0..d).map(move |bit| (v, v ^ (1 << bit))))
                .filter(|&(u, v)| u < v)
                .collect(),
            FamilySpec::Star { .. } => (1..n).map(|v| (0, v)).collect(),
            FamilySpec::CompleteDaryTree { d, .. } => (1..n).map(|v| ((v - 1) / d, v)).collect(),
            FamilySpec::Tadpole { k, .. } => (0..k)
                .map(|v| (v, (v + 1) % k))
                .chain(std::iter::once((0, k)))
                .chain((k + 1..n).map(|v| (v - 1, v)))
                .collect(),
            FamilySpec::TreeFromParents { ref parents } => parents
                .iter()
                .enumerate()
                .filter_map(|(v, p)| p.map(|p| (p, v)))
                .collect(),
        };
        let g = Graph::from_edges(n, &edges)?;
        if matches!(self, FamilySpec::TreeFromParents { .. }) && !g.is_connected() {
            return Err(invalid(self.name(), "parent links contain a cycle"));
        }
        Ok(g)
    }
}

/// Coordinates of a grid vertex, least significant axis first.
pub fn grid_coordinates(id: usize, d: u32, m: usize) -> Vec<usize> {
    let mut rest = id;
    (0..d)
        .map(|_| {
            let c = rest % m;
            rest /= m;
            c
        })
        .collect()
}

/// Far end of the tadpole tail.
pub fn tadpole_end(k: usize, l: usize) -> usize {
    k + l - 1
}

/// The unique neighbor of the tail end; the junction when `l == 1`.
pub fn tadpole_end_neighbor(k: usize, l: usize) -> usize {
    if l >= 2 {
        k + l - 2
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn generate(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn small_grids_and_cubes() {
        let g = generate(FamilySpec::Grid { d: 2, m: 2 });
        assert_eq!((g.n(), g.m()), (4, 4));
        assert!(g.degrees().iter().all(|&k| k == 2));
        let g = generate(FamilySpec::Grid { d: 2, m: 3 });
        assert_eq!((g.n(), g.m()), (9, 12));
        let g = generate(FamilySpec::Hypercube { d: 3 });
        assert_eq!((g.n(), g.m()), (8, 12));
        assert!(g.has_edge(0, 1));
    }

    #[test]
    fn tadpole_shape() {
        let g = generate(FamilySpec::Tadpole { k: 3, l: 2 });
        assert_eq!((g.n(), g.m()), (5, 5));
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(tadpole_end(3, 2)), 1);
        assert_eq!(tadpole_end_neighbor(3, 2), 3);
        assert_eq!(tadpole_end_neighbor(3, 1), 0);
        let g = generate(FamilySpec::Tadpole { k: 4, l: 1 });
        assert!(g.has_edge(0, 4));
    }

    #[test]
    fn dary_tree_shape() {
        let g = generate(FamilySpec::CompleteDaryTree { d: 3, h: 2 });
        assert_eq!(g.n(), 13);
        assert_eq!(g.neighbors(1), &[0, 4, 5, 6]);
        assert_eq!(generate(FamilySpec::CompleteDaryTree { d: 2, h: 0 }).n(), 1);
    }

    #[test]
    fn rejects_bad_parameters() {
        for spec in [
            FamilySpec::Path { n: 0 },
            FamilySpec::Cycle { n: 2 },
            FamilySpec::Grid { d: 0, m: 3 },
            FamilySpec::Grid { d: 2, m: 1 },
            FamilySpec::Hypercube { d: 0 },
            FamilySpec::Star { leaves: 0 },
            FamilySpec::CompleteDaryTree { d: 1, h: 2 },
            FamilySpec::Tadpole { k: 2, l: 1 },
            FamilySpec::Tadpole { k: 3, l: 0 },
            FamilySpec::TreeFromParents { parents: vec![] },
            FamilySpec::TreeFromParents { parents: vec![Some(0)] },
            FamilySpec::TreeFromParents { parents: vec![None, None] },
        ] {
            assert!(
                matches!(spec.generate(), Err(FamilyError::InvalidParameters { .. })),
                "{spec:?}"
            );
        }
        assert!(matches!(
            FamilySpec::Hypercube { d: 200 }.generate(),
            Err(FamilyError::TooLarge { .. })
        ));
    }

    #[test]
    fn trees_from_parents() {
        let spec = FamilySpec::TreeFromParents {
            parents: vec![None, Some(0), Some(0), Some(1)],
        };
        assert!(generate(spec).is_tree());
        // 1 -> 2 -> 1 never reaches the root
        let cyclic = FamilySpec::TreeFromParents {
            parents: vec![None, Some(2), Some(1)],
        };
        assert!(cyclic.generate().is_err());
        let triangle = FamilySpec::TreeFromParents {
            parents: vec![None, Some(3), Some(1), Some(2)],
        };
        assert!(matches!(
            triangle.generate(),
            Err(FamilyError::InvalidParameters { .. })
        ));
        let self_parent = FamilySpec::TreeFromParents {
            parents: vec![None, Some(1)],
        };
        assert!(matches!(
            self_parent.generate(),
            Err(FamilyError::Graph(GraphError::SelfLoop(1)))
        ));
    }
}
