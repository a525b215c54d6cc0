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

//! Plain-text edge list format.
//!
//! ```text
//! n m
//! u v
//! ...
//! ```
//!
//! The header gives the vertex and edge counts, followed by exactly `m` edge
//! lines with `u < v`, 0-indexed, in lexicographic order. Every line ends in a
//! newline. The parser accepts edges in any order and orientation and ignores
//! blank lines; the serializer always writes the canonical form.

use std::fmt::Write;

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("malformed header: expected \"n m\", got {0:?}")]
    Header(String),
    #[error("line {line}: malformed edge {text:?}")]
    Edge { line: usize, text: String },
    #[error("declared {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_pair(text: &str) -> Option<(usize, usize)> {
    let mut fields = text.split_whitespace();
    let a = fields.next()?.parse().ok()?;
    let b = fields.next()?.parse().ok()?;
    fields.next().is_none().then_some((a, b))
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty());
    let (n, m) = match lines.next() {
        Some((_, header)) => {
            parse_pair(header).ok_or_else(|| FormatError::Header(header.to_string()))?
        }
        None => return Err(FormatError::Header(String::new())),
    };
    let mut edges = Vec::with_capacity(m);
    for (index, line) in lines {
        let edge = parse_pair(line).ok_or_else(|| FormatError::Edge {
            line: index + 1,
            text: line.to_string(),
        })?;
        edges.push(edge);
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCount {
            declared: m,
            found: edges.len(),
        });
    }
    Ok(Graph::from_edges(n, &edges)?)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").expect("writing to a String cannot fail");
    }
    out
}
