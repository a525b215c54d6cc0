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

// Generate each graph family and print it in the edge list format.
//
//     cargo run --example graph_families

use std::error::Error;

use hitwalk::family::{grid_coordinates, tadpole_end, tadpole_end_neighbor};
use hitwalk::format::{parse_graph, serialize_graph};
use hitwalk::FamilySpec;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let specs = [
        FamilySpec::Path { n: 4 },
        FamilySpec::Cycle { n: 5 },
        FamilySpec::Grid { d: 2, m: 3 },
        FamilySpec::Hypercube { d: 3 },
        FamilySpec::Star { leaves: 4 },
        FamilySpec::CompleteDaryTree { d: 2, h: 2 },
        FamilySpec::Tadpole { k: 4, l: 2 },
        FamilySpec::TreeFromParents {
            parents: vec![None, Some(0), Some(0), Some(2), Some(2)],
        },
    ];
    for spec in &specs {
        let g = spec.generate()?;
        println!("{spec:?}: {} vertices, {} edges", g.n(), g.m());
        let text = serialize_graph(&g);
        assert_eq!(parse_graph(&text)?, g);
    }

    let grid = FamilySpec::Grid { d: 2, m: 3 }.generate()?;
    println!("\n3x3 grid, vertex 5 sits at {:?}", grid_coordinates(5, 2, 3));
    println!("{}", serialize_graph(&grid));

    let (k, l) = (4, 2);
    println!(
        "Tadpole{{k={k}, l={l}}}: junction 0, tail end {}, its neighbor {}",
        tadpole_end(k, l),
        tadpole_end_neighbor(k, l)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
