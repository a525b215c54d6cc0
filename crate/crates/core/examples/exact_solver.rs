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

// Exact and floating point hitting times from the linear system.
//
//     cargo run --example exact_solver

use std::error::Error;

use hitwalk::solver::{
    all_pairs, expected_return_time, hitting_time, hitting_times_to, render_float,
    render_rational, return_time_via_neighbors,
};
use hitwalk::{BigRational, FamilySpec, Graph, HittingTime};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // Every hitting time into vertex 0 of the 3x3 grid, both backends.
    let grid = FamilySpec::Grid { d: 2, m: 3 }.generate()?;
    let exact = hitting_times_to::<BigRational>(&grid, 4)?;
    let float = hitting_times_to::<f64>(&grid, 4)?;
    println!("3x3 grid, into the center:");
    for (v, (e, f)) in exact.values.iter().zip(&float.values).enumerate() {
        if let (HittingTime::Finite(e), HittingTime::Finite(f)) = (e, f) {
            println!("  {v} -> 4: {:>8}  {}", render_rational(e), render_float(*f));
        }
    }

    // Hitting times are not symmetric.
    let path = FamilySpec::Path { n: 4 }.generate()?;
    let columns = all_pairs::<BigRational>(&path)?;
    println!("\npath on 4 vertices (row = source, column = target):");
    for source in 0..path.n() {
        let row: Vec<String> = columns
            .iter()
            .map(|col| render_rational(col.values[source].finite().unwrap()))
            .collect();
        println!("  {}", row.join("\t"));
    }

    // Vertices in another component never arrive.
    let split = Graph::from_edges(4, &[(0, 1), (2, 3)])?;
    println!(
        "\n0 -> 3 on two disjoint edges: {:?}",
        hitting_time::<BigRational>(&split, 0, 3)?
    );

    let cube = FamilySpec::Hypercube { d: 3 }.generate()?;
    println!(
        "\nreturn time to a 3-cube vertex: 2m/deg = {}, first-step route = {}",
        render_rational(&expected_return_time(&cube, 0)?),
        render_rational(&return_time_via_neighbors::<BigRational>(&cube, 0)?)
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
