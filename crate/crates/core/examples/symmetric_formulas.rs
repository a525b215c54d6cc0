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

// The `2e/k − 1` neighbor formula and its grid and hypercube cases, checked
// against the solver.
//
//     cargo run --example symmetric_formulas

use std::error::Error;

use hitwalk::closed_forms::{grid_corner_ht, hypercube_neighbor_ht, symmetric_neighbor_ht};
use hitwalk::solver::{hitting_time, render_rational};
use hitwalk::{BigRational, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    println!("grid: neighbor of the corner -> corner");
    for d in 1..=3 {
        for m in 2..=4 {
            let g = FamilySpec::Grid { d, m }.generate()?;
            let solved = hitting_time::<BigRational>(&g, 1, 0)?;
            let formula = grid_corner_ht(d, m as u64)?;
            println!("  d={d} m={m}: formula {formula}, solver {:?}", solved.finite().map(render_rational));
            assert_eq!(solved.finite(), Some(&BigRational::from_integer(formula)));
        }
    }

    println!("hypercube: any neighbor -> vertex 0");
    for d in 1..=6 {
        let g = FamilySpec::Hypercube { d }.generate()?;
        let solved = hitting_time::<BigRational>(&g, 1 << (d - 1), 0)?;
        let formula = hypercube_neighbor_ht(d)?;
        println!("  d={d}: {formula}");
        assert_eq!(solved.finite(), Some(&BigRational::from_integer(formula)));
    }

    println!("cycles: 2n/2 − 1 = n − 1");
    for n in 3..=8 {
        let g = FamilySpec::Cycle { n }.generate()?;
        let formula = symmetric_neighbor_ht(n as u64, 2)?;
        assert_eq!(hitting_time::<BigRational>(&g, 1, 0)?.finite(), Some(&formula));
        println!("  C{n}: {}", render_rational(&formula));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
