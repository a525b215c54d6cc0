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

// Hitting times into the end of a tadpole's tail, every start vertex.
//
//     cargo run --example tadpole

use std::error::Error;

use hitwalk::closed_forms::{tadpole_end_ht, tadpole_ht_to_end};
use hitwalk::family::tadpole_end;
use hitwalk::solver::{hitting_times_to, render_rational};
use hitwalk::{BigRational, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    for (k, l) in [(4, 3), (5, 3), (3, 1)] {
        let g = FamilySpec::Tadpole { k, l }.generate()?;
        let end = tadpole_end(k, l);
        let solved = hitting_times_to::<BigRational>(&g, end)?;
        println!("Tadpole{{k={k}, l={l}}}: neighbor -> end = {}", tadpole_end_ht(k, l)?);
        for w in 0..g.n() {
            let formula = BigRational::from_integer(tadpole_ht_to_end(k, l, w)?);
            let place = if w < k { "cycle" } else { "tail " };
            println!("  {place} {w:>2} -> {end}: {}", render_rational(&formula));
            assert_eq!(solved.values[w].finite(), Some(&formula));
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
