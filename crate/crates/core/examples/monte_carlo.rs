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

// Seeded simulation next to the exact answers.
//
//     cargo run --release --example monte_carlo

use std::error::Error;

use hitwalk::monte_carlo::{simulate_hitting_time, simulate_return_time, WalkConfig};
use hitwalk::solver::{expected_return_time, hitting_time};
use hitwalk::{BigRational, FamilySpec};
use num_traits::ToPrimitive;

pub fn run_example() -> Result<(), Box<dyn Error>> {
    let cfg = WalkConfig::new(2024, 50_000);
    let cases = [
        ("3-cube 0 -> 1", FamilySpec::Hypercube { d: 3 }, 0, 1),
        ("4x4 grid 15 -> 0", FamilySpec::Grid { d: 2, m: 4 }, 15, 0),
        ("Tadpole(5,3) 0 -> 7", FamilySpec::Tadpole { k: 5, l: 3 }, 0, 7),
    ];
    for (name, spec, source, target) in cases {
        let g = spec.generate()?;
        let exact = hitting_time::<BigRational>(&g, source, target)?;
        let exact = exact.finite().and_then(ToPrimitive::to_f64).unwrap();
        let est = simulate_hitting_time(&g, source, target, &cfg)?;
        println!(
            "{name}: exact {exact:.4}, simulated {:.4} ± {:.4} (z = {:.2})",
            est.mean,
            est.std_error,
            est.z_score(exact)
        );
    }

    let c5 = FamilySpec::Cycle { n: 5 }.generate()?;
    let est = simulate_return_time(&c5, 0, &cfg)?;
    let exact = expected_return_time(&c5, 0)?.to_f64().unwrap();
    println!("C5 return: exact {exact}, simulated {:.4} ± {:.4}", est.mean, est.std_error);

    // Same seed, same answer.
    let q3 = FamilySpec::Hypercube { d: 3 }.generate()?;
    assert_eq!(
        simulate_hitting_time(&q3, 0, 1, &cfg)?,
        simulate_hitting_time(&q3, 0, 1, &cfg)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
