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

//! Statistical checks run with fixed seeds, so they are deterministic. Each
//! uses a 4-sigma band around the exact value.

use hitwalk::monte_carlo::{
    simulate_hitting_time, simulate_return_time, Stepper, WalkConfig, WalkEstimate,
};
use hitwalk::FamilySpec;

fn within_four_sigma(est: &WalkEstimate, expected: f64) {
    assert!(est.is_valid());
    assert!(
        est.z_score(expected) <= 4.0,
        "mean {} ± {} vs {expected}",
        est.mean,
        est.std_error
    );
}

#[test]
fn cube_neighbor_hitting_time() {
    let g = FamilySpec::Hypercube { d: 3 }.generate().unwrap();
    let est = simulate_hitting_time(&g, 0, 1, &WalkConfig::new(0, 100_000)).unwrap();
    within_four_sigma(&est, 7.0);
    assert_eq!(est.trials_completed, 100_000);
}

#[test]
fn return_times() {
    let c5 = FamilySpec::Cycle { n: 5 }.generate().unwrap();
    within_four_sigma(
        &simulate_return_time(&c5, 2, &WalkConfig::new(0, 100_000)).unwrap(),
        5.0,
    );
    let q3 = FamilySpec::Hypercube { d: 3 }.generate().unwrap();
    within_four_sigma(
        &simulate_return_time(&q3, 0, &WalkConfig::new(0, 100_000)).unwrap(),
        8.0,
    );
}

#[test]
fn neighbor_choice_is_uniform() {
    let g = FamilySpec::Star { leaves: 3 }.generate().unwrap();
    let stepper = Stepper::new(&g);
    let mut rng = WalkConfig::new(7, 1).walk_rng(0);
    let mut counts = [0u32; 4];
    let steps = 1_000_000;
    for _ in 0..steps {
        counts[stepper.step(0, &mut rng).unwrap()] += 1;
    }
    assert_eq!(counts[0], 0);
    for &c in &counts[1..] {
        let freq = c as f64 / steps as f64;
        assert!((freq - 1.0 / 3.0).abs() <= 0.005, "{counts:?}");
    }
}

#[test]
fn walks_are_independent_of_execution_order() {
    let g = FamilySpec::Tadpole { k: 5, l: 3 }.generate().unwrap();
    let cfg = WalkConfig::new(99, 3000);
    let stepper = Stepper::new(&g);
    // replay every walk serially, last walk first
    let mut lengths: Vec<u64> = (0..cfg.trials)
        .rev()
        .map(|i| {
            let mut rng = cfg.walk_rng(i);
            let (mut v, mut steps) = (0, 0);
            while v != 7 {
                v = stepper.step(v, &mut rng).unwrap();
                steps += 1;
            }
            steps
        })
        .collect();
    lengths.sort_unstable();
    let est = simulate_hitting_time(&g, 0, 7, &cfg).unwrap();
    let mean = lengths.iter().sum::<u64>() as f64 / lengths.len() as f64;
    assert_eq!(est.mean, mean);
    assert_eq!(est, simulate_hitting_time(&g, 0, 7, &cfg).unwrap());
}
