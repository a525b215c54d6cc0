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

// Hitting times on trees: the `2n − 1` neighbor rule and the complete
// `d`-ary tree formulas.
//
//     cargo run --example trees

use std::error::Error;

use hitwalk::closed_forms::{
    dary_ancestor_to_leaf_ht, dary_f, dary_g, dary_ht, dary_to_root_ht, tree_neighbor_ht,
};
use hitwalk::solver::all_pairs;
use hitwalk::{BigRational, FamilySpec};

pub fn run_example() -> Result<(), Box<dyn Error>> {
    // 0 is the root; 2 has children 3 and 4, and 4 has child 5.
    let tree = FamilySpec::TreeFromParents {
        parents: vec![None, Some(0), Some(0), Some(2), Some(2), Some(4)],
    }
    .generate()?;
    let columns = all_pairs::<BigRational>(&tree)?;
    for (v, u) in [(2, 0), (0, 2), (4, 2), (5, 4)] {
        let formula = tree_neighbor_ht(&tree, v, u)?;
        println!("tree {v} -> {u}: 2n − 1 = {formula}");
        assert_eq!(
            columns[u].values[v].finite(),
            Some(&BigRational::from_integer(formula))
        );
    }

    let (d, h) = (3, 3);
    println!("\ncomplete {d}-ary tree of height {h}");
    for n in 0..=h {
        println!("  f_{n}({d}) = {}", dary_f(n, d)?);
    }
    for m in 0..=h {
        println!("  g_{h},{m}({d}) = {}", dary_g(h, m, d)?);
    }
    for l in 0..=h {
        println!(
            "  depth {l} -> root: {}, ancestor {l} above a leaf -> leaf: {}",
            dary_to_root_ht(d, h, l)?,
            dary_ancestor_to_leaf_ht(d, h, l)?
        );
    }

    let g = FamilySpec::CompleteDaryTree { d, h }.generate()?;
    let columns = all_pairs::<BigRational>(&g)?;
    let mut checked = 0;
    for u in 0..g.n() {
        for v in 0..g.n() {
            let formula = BigRational::from_integer(dary_ht(d, h, u, v)?);
            assert_eq!(columns[v].values[u].finite(), Some(&formula));
            checked += 1;
        }
    }
    println!("  LCA formula matches the solver on all {checked} ordered pairs");
    println!("  e.g. leaf 13 -> leaf 39: {}", dary_ht(d, h, 13, 39)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run_example()
}
