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

//! Hitting times into the far end of a tadpole's tail.
//!
//! With `H = 2k + 2l − 1` the time from the end's neighbor, a tail vertex at
//! distance `t` from the end needs `t·H − t(t−1)` steps. The junction sits at
//! distance `l`. On the cycle the values fall off quadratically from the
//! vertex (or pair of vertices, for odd `k`) farthest from the junction:
//! `h_far − s²` for even `k` and `h_far − s(s+1)` for odd `k`, where `s` is the
//! cycle distance to the farthest vertex. `h_far` is pinned by matching the
//! junction's value.

use num_bigint::BigInt;

use super::{invalid, FormulaError};
use crate::graph::GraphError;

fn check(k: usize, l: usize) -> Result<(), FormulaError> {
    if k < 3 || l < 1 {
        return Err(invalid("tadpole needs k >= 3 and l >= 1"));
    }
    Ok(())
}

/// `2k + 2l − 1`, from the tail end's only neighbor to the tail end.
pub fn tadpole_end_ht(k: usize, l: usize) -> Result<BigInt, FormulaError> {
    check(k, l)?;
    Ok(BigInt::from(2 * k + 2 * l - 1))
}

fn line_value(end_ht: &BigInt, t: usize) -> BigInt {
    let t_big = BigInt::from(t);
    &t_big * end_ht - &t_big * (t_big.clone() - 1)
}

/// Hitting time from vertex `w` of `Tadpole{k, l}` to the tail end `k + l − 1`.
pub fn tadpole_ht_to_end(k: usize, l: usize, w: usize) -> Result<BigInt, FormulaError> {
    let end_ht = tadpole_end_ht(k, l)?;
    let n = k + l;
    if w >= n {
        return Err(GraphError::VertexOutOfRange { vertex: w, n }.into());
    }
    if w >= k {
        return Ok(line_value(&end_ht, n - 1 - w));
    }
    let junction = line_value(&end_ht, l);
    let from_junction = w.min(k - w);
    let half = k / 2;
    let s = BigInt::from(half - from_junction);
    let half = BigInt::from(half);
    Ok(if k.is_multiple_of(2) {
        // farthest vertex sits at distance k/2 from the junction
        junction + &half * &half - &s * &s
    } else {
        // two farthest vertices, each (k−1)/2 from the junction
        junction + &half * (&half + 1) - &s * (&s + 1)
    })
}
