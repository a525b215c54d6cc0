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

//! Complete `d`-ary trees.
//!
//! Heights and depths count edges from the root, so a tree of height `h` has
//! all its leaves at depth `h`. Two polynomials in `d` carry every hitting
//! time on the tree:
//!
//! ```text
//! f_n(d)   = Σ_{i=0}^{n−1} (2n − 2i)·d^i − n          (f_0 = 0)
//! g_k,m(d) = Σ_{i=0}^{m−1} (2m − 2i)·d^(k−i) − m      (g_k,0 = 0)
//! ```

use num_bigint::BigInt;

use super::{invalid, FormulaError};
use crate::family::FamilySpec;
use crate::graph::GraphError;

fn check_arity(d: usize) -> Result<(), FormulaError> {
    if d < 2 {
        return Err(invalid("arity d must be at least 2"));
    }
    Ok(())
}

pub fn dary_f(n: u32, d: usize) -> Result<BigInt, FormulaError> {
    check_arity(d)?;
    let d = BigInt::from(d);
    let mut sum = BigInt::from(0);
    let mut power = BigInt::from(1);
    for i in 0..n {
        sum += BigInt::from(2 * (n - i)) * &power;
        power *= &d;
    }
    Ok(sum - n)
}

/// Defined for `k ≥ 1` and `0 ≤ m ≤ k`.
pub fn dary_g(k: u32, m: u32, d: usize) -> Result<BigInt, FormulaError> {
    check_arity(d)?;
    if k < 1 || m > k {
        return Err(invalid(format!("g needs k >= 1 and m <= k, got k={k}, m={m}")));
    }
    let d = BigInt::from(d);
    // walk the exponents upward from k − m + 1 to k
    let mut power = d.pow(k - m + 1);
    let mut sum = BigInt::from(0);
    for i in (0..m).rev() {
        sum += BigInt::from(2 * (m - i)) * &power;
        power *= &d;
    }
    Ok(sum - m)
}

fn check_depth(h: u32, l: u32) -> Result<(), FormulaError> {
    if l > h {
        return Err(invalid(format!("distance {l} exceeds the height {h}")));
    }
    Ok(())
}

/// From a vertex at depth `l` to the root: `f_h − f_{h−l}`.
pub fn dary_to_root_ht(d: usize, h: u32, l: u32) -> Result<BigInt, FormulaError> {
    check_depth(h, l)?;
    Ok(dary_f(h, d)? - dary_f(h - l, d)?)
}

/// From the ancestor `l` levels above a leaf down to that leaf:
/// `g_{h,h} − g_{h,h−l}`.
pub fn dary_ancestor_to_leaf_ht(d: usize, h: u32, l: u32) -> Result<BigInt, FormulaError> {
    if h < 1 {
        return Err(invalid("height must be at least 1"));
    }
    check_depth(h, l)?;
    Ok(dary_g(h, h, d)? - dary_g(h, h - l, d)?)
}

/// Level-order parent; `None` for the root.
pub fn dary_parent(v: usize, d: usize) -> Option<usize> {
    (v > 0).then(|| (v - 1) / d)
}

pub fn dary_depth(mut v: usize, d: usize) -> u32 {
    let mut depth = 0;
    while let Some(p) = dary_parent(v, d) {
        v = p;
        depth += 1;
    }
    depth
}

/// Least common ancestor of two level-order ids.
pub fn dary_lca(mut u: usize, mut v: usize, d: usize) -> usize {
    let (mut du, mut dv) = (dary_depth(u, d), dary_depth(v, d));
    while du > dv {
        u = (u - 1) / d;
        du -= 1;
    }
    while dv > du {
        v = (v - 1) / d;
        dv -= 1;
    }
    while u != v {
        u = (u - 1) / d;
        v = (v - 1) / d;
    }
    u
}

/// Hitting time between any two vertices of the complete `d`-ary tree of
/// height `h`, by level-order id:
/// `f_{h−c′} − f_{h−u′} + g_{h,v′} − g_{h,c′}` with `u′`, `v′`, `c′` the
/// depths of `u`, `v` and their least common ancestor.
pub fn dary_ht(d: usize, h: u32, u: usize, v: usize) -> Result<BigInt, FormulaError> {
    check_arity(d)?;
    let n = FamilySpec::CompleteDaryTree { d, h }
        .vertex_count()
        .map_err(|e| invalid(e.to_string()))?;
    for vertex in [u, v] {
        if vertex >= n {
            return Err(GraphError::VertexOutOfRange { vertex, n }.into());
        }
    }
    if u == v {
        return Ok(BigInt::from(0));
    }
    let c = dary_lca(u, v, d);
    let (du, dv, dc) = (dary_depth(u, d), dary_depth(v, d), dary_depth(c, d));
    Ok(dary_f(h - dc, d)? - dary_f(h - du, d)? + dary_g(h, dv, d)? - dary_g(h, dc, d)?)
}
