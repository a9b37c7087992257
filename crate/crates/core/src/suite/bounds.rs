use num_rational::Ratio;
use serde::Serialize;

use crate::error::{Error, Result};

/// Depth bounds for a non-complete graph on `n` vertices with connectivity `k`.
///
/// With `c = ⌈k / (2(n − k − 1))⌉`: `depth ≥ c + 1`, symbolic square depth
/// `≥ c`, ordinary square depth `≥ c − 1`, and `depth ≤ k + 1`. A graph with
/// depth 2 has `k ≤ ⌊(2n − 2)/3⌋`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub n: usize,
    pub kappa: usize,
    pub upper: i64,
    pub lower_depth: i64,
    pub lower_symbolic: i64,
    pub lower_square: i64,
    pub depth2_kappa_cap: i64,
}

pub fn bounds(n: usize, k: usize) -> Result<BoundSet> {
    if n < 2 || k > n - 2 {
        return Err(Error::Invalid(format!("need 0 ≤ k ≤ n − 2, got n = {n}, k = {k}")));
    }
    let c = k.div_ceil(2 * (n - k - 1)) as i64;
    Ok(BoundSet {
        n,
        kappa: k,
        upper: k as i64 + 1,
        lower_depth: c + 1,
        lower_symbolic: c,
        lower_square: c - 1,
        depth2_kappa_cap: (2 * n as i64 - 2) / 3,
    })
}

/// `3k − 2n + 3 ≥ k / (2(n − k − 1)) − 1`, in exact rationals, on the domain
/// `0 ≤ k ≤ n − 2`, `3k > 2n − 2`.
pub fn lemma_arithmetic(n: usize, k: usize) -> Result<bool> {
    if n < 2 || k > n - 2 || 3 * k <= 2 * n - 2 {
        return Err(Error::Invalid(format!(
            "need 0 ≤ k ≤ n − 2 and 3k > 2n − 2, got n = {n}, k = {k}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    let lhs = Ratio::from_integer(3 * k - 2 * n + 3);
    let rhs = Ratio::new(k, 2 * (n - k - 1)) - 1;
    Ok(lhs >= rhs)
}

/// Every `(n, k)` in the lemma's domain with `n ≤ n_max`, paired with the verdict.
pub fn lemma_sweep(n_max: usize) -> Vec<((usize, usize), bool)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for k in 0..=n - 2 {
            if 3 * k > 2 * n - 2 {
                out.push(((n, k), lemma_arithmetic(n, k).expect("inside domain")));
            }
        }
    }
    out
}
