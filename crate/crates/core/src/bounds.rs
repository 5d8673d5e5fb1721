//! McMullen's upper bound function and the run-statistic checks built on it.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::pareto::RunStats;

/// `C(n, r)`, zero when `r < 0` or `n < r`.
pub fn binomial(n: i64, r: i64) -> BigUint {
    if r < 0 || n < r {
        return BigUint::zero();
    }
    let r = r.min(n - r) as u64;
    let n = n as u64;
    let mut acc = BigUint::one();
    for step in 0..r {
        acc = acc * BigUint::from(n - step) / BigUint::from(step + 1);
    }
    acc
}

/// `U(m, k) = C(m - ⌈k/2⌉, ⌊k/2⌋) + C(m - ⌊k/2⌋ - 1, ⌈k/2⌉ - 1)`, the number of
/// facets of a cyclic `k`-polytope with `m` vertices.
pub fn upper_bound(m: u64, k: u64) -> BigUint {
    let (m, k) = (m as i64, k as i64);
    let floor = k / 2;
    let ceil = k - floor;
    binomial(m - ceil, floor) + binomial(m - floor - 1, ceil - 1)
}

/// Outcome of [`check_run`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub bound: u64,
    /// `m <= U(n + d, d)`.
    pub nontrivial_within_bound: bool,
    /// `m + d <= U(n + d, d)`. Reported only; it can fail on valid runs.
    pub all_within_bound: bool,
    /// `scalarizations == n + m`.
    pub calls_match: bool,
}

impl BoundCheck {
    pub fn passed(&self) -> bool {
        self.nontrivial_within_bound && self.calls_match
    }
}

/// Checks a finished run against the upper bound theorem and the iteration count.
pub fn check_run(stats: &RunStats, d: usize) -> BoundCheck {
    let bound = upper_bound((stats.n + d) as u64, d as u64);
    let m = BigUint::from(stats.m);
    BoundCheck {
        bound: u64::try_from(&bound).unwrap_or(u64::MAX),
        nontrivial_within_bound: m <= bound,
        all_within_bound: m + BigUint::from(d) <= bound,
        calls_match: stats.scalarization_calls == (stats.n + stats.m) as u64,
    }
}
