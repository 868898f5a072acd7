//! Closed form of the minimal resolution of the ideal of `(k+1)`-minors of a generic
//! symmetric `n x n` matrix.

use crate::error::{Error, Result};
use crate::partition::{enumerate_q, schur_dim, Partition};
use crate::resolution::betti::{BettiTable, Provenance};

/// Largest `t` that can contribute: the hooks `(a | a-k+1)` with distinct arms
/// `k-1 <= a <= n-1` fill at most this much weight.
pub fn t_bound(n: usize, k: usize) -> usize {
    let total: usize = (k - 1..n).map(|a| 2 * a + 2 - k).sum();
    total / 2
}

/// Hard ceiling on `t`, independent of the combinatorics.
pub fn t_cap(n: usize) -> usize {
    3 * n * (n + 1) / 2
}

fn check(n: usize, k: usize) -> Result<()> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= k < n, got n={n}, k={k}")));
    }
    Ok(())
}

/// For each `t`, the partitions `lambda` in `Q_{k-1}(2t)` of even rank `2s` put
/// `S_{lambda'} C^n` into homological index `t - k s`, internal degree `t`.
pub fn jpw_closed_form(n: usize, k: usize, max_t: Option<usize>) -> Result<BettiTable> {
    check(n, k)?;
    let t_max = max_t.unwrap_or_else(|| t_bound(n, k)).min(t_cap(n));
    let mut table = BettiTable::new();
    for t in 0..=t_max {
        for lambda in enumerate_q(k - 1, 2 * t)? {
            let rank = lambda.durfee_rank();
            if rank % 2 != 0 {
                continue;
            }
            let shift = k * rank / 2;
            if shift > t {
                return Err(Error::RationalSingularityViolation { t, degree: shift, index: t as i64 - shift as i64 });
            }
            let dual = lambda.conjugate();
            let dim = schur_dim(&dual, n);
            table.add(t - shift, t, Provenance { label: as_label(&dual, n), dim, source: lambda });
        }
    }
    Ok(table)
}

fn as_label(p: &Partition, n: usize) -> Vec<i64> {
    (0..n).map(|i| p.part(i) as i64).collect()
}
