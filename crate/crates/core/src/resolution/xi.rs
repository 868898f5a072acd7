//! The bundle `xi` over the base Grassmannian when `r = n` and `k` is even.

use num_bigint::BigUint;
use serde::Serialize;

use crate::bott::BundleSummand;
use crate::error::{Error, Result};
use crate::partition::{exterior_of_sym2, Partition};
use crate::weyl::check_family;

/// One irreducible summand of `Λ^t xi` and the partition that produced it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct XiSummand {
    pub summand: BundleSummand,
    pub source: Partition,
}

/// `xi = Sym^2 Q` on `GL_n / P_u` with `k = 2u`, where `Q` is the rank `n-u` quotient.
/// Its exterior powers are completely reducible.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct BundleDescription {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// Rank of the tautological subbundle, the cut of the base.
    pub sub_rank: usize,
    pub quotient_rank: usize,
    pub rank: usize,
}

impl BundleDescription {
    /// `Λ^t xi = ⊕ S_lambda Q` over `lambda` in `Q_1(2t)` with at most `n-u` rows.
    pub fn exterior_power(&self, t: usize) -> Vec<XiSummand> {
        exterior_of_sym2(t, self.quotient_rank)
            .into_iter()
            .map(|(lambda, mult)| {
                let mut quotient: Vec<i64> = vec![0; self.quotient_rank];
                for (slot, &p) in quotient.iter_mut().rev().zip(lambda.parts()) {
                    *slot = -(p as i64);
                }
                XiSummand {
                    summand: BundleSummand {
                        quotient,
                        sub: vec![0; self.sub_rank],
                        multiplicity: BigUint::from(mult),
                    },
                    source: lambda,
                }
            })
            .collect()
    }

    pub fn summands(&self) -> Vec<XiSummand> {
        self.exterior_power(1)
    }
}

pub fn build_xi_description(n: usize, k: usize, r: usize) -> Result<BundleDescription> {
    check_family(n, k, r)?;
    if r != n {
        return Err(Error::Unsupported(format!(
            "r = {r} < n = {n}: xi is not completely reducible over the base, no closed form"
        )));
    }
    if k % 2 != 0 {
        return Err(Error::Unsupported(format!(
            "k = {k} is odd: the enlarged space T_w needs k = 2u"
        )));
    }
    let u = k / 2;
    let quotient_rank = n - u;
    let rank = quotient_rank * (quotient_rank + 1) / 2;
    Ok(BundleDescription { n, k, r, sub_rank: u, quotient_rank, rank })
}
