//! Cohomology of irreducible homogeneous bundles on `GL_n / P_m` by Bott's exchange algorithm.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partition::schur_dim_weight;

/// Integer weight, weakly decreasing on positions `1..m` and on `m+1..n`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct QDominantWeight {
    entries: Vec<i64>,
    cut: usize,
}

impl QDominantWeight {
    pub fn new(entries: Vec<i64>, cut: usize) -> Result<Self> {
        let n = entries.len();
        if cut == 0 || cut >= n {
            return Err(Error::InvalidParameters(format!(
                "cut {cut} must satisfy 1 <= m <= n-1 for n = {n}"
            )));
        }
        let decreasing = |s: &[i64]| s.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing(&entries[..cut]) || !decreasing(&entries[cut..]) {
            return Err(Error::NotQDominant { weight: entries, cut });
        }
        Ok(Self { entries, cut })
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn cut(&self) -> usize {
        self.cut
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }
}

/// Outcome of the algorithm: all cohomology vanishes, or it is concentrated in one degree.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CohomologyAnswer {
    Zero,
    Nonzero { degree: usize, label: Vec<i64> },
}

impl CohomologyAnswer {
    /// Dimension of the nonvanishing group, zero for `Zero`.
    pub fn dimension(&self) -> BigUint {
        match self {
            Self::Zero => BigUint::default(),
            Self::Nonzero { label, .. } => schur_dim_weight(label).expect("labels are dominant"),
        }
    }

    /// Signed contribution `(-1)^j dim H^j` to the Euler characteristic.
    pub fn euler(&self) -> num_bigint::BigInt {
        let d = num_bigint::BigInt::from(self.dimension());
        match self {
            Self::Nonzero { degree, .. } if degree % 2 == 1 => -d,
            _ => d,
        }
    }
}

impl fmt::Display for CohomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Zero => write!(f, "ZERO"),
            Self::Nonzero { degree, label } => {
                let parts: Vec<String> = label.iter().map(ToString::to_string).collect();
                write!(f, "H^{degree} = S_({}) C^{}", parts.join(","), label.len())
            }
        }
    }
}

/// `(a_1, ..., a_{i-1}, a_{i+1} - 1, a_i + 1, a_{i+2}, ..., a_n)` for `1 <= i <= n-1`.
pub fn exchange(alpha: &[i64], i: usize) -> Vec<i64> {
    assert!(i >= 1 && i < alpha.len(), "exchange position {i} out of range");
    let mut out = alpha.to_vec();
    out[i - 1] = alpha[i] - 1;
    out[i] = alpha[i - 1] + 1;
    out
}

pub fn bott(w: &QDominantWeight) -> Result<CohomologyAnswer> {
    let n = w.n();
    let mut cur: Vec<i64> = w.entries[w.cut..].iter().chain(&w.entries[..w.cut]).copied().collect();
    let bound = n * (n - 1) / 2;
    let mut j = 0;
    // Each exchange removes one inversion of cur + rho, so the loop is bounded by `bound`.
    while let Some(i) = (1..n).find(|&i| cur[i - 1] < cur[i]) {
        if cur[i] == cur[i - 1] + 1 {
            return Ok(CohomologyAnswer::Zero);
        }
        cur = exchange(&cur, i);
        j += 1;
        if j > bound {
            return Err(Error::InvariantBreach(format!(
                "Bott algorithm exceeded {bound} exchanges on {:?}",
                w.entries
            )));
        }
    }
    Ok(CohomologyAnswer::Nonzero { degree: j, label: cur })
}

/// An irreducible summand `S_mu Q* ⊗ S_nu R*` with a multiplicity; `nu` has the rank of
/// the tautological subbundle and `mu` the rank of the quotient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BundleSummand {
    pub quotient: Vec<i64>,
    pub sub: Vec<i64>,
    pub multiplicity: BigUint,
}

impl BundleSummand {
    /// The weight handed to [`bott`]: `(nu, mu)` with the cut after `nu`, because the
    /// group acts on the right.
    pub fn weight(&self) -> Result<QDominantWeight> {
        let entries = self.sub.iter().chain(&self.quotient).copied().collect();
        QDominantWeight::new(entries, self.sub.len())
    }

    pub fn cohomology(&self) -> Result<CohomologyAnswer> {
        bott(&self.weight()?)
    }
}

/// Cohomology of a completely reducible bundle on `GL_n / P_m`, grouped by degree;
/// labels within a degree are sorted and merged.
pub fn bundle_cohomology(
    summands: &[BundleSummand],
    n: usize,
    m: usize,
) -> Result<BTreeMap<usize, BTreeMap<Vec<i64>, BigUint>>> {
    let mut out: BTreeMap<usize, BTreeMap<Vec<i64>, BigUint>> = BTreeMap::new();
    for s in summands {
        if s.sub.len() != m || s.quotient.len() + s.sub.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "summand ({:?} | {:?}) does not live on GL_{n}/P_{m}",
                s.quotient, s.sub
            )));
        }
        if let CohomologyAnswer::Nonzero { degree, label } = s.cohomology()? {
            *out.entry(degree).or_default().entry(label).or_default() += &s.multiplicity;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(entries: &[i64], cut: usize) -> CohomologyAnswer {
        bott(&QDominantWeight::new(entries.to_vec(), cut).unwrap()).unwrap()
    }

    #[test]
    fn exchange_examples() {
        assert_eq!(exchange(&[0, 2], 1), vec![1, 1]);
        assert_eq!(exchange(&[0, 1], 1), vec![0, 1]);
        assert_eq!(exchange(&[3, 0, 0], 2), vec![3, -1, 1]);
    }

    #[test]
    fn projective_line() {
        assert_eq!(run(&[0, 0], 1), CohomologyAnswer::Nonzero { degree: 0, label: vec![0, 0] });
        assert_eq!(run(&[1, 0], 1), CohomologyAnswer::Zero);
        assert_eq!(run(&[2, 0], 1), CohomologyAnswer::Nonzero { degree: 1, label: vec![1, 1] });
    }

    #[test]
    fn rejects_non_dominant() {
        assert!(matches!(
            QDominantWeight::new(vec![0, 1, 0], 2),
            Err(Error::NotQDominant { .. })
        ));
        assert!(QDominantWeight::new(vec![0, 1], 0).is_err());
    }

    #[test]
    fn twist_shifts_label() {
        for w in [[3i64, 1, -2, 0], [0, 0, 5, 2], [-1, -1, 2, 2]] {
            let base = run(&[w[0], w[1], w[2].max(w[3]), w[2].min(w[3])], 2);
            let shifted = run(&[w[0] + 4, w[1] + 4, w[2].max(w[3]) + 4, w[2].min(w[3]) + 4], 2);
            match (base, shifted) {
                (CohomologyAnswer::Zero, CohomologyAnswer::Zero) => {}
                (
                    CohomologyAnswer::Nonzero { degree: d0, label: l0 },
                    CohomologyAnswer::Nonzero { degree: d1, label: l1 },
                ) => {
                    assert_eq!(d0, d1);
                    assert_eq!(l0.iter().map(|x| x + 4).collect::<Vec<_>>(), l1);
                }
                other => panic!("twist changed vanishing: {other:?}"),
            }
        }
    }

    #[test]
    fn bundle_convention_on_the_line() {
        // S_(d) Q* has the cohomology of O(d) on P^1.
        for d in -6i64..=6 {
            let s = BundleSummand { quotient: vec![d], sub: vec![0], multiplicity: BigUint::from(1u8) };
            let chi = s.cohomology().unwrap().euler();
            assert_eq!(chi, num_bigint::BigInt::from(d + 1), "d = {d}");
        }
        let table = bundle_cohomology(
            &[BundleSummand { quotient: vec![0], sub: vec![0], multiplicity: BigUint::from(1u8) }],
            2,
            1,
        )
        .unwrap();
        assert_eq!(table.len(), 1);
        assert_eq!(table[&0][&vec![0, 0]], BigUint::from(1u8));
        assert!(bundle_cohomology(&[], 2, 1).unwrap().is_empty());
    }

    #[test]
    fn hypersurface_class() {
        // The degree-two exterior power of the rank-one bundle of the (2,1,2) family.
        let s = BundleSummand { quotient: vec![-3], sub: vec![-1], multiplicity: BigUint::from(1u8) };
        assert_eq!(
            s.cohomology().unwrap(),
            CohomologyAnswer::Nonzero { degree: 1, label: vec![-2, -2] }
        );
    }
}
