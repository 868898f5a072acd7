//! Assembly of Betti tables from the cohomology of exterior powers of `xi`.

use std::collections::BTreeMap;

use crate::bott::CohomologyAnswer;
use crate::error::{Error, Result};
use crate::partition::{schur_dim_weight, Partition};
use crate::resolution::betti::{BettiTable, Provenance};
use crate::resolution::xi::BundleDescription;

/// A nonzero class of `H^j(Λ^t xi)`: its `GL` label, the multiplicity of that label,
/// and the partition it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CohomologyClass {
    pub label: Vec<i64>,
    pub multiplicity: num_bigint::BigUint,
    pub source: Partition,
}

/// `H^j(Λ^t xi)` for every `j`.
pub type CohomologyByDegree = BTreeMap<usize, Vec<CohomologyClass>>;

/// Places each class of `H^j(Λ^t xi)` at homological index `t - j`, internal degree `t`,
/// for `t = 0..=max_t`. A class with `j > t` means the map is not a rational resolution
/// and is reported as an error.
pub fn assemble<F>(mut oracle: F, max_t: usize) -> Result<BettiTable>
where
    F: FnMut(usize) -> Result<CohomologyByDegree>,
{
    let mut table = BettiTable::new();
    for t in 0..=max_t {
        for (j, classes) in oracle(t)? {
            if j > t {
                return Err(Error::RationalSingularityViolation { t, degree: j, index: t as i64 - j as i64 });
            }
            for c in classes {
                let dim = schur_dim_weight(&c.label)? * &c.multiplicity;
                table.add(t - j, t, Provenance { label: c.label, dim, source: c.source });
            }
        }
    }
    Ok(table)
}

/// Cohomology oracle backed by [`crate::bott::bott`] on the summands of `Λ^t xi`.
pub fn xi_oracle(desc: &BundleDescription) -> impl FnMut(usize) -> Result<CohomologyByDegree> + '_ {
    move |t| {
        let mut out = CohomologyByDegree::new();
        for x in desc.exterior_power(t) {
            if let CohomologyAnswer::Nonzero { degree, label } = x.summand.cohomology()? {
                out.entry(degree).or_default().push(CohomologyClass {
                    label,
                    multiplicity: x.summand.multiplicity.clone(),
                    source: x.source,
                });
            }
        }
        Ok(out)
    }
}

/// The table pushed forward from the enlarged space: every exterior power of `xi`.
pub fn assemble_xi(desc: &BundleDescription) -> Result<BettiTable> {
    assemble(xi_oracle(desc), desc.rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::resolution::jpw::jpw_closed_form;
    use crate::resolution::xi::build_xi_description;

    fn counts(t: &BettiTable) -> Vec<(usize, usize, u64)> {
        t.counts()
            .into_iter()
            .map(|(i, d, m)| (i, d, m.to_u64_digits().first().copied().unwrap_or(0)))
            .collect()
    }

    #[test]
    fn three_two_three() {
        let t = assemble_xi(&build_xi_description(3, 2, 3).unwrap()).unwrap();
        assert_eq!(counts(&t), vec![(0, 0, 1), (0, 1, 3), (1, 2, 3), (1, 3, 1)]);
        assert!(t.contains(&jpw_closed_form(3, 2, None).unwrap()));
    }

    #[test]
    fn four_two_four() {
        let t = assemble_xi(&build_xi_description(4, 2, 4).unwrap()).unwrap();
        assert_eq!(
            counts(&t),
            vec![(0, 0, 1), (0, 1, 6), (1, 2, 15), (1, 3, 10), (2, 3, 10), (2, 4, 15), (3, 5, 6), (3, 6, 1)]
        );
        let jpw = jpw_closed_form(4, 2, None).unwrap();
        assert!(t.contains(&jpw));
        // The even-rank sources recover the closed form exactly.
        let even = t.filter_provenance(|p| p.source.durfee_rank() % 2 == 0);
        assert!(even.same_counts(&jpw));
    }

    #[test]
    fn violation_is_reported() {
        let bad = |t: usize| -> Result<CohomologyByDegree> {
            let mut out = CohomologyByDegree::new();
            if t == 1 {
                out.insert(
                    2,
                    vec![CohomologyClass { label: vec![0, 0], multiplicity: 1u8.into(), source: Partition::empty() }],
                );
            }
            Ok(out)
        };
        assert_eq!(
            assemble(bad, 2),
            Err(Error::RationalSingularityViolation { t: 1, degree: 2, index: -1 })
        );
    }
}
