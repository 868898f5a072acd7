//! Property suites behind `schubres verify`. Every suite is deterministic in the seed.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bott::{BundleSummand, CohomologyAnswer};
use crate::error::Result;
use crate::partition::{binomial, exterior_of_sym2, partitions_of, schur_dim, weyl_dimension};
use crate::resolution::{jpw_closed_form, minor_generators};
use crate::schubert::plucker::{plucker_closed_form, plucker_minor};
use crate::schubert::symplectic::random_symplectic;
use crate::schubert::{desing_data, opposite_cell_factor, CellPoint, PluckerRange};
use crate::weyl::{
    family_element, smoothness_patterns, tangent_dim_at_id_c, w_max_rep, w_tilde_min_rep, ParabolicMarker,
    WeylElementC,
};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VerifyConfig {
    pub seed: u64,
    /// Random points per parameter triple.
    pub points: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self { seed: 42, points: 200 }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SuiteReport {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    pub first_failure: Option<String>,
}

impl SuiteReport {
    fn new(name: &'static str) -> Self {
        Self { name, cases: 0, failures: 0, first_failure: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.check(false, || format!("{}: {e}", what())),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed() {
            write!(f, "{:<14} pass  {} cases", self.name, self.cases)
        } else {
            write!(
                f,
                "{:<14} FAIL  {}/{} cases failed; first: {}",
                self.name,
                self.failures,
                self.cases,
                self.first_failure.as_deref().unwrap_or("")
            )
        }
    }
}

/// A closed form for the restricted Plücker coordinate at `(i, j)`.
pub type ClosedForm = fn(&CellPoint, usize, usize) -> Result<BigInt>;

fn rng(cfg: &VerifyConfig, salt: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(cfg.seed.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ salt)
}

fn family(n_max: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for n in 2..=n_max {
        for r in 2..=n {
            for k in 1..r {
                out.push((n, k, r));
            }
        }
    }
    out
}

/// Closed form against the expanded minor on random integer points, `n <= 5`.
pub fn plucker_suite(cfg: &VerifyConfig, closed_form: ClosedForm) -> SuiteReport {
    let mut rep = SuiteReport::new("plucker");
    let mut rng = rng(cfg, 1);
    for (n, k, r) in family(5) {
        for _ in 0..cfg.points {
            let p = CellPoint::random(n, k, r, 9, &mut rng).expect("valid family");
            for range in PluckerRange::ALL {
                for (i, j) in range.pairs(n, k, r) {
                    let ok = plucker_minor(&p, i, j).and_then(|m| Ok(m == closed_form(&p, i, j)?));
                    rep.check_result(ok, || format!("({n},{k},{r}) {} ({i},{j})", range.name()));
                }
            }
        }
    }
    rep
}

/// Factorization of random symplectic matrices through the opposite cell.
pub fn factorization_suite(cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("factorization");
    let mut rng = rng(cfg, 2);
    for idx in 0..cfg.points {
        let n = 1 + idx % 4;
        let z = random_symplectic(n, &mut rng);
        match opposite_cell_factor(&z) {
            Ok(f) => {
                rep.check(f.recompose() == z.to_full(), || format!("recomposition, n={n}"));
                rep.check(f.unipotent_identity(), || format!("J L = L^T J, n={n}"));
                rep.check(f.parabolic_identity(), || format!("A^T J E' = J, n={n}"));
                rep.check(f.z1.is_symplectic() && f.z2.is_symplectic(), || format!("factors symplectic, n={n}"));
            }
            Err(e) => rep.check(false, || format!("n={n}: {e}")),
        }
    }
    rep
}

/// Dimension counts for `Λ^t Sym^2` and two independent dimension formulas.
pub fn plethysm_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("plethysm");
    for e in 1..=5 {
        for t in 0..=6 {
            let total: BigUint = exterior_of_sym2(t, e).iter().map(|(l, m)| schur_dim(l, e) * *m).sum();
            rep.check(total == binomial(e * (e + 1) / 2, t), || format!("e={e} t={t}"));
        }
    }
    for size in 0..=10 {
        for l in partitions_of(size) {
            for e in 1..=6 {
                let expected = if l.len() > e {
                    BigUint::default()
                } else {
                    let w: Vec<i64> = (0..e).map(|i| l.part(i) as i64).collect();
                    weyl_dimension(&w).unwrap_or_default()
                };
                rep.check(schur_dim(&l, e) == expected, || format!("{l:?} e={e}"));
            }
        }
    }
    rep
}

/// Euler characteristics of line bundles on projective spaces.
pub fn bott_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("bott");
    for n in 2..=4usize {
        for d in -8i64..=8 {
            let s = BundleSummand { quotient: vec![d], sub: vec![0; n - 1], multiplicity: BigUint::from(1u8) };
            // chi(O(d)) on P^{n-1} is binomial(d+n-1, n-1) as a polynomial in d.
            let mut num = BigInt::from(1);
            let mut den = BigInt::from(1);
            for i in 1..n as i64 {
                num *= BigInt::from(d + i);
                den *= BigInt::from(i);
            }
            let expected = num / den;
            let got = s.cohomology().map(|a| a.euler());
            rep.check_result(got.map(|g| g == expected), || format!("O({d}) on P^{}", n - 1));
        }
    }
    for d in -6i64..=6 {
        let s = BundleSummand { quotient: vec![d], sub: vec![0], multiplicity: BigUint::from(1u8) };
        let expected = match d {
            -1 => CohomologyAnswer::Zero,
            d if d >= 0 => CohomologyAnswer::Nonzero { degree: 0, label: vec![d, 0] },
            d => CohomologyAnswer::Nonzero { degree: 1, label: vec![-1, d + 1] },
        };
        rep.check_result(s.cohomology().map(|a| a == expected), || format!("P^1 degree {d}"));
    }
    rep
}

/// Closed-form tables against the geometry and the explicit minors, `n <= 5`.
pub fn betti_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("betti");
    for n in 2..=5 {
        for k in 1..n {
            let what = || format!("n={n} k={k}");
            let (table, desing, gens) = match (jpw_closed_form(n, k, None), desing_data(n, k, n), minor_generators(n, k)) {
                (Ok(t), Ok(d), Ok(g)) => (t, d, g),
                _ => {
                    rep.check(false, what);
                    continue;
                }
            };
            rep.check(table.length() == desing.codim, || format!("{}: length", what()));
            rep.check(table.rank(1) == BigUint::from(gens.len()), || format!("{}: generators", what()));
            rep.check(table.degrees(1) == vec![k + 1], || format!("{}: generator degree", what()));
            rep.check(table.has_free_start(), || format!("{}: F_0", what()));
            rep.check(table.consistency_check(desing.codim).passes(), || format!("{}: K-polynomial", what()));
        }
    }
    rep
}

/// Smoothness and tangent spaces of `w_max`, `n <= 6`.
pub fn weyl_suite(_cfg: &VerifyConfig) -> SuiteReport {
    let mut rep = SuiteReport::new("weyl");
    let patterns = smoothness_patterns();
    for (n, k, r) in family(6) {
        let what = || format!("({n},{k},{r})");
        let Ok(wmax) = w_max_rep(n, k, r) else {
            rep.check(false, what);
            continue;
        };
        rep.check(wmax.avoids(&patterns), || format!("{}: pattern", what()));
        let ok = WeylElementC::from_full_word(&wmax).and_then(|w| {
            Ok(w.length_c()? == tangent_dim_at_id_c(&w, &ParabolicMarker::borel_c(n))?)
        });
        rep.check_result(ok, || format!("{}: tangent space", what()));
    }
    let example = family_element(5, 2, 4)
        .and_then(|w| w_tilde_min_rep(&w, &ParabolicMarker::p_tilde(5, 2, 4)?))
        .map(|wt| wt.full_word().word()[..8] == [3, 4, 6, 9, 10, 1, 2, 5]);
    rep.check_result(example, || "w~ for (5,2,4)".into());
    rep
}

pub fn run_all(cfg: &VerifyConfig) -> Vec<SuiteReport> {
    run_all_with(cfg, plucker_closed_form)
}

/// As [`run_all`] with a replaceable Plücker closed form.
pub fn run_all_with(cfg: &VerifyConfig, closed_form: ClosedForm) -> Vec<SuiteReport> {
    vec![
        plucker_suite(cfg, closed_form),
        factorization_suite(cfg),
        plethysm_suite(cfg),
        bott_suite(cfg),
        betti_suite(cfg),
        weyl_suite(cfg),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> VerifyConfig {
        VerifyConfig { seed: 7, points: 3 }
    }

    #[test]
    fn all_suites_pass() {
        for rep in run_all(&small()) {
            assert!(rep.passed(), "{rep}");
            assert!(rep.cases > 0);
        }
    }

    #[test]
    fn flipped_sign_is_caught() {
        fn broken(p: &CellPoint, i: usize, j: usize) -> Result<BigInt> {
            let v = plucker_closed_form(p, i, j)?;
            let (n, k, r) = p.params();
            Ok(if i > 2 * n - (r - k) && j <= n { -v } else { v })
        }
        let rep = plucker_suite(&small(), broken);
        assert!(!rep.passed());
        assert!(rep.to_string().contains("FAIL"));
    }

    #[test]
    fn deterministic() {
        assert_eq!(run_all(&small()), run_all(&small()));
    }
}
