//! Partitions, Frobenius coordinates, the hook families `Q_c(2t)` and dimensions of
//! Schur modules.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of positive parts; the empty partition is allowed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidParameters(format!("{parts:?} is not weakly decreasing")));
        }
        if parts.last() == Some(&0) {
            return Err(Error::InvalidParameters(format!("{parts:?} has zero parts")));
        }
        Ok(Self { parts })
    }

    /// Sorts and drops zero entries.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts (rows of the diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Self {
        let cols = self.part(0);
        let parts = (1..=cols)
            .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
            .collect();
        Self { parts }
    }

    /// Side of the largest square inside the diagram.
    pub fn durfee_rank(&self) -> usize {
        self.parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p > i)
            .count()
    }

    pub fn to_hooks(&self) -> FrobeniusHooks {
        let s = self.durfee_rank();
        let conj = self.conjugate();
        FrobeniusHooks {
            arms: (0..s).map(|i| self.parts[i] - i - 1).collect(),
            legs: (0..s).map(|i| conj.parts[i] - i - 1).collect(),
        }
    }

    /// Hook length of the cell in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize, conj: &Partition) -> usize {
        (self.parts[i] - j) + (conj.parts[j] - i) - 1
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn conjugate(l: &Partition) -> Partition {
    l.conjugate()
}

pub fn durfee_rank(l: &Partition) -> usize {
    l.durfee_rank()
}

/// Frobenius coordinates `(a_1, ..., a_s | b_1, ..., b_s)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FrobeniusHooks {
    arms: Vec<usize>,
    legs: Vec<usize>,
}

impl FrobeniusHooks {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let strict = |v: &[usize]| v.windows(2).all(|w| w[0] > w[1]);
        if arms.len() != legs.len() || !strict(&arms) || !strict(&legs) {
            return Err(Error::InvalidParameters(format!(
                "({arms:?} | {legs:?}) is not a Frobenius symbol"
            )));
        }
        Ok(Self { arms, legs })
    }

    pub fn arms(&self) -> &[usize] {
        &self.arms
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    pub fn size(&self) -> usize {
        self.arms.iter().zip(&self.legs).map(|(a, b)| a + b + 1).sum()
    }

    pub fn to_partition(&self) -> Partition {
        let s = self.rank();
        let mut parts: Vec<usize> = (0..s).map(|i| self.arms[i] + i + 1).collect();
        // Below the Durfee square, row i (1-based) has one box for each leg reaching it.
        let depth = self.legs.first().map_or(0, |b| b + 1);
        for i in s + 1..=depth {
            parts.push(
                self.legs
                    .iter()
                    .enumerate()
                    .filter(|&(j, &b)| b + j + 1 >= i)
                    .count(),
            );
        }
        Partition { parts }
    }
}

impl fmt::Display for FrobeniusHooks {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.arms.iter().map(ToString::to_string).collect();
        let b: Vec<String> = self.legs.iter().map(ToString::to_string).collect();
        write!(f, "({} | {})", a.join(","), b.join(","))
    }
}

pub fn to_hooks(l: &Partition) -> FrobeniusHooks {
    l.to_hooks()
}

pub fn from_hooks(h: &FrobeniusHooks) -> Partition {
    h.to_partition()
}

/// All partitions of `m` in reverse lexicographic order.
pub fn partitions_of(m: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill_partitions(m, m, &mut cur, &mut out);
    out
}

fn fill_partitions(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(max)).rev() {
        cur.push(p);
        fill_partitions(rest - p, p, cur, out);
        cur.pop();
    }
}

type QCache = HashMap<(usize, usize), Vec<Partition>>;

fn q_cache() -> &'static Mutex<QCache> {
    static CACHE: OnceLock<Mutex<QCache>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `Q_c(weight)`: partitions of `weight` whose hooks all satisfy `a_j = b_j + c`.
///
/// Built directly from strictly decreasing legs, since each hook `(b + c | b)` has
/// size `2b + c + 1`.
pub fn enumerate_q(c: usize, weight: usize) -> Result<Vec<Partition>> {
    if weight % 2 != 0 {
        return Err(Error::OddWeight(weight as u32));
    }
    if let Some(hit) = q_cache().lock().expect("cache poisoned").get(&(c, weight)) {
        return Ok(hit.clone());
    }
    let mut out = Vec::new();
    let mut legs = Vec::new();
    collect_legs(c, weight, usize::MAX, &mut legs, &mut out);
    out.sort();
    q_cache()
        .lock()
        .expect("cache poisoned")
        .insert((c, weight), out.clone());
    Ok(out)
}

fn collect_legs(c: usize, rest: usize, bound: usize, legs: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        let arms = legs.iter().map(|b| b + c).collect();
        out.push(FrobeniusHooks { arms, legs: legs.clone() }.to_partition());
        return;
    }
    if rest < c + 1 {
        return;
    }
    let upper = ((rest - c - 1) / 2 + 1).min(bound);
    for b in (0..upper).rev() {
        legs.push(b);
        collect_legs(c, rest - (2 * b + c + 1), b, legs, out);
        legs.pop();
    }
}

/// Dimension of `S_lambda C^e` by the hook-content formula; zero past `e` rows.
pub fn schur_dim(l: &Partition, e: usize) -> BigUint {
    if l.len() > e {
        return BigUint::zero();
    }
    let conj = l.conjugate();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, &row) in l.parts.iter().enumerate() {
        for j in 0..row {
            num *= BigUint::from(e + j - i);
            den *= BigUint::from(l.hook(i, j, &conj));
        }
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

/// Dimension of the irreducible `GL_n` module with weakly decreasing highest weight
/// `weight` (any integers), by the Weyl dimension formula.
pub fn weyl_dimension(weight: &[i64]) -> Result<BigUint> {
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameters(format!("{weight:?} is not dominant")));
    }
    let n = weight.len();
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= BigInt::from(weight[i] - weight[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = num / den;
    debug_assert!(!q.is_negative());
    Ok(q.magnitude().clone())
}

/// Dimension of the Schur module of a dominant integer weight, reduced to a partition
/// by subtracting the last entry.
pub fn schur_dim_weight(weight: &[i64]) -> Result<BigUint> {
    if weight.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameters(format!("{weight:?} is not dominant")));
    }
    let Some(&low) = weight.last() else {
        return Ok(BigUint::one());
    };
    let parts = weight.iter().map(|&w| (w - low).to_usize().expect("nonnegative")).collect();
    Ok(schur_dim(&Partition::from_unsorted(parts), weight.len()))
}

/// Which side of the plethysm labels `exterior_of_sym2` reports.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub enum LabelOrientation {
    /// Members of `Q_1(2t)`: `Λ^t(Sym² E) = ⊕ S_λ E`.
    #[default]
    Direct,
    /// Their conjugates, members of the leg-heavy family.
    Conjugate,
}

/// Summands of `Λ^t(Sym² E)` for `dim E = e`, each with multiplicity one.
pub fn exterior_of_sym2(t: usize, e: usize) -> Vec<(Partition, usize)> {
    exterior_of_sym2_oriented(t, e, LabelOrientation::Direct)
}

/// As [`exterior_of_sym2`]; the row bound is always applied to the direct label, which
/// is the one that acts on `E`.
pub fn exterior_of_sym2_oriented(t: usize, e: usize, orientation: LabelOrientation) -> Vec<(Partition, usize)> {
    enumerate_q(1, 2 * t)
        .expect("even weight")
        .into_iter()
        .filter(|l| l.len() <= e)
        .map(|l| match orientation {
            LabelOrientation::Direct => (l, 1),
            LabelOrientation::Conjugate => (l.conjugate(), 1),
        })
        .collect()
}

/// Cauchy decomposition `Λ^t(E ⊗ F) = ⊕ S_λ E ⊗ S_λ' F` for `dim E = e`, `dim F = f`.
pub fn cauchy_exterior(t: usize, e: usize, f: usize) -> Vec<((Partition, Partition), usize)> {
    partitions_of(t)
        .into_iter()
        .filter(|l| l.len() <= e && l.part(0) <= f)
        .map(|l| {
            let c = l.conjugate();
            ((l, c), 1)
        })
        .collect()
}

pub fn binomial(n: usize, k: usize) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugates_and_rank() {
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[3, 2, 1]).conjugate(), p(&[3, 2, 1]));
        assert_eq!(Partition::empty().durfee_rank(), 0);
        assert_eq!(p(&[2, 2]).durfee_rank(), 2);
        assert_eq!(p(&[3, 2, 2]).durfee_rank(), 2);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn hooks_round_trip() {
        let h = p(&[2, 2]).to_hooks();
        assert_eq!((h.arms(), h.legs()), (&[1, 0][..], &[1, 0][..]));
        let h = p(&[1]).to_hooks();
        assert_eq!((h.arms(), h.legs()), (&[0][..], &[0][..]));
        let h = p(&[3, 2, 1]).to_hooks();
        assert_eq!((h.arms(), h.legs()), (&[2, 0][..], &[2, 0][..]));
        assert_eq!(h.to_partition(), p(&[3, 2, 1]));
        assert_eq!(
            FrobeniusHooks::new(vec![0], vec![3]).unwrap().to_partition(),
            p(&[1, 1, 1, 1])
        );
        assert!(FrobeniusHooks::new(vec![1, 1], vec![1, 0]).is_err());
    }

    #[test]
    fn q_families() {
        assert_eq!(enumerate_q(0, 4).unwrap(), vec![p(&[2, 2])]);
        assert!(enumerate_q(0, 2).unwrap().is_empty());
        assert_eq!(enumerate_q(1, 2).unwrap(), vec![p(&[2])]);
        assert_eq!(enumerate_q(1, 0).unwrap(), vec![Partition::empty()]);
        assert_eq!(enumerate_q(0, 3), Err(Error::OddWeight(3)));
    }

    #[test]
    fn dims() {
        assert_eq!(schur_dim(&p(&[2]), 2), BigUint::from(3u8));
        assert_eq!(schur_dim(&p(&[1, 1]), 3), BigUint::from(3u8));
        assert_eq!(schur_dim(&p(&[2, 2]), 3), BigUint::from(6u8));
        assert_eq!(schur_dim(&p(&[1, 1, 1]), 2), BigUint::zero());
        assert_eq!(schur_dim(&Partition::empty(), 4), BigUint::one());
        assert_eq!(schur_dim_weight(&[-1, -2]).unwrap(), BigUint::from(2u8));
        assert_eq!(weyl_dimension(&[2, 0, -1]).unwrap(), schur_dim(&p(&[3, 1]), 3));
    }

    #[test]
    fn plethysm_examples() {
        assert_eq!(exterior_of_sym2(0, 3), vec![(Partition::empty(), 1)]);
        assert_eq!(exterior_of_sym2(1, 1), vec![(p(&[2]), 1)]);
        let total: BigUint = exterior_of_sym2(2, 2).iter().map(|(l, _)| schur_dim(l, 2)).sum();
        assert_eq!(total, BigUint::from(3u8));
        assert_eq!(
            exterior_of_sym2_oriented(1, 3, LabelOrientation::Conjugate),
            vec![(p(&[1, 1]), 1)]
        );
        assert_eq!(cauchy_exterior(1, 2, 2), vec![((p(&[1]), p(&[1])), 1)]);
        assert_eq!(cauchy_exterior(0, 2, 2).len(), 1);
        let total: BigUint = cauchy_exterior(2, 2, 2)
            .iter()
            .map(|((a, b), _)| schur_dim(a, 2) * schur_dim(b, 2))
            .sum();
        assert_eq!(total, BigUint::from(6u8));
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 2), BigUint::from(15u8));
        assert_eq!(binomial(2, 3), BigUint::zero());
        assert_eq!(binomial(0, 0), BigUint::one());
    }
}
