//! Graded Betti tables, their K-polynomials and serialization.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::partition::Partition;

/// One irreducible summand contributing to an entry: the Schur label of the
/// `GL` module, its dimension, and the partition it came from.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Provenance {
    pub label: Vec<i64>,
    pub dim: BigUint,
    pub source: Partition,
}

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiEntry {
    pub mult: BigUint,
    pub provenance: Vec<Provenance>,
}

/// `beta_{i,d}`: multiplicity of `R(-d)` in homological position `i`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, usize), BettiEntry>,
}

impl BettiTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table from bare multiplicities, skipping zeros.
    pub fn from_counts(counts: &[((usize, usize), u64)]) -> Self {
        let mut t = Self::new();
        for &((i, d), m) in counts {
            if m > 0 {
                t.entries.entry((i, d)).or_default().mult += BigUint::from(m);
            }
        }
        t
    }

    pub fn add(&mut self, i: usize, d: usize, p: Provenance) {
        if p.dim.is_zero() {
            return;
        }
        let e = self.entries.entry((i, d)).or_default();
        e.mult += &p.dim;
        e.provenance.push(p);
    }

    pub fn get(&self, i: usize, d: usize) -> BigUint {
        self.entries.get(&(i, d)).map(|e| e.mult.clone()).unwrap_or_default()
    }

    pub fn entry(&self, i: usize, d: usize) -> Option<&BettiEntry> {
        self.entries.get(&(i, d))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &BettiEntry)> {
        self.entries.iter()
    }

    /// `(i, d, mult)` triples in canonical order.
    pub fn counts(&self) -> Vec<(usize, usize, BigUint)> {
        self.entries.iter().map(|(&(i, d), e)| (i, d, e.mult.clone())).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Largest homological index with a nonzero entry.
    pub fn length(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// Rank of `F_i`.
    pub fn rank(&self, i: usize) -> BigUint {
        self.entries.iter().filter(|(&(h, _), _)| h == i).map(|(_, e)| &e.mult).sum()
    }

    /// Internal degrees occurring in `F_i`.
    pub fn degrees(&self, i: usize) -> Vec<usize> {
        self.entries.keys().filter(|&&(h, _)| h == i).map(|&(_, d)| d).collect()
    }

    /// `F_0 = R` and nothing else in position 0.
    pub fn has_free_start(&self) -> bool {
        self.degrees(0) == vec![0] && self.get(0, 0) == BigUint::from(1u8)
    }

    /// Every entry of `other` appears here with at least its multiplicity.
    pub fn contains(&self, other: &BettiTable) -> bool {
        other.entries.iter().all(|(&(i, d), e)| self.get(i, d) >= e.mult)
    }

    /// The part of the table whose provenance satisfies `keep`.
    pub fn filter_provenance(&self, keep: impl Fn(&Provenance) -> bool) -> BettiTable {
        let mut out = BettiTable::new();
        for (&(i, d), e) in &self.entries {
            for p in e.provenance.iter().filter(|p| keep(p)) {
                out.add(i, d, p.clone());
            }
        }
        out
    }

    /// Same entries and multiplicities, ignoring provenance.
    pub fn same_counts(&self, other: &BettiTable) -> bool {
        self.counts() == other.counts()
    }

    pub fn k_polynomial(&self) -> Vec<BigInt> {
        let top = self.entries.keys().map(|&(_, d)| d).max().unwrap_or(0);
        let mut coeffs = vec![BigInt::zero(); top + 1];
        for (&(i, d), e) in &self.entries {
            let m = BigInt::from(e.mult.clone());
            if i % 2 == 0 {
                coeffs[d] += m;
            } else {
                coeffs[d] -= m;
            }
        }
        trim(&mut coeffs);
        coeffs
    }

    pub fn consistency_check(&self, codim: usize) -> ConsistencyReport {
        consistency_check(&self.k_polynomial(), codim)
    }

    /// Aligned grid: one row per homological index, one column per internal degree.
    pub fn render_grid(&self) -> String {
        let mut degrees: Vec<usize> = self.entries.keys().map(|&(_, d)| d).collect();
        degrees.sort_unstable();
        degrees.dedup();
        let rows = if self.entries.is_empty() { 0 } else { self.length() + 1 };
        let cell = |i: usize, d: usize| match self.entries.get(&(i, d)) {
            Some(e) => e.mult.to_string(),
            None => ".".to_string(),
        };
        let mut width = degrees.iter().map(|d| d.to_string().len()).max().unwrap_or(1);
        for i in 0..rows {
            for &d in &degrees {
                width = width.max(cell(i, d).len());
            }
        }
        let label_w = "i\\d".len().max(rows.saturating_sub(1).to_string().len());
        let mut out = String::new();
        let _ = write!(out, "{:>label_w$} |", "i\\d");
        for d in &degrees {
            let _ = write!(out, " {d:>width$}");
        }
        out.push('\n');
        let _ = writeln!(out, "{}-+{}", "-".repeat(label_w), "-".repeat(degrees.len() * (width + 1)));
        for i in 0..rows {
            let _ = write!(out, "{i:>label_w$} |");
            for &d in &degrees {
                let _ = write!(out, " {:>width$}", cell(i, d));
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self, params: JsonParams, codim: Option<usize>) -> BettiJson {
        let betti = self
            .entries
            .iter()
            .map(|(&(i, d), e)| EntryJson {
                i,
                degree: d,
                mult: big_number(&e.mult.to_string()),
                schur: e
                    .provenance
                    .iter()
                    .map(|p| (p.label.clone(), big_number(&p.dim.to_string())))
                    .collect(),
            })
            .collect();
        BettiJson {
            params,
            betti,
            codim,
            k_polynomial: self.k_polynomial().iter().map(|c| big_number(&c.to_string())).collect(),
        }
    }
}

fn trim(coeffs: &mut Vec<BigInt>) {
    while coeffs.len() > 1 && coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
}

/// A JSON number carrying an arbitrary-precision integer verbatim.
pub fn big_number(digits: &str) -> serde_json::Number {
    digits.parse().expect("integer literal")
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct JsonParams {
    pub n: usize,
    pub k: usize,
    pub r: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryJson {
    pub i: usize,
    pub degree: usize,
    pub mult: serde_json::Number,
    pub schur: Vec<(Vec<i64>, serde_json::Number)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BettiJson {
    pub params: JsonParams,
    pub betti: Vec<EntryJson>,
    pub codim: Option<usize>,
    pub k_polynomial: Vec<serde_json::Number>,
}

pub fn k_polynomial(b: &BettiTable) -> Vec<BigInt> {
    b.k_polynomial()
}

/// Result of dividing a K-polynomial by `(1 - z)^codim`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ConsistencyReport {
    pub divisible: bool,
    /// Value of the quotient at `z = 1`: the degree of the variety when divisible.
    #[serde(serialize_with = "serialize_bigint")]
    pub degree: BigInt,
}

fn serialize_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    big_number(&v.to_string()).serialize(s)
}

impl ConsistencyReport {
    pub fn passes(&self) -> bool {
        self.divisible && self.degree.is_positive()
    }
}

/// Divides `poly` (ascending coefficients) by `(1 - z)` `codim` times.
pub fn consistency_check(poly: &[BigInt], codim: usize) -> ConsistencyReport {
    let mut p: Vec<BigInt> = poly.to_vec();
    for _ in 0..codim {
        let total: BigInt = p.iter().sum();
        if !total.is_zero() || p.len() < 2 {
            return ConsistencyReport { divisible: false, degree: BigInt::zero() };
        }
        // p = (1 - z) q with q_i = p_0 + ... + p_i.
        let mut q = Vec::with_capacity(p.len() - 1);
        let mut acc = BigInt::zero();
        for c in &p[..p.len() - 1] {
            acc += c;
            q.push(acc.clone());
        }
        p = q;
    }
    ConsistencyReport { divisible: true, degree: p.iter().sum() }
}

/// Renders ascending coefficients as `1 - 6z^2 + 8z^3 - 3z^4`.
pub fn render_polynomial(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (d, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        let sign = if c.is_negative() { "-" } else { "+" };
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            let _ = write!(out, " {sign} ");
        }
        let coeff = if d > 0 && abs == BigInt::from(1) { String::new() } else { abs.to_string() };
        match d {
            0 => out.push_str(&coeff),
            1 => {
                let _ = write!(out, "{coeff}z");
            }
            _ => {
                let _ = write!(out, "{coeff}z^{d}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn veronese() -> BettiTable {
        BettiTable::from_counts(&[((0, 0), 1), ((1, 2), 6), ((2, 3), 8), ((3, 4), 3)])
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn k_polynomials() {
        assert_eq!(BettiTable::from_counts(&[((0, 0), 1)]).k_polynomial(), ints(&[1]));
        let hyper = BettiTable::from_counts(&[((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(hyper.k_polynomial(), ints(&[1, 0, -1]));
        assert_eq!(veronese().k_polynomial(), ints(&[1, 0, -6, 8, -3]));
        assert_eq!(render_polynomial(&veronese().k_polynomial()), "1 - 6z^2 + 8z^3 - 3z^4");
    }

    #[test]
    fn consistency() {
        let hyper = BettiTable::from_counts(&[((0, 0), 1), ((1, 2), 1)]);
        assert_eq!(hyper.consistency_check(1), ConsistencyReport { divisible: true, degree: BigInt::from(2) });
        assert_eq!(veronese().consistency_check(3).degree, BigInt::from(4));
        assert!(veronese().consistency_check(3).divisible);
        assert!(!veronese().consistency_check(4).divisible);
        let trivial = BettiTable::from_counts(&[((0, 0), 1)]);
        assert_eq!(trivial.consistency_check(0), ConsistencyReport { divisible: true, degree: BigInt::from(1) });
    }

    #[test]
    fn grid_and_shape() {
        let v = veronese();
        let grid = v.render_grid();
        assert!(grid.lines().nth(0).unwrap().ends_with("0 2 3 4"));
        assert!(grid.lines().nth(3).unwrap().ends_with(". 6 . ."));
        assert_eq!(v.length(), 3);
        assert_eq!(v.rank(2), BigUint::from(8u8));
        assert!(v.has_free_start());
        assert!(v.contains(&BettiTable::from_counts(&[((1, 2), 5)])));
        assert!(!v.contains(&BettiTable::from_counts(&[((1, 3), 1)])));
    }

    #[test]
    fn json_shape() {
        let json = serde_json::to_string(&veronese().to_json(JsonParams { n: 3, k: 1, r: 3 }, Some(3))).unwrap();
        assert!(json.starts_with(r#"{"params":{"n":3,"k":1,"r":3},"betti":[{"i":0,"degree":0,"mult":1,"schur":[]}"#));
        assert!(json.ends_with(r#""codim":3,"k_polynomial":[1,0,-6,8,-3]}"#));
    }
}
