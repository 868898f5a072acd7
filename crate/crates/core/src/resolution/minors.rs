//! Explicit generators: the `(k+1)`-minors of a generic symmetric matrix.

use std::collections::{BTreeMap, BTreeSet};

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrix::sparse_rank;
use crate::poly::{poly_determinant, Monomial, Poly};

/// The generic symmetric matrix with `x[i,j] = x[j,i]` stored as `x[max, min]`.
pub fn generic_symmetric(n: usize) -> Vec<Vec<Poly>> {
    (1..=n).map(|i| (1..=n).map(|j| Poly::var(i.max(j), i.min(j))).collect()).collect()
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < size - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, size, &mut Vec::new(), &mut out);
    out
}

/// All nonzero `(k+1)`-minors, distinct up to sign, in the order of their row and
/// column sets.
pub fn all_minors(n: usize, k: usize) -> Result<Vec<Poly>> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParameters(format!("need 1 <= k < n, got n={n}, k={k}")));
    }
    let m = generic_symmetric(n);
    let sets = subsets(n, k + 1);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (a, rows) in sets.iter().enumerate() {
        // The minor on (C, R) is the transpose of the one on (R, C).
        for cols in &sets[a..] {
            let sub: Vec<Vec<Poly>> = rows.iter().map(|&i| cols.iter().map(|&j| m[i][j].clone()).collect()).collect();
            let det = poly_determinant(&sub).normalized_sign();
            if det.is_zero() {
                continue;
            }
            let key: Vec<(Monomial, String)> = det.terms().iter().map(|(mo, c)| (mo.clone(), c.to_string())).collect();
            if seen.insert(key) {
                out.push(det);
            }
        }
    }
    Ok(out)
}

/// A minimal generating set of the ideal of `(k+1)`-minors: a maximal linearly
/// independent subset of [`all_minors`].
pub fn minor_generators(n: usize, k: usize) -> Result<Vec<Poly>> {
    let minors = all_minors(n, k)?;
    let rows: Vec<BTreeMap<Monomial, BigRational>> = minors
        .iter()
        .map(|p| p.terms().iter().map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone()))).collect())
        .collect();
    let (_, keep) = sparse_rank(&rows);
    Ok(keep.into_iter().map(|i| minors[i].clone()).collect())
}
