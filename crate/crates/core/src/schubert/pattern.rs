//! Matrix forms of the opposite cells `Y_Q~(w~)` (in `SL_2n`) and `Y_P~(w~)` (in `Sp_2n`).

use std::collections::HashMap;

use num_rational::BigRational;
use num_traits::Zero;
use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{q, QMatrix};
use crate::poly::{Poly, Var};
use crate::weyl::check_family;

/// Ambient group of the pattern.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum Group {
    /// `SL_2n`, cell of `H / Q~`.
    H,
    /// `Sp_2n`, cell of `G / P~`.
    G,
}

/// A `2n x 2n` matrix of polynomials in the free coordinates.
#[derive(Clone, Debug)]
pub struct CellPattern {
    n: usize,
    k: usize,
    r: usize,
    group: Group,
    entries: Vec<Vec<Poly>>,
    free: Vec<Var>,
}

impl CellPattern {
    pub fn params(&self) -> (usize, usize, usize) {
        (self.n, self.k, self.r)
    }

    pub fn group(&self) -> Group {
        self.group
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i - 1][j - 1]
    }

    pub fn free_coordinates(&self) -> &[Var] {
        &self.free
    }

    pub fn dimension(&self) -> usize {
        self.free.len()
    }

    /// Evaluates the pattern at the given coordinate values.
    pub fn instantiate(&self, values: &HashMap<Var, BigRational>) -> QMatrix {
        let m = 2 * self.n;
        QMatrix::from_fn(m, m, |i, j| self.entries[i][j].eval_q(values))
    }

    pub fn instantiate_ints(&self, values: &HashMap<Var, i64>) -> QMatrix {
        let values = values.iter().map(|(&v, &x)| (v, q(x))).collect();
        self.instantiate(&values)
    }

    pub fn random_point(&self, bound: i64, rng: &mut impl Rng) -> QMatrix {
        let values: HashMap<Var, i64> = self.free.iter().map(|&v| (v, rng.gen_range(-bound..=bound))).collect();
        self.instantiate_ints(&values)
    }

    /// Reads the free coordinates off `m` and checks that every entry matches.
    pub fn contains(&self, m: &QMatrix) -> bool {
        let size = 2 * self.n;
        if m.rows() != size || m.cols() != size {
            return false;
        }
        let values: HashMap<Var, BigRational> =
            self.free.iter().map(|&(i, j)| ((i, j), m.get(i - 1, j - 1).clone())).collect();
        self.instantiate(&values) == *m
    }

    /// Entry strings, for display.
    pub fn render(&self) -> Vec<Vec<String>> {
        self.entries.iter().map(|row| row.iter().map(ToString::to_string).collect()).collect()
    }
}

pub fn opposite_cell_pattern(n: usize, k: usize, r: usize, group: Group) -> Result<CellPattern> {
    check_family(n, k, r)?;
    let a = r - k;
    let b = n - a;
    let m = 2 * n;
    let mut entries = vec![vec![Poly::zero(); m]; m];
    for (i, row) in entries.iter_mut().enumerate() {
        row[i] = Poly::one();
    }
    let mut free = Vec::new();

    // A': rows a+1..n, columns 1..a; rows past r vanish.
    let mut a_prime = vec![vec![Poly::zero(); a]; b];
    for s in 0..b {
        for t in 0..a {
            let (i, j) = (a + 1 + s, 1 + t);
            if i <= r {
                a_prime[s][t] = Poly::var(i, j);
                free.push((i, j));
            }
        }
    }

    // D2: rows n+1..n+b, columns a+1..n; persymmetric for G.
    let mut d2 = vec![vec![Poly::zero(); b]; b];
    for p in 0..b {
        for t in 0..b {
            let (i, j) = (n + 1 + p, a + 1 + t);
            match group {
                Group::H => {
                    d2[p][t] = Poly::var(i, j);
                    free.push((i, j));
                }
                Group::G if p + t < b => {
                    d2[p][t] = Poly::var(i, j);
                    free.push((i, j));
                }
                Group::G => {
                    let (pp, tt) = (b - 1 - t, b - 1 - p);
                    d2[p][t] = Poly::var(n + 1 + pp, a + 1 + tt);
                }
            }
        }
    }

    // E': rows 2n-a+1..2n, columns n+1..n+b; the left n-r columns vanish.
    let mut e_prime = vec![vec![Poly::zero(); b]; a];
    for p in 0..a {
        for t in 0..b {
            match group {
                Group::H => {
                    if t >= n - r {
                        let (i, j) = (2 * n - a + 1 + p, n + 1 + t);
                        e_prime[p][t] = Poly::var(i, j);
                        free.push((i, j));
                    }
                }
                Group::G => {
                    // E' = -J A'^T J.
                    e_prime[p][t] = -&a_prime[b - 1 - t][a - 1 - p];
                }
            }
        }
    }

    for s in 0..b {
        for t in 0..a {
            entries[a + s][t] = a_prime[s][t].clone();
        }
    }
    for p in 0..b {
        for t in 0..b {
            entries[n + p][a + t] = d2[p][t].clone();
        }
    }
    for p in 0..a {
        for t in 0..b {
            entries[2 * n - a + p][n + t] = e_prime[p][t].clone();
            // The E' D2 block.
            let mut v = Poly::zero();
            for s in 0..b {
                if !e_prime[p][s].is_zero() && !d2[s][t].is_zero() {
                    v = &v + &(&e_prime[p][s] * &d2[s][t]);
                }
            }
            entries[2 * n - a + p][a + t] = v;
        }
    }
    free.sort_unstable();
    Ok(CellPattern { n, k, r, group, entries, free })
}

/// The `Sp_2n` pattern point with the given `A'` (`(n-(r-k)) x (r-k)`) and `D2`.
pub fn g_point(n: usize, k: usize, r: usize, a_prime: &QMatrix, d2: &QMatrix) -> Result<QMatrix> {
    check_family(n, k, r)?;
    let a = r - k;
    let b = n - a;
    if (a_prime.rows(), a_prime.cols()) != (b, a) || (d2.rows(), d2.cols()) != (b, b) {
        return Err(Error::DimensionMismatch("A' must be b x a and D2 b x b".into()));
    }
    if (k..b).any(|s| (0..a).any(|t| !a_prime.get(s, t).is_zero())) {
        return Err(Error::PatternViolation("bottom n-r rows of A' must vanish".into()));
    }
    let jb = QMatrix::antidiagonal(b);
    let ja = QMatrix::antidiagonal(a);
    if !(&jb * d2).is_symmetric() {
        return Err(Error::NotPersymmetric);
    }
    let e_prime = -&(&(&ja * &a_prime.transpose()) * &jb);
    let mut m = QMatrix::identity(2 * n);
    m.set_block(a, 0, a_prime);
    m.set_block(n, a, d2);
    m.set_block(2 * n - a, n, &e_prime);
    m.set_block(2 * n - a, a, &(&e_prime * d2));
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::symplectic::BlockMatrix2n;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn worked_example_entry() {
        let p = opposite_cell_pattern(5, 2, 4, Group::H).unwrap();
        assert_eq!(p.entry(9, 3).to_string(), "x[9,7]*x[7,3] + x[9,8]*x[8,3]");
        assert_eq!(p.entry(10, 5).to_string(), "x[10,7]*x[7,5] + x[10,8]*x[8,5]");
        assert!(p.entry(5, 1).is_zero());
        assert!(p.entry(9, 6).is_zero());
        assert_eq!(p.entry(4, 2).to_string(), "x[4,2]");
    }

    #[test]
    fn identity_is_a_member() {
        for group in [Group::H, Group::G] {
            let p = opposite_cell_pattern(4, 1, 3, group).unwrap();
            assert!(p.contains(&QMatrix::identity(8)));
        }
    }

    #[test]
    fn nonzero_bottom_row_of_a_prime_is_rejected() {
        let p = opposite_cell_pattern(5, 2, 4, Group::G).unwrap();
        let mut m = QMatrix::identity(10);
        m.set(4, 0, q(1));
        assert!(!p.contains(&m));
    }

    #[test]
    fn dimensions() {
        for (n, k, r) in [(2, 1, 2), (4, 1, 3), (5, 2, 4), (5, 3, 5)] {
            let a = r - k;
            let b = n - a;
            let h = opposite_cell_pattern(n, k, r, Group::H).unwrap();
            assert_eq!(h.dimension(), 2 * k * a + b * b);
            let g = opposite_cell_pattern(n, k, r, Group::G).unwrap();
            assert_eq!(g.dimension(), k * a + b * (b + 1) / 2);
        }
    }

    #[test]
    fn symplectic_points_are_symplectic_and_in_h_pattern() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (n, k, r) in [(2, 1, 2), (3, 1, 2), (4, 2, 3), (5, 2, 4)] {
            let g = opposite_cell_pattern(n, k, r, Group::G).unwrap();
            let h = opposite_cell_pattern(n, k, r, Group::H).unwrap();
            for _ in 0..10 {
                let m = g.random_point(5, &mut rng);
                assert!(BlockMatrix2n::from_full(&m).unwrap().is_symplectic());
                assert!(h.contains(&m));
                assert!(g.contains(&m));
            }
        }
    }

    #[test]
    fn assembled_points_match_pattern() {
        let a_prime = QMatrix::from_ints(&[vec![1, 2], vec![3, 4], vec![0, 0]]);
        let d2 = QMatrix::from_ints(&[vec![1, 2, 3], vec![4, 5, 2], vec![6, 4, 1]]);
        let m = g_point(5, 2, 4, &a_prime, &d2).unwrap();
        assert!(opposite_cell_pattern(5, 2, 4, Group::G).unwrap().contains(&m));
        let bad = QMatrix::from_ints(&[vec![1, 2], vec![3, 4], vec![1, 0]]);
        assert!(g_point(5, 2, 4, &bad, &d2).is_err());
    }
}
