//! Plücker coordinates restricted to the opposite cell of `SL_2n / Q~`.

use num_bigint::BigInt;
use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::integer_determinant;
use crate::weyl::check_family;

/// A point of the opposite cell of `SL_2n / Q~`: a unipotent lower-triangular integer
/// matrix whose entry `(i, j)` may be nonzero only if `j <= l < i` for some cut `l`
/// in `{r-k, n, 2n-(r-k)}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CellPoint {
    n: usize,
    k: usize,
    r: usize,
    rows: Vec<Vec<i64>>,
}

impl CellPoint {
    pub fn new(n: usize, k: usize, r: usize, rows: Vec<Vec<i64>>) -> Result<Self> {
        check_family(n, k, r)?;
        let m = 2 * n;
        if rows.len() != m || rows.iter().any(|row| row.len() != m) {
            return Err(Error::DimensionMismatch(format!("expected a {m}x{m} matrix")));
        }
        for i in 1..=m {
            for j in 1..=m {
                let v = rows[i - 1][j - 1];
                let ok = if i == j {
                    v == 1
                } else {
                    v == 0 || is_cell_coordinate(n, r - k, i, j)
                };
                if !ok {
                    return Err(Error::PatternViolation(format!("entry ({i},{j}) = {v}")));
                }
            }
        }
        Ok(Self { n, k, r, rows })
    }

    pub fn random(n: usize, k: usize, r: usize, bound: i64, rng: &mut impl Rng) -> Result<Self> {
        check_family(n, k, r)?;
        let m = 2 * n;
        let mut rows = vec![vec![0i64; m]; m];
        for i in 1..=m {
            rows[i - 1][i - 1] = 1;
            for j in 1..i {
                if is_cell_coordinate(n, r - k, i, j) {
                    rows[i - 1][j - 1] = rng.gen_range(-bound..=bound);
                }
            }
        }
        Ok(Self { n, k, r, rows })
    }

    pub fn params(&self) -> (usize, usize, usize) {
        (self.n, self.k, self.r)
    }

    /// Entry `x_{ij}`, 1-based.
    pub fn x(&self, i: usize, j: usize) -> i64 {
        self.rows[i - 1][j - 1]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }
}

/// Whether `(i, j)` is a coordinate of the opposite cell for the cuts `{a, n, 2n-a}`.
pub fn is_cell_coordinate(n: usize, a: usize, i: usize, j: usize) -> bool {
    [a, n, 2 * n - a].iter().any(|&l| j <= l && l < i)
}

/// The three index ranges on which the restricted Plücker coordinates have closed forms.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PluckerRange {
    /// `i > r`, `j <= r-k`: coordinate of the Grassmannian at `r-k`.
    Lower,
    /// `i > 2n-(r-k)`, `n < j <= 2n-(r-k)`.
    Upper,
    /// `i > 2n-(r-k)`, `r-k < j <= n`.
    Mixed,
}

impl PluckerRange {
    pub const ALL: [PluckerRange; 3] = [PluckerRange::Lower, PluckerRange::Upper, PluckerRange::Mixed];

    pub fn name(self) -> &'static str {
        match self {
            Self::Lower => "lower",
            Self::Upper => "upper",
            Self::Mixed => "mixed",
        }
    }

    /// Index pairs `(i, j)` of this range.
    pub fn pairs(self, n: usize, k: usize, r: usize) -> Vec<(usize, usize)> {
        let a = r - k;
        let top = 2 * n - a;
        let (rows, cols) = match self {
            Self::Lower => (r + 1..=2 * n, 1..=a),
            Self::Upper => (top + 1..=2 * n, n + 1..=top),
            Self::Mixed => (top + 1..=2 * n, a + 1..=n),
        };
        rows.flat_map(|i| cols.clone().map(move |j| (i, j))).collect()
    }
}

pub fn plucker_range(n: usize, k: usize, r: usize, i: usize, j: usize) -> Result<PluckerRange> {
    check_family(n, k, r)?;
    PluckerRange::ALL
        .into_iter()
        .find(|range| range.pairs(n, k, r).contains(&(i, j)))
        .ok_or(Error::PluckerRange { i, j })
}

/// Size `l` of the Grassmannian minor used for `(i, j)`.
fn minor_size(n: usize, k: usize, r: usize, range: PluckerRange) -> usize {
    match range {
        PluckerRange::Lower => r - k,
        PluckerRange::Upper | PluckerRange::Mixed => 2 * n - (r - k),
    }
}

/// The `l x l` minor with columns `1..l` and rows `1..l` with `j` replaced by `i`
/// (rows kept in increasing order).
pub fn plucker_minor(p: &CellPoint, i: usize, j: usize) -> Result<BigInt> {
    let (n, k, r) = p.params();
    let range = plucker_range(n, k, r, i, j)?;
    let l = minor_size(n, k, r, range);
    let rows: Vec<usize> = (1..=l).filter(|&x| x != j).chain(std::iter::once(i)).collect();
    let m: Vec<Vec<i64>> = rows.iter().map(|&row| (1..=l).map(|c| p.x(row, c)).collect()).collect();
    Ok(integer_determinant(&m))
}

fn sign(e: usize) -> i64 {
    if e % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Closed forms of the restricted Plücker coordinates:
/// `(-1)^{(r-k)-j} x_ij`, `(-1)^{2n-(r-k)-j} x_ij`, and
/// `(-1)^M (x_ij - sum_{p=n+1}^{2n-(r-k)} x_ip x_pj)` with `M = 2n-(r-k)-j`.
pub fn plucker_closed_form(p: &CellPoint, i: usize, j: usize) -> Result<BigInt> {
    let (n, k, r) = p.params();
    let a = r - k;
    let value = match plucker_range(n, k, r, i, j)? {
        PluckerRange::Lower => BigInt::from(sign(a - j) * p.x(i, j)),
        PluckerRange::Upper => BigInt::from(sign(2 * n - a - j) * p.x(i, j)),
        PluckerRange::Mixed => {
            let mut v = BigInt::from(p.x(i, j));
            for q in n + 1..=2 * n - a {
                v -= BigInt::from(p.x(i, q)) * BigInt::from(p.x(q, j));
            }
            v * sign(2 * n - a - j)
        }
    };
    Ok(value)
}

/// Both evaluations of a restricted Plücker coordinate.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PluckerValue {
    pub range: PluckerRange,
    pub minor: BigInt,
    pub closed_form: BigInt,
}

impl PluckerValue {
    pub fn agrees(&self) -> bool {
        self.minor == self.closed_form
    }
}

pub fn plucker_restriction(p: &CellPoint, i: usize, j: usize) -> Result<PluckerValue> {
    let (n, k, r) = p.params();
    Ok(PluckerValue {
        range: plucker_range(n, k, r, i, j)?,
        minor: plucker_minor(p, i, j)?,
        closed_form: plucker_closed_form(p, i, j)?,
    })
}
