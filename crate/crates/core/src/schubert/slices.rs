//! The linear spaces `V_w`, `V'_w`, `T_w`, the product identification of `Y_P~(w~)`,
//! and the dimension data of the desingularization.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::schubert::pattern::{g_point, opposite_cell_pattern, Group};
use crate::weyl::check_family;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum SliceKind {
    /// Fibre of the desingularization, inside `Sym_n`.
    Vw,
    /// Opposite cell of `X_{P'}(w')` inside the cell of `GL_n / P'_{r-k}`.
    VwPrime,
    /// The enlarged space of the even case, inside `Sym_n`.
    Tw,
}

/// A coordinate subspace: the listed coordinates are free, all others vanish.
/// For symmetric slices the coordinates are `(i, j)` with `i >= j`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct LinearSlice {
    pub kind: SliceKind,
    pub n: usize,
    pub symmetric: bool,
    free: Vec<(usize, usize)>,
}

impl LinearSlice {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn free(&self) -> &[(usize, usize)] {
        &self.free
    }

    pub fn is_free(&self, i: usize, j: usize) -> bool {
        let key = if self.symmetric && i < j { (j, i) } else { (i, j) };
        self.free.binary_search(&key).is_ok()
    }

    /// Membership of a concrete matrix. Symmetric slices require a symmetric matrix;
    /// `V'_w` requires the unipotent shape `[[I, 0], [N, I]]` of the cell.
    pub fn contains(&self, m: &QMatrix) -> bool {
        if m.rows() != self.n || m.cols() != self.n {
            return false;
        }
        if self.symmetric && !m.is_symmetric() {
            return false;
        }
        (1..=self.n).all(|i| {
            (1..=self.n).all(|j| {
                let v = m.get(i - 1, j - 1);
                if !self.symmetric && i == j {
                    return v == &crate::matrix::q(1);
                }
                self.is_free(i, j) || v.is_zero()
            })
        })
    }

    /// Dimension of the quotient `Sym_n / slice` for symmetric slices.
    pub fn codim_in_sym(&self) -> usize {
        self.n * (self.n + 1) / 2 - self.dim()
    }
}

fn symmetric_slice(kind: SliceKind, n: usize, keep: impl Fn(usize, usize) -> bool) -> LinearSlice {
    let mut free = Vec::new();
    for i in 1..=n {
        for j in 1..=i {
            if keep(i, j) {
                free.push((i, j));
            }
        }
    }
    LinearSlice { kind, n, symmetric: true, free }
}

/// `V_w`: symmetric matrices supported on the bottom-right `(n-(r-k))`-square,
/// i.e. `x_ij = 0` whenever `i <= r-k` or `j <= r-k`.
pub fn v_w(n: usize, k: usize, r: usize) -> Result<LinearSlice> {
    check_family(n, k, r)?;
    let a = r - k;
    Ok(symmetric_slice(SliceKind::Vw, n, |i, j| i > a && j > a))
}

/// The condition "`x_ij = 0` if `j <= r-k` or `i < n-(r-k)`", with a coordinate
/// vanishing when the condition holds in either index order. Kept to compare against
/// [`v_w`]; it is not what the product identification produces once `n >= 2(r-k) + 2`.
pub fn v_w_literal(n: usize, k: usize, r: usize) -> Result<LinearSlice> {
    check_family(n, k, r)?;
    let a = r - k;
    let vanishes = |i: usize, j: usize| j <= a || i < n - a;
    Ok(symmetric_slice(SliceKind::Vw, n, |i, j| !vanishes(i, j) && !vanishes(j, i)))
}

/// `V'_w`: `x_ij` with `i > r-k >= j` free except for `i > r`.
pub fn v_w_prime(n: usize, k: usize, r: usize) -> Result<LinearSlice> {
    check_family(n, k, r)?;
    let a = r - k;
    let mut free = Vec::new();
    for i in a + 1..=r {
        for j in 1..=a {
            free.push((i, j));
        }
    }
    Ok(LinearSlice { kind: SliceKind::VwPrime, n, symmetric: false, free })
}

/// `T_w`: symmetric matrices whose upper-left `(n-u)`-square vanishes.
pub fn t_slice(n: usize, u: usize) -> Result<LinearSlice> {
    if 2 * u > n {
        return Err(Error::InvalidParameters(format!("need 2u <= n, got u={u}, n={n}")));
    }
    Ok(symmetric_slice(SliceKind::Tw, n, |i, _| i > n - u))
}

/// Images of a point of `Y_P~(w~)` in `V_w` (a symmetric matrix) and `V'_w`
/// (the unipotent matrix `[[I, 0], [A', I]]`).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProductPoint {
    pub v: QMatrix,
    pub v_prime: QMatrix,
}

/// The composite `gamma . delta`: splits the point into `(L, N)` and maps it to
/// `((L N)^T J N, N)`.
pub fn product_identification(n: usize, k: usize, r: usize, point: &QMatrix) -> Result<ProductPoint> {
    let pattern = opposite_cell_pattern(n, k, r, Group::G)?;
    if !pattern.contains(point) {
        return Err(Error::PatternViolation("point is not in the symplectic cell pattern".into()));
    }
    let a = r - k;
    let b = n - a;
    let a_prime = point.block(a, 0, b, a);
    let d2 = point.block(n, a, b, b);
    let e_prime = point.block(2 * n - a, n, a, b);

    let mut v_prime = QMatrix::identity(n);
    v_prime.set_block(a, 0, &a_prime);

    // L is the lower-left block of the O^-_{G/P} factor.
    let mut l = QMatrix::zeros(n, n);
    l.set_block(0, 0, &-&(&d2 * &a_prime));
    l.set_block(0, a, &d2);
    l.set_block(b, 0, &-&(&(&e_prime * &d2) * &a_prime));
    l.set_block(b, a, &(&e_prime * &d2));

    let j = QMatrix::antidiagonal(n);
    let ln = &l * &v_prime;
    let v = &(&ln.transpose() * &j) * &v_prime;

    if !v_w(n, k, r)?.contains(&v) {
        return Err(Error::InvariantBreach("first component left V_w".into()));
    }
    if !v_w_prime(n, k, r)?.contains(&v_prime) {
        return Err(Error::InvariantBreach("second component left V'_w".into()));
    }
    Ok(ProductPoint { v, v_prime })
}

/// Inverse of [`product_identification`]: `A'` is read from `V'_w` and `D2 = J S`
/// from the bottom-right block `S` of the `V_w` component.
pub fn product_inverse(n: usize, k: usize, r: usize, p: &ProductPoint) -> Result<QMatrix> {
    check_family(n, k, r)?;
    if !v_w(n, k, r)?.contains(&p.v) || !v_w_prime(n, k, r)?.contains(&p.v_prime) {
        return Err(Error::PatternViolation("components are not in V_w x V'_w".into()));
    }
    let a = r - k;
    let b = n - a;
    let d2 = &QMatrix::antidiagonal(b) * &p.v.block(a, a, b, b);
    g_point(n, k, r, &p.v_prime.block(a, 0, b, a), &d2)
}

/// Dimensions attached to the desingularization `Z -> Y_P(w)`.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct DesingData {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    /// `dim Sym_n`.
    pub ambient_dim: usize,
    pub dim_y: usize,
    pub dim_z: usize,
    /// `dim V_w`.
    pub fibre_dim: usize,
    /// Rank of `xi`, the dual of the quotient of the trivial bundle by `V_w`.
    pub bundle_rank: usize,
    pub codim: usize,
    /// The base is `GL_r / P''_{r-k}`, a Grassmannian of dimension `k (r-k)`.
    pub base_rank: usize,
    pub base_cut: usize,
    pub base_dim: usize,
}

pub fn desing_data(n: usize, k: usize, r: usize) -> Result<DesingData> {
    check_family(n, k, r)?;
    let a = r - k;
    let fibre_dim = v_w(n, k, r)?.dim();
    let base_dim = v_w_prime(n, k, r)?.dim();
    let ambient_dim = n * (n + 1) / 2;
    let dim_z = base_dim + fibre_dim;
    Ok(DesingData {
        n,
        k,
        r,
        ambient_dim,
        dim_y: dim_z,
        dim_z,
        fibre_dim,
        bundle_rank: ambient_dim - fibre_dim,
        codim: ambient_dim - dim_z,
        base_rank: r,
        base_cut: a,
        base_dim,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::binomial;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn small_desing_cases() {
        let d = desing_data(2, 1, 2).unwrap();
        assert_eq!((d.base_dim, d.fibre_dim, d.dim_y, d.codim), (1, 1, 2, 1));
        assert_eq!(desing_data(3, 1, 3).unwrap().codim, 3);
        for r in 2..=5 {
            let d = desing_data(r, r - 1, r).unwrap();
            assert_eq!(d.base_dim, r - 1);
        }
    }

    #[test]
    fn codim_of_symmetric_rank_loci() {
        for n in 2..=5 {
            for r in 2..=n {
                for k in 1..r {
                    let d = desing_data(n, k, r).unwrap();
                    assert_eq!(d.dim_y + d.codim, n * (n + 1) / 2);
                    if r == n {
                        assert_eq!(binomial(n - k + 1, 2), d.codim.into());
                    }
                }
            }
        }
    }

    #[test]
    fn t_slices() {
        assert_eq!(t_slice(4, 0).unwrap().dim(), 0);
        assert_eq!(t_slice(3, 1).unwrap().dim(), 3);
        for n in 2..=6 {
            for u in 0..=n / 2 {
                let t = t_slice(n, u).unwrap();
                assert_eq!(t.dim(), u * (n - u) + u * (u + 1) / 2);
                assert_eq!(t.codim_in_sym(), (n - u + 1) * (n - u) / 2);
            }
        }
        assert!(t_slice(3, 2).is_err());
    }

    #[test]
    fn product_identification_lands_in_slices() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for (n, k, r) in [(2, 1, 2), (3, 1, 2), (4, 2, 3), (5, 2, 4), (4, 1, 4)] {
            let pattern = opposite_cell_pattern(n, k, r, Group::G).unwrap();
            for _ in 0..10 {
                let m = pattern.random_point(4, &mut rng);
                let p = product_identification(n, k, r, &m).unwrap();
                assert_eq!(product_inverse(n, k, r, &p).unwrap(), m);
            }
        }
    }

    #[test]
    fn zero_point_maps_to_zero() {
        let p = product_identification(5, 2, 4, &QMatrix::identity(10)).unwrap();
        assert!(p.v.is_zero());
        assert_eq!(p.v_prime, QMatrix::identity(5));
        assert_eq!(v_w(2, 1, 2).unwrap().dim(), 1);
    }

    #[test]
    fn literal_condition_disagrees_on_dimension() {
        assert_eq!(v_w(5, 2, 4).unwrap(), v_w_literal(5, 2, 4).unwrap());
        // (4,1,2): the fibre is a full 3 x 3 symmetric block, the literal reading only
        // keeps the coordinates with both indices at least 3.
        let derived = v_w(4, 1, 2).unwrap();
        let literal = v_w_literal(4, 1, 2).unwrap();
        assert_eq!(derived.dim(), 6);
        assert_eq!(literal.dim(), 3);
    }
}
