//! The symplectic group `Sp_2n` in `n x n` block form and its opposite big cell.

use rand::Rng;

use crate::error::{Error, Result};
use crate::matrix::{q, QMatrix};

/// `F = [[0, J], [-J, 0]]`.
pub fn symplectic_form(n: usize) -> QMatrix {
    let j = QMatrix::antidiagonal(n);
    QMatrix::from_blocks(&QMatrix::zeros(n, n), &j, &-&j, &QMatrix::zeros(n, n))
}

/// A `2n x 2n` matrix `[[A, C], [D, E]]`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BlockMatrix2n {
    pub a: QMatrix,
    pub c: QMatrix,
    pub d: QMatrix,
    pub e: QMatrix,
}

impl BlockMatrix2n {
    pub fn new(a: QMatrix, c: QMatrix, d: QMatrix, e: QMatrix) -> Result<Self> {
        let n = a.rows();
        if [&a, &c, &d, &e].iter().any(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch("all four blocks must be n x n".into()));
        }
        Ok(Self { a, c, d, e })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            a: QMatrix::identity(n),
            c: QMatrix::zeros(n, n),
            d: QMatrix::zeros(n, n),
            e: QMatrix::identity(n),
        }
    }

    pub fn from_full(z: &QMatrix) -> Result<Self> {
        if !z.is_square() || z.rows() % 2 != 0 {
            return Err(Error::DimensionMismatch(format!("{}x{} is not 2n x 2n", z.rows(), z.cols())));
        }
        let n = z.rows() / 2;
        Ok(Self {
            a: z.block(0, 0, n, n),
            c: z.block(0, n, n, n),
            d: z.block(n, 0, n, n),
            e: z.block(n, n, n, n),
        })
    }

    pub fn n(&self) -> usize {
        self.a.rows()
    }

    pub fn to_full(&self) -> QMatrix {
        QMatrix::from_blocks(&self.a, &self.c, &self.d, &self.e)
    }

    /// The three block equations of `z^T F z = F`.
    pub fn is_symplectic(&self) -> bool {
        let j = QMatrix::antidiagonal(self.n());
        let (a, c, d, e) = (&self.a, &self.c, &self.d, &self.e);
        let at = a.transpose();
        let ct = c.transpose();
        let dt = d.transpose();
        let et = e.transpose();
        &(&at * &j) * d == &(&dt * &j) * a
            && &(&ct * &j) * e == &(&et * &j) * c
            && &(&(&at * &j) * e) - &(&(&dt * &j) * c) == j
    }
}

pub fn is_symplectic(z: &BlockMatrix2n) -> bool {
    z.is_symplectic()
}

/// The decomposition `z = z1 z2` with `z1` in the unipotent radical of the opposite
/// parabolic and `z2` in `P`.
#[derive(Clone, Debug)]
pub struct CellFactorization {
    pub z1: BlockMatrix2n,
    pub z2: BlockMatrix2n,
    /// `D A^{-1}`, the lower-left block of `z1`.
    pub l: QMatrix,
}

impl CellFactorization {
    /// `J L = L^T J`.
    pub fn unipotent_identity(&self) -> bool {
        let j = QMatrix::antidiagonal(self.l.rows());
        &j * &self.l == &self.l.transpose() * &j
    }

    /// `A^T J (E - D A^{-1} C) = J`.
    pub fn parabolic_identity(&self) -> bool {
        let j = QMatrix::antidiagonal(self.l.rows());
        &(&self.z2.a.transpose() * &j) * &self.z2.e == j
    }

    pub fn recompose(&self) -> QMatrix {
        &self.z1.to_full() * &self.z2.to_full()
    }
}

pub fn opposite_cell_factor(z: &BlockMatrix2n) -> Result<CellFactorization> {
    if !z.is_symplectic() {
        return Err(Error::NotSymplectic);
    }
    let n = z.n();
    let a_inv = z.a.inverse().ok_or(Error::NotInOppositeCell)?;
    let l = &z.d * &a_inv;
    let z1 = BlockMatrix2n {
        a: QMatrix::identity(n),
        c: QMatrix::zeros(n, n),
        d: l.clone(),
        e: QMatrix::identity(n),
    };
    let z2 = BlockMatrix2n {
        a: z.a.clone(),
        c: z.c.clone(),
        d: QMatrix::zeros(n, n),
        e: &z.e - &(&l * &z.c),
    };
    Ok(CellFactorization { z1, z2, l })
}

/// `J Y`, the symmetric matrix attached to a persymmetric lower-left block `Y`.
pub fn sym_coordinates(y: &QMatrix) -> Result<QMatrix> {
    if !y.is_square() {
        return Err(Error::NotPersymmetric);
    }
    let jy = &QMatrix::antidiagonal(y.rows()) * y;
    if !jy.is_symmetric() {
        return Err(Error::NotPersymmetric);
    }
    Ok(jy)
}

/// Random symmetric integer matrix with entries in `-bound..=bound`.
pub fn random_symmetric(n: usize, bound: i64, rng: &mut impl Rng) -> QMatrix {
    let mut s = QMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..=i {
            let v = q(rng.gen_range(-bound..=bound));
            s.set(i, j, v.clone());
            s.set(j, i, v);
        }
    }
    s
}

/// Random unimodular integer matrix: a product of elementary row operations.
pub fn random_unimodular(n: usize, steps: usize, rng: &mut impl Rng) -> QMatrix {
    let mut m = QMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let f = q(rng.gen_range(-2..=2));
        for c in 0..n {
            let v = m.get(i, c) + &f * m.get(j, c);
            m.set(i, c, v);
        }
    }
    m
}

/// Random element of `Sp_2n` built from the generators `[[I,0],[J S,I]]`,
/// `[[I,J S],[0,I]]` and `diag(A, J (A^T)^{-1} J)`.
pub fn random_symplectic(n: usize, rng: &mut impl Rng) -> BlockMatrix2n {
    let j = QMatrix::antidiagonal(n);
    let id = QMatrix::identity(n);
    let zero = QMatrix::zeros(n, n);
    let lower = QMatrix::from_blocks(&id, &zero, &(&j * &random_symmetric(n, 3, rng)), &id);
    let upper = QMatrix::from_blocks(&id, &(&j * &random_symmetric(n, 3, rng)), &zero, &id);
    let a = random_unimodular(n, 2 * n, rng);
    let a_dual = &(&j * &a.transpose().inverse().expect("unimodular")) * &j;
    let levi = QMatrix::from_blocks(&a, &zero, &zero, &a_dual);
    let z = &(&lower * &levi) * &upper;
    BlockMatrix2n::from_full(&z).expect("square")
}

/// The block `J (A^T)^{-1} J` completing `diag(A, .)` to a symplectic matrix.
pub fn levi_partner(a: &QMatrix) -> Option<QMatrix> {
    let j = QMatrix::antidiagonal(a.rows());
    Some(&(&j * &a.transpose().inverse()?) * &j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn form_is_skew_and_invertible() {
        let f = symplectic_form(3);
        assert_eq!(f.transpose(), -&f);
        assert!(f.inverse().is_some());
    }

    #[test]
    fn identity_and_levi_are_symplectic() {
        assert!(BlockMatrix2n::identity(3).is_symplectic());
        let a = QMatrix::from_ints(&[vec![2, 1], vec![1, 1]]);
        let z = BlockMatrix2n::new(a.clone(), QMatrix::zeros(2, 2), QMatrix::zeros(2, 2), levi_partner(&a).unwrap()).unwrap();
        assert!(z.is_symplectic());
        let f = symplectic_form(2);
        assert_eq!(&(&z.to_full().transpose() * &f) * &z.to_full(), f);
    }

    #[test]
    fn generic_matrix_is_not_symplectic() {
        let z = BlockMatrix2n::from_full(&QMatrix::from_ints(&[
            vec![1, 2, 0, 1],
            vec![3, 1, 1, 0],
            vec![0, 1, 2, 2],
            vec![1, 0, 1, 3],
        ]))
        .unwrap();
        assert!(!z.is_symplectic());
        assert_eq!(opposite_cell_factor(&z).unwrap_err(), Error::NotSymplectic);
    }

    #[test]
    fn factorization_recomposes() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let id = opposite_cell_factor(&BlockMatrix2n::identity(2)).unwrap();
        assert_eq!(id.z1, BlockMatrix2n::identity(2));
        assert_eq!(id.z2, BlockMatrix2n::identity(2));
        for n in 1..=4 {
            let z = random_symplectic(n, &mut rng);
            assert!(z.is_symplectic());
            if let Ok(f) = opposite_cell_factor(&z) {
                assert_eq!(f.recompose(), z.to_full());
                assert!(f.unipotent_identity());
                assert!(f.parabolic_identity());
                assert!(f.z2.is_symplectic());
            }
        }
    }

    #[test]
    fn singular_a_is_outside_the_cell() {
        // The Weyl element swapping the two halves of Sp_2.
        let z = BlockMatrix2n::from_full(&QMatrix::from_ints(&[vec![0, 1], vec![-1, 0]])).unwrap();
        assert!(z.is_symplectic());
        assert_eq!(opposite_cell_factor(&z).unwrap_err(), Error::NotInOppositeCell);
    }

    #[test]
    fn persymmetric_blocks() {
        assert!(sym_coordinates(&QMatrix::zeros(2, 2)).unwrap().is_zero());
        let y = QMatrix::from_ints(&[vec![5, 7], vec![2, 5]]);
        assert_eq!(sym_coordinates(&y).unwrap(), QMatrix::from_ints(&[vec![2, 5], vec![5, 7]]));
        let bad = QMatrix::from_ints(&[vec![1, 2], vec![3, 4]]);
        assert_eq!(sym_coordinates(&bad).unwrap_err(), Error::NotPersymmetric);
    }
}
