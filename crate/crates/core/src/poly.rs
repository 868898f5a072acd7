//! Sparse polynomials with integer coefficients in matrix-coordinate variables `x[i,j]`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A variable `x[i,j]`, 1-based.
pub type Var = (usize, usize);

/// Sorted list of `(variable, exponent)` pairs with positive exponents.
pub type Monomial = Vec<(Var, u32)>;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        if c != 0 {
            p.terms.insert(Vec::new(), BigInt::from(c));
        }
        p
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn var(i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.terms.insert(vec![((i, j), 1)], BigInt::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, BigInt> {
        &self.terms
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.iter().map(|(_, e)| e).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Substitutes integer values; missing variables count as zero.
    pub fn eval(&self, point: &HashMap<Var, i64>) -> BigInt {
        let mut total = BigInt::zero();
        for (mono, c) in &self.terms {
            let mut v = c.clone();
            for (var, e) in mono {
                let x = BigInt::from(point.get(var).copied().unwrap_or(0));
                v *= num_traits::pow(x, *e as usize);
            }
            total += v;
        }
        total
    }

    /// Substitutes rational values; missing variables count as zero.
    pub fn eval_q(&self, point: &HashMap<Var, BigRational>) -> BigRational {
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut v = BigRational::from_integer(c.clone());
            for (var, e) in mono {
                match point.get(var) {
                    Some(x) => v *= num_traits::pow(x.clone(), *e as usize),
                    None => v = BigRational::zero(),
                }
            }
            total += v;
        }
        total
    }

    /// Renames every variable through `f`, merging terms that collide.
    pub fn map_vars(&self, f: impl Fn(Var) -> Var) -> Self {
        let mut out = Self::zero();
        for (mono, c) in &self.terms {
            let mut m: BTreeMap<Var, u32> = BTreeMap::new();
            for &(v, e) in mono {
                *m.entry(f(v)).or_default() += e;
            }
            out.add_term(m.into_iter().collect(), c.clone());
        }
        out
    }

    fn add_term(&mut self, mono: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Same polynomial up to an overall sign.
    pub fn normalized_sign(&self) -> Self {
        match self.terms.values().next() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut m: BTreeMap<Var, u32> = a.iter().copied().collect();
    for &(v, e) in b {
        *m.entry(v).or_default() += e;
    }
    m.into_iter().collect()
}

impl Add for &Poly {
    type Output = Poly;

    fn add(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &Poly {
    type Output = Poly;

    fn sub(self, rhs: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl Neg for &Poly {
    type Output = Poly;

    fn neg(self) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Poly {
    type Output = Poly;

    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest degree first, then by variables.
        let mut terms: Vec<(&Monomial, &BigInt)> = self.terms.iter().collect();
        terms.sort_by_key(|(m, _)| std::cmp::Reverse(m.iter().map(|(_, e)| e).sum::<u32>()));
        for (idx, (mono, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            // Factors in decreasing variable order, so chains read x[9,7]*x[7,3].
            let factors: Vec<String> = mono
                .iter()
                .rev()
                .map(|&((i, j), e)| {
                    if e == 1 {
                        format!("x[{i},{j}]")
                    } else {
                        format!("x[{i},{j}]^{e}")
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{abs}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

/// Determinant of a square matrix of polynomials by Laplace expansion along the first row.
pub fn poly_determinant(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    let cols: Vec<usize> = (0..n).collect();
    det_rec(m, 0, &cols)
}

fn det_rec(m: &[Vec<Poly>], row: usize, cols: &[usize]) -> Poly {
    if cols.is_empty() {
        return Poly::one();
    }
    let mut total = Poly::zero();
    for (idx, &c) in cols.iter().enumerate() {
        if m[row][c].is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = &m[row][c] * &det_rec(m, row + 1, &rest);
        total = if idx % 2 == 0 { &total + &term } else { &total - &term };
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_display() {
        let a = Poly::var(9, 7);
        let b = Poly::var(7, 3);
        let p = &(&a * &b) + &(&Poly::var(9, 8) * &Poly::var(8, 3));
        assert_eq!(p.to_string(), "x[9,7]*x[7,3] + x[9,8]*x[8,3]");
        assert_eq!(p.degree(), Some(2));
        assert!((&p - &p).is_zero());
        assert_eq!((&Poly::constant(-2) * &a).to_string(), "-2*x[9,7]");
        assert_eq!((&a * &a).to_string(), "x[9,7]^2");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn determinant_of_symmetric_two_by_two() {
        let x = |i, j| Poly::var(i, j);
        let m = vec![vec![x(1, 1), x(2, 1)], vec![x(2, 1), x(2, 2)]];
        let d = poly_determinant(&m);
        assert_eq!(d.to_string(), "x[2,2]*x[1,1] - x[2,1]^2");
        let point: HashMap<Var, i64> = [((1, 1), 3), ((2, 1), 2), ((2, 2), 5)].into();
        assert_eq!(d.eval(&point), BigInt::from(11));
        assert!(d.is_homogeneous());
        assert_eq!((-&d).normalized_sign(), d);
    }
}
