//! Oracles shared by the integration tests. None of them call into the library.

#![allow(dead_code)]

use std::collections::HashMap;

pub const P: u64 = (1 << 61) - 1;

fn mulmod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % P as u128) as u64
}

fn powmod(mut a: u64, mut e: u64) -> u64 {
    let mut acc = 1;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, a);
        }
        a = mulmod(a, a);
        e >>= 1;
    }
    acc
}

/// Rank of a dense matrix over `F_p`.
pub fn rank_mod_p(mut m: Vec<Vec<u64>>) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(piv) = (rank..rows).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, piv);
        let inv = powmod(m[rank][c], P - 2);
        for x in m[rank].iter_mut() {
            *x = mulmod(*x, inv);
        }
        for r in 0..rows {
            if r != rank && m[r][c] != 0 {
                let f = m[r][c];
                for j in c..cols {
                    let sub = mulmod(f, m[rank][j]);
                    m[r][j] = (m[r][j] + P - sub) % P;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn monomials(vars: usize, degree: usize) -> Vec<Vec<usize>> {
    if vars == 0 {
        return if degree == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=degree).rev() {
        for mut rest in monomials(vars - 1, degree - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![vec![]];
    }
    if n < size {
        return vec![];
    }
    let mut out = subsets(n - 1, size);
    for mut s in subsets(n - 1, size - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Graded Betti numbers `beta_{i,j}` of the coordinate ring of the quadratic Veronese
/// embedding of `P^{e-1}`, i.e. of `S / I` where `I` is the ideal of 2-minors of a generic
/// symmetric `e x e` matrix. Computed as Koszul homology: `S / I` is the ring of even-degree
/// forms in `e` variables, and `beta_{i,j} = dim H_i(Λ^i V ⊗ (S/I)_{j-i})`.
pub fn veronese_betti(e: usize, max_degree: usize) -> Vec<((usize, usize), u64)> {
    let vars: Vec<(usize, usize)> = (0..e).flat_map(|a| (a..e).map(move |b| (a, b))).collect();
    let v = vars.len();
    // Basis of Λ^i V ⊗ (S/I)_m, m = j - i.
    let basis = |i: usize, m: usize| -> Vec<(Vec<usize>, Vec<usize>)> {
        let mut out = Vec::new();
        for s in subsets(v, i) {
            for mono in monomials(e, 2 * m) {
                out.push((s.clone(), mono));
            }
        }
        out
    };
    // Matrix of d: Λ^i ⊗ R_m -> Λ^{i-1} ⊗ R_{m+1}, as rows = source basis elements.
    let differential = |i: usize, j: usize| -> Vec<Vec<u64>> {
        let src = basis(i, j - i);
        let tgt = basis(i - 1, j - i + 1);
        let index: HashMap<(Vec<usize>, Vec<usize>), usize> =
            tgt.iter().cloned().enumerate().map(|(k, b)| (b, k)).collect();
        src.iter()
            .map(|(s, mono)| {
                let mut row = vec![0u64; tgt.len()];
                for (pos, &var) in s.iter().enumerate() {
                    let mut rest = s.clone();
                    rest.remove(pos);
                    let mut m = mono.clone();
                    let (a, b) = vars[var];
                    m[a] += 1;
                    m[b] += 1;
                    let k = index[&(rest, m)];
                    row[k] = if pos % 2 == 0 { (row[k] + 1) % P } else { (row[k] + P - 1) % P };
                }
                row
            })
            .collect()
    };
    let mut out = Vec::new();
    for j in 0..=max_degree {
        let mut ranks = vec![0usize; v + 2];
        for i in 1..=v.min(j) {
            ranks[i] = rank_mod_p(differential(i, j));
        }
        for i in 0..=v.min(j) {
            let dim = basis(i, j - i).len();
            let beta = dim - ranks[i] - ranks[i + 1];
            if beta > 0 {
                out.push(((i, j), beta as u64));
            }
        }
    }
    out
}

/// Determinant of a small integer matrix by fraction-free elimination in `i128`.
pub fn det_i128(rows: &[Vec<i64>]) -> i128 {
    let n = rows.len();
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut sign = 1;
    let mut prev = 1i128;
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != 0) else { return 0 };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..n {
            for j in c + 1..n {
                m[r][j] = (m[r][j] * m[c][c] - m[r][c] * m[c][j]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    if n == 0 {
        1
    } else {
        sign * m[n - 1][n - 1]
    }
}

/// All partitions of `m`, largest parts first.
pub fn partitions(m: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(m, m, &mut Vec::new(), &mut out);
    out
}

/// Number of semistandard tableaux of shape `shape` with entries in `1..=e`, counted
/// through chains of horizontal strips.
pub fn ssyt_count(shape: &[usize], e: usize) -> u128 {
    fn strips_below(mu: &[usize]) -> Vec<Vec<usize>> {
        // nu with mu / nu a horizontal strip: mu_{i+1} <= nu_i <= mu_i.
        let mut out = vec![Vec::new()];
        for i in 0..mu.len() {
            let lo = mu.get(i + 1).copied().unwrap_or(0);
            let mut next = Vec::new();
            for prefix in &out {
                for x in lo..=mu[i] {
                    let mut p: Vec<usize> = prefix.clone();
                    p.push(x);
                    next.push(p);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|mut v| {
                while v.last() == Some(&0) {
                    v.pop();
                }
                v
            })
            .collect()
    }
    fn count(mu: Vec<usize>, e: usize, memo: &mut HashMap<(Vec<usize>, usize), u128>) -> u128 {
        if mu.is_empty() {
            return 1;
        }
        if e == 0 || mu.len() > e {
            return 0;
        }
        if let Some(&c) = memo.get(&(mu.clone(), e)) {
            return c;
        }
        let total = strips_below(&mu).into_iter().map(|nu| count(nu, e - 1, memo)).sum();
        memo.insert((mu, e), total);
        total
    }
    let trimmed: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    count(trimmed, e, &mut HashMap::new())
}

/// Degree of the variety of symmetric `n x n` matrices of rank at most `k`:
/// `prod_{a=0}^{n-k-1} C(n+a, n-k-a) / C(2a+1, a)`.
pub fn symmetric_rank_degree(n: usize, k: usize) -> (u128, u128) {
    fn binom(n: usize, k: usize) -> u128 {
        (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
    }
    fn gcd(a: u128, b: u128) -> u128 {
        if b == 0 { a } else { gcd(b, a % b) }
    }
    let (mut num, mut den) = (1u128, 1u128);
    for a in 0..n - k {
        num *= binom(n + a, n - k - a);
        den *= binom(2 * a + 1, a);
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    (num, den)
}

/// Leibniz expansion of a symmetric matrix determinant at an integer point.
pub fn leibniz(m: &[Vec<i64>]) -> i128 {
    fn perms(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in perms(n - 1) {
            for pos in 0..=p.len() {
                let mut q = p.clone();
                q.insert(pos, n - 1);
                out.push(q);
            }
        }
        out
    }
    perms(m.len())
        .into_iter()
        .map(|p| {
            let inv = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
            let prod: i128 = p.iter().enumerate().map(|(i, &j)| m[i][j] as i128).product();
            if inv % 2 == 0 { prod } else { -prod }
        })
        .sum()
}
