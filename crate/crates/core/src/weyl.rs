//! Permutations, the symplectic Weyl group as a subgroup of `S_2n`, and the
//! combinatorics used to study the Schubert varieties of the family `W_{k,r}`.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// A permutation of `{1..N}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct Permutation {
    word: Vec<usize>,
}

impl Permutation {
    pub fn new(word: Vec<usize>) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(Error::NotAPermutation(format!("{word:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { word })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            word: (1..=n).collect(),
        }
    }

    /// Transposition of the values in positions `i` and `j` (1-based) of the identity.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut word: Vec<usize> = (1..=n).collect();
        word.swap(i - 1, j - 1);
        Self { word }
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// Number of inversions, which is the Coxeter length in `S_N`.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut inv = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// True iff no subsequence is order-isomorphic to one of `patterns`.
    pub fn avoids(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| !contains_pattern(&self.word, &p.word))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.word)
    }
}

fn write_word(f: &mut fmt::Formatter<'_>, w: &[usize]) -> fmt::Result {
    let parts: Vec<String> = w.iter().map(ToString::to_string).collect();
    write!(f, "({})", parts.join(","))
}

pub fn length_a(p: &Permutation) -> usize {
    p.length()
}

pub fn avoids_patterns(p: &Permutation, patterns: &[Permutation]) -> bool {
    p.avoids(patterns)
}

/// The two patterns whose avoidance characterizes smooth type A Schubert varieties.
pub fn smoothness_patterns() -> [Permutation; 2] {
    [
        Permutation { word: vec![4, 2, 3, 1] },
        Permutation { word: vec![3, 1, 4, 2] },
    ]
}

fn contains_pattern(word: &[usize], pattern: &[usize]) -> bool {
    if pattern.is_empty() {
        return true;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    extend_match(word, pattern, 0, &mut chosen)
}

// Grows a subsequence one entry at a time, pruning as soon as the relative order
// of the chosen values disagrees with the pattern prefix.
fn extend_match(word: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
    let depth = chosen.len();
    if depth == pattern.len() {
        return true;
    }
    let remaining = pattern.len() - depth;
    for pos in start..=word.len().saturating_sub(remaining) {
        let v = word[pos];
        let consistent = chosen
            .iter()
            .zip(pattern)
            .all(|(&c, &p)| (c < v) == (p < pattern[depth]));
        if consistent {
            chosen.push(v);
            if extend_match(word, pattern, pos + 1, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// An element of `W_G`, the fixed points of the involution `w -> w0 w w0` on `S_2n`,
/// stored by its first `n` letters.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize)]
pub struct WeylElementC {
    n: usize,
    half_word: Vec<usize>,
}

impl WeylElementC {
    pub fn new(n: usize, half_word: Vec<usize>) -> Result<Self> {
        if n == 0 || half_word.len() != n {
            return Err(Error::NotSymplecticWeylElement(format!(
                "expected {n} letters, got {half_word:?}"
            )));
        }
        let mut seen = vec![false; 2 * n + 1];
        for &v in &half_word {
            if v == 0 || v > 2 * n || seen[v] || seen[2 * n + 1 - v] {
                return Err(Error::NotSymplecticWeylElement(format!("{half_word:?}")));
            }
            seen[v] = true;
        }
        Ok(Self { n, half_word })
    }

    /// Reads the half word off a full word, checking the symmetry `a_i = 2n+1-a_{2n+1-i}`.
    pub fn from_full_word(p: &Permutation) -> Result<Self> {
        let w = p.word();
        if w.len() % 2 != 0 || w.is_empty() {
            return Err(Error::NotSymplecticWeylElement(format!("{p}")));
        }
        let m = w.len();
        if (0..m).any(|i| w[i] != m + 1 - w[m - 1 - i]) {
            return Err(Error::NotSymplecticWeylElement(format!("{p}")));
        }
        Self::new(m / 2, w[..m / 2].to_vec())
    }

    pub fn identity(n: usize) -> Self {
        Self {
            n,
            half_word: (1..=n).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn half_word(&self) -> &[usize] {
        &self.half_word
    }

    pub fn full_word(&self) -> Permutation {
        let n2 = 2 * self.n;
        let mut word = self.half_word.clone();
        word.extend(self.half_word.iter().rev().map(|&a| n2 + 1 - a));
        Permutation { word }
    }

    pub fn m_value(&self) -> usize {
        self.half_word.iter().filter(|&&a| a > self.n).count()
    }

    pub fn length_c(&self) -> Result<usize> {
        let total = self.full_word().length() + self.m_value();
        if total % 2 != 0 {
            return Err(Error::InvariantBreach(format!(
                "l_H + m_w = {total} is odd for {self}"
            )));
        }
        Ok(total / 2)
    }
}

impl fmt::Display for WeylElementC {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_word(f, &self.half_word)
    }
}

pub fn m_value(w: &WeylElementC) -> usize {
    w.m_value()
}

pub fn length_c(w: &WeylElementC) -> Result<usize> {
    w.length_c()
}

/// Primed index `i' = 2n + 1 - i`.
pub fn prime(n: usize, i: usize) -> usize {
    2 * n + 1 - i
}

pub fn check_family(n: usize, k: usize, r: usize) -> Result<()> {
    if k == 0 || k >= r || r > n {
        return Err(Error::InvalidParameters(format!(
            "need 1 <= k < r <= n, got n={n}, k={k}, r={r}"
        )));
    }
    Ok(())
}

/// The element `(k+1, ..., r, n', ..., (r+1)', k', ..., 1')` of `W_{k,r}`.
pub fn family_element(n: usize, k: usize, r: usize) -> Result<WeylElementC> {
    check_family(n, k, r)?;
    let mut half: Vec<usize> = (k + 1..=r).collect();
    half.extend((r + 1..=n).rev().map(|i| prime(n, i)));
    half.extend((1..=k).rev().map(|i| prime(n, i)));
    WeylElementC::new(n, half)
}

/// Maximal representative of `w~` in `W_H`, the word
/// `[r,k+1][1',k'][(r+1)',n'][n,r+1][k,1][(k+1)',r']` of descending runs.
pub fn w_max_rep(n: usize, k: usize, r: usize) -> Result<Permutation> {
    check_family(n, k, r)?;
    let mut word: Vec<usize> = (k + 1..=r).rev().collect();
    word.extend((1..=k).map(|i| prime(n, i)));
    word.extend((r + 1..=n).map(|i| prime(n, i)));
    word.extend((r + 1..=n).rev());
    word.extend((1..=k).rev());
    word.extend((k + 1..=r).map(|i| prime(n, i)));
    Permutation::new(word)
}

/// Which Weyl group a set of omitted simple roots refers to.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum RootSystem {
    /// `S_N`, simple roots `1..N-1`.
    A { letters: usize },
    /// `W_G` inside `S_2n`, simple roots `1..n`.
    C { n: usize },
}

/// A parabolic subgroup, recorded by the simple roots it omits.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct ParabolicMarker {
    system: RootSystem,
    omitted: Vec<usize>,
}

impl ParabolicMarker {
    pub fn new(system: RootSystem, omitted: impl IntoIterator<Item = usize>) -> Result<Self> {
        let rank = match system {
            RootSystem::A { letters } => letters.saturating_sub(1),
            RootSystem::C { n } => n,
        };
        let mut omitted: Vec<usize> = omitted.into_iter().collect();
        omitted.sort_unstable();
        omitted.dedup();
        if let Some(&bad) = omitted.iter().find(|&&i| i == 0 || i > rank) {
            return Err(Error::InvalidParameters(format!(
                "simple root {bad} outside 1..={rank}"
            )));
        }
        Ok(Self { system, omitted })
    }

    /// The Borel subgroup of `S_N`.
    pub fn borel_a(letters: usize) -> Self {
        Self {
            system: RootSystem::A { letters },
            omitted: (1..letters).collect(),
        }
    }

    /// The Borel subgroup of `Sp_2n`.
    pub fn borel_c(n: usize) -> Self {
        Self {
            system: RootSystem::C { n },
            omitted: (1..=n).collect(),
        }
    }

    /// `P~ = P_{(r-k)^, n^}` in `Sp_2n`.
    pub fn p_tilde(n: usize, k: usize, r: usize) -> Result<Self> {
        check_family(n, k, r)?;
        Self::new(RootSystem::C { n }, [r - k, n])
    }

    /// `Q~ = Q_{(r-k)^, n^, (2n-(r-k))^}` in `SL_2n`.
    pub fn q_tilde(n: usize, k: usize, r: usize) -> Result<Self> {
        check_family(n, k, r)?;
        Self::new(RootSystem::A { letters: 2 * n }, [r - k, n, 2 * n - (r - k)])
    }

    pub fn system(&self) -> RootSystem {
        self.system
    }

    pub fn omitted(&self) -> &[usize] {
        &self.omitted
    }

    /// Number of letters of the ambient permutation words.
    pub fn letters(&self) -> usize {
        match self.system {
            RootSystem::A { letters } => letters,
            RootSystem::C { n } => 2 * n,
        }
    }

    /// The omitted roots seen inside `S_N` (`S_2n` for type C, where `i < n` gives `i` and `2n-i`).
    pub fn type_a_cuts(&self) -> Vec<usize> {
        match self.system {
            RootSystem::A { .. } => self.omitted.clone(),
            RootSystem::C { n } => {
                let mut cuts = Vec::new();
                for &i in &self.omitted {
                    cuts.push(i);
                    if i < n {
                        cuts.push(2 * n - i);
                    }
                }
                cuts.sort_unstable();
                cuts
            }
        }
    }

    pub fn as_type_a(&self) -> Self {
        Self {
            system: RootSystem::A {
                letters: self.letters(),
            },
            omitted: self.type_a_cuts(),
        }
    }

    /// Position ranges `[start, end)` of the Levi blocks.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 0;
        for c in self.type_a_cuts() {
            out.push((start, c));
            start = c;
        }
        out.push((start, self.letters()));
        out
    }

    fn block_of(&self, pos: usize) -> usize {
        self.type_a_cuts().iter().filter(|&&c| c < pos).count()
    }
}

/// Sorts each Levi block ascendingly, giving the minimal coset representative.
pub fn min_coset_rep(p: &Permutation, marker: &ParabolicMarker) -> Permutation {
    assert_eq!(p.len(), marker.letters());
    let mut word = p.word.clone();
    for (s, e) in marker.blocks() {
        word[s..e].sort_unstable();
    }
    Permutation { word }
}

/// Sorts each Levi block descendingly, giving the maximal coset representative.
pub fn max_coset_rep(p: &Permutation, marker: &ParabolicMarker) -> Permutation {
    assert_eq!(p.len(), marker.letters());
    let mut word = p.word.clone();
    for (s, e) in marker.blocks() {
        word[s..e].sort_unstable_by(|a, b| b.cmp(a));
    }
    Permutation { word }
}

/// Minimal representative of `w W_P`; block sorting respects the symplectic symmetry.
pub fn w_tilde_min_rep(w: &WeylElementC, marker: &ParabolicMarker) -> Result<WeylElementC> {
    if marker.letters() != 2 * w.n() {
        return Err(Error::InvalidParameters(format!(
            "marker on {} letters used with an element of S_{}",
            marker.letters(),
            2 * w.n()
        )));
    }
    WeylElementC::from_full_word(&min_coset_rep(&w.full_word(), marker))
}

/// Grassmannian Bruhat order: `u <= v` iff sorted entries compare componentwise.
pub fn bruhat_leq_grassmannian(u: &[usize], v: &[usize]) -> Result<bool> {
    if u.len() != v.len() {
        return Err(Error::InvalidParameters(format!(
            "cannot compare index sets of sizes {} and {}",
            u.len(),
            v.len()
        )));
    }
    let mut a = u.to_vec();
    let mut b = v.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    Ok(a.iter().zip(&b).all(|(x, y)| x <= y))
}

/// Bruhat order on `W / W_P`, as the conjunction of Grassmannian comparisons
/// at every omitted root.
pub fn bruhat_leq(u: &Permutation, v: &Permutation, marker: &ParabolicMarker) -> bool {
    assert_eq!(u.len(), v.len());
    marker.type_a_cuts().into_iter().all(|c| {
        bruhat_leq_grassmannian(&u.word[..c], &v.word[..c]).expect("equal prefix lengths")
    })
}

/// Dimension of the Zariski tangent space of the type A Schubert variety `X_P(w)`
/// at the identity: the number of reflections outside `W_P` lying below `w`.
pub fn tangent_dim_at_id(w: &Permutation, marker: &ParabolicMarker) -> usize {
    let a = marker.as_type_a();
    let n = w.len();
    let mut count = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            if a.block_of(i) != a.block_of(j) && bruhat_leq(&Permutation::transposition(n, i, j), w, &a) {
                count += 1;
            }
        }
    }
    count
}

/// Tangent space dimension of the symplectic Schubert variety at the identity,
/// `(dim T(w, H) + c(w)) / 2` with `c(w)` counting the reflections `(i, i')` below `w`.
pub fn tangent_dim_at_id_c(w: &WeylElementC, marker: &ParabolicMarker) -> Result<usize> {
    let full = w.full_word();
    let a = marker.as_type_a();
    let t_h = tangent_dim_at_id(&full, &a);
    let n2 = 2 * w.n();
    let c = (1..=w.n())
        .filter(|&i| {
            let j = n2 + 1 - i;
            a.block_of(i) != a.block_of(j) && bruhat_leq(&Permutation::transposition(n2, i, j), &full, &a)
        })
        .count();
    if (t_h + c) % 2 != 0 {
        return Err(Error::InvariantBreach(format!(
            "tangent count {t_h} + {c} is odd for {w}"
        )));
    }
    Ok((t_h + c) / 2)
}
