//! The affine symmetric group on `n = k+1` letters in window notation.
//!
//! A permutation `σ` is stored as `[σ(1), …, σ(n)]` and extended by
//! `σ(i + n) = σ(i) + n`. None of the arithmetic here touches cores, so it
//! serves as an independent model for the core-based constructions.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cores::{c_map, core_from_word, p_map, Core};
use crate::error::{Error, Result};
use crate::partition::{residue, Cell, Partition};

pub const DEFAULT_WORD_BOUND: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "AffineRepr", into = "AffineRepr")]
pub struct AffinePermutation {
    k: usize,
    window: Vec<i64>,
}

#[derive(Serialize, Deserialize)]
struct AffineRepr {
    k: usize,
    window: Vec<i64>,
}

impl From<AffinePermutation> for AffineRepr {
    fn from(s: AffinePermutation) -> Self {
        AffineRepr { k: s.k, window: s.window }
    }
}

impl TryFrom<AffineRepr> for AffinePermutation {
    type Error = Error;

    fn try_from(r: AffineRepr) -> Result<Self> {
        AffinePermutation::new(r.window, r.k)
    }
}

impl AffinePermutation {
    pub fn new(window: Vec<i64>, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        let n = (k + 1) as i64;
        if window.len() != k + 1 {
            return Err(Error::InvalidWindow(window));
        }
        let classes: BTreeSet<i64> = window.iter().map(|v| v.rem_euclid(n)).collect();
        if classes.len() != window.len() || window.iter().sum::<i64>() != n * (n + 1) / 2 {
            return Err(Error::InvalidWindow(window));
        }
        Ok(AffinePermutation { k, window })
    }

    pub fn identity(k: usize) -> Self {
        AffinePermutation { k, window: (1..=(k as i64 + 1)).collect() }
    }

    /// `ŝ_{i_1} ŝ_{i_2} ⋯ ŝ_{i_m}`.
    pub fn from_word(word: &[usize], k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidK);
        }
        word.iter()
            .try_fold(Self::identity(k), |s, &i| s.apply_generator(i, Side::Right))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn window(&self) -> &[i64] {
        &self.window
    }

    fn n(&self) -> i64 {
        self.k as i64 + 1
    }

    /// `σ(i)` for any integer `i`.
    pub fn value(&self, i: i64) -> i64 {
        let n = self.n();
        let r = (i - 1).rem_euclid(n);
        let shift = (i - 1).div_euclid(n);
        self.window[r as usize] + shift * n
    }

    /// `σ ŝ_i` (swap positions `i`, `i+1`) or `ŝ_i σ` (swap values `i`, `i+1`),
    /// all modulo `n`.
    pub fn apply_generator(&self, i: usize, side: Side) -> Result<Self> {
        if i > self.k {
            return Err(Error::InvalidResidue { residue: i, k: self.k });
        }
        let n = self.n();
        let mut w = self.window.clone();
        match side {
            Side::Right if i == 0 => {
                let last = w.len() - 1;
                let (first, end) = (w[0], w[last]);
                w[0] = end - n;
                w[last] = first + n;
            }
            Side::Right => w.swap(i - 1, i),
            Side::Left => {
                let i = i as i64;
                for v in &mut w {
                    let r = v.rem_euclid(n);
                    if r == i {
                        *v += 1;
                    } else if r == (i + 1) % n {
                        *v -= 1;
                    }
                }
            }
        }
        Ok(AffinePermutation { k: self.k, window: w })
    }

    pub fn compose(&self, other: &AffinePermutation) -> Result<Self> {
        if self.k != other.k {
            return Err(Error::KMismatch(self.k, other.k));
        }
        let window = other.window.iter().map(|&v| self.value(v)).collect();
        Ok(AffinePermutation { k: self.k, window })
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut window = vec![0; self.window.len()];
        for (pos, &v) in self.window.iter().enumerate() {
            let r = (v - 1).rem_euclid(n);
            let shift = (v - 1).div_euclid(n);
            window[r as usize] = pos as i64 + 1 - shift * n;
        }
        AffinePermutation { k: self.k, window }
    }

    /// Number of affine inversions.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut total = 0;
        for i in 0..self.window.len() {
            for j in (i + 1)..self.window.len() {
                total += (self.window[j] - self.window[i]).div_euclid(n).unsigned_abs() as usize;
            }
        }
        total
    }

    pub fn is_identity(&self) -> bool {
        self.window.iter().enumerate().all(|(i, &v)| v == i as i64 + 1)
    }

    /// `ℓ(σ ŝ_i) < ℓ(σ)`.
    pub fn has_right_descent(&self, i: usize) -> bool {
        let i = i as i64;
        self.value(i) > self.value(i + 1)
    }

    /// `ℓ(ŝ_i σ) < ℓ(σ)`.
    pub fn has_left_descent(&self, i: usize) -> bool {
        self.inverse().has_right_descent(i)
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        (0..=self.k).filter(|&i| inv.has_right_descent(i)).collect()
    }

    /// No right descent among `ŝ_1, …, ŝ_k`, i.e. the window increases.
    pub fn is_min_coset_rep(&self) -> bool {
        self.window.windows(2).all(|w| w[0] < w[1])
    }

    /// The minimal representative of `σ S_{k+1}`.
    pub fn min_coset_rep(&self) -> Self {
        let mut window = self.window.clone();
        window.sort_unstable();
        AffinePermutation { k: self.k, window }
    }

    /// One reduced word, built by peeling the smallest left descent.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut cur = self.clone();
        let mut word = Vec::with_capacity(self.length());
        while let Some(&i) = cur.left_descents().first() {
            word.push(i);
            cur = cur.apply_generator(i, Side::Left).expect("descent in range");
        }
        word
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self, bound: usize) -> Result<Vec<Vec<usize>>> {
        let len = self.length();
        if len > bound {
            return Err(Error::BoundExceeded { bound, needed: len });
        }
        fn rec(s: &AffinePermutation, memo: &mut HashMap<AffinePermutation, Vec<Vec<usize>>>) -> Vec<Vec<usize>> {
            if s.is_identity() {
                return vec![vec![]];
            }
            if let Some(v) = memo.get(s) {
                return v.clone();
            }
            let mut out = Vec::new();
            for i in s.left_descents() {
                let rest = s.apply_generator(i, Side::Left).expect("descent in range");
                for w in rec(&rest, memo) {
                    let mut word = Vec::with_capacity(w.len() + 1);
                    word.push(i);
                    word.extend(w);
                    out.push(word);
                }
            }
            memo.insert(s.clone(), out.clone());
            out
        }
        let mut words = rec(self, &mut HashMap::new());
        words.sort();
        Ok(words)
    }

    /// `ŝ_i σ` for every `i` with `ℓ(ŝ_i σ) = ℓ(σ) + 1`.
    pub fn weak_covers(&self) -> Vec<AffinePermutation> {
        let mut out: Vec<AffinePermutation> = (0..=self.k)
            .filter(|&i| !self.has_left_descent(i))
            .map(|i| self.apply_generator(i, Side::Left).expect("in range"))
            .collect();
        out.sort();
        out
    }

    /// Weak covers that stay minimal coset representatives.
    pub fn weak_covers_in_quotient(&self) -> Vec<AffinePermutation> {
        self.weak_covers().into_iter().filter(Self::is_min_coset_rep).collect()
    }

    /// `s_{i_1} ⋯ s_{i_ℓ} · ∅` for a reduced word `i_1 ⋯ i_ℓ` of `σ`.
    pub fn s_map(&self) -> Result<Core> {
        if !self.is_min_coset_rep() {
            return Err(Error::NotMinimalCosetRep);
        }
        core_from_word(&self.reduced_word(), self.k)
    }

    /// The k-bounded partition `p(s(σ))`.
    pub fn to_partition(&self) -> Result<Partition> {
        Ok(p_map(&self.s_map()?))
    }
}

impl fmt::Display for AffinePermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.window.iter().map(|v| v.to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

/// Residues of each row of `λ` read right to left, top row first.
pub fn w_lambda(lambda: &Partition, k: usize) -> Result<Vec<usize>> {
    lambda.require_k_bounded(k)?;
    let mut word = Vec::with_capacity(lambda.degree());
    for row in (1..=lambda.len()).rev() {
        for col in (1..=lambda.part(row)).rev() {
            word.push(residue(Cell::new(row, col), k));
        }
    }
    Ok(word)
}

/// `σ_λ`, the permutation with reduced word `w_λ`.
pub fn phi(lambda: &Partition, k: usize) -> Result<AffinePermutation> {
    AffinePermutation::from_word(&w_lambda(lambda, k)?, k)
}

/// Bruhat order on the quotient via containment of cores.
pub fn bruhat_leq(sigma: &AffinePermutation, tau: &AffinePermutation) -> Result<bool> {
    if sigma.k != tau.k {
        return Err(Error::KMismatch(sigma.k, tau.k));
    }
    Ok(sigma.s_map()?.shape().is_subset_of(tau.s_map()?.shape()))
}

/// Bruhat order by the subword property: `σ ≤ τ` iff some subword of a
/// reduced word of `τ` is a word for `σ`.
pub fn bruhat_leq_subword(sigma: &AffinePermutation, tau: &AffinePermutation) -> Result<bool> {
    if sigma.k != tau.k {
        return Err(Error::KMismatch(sigma.k, tau.k));
    }
    let word = tau.reduced_word();
    let target = sigma.length();
    if target > word.len() {
        return Ok(false);
    }
    // products of subwords, tracked as a set per prefix
    let mut reachable: BTreeSet<AffinePermutation> = BTreeSet::from([AffinePermutation::identity(tau.k)]);
    for &i in &word {
        let next: Vec<AffinePermutation> =
            reachable.iter().map(|s| s.apply_generator(i, Side::Right).expect("in range")).collect();
        reachable.extend(next);
    }
    Ok(reachable.contains(sigma))
}

/// Minimal coset representatives of length ≤ `max_len`, by breadth-first
/// search along quotient weak covers from the identity.
pub fn quotient_elements(k: usize, max_len: usize) -> Result<Vec<AffinePermutation>> {
    if k == 0 {
        return Err(Error::InvalidK);
    }
    let mut layer = vec![AffinePermutation::identity(k)];
    let mut out = layer.clone();
    for _ in 0..max_len {
        let next: BTreeSet<AffinePermutation> =
            layer.iter().flat_map(AffinePermutation::weak_covers_in_quotient).collect();
        layer = next.into_iter().collect();
        out.extend(layer.iter().cloned());
    }
    Ok(out)
}

/// `φ^{-1}`, through `p ∘ s`, checked to land back on `c(λ)`.
pub fn phi_inverse(sigma: &AffinePermutation) -> Result<Partition> {
    let lambda = sigma.to_partition()?;
    debug_assert_eq!(c_map(&lambda, sigma.k)?, sigma.s_map()?);
    Ok(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn window_validation() {
        assert!(AffinePermutation::new(vec![1, 2, 3], 2).is_ok());
        assert!(AffinePermutation::new(vec![0, 2, 4], 2).is_ok());
        assert!(AffinePermutation::new(vec![1, 2, 4], 2).is_err());
        assert!(AffinePermutation::new(vec![1, 4, 1], 2).is_err());
        assert!(AffinePermutation::new(vec![1, 2], 2).is_err());
    }

    #[test]
    fn generators_are_involutions() {
        for k in 1..=4 {
            let id = AffinePermutation::identity(k);
            for i in 0..=k {
                for side in [Side::Left, Side::Right] {
                    let s = id.apply_generator(i, side).unwrap();
                    assert_eq!(s.length(), 1);
                    assert_eq!(s.apply_generator(i, side).unwrap(), id);
                }
                assert_eq!(
                    id.apply_generator(i, Side::Left).unwrap(),
                    id.apply_generator(i, Side::Right).unwrap()
                );
            }
        }
    }

    #[test]
    fn worked_words() {
        let sigma = AffinePermutation::from_word(&[3, 1, 0, 3, 2, 1, 3, 0], 3).unwrap();
        assert_eq!(sigma.length(), 8);
        assert!(sigma.is_min_coset_rep());
        assert_eq!(sigma.s_map().unwrap().shape(), &p(&[6, 3, 2, 1]));
        assert_eq!(w_lambda(&p(&[3, 2, 2, 1]), 3).unwrap(), vec![1, 3, 2, 0, 3, 2, 1, 0]);
        assert_eq!(phi(&p(&[3, 2, 2, 1]), 3).unwrap(), sigma);
        assert_eq!(phi(&p(&[3, 2, 2, 1]), 3).unwrap().length(), 8);
        assert!(phi(&Partition::empty(), 3).unwrap().is_identity());
        let s1 = AffinePermutation::identity(3).apply_generator(1, Side::Right).unwrap();
        assert!(!s1.is_min_coset_rep());
        assert_eq!(s1.s_map(), Err(Error::NotMinimalCosetRep));
    }

    #[test]
    fn reduced_word_counts() {
        let sigma = phi(&p(&[3, 2, 1, 1]), 3).unwrap();
        assert_eq!(sigma.reduced_words(DEFAULT_WORD_BOUND).unwrap().len(), 4);
        assert_eq!(AffinePermutation::identity(2).reduced_words(5).unwrap(), vec![Vec::<usize>::new()]);
        assert!(matches!(sigma.reduced_words(3), Err(Error::BoundExceeded { bound: 3, needed: 7 })));
    }

    #[test]
    fn inverse_and_compose() {
        let sigma = AffinePermutation::from_word(&[2, 0, 1, 2, 1], 2).unwrap();
        let inv = sigma.inverse();
        assert!(sigma.compose(&inv).unwrap().is_identity());
        assert!(inv.compose(&sigma).unwrap().is_identity());
        assert_eq!(inv.length(), sigma.length());
    }

    #[test]
    fn quotient_covers_of_identity() {
        let id = AffinePermutation::identity(3);
        let covers = id.weak_covers_in_quotient();
        assert_eq!(covers, vec![id.apply_generator(0, Side::Left).unwrap()]);
        assert_eq!(id.weak_covers().len(), 4);
    }

    #[test]
    fn json_round_trip() {
        let sigma = phi(&p(&[2, 1]), 2).unwrap();
        let s = serde_json::to_string(&sigma).unwrap();
        assert!(s.starts_with(r#"{"k":2,"window":["#));
        assert_eq!(serde_json::from_str::<AffinePermutation>(&s).unwrap(), sigma);
        assert!(serde_json::from_str::<AffinePermutation>(r#"{"k":2,"window":[1,1,4]}"#).is_err());
    }
}
