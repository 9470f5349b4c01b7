//! Braid words on the n-marked disk.
//!
//! A letter `i > 0` stands for σ_i and `-i` for σ_i⁻¹. Words are stored as
//! written; [`BraidWord::reduced`] performs free reduction on demand.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    TooFewStrands(usize),
    LetterOutOfRange { letter: i32, strands: usize },
    StrandMismatch { left: usize, right: usize },
}

impl fmt::Display for BraidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BraidError::TooFewStrands(n) => write!(f, "a braid needs at least 2 strands, got {n}"),
            BraidError::LetterOutOfRange { letter, strands } => {
                write!(f, "letter {letter} is not a generator of B_{strands}")
            }
            BraidError::StrandMismatch { left, right } => {
                write!(f, "strand counts differ: {left} vs {right}")
            }
        }
    }
}

impl core::error::Error for BraidError {}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self, BraidError> {
        if n < 2 {
            return Err(BraidError::TooFewStrands(n));
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(BraidError::LetterOutOfRange { letter: l, strands: n });
            }
        }
        Ok(BraidWord { n, letters })
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 2, "a braid needs at least 2 strands");
        BraidWord { n, letters: Vec::new() }
    }

    /// The full twist Δ² = (σ₁…σ_{n−1})ⁿ.
    pub fn full_twist(n: usize) -> Self {
        let row: Vec<i32> = (1..n as i32).collect();
        let mut letters = Vec::with_capacity(n * (n - 1));
        for _ in 0..n {
            letters.extend_from_slice(&row);
        }
        BraidWord { n, letters }
    }

    pub fn strands(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|l| l.signum() as i64).sum()
    }

    pub fn reduced(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { n: self.n, letters: out }
    }

    pub fn inverse(&self) -> Self {
        BraidWord { n: self.n, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// Concatenation without reduction.
    pub fn concat(&self, other: &BraidWord) -> Result<Self, BraidError> {
        if self.n != other.n {
            return Err(BraidError::StrandMismatch { left: self.n, right: other.n });
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { n: self.n, letters })
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.len() * k.unsigned_abs() as usize);
        for _ in 0..k.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        BraidWord { n: self.n, letters }
    }

    /// `c · self · c⁻¹`
    pub fn conjugate_by(&self, c: &BraidWord) -> Result<Self, BraidError> {
        c.concat(self)?.concat(&c.inverse())
    }

    /// The same word read on more strands (generators keep their indices).
    pub fn widen(&self, n: usize) -> Self {
        assert!(n >= self.n);
        BraidWord { n, letters: self.letters.clone() }
    }
}

/// Concatenate and freely reduce.
pub fn compose(a: &BraidWord, b: &BraidWord) -> Result<BraidWord, BraidError> {
    Ok(a.concat(b)?.reduced())
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("e");
        }
        for (k, l) in self.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Image of a braid in the symmetric group. `perm[i] = j` means the strand
/// starting at position `i` ends at position `j` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StrandPermutation {
    perm: Vec<usize>,
}

impl StrandPermutation {
    pub fn identity(n: usize) -> Self {
        StrandPermutation { perm: (0..n).collect() }
    }

    pub fn images(&self) -> &[usize] {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Cycles, each starting at its least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.perm.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            let mut c = Vec::new();
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                c.push(x);
                x = self.perm[x];
            }
            out.push(c);
        }
        out
    }

    /// Number of components of the closure.
    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn is_single_cycle(&self) -> bool {
        self.cycle_count() == 1
    }
}

pub fn strand_permutation(b: &BraidWord) -> StrandPermutation {
    // at[p] = starting index of the strand currently at position p
    let mut at: Vec<usize> = (0..b.n).collect();
    for &l in &b.letters {
        let i = l.unsigned_abs() as usize - 1;
        at.swap(i, i + 1);
    }
    let mut perm = vec![0; b.n];
    for (pos, &start) in at.iter().enumerate() {
        perm[start] = pos;
    }
    StrandPermutation { perm }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(n, l.to_vec()).unwrap()
    }

    #[test]
    fn inverse_cancels() {
        let e = compose(&w(5, &[1]), &w(5, &[-1])).unwrap();
        assert!(e.is_empty());
    }

    #[test]
    fn full_twist_exponent_sum() {
        assert_eq!(BraidWord::full_twist(5).exponent_sum(), 20);
        let b = w(5, &[4, 3, 4, 3, -2, -1, -2, -1]);
        let c = compose(&BraidWord::full_twist(5), &b).unwrap();
        assert_eq!(c.exponent_sum(), 20 + b.exponent_sum());
        assert_eq!(b.exponent_sum(), 0);
    }

    #[test]
    fn rejects_bad_letters() {
        assert!(BraidWord::new(5, vec![5]).is_err());
        assert!(BraidWord::new(5, vec![0]).is_err());
        assert!(BraidWord::new(1, vec![]).is_err());
        assert!(compose(&w(4, &[1]), &w(5, &[1])).is_err());
    }

    #[test]
    fn permutations() {
        assert!(strand_permutation(&BraidWord::identity(5)).is_identity());
        assert!(strand_permutation(&w(5, &[1, 1])).is_identity());
        let t = w(5, &[1, 2, 3, 4]).pow(3);
        assert!(strand_permutation(&t).is_single_cycle());
    }
}
