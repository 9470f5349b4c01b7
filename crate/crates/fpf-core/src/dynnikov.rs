//! Dynnikov coordinates of integral laminations on the n-marked disk.
//!
//! Convention: `x = (a_1, b_1, …, a_{n−2}, b_{n−2})`. Every nonzero integer
//! vector is a lamination. The round curve around marked points `{i, i+1}`
//! has `b_{i−1} = −1`, `b_i = 1` and all other coordinates zero; the curve
//! around `{1, …, k}` has `b_{k−1} = 1` only.
//!
//! Words act letter by letter in reading order, so `apply(ab, x)` applies
//! `a` first. Writing `P(x) = max(x, 0)` and `M(x) = min(x, 0)`, the update
//! for an interior generator σ_i (`1 < i < n−1`, with `j = i`) is
//!
//! ```text
//! σ_i:   c = a_{j-1} - a_j + P(b_j) - M(b_{j-1})
//!        a'_{j-1} = a_{j-1} + P(b_{j-1}) + P(P(b_j) - c)    b'_{j-1} = b_j - P(c)
//!        a'_j     = a_j + M(b_j) + M(M(b_{j-1}) + c)        b'_j     = b_{j-1} + P(c)
//! σ_i⁻¹: d = a_{j-1} - a_j - P(b_j) + M(b_{j-1})
//!        a'_{j-1} = a_{j-1} - P(b_{j-1}) - P(P(b_j) + d)    b'_{j-1} = b_j + M(d)
//!        a'_j     = a_j - M(b_j) - M(M(b_{j-1}) - d)        b'_j     = b_{j-1} - M(d)
//! ```
//!
//! and on the end pairs
//!
//! ```text
//! σ_1:       a' = b - P(P(b) - a)     b' = P(b) - a
//! σ_1⁻¹:     a' = -b + P(a + P(b))    b' = a + P(b)
//! σ_{n-1}:   a' = b - M(M(b) - a)     b' = M(b) - a
//! σ_{n-1}⁻¹: a' = -b + M(a + M(b))    b' = a + M(b)
//! ```

use crate::braid::{BraidError, BraidWord};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DynnikovError {
    WrongLength { expected: usize, got: usize },
    Zero,
    Overflow,
    Braid(BraidError),
}

impl fmt::Display for DynnikovError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynnikovError::WrongLength { expected, got } => {
                write!(f, "expected {expected} coordinates, got {got}")
            }
            DynnikovError::Zero => f.write_str("the zero vector is not a lamination"),
            DynnikovError::Overflow => f.write_str("coordinate overflow"),
            DynnikovError::Braid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DynnikovError {}

impl From<BraidError> for DynnikovError {
    fn from(e: BraidError) -> Self {
        DynnikovError::Braid(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DynnikovCoords {
    coords: Vec<i128>,
}

impl DynnikovCoords {
    pub fn new(n: usize, coords: Vec<i128>) -> Result<Self, DynnikovError> {
        let expected = 2 * n - 4;
        if coords.len() != expected {
            return Err(DynnikovError::WrongLength { expected, got: coords.len() });
        }
        if coords.iter().all(|&c| c == 0) {
            return Err(DynnikovError::Zero);
        }
        Ok(DynnikovCoords { coords })
    }

    pub fn strands(&self) -> usize {
        self.coords.len() / 2 + 2
    }

    pub fn coords(&self) -> &[i128] {
        &self.coords
    }

    /// Round curve around marked points `i` and `i+1` (1-based).
    pub fn round_curve(n: usize, i: usize) -> Self {
        assert!(n >= 3 && (1..n).contains(&i));
        let mut c = vec![0; 2 * n - 4];
        if i >= 2 {
            c[2 * (i - 2) + 1] = -1;
        }
        if i <= n - 2 {
            c[2 * (i - 1) + 1] = 1;
        }
        DynnikovCoords { coords: c }
    }

    /// Curve around marked points `1..=k`, for `2 <= k <= n-1`.
    pub fn nested_curve(n: usize, k: usize) -> Self {
        assert!(n >= 3 && (2..n).contains(&k));
        let mut c = vec![0; 2 * n - 4];
        c[2 * (k - 2) + 1] = 1;
        DynnikovCoords { coords: c }
    }

    pub fn max_norm(&self) -> i128 {
        self.coords.iter().map(|c| c.abs()).max().unwrap_or(0)
    }
}

impl fmt::Display for DynnikovCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// Scalars the piecewise-linear action can run over.
pub trait PlScalar: Copy + PartialOrd + Add<Output = Self> + Sub<Output = Self> + Neg<Output = Self> {
    const ZERO: Self;
    fn pos(self) -> Self {
        if self > Self::ZERO { self } else { Self::ZERO }
    }
    fn negpart(self) -> Self {
        if self < Self::ZERO { self } else { Self::ZERO }
    }
}

impl PlScalar for i128 {
    const ZERO: Self = 0;
}

impl PlScalar for f64 {
    const ZERO: Self = 0.0;
}

/// Apply σ_i^{±1} in place. `x.len() == 2n−4`.
pub fn act_letter<T: PlScalar>(x: &mut [T], n: usize, letter: i32) {
    let i = letter.unsigned_abs() as usize;
    let positive = letter > 0;
    let m = n - 2;
    let p = |v: T| v.pos();
    let q = |v: T| v.negpart();
    if n == 2 {
        return;
    }
    if i == 1 {
        let (a, b) = (x[0], x[1]);
        if positive {
            x[0] = b - p(p(b) - a);
            x[1] = p(b) - a;
        } else {
            x[0] = -b + p(a + p(b));
            x[1] = a + p(b);
        }
        return;
    }
    if i == n - 1 {
        let (a, b) = (x[2 * m - 2], x[2 * m - 1]);
        if positive {
            x[2 * m - 2] = b - q(q(b) - a);
            x[2 * m - 1] = q(b) - a;
        } else {
            x[2 * m - 2] = -b + q(a + q(b));
            x[2 * m - 1] = a + q(b);
        }
        return;
    }
    // pairs j-1 and j in 1-based numbering, i.e. slots i-2 and i-1
    let (a0, b0) = (x[2 * (i - 2)], x[2 * (i - 2) + 1]);
    let (a1, b1) = (x[2 * (i - 1)], x[2 * (i - 1) + 1]);
    let (na0, nb0, na1, nb1);
    if positive {
        let c = a0 - a1 + p(b1) - q(b0);
        na0 = a0 + p(b0) + p(p(b1) - c);
        nb0 = b1 - p(c);
        na1 = a1 + q(b1) + q(q(b0) + c);
        nb1 = b0 + p(c);
    } else {
        let d = a0 - a1 - p(b1) + q(b0);
        na0 = a0 - p(b0) - p(p(b1) + d);
        nb0 = b1 + q(d);
        na1 = a1 - q(b1) - q(q(b0) - d);
        nb1 = b0 - q(d);
    }
    x[2 * (i - 2)] = na0;
    x[2 * (i - 2) + 1] = nb0;
    x[2 * (i - 1)] = na1;
    x[2 * (i - 1) + 1] = nb1;
}

const LIMIT: i128 = 1 << 120;

pub fn dynnikov_apply(b: &BraidWord, x: &DynnikovCoords) -> Result<DynnikovCoords, DynnikovError> {
    let n = b.strands();
    if x.coords.len() != 2 * n - 4 {
        return Err(DynnikovError::WrongLength { expected: 2 * n - 4, got: x.coords.len() });
    }
    if x.coords.iter().all(|&c| c == 0) {
        return Err(DynnikovError::Zero);
    }
    let mut v = x.coords.clone();
    for &l in b.letters() {
        if v.iter().any(|c| c.abs() >= LIMIT) {
            return Err(DynnikovError::Overflow);
        }
        act_letter(&mut v, n, l);
    }
    Ok(DynnikovCoords { coords: v })
}

/// Round curves, nested curves and any extra laminations supplied by the caller.
pub fn test_family(n: usize, extra: &[DynnikovCoords]) -> Vec<DynnikovCoords> {
    let mut fam: Vec<DynnikovCoords> = (1..n).map(|i| DynnikovCoords::round_curve(n, i)).collect();
    for k in 3..n {
        fam.push(DynnikovCoords::nested_curve(n, k));
    }
    fam.extend(extra.iter().filter(|c| c.strands() == n).cloned());
    fam
}

/// Random laminations with entries in `-10..=10`; deterministic in `seed`.
pub fn random_laminations(n: usize, count: usize, seed: u64) -> Vec<DynnikovCoords> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let v: Vec<i128> = (0..2 * n - 4).map(|_| (rng.next_u32() % 21) as i128 - 10).collect();
        if let Ok(c) = DynnikovCoords::new(n, v) {
            out.push(c);
        }
    }
    out
}

/// Equality in B_n: equal exponent sums and `a·b⁻¹` fixes every lamination in
/// the test family. Only as strong as the family; see [`test_family`].
pub fn braids_equal_with(
    a: &BraidWord,
    b: &BraidWord,
    family: &[DynnikovCoords],
) -> Result<bool, DynnikovError> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch { left: a.strands(), right: b.strands() }.into());
    }
    if a.exponent_sum() != b.exponent_sum() {
        return Ok(false);
    }
    let w = a.concat(&b.inverse())?.reduced();
    if w.is_empty() {
        return Ok(true);
    }
    for c in family {
        if dynnikov_apply(&w, c)? != *c {
            return Ok(false);
        }
    }
    Ok(true)
}

pub const DEFAULT_RANDOM_LAMINATIONS: usize = 32;
pub const DEFAULT_SEED: u64 = 0x5EED;

pub fn braids_equal(a: &BraidWord, b: &BraidWord) -> Result<bool, DynnikovError> {
    if a.strands() < 3 {
        if a.strands() != b.strands() {
            return Err(BraidError::StrandMismatch { left: a.strands(), right: b.strands() }.into());
        }
        return Ok(a.exponent_sum() == b.exponent_sum());
    }
    let n = a.strands();
    let fam = test_family(n, &random_laminations(n, DEFAULT_RANDOM_LAMINATIONS, DEFAULT_SEED));
    braids_equal_with(a, b, &fam)
}

/// Growth of the max-norm of a lamination under iteration.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Growth {
    pub rate: f64,
    /// False when the orbit does not grow (periodic or reducible signal).
    pub exponential: bool,
}

/// Seed used when none is given: a lamination in general position.
pub fn default_seed(n: usize) -> Vec<f64> {
    (0..2 * n - 4).map(|k| if k % 2 == 0 { (k / 2 + 1) as f64 } else { -((k / 2) as f64) - 1.5 }).collect()
}

/// Estimate the dilatation by iterating `b` on a seed, renormalising each step.
/// The action is homogeneous of degree one, so floating point scaling is harmless.
pub fn dilatation_estimate(b: &BraidWord, iters: usize, seed: Option<&[f64]>) -> Growth {
    let n = b.strands();
    assert!(iters >= 1);
    if n < 3 {
        return Growth { rate: 1.0, exponential: false };
    }
    let mut x: Vec<f64> = match seed {
        Some(s) => s.to_vec(),
        None => default_seed(n),
    };
    let norm = |v: &[f64]| v.iter().fold(0.0f64, |m, c| if c.abs() > m { c.abs() } else { m });
    let n0 = norm(&x);
    for c in x.iter_mut() {
        *c /= n0;
    }
    let mut rate = 1.0;
    for _ in 0..iters {
        for &l in b.letters() {
            act_letter(&mut x, n, l);
        }
        let r = norm(&x);
        if r == 0.0 {
            return Growth { rate: 0.0, exponential: false };
        }
        rate = r;
        for c in x.iter_mut() {
            *c /= r;
        }
    }
    Growth { rate, exponential: rate > 1.0 + 1e-6 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_curves_fixed_by_their_twist() {
        for i in 1..5 {
            let c = DynnikovCoords::round_curve(5, i);
            let t = BraidWord::new(5, alloc::vec![i as i32]).unwrap();
            assert_eq!(dynnikov_apply(&t, &c).unwrap(), c);
        }
    }

    #[test]
    fn braid_relation() {
        let a = BraidWord::new(5, alloc::vec![1, 2, 1]).unwrap();
        let b = BraidWord::new(5, alloc::vec![2, 1, 2]).unwrap();
        assert!(braids_equal(&a, &b).unwrap());
        let c = BraidWord::new(5, alloc::vec![1, 2, 2]).unwrap();
        assert!(!braids_equal(&a, &c).unwrap());
    }

    #[test]
    fn identity_growth() {
        let g = dilatation_estimate(&BraidWord::identity(5), 10, None);
        assert!((g.rate - 1.0).abs() < 1e-12 && !g.exponential);
    }
}
