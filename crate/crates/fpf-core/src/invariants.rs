//! Closure invariants of braids.
//!
//! Reduced Burau convention (`n ≥ 3`): σ_i acts as the identity except on the
//! block of rows/columns `i−1, i, i+1` (1-based, clipped at the ends), where
//! it is
//!
//! ```text
//! [ 1  t  0 ]
//! [ 0 -t  0 ]
//! [ 0  1  1 ]
//! ```
//!
//! so σ_1 is `[[-t, 0], [1, 1]]` in the top-left corner and σ_{n−1} is
//! `[[1, t], [0, -t]]` in the bottom-right. For `n = 2` the representation
//! is `σ_1 ↦ (-t)`. Every generator has determinant `−t`.

use crate::braid::{strand_permutation, BraidWord};
use crate::matrix::{IntMatrix, LaurentMatrix};
use crate::poly::{IntPoly, LaurentPoly};
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InvariantError {
    NotAKnot { components: usize },
    EvenStrandCount(usize),
    WrongDegree(Option<usize>),
}

impl fmt::Display for InvariantError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InvariantError::NotAKnot { components } => {
                write!(f, "closure is a link with {components} components")
            }
            InvariantError::EvenStrandCount(n) => {
                write!(f, "double cover of a {n}-braid closure has two boundary components")
            }
            InvariantError::WrongDegree(d) => write!(f, "expected a quartic, got degree {d:?}"),
        }
    }
}

impl core::error::Error for InvariantError {}

fn generator_matrix(n: usize, letter: i32) -> LaurentMatrix {
    let d = n - 1;
    let i = letter.unsigned_abs() as usize;
    let t = LaurentPoly::t();
    let mut m = LaurentMatrix::identity(d);
    if d == 1 {
        let v = if letter > 0 { -t } else { -LaurentPoly::monomial(1, -1) };
        m.set(0, 0, v);
        return m;
    }
    // 0-based row of σ_i's central entry
    let c = i - 1;
    if letter > 0 {
        m.set(c, c, -t.clone());
        if c >= 1 {
            m.set(c - 1, c, t.clone());
        }
        if c + 1 < d {
            m.set(c + 1, c, LaurentPoly::one());
        }
    } else {
        // inverse block: [1 1 0; 0 -t^-1 0; 0 t^-1 1]
        let ti = LaurentPoly::monomial(1, -1);
        m.set(c, c, -ti.clone());
        if c >= 1 {
            m.set(c - 1, c, LaurentPoly::one());
        }
        if c + 1 < d {
            m.set(c + 1, c, ti);
        }
    }
    m
}

pub fn reduced_burau(b: &BraidWord) -> LaurentMatrix {
    let n = b.strands();
    let mut m = LaurentMatrix::identity(n - 1);
    for &l in b.letters() {
        m = m.mul(&generator_matrix(n, l));
    }
    m
}

fn require_knot(b: &BraidWord) -> Result<(), InvariantError> {
    let c = strand_permutation(b).cycle_count();
    if c != 1 {
        return Err(InvariantError::NotAKnot { components: c });
    }
    Ok(())
}

/// `det(I − B(t))` for the reduced Burau matrix `B`.
fn burau_defect(b: &BraidWord) -> LaurentPoly {
    let n = b.strands();
    LaurentMatrix::identity(n - 1).sub(&reduced_burau(b)).det()
}

/// Alexander polynomial of the closure, normalised to lowest exponent 0 with
/// positive leading coefficient (so `Δ(t)` is palindromic).
pub fn alexander_of_closure(b: &BraidWord) -> Result<LaurentPoly, InvariantError> {
    require_knot(b)?;
    let n = b.strands();
    let num = &burau_defect(b) * &LaurentPoly::from_coeffs(0, &[1, -1]);
    let mut den = LaurentPoly::constant(1);
    den.add_term(n as i32, -1);
    let q = num.div_exact(&den).expect("(1 - t^n) divides det(I - B)(1 - t) for knot closures");
    Ok(q.normalize_low())
}

pub fn determinant_of_closure(b: &BraidWord) -> Result<u128, InvariantError> {
    let a = alexander_of_closure(b)?;
    Ok(a.eval_i128(-1).expect("alexander polynomial at -1").unsigned_abs())
}

/// `|Δ(−1)|` of the closure, links included, from `det(I − B(−1))`. Only for
/// an odd number of strands, where the cyclotomic factor is 1 at `t = −1`.
pub fn determinant_of_link(b: &BraidWord) -> Option<u128> {
    let n = b.strands();
    let d = burau_defect(b).eval_i128(-1)?;
    // (1 - t)/(1 - t^n) at t = -1 is 2/2 = 1 for odd n
    if n % 2 == 1 { Some(d.unsigned_abs()) } else { None }
}

pub fn self_linking(b: &BraidWord) -> i64 {
    b.exponent_sum() - b.strands() as i64
}

/// Characteristic polynomial of the reduced Burau matrix at `t = −1`; for odd
/// `n` this is the Alexander polynomial of the lift of the braid axis.
pub fn double_cover_alexander(b: &BraidWord) -> Result<IntPoly, InvariantError> {
    let n = b.strands();
    if n % 2 == 0 {
        return Err(InvariantError::EvenStrandCount(n));
    }
    let m: IntMatrix = reduced_burau(b).eval(-1);
    Ok(m.charpoly())
}

/// Coefficients in {0, ±1}, nonzero ones alternate in sign, top two nonzero.
pub fn lspace_coefficient_check(p: &LaurentPoly) -> bool {
    let coeffs: Vec<(i32, i128)> = p.terms().collect();
    if coeffs.is_empty() {
        return false;
    }
    if coeffs.iter().any(|&(_, c)| c.abs() != 1) {
        return false;
    }
    if coeffs.windows(2).any(|w| w[0].1 == w[1].1) {
        return false;
    }
    let top = coeffs[coeffs.len() - 1].0;
    coeffs.len() >= 2 && coeffs[coeffs.len() - 2].0 == top - 1
}

fn divisors(n: i128) -> Vec<i128> {
    let n = n.abs();
    let mut d = Vec::new();
    let mut k = 1i128;
    while k * k <= n {
        if n % k == 0 {
            d.push(k);
            d.push(-k);
            if k * k != n {
                d.push(n / k);
                d.push(-(n / k));
            }
        }
        k += 1;
    }
    d
}

/// Irreducibility over the rationals of an integer quartic (content is ignored).
pub fn is_irreducible_quartic(p: &IntPoly) -> Result<bool, InvariantError> {
    if p.degree() != Some(4) {
        return Err(InvariantError::WrongDegree(p.degree()));
    }
    let c = p.coeffs();
    let (a0, a1, a2, a3, a4) = (c[0], c[1], c[2], c[3], c[4]);
    if a0 == 0 {
        return Ok(false);
    }
    // rational roots r/s with r | a0, s | a4
    for r in divisors(a0) {
        for s in divisors(a4).into_iter().filter(|&s| s > 0) {
            // s^4 p(r/s)
            let v = a4 * r.pow(4) + a3 * r.pow(3) * s + a2 * r * r * s * s + a1 * r * s.pow(3) + a0 * s.pow(4);
            if v == 0 {
                return Ok(false);
            }
        }
    }
    // (u x^2 + v x + w)(U x^2 + V x + W), with u | a4, w | a0; v is bounded by
    // Mignotte's bound on factor coefficients
    let norm: i128 = c.iter().map(|x| x * x).sum::<i128>();
    let mut bound = 1i128;
    while bound * bound <= norm {
        bound += 1;
    }
    let bound = 6 * bound + 1;
    for u in divisors(a4).into_iter().filter(|&u| u > 0) {
        let uu = a4 / u;
        for w in divisors(a0) {
            let ww = a0 / w;
            for v in -bound..=bound {
                // x^3: u V + v U = a3
                let rem = a3 - v * uu;
                if rem % u != 0 {
                    continue;
                }
                let vv = rem / u;
                if u * ww + v * vv + w * uu == a2 && v * ww + w * vv == a1 {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn link_determinants() {
        let hopf = BraidWord::new(3, vec![1, 1, 2]).unwrap();
        assert_eq!(determinant_of_link(&hopf), Some(2));
        let t24 = BraidWord::new(3, vec![1, 1, 1, 1, 2]).unwrap();
        assert_eq!(determinant_of_link(&t24), Some(4));
        let trefoil = BraidWord::new(3, vec![1, 1, 1, 2]).unwrap();
        assert_eq!(determinant_of_link(&trefoil), Some(3));
        assert_eq!(determinant_of_link(&BraidWord::new(2, vec![1, 1]).unwrap()), None);
    }

    #[test]
    fn inverse_generators() {
        for n in [2usize, 3, 5] {
            for i in 1..n as i32 {
                let w = BraidWord::new(n, vec![i, -i]).unwrap();
                assert_eq!(reduced_burau(&w), LaurentMatrix::identity(n - 1));
            }
        }
    }

    #[test]
    fn trefoil() {
        let b = BraidWord::new(2, vec![1, 1, 1]).unwrap();
        assert_eq!(alexander_of_closure(&b).unwrap(), LaurentPoly::from_coeffs(0, &[1, -1, 1]));
        assert_eq!(determinant_of_closure(&b).unwrap(), 3);
    }

    #[test]
    fn quartics() {
        assert!(is_irreducible_quartic(&IntPoly::from_desc(&[1, -1, 1, -1, 1])).unwrap());
        assert!(!is_irreducible_quartic(&IntPoly::from_desc(&[1, 0, 2, 0, 1])).unwrap());
        assert!(!is_irreducible_quartic(&IntPoly::from_desc(&[1, 0, 0, 0, -1])).unwrap());
        assert!(is_irreducible_quartic(&IntPoly::from_desc(&[1, 0, 0, 0, 1])).unwrap());
        assert!(is_irreducible_quartic(&IntPoly::from_desc(&[1, 0, 1])).is_err());
    }
}
