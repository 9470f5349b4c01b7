//! Integer and Laurent-polynomial matrices.

use crate::poly::{IntPoly, LaurentPoly};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    a: Vec<i128>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, a: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix { n, a: rows.iter().flatten().copied().collect() }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i128 {
        self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i128) {
        self.a[i * self.n + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i128] {
        &self.a[i * self.n..(i + 1) * self.n]
    }

    pub fn rows(&self) -> Vec<Vec<i128>> {
        (0..self.n).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    pub fn mul(&self, o: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut r = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = r.get(i, j) + x.checked_mul(o.get(k, j)).expect("matrix overflow");
                    r.set(i, j, v);
                }
            }
        }
        r
    }

    pub fn trace(&self) -> i128 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.a.iter().all(|&v| v >= 0)
    }

    /// Simultaneous row/column permutation: `out[p[i]][p[j]] = self[i][j]`.
    pub fn permuted(&self, p: &[usize]) -> IntMatrix {
        let mut r = IntMatrix::zeros(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                r.set(p[i], p[j], self.get(i, j));
            }
        }
        r
    }

    /// Fraction-free (Bareiss) determinant.
    pub fn det(&self) -> i128 {
        let n = self.n;
        if n == 0 {
            return 1;
        }
        let mut m: Vec<Vec<i128>> = self.rows();
        let mut sign = 1i128;
        let mut prev = 1i128;
        for k in 0..n - 1 {
            if m[k][k] == 0 {
                let Some(p) = (k + 1..n).find(|&r| m[r][k] != 0) else { return 0 };
                m.swap(k, p);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = m[i][j].checked_mul(m[k][k]).expect("det overflow")
                        - m[i][k].checked_mul(m[k][j]).expect("det overflow");
                    m[i][j] = v / prev;
                }
            }
            prev = m[k][k];
        }
        sign * m[n - 1][n - 1]
    }

    /// Characteristic polynomial `det(tI − M)` by Faddeev–LeVerrier; every
    /// division is exact over the integers.
    pub fn charpoly(&self) -> IntPoly {
        let n = self.n;
        let mut c = vec![0i128; n + 1];
        c[n] = 1;
        let mut mk = IntMatrix::zeros(n);
        for k in 1..=n {
            // M_k = A·M_{k−1} + c_{n−k+1} I
            let mut next = self.mul(&mk);
            for i in 0..n {
                let v = next.get(i, i) + c[n - k + 1];
                next.set(i, i, v);
            }
            let tr = self.mul(&next).trace();
            c[n - k] = -tr / k as i128;
            mk = next;
        }
        IntPoly::new(c)
    }

    /// Primitivity: some power up to Wielandt's bound `(n−1)² + 1` is positive.
    pub fn is_primitive(&self) -> bool {
        let n = self.n;
        if n == 0 || !self.is_nonnegative() {
            return false;
        }
        let pat: Vec<bool> = self.a.iter().map(|&v| v > 0).collect();
        let bound = (n - 1) * (n - 1) + 1;
        let mut cur = pat.clone();
        for _ in 1..=bound {
            if cur.iter().all(|&b| b) {
                return true;
            }
            let mut nx = vec![false; n * n];
            for i in 0..n {
                for k in 0..n {
                    if !cur[i * n + k] {
                        continue;
                    }
                    for j in 0..n {
                        if pat[k * n + j] {
                            nx[i * n + j] = true;
                        }
                    }
                }
            }
            cur = nx;
        }
        cur.iter().all(|&b| b)
    }

    fn spectral_guess(&self) -> f64 {
        let n = self.n;
        let mut v = vec![1.0f64; n];
        let mut lam = 0.0;
        for _ in 0..2000 {
            let mut w = vec![0.0f64; n];
            for i in 0..n {
                for j in 0..n {
                    w[i] += self.get(i, j) as f64 * v[j];
                }
            }
            let s: f64 = w.iter().sum();
            if s == 0.0 {
                return 0.0;
            }
            lam = s / v.iter().sum::<f64>();
            for x in w.iter_mut() {
                *x /= s;
            }
            v = w;
        }
        lam
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.n {
            f.write_str(if i == 0 { "[" } else { " " })?;
            f.write_str("[")?;
            for j in 0..self.n {
                if j > 0 {
                    f.write_str(", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            f.write_str("]")?;
            if i + 1 == self.n {
                f.write_str("]")?;
            } else {
                f.write_str("\n")?;
            }
        }
        Ok(())
    }
}

/// A real number pinned between two dyadic rationals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Enclosure {
    pub lo: f64,
    pub hi: f64,
}

impl Enclosure {
    pub fn mid(&self) -> f64 {
        (self.lo + self.hi) / 2.0
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

// sign of 2^{k·deg} p(m / 2^k)
fn sign_at(p: &IntPoly, m: &BigInt, k: u32) -> i32 {
    let d = p.coeffs().len() - 1;
    let mut acc = BigInt::zero();
    let mut mp = BigInt::one();
    for (i, &c) in p.coeffs().iter().enumerate() {
        let scale = BigInt::one() << (k as usize * (d - i));
        acc += BigInt::from(c) * &mp * scale;
        mp *= m;
    }
    if acc.is_zero() {
        0
    } else if acc.is_positive() {
        1
    } else {
        -1
    }
}

// true when every coefficient of p(x + m/2^k) is positive, so p has no root ≥ m/2^k
// among roots with real part ≥ m/2^k
fn shifted_positive(p: &IntPoly, m: &BigInt, k: u32) -> bool {
    let c = p.coeffs();
    let d = c.len() - 1;
    // q_j · 2^{k d} = Σ_i c_i C(i,j) m^{i−j} 2^{k(d−i+j)}
    for j in 0..=d {
        let mut acc = BigInt::zero();
        let mut binom = BigInt::one();
        let mut mp = BigInt::one();
        for i in j..=d {
            if i > j {
                binom = binom * BigInt::from(i) / BigInt::from(i - j);
                mp *= m;
            }
            let scale = BigInt::one() << (k as usize * (d - i + j));
            acc += BigInt::from(c[i]) * &binom * &mp * scale;
        }
        if !acc.is_positive() {
            return false;
        }
    }
    true
}

fn dyadic(x: f64, k: u32) -> BigInt {
    let s = x * (1u64 << k) as f64;
    BigInt::from(s as i128)
}

fn undyadic(m: &BigInt, k: u32) -> f64 {
    let v: i128 = m.try_into().unwrap_or(i128::MAX);
    v as f64 / (1u64 << k) as f64
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpectralError {
    NotPerronFrobenius,
    NotCertified,
}

impl fmt::Display for SpectralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralError::NotPerronFrobenius => f.write_str("matrix is not Perron-Frobenius"),
            SpectralError::NotCertified => f.write_str("could not certify the leading root"),
        }
    }
}

impl core::error::Error for SpectralError {}

/// Spectral radius of a Perron–Frobenius matrix as the largest real root of
/// its characteristic polynomial, enclosed by exact sign evaluation.
pub fn spectral_radius(m: &IntMatrix, width: f64) -> Result<Enclosure, SpectralError> {
    if !m.is_primitive() {
        return Err(SpectralError::NotPerronFrobenius);
    }
    let p = m.charpoly();
    let guess = m.spectral_guess();
    const K: u32 = 48;
    let mut eps = 1e-7;
    while eps < 1.0 {
        let mut lo = dyadic(guess - eps, K);
        let mut hi = dyadic(guess + eps, K) + 1;
        if sign_at(&p, &lo, K) < 0 && sign_at(&p, &hi, K) > 0 && shifted_positive(&p, &hi, K) {
            let two = BigInt::from(2);
            while undyadic(&(&hi - &lo), K) > width {
                let mid: BigInt = (&lo + &hi) / &two;
                match sign_at(&p, &mid, K) {
                    s if s < 0 => lo = mid,
                    s if s > 0 => hi = mid,
                    _ => {
                        lo = mid.clone();
                        hi = mid;
                        break;
                    }
                }
                if &hi - &lo <= BigInt::one() {
                    break;
                }
            }
            return Ok(Enclosure { lo: undyadic(&lo, K), hi: undyadic(&hi, K) });
        }
        eps *= 10.0;
    }
    Err(SpectralError::NotCertified)
}

/// Square matrix of Laurent polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentMatrix {
    n: usize,
    a: Vec<LaurentPoly>,
}

impl LaurentMatrix {
    pub fn identity(n: usize) -> Self {
        let mut a = vec![LaurentPoly::zero(); n * n];
        for i in 0..n {
            a[i * n + i] = LaurentPoly::one();
        }
        LaurentMatrix { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &LaurentPoly {
        &self.a[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: LaurentPoly) {
        self.a[i * self.n + j] = v;
    }

    pub fn mul(&self, o: &LaurentMatrix) -> LaurentMatrix {
        assert_eq!(self.n, o.n);
        let n = self.n;
        let mut r = LaurentMatrix { n, a: vec![LaurentPoly::zero(); n * n] };
        for i in 0..n {
            for k in 0..n {
                let x = self.get(i, k);
                if x.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let v = &r.a[i * n + j] + &(x * o.get(k, j));
                    r.a[i * n + j] = v;
                }
            }
        }
        r
    }

    pub fn sub(&self, o: &LaurentMatrix) -> LaurentMatrix {
        LaurentMatrix { n: self.n, a: self.a.iter().zip(&o.a).map(|(x, y)| x - y).collect() }
    }

    /// Bareiss elimination with exact Laurent division.
    pub fn det(&self) -> LaurentPoly {
        let n = self.n;
        if n == 0 {
            return LaurentPoly::one();
        }
        let mut m: Vec<Vec<LaurentPoly>> =
            (0..n).map(|i| (0..n).map(|j| self.get(i, j).clone()).collect()).collect();
        let mut negate = false;
        let mut prev = LaurentPoly::one();
        for k in 0..n - 1 {
            if m[k][k].is_zero() {
                let Some(p) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else { return LaurentPoly::zero() };
                m.swap(k, p);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
                }
            }
            prev = m[k][k].clone();
        }
        let d = m[n - 1][n - 1].clone();
        if negate { -d } else { d }
    }

    /// Substitute an integer for `t` (must be ±1 if negative exponents occur).
    pub fn eval(&self, t: i128) -> IntMatrix {
        let n = self.n;
        let mut r = IntMatrix::zeros(n);
        for i in 0..n {
            for j in 0..n {
                r.set(i, j, self.get(i, j).eval_i128(t).expect("evaluation overflow"));
            }
        }
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn charpoly_and_det() {
        let m = IntMatrix::from_rows(&[vec![2, 1], vec![1, 1]]);
        assert_eq!(m.charpoly(), IntPoly::from_desc(&[1, -3, 1]));
        assert_eq!(m.det(), 1);
        let r = spectral_radius(&m, 1e-10).unwrap();
        let golden2 = (3.0 + 5f64.sqrt()) / 2.0;
        assert!(r.lo <= golden2 && golden2 <= r.hi && r.width() <= 1e-9);
    }

    #[test]
    fn primitivity() {
        assert!(!IntMatrix::identity(3).is_primitive());
        let cyc = IntMatrix::from_rows(&[vec![0, 1], vec![1, 0]]);
        assert!(!cyc.is_primitive());
        assert!(IntMatrix::from_rows(&[vec![1, 1], vec![1, 0]]).is_primitive());
        assert!(spectral_radius(&IntMatrix::from_rows(&[vec![1]]), 1e-9).is_ok());
    }
}
