//! Exact Laurent polynomials and integer polynomials in one variable `t`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

fn mul_exact(a: i128, b: i128) -> i128 {
    a.checked_mul(b).expect("polynomial coefficient overflow")
}

fn add_exact(a: i128, b: i128) -> i128 {
    a.checked_add(b).expect("polynomial coefficient overflow")
}

/// Sparse Laurent polynomial; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, i128>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn constant(c: i128) -> Self {
        LaurentPoly::monomial(c, 0)
    }

    pub fn one() -> Self {
        LaurentPoly::constant(1)
    }

    pub fn monomial(c: i128, e: i32) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn t() -> Self {
        LaurentPoly::monomial(1, 1)
    }

    /// From coefficients `c[k]` of `t^(low + k)`.
    pub fn from_coeffs(low: i32, c: &[i128]) -> Self {
        let mut p = LaurentPoly::zero();
        for (k, &v) in c.iter().enumerate() {
            p.add_term(low + k as i32, v);
        }
        p
    }

    pub fn add_term(&mut self, e: i32, c: i128) {
        if c == 0 {
            return;
        }
        let v = add_exact(*self.terms.get(&e).unwrap_or(&0), c);
        if v == 0 {
            self.terms.remove(&e);
        } else {
            self.terms.insert(e, v);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: i32) -> i128 {
        *self.terms.get(&e).unwrap_or(&0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, i128)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn shift(&self, k: i32) -> Self {
        LaurentPoly { terms: self.terms.iter().map(|(&e, &c)| (e + k, c)).collect() }
    }

    pub fn scale(&self, s: i128) -> Self {
        let mut p = LaurentPoly::zero();
        for (&e, &c) in &self.terms {
            p.add_term(e, mul_exact(c, s));
        }
        p
    }

    pub fn eval_i128(&self, x: i128) -> Option<i128> {
        // only meaningful when x is a unit or all exponents are nonnegative
        let mut acc = 0i128;
        for (&e, &c) in &self.terms {
            let pw = if e >= 0 {
                x.checked_pow(e as u32)?
            } else if x == 1 || x == -1 {
                x.pow(e.unsigned_abs())
            } else {
                return None;
            };
            acc = acc.checked_add(c.checked_mul(pw)?)?;
        }
        Some(acc)
    }

    /// Multiply by `±t^k` so that the lowest exponent is 0 and the top
    /// coefficient is positive.
    pub fn normalize_low(&self) -> Self {
        let Some(lo) = self.min_degree() else { return self.clone() };
        let top = self.coeff(self.max_degree().unwrap());
        let p = self.shift(-lo);
        if top < 0 { -p } else { p }
    }

    /// Symmetric normalisation: centred exponents (`p(t) = p(1/t)` when the
    /// span is even) with positive leading coefficient. Polynomials of odd span
    /// are centred on the half-integer, i.e. placed at exponents `0..span`.
    pub fn normalize_symmetric(&self) -> Self {
        let Some(lo) = self.min_degree() else { return self.clone() };
        let hi = self.max_degree().unwrap();
        let span = hi - lo;
        let p = self.normalize_low();
        if span % 2 == 0 { p.shift(-span / 2) } else { p }
    }

    pub fn is_symmetric(&self) -> bool {
        let Some(lo) = self.min_degree() else { return true };
        let hi = self.max_degree().unwrap();
        self.terms.iter().all(|(&e, &c)| self.coeff(lo + hi - e) == c)
    }

    /// Exact division; `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(LaurentPoly::zero());
        }
        let dl = d.max_degree().unwrap();
        let dc = d.coeff(dl);
        let dlow = d.min_degree().unwrap();
        let mut rem = self.clone();
        let mut q = LaurentPoly::zero();
        while let Some(rl) = rem.max_degree() {
            if rl - dl < rem.min_degree().unwrap() - dlow {
                return None;
            }
            let rc = rem.coeff(rl);
            if rc % dc != 0 {
                return None;
            }
            let m = LaurentPoly::monomial(rc / dc, rl - dl);
            rem = &rem - &(&m * d);
            q = &q + &m;
        }
        Some(q)
    }

    /// Coefficients from degree 0 upward, if no negative exponents occur.
    pub fn to_int_poly(&self) -> Option<IntPoly> {
        if self.min_degree().is_some_and(|e| e < 0) {
            return None;
        }
        let hi = self.max_degree().unwrap_or(0).max(0) as usize;
        let mut c = vec![0; hi + 1];
        for (&e, &v) in &self.terms {
            c[e as usize] = v;
        }
        Some(IntPoly::new(c))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, &c) in &o.terms {
            p.add_term(e, c);
        }
        p
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = self.clone();
        for (&e, &c) in &o.terms {
            p.add_term(e, -c);
        }
        p
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, o: &LaurentPoly) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&e1, &c1) in &self.terms {
            for (&e2, &c2) in &o.terms {
                p.add_term(e1 + e2, mul_exact(c1, c2));
            }
        }
        p
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.into_iter().map(|(e, c)| (e, -c)).collect() }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: impl Iterator<Item = (i32, i128)>) -> fmt::Result {
    let mut first = true;
    for (e, c) in terms {
        let (sign, a) = if c < 0 { ("-", -c) } else { ("+", c) };
        if first {
            if sign == "-" {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        match e {
            0 => write!(f, "{a}")?,
            _ => {
                if a != 1 {
                    write!(f, "{a}")?;
                }
                if e == 1 {
                    f.write_str("t")?;
                } else {
                    write!(f, "t^{e}")?;
                }
            }
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, self.terms.iter().rev().map(|(&e, &c)| (e, c)))
    }
}

/// Dense integer polynomial, `c[k]` the coefficient of `t^k`. Trailing zeros trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPoly {
    c: Vec<i128>,
}

impl IntPoly {
    pub fn new(mut c: Vec<i128>) -> Self {
        while c.len() > 1 && *c.last().unwrap() == 0 {
            c.pop();
        }
        if c.is_empty() {
            c.push(0);
        }
        IntPoly { c }
    }

    /// From coefficients listed from the top degree down.
    pub fn from_desc(c: &[i128]) -> Self {
        IntPoly::new(c.iter().rev().copied().collect())
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.c
    }

    pub fn degree(&self) -> Option<usize> {
        if self.c.len() == 1 && self.c[0] == 0 { None } else { Some(self.c.len() - 1) }
    }

    pub fn leading(&self) -> i128 {
        *self.c.last().unwrap()
    }

    pub fn eval(&self, x: i128) -> i128 {
        self.c.iter().rev().fold(0i128, |acc, &k| add_exact(mul_exact(acc, x), k))
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(self.c.iter().enumerate().skip(1).map(|(k, &v)| mul_exact(v, k as i128)).collect())
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_coeffs(0, &self.c)
    }

    pub fn mul(&self, o: &IntPoly) -> IntPoly {
        let mut r = vec![0i128; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            for (j, &b) in o.c.iter().enumerate() {
                r[i + j] = add_exact(r[i + j], mul_exact(a, b));
            }
        }
        IntPoly::new(r)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i32, i128)> =
            self.c.iter().enumerate().rev().filter(|(_, &v)| v != 0).map(|(k, &v)| (k as i32, v)).collect();
        write_terms(f, terms.into_iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn printing() {
        let p = IntPoly::from_desc(&[1, -1, 1, -1, 1]);
        assert_eq!(alloc::format!("{p}"), "t^4 - t^3 + t^2 - t + 1");
        let q = LaurentPoly::from_coeffs(-1, &[-2, 0, 3]);
        assert_eq!(alloc::format!("{q}"), "3t - 2t^-1");
        assert_eq!(alloc::format!("{}", LaurentPoly::zero()), "0");
    }

    #[test]
    fn exact_division() {
        let a = LaurentPoly::from_coeffs(0, &[1, 0, 0, -1]); // 1 - t^3
        let b = LaurentPoly::from_coeffs(0, &[1, -1]); // 1 - t
        let q = a.div_exact(&b).unwrap();
        assert_eq!(q, LaurentPoly::from_coeffs(0, &[1, 1, 1]));
        assert!(b.div_exact(&a).is_none());
    }

    #[test]
    fn symmetric_normalisation_is_idempotent() {
        let p = LaurentPoly::from_coeffs(3, &[-1, 1, -1]);
        let s = p.normalize_symmetric();
        assert_eq!(s, LaurentPoly::from_coeffs(-1, &[1, -1, 1]));
        assert_eq!(s.normalize_symmetric(), s);
        assert!(s.is_symmetric());
    }
}
