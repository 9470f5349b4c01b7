//! Singularity types `(b₁,…;m₁,…;k₁,…)` and Euler–Poincaré enumeration.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Stratum {
    pub boundary: Vec<u32>,
    pub marked: Vec<u32>,
    pub interior: Vec<u32>,
}

impl Stratum {
    pub fn new(boundary: Vec<u32>, marked: Vec<u32>, interior: Vec<u32>) -> Self {
        let mut s = Stratum { boundary, marked, interior };
        s.normalize();
        s
    }

    /// Sort every list in decreasing order.
    pub fn normalize(&mut self) {
        for v in [&mut self.boundary, &mut self.marked, &mut self.interior] {
            v.sort_unstable_by(|a, b| b.cmp(a));
        }
    }

    /// `(2χ, Σ_{interior ∪ marked}(2 − p) − Σ_boundary p)`.
    pub fn balance(&self, chi: i64) -> (i64, i64) {
        let inner: i64 = self.marked.iter().chain(&self.interior).map(|&p| 2 - p as i64).sum();
        let bdy: i64 = self.boundary.iter().map(|&p| p as i64).sum();
        (2 * chi, inner - bdy)
    }

    pub fn is_balanced(&self, chi: i64) -> bool {
        let (l, r) = self.balance(chi);
        l == r
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, v: &[u32]) -> fmt::Result {
    if v.is_empty() {
        return f.write_str("∅");
    }
    let mut i = 0;
    let mut first = true;
    while i < v.len() {
        let mut j = i;
        while j < v.len() && v[j] == v[i] {
            j += 1;
        }
        if !first {
            f.write_str(",")?;
        }
        first = false;
        if j - i == 1 {
            write!(f, "{}", v[i])?;
        } else {
            write!(f, "{}^{}", v[i], j - i)?;
        }
        i = j;
    }
    Ok(())
}

impl fmt::Display for Stratum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        write_list(f, &self.boundary)?;
        f.write_str(";")?;
        write_list(f, &self.marked)?;
        f.write_str(";")?;
        write_list(f, &self.interior)?;
        f.write_str(")")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StratumParseError(pub String);

impl fmt::Display for StratumParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "bad stratum: {}", self.0)
    }
}

impl core::error::Error for StratumParseError {}

fn parse_list(s: &str) -> Result<Vec<u32>, StratumParseError> {
    let s = s.trim();
    if s == "∅" || s.is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for tok in s.split(',') {
        let (p, k) = match tok.split_once('^') {
            Some((p, k)) => (p, k.trim().parse::<usize>().map_err(|_| StratumParseError(tok.into()))?),
            None => (tok, 1),
        };
        let p: u32 = p.trim().parse().map_err(|_| StratumParseError(tok.into()))?;
        if p == 0 {
            return Err(StratumParseError(tok.into()));
        }
        out.extend(core::iter::repeat_n(p, k));
    }
    Ok(out)
}

impl FromStr for Stratum {
    type Err = StratumParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| StratumParseError(s.into()))?;
        let parts: Vec<&str> = inner.split(';').collect();
        if parts.len() != 3 {
            return Err(StratumParseError(s.into()));
        }
        let st = Stratum::new(parse_list(parts[0])?, parse_list(parts[1])?, parse_list(parts[2])?);
        if st.interior.iter().any(|&p| p < 3) {
            return Err(StratumParseError(s.into()));
        }
        Ok(st)
    }
}

/// Partitions of `total` into `parts` summands, each `≥ min`, nonincreasing
/// and `≤ cap`.
fn partitions(total: i64, parts: usize, min: i64, cap: i64, acc: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    if parts == 0 {
        if total == 0 {
            out.push(acc.clone());
        }
        return;
    }
    let hi = cap.min(total - min * (parts as i64 - 1));
    let mut x = hi;
    while x >= min {
        acc.push(x);
        partitions(total - x, parts - 1, min, x, acc, out);
        acc.pop();
        x -= 1;
    }
}

/// Partitions of `total` into any number of parts `≥ 1`.
fn all_partitions(total: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    if total == 0 {
        out.push(Vec::new());
        return out;
    }
    for k in 1..=total as usize {
        partitions(total, k, 1, total, &mut Vec::new(), &mut out);
    }
    out
}

/// Every stratum on the surface of genus `genus` with `boundary_components`
/// boundary circles and `marked` marked points that satisfies the
/// Euler–Poincaré balance and `keep`.
pub fn enumerate_strata(
    genus: u32,
    boundary_components: usize,
    marked: usize,
    keep: impl Fn(&Stratum) -> bool,
) -> Vec<Stratum> {
    let chi = 2 - 2 * genus as i64 - boundary_components as i64;
    // Σ_b p + Σ_int (p − 2) + Σ_m (p − 1) = −2χ + m, every summand of the
    // first two sums at least 1 and of the last at least 0
    let total = -2 * chi + marked as i64;
    let mut out = Vec::new();
    if total < boundary_components as i64 {
        return out;
    }
    for bsum in boundary_components as i64..=total {
        let mut bparts = Vec::new();
        if boundary_components == 0 {
            if bsum == 0 {
                bparts.push(Vec::new());
            }
        } else {
            partitions(bsum, boundary_components, 1, bsum, &mut Vec::new(), &mut bparts);
        }
        for b in &bparts {
            for msum in 0..=(total - bsum) {
                let mut mparts = Vec::new();
                if marked == 0 {
                    if msum == 0 {
                        mparts.push(Vec::new());
                    }
                } else {
                    // marked excesses p − 1 ≥ 0: pad partitions with zeros
                    for k in 0..=marked.min(msum as usize) {
                        let mut ps = Vec::new();
                        if k == 0 {
                            if msum == 0 {
                                ps.push(Vec::new());
                            }
                        } else {
                            partitions(msum, k, 1, msum, &mut Vec::new(), &mut ps);
                        }
                        for mut p in ps {
                            p.resize(marked, 0);
                            mparts.push(p);
                        }
                    }
                }
                let isum = total - bsum - msum;
                for m in &mparts {
                    for i in all_partitions(isum) {
                        let s = Stratum::new(
                            b.iter().map(|&x| x as u32).collect(),
                            m.iter().map(|&x| x as u32 + 1).collect(),
                            i.iter().map(|&x| x as u32 + 2).collect(),
                        );
                        debug_assert!(s.is_balanced(chi));
                        if keep(&s) {
                            out.push(s);
                        }
                    }
                }
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// All boundary prong counts even.
pub fn even_boundary(s: &Stratum) -> bool {
    s.boundary.iter().all(|p| p % 2 == 0)
}

/// No interior prong count occurs exactly once.
pub fn interior_counts_paired(s: &Stratum) -> bool {
    let mut v = s.interior.clone();
    v.dedup();
    v.iter().all(|p| s.interior.iter().filter(|q| *q == p).count() != 1)
}

/// Lift to the double cover of the disk branched over the marked points:
/// boundary prongs double (one circle for an odd number of marked points,
/// two for an even number), `p`-pronged marked points become `2p`-pronged
/// (1-pronged ones become regular), unmarked singularities come in pairs.
pub fn lift_stratum(s: &Stratum) -> Stratum {
    let n = s.marked.len();
    let mut boundary = Vec::new();
    for &p in &s.boundary {
        if n % 2 == 1 {
            boundary.push(2 * p);
        } else {
            boundary.extend([p, p]);
        }
    }
    let mut interior: Vec<u32> = s.marked.iter().filter(|&&p| p != 1).map(|&p| 2 * p).collect();
    for &p in &s.interior {
        interior.extend([p, p]);
    }
    Stratum::new(boundary, vec![], interior)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn display_and_parse() {
        let s: Stratum = "(1;1^5;3^2)".parse().unwrap();
        assert_eq!(s.marked, vec![1; 5]);
        assert_eq!(s.to_string(), "(1;1^5;3^2)");
        assert_eq!("(2;∅;4,3^2)".parse::<Stratum>().unwrap().to_string(), "(2;∅;4,3^2)");
        assert!("(1;1;2)".parse::<Stratum>().is_err());
    }

    #[test]
    fn disk_balance() {
        let s: Stratum = "(1;1^5;4)".parse().unwrap();
        assert!(s.is_balanced(1));
        let all = enumerate_strata(0, 1, 5, |s| s.marked.iter().all(|&p| p == 1) && s.boundary == [1]);
        assert!(all.contains(&s));
        assert!(all.contains(&"(1;1^5;3^2)".parse().unwrap()));
        assert!(enumerate_strata(0, 1, 0, |_| true).is_empty());
    }

    #[test]
    fn lifts() {
        let cases = [("(1;1^5;4)", "(2;∅;4^2)"), ("(1;1^5;3^2)", "(2;∅;3^4)"), ("(3;1^5;∅)", "(6;∅;∅)")];
        for (a, b) in cases {
            assert_eq!(lift_stratum(&a.parse().unwrap()).to_string(), b);
        }
    }
}
