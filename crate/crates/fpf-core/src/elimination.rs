//! Eliminating candidate braids whose closure would have to be `T(3,5)`.
//!
//! Each candidate is `Δ^{2k}β^{±1}` for a base braid `β` with known twist
//! coefficient. Candidates outside the coefficient bound are dropped first;
//! the rest are tested against `T(3,5)` by self-linking, determinant and
//! Alexander polynomial, cheapest first.

use crate::automaton::candidate_braids;
use crate::braid::BraidWord;
use crate::fdtc::{boundary_rotation, fdtc_compose, lspace_admissible, Fdtc, FdtcError, DEFAULT_BRAID_BOUND};
use crate::invariants::{alexander_of_closure, determinant_of_link, self_linking, InvariantError};
use crate::poly::LaurentPoly;
use crate::search::candidate_text;
use crate::track::camel_r;
use crate::trackmap::TrackMap;
use alloc::format;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use num_traits::Zero;

pub const T35_DETERMINANT: u128 = 1;
/// Maximal self-linking number of `T(3,5)`, `2g − 1` with `g = 4`.
pub const T35_MAX_SELF_LINKING: i64 = 7;

/// `t⁸ − t⁷ + t⁵ − t⁴ + t³ − t + 1`
pub fn t35_alexander() -> LaurentPoly {
    LaurentPoly::from_coeffs(0, &[1, -1, 0, 1, -1, 1, 0, -1, 1])
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Filter {
    FdtcBound,
    SelfLinking,
    Determinant,
    Alexander,
    None,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Filter::FdtcBound => "fdtc_bound",
            Filter::SelfLinking => "self_linking",
            Filter::Determinant => "determinant",
            Filter::Alexander => "alexander",
            Filter::None => "none",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EliminationError {
    /// A link closure on an even number of strands: no determinant available.
    Link(InvariantError),
    UnknownSuite(String),
    Fdtc(FdtcError),
}

impl fmt::Display for EliminationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EliminationError::Link(e) => write!(f, "{e}"),
            EliminationError::UnknownSuite(s) => write!(f, "unknown suite {s} (expected 433, 6 or 2-34)"),
            EliminationError::Fdtc(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for EliminationError {}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Candidate {
    pub name: String,
    pub braid: BraidWord,
    pub fdtc: Fdtc,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub braid: BraidWord,
    pub fdtc: Option<Fdtc>,
    pub eliminated_by: Filter,
    /// Closure is a knot; links cannot close up to `T(3,5)` but still get a
    /// determinant.
    pub knot: bool,
    pub determinant: u128,
    pub self_linking: i64,
    pub alexander: Option<LaurentPoly>,
}

impl Verdict {
    pub fn eliminated(&self) -> bool {
        self.eliminated_by != Filter::None
    }

    pub fn admissible(&self) -> bool {
        self.eliminated_by != Filter::FdtcBound
    }
}

/// Test the closure of `b` against `T(3,5)`. All invariants are computed;
/// `eliminated_by` names the first filter that rules it out.
pub fn eliminate_t35(b: &BraidWord) -> Result<Verdict, EliminationError> {
    let sl = self_linking(b);
    let (knot, alexander) = match alexander_of_closure(b) {
        Ok(a) => (true, Some(a)),
        Err(InvariantError::NotAKnot { .. }) => (false, None),
        Err(e) => return Err(EliminationError::Link(e)),
    };
    let det = match &alexander {
        Some(a) => a.eval_i128(-1).expect("alexander polynomial at -1").unsigned_abs(),
        None => determinant_of_link(b)
            .ok_or(EliminationError::Link(InvariantError::EvenStrandCount(b.strands())))?,
    };
    let eliminated_by = if sl > T35_MAX_SELF_LINKING {
        Filter::SelfLinking
    } else if det != T35_DETERMINANT {
        Filter::Determinant
    } else if alexander.as_ref() != Some(&t35_alexander()) {
        Filter::Alexander
    } else {
        Filter::None
    };
    Ok(Verdict {
        name: format!("{b}"),
        braid: b.clone(),
        fdtc: None,
        eliminated_by,
        knot,
        determinant: det,
        self_linking: sl,
        alexander,
    })
}

/// Apply the coefficient bound, then [`eliminate_t35`].
pub fn eliminate_candidate(c: &Candidate, bound: Fdtc) -> Result<Verdict, EliminationError> {
    let mut v = eliminate_t35(&c.braid)?;
    v.name = c.name.clone();
    v.fdtc = Some(c.fdtc);
    if !lspace_admissible(c.fdtc, bound).within_bound {
        v.eliminated_by = Filter::FdtcBound;
    }
    Ok(v)
}

fn power_name(k: i64, base: &str, sign: i64) -> String {
    let b = if sign < 0 { format!("{base}^-1") } else { String::from(base) };
    if k == 0 {
        b
    } else {
        format!("D^{} {b}", 2 * k)
    }
}

/// `Δ^{2k}β^{±1}` for `k` in `ks`, with `c = k ± c(β)`.
pub fn twist_family(name: &str, base: &BraidWord, base_c: Fdtc, ks: core::ops::RangeInclusive<i64>) -> Vec<Candidate> {
    let d = BraidWord::full_twist(base.strands());
    let mut out = Vec::new();
    for k in ks {
        for sign in [1i64, -1] {
            let b = if sign > 0 { base.clone() } else { base.inverse() };
            let braid = d.pow(k).concat(&b).expect("same strands");
            out.push(Candidate { name: power_name(k, name, sign), braid, fdtc: fdtc_compose(base_c, k, sign) });
        }
    }
    out
}

/// `β_n = σ₁^{n+2}σ₂σ₃σ₄σ₁σ₂σ₃σ₄²`
pub fn beta_n(n: usize) -> BraidWord {
    let mut l = vec![1; n + 2];
    l.extend([2, 3, 4, 1, 2, 3, 4, 4]);
    BraidWord::new(5, l).expect("letters of B_5")
}

/// `α = σ₁σ₂σ₃σ₄σ₁σ₂`
pub fn alpha() -> BraidWord {
    BraidWord::new(5, vec![1, 2, 3, 4, 1, 2]).expect("letters of B_5")
}

/// Coefficient of `β_n`, from the classification of the stratum it comes from.
pub fn beta_n_fdtc() -> Fdtc {
    Fdtc::new(1, 2)
}

/// Coefficient of `α`. Not computed here; any value in `(0, 1)` gives the
/// same admissible family, see the suite tests.
pub fn alpha_fdtc() -> Fdtc {
    Fdtc::new(1, 3)
}

/// Coefficients of the Camel candidates: fractional part read off their
/// track maps, integer part zero.
pub fn camel_candidate_fdtc() -> Result<[Fdtc; 3], EliminationError> {
    let t = Arc::new(camel_r());
    let mut out = [Fdtc::zero(); 3];
    for (i, c) in out.iter_mut().enumerate() {
        let m = TrackMap::parse(t.clone(), &candidate_text(i)).expect("candidate fixture parses");
        *c = boundary_rotation(&m).map_err(EliminationError::Fdtc)?;
    }
    Ok(out)
}

/// Twist range swept by the suites; wider than the bound so the coefficient
/// filter has something to cut.
pub const SUITE_TWISTS: core::ops::RangeInclusive<i64> = -3..=3;

pub const SUITES: [&str; 3] = ["433", "6", "2-34"];

pub fn suite_candidates(name: &str) -> Result<Vec<Candidate>, EliminationError> {
    match name {
        "433" => Ok((0..=10)
            .flat_map(|n| twist_family(&format!("b_{n}"), &beta_n(n), beta_n_fdtc(), SUITE_TWISTS))
            .collect()),
        "6" => Ok(twist_family("a", &alpha(), alpha_fdtc(), SUITE_TWISTS)),
        "2-34" => {
            let cs = camel_candidate_fdtc()?;
            Ok(candidate_braids()
                .iter()
                .zip(cs)
                .enumerate()
                .flat_map(|(i, (b, c))| twist_family(&format!("b{}", i + 1), b, c, SUITE_TWISTS))
                .collect())
        }
        other => Err(EliminationError::UnknownSuite(other.into())),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub name: String,
    pub verdicts: Vec<Verdict>,
}

impl SuiteReport {
    pub fn admissible(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| v.admissible())
    }

    pub fn survivors(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.eliminated())
    }
}

pub fn run_theorem_suite(name: &str) -> Result<SuiteReport, EliminationError> {
    let bound = Fdtc::from_integer(DEFAULT_BRAID_BOUND);
    let verdicts = suite_candidates(name)?
        .iter()
        .map(|c| eliminate_candidate(c, bound))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SuiteReport { name: name.into(), verdicts })
}

/// `(σ₁σ₂)⁵` closed on five strands after two stabilisations.
pub fn t35_control() -> BraidWord {
    let mut l = [1, 2].repeat(5);
    l.extend([3, 4]);
    BraidWord::new(5, l).expect("letters of B_5")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn control_is_not_eliminated() {
        let v = eliminate_t35(&t35_control()).unwrap();
        assert_eq!(v.eliminated_by, Filter::None);
        assert_eq!(v.determinant, 1);
        assert_eq!(v.self_linking, 7);
        let hopf = BraidWord::new(2, vec![1, 1]).unwrap();
        assert!(matches!(eliminate_t35(&hopf), Err(EliminationError::Link(_))));
    }

    #[test]
    fn beta_n_values() {
        let d = BraidWord::full_twist(5);
        for n in 0..=10 {
            let v = eliminate_t35(&beta_n(n)).unwrap();
            assert_eq!(v.determinant, n as u128 + 7);
            assert_eq!(v.knot, n % 2 == 0);
            let w = eliminate_t35(&d.concat(&beta_n(n)).unwrap()).unwrap();
            assert_eq!(w.self_linking, 25 + n as i64);
            assert_eq!(w.eliminated_by, Filter::SelfLinking);
        }
    }

    #[test]
    fn coefficient_laws() {
        let b = beta_n(0);
        for c in twist_family("b", &b, beta_n_fdtc(), -2..=2) {
            let k = c.fdtc.floor().to_integer();
            assert_eq!(c.fdtc - Fdtc::from_integer(k), Fdtc::new(1, 2));
        }
        assert_eq!(camel_candidate_fdtc().unwrap(), [Fdtc::zero(); 3]);
    }

    #[test]
    fn suites_eliminate_everything() {
        for s in SUITES {
            let r = run_theorem_suite(s).unwrap();
            assert_eq!(r.survivors().count(), 0, "{s}");
        }
        let six = run_theorem_suite("6").unwrap();
        assert_eq!(six.admissible().count(), 8);
        assert_eq!(run_theorem_suite("433").unwrap().admissible().count(), 88);
        assert_eq!(run_theorem_suite("2-34").unwrap().admissible().count(), 18);
    }

    #[test]
    fn alpha_family_independent_of_coefficient() {
        let bound = Fdtc::from_integer(DEFAULT_BRAID_BOUND);
        let names = |c0: Fdtc| -> Vec<String> {
            twist_family("a", &alpha(), c0, SUITE_TWISTS)
                .into_iter()
                .filter(|c| lspace_admissible(c.fdtc, bound).within_bound)
                .map(|c| c.name)
                .collect()
        };
        assert_eq!(names(Fdtc::new(1, 3)), names(Fdtc::new(2, 3)));
        assert_eq!(names(Fdtc::new(1, 3)).len(), 8);
    }

    #[test]
    fn unknown_suite() {
        assert!(matches!(run_theorem_suite("7"), Err(EliminationError::UnknownSuite(_))));
    }
}
