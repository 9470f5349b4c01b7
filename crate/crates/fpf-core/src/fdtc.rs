//! Fractional Dehn twist coefficients.
//!
//! Only the fractional part is read off a track map, as the rotation of the
//! cusps of the peripheral region. Integer parts enter through
//! [`fdtc_compose`] from a base coefficient.

use crate::corridor::{Corridors, Dart, Visit};
use crate::path::DecoratedPath;
use crate::track::{polygon_view, GermRef, RegionRole};
use crate::trackmap::{check_legal, LegalityViolation, TrackMap};
use alloc::string::String;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Fdtc = Ratio<i64>;

/// Default strict bound on `|c(β)|` coming from `|c(K)| < 1` on the cover.
pub const DEFAULT_BRAID_BOUND: i64 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FdtcError {
    Illegal(Vec<LegalityViolation>),
    Malformed(String),
}

impl fmt::Display for FdtcError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FdtcError::Illegal(v) => write!(f, "illegal map ({} violations)", v.len()),
            FdtcError::Malformed(s) => write!(f, "malformed map: {s}"),
        }
    }
}

impl core::error::Error for FdtcError {}

/// Cusps of the peripheral region in boundary order.
fn peripheral_cusps(m: &TrackMap) -> Result<Vec<(usize, GermRef, GermRef)>, FdtcError> {
    let t = &m.track;
    let r = t
        .regions()
        .into_iter()
        .find(|r| r.role == RegionRole::Peripheral)
        .ok_or_else(|| FdtcError::Malformed("no peripheral region".into()))?;
    Ok(r.corners
        .into_iter()
        .filter(|&(s, a, b)| t.side_of(a) == t.side_of(b) && t.switches[s].germs.len() > 1)
        .collect())
}

/// Drawn image of a germ at a polygon vertex.
fn germ_image(c: &Corridors<'_>, m: &TrackMap, g: GermRef) -> Result<Vec<Visit>, FdtcError> {
    let p = m.image(g.0).ok_or_else(|| FdtcError::Malformed("missing image".into()))?;
    let letters = if g.1 == 0 { p.letters.clone() } else { DecoratedPath::reversed(p).letters };
    c.build(g, &letters, None).map_err(|e| FdtcError::Malformed(format!("{e}")))
}

/// Fractional part `m/k` of the coefficient: the peripheral cusps are sent to
/// the cusps `m` steps further along the boundary.
pub fn boundary_rotation(m: &TrackMap) -> Result<Fdtc, FdtcError> {
    let v = check_legal(m);
    if !v.is_empty() {
        return Err(FdtcError::Illegal(v));
    }
    let cusps = peripheral_cusps(m)?;
    let k = cusps.len();
    if k == 0 {
        return Err(FdtcError::Malformed("peripheral region has no cusps".into()));
    }
    if k == 1 {
        return Ok(Fdtc::zero());
    }
    let t = &m.track;
    let view = polygon_view(t).map_err(|e| FdtcError::Malformed(format!("{e}")))?;
    let vm = m.vertex_map(&view).map_err(|e| FdtcError::Illegal(alloc::vec![e]))?;
    let c = Corridors::new(t, &view, vm);
    let mut shift = None;
    for (i, &(_, a, b)) in cusps.iter().enumerate() {
        let (pa, pb) = (germ_image(&c, m, a)?, germ_image(&c, m, b)?);
        // the two images run together until they part at the image cusp
        let mut j = 0;
        while j < pa.len() && j < pb.len() && pa[j].2 == pb[j].2 {
            j += 1;
        }
        let (Some(&(w, _, Dart::Germ(x))), Some(&(w2, _, Dart::Germ(y)))) = (pa.get(j), pb.get(j)) else {
            return Err(FdtcError::Malformed("image cusp not at a real switch".into()));
        };
        if w != w2 {
            return Err(FdtcError::Malformed("images part at different switches".into()));
        }
        let img = cusps
            .iter()
            .position(|&(s, p, q)| s == w && p == x && q == y)
            .ok_or_else(|| FdtcError::Malformed("image corner is not a peripheral cusp".into()))?;
        let d = (img + k - i) % k;
        match shift {
            None => shift = Some(d),
            Some(s) if s != d => return Err(FdtcError::Malformed("peripheral cusps are not rotated".into())),
            _ => {}
        }
    }
    Ok(Fdtc::new(shift.unwrap() as i64, k as i64))
}

/// `c(D^n ∘ h^k) = n + k·c(h)`.
pub fn fdtc_compose(base: Fdtc, boundary_twists: i64, power: i64) -> Fdtc {
    Fdtc::from_integer(boundary_twists) + base * power
}

/// Coefficient on the double cover from the braid coefficient.
pub fn cover_relation(c_braid: Fdtc) -> Fdtc {
    c_braid / 2
}

/// Braid coefficient from the coefficient on the double cover.
pub fn braid_from_cover(c_cover: Fdtc) -> Fdtc {
    c_cover * 2
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Admissibility {
    pub within_bound: bool,
    pub nonzero: bool,
}

impl Admissibility {
    pub fn admissible(&self) -> bool {
        self.within_bound && self.nonzero
    }
}

/// `|c(β)| < bound` and `c(β) ≠ 0`, reported separately.
pub fn lspace_admissible(c_braid: Fdtc, bound: Fdtc) -> Admissibility {
    Admissibility { within_bound: c_braid.abs() < bound, nonzero: !c_braid.is_zero() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::track::{camel_r, StandardBuilder};
    use alloc::sync::Arc;

    #[test]
    fn compose_law() {
        let half = Fdtc::new(1, 2);
        assert_eq!(fdtc_compose(half, 3, -1), Fdtc::new(5, 2));
        assert_eq!(fdtc_compose(Fdtc::zero(), 0, 1), Fdtc::zero());
        assert_eq!(cover_relation(Fdtc::from_integer(1)), half);
        assert_eq!(braid_from_cover(Fdtc::new(1, 1)), Fdtc::from_integer(2));
    }

    #[test]
    fn bounds() {
        let b = Fdtc::from_integer(DEFAULT_BRAID_BOUND);
        let z = lspace_admissible(Fdtc::zero(), b);
        assert!(z.within_bound && !z.nonzero);
        assert!(lspace_admissible(Fdtc::from_integer(1), b).admissible());
        assert!(!lspace_admissible(Fdtc::from_integer(2), b).within_bound);
        assert!(lspace_admissible(Fdtc::new(-3, 2), b).admissible());
    }

    #[test]
    fn single_cusp_tracks() {
        let m = TrackMap::parse(
            Arc::new(camel_r()),
            "r -> b o\nb -> d p o\np -> y o\ng -> p+ ~d b+ r o\ny -> g o\nd -> r- b- d p- g-\n",
        )
        .unwrap();
        assert_eq!(boundary_rotation(&m), Ok(Fdtc::zero()));
    }

    #[test]
    fn rotated_triangle() {
        let t = StandardBuilder::new("tri6")
            .polygon(&[("A", &["a1", "a2"]), ("B", &["b1", "b2"]), ("C", &["c1", "c2"])])
            .build();
        assert_eq!(t.validate(), alloc::vec![]);
        let t = Arc::new(t);
        let one = "a1 -> b1 o\na2 -> b2 o\nb1 -> c1 o\nb2 -> c2 o\nc1 -> a1 o\nc2 -> a2 o\n";
        let m = TrackMap::parse(t.clone(), one).unwrap();
        assert_eq!(check_legal(&m), alloc::vec![]);
        let r = boundary_rotation(&m).unwrap();
        assert_eq!(r, Fdtc::new(1, 3));
        let two = "a1 -> c1 o\na2 -> c2 o\nb1 -> a1 o\nb2 -> a2 o\nc1 -> b1 o\nc2 -> b2 o\n";
        let m2 = TrackMap::parse(t, two).unwrap();
        assert_eq!(boundary_rotation(&m2).unwrap() + r, Fdtc::from_integer(1));
    }
}
