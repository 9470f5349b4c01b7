//! Lifting a map on a standard track to the branched double cover.
//!
//! Every real edge `e` lifts to two edges, one on each sheet; a path swaps
//! sheets each time it passes over the infinitesimal edge above a marked
//! point, which in decorated notation is exactly once per `e+` or `e-`.
//!
//! A lift is fixed by choosing, at one polygon, whether its two lifts are
//! exchanged. `toggle = false` is the lift that preserves sheets at the first
//! polygon; `toggle = true` composes with the covering involution, which is
//! what a full twist on the boundary lifts to. Sheet shifts at the other
//! polygons follow by carrying the bridge images across.

use crate::path::{Dec, DecoratedPath};
use crate::strata::{lift_stratum, Stratum};
use crate::track::polygon_view;
use crate::trackmap::{check_legal, LegalityViolation, TrackMap};
use alloc::collections::VecDeque;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn of(n: usize) -> Parity {
        if n % 2 == 0 { Parity::Even } else { Parity::Odd }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LiftError {
    Illegal(Vec<LegalityViolation>),
    OutOfRange { position: usize, len: usize },
    Inconsistent(String),
    NoPolygons,
}

impl fmt::Display for LiftError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LiftError::Illegal(v) => write!(f, "illegal map ({} violations)", v.len()),
            LiftError::OutOfRange { position, len } => write!(f, "position {position} outside a path of length {len}"),
            LiftError::Inconsistent(s) => write!(f, "inconsistent sheets: {s}"),
            LiftError::NoPolygons => f.write_str("track has no interior polygons"),
        }
    }
}

impl core::error::Error for LiftError {}

/// Parity of the side-swapping letters strictly before `position`.
pub fn prefix_swap_parity(path: &DecoratedPath, position: usize) -> Result<Parity, LiftError> {
    path.swaps_before(position)
        .map(Parity::of)
        .ok_or(LiftError::OutOfRange { position, len: path.len() })
}

fn require_legal(m: &TrackMap) -> Result<(), LiftError> {
    let v = check_legal(m);
    if v.is_empty() { Ok(()) } else { Err(LiftError::Illegal(v)) }
}

fn swap_count(p: &DecoratedPath) -> usize {
    p.letters.iter().filter(|l| l.dec.swaps()).count()
}

/// Sheet shift (0 or 1) of the lift at each polygon.
pub fn polygon_sides(m: &TrackMap, toggle: bool) -> Result<Vec<u8>, LiftError> {
    require_legal(m)?;
    let t = &m.track;
    let view = polygon_view(t).map_err(|e| LiftError::Inconsistent(format!("{e}")))?;
    let np = view.polys.len();
    if np == 0 {
        return Err(LiftError::NoPolygons);
    }
    let mut side: Vec<Option<u8>> = vec![None; np];
    side[0] = Some(toggle as u8);
    let mut queue = VecDeque::from([0usize]);
    while let Some(p) = queue.pop_front() {
        let sp = side[p].unwrap();
        for &e in &view.bridges {
            let [a, b] = t.edges[e].ends;
            let (pa, pb) = (view.poly_of[a].unwrap(), view.poly_of[b].unwrap());
            let n = (swap_count(m.image(e).unwrap()) % 2) as u8;
            for (from, to) in [(pa, pb), (pb, pa)] {
                if from != p {
                    continue;
                }
                let want = sp ^ n;
                match side[to] {
                    None => {
                        side[to] = Some(want);
                        queue.push_back(to);
                    }
                    Some(s) if s != want => {
                        return Err(LiftError::Inconsistent(format!("bridge {} closes an odd cycle", t.edges[e].label)))
                    }
                    _ => {}
                }
            }
        }
    }
    side.into_iter()
        .enumerate()
        .map(|(k, s)| s.ok_or_else(|| LiftError::Inconsistent(format!("polygon {k} not reached by bridges"))))
        .collect()
}

/// Per-row contributions to the trace of the lifted transition matrix.
fn contributions(m: &TrackMap, sides: &[u8]) -> Vec<(usize, usize)> {
    let t = &m.track;
    let view = polygon_view(t).unwrap();
    let mut out = Vec::new();
    for e in t.real_edges() {
        let p = m.image(e).unwrap();
        let s = sides[view.poly_of[t.edges[e].ends[0]].unwrap()] as usize;
        let mut q = 0;
        let mut c = 0;
        for l in &p.letters {
            if l.edge == e {
                // a doubled letter covers both lifts; a single pass covers the
                // lift on the sheet it is on
                if l.dec.swaps() || (s + q) % 2 == 0 {
                    c += 1;
                }
            }
            if l.dec.swaps() {
                q += 1;
            }
        }
        if c > 0 {
            out.push((e, c));
        }
    }
    out
}

/// Trace of the lifted transition matrix for the chosen lift.
pub fn lifted_trace(m: &TrackMap, toggle: bool) -> Result<u64, LiftError> {
    let sides = polygon_sides(m, toggle)?;
    Ok(2 * contributions(m, &sides).iter().map(|&(_, c)| c as u64).sum::<u64>())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceViolation {
    /// Two adjacent passes over `edge` in its own image are an odd number of
    /// side swaps apart.
    OddGap { edge: String, first: usize, second: usize },
    /// A marked-monogon edge appears in its own image.
    SelfMonogon { edge: String },
    /// A polygon is fixed, so its lifts must be exchanged; this edge then
    /// passes over itself after an odd number of swaps.
    FixedPolygonParity { edge: String, position: usize },
    /// Both ends of a bridge are fixed polygons but its image swaps an odd
    /// number of times.
    FixedBridgeParity { edge: String },
}

impl fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceViolation::OddGap { edge, first, second } => {
                write!(f, "f({edge}) passes {edge} at letters {} and {} with an odd number of swaps between", first + 1, second + 1)
            }
            TraceViolation::SelfMonogon { edge } => write!(f, "monogon edge {edge} appears in its own image"),
            TraceViolation::FixedPolygonParity { edge, position } => {
                write!(f, "f({edge}) passes {edge} at letter {} after an odd number of swaps", position + 1)
            }
            TraceViolation::FixedBridgeParity { edge } => write!(f, "f({edge}) joins fixed polygons with an odd number of swaps"),
        }
    }
}

/// Necessary conditions for a fixed-point-free lift that do not depend on
/// which lift is taken.
pub fn trace_lemma_check(m: &TrackMap) -> Result<Vec<TraceViolation>, LiftError> {
    require_legal(m)?;
    trace_lemma_scan(m)
}

/// The scan behind [`trace_lemma_check`], for maps whose vertex action is
/// defined but which need not be legal.
pub fn trace_lemma_scan(m: &TrackMap) -> Result<Vec<TraceViolation>, LiftError> {
    let t = &m.track;
    let view = polygon_view(t).map_err(|e| LiftError::Inconsistent(format!("{e}")))?;
    let pp = m.polygon_perm().map_err(|e| LiftError::Illegal(vec![e]))?;
    let mut out = Vec::new();
    for e in t.real_edges() {
        let p = m.image(e).unwrap();
        let label = t.edges[e].label.clone();
        // raw passes over e, with the number of swaps seen so far
        let mut passes: Vec<(usize, usize)> = Vec::new();
        let mut q = 0;
        for (k, l) in p.letters.iter().enumerate() {
            if l.edge == e {
                passes.push((k, q));
            }
            if l.dec.swaps() {
                q += 1;
                if l.edge == e {
                    passes.push((k, q));
                }
            }
        }
        for w in passes.windows(2) {
            if (w[1].1 - w[0].1) % 2 == 1 {
                out.push(TraceViolation::OddGap { edge: label.clone(), first: w[0].0, second: w[1].0 });
            }
        }
        if !view.is_bridge(e) {
            if !passes.is_empty() {
                out.push(TraceViolation::SelfMonogon { edge: label.clone() });
            }
            continue;
        }
        let [a, b] = t.edges[e].ends;
        let (pa, pb) = (view.poly_of[a].unwrap(), view.poly_of[b].unwrap());
        if pp[pa] == pa {
            for &(k, q) in &passes {
                if q % 2 == 1 {
                    out.push(TraceViolation::FixedPolygonParity { edge: label.clone(), position: k });
                }
            }
            if pp[pb] == pb && swap_count(p) % 2 == 1 {
                out.push(TraceViolation::FixedBridgeParity { edge: label.clone() });
            }
        }
    }
    Ok(out)
}

/// A lifted singularity: polygon index and sheet.
pub type Lifted = (usize, u8);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    A,
    B,
    C,
    D,
    /// Both polygons swapped and both lifts exchanged sheets.
    SwapBoth,
    /// Some lifted singularity is fixed.
    Violation,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::A => "A",
            CaseTag::B => "B",
            CaseTag::C => "C",
            CaseTag::D => "D",
            CaseTag::SwapBoth => "swap-both",
            CaseTag::Violation => "violation",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityPerm {
    /// `(source, image)` for every lifted singularity, sources sorted.
    pub map: Vec<(Lifted, Lifted)>,
    pub sides: Vec<u8>,
}

impl SingularityPerm {
    pub fn fixed(&self) -> Vec<Lifted> {
        self.map.iter().filter(|(a, b)| a == b).map(|&(a, _)| a).collect()
    }

    /// Cycles of the permutation.
    pub fn cycles(&self) -> Vec<Vec<Lifted>> {
        let mut seen: Vec<Lifted> = Vec::new();
        let mut out = Vec::new();
        for &(start, _) in &self.map {
            if seen.contains(&start) {
                continue;
            }
            let mut cyc = vec![start];
            seen.push(start);
            let mut x = self.image(start);
            while x != start {
                cyc.push(x);
                seen.push(x);
                x = self.image(x);
            }
            out.push(cyc);
        }
        out
    }

    pub fn image(&self, x: Lifted) -> Lifted {
        self.map.iter().find(|(a, _)| *a == x).unwrap().1
    }
}

pub fn lifted_singularity_permutation(m: &TrackMap, toggle: bool) -> Result<(SingularityPerm, CaseTag), LiftError> {
    let sides = polygon_sides(m, toggle)?;
    let pp = m.polygon_perm().map_err(|e| LiftError::Illegal(vec![e]))?;
    let mut map = Vec::new();
    for (k, &img) in pp.iter().enumerate() {
        for s in 0..2u8 {
            map.push(((k, s), (img, s ^ sides[k])));
        }
    }
    map.sort();
    let perm = SingularityPerm { map, sides: sides.clone() };
    let tag = if !perm.fixed().is_empty() {
        CaseTag::Violation
    } else if pp.iter().enumerate().all(|(k, &i)| k == i) {
        CaseTag::A
    } else if pp.len() == 2 {
        match (sides[0], sides[1]) {
            (0, 0) => CaseTag::B,
            (1, 0) => CaseTag::C,
            (0, 1) => CaseTag::D,
            _ => CaseTag::SwapBoth,
        }
    } else {
        // more polygons than the camel shape: no named case
        CaseTag::SwapBoth
    };
    Ok((perm, tag))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub toggle: bool,
    pub lifted_trace: u64,
    pub singularity_perm: SingularityPerm,
    pub case_tag: CaseTag,
    /// Marked points fixed downstairs lift to fixed points.
    pub fixed_marked: Vec<String>,
    pub lifted_stratum: Stratum,
    pub fpf: bool,
}

pub fn fpf_verdict(m: &TrackMap, toggle: bool) -> Result<LiftReport, LiftError> {
    let lifted_trace = lifted_trace(m, toggle)?;
    let (singularity_perm, case_tag) = lifted_singularity_permutation(m, toggle)?;
    let mp = m.marked_perm().map_err(|e| LiftError::Illegal(vec![e]))?;
    let fixed_marked: Vec<String> =
        mp.iter().enumerate().filter(|(k, &i)| *k == i).map(|(k, _)| m.track.marked[k].0.clone()).collect();
    let stratum = m.track.stratum_of().map_err(|v| LiftError::Inconsistent(format!("{} track violations", v.len())))?;
    let fpf = lifted_trace == 0 && singularity_perm.fixed().is_empty() && fixed_marked.is_empty();
    Ok(LiftReport { toggle, lifted_trace, singularity_perm, case_tag, fixed_marked, lifted_stratum: lift_stratum(&stratum), fpf })
}

impl fmt::Display for LiftReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "lift: {}", if self.toggle { "toggled" } else { "plain" })?;
        writeln!(f, "lifted_trace: {}", self.lifted_trace)?;
        write!(f, "singularities:")?;
        for c in self.singularity_perm.cycles() {
            write!(f, " (")?;
            for (i, (p, s)) in c.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "P{p}.{s}")?;
            }
            write!(f, ")")?;
        }
        writeln!(f)?;
        write!(f, "sides:")?;
        for s in &self.singularity_perm.sides {
            write!(f, " {s}")?;
        }
        writeln!(f)?;
        writeln!(f, "case: {}", self.case_tag)?;
        if !self.fixed_marked.is_empty() {
            writeln!(f, "fixed_marked: {}", self.fixed_marked.join(" "))?;
        }
        writeln!(f, "lifted_stratum: {}", self.lifted_stratum)?;
        writeln!(f, "fpf: {}", self.fpf)
    }
}

/// Whether a decoration passes over the side-swapping edge.
pub fn swap_weight(d: Dec) -> u8 {
    d.swaps() as u8
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::track::{camel_r, jellyfish};
    use crate::trackmap::TrackMap;
    use alloc::string::ToString;
    use alloc::sync::Arc;

    const BETA1: &str = "r -> b o\nb -> d p o\np -> y o\ng -> p+ ~d b+ r o\ny -> g o\nd -> r- b- d p- g-\n";

    #[test]
    fn beta1_lifts() {
        let m = TrackMap::parse(Arc::new(camel_r()), BETA1).unwrap();
        assert_eq!(trace_lemma_check(&m).unwrap(), vec![]);
        let plain = fpf_verdict(&m, false).unwrap();
        assert_eq!(plain.singularity_perm.fixed().len(), 4);
        assert_eq!(plain.case_tag, CaseTag::Violation);
        assert!(!plain.fpf);
        let tw = fpf_verdict(&m, true).unwrap();
        assert_eq!(tw.case_tag, CaseTag::A);
        assert_eq!(tw.lifted_trace, 0);
        assert!(tw.fpf);
        assert_eq!(tw.lifted_stratum.to_string(), "(2;∅;3^4)");
    }

    #[test]
    fn odd_prefix_in_fixed_case() {
        let bad = BETA1.replace("d -> r- b- d p- g-", "d -> r- d p- g-");
        let m = TrackMap::parse(Arc::new(camel_r()), &bad).unwrap();
        assert!(!check_legal(&m).is_empty());
        let v = trace_lemma_scan(&m).unwrap();
        assert!(v.iter().any(|x| matches!(x, TraceViolation::FixedPolygonParity { .. })));
    }

    #[test]
    fn parity_examples() {
        let t = jellyfish();
        let v = polygon_view(&t).unwrap();
        let p = crate::path::parse_path(&t, &v, "p- g- r+ y o").unwrap();
        assert_eq!(prefix_swap_parity(&p, 2), Ok(Parity::Even));
        assert_eq!(prefix_swap_parity(&p, 0), Ok(Parity::Even));
        assert_eq!(prefix_swap_parity(&p, 3), Ok(Parity::Odd));
        assert!(prefix_swap_parity(&p, 5).is_err());
    }
}
