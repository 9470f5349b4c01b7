//! Combinatorial train tracks on the marked disk.
//!
//! A track is stored as pure incidence: every switch carries a cyclic
//! counter-clockwise list of germs, split into two tangential sides (side 0
//! followed by side 1). Complementary regions are the faces of this ribbon
//! graph; a corner between two consecutive germs on the same side is a cusp.
//!
//! Standard tracks are assembled with [`StandardBuilder`]: infinitesimal
//! polygons whose vertices carry real germs, marked monogons hanging off
//! polygon vertices by a real edge, and real bridges between polygon vertices.
//! At a polygon vertex the cyclic order is `[reals…, to_next, to_prev]` for a
//! counter-clockwise polygon; at a monogon switch it is `[e, loop₀, loop₁]`.

use crate::strata::Stratum;
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EdgeKind {
    Real,
    Infinitesimal,
}

/// One end of an edge: `(edge index, end ∈ {0, 1})`.
pub type GermRef = (usize, u8);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub label: String,
    pub kind: EdgeKind,
    pub ends: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Switch {
    pub name: String,
    /// Counter-clockwise cyclic order.
    pub germs: Vec<GermRef>,
    pub sides: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Track {
    pub name: String,
    pub switches: Vec<Switch>,
    pub edges: Vec<Edge>,
    /// Marked points, each named and enclosed by an infinitesimal loop edge.
    pub marked: Vec<(String, usize)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegionRole {
    Peripheral,
    Polygon,
    MarkedMonogon(usize),
    Other,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    /// Corners `(switch, incoming germ, outgoing germ)` in boundary order.
    pub corners: Vec<(usize, GermRef, GermRef)>,
    pub edges: Vec<usize>,
    pub cusps: usize,
    pub role: RegionRole,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    BadGerm { switch: String, detail: String },
    SideMissing { switch: String },
    TooFewGerms { switch: String },
    Disconnected,
    NotPlanar { euler: i64 },
    PeripheralCount(usize),
    MarkedLoop { name: String },
    NonPolygonRegion { edges: Vec<String> },
    Balance { lhs: i64, rhs: i64 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadGerm { switch, detail } => write!(f, "switch {switch}: {detail}"),
            Violation::SideMissing { switch } => write!(f, "switch {switch} has germs on one side only"),
            Violation::TooFewGerms { switch } => write!(f, "switch {switch} has fewer than 3 germs"),
            Violation::Disconnected => f.write_str("track is disconnected"),
            Violation::NotPlanar { euler } => write!(f, "V - E + F = {euler}, expected 2"),
            Violation::PeripheralCount(k) => write!(f, "{k} regions meet real edges, expected exactly 1"),
            Violation::MarkedLoop { name } => write!(f, "marked point {name} is not inside a monogon"),
            Violation::NonPolygonRegion { edges } => {
                write!(f, "interior region bounded by {} is not an infinitesimal polygon", edges.join(","))
            }
            Violation::Balance { lhs, rhs } => write!(f, "Euler-Poincare balance fails: {lhs} != {rhs}"),
        }
    }
}

impl Track {
    pub fn edge_by_label(&self, label: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.label == label)
    }

    pub fn switch_by_name(&self, name: &str) -> Option<usize> {
        self.switches.iter().position(|s| s.name == name)
    }

    pub fn real_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| self.edges[e].kind == EdgeKind::Real).collect()
    }

    pub fn real_labels(&self) -> Vec<&str> {
        self.real_edges().into_iter().map(|e| self.edges[e].label.as_str()).collect()
    }

    /// `(switch, position in its cyclic order)` of a germ.
    pub fn locate(&self, g: GermRef) -> (usize, usize) {
        let s = self.edges[g.0].ends[g.1 as usize];
        let p = self.switches[s].germs.iter().position(|&h| h == g).expect("germ listed at its switch");
        (s, p)
    }

    pub fn side_of(&self, g: GermRef) -> u8 {
        let (s, p) = self.locate(g);
        self.switches[s].sides[p]
    }

    /// Faces of the ribbon graph. The successor of dart `h` is the germ
    /// counter-clockwise after the arriving germ.
    pub fn regions(&self) -> Vec<Region> {
        let mut darts: Vec<GermRef> = Vec::new();
        for e in 0..self.edges.len() {
            darts.push((e, 0));
            darts.push((e, 1));
        }
        let mut seen: BTreeMap<GermRef, bool> = BTreeMap::new();
        let mut out = Vec::new();
        for &d0 in &darts {
            if seen.contains_key(&d0) {
                continue;
            }
            let mut corners = Vec::new();
            let mut edges = Vec::new();
            let mut d = d0;
            loop {
                seen.insert(d, true);
                edges.push(d.0);
                let arrive = (d.0, 1 - d.1);
                let (s, p) = self.locate(arrive);
                let sw = &self.switches[s];
                let q = (p + 1) % sw.germs.len();
                let next = sw.germs[q];
                corners.push((s, arrive, next));
                d = next;
                if d == d0 {
                    break;
                }
            }
            let cusps = corners
                .iter()
                .filter(|&&(s, a, b)| {
                    let sw = &self.switches[s];
                    let pa = sw.germs.iter().position(|&g| g == a).unwrap();
                    let pb = sw.germs.iter().position(|&g| g == b).unwrap();
                    sw.sides[pa] == sw.sides[pb]
                })
                .count();
            out.push(Region { corners, edges, cusps, role: RegionRole::Other });
        }
        for r in &mut out {
            let all_inf = r.edges.iter().all(|&e| self.edges[e].kind == EdgeKind::Infinitesimal);
            if !all_inf {
                continue;
            }
            if r.edges.len() == 1 && self.edges[r.edges[0]].ends[0] == self.edges[r.edges[0]].ends[1] {
                if let Some(k) = self.marked.iter().position(|&(_, l)| l == r.edges[0]) {
                    r.role = RegionRole::MarkedMonogon(k);
                }
            } else {
                r.role = RegionRole::Polygon;
            }
        }
        let real: Vec<usize> = (0..out.len()).filter(|&i| out[i].role == RegionRole::Other).collect();
        if real.len() == 1 {
            out[real[0]].role = RegionRole::Peripheral;
        }
        out
    }

    pub fn validate(&self) -> Vec<Violation> {
        let mut v = Vec::new();
        for (si, sw) in self.switches.iter().enumerate() {
            if sw.germs.len() != sw.sides.len() {
                v.push(Violation::BadGerm { switch: sw.name.clone(), detail: "side list length".into() });
                continue;
            }
            for &(e, end) in &sw.germs {
                if e >= self.edges.len() || end > 1 || self.edges[e].ends[end as usize] != si {
                    v.push(Violation::BadGerm { switch: sw.name.clone(), detail: format!("dangling germ {e}.{end}") });
                }
            }
            // sides must be contiguous arcs of the cyclic order
            let changes = (0..sw.sides.len()).filter(|&i| sw.sides[i] != sw.sides[(i + 1) % sw.sides.len()]).count();
            if !sw.sides.contains(&0) || !sw.sides.contains(&1) {
                v.push(Violation::SideMissing { switch: sw.name.clone() });
            } else if changes != 2 {
                v.push(Violation::BadGerm { switch: sw.name.clone(), detail: "sides interleave".into() });
            }
            if sw.germs.len() < 3 {
                v.push(Violation::TooFewGerms { switch: sw.name.clone() });
            }
        }
        for (e, ed) in self.edges.iter().enumerate() {
            for end in 0..2u8 {
                let s = ed.ends[end as usize];
                if s >= self.switches.len() || !self.switches[s].germs.contains(&(e, end)) {
                    v.push(Violation::BadGerm { switch: ed.label.clone(), detail: format!("edge end {end} not listed") });
                }
            }
        }
        if !v.is_empty() {
            return v;
        }
        if !self.connected() {
            v.push(Violation::Disconnected);
        }
        let regions = self.regions();
        let euler = self.switches.len() as i64 - self.edges.len() as i64 + regions.len() as i64;
        if euler != 2 {
            v.push(Violation::NotPlanar { euler });
        }
        let periph = regions.iter().filter(|r| r.role == RegionRole::Peripheral).count();
        let other: Vec<&Region> = regions.iter().filter(|r| r.role == RegionRole::Other).collect();
        if periph != 1 {
            v.push(Violation::PeripheralCount(other.len()));
        }
        for (k, (name, _)) in self.marked.iter().enumerate() {
            if !regions.iter().any(|r| r.role == RegionRole::MarkedMonogon(k)) {
                v.push(Violation::MarkedLoop { name: name.clone() });
            }
        }
        if v.is_empty() {
            let s = self.stratum_from(&regions);
            let (lhs, rhs) = s.balance(1);
            if lhs != rhs {
                v.push(Violation::Balance { lhs, rhs });
            }
        }
        v
    }

    fn connected(&self) -> bool {
        let n = self.switches.len();
        if n == 0 {
            return false;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(s) = stack.pop() {
            for &(e, end) in &self.switches[s].germs {
                let t = self.edges[e].ends[1 - end as usize];
                if !seen[t] {
                    seen[t] = true;
                    stack.push(t);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    fn stratum_from(&self, regions: &[Region]) -> Stratum {
        let mut s = Stratum::default();
        for r in regions {
            match r.role {
                RegionRole::Peripheral => s.boundary.push(r.cusps as u32),
                RegionRole::MarkedMonogon(_) => s.marked.push(r.cusps as u32),
                RegionRole::Polygon | RegionRole::Other => s.interior.push(r.cusps as u32),
            }
        }
        s.normalize();
        s
    }

    pub fn stratum_of(&self) -> Result<Stratum, Vec<Violation>> {
        let v = self.validate();
        if !v.is_empty() {
            return Err(v);
        }
        Ok(self.stratum_from(&self.regions()))
    }

    /// The four structural bullets: interior regions are infinitesimal
    /// polygons or marked monogons, every switch is a polygon vertex or a
    /// monogon switch, real and infinitesimal germs sit on opposite sides, and
    /// each marked point has its own side-swapping loop.
    pub fn is_standard(&self) -> bool {
        if !self.validate().is_empty() {
            return false;
        }
        let regions = self.regions();
        if regions.iter().any(|r| r.role == RegionRole::Other) {
            return false;
        }
        for sw in &self.switches {
            for (k, &(e, _)) in sw.germs.iter().enumerate() {
                let want = if self.edges[e].kind == EdgeKind::Real { 0 } else { 1 };
                if sw.sides[k] != want {
                    return false;
                }
            }
            if sw.sides.iter().filter(|&&s| s == 1).count() != 2 {
                return false;
            }
        }
        let mut loops: Vec<usize> = self.marked.iter().map(|&(_, l)| l).collect();
        loops.sort_unstable();
        loops.dedup();
        loops.len() == self.marked.len()
    }

    fn monogon_switches(&self) -> Vec<usize> {
        self.marked.iter().map(|&(_, l)| self.edges[l].ends[0]).collect()
    }

    pub fn is_jointless(&self) -> bool {
        self.monogon_switches().into_iter().all(|s| {
            let sw = &self.switches[s];
            sw.germs.iter().filter(|&&(e, _)| self.edges[e].kind == EdgeKind::Real).count() <= 1
        })
    }

    /// Mirror image: every cyclic order reversed. Monogon switches are put
    /// back into `[e, loop₀, loop₁]` form by exchanging the loop's ends.
    pub fn reflect(&self, name: &str) -> Track {
        let mut t = self.clone();
        t.name = name.to_string();
        for sw in t.switches.iter_mut() {
            let n = sw.germs.len();
            sw.germs.reverse();
            sw.sides.reverse();
            let start = (0..n).find(|&k| sw.sides[k] == 0 && sw.sides[(k + n - 1) % n] == 1).unwrap_or(0);
            sw.germs.rotate_left(start);
            sw.sides.rotate_left(start);
        }
        for &(_, l) in &self.marked {
            let m = t.edges[l].ends[0];
            for g in t.switches[m].germs.iter_mut() {
                if g.0 == l {
                    g.1 = 1 - g.1;
                }
            }
        }
        t
    }
}

/// Incidence of a standard track in polygon form, the shape the search and
/// the lift calculus work with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolygonView {
    pub polys: Vec<Vec<usize>>,
    pub poly_of: Vec<Option<usize>>,
    pub nxt: Vec<usize>,
    pub prv: Vec<usize>,
    /// Real germs at each polygon vertex, counter-clockwise.
    pub germs: Vec<Vec<GermRef>>,
    /// For each edge: `Some(loop edge)` if it is a monogon edge (end 1 at the monogon switch).
    pub monogon_loop: Vec<Option<usize>>,
    pub bridges: Vec<usize>,
    pub monogons: Vec<usize>,
    /// Marked-point index of each monogon edge.
    pub marked_of: Vec<Option<usize>>,
}

impl PolygonView {
    pub fn is_bridge(&self, e: usize) -> bool {
        self.bridges.contains(&e)
    }

    pub fn vertex_of(&self, t: &Track, g: GermRef) -> usize {
        t.edges[g.0].ends[g.1 as usize]
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        a != b && (self.nxt[a] == b || self.prv[a] == b)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViewError {
    NotStandard,
    Shape(String),
}

impl fmt::Display for ViewError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ViewError::NotStandard => f.write_str("track is not standard"),
            ViewError::Shape(s) => f.write_str(s),
        }
    }
}

impl core::error::Error for ViewError {}

pub fn polygon_view(t: &Track) -> Result<PolygonView, ViewError> {
    if !t.is_standard() {
        return Err(ViewError::NotStandard);
    }
    let ns = t.switches.len();
    let mut polys = Vec::new();
    let mut poly_of = vec![None; ns];
    let mut nxt = vec![usize::MAX; ns];
    let mut prv = vec![usize::MAX; ns];
    for r in t.regions() {
        if r.role != RegionRole::Polygon {
            continue;
        }
        // faces run clockwise around polygons
        let mut verts: Vec<usize> = r.corners.iter().map(|c| c.0).collect();
        verts.reverse();
        let k = polys.len();
        for (i, &v) in verts.iter().enumerate() {
            poly_of[v] = Some(k);
            nxt[v] = verts[(i + 1) % verts.len()];
            prv[v] = verts[(i + verts.len() - 1) % verts.len()];
        }
        polys.push(verts);
    }
    polys.sort_by_key(|p| *p.iter().min().unwrap());
    for (k, p) in polys.iter().enumerate() {
        for &v in p {
            poly_of[v] = Some(k);
        }
    }
    let mut germs = vec![Vec::new(); ns];
    for v in 0..ns {
        if poly_of[v].is_some() {
            let sw = &t.switches[v];
            germs[v] = sw.germs.iter().zip(&sw.sides).filter(|(_, &s)| s == 0).map(|(&g, _)| g).collect();
        }
    }
    let mut monogon_loop = vec![None; t.edges.len()];
    let mut marked_of = vec![None; t.edges.len()];
    let mut bridges = Vec::new();
    let mut monogons = Vec::new();
    for e in t.real_edges() {
        let [a, b] = t.edges[e].ends;
        match (poly_of[a].is_some(), poly_of[b].is_some()) {
            (true, true) => bridges.push(e),
            (true, false) => {
                let k = t.marked.iter().position(|&(_, l)| t.edges[l].ends[0] == b).ok_or_else(|| {
                    ViewError::Shape(format!("edge {} ends at an unmarked switch", t.edges[e].label))
                })?;
                monogon_loop[e] = Some(t.marked[k].1);
                marked_of[e] = Some(k);
                monogons.push(e);
            }
            _ => {
                return Err(ViewError::Shape(format!(
                    "edge {} must start at a polygon vertex and end at a polygon vertex or monogon",
                    t.edges[e].label
                )))
            }
        }
    }
    Ok(PolygonView { polys, poly_of, nxt, prv, germs, monogon_loop, bridges, monogons, marked_of })
}

/// Builder for standard tracks.
#[derive(Debug, Default)]
pub struct StandardBuilder {
    name: String,
    polygons: Vec<Vec<(String, Vec<String>)>>,
    bridges: Vec<(String, String, String)>,
    joints: Vec<(String, String)>,
}

impl StandardBuilder {
    pub fn new(name: &str) -> Self {
        StandardBuilder { name: name.to_string(), ..Default::default() }
    }

    /// A counter-clockwise polygon; each vertex lists its real edge labels
    /// counter-clockwise. Labels that are not bridges become marked monogons.
    pub fn polygon(mut self, verts: &[(&str, &[&str])]) -> Self {
        self.polygons.push(
            verts.iter().map(|(v, g)| (v.to_string(), g.iter().map(|s| s.to_string()).collect())).collect(),
        );
        self
    }

    /// A real edge between two polygon vertices (end 0 at `from`).
    pub fn bridge(mut self, label: &str, from: &str, to: &str) -> Self {
        self.bridges.push((label.to_string(), from.to_string(), to.to_string()));
        self
    }

    /// An extra marked monogon hanging from the monogon switch of `host`.
    pub fn joint(mut self, label: &str, host: &str) -> Self {
        self.joints.push((label.to_string(), host.to_string()));
        self
    }

    pub fn build(self) -> Track {
        let mut t = Track { name: self.name, switches: Vec::new(), edges: Vec::new(), marked: Vec::new() };
        let mut vid: BTreeMap<String, usize> = BTreeMap::new();
        for p in &self.polygons {
            for (v, _) in p {
                vid.insert(v.clone(), t.switches.len());
                t.switches.push(Switch { name: v.clone(), germs: Vec::new(), sides: Vec::new() });
            }
        }
        let bridge_ends: BTreeMap<String, (String, String)> =
            self.bridges.iter().map(|(l, a, b)| (l.clone(), (a.clone(), b.clone()))).collect();
        // real germs first so that side 0 opens each cyclic order
        let mut bridge_id: BTreeMap<String, usize> = BTreeMap::new();
        let mut mono_switch: BTreeMap<String, usize> = BTreeMap::new();
        for p in &self.polygons {
            for (v, reals) in p {
                let s = vid[v];
                for l in reals {
                    if let Some((a, _)) = bridge_ends.get(l) {
                        let e = *bridge_id.entry(l.clone()).or_insert_with(|| {
                            t.edges.push(Edge { label: l.clone(), kind: EdgeKind::Real, ends: [0, 0] });
                            t.edges.len() - 1
                        });
                        let end = if a == v { 0 } else { 1 };
                        t.edges[e].ends[end] = s;
                        t.switches[s].germs.push((e, end as u8));
                        t.switches[s].sides.push(0);
                    } else {
                        let e = t.edges.len();
                        t.edges.push(Edge { label: l.clone(), kind: EdgeKind::Real, ends: [s, 0] });
                        t.switches[s].germs.push((e, 0));
                        t.switches[s].sides.push(0);
                        let m = t.switches.len();
                        t.switches.push(Switch { name: format!("M{l}"), germs: vec![(e, 1)], sides: vec![0] });
                        t.edges[e].ends[1] = m;
                        mono_switch.insert(l.clone(), m);
                    }
                }
            }
        }
        for (l, host) in &self.joints {
            let h = mono_switch[host];
            let e = t.edges.len();
            let m = t.switches.len();
            t.edges.push(Edge { label: l.clone(), kind: EdgeKind::Real, ends: [h, m] });
            t.switches[h].germs.push((e, 0));
            t.switches[h].sides.push(0);
            t.switches.push(Switch { name: format!("M{l}"), germs: vec![(e, 1)], sides: vec![0] });
            mono_switch.insert(l.clone(), m);
        }
        for p in &self.polygons {
            let k = p.len();
            let ids: Vec<usize> = p.iter().map(|(v, _)| vid[v]).collect();
            let mut to_next = vec![(0usize, 0u8); k];
            let mut to_prev = vec![(0usize, 0u8); k];
            for i in 0..k {
                let a = ids[i];
                let b = ids[(i + 1) % k];
                let e = t.edges.len();
                t.edges.push(Edge {
                    label: format!("{}~{}", t.switches[a].name, t.switches[b].name),
                    kind: EdgeKind::Infinitesimal,
                    ends: [a, b],
                });
                to_next[i] = (e, 0);
                to_prev[(i + 1) % k] = (e, 1);
            }
            for i in 0..k {
                let s = ids[i];
                t.switches[s].germs.push(to_next[i]);
                t.switches[s].sides.push(1);
                t.switches[s].germs.push(to_prev[i]);
                t.switches[s].sides.push(1);
            }
        }
        let mut monos: Vec<(String, usize)> = mono_switch.into_iter().collect();
        monos.sort_by_key(|&(_, m)| m);
        for (l, m) in monos {
            let e = t.edges.len();
            t.edges.push(Edge { label: format!("o{l}"), kind: EdgeKind::Infinitesimal, ends: [m, m] });
            t.switches[m].germs.push((e, 0));
            t.switches[m].sides.push(1);
            t.switches[m].germs.push((e, 1));
            t.switches[m].sides.push(1);
            t.marked.push((l, e));
        }
        t
    }
}

/// The named tracks of the stratum `(1;1⁵;4)` and `(1;1⁵;3²)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum NamedTrack {
    Jellyfish,
    CamelL,
    CamelR,
    EnokiL,
    EnokiR,
}

impl NamedTrack {
    pub const ALL: [NamedTrack; 5] =
        [NamedTrack::Jellyfish, NamedTrack::CamelL, NamedTrack::CamelR, NamedTrack::EnokiL, NamedTrack::EnokiR];

    pub fn slug(self) -> &'static str {
        match self {
            NamedTrack::Jellyfish => "jellyfish",
            NamedTrack::CamelL => "camel-l",
            NamedTrack::CamelR => "camel-r",
            NamedTrack::EnokiL => "enoki-l",
            NamedTrack::EnokiR => "enoki-r",
        }
    }

    pub fn from_slug(s: &str) -> Option<Self> {
        NamedTrack::ALL.into_iter().find(|t| t.slug() == s)
    }

    pub fn track(self) -> Track {
        match self {
            NamedTrack::Jellyfish => jellyfish(),
            NamedTrack::CamelR => camel_r(),
            NamedTrack::CamelL => camel_r().reflect("camel-l"),
            NamedTrack::EnokiR => enoki_r(),
            NamedTrack::EnokiL => enoki_r().reflect("enoki-l"),
        }
    }
}

impl fmt::Display for NamedTrack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.slug())
    }
}

pub fn jellyfish() -> Track {
    StandardBuilder::new("jellyfish")
        .polygon(&[("Vgy", &["y", "g"]), ("Vp", &["p"]), ("Vb", &["b"]), ("Vr", &["r"])])
        .build()
}

pub fn camel_r() -> Track {
    StandardBuilder::new("camel-r")
        .polygon(&[("VL", &["d"]), ("Vb", &["b"]), ("Vr", &["r"])])
        .polygon(&[("VR", &["d", "y"]), ("Vg", &["g"]), ("Vp", &["p"])])
        .bridge("d", "VL", "VR")
        .build()
}

pub fn enoki_r() -> Track {
    StandardBuilder::new("enoki-r")
        .polygon(&[("VL", &["d"]), ("Vb", &["b"]), ("Vr", &["r"])])
        .polygon(&[("VR", &["d"]), ("Vgy", &["y", "g"]), ("Vp", &["p"])])
        .bridge("d", "VL", "VR")
        .build()
}

/// Jellyfish with a sixth marked point hanging off the `g` monogon: standard,
/// but with a joint.
pub fn jellyfish_with_joint() -> Track {
    StandardBuilder::new("jellyfish-joint")
        .polygon(&[("Vgy", &["y", "g"]), ("Vp", &["p"]), ("Vb", &["b"]), ("Vr", &["r"])])
        .joint("j", "g")
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_validate() {
        for t in NamedTrack::ALL {
            let tr = t.track();
            assert!(tr.validate().is_empty(), "{t}: {:?}", tr.validate());
            assert!(tr.is_standard(), "{t}");
            assert!(tr.is_jointless(), "{t}");
        }
    }

    #[test]
    fn strata_of_fixtures() {
        assert_eq!(jellyfish().stratum_of().unwrap().to_string(), "(1;1^5;4)");
        for t in [NamedTrack::CamelL, NamedTrack::CamelR, NamedTrack::EnokiL, NamedTrack::EnokiR] {
            assert_eq!(t.track().stratum_of().unwrap().to_string(), "(1;1^5;3^2)", "{t}");
        }
    }

    #[test]
    fn joint_variant() {
        let t = jellyfish_with_joint();
        assert!(t.validate().is_empty(), "{:?}", t.validate());
        assert!(t.is_standard());
        assert!(!t.is_jointless());
    }

    #[test]
    fn deleting_an_infinitesimal_edge_breaks_the_track() {
        let mut t = jellyfish();
        let e = t.edge_by_label("Vp~Vb").unwrap();
        for sw in &mut t.switches {
            let keep: Vec<bool> = sw.germs.iter().map(|g| g.0 != e).collect();
            let mut k = 0;
            sw.germs.retain(|_| {
                k += 1;
                keep[k - 1]
            });
            let mut k = 0;
            sw.sides.retain(|_| {
                k += 1;
                keep[k - 1]
            });
        }
        t.edges[e].ends = [usize::MAX, usize::MAX];
        assert!(!t.validate().is_empty());
    }

    #[test]
    fn reflection_twice_is_identity() {
        let t = camel_r();
        assert_eq!(t.reflect("x").reflect("camel-r"), t);
    }

    #[test]
    fn polygon_view_of_camel() {
        let t = camel_r();
        let v = polygon_view(&t).unwrap();
        assert_eq!(v.polys.len(), 2);
        assert_eq!(v.bridges.len(), 1);
        assert_eq!(v.monogons.len(), 5);
        let vl = t.switch_by_name("VL").unwrap();
        let vb = t.switch_by_name("Vb").unwrap();
        assert_eq!(v.nxt[vl], vb);
    }
}
