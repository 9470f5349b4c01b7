//! Train track maps on standard tracks.
//!
//! A map assigns a decorated path to every real edge: the image of the germ
//! at the edge's polygon end for a monogon edge, and the whole image from end
//! 0 to end 1 for a bridge. The action on polygon vertices, infinitesimal
//! edges and marked points is read off from these paths.

use crate::corridor::{BuildError, Corridors, Visit};
use crate::matrix::{spectral_radius, Enclosure, IntMatrix, SpectralError};
use crate::path::{parse_path, Dec, DecoratedPath, PathParseError};
use crate::track::{polygon_view, PolygonView, Track, ViewError};
use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrackMap {
    pub track: Arc<Track>,
    /// Indexed by edge; `None` for infinitesimal edges.
    pub images: Vec<Option<DecoratedPath>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    View(ViewError),
    Parse { line: usize, message: String },
    Illegal(Vec<LegalityViolation>),
}

impl fmt::Display for MapError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapError::View(e) => write!(f, "{e}"),
            MapError::Parse { line, message } => write!(f, "line {line}: {message}"),
            MapError::Illegal(v) => {
                write!(f, "illegal map:")?;
                for x in v {
                    write!(f, " {x};")?;
                }
                Ok(())
            }
        }
    }
}

impl core::error::Error for MapError {}

impl From<ViewError> for MapError {
    fn from(e: ViewError) -> Self {
        MapError::View(e)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LegalityViolation {
    MissingImage(String),
    EmptyImage(String),
    Decoration { edge: String, detail: String },
    RepeatedBridge { edge: String },
    Draw { edge: String, error: BuildError },
    VertexMap(String),
    NotRotation(String),
    MarkedPoints(String),
    Crossing { a: String, b: String },
}

impl fmt::Display for LegalityViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LegalityViolation::MissingImage(e) => write!(f, "no image for {e}"),
            LegalityViolation::EmptyImage(e) => write!(f, "empty image for {e}"),
            LegalityViolation::Decoration { edge, detail } => write!(f, "f({edge}): {detail}"),
            LegalityViolation::RepeatedBridge { edge } => write!(f, "f({edge}) passes a bridge twice in a row"),
            LegalityViolation::Draw { edge, error } => write!(f, "f({edge}): {error}"),
            LegalityViolation::VertexMap(s) => write!(f, "vertex map: {s}"),
            LegalityViolation::NotRotation(s) => write!(f, "polygon map: {s}"),
            LegalityViolation::MarkedPoints(s) => write!(f, "marked points: {s}"),
            LegalityViolation::Crossing { a, b } => write!(f, "f({a}) and f({b}) cross"),
        }
    }
}

impl TrackMap {
    pub fn new(track: Arc<Track>, images: Vec<Option<DecoratedPath>>) -> Self {
        TrackMap { track, images }
    }

    pub fn image(&self, e: usize) -> Option<&DecoratedPath> {
        self.images.get(e).and_then(|x| x.as_ref())
    }

    pub fn image_by_label(&self, label: &str) -> Option<&DecoratedPath> {
        self.track.edge_by_label(label).and_then(|e| self.image(e))
    }

    /// Parse lines `label -> path`; blank lines and `#` comments are skipped.
    pub fn parse(track: Arc<Track>, text: &str) -> Result<TrackMap, MapError> {
        let view = polygon_view(&track)?;
        let mut images = vec![None; track.edges.len()];
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line
                .split_once("->")
                .ok_or_else(|| MapError::Parse { line: ln + 1, message: "expected `edge -> path`".into() })?;
            let e = track
                .edge_by_label(lhs.trim())
                .filter(|&e| view.is_bridge(e) || view.monogon_loop[e].is_some())
                .ok_or_else(|| MapError::Parse { line: ln + 1, message: format!("unknown real edge {:?}", lhs.trim()) })?;
            let p = parse_path(&track, &view, rhs)
                .map_err(|PathParseError { token, message }| MapError::Parse {
                    line: ln + 1,
                    message: format!("token {}: {message}", token + 1),
                })?;
            if images[e].is_some() {
                return Err(MapError::Parse { line: ln + 1, message: format!("second image for {}", lhs.trim()) });
            }
            images[e] = Some(p);
        }
        Ok(TrackMap { track, images })
    }

    /// Relabel a map onto the mirror track (`+` and `−` exchanged).
    pub fn mirrored(&self, mirror: Arc<Track>) -> TrackMap {
        let images = self
            .images
            .iter()
            .map(|p| {
                p.as_ref().map(|p| {
                    DecoratedPath::new(
                        p.letters
                            .iter()
                            .map(|l| {
                                let dec = match l.dec {
                                    Dec::Plus => Dec::Minus,
                                    Dec::Minus => Dec::Plus,
                                    d => d,
                                };
                                crate::path::Letter::new(l.edge, dec)
                            })
                            .collect(),
                    )
                })
            })
            .collect();
        TrackMap { track: mirror, images }
    }

    /// Vertex map on polygon vertices read off from the first letters.
    pub fn vertex_map(&self, view: &PolygonView) -> Result<Vec<usize>, LegalityViolation> {
        let t = &self.track;
        let ns = t.switches.len();
        let mut vm = vec![usize::MAX; ns];
        let probe = Corridors::new(t, view, (0..ns).collect());
        let mut set = |v: usize, w: usize, why: &str| -> Result<(), LegalityViolation> {
            if vm[v] != usize::MAX && vm[v] != w {
                return Err(LegalityViolation::VertexMap(format!(
                    "{} sent to both {} and {} ({why})",
                    t.switches[v].name, t.switches[vm[v]].name, t.switches[w].name
                )));
            }
            vm[v] = w;
            Ok(())
        };
        for e in t.real_edges() {
            let p = self.image(e).ok_or_else(|| LegalityViolation::MissingImage(t.edges[e].label.clone()))?;
            let first = *p.letters.first().ok_or_else(|| LegalityViolation::EmptyImage(t.edges[e].label.clone()))?;
            set(t.edges[e].ends[0], probe.letter_start(first), &t.edges[e].label)?;
            if view.is_bridge(e) {
                let last = *p.letters.last().unwrap();
                set(t.edges[e].ends[1], probe.letter_end(last), &t.edges[e].label)?;
            }
        }
        for v in 0..ns {
            if view.poly_of[v].is_some() && vm[v] == usize::MAX {
                return Err(LegalityViolation::VertexMap(format!("{} has no real germ", t.switches[v].name)));
            }
        }
        Ok(vm)
    }

    /// Permutation of polygons induced by the vertex map.
    pub fn polygon_perm(&self) -> Result<Vec<usize>, LegalityViolation> {
        let view = polygon_view(&self.track).map_err(|e| LegalityViolation::VertexMap(e.to_string()))?;
        let vm = self.vertex_map(&view)?;
        Ok(view.polys.iter().map(|p| view.poly_of[vm[p[0]]].unwrap()).collect())
    }

    /// Where each marked point goes (by marked-point index).
    pub fn marked_perm(&self) -> Result<Vec<usize>, LegalityViolation> {
        let view = polygon_view(&self.track).map_err(|e| LegalityViolation::VertexMap(e.to_string()))?;
        let mut out = Vec::new();
        for (name, l) in &self.track.marked {
            let e = self.track.edges[*l].ends[0];
            let mono = view.monogons.iter().copied().find(|&m| self.track.edges[m].ends[1] == e);
            let m = mono.ok_or_else(|| LegalityViolation::MarkedPoints(format!("{name} has no monogon edge")))?;
            let p = self.image(m).ok_or_else(|| LegalityViolation::MissingImage(self.track.edges[m].label.clone()))?;
            let last = p.letters.last().ok_or_else(|| LegalityViolation::EmptyImage(name.clone()))?;
            if last.dec != Dec::Terminal {
                return Err(LegalityViolation::MarkedPoints(format!("f({name}) does not end at a marked point")));
            }
            out.push(view.marked_of[last.edge].unwrap());
        }
        Ok(out)
    }

    /// Images of the infinitesimal edges: polygon sides follow the vertex
    /// map, loops follow the marked points.
    pub fn inf_images(&self) -> Result<BTreeMap<String, String>, LegalityViolation> {
        let t = &self.track;
        let view = polygon_view(t).map_err(|e| LegalityViolation::VertexMap(e.to_string()))?;
        let vm = self.vertex_map(&view)?;
        let mp = self.marked_perm()?;
        let mut out = BTreeMap::new();
        for p in &view.polys {
            for &v in p {
                let a = format!("{}~{}", t.switches[v].name, t.switches[view.nxt[v]].name);
                let b = format!("{}~{}", t.switches[vm[v]].name, t.switches[vm[view.nxt[v]]].name);
                out.insert(a, b);
            }
        }
        for (k, (_, l)) in t.marked.iter().enumerate() {
            out.insert(t.edges[*l].label.clone(), t.edges[t.marked[mp[k]].1].label.clone());
        }
        Ok(out)
    }

    /// Drawn visits of every real-edge image under its vertex map.
    pub fn draw<'a>(&'a self, view: &'a PolygonView, vm: Vec<usize>) -> (Corridors<'a>, Vec<(usize, Result<Vec<Visit>, BuildError>)>) {
        let c = Corridors::new(&self.track, view, vm);
        let mut out = Vec::new();
        for e in self.track.real_edges() {
            if let Some(p) = self.image(e) {
                let end = if view.is_bridge(e) { Some((e, 1)) } else { None };
                out.push((e, c.build((e, 0), &p.letters, end)));
            }
        }
        (c, out)
    }

    /// `self ∘ inner`: substitute the images of `self` into those of `inner`.
    /// A doubled letter `m±` becomes the image of `m` up to its last letter,
    /// that letter doubled with the same sign, and the way back.
    pub fn compose(&self, inner: &TrackMap) -> Result<TrackMap, MapError> {
        if !Arc::ptr_eq(&self.track, &inner.track) && self.track != inner.track {
            return Err(MapError::Parse { line: 0, message: "maps live on different tracks".into() });
        }
        let missing = |e: usize| LegalityViolation::MissingImage(self.track.edges[e].label.clone());
        let mut images = vec![None; self.images.len()];
        for (e, p) in inner.images.iter().enumerate() {
            let Some(p) = p else { continue };
            let mut out = Vec::new();
            for l in &p.letters {
                let img = self.image(l.edge).ok_or_else(|| MapError::Illegal(vec![missing(l.edge)]))?;
                match l.dec {
                    Dec::Forward | Dec::Terminal => out.extend_from_slice(&img.letters),
                    Dec::Backward => out.extend(img.reversed().letters),
                    Dec::Plus | Dec::Minus => {
                        let (last, pre) = img.letters.split_last().ok_or_else(|| MapError::Illegal(vec![missing(l.edge)]))?;
                        out.extend_from_slice(pre);
                        out.push(crate::path::Letter::new(last.edge, l.dec));
                        out.extend(DecoratedPath::new(pre.to_vec()).reversed().letters);
                    }
                }
            }
            images[e] = Some(DecoratedPath::new(out));
        }
        Ok(TrackMap { track: self.track.clone(), images })
    }

    pub fn display(&self) -> TrackMapDisplay<'_> {
        TrackMapDisplay(self)
    }
}

pub struct TrackMapDisplay<'a>(&'a TrackMap);

impl fmt::Display for TrackMapDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.0;
        for e in m.track.real_edges() {
            if let Some(p) = m.image(e) {
                writeln!(f, "{} -> {}", m.track.edges[e].label, p.display(&m.track))?;
            }
        }
        Ok(())
    }
}

pub fn check_legal(m: &TrackMap) -> Vec<LegalityViolation> {
    let t = &m.track;
    let view = match polygon_view(t) {
        Ok(v) => v,
        Err(e) => return vec![LegalityViolation::VertexMap(e.to_string())],
    };
    let mut out = Vec::new();
    for e in t.real_edges() {
        let label = t.edges[e].label.clone();
        let Some(p) = m.image(e) else {
            out.push(LegalityViolation::MissingImage(label));
            continue;
        };
        if p.is_empty() {
            out.push(LegalityViolation::EmptyImage(label));
            continue;
        }
        let bridge = view.is_bridge(e);
        for (k, l) in p.letters.iter().enumerate() {
            let lb = view.is_bridge(l.edge);
            let ok = match l.dec {
                Dec::Forward | Dec::Backward => lb,
                Dec::Plus | Dec::Minus => !lb,
                Dec::Terminal => !lb && !bridge && k + 1 == p.len(),
            };
            if !ok {
                out.push(LegalityViolation::Decoration {
                    edge: label.clone(),
                    detail: format!("letter {} is misdecorated", k + 1),
                });
            }
            if k > 0 && lb && p.letters[k - 1].edge == l.edge {
                out.push(LegalityViolation::RepeatedBridge { edge: label.clone() });
            }
        }
        if !bridge && p.letters.last().map(|l| l.dec) != Some(Dec::Terminal) {
            out.push(LegalityViolation::Decoration { edge: label.clone(), detail: "does not end at a marked point".into() });
        }
    }
    if !out.is_empty() {
        return out;
    }
    let vm = match m.vertex_map(&view) {
        Ok(vm) => vm,
        Err(e) => return vec![e],
    };
    // orientation-preserving rotation of polygons
    for (k, poly) in view.polys.iter().enumerate() {
        let img = view.poly_of[vm[poly[0]]].unwrap();
        for &v in poly {
            if view.poly_of[vm[v]] != Some(img) {
                out.push(LegalityViolation::NotRotation(format!("polygon {k} is split")));
                break;
            }
            if vm[view.nxt[v]] != view.nxt[vm[v]] {
                out.push(LegalityViolation::NotRotation(format!("polygon {k} is not rotated")));
                break;
            }
        }
    }
    let mut hit = vec![false; view.polys.len()];
    for poly in &view.polys {
        hit[view.poly_of[vm[poly[0]]].unwrap()] = true;
    }
    if hit.iter().any(|h| !h) {
        out.push(LegalityViolation::NotRotation("polygons not permuted".into()));
    }
    match m.marked_perm() {
        Ok(mp) => {
            let mut seen = vec![false; mp.len()];
            for &x in &mp {
                if seen[x] {
                    out.push(LegalityViolation::MarkedPoints("two marked points share an image".into()));
                    break;
                }
                seen[x] = true;
            }
        }
        Err(e) => out.push(e),
    }
    if !out.is_empty() {
        return out;
    }
    let (c, drawn) = m.draw(&view, vm);
    let mut paths = Vec::new();
    for (e, r) in drawn {
        match r {
            Ok(v) => paths.push((e, v)),
            Err(error) => out.push(LegalityViolation::Draw { edge: t.edges[e].label.clone(), error }),
        }
    }
    if !out.is_empty() {
        return out;
    }
    for i in 0..paths.len() {
        for j in i..paths.len() {
            if c.crosses(&paths[i].1, &paths[j].1, i == j) {
                out.push(LegalityViolation::Crossing {
                    a: t.edges[paths[i].0].label.clone(),
                    b: t.edges[paths[j].0].label.clone(),
                });
            }
        }
    }
    out
}

/// Rows and columns follow the track's real-edge order; entry `(i, j)` counts
/// raw passes of `f(e_i)` over `e_j`.
pub fn transition_matrix(m: &TrackMap) -> Result<IntMatrix, MapError> {
    let v = check_legal(m);
    if !v.is_empty() {
        return Err(MapError::Illegal(v));
    }
    Ok(count_matrix(m))
}

/// Pass counts without any legality check.
pub fn count_matrix(m: &TrackMap) -> IntMatrix {
    let real = m.track.real_edges();
    let idx: BTreeMap<usize, usize> = real.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut out = IntMatrix::zeros(real.len());
    for (i, &e) in real.iter().enumerate() {
        if let Some(p) = m.image(e) {
            for l in &p.letters {
                if let Some(&j) = idx.get(&l.edge) {
                    out.set(i, j, out.get(i, j) + l.dec.raw_len() as i128);
                }
            }
        }
    }
    out
}

pub fn is_perron_frobenius(m: &IntMatrix) -> bool {
    m.is_nonnegative() && m.is_primitive()
}

#[derive(Debug, Clone, PartialEq)]
pub enum DilatationError {
    NotPerronFrobenius,
    Degenerate,
    Spectral(SpectralError),
}

impl fmt::Display for DilatationError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DilatationError::NotPerronFrobenius => f.write_str("matrix is not Perron-Frobenius"),
            DilatationError::Degenerate => f.write_str("spectral radius is 1, no stretching"),
            DilatationError::Spectral(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for DilatationError {}

pub const DILATATION_WIDTH: f64 = 1e-9;

/// Certified enclosure of the Perron–Frobenius eigenvalue.
pub fn dilatation(m: &IntMatrix) -> Result<Enclosure, DilatationError> {
    if !is_perron_frobenius(m) {
        return Err(DilatationError::NotPerronFrobenius);
    }
    // a primitive integer matrix with spectral radius 1 is a 1×1 [1]
    if m.dim() == 1 && m.get(0, 0) == 1 {
        return Err(DilatationError::Degenerate);
    }
    spectral_radius(m, DILATATION_WIDTH).map_err(DilatationError::Spectral)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WeightError {
    Illegal(Vec<LegalityViolation>),
    Degenerate,
}

impl fmt::Display for WeightError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightError::Illegal(v) => write!(f, "illegal map ({} violations)", v.len()),
            WeightError::Degenerate => f.write_str("switch conditions have no nonzero integral solution"),
        }
    }
}

impl core::error::Error for WeightError {}

/// Column-style Hermite reduction: returns `(reduced, transform)` with
/// `a · transform = reduced`, `reduced` in column echelon form.
fn column_echelon(a: &[Vec<i128>], cols: usize) -> (Vec<Vec<i128>>, Vec<Vec<i128>>) {
    let rows = a.len();
    let mut r: Vec<Vec<i128>> = a.to_vec();
    let mut u: Vec<Vec<i128>> = (0..cols).map(|i| (0..cols).map(|j| (i == j) as i128).collect()).collect();
    let col_op = |m: &mut Vec<Vec<i128>>, dst: usize, src: usize, k: i128| {
        for row in m.iter_mut() {
            row[dst] -= k * row[src];
        }
    };
    let swap = |m: &mut Vec<Vec<i128>>, x: usize, y: usize| {
        for row in m.iter_mut() {
            row.swap(x, y);
        }
    };
    let mut pc = 0;
    for i in 0..rows {
        if pc >= cols {
            break;
        }
        loop {
            // smallest nonzero entry in row i among columns pc..
            let piv = (pc..cols).filter(|&j| r[i][j] != 0).min_by_key(|&j| r[i][j].abs());
            let Some(p) = piv else { break };
            swap(&mut r, pc, p);
            swap(&mut u, pc, p);
            let mut done = true;
            for j in pc + 1..cols {
                if r[i][j] != 0 {
                    let k = r[i][j] / r[i][pc];
                    col_op(&mut r, j, pc, k);
                    col_op(&mut u, j, pc, k);
                    if r[i][j] != 0 {
                        done = false;
                    }
                }
            }
            if done {
                pc += 1;
                break;
            }
        }
    }
    (r, u)
}

/// Integral basis (as columns) of `{x : a x = 0}`.
fn integer_kernel(a: &[Vec<i128>], cols: usize) -> Vec<Vec<i128>> {
    let (r, u) = column_echelon(a, cols);
    (0..cols)
        .filter(|&j| r.iter().all(|row| row[j] == 0))
        .map(|j| u.iter().map(|row| row[j]).collect())
        .collect()
}

/// Basis of the lattice spanned by `gens` (vectors of length `dim`).
fn lattice_basis(gens: &[Vec<i128>], dim: usize) -> Vec<Vec<i128>> {
    let a: Vec<Vec<i128>> = (0..dim).map(|i| gens.iter().map(|g| g[i]).collect()).collect();
    let (r, _) = column_echelon(&a, gens.len());
    (0..gens.len())
        .filter(|&j| r.iter().any(|row| row[j] != 0))
        .map(|j| r.iter().map(|row| row[j]).collect())
        .collect()
}

/// Coordinates of `y` in an echelon basis, if integral.
fn solve_echelon(basis: &[Vec<i128>], y: &[i128]) -> Option<Vec<i128>> {
    let mut rem = y.to_vec();
    let mut c = Vec::with_capacity(basis.len());
    for b in basis {
        let p = b.iter().position(|&x| x != 0)?;
        if rem[p] % b[p] != 0 {
            return None;
        }
        let k = rem[p] / b[p];
        for (r, &bi) in rem.iter_mut().zip(b) {
            *r -= k * bi;
        }
        c.push(k);
    }
    if rem.iter().all(|&x| x == 0) { Some(c) } else { None }
}

/// Whether the map acts invertibly on the integral solutions of the switch
/// conditions, projected to real edges.
pub fn weight_space_unimodular(m: &TrackMap) -> Result<bool, WeightError> {
    let v = check_legal(m);
    if !v.is_empty() {
        return Err(WeightError::Illegal(v));
    }
    unimodular_on(&m.track, &count_matrix(m))
}

/// Unimodularity of `mᵀ` on the real-edge weight lattice of `t`.
pub fn unimodular_on(t: &Track, m: &IntMatrix) -> Result<bool, WeightError> {
    let ne = t.edges.len();
    let mut a = Vec::new();
    for sw in &t.switches {
        let mut row = vec![0i128; ne];
        for (k, &(e, _)) in sw.germs.iter().enumerate() {
            row[e] += if sw.sides[k] == 0 { 1 } else { -1 };
        }
        a.push(row);
    }
    let ker = integer_kernel(&a, ne);
    let real = t.real_edges();
    let proj: Vec<Vec<i128>> = ker.iter().map(|k| real.iter().map(|&e| k[e]).collect()).collect();
    let basis = lattice_basis(&proj, real.len());
    if basis.is_empty() {
        return Err(WeightError::Degenerate);
    }
    let mt = m.transpose();
    let r = basis.len();
    let mut c = IntMatrix::zeros(r);
    for (j, b) in basis.iter().enumerate() {
        let y: Vec<i128> = (0..real.len()).map(|i| (0..real.len()).map(|k| mt.get(i, k) * b[k]).sum()).collect();
        let Some(coords) = solve_echelon(&basis, &y) else { return Ok(false) };
        for (i, x) in coords.into_iter().enumerate() {
            c.set(i, j, x);
        }
    }
    Ok(c.det().abs() == 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn kernel_of_simple_row() {
        let k = integer_kernel(&[vec![2, 4, -2]], 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert_eq!(2 * v[0] + 4 * v[1] - 2 * v[2], 0);
        }
    }

    use crate::track::camel_r;

    pub(crate) const BETA: [&str; 3] = [
        "r -> b o\nb -> d p o\np -> y o\ng -> p+ ~d b+ r o\ny -> g o\nd -> r- b- d p- g-\n",
        "r -> b o\nb -> d p- g o\np -> y o\ng -> p o\ny -> g+ p+ ~d b+ r o\nd -> r- b- d p- g-\n",
        "r -> b- d p- g o\nb -> d p o\np -> y o\ng -> p+ ~d b o\ny -> g+ p+ ~d b+ r o\nd -> r- b- d p- g-\n",
    ];

    #[test]
    fn camel_candidates() {
        let t = Arc::new(camel_r());
        for (k, s) in BETA.iter().enumerate() {
            let m = TrackMap::parse(t.clone(), s).unwrap();
            assert_eq!(check_legal(&m), vec![], "beta{}", k + 1);
            let a = transition_matrix(&m).unwrap();
            let lam = dilatation(&a).unwrap().mid();
            let want = if k == 2 { 4.06166 } else { 3.18003 };
            assert!((lam - want).abs() < 1e-4, "beta{} {lam}", k + 1);
            assert_eq!(weight_space_unimodular(&m), Ok(true));
            assert_eq!(TrackMap::parse(t.clone(), &m.display().to_string()).unwrap(), m);
        }
    }

    #[test]
    fn composition_multiplies_matrices() {
        let t = Arc::new(camel_r());
        let maps: Vec<TrackMap> = BETA.iter().map(|s| TrackMap::parse(t.clone(), s).unwrap()).collect();
        for f in &maps {
            for g in &maps {
                let fg = f.compose(g).unwrap();
                assert_eq!(count_matrix(&fg), count_matrix(g).mul(&count_matrix(f)));
            }
            let ff = f.compose(f).unwrap();
            assert_eq!(check_legal(&ff), vec![]);
            let l1 = dilatation(&transition_matrix(f).unwrap()).unwrap().mid();
            let l2 = dilatation(&transition_matrix(&ff).unwrap()).unwrap().mid();
            assert!((l1 * l1 - l2).abs() < 1e-6);
        }
    }

    #[test]
    fn crossing_detected() {
        let t = Arc::new(camel_r());
        // swap the turning direction of one loop
        let bad = BETA[0].replace("g -> p+ ~d b+ r o", "g -> p- ~d b+ r o");
        let m = TrackMap::parse(t, &bad).unwrap();
        assert!(!check_legal(&m).is_empty());
    }

    #[test]
    fn degenerate_one_by_one() {
        let one = IntMatrix::from_rows(&[vec![1]]);
        assert!(is_perron_frobenius(&one));
        assert_eq!(dilatation(&one), Err(DilatationError::Degenerate));
        assert!(!is_perron_frobenius(&IntMatrix::identity(2)));
    }
}
