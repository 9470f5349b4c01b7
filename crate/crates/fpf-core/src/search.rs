//! Exhaustive search for fixed-point-free compatible maps on a standard track.
//!
//! For a fixed action on the polygons, every real-edge image is grown letter
//! by letter as a strand starting at the image of its germ. A bridge grows
//! from both ends at once and closes when the two halves can be joined.
//! A branch dies as soon as some strand has no admissible next letter; a
//! state with every strand closed is a completion, and completions that pass
//! every verdict are the survivors.
//!
//! Rules:
//! - P1: a monogon edge never appears in its own image.
//! - P2: polygon actions that fix a vertex carrying only one monogon edge.
//! - P3: images may not cross.
//! - P4: an image that keeps circling the track the same way long enough to
//!   pass some edge `spiral_bound` times is cut.
//! - P5: two images cannot end at the same marked point.
//! - P6: the side-swap parities of bridge passes in a bridge image.

use crate::corridor::{Corridors, Visit};
use crate::lift::{fpf_verdict, trace_lemma_check, LiftReport};
use crate::path::{Dec, DecoratedPath, Letter};
use crate::track::{polygon_view, NamedTrack, PolygonView, Track};
use crate::trackmap::{check_legal, dilatation, transition_matrix, is_perron_frobenius, unimodular_on, TrackMap};
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Rule {
    P1,
    P2,
    P3,
    P4,
    P5,
    P6,
}

impl Rule {
    pub const ALL: [Rule; 6] = [Rule::P1, Rule::P2, Rule::P3, Rule::P4, Rule::P5, Rule::P6];

    pub fn describe(self) -> &'static str {
        match self {
            Rule::P1 => "self-passing monogon",
            Rule::P2 => "polygon action",
            Rule::P3 => "crossing",
            Rule::P4 => "spiral",
            Rule::P5 => "marked point reused",
            Rule::P6 => "bridge parity",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub track: NamedTrack,
    pub max_image_length: usize,
    pub spiral_bound: usize,
    pub require_pf: bool,
    pub require_unimodular: bool,
    /// Keep only rotation cases whose label equals or starts with one of these.
    pub rotation_cases: Option<Vec<String>>,
    pub disabled: BTreeSet<Rule>,
    /// Node budget per rotation case; exceeding it ends the case unexhausted.
    pub max_nodes: Option<u64>,
}

pub const DEFAULT_MAX_IMAGE_LENGTH: usize = 16;
pub const DEFAULT_SPIRAL_BOUND: usize = 2;

impl SearchConfig {
    pub fn new(track: NamedTrack) -> Self {
        SearchConfig {
            track,
            max_image_length: DEFAULT_MAX_IMAGE_LENGTH,
            spiral_bound: DEFAULT_SPIRAL_BOUND,
            require_pf: true,
            require_unimodular: true,
            rotation_cases: None,
            disabled: BTreeSet::new(),
            max_nodes: None,
        }
    }

    pub fn validate(&self) -> Result<(), SearchError> {
        if self.max_image_length == 0 || self.spiral_bound == 0 {
            return Err(SearchError::Config("bounds must be positive".into()));
        }
        Ok(())
    }

    fn on(&self, r: Rule) -> bool {
        !self.disabled.contains(&r)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchError {
    Config(String),
    Track(String),
}

impl fmt::Display for SearchError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchError::Config(s) => write!(f, "bad search config: {s}"),
            SearchError::Track(s) => write!(f, "unsupported track: {s}"),
        }
    }
}

impl core::error::Error for SearchError {}

/// An action on polygon vertices together with a readable label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rotation {
    pub label: String,
    pub vm: Vec<usize>,
    pub polygon_perm: Vec<usize>,
}

impl Rotation {
    pub fn polygons_fixed(&self) -> bool {
        self.polygon_perm.iter().enumerate().all(|(k, &p)| k == p)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out.sort();
    out
}

fn edges_at(t: &Track, view: &PolygonView, v: usize, skip: Option<usize>) -> String {
    view.germs[v].iter().filter(|g| Some(g.0) != skip).map(|g| t.edges[g.0].label.as_str()).collect()
}

/// Every orientation-preserving action on the polygons, with the actions
/// that fix a vertex whose only real edge is a monogon removed. The second
/// list holds the removed ones.
pub fn enumerate_rotations_split(t: &Track) -> Result<(Vec<Rotation>, Vec<Rotation>), SearchError> {
    let view = polygon_view(t).map_err(|e| SearchError::Track(e.to_string()))?;
    let np = view.polys.len();
    let mut keep = Vec::new();
    let mut drop = Vec::new();
    for perm in permutations(np) {
        if (0..np).any(|k| view.polys[perm[k]].len() != view.polys[k].len()) {
            continue;
        }
        let mut offs: Vec<Vec<usize>> = vec![Vec::new()];
        for k in 0..np {
            let n = view.polys[k].len();
            offs = offs.into_iter().flat_map(|o| (0..n).map(move |r| {
                let mut o = o.clone();
                o.push(r);
                o
            })).collect();
        }
        for o in offs {
            let mut vm: Vec<usize> = (0..t.switches.len()).collect();
            for k in 0..np {
                let (src, dst) = (&view.polys[k], &view.polys[perm[k]]);
                // align at the least vertex so offsets are canonical
                for (i, &v) in src.iter().enumerate() {
                    vm[v] = dst[(i + o[k]) % dst.len()];
                }
            }
            let excluded = (0..t.switches.len()).any(|v| {
                view.poly_of[v].is_some()
                    && vm[v] == v
                    && view.germs[v].len() == 1
                    && view.monogon_loop[view.germs[v][0].0].is_some()
            });
            let rot = Rotation { label: rotation_label(t, &view, &vm, &perm), vm, polygon_perm: perm.clone() };
            if excluded { drop.push(rot) } else { keep.push(rot) }
        }
    }
    keep.sort_by(|a, b| a.label.cmp(&b.label).then(a.vm.cmp(&b.vm)));
    drop.sort_by(|a, b| a.label.cmp(&b.label).then(a.vm.cmp(&b.vm)));
    Ok((keep, drop))
}

pub fn enumerate_rotations(t: &Track) -> Result<Vec<Rotation>, SearchError> {
    Ok(enumerate_rotations_split(t)?.0)
}

/// `A-xy` / `BCD-x` for a bridged pair of polygons, named by where the bridge
/// images start; otherwise `x>…` by where the last real edge's image starts.
fn rotation_label(t: &Track, view: &PolygonView, vm: &[usize], perm: &[usize]) -> String {
    let fixed = perm.iter().enumerate().all(|(k, &p)| k == p);
    if let Some(&d) = view.bridges.first() {
        let [a, b] = t.edges[d].ends;
        if fixed {
            return format!("A-{}{}", edges_at(t, view, vm[a], Some(d)), edges_at(t, view, vm[b], Some(d)));
        }
        let s = edges_at(t, view, vm[b], Some(d));
        if s.is_empty() {
            return format!("BCD-{}", edges_at(t, view, vm[a], Some(d)));
        }
        return format!("BCD-{s}:{}", edges_at(t, view, vm[a], Some(d)));
    }
    let e = *t.real_edges().last().unwrap();
    format!("{}>{}", t.edges[e].label, edges_at(t, view, vm[t.edges[e].ends[0]], None))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Survivor {
    pub map: TrackMap,
    pub case: String,
    pub report: LiftReport,
    pub dilatation: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseOutcome {
    pub label: String,
    pub completions: Vec<TrackMap>,
    pub survivors: Vec<Survivor>,
    pub pruned: BTreeMap<Rule, u64>,
    pub bound_cuts: u64,
    /// A few of the partial images cut by the length bound.
    pub cut_samples: Vec<String>,
    pub nodes: u64,
    pub exhausted: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchOutcome {
    pub track: NamedTrack,
    pub max_image_length: usize,
    pub cases: Vec<CaseOutcome>,
    pub survivors: Vec<Survivor>,
    pub pruned_counts: BTreeMap<Rule, u64>,
    pub bound_cuts: u64,
    pub exhausted: bool,
}

impl SearchOutcome {
    /// Merge per-case outcomes; survivors are sorted by their printed form.
    pub fn assemble(cfg: &SearchConfig, excluded: u64, mut cases: Vec<CaseOutcome>) -> SearchOutcome {
        cases.sort_by(|a, b| a.label.cmp(&b.label));
        let mut pruned = BTreeMap::new();
        for r in Rule::ALL {
            pruned.insert(r, 0);
        }
        *pruned.get_mut(&Rule::P2).unwrap() += excluded;
        let mut survivors = Vec::new();
        let mut bound_cuts = 0;
        for c in &cases {
            for (r, n) in &c.pruned {
                *pruned.entry(*r).or_insert(0) += n;
            }
            bound_cuts += c.bound_cuts;
            survivors.extend(c.survivors.iter().cloned());
        }
        survivors.sort_by_key(|s| s.map.display().to_string());
        let exhausted = cases.iter().all(|c| c.exhausted);
        SearchOutcome {
            track: cfg.track,
            max_image_length: cfg.max_image_length,
            cases,
            survivors,
            pruned_counts: pruned,
            bound_cuts,
            exhausted,
        }
    }
}

/// Rotation cases the configuration asks for, and the number removed by P2.
pub fn planned_cases(cfg: &SearchConfig) -> Result<(Arc<Track>, Vec<Rotation>, u64), SearchError> {
    cfg.validate()?;
    let t = Arc::new(cfg.track.track());
    let (mut keep, drop) = enumerate_rotations_split(&t)?;
    let mut excluded = drop.len() as u64;
    if !cfg.on(Rule::P2) {
        keep.extend(drop);
        excluded = 0;
    }
    if let Some(sel) = &cfg.rotation_cases {
        keep.retain(|r| sel.iter().any(|s| r.label == *s || r.label.starts_with(s.as_str())));
    }
    Ok((t, keep, excluded))
}

pub fn run_search(cfg: &SearchConfig) -> Result<SearchOutcome, SearchError> {
    let (t, rots, excluded) = planned_cases(cfg)?;
    let cases = rots.iter().map(|r| run_case(cfg, &t, r)).collect::<Result<Vec<_>, _>>()?;
    Ok(SearchOutcome::assemble(cfg, excluded, cases))
}

#[derive(Clone)]
struct Strand {
    letters: Vec<Letter>,
    closed: bool,
    visits: Vec<Visit>,
}

#[derive(Clone)]
struct State {
    mono: Vec<Strand>,
    /// Bridge image grown from end 0 and from end 1, then joined.
    da: Strand,
    db: Strand,
    dfull: Option<Strand>,
}

struct Ctx<'a> {
    cfg: &'a SearchConfig,
    t: &'a Track,
    view: &'a PolygonView,
    c: Corridors<'a>,
    monos: Vec<usize>,
    bridge: Option<usize>,
    start_fixed: bool,
    end_fixed: bool,
    out: CaseOutcome,
    tarc: Arc<Track>,
    rot: &'a Rotation,
}

fn raw(l: &[Letter]) -> usize {
    l.iter().map(|x| x.dec.raw_len()).sum()
}

/// Side-swap parities at which the bridge is passed.
fn bridge_parities(l: &[Letter], d: usize) -> (BTreeSet<usize>, usize) {
    let mut par = 0;
    let mut ps = BTreeSet::new();
    for x in l {
        if x.edge == d {
            ps.insert(par);
        } else if x.dec.swaps() {
            par ^= 1;
        }
    }
    (ps, par)
}

impl<'a> Ctx<'a> {
    fn dpar_ok(&self, l: &[Letter], fixed: bool, final_both: bool) -> bool {
        let d = self.bridge.unwrap();
        let (ps, par) = bridge_parities(l, d);
        if fixed {
            if ps.iter().any(|&p| p != 0) {
                return false;
            }
        } else if ps.len() > 1 {
            return false;
        }
        !(final_both && par == 1)
    }

    fn opts_from(&self, w: usize, start: bool) -> Vec<Letter> {
        let verts: Vec<usize> = if start {
            vec![w]
        } else {
            let (a, b) = (self.view.nxt[w], self.view.prv[w]);
            if a == b { vec![a] } else { vec![a, b] }
        };
        let mut res = Vec::new();
        for u in verts {
            for &(e, end) in &self.view.germs[u] {
                if self.view.is_bridge(e) {
                    res.push(Letter::new(e, if end == 0 { Dec::Forward } else { Dec::Backward }));
                } else {
                    res.extend([Dec::Plus, Dec::Minus, Dec::Terminal].map(|d| Letter::new(e, d)));
                }
            }
        }
        res
    }

    fn tip(&self, germ: (usize, u8), l: &[Letter]) -> (usize, bool) {
        match l.last() {
            None => (self.c.vm[self.c.vertex(germ)], true),
            Some(&x) => (self.c.letter_end(x), false),
        }
    }

    /// Trailing run of letters that keep circling the same way.
    fn spirals(&self, l: &[Letter]) -> bool {
        let bound = self.cfg.spiral_bound;
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        let mut sig: Option<(bool, Dec)> = None;
        for k in (0..l.len()).rev() {
            let x = l[k];
            if x.dec == Dec::Terminal {
                break;
            }
            if k > 0 && !self.view.is_bridge(x.edge) {
                let w = self.c.letter_end(l[k - 1]);
                let u = self.c.letter_start(x);
                let s = (self.view.nxt[w] == u, x.dec);
                match sig {
                    None => sig = Some(s),
                    Some(p) if p != s => break,
                    _ => {}
                }
            }
            let n = counts.entry(x.edge).or_insert(0);
            *n += 1;
            if *n >= bound {
                return true;
            }
        }
        false
    }

    fn strands<'s>(&self, st: &'s State) -> Vec<&'s Strand> {
        let mut v: Vec<&Strand> = st.mono.iter().collect();
        if self.bridge.is_some() {
            match &st.dfull {
                Some(f) => v.push(f),
                None => {
                    v.push(&st.da);
                    v.push(&st.db);
                }
            }
        }
        v
    }

    /// Whether strand `k` of [`Self::strands`] crosses nothing.
    fn planar(&self, st: &State, k: usize) -> bool {
        let all = self.strands(st);
        let changed = &all[k].visits;
        all.iter().enumerate().all(|(j, s)| !self.c.crosses(changed, &s.visits, j == k))
    }

    fn bound_cut(&mut self, l: &[Letter], e: usize) {
        self.out.bound_cuts += 1;
        if self.out.cut_samples.len() < 8 {
            let p = DecoratedPath::new(l.to_vec());
            self.out.cut_samples.push(format!("{} -> {}", self.t.edges[e].label, p.display(self.t)));
        }
    }

    fn prune(&mut self, r: Rule) {
        *self.out.pruned.entry(r).or_insert(0) += 1;
    }

    /// Admissible successors of each open strand (index `monos.len()` is the bridge).
    fn options(&mut self, st: &State) -> Vec<(usize, Vec<State>)> {
        let cfg = self.cfg;
        let mut res = Vec::new();
        let terms: BTreeSet<usize> =
            st.mono.iter().filter(|s| s.closed).map(|s| s.letters.last().unwrap().edge).collect();
        for (i, &e) in self.monos.clone().iter().enumerate() {
            if st.mono[i].closed {
                continue;
            }
            let (w, start) = self.tip((e, 0), &st.mono[i].letters);
            let mut lst = Vec::new();
            for x in self.opts_from(w, start) {
                if x.edge == e && cfg.on(Rule::P1) {
                    self.prune(Rule::P1);
                    continue;
                }
                if x.dec == Dec::Terminal && terms.contains(&x.edge) && cfg.on(Rule::P5) {
                    self.prune(Rule::P5);
                    continue;
                }
                let mut nl = st.mono[i].letters.clone();
                nl.push(x);
                let Ok(vis) = self.c.build((e, 0), &nl, None) else { continue };
                let mut ns = st.clone();
                ns.mono[i] = Strand { letters: nl, closed: x.dec == Dec::Terminal, visits: vis };
                if cfg.on(Rule::P3) && !self.planar(&ns, i) {
                    self.prune(Rule::P3);
                    continue;
                }
                if cfg.on(Rule::P4) && self.spirals(&ns.mono[i].letters) {
                    self.prune(Rule::P4);
                    continue;
                }
                if raw(&ns.mono[i].letters) > cfg.max_image_length {
                    self.bound_cut(&ns.mono[i].letters, e);
                    continue;
                }
                lst.push(ns);
            }
            res.push((i, lst));
        }
        if let (Some(d), None) = (self.bridge, &st.dfull) {
            let mut lst = Vec::new();
            let side_a = raw(&st.da.letters) <= raw(&st.db.letters);
            let (germ, cur, fixed) =
                if side_a { ((d, 0), &st.da, self.start_fixed) } else { ((d, 1), &st.db, self.end_fixed) };
            let (w, start) = self.tip(germ, &cur.letters);
            for x in self.opts_from(w, start) {
                if x.dec == Dec::Terminal {
                    continue;
                }
                let mut nl = cur.letters.clone();
                nl.push(x);
                if cfg.on(Rule::P6) && !self.dpar_ok(&nl, fixed, false) {
                    self.prune(Rule::P6);
                    continue;
                }
                let Ok(vis) = self.c.build(germ, &nl, None) else { continue };
                let mut ns = st.clone();
                let s = Strand { letters: nl, closed: false, visits: vis };
                if side_a { ns.da = s } else { ns.db = s }
                let k = self.monos.len() + if side_a { 0 } else { 1 };
                if cfg.on(Rule::P3) && !self.planar(&ns, k) {
                    self.prune(Rule::P3);
                    continue;
                }
                let grown = if side_a { &ns.da.letters } else { &ns.db.letters };
                if cfg.on(Rule::P4) && self.spirals(grown) {
                    self.prune(Rule::P4);
                    continue;
                }
                if raw(&ns.da.letters) + raw(&ns.db.letters) > cfg.max_image_length {
                    let mut l = ns.da.letters.clone();
                    l.extend(DecoratedPath::new(ns.db.letters.clone()).reversed().letters);
                    self.bound_cut(&l, d);
                    continue;
                }
                lst.push(ns);
            }
            let mut full = st.da.letters.clone();
            full.extend(DecoratedPath::new(st.db.letters.clone()).reversed().letters);
            if !full.is_empty() {
                if let Ok(vis) = self.c.build((d, 0), &full, Some((d, 1))) {
                    if !cfg.on(Rule::P6) || self.dpar_ok(&full, self.start_fixed, self.start_fixed && self.end_fixed) {
                        let mut ns = st.clone();
                        ns.dfull = Some(Strand { letters: full, closed: true, visits: vis });
                        let ok = !cfg.on(Rule::P3) || self.planar(&ns, self.monos.len());
                        if ok {
                            lst.push(ns);
                        } else {
                            self.prune(Rule::P3);
                        }
                    } else {
                        self.prune(Rule::P6);
                    }
                }
            }
            res.push((self.monos.len(), lst));
        }
        res
    }

    fn slen(&self, st: &State, k: usize) -> usize {
        if k == self.monos.len() {
            raw(&st.da.letters) + raw(&st.db.letters)
        } else {
            raw(&st.mono[k].letters)
        }
    }

    /// Returns false once the node budget is spent.
    fn run(&mut self, st: State) -> bool {
        self.out.nodes += 1;
        if let Some(max) = self.cfg.max_nodes {
            if self.out.nodes > max {
                return false;
            }
        }
        let res = self.options(&st);
        if res.is_empty() {
            self.complete(&st);
            return true;
        }
        if res.iter().any(|(_, v)| v.is_empty()) {
            return true;
        }
        let (_, branch) = res.into_iter().min_by_key(|(k, v)| (self.slen(&st, *k), v.len(), *k)).unwrap();
        for ns in branch {
            if !self.run(ns) {
                return false;
            }
        }
        true
    }

    fn complete(&mut self, st: &State) {
        let mut images = vec![None; self.t.edges.len()];
        for (i, &e) in self.monos.iter().enumerate() {
            images[e] = Some(DecoratedPath::new(st.mono[i].letters.clone()));
        }
        if let (Some(d), Some(f)) = (self.bridge, &st.dfull) {
            images[d] = Some(DecoratedPath::new(f.letters.clone()));
        }
        let m = TrackMap::new(self.tarc.clone(), images);
        if let Some(s) = verdicts(self.cfg, &m, self.rot) {
            self.out.survivors.push(s);
        }
        self.out.completions.push(m);
    }
}

/// Every verdict a survivor must pass; `None` if one fails.
pub fn verdicts(cfg: &SearchConfig, m: &TrackMap, rot: &Rotation) -> Option<Survivor> {
    if !check_legal(m).is_empty() {
        return None;
    }
    if !trace_lemma_check(m).ok()?.is_empty() {
        return None;
    }
    // the fixed-polygon lift must exchange sheets, so toggle there first
    let order = if rot.polygons_fixed() { [true, false] } else { [false, true] };
    let report = order.into_iter().filter_map(|tg| fpf_verdict(m, tg).ok()).find(|r| r.fpf)?;
    let a = transition_matrix(m).ok()?;
    if cfg.require_pf && !is_perron_frobenius(&a) {
        return None;
    }
    let lam = dilatation(&a).map(|e| e.mid()).unwrap_or(f64::NAN);
    if cfg.require_pf && !(lam > 1.0) {
        return None;
    }
    if cfg.require_unimodular && unimodular_on(&m.track, &a) != Ok(true) {
        return None;
    }
    Some(Survivor { map: m.clone(), case: rot.label.clone(), report, dilatation: lam })
}

pub fn run_case(cfg: &SearchConfig, t: &Arc<Track>, rot: &Rotation) -> Result<CaseOutcome, SearchError> {
    let view = polygon_view(t).map_err(|e| SearchError::Track(e.to_string()))?;
    if view.bridges.len() > 1 {
        return Err(SearchError::Track("at most one bridge is supported".into()));
    }
    let bridge = view.bridges.first().copied();
    let (start_fixed, end_fixed) = match bridge {
        Some(d) => {
            let [a, b] = t.edges[d].ends;
            let (pa, pb) = (view.poly_of[a].unwrap(), view.poly_of[b].unwrap());
            (rot.polygon_perm[pa] == pa, rot.polygon_perm[pb] == pb)
        }
        None => (false, false),
    };
    let monos = view.monogons.clone();
    let empty = Strand { letters: Vec::new(), closed: false, visits: Vec::new() };
    let st = State { mono: vec![empty.clone(); monos.len()], da: empty.clone(), db: empty, dfull: None };
    let out = CaseOutcome {
        label: rot.label.clone(),
        completions: Vec::new(),
        survivors: Vec::new(),
        pruned: Rule::ALL.iter().map(|&r| (r, 0)).collect(),
        bound_cuts: 0,
        cut_samples: Vec::new(),
        nodes: 0,
        exhausted: true,
    };
    let c = Corridors::new(t, &view, rot.vm.clone());
    let mut ctx = Ctx { cfg, t, view: &view, c, monos, bridge, start_fixed, end_fixed, out, tarc: t.clone(), rot };
    let finished = ctx.run(st);
    let mut out = ctx.out;
    out.exhausted = finished && out.bound_cuts == 0;
    out.survivors.sort_by_key(|s| s.map.display().to_string());
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Candidate {
    Beta(u8),
    Unknown,
}

impl fmt::Display for Candidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Candidate::Beta(i) => write!(f, "beta{i}"),
            Candidate::Unknown => f.write_str("unknown"),
        }
    }
}

/// The three candidate maps on the right-handed camel track. `f(d)` is the
/// same for all three.
pub const CANDIDATE_IMAGES: [[(&str, &str); 5]; 3] = [
    [("b", "d p o"), ("g", "p+ ~d b+ r o"), ("r", "b o"), ("y", "g o"), ("p", "y o")],
    [("b", "d p- g o"), ("g", "p o"), ("r", "b o"), ("y", "g+ p+ ~d b+ r o"), ("p", "y o")],
    [("b", "d p o"), ("g", "p+ ~d b o"), ("r", "b- d p- g o"), ("y", "g+ p+ ~d b+ r o"), ("p", "y o")],
];

/// `f(d)` up to the decoration of its last letter.
pub const CANDIDATE_BRIDGE: &str = "r- b- d p- g";

pub fn candidate_text(i: usize) -> String {
    let mut s = String::new();
    for (e, p) in CANDIDATE_IMAGES[i] {
        s.push_str(&format!("{e} -> {p}\n"));
    }
    s.push_str(&format!("d -> {CANDIDATE_BRIDGE}-\n"));
    s
}

/// Which quoted candidate a map on the camel track is.
pub fn match_candidate(m: &TrackMap) -> Candidate {
    let t = &m.track;
    let show = |label: &str| m.image_by_label(label).map(|p| p.display(t).to_string());
    for (i, imgs) in CANDIDATE_IMAGES.iter().enumerate() {
        let mono_ok = imgs.iter().all(|(e, p)| show(e).as_deref() == Some(*p));
        let d_ok = show("d").is_some_and(|s| {
            s.strip_prefix(CANDIDATE_BRIDGE).is_some_and(|rest| matches!(rest, "" | "+" | "-" | " o"))
        });
        let count_ok = t.real_edges().len() == 6;
        if mono_ok && d_ok && count_ok {
            return Candidate::Beta(i as u8 + 1);
        }
    }
    Candidate::Unknown
}

pub fn match_candidates(outcome: &SearchOutcome) -> Vec<(String, Candidate)> {
    outcome
        .survivors
        .iter()
        .map(|s| (s.map.display().to_string(), match_candidate(&s.map)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_counts() {
        let (j, jd) = enumerate_rotations_split(&NamedTrack::Jellyfish.track()).unwrap();
        assert_eq!((j.len(), jd.len()), (3, 1));
        let (c, _) = enumerate_rotations_split(&NamedTrack::CamelR.track()).unwrap();
        let a: Vec<_> = c.iter().filter(|r| r.polygons_fixed()).map(|r| r.label.as_str()).collect();
        assert_eq!(a, ["A-bg", "A-bp", "A-rg", "A-rp"]);
        assert_eq!(c.iter().filter(|r| !r.polygons_fixed()).count(), 9);
    }

    #[test]
    fn candidates_match_themselves() {
        let t = Arc::new(NamedTrack::CamelR.track());
        for i in 0..3 {
            let m = TrackMap::parse(t.clone(), &candidate_text(i)).unwrap();
            assert_eq!(match_candidate(&m), Candidate::Beta(i as u8 + 1));
        }
        let bad = candidate_text(0).replace("y -> g o", "y -> p o");
        assert_eq!(match_candidate(&TrackMap::parse(t, &bad).unwrap()), Candidate::Unknown);
    }
}
