//! Image paths drawn inside the fibred neighbourhood of a standard track.
//!
//! A path is recorded as a list of visits `(switch, in-dart, out-dart)`. At a
//! polygon vertex `v` the darts in counter-clockwise order are the real germs,
//! the step towards `next(v)`, the slots where images of germs based at the
//! preimage of `v` start (in reverse order), and the step towards `prev(v)`.
//! At a monogon switch they are the monogon edge, the right end of the loop,
//! the marked point itself, and the left end of the loop.
//!
//! Two paths cross essentially if some pair of visits at one switch
//! interleaves, or if a stretch they share is entered from one side and left
//! towards the other.

use crate::path::{Dec, Letter};
use crate::track::{GermRef, PolygonView, Track};
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dart {
    Germ(GermRef),
    Step(usize),
    Slot(GermRef),
    LoopR,
    Inner,
    LoopL,
}

pub type Visit = (usize, Dart, Dart);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuildError {
    Start { letter: usize },
    NotAdjacent { letter: usize },
    TerminalNotLast { letter: usize },
    End,
}

impl fmt::Display for BuildError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BuildError::Start { letter } => write!(f, "letter {} does not start at the image vertex", letter + 1),
            BuildError::NotAdjacent { letter } => {
                write!(f, "letter {} is not reachable by one infinitesimal edge", letter + 1)
            }
            BuildError::TerminalNotLast { letter } => write!(f, "terminal letter {} is not last", letter + 1),
            BuildError::End => f.write_str("path does not end at the image of its far end"),
        }
    }
}

/// A track together with a vertex map, ready to draw image paths.
#[derive(Debug, Clone)]
pub struct Corridors<'a> {
    pub track: &'a Track,
    pub view: &'a PolygonView,
    pub vm: Vec<usize>,
    darts: Vec<Vec<Dart>>,
}

impl<'a> Corridors<'a> {
    /// `vm[v]` is the image of polygon vertex `v`; entries for other switches are ignored.
    pub fn new(track: &'a Track, view: &'a PolygonView, vm: Vec<usize>) -> Self {
        let ns = track.switches.len();
        let mut slots: Vec<Vec<GermRef>> = vec![Vec::new(); ns];
        for v in 0..ns {
            if view.poly_of[v].is_some() {
                slots[vm[v]] = view.germs[v].clone();
            }
        }
        let mut darts = vec![Vec::new(); ns];
        for v in 0..ns {
            if view.poly_of[v].is_some() {
                let mut d: Vec<Dart> = view.germs[v].iter().map(|&g| Dart::Germ(g)).collect();
                d.push(Dart::Step(view.nxt[v]));
                d.extend(slots[v].iter().rev().map(|&g| Dart::Slot(g)));
                d.push(Dart::Step(view.prv[v]));
                darts[v] = d;
            }
        }
        for &e in &view.monogons {
            let m = track.edges[e].ends[1];
            darts[m] = vec![Dart::Germ((e, 1)), Dart::LoopR, Dart::Inner, Dart::LoopL];
        }
        Corridors { track, view, vm, darts }
    }

    pub fn vertex(&self, g: GermRef) -> usize {
        self.track.edges[g.0].ends[g.1 as usize]
    }

    fn pos(&self, v: usize, d: Dart) -> usize {
        self.darts[v].iter().position(|&x| x == d).expect("dart present at switch")
    }

    /// Start vertex of a letter.
    pub fn letter_start(&self, l: Letter) -> usize {
        let end = if l.dec == Dec::Backward { 1 } else { 0 };
        self.vertex((l.edge, end))
    }

    /// Polygon vertex reached after a letter.
    pub fn letter_end(&self, l: Letter) -> usize {
        match l.dec {
            Dec::Forward => self.vertex((l.edge, 1)),
            Dec::Backward => self.vertex((l.edge, 0)),
            _ => self.vertex((l.edge, 0)),
        }
    }

    /// Visits of the image of germ `start` spelled by `letters`; with
    /// `end_slot` the path must close up at the image slot of that germ.
    pub fn build(&self, start: GermRef, letters: &[Letter], end_slot: Option<GermRef>) -> Result<Vec<Visit>, BuildError> {
        let mut w = self.vm[self.vertex(start)];
        let mut ind = Dart::Slot(start);
        let mut vis = Vec::with_capacity(3 * letters.len() + 1);
        for (k, l) in letters.iter().enumerate() {
            let end: u8 = if l.dec == Dec::Backward { 1 } else { 0 };
            let u = self.vertex((l.edge, end));
            if k == 0 {
                if u != w {
                    return Err(BuildError::Start { letter: 0 });
                }
            } else {
                if !self.view.adjacent(w, u) {
                    return Err(BuildError::NotAdjacent { letter: k });
                }
                vis.push((w, ind, Dart::Step(u)));
                ind = Dart::Step(w);
                w = u;
            }
            vis.push((w, ind, Dart::Germ((l.edge, end))));
            match l.dec {
                Dec::Forward | Dec::Backward => {
                    w = self.vertex((l.edge, 1 - end));
                    ind = Dart::Germ((l.edge, 1 - end));
                }
                _ => {
                    let m = self.vertex((l.edge, 1));
                    let top = Dart::Germ((l.edge, 1));
                    if l.dec == Dec::Terminal {
                        vis.push((m, top, Dart::Inner));
                        if k + 1 != letters.len() {
                            return Err(BuildError::TerminalNotLast { letter: k });
                        }
                        return Ok(vis);
                    }
                    let (a, b) = if l.dec == Dec::Plus { (Dart::LoopR, Dart::LoopL) } else { (Dart::LoopL, Dart::LoopR) };
                    vis.push((m, top, a));
                    vis.push((m, b, top));
                    ind = Dart::Germ((l.edge, 0));
                }
            }
        }
        if let Some(es) = end_slot {
            if w != self.vm[self.vertex(es)] {
                return Err(BuildError::End);
            }
            vis.push((w, ind, Dart::Slot(es)));
        }
        Ok(vis)
    }

    /// Whether two drawn paths (or one path with itself when `same`) cross.
    pub fn crosses(&self, p: &[Visit], q: &[Visit], same: bool) -> bool {
        let rq: Vec<Visit> = q.iter().rev().map(|&(v, a, b)| (v, b, a)).collect();
        for (qv, qrev) in [(q, false), (&rq[..], true)] {
            for (i, &(v, a, b)) in p.iter().enumerate() {
                for (j, &(v2, a2, b2)) in qv.iter().enumerate() {
                    if v != v2 {
                        continue;
                    }
                    if same && !qrev && i == j {
                        continue;
                    }
                    let n = self.darts[v].len();
                    let disjoint = a != a2 && a != b2 && b != a2 && b != b2;
                    if disjoint {
                        if qrev || (same && j < i) {
                            continue;
                        }
                        let (pa, pb, qa, qb) = (self.pos(v, a), self.pos(v, b), self.pos(v, a2), self.pos(v, b2));
                        let between = |x: usize| {
                            let d = (x + n - pa) % n;
                            0 < d && d < (pb + n - pa) % n
                        };
                        if between(qa) != between(qb) {
                            return true;
                        }
                        continue;
                    }
                    if b != b2 || a == a2 {
                        continue;
                    }
                    // a shared stretch starts here: compare sides on entry and exit
                    let c = self.pos(v, b);
                    let ps = (self.pos(v, a) + n - c) % n;
                    let qs = (self.pos(v, a2) + n - c) % n;
                    let p_left = ps < qs;
                    let mut k = 1;
                    let exit = loop {
                        let (ii, jj) = (i + k, j + k);
                        if ii >= p.len() || jj >= qv.len() {
                            break None;
                        }
                        let (w, x, y) = p[ii];
                        let (w2, x2, y2) = qv[jj];
                        if w != w2 || x != x2 {
                            break None;
                        }
                        if y == y2 {
                            k += 1;
                            continue;
                        }
                        let m = self.darts[w].len();
                        let c2 = self.pos(w, x);
                        break Some((self.pos(w, y) + m - c2) % m > (self.pos(w, y2) + m - c2) % m);
                    };
                    if let Some(e) = exit {
                        if e != p_left {
                            return true;
                        }
                    }
                }
            }
        }
        false
    }
}
