//! The folding automaton of the stratum with two 3-pronged interior points.
//!
//! Nodes are tracks, edges carry braid words. A loop composes its labels in
//! traversal order. Only the labels are modelled: the folding maps along the
//! edges are not, so pseudo-Anosov versus reducible is decided by the curve
//! search in [`reducibility_witness`].

use crate::braid::{BraidError, BraidWord};
use crate::dynnikov::{braids_equal, dynnikov_apply, DynnikovCoords};
use crate::track::NamedTrack;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub const STRANDS: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Node {
    pub name: String,
    pub track: NamedTrack,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: BraidWord,
    pub dashed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AutomatonError {
    UnknownNode(String),
    DashedLabel { edge: usize },
    Braid(BraidError),
}

impl fmt::Display for AutomatonError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AutomatonError::UnknownNode(n) => write!(f, "unknown node {n}"),
            AutomatonError::DashedLabel { edge } => write!(f, "dashed edge {edge} carries a nontrivial word"),
            AutomatonError::Braid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for AutomatonError {}

impl From<BraidError> for AutomatonError {
    fn from(e: BraidError) -> Self {
        AutomatonError::Braid(e)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Automaton {
    pub nodes: Vec<Node>,
    pub edges: Vec<Edge>,
}

fn word(letters: &[i32]) -> BraidWord {
    BraidWord::new(STRANDS, letters.to_vec()).expect("letters of B_5")
}

/// `σ₄ᵃσ₃σ₂σ₁⁻ᵇσ₂⁻¹σ₃⁻¹`
pub fn beta_ab(a: u32, b: u32) -> BraidWord {
    let mut l = vec![4; a as usize];
    l.extend([3, 2]);
    l.extend(core::iter::repeat_n(-1, b as usize));
    l.extend([-2, -3]);
    word(&l)
}

/// `(σ₃⁻¹σ₄ᵃσ₃)(σ₂σ₁⁻ᵇσ₂⁻¹)`, conjugate to `β(a,b)` by `σ₃`.
pub fn beta_ab_split(a: u32, b: u32) -> BraidWord {
    let mut l = vec![-3];
    l.extend(core::iter::repeat_n(4, a as usize));
    l.extend([3, 2]);
    l.extend(core::iter::repeat_n(-1, b as usize));
    l.push(-2);
    word(&l)
}

/// The curve around the second and fourth marked points, drawn as the image
/// of the round curve around `{2,3}` under `σ₃`.
pub fn curve_2_4() -> DynnikovCoords {
    dynnikov_apply(&word(&[3]), &DynnikovCoords::round_curve(STRANDS, 2)).expect("small coordinates")
}

/// Product of `β(a_i, b_i)` in order.
pub fn beta_product(factors: &[(u32, u32)]) -> BraidWord {
    let mut l = Vec::new();
    for &(a, b) in factors {
        l.extend_from_slice(beta_ab(a, b).letters());
    }
    word(&l)
}

impl Automaton {
    pub fn node(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n.name == name)
    }

    pub fn add_node(&mut self, name: &str, track: NamedTrack) -> usize {
        self.nodes.push(Node { name: name.into(), track });
        self.nodes.len() - 1
    }

    pub fn add_edge(&mut self, from: &str, to: &str, label: &[i32], dashed: bool) -> Result<(), AutomatonError> {
        let f = self.node(from).ok_or_else(|| AutomatonError::UnknownNode(from.into()))?;
        let t = self.node(to).ok_or_else(|| AutomatonError::UnknownNode(to.into()))?;
        let label = BraidWord::new(STRANDS, label.to_vec())?;
        if dashed && !label.is_empty() {
            return Err(AutomatonError::DashedLabel { edge: self.edges.len() });
        }
        self.edges.push(Edge { from: f, to: t, label, dashed });
        Ok(())
    }

    /// The figure: four corner copies of the Enoki tracks around the outside
    /// loop, the two Camel tracks inside.
    pub fn figure() -> Self {
        let mut a = Automaton::default();
        a.add_node("TL", NamedTrack::EnokiR);
        a.add_node("TR", NamedTrack::EnokiL);
        a.add_node("BL", NamedTrack::EnokiR);
        a.add_node("BR", NamedTrack::EnokiL);
        a.add_node("CamelR", NamedTrack::CamelR);
        a.add_node("CamelL", NamedTrack::CamelL);
        let solid: [(&str, &str, &[i32]); 10] = [
            ("TL", "TL", &[4]),
            ("BL", "BL", &[4]),
            ("TR", "TR", &[-1]),
            ("BR", "BR", &[-1]),
            ("TL", "TR", &[4, 3, 2]),
            ("BL", "BR", &[4, 3, 2]),
            ("TR", "BL", &[-1, -2, -3]),
            ("BR", "TL", &[-1, -2, -3]),
            ("CamelR", "CamelR", &[4, 3]),
            ("CamelL", "CamelL", &[-1, -2]),
        ];
        for (f, t, l) in solid {
            a.add_edge(f, t, l, false).expect("figure edge");
        }
        for (f, t) in [
            ("TL", "CamelL"),
            ("BL", "CamelL"),
            ("CamelR", "TR"),
            ("CamelR", "BR"),
            ("CamelR", "CamelL"),
            ("CamelL", "CamelR"),
        ] {
            a.add_edge(f, t, &[], true).expect("figure edge");
        }
        a
    }

    pub fn is_camel(&self, node: usize) -> bool {
        matches!(self.nodes[node].track, NamedTrack::CamelL | NamedTrack::CamelR)
    }

    /// Closed walks of length `1..=max_len` from `base`, in lexicographic
    /// order of edge indices. The walk may pass through `base` on the way.
    pub fn loops(&self, base: usize, max_len: usize) -> Vec<Loop> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.walk(base, base, max_len, &mut path, &mut out);
        out
    }

    fn walk(&self, base: usize, at: usize, left: usize, path: &mut Vec<usize>, out: &mut Vec<Loop>) {
        if left == 0 {
            return;
        }
        for (k, e) in self.edges.iter().enumerate() {
            if e.from != at {
                continue;
            }
            path.push(k);
            if e.to == base {
                out.push(Loop { base, edges: path.clone(), word: self.compose(path) });
            }
            self.walk(base, e.to, left - 1, path, out);
            path.pop();
        }
    }

    /// Labels of `edges` concatenated in order.
    pub fn compose(&self, edges: &[usize]) -> BraidWord {
        let mut l = Vec::new();
        for &e in edges {
            l.extend_from_slice(self.edges[e].label.letters());
        }
        word(&l)
    }

    pub fn passes_camel(&self, lp: &Loop) -> bool {
        lp.edges.iter().any(|&e| self.is_camel(self.edges[e].from))
    }

    pub fn dashed_only(&self, lp: &Loop) -> bool {
        lp.edges.iter().all(|&e| self.edges[e].dashed)
    }

    /// Read a loop on the outside square as `β(a₁,b₁)⋯β(a_k,b_k)` after
    /// rotating it to start just after arriving at a σ₄ corner. Returns the
    /// rotation and the factors, or `None` if the loop is not of that shape.
    pub fn beta_decomposition(&self, lp: &Loop) -> Option<(usize, Vec<(u32, u32)>)> {
        let (s4, s1, d, u) = ([4], [-1], [4, 3, 2], [-1, -2, -3]);
        let lab = |e: usize| self.edges[e].label.letters();
        let n = lp.edges.len();
        let start = (0..n).find(|&i| lab(lp.edges[(i + n - 1) % n]) == u)?;
        let rot: Vec<usize> = (0..n).map(|k| lp.edges[(start + k) % n]).collect();
        let mut factors = Vec::new();
        let mut i = 0;
        while i < n {
            let mut a = 0;
            while i < n && lab(rot[i]) == s4 {
                a += 1;
                i += 1;
            }
            if i == n || lab(rot[i]) != d {
                return None;
            }
            i += 1;
            let mut b = 0;
            while i < n && lab(rot[i]) == s1 {
                b += 1;
                i += 1;
            }
            if i == n || lab(rot[i]) != u {
                return None;
            }
            i += 1;
            factors.push((a + 1, b + 1));
        }
        Some((start, factors))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Loop {
    pub base: usize,
    pub edges: Vec<usize>,
    pub word: BraidWord,
}

/// Round curves, nested curves, and their images under words of length at
/// most two.
pub fn witness_family(n: usize) -> Vec<DynnikovCoords> {
    let mut base: Vec<DynnikovCoords> = (1..n).map(|i| DynnikovCoords::round_curve(n, i)).collect();
    for k in 3..n {
        base.push(DynnikovCoords::nested_curve(n, k));
    }
    let gens: Vec<i32> = (1..n as i32).flat_map(|i| [i, -i]).collect();
    let mut words: Vec<Vec<i32>> = gens.iter().map(|&g| vec![g]).collect();
    for &g in &gens {
        for &h in &gens {
            if g != -h {
                words.push(vec![g, h]);
            }
        }
    }
    let mut out = base.clone();
    for w in words {
        let w = BraidWord::new(n, w).expect("generators");
        for c in &base {
            if let Ok(x) = dynnikov_apply(&w, c) {
                out.push(x);
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

/// A curve of the family fixed by `b`, also trying the images of the family
/// under each conjugator's inverse (so conjugates of reducible braids are
/// caught when the conjugator is supplied).
pub fn reducibility_witness_with(b: &BraidWord, conjugators: &[BraidWord]) -> Option<DynnikovCoords> {
    let n = b.strands();
    if n < 3 {
        return None;
    }
    let fam = witness_family(n);
    let fixed = |c: &DynnikovCoords| dynnikov_apply(b, c).map(|x| x == *c).unwrap_or(false);
    if let Some(c) = fam.iter().find(|c| fixed(c)) {
        return Some(c.clone());
    }
    for p in conjugators {
        let pi = p.inverse();
        for c in &fam {
            if let Ok(x) = dynnikov_apply(&pi, c) {
                if fixed(&x) {
                    return Some(x);
                }
            }
        }
    }
    None
}

pub fn reducibility_witness(b: &BraidWord) -> Option<DynnikovCoords> {
    reducibility_witness_with(b, &[])
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LoopClass {
    /// Composes to the identity word (dashed edges only).
    Trivial,
    ThroughCamel,
    Reducible(DynnikovCoords),
    Flagged,
}

#[derive(Debug, Clone, Default)]
pub struct PassageReport {
    pub max_len: usize,
    pub loops: usize,
    pub trivial: usize,
    pub through_camel: usize,
    pub reducible: usize,
    pub flagged: Vec<Loop>,
    /// Non-Camel loops read and checked as a product of `β(a,b)`'s.
    pub beta_products: usize,
    /// Non-Camel loops that did not read as a product of `β(a,b)`'s (powers
    /// of a single corner generator).
    pub not_beta: usize,
    /// Non-Camel loops whose `β` reading failed `braids_equal`.
    pub decomposition_mismatch: Vec<Loop>,
    /// Camel loops whose word is a cyclic rotation of one of the supplied
    /// braids, as `(candidate index, loop)`.
    pub candidate_hits: Vec<(usize, Loop)>,
}

impl PassageReport {
    pub fn ok(&self) -> bool {
        self.flagged.is_empty() && self.decomposition_mismatch.is_empty()
    }

    /// Add the counts of `o`, keeping `max_len`.
    pub fn merge(&mut self, o: PassageReport) {
        self.loops += o.loops;
        self.trivial += o.trivial;
        self.through_camel += o.through_camel;
        self.reducible += o.reducible;
        self.beta_products += o.beta_products;
        self.not_beta += o.not_beta;
        self.flagged.extend(o.flagged);
        self.decomposition_mismatch.extend(o.decomposition_mismatch);
        self.candidate_hits.extend(o.candidate_hits);
    }
}

/// Cyclic rotations of a word, as conjugates.
fn rotations(b: &BraidWord) -> Vec<BraidWord> {
    let l = b.letters();
    (0..l.len().max(1))
        .map(|k| {
            let mut r = l[k.min(l.len())..].to_vec();
            r.extend_from_slice(&l[..k.min(l.len())]);
            BraidWord::new(b.strands(), r).expect("same letters")
        })
        .collect()
}

pub fn classify_loop(a: &Automaton, lp: &Loop) -> LoopClass {
    if a.dashed_only(lp) || lp.word.reduced().is_empty() {
        return LoopClass::Trivial;
    }
    if a.passes_camel(lp) {
        return LoopClass::ThroughCamel;
    }
    let prefixes: Vec<BraidWord> = (1..lp.edges.len()).map(|k| a.compose(&lp.edges[..k])).collect();
    match reducibility_witness_with(&lp.word, &prefixes) {
        Some(c) => LoopClass::Reducible(c),
        None => LoopClass::Flagged,
    }
}

/// Every loop at every base up to `max_len`: through a Camel node, reducible
/// by a witness curve, or flagged.
pub fn camel_passage_check(a: &Automaton, max_len: usize, candidates: &[BraidWord]) -> PassageReport {
    let mut r = PassageReport { max_len, ..Default::default() };
    for base in 0..a.nodes.len() {
        r.merge(passage_at(a, base, max_len, candidates));
    }
    r
}

/// The part of [`camel_passage_check`] for loops based at one node.
pub fn passage_at(a: &Automaton, base: usize, max_len: usize, candidates: &[BraidWord]) -> PassageReport {
    let rots: Vec<Vec<BraidWord>> = candidates.iter().map(rotations).collect();
    let mut r = PassageReport { max_len, ..Default::default() };
    for lp in a.loops(base, max_len) {
        r.loops += 1;
        match classify_loop(a, &lp) {
            LoopClass::Trivial => r.trivial += 1,
            LoopClass::ThroughCamel => {
                r.through_camel += 1;
                for (i, rs) in rots.iter().enumerate() {
                    if rs.iter().any(|w| braids_equal(w, &lp.word).unwrap_or(false)) {
                        r.candidate_hits.push((i, lp.clone()));
                    }
                }
            }
            LoopClass::Reducible(_) => r.reducible += 1,
            LoopClass::Flagged => r.flagged.push(lp.clone()),
        }
        if !a.passes_camel(&lp) && !a.dashed_only(&lp) {
            match a.beta_decomposition(&lp) {
                None => r.not_beta += 1,
                Some((start, f)) => {
                    let rotated = a.compose(&[&lp.edges[start..], &lp.edges[..start]].concat());
                    let prefix = a.compose(&lp.edges[..start]);
                    let back = rotated.conjugate_by(&prefix).expect("same strands");
                    let good = braids_equal(&rotated, &beta_product(&f)).unwrap_or(false)
                        && braids_equal(&back, &lp.word).unwrap_or(false);
                    if good {
                        r.beta_products += 1;
                    } else {
                        r.decomposition_mismatch.push(lp.clone());
                    }
                }
            }
        }
    }
    r
}

/// The candidate braids carried by the Camel track.
pub fn candidate_braids() -> [BraidWord; 3] {
    [
        word(&[4, 3, 4, 3, -1, -2, -1, -2]),
        word(&[-1, -1, -1, -2, -3, 2, 3, 4, 3, 4]),
        word(&[4, 3, -1, -2, 4, 3, -1, -2]),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn figure_labels() {
        let a = Automaton::figure();
        let solid = a.edges.iter().filter(|e| !e.dashed).count();
        assert_eq!(solid, 10);
        assert!(a.edges.iter().filter(|e| e.dashed).all(|e| e.label.is_empty()));
        let mut bad = a.clone();
        assert_eq!(bad.add_edge("TL", "TR", &[1], true), Err(AutomatonError::DashedLabel { edge: 16 }));
    }

    #[test]
    fn outside_loop_is_beta() {
        let a = Automaton::figure();
        let tl = a.node("TL").unwrap();
        for lp in a.loops(tl, 6) {
            if a.passes_camel(&lp) {
                continue;
            }
            if let Some((0, f)) = a.beta_decomposition(&lp) {
                assert!(braids_equal(&lp.word, &beta_product(&f)).unwrap());
            }
        }
        // half circuit TL -> TR -> BL
        let half = a.compose(&[0, 0, 4, 2, 6]);
        assert!(braids_equal(&half, &beta_ab(3, 2)).unwrap());
    }

    #[test]
    fn beta_fixes_round_curve() {
        let c23 = DynnikovCoords::round_curve(5, 2);
        for x in 0..=3 {
            for y in 0..=3 {
                let b = beta_ab(x, y);
                assert_eq!(dynnikov_apply(&b, &c23).unwrap(), c23);
                assert!(reducibility_witness(&b).is_some());
            }
        }
    }

    #[test]
    fn candidates_have_no_witness() {
        for b in candidate_braids() {
            assert_eq!(reducibility_witness(&b), None, "{b}");
        }
    }

    #[test]
    fn trivial_loop() {
        let a = Automaton::figure();
        let cr = a.node("CamelR").unwrap();
        let lp = a.loops(cr, 2).into_iter().find(|l| a.dashed_only(l)).unwrap();
        assert!(lp.word.is_empty());
        assert_eq!(classify_loop(&a, &lp), LoopClass::Trivial);
    }
    #[test]
    fn passage_at_eight() {
        let a = Automaton::figure();
        let r = camel_passage_check(&a, 8, &candidate_braids());
        assert!(r.ok(), "{:?}", r.flagged.iter().map(|l| l.word.to_string()).collect::<Vec<_>>());
        assert!(r.trivial > 0 && r.reducible > 0);
        assert!(r.candidate_hits.iter().any(|h| h.0 == 0));
    }

    #[test]
    fn split_form_fixes_curve_2_4() {
        let c = curve_2_4();
        assert_ne!(c, DynnikovCoords::round_curve(5, 2));
        assert_ne!(c, DynnikovCoords::round_curve(5, 3));
        for x in 0..=3 {
            for y in 0..=3 {
                let s = beta_ab_split(x, y);
                assert_eq!(dynnikov_apply(&s, &c).unwrap(), c);
                let back = beta_ab(x, y).conjugate_by(&word(&[-3])).unwrap();
                assert!(braids_equal(&s, &back).unwrap());
            }
        }
    }

    #[test]
    fn products_are_reducible() {
        let grid: Vec<(u32, u32)> = (0..=3).flat_map(|x| (0..=3).map(move |y| (x, y))).collect();
        for &f in &grid {
            for &g in &grid {
                assert!(reducibility_witness(&beta_product(&[f, g])).is_some(), "{f:?} {g:?}");
            }
        }
    }

    #[test]
    fn base_change_conjugates() {
        let a = Automaton::figure();
        let tl = a.node("TL").unwrap();
        for lp in a.loops(tl, 7).into_iter().filter(|l| l.edges.len() > 2).take(40) {
            for k in 1..lp.edges.len() {
                let rot = a.compose(&[&lp.edges[k..], &lp.edges[..k]].concat());
                let p = a.compose(&lp.edges[..k]);
                assert!(braids_equal(&rot.conjugate_by(&p).unwrap(), &lp.word).unwrap());
            }
        }
    }
}
