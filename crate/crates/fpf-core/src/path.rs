//! Decorated train paths.
//!
//! A letter on a marked-monogon edge `e` is `e+` or `e-` (the doubled
//! traversal `e ē`, going round the marked point one way or the other) or the
//! terminal `e∘`, written `e o`, which ends the path at the marked point. A
//! letter on a bridge between polygons is `d` or `~d` (the reversed edge).

use crate::track::{PolygonView, Track};
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::format;
use core::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dec {
    Plus,
    Minus,
    Terminal,
    Forward,
    Backward,
}

impl Dec {
    pub fn flipped(self) -> Dec {
        match self {
            Dec::Plus => Dec::Minus,
            Dec::Minus => Dec::Plus,
            Dec::Forward => Dec::Backward,
            Dec::Backward => Dec::Forward,
            Dec::Terminal => Dec::Terminal,
        }
    }

    /// Raw edges traversed: doubled letters count twice.
    pub fn raw_len(self) -> usize {
        match self {
            Dec::Plus | Dec::Minus => 2,
            _ => 1,
        }
    }

    pub fn swaps(self) -> bool {
        matches!(self, Dec::Plus | Dec::Minus)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub edge: usize,
    pub dec: Dec,
}

impl Letter {
    pub fn new(edge: usize, dec: Dec) -> Self {
        Letter { edge, dec }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct DecoratedPath {
    pub letters: Vec<Letter>,
}

impl DecoratedPath {
    pub fn new(letters: Vec<Letter>) -> Self {
        DecoratedPath { letters }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn raw_len(&self) -> usize {
        self.letters.iter().map(|l| l.dec.raw_len()).sum()
    }

    /// The path read backwards.
    pub fn reversed(&self) -> DecoratedPath {
        DecoratedPath { letters: self.letters.iter().rev().map(|l| Letter::new(l.edge, l.dec.flipped())).collect() }
    }

    /// Side-swapping letters strictly before `position`.
    pub fn swaps_before(&self, position: usize) -> Option<usize> {
        if position > self.letters.len() {
            return None;
        }
        Some(self.letters[..position].iter().filter(|l| l.dec.swaps()).count())
    }

    pub fn display<'a>(&'a self, t: &'a Track) -> PathDisplay<'a> {
        PathDisplay { p: self, t }
    }
}

pub struct PathDisplay<'a> {
    p: &'a DecoratedPath,
    t: &'a Track,
}

impl fmt::Display for PathDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, l) in self.p.letters.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            let name = &self.t.edges[l.edge].label;
            match l.dec {
                Dec::Plus => write!(f, "{name}+")?,
                Dec::Minus => write!(f, "{name}-")?,
                Dec::Terminal => write!(f, "{name} o")?,
                Dec::Forward => write!(f, "{name}")?,
                Dec::Backward => write!(f, "~{name}")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathParseError {
    pub token: usize,
    pub message: String,
}

impl fmt::Display for PathParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "token {}: {}", self.token + 1, self.message)
    }
}

impl core::error::Error for PathParseError {}

/// Parse a path in the printed format, e.g. `"g+ p+ ~d b+ r o"`.
pub fn parse_path(t: &Track, v: &PolygonView, s: &str) -> Result<DecoratedPath, PathParseError> {
    let toks: Vec<&str> = s.split_whitespace().collect();
    let mut letters = Vec::new();
    let mut k = 0;
    while k < toks.len() {
        let tok = toks[k];
        let err = |m: String| PathParseError { token: k, message: m };
        let edge = |name: &str| -> Result<usize, PathParseError> {
            t.edge_by_label(name)
                .filter(|&e| v.is_bridge(e) || v.monogon_loop[e].is_some())
                .ok_or_else(|| err(format!("unknown real edge {name:?}")))
        };
        if let Some(name) = tok.strip_prefix('~') {
            let e = edge(name)?;
            if !v.is_bridge(e) {
                return Err(err(format!("{name} is not a bridge and cannot be reversed")));
            }
            letters.push(Letter::new(e, Dec::Backward));
        } else if let Some(name) = tok.strip_suffix('+') {
            let e = edge(name)?;
            if v.is_bridge(e) {
                return Err(err(format!("bridge {name} takes no sign")));
            }
            letters.push(Letter::new(e, Dec::Plus));
        } else if let Some(name) = tok.strip_suffix('-') {
            let e = edge(name)?;
            if v.is_bridge(e) {
                return Err(err(format!("bridge {name} takes no sign")));
            }
            letters.push(Letter::new(e, Dec::Minus));
        } else if tok == "o" {
            return Err(err("terminal marker without a letter".to_string()));
        } else {
            let e = edge(tok)?;
            if v.is_bridge(e) {
                letters.push(Letter::new(e, Dec::Forward));
            } else if toks.get(k + 1) == Some(&"o") {
                letters.push(Letter::new(e, Dec::Terminal));
                k += 1;
            } else {
                return Err(err(format!("monogon letter {tok} needs +, - or a terminal o")));
            }
        }
        k += 1;
    }
    Ok(DecoratedPath::new(letters))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::track::{camel_r, polygon_view};
    use alloc::string::ToString;

    #[test]
    fn roundtrip() {
        let t = camel_r();
        let v = polygon_view(&t).unwrap();
        for s in ["g+ p+ ~d b+ r o", "r- b- d p- g-", "y o"] {
            let p = parse_path(&t, &v, s).unwrap();
            assert_eq!(p.display(&t).to_string(), s);
        }
        assert!(parse_path(&t, &v, "g").is_err());
        assert!(parse_path(&t, &v, "d+").is_err());
        assert!(parse_path(&t, &v, "q o").is_err());
    }

    #[test]
    fn parity_prefix() {
        let t = camel_r();
        let v = polygon_view(&t).unwrap();
        let p = parse_path(&t, &v, "r- b- d p- g-").unwrap();
        assert_eq!(p.swaps_before(2), Some(2));
        assert_eq!(p.swaps_before(0), Some(0));
        assert_eq!(p.swaps_before(6), None);
        assert_eq!(p.raw_len(), 9);
    }
}
