//! Track files.
//!
//! ```text
//! track camel-r
//! edge d real VL VR
//! edge VL~Vb inf VL Vb
//! switch VL d.0/0 VL~Vb.0/1 Vr~VL.1/1
//! marked r or
//! ```
//!
//! `edge` lines give label, kind and the switches at end 0 and end 1, in
//! edge order. A `switch` line lists its germs counter-clockwise as
//! `label.end/side`. A `marked` line names a marked point and the
//! infinitesimal loop around it. `#` starts a comment.

use fpf_core::track::{EdgeKind, Edge, Switch, Track, Violation};
use std::collections::HashMap;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrackFileError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("track {name} fails validation: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
    Invalid { name: String, violations: Vec<Violation> },
}

fn syntax<T>(line: usize, msg: impl Into<String>) -> Result<T, TrackFileError> {
    Err(TrackFileError::Syntax { line: line + 1, msg: msg.into() })
}

pub fn write_track(t: &Track) -> String {
    let mut s = String::new();
    writeln!(s, "track {}", t.name).unwrap();
    for e in &t.edges {
        let kind = match e.kind {
            EdgeKind::Real => "real",
            EdgeKind::Infinitesimal => "inf",
        };
        writeln!(s, "edge {} {kind} {} {}", e.label, t.switches[e.ends[0]].name, t.switches[e.ends[1]].name).unwrap();
    }
    for sw in &t.switches {
        write!(s, "switch {}", sw.name).unwrap();
        for (g, side) in sw.germs.iter().zip(&sw.sides) {
            write!(s, " {}.{}/{}", t.edges[g.0].label, g.1, side).unwrap();
        }
        s.push('\n');
    }
    for (name, e) in &t.marked {
        writeln!(s, "marked {name} {}", t.edges[*e].label).unwrap();
    }
    s
}

/// Parse without validating.
pub fn parse_track_unchecked(text: &str) -> Result<Track, TrackFileError> {
    let mut name = None;
    let mut edges: Vec<(usize, String, EdgeKind, String, String)> = Vec::new();
    let mut switches: Vec<(usize, String, Vec<String>)> = Vec::new();
    let mut marked: Vec<(usize, String, String)> = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "track" if toks.len() == 2 => {
                if name.is_some() {
                    return syntax(ln, "second track line");
                }
                name = Some(toks[1].to_string());
            }
            "edge" if toks.len() == 5 => {
                let kind = match toks[2] {
                    "real" => EdgeKind::Real,
                    "inf" => EdgeKind::Infinitesimal,
                    k => return syntax(ln, format!("edge kind {k:?} is neither real nor inf")),
                };
                edges.push((ln, toks[1].into(), kind, toks[3].into(), toks[4].into()));
            }
            "switch" if toks.len() >= 2 => {
                switches.push((ln, toks[1].into(), toks[2..].iter().map(|s| s.to_string()).collect()));
            }
            "marked" if toks.len() == 3 => marked.push((ln, toks[1].into(), toks[2].into())),
            _ => return syntax(ln, format!("cannot read {line:?}")),
        }
    }
    let Some(name) = name else { return syntax(0, "missing track line") };
    let mut sid = HashMap::new();
    for (k, (ln, s, _)) in switches.iter().enumerate() {
        if sid.insert(s.clone(), k).is_some() {
            return syntax(*ln, format!("switch {s} declared twice"));
        }
    }
    let mut eid = HashMap::new();
    let mut t_edges = Vec::new();
    for (k, (ln, label, kind, a, b)) in edges.iter().enumerate() {
        if eid.insert(label.clone(), k).is_some() {
            return syntax(*ln, format!("edge {label} declared twice"));
        }
        let end = |s: &String| sid.get(s).copied().ok_or(());
        let (Ok(a), Ok(b)) = (end(a), end(b)) else {
            return syntax(*ln, format!("edge {label} ends at an undeclared switch"));
        };
        t_edges.push(Edge { label: label.clone(), kind: *kind, ends: [a, b] });
    }
    let mut t_switches = Vec::new();
    for (ln, s, germs) in &switches {
        let mut gs = Vec::new();
        let mut sides = Vec::new();
        for g in germs {
            let parsed = g.split_once('.').and_then(|(l, rest)| {
                let (end, side) = rest.split_once('/')?;
                Some((l, end.parse::<u8>().ok()?, side.parse::<u8>().ok()?))
            });
            let Some((l, end, side)) = parsed else {
                return syntax(*ln, format!("germ {g:?} is not label.end/side"));
            };
            let Some(&e) = eid.get(l) else { return syntax(*ln, format!("germ of undeclared edge {l}")) };
            if end > 1 || side > 1 {
                return syntax(*ln, format!("germ {g:?}: end and side are 0 or 1"));
            }
            if t_edges[e].ends[end as usize] != sid[s] {
                return syntax(*ln, format!("germ {g:?} is not at switch {s}"));
            }
            gs.push((e, end));
            sides.push(side);
        }
        t_switches.push(Switch { name: s.clone(), germs: gs, sides });
    }
    let mut t_marked = Vec::new();
    for (ln, m, l) in marked {
        let Some(&e) = eid.get(&l) else { return syntax(ln, format!("marked point {m} around undeclared edge {l}")) };
        t_marked.push((m, e));
    }
    Ok(Track { name, switches: t_switches, edges: t_edges, marked: t_marked })
}

/// Parse and validate.
pub fn parse_track(text: &str) -> Result<Track, TrackFileError> {
    let t = parse_track_unchecked(text)?;
    let v = t.validate();
    if !v.is_empty() {
        return Err(TrackFileError::Invalid { name: t.name.clone(), violations: v });
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpf_core::track::NamedTrack;

    #[test]
    fn roundtrip_named_tracks() {
        for n in NamedTrack::ALL {
            let t = n.track();
            let text = write_track(&t);
            assert_eq!(parse_track(&text).unwrap(), t, "{n}");
            assert_eq!(write_track(&parse_track(&text).unwrap()), text);
        }
    }

    #[test]
    fn bad_lines() {
        assert!(matches!(parse_track("edge a real X Y"), Err(TrackFileError::Syntax { .. })));
        let t = write_track(&NamedTrack::CamelR.track());
        let broken = t.replace("edge d real VL VR", "edge d real VL VQ");
        assert!(matches!(parse_track(&broken), Err(TrackFileError::Syntax { .. })));
    }
}
