//! Automaton files, in the line style of track files.
//!
//! ```text
//! automaton folding-33
//! node TL enoki-r
//! edge TL TR 4 3 2
//! dashed TL CamelL
//! ```

use fpf_core::automaton::Automaton;
use fpf_core::track::NamedTrack;
use std::fmt::Write;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct AutomatonFileError {
    pub line: usize,
    pub msg: String,
}

pub fn write_automaton(name: &str, a: &Automaton) -> String {
    let mut s = String::new();
    writeln!(s, "automaton {name}").unwrap();
    for n in &a.nodes {
        writeln!(s, "node {} {}", n.name, n.track.slug()).unwrap();
    }
    for e in &a.edges {
        let (f, t) = (&a.nodes[e.from].name, &a.nodes[e.to].name);
        if e.dashed {
            writeln!(s, "dashed {f} {t}").unwrap();
        } else {
            writeln!(s, "edge {f} {t} {}", e.label).unwrap();
        }
    }
    s
}

pub fn parse_automaton(text: &str) -> Result<(String, Automaton), AutomatonFileError> {
    let mut name = None;
    let mut a = Automaton::default();
    for (ln, raw) in text.lines().enumerate() {
        let err = |msg: String| AutomatonFileError { line: ln + 1, msg };
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        match toks[0] {
            "automaton" if toks.len() == 2 => name = Some(toks[1].to_string()),
            "node" if toks.len() == 3 => {
                let t = NamedTrack::from_slug(toks[2]).ok_or_else(|| err(format!("unknown track {}", toks[2])))?;
                if a.node(toks[1]).is_some() {
                    return Err(err(format!("node {} declared twice", toks[1])));
                }
                a.add_node(toks[1], t);
            }
            "edge" | "dashed" if toks.len() >= 3 => {
                let dashed = toks[0] == "dashed";
                let letters = toks[3..]
                    .iter()
                    .filter(|t| **t != "e")
                    .map(|t| t.parse::<i32>().map_err(|_| err(format!("bad letter {t:?}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                a.add_edge(toks[1], toks[2], &letters, dashed).map_err(|e| err(e.to_string()))?;
            }
            _ => return Err(err(format!("cannot read {line:?}"))),
        }
    }
    let name = name.ok_or(AutomatonFileError { line: 0, msg: "missing automaton line".into() })?;
    Ok((name, a))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let a = Automaton::figure();
        let text = write_automaton("folding-33", &a);
        let (n, b) = parse_automaton(&text).unwrap();
        assert_eq!(n, "folding-33");
        assert_eq!(a, b);
        assert!(parse_automaton("automaton x\nnode A camel-r\ndashed A A 1\n").is_err());
        assert!(parse_automaton("automaton x\nnode A torus\n").is_err());
    }
}
