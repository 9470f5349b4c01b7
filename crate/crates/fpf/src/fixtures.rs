//! Shipped data files: tracks, candidate maps and the automaton.
//!
//! The files are compiled in; a directory with the same layout can be loaded
//! instead. [`FixtureSet::check`] compares every file against the built-in
//! constructions and names the module whose data is off.

use crate::automatonfile::parse_automaton;
use crate::trackfile::parse_track;
use fpf_core::automaton::Automaton;
use fpf_core::search::candidate_text;
use fpf_core::track::NamedTrack;
use fpf_core::trackmap::TrackMap;
use sha2::{Digest, Sha256};
use std::path::Path;
use std::sync::Arc;
use thiserror::Error;

const EMBEDDED: [(&str, &str); 9] = [
    ("tracks/jellyfish.track", include_str!("../data/tracks/jellyfish.track")),
    ("tracks/camel-l.track", include_str!("../data/tracks/camel-l.track")),
    ("tracks/camel-r.track", include_str!("../data/tracks/camel-r.track")),
    ("tracks/enoki-l.track", include_str!("../data/tracks/enoki-l.track")),
    ("tracks/enoki-r.track", include_str!("../data/tracks/enoki-r.track")),
    ("maps/beta1.map", include_str!("../data/maps/beta1.map")),
    ("maps/beta2.map", include_str!("../data/maps/beta2.map")),
    ("maps/beta3.map", include_str!("../data/maps/beta3.map")),
    ("automaton.txt", include_str!("../data/automaton.txt")),
];

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("{module}: {file}: {detail}")]
    Bad { module: &'static str, file: String, detail: String },
    #[error("reading {file}: {source}")]
    Io { file: String, source: std::io::Error },
}

impl FixtureError {
    pub fn module(&self) -> &'static str {
        match self {
            FixtureError::Bad { module, .. } => module,
            FixtureError::Io { .. } => "cli_app",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixtureSet {
    pub files: Vec<(String, String)>,
}

impl FixtureSet {
    pub fn embedded() -> Self {
        FixtureSet { files: EMBEDDED.iter().map(|(p, t)| (p.to_string(), t.to_string())).collect() }
    }

    pub fn from_dir(dir: &Path) -> Result<Self, FixtureError> {
        let mut files = Vec::new();
        for (p, _) in EMBEDDED {
            let full = dir.join(p);
            let text = std::fs::read_to_string(&full)
                .map_err(|source| FixtureError::Io { file: full.display().to_string(), source })?;
            files.push((p.to_string(), text));
        }
        Ok(FixtureSet { files })
    }

    pub fn get(&self, path: &str) -> Option<&str> {
        self.files.iter().find(|(p, _)| p == path).map(|(_, t)| t.as_str())
    }

    /// SHA-256 of every file, hex.
    pub fn hashes(&self) -> Vec<(String, String)> {
        self.files
            .iter()
            .map(|(p, t)| {
                let d = Sha256::digest(t.as_bytes());
                (p.clone(), d.iter().map(|b| format!("{b:02x}")).collect())
            })
            .collect()
    }

    pub fn check(&self) -> Result<(), FixtureError> {
        for n in NamedTrack::ALL {
            let file = format!("tracks/{}.track", n.slug());
            let bad = |detail: String| FixtureError::Bad { module: "disk_tracks", file: file.clone(), detail };
            let text = self.get(&file).ok_or_else(|| bad("missing".into()))?;
            let t = parse_track(text).map_err(|e| bad(e.to_string()))?;
            if t != n.track() {
                return Err(bad("incidence differs from the built-in track".into()));
            }
        }
        let camel = Arc::new(NamedTrack::CamelR.track());
        for i in 0..3 {
            let file = format!("maps/beta{}.map", i + 1);
            let bad = |detail: String| FixtureError::Bad { module: "track_maps", file: file.clone(), detail };
            let text = self.get(&file).ok_or_else(|| bad("missing".into()))?;
            let m = TrackMap::parse(camel.clone(), text).map_err(|e| bad(e.to_string()))?;
            let want = TrackMap::parse(camel.clone(), &candidate_text(i)).expect("built-in candidate");
            if m != want {
                return Err(bad("images differ from the built-in candidate".into()));
            }
        }
        let file = "automaton.txt".to_string();
        let bad = |detail: String| FixtureError::Bad { module: "folding_automaton", file: file.clone(), detail };
        let text = self.get(&file).ok_or_else(|| bad("missing".into()))?;
        let (_, a) = parse_automaton(text).map_err(|e| bad(e.to_string()))?;
        if a != Automaton::figure() {
            return Err(bad("graph differs from the built-in automaton".into()));
        }
        Ok(())
    }

    pub fn candidate_map(&self, i: usize) -> Result<TrackMap, FixtureError> {
        let file = format!("maps/beta{}.map", i + 1);
        let text = self.get(&file).unwrap_or_default();
        TrackMap::parse(Arc::new(NamedTrack::CamelR.track()), text)
            .map_err(|e| FixtureError::Bad { module: "track_maps", file, detail: e.to_string() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automatonfile::write_automaton;
    use crate::trackfile::write_track;

    #[test]
    fn embedded_files_match_builders() {
        let f = FixtureSet::embedded();
        for n in NamedTrack::ALL {
            assert_eq!(f.get(&format!("tracks/{}.track", n.slug())).unwrap(), write_track(&n.track()));
        }
        assert_eq!(f.get("automaton.txt").unwrap(), write_automaton("folding-33", &Automaton::figure()));
        f.check().unwrap();
        assert_eq!(f.hashes().len(), 9);
    }

    #[test]
    fn mutated_incidence_names_module() {
        let mut f = FixtureSet::embedded();
        let k = f.files.iter().position(|(p, _)| p == "tracks/camel-r.track").unwrap();
        f.files[k].1 = f.files[k].1.replace("switch VR d.1/0 y.0/0", "switch VR y.0/0 d.1/0");
        assert_ne!(f.files[k].1, FixtureSet::embedded().files[k].1);
        assert_eq!(f.check().unwrap_err().module(), "disk_tracks");
    }
}
