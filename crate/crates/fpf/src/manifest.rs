//! Run manifests written next to emitted reports.

use crate::fixtures::FixtureSet;
use sha2::{Digest, Sha256};
use std::fmt::Write;
use std::time::Duration;

#[derive(Debug, Clone, PartialEq)]
pub struct RunManifest {
    pub command: String,
    /// `key = value` pairs of the effective configuration, in a fixed order.
    pub config: Vec<(String, String)>,
    pub fixture_hashes: Vec<(String, String)>,
    pub outcome: String,
    /// Hash of the report this run produced.
    pub report_hash: String,
    pub wall_time: Duration,
}

impl RunManifest {
    pub fn new(command: &str, config: Vec<(String, String)>, fixtures: &FixtureSet) -> Self {
        RunManifest {
            command: command.into(),
            config,
            fixture_hashes: fixtures.hashes(),
            outcome: String::new(),
            report_hash: String::new(),
            wall_time: Duration::ZERO,
        }
    }

    pub fn finish(&mut self, outcome: &str, report: &str, wall_time: Duration) {
        self.outcome = outcome.into();
        self.report_hash = hex(&Sha256::digest(report.as_bytes()));
        self.wall_time = wall_time;
    }

    /// Everything except the wall time. Two runs with equal keys must have
    /// produced the same report.
    pub fn key(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "command {}", self.command);
        for (k, v) in &self.config {
            let _ = writeln!(s, "config {k} = {v}");
        }
        for (f, h) in &self.fixture_hashes {
            let _ = writeln!(s, "fixture {f} {h}");
        }
        s
    }

    pub fn render(&self) -> String {
        let mut s = self.key();
        let _ = writeln!(s, "outcome {}", self.outcome);
        let _ = writeln!(s, "report sha256 {}", self.report_hash);
        let _ = writeln!(s, "wall time {:.3}s", self.wall_time.as_secs_f64());
        s
    }
}

pub fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn render_has_all_fields() {
        let mut m = RunManifest::new("eliminate", vec![("suite".into(), "6".into())], &FixtureSet::embedded());
        m.finish("0 survivors", "table\n", Duration::from_millis(1500));
        let r = m.render();
        assert!(r.starts_with("command eliminate\nconfig suite = 6\n"));
        assert!(r.contains("fixture tracks/camel-r.track "));
        assert!(r.contains("wall time 1.500s"));
        assert!(!m.key().contains("wall time"));
    }
}
