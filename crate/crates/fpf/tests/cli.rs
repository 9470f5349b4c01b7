use fpf::automatonfile::parse_automaton;
use fpf::fixtures::FixtureSet;
use fpf_core::automaton::Automaton;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn fpf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fpf")).args(args).output().expect("run fpf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn scratch(name: &str) -> PathBuf {
    let d = std::env::temp_dir().join(format!("fpf-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&d);
    std::fs::create_dir_all(&d).unwrap();
    d
}

fn write_fixtures(dir: &Path, edit: impl Fn(&str, &str) -> String) {
    for (p, t) in FixtureSet::embedded().files {
        let full = dir.join(&p);
        std::fs::create_dir_all(full.parent().unwrap()).unwrap();
        std::fs::write(full, edit(&p, &t)).unwrap();
    }
}

#[test]
fn invariants_examples() {
    let o = fpf(&["invariants", "1 2 3 4 ^3"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert!(s.contains("cover alexander t^4 - t^3 + t^2 - t + 1"), "{s}");
    assert!(s.contains("cover lspace    true"));

    let s = stdout(&fpf(&["invariants", "4 3 4 3 -2 -1 -2 -1"]));
    assert!(s.contains("determinant     9"), "{s}");

    let s = stdout(&fpf(&["invariants", ""]));
    assert!(s.contains("determinant     1") && s.contains("alexander       1"), "{s}");

    let o = fpf(&["invariants", "1 2 ^"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("at byte"));
}

#[test]
fn mutated_camel_incidence_is_named() {
    let dir = scratch("mutated");
    write_fixtures(&dir, |p, t| {
        if p == "tracks/camel-r.track" {
            t.replace("switch VR d.1/0 y.0/0", "switch VR y.0/0 d.1/0")
        } else {
            t.to_string()
        }
    });
    let o = fpf(&["verify-paper", "--fixtures", dir.to_str().unwrap()]);
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("disk_tracks"), "{err}");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn fixtures_from_directory_validate() {
    let dir = scratch("copy");
    write_fixtures(&dir, |_, t| t.to_string());
    let f = FixtureSet::from_dir(&dir).unwrap();
    assert_eq!(f, FixtureSet::embedded());
    f.check().unwrap();
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn short_bound_fails_with_diagnostic() {
    let o = fpf(&["verify-paper", "--max-len", "8"]);
    assert!(!o.status.success());
    let s = stdout(&o);
    let line = s.lines().find(|l| l.contains(" 3 camel search")).unwrap();
    assert!(line.starts_with("FAIL") && line.contains("bound"), "{line}");
    assert_eq!(s.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 12);
}

#[test]
fn elimination_report_is_reproducible() {
    let dir = scratch("elim");
    let path = |k: usize| dir.join(format!("r{k}.txt"));
    let mut manifests = Vec::new();
    for k in 0..2 {
        let jobs = (k + 1).to_string();
        let o = fpf(&["eliminate", "--suite", "2-34", "--jobs", &jobs, "--report", path(k).to_str().unwrap()]);
        assert!(o.status.success());
        let m = std::fs::read_to_string(format!("{}.manifest", path(k).display())).unwrap();
        manifests.push(m.lines().filter(|l| !l.starts_with("wall time")).collect::<Vec<_>>().join("\n"));
    }
    let (a, b) = (std::fs::read(path(0)).unwrap(), std::fs::read(path(1)).unwrap());
    assert_eq!(a, b);
    assert_eq!(manifests[0], manifests[1]);
    let table = String::from_utf8(a).unwrap();
    assert!(table.starts_with("suite 2-34  candidates 42  admissible 18  survivors 0"), "{table}");
    let row = |name: &str| table.lines().find(|l| l.starts_with(&format!("{name:<14} "))).unwrap().to_string();
    assert!(row("b1").contains(" determinant "));
    assert!(row("D^2 b1").contains(" self_linking "));
    assert!(row("D^4 b1").contains(" fdtc_bound "));
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn search_and_lift_check() {
    let s = stdout(&fpf(&["search", "--track", "jellyfish", "--max-len", "12"]));
    assert!(s.contains("exhausted true") && s.contains("survivors 0"), "{s}");

    let s = stdout(&fpf(&["search", "--track", "camel-r", "--case", "A-rg", "--max-len", "12"]));
    assert!(s.contains("survivors 3"), "{s}");
    assert!(s.contains("match beta1") && s.contains("match beta2") && s.contains("match beta3"));

    let s = stdout(&fpf(&["lift-check", "--candidate", "1"]));
    assert!(s.contains("match beta1"), "{s}");
    let plain = s.split("lift composed").next().unwrap();
    assert!(plain.contains("fpf             false") && plain.contains("fixed lifts     4"));
    assert!(s.split("lift composed").nth(1).unwrap().contains("fpf             true"));

    let o = fpf(&["search", "--track", "torus"]);
    assert!(!o.status.success());
}

#[test]
fn automaton_output_parses_back() {
    let o = fpf(&["automaton"]);
    assert!(o.status.success());
    let (name, a) = parse_automaton(&stdout(&o)).unwrap();
    assert_eq!(name, "folding-33");
    assert_eq!(a, Automaton::figure());
    let s = stdout(&fpf(&["automaton", "--census", "--max-len", "6"]));
    assert!(s.contains("flagged          0"), "{s}");
}
