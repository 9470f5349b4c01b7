use clap::{Args, Parser, Subcommand};
use fpf::battery::{run_battery, BatteryOptions, AUTOMATON_MAX_LEN};
use fpf::braid_text::parse_braid;
use fpf::fixtures::FixtureSet;
use fpf::manifest::RunManifest;
use fpf::report::{self, parse_fdtc};
use fpf::{automatonfile, parallel};
use fpf_core::automaton::{candidate_braids, Automaton};
use fpf_core::dynnikov::DEFAULT_SEED;
use fpf_core::fdtc::Fdtc;
use fpf_core::search::{Rule, SearchConfig, DEFAULT_MAX_IMAGE_LENGTH};
use fpf_core::track::NamedTrack;
use fpf_core::trackmap::TrackMap;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

#[derive(Parser)]
#[command(name = "fpf", version, about = "Train track search and braid elimination on the five-marked disk")]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct Global {
    /// Seed for the randomised property checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Image length bound for searches, walk length for the automaton.
    #[arg(long, global = true)]
    max_len: Option<usize>,
    /// Write the report to this file and a manifest next to it.
    #[arg(long, global = true)]
    emit: Option<PathBuf>,
    /// Strict bound on |c| for elimination candidates, as n or p/q.
    #[arg(long, global = true, value_parser = parse_fdtc, default_value = "2")]
    fdtc_bound: Fdtc,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run all twelve verification criteria.
    VerifyPaper {
        /// Load fixtures from a directory instead of the built-in copies.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Search a named track for maps whose lift could be fixed-point free.
    Search {
        /// jellyfish, camel-l, camel-r, enoki-l or enoki-r
        #[arg(long, value_parser = parse_track)]
        track: NamedTrack,
        /// Restrict to rotation cases with these labels or label prefixes.
        #[arg(long = "case")]
        cases: Vec<String>,
        /// Switch off pruning rules, e.g. --disable P1 --disable P4.
        #[arg(long, value_parser = parse_rule)]
        disable: Vec<Rule>,
        /// Node budget per rotation case.
        #[arg(long)]
        max_nodes: Option<u64>,
    },
    /// Print the folding automaton, or census its closed walks.
    Automaton {
        #[arg(long)]
        census: bool,
    },
    /// Run an elimination suite against T(3,5).
    Eliminate {
        /// 433, 6 or 2-34
        #[arg(long)]
        suite: String,
        /// Write the table here (same as --emit).
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Invariants of a braid closure.
    Invariants {
        /// Braid word, e.g. "1 2 3 4 ^3" or "D2 (4 3)^2 -1".
        word: String,
        #[arg(long)]
        strands: Option<usize>,
    },
    /// Transition data and lifts of a candidate or a map file.
    LiftCheck {
        /// Candidate 1, 2 or 3.
        #[arg(long, conflicts_with = "map")]
        candidate: Option<usize>,
        #[arg(long)]
        map: Option<PathBuf>,
        /// Track the map file is written on.
        #[arg(long, value_parser = parse_track, default_value = "camel-r")]
        track: NamedTrack,
    },
}

fn parse_track(s: &str) -> Result<NamedTrack, String> {
    NamedTrack::from_slug(s).ok_or_else(|| format!("unknown track {s:?}"))
}

fn parse_rule(s: &str) -> Result<Rule, String> {
    Rule::ALL.into_iter().find(|r| r.to_string().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown rule {s:?}"))
}

struct Run {
    report: String,
    outcome: String,
    config: Vec<(String, String)>,
    ok: bool,
}

fn cfg(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn emit(path: &Path, command: &str, run: &Run, fixtures: &FixtureSet, started: Instant) -> Result<(), String> {
    let mut m = RunManifest::new(command, run.config.clone(), fixtures);
    m.finish(&run.outcome, &run.report, started.elapsed());
    std::fs::write(path, &run.report).map_err(|e| format!("writing {}: {e}", path.display()))?;
    let mp = PathBuf::from(format!("{}.manifest", path.display()));
    std::fs::write(&mp, m.render()).map_err(|e| format!("writing {}: {e}", mp.display()))
}

fn verify(g: &Global, dir: Option<PathBuf>) -> Result<Run, String> {
    let fixtures = match &dir {
        Some(d) => FixtureSet::from_dir(d).map_err(|e| e.to_string())?,
        None => FixtureSet::embedded(),
    };
    let opts = BatteryOptions { max_len: g.max_len, jobs: g.jobs, seed: g.seed, fdtc_bound: g.fdtc_bound, fixtures };
    let results = run_battery(&opts).map_err(|e| format!("fixture validation failed in {}: {e}", e.module()))?;
    let mut report = String::new();
    for r in &results {
        let line = r.line();
        println!("{line}");
        report.push_str(&line);
        report.push('\n');
    }
    let first = results.iter().find(|r| !r.pass);
    let outcome = match first {
        Some(r) => format!("criterion {} ({}) failed: {}", r.id, r.title, r.detail),
        None => "all criteria pass".into(),
    };
    let passed = results.iter().filter(|r| r.pass).count();
    Ok(Run {
        outcome: format!("{passed}/{} pass; {outcome}", results.len()),
        ok: first.is_none(),
        report,
        config: cfg(&[
            ("max_len", format!("{:?}", g.max_len)),
            ("seed", g.seed.to_string()),
            ("fdtc_bound", report::fdtc_str(g.fdtc_bound)),
            ("fixtures", dir.map(|d| d.display().to_string()).unwrap_or_else(|| "embedded".into())),
        ]),
    })
}

fn run(cli: &Cli) -> Result<Run, String> {
    let g = &cli.global;
    match &cli.cmd {
        Cmd::VerifyPaper { fixtures } => verify(g, fixtures.clone()),
        Cmd::Search { track, cases, disable, max_nodes } => {
            let mut c = SearchConfig::new(*track);
            c.max_image_length = g.max_len.unwrap_or(DEFAULT_MAX_IMAGE_LENGTH);
            c.rotation_cases = if cases.is_empty() { None } else { Some(cases.clone()) };
            c.disabled.extend(disable.iter().copied());
            c.max_nodes = *max_nodes;
            let o = parallel::search(&c, g.jobs).map_err(|e| e.to_string())?;
            let mut rep = report::search_summary(&o);
            if !o.survivors.is_empty() {
                rep.push_str("\n# survivor maps\n");
                rep.push_str(&report::survivors_text(&o));
            }
            let outcome = format!("{} survivors, exhausted {}", o.survivors.len(), o.exhausted);
            Ok(Run {
                report: rep,
                outcome,
                ok: true,
                config: cfg(&[
                    ("track", track.slug().into()),
                    ("max_len", c.max_image_length.to_string()),
                    ("cases", cases.join(",")),
                    ("disabled", disable.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")),
                    ("max_nodes", format!("{max_nodes:?}")),
                ]),
            })
        }
        Cmd::Automaton { census } => {
            let a = Automaton::figure();
            if *census {
                let len = g.max_len.unwrap_or(AUTOMATON_MAX_LEN);
                let r = parallel::census(&a, len, &candidate_braids(), g.jobs);
                Ok(Run {
                    report: report::census_text(&a, &r),
                    outcome: format!("{} walks, {} flagged", r.loops, r.flagged.len()),
                    ok: r.ok(),
                    config: cfg(&[("census", "true".into()), ("max_len", len.to_string())]),
                })
            } else {
                Ok(Run {
                    report: automatonfile::write_automaton("folding-33", &a),
                    outcome: format!("{} nodes, {} edges", a.nodes.len(), a.edges.len()),
                    ok: true,
                    config: cfg(&[("census", "false".into())]),
                })
            }
        }
        Cmd::Eliminate { suite, .. } => {
            let r = parallel::suite(suite, g.fdtc_bound, g.jobs).map_err(|e| e.to_string())?;
            let left = r.survivors().count();
            Ok(Run {
                report: report::elimination_table(&r),
                outcome: format!("{} candidates, {} admissible, {left} not eliminated", r.verdicts.len(), r.admissible().count()),
                ok: left == 0,
                config: cfg(&[("suite", suite.clone()), ("fdtc_bound", report::fdtc_str(g.fdtc_bound))]),
            })
        }
        Cmd::Invariants { word, strands } => {
            let rep = if word.trim().is_empty() && strands.is_none() {
                report::unknot_text()
            } else {
                let b = parse_braid(word, *strands).map_err(|e| e.to_string())?;
                report::invariants_text(&b).map_err(|e| e.to_string())?
            };
            Ok(Run {
                report: rep,
                outcome: "ok".into(),
                ok: true,
                config: cfg(&[("word", word.clone()), ("strands", format!("{strands:?}"))]),
            })
        }
        Cmd::LiftCheck { candidate, map, track } => {
            let (m, source) = match (candidate, map) {
                (Some(i), _) => {
                    if !(1..=3).contains(i) {
                        return Err(format!("candidate must be 1, 2 or 3, got {i}"));
                    }
                    let m = FixtureSet::embedded().candidate_map(i - 1).map_err(|e| e.to_string())?;
                    (m, format!("beta{i}"))
                }
                (None, Some(p)) => {
                    let text = std::fs::read_to_string(p).map_err(|e| format!("reading {}: {e}", p.display()))?;
                    let m = TrackMap::parse(Arc::new(track.track()), &text).map_err(|e| e.to_string())?;
                    (m, p.display().to_string())
                }
                (None, None) => return Err("give --candidate or --map".into()),
            };
            let rep = report::lift_text(&m).map_err(|e| e.to_string())?;
            Ok(Run { report: rep, outcome: "ok".into(), ok: true, config: cfg(&[("map", source)]) })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let name = match &cli.cmd {
        Cmd::VerifyPaper { .. } => "verify-paper",
        Cmd::Search { .. } => "search",
        Cmd::Automaton { .. } => "automaton",
        Cmd::Eliminate { .. } => "eliminate",
        Cmd::Invariants { .. } => "invariants",
        Cmd::LiftCheck { .. } => "lift-check",
    };
    let r = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    if !matches!(cli.cmd, Cmd::VerifyPaper { .. }) {
        print!("{}", r.report);
    }
    let target = match &cli.cmd {
        Cmd::Eliminate { report: Some(p), .. } => Some(p.clone()),
        _ => cli.global.emit.clone(),
    };
    if let Some(p) = target {
        if let Err(e) = emit(&p, name, &r, &FixtureSet::embedded(), started) {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    if r.ok {
        ExitCode::SUCCESS
    } else {
        eprintln!("{}", r.outcome);
        ExitCode::FAILURE
    }
}
