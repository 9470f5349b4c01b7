//! Plain-text reports. Nothing here depends on timing or thread count, so
//! equal inputs give byte-identical output.

use fpf_core::automaton::{Automaton, PassageReport};
use fpf_core::braid::{strand_permutation, BraidWord};
use fpf_core::elimination::{SuiteReport, Verdict};
use fpf_core::fdtc::Fdtc;
use fpf_core::invariants::{
    alexander_of_closure, determinant_of_link, double_cover_alexander, lspace_coefficient_check, self_linking,
    InvariantError,
};
use fpf_core::lift::{fpf_verdict, LiftError, LiftReport};
use fpf_core::search::{match_candidate, Rule, SearchOutcome};
use fpf_core::trackmap::{dilatation, is_perron_frobenius, transition_matrix, TrackMap};
use std::fmt::Write;

pub fn fdtc_str(c: Fdtc) -> String {
    if c.is_integer() {
        c.to_integer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// `3/2`, `-1/3` or an integer.
pub fn parse_fdtc(s: &str) -> Result<Fdtc, String> {
    let bad = || format!("expected an integer or p/q, got {s:?}");
    match s.split_once('/') {
        Some((p, q)) => {
            let (p, q): (i64, i64) = (p.trim().parse().map_err(|_| bad())?, q.trim().parse().map_err(|_| bad())?);
            if q == 0 {
                return Err(bad());
            }
            Ok(Fdtc::new(p, q))
        }
        None => Ok(Fdtc::from_integer(s.trim().parse().map_err(|_| bad())?)),
    }
}

fn lift_lines(out: &mut String, r: &LiftReport, indent: &str) {
    let perm: Vec<String> =
        r.singularity_perm.map.iter().map(|((p, s), (q, t))| format!("{p}.{s}->{q}.{t}")).collect();
    let _ = writeln!(out, "{indent}toggle          {}", r.toggle);
    let _ = writeln!(out, "{indent}lifted trace    {}", r.lifted_trace);
    let _ = writeln!(out, "{indent}singularities   {}", perm.join(" "));
    let _ = writeln!(out, "{indent}fixed lifts     {}", r.singularity_perm.fixed().len());
    let _ = writeln!(out, "{indent}case            {}", r.case_tag);
    let fm = if r.fixed_marked.is_empty() { "-".to_string() } else { r.fixed_marked.join(" ") };
    let _ = writeln!(out, "{indent}fixed marked    {fm}");
    let _ = writeln!(out, "{indent}lifted stratum  {}", r.lifted_stratum);
    let _ = writeln!(out, "{indent}fpf             {}", r.fpf);
}

pub fn search_summary(o: &SearchOutcome) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "track {}  max image length {}", o.track, o.max_image_length);
    let _ = writeln!(s, "exhausted {}  bound cuts {}", o.exhausted, o.bound_cuts);
    let _ = writeln!(s, "\n{:<16} {:>10} {:>8} {:>9} {:>6}", "case", "nodes", "cuts", "survivors", "done");
    for c in &o.cases {
        let _ = writeln!(
            s,
            "{:<16} {:>10} {:>8} {:>9} {:>6}",
            c.label,
            c.nodes,
            c.bound_cuts,
            c.survivors.len(),
            if c.exhausted { "yes" } else { "no" }
        );
    }
    let _ = writeln!(s, "\n{:<4} {:<22} {:>10}", "rule", "", "pruned");
    for r in Rule::ALL {
        let _ = writeln!(s, "{:<4} {:<22} {:>10}", r.to_string(), r.describe(), o.pruned_counts.get(&r).copied().unwrap_or(0));
    }
    let _ = writeln!(s, "\nsurvivors {}", o.survivors.len());
    for (k, sv) in o.survivors.iter().enumerate() {
        let _ = writeln!(s, "\n[{k}] case {}  match {}  dilatation {:.6}", sv.case, match_candidate(&sv.map), sv.dilatation);
        for line in sv.map.display().to_string().lines() {
            let _ = writeln!(s, "    {line}");
        }
        lift_lines(&mut s, &sv.report, "    ");
    }
    s
}

/// Survivor maps in the map file format, one block per survivor.
pub fn survivors_text(o: &SearchOutcome) -> String {
    let mut s = String::new();
    for sv in &o.survivors {
        let _ = writeln!(s, "# case {} match {}", sv.case, match_candidate(&sv.map));
        s.push_str(&sv.map.display().to_string());
        s.push('\n');
    }
    s
}

fn verdict_row(v: &Verdict, braid_width: usize) -> String {
    let c = v.fdtc.map(fdtc_str).unwrap_or_else(|| "?".into());
    let alex = v.alexander.as_ref().map(|p| p.to_string()).unwrap_or_else(|| "(link)".into());
    format!(
        "{:<14} {:>6} {:<12} {:>5} {:>4} {:>4}  {:<w$}  {}",
        v.name,
        c,
        v.eliminated_by.to_string(),
        if v.knot { "knot" } else { "link" },
        v.determinant,
        v.self_linking,
        v.braid.to_string(),
        alex,
        w = braid_width
    )
}

pub fn elimination_table(r: &SuiteReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "suite {}  candidates {}  admissible {}  survivors {}", r.name, r.verdicts.len(), r.admissible().count(), r.survivors().count());
    let w = r.verdicts.iter().map(|v| v.braid.to_string().len()).max().unwrap_or(0).max(5);
    let _ = writeln!(
        s,
        "{:<14} {:>6} {:<12} {:>5} {:>4} {:>4}  {:<w$}  {}",
        "name", "c", "filter", "type", "det", "sl", "braid", "alexander"
    );
    for v in &r.verdicts {
        let _ = writeln!(s, "{}", verdict_row(v, w));
    }
    s
}

pub fn census_text(a: &Automaton, r: &PassageReport) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "closed walks up to length {}: {}", r.max_len, r.loops);
    let _ = writeln!(s, "trivial          {}", r.trivial);
    let _ = writeln!(s, "through camel    {}", r.through_camel);
    let _ = writeln!(s, "reducible        {}", r.reducible);
    let _ = writeln!(s, "beta products    {}", r.beta_products);
    let _ = writeln!(s, "single corner    {}", r.not_beta);
    let _ = writeln!(s, "mismatches       {}", r.decomposition_mismatch.len());
    let _ = writeln!(s, "flagged          {}", r.flagged.len());
    for lp in &r.flagged {
        let _ = writeln!(s, "  at {}: {}", a.nodes[lp.base].name, lp.word);
    }
    let mut hits: Vec<String> =
        r.candidate_hits.iter().map(|(i, lp)| format!("  b{} at {}: {}", i + 1, a.nodes[lp.base].name, lp.word)).collect();
    hits.sort();
    hits.dedup();
    let _ = writeln!(s, "candidate loops  {}", hits.len());
    for h in hits {
        let _ = writeln!(s, "{h}");
    }
    s
}

/// Invariants of the closure of `b`.
pub fn invariants_text(b: &BraidWord) -> Result<String, InvariantError> {
    let mut s = String::new();
    let p = strand_permutation(b);
    let cycles: Vec<String> = p
        .cycles()
        .iter()
        .map(|c| format!("({})", c.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(" ")))
        .collect();
    let _ = writeln!(s, "braid           {b}");
    let _ = writeln!(s, "strands         {}", b.strands());
    let _ = writeln!(s, "permutation     {}", cycles.join(""));
    let _ = writeln!(s, "components      {}", p.cycle_count());
    let _ = writeln!(s, "exponent sum    {}", b.exponent_sum());
    let _ = writeln!(s, "self-linking    {}", self_linking(b));
    match alexander_of_closure(b) {
        Ok(a) => {
            let det = a.eval_i128(-1).map(|d| d.unsigned_abs());
            let _ = writeln!(s, "determinant     {}", det.map(|d| d.to_string()).unwrap_or_else(|| "-".into()));
            let _ = writeln!(s, "alexander       {}", a.normalize_low());
            let _ = writeln!(s, "lspace check    {}", lspace_coefficient_check(&a));
        }
        Err(InvariantError::NotAKnot { .. }) => {
            let det = determinant_of_link(b).map(|d| d.to_string()).unwrap_or_else(|| "-".into());
            let _ = writeln!(s, "determinant     {det}");
            let _ = writeln!(s, "alexander       - (link)");
            let _ = writeln!(s, "lspace check    -");
        }
        Err(e) => return Err(e),
    }
    match double_cover_alexander(b) {
        Ok(q) => {
            let _ = writeln!(s, "cover alexander {q}");
            let _ = writeln!(s, "cover lspace    {}", lspace_coefficient_check(&q.to_laurent()));
        }
        Err(_) => {
            let _ = writeln!(s, "cover alexander -");
        }
    }
    Ok(s)
}

/// The empty word with no strand count: the closure is read as the unknot.
pub fn unknot_text() -> String {
    let mut s = String::new();
    for (k, v) in [
        ("braid", "e"),
        ("strands", "1"),
        ("permutation", "(1)"),
        ("components", "1"),
        ("exponent sum", "0"),
        ("self-linking", "-1"),
        ("determinant", "1"),
        ("alexander", "1"),
        ("lspace check", "-"),
        ("cover alexander", "1"),
    ] {
        let _ = writeln!(s, "{k:<15} {v}");
    }
    s
}

/// Transition data and both lifts of a map.
pub fn lift_text(m: &TrackMap) -> Result<String, LiftError> {
    let mut s = String::new();
    let _ = writeln!(s, "track {}  match {}", m.track.name, match_candidate(m));
    for line in m.display().to_string().lines() {
        let _ = writeln!(s, "  {line}");
    }
    if let Ok(tm) = transition_matrix(m) {
        let _ = writeln!(s, "perron-frobenius {}", is_perron_frobenius(&tm));
        if let Ok(l) = dilatation(&tm) {
            let _ = writeln!(s, "dilatation       {:.9}", l.mid());
        }
    }
    for toggle in [false, true] {
        let r = fpf_verdict(m, toggle)?;
        let _ = writeln!(s, "\nlift {}", if toggle { "composed with the full twist" } else { "plain" });
        lift_lines(&mut s, &r, "  ");
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_roundtrip() {
        for t in ["2", "-1/3", "3/2", "0"] {
            assert_eq!(fdtc_str(parse_fdtc(t).unwrap()), t);
        }
        assert_eq!(fdtc_str(parse_fdtc(" 4/2 ").unwrap()), "2");
        assert!(parse_fdtc("1/0").is_err());
        assert!(parse_fdtc("x").is_err());
    }

    #[test]
    fn torus_knot_invariants() {
        let b = BraidWord::new(5, [1, 2, 3, 4].repeat(3)).unwrap();
        let s = invariants_text(&b).unwrap();
        assert!(s.contains("cover alexander t^4 - t^3 + t^2 - t + 1"), "{s}");
        assert!(s.contains("cover lspace    true"));
        let e = invariants_text(&BraidWord::identity(2)).unwrap();
        assert!(e.contains("components      2") && e.contains("determinant     -"), "{e}");
        assert!(unknot_text().contains("determinant     1"));
    }
}
