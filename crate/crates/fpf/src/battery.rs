//! The twelve verification criteria run by `verify-paper`.

use crate::fixtures::{FixtureError, FixtureSet};
use crate::parallel;
use fpf_core::automaton::{beta_ab, beta_ab_split, candidate_braids, curve_2_4, reducibility_witness, Automaton};
use fpf_core::braid::BraidWord;
use fpf_core::dynnikov::{braids_equal, dilatation_estimate, dynnikov_apply, random_laminations};
use fpf_core::elimination::{
    alpha, beta_n, beta_n_fdtc, camel_candidate_fdtc, eliminate_candidate, eliminate_t35, twist_family,
};
use fpf_core::fdtc::{boundary_rotation, fdtc_compose, Fdtc, DEFAULT_BRAID_BOUND};
use fpf_core::invariants::{
    determinant_of_closure, double_cover_alexander, is_irreducible_quartic, lspace_coefficient_check, self_linking,
};
use fpf_core::lift::fpf_verdict;
use fpf_core::poly::IntPoly;
use fpf_core::search::{match_candidate, Candidate, Rule, SearchConfig, SearchOutcome};
use fpf_core::strata::{enumerate_strata, even_boundary, lift_stratum, Stratum};
use fpf_core::track::NamedTrack;
use fpf_core::trackmap::{count_matrix, dilatation, is_perron_frobenius, transition_matrix};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::BTreeSet;
use std::time::{Duration, Instant};

pub const CRITERIA: [(u8, &str); 12] = [
    (1, "stratum enumeration"),
    (2, "jellyfish search"),
    (3, "camel search"),
    (4, "swapped rotation cases"),
    (5, "candidate verification"),
    (6, "elimination suite 2-34"),
    (7, "elimination suite 433"),
    (8, "elimination suite 6"),
    (9, "alexander pipeline"),
    (10, "folding automaton"),
    (11, "lift calculus"),
    (12, "property suites"),
];

pub const SEARCH_BOUNDS: [usize; 3] = [12, 16, 20];
/// Bound at which every camel case is exhausted.
pub const CAMEL_EXHAUSTIVE_BOUND: usize = 24;
pub const SWAPPED_BOUND: usize = 20;
pub const AUTOMATON_MAX_LEN: usize = 8;
pub const RANDOM_WORDS: usize = 1000;
pub const ABLATION_BOUND: usize = 10;
pub const ABLATION_NODES: u64 = 300_000;

#[derive(Debug, Clone)]
pub struct BatteryOptions {
    /// Replaces the bound sweeps of the searches with this single bound.
    pub max_len: Option<usize>,
    pub jobs: Option<usize>,
    pub seed: u64,
    pub fdtc_bound: Fdtc,
    pub fixtures: FixtureSet,
}

impl Default for BatteryOptions {
    fn default() -> Self {
        BatteryOptions {
            max_len: None,
            jobs: None,
            seed: fpf_core::dynnikov::DEFAULT_SEED,
            fdtc_bound: Fdtc::from_integer(DEFAULT_BRAID_BOUND),
            fixtures: FixtureSet::embedded(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CriterionResult {
    pub id: u8,
    pub title: &'static str,
    pub pass: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl CriterionResult {
    pub fn line(&self) -> String {
        format!("{} {:>2} {}: {}", if self.pass { "PASS" } else { "FAIL" }, self.id, self.title, self.detail)
    }
}

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond { Ok(()) } else { Err(msg()) }
}

fn search(opts: &BatteryOptions, track: NamedTrack, bound: usize) -> Result<SearchOutcome, String> {
    let mut cfg = SearchConfig::new(track);
    cfg.max_image_length = bound;
    parallel::search(&cfg, opts.jobs).map_err(|e| e.to_string())
}

fn bounds(opts: &BatteryOptions) -> Vec<usize> {
    match opts.max_len {
        Some(l) => vec![l],
        None => SEARCH_BOUNDS.to_vec(),
    }
}

fn not_exhausted(o: &SearchOutcome) -> String {
    format!("bound: search not exhausted at max-len {} ({} images cut)", o.max_image_length, o.bound_cuts)
}

pub fn expected_strata() -> Vec<Stratum> {
    ["(6;∅;∅)", "(4;∅;4)", "(4;∅;3^2)", "(2;∅;4^2)", "(2;∅;3^4)"].iter().map(|s| s.parse().unwrap()).collect()
}

fn c1(_: &BatteryOptions) -> Outcome {
    let t = Instant::now();
    let got = enumerate_strata(2, 1, 0, even_boundary);
    let el = t.elapsed();
    let want: BTreeSet<Stratum> = expected_strata().into_iter().collect();
    let have: BTreeSet<Stratum> = got.iter().cloned().collect();
    let show = |v: &BTreeSet<Stratum>| v.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ");
    ensure(el < Duration::from_secs(1), || format!("took {el:?}"))?;
    ensure(have == want, || {
        format!(
            "{} strata enumerated, expected 5; extra {}",
            have.len(),
            show(&have.difference(&want).cloned().collect())
        )
    })?;
    Ok(format!("5 strata: {}", show(&have)))
}

fn c2(opts: &BatteryOptions) -> Outcome {
    let mut parts = Vec::new();
    for b in bounds(opts) {
        let o = search(opts, NamedTrack::Jellyfish, b)?;
        ensure(o.survivors.is_empty(), || format!("{} survivors at max-len {b}", o.survivors.len()))?;
        ensure(o.exhausted, || not_exhausted(&o))?;
        parts.push(b.to_string());
    }
    Ok(format!("0 survivors, exhausted at max-len {}", parts.join("/")))
}

fn survivor_set(o: &SearchOutcome) -> Vec<String> {
    o.survivors.iter().map(|s| s.map.display().to_string()).collect()
}

fn c3(opts: &BatteryOptions) -> Outcome {
    let mut sets = Vec::new();
    let mut bs = bounds(opts);
    if opts.max_len.is_none() {
        bs.push(CAMEL_EXHAUSTIVE_BOUND);
    }
    for &b in &bs {
        let o = search(opts, NamedTrack::CamelR, b)?;
        let matched: BTreeSet<Candidate> = o.survivors.iter().map(|s| match_candidate(&s.map)).collect();
        let want: BTreeSet<Candidate> = (1..=3).map(Candidate::Beta).collect();
        if o.survivors.len() != 3 || matched != want {
            let why = format!("{} survivors at max-len {b}, matching {matched:?}", o.survivors.len());
            return Err(if o.exhausted { why } else { format!("{}; {why}", not_exhausted(&o)) });
        }
        if b == CAMEL_EXHAUSTIVE_BOUND {
            ensure(o.exhausted, || not_exhausted(&o))?;
        }
        sets.push(survivor_set(&o));
    }
    ensure(sets.windows(2).all(|w| w[0] == w[1]), || "survivor maps change with the bound".into())?;
    let tail = if opts.max_len.is_none() { format!(", exhausted at {CAMEL_EXHAUSTIVE_BOUND}") } else { String::new() };
    Ok(format!(
        "beta1 beta2 beta3 at max-len {}{tail}",
        bs.iter().map(|b| b.to_string()).collect::<Vec<_>>().join("/")
    ))
}

fn c4(opts: &BatteryOptions) -> Outcome {
    let mut cfg = SearchConfig::new(NamedTrack::CamelR);
    cfg.max_image_length = opts.max_len.unwrap_or(SWAPPED_BOUND);
    cfg.rotation_cases = Some(vec!["BCD-".into()]);
    let o = parallel::search(&cfg, opts.jobs).map_err(|e| e.to_string())?;
    ensure(!o.cases.is_empty(), || "no swapped rotation cases".into())?;
    for c in &o.cases {
        ensure(c.survivors.is_empty(), || format!("case {} has {} survivors", c.label, c.survivors.len()))?;
    }
    ensure(o.exhausted, || not_exhausted(&o))?;
    Ok(format!("{} swapped cases, 0 survivors, exhausted at max-len {}", o.cases.len(), cfg.max_image_length))
}

fn c5(opts: &BatteryOptions) -> Outcome {
    let mut parts = Vec::new();
    for (i, b) in candidate_braids().iter().enumerate() {
        let name = format!("beta{}", i + 1);
        let m = opts.fixtures.candidate_map(i).map_err(|e| e.to_string())?;
        let tm = transition_matrix(&m).map_err(|e| format!("{name}: {e}"))?;
        ensure(is_perron_frobenius(&tm), || format!("{name}: transition matrix not Perron-Frobenius"))?;
        let lam = dilatation(&tm).map_err(|e| format!("{name}: {e:?}"))?.mid();
        let g = dilatation_estimate(b, 200, None);
        ensure(g.exponential && (lam - g.rate).abs() < 1e-3, || {
            format!("{name}: matrix dilatation {lam:.6}, braid growth {:.6}", g.rate)
        })?;
        let plain = fpf_verdict(&m, false).map_err(|e| format!("{name}: {e}"))?;
        let twisted = fpf_verdict(&m, true).map_err(|e| format!("{name}: {e}"))?;
        ensure(!plain.fpf, || format!("{name} lifts to a fixed-point-free map"))?;
        ensure(twisted.fpf, || format!("D^2 {name} does not lift to a fixed-point-free map"))?;
        let fixed = plain.singularity_perm.fixed().len();
        ensure(fixed == 4, || format!("{name}: lift fixes {fixed} singularities, expected 4"))?;
        parts.push(format!("{name} {lam:.5}"));
    }
    Ok(format!("PF, dilatations {}, plain lifts fix 4, twisted lifts fpf", parts.join(", ")))
}

fn c6(opts: &BatteryOptions) -> Outcome {
    let report = parallel::suite("2-34", opts.fdtc_bound, opts.jobs).map_err(|e| e.to_string())?;
    let cs = camel_candidate_fdtc().map_err(|e| e.to_string())?;
    let mut dets = Vec::new();
    let mut off = Vec::new();
    for (i, (b, c)) in candidate_braids().iter().zip(cs).enumerate() {
        for cand in twist_family(&format!("b{}", i + 1), b, c, -1..=1) {
            let v = eliminate_candidate(&cand, opts.fdtc_bound).map_err(|e| e.to_string())?;
            if !v.admissible() {
                continue;
            }
            dets.push(format!("{}={}", v.name, v.determinant));
            if v.determinant != 5 && v.determinant != 9 {
                off.push(format!("{} has determinant {}", v.name, v.determinant));
            }
        }
    }
    let left: Vec<String> = report.survivors().map(|v| v.name.clone()).collect();
    ensure(left.is_empty(), || format!("not eliminated: {}", left.join(", ")))?;
    ensure(off.is_empty(), || format!("{}; all {} candidates eliminated", off.join(", "), report.verdicts.len()))?;
    Ok(format!("determinants {}; all {} candidates eliminated", dets.join(" "), report.verdicts.len()))
}

fn c7(opts: &BatteryOptions) -> Outcome {
    let d = BraidWord::full_twist(5);
    for n in 0..=10 {
        let v = eliminate_t35(&beta_n(n)).map_err(|e| e.to_string())?;
        ensure(v.determinant == n as u128 + 7, || format!("det b_{n} = {}, expected {}", v.determinant, n + 7))?;
        let sl = self_linking(&d.concat(&beta_n(n)).map_err(|e| e.to_string())?);
        ensure(sl == 25 + n as i64, || format!("sl(D^2 b_{n}) = {sl}, expected {}", 25 + n))?;
    }
    let r = parallel::suite("433", opts.fdtc_bound, opts.jobs).map_err(|e| e.to_string())?;
    let left: Vec<String> = r.survivors().map(|v| v.name.clone()).collect();
    ensure(left.is_empty(), || format!("not eliminated: {}", left.join(", ")))?;
    Ok(format!("det b_n = n+7, sl(D^2 b_n) = 25+n for n <= 10; {} admissible, all eliminated", r.admissible().count()))
}

fn c8(opts: &BatteryOptions) -> Outcome {
    let v = eliminate_t35(&alpha()).map_err(|e| e.to_string())?;
    ensure(v.determinant == 3, || format!("det of alpha closure is {}", v.determinant))?;
    let r = parallel::suite("6", opts.fdtc_bound, opts.jobs).map_err(|e| e.to_string())?;
    let left: Vec<String> = r.survivors().map(|v| v.name.clone()).collect();
    ensure(left.is_empty(), || format!("not eliminated: {}", left.join(", ")))?;
    Ok(format!("det alpha = 3; {} admissible, all eliminated", r.admissible().count()))
}

fn c9(_: &BatteryOptions) -> Outcome {
    let b = BraidWord::new(5, [1, 2, 3, 4].repeat(3)).unwrap();
    let p = double_cover_alexander(&b).map_err(|e| e.to_string())?;
    ensure(p == IntPoly::from_desc(&[1, -1, 1, -1, 1]), || format!("cover polynomial {p}"))?;
    ensure(lspace_coefficient_check(&p.to_laurent()), || "L-space coefficient check false".into())?;
    ensure(is_irreducible_quartic(&p).map_err(|e| e.to_string())?, || "quartic reducible".into())?;
    let t35 = BraidWord::new(3, [1, 2].repeat(5)).unwrap();
    let d = determinant_of_closure(&t35).map_err(|e| e.to_string())?;
    ensure(d == 1, || format!("det T(3,5) = {d}"))?;
    Ok(format!("cover polynomial {p}, irreducible, L-space shape; det T(3,5) = 1"))
}

fn c10(opts: &BatteryOptions) -> Outcome {
    let a = Automaton::figure();
    let r = parallel::census(&a, AUTOMATON_MAX_LEN, &candidate_braids(), opts.jobs);
    ensure(r.flagged.is_empty(), || format!("{} loops flagged", r.flagged.len()))?;
    ensure(r.decomposition_mismatch.is_empty(), || {
        format!("{} loops misread as beta products", r.decomposition_mismatch.len())
    })?;
    let c24 = curve_2_4();
    for x in 1..=3 {
        for y in 1..=3 {
            ensure(reducibility_witness(&beta_ab(x, y)).is_some(), || format!("no witness for beta({x},{y})"))?;
            let img = dynnikov_apply(&beta_ab_split(x, y), &c24).map_err(|e| e.to_string())?;
            ensure(img == c24, || format!("split beta({x},{y}) moves the {{2,4}} curve"))?;
        }
    }
    Ok(format!(
        "{} walks up to length {}: {} beta products, {} through camel, 0 flagged",
        r.loops, AUTOMATON_MAX_LEN, r.beta_products, r.through_camel
    ))
}

fn c11(opts: &BatteryOptions) -> Outcome {
    for (a, b) in [("(1;1^5;4)", "(2;∅;4^2)"), ("(1;1^5;3^2)", "(2;∅;3^4)"), ("(3;1^5;∅)", "(6;∅;∅)")] {
        let s: Stratum = a.parse().map_err(|e| format!("{e:?}"))?;
        let got = lift_stratum(&s).to_string();
        ensure(got == b, || format!("{a} lifts to {got}, expected {b}"))?;
    }
    for i in 0..3 {
        let m = opts.fixtures.candidate_map(i).map_err(|e| e.to_string())?;
        let c = boundary_rotation(&m).map_err(|e| e.to_string())?;
        ensure(c == Fdtc::from_integer(0), || format!("beta{} rotates the boundary by {c}", i + 1))?;
        for k in -3..=3 {
            for sign in [1, -1] {
                let got = fdtc_compose(c, k, sign);
                ensure(got == Fdtc::from_integer(k), || format!("c(D^{} b{}^{sign}) = {got}", 2 * k, i + 1))?;
                let bn = fdtc_compose(beta_n_fdtc(), k, sign);
                let want = Fdtc::from_integer(k) + Fdtc::new(sign, 2);
                ensure(bn == want, || format!("c(D^{} b_n^{sign}) = {bn}", 2 * k))?;
            }
        }
    }
    Ok("three lifted strata; c(D^2k b_i^±1) = k, c(D^2k b_n^±1) = k ± 1/2 for |k| <= 3".into())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..n as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect();
    BraidWord::new(n, letters).unwrap()
}

fn join(parts: &[&BraidWord]) -> BraidWord {
    let mut l = Vec::new();
    for p in parts {
        l.extend_from_slice(p.letters());
    }
    BraidWord::new(parts[0].strands(), l).unwrap()
}

/// Braid relations, inverse round trips, matrix multiplicativity and the
/// pruning ablation.
pub fn property_suite(opts: &BatteryOptions) -> Outcome {
    let n = 5;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let lams = random_laminations(n, 16, opts.seed);
    let w = |l: &[i32]| BraidWord::new(n, l.to_vec()).unwrap();
    for k in 0..RANDOM_WORDS {
        let u = random_word(&mut rng, n, 8);
        let v = random_word(&mut rng, n, 8);
        let i = rng.gen_range(1..n as i32 - 1);
        let j = rng.gen_range(1..n as i32);
        let eq = |a: BraidWord, b: BraidWord| braids_equal(&a, &b).map_err(|e| e.to_string());
        ensure(eq(join(&[&u, &w(&[i, i + 1, i]), &v]), join(&[&u, &w(&[i + 1, i, i + 1]), &v]))?, || {
            format!("word {k}: braid relation at {i} fails")
        })?;
        if (i - j).abs() >= 2 {
            ensure(eq(join(&[&u, &w(&[i, j]), &v]), join(&[&u, &w(&[j, i]), &v]))?, || {
                format!("word {k}: far commutation {i},{j} fails")
            })?;
        }
        ensure(eq(join(&[&u, &w(&[j, -j]), &v]), join(&[&u, &v]))?, || format!("word {k}: free cancellation fails"))?;
        ensure(!eq(join(&[&u, &w(&[i, i + 1]), &v]), join(&[&u, &w(&[i + 1, i]), &v]))?, || {
            format!("word {k}: adjacent generators commute")
        })?;
        let x = &lams[k % lams.len()];
        let y = dynnikov_apply(&u, x).map_err(|e| e.to_string())?;
        let back = dynnikov_apply(&u.inverse(), &y).map_err(|e| e.to_string())?;
        ensure(&back == x, || format!("word {k}: inverse does not undo {u}"))?;
    }
    let maps = (0..3).map(|i| opts.fixtures.candidate_map(i)).collect::<Result<Vec<_>, FixtureError>>();
    let maps = maps.map_err(|e| e.to_string())?;
    for (a, f) in maps.iter().enumerate() {
        for (b, g) in maps.iter().enumerate() {
            let fg = f.compose(g).map_err(|e| e.to_string())?;
            ensure(count_matrix(&fg) == count_matrix(g).mul(&count_matrix(f)), || {
                format!("M(beta{} o beta{}) is not the product", a + 1, b + 1)
            })?;
        }
    }
    let ablation = ablation_soundness(opts)?;
    Ok(format!("{RANDOM_WORDS} random words; 9 compositions multiply; {ablation}"))
}

/// Survivors with one rule switched off are among the survivors with all rules on.
pub fn ablation_soundness(opts: &BatteryOptions) -> Outcome {
    let cfg = |off: Option<Rule>| {
        let mut c = SearchConfig::new(NamedTrack::CamelR);
        c.max_image_length = ABLATION_BOUND;
        c.rotation_cases = Some(vec!["A-rg".into()]);
        c.max_nodes = Some(ABLATION_NODES);
        c.disabled.extend(off);
        c
    };
    let base = parallel::search(&cfg(None), opts.jobs).map_err(|e| e.to_string())?;
    let keep: BTreeSet<String> = survivor_set(&base).into_iter().collect();
    let mut extras = 0;
    for r in Rule::ALL {
        let o = parallel::search(&cfg(Some(r)), opts.jobs).map_err(|e| e.to_string())?;
        for s in survivor_set(&o) {
            ensure(keep.contains(&s), || format!("{r} off: extra survivor\n{s}"))?;
        }
        let done: usize = o.cases.iter().map(|c| c.completions.len()).sum();
        extras += done.saturating_sub(keep.len());
    }
    Ok(format!("ablation sound ({extras} extra completions rejected)"))
}

fn c12(opts: &BatteryOptions) -> Outcome {
    property_suite(opts)
}

pub fn run_criterion(id: u8, opts: &BatteryOptions) -> CriterionResult {
    let title = CRITERIA.iter().find(|c| c.0 == id).map(|c| c.1).unwrap_or("unknown");
    let t = Instant::now();
    let r = match id {
        1 => c1(opts),
        2 => c2(opts),
        3 => c3(opts),
        4 => c4(opts),
        5 => c5(opts),
        6 => c6(opts),
        7 => c7(opts),
        8 => c8(opts),
        9 => c9(opts),
        10 => c10(opts),
        11 => c11(opts),
        12 => c12(opts),
        _ => Err(format!("no criterion {id}")),
    };
    let (pass, detail) = match r {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    CriterionResult { id, title, pass, detail, elapsed: t.elapsed() }
}

/// Check the fixtures, then run every criterion in order.
pub fn run_battery(opts: &BatteryOptions) -> Result<Vec<CriterionResult>, FixtureError> {
    opts.fixtures.check()?;
    Ok(CRITERIA.iter().map(|&(id, _)| run_criterion(id, opts)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cheap_criteria() {
        let o = BatteryOptions::default();
        for id in [9, 11] {
            let r = run_criterion(id, &o);
            assert!(r.pass, "{}", r.line());
        }
        assert!(!run_criterion(13, &o).pass);
    }

    #[test]
    fn short_bound_is_reported() {
        let o = BatteryOptions { max_len: Some(8), ..Default::default() };
        let r = run_criterion(3, &o);
        assert!(!r.pass);
        assert!(r.detail.starts_with("bound"), "{}", r.detail);
    }
}
