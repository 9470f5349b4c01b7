//! Acceptance battery: one PASS/FAIL line per criterion, then independent
//! oracles for the numbers the criteria rely on.
//!
//! Criteria listed in KNOWN_FAILURES are printed as FAIL and do not fail the
//! test; any other failure does, and so does a known failure that starts
//! passing.

use fpf::battery::{run_battery, BatteryOptions};
use fpf::fixtures::FixtureSet;
use fpf_core::automaton::candidate_braids;
use fpf_core::braid::{strand_permutation, BraidWord};
use fpf_core::elimination::{beta_n, eliminate_t35, run_theorem_suite, t35_alexander, t35_control, SUITES};
use fpf_core::invariants::alexander_of_closure;
use fpf_core::strata::{enumerate_strata, even_boundary, Stratum};
use fpf_core::trackmap::{dilatation, transition_matrix};
use std::process::ExitCode;

const KNOWN_FAILURES: [(u8, &str); 2] = [
    (
        1,
        "Euler-Poincare gives 8 strata with even boundary prongs; the expected list has 5 and omits \
         (2;∅;6), (2;∅;5,3), (2;∅;4,3^2)",
    ),
    (6, "the closure of beta3^{±1} has determinant 13, outside {5, 9}; every candidate is still eliminated"),
];

/// Fox colouring matrix of a braid closure; `|det|` of a first minor is the
/// determinant of the knot.
fn fox_determinant(b: &BraidWord) -> i128 {
    let n = b.strands();
    // arc currently occupying each position, arcs merged at the closure
    let mut at: Vec<usize> = (0..n).collect();
    let mut arcs = n;
    let mut rows: Vec<(usize, usize, usize)> = Vec::new();
    for &l in b.letters() {
        let i = l.unsigned_abs() as usize - 1;
        let (left, right) = (at[i], at[i + 1]);
        // the strand leaving position i is over for positive letters
        let (over, under) = if l > 0 { (left, right) } else { (right, left) };
        let fresh = arcs;
        arcs += 1;
        rows.push((over, under, fresh));
        // the strands trade places; the under strand continues on a fresh arc
        if l > 0 {
            at[i + 1] = over;
            at[i] = fresh;
        } else {
            at[i] = over;
            at[i + 1] = fresh;
        }
    }
    let mut parent: Vec<usize> = (0..arcs).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (k, &a) in at.iter().enumerate() {
        let (x, y) = (find(&mut parent, a), find(&mut parent, k));
        parent[x] = y;
    }
    let mut ids = std::collections::BTreeMap::new();
    for a in 0..arcs {
        let r = find(&mut parent, a);
        let next = ids.len();
        ids.entry(r).or_insert(next);
    }
    let cols = ids.len();
    let mut m = vec![vec![0i128; cols]; rows.len()];
    for (r, &(o, u, f)) in rows.iter().enumerate() {
        let (o, u, f) = (ids[&find(&mut parent, o)], ids[&find(&mut parent, u)], ids[&find(&mut parent, f)]);
        m[r][o] += 2;
        m[r][u] -= 1;
        m[r][f] -= 1;
    }
    assert_eq!(rows.len(), cols, "every arc of a knot diagram ends at a crossing");
    let minor: Vec<Vec<i128>> = m[1..].iter().map(|r| r[1..].to_vec()).collect();
    bareiss(minor).abs()
}

fn bareiss(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// `(t^{pq} − 1)(t − 1) / ((t^p − 1)(t^q − 1))`, ascending coefficients.
fn torus_alexander(p: usize, q: usize) -> Vec<i128> {
    let mul = |a: &[i128], b: &[i128]| {
        let mut c = vec![0; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                c[i + j] += x * y;
            }
        }
        c
    };
    let xm1 = |k: usize| {
        let mut v = vec![0i128; k + 1];
        v[0] = -1;
        v[k] = 1;
        v
    };
    let mut num = mul(&xm1(p * q), &xm1(1));
    let den = mul(&xm1(p), &xm1(q));
    let mut quo = vec![0i128; num.len() - den.len() + 1];
    for k in (0..quo.len()).rev() {
        let c = num[k + den.len() - 1] / den[den.len() - 1];
        quo[k] = c;
        for (j, d) in den.iter().enumerate() {
            num[k + j] -= c * d;
        }
    }
    assert!(num.iter().all(|&x| x == 0), "exact division");
    quo
}

fn power_iteration(rows: &[Vec<i128>]) -> f64 {
    let n = rows.len();
    let mut v = vec![1.0f64; n];
    let mut lam = 0.0;
    for _ in 0..2000 {
        let w: Vec<f64> = (0..n).map(|j| (0..n).map(|i| rows[i][j] as f64 * v[i]).sum()).collect();
        let s: f64 = w.iter().sum();
        lam = s / v.iter().sum::<f64>();
        v = w.iter().map(|x| x / s).collect();
    }
    lam
}

/// Brute-force strata of the genus-two surface with one boundary circle and
/// even boundary prongs: `b + Σ(k − 2) = 6`.
fn brute_strata() -> Vec<String> {
    let mut out = Vec::new();
    for b in (2..=6).step_by(2) {
        let rest = 6 - b;
        // interior prong counts ≥ 3, as non-increasing lists
        fn go(rest: usize, max: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if rest == 0 {
                out.push(cur.clone());
                return;
            }
            for e in (1..=rest.min(max)).rev() {
                cur.push(e as u32 + 2);
                go(rest - e, e, cur, out);
                cur.pop();
            }
        }
        let mut lists = Vec::new();
        go(rest, rest, &mut Vec::new(), &mut lists);
        for l in lists {
            out.push(Stratum::new(vec![b as u32], vec![], l).to_string());
        }
    }
    out.sort();
    out
}

fn oracles() -> Vec<(bool, String)> {
    let mut out = Vec::new();

    let mut knots = 0;
    let mut bad = Vec::new();
    for s in SUITES {
        for v in run_theorem_suite(s).unwrap().verdicts.iter().filter(|v| v.knot) {
            knots += 1;
            let f = fox_determinant(&v.braid) as u128;
            if f != v.determinant {
                bad.push(format!("{} {}: colouring {f}, pipeline {}", s, v.name, v.determinant));
            }
        }
    }
    out.push((bad.is_empty(), format!("colouring determinants agree on {knots} suite knots {bad:?}")));

    let b3 = fox_determinant(&candidate_braids()[2]);
    let b3i = fox_determinant(&candidate_braids()[2].inverse());
    out.push((b3 == 13 && b3i == 13, format!("colouring determinant of beta3 and its inverse: {b3}, {b3i}")));

    let odd: Vec<u128> = (0..=10).step_by(2).map(|n| fox_determinant(&beta_n(n)) as u128).collect();
    out.push((odd == [7, 9, 11, 13, 15, 17], format!("colouring determinants of b_0, b_2, .., b_10: {odd:?}")));

    let want = torus_alexander(3, 5);
    let t35 = BraidWord::new(3, [1, 2].repeat(5)).unwrap();
    let got: Vec<i128> = (0..=8).map(|e| alexander_of_closure(&t35).unwrap().coeff(e)).collect();
    let stab: Vec<i128> = (0..=8).map(|e| alexander_of_closure(&t35_control()).unwrap().coeff(e)).collect();
    let lib: Vec<i128> = (0..=8).map(|e| t35_alexander().coeff(e)).collect();
    out.push((
        got == want && stab == want && lib == want,
        format!("T(3,5) alexander from the cyclotomic formula {want:?}"),
    ));
    let c = eliminate_t35(&t35_control()).unwrap();
    out.push((!c.eliminated(), "stabilised T(3,5) is not eliminated by any filter".into()));

    let f = FixtureSet::embedded();
    let mut lams = Vec::new();
    let mut ok = true;
    for i in 0..3 {
        let m = f.candidate_map(i).unwrap();
        let tm = transition_matrix(&m).unwrap();
        let p = power_iteration(&tm.rows());
        let e = dilatation(&tm).unwrap().mid();
        ok &= (p - e).abs() < 1e-6;
        lams.push(format!("{p:.6}"));
    }
    out.push((ok, format!("power iteration dilatations {}", lams.join(" "))));

    let perms: Vec<bool> = candidate_braids().iter().map(|b| strand_permutation(b).is_single_cycle()).collect();
    out.push((perms.iter().all(|&x| x), "candidate closures are knots".into()));

    let brute = brute_strata();
    let lib: Vec<String> = enumerate_strata(2, 1, 0, even_boundary).iter().map(|s| s.to_string()).collect();
    let mut lib_sorted = lib.clone();
    lib_sorted.sort();
    out.push((brute == lib_sorted, format!("brute-force strata agree with the enumeration: {}", brute.join(" "))));

    out
}

fn main() -> ExitCode {
    println!("acceptance battery");
    let results = match run_battery(&BatteryOptions::default()) {
        Ok(r) => r,
        Err(e) => {
            println!("FAIL fixtures: {e}");
            return ExitCode::FAILURE;
        }
    };
    let mut unexpected = Vec::new();
    for r in &results {
        println!("{}  [{:.1}s]", r.line(), r.elapsed.as_secs_f64());
        let known = KNOWN_FAILURES.iter().any(|(id, _)| *id == r.id);
        if r.pass == known {
            unexpected.push(r.id);
        }
    }
    println!("\noracles");
    let mut oracle_fail = false;
    for (ok, msg) in oracles() {
        println!("{} {msg}", if ok { "ok  " } else { "FAIL" });
        oracle_fail |= !ok;
    }
    println!("\nknown failures");
    for (id, why) in KNOWN_FAILURES {
        println!("  {id}: {why}");
    }
    if !unexpected.is_empty() || oracle_fail {
        println!("\nunexpected outcome for criteria {unexpected:?}, oracle failure {oracle_fail}");
        return ExitCode::FAILURE;
    }
    println!("\nacceptance: {} pass, {} known failures", results.iter().filter(|r| r.pass).count(), KNOWN_FAILURES.len());
    ExitCode::SUCCESS
}
