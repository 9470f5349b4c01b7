//! Rayon front ends for the batch computations. Results are assembled in
//! the same canonical order as the sequential versions.

use fpf_core::automaton::{passage_at, Automaton, PassageReport};
use fpf_core::braid::BraidWord;
use fpf_core::elimination::{eliminate_candidate, suite_candidates, EliminationError, SuiteReport};
use fpf_core::fdtc::Fdtc;
use fpf_core::search::{planned_cases, run_case, SearchConfig, SearchError, SearchOutcome};
use rayon::prelude::*;

/// A pool with `jobs` workers, or rayon's default when `None`.
pub fn pool(jobs: Option<usize>) -> rayon::ThreadPool {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        b = b.num_threads(j.max(1));
    }
    b.build().expect("thread pool")
}

pub fn search(cfg: &SearchConfig, jobs: Option<usize>) -> Result<SearchOutcome, SearchError> {
    let (t, rots, excluded) = planned_cases(cfg)?;
    let cases = pool(jobs).install(|| rots.par_iter().map(|r| run_case(cfg, &t, r)).collect::<Result<Vec<_>, _>>())?;
    Ok(SearchOutcome::assemble(cfg, excluded, cases))
}

pub fn suite(name: &str, bound: Fdtc, jobs: Option<usize>) -> Result<SuiteReport, EliminationError> {
    let cands = suite_candidates(name)?;
    let verdicts =
        pool(jobs).install(|| cands.par_iter().map(|c| eliminate_candidate(c, bound)).collect::<Result<Vec<_>, _>>())?;
    Ok(SuiteReport { name: name.into(), verdicts })
}

pub fn census(a: &Automaton, max_len: usize, candidates: &[BraidWord], jobs: Option<usize>) -> PassageReport {
    let parts: Vec<PassageReport> =
        pool(jobs).install(|| (0..a.nodes.len()).into_par_iter().map(|b| passage_at(a, b, max_len, candidates)).collect());
    let mut r = PassageReport { max_len, ..Default::default() };
    for p in parts {
        r.merge(p);
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use fpf_core::automaton::{camel_passage_check, candidate_braids};
    use fpf_core::elimination::run_theorem_suite;
    use fpf_core::search::run_search;
    use fpf_core::track::NamedTrack;

    #[test]
    fn parallel_matches_sequential() {
        let mut cfg = SearchConfig::new(NamedTrack::Jellyfish);
        cfg.max_image_length = 10;
        let a = run_search(&cfg).unwrap();
        let b = search(&cfg, Some(3)).unwrap();
        assert_eq!(a, b);
        let s = run_theorem_suite("6").unwrap();
        assert_eq!(suite("6", Fdtc::from_integer(2), Some(2)).unwrap(), s);
        let au = Automaton::figure();
        let x = camel_passage_check(&au, 6, &candidate_braids());
        let y = census(&au, 6, &candidate_braids(), Some(4));
        assert_eq!((x.loops, x.reducible, x.through_camel, x.candidate_hits.len()), (y.loops, y.reducible, y.through_camel, y.candidate_hits.len()));
    }
}
