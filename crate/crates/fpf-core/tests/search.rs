use fpf_core::search::{run_search, Rule, SearchConfig};
use fpf_core::track::NamedTrack;
use std::collections::BTreeSet;
use std::sync::Arc;

fn survivors(cfg: &SearchConfig) -> BTreeSet<String> {
    run_search(cfg).unwrap().survivors.iter().map(|s| s.map.display().to_string()).collect()
}

#[test]
fn camel_l_is_the_mirror_of_camel_r() {
    let mut r = SearchConfig::new(NamedTrack::CamelR);
    r.max_image_length = 12;
    let mut l = r.clone();
    l.track = NamedTrack::CamelL;
    let mirror = Arc::new(NamedTrack::CamelL.track());
    let right = run_search(&r).unwrap();
    let mirrored: BTreeSet<String> =
        right.survivors.iter().map(|s| s.map.mirrored(mirror.clone()).display().to_string()).collect();
    assert_eq!(mirrored.len(), 3);
    assert_eq!(survivors(&l), mirrored);
}

#[test]
fn dropping_a_rule_adds_no_survivor() {
    let mut base = SearchConfig::new(NamedTrack::CamelR);
    base.max_image_length = 10;
    base.rotation_cases = Some(vec!["A-rg".into()]);
    base.max_nodes = Some(100_000);
    let keep = survivors(&base);
    assert_eq!(keep.len(), 3);
    for r in [Rule::P4, Rule::P5, Rule::P6] {
        let mut c = base.clone();
        c.disabled.insert(r);
        assert!(survivors(&c).is_subset(&keep), "{r}");
    }
}

#[test]
fn jellyfish_has_no_survivor() {
    for len in [8, 12] {
        let mut c = SearchConfig::new(NamedTrack::Jellyfish);
        c.max_image_length = len;
        let o = run_search(&c).unwrap();
        assert!(o.survivors.is_empty() && o.exhausted);
    }
}
