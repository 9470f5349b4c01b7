use fpf_core::braid::{strand_permutation, BraidWord};
use fpf_core::dynnikov::{braids_equal, dynnikov_apply, DynnikovCoords};
use fpf_core::elimination::{eliminate_t35, Filter};
use fpf_core::fdtc::{fdtc_compose, Fdtc};
use fpf_core::invariants::{alexander_of_closure, self_linking};
use fpf_core::strata::{enumerate_strata, lift_stratum};
use fpf_core::automaton::candidate_braids;
use proptest::prelude::*;

fn word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
    let g = n as i32 - 1;
    prop::collection::vec((1..=g, any::<bool>()), 0..=max_len)
        .prop_map(move |v| BraidWord::new(n, v.into_iter().map(|(l, s)| if s { l } else { -l }).collect()).unwrap())
}

fn cat(parts: &[&BraidWord]) -> BraidWord {
    parts.iter().skip(1).fold(parts[0].clone(), |a, b| a.concat(b).unwrap())
}

fn gens(n: usize, l: &[i32]) -> BraidWord {
    BraidWord::new(n, l.to_vec()).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn braid_relations(u in word(5, 8), v in word(5, 8), i in 1i32..=3, j in 1i32..=4) {
        prop_assert!(braids_equal(&cat(&[&u, &gens(5, &[i, i + 1, i]), &v]), &cat(&[&u, &gens(5, &[i + 1, i, i + 1]), &v])).unwrap());
        if (i - j).abs() >= 2 {
            prop_assert!(braids_equal(&cat(&[&u, &gens(5, &[i, j]), &v]), &cat(&[&u, &gens(5, &[j, i]), &v])).unwrap());
        }
        prop_assert!(!braids_equal(&cat(&[&u, &gens(5, &[i, i + 1]), &v]), &cat(&[&u, &gens(5, &[i + 1, i]), &v])).unwrap());
        prop_assert!(braids_equal(&u.concat(&u.inverse()).unwrap(), &BraidWord::identity(5)).unwrap());
    }

    #[test]
    fn dynnikov_inverse_roundtrip(w in word(5, 12), c in prop::collection::vec(-20i128..=20, 6)) {
        if let Ok(x) = DynnikovCoords::new(5, c) {
            let y = dynnikov_apply(&w, &x).unwrap();
            prop_assert_eq!(dynnikov_apply(&w.inverse(), &y).unwrap(), x);
        }
    }

    #[test]
    fn permutation_and_exponent_are_homomorphisms(a in word(5, 10), b in word(5, 10)) {
        let ab = a.concat(&b).unwrap();
        prop_assert_eq!(ab.exponent_sum(), a.exponent_sum() + b.exponent_sum());
        let (pa, pb, pab) = (strand_permutation(&a), strand_permutation(&b), strand_permutation(&ab));
        prop_assert_eq!(pab.images().to_vec(), pa.images().iter().map(|&x| pb.images()[x]).collect::<Vec<_>>());
    }

    #[test]
    fn verdict_is_a_conjugation_invariant(k in 0usize..3, c in word(5, 4)) {
        let b = &candidate_braids()[k];
        let v = eliminate_t35(b).unwrap();
        let w = eliminate_t35(&cat(&[&c.inverse(), b, &c])).unwrap();
        prop_assert_eq!((v.determinant, v.self_linking, &v.alexander, v.eliminated_by), (w.determinant, w.self_linking, &w.alexander, w.eliminated_by));
    }

    #[test]
    fn mirror_has_equal_determinant(b in word(3, 12)) {
        if strand_permutation(&b).is_single_cycle() {
            let (v, m) = (eliminate_t35(&b).unwrap(), eliminate_t35(&b.inverse()).unwrap());
            prop_assert_eq!(v.determinant, m.determinant);
            prop_assert_eq!(self_linking(&b) + self_linking(&b.inverse()), -2 * 3);
            prop_assert!(alexander_of_closure(&b).unwrap().is_symmetric());
        }
    }

    #[test]
    fn coefficient_law(p in -6i64..=6, q in 1i64..=6, n in -5i64..=5, k in -3i64..=3) {
        let c = Fdtc::new(p, q);
        prop_assert_eq!(fdtc_compose(c, n, 1) - fdtc_compose(c, 0, 1), Fdtc::from_integer(n));
        prop_assert_eq!(fdtc_compose(c, n, k), Fdtc::from_integer(n) + c * k);
    }
}

#[test]
fn disk_strata_lift_to_genus_two() {
    let disk = enumerate_strata(0, 1, 5, |s| s.boundary.len() == 1);
    assert!(!disk.is_empty());
    for s in &disk {
        assert!(s.is_balanced(1));
        let l = lift_stratum(s);
        assert!(l.is_balanced(-3), "{s} lifts to {l}");
        assert!(l.boundary.iter().all(|p| p % 2 == 0));
    }
}

#[test]
fn high_self_linking_is_first_filter() {
    let b = BraidWord::full_twist(5).concat(&candidate_braids()[0]).unwrap();
    assert_eq!(eliminate_t35(&b).unwrap().eliminated_by, Filter::SelfLinking);
}
