use super::*;
use crate::characterize::staircase_membership;
use crate::words::words_up_to;

fn w(s: &str) -> Word {
    s.parse().unwrap()
}

fn cfg() -> Config {
    Config::default()
}

fn words(list: &[&str]) -> Vec<Word> {
    list.iter().map(|s| w(s)).collect()
}

#[test]
fn truncated_examples() {
    let members = truncated_members(&w("1"), 2, 2, &cfg()).unwrap();
    assert_eq!(members, words(&["", "1", "11", "21"]));
    let set = truncated_centralizer(&w("1"), 2, 2, &cfg()).unwrap();
    assert_eq!(set.size, BigUint::from(4u32));
    assert_eq!(set.fingerprint, fingerprint_words(&members));

    let set = truncated_centralizer(&w("312"), 0, 3, &cfg()).unwrap();
    assert_eq!(set.size, BigUint::from(1u32));
    assert_eq!(truncated_members(&w("312"), 0, 3, &cfg()).unwrap(), vec![Word::empty()]);

    let expected = words(&[
        "", "1", "2", "11", "12", "21", "22", "111", "112", "121", "122", "211", "212", "221", "222", "321",
    ]);
    let members = truncated_members(&w("21"), 3, 3, &cfg()).unwrap();
    assert_eq!(members, expected);
    let oracle: Vec<Word> = words_up_to(3, 3)
        .filter(|x| staircase_membership(x, 2).unwrap())
        .collect();
    let mut sorted = members.clone();
    sorted.sort();
    let mut oracle_sorted = oracle;
    oracle_sorted.sort();
    assert_eq!(sorted, oracle_sorted);
}

#[test]
fn fingerprints_do_not_depend_on_strategy() {
    for u in [w("1"), w("21"), w("1234"), w("122")] {
        let set = truncated_centralizer(&u, 5, 3, &cfg()).unwrap();
        let mut members = truncated_members(&u, 5, 3, &cfg()).unwrap();
        assert_eq!(set.fingerprint, fingerprint_words(&members));
        members.reverse();
        assert_eq!(set.fingerprint, fingerprint_words(&members));
        let par = truncated_centralizer(&u, 5, 3, &cfg().with_workers(3)).unwrap();
        assert_eq!(par, set);
    }
}

#[test]
fn truncation_is_consistent() {
    let long = truncated_members(&w("2112"), 5, 3, &cfg()).unwrap();
    for l in 0..5 {
        let short = truncated_members(&w("2112"), l, 3, &cfg()).unwrap();
        let restricted: Vec<Word> = long.iter().filter(|x| x.len() <= l).cloned().collect();
        assert_eq!(short, restricted);
    }
}

#[test]
fn truncated_centralizer_grows_under_powers() {
    for u in words_up_to(3, 3).filter(|x| !x.is_empty()) {
        let base = truncated_centralizer(&u, 4, 3, &cfg()).unwrap().tableaux();
        for k in 2..=3 {
            let pk = truncated_centralizer(&power(&u, k), 4, 3, &cfg()).unwrap().tableaux();
            assert!(base.is_subset(&pk), "u={u} k={k}");
        }
    }
}

#[test]
fn probe_finds_the_permutation_counterexample() {
    let r = stability_probe(&w("1234"), 5, 4, 4, &cfg(), None).unwrap();
    assert_eq!(r.observed_stabilization_index, Some(3));
    let sizes: Vec<u32> = r.powers.iter().map(|p| p.size.to_u32().unwrap()).collect();
    assert_eq!(sizes, vec![3, 13, 25, 25, 25]);
    let t = r.transitions.iter().find(|t| t.to_power == 3).unwrap();
    assert_eq!(t.from_power, 2);
    assert!(t.gained.iter().any(|c| c.words.contains(&w("4123"))));
    assert_eq!(t.lost_classes, 0);
    assert!(r.stabilized_at(4));
    assert!(!r.stabilized_at(2));
}

#[test]
fn probe_examples() {
    let r = stability_probe(&w("3"), 4, 4, 4, &cfg(), None).unwrap();
    assert_eq!(r.observed_stabilization_index, Some(1));
    assert!(r.transitions.is_empty());
    let r = stability_probe(&w("122"), 4, 5, 4, &cfg(), None).unwrap();
    assert_eq!(r.observed_stabilization_index, Some(1));
    let r = stability_probe(&w("21"), 1, 3, 3, &cfg(), None).unwrap();
    assert_eq!(r.observed_stabilization_index, None);
    assert!(stability_probe(&w("21"), 0, 3, 3, &cfg(), None).is_err());
}

#[test]
fn probe_respects_guard() {
    let tight = cfg().with_guard(100);
    assert!(matches!(
        stability_probe(&w("12"), 2, 5, 3, &tight, None),
        Err(Error::GuardExceeded { .. })
    ));
}

#[test]
fn two_letter_strong_stability_examples() {
    assert!(strong_stability_check_two_letter(&w("12"), 4, 5, 3, &cfg(), None).unwrap());
    assert!(strong_stability_check_two_letter(&w("1122"), 3, 5, 3, &cfg(), None).unwrap());
    assert!(strong_stability_check_two_letter(&w("21"), 4, 5, 3, &cfg(), None).unwrap());
    assert!(matches!(
        strong_stability_check_two_letter(&w("13"), 2, 2, 3, &cfg(), None),
        Err(Error::Alphabet(_))
    ));
}

#[test]
fn permutation_stability_examples() {
    for m in 1..=3u32 {
        let r = stability_probe(&Word::staircase(m), 4, 5, m + 2, &cfg(), None).unwrap();
        assert_eq!(r.observed_stabilization_index, Some(1), "m={m}");
    }
    assert!(m_stability_check_permutation(&w("1234"), 6, 4, 4, &cfg(), None).unwrap());
    assert!(m_stability_check_permutation(&w("231"), 6, 5, 4, &cfg(), None).unwrap());
    assert!(matches!(
        m_stability_check_permutation(&w("122"), 4, 3, 3, &cfg(), None),
        Err(Error::NotPermutation(_))
    ));
}

#[test]
fn packed_sweep_examples() {
    let r = packed_conjecture_sweep(2, 4, 5, 5, &cfg(), None).unwrap();
    assert!(r.passed());
    assert_eq!(r.words, 2 + 6 + 14);
    let r = packed_conjecture_sweep(1, 4, 3, 4, &cfg(), None).unwrap();
    assert!(r.passed());
    assert_eq!(r.classes, 4);
}

#[test]
fn cache_round_trip_and_hits() {
    let dir = tempfile::tempdir().unwrap();
    let cache = FingerprintCache::open(dir.path()).unwrap();
    let u = w("231");
    assert!(cache.get(&u, 2, 4, 3).is_none());
    let fresh = stability_probe(&u, 4, 4, 3, &cfg(), Some(&cache)).unwrap();
    assert_eq!(cache.get(&u, 2, 4, 3).unwrap().fingerprint, fresh.powers[1].fingerprint);
    let cached = stability_probe(&u, 4, 4, 3, &cfg(), Some(&cache)).unwrap();
    assert_eq!(fresh, cached);
    assert_eq!(fresh, stability_probe(&u, 4, 4, 3, &cfg(), None).unwrap());

    let files: Vec<_> = std::fs::read_dir(dir.path().join(CACHE_SCHEMA)).unwrap().collect();
    assert_eq!(files.len(), 4);
    assert!(files
        .iter()
        .all(|f| f.as_ref().unwrap().path().extension().unwrap() == "json"));
}

#[test]
fn corrupt_cache_entries_are_misses() {
    let dir = tempfile::tempdir().unwrap();
    let cache = FingerprintCache::open(dir.path()).unwrap();
    let u = w("12");
    stability_probe(&u, 2, 3, 2, &cfg(), Some(&cache)).unwrap();
    for f in std::fs::read_dir(dir.path().join(CACHE_SCHEMA)).unwrap() {
        std::fs::write(f.unwrap().path(), b"{not json").unwrap();
    }
    assert!(cache.get(&u, 1, 3, 2).is_none());
    let r = stability_probe(&u, 2, 3, 2, &cfg(), Some(&cache)).unwrap();
    assert_eq!(r, stability_probe(&u, 2, 3, 2, &cfg(), None).unwrap());
}

#[test]
fn report_json_round_trip() {
    let r = stability_probe(&w("1234"), 4, 4, 4, &cfg(), None).unwrap();
    let json = serde_json::to_string(&r).unwrap();
    let back: StabilityReport = serde_json::from_str(&json).unwrap();
    assert_eq!(back, r);
    assert_eq!(serde_json::to_string(&back).unwrap(), json);
}
