mod common;

use std::time::Duration;

use antiramsey::search::Goal;
use antiramsey::{
    avoidable, enumerate_copies, find_good_copy, parse_graph, phi_exact, search, verify_lower_bound, Budget,
    EdgeColoring, PhiKind, SearchConfig,
};
use proptest::prelude::*;

const PATTERNS: [&str; 8] = ["P3", "2P2", "P4", "K1,3", "C3", "C4", "paw", "K4-e"];

fn kind_strategy() -> impl Strategy<Value = PhiKind> {
    prop::sample::select(PhiKind::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn outcome_is_schedule_independent(
        pat in prop::sample::select(PATTERNS.to_vec()),
        kind in kind_strategy(),
        threads in 2usize..6,
    ) {
        let g = parse_graph(pat).unwrap();
        let idx = enumerate_copies(&g, 5).unwrap();
        let one = search(&idx, kind, Goal::AllCounts, &SearchConfig::default()).unwrap();
        let many = search(&idx, kind, Goal::AllCounts, &SearchConfig::default().with_threads(threads)).unwrap();
        prop_assert_eq!(&one.achievable, &many.achievable);
        prop_assert_eq!(&one.witness, &many.witness);
        prop_assert_eq!(one.phi, many.phi);
        let max = search(&idx, kind, Goal::MaxOnly, &SearchConfig::default()).unwrap();
        prop_assert_eq!(max.phi, one.phi);
        prop_assert_eq!(&max.witness, &one.witness);
    }

    #[test]
    fn witnesses_are_certificates(
        pat in prop::sample::select(PATTERNS.to_vec()),
        kind in kind_strategy(),
        n in 4usize..=5,
    ) {
        let g = parse_graph(pat).unwrap();
        let out = phi_exact(&g, n, kind, Budget::default()).unwrap();
        prop_assert!(out.exhausted);
        match (&out.witness, out.max_achievable()) {
            (Some(w), Some(m)) => {
                prop_assert!(w.is_canonical());
                prop_assert_eq!(w.color_count(), m);
                prop_assert!(verify_lower_bound(w, &g, kind).unwrap());
                prop_assert_eq!(out.phi, m + 1);
            }
            (None, None) => prop_assert_eq!(out.phi, 1),
            _ => prop_assert!(false, "witness and achievable set disagree"),
        }
    }

    #[test]
    fn decisions_match_the_achievable_set(
        pat in prop::sample::select(PATTERNS.to_vec()),
        kind in kind_strategy(),
        m in 1usize..=10,
    ) {
        let g = parse_graph(pat).unwrap();
        let full = phi_exact(&g, 5, kind, Budget::default()).unwrap();
        let d = avoidable(&g, 5, m, kind, Budget::default()).unwrap();
        prop_assert!(d.exhausted);
        prop_assert_eq!(d.witness.is_some(), full.achievable.contains(&m));
        if let Some(w) = d.witness {
            prop_assert_eq!(w.color_count(), m);
            let idx = enumerate_copies(&g, 5).unwrap();
            prop_assert!(find_good_copy(&w, &idx, kind).unwrap().is_none());
        }
    }

    #[test]
    fn verification_matches_naive_scan(
        pat in prop::sample::select(PATTERNS.to_vec()),
        kind in kind_strategy(),
        colors in prop::collection::vec(0u32..4, 10),
    ) {
        let g = parse_graph(pat).unwrap();
        let coloring = EdgeColoring::new(5, colors.clone()).unwrap();
        let maps = common::injections(g.order(), 5);
        let naive = common::naive_has_good_copy(&g, 5, &colors, kind, &maps);
        prop_assert_eq!(verify_lower_bound(&coloring, &g, kind).unwrap(), !naive);
    }
}

#[test]
fn oracle_agrees_at_n5_for_small_patterns() {
    // slower than the n = 4 acceptance check; a few patterns only
    for pat in ["P3", "2P2", "C3"] {
        let g = parse_graph(pat).unwrap();
        for kind in [PhiKind::Lr, PhiKind::Od, PhiKind::Sp] {
            let out = phi_exact(&g, 5, kind, Budget::default()).unwrap();
            assert_eq!(out.achievable, common::naive_achievable(&g, 5, kind), "{pat} {kind}");
        }
    }
}

#[test]
fn budget_cutoff_is_reported() {
    let g = parse_graph("K4").unwrap();
    let out = phi_exact(&g, 7, PhiKind::Sod, Budget::new(5_000, Duration::from_secs(30)).unwrap()).unwrap();
    assert!(!out.exhausted);
    if let Some(w) = &out.witness {
        assert!(verify_lower_bound(w, &g, PhiKind::Sod).unwrap());
    }
}

#[test]
fn rejects_bad_requests() {
    let g = parse_graph("C4").unwrap();
    assert!(avoidable(&g, 5, 0, PhiKind::Od, Budget::default()).is_err());
    assert!(avoidable(&g, 5, 11, PhiKind::Od, Budget::default()).is_err());
    assert!(phi_exact(&g, 3, PhiKind::Od, Budget::default()).is_err());
    assert!(Budget::new(0, Duration::from_secs(1)).is_err());
}
