mod common;

use antiramsey::constructions::PatternSpec;
use antiramsey::{
    claimed_colors, find_canonical_clique, generate, parse_graph, parse_pattern, phi_exact, verify_lower_bound,
    Budget, CliqueTag, EdgeColoring, PhiKind,
};
use proptest::prelude::*;

fn certified(spec: &str, n: usize, pattern: &str, kind: PhiKind) -> bool {
    let c = generate(&parse_pattern(spec, n).unwrap()).unwrap();
    verify_lower_bound(&c, &parse_graph(pattern).unwrap(), kind).unwrap()
}

#[test]
fn avoidance_certificates_across_n() {
    for n in 5..=14 {
        for kind in [PhiKind::Lr, PhiKind::Sod, PhiKind::Od, PhiKind::Cf] {
            assert!(certified("krs:1", n, "C4", kind), "krs:1 n={n} {kind}");
        }
        assert!(certified("klek:3", n, "C4", PhiKind::Cp), "klek:3 n={n}");
        assert!(certified("cp-k4e", n, "K4-e", PhiKind::Cp), "cp-k4e n={n}");
        assert!(certified("lexstar", n, "K4", PhiKind::Lp), "lexstar n={n}");
        assert!(certified("pairgrowth", n, "K4-e", PhiKind::Lr), "pairgrowth n={n}");
    }
}

#[test]
fn certificates_are_not_vacuous() {
    // the same colorings do contain good copies for weaker requirements
    assert!(!certified("krs:1", 8, "C4", PhiKind::Lp));
    assert!(!certified("rainbow", 6, "C4", PhiKind::Od));
    assert!(!certified("mono", 6, "K4", PhiKind::Cp));
}

#[test]
fn constructions_meet_exact_values_at_small_n() {
    // the searched value lies above every certified color count
    for (spec, n, pattern, kind) in [
        ("krs:1", 5, "C4", PhiKind::Lr),
        ("krs:1", 5, "C4", PhiKind::Od),
        ("krs:1", 5, "C4", PhiKind::Cf),
        ("mono", 5, "P4", PhiKind::Ar),
        ("lex", 4, "K4", PhiKind::Cf),
    ] {
        let c = generate(&parse_pattern(spec, n).unwrap()).unwrap();
        let g = parse_graph(pattern).unwrap();
        assert!(verify_lower_bound(&c, &g, kind).unwrap());
        let out = phi_exact(&g, n, kind, Budget::default()).unwrap();
        assert!(out.phi > c.color_count(), "{spec} {pattern} {kind}");
    }
}

#[test]
fn lex_matches_its_definition() {
    for n in 3..12 {
        let c = generate(&PatternSpec::Lex(n)).unwrap();
        for (a, b) in common::lex_pairs(n) {
            assert_eq!(c.color(a, b) as usize, b - 1);
        }
    }
}

#[test]
fn pattern_grammar_errors() {
    assert!(parse_pattern("krs:0", 8).is_err());
    assert!(parse_pattern("krs:7", 8).is_err());
    assert!(parse_pattern("klex:2", 8).is_err());
    assert!(parse_pattern("tworeg:5", 7).is_err());
    assert!(parse_pattern("bogus", 8).is_err());
    assert!(parse_pattern("lex", 1).is_err());
}

fn lex_under_some_order(c: &EdgeColoring, s: &[usize]) -> bool {
    common::injections(s.len(), s.len()).into_iter().any(|p| {
        let order: Vec<usize> = p.iter().map(|&i| s[i]).collect();
        let star = |j: usize| c.color(order[0], order[j]);
        (1..order.len()).all(|j| (0..j).all(|i| c.color(order[i], order[j]) == star(j)))
            && (1..order.len()).all(|j| (1..j).all(|i| star(i) != star(j)))
    })
}

fn tag_holds(c: &EdgeColoring, s: &[usize], tag: CliqueTag) -> bool {
    let mut colors = Vec::new();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            colors.push(c.color(a, b));
        }
    }
    let mut distinct = colors.clone();
    distinct.sort_unstable();
    distinct.dedup();
    match tag {
        CliqueTag::Monochromatic => distinct.len() == 1,
        CliqueTag::Rainbow => distinct.len() == colors.len(),
        CliqueTag::Lex => lex_under_some_order(c, s),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn generated_colorings_are_canonical(n in 5usize..24, a in 1usize..5, b in 2usize..6) {
        let specs = [
            PatternSpec::Lex(n),
            PatternSpec::Klek(n, b),
            PatternSpec::Klex(n, a, b),
            PatternSpec::Krs(n, a),
            PatternSpec::Clique(n, b),
            PatternSpec::RainbowMultipartite(n, b),
            PatternSpec::RainbowKpMonoRest(n, b),
            PatternSpec::PairGrowth(n),
            PatternSpec::LexPlusRainbowStar(n),
            PatternSpec::CpK4eFourColoring(n),
        ];
        for spec in specs {
            if spec.validate().is_err() {
                continue;
            }
            let c = generate(&spec).unwrap();
            prop_assert!(c.is_canonical());
            prop_assert_eq!(c.color_count(), claimed_colors(&spec).unwrap());
            let again = parse_pattern(&spec.to_string(), n).unwrap();
            prop_assert_eq!(again, spec);
        }
    }

    #[test]
    fn canonical_cliques_are_what_they_claim(
        colors in prop::collection::vec(0u32..3, 21),
        k in 3usize..=4,
    ) {
        let c = EdgeColoring::new(7, colors).unwrap();
        if let Some((s, tag)) = find_canonical_clique(&c, k).unwrap() {
            prop_assert!(tag_holds(&c, &s, tag));
            // nothing earlier in lex order qualifies
            for t in common::injections(k, 7).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])) {
                if t >= s {
                    break;
                }
                let any = [CliqueTag::Monochromatic, CliqueTag::Rainbow, CliqueTag::Lex]
                    .into_iter()
                    .any(|tag| tag_holds(&c, &t, tag));
                prop_assert!(!any, "{:?} is canonical but {:?} was reported", t, s);
            }
        } else {
            for t in common::injections(k, 7).into_iter().filter(|t| t.windows(2).all(|w| w[0] < w[1])) {
                let any = [CliqueTag::Monochromatic, CliqueTag::Rainbow, CliqueTag::Lex]
                    .into_iter()
                    .any(|tag| tag_holds(&c, &t, tag));
                prop_assert!(!any);
            }
        }
    }
}
