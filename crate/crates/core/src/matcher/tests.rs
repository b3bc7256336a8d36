use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::freq::FrequencyTable;
use crate::metrics::WindowCost;

/// Independent reference: slice equality over every window.
fn brute_force(text: &[u8], pattern: &[u8]) -> Vec<usize> {
    if text.len() < pattern.len() {
        return Vec::new();
    }
    text.windows(pattern.len())
        .enumerate()
        .filter(|(_, w)| *w == pattern)
        .map(|(i, _)| i)
        .collect()
}

fn run(algo: Algorithm, text: &[u8], pattern: &[u8], mode: SearchMode) -> SearchOutcome {
    let q = SearchQuery::new(text, pattern, mode).unwrap().traced();
    search(algo, &q, &FrequencyTable::default_table()).unwrap()
}

fn all<'a>(text: &'a [u8], pattern: &'a [u8]) -> SearchQuery<'a> {
    SearchQuery::new(text, pattern, SearchMode::AllMatches).unwrap()
}

#[test]
fn empty_pattern_rejected_everywhere() {
    assert!(matches!(
        SearchQuery::new(b"abc", b"", SearchMode::AllMatches),
        Err(Error::EmptyPattern)
    ));
    let table = FrequencyTable::default_table();
    for algo in Algorithm::ALL {
        assert!(matches!(
            algo.prepare(b"", &table),
            Err(Error::EmptyPattern)
        ));
    }
}

#[test]
fn naive_examples() {
    let o = naive_search(&all(b"aaaa", b"aa")).unwrap();
    assert_eq!((o.positions, o.comparisons), (vec![0, 1, 2], 6));
    let o = naive_search(&all(b"abc", b"abc")).unwrap();
    assert_eq!((o.positions, o.comparisons), (vec![0], 3));
    let o = naive_search(&all(b"bbbb", b"a")).unwrap();
    assert_eq!((o.positions, o.comparisons), (vec![], 4));
}

#[test]
fn naive_closed_form_on_repeated_byte() {
    let text = vec![b'a'; 1000];
    let o = naive_search(&all(&text, b"aaa")).unwrap();
    assert_eq!(o.positions.len(), 998);
    assert_eq!(o.comparisons, 2994);
}

#[test]
fn kmp_examples() {
    let q = SearchQuery::new(b"abababc", b"ababc", SearchMode::FirstMatch).unwrap();
    assert_eq!(kmp_search(&q).unwrap().positions, vec![2]);
    assert_eq!(
        kmp_search(&all(b"aaaa", b"aa")).unwrap().positions,
        vec![0, 1, 2]
    );
}

#[test]
fn bmh_examples() {
    assert_eq!(
        bmh_search(&all(b"aaaa", b"aa")).unwrap().positions,
        vec![0, 1, 2]
    );
    let q = SearchQuery::new(b"abcd", b"d", SearchMode::FirstMatch).unwrap();
    assert_eq!(bmh_search(&q).unwrap().positions, vec![3]);
}

#[test]
fn fbas_examples() {
    let table = FrequencyTable::default_table();

    let text = b"nel mezzo del cammin ... selva oscura";
    let o = fbas_search(&all(text, b"oscura").traced(), &table).unwrap();
    assert_eq!(o.positions, brute_force(text, b"oscura"));
    assert_eq!(o.positions, vec![text.len() - 6]);
    // Matching window costs m; every anchor miss costs 1.
    for w in o.windows.as_ref().unwrap() {
        let anchor_hit = text[w.position + 3] == b'u';
        if !anchor_hit {
            assert_eq!(w.comparisons, 1);
        }
    }
    let last = o.windows.unwrap().last().copied().unwrap();
    assert_eq!(
        last,
        WindowCost {
            position: text.len() - 6,
            comparisons: 6
        }
    );

    let o = fbas_search(&all(b"aaaa", b"aa"), &table).unwrap();
    assert_eq!(o.positions, vec![0, 1, 2]);

    let o = fbas_search(&all(b"abc", b"zzzz"), &table).unwrap();
    assert_eq!(o, SearchOutcome::default());

    let o = fbas_search(&all(b"xbxx", b"bz").traced(), &table).unwrap();
    assert!(o.positions.is_empty());
    assert_eq!(o.anchor_hits, 0);
    assert_eq!(o.comparisons, o.alignments);
    assert!(o.windows.unwrap().iter().all(|w| w.comparisons == 1));
}

#[test]
fn fbas_hand_trace_of_xbxx() {
    // Pattern "bz": anchor 'z' at 1, shift {b: 1}, default 2.
    // pos 0: T[1]='b' != 'z' (1 cmp), last byte 'b' -> step 1.
    // pos 1: T[2]='x' != 'z' (1 cmp), last byte 'x' -> step 2.
    // pos 3: 3 + 2 > 4, stop.
    let o = run(Algorithm::Fbas, b"xbxx", b"bz", SearchMode::AllMatches);
    assert_eq!(o.alignment_trace().unwrap(), vec![0, 1]);
    assert_eq!(o.comparisons, 2);
}

#[test]
fn single_byte_pattern_fbas_is_one_comparison_per_window() {
    let o = run(Algorithm::Fbas, b"abcabc", b"c", SearchMode::AllMatches);
    assert_eq!(o.positions, vec![2, 5]);
    assert_eq!(o.comparisons, 6);
    assert_eq!(o.alignments, 6);
    assert_eq!(o.anchor_hits, 2);
}

#[test]
fn short_or_empty_text_gives_empty_outcome() {
    for algo in Algorithm::ALL {
        for text in [&b""[..], b"ab"] {
            let o = run(algo, text, b"abc", SearchMode::AllMatches);
            assert!(o.positions.is_empty());
            assert_eq!((o.comparisons, o.alignments, o.anchor_hits), (0, 0, 0));
        }
    }
}

#[test]
fn case_sensitive_matching() {
    for algo in Algorithm::ALL {
        let o = run(algo, b"Dante dante", b"dante", SearchMode::AllMatches);
        assert_eq!(o.positions, vec![6], "{algo}");
    }
}

#[test]
fn utf8_text_matches_bytewise() {
    let text = "perché è così".as_bytes();
    let pattern = "è".as_bytes();
    for algo in Algorithm::ALL {
        let o = run(algo, text, pattern, SearchMode::AllMatches);
        assert_eq!(o.positions, brute_force(text, pattern), "{algo}");
    }
}

#[test]
fn algorithm_names_round_trip() {
    for algo in Algorithm::ALL {
        assert_eq!(algo.name().parse::<Algorithm>().unwrap(), algo);
    }
    assert!("boyer".parse::<Algorithm>().is_err());
}

/// With the anchor at the last pattern position, every window's anchor byte
/// is one the search has not looked at before, so on i.i.d. text the anchor
/// hit rate is exactly 1/sigma and a two-byte pattern costs 1 + p per window.
#[test]
fn fbas_mean_window_cost_matches_estimate() {
    let sigma = 4;
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let text: Vec<u8> = (0..100_000)
        .map(|_| b'a' + rng.gen_range(0..sigma))
        .collect();
    // Anchor 'b' (score 10) is unique and last.
    let o = run(Algorithm::Fbas, &text, b"ab", SearchMode::AllMatches);
    let costs: Vec<f64> = o
        .windows
        .unwrap()
        .iter()
        .map(|w| w.comparisons as f64)
        .collect();
    let n = costs.len() as f64;
    let mean = costs.iter().sum::<f64>() / n;
    let var = costs.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (n - 1.0);
    let se = (var / n).sqrt();
    let expected = expected_comparisons(1.0 / sigma as f64, 2)
        .unwrap()
        .expected_comparisons;
    assert!(
        (mean - expected).abs() <= 3.0 * se,
        "mean {mean} expected {expected} se {se}"
    );
}

fn text_and_pattern(alphabet: u8) -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    let byte = move || (0..alphabet).prop_map(|b| b'a' + b);
    (1usize..=12).prop_flat_map(move |m| {
        (
            proptest::collection::vec(byte(), m..=96),
            proptest::collection::vec(byte(), m),
        )
    })
}

fn any_case() -> impl Strategy<Value = (Vec<u8>, Vec<u8>)> {
    prop_oneof![
        text_and_pattern(2),
        text_and_pattern(4),
        text_and_pattern(26)
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn all_matchers_agree_with_brute_force((text, pattern) in any_case()) {
        let expected = brute_force(&text, &pattern);
        for algo in Algorithm::ALL {
            let o = run(algo, &text, &pattern, SearchMode::AllMatches);
            prop_assert_eq!(&o.positions, &expected, "{}", algo);
            let o = run(algo, &text, &pattern, SearchMode::FirstMatch);
            prop_assert_eq!(o.positions.first(), expected.first(), "{}", algo);
            prop_assert!(o.positions.len() <= 1);
        }
    }

    #[test]
    fn fbas_and_bmh_visit_the_same_windows((text, pattern) in any_case()) {
        for mode in [SearchMode::AllMatches, SearchMode::FirstMatch] {
            let f = run(Algorithm::Fbas, &text, &pattern, mode);
            let b = run(Algorithm::Bmh, &text, &pattern, mode);
            prop_assert_eq!(f.alignment_trace(), b.alignment_trace());
            prop_assert_eq!(f.alignments, b.alignments);
        }
    }

    #[test]
    fn fbas_window_costs((text, pattern) in any_case()) {
        let table = FrequencyTable::default_table();
        let a = table.select_anchor(&pattern).unwrap().index;
        let o = run(Algorithm::Fbas, &text, &pattern, SearchMode::AllMatches);
        let windows = o.windows.clone().unwrap();
        let m = pattern.len() as u64;
        let mut extra = 0;
        let mut hits = 0;
        for w in &windows {
            prop_assert!(w.comparisons >= 1 && w.comparisons <= m);
            if text[w.position + a] == pattern[a] {
                hits += 1;
                extra += w.comparisons - 1;
            } else {
                prop_assert_eq!(w.comparisons, 1);
            }
        }
        prop_assert_eq!(hits, o.anchor_hits);
        prop_assert!(o.anchor_hits <= o.alignments);
        prop_assert_eq!(o.comparisons, o.alignments + extra);
        for &p in &o.positions {
            let w = windows.iter().find(|w| w.position == p).unwrap();
            prop_assert_eq!(w.comparisons, m);
        }
    }

    #[test]
    fn outcome_invariants((text, pattern) in any_case()) {
        let n = text.len();
        let m = pattern.len();
        for algo in Algorithm::ALL {
            for mode in [SearchMode::AllMatches, SearchMode::FirstMatch] {
                let o = run(algo, &text, &pattern, mode);
                prop_assert!(o.positions.windows(2).all(|w| w[0] < w[1]));
                prop_assert!(o.positions.iter().all(|&p| p + m <= n));
                let windows = o.windows.as_ref().unwrap();
                prop_assert_eq!(windows.len() as u64, o.alignments);
                prop_assert_eq!(windows.iter().map(|w| w.comparisons).sum::<u64>(), o.comparisons);
                if algo != Algorithm::Fbas {
                    prop_assert_eq!(o.anchor_hits, 0);
                }
                if algo == Algorithm::Kmp {
                    prop_assert!(o.comparisons <= 2 * n as u64);
                }
            }
        }
    }

    #[test]
    fn first_match_never_costs_more((text, pattern) in any_case()) {
        for algo in Algorithm::ALL {
            let first = run(algo, &text, &pattern, SearchMode::FirstMatch);
            let every = run(algo, &text, &pattern, SearchMode::AllMatches);
            prop_assert!(first.comparisons <= every.comparisons);
        }
    }

    #[test]
    fn arbitrary_bytes_agree(
        text in proptest::collection::vec(any::<u8>(), 0..200),
        pattern in proptest::collection::vec(prop_oneof![Just(0u8), Just(b'z'), Just(0xff), Just(b'Z')], 1..4),
    ) {
        let expected = brute_force(&text, &pattern);
        for algo in Algorithm::ALL {
            prop_assert_eq!(run(algo, &text, &pattern, SearchMode::AllMatches).positions, expected.clone());
        }
    }
}
