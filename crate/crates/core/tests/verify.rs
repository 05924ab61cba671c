mod common;

use bolword::verify::{
    act, group_mul, run_suite, s_word, CheckReport, GroupWord, Suite, SuiteOptions, Universe,
    MAX_RECORDED_FAILURES,
};
use bolword::{BolLoop, Budget, LoopElement, Word};
use common::{alphabet, from_word, to_word, words};
use proptest::prelude::*;

fn lp() -> BolLoop {
    BolLoop::new(alphabet("ab"))
}

/// `1^g` by rewriting the product of the generators.
fn image_of_one(g: &GroupWord) -> Word {
    to_word(&common::reduce(&common::chain(
        g.gens().iter().map(from_word),
    )))
}

fn group_word_strategy(basis: Vec<Word>, max: usize) -> impl Strategy<Value = GroupWord> {
    prop::collection::vec(prop::sample::select(basis), 0..=max).prop_map(GroupWord::new)
}

fn basis() -> Vec<Word> {
    lp().cache().enumerate_r(5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn group_words_form_a_group(
        u in group_word_strategy(basis(), 4),
        v in group_word_strategy(basis(), 4),
        w in group_word_strategy(basis(), 4),
    ) {
        prop_assert_eq!(
            group_mul(&group_mul(&u, &v), &w),
            group_mul(&u, &group_mul(&v, &w))
        );
        prop_assert!(group_mul(&u, &u.inverse()).is_empty());
        prop_assert_eq!(group_mul(&GroupWord::identity(), &u), u.clone());
        prop_assert!(u.gens().windows(2).all(|p| p[0] != p[1]));
    }

    #[test]
    fn action_is_a_right_action(
        u in group_word_strategy(basis(), 3),
        v in group_word_strategy(basis(), 3),
        b in prop::sample::select(lp().cache().enumerate_b(4)),
    ) {
        let l = lp();
        let b = l.element(b).unwrap();
        let direct = act(&l, &b, &group_mul(&u, &v)).unwrap();
        let staged = act(&l, &act(&l, &b, &u).unwrap(), &v).unwrap();
        prop_assert_eq!(&direct, &staged);
        let one = LoopElement::identity();
        prop_assert_eq!(act(&l, &one, &u).unwrap().into_word(), image_of_one(&u));
    }

    #[test]
    fn transversal_words_fix_the_identity(g in group_word_strategy(basis(), 4)) {
        let l = lp();
        let one = LoopElement::identity();
        let image = image_of_one(&g);
        prop_assume!(!image.is_identity());
        let s = s_word(&l, &g).unwrap();
        // S(g) is a palindrome sending 1 to the same element as g
        let n = s.len();
        prop_assert_eq!(n % 2, 1);
        prop_assert!((0..n / 2).all(|i| s.gens()[i] == s.gens()[n - 1 - i]));
        prop_assert_eq!(image_of_one(&s), image);
        prop_assert!(image_of_one(&group_mul(&g, &s)).is_identity());
        prop_assert!(act(&l, &one, &group_mul(&g, &s)).unwrap().is_identity());
    }
}

#[test]
fn transversal_examples() {
    let l = lp();
    let a = alphabet("ab");
    let g = GroupWord::new(words(&["a", "b"], &a));
    assert_eq!(
        s_word(&l, &g).unwrap().gens(),
        words(&["b", "a", "ba", "a", "b"], &a)
    );
    assert_eq!(g.render(&a), "R[a] R[b]");
    assert_eq!(GroupWord::identity().render(&a), "I");
    assert!(s_word(&l, &GroupWord::new(words(&["a", "a"], &a))).is_err());
    assert!(GroupWord::new(words(&["ab"], &a)).validate(&l).is_err());
    assert!(g.validate(&l).is_ok());
    assert!(GroupWord::new(words(&["a", "b", "b", "a"], &a)).is_empty());
}

#[test]
fn every_suite_passes_at_small_bounds() {
    let l = lp();
    let opts = SuiteOptions {
        max_len: 3,
        samples: 20,
        sample_len: 5,
        seed: 7,
        half_len: 2,
        factor_len: 5,
        generators: 2,
    };
    for suite in Suite::ALL {
        let report = run_suite(&l, suite, &opts, &Budget::unlimited()).unwrap();
        assert!(report.passed, "{}", report.to_text());
        assert!(report.cases > 0, "{suite}");
        assert!(report.failures.is_empty());
    }
}

#[test]
fn reports_serialize_with_stable_fields() {
    let l = lp();
    let opts = SuiteOptions {
        samples: 5,
        seed: 3,
        ..SuiteOptions::default()
    };
    let report = run_suite(&l, Suite::Exp2, &opts, &Budget::unlimited()).unwrap();
    let value = serde_json::to_value(&report).unwrap();
    for key in [
        "property",
        "universe",
        "cases",
        "skipped",
        "failures",
        "failure_count",
        "notes",
        "elapsed_ms",
        "passed",
    ] {
        assert!(value.get(key).is_some(), "missing {key}");
    }
    assert_eq!(value["property"], "exp2");
    assert_eq!(value["universe"]["alphabet"], "ab");
    assert_eq!(value["universe"]["seed"], 3);
    let back: CheckReport = serde_json::from_value(value).unwrap();
    assert_eq!(back.cases, report.cases);

    // same seed, same text
    let again = run_suite(&l, Suite::Exp2, &opts, &Budget::unlimited()).unwrap();
    assert_eq!(again.to_text(), report.to_text());
}

#[test]
fn failures_are_capped_but_counted() {
    let universe = Universe {
        alphabet: "ab".into(),
        bounds: "none".into(),
        seed: None,
    };
    let mut report = CheckReport::new("demo", universe);
    for i in 0..(MAX_RECORDED_FAILURES + 5) {
        report.case();
        report.fail(format!("case {i}"));
    }
    assert!(!report.is_pass());
    assert_eq!(report.failures.len(), MAX_RECORDED_FAILURES);
    assert_eq!(report.failure_count, (MAX_RECORDED_FAILURES + 5) as u64);
    assert!(report.to_text().contains("FAIL"));
}

#[test]
fn exhausted_budget_aborts_a_suite() {
    let l = lp();
    let opts = SuiteOptions {
        max_len: 5,
        ..SuiteOptions::default()
    };
    let budget = Budget::millis(0);
    std::thread::sleep(std::time::Duration::from_millis(2));
    assert!(matches!(
        run_suite(&l, Suite::Bol, &opts, &budget),
        Err(bolword::Error::BudgetExceeded { .. })
    ));
}
