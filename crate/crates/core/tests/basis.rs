mod common;

use std::collections::BTreeSet;

use bolword::basis::{y_zero, RVerdict};
use bolword::word::{is_symmetric, spine, star_set, transpose_t};
use bolword::{in_w, BasisCache, Word};
use common::{alphabet, parse, words};

fn cache(letters: &str) -> BasisCache {
    BasisCache::new(alphabet(letters))
}

#[test]
fn d_up_to_five_letters() {
    let c = cache("ab");
    let a = c.alphabet().clone();
    let expected: BTreeSet<Word> = words(
        &[
            "a",
            "b",
            "ba",
            "((ba)b)a",
            "(b(ab))a",
            "(b(ba))a",
            "((ba)(ab))a",
            "((a(ba))b)a",
            "((b(ab))a)b",
            "((b(ba))b)a",
            "(b(a(ab)))a",
            "(b(a(ba)))a",
            "(b(b(ab)))a",
            "(b(b(ba)))a",
            "(b((ab)a))a",
            "(b((ba)b))a",
        ],
        &a,
    )
    .into_iter()
    .collect();
    let got: BTreeSet<Word> = c.enumerate_d(5).into_iter().collect();
    assert_eq!(got, expected);
    for w in &expected {
        assert!(c.in_d(w).unwrap(), "{w:?}");
    }
}

#[test]
fn basis_up_to_five_letters() {
    let c = cache("ab");
    let a = c.alphabet().clone();
    let expected: BTreeSet<Word> = words(
        &[
            "a",
            "b",
            "ba",
            "((ba)b)a",
            "(b(ba))a",
            "((a(ba))b)a",
            "((b(ba))b)a",
        ],
        &a,
    )
    .into_iter()
    .collect();
    let got: BTreeSet<Word> = c.enumerate_r(5).into_iter().collect();
    assert_eq!(got, expected);
}

#[test]
fn excluded_words_have_a_symmetric_factor() {
    let c = cache("ab");
    let a = c.alphabet().clone();
    for text in ["(b((ba)b))a", "(b((ab)a))a"] {
        let w = parse(text, &a);
        assert!(c.in_d(&w).unwrap(), "{text} should be in D");
        assert!(!c.in_r(&w).unwrap(), "{text} should not be in R");
        match c.r_verdict(&w).unwrap() {
            RVerdict::Factor {
                factor, symmetric, ..
            } => {
                assert!(symmetric, "{text}");
                assert!(is_symmetric(&factor).unwrap());
                assert!(c.r_verdict(&w).unwrap().describe(&a).contains("symmetric"));
            }
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn d_matches_its_definition() {
    for (letters, max_len) in [("ab", 7), ("abc", 6)] {
        let c = cache(letters);
        let n = letters.len() as u8;
        let got: BTreeSet<Word> = c.enumerate_d(max_len).into_iter().collect();
        assert_eq!(got, common::d_set(n, max_len), "{letters} <= {max_len}");
    }
}

#[test]
fn basis_levels_match_the_fixpoint() {
    for (letters, max_len) in [("ab", 8), ("abc", 6)] {
        let c = cache(letters);
        let n = letters.len() as u8;
        let oracle = common::r_levels(n, max_len);
        assert_eq!(c.r_levels(max_len), oracle, "{letters}");
        let recursive: BTreeSet<Word> = c.enumerate_r(max_len).into_iter().collect();
        assert_eq!(&recursive, oracle.last().unwrap());
        // the recursive predicate agrees on every reduced word, member or not
        for len in 1..=max_len {
            for w in c.enumerate_w(len) {
                assert_eq!(c.in_r(&w).unwrap(), recursive.contains(&w), "{w:?}");
            }
        }
    }
}

#[test]
fn basis_words_satisfy_the_necessary_conditions() {
    let c = cache("ab");
    for b in c.enumerate_r(8) {
        assert!(!is_symmetric(&b).unwrap(), "{b:?} is symmetric");
        if b.is_leaf() {
            continue;
        }
        let t = transpose_t(&b).unwrap();
        assert!(b < t, "{b:?}");
        assert!(star_set(&b).unwrap().iter().all(in_w), "{b:?}");
        let sp = spine(&b).unwrap();
        assert!(sp.factors().last().unwrap().is_leaf(), "{b:?}");
        for f in sp.factors() {
            assert!(c.in_r(f).unwrap(), "factor {f:?} of {b:?}");
        }
    }
}

#[test]
fn d_words_are_their_own_minimum_transpose() {
    let c = cache("abc");
    for d in c.enumerate_d(6).into_iter().filter(|d| !d.is_leaf()) {
        assert_eq!(y_zero(&d).unwrap(), d, "{d:?}");
        let t = transpose_t(&d).unwrap();
        assert!(in_w(&t) && t != d, "{d:?}");
    }
    assert!(y_zero(&Word::Identity).is_err());
}

#[test]
fn loop_elements_match_the_definition() {
    for (letters, max_len) in [("ab", 7), ("abc", 5)] {
        let c = cache(letters);
        let n = letters.len() as u8;
        let got: BTreeSet<Word> = c.enumerate_b(max_len).into_iter().collect();
        let oracle = common::b_set(n, max_len);
        assert_eq!(got, oracle, "{letters}");
        for w in common::all_upto(n, max_len).iter().map(common::to_word) {
            assert_eq!(c.in_b(&w), oracle.contains(&w), "{w:?}");
        }
    }
}

/// A product `y₁y₂⋯y_n` of basis words with `y₁` a letter is reduced exactly
/// when no factor repeats its neighbour or the product of everything before
/// it. Without the letter condition the right half of `y₁` can cancel
/// against `y₂`, as in `(ba)a`.
#[test]
fn reduced_products_of_basis_words() {
    let c = cache("ab");
    let basis = c.enumerate_r(5);
    let mut seq: Vec<Word> = Vec::new();
    let mut checked = 0;
    fn visit(basis: &[Word], seq: &mut Vec<Word>, budget: usize, checked: &mut usize) {
        if seq.len() >= 2 {
            let reduced = in_w(&Word::chain(seq.iter().cloned()));
            let neighbours = (0..seq.len()).all(|i| {
                let before = Word::chain(seq[..i].iter().cloned());
                before != seq[i] && seq.get(i + 1) != Some(&seq[i])
            });
            // general form: no prefix product equals the next factor or ends in it
            let general = (1..seq.len()).all(|i| {
                let before = Word::chain(seq[..i].iter().cloned());
                before != seq[i] && before.as_pair().is_none_or(|(_, r)| *r != seq[i])
            });
            assert_eq!(reduced, general, "{seq:?}");
            if seq[0].is_leaf() {
                assert_eq!(reduced, neighbours, "{seq:?}");
            }
            *checked += 1;
        }
        for w in basis.iter().filter(|w| w.len() <= budget) {
            seq.push(w.clone());
            visit(basis, seq, budget - w.len(), checked);
            seq.pop();
        }
    }
    visit(&basis, &mut seq, 9, &mut checked);
    assert!(checked > 1000, "{checked}");
    let a = c.alphabet().clone();
    assert!(!in_w(&Word::chain(words(&["ba", "a"], &a))));
}

#[test]
fn one_letter_alphabet() {
    let c = cache("a");
    let a = c.alphabet().clone();
    assert_eq!(c.enumerate_r(6), words(&["a"], &a));
    assert_eq!(c.enumerate_b(6), vec![Word::Identity, parse("a", &a)]);
}
