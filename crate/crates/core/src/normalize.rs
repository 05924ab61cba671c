//! The reduced words `W(X)` and the reduction map `π : P(X) → W(X)`.
//!
//! A word is reduced when none of its subwords has the shape `uu` or `(uv)v`.
//! `π` is computed bottom-up: both children are reduced first and then
//! combined by the three-way rule `uu ↦ 1`, `(av)v ↦ a`, otherwise `uv`.
//! The identity is neutral inside products, so `π` extends to `1` with
//! `π(1) = 1`.

use std::ops::Deref;

use crate::word::Word;

/// A word known to lie in `W(X)`, possibly the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord(Word);

impl ReducedWord {
    /// Wraps `word` if it is reduced.
    pub fn new(word: Word) -> Option<ReducedWord> {
        in_w(&word).then_some(ReducedWord(word))
    }

    pub fn identity() -> ReducedWord {
        ReducedWord(Word::Identity)
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn into_word(self) -> Word {
        self.0
    }

    pub(crate) fn new_unchecked(word: Word) -> ReducedWord {
        debug_assert!(in_w(&word));
        ReducedWord(word)
    }
}

impl Deref for ReducedWord {
    type Target = Word;

    fn deref(&self) -> &Word {
        &self.0
    }
}

impl From<ReducedWord> for Word {
    fn from(r: ReducedWord) -> Word {
        r.0
    }
}

/// True when `left · right` would be a forbidden pattern at the root.
fn root_is_redex(left: &Word, right: &Word) -> bool {
    left == right || left.right() == Some(right)
}

/// Membership in `W(X)`. The identity counts as reduced.
pub fn in_w(v: &Word) -> bool {
    match v.as_pair() {
        None => true,
        Some((l, r)) => !root_is_redex(l, r) && in_w(r) && in_w(l),
    }
}

/// One step of rule (ii): the product of two reduced words, reduced.
pub(crate) fn reduce_product(u: Word, v: Word) -> Word {
    if u.is_identity() {
        return v;
    }
    if v.is_identity() {
        return u;
    }
    if u == v {
        return Word::Identity;
    }
    if let Some((a, tail)) = u.as_pair() {
        if *tail == v {
            return a.clone();
        }
    }
    // u, v ∈ W, u ≠ v and u ≠ av: only the root could be a redex, and it is not
    let product = Word::pair(u, v);
    debug_assert!(in_w(&product), "rule (ii) produced an unreduced word");
    product
}

fn pi_word(v: &Word) -> Word {
    match v.as_pair() {
        None => v.clone(),
        Some((l, r)) => {
            let pl = pi_word(l);
            let pr = pi_word(r);
            if pl.same_node(l) && pr.same_node(r) && !root_is_redex(l, r) {
                return v.clone();
            }
            reduce_product(pl, pr)
        }
    }
}

/// `π(v)`.
pub fn pi(v: &Word) -> ReducedWord {
    ReducedWord(pi_word(v))
}

/// `π(head · f₁ · f₂ ⋯ fₙ)` (left-associated), folded one factor at a time.
pub fn pi_chain<'a, I>(head: &Word, factors: I) -> ReducedWord
where
    I: IntoIterator<Item = &'a Word>,
{
    let acc = factors
        .into_iter()
        .fold(pi_word(head), |acc, f| reduce_product(acc, pi_word(f)));
    ReducedWord(acc)
}

/// Like [`pi_chain`] for factors that are already reduced.
pub(crate) fn reduced_chain<'a, I>(head: Word, factors: I) -> Word
where
    I: IntoIterator<Item = &'a Word>,
{
    factors
        .into_iter()
        .fold(head, |acc, f| reduce_product(acc, f.clone()))
}
