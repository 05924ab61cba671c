//! The sets `D(X)`, `R(X)` and `B(X)`.
//!
//! `R(X)` is the basis: letters, plus every word of `D(X)` whose spine factors
//! are themselves basis words. Membership is decided recursively on the spine
//! (factors are strictly shorter) and memoized in a [`BasisCache`]. The
//! level-by-level construction `R₁ ⊆ R₂ ⊆ …` is available as
//! [`BasisCache::r_levels`] and must agree with the recursive predicate.
//!
//! A word lies in `D(X)` exactly when it is reduced, ends in a letter, and is
//! strictly smaller than its own reduced transpose. Letters are counted as
//! members of `D(X)` as well.

use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, RwLock};

use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::normalize::{in_w, ReducedWord};
use crate::word::spine::{spine_factors, t_unchecked, tt_unchecked};
use crate::word::{is_symmetric, render, Alphabet, Notation, Word};

/// `y₀ = min{yᵗ, yᵗᵗ}`.
pub fn y_zero(y: &Word) -> Result<Word> {
    if y.is_identity() {
        return Err(Error::IdentityInput("y_zero"));
    }
    Ok(t_unchecked(y).min(tt_unchecked(y)))
}

/// Why a word of length at least two is not in `D(X)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NotInD {
    NotReduced,
    LastFactorNotLetter,
    TransposeNotReduced,
    SelfTransposed,
    NotMinimal,
}

/// Verdict of the basis membership test, with the first reason for rejection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RVerdict {
    Member,
    NotInD(NotInD),
    /// A spine factor is not a basis word; `symmetric` records whether it lies in `S(X)`.
    Factor {
        index: usize,
        factor: Word,
        symmetric: bool,
    },
}

/// Verdict of the loop membership test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BVerdict {
    Member,
    NotReduced,
    Factor {
        index: usize,
        factor: Word,
        symmetric: bool,
    },
}

impl BVerdict {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            BVerdict::Member => "member".into(),
            BVerdict::NotReduced => "the word contains a subword of shape uu or (uv)v".into(),
            BVerdict::Factor {
                index,
                factor,
                symmetric,
            } => format!(
                "spine factor {} ({}) is not in R(X){}",
                index + 1,
                render(factor, alphabet, Notation::Nested),
                if *symmetric { "; it is symmetric" } else { "" }
            ),
        }
    }
}

impl RVerdict {
    pub fn describe(&self, alphabet: &Alphabet) -> String {
        match self {
            RVerdict::Member => "member".into(),
            RVerdict::NotInD(reason) => format!(
                "not in D(X): {}",
                match reason {
                    NotInD::NotReduced => "the word is not reduced",
                    NotInD::LastFactorNotLetter => "the last spine factor is not a letter",
                    NotInD::TransposeNotReduced => "its transpose is not reduced",
                    NotInD::SelfTransposed => "it equals its transpose",
                    NotInD::NotMinimal => "it is larger than its transpose",
                }
            ),
            RVerdict::Factor {
                index,
                factor,
                symmetric,
            } => format!(
                "spine factor {} ({}) is not in R(X){}",
                index + 1,
                render(factor, alphabet, Notation::Nested),
                if *symmetric { "; it is symmetric" } else { "" }
            ),
        }
    }
}

/// Memoized membership tests and enumerations over one alphabet.
#[derive(Debug)]
pub struct BasisCache {
    alphabet: Alphabet,
    r_members: RwLock<HashMap<Word, bool>>,
    d_members: RwLock<HashMap<Word, bool>>,
    // index n holds every reduced word of length n, sorted
    w_levels: RwLock<Vec<Arc<Vec<Word>>>>,
}

impl BasisCache {
    pub fn new(alphabet: Alphabet) -> BasisCache {
        BasisCache {
            alphabet,
            r_members: RwLock::new(HashMap::new()),
            d_members: RwLock::new(HashMap::new()),
            w_levels: RwLock::new(vec![Arc::new(Vec::new())]),
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    /// Length of the longest stratum of `W(X)` built so far.
    pub fn max_len_computed(&self) -> usize {
        self.w_levels.read().unwrap().len() - 1
    }

    fn d_reason(d: &Word) -> Option<NotInD> {
        if d.is_leaf() {
            return None;
        }
        if !in_w(d) {
            return Some(NotInD::NotReduced);
        }
        let factors = spine_factors(d);
        if !factors[factors.len() - 1].is_leaf() {
            return Some(NotInD::LastFactorNotLetter);
        }
        let t = t_unchecked(d);
        if !in_w(&t) {
            return Some(NotInD::TransposeNotReduced);
        }
        match d.cmp(&t) {
            std::cmp::Ordering::Less => None,
            std::cmp::Ordering::Equal => Some(NotInD::SelfTransposed),
            std::cmp::Ordering::Greater => Some(NotInD::NotMinimal),
        }
    }

    pub fn in_d(&self, d: &Word) -> Result<bool> {
        if d.is_identity() {
            return Err(Error::IdentityInput("in_D"));
        }
        if let Some(&v) = self.d_members.read().unwrap().get(d) {
            return Ok(v);
        }
        let v = Self::d_reason(d).is_none();
        self.d_members.write().unwrap().insert(d.clone(), v);
        Ok(v)
    }

    pub(crate) fn in_r_unchecked(&self, y: &Word) -> bool {
        if y.is_leaf() {
            return true;
        }
        if let Some(&v) = self.r_members.read().unwrap().get(y) {
            return v;
        }
        let v =
            Self::d_reason(y).is_none() && spine_factors(y).iter().all(|f| self.in_r_unchecked(f));
        self.r_members.write().unwrap().insert(y.clone(), v);
        v
    }

    pub fn in_r(&self, y: &Word) -> Result<bool> {
        if y.is_identity() {
            return Err(Error::IdentityInput("in_R"));
        }
        Ok(self.in_r_unchecked(y))
    }

    /// Basis membership with the reason for rejection.
    pub fn r_verdict(&self, y: &Word) -> Result<RVerdict> {
        if y.is_identity() {
            return Err(Error::IdentityInput("in_R"));
        }
        if y.is_leaf() {
            return Ok(RVerdict::Member);
        }
        if let Some(reason) = Self::d_reason(y) {
            return Ok(RVerdict::NotInD(reason));
        }
        Ok(match self.first_bad_factor(y) {
            None => RVerdict::Member,
            Some((index, factor, symmetric)) => RVerdict::Factor {
                index,
                factor,
                symmetric,
            },
        })
    }

    fn first_bad_factor(&self, y: &Word) -> Option<(usize, Word, bool)> {
        spine_factors(y)
            .into_iter()
            .enumerate()
            .find(|(_, f)| !self.in_r_unchecked(f))
            .map(|(i, f)| {
                let symmetric = is_symmetric(&f).unwrap_or(false);
                (i, f, symmetric)
            })
    }

    pub fn b_verdict(&self, y: &Word) -> BVerdict {
        if y.is_identity() {
            return BVerdict::Member;
        }
        if !in_w(y) {
            return BVerdict::NotReduced;
        }
        match self.first_bad_factor(y) {
            None => BVerdict::Member,
            Some((index, factor, symmetric)) => BVerdict::Factor {
                index,
                factor,
                symmetric,
            },
        }
    }

    /// Membership in the carrier `B(X)`; the identity is a member.
    pub fn in_b(&self, y: &Word) -> bool {
        self.b_verdict(y) == BVerdict::Member
    }

    /// Builds strata of `W(X)` up to `len` and returns stratum `len`.
    fn w_level(&self, len: usize, budget: &Budget) -> Result<Arc<Vec<Word>>> {
        if let Some(level) = self.w_levels.read().unwrap().get(len) {
            return Ok(level.clone());
        }
        let mut levels = self.w_levels.write().unwrap();
        while levels.len() <= len {
            budget.check()?;
            let n = levels.len();
            let mut level = Vec::new();
            if n == 1 {
                level.extend(self.alphabet.leaves());
            } else {
                for i in 1..n {
                    for l in levels[i].iter() {
                        for r in levels[n - i].iter() {
                            if l != r && l.right() != Some(r) {
                                level.push(Word::pair(l.clone(), r.clone()));
                            }
                        }
                    }
                }
            }
            level.sort();
            levels.push(Arc::new(level));
        }
        Ok(levels[len].clone())
    }

    /// `W_n`: all reduced words of length exactly `len`, in increasing order.
    pub fn enumerate_w(&self, len: usize) -> Vec<Word> {
        self.enumerate_w_within(len, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn enumerate_w_within(&self, len: usize, budget: &Budget) -> Result<Vec<Word>> {
        if len == 0 {
            return Ok(Vec::new());
        }
        Ok(self.w_level(len, budget)?.as_ref().clone())
    }

    fn filtered_upto<F>(&self, max_len: usize, budget: &Budget, mut keep: F) -> Result<Vec<Word>>
    where
        F: FnMut(&Word) -> bool,
    {
        let mut out = Vec::new();
        for n in 1..=max_len {
            let level = self.w_level(n, budget)?;
            for w in level.iter() {
                if keep(w) {
                    out.push(w.clone());
                }
            }
            budget.check()?;
        }
        Ok(out)
    }

    pub fn enumerate_d(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_d_within(max_len, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn enumerate_d_within(&self, max_len: usize, budget: &Budget) -> Result<Vec<Word>> {
        self.filtered_upto(max_len, budget, |w| {
            self.in_d(w).expect("enumerated words are non-identity")
        })
    }

    pub fn enumerate_r(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_r_within(max_len, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn enumerate_r_within(&self, max_len: usize, budget: &Budget) -> Result<Vec<Word>> {
        self.filtered_upto(max_len, budget, |w| self.in_r_unchecked(w))
    }

    /// Elements of `B(X)` of length at most `max_len`, starting with the identity.
    pub fn enumerate_b(&self, max_len: usize) -> Vec<Word> {
        self.enumerate_b_within(max_len, &Budget::unlimited())
            .expect("unlimited budget")
    }

    pub fn enumerate_b_within(&self, max_len: usize, budget: &Budget) -> Result<Vec<Word>> {
        let mut out = vec![Word::Identity];
        out.extend(self.filtered_upto(max_len, budget, |w| self.in_b(w))?);
        Ok(out)
    }

    /// The sets `R₁ ⊆ R₂ ⊆ … ⊆ R_max_len`, built level by level:
    /// `R₁ = X` and `Rₙ` adds every `y ∈ D(X)` with `|y| ≤ n` whose spine
    /// factors all lie in `R_{n-1}`. Entry `i` of the result is `R_{i+1}`.
    pub fn r_levels(&self, max_len: usize) -> Vec<BTreeSet<Word>> {
        let d: Vec<Word> = self.enumerate_d(max_len);
        let mut levels: Vec<BTreeSet<Word>> = Vec::new();
        let mut current: BTreeSet<Word> = self.alphabet.leaves().collect();
        levels.push(current.clone());
        for n in 2..=max_len {
            let previous = current.clone();
            for y in d.iter().filter(|y| y.len() <= n) {
                if spine_factors(y).iter().all(|f| previous.contains(f)) {
                    current.insert(y.clone());
                }
            }
            levels.push(current.clone());
        }
        levels
    }
}

/// An element of the loop `B(X)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LoopElement(ReducedWord);

impl LoopElement {
    pub fn identity() -> LoopElement {
        LoopElement(ReducedWord::identity())
    }

    /// Validates `word` against `B(X)`.
    pub fn new(word: Word, cache: &BasisCache) -> Result<LoopElement> {
        match cache.b_verdict(&word) {
            BVerdict::Member => Ok(LoopElement(ReducedWord::new_unchecked(word))),
            verdict => Err(Error::NotInLoop {
                word: render(&word, cache.alphabet(), Notation::Nested),
                reason: verdict.describe(cache.alphabet()),
            }),
        }
    }

    pub(crate) fn new_unchecked(word: Word) -> LoopElement {
        LoopElement(ReducedWord::new_unchecked(word))
    }

    pub fn word(&self) -> &Word {
        self.0.word()
    }

    pub fn into_word(self) -> Word {
        self.0.into_word()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }
}
