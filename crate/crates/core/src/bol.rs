//! The loop `(B(X), ∘)`.
//!
//! Every `g ≠ 1` in `B(X)` is `π(g₁g₂…g_m…g₂g₁)` for exactly one sequence of
//! basis words `g₁, …, g_m` with no two neighbours equal; that sequence is the
//! [`PalindromicForm`] of `g`, and `x ∘ y = π(x y₁ … y_m … y₁)`.
//!
//! # Computing the form
//!
//! Right multiplication by a basis word `r` sends `b ↦ π(br)`, an involution on
//! `W(X)`. A sequence of basis words `T = (t₁, …, tₙ)` therefore acts on the
//! identity, and `1^T = π(t₁…tₙ)`. If `1^T = g` and the form `P₀` of
//! `g₀ = 1^{T⁻¹}` is known, the free reduction of `T⁻¹ P₀ T` is a palindrome
//! sending `1` to `g`, hence the form of `g`.
//!
//! With `g = a₁…a_s` (spine, `a_i ∈ R`) and `a_s = b₁…b_l`:
//!
//! * `T = (a₁, …, a_s)` gives `g₀ = π(gᵗ)`;
//! * `T = (b₁, …, b_l, a_s)` starting from `π(gᵗᵗ)` gives `g₀ = π(gᵗᵗ)`.
//!
//! The four cases then pick the known form:
//!
//! 1. `gᵗ, gᵗᵗ ∈ W` and distinct: the smaller of the two is a basis word;
//! 2. `gᵗ = gᵗᵗ ∈ W`: `gᵗ` is literally a palindrome of basis words;
//! 3. `gᵗ ∉ W`: recurse on the shorter `π(gᵗ)`;
//! 4. `gᵗᵗ ∉ W`: recurse on the shorter `π(gᵗᵗ)`.
//!
//! Every computed form is checked against `π` before it is returned.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::basis::{BasisCache, LoopElement};
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::normalize::{in_w, pi, reduced_chain};
use crate::word::spine::{spine_factors, t_unchecked, tt_unchecked};
use crate::word::{parse, render, symmetric_halves, Alphabet, Notation, Word};

/// Half `(g₁, …, g_m)` of a reduced palindrome `g₁…g_m…g₁` of basis words.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PalindromicForm {
    half: Vec<Word>,
}

impl PalindromicForm {
    /// Validates that `half` is non-empty, consists of basis words and has no
    /// equal neighbours.
    pub fn new(half: Vec<Word>, cache: &BasisCache) -> Result<PalindromicForm> {
        if half.is_empty() {
            return Err(Error::Internal(
                "a palindromic form needs at least one entry".into(),
            ));
        }
        for (i, g) in half.iter().enumerate() {
            if g.is_identity() || !cache.in_r_unchecked(g) {
                return Err(Error::Internal(format!(
                    "entry {} ({}) is not a basis word",
                    i + 1,
                    render(g, cache.alphabet(), Notation::Nested)
                )));
            }
        }
        if let Some(i) = half.windows(2).position(|p| p[0] == p[1]) {
            return Err(Error::Internal(format!(
                "entries {} and {} are equal",
                i + 1,
                i + 2
            )));
        }
        Ok(PalindromicForm { half })
    }

    pub(crate) fn from_half_unchecked(half: Vec<Word>) -> PalindromicForm {
        PalindromicForm { half }
    }

    pub fn half(&self) -> &[Word] {
        &self.half
    }

    pub fn into_half(self) -> Vec<Word> {
        self.half
    }

    /// `(g₁, …, g_m, g_{m-1}, …, g₁)`.
    pub fn full_sequence(&self) -> Vec<Word> {
        let mut seq = self.half.clone();
        seq.extend(self.half.iter().rev().skip(1).cloned());
        seq
    }

    /// The unreduced word `g₁g₂…g_m…g₂g₁`.
    pub fn denoted_word(&self) -> Word {
        Word::chain(self.full_sequence())
    }

    /// `π` of the denoted word.
    pub fn value(&self) -> Word {
        let full = self.full_sequence();
        reduced_chain(Word::Identity, full.iter())
    }
}

/// Cancels equal neighbours until none remain.
pub(crate) fn free_reduce<I>(seq: I) -> Vec<Word>
where
    I: IntoIterator<Item = Word>,
{
    let mut out: Vec<Word> = Vec::new();
    for w in seq {
        if out.last() == Some(&w) {
            out.pop();
        } else {
            out.push(w);
        }
    }
    out
}

/// The free Bol loop of exponent two over one alphabet.
#[derive(Debug)]
pub struct BolLoop {
    cache: Arc<BasisCache>,
    forms: RwLock<HashMap<Word, Arc<[Word]>>>,
}

impl BolLoop {
    pub fn new(alphabet: Alphabet) -> BolLoop {
        BolLoop::with_cache(Arc::new(BasisCache::new(alphabet)))
    }

    pub fn with_cache(cache: Arc<BasisCache>) -> BolLoop {
        BolLoop {
            cache,
            forms: RwLock::new(HashMap::new()),
        }
    }

    pub fn cache(&self) -> &BasisCache {
        &self.cache
    }

    pub fn shared_cache(&self) -> Arc<BasisCache> {
        self.cache.clone()
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.cache.alphabet()
    }

    /// Validates a word as a loop element.
    pub fn element(&self, word: Word) -> Result<LoopElement> {
        LoopElement::new(word, &self.cache)
    }

    /// Parses and validates a loop element.
    pub fn parse_element(&self, text: &str) -> Result<LoopElement> {
        self.element(parse(text, self.alphabet())?)
    }

    pub fn render(&self, w: &Word) -> String {
        render(w, self.alphabet(), Notation::Nested)
    }

    /// The canonical symmetric form of `g ≠ 1`.
    pub fn symmetric_form(&self, g: &LoopElement) -> Result<PalindromicForm> {
        if g.is_identity() {
            return Err(Error::IdentityInput("symmetric_form"));
        }
        Ok(PalindromicForm::from_half_unchecked(
            self.half_of(g.word())?.to_vec(),
        ))
    }

    fn half_of(&self, g: &Word) -> Result<Arc<[Word]>> {
        if let Some(half) = self.forms.read().unwrap().get(g) {
            return Ok(half.clone());
        }
        let half: Arc<[Word]> = self.compute_half(g)?.into();
        let value = reduced_chain(Word::Identity, half.iter().chain(half.iter().rev().skip(1)));
        if value != *g {
            return Err(self.internal("the computed palindrome does not reduce to the element", g));
        }
        self.forms.write().unwrap().insert(g.clone(), half.clone());
        Ok(half)
    }

    fn internal(&self, what: &str, g: &Word) -> Error {
        Error::Internal(format!("{what}: {}", self.render(g)))
    }

    fn compute_half(&self, g: &Word) -> Result<Vec<Word>> {
        debug_assert!(self.cache.in_b(g) && !g.is_identity());
        if self.cache.in_r_unchecked(g) {
            return Ok(vec![g.clone()]);
        }
        let a = spine_factors(g);
        let t = t_unchecked(g);
        let tt = tt_unchecked(g);
        match (in_w(&t), in_w(&tt)) {
            // gᵗ ∉ W
            (false, _) => {
                let core = self.half_of_reduced(&t, g)?;
                self.wrap_t(&a, &core, g)
            }
            // gᵗᵗ ∉ W
            (true, false) => {
                let core = self.half_of_reduced(&tt, g)?;
                self.wrap_tt(&a, &core, g)
            }
            // gᵗ = gᵗᵗ: a palindrome of basis words already
            (true, true) if t == tt => {
                let mut halves: Vec<Vec<Word>> = symmetric_halves(&t)?
                    .into_iter()
                    .filter(|h| {
                        h.iter().all(|x| self.cache.in_r_unchecked(x))
                            && h.windows(2).all(|p| p[0] != p[1])
                    })
                    .collect();
                if halves.len() != 1 {
                    return Err(self.internal(
                        &format!("expected one palindromic core, found {}", halves.len()),
                        &t,
                    ));
                }
                let core = halves.pop().unwrap();
                self.wrap_t(&a, &core, g)
            }
            // gᵗ ≠ gᵗᵗ, both reduced: the smaller one is a basis word
            (true, true) => {
                if self.cache.in_r_unchecked(&t) {
                    self.wrap_t(&a, &[t], g)
                } else if self.cache.in_r_unchecked(&tt) {
                    self.wrap_tt(&a, &[tt], g)
                } else {
                    Err(self.internal("neither transpose is a basis word", g))
                }
            }
        }
    }

    /// Form of `π(w)` for a transpose `w ∉ W`.
    fn half_of_reduced(&self, w: &Word, g: &Word) -> Result<Arc<[Word]>> {
        let reduced = pi(w).into_word();
        if reduced.is_identity() || reduced.len() >= g.len() || !self.cache.in_b(&reduced) {
            return Err(self.internal("the reduced transpose left B(X)", g));
        }
        self.half_of(&reduced)
    }

    fn conjugate(&self, wrap: &[Word], core: &[Word], g: &Word) -> Result<Vec<Word>> {
        let seq = wrap
            .iter()
            .rev()
            .chain(core.iter())
            .chain(core.iter().rev().skip(1))
            .chain(wrap.iter())
            .cloned();
        let reduced = free_reduce(seq);
        let n = reduced.len();
        if n % 2 == 0 || (0..n / 2).any(|i| reduced[i] != reduced[n - 1 - i]) {
            return Err(self.internal("conjugation did not yield an odd palindrome", g));
        }
        Ok(reduced[..=n / 2].to_vec())
    }

    /// Conjugates by the spine `(a₁, …, a_s)`.
    fn wrap_t(&self, a: &[Word], core: &[Word], g: &Word) -> Result<Vec<Word>> {
        self.conjugate(a, core, g)
    }

    /// Conjugates by `(b₁, …, b_l, a_s)` where `b` is the spine of `a_s`.
    fn wrap_tt(&self, a: &[Word], core: &[Word], g: &Word) -> Result<Vec<Word>> {
        let last = a.last().expect("spine is never empty");
        let mut wrap = spine_factors(last);
        wrap.push(last.clone());
        self.conjugate(&wrap, core, g)
    }

    /// `x ∘ y`.
    pub fn mul(&self, x: &LoopElement, y: &LoopElement) -> Result<LoopElement> {
        if y.is_identity() {
            return Ok(x.clone());
        }
        if x.is_identity() {
            return Ok(y.clone());
        }
        let half = self.half_of(y.word())?;
        let product = reduced_chain(
            x.word().clone(),
            half.iter().chain(half.iter().rev().skip(1)),
        );
        debug_assert!(self.cache.in_b(&product));
        Ok(LoopElement::new_unchecked(product))
    }

    /// The `x` with `x ∘ a = b`, which is `b ∘ a`.
    pub fn rdiv(&self, b: &LoopElement, a: &LoopElement) -> Result<LoopElement> {
        self.mul(b, a)
    }

    /// The `x` with `a ∘ x = b`, searched among elements of length at most
    /// `search_bound`. `None` means no solution exists within the bound.
    pub fn ldiv(
        &self,
        a: &LoopElement,
        b: &LoopElement,
        search_bound: usize,
    ) -> Result<Option<LoopElement>> {
        self.ldiv_within(a, b, search_bound, &Budget::unlimited())
    }

    /// [`BolLoop::ldiv`] under a time budget.
    pub fn ldiv_within(
        &self,
        a: &LoopElement,
        b: &LoopElement,
        search_bound: usize,
        budget: &Budget,
    ) -> Result<Option<LoopElement>> {
        if a.is_identity() {
            return Ok(Some(b.clone()));
        }
        if b.is_identity() {
            return Ok(Some(a.clone()));
        }
        if a == b {
            return Ok(Some(LoopElement::identity()));
        }
        for candidate in self.cache.enumerate_b_within(search_bound, budget)? {
            budget.check()?;
            let x = LoopElement::new_unchecked(candidate);
            if self.mul(a, &x)? == *b {
                return Ok(Some(x));
            }
        }
        Ok(None)
    }

    /// `x ∘ x = 1`.
    pub fn element_order_2(&self, x: &LoopElement) -> Result<bool> {
        Ok(self.mul(x, x)?.is_identity())
    }
}
