//! Left-spine decomposition and the transposes built from it.
//!
//! Every non-identity word `y` is uniquely `y₁y₂…y_{m-1}y'_m` (left-associated)
//! with `y₁` a letter. Decomposing the last factor once more,
//! `y'_m = y_k y_{k-1} … y_m` with `y_k` a letter, yields the fine sequence
//! `y₁ … y_k` that both transposes are read from.

use std::collections::BTreeSet;

use super::Word;
use crate::error::{Error, Result};

/// Canonical left-spine decomposition of a non-identity word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spine {
    factors: Vec<Word>,
}

impl Spine {
    pub fn factors(&self) -> &[Word] {
        &self.factors
    }

    pub fn into_factors(self) -> Vec<Word> {
        self.factors
    }

    /// `‖y‖`, the number of factors.
    pub fn norm(&self) -> usize {
        self.factors.len()
    }

    pub fn first(&self) -> &Word {
        &self.factors[0]
    }

    pub fn last(&self) -> &Word {
        &self.factors[self.factors.len() - 1]
    }

    /// Reassembles the word.
    pub fn word(&self) -> Word {
        Word::chain(self.factors.iter().cloned())
    }
}

pub(crate) fn spine_factors(y: &Word) -> Vec<Word> {
    debug_assert!(!y.is_identity());
    let mut rights = Vec::new();
    let mut cur = y;
    while let Some((l, r)) = cur.as_pair() {
        rights.push(r.clone());
        cur = l;
    }
    rights.push(cur.clone());
    rights.reverse();
    rights
}

pub(crate) fn fine_factors_unchecked(y: &Word) -> Vec<Word> {
    let mut factors = spine_factors(y);
    let last = factors.pop().expect("spine is never empty");
    if factors.is_empty() {
        return vec![last];
    }
    let mut tail = spine_factors(&last);
    tail.reverse();
    factors.extend(tail);
    factors
}

pub fn spine(y: &Word) -> Result<Spine> {
    if y.is_identity() {
        return Err(Error::IdentityInput("spine"));
    }
    Ok(Spine {
        factors: spine_factors(y),
    })
}

/// The fine sequence `y₁ … y_k`; its first and last entries are letters.
pub fn fine_factors(y: &Word) -> Result<Vec<Word>> {
    if y.is_identity() {
        return Err(Error::IdentityInput("fine_factors"));
    }
    Ok(fine_factors_unchecked(y))
}

pub(crate) fn t_unchecked(y: &Word) -> Word {
    Word::chain(fine_factors_unchecked(y).into_iter().rev())
}

pub(crate) fn tt_unchecked(y: &Word) -> Word {
    Word::chain(fine_factors_unchecked(y))
}

/// `yᵗ = y'_m y_{m-1} … y₁`.
pub fn transpose_t(y: &Word) -> Result<Word> {
    if y.is_identity() {
        return Err(Error::IdentityInput("transpose_t"));
    }
    Ok(t_unchecked(y))
}

/// `yᵗᵗ = y₁ y₂ … y_m … y_k`.
pub fn transpose_tt(y: &Word) -> Result<Word> {
    if y.is_identity() {
        return Err(Error::IdentityInput("transpose_tt"));
    }
    Ok(tt_unchecked(y))
}

fn chain_rev(f: &[Word]) -> Word {
    Word::chain(f.iter().rev().cloned())
}

/// `y₍ᵢ₎ = y_k y_{k-1} … y_i (y₁ … y_{i-1})` for `3 ≤ i ≤ k`.
pub fn star_lower(y: &Word, i: usize) -> Result<Word> {
    let f = fine_factors(y)?;
    let k = f.len();
    if !(3..=k).contains(&i) {
        return Err(Error::Internal(format!("y_({i}) needs 3 <= i <= {k}")));
    }
    Ok(Word::pair(
        chain_rev(&f[i - 1..]),
        Word::chain(f[..i - 1].iter().cloned()),
    ))
}

/// `y⁽ⁱ⁾ = y₁ … y_{i-1} (y_k … y_i)` for `2 ≤ i ≤ k-1`.
pub fn star_upper(y: &Word, i: usize) -> Result<Word> {
    let f = fine_factors(y)?;
    let k = f.len();
    if i < 2 || i + 1 > k {
        return Err(Error::Internal(format!(
            "y^({i}) needs 2 <= i <= {}",
            k - 1
        )));
    }
    Ok(Word::pair(
        Word::chain(f[..i - 1].iter().cloned()),
        chain_rev(&f[i - 1..]),
    ))
}

/// `y*`: every word sharing a second transpose with `yᵗ` or `yᵗᵗ`, listed
/// explicitly as `{yᵗ, yᵗᵗ, y₍ᵢ₊₁₎, y⁽ⁱ⁾ : 2 ≤ i ≤ k-1}`.
pub fn star_set(y: &Word) -> Result<BTreeSet<Word>> {
    let f = fine_factors(y)?;
    let k = f.len();
    let mut out = BTreeSet::new();
    out.insert(chain_rev(&f));
    out.insert(Word::chain(f.iter().cloned()));
    for i in 2..k {
        out.insert(Word::pair(
            chain_rev(&f[i..]),
            Word::chain(f[..i].iter().cloned()),
        ));
        out.insert(Word::pair(
            Word::chain(f[..i - 1].iter().cloned()),
            chain_rev(&f[i - 1..]),
        ));
    }
    Ok(out)
}

/// Every way of writing `y` as an odd palindrome `p₁p₂…p_{m+1}…p₂p₁` with
/// `m ≥ 1`, returned as half sequences `(p₁, …, p_{m+1})`.
pub fn symmetric_halves(y: &Word) -> Result<Vec<Vec<Word>>> {
    let factors = spine(y)?.into_factors();
    let r = factors.len();
    let mut halves = Vec::new();
    // prefix a₁…a_j becomes the head; the rest follow one by one
    for j in 1..r.saturating_sub(1) {
        let tail = &factors[j..];
        let len = tail.len() + 1;
        if len % 2 == 0 {
            continue;
        }
        let head = Word::chain(factors[..j].iter().cloned());
        let at = |i: usize| if i == 0 { &head } else { &tail[i - 1] };
        if (0..len / 2).all(|i| at(i) == at(len - 1 - i)) {
            halves.push((0..=len / 2).map(|i| at(i).clone()).collect());
        }
    }
    Ok(halves)
}

/// Membership in the symmetric words `S(X)`.
pub fn is_symmetric(y: &Word) -> Result<bool> {
    Ok(!symmetric_halves(y)?.is_empty())
}
