//! The free 2-group on the basis and its right action on the loop.
//!
//! Generators `R_y` are indexed by basis words and square to the identity, so
//! group elements are sequences of basis words with no equal neighbours.
//! `R_y` acts by `b ↦ b ∘ y`.

use crate::basis::LoopElement;
use crate::bol::{free_reduce, BolLoop};
use crate::error::{Error, Result};
use crate::word::{render, Alphabet, Notation, Word};

/// A reduced word `R_{y₁} R_{y₂} ⋯ R_{yₙ}`; the empty word is the group identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GroupWord {
    gens: Vec<Word>,
}

impl GroupWord {
    pub fn identity() -> GroupWord {
        GroupWord::default()
    }

    /// Builds the group element of a generator sequence, cancelling `R_y R_y`.
    pub fn new<I>(gens: I) -> GroupWord
    where
        I: IntoIterator<Item = Word>,
    {
        GroupWord {
            gens: free_reduce(gens),
        }
    }

    pub fn generator(y: Word) -> GroupWord {
        GroupWord { gens: vec![y] }
    }

    pub fn gens(&self) -> &[Word] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn inverse(&self) -> GroupWord {
        GroupWord {
            gens: self.gens.iter().rev().cloned().collect(),
        }
    }

    /// Checks that every generator is a basis word.
    pub fn validate(&self, lp: &BolLoop) -> Result<()> {
        for y in &self.gens {
            if y.is_identity() || !lp.cache().in_r_unchecked(y) {
                return Err(Error::NotInLoop {
                    word: lp.render(y),
                    reason: "group generators must be basis words".into(),
                });
            }
        }
        Ok(())
    }

    pub fn render(&self, alphabet: &Alphabet) -> String {
        if self.gens.is_empty() {
            return "I".into();
        }
        self.gens
            .iter()
            .map(|y| format!("R[{}]", render(y, alphabet, Notation::Nested)))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The product `u · v` in the free 2-group.
pub fn group_mul(u: &GroupWord, v: &GroupWord) -> GroupWord {
    GroupWord::new(u.gens.iter().chain(v.gens.iter()).cloned())
}

/// `b^g`: right-multiplies `b` by each generator in turn.
pub fn act(lp: &BolLoop, b: &LoopElement, g: &GroupWord) -> Result<LoopElement> {
    g.gens.iter().try_fold(b.clone(), |acc, y| {
        let y = lp.element(y.clone())?;
        lp.mul(&acc, &y)
    })
}

/// The palindromic group word of the form of `1^g`.
pub fn s_word(lp: &BolLoop, g: &GroupWord) -> Result<GroupWord> {
    let image = act(lp, &LoopElement::identity(), g)?;
    if image.is_identity() {
        return Err(Error::IdentityInput("s_word"));
    }
    let form = lp.symmetric_form(&image)?;
    Ok(GroupWord {
        gens: form.full_sequence(),
    })
}
