//! Non-associative words over a finite ordered alphabet.
//!
//! A [`Word`] is a binary tree with letters at the leaves, or the distinguished
//! empty word [`Word::Identity`]. The identity never occurs inside a product;
//! [`Word::join`] treats it as a neutral element instead.
//!
//! Words are totally ordered: letters by their position in the alphabet,
//! longer words above shorter ones, and words of equal length by their right
//! components first and their left components second. [`Ord`] implements that
//! order, with the identity placed below every other word.

pub(crate) mod spine;
mod syntax;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

pub use spine::{
    fine_factors, is_symmetric, spine, star_lower, star_set, star_upper, symmetric_halves,
    transpose_t, transpose_tt, Spine,
};
pub use syntax::{parse, render, Notation};

/// Largest supported alphabet.
pub const MAX_LETTERS: usize = 64;

/// Position of a letter in its alphabet; larger index means larger letter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter(pub u8);

/// A finite ordered set of single-character letters, smallest first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    letters: Vec<char>,
}

impl Alphabet {
    /// Builds an alphabet from an ordered string, e.g. `"ab"` means `a < b`.
    pub fn new(symbols: &str) -> Result<Self> {
        let letters: Vec<char> = symbols.chars().collect();
        if letters.is_empty() {
            return Err(Error::Alphabet("alphabet must not be empty".into()));
        }
        if letters.len() > MAX_LETTERS {
            return Err(Error::Alphabet(format!(
                "at most {MAX_LETTERS} letters are supported, got {}",
                letters.len()
            )));
        }
        for (i, &c) in letters.iter().enumerate() {
            if c == '(' || c == ')' || c == '1' || c.is_whitespace() {
                return Err(Error::Alphabet(format!("'{c}' cannot be used as a letter")));
            }
            if letters[..i].contains(&c) {
                return Err(Error::Alphabet(format!("duplicate letter '{c}'")));
            }
        }
        Ok(Alphabet { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letter_of(&self, c: char) -> Option<Letter> {
        self.letters
            .iter()
            .position(|&l| l == c)
            .map(|i| Letter(i as u8))
    }

    pub fn char_of(&self, letter: Letter) -> char {
        self.letters[letter.0 as usize]
    }

    /// The letters as one-letter words, in increasing order.
    pub fn leaves(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.letters.len()).map(|i| Word::leaf(Letter(i as u8)))
    }

    pub fn as_string(&self) -> String {
        self.letters.iter().collect()
    }
}

#[derive(Debug)]
pub struct Node {
    left: Word,
    right: Word,
    len: usize,
    fingerprint: u64,
}

/// A non-associative word, or the empty word `1`.
#[derive(Clone)]
pub enum Word {
    Identity,
    Leaf(Letter),
    Pair(Arc<Node>),
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

impl Word {
    pub fn leaf(letter: Letter) -> Word {
        Word::Leaf(letter)
    }

    /// The product `left · right`. Both operands must be non-identity.
    pub fn pair(left: Word, right: Word) -> Word {
        assert!(
            !left.is_identity() && !right.is_identity(),
            "the identity cannot be a factor of a product"
        );
        let len = left.len() + right.len();
        let fingerprint = mix(left
            .fingerprint()
            .rotate_left(17)
            .wrapping_add(right.fingerprint().wrapping_mul(0x9e37_79b9_7f4a_7c15)));
        Word::Pair(Arc::new(Node {
            left,
            right,
            len,
            fingerprint,
        }))
    }

    /// Product with the identity acting as a neutral element.
    pub fn join(left: Word, right: Word) -> Word {
        match (left.is_identity(), right.is_identity()) {
            (true, _) => right,
            (_, true) => left,
            _ => Word::pair(left, right),
        }
    }

    /// Left-associated product `w₁w₂…wₙ`; identity factors are skipped.
    pub fn chain<I>(factors: I) -> Word
    where
        I: IntoIterator<Item = Word>,
    {
        factors.into_iter().fold(Word::Identity, Word::join)
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Word::Identity)
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, Word::Leaf(_))
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        match self {
            Word::Identity => 0,
            Word::Leaf(_) => 1,
            Word::Pair(node) => node.len,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    pub fn as_pair(&self) -> Option<(&Word, &Word)> {
        match self {
            Word::Pair(node) => Some((&node.left, &node.right)),
            _ => None,
        }
    }

    pub fn left(&self) -> Option<&Word> {
        self.as_pair().map(|(l, _)| l)
    }

    pub fn right(&self) -> Option<&Word> {
        self.as_pair().map(|(_, r)| r)
    }

    fn fingerprint(&self) -> u64 {
        match self {
            Word::Identity => 0x5bd1_e995,
            Word::Leaf(l) => mix(u64::from(l.0) + 1),
            Word::Pair(node) => node.fingerprint,
        }
    }

    /// Returns true when both words are the same allocation (or trivially equal atoms).
    pub(crate) fn same_node(&self, other: &Word) -> bool {
        match (self, other) {
            (Word::Pair(a), Word::Pair(b)) => Arc::ptr_eq(a, b),
            (Word::Leaf(a), Word::Leaf(b)) => a == b,
            (Word::Identity, Word::Identity) => true,
            _ => false,
        }
    }

    /// Largest letter index occurring in the word.
    pub fn max_letter(&self) -> Option<Letter> {
        match self {
            Word::Identity => None,
            Word::Leaf(l) => Some(*l),
            Word::Pair(node) => node.left.max_letter().max(node.right.max_letter()),
        }
    }

    /// Renders with the given alphabet in nested notation.
    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> DisplayWord<'a> {
        DisplayWord {
            word: self,
            alphabet,
            notation: Notation::Nested,
        }
    }
}

pub struct DisplayWord<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
    notation: Notation,
}

impl fmt::Display for DisplayWord<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self.word, self.alphabet, self.notation))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Identity => f.write_str("1"),
            Word::Leaf(l) => write!(f, "x{}", l.0),
            Word::Pair(node) => {
                write!(f, "(")?;
                fmt::Debug::fmt(&node.left, f)?;
                write!(f, " ")?;
                fmt::Debug::fmt(&node.right, f)?;
                write!(f, ")")
            }
        }
    }
}

impl PartialEq for Word {
    fn eq(&self, other: &Word) -> bool {
        match (self, other) {
            (Word::Identity, Word::Identity) => true,
            (Word::Leaf(a), Word::Leaf(b)) => a == b,
            (Word::Pair(a), Word::Pair(b)) => {
                Arc::ptr_eq(a, b)
                    || (a.fingerprint == b.fingerprint
                        && a.len == b.len
                        && a.right == b.right
                        && a.left == b.left)
            }
            _ => false,
        }
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        state.write_u64(self.fingerprint());
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        if self.same_node(other) {
            return Ordering::Equal;
        }
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            unequal => return unequal,
        }
        match (self, other) {
            (Word::Identity, Word::Identity) => Ordering::Equal,
            (Word::Leaf(a), Word::Leaf(b)) => a.cmp(b),
            (Word::Pair(a), Word::Pair(b)) => {
                a.right.cmp(&b.right).then_with(|| a.left.cmp(&b.left))
            }
            // equal lengths force equal shapes at the root
            _ => unreachable!("words of equal length have the same root kind"),
        }
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The order on non-identity words.
pub fn compare(u: &Word, v: &Word) -> Result<Ordering> {
    if u.is_identity() || v.is_identity() {
        return Err(Error::IdentityInput("compare"));
    }
    Ok(u.cmp(v))
}

/// `Sub(v)`: the set of all subwords of `v`, including `v` itself.
pub fn subwords(v: &Word) -> Result<BTreeSet<Word>> {
    fn collect(v: &Word, out: &mut BTreeSet<Word>) {
        if out.insert(v.clone()) {
            if let Some((l, r)) = v.as_pair() {
                collect(l, out);
                collect(r, out);
            }
        }
    }
    if v.is_identity() {
        return Err(Error::IdentityInput("subwords"));
    }
    let mut out = BTreeSet::new();
    collect(v, &mut out);
    Ok(out)
}

/// Every word of each length `1..=max_len`, unreduced ones included.
/// Entry `i` holds the words of length `i + 1`, in increasing order.
pub fn all_words(alphabet: &Alphabet, max_len: usize) -> Vec<Vec<Word>> {
    let mut levels: Vec<Vec<Word>> = Vec::with_capacity(max_len);
    for n in 1..=max_len {
        let mut level = Vec::new();
        if n == 1 {
            level.extend(alphabet.leaves());
        } else {
            for k in 1..n {
                for l in &levels[k - 1] {
                    for r in &levels[n - k - 1] {
                        level.push(Word::pair(l.clone(), r.clone()));
                    }
                }
            }
            level.sort();
        }
        levels.push(level);
    }
    levels
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab() -> Alphabet {
        Alphabet::new("ab").unwrap()
    }

    fn w(s: &str) -> Word {
        parse(s, &ab()).unwrap()
    }

    #[test]
    fn alphabet_rejects_bad_input() {
        assert!(Alphabet::new("").is_err());
        assert!(Alphabet::new("aba").is_err());
        assert!(Alphabet::new("a(").is_err());
        assert!(Alphabet::new("a1").is_err());
        let big: String = ('A'..='Z').chain('a'..='z').collect();
        assert_eq!(Alphabet::new(&big).unwrap().len(), 52);
    }

    #[test]
    fn lengths() {
        assert_eq!(Word::Identity.len(), 0);
        assert_eq!(w("a").len(), 1);
        assert_eq!(w("(a(ba))((ab)b)").len(), 6);
    }

    #[test]
    fn join_is_neutral_on_identity() {
        assert_eq!(Word::join(Word::Identity, w("ab")), w("ab"));
        assert_eq!(Word::join(w("ab"), Word::Identity), w("ab"));
        assert_eq!(
            Word::chain([w("a"), Word::Identity, w("b"), w("a")]),
            w("aba")
        );
    }

    #[test]
    fn order_examples() {
        assert_eq!(compare(&w("b"), &w("a")).unwrap(), Ordering::Greater);
        assert_eq!(compare(&w("ba"), &w("a")).unwrap(), Ordering::Greater);
        assert_eq!(compare(&w("ab"), &w("ba")).unwrap(), Ordering::Greater);
        // right components decide before left ones
        assert_eq!(compare(&w("(ba)b"), &w("a(ab)")).unwrap(), Ordering::Less);
        assert!(compare(&Word::Identity, &w("a")).is_err());
    }

    #[test]
    fn subword_sets() {
        assert_eq!(subwords(&w("a")).unwrap(), BTreeSet::from([w("a")]));
        assert_eq!(
            subwords(&w("(ab)a")).unwrap(),
            BTreeSet::from([w("(ab)a"), w("ab"), w("a"), w("b")])
        );
        assert_eq!(
            subwords(&w("(ab)(ab)")).unwrap(),
            BTreeSet::from([w("(ab)(ab)"), w("ab"), w("a"), w("b")])
        );
        assert!(subwords(&Word::Identity).is_err());
    }

    #[test]
    fn subwords_of_three_letters() {
        let abc = Alphabet::new("abc").unwrap();
        let p = |s| parse(s, &abc).unwrap();
        assert_eq!(
            subwords(&p("(ab)c")).unwrap(),
            BTreeSet::from([p("(ab)c"), p("ab"), p("a"), p("b"), p("c")])
        );
    }

    #[test]
    fn equality_is_structural() {
        let x = w("(a(ba))b");
        let y = w("(a(ba))b");
        assert_eq!(x, y);
        assert!(!x.same_node(&y));
        assert_ne!(w("(ab)a"), w("a(ba)"));
    }
}
