//! Reference implementations used as oracles by the integration tests.
//!
//! Everything here works on its own tree type and follows the definitions
//! literally (rewriting to a fixed point, existential set definitions, brute
//! force over palindromes) so that it shares no code paths with the library.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use bolword::word::Letter;
use bolword::{Alphabet, Word};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum T {
    One,
    Leaf(u8),
    Node(Box<T>, Box<T>),
}

pub fn node(l: T, r: T) -> T {
    T::Node(Box::new(l), Box::new(r))
}

/// Product with `1` neutral.
pub fn mul(l: T, r: T) -> T {
    match (l, r) {
        (T::One, r) => r,
        (l, T::One) => l,
        (l, r) => node(l, r),
    }
}

pub fn chain<I: IntoIterator<Item = T>>(items: I) -> T {
    items.into_iter().fold(T::One, mul)
}

impl T {
    pub fn len(&self) -> usize {
        match self {
            T::One => 0,
            T::Leaf(_) => 1,
            T::Node(l, r) => l.len() + r.len(),
        }
    }

    pub fn is_leaf(&self) -> bool {
        matches!(self, T::Leaf(_))
    }
}

pub fn from_word(w: &Word) -> T {
    match w {
        Word::Identity => T::One,
        Word::Leaf(Letter(i)) => T::Leaf(*i),
        _ => {
            let (l, r) = w.as_pair().unwrap();
            node(from_word(l), from_word(r))
        }
    }
}

pub fn to_word(t: &T) -> Word {
    match t {
        T::One => Word::Identity,
        T::Leaf(i) => Word::leaf(Letter(*i)),
        T::Node(l, r) => Word::pair(to_word(l), to_word(r)),
    }
}

/// The word order, straight from its inductive definition.
pub fn cmp(u: &T, v: &T) -> Ordering {
    match u.len().cmp(&v.len()) {
        Ordering::Equal => {}
        other => return other,
    }
    match (u, v) {
        (T::One, T::One) => Ordering::Equal,
        (T::Leaf(a), T::Leaf(b)) => a.cmp(b),
        (T::Node(u1, u2), T::Node(v1, v2)) => cmp(u2, v2).then_with(|| cmp(u1, v1)),
        _ => unreachable!("equal lengths"),
    }
}

pub fn subtrees(t: &T, out: &mut Vec<T>) {
    if let T::Node(l, r) = t {
        subtrees(l, out);
        subtrees(r, out);
    }
    out.push(t.clone());
}

fn is_redex(t: &T) -> bool {
    match t {
        T::Node(l, r) => {
            l == r
                || match l.as_ref() {
                    T::Node(_, lr) => lr == r,
                    _ => false,
                }
        }
        _ => false,
    }
}

/// No subword of shape `uu` or `(uv)v`.
pub fn in_w(t: &T) -> bool {
    let mut subs = Vec::new();
    subtrees(t, &mut subs);
    !subs.iter().any(is_redex)
}

/// One outermost rewrite step, if any redex exists.
fn rewrite_once(t: &T) -> Option<T> {
    if let T::Node(l, r) = t {
        if l == r {
            return Some(T::One);
        }
        if let T::Node(ll, lr) = l.as_ref() {
            if lr == r {
                return Some(ll.as_ref().clone());
            }
        }
        if let Some(l2) = rewrite_once(l) {
            return Some(mul(l2, r.as_ref().clone()));
        }
        if let Some(r2) = rewrite_once(r) {
            return Some(mul(l.as_ref().clone(), r2));
        }
    }
    None
}

/// `π` by rewriting `uu → 1`, `(uv)v → u` outermost-first until nothing applies.
pub fn reduce(t: &T) -> T {
    let mut cur = t.clone();
    while let Some(next) = rewrite_once(&cur) {
        cur = next;
    }
    cur
}

/// Left-comb factors `y₁, y₂, …, y_m` with `y₁` a letter.
pub fn comb(y: &T) -> Vec<T> {
    match y {
        T::Node(l, r) => {
            let mut f = comb(l);
            f.push(r.as_ref().clone());
            f
        }
        other => vec![other.clone()],
    }
}

/// `y₁, …, y_k`: the comb of `y` with its last factor replaced by its own
/// comb read backwards.
pub fn fine(y: &T) -> Vec<T> {
    let mut f = comb(y);
    if f.len() == 1 {
        return f;
    }
    let last = f.pop().unwrap();
    let mut tail = comb(&last);
    tail.reverse();
    f.extend(tail);
    f
}

pub fn t(y: &T) -> T {
    let mut f = fine(y);
    f.reverse();
    chain(f)
}

pub fn tt(y: &T) -> T {
    chain(fine(y))
}

/// Every word of exactly `n` letters over `letters` symbols.
pub fn all_of_len(letters: u8, n: usize, memo: &mut HashMap<usize, Vec<T>>) -> Vec<T> {
    if let Some(v) = memo.get(&n) {
        return v.clone();
    }
    let v = if n == 1 {
        (0..letters).map(T::Leaf).collect()
    } else {
        let mut v = Vec::new();
        for k in 1..n {
            let ls = all_of_len(letters, k, memo);
            let rs = all_of_len(letters, n - k, memo);
            for l in &ls {
                for r in &rs {
                    v.push(node(l.clone(), r.clone()));
                }
            }
        }
        v
    };
    memo.insert(n, v.clone());
    v
}

pub fn all_upto(letters: u8, max_len: usize) -> Vec<T> {
    let mut memo = HashMap::new();
    (1..=max_len)
        .flat_map(|n| all_of_len(letters, n, &mut memo))
        .collect()
}

/// All words of length `n` grouped by their `tt` transpose.
pub fn tt_index(letters: u8, n: usize) -> HashMap<T, Vec<T>> {
    let mut memo = HashMap::new();
    let mut index: HashMap<T, Vec<T>> = HashMap::new();
    for x in all_of_len(letters, n, &mut memo) {
        index.entry(tt(&x)).or_default().push(x);
    }
    index
}

/// `y* = {x ∈ P : xᵗᵗ = yᵗ or xᵗᵗ = yᵗᵗ}`, looked up in an index of all
/// words of the same length.
pub fn star_by_search(y: &T, index: &HashMap<T, Vec<T>>) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for key in [t(y), tt(y)] {
        for x in index.get(&key).into_iter().flatten() {
            out.insert(to_word(x));
        }
    }
    out
}

/// Odd palindromic left-associated products of length at least three.
pub fn is_symmetric(y: &T) -> bool {
    // every way of writing y as a left-associated product p₁p₂…p_n is a
    // prefix of its comb joined into one head factor
    let f = comb(y);
    for head in 1..=f.len() {
        let mut seq = vec![chain(f[..head].iter().cloned())];
        seq.extend(f[head..].iter().cloned());
        let n = seq.len();
        if n >= 3 && n % 2 == 1 && (0..n / 2).all(|i| seq[i] == seq[n - 1 - i]) {
            return true;
        }
    }
    false
}

/// `D` straight from its definition: all `y₀ = min{yᵗ, yᵗᵗ}` with
/// `y, y₀, y₀ᵗ ∈ W` and `y₀ᵗ ≠ y₀`; letters are included.
pub fn d_set(letters: u8, max_len: usize) -> BTreeSet<Word> {
    let mut out: BTreeSet<Word> = (0..letters).map(|i| to_word(&T::Leaf(i))).collect();
    for y in all_upto(letters, max_len) {
        if y.len() < 2 || !in_w(&y) {
            continue;
        }
        let (a, b) = (t(&y), tt(&y));
        let y0 = if cmp(&a, &b) == Ordering::Greater {
            b
        } else {
            a
        };
        let y0t = t(&y0);
        if in_w(&y0) && in_w(&y0t) && y0t != y0 {
            out.insert(to_word(&y0));
        }
    }
    out
}

/// Whether `y` is a left-associated product `u₁u₂…u_m` (any `m ≥ 2`) of
/// members of `set`.
pub fn is_product_of(y: &T, set: &BTreeSet<Word>) -> bool {
    let f = comb(y);
    (1..f.len()).any(|head| {
        set.contains(&to_word(&chain(f[..head].iter().cloned())))
            && f[head..].iter().all(|u| set.contains(&to_word(u)))
    })
}

/// `R₁ ⊆ R₂ ⊆ … ⊆ R_max_len` from the fixpoint definition.
pub fn r_levels(letters: u8, max_len: usize) -> Vec<BTreeSet<Word>> {
    let d: Vec<T> = d_set(letters, max_len).iter().map(from_word).collect();
    let mut levels = vec![(0..letters)
        .map(|i| to_word(&T::Leaf(i)))
        .collect::<BTreeSet<_>>()];
    for n in 2..=max_len {
        let prev = levels.last().unwrap().clone();
        let mut cur = prev.clone();
        for y in d.iter().filter(|y| y.len() <= n) {
            if is_product_of(y, &prev) {
                cur.insert(to_word(y));
            }
        }
        levels.push(cur);
    }
    levels
}

/// `B` up to `max_len`: the identity plus reduced products of basis words.
pub fn b_set(letters: u8, max_len: usize) -> BTreeSet<Word> {
    let r = r_levels(letters, max_len).pop().unwrap();
    let mut out: BTreeSet<Word> = r.clone();
    out.insert(Word::Identity);
    for y in all_upto(letters, max_len) {
        if in_w(&y) && is_product_of(&y, &r) {
            out.insert(to_word(&y));
        }
    }
    out
}

/// Every palindrome `g₁…g_m…g₁` over `basis` with `m ≤ max_half` and no equal
/// neighbours, keyed by its reduced value. Values hit twice are returned
/// separately.
pub struct FormTable {
    pub by_value: BTreeMap<Word, Vec<Word>>,
    pub collisions: Vec<(Vec<Word>, Vec<Word>)>,
    pub forms: usize,
}

pub fn form_table(basis: &[Word], max_half: usize) -> FormTable {
    let mut table = FormTable {
        by_value: BTreeMap::new(),
        collisions: Vec::new(),
        forms: 0,
    };
    let mut frontier: Vec<Vec<Word>> = vec![Vec::new()];
    for _ in 0..max_half {
        let mut next = Vec::new();
        for half in &frontier {
            for g in basis {
                if half.last() == Some(g) {
                    continue;
                }
                let mut h = half.clone();
                h.push(g.clone());
                let full: Vec<T> = h
                    .iter()
                    .chain(h.iter().rev().skip(1))
                    .map(from_word)
                    .collect();
                let value = to_word(&reduce(&chain(full)));
                table.forms += 1;
                if let Some(prev) = table.by_value.insert(value, h.clone()) {
                    table.collisions.push((prev, h.clone()));
                }
                next.push(h);
            }
        }
        frontier = next;
    }
    table
}

/// `x ∘ y` from a known form of `y`: reduce `x g₁ … g_m … g₁` by rewriting.
pub fn loop_mul(x: &Word, y_half: &[Word]) -> Word {
    let mut items = vec![from_word(x)];
    items.extend(
        y_half
            .iter()
            .chain(y_half.iter().rev().skip(1))
            .map(from_word),
    );
    to_word(&reduce(&chain(items)))
}

pub fn alphabet(letters: &str) -> Alphabet {
    Alphabet::new(letters).unwrap()
}

pub fn parse(text: &str, a: &Alphabet) -> Word {
    bolword::parse(text, a).unwrap()
}

pub fn words(items: &[&str], a: &Alphabet) -> Vec<Word> {
    items.iter().map(|s| parse(s, a)).collect()
}
