//! Concrete syntax for words.
//!
//! ```text
//! expr := term term*        juxtaposition associates to the left
//! term := LETTER | "(" expr ")"
//! ```
//!
//! The text `1` on its own denotes the identity. Whitespace is ignored.

use super::{Alphabet, Word};
use crate::error::{Error, Result};

/// How [`render`] places parentheses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    /// Every compound factor is parenthesized: `((ba)b)a`, `(a(bc))((ca)b)`.
    #[default]
    Nested,
    /// Left-associated chains are written without parentheses: `baba`, `a(bc)((ca)b)`.
    Compact,
}

struct Parser<'a> {
    chars: Vec<(usize, char)>,
    pos: usize,
    alphabet: &'a Alphabet,
    text_len: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<(usize, char)> {
        self.chars.get(self.pos).copied()
    }

    fn offset(&self) -> usize {
        self.peek().map_or(self.text_len, |(p, _)| p)
    }

    fn expr(&mut self) -> Result<Word> {
        let mut acc = self.term()?;
        while let Some((_, c)) = self.peek() {
            if c == ')' {
                break;
            }
            let next = self.term()?;
            acc = Word::pair(acc, next);
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Word> {
        match self.peek() {
            None => Err(Error::Syntax {
                pos: self.text_len,
                msg: "unexpected end of input".into(),
            }),
            Some((p, '(')) => {
                self.pos += 1;
                if matches!(self.peek(), Some((_, ')'))) {
                    return Err(Error::Syntax {
                        pos: self.offset(),
                        msg: "empty parentheses".into(),
                    });
                }
                let inner = self.expr()?;
                match self.peek() {
                    Some((_, ')')) => {
                        self.pos += 1;
                        Ok(inner)
                    }
                    _ => Err(Error::Syntax {
                        pos: p,
                        msg: "unclosed parenthesis".into(),
                    }),
                }
            }
            Some((p, ')')) => Err(Error::Syntax {
                pos: p,
                msg: "unexpected ')'".into(),
            }),
            Some((p, '1')) => Err(Error::Syntax {
                pos: p,
                msg: "the identity '1' may only appear on its own".into(),
            }),
            Some((p, c)) => {
                self.pos += 1;
                self.alphabet
                    .letter_of(c)
                    .map(Word::leaf)
                    .ok_or(Error::UnknownLetter { letter: c, pos: p })
            }
        }
    }
}

/// Parses a word written in the notation above.
pub fn parse(text: &str, alphabet: &Alphabet) -> Result<Word> {
    let chars: Vec<(usize, char)> = text
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .collect();
    if chars.is_empty() {
        return Err(Error::Syntax {
            pos: 0,
            msg: "empty input".into(),
        });
    }
    if chars.len() == 1 && chars[0].1 == '1' {
        return Ok(Word::Identity);
    }
    let mut parser = Parser {
        chars,
        pos: 0,
        alphabet,
        text_len: text.len(),
    };
    let word = parser.expr()?;
    if let Some((p, _)) = parser.peek() {
        return Err(Error::Syntax {
            pos: p,
            msg: "unmatched ')'".into(),
        });
    }
    Ok(word)
}

/// Writes `w` in the given notation. The identity renders as `1`.
pub fn render(w: &Word, alphabet: &Alphabet, notation: Notation) -> String {
    let mut out = String::with_capacity(w.len() * 2);
    match w {
        Word::Identity => out.push('1'),
        _ => match notation {
            Notation::Nested => nested(w, alphabet, &mut out),
            Notation::Compact => compact(w, alphabet, &mut out),
        },
    }
    out
}

fn nested(w: &Word, alphabet: &Alphabet, out: &mut String) {
    match w {
        Word::Identity => out.push('1'),
        Word::Leaf(l) => out.push(alphabet.char_of(*l)),
        Word::Pair(node) => {
            for child in [&node.left, &node.right] {
                if child.is_leaf() {
                    nested(child, alphabet, out);
                } else {
                    out.push('(');
                    nested(child, alphabet, out);
                    out.push(')');
                }
            }
        }
    }
}

fn compact(w: &Word, alphabet: &Alphabet, out: &mut String) {
    match w {
        Word::Identity => out.push('1'),
        Word::Leaf(l) => out.push(alphabet.char_of(*l)),
        Word::Pair(node) => {
            compact(&node.left, alphabet, out);
            if node.right.is_leaf() {
                compact(&node.right, alphabet, out);
            } else {
                out.push('(');
                compact(&node.right, alphabet, out);
                out.push(')');
            }
        }
    }
}
