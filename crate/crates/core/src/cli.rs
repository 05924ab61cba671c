//! The `bolword` command line.
//!
//! Exit codes: 0 success, 1 a check failed or a division found no solution,
//! 2 bad arguments or unparsable input, 3 the input is not a loop element (or
//! is the identity where that is not allowed), 4 the time budget ran out,
//! 5 an internal consistency check failed.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::basis::{BVerdict, LoopElement, RVerdict};
use crate::bol::BolLoop;
use crate::budget::Budget;
use crate::error::Error;
use crate::normalize::{in_w, pi};
use crate::verify::{run_suite, Suite, SuiteOptions};
use crate::word::{
    compare, is_symmetric, parse, render, spine, star_set, transpose_t, transpose_tt, Alphabet,
    Notation, Word,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NOT_IN_LOOP: i32 = 3;
pub const EXIT_BUDGET: i32 = 4;
pub const EXIT_INTERNAL: i32 = 5;

#[derive(Debug, Parser)]
#[command(
    name = "bolword",
    version,
    about = "Normal forms and multiplication in the free Bol loop of exponent two"
)]
pub struct Cli {
    /// Ordered alphabet of letters, smallest first.
    #[arg(long, short, global = true, default_value = "ab")]
    pub alphabet: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// How compound words are written.
    #[arg(long, global = true, value_enum, default_value_t = NotationArg::Nested)]
    pub notation: NotationArg,

    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Wall-clock budget in milliseconds.
    #[arg(long, global = true)]
    pub budget: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum NotationArg {
    /// Every compound factor in parentheses: `((ba)b)a`.
    Nested,
    /// Left-associated products without parentheses: `baba`.
    Compact,
}

impl From<NotationArg> for Notation {
    fn from(n: NotationArg) -> Notation {
        match n {
            NotationArg::Nested => Notation::Nested,
            NotationArg::Compact => Notation::Compact,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SetName {
    #[value(name = "W", alias = "w")]
    W,
    #[value(name = "D", alias = "d")]
    D,
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "B", alias = "b")]
    B,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Reduce a word to its normal form.
    Normalize { word: String },
    /// Multiply two loop elements.
    Mul { x: String, y: String },
    /// Print the canonical palindromic form of a loop element.
    Canon { g: String },
    /// Solve a∘x = b for x by searching elements up to a length bound.
    Ldiv {
        a: String,
        b: String,
        /// Longest candidate tried; defaults to max(|a|, |b|) + 1.
        #[arg(long)]
        bound: Option<usize>,
    },
    /// Solve x∘a = b for x.
    Rdiv { b: String, a: String },
    /// List a set of words: W (exact length) or D, R, B (up to the length).
    Enum {
        #[arg(value_enum)]
        set: SetName,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
    /// Membership of a word in W, D, R and B, with reasons.
    Member { word: String },
    /// Compare two words in the word order.
    Compare { u: String, v: String },
    /// Spine, transposes and the star set of a word.
    Transpose { y: String },
    /// Run a property suite over a bounded universe.
    Check {
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
        /// Random tuples added after the exhaustive pass.
        #[arg(long, default_value_t = 0)]
        samples: usize,
        #[arg(long, default_value_t = 5)]
        sample_len: usize,
        /// Longest half of a palindromic form.
        #[arg(long = "half", default_value_t = 3)]
        half_len: usize,
        /// Longest basis word used as a form entry or generator.
        #[arg(long, default_value_t = 5)]
        factor_len: usize,
        /// Longest group word.
        #[arg(long, default_value_t = 3)]
        generators: usize,
    },
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let rendered = e.render().to_string();
            if code == EXIT_OK {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    execute(&cli, out, err)
}

/// Runs an already parsed command.
pub fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = Alphabet::new(&cli.alphabet).and_then(|alphabet| {
        let ctx = Context {
            lp: BolLoop::new(alphabet),
            notation: cli.notation.into(),
            format: cli.format,
            budget: cli.budget.map(Budget::millis).unwrap_or_default(),
            seed: cli.seed,
        };
        ctx.dispatch(&cli.command)
    });
    match result {
        Ok(output) => {
            let _ = out.write_all(output.text.as_bytes());
            output.code
        }
        Err(e) => {
            let code = exit_code(&e);
            match cli.format {
                Format::Json => {
                    let v = json!({ "error": e.to_string(), "exit_code": code });
                    let _ = writeln!(out, "{}", serde_json::to_string_pretty(&v).unwrap());
                }
                Format::Text => {}
            }
            let _ = writeln!(err, "error: {e}");
            code
        }
    }
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Alphabet(_) | Error::Syntax { .. } | Error::UnknownLetter { .. } => EXIT_USAGE,
        Error::IdentityInput(_) | Error::NotInLoop { .. } => EXIT_NOT_IN_LOOP,
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::Internal(_) => EXIT_INTERNAL,
    }
}

struct Output {
    text: String,
    code: i32,
}

struct Context {
    lp: BolLoop,
    notation: Notation,
    format: Format,
    budget: Budget,
    seed: u64,
}

impl Context {
    fn alphabet(&self) -> &Alphabet {
        self.lp.alphabet()
    }

    fn show(&self, w: &Word) -> String {
        render(w, self.alphabet(), self.notation)
    }

    fn word(&self, text: &str) -> crate::Result<Word> {
        parse(text, self.alphabet())
    }

    fn nonidentity(&self, text: &str, op: &'static str) -> crate::Result<Word> {
        let w = self.word(text)?;
        if w.is_identity() {
            return Err(Error::IdentityInput(op));
        }
        Ok(w)
    }

    fn element(&self, text: &str) -> crate::Result<LoopElement> {
        self.lp.element(self.word(text)?)
    }

    /// Emits `text` or pretty-printed `json` depending on the format.
    fn emit(&self, text: String, json: Value) -> Output {
        self.emit_with(text, json, EXIT_OK)
    }

    fn emit_with(&self, text: String, json: Value, code: i32) -> Output {
        let text = match self.format {
            Format::Text => text,
            Format::Json => format!("{}\n", serde_json::to_string_pretty(&json).unwrap()),
        };
        Output { text, code }
    }

    fn dispatch(&self, command: &Command) -> crate::Result<Output> {
        match command {
            Command::Normalize { word } => {
                let w = self.word(word)?;
                let r = pi(&w);
                let shown = self.show(r.word());
                Ok(self.emit(
                    format!("{shown}\n"),
                    json!({ "input": self.show(&w), "normal_form": shown, "was_reduced": in_w(&w) }),
                ))
            }
            Command::Mul { x, y } => {
                let (x, y) = (self.element(x)?, self.element(y)?);
                let p = self.lp.mul(&x, &y)?;
                let shown = self.show(p.word());
                Ok(self.emit(
                    format!("{shown}\n"),
                    json!({ "x": self.show(x.word()), "y": self.show(y.word()), "product": shown }),
                ))
            }
            Command::Rdiv { b, a } => {
                let (b, a) = (self.element(b)?, self.element(a)?);
                let q = self.lp.rdiv(&b, &a)?;
                let shown = self.show(q.word());
                Ok(self.emit(
                    format!("{shown}\n"),
                    json!({ "b": self.show(b.word()), "a": self.show(a.word()), "quotient": shown }),
                ))
            }
            Command::Ldiv { a, b, bound } => {
                let (a, b) = (self.element(a)?, self.element(b)?);
                let bound = bound.unwrap_or(a.word().len().max(b.word().len()) + 1);
                match self.lp.ldiv_within(&a, &b, bound, &self.budget)? {
                    Some(q) => {
                        let shown = self.show(q.word());
                        Ok(self.emit(
                            format!("{shown}\n"),
                            json!({ "a": self.show(a.word()), "b": self.show(b.word()), "bound": bound, "quotient": shown }),
                        ))
                    }
                    None => Ok(self.emit_with(
                        format!("no solution of length <= {bound}\n"),
                        json!({ "a": self.show(a.word()), "b": self.show(b.word()), "bound": bound, "quotient": Value::Null }),
                        EXIT_FAILED,
                    )),
                }
            }
            Command::Canon { g } => self.canon(g),
            Command::Enum { set, max_len } => self.enumerate(*set, *max_len),
            Command::Member { word } => self.member(word),
            Command::Compare { u, v } => {
                let (u, v) = (
                    self.nonidentity(u, "compare")?,
                    self.nonidentity(v, "compare")?,
                );
                let symbol = match compare(&u, &v)? {
                    std::cmp::Ordering::Less => "<",
                    std::cmp::Ordering::Equal => "=",
                    std::cmp::Ordering::Greater => ">",
                };
                let (su, sv) = (self.show(&u), self.show(&v));
                Ok(self.emit(
                    format!("{su} {symbol} {sv}\n"),
                    json!({ "u": su, "v": sv, "order": symbol }),
                ))
            }
            Command::Transpose { y } => self.transpose(y),
            Command::Check {
                suite,
                max_len,
                samples,
                sample_len,
                half_len,
                factor_len,
                generators,
            } => {
                let opts = SuiteOptions {
                    max_len: *max_len,
                    sample_len: *sample_len,
                    samples: *samples,
                    seed: self.seed,
                    half_len: *half_len,
                    factor_len: *factor_len,
                    generators: *generators,
                };
                let report = run_suite(&self.lp, *suite, &opts, &self.budget)?;
                let code = if report.is_pass() {
                    EXIT_OK
                } else {
                    EXIT_FAILED
                };
                Ok(self.emit_with(
                    report.to_text(),
                    serde_json::to_value(&report).expect("reports serialize"),
                    code,
                ))
            }
        }
    }

    fn canon(&self, g: &str) -> crate::Result<Output> {
        let g = self.element(g)?;
        if g.is_identity() {
            return Err(Error::IdentityInput("canon"));
        }
        let form = self.lp.symmetric_form(&g)?;
        let half: Vec<String> = form.half().iter().map(|y| self.show(y)).collect();
        let text: String = half.iter().map(|s| format!("{s}\n")).collect();
        Ok(self.emit(text, json!(half)))
    }

    fn enumerate(&self, set: SetName, max_len: usize) -> crate::Result<Output> {
        let cache = self.lp.cache();
        let words = match set {
            SetName::W => cache.enumerate_w_within(max_len, &self.budget)?,
            SetName::D => cache.enumerate_d_within(max_len, &self.budget)?,
            SetName::R => cache.enumerate_r_within(max_len, &self.budget)?,
            SetName::B => cache.enumerate_b_within(max_len, &self.budget)?,
        };
        let shown: Vec<String> = words.iter().map(|w| self.show(w)).collect();
        let name = format!("{set:?}");
        let mut text = String::new();
        for s in &shown {
            text.push_str(s);
            text.push('\n');
        }
        text.push_str(&format!("count: {}\n", shown.len()));
        let bound = if set == SetName::W { "len" } else { "max_len" };
        Ok(self.emit(
            text,
            json!({ "set": name, bound: max_len, "count": shown.len(), "words": shown }),
        ))
    }

    fn member(&self, text: &str) -> crate::Result<Output> {
        let w = self.word(text)?;
        let cache = self.lp.cache();
        let shown = self.show(&w);
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        if w.is_identity() {
            return Ok(self.emit(
                "1\nW: yes\nD: no\nR: no\nB: yes (identity)\n".into(),
                json!({ "word": shown, "W": true, "D": false, "R": false, "B": true }),
            ));
        }
        let w_member = in_w(&w);
        let r = cache.r_verdict(&w)?;
        let d_member = !matches!(r, RVerdict::NotInD(_));
        let r_member = r == RVerdict::Member;
        let b = cache.b_verdict(&w);
        let b_member = b == BVerdict::Member;
        let symmetric = is_symmetric(&w)?;
        let d_note = match &r {
            RVerdict::NotInD(_) => format!(" ({})", r.describe(self.alphabet())),
            _ => String::new(),
        };
        let r_note = match &r {
            RVerdict::Factor { .. } => format!(" ({})", r.describe(self.alphabet())),
            _ => String::new(),
        };
        let b_note = if b_member {
            String::new()
        } else {
            format!(" ({})", b.describe(self.alphabet()))
        };
        let out = format!(
            "{shown}\nW: {}\nD: {}{d_note}\nR: {}{r_note}\nB: {}{b_note}\nsymmetric: {}\n",
            yes_no(w_member),
            yes_no(d_member),
            yes_no(r_member),
            yes_no(b_member),
            yes_no(symmetric),
        );
        Ok(self.emit(
            out,
            json!({
                "word": shown,
                "W": w_member,
                "D": d_member,
                "R": r_member,
                "B": b_member,
                "symmetric": symmetric,
                "R_reason": if r_member { Value::Null } else { json!(r.describe(self.alphabet())) },
                "B_reason": if b_member { Value::Null } else { json!(b.describe(self.alphabet())) },
            }),
        ))
    }

    fn transpose(&self, y: &str) -> crate::Result<Output> {
        let y = self.nonidentity(y, "transpose")?;
        let sp = spine(&y)?;
        let factors: Vec<String> = sp.factors().iter().map(|f| self.show(f)).collect();
        let t = self.show(&transpose_t(&y)?);
        let tt = self.show(&transpose_tt(&y)?);
        let star: Vec<String> = star_set(&y)?.iter().map(|w| self.show(w)).collect();
        let text = format!(
            "word: {}\nspine: [{}]\nnorm: {}\nt: {t}\ntt: {tt}\nstar ({}):\n{}",
            self.show(&y),
            factors.join(", "),
            sp.norm(),
            star.len(),
            star.iter().map(|s| format!("  {s}\n")).collect::<String>()
        );
        Ok(self.emit(
            text,
            json!({
                "word": self.show(&y),
                "spine": factors,
                "norm": sp.norm(),
                "t": t,
                "tt": tt,
                "star": star,
                "star_size": star.len(),
            }),
        ))
    }
}
