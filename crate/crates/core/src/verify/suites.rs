use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::group::{act, group_mul, s_word, GroupWord};
use super::report::{CheckReport, Universe};
use super::{Suite, SuiteOptions};
use crate::basis::LoopElement;
use crate::bol::{BolLoop, PalindromicForm};
use crate::budget::Budget;
use crate::error::Result;
use crate::normalize::pi;
use crate::word::{all_words, Word};

/// How many cases run between budget checks.
const BUDGET_STRIDE: u64 = 512;

struct Ticker<'a> {
    budget: &'a Budget,
    count: u64,
}

impl<'a> Ticker<'a> {
    fn new(budget: &'a Budget) -> Ticker<'a> {
        Ticker { budget, count: 0 }
    }

    fn tick(&mut self) -> Result<()> {
        self.count += 1;
        if self.count.is_multiple_of(BUDGET_STRIDE) {
            self.budget.check()?;
        }
        Ok(())
    }
}

/// Runs one suite and stamps the elapsed time on its report.
pub fn run_suite(
    lp: &BolLoop,
    suite: Suite,
    opts: &SuiteOptions,
    budget: &Budget,
) -> Result<CheckReport> {
    let mut report = match suite {
        Suite::Bol | Suite::Exp2 | Suite::Rip | Suite::LeftAlt => {
            check_identity_suite(lp, suite, opts, budget)?
        }
        Suite::Nuclei => check_nuclei(lp, opts, budget)?,
        Suite::Canonical => check_canonical(lp, opts, budget)?,
        Suite::UniqueForm => check_unique_form(lp, opts, budget)?,
        Suite::Transversal => check_transversal(lp, opts, budget)?,
        Suite::PiAlgebra => check_pi_algebra(lp, opts, budget)?,
    };
    report.elapsed_ms = budget.elapsed().as_millis() as u64;
    Ok(report)
}

fn universe(lp: &BolLoop, bounds: String, seed: Option<u64>) -> Universe {
    Universe {
        alphabet: lp.alphabet().as_string(),
        bounds,
        seed,
    }
}

fn elements(lp: &BolLoop, max_len: usize, budget: &Budget) -> Result<Vec<LoopElement>> {
    Ok(lp
        .cache()
        .enumerate_b_within(max_len, budget)?
        .into_iter()
        .map(LoopElement::new_unchecked)
        .collect())
}

/// Calls `f` on every `K`-tuple of `pool`.
fn for_all_tuples<const K: usize, F>(
    pool: &[LoopElement],
    ticker: &mut Ticker,
    mut f: F,
) -> Result<()>
where
    F: FnMut([&LoopElement; K]) -> Result<()>,
{
    if pool.is_empty() {
        return Ok(());
    }
    let mut idx = [0usize; K];
    loop {
        f(idx.map(|i| &pool[i]))?;
        ticker.tick()?;
        let mut pos = K;
        loop {
            if pos == 0 {
                return Ok(());
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < pool.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Calls `f` on `count` random `K`-tuples of `pool`.
fn for_sampled_tuples<const K: usize, F>(
    pool: &[LoopElement],
    count: usize,
    seed: u64,
    ticker: &mut Ticker,
    mut f: F,
) -> Result<()>
where
    F: FnMut([&LoopElement; K]) -> Result<()>,
{
    if pool.is_empty() {
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let idx: [usize; K] = std::array::from_fn(|_| rng.random_range(0..pool.len()));
        f(idx.map(|i| &pool[i]))?;
        ticker.tick()?;
    }
    Ok(())
}

fn show(lp: &BolLoop, x: &LoopElement) -> String {
    lp.render(x.word())
}

/// The loop-axiom suites: `bol`, `exp2`, `rip` and `left-alt`.
///
/// Runs over every tuple of elements of length at most `opts.max_len`, then
/// over `opts.samples` random tuples of length at most `opts.sample_len`.
pub fn check_identity_suite(
    lp: &BolLoop,
    suite: Suite,
    opts: &SuiteOptions,
    budget: &Budget,
) -> Result<CheckReport> {
    let sampled = opts.samples > 0;
    let mut bounds = format!("elements of length <= {}", opts.max_len);
    if sampled {
        bounds.push_str(&format!(
            "; {} sampled tuples of length <= {}",
            opts.samples, opts.sample_len
        ));
    }
    let mut report = CheckReport::new(
        suite.name(),
        universe(lp, bounds, sampled.then_some(opts.seed)),
    );
    let mut ticker = Ticker::new(budget);
    let pool = elements(lp, opts.max_len, budget)?;
    let sample_pool = if sampled {
        elements(lp, opts.sample_len, budget)?
    } else {
        Vec::new()
    };

    for (pool, exhaustive) in [(&pool, true), (&sample_pool, false)] {
        if !exhaustive && !sampled {
            continue;
        }
        match suite {
            Suite::Bol => {
                let mut check = |[x, y, z]: [&LoopElement; 3]| -> Result<()> {
                    let lhs = lp.mul(&lp.mul(&lp.mul(x, y)?, z)?, y)?;
                    let rhs = lp.mul(x, &lp.mul(&lp.mul(y, z)?, y)?)?;
                    report.expect(lhs == rhs, || {
                        format!(
                            "x={} y={} z={}: ((xy)z)y={} but x((yz)y)={}",
                            show(lp, x),
                            show(lp, y),
                            show(lp, z),
                            show(lp, &lhs),
                            show(lp, &rhs)
                        )
                    });
                    Ok(())
                };
                if exhaustive {
                    for_all_tuples(pool, &mut ticker, &mut check)?;
                } else {
                    for_sampled_tuples(pool, opts.samples, opts.seed, &mut ticker, &mut check)?;
                }
            }
            Suite::Exp2 => {
                let one = LoopElement::identity();
                let mut check = |[x]: [&LoopElement; 1]| -> Result<()> {
                    let sq = lp.mul(x, x)?;
                    report.expect(sq.is_identity(), || {
                        format!("x={}: xx={}", show(lp, x), show(lp, &sq))
                    });
                    let left = lp.mul(&one, x)?;
                    let right = lp.mul(x, &one)?;
                    report.expect(left == *x && right == *x, || {
                        format!(
                            "x={}: 1x={} x1={}",
                            show(lp, x),
                            show(lp, &left),
                            show(lp, &right)
                        )
                    });
                    Ok(())
                };
                if exhaustive {
                    for_all_tuples(pool, &mut ticker, &mut check)?;
                } else {
                    for_sampled_tuples(pool, opts.samples, opts.seed, &mut ticker, &mut check)?;
                }
            }
            Suite::Rip => {
                let mut check = |[x, y]: [&LoopElement; 2]| -> Result<()> {
                    let back = lp.mul(&lp.mul(x, y)?, y)?;
                    report.expect(back == *x, || {
                        format!(
                            "x={} y={}: (xy)y={}",
                            show(lp, x),
                            show(lp, y),
                            show(lp, &back)
                        )
                    });
                    let alt = lp.mul(x, &lp.mul(y, y)?)?;
                    report.expect(alt == back, || {
                        format!(
                            "x={} y={}: x(yy)={} but (xy)y={}",
                            show(lp, x),
                            show(lp, y),
                            show(lp, &alt),
                            show(lp, &back)
                        )
                    });
                    Ok(())
                };
                if exhaustive {
                    for_all_tuples(pool, &mut ticker, &mut check)?;
                } else {
                    for_sampled_tuples(pool, opts.samples, opts.seed, &mut ticker, &mut check)?;
                }
            }
            Suite::LeftAlt => {
                let mut check = |[x, z]: [&LoopElement; 2]| -> Result<()> {
                    if x.is_identity() || z.is_identity() || x == z {
                        report.skip();
                        return Ok(());
                    }
                    let r = lp.mul(x, &lp.mul(x, z)?)?;
                    report.expect(r != *z, || {
                        format!("x={} z={}: x(xz)=z", show(lp, x), show(lp, z))
                    });
                    Ok(())
                };
                if exhaustive {
                    for_all_tuples(pool, &mut ticker, &mut check)?;
                } else {
                    for_sampled_tuples(pool, opts.samples, opts.seed, &mut ticker, &mut check)?;
                }
            }
            other => {
                return Err(crate::error::Error::Internal(format!(
                    "`{other}` is not an identity suite"
                )))
            }
        }
    }
    Ok(report)
}

/// Nuclei and associativity over elements of length at most `opts.max_len`.
///
/// With two or more letters no non-identity element may be left, middle or
/// right nuclear on the enumerated set, and at least one triple must fail to
/// associate. With one letter the loop is the group of order two, and that
/// table is checked instead.
fn check_nuclei(lp: &BolLoop, opts: &SuiteOptions, budget: &Budget) -> Result<CheckReport> {
    let bounds = format!("elements of length <= {}", opts.max_len);
    let mut report = CheckReport::new(Suite::Nuclei.name(), universe(lp, bounds, None));
    let mut ticker = Ticker::new(budget);
    let pool = elements(lp, opts.max_len, budget)?;

    if lp.alphabet().len() == 1 {
        report.expect(pool.len() == 2, || {
            format!("expected exactly {{1, a}}, found {} elements", pool.len())
        });
        for_all_tuples(&pool, &mut ticker, |[x, y, z]: [&LoopElement; 3]| {
            let lhs = lp.mul(&lp.mul(x, y)?, z)?;
            let rhs = lp.mul(x, &lp.mul(y, z)?)?;
            report.expect(lhs == rhs, || {
                format!(
                    "x={} y={} z={} do not associate",
                    show(lp, x),
                    show(lp, y),
                    show(lp, z)
                )
            });
            Ok(())
        })?;
        report.note("one letter: the loop is the group of order two, so every element is nuclear");
        return Ok(report);
    }

    let associates = |x: &LoopElement, y: &LoopElement, z: &LoopElement| -> Result<bool> {
        Ok(lp.mul(&lp.mul(x, y)?, z)? == lp.mul(x, &lp.mul(y, z)?)?)
    };

    let mut witness: Option<String> = None;
    'search: for x in &pool {
        for y in &pool {
            for z in &pool {
                ticker.tick()?;
                if !associates(x, y, z)? {
                    witness = Some(format!(
                        "({}∘{})∘{} != {}∘({}∘{})",
                        show(lp, x),
                        show(lp, y),
                        show(lp, z),
                        show(lp, x),
                        show(lp, y),
                        show(lp, z)
                    ));
                    break 'search;
                }
            }
        }
    }
    report.expect(witness.is_some(), || {
        "every enumerated triple associates".to_string()
    });
    if let Some(w) = witness {
        report.note(format!("associativity fails: {w}"));
    }

    for a in pool.iter().filter(|a| !a.is_identity()) {
        for (kind, position) in [("left", 0), ("middle", 1), ("right", 2)] {
            let mut escapes = false;
            'pairs: for x in &pool {
                for y in &pool {
                    ticker.tick()?;
                    let triple = match position {
                        0 => [a, x, y],
                        1 => [x, a, y],
                        _ => [x, y, a],
                    };
                    if !associates(triple[0], triple[1], triple[2])? {
                        escapes = true;
                        break 'pairs;
                    }
                }
            }
            report.expect(escapes, || {
                format!(
                    "{} lies in the {kind} nucleus of the enumerated set",
                    show(lp, a)
                )
            });
        }
    }
    Ok(report)
}

/// The canonical form of every element of length at most `opts.max_len`
/// is a valid palindromic form whose value, both through `π` and through the
/// group action, is the element itself.
fn check_canonical(lp: &BolLoop, opts: &SuiteOptions, budget: &Budget) -> Result<CheckReport> {
    let bounds = format!("elements of length <= {}", opts.max_len);
    let mut report = CheckReport::new(Suite::Canonical.name(), universe(lp, bounds, None));
    let mut ticker = Ticker::new(budget);
    let one = LoopElement::identity();
    for g in elements(lp, opts.max_len, budget)? {
        ticker.tick()?;
        if g.is_identity() {
            report.skip();
            continue;
        }
        let form = lp.symmetric_form(&g)?;
        let valid = PalindromicForm::new(form.half().to_vec(), lp.cache()).is_ok();
        report.expect(valid, || {
            format!(
                "{}: form {} is not well formed",
                show(lp, &g),
                render_half(lp, &form)
            )
        });
        let value = form.value();
        report.expect(value == *g.word(), || {
            format!(
                "{}: form {} evaluates to {}",
                show(lp, &g),
                render_half(lp, &form),
                lp.render(&value)
            )
        });
        let acted = act(lp, &one, &GroupWord::new(form.full_sequence()))?;
        report.expect(acted == g, || {
            format!(
                "{}: form {} acts on 1 as {}",
                show(lp, &g),
                render_half(lp, &form),
                show(lp, &acted)
            )
        });
    }
    Ok(report)
}

fn render_half(lp: &BolLoop, form: &PalindromicForm) -> String {
    let parts: Vec<String> = form.half().iter().map(|y| lp.render(y)).collect();
    format!("[{}]", parts.join(", "))
}

/// Every sequence of length `1..=max_len` over `alphabet` with no equal
/// neighbours.
fn reduced_sequences(alphabet: &[Word], max_len: usize) -> Vec<Vec<Word>> {
    let mut out: Vec<Vec<Word>> = Vec::new();
    let mut frontier: Vec<Vec<Word>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &frontier {
            for y in alphabet {
                if seq.last() != Some(y) {
                    let mut s = seq.clone();
                    s.push(y.clone());
                    next.push(s);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Distinct palindromic forms with halves of length at most `opts.half_len`
/// and entries in `R` of length at most `opts.factor_len` denote distinct
/// non-identity elements, and each is the form the canonical algorithm finds.
fn check_unique_form(lp: &BolLoop, opts: &SuiteOptions, budget: &Budget) -> Result<CheckReport> {
    let bounds = format!(
        "halves of length <= {}, entries in R of length <= {}",
        opts.half_len, opts.factor_len
    );
    let mut report = CheckReport::new(Suite::UniqueForm.name(), universe(lp, bounds, None));
    let mut ticker = Ticker::new(budget);
    let r = lp.cache().enumerate_r_within(opts.factor_len, budget)?;
    let one = LoopElement::identity();
    let mut seen: HashMap<Word, Vec<Word>> = HashMap::new();

    for half in reduced_sequences(&r, opts.half_len) {
        ticker.tick()?;
        let form = PalindromicForm::new(half.clone(), lp.cache())?;
        let value = form.value();
        let label = render_half(lp, &form);
        report.expect(!value.is_identity() && lp.cache().in_b(&value), || {
            format!(
                "form {label} evaluates to {} outside B \\ {{1}}",
                lp.render(&value)
            )
        });
        if value.is_identity() {
            continue;
        }
        let g = LoopElement::new_unchecked(value.clone());
        let acted = act(lp, &one, &GroupWord::new(form.full_sequence()))?;
        report.expect(acted == g, || {
            format!(
                "form {label}: pi gives {} but the action gives {}",
                show(lp, &g),
                show(lp, &acted)
            )
        });
        let canonical = lp.symmetric_form(&g)?;
        report.expect(canonical == form, || {
            format!(
                "form {label} denotes {} whose canonical form is {}",
                show(lp, &g),
                render_half(lp, &canonical)
            )
        });
        if let Some(other) = seen.insert(value.clone(), half) {
            let other = PalindromicForm::from_half_unchecked(other);
            report.fail(format!(
                "forms {} and {label} both denote {}",
                render_half(lp, &other),
                lp.render(&value)
            ));
        }
    }
    report.note(format!("{} distinct elements", seen.len()));
    Ok(report)
}

/// For reduced group words `g` of length at most `opts.generators` over `R`
/// words of length at most `opts.factor_len`: when `1^g ≠ 1`, the product
/// `g·S(g)` fixes the identity.
pub fn check_transversal(
    lp: &BolLoop,
    opts: &SuiteOptions,
    budget: &Budget,
) -> Result<CheckReport> {
    let bounds = format!(
        "group words of length <= {} over R of length <= {}",
        opts.generators, opts.factor_len
    );
    let mut report = CheckReport::new(Suite::Transversal.name(), universe(lp, bounds, None));
    let mut ticker = Ticker::new(budget);
    let r = lp.cache().enumerate_r_within(opts.factor_len, budget)?;
    let one = LoopElement::identity();
    for gens in reduced_sequences(&r, opts.generators) {
        ticker.tick()?;
        let g = GroupWord::new(gens);
        if act(lp, &one, &g)?.is_identity() {
            report.skip();
            continue;
        }
        let s = s_word(lp, &g)?;
        let h = group_mul(&g, &s);
        let fixed = act(lp, &one, &h)?;
        report.expect(fixed.is_identity(), || {
            format!(
                "g={}: 1^(g S(g)) = {}",
                g.render(lp.alphabet()),
                show(lp, &fixed)
            )
        });
    }
    Ok(report)
}

/// Laws of `π` checked on every word (reduced or not) of length at most
/// `opts.max_len`:
///
/// * `π(uv) = π(π(u)π(v))`;
/// * `π((uv)v) = π(u(vv)) = π(u)`;
/// * `π(u) = π(v)` iff `π(uw) = π(vw)`;
/// * `π(uv) = π(uw)` implies `π(v) = π(w)`;
/// * `π(v₁⋯vₙ) = a` implies `π(a vₙ ⋯ v₁) = 1`.
fn check_pi_algebra(lp: &BolLoop, opts: &SuiteOptions, budget: &Budget) -> Result<CheckReport> {
    let n = opts.max_len;
    let bounds = format!("all words of length <= {n}");
    let mut report = CheckReport::new(Suite::PiAlgebra.name(), universe(lp, bounds, None));
    let mut ticker = Ticker::new(budget);
    let a = lp.alphabet();
    let levels = all_words(a, n);
    let words: Vec<&Word> = levels.iter().flatten().collect();
    let reduced: HashMap<&Word, Word> = words.iter().map(|w| (*w, pi(w).into_word())).collect();
    let show_w = |w: &Word| lp.render(w);

    // π(uv) = π(π(u)π(v)) and the two cancellation laws.
    for u in &words {
        for v in words.iter().filter(|v| u.len() + v.len() <= n) {
            ticker.tick()?;
            let direct = pi(&Word::pair((*u).clone(), (*v).clone())).into_word();
            let via = pi(&Word::join(reduced[u].clone(), reduced[v].clone())).into_word();
            report.expect(direct == via, || {
                format!(
                    "u={} v={}: pi(uv)={} but pi(pi(u)pi(v))={}",
                    show_w(u),
                    show_w(v),
                    show_w(&direct),
                    show_w(&via)
                )
            });
            if u.len() + 2 * v.len() <= n {
                let uv_v = Word::pair(Word::pair((*u).clone(), (*v).clone()), (*v).clone());
                let u_vv = Word::pair((*u).clone(), Word::pair((*v).clone(), (*v).clone()));
                let (p1, p2) = (pi(&uv_v).into_word(), pi(&u_vv).into_word());
                report.expect(p1 == reduced[u] && p2 == reduced[u], || {
                    format!(
                        "u={} v={}: pi((uv)v)={} pi(u(vv))={} pi(u)={}",
                        show_w(u),
                        show_w(v),
                        show_w(&p1),
                        show_w(&p2),
                        show_w(&reduced[u])
                    )
                });
            }
        }
    }

    // Right cancellation: π(u) = π(v) iff π(uw) = π(vw).
    for w in &words {
        let partners: Vec<(&Word, Word)> = words
            .iter()
            .filter(|u| u.len() + w.len() <= n)
            .map(|u| (*u, pi(&Word::pair((*u).clone(), (*w).clone())).into_word()))
            .collect();
        for (i, (u, uw)) in partners.iter().enumerate() {
            for (v, vw) in &partners[i..] {
                ticker.tick()?;
                let same = reduced[u] == reduced[v];
                report.expect(same == (uw == vw), || {
                    format!(
                        "u={} v={} w={}: pi(u)=pi(v) is {same} but pi(uw)=pi(vw) is {}",
                        show_w(u),
                        show_w(v),
                        show_w(w),
                        uw == vw
                    )
                });
            }
        }
    }

    // Left cancellation: π(uv) = π(uw) implies π(v) = π(w).
    for u in &words {
        let partners: Vec<(&Word, Word)> = words
            .iter()
            .filter(|v| u.len() + v.len() <= n)
            .map(|v| (*v, pi(&Word::pair((*u).clone(), (*v).clone())).into_word()))
            .collect();
        let mut by_value: HashMap<&Word, &Word> = HashMap::new();
        for (v, uv) in &partners {
            ticker.tick()?;
            report.case();
            match by_value.get(uv) {
                Some(w) if reduced[*w] != reduced[v] => report.fail(format!(
                    "u={} v={} w={}: pi(uv)=pi(uw) but pi(v)!=pi(w)",
                    show_w(u),
                    show_w(v),
                    show_w(w)
                )),
                Some(_) => {}
                None => {
                    by_value.insert(uv, v);
                }
            }
        }
    }

    // Undoing a chain: π(v₁⋯vₙ) = a implies π(a vₙ ⋯ v₁) = 1.
    let mut stack: Vec<&Word> = Vec::new();
    chain_sequences(&words, n, &mut stack, &mut |seq: &[&Word]| -> Result<()> {
        ticker.tick()?;
        let value = pi(&Word::chain(seq.iter().map(|w| (*w).clone()))).into_word();
        let undone = pi(&Word::chain(
            std::iter::once(value.clone()).chain(seq.iter().rev().map(|w| (*w).clone())),
        ));
        report.expect(undone.is_identity(), || {
            let parts: Vec<String> = seq.iter().map(|w| show_w(w)).collect();
            format!(
                "v=[{}]: pi(a v_n ... v_1)={}",
                parts.join(", "),
                show_w(undone.word())
            )
        });
        Ok(())
    })?;

    Ok(report)
}

/// Calls `f` on every non-empty sequence from `words` of total length at most `budget_len`.
fn chain_sequences<'w, F>(
    words: &[&'w Word],
    budget_len: usize,
    stack: &mut Vec<&'w Word>,
    f: &mut F,
) -> Result<()>
where
    F: FnMut(&[&'w Word]) -> Result<()>,
{
    for w in words.iter().filter(|w| w.len() <= budget_len) {
        stack.push(w);
        f(stack)?;
        chain_sequences(words, budget_len - w.len(), stack, f)?;
        stack.pop();
    }
    Ok(())
}
