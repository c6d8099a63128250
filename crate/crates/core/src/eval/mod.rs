//! Word-level evaluation against a gold parallel corpus.
//!
//! A hypothesis is correct when it equals the gold word codepoint for
//! codepoint after NFC. Category membership depends on the source and gold
//! only. Pairs are scored in parallel and the counters are merged
//! associatively, so the report does not depend on the execution mode.

mod corpus;
mod report;

use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{normalize_abo, Direction, WAW, YEH};
use crate::exec::Execution;
use crate::phonology::{syllabify, units_from_latin};
use crate::transliterator::Engine;

pub use corpus::{load_corpus, load_tsv, AlignmentUnit, CorpusError, ParallelCorpus, WordPair};
pub use report::{
    format_percent, BizrokeSplit, CategoryRecord, EvalReport, BIZROKE, ENGINE_VERSION, WHOLE, W_U,
    Y_I,
};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Count {
    correct: usize,
    total: usize,
}

impl Count {
    fn add(&mut self, correct: bool) {
        self.total += 1;
        self.correct += usize::from(correct);
    }

    fn merge(self, o: Count) -> Count {
        Count {
            correct: self.correct + o.correct,
            total: self.total + o.total,
        }
    }

    fn pair(self) -> (usize, usize) {
        (self.correct, self.total)
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct Tally {
    bizroke: Count,
    w_u: Count,
    y_i: Count,
    whole: Count,
    split: BizrokeSplit,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            bizroke: self.bizroke.merge(o.bizroke),
            w_u: self.w_u.merge(o.w_u),
            y_i: self.y_i.merge(o.y_i),
            whole: self.whole.merge(o.whole),
            split: BizrokeSplit {
                last_syllable: self.split.last_syllable + o.split.last_syllable,
                other_syllables: self.split.other_syllables + o.split.other_syllables,
            },
        }
    }
}

pub fn evaluate_ar2la(corpus: &ParallelCorpus, engine: &Engine) -> EvalReport {
    evaluate_ar2la_with(corpus, engine, engine.options().execution)
}

pub fn evaluate_ar2la_with(
    corpus: &ParallelCorpus,
    engine: &Engine,
    execution: Execution,
) -> EvalReport {
    let t = execution.map_reduce(
        &corpus.pairs,
        Tally::default,
        |p| score_ar2la(engine, p),
        Tally::merge,
    );
    EvalReport::ar2la_from_counts(
        t.bizroke.pair(),
        t.w_u.pair(),
        t.y_i.pair(),
        t.whole.pair(),
        t.split,
    )
}

pub fn evaluate_la2ar(corpus: &ParallelCorpus, engine: &Engine) -> EvalReport {
    evaluate_la2ar_with(corpus, engine, engine.options().execution)
}

pub fn evaluate_la2ar_with(
    corpus: &ParallelCorpus,
    engine: &Engine,
    execution: Execution,
) -> EvalReport {
    let whole = execution.map_reduce(
        &corpus.pairs,
        Count::default,
        |p| {
            let hyp = hypothesis(engine, &p.lbo, Direction::La2Ar);
            let gold = normalize_abo(&p.abo.nfc().collect::<String>());
            let mut c = Count::default();
            c.add(hyp == gold);
            c
        },
        Count::merge,
    );
    EvalReport::la2ar_from_counts(whole.pair())
}

fn hypothesis(engine: &Engine, source: &str, direction: Direction) -> String {
    engine
        .transliterate_text_with(source, direction, Execution::Sequential)
        .output
        .nfc()
        .collect()
}

fn score_ar2la(engine: &Engine, p: &WordPair) -> Tally {
    let source = normalize_abo(&p.abo);
    let gold: String = p.lbo.nfc().collect();
    let hyp = hypothesis(engine, &p.abo, Direction::Ar2La);
    let ok = hyp == gold;

    let mut t = Tally::default();
    t.whole.add(ok);
    if source.contains(WAW) {
        t.w_u.add(ok);
    }
    if source.contains(YEH) {
        t.y_i.add(ok);
    }
    if gold.contains('i') {
        t.bizroke.add(ok);
        if !ok {
            if error_in_last_syllable(&hyp, &gold) {
                t.split.last_syllable += 1;
            } else {
                t.split.other_syllables += 1;
            }
        }
    }
    t
}

// Locates the first gold `i` left unmatched by a longest common subsequence
// with the hypothesis, falling back to the first mismatching position, and
// reports whether it falls in the gold word's final syllable.
fn error_in_last_syllable(hyp: &str, gold: &str) -> bool {
    let h: Vec<char> = hyp.chars().collect();
    let g: Vec<char> = gold.chars().collect();
    let pos = first_missed_i(&h, &g).unwrap_or_else(|| {
        let k = h.iter().zip(&g).take_while(|(a, b)| a == b).count();
        k.min(g.len().saturating_sub(1))
    });
    let units = units_from_latin(gold);
    match syllabify(&units) {
        Ok(syllables) => syllables
            .last()
            .is_some_and(|s| s.start <= pos && pos < s.end),
        Err(_) => false,
    }
}

fn first_missed_i(h: &[char], g: &[char]) -> Option<usize> {
    let (n, m) = (g.len(), h.len());
    // lcs[i][j]: LCS length of g[i..] and h[j..]
    let mut lcs = vec![vec![0u32; m + 1]; n + 1];
    for i in (0..n).rev() {
        for j in (0..m).rev() {
            lcs[i][j] = if g[i] == h[j] {
                lcs[i + 1][j + 1] + 1
            } else {
                lcs[i + 1][j].max(lcs[i][j + 1])
            };
        }
    }
    let (mut i, mut j) = (0, 0);
    while i < n {
        if j < m && g[i] == h[j] && lcs[i][j] == lcs[i + 1][j + 1] + 1 {
            i += 1;
            j += 1;
        } else if j < m && lcs[i][j + 1] >= lcs[i + 1][j] {
            j += 1;
        } else {
            if g[i] == 'i' {
                return Some(i);
            }
            i += 1;
        }
    }
    None
}
