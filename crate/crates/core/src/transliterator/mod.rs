//! Text-level transliteration.
//!
//! Text is tokenized, each word runs through its direction's pipeline, and
//! separators and foreign runs are copied with digit and punctuation
//! mapping. All phonology is per word.

mod stream;
mod tokenize;

use std::fmt;
use std::ops::Range;
use std::sync::LazyLock;

use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{
    self, normalize_abo, AlphabetTable, CharClass, Direction, ARABIC_PUNCT, HAMZA, LBO_VOWELS, WAW,
    YEH, ZWNJ,
};
use crate::exec::Execution;
use crate::phonology::{insert_bizroke, merge_double_waw, resolve_dual_use};

pub use stream::StreamError;
pub use tokenize::{tokenize, Token, TokenKind};

// Below this many words a text is not worth splitting across threads.
const PARALLEL_MIN_WORDS: usize = 512;

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Options {
    /// Read LbO `ll` as `ł` and `rr` as `ř`.
    pub digraphs: bool,
    pub execution: Execution,
}

/// Something worth telling the user about a word or token.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Note {
    /// A character without a mapping; copied through.
    Unmapped(char),
    /// Vowel + `وو` + consonant; the `w`/`u`/`û` split is a guess.
    AmbiguousDoubleWaw,
    AdjacentVowels,
    /// Words do not start with `ł`.
    InitialLateral,
    /// Word-initial r is written plain, not `ř`.
    InitialTrill,
    /// A run outside the source alphabet, copied verbatim.
    Foreign,
}

impl fmt::Display for Note {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Note::Unmapped(c) => write!(f, "no mapping for {c:?} (U+{:04X}), copied", *c as u32),
            Note::AmbiguousDoubleWaw => {
                f.write_str("vowel + double waw + consonant is ambiguous (w+u / w+û / ww)")
            }
            Note::AdjacentVowels => f.write_str("two adjacent vowels"),
            Note::InitialLateral => f.write_str("word starts with ł"),
            Note::InitialTrill => f.write_str("word starts with trilled ř"),
            Note::Foreign => f.write_str("not in the source alphabet, copied verbatim"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Warning {
    /// Byte span of the token in the input.
    pub span: Range<usize>,
    pub note: Note,
}

impl fmt::Display for Warning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "bytes {}..{}: {}",
            self.span.start, self.span.end, self.note
        )
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Stats {
    pub words: usize,
    pub foreign: usize,
    /// `و`/`ی` read (Ar2La) or written (La2Ar).
    pub dual_use: usize,
    /// Bizroke inserted (Ar2La) or dropped (La2Ar).
    pub bizroke: usize,
}

impl Stats {
    pub fn merge(self, o: Stats) -> Stats {
        Stats {
            words: self.words + o.words,
            foreign: self.foreign + o.foreign,
            dual_use: self.dual_use + o.dual_use,
            bizroke: self.bizroke + o.bizroke,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct WordOutcome {
    pub output: String,
    pub notes: Vec<Note>,
    pub dual_use: usize,
    pub bizroke: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TransliterationResult {
    pub output: String,
    pub warnings: Vec<Warning>,
    pub stats: Stats,
}

#[derive(Debug, Clone, Default)]
pub struct Engine {
    table: AlphabetTable,
    options: Options,
}

impl Engine {
    pub fn new(table: AlphabetTable, options: Options) -> Self {
        Engine { table, options }
    }

    pub fn with_options(options: Options) -> Self {
        Engine::new(AlphabetTable::new(), options)
    }

    pub fn table(&self) -> &AlphabetTable {
        &self.table
    }

    pub fn options(&self) -> Options {
        self.options
    }

    pub fn tokenize<'a>(&self, text: &'a str, o: alphabet::Orthography) -> Vec<Token<'a>> {
        tokenize(&self.table, text, o)
    }

    pub fn transliterate_word(&self, word: &str, direction: Direction) -> String {
        self.word(word, direction).output
    }

    pub fn word(&self, word: &str, direction: Direction) -> WordOutcome {
        match direction {
            Direction::Ar2La => self.ar2la(word),
            Direction::La2Ar => self.la2ar(word),
        }
    }

    fn ar2la(&self, word: &str) -> WordOutcome {
        let normalized = normalize_abo(word);
        let rw = resolve_dual_use(&normalized, &self.table);
        let mut notes = Vec::new();
        let dual_use = rw
            .units()
            .iter()
            .filter(|u| u.ch == WAW || u.ch == YEH)
            .count();
        if rw.has_double_waw_ambiguity() {
            notes.push(Note::AmbiguousDoubleWaw);
        }
        let rw = merge_double_waw(rw);
        let before = rw.len();
        let rw = insert_bizroke(rw);
        let bizroke = rw.len() - before;
        if rw.has_adjacent_vowels() {
            notes.push(Note::AdjacentVowels);
        }
        match normalized.chars().next() {
            Some('\u{06B5}') => notes.push(Note::InitialLateral),
            Some('\u{0695}') => notes.push(Note::InitialTrill),
            _ => {}
        }
        let rendered = rw.render(&self.table);
        notes.extend(rendered.unmapped.iter().map(|&c| Note::Unmapped(c)));
        let output = if rendered.unmapped.is_empty() {
            rendered.text
        } else {
            rendered.text.to_lowercase()
        };
        WordOutcome {
            output,
            notes,
            dual_use,
            bizroke,
        }
    }

    fn la2ar(&self, word: &str) -> WordOutcome {
        let mut folded: String = word.nfc().flat_map(char::to_lowercase).collect();
        if self.options.digraphs {
            folded = folded.replace("ll", "ł").replace("rr", "ř");
        }
        let mut notes = Vec::new();
        match folded.chars().next() {
            Some('ł') => notes.push(Note::InitialLateral),
            Some('ř') => notes.push(Note::InitialTrill),
            _ => {}
        }
        let letters: Vec<char> = folded.chars().filter(|&c| c != 'i').collect();
        let bizroke = folded.chars().count() - letters.len();
        let is_vowel = |k: usize| letters.get(k).is_some_and(|c| LBO_VOWELS.contains(c));

        let mut output = String::with_capacity(folded.len() * 2);
        if is_vowel(0) {
            output.push(HAMZA);
        }
        let mut dual_use = 0;
        for (k, &c) in letters.iter().enumerate() {
            if c == 'w' && k > 0 {
                let prev = letters[k - 1];
                let next = letters.get(k + 1).copied();
                // the w between û and a vowel is not written
                if prev == 'û' && is_vowel(k + 1) {
                    continue;
                }
                // vowel + wû + consonant is written with two waws
                if next == Some('û') && is_vowel(k - 1) && k + 2 < letters.len() && !is_vowel(k + 2)
                {
                    continue;
                }
            }
            match self
                .table
                .map_char(c, CharClass::Consonant, Direction::La2Ar)
            {
                Ok(s) => {
                    dual_use += s.chars().filter(|&a| a == WAW || a == YEH).count().min(1);
                    output.push_str(s);
                }
                Err(_) => {
                    output.push(c);
                    notes.push(Note::Unmapped(c));
                }
            }
        }
        WordOutcome {
            output,
            notes,
            dual_use,
            bizroke,
        }
    }

    /// Transliterates a whole text.
    pub fn transliterate_text(&self, text: &str, direction: Direction) -> TransliterationResult {
        self.transliterate_text_with(text, direction, self.options.execution)
    }

    pub(crate) fn transliterate_text_with(
        &self,
        text: &str,
        direction: Direction,
        execution: Execution,
    ) -> TransliterationResult {
        let tokens = self.tokenize(text, direction.source());
        let words = tokens.iter().filter(|t| t.kind == TokenKind::Word).count();
        let execution = if words >= PARALLEL_MIN_WORDS {
            execution
        } else {
            Execution::Sequential
        };
        let outcomes = execution.map(&tokens, |t| match t.kind {
            TokenKind::Word => Some(self.word(t.text, direction)),
            _ => None,
        });

        let mut result = TransliterationResult {
            output: String::with_capacity(text.len() * 2),
            ..Default::default()
        };
        for (token, outcome) in tokens.iter().zip(outcomes) {
            match (token.kind, outcome) {
                (TokenKind::Word, Some(o)) => {
                    result.output.push_str(&o.output);
                    result.stats.words += 1;
                    result.stats.dual_use += o.dual_use;
                    result.stats.bizroke += o.bizroke;
                    result
                        .warnings
                        .extend(o.notes.into_iter().map(|note| Warning {
                            span: token.span.clone(),
                            note,
                        }));
                }
                (TokenKind::Foreign, _) => {
                    result.output.push_str(token.text);
                    result.stats.foreign += 1;
                    result.warnings.push(Warning {
                        span: token.span.clone(),
                        note: Note::Foreign,
                    });
                }
                _ => map_separator(token.text, direction, &mut result.output),
            }
        }
        result
    }

    /// Word-level shorthand.
    pub fn ar2la_word(&self, word: &str) -> String {
        self.transliterate_word(word, Direction::Ar2La)
    }

    pub fn la2ar_word(&self, word: &str) -> String {
        self.transliterate_word(word, Direction::La2Ar)
    }
}

fn map_separator(text: &str, direction: Direction, out: &mut String) {
    for c in text.chars() {
        match direction {
            Direction::Ar2La => {
                if c == ZWNJ {
                    continue;
                }
                if let Some(d) = alphabet::digit_value(c).filter(|_| !c.is_ascii_digit()) {
                    out.push(char::from_digit(d, 10).expect("digit"));
                } else if let Some(&(_, l)) = ARABIC_PUNCT.iter().find(|(a, _)| *a == c) {
                    out.push(l);
                } else {
                    out.push(c);
                }
            }
            Direction::La2Ar => {
                if let Some(d) = c.to_digit(10).filter(|_| c.is_ascii_digit()) {
                    out.push(char::from_u32(0x06F0 + d).expect("digit"));
                } else if let Some(&(a, _)) = ARABIC_PUNCT.iter().find(|(_, l)| *l == c) {
                    out.push(a);
                } else {
                    out.push(c);
                }
            }
        }
    }
}

static DEFAULT_ENGINE: LazyLock<Engine> = LazyLock::new(Engine::default);

/// The engine with the default table and options.
pub fn default_engine() -> &'static Engine {
    &DEFAULT_ENGINE
}

pub fn transliterate_word_ar2la(word: &str) -> String {
    default_engine().ar2la_word(word)
}

pub fn transliterate_word_la2ar(word: &str) -> String {
    default_engine().la2ar_word(word)
}

pub fn transliterate_text(text: &str, direction: Direction) -> TransliterationResult {
    default_engine().transliterate_text(text, direction)
}
