use std::ops::Range;

use unicode_normalization::UnicodeNormalization;

use crate::alphabet::{AlphabetTable, Orthography, EN_DASH, HEH, ZWNJ};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TokenKind {
    Word,
    Separator,
    Foreign,
}

/// A slice of the input. Token texts concatenated in order give back the
/// input exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token<'a> {
    pub kind: TokenKind,
    pub text: &'a str,
    /// Byte offsets into the tokenized text.
    pub span: Range<usize>,
}

fn is_combining(c: char) -> bool {
    matches!(c, '\u{0300}'..='\u{036F}')
}

/// Splits `text` into words, separators and foreign runs.
///
/// Whitespace, digits and punctuation form separator tokens. Every other
/// maximal run is a word if all of its characters belong to orthography `o`
/// and foreign otherwise. In the AbO a zero-width non-joiner inside a run,
/// and an en dash right after a word-final `ه`, belong to the word; in the
/// LbO combining accents belong to the letter before them.
pub fn tokenize<'a>(table: &AlphabetTable, text: &'a str, o: Orthography) -> Vec<Token<'a>> {
    let mut tokens = Vec::new();
    let mut run_start = 0;
    let mut in_chunk: Option<bool> = None;
    let mut prev: Option<char> = None;

    let mut chars = text.char_indices().peekable();
    while let Some((at, c)) = chars.next() {
        let next = chars.peek().map(|&(_, n)| n);
        let joins = match o {
            Orthography::ArabicBased => match c {
                ZWNJ => in_chunk == Some(true),
                EN_DASH => {
                    in_chunk == Some(true)
                        && prev == Some(HEH)
                        && !next.is_some_and(|n| table.is_letter(n, o))
                }
                _ => table.is_letter(c, o) || !crate::alphabet::is_separator(c),
            },
            Orthography::LatinBased => {
                table.is_letter(c, o)
                    || (is_combining(c) && in_chunk == Some(true))
                    || !crate::alphabet::is_separator(c)
            }
        };
        if in_chunk != Some(joins) {
            if let Some(was_chunk) = in_chunk {
                push(&mut tokens, table, text, run_start..at, was_chunk, o);
            }
            run_start = at;
            in_chunk = Some(joins);
        }
        prev = Some(c);
    }
    if let Some(was_chunk) = in_chunk {
        push(
            &mut tokens,
            table,
            text,
            run_start..text.len(),
            was_chunk,
            o,
        );
    }
    tokens
}

fn push<'a>(
    tokens: &mut Vec<Token<'a>>,
    table: &AlphabetTable,
    text: &'a str,
    span: Range<usize>,
    chunk: bool,
    o: Orthography,
) {
    let slice = &text[span.clone()];
    let kind = if !chunk {
        TokenKind::Separator
    } else if is_word(table, slice, o) {
        TokenKind::Word
    } else {
        TokenKind::Foreign
    };
    tokens.push(Token {
        kind,
        text: slice,
        span,
    });
}

fn is_word(table: &AlphabetTable, chunk: &str, o: Orthography) -> bool {
    match o {
        Orthography::ArabicBased => chunk
            .chars()
            .all(|c| c == ZWNJ || c == EN_DASH || table.is_letter(c, o)),
        Orthography::LatinBased => chunk.nfc().all(|c| table.is_letter(c, o)),
    }
}
