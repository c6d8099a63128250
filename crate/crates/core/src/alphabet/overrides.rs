//! Override mapping files.
//!
//! One rule per line: `<source> TAB <target>`. Either side is written
//! literally or as space-separated `U+XXXX` codepoints. Lines starting with
//! `#` and blank lines are ignored. Later rules shadow earlier ones.

use std::fs;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OverrideRule {
    pub source: char,
    pub target: String,
    pub line: usize,
}

#[derive(Debug, Error)]
pub enum OverrideError {
    #[error("override file {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("line {line}: expected `<source>\\t<target>`")]
    MissingTab { line: usize },
    #[error("line {line}: source must be exactly one codepoint")]
    MultiCodepointSource { line: usize },
    #[error("line {line}: bad codepoint `{token}`")]
    BadCodepoint { line: usize, token: String },
    #[error("line {line}: mapping of {ch:?} is fixed and cannot be overridden")]
    Protected { line: usize, ch: char },
}

pub fn parse_overrides(text: &str) -> Result<Vec<OverrideRule>, OverrideError> {
    let text = text.strip_prefix('\u{FEFF}').unwrap_or(text);
    let mut rules = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let (src, tgt) = raw
            .split_once('\t')
            .ok_or(OverrideError::MissingTab { line })?;
        let src = decode(src.trim(), line)?;
        let mut chars = src.chars();
        let source = match (chars.next(), chars.next()) {
            (Some(c), None) => c,
            _ => return Err(OverrideError::MultiCodepointSource { line }),
        };
        let target = decode(tgt.trim_end_matches(['\r', '\n']).trim(), line)?;
        rules.push(OverrideRule {
            source,
            target,
            line,
        });
    }
    Ok(rules)
}

pub fn load_overrides(path: impl AsRef<Path>) -> Result<Vec<OverrideRule>, OverrideError> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|source| OverrideError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_overrides(&text)
}

// `U+0686 U+0686` or literal text.
fn decode(field: &str, line: usize) -> Result<String, OverrideError> {
    if !field.starts_with("U+") && !field.starts_with("u+") {
        return Ok(field.to_string());
    }
    field
        .split_whitespace()
        .map(|tok| {
            tok.get(2..)
                .filter(|_| tok.len() > 2 && tok[..2].eq_ignore_ascii_case("u+"))
                .and_then(|hex| u32::from_str_radix(hex, 16).ok())
                .and_then(char::from_u32)
                .ok_or_else(|| OverrideError::BadCodepoint {
                    line,
                    token: tok.to_string(),
                })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_literal_and_escaped() {
        let rules = parse_overrides("# header\n\nU+062B\tU+0073\nث\tth\r\n").unwrap();
        assert_eq!(rules.len(), 2);
        assert_eq!(rules[0].source, '\u{062B}');
        assert_eq!(rules[0].target, "s");
        assert_eq!(rules[1].target, "th");
        assert_eq!(rules[1].line, 4);
    }

    #[test]
    fn empty_target_is_allowed() {
        let rules = parse_overrides("ـ\t\n").unwrap();
        assert_eq!(rules[0].target, "");
    }

    #[test]
    fn rejects_malformed_lines() {
        assert!(matches!(
            parse_overrides("ث s"),
            Err(OverrideError::MissingTab { line: 1 })
        ));
        assert!(matches!(
            parse_overrides("o\tfine\nU+ZZZZ\tx"),
            Err(OverrideError::BadCodepoint { line: 2, .. })
        ));
        assert!(matches!(
            parse_overrides("ab\tx"),
            Err(OverrideError::MultiCodepointSource { line: 1 })
        ));
    }
}
