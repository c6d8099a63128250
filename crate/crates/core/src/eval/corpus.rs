use std::fmt;
use std::fs;
use std::path::Path;

use thiserror::Error;

use crate::alphabet::{AlphabetTable, Orthography};
use crate::transliterator::{tokenize, TokenKind};

/// One gold transliteration pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordPair {
    pub abo: String,
    pub lbo: String,
    /// 1-based line the pair came from.
    pub line: usize,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParallelCorpus {
    pub pairs: Vec<WordPair>,
    pub source_files: Vec<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AlignmentUnit {
    Lines,
    Tokens,
    Fields,
}

impl fmt::Display for AlignmentUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AlignmentUnit::Lines => "lines",
            AlignmentUnit::Tokens => "tokens",
            AlignmentUnit::Fields => "fields",
        })
    }
}

#[derive(Debug, Error)]
pub enum CorpusError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}: invalid UTF-8 at byte offset {offset}")]
    Encoding { path: String, offset: usize },
    #[error("misaligned at line {line}: expected {expected} {unit}, found {found}")]
    Alignment {
        line: usize,
        expected: usize,
        found: usize,
        unit: AlignmentUnit,
    },
}

impl ParallelCorpus {
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn from_pairs<I, A, L>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (A, L)>,
        A: Into<String>,
        L: Into<String>,
    {
        let pairs = pairs
            .into_iter()
            .enumerate()
            .map(|(i, (abo, lbo))| WordPair {
                abo: abo.into(),
                lbo: lbo.into(),
                line: i + 1,
            })
            .collect();
        ParallelCorpus {
            pairs,
            source_files: Vec::new(),
        }
    }

    /// Aligns two texts line by line, then word by word within each line.
    ///
    /// `expected` in an alignment error is the AbO count, `found` the LbO
    /// count.
    pub fn from_texts(abo: &str, lbo: &str) -> Result<Self, CorpusError> {
        let table = AlphabetTable::new();
        let abo_lines: Vec<&str> = abo.lines().collect();
        let lbo_lines: Vec<&str> = lbo.lines().collect();
        if abo_lines.len() != lbo_lines.len() {
            return Err(CorpusError::Alignment {
                line: abo_lines.len().min(lbo_lines.len()) + 1,
                expected: abo_lines.len(),
                found: lbo_lines.len(),
                unit: AlignmentUnit::Lines,
            });
        }
        let words = |line: &'_ str, o| -> Vec<String> {
            tokenize(&table, line, o)
                .into_iter()
                .filter(|t| t.kind != TokenKind::Separator)
                .map(|t| t.text.to_string())
                .collect()
        };
        let mut pairs = Vec::new();
        for (idx, (a, l)) in abo_lines.iter().zip(&lbo_lines).enumerate() {
            let aw = words(a, Orthography::ArabicBased);
            let lw = words(l, Orthography::LatinBased);
            if aw.len() != lw.len() {
                return Err(CorpusError::Alignment {
                    line: idx + 1,
                    expected: aw.len(),
                    found: lw.len(),
                    unit: AlignmentUnit::Tokens,
                });
            }
            pairs.extend(aw.into_iter().zip(lw).map(|(abo, lbo)| WordPair {
                abo,
                lbo,
                line: idx + 1,
            }));
        }
        Ok(ParallelCorpus {
            pairs,
            source_files: Vec::new(),
        })
    }

    /// Reads `<abo> TAB <lbo>` lines. Blank lines are skipped.
    pub fn from_tsv(text: &str) -> Result<Self, CorpusError> {
        let mut pairs = Vec::new();
        for (idx, line) in text.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let fields: Vec<&str> = line.split('\t').collect();
            let (abo, lbo) = match fields[..] {
                [a, l] if !a.trim().is_empty() && !l.trim().is_empty() => (a.trim(), l.trim()),
                _ => {
                    return Err(CorpusError::Alignment {
                        line: idx + 1,
                        expected: 2,
                        found: fields.iter().filter(|f| !f.trim().is_empty()).count(),
                        unit: AlignmentUnit::Fields,
                    })
                }
            };
            pairs.push(WordPair {
                abo: abo.to_string(),
                lbo: lbo.to_string(),
                line: idx + 1,
            });
        }
        Ok(ParallelCorpus {
            pairs,
            source_files: Vec::new(),
        })
    }
}

fn read_utf8(path: &Path) -> Result<String, CorpusError> {
    let bytes = fs::read(path).map_err(|source| CorpusError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let text = String::from_utf8(bytes).map_err(|e| CorpusError::Encoding {
        path: path.display().to_string(),
        offset: e.utf8_error().valid_up_to(),
    })?;
    Ok(match text.strip_prefix('\u{FEFF}') {
        Some(rest) => rest.to_string(),
        None => text,
    })
}

/// Loads a corpus stored as two line-aligned files.
pub fn load_corpus(
    abo_path: impl AsRef<Path>,
    lbo_path: impl AsRef<Path>,
) -> Result<ParallelCorpus, CorpusError> {
    let (abo_path, lbo_path) = (abo_path.as_ref(), lbo_path.as_ref());
    let abo = read_utf8(abo_path)?;
    let lbo = read_utf8(lbo_path)?;
    let mut corpus = ParallelCorpus::from_texts(&abo, &lbo)?;
    corpus.source_files = vec![
        abo_path.display().to_string(),
        lbo_path.display().to_string(),
    ];
    Ok(corpus)
}

pub fn load_tsv(path: impl AsRef<Path>) -> Result<ParallelCorpus, CorpusError> {
    let path = path.as_ref();
    let mut corpus = ParallelCorpus::from_tsv(&read_utf8(path)?)?;
    corpus.source_files = vec![path.display().to_string()];
    Ok(corpus)
}
